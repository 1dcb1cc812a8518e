use serde::Serialize;

use super::grundy::grundy_table;
use super::Violation;
use crate::diagram::{Board, Partition};
use crate::engine::reachable_graph_with_limit;
use crate::error::{MhrgError, Result};

/// Pads a diagram of at most `t` rows with zeros to `m` rows.
pub fn embed_partition(parts: &[usize], t: usize, m: usize, n: usize) -> Result<Partition> {
    if t > m || m > n {
        return Err(MhrgError::InvalidEmbedding(format!(
            "need t <= m <= n, got t={t} m={m} n={n}"
        )));
    }
    if parts.len() > t {
        return Err(MhrgError::InvalidEmbedding(format!(
            "{} parts given for t={t} rows",
            parts.len()
        )));
    }
    Board::new(m, n)?.partition(parts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub t: usize,
    pub board: Board,
    /// `(t, n - m + t)`; absent when `t = 0`.
    pub reduced: Option<Board>,
    pub checked: usize,
    pub members: usize,
    pub violations: Vec<Violation>,
}

/// Compares diagrams with at most `t` rows on `(m, n)` and on `(t, n - m + t)`:
/// same membership, same Grundy value for members, and no member of the big
/// board with at most `t` rows is wider than `n - m + t`.
pub fn verify_t_rows(t: usize, m: usize, n: usize, max_positions: u128) -> Result<TransferReport> {
    let board = Board::new(m, n)?;
    if t > m {
        return Err(MhrgError::InvalidEmbedding(format!("t={t} exceeds m={m}")));
    }
    let big_graph = reachable_graph_with_limit(&board, max_positions)?;
    let big_table = grundy_table(&big_graph);
    let mut violations = Vec::new();
    let width = n - m + t;

    for p in big_graph.nodes().filter(|p| p.height() <= t) {
        if p.row(1) > width {
            violations.push(Violation::at(
                "t-rows-width",
                p,
                format!("member with at most {t} rows is wider than {width}"),
            ));
        }
    }

    if t == 0 {
        let empty = board.empty();
        if big_table.get(&empty) != Some(0) {
            violations.push(Violation::at("t-rows-grundy", &empty, "empty diagram".into()));
        }
        return Ok(TransferReport {
            t,
            board,
            reduced: None,
            checked: 1,
            members: 1,
            violations,
        });
    }

    let reduced = Board::new(t, width)?;
    let small_graph = reachable_graph_with_limit(&reduced, max_positions)?;
    let small_table = grundy_table(&small_graph);
    let small_all = reduced.partitions();
    let mut members = 0;
    for mu in &small_all {
        let lifted = embed_partition(mu.parts(), t, m, n)?;
        let in_big = big_graph.contains(&lifted);
        let in_small = small_graph.contains(mu);
        if in_big != in_small {
            violations.push(Violation::at(
                "t-rows-membership",
                &lifted,
                format!("member of ({m},{n}): {in_big}; of ({t},{width}): {in_small}"),
            ));
            continue;
        }
        if in_big {
            members += 1;
            let (g_big, g_small) = (big_table.get(&lifted), small_table.get(mu));
            if g_big != g_small {
                violations.push(Violation::at(
                    "t-rows-grundy",
                    &lifted,
                    format!("grundy {g_big:?} on ({m},{n}) vs {g_small:?} on ({t},{width})"),
                ));
            }
        }
    }
    Ok(TransferReport {
        t,
        board,
        reduced: Some(reduced),
        checked: small_all.len(),
        members,
        violations,
    })
}
