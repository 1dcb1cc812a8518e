//! Closed-form P-positions for diagrams with at most two rows.
//!
//! Both formulas split on the residue of `n - 2` (resp. `n - m`) modulo 4.
//! A bound such as `q <= (p - 1) / 2` ranges over integers `q >= 0`
//! satisfying the rational inequality, so it is empty when `p = 0`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::grundy::grundy_table;
use super::transfer::embed_partition;
use super::Violation;
use crate::diagram::{Board, Partition};
use crate::engine::reachable_graph_with_limit;
use crate::error::{MhrgError, Result};

/// Integers `q` in `[lo, hi_num / 2]`; empty when `hi_num < 2 * lo`.
fn half_range(lo: i64, hi_num: i64) -> impl Iterator<Item = i64> {
    (lo..).take_while(move |q| 2 * q <= hi_num)
}

/// Row pairs `(a, b)` of the P-positions, given the offset `base` that plays
/// the role of `c` in `c_i(q) = base + i + 4q` and the excess `n - m`.
fn two_row_pairs(base: i64, excess: usize) -> BTreeSet<(i64, i64)> {
    let p = (excess / 4) as i64;
    let f = |i: i64, q: i64| base + i + 4 * q;
    let mut out: BTreeSet<(i64, i64)> = (0..=p).map(|q| (2 * q, 2 * q)).collect();
    match excess % 4 {
        0 => {
            for q in half_range(0, p - 1) {
                out.extend([(f(1, q), f(0, q)), (f(2, q), f(1, q))]);
            }
        }
        1 => {
            for q in half_range(0, p - 1) {
                out.extend([(f(2, q), f(1, q)), (f(3, q), f(2, q))]);
            }
        }
        2 => {
            for q in half_range(0, p) {
                out.extend([(f(0, q), f(-1, q)), (f(1, q), f(0, q))]);
            }
        }
        _ => {
            out.extend([(2 * p + 4, 2 * p + 2), (2 * p + 5, 2 * p + 4)]);
            for q in half_range(1, p) {
                out.extend([(f(1, q), f(0, q)), (f(2, q), f(1, q))]);
            }
        }
    }
    out
}

fn to_parts(pair: (i64, i64)) -> [usize; 2] {
    let (a, b) = pair;
    [
        usize::try_from(a).expect("nonnegative part"),
        usize::try_from(b).expect("nonnegative part"),
    ]
}

/// P-positions of the `(2, n)` game, `c_i(q) = c + i + 4q`.
pub fn p_positions_m2_closed_form(n: usize) -> Result<BTreeSet<Partition>> {
    if n < 2 {
        return Err(MhrgError::InvalidBoard { m: 2, n });
    }
    let board = Board::new(2, n)?;
    let c = board.max_label() as i64;
    two_row_pairs(c, n - 2)
        .into_iter()
        .map(|pair| board.partition(&to_parts(pair)))
        .collect()
}

/// P-positions with at most two rows on the `(m, n)` board,
/// `d_i(q) = c - m + 2 + i + 4q`, embedded with zero rows below.
pub fn p_positions_two_rows_closed_form(m: usize, n: usize) -> Result<BTreeSet<Partition>> {
    if m < 2 || m > n {
        return Err(MhrgError::InvalidBoard { m, n });
    }
    let board = Board::new(m, n)?;
    let base = board.max_label() as i64 - m as i64 + 2;
    two_row_pairs(base, n - m)
        .into_iter()
        .map(|pair| embed_partition(&to_parts(pair), 2, m, n))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub board: Board,
    pub predicted: BTreeSet<Partition>,
    pub computed: BTreeSet<Partition>,
    pub violations: Vec<Violation>,
}

/// Members with at most two rows and Grundy value 0, from the full game graph.
pub fn computed_two_row_zeros(board: &Board, max_positions: u128) -> Result<BTreeSet<Partition>> {
    let graph = reachable_graph_with_limit(board, max_positions)?;
    let table = grundy_table(&graph);
    Ok(table
        .zeros()
        .into_iter()
        .filter(|p| p.height() <= 2)
        .cloned()
        .collect())
}

fn compare(board: Board, predicted: BTreeSet<Partition>, computed: BTreeSet<Partition>) -> ClosedFormReport {
    let mut violations = Vec::new();
    for p in predicted.difference(&computed) {
        violations.push(Violation::at("closed-form", p, "predicted but not a computed P-position".into()));
    }
    for p in computed.difference(&predicted) {
        violations.push(Violation::at("closed-form", p, "computed P-position missing from formula".into()));
    }
    ClosedFormReport { board, predicted, computed, violations }
}

pub fn verify_closed_form_m2(n: usize, max_positions: u128) -> Result<ClosedFormReport> {
    let board = Board::new(2, n)?;
    let predicted = p_positions_m2_closed_form(n)?;
    Ok(compare(board, predicted, computed_two_row_zeros(&board, max_positions)?))
}

pub fn verify_closed_form_two_rows(m: usize, n: usize, max_positions: u128) -> Result<ClosedFormReport> {
    let board = Board::new(m, n)?;
    let predicted = p_positions_two_rows_closed_form(m, n)?;
    Ok(compare(board, predicted, computed_two_row_zeros(&board, max_positions)?))
}
