//! Which diagrams occur as game positions.
//!
//! Three descriptions of the same set are compared: the breadth-first
//! closure from the full rectangle, disjointness of the right halves of the
//! index sets of a diagram and its dual, and a condition on pairwise sums of
//! parts.

use serde::Serialize;

use super::Violation;
use crate::diagram::{Board, Partition};
use crate::engine::reachable_graph_with_limit;
use crate::error::Result;

/// Elements of the index set at or above `c + 1 - chi`.
pub fn right_index_set(board: &Board, p: &Partition) -> Vec<usize> {
    board
        .index_set(p)
        .at_least(board.max_label() + 1 - board.chi())
}

/// True iff the right index sets of `p` and of its dual are disjoint.
pub fn member_by_index_sets(board: &Board, p: &Partition) -> bool {
    let own = right_index_set(board, p);
    let dual = right_index_set(board, &board.dual(p));
    own.iter().all(|x| !dual.contains(x))
}

/// True iff `lambda_i + lambda_j != n - m + i + j - 1` for all `1 <= i <= j <= m`.
pub fn member_by_part_sums(board: &Board, p: &Partition) -> bool {
    let (m, n) = (board.m(), board.n());
    (1..=m).all(|i| (i..=m).all(|j| p.row(i) + p.row(j) + m + 1 != n + i + j))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub board: Board,
    pub partitions: usize,
    pub members: usize,
    pub violations: Vec<Violation>,
}

/// Checks over every diagram of the board that reachability, both
/// criteria and reachability of the dual all agree.
pub fn verify_main_theorem(board: &Board, max_positions: u128) -> Result<MainTheoremReport> {
    let graph = reachable_graph_with_limit(board, max_positions)?;
    let all = board.partitions();
    let mut violations = Vec::new();
    for p in &all {
        let reached = graph.contains(p);
        let dual_reached = graph.contains(&board.dual(p));
        let by_sets = member_by_index_sets(board, p);
        let by_sums = member_by_part_sums(board, p);
        if [dual_reached, by_sets, by_sums].iter().any(|&v| v != reached) {
            violations.push(Violation::at(
                "membership",
                p,
                format!(
                    "reachable={reached} dual_reachable={dual_reached} \
                     index_sets={by_sets} part_sums={by_sums}"
                ),
            ));
        }
    }
    Ok(MainTheoremReport {
        board: *board,
        partitions: all.len(),
        members: graph.len(),
        violations,
    })
}
