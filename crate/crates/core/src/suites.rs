//! Verification suites over ranges of boards, shared by the CLI and tests.

use serde::Serialize;

use crate::analysis::{
    verify_closed_form_m2, verify_closed_form_two_rows, verify_engine_invariants,
    verify_main_theorem, verify_t_rows, ClosedFormReport, EngineReport, MainTheoremReport,
    TransferReport, Violation,
};
use crate::diagram::Board;
use crate::error::Result;

/// All boards `(m, n)` with `1 <= m <= n` and `m + n <= max_sum`, ordered by
/// `m + n` and then `m`.
pub fn boards_up_to(max_sum: usize) -> Vec<Board> {
    let mut out = Vec::new();
    for sum in 2..=max_sum {
        for m in 1..=sum / 2 {
            out.push(Board::new(m, sum - m).expect("m <= n"));
        }
    }
    out
}

/// Anything carrying a list of violations.
pub trait Report: Serialize {
    fn violations(&self) -> &[Violation];

    fn is_clean(&self) -> bool {
        self.violations().is_empty()
    }
}

macro_rules! impl_report {
    ($($t:ty),*) => {
        $(impl Report for $t {
            fn violations(&self) -> &[Violation] {
                &self.violations
            }
        })*
    };
}

impl_report!(MainTheoremReport, TransferReport, ClosedFormReport, EngineReport);

pub fn main_suite(max_sum: usize, max_positions: u128) -> Result<Vec<MainTheoremReport>> {
    boards_up_to(max_sum)
        .iter()
        .map(|b| verify_main_theorem(b, max_positions))
        .collect()
}

/// Every `(t, m, n)` with `0 <= t <= m <= n` and `m + n <= max_sum`.
pub fn t_rows_suite(max_sum: usize, max_positions: u128) -> Result<Vec<TransferReport>> {
    let mut out = Vec::new();
    for b in boards_up_to(max_sum) {
        for t in 0..=b.m() {
            out.push(verify_t_rows(t, b.m(), b.n(), max_positions)?);
        }
    }
    Ok(out)
}

pub fn closed_form_m2_suite(max_n: usize, max_positions: u128) -> Result<Vec<ClosedFormReport>> {
    (2..=max_n).map(|n| verify_closed_form_m2(n, max_positions)).collect()
}

/// Every board with `2 <= m <= n` and `m + n <= max_sum`.
pub fn closed_form_two_rows_suite(max_sum: usize, max_positions: u128) -> Result<Vec<ClosedFormReport>> {
    boards_up_to(max_sum)
        .into_iter()
        .filter(|b| b.m() >= 2)
        .map(|b| verify_closed_form_two_rows(b.m(), b.n(), max_positions))
        .collect()
}

pub fn engine_suite(max_sum: usize, max_positions: u128) -> Result<Vec<EngineReport>> {
    boards_up_to(max_sum)
        .iter()
        .map(|b| verify_engine_invariants(b, max_positions))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn board_ranges() {
        let boards = boards_up_to(4);
        let pairs: Vec<_> = boards.iter().map(|b| (b.m(), b.n())).collect();
        assert_eq!(pairs, vec![(1, 1), (1, 2), (1, 3), (2, 2)]);
        assert!(boards_up_to(1).is_empty());
    }

    #[test]
    fn small_suites_are_clean() {
        assert!(main_suite(7, 1000).unwrap().iter().all(Report::is_clean));
        assert!(t_rows_suite(6, 1000).unwrap().iter().all(Report::is_clean));
        assert!(closed_form_two_rows_suite(7, 1000).unwrap().iter().all(Report::is_clean));
        assert_eq!(closed_form_m2_suite(5, 1000).unwrap().len(), 4);
    }
}
