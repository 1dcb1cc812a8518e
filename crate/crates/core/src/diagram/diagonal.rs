use serde::{Deserialize, Serialize};

use super::{Board, Cell, Partition, Transition};
use crate::error::{MhrgError, Result};

/// Box counts `a_1, ..., a_{m+n+1}` along the diagonals `j - i = k - m - 1`.
///
/// Entries rise by 0 or 1 up to index `m + 1` and fall by 0 or 1 after it,
/// with zeros at both ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagonalExpression(Vec<usize>);

impl DiagonalExpression {
    pub fn new(board: &Board, counts: Vec<usize>) -> Result<Self> {
        let (m, n) = (board.m(), board.n());
        let bad = |msg: String| Err(MhrgError::InvalidDiagonal(msg));
        if counts.len() != m + n + 1 {
            return bad(format!("expected {} entries, got {}", m + n + 1, counts.len()));
        }
        if counts[0] != 0 || counts[m + n] != 0 {
            return bad("first and last entries must be 0".into());
        }
        // 0-based: rising steps end at index m, falling steps start there
        for k in 1..=m {
            if !(counts[k - 1]..=counts[k - 1] + 1).contains(&counts[k]) {
                return bad(format!("entry {} must exceed entry {} by 0 or 1", k + 1, k));
            }
        }
        for k in m..m + n {
            if !(counts[k + 1]..=counts[k + 1] + 1).contains(&counts[k]) {
                return bad(format!("entry {} must exceed entry {} by 0 or 1", k + 1, k + 2));
            }
        }
        Ok(DiagonalExpression(counts))
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Entry `a_k`, 1-based.
    pub fn get(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Subtracts 1 from entries `l..=r` when all of them are positive.
    pub fn step(&self, t: Transition) -> Option<Vec<usize>> {
        if t.l < 2 || t.l > t.r || t.r >= self.0.len() {
            return None;
        }
        let window = t.l - 1..t.r;
        if self.0[window.clone()].contains(&0) {
            return None;
        }
        let mut out = self.0.clone();
        out[window].iter_mut().for_each(|a| *a -= 1);
        Some(out)
    }
}

impl Board {
    pub fn diagonal_expression(&self, p: &Partition) -> DiagonalExpression {
        debug_assert!(self.check(p).is_ok());
        let mut counts = vec![0; self.m() + self.n() + 1];
        for c in p.cells() {
            counts[c.col + self.m() - c.row] += 1;
        }
        DiagonalExpression(counts)
    }

    /// Inverse of [`Board::diagonal_expression`].
    ///
    /// The boxes on one diagonal of a diagram form an initial run starting at
    /// the rim of the rectangle, and the position of `(i, j)` in its run is
    /// `min(i, j)`. So `(i, j)` belongs to the diagram iff `min(i, j)` is at
    /// most the count of its diagonal.
    pub fn partition_of_diagonal(&self, a: &DiagonalExpression) -> Result<Partition> {
        let a = DiagonalExpression::new(self, a.0.clone())?;
        let m = self.m();
        let parts: Vec<usize> = (1..=m)
            .map(|i| {
                (1..=self.n())
                    .take_while(|&j| i.min(j) <= a.get(j + m + 1 - i))
                    .count()
            })
            .collect();
        let p = Partition::new(parts)?;
        #[cfg(debug_assertions)]
        if self.partition_count() <= 256 {
            let matches: Vec<Partition> = self
                .partitions()
                .into_iter()
                .filter(|q| self.diagonal_expression(q) == a)
                .collect();
            debug_assert_eq!(matches, vec![p.clone()]);
        }
        debug_assert!(p.cells().all(|c: Cell| self.contains_cell(c)));
        Ok(p)
    }
}
