use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Board, Partition};
use crate::error::{MhrgError, Result};

/// An `m`-element subset of `[1, m + n]`, kept sorted.
///
/// Diagrams of the board correspond one-to-one with these subsets via
/// `i_t = lambda_{m-t+1} + t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Accepts the elements in any order.
    pub fn new(board: &Board, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if elements.len() != board.m() {
            return Err(MhrgError::InvalidIndexSet(format!(
                "expected {} elements, got {}",
                board.m(),
                elements.len()
            )));
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(MhrgError::InvalidIndexSet("repeated element".into()));
        }
        let top = board.m() + board.n();
        if let Some(&x) = elements.iter().find(|&&x| x == 0 || x > top) {
            return Err(MhrgError::InvalidIndexSet(format!(
                "element {x} outside [1, {top}]"
            )));
        }
        Ok(IndexSet(elements))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Sum of the elements; strictly larger diagrams have strictly larger sums.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Elements at or above `lower`.
    pub fn at_least(&self, lower: usize) -> Vec<usize> {
        self.0.iter().copied().filter(|&x| x >= lower).collect()
    }

    /// Image under the bar involution; this is the index set of the dual diagram.
    pub fn bar(&self, board: &Board) -> IndexSet {
        let mut out: Vec<usize> = self.0.iter().map(|&x| board.bar(x)).collect();
        out.reverse();
        IndexSet(out)
    }

    /// Removes `out` and inserts `inp`. Returns `None` unless `out` is present
    /// and `inp` absent (or equal to `out`).
    pub fn swap(&self, out: usize, inp: usize) -> Option<IndexSet> {
        if !self.contains(out) || (inp != out && self.contains(inp)) {
            return None;
        }
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&x| x != out).collect();
        v.push(inp);
        v.sort_unstable();
        Some(IndexSet(v))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl Board {
    pub fn index_set(&self, p: &Partition) -> IndexSet {
        debug_assert!(self.check(p).is_ok());
        let m = self.m();
        IndexSet((1..=m).map(|t| p.row(m - t + 1) + t).collect())
    }

    pub fn partition_of_index_set(&self, s: &IndexSet) -> Result<Partition> {
        // re-validate: the set may come from another board
        let s = IndexSet::new(self, s.0.clone())?;
        let m = self.m();
        let parts = (1..=m).map(|k| s.0[m - k] - (m - k + 1)).collect();
        Partition::new(parts)
    }
}
