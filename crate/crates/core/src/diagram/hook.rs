use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Board, Cell, Partition};
use crate::error::{MhrgError, Result};

/// Multiset of unimodal labels, stored sorted so that `==` is multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HookMultiset(Vec<usize>);

impl HookMultiset {
    pub fn from_labels(mut labels: Vec<usize>) -> Self {
        labels.sort_unstable();
        HookMultiset(labels)
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union.
    pub fn union(&self, other: &HookMultiset) -> HookMultiset {
        HookMultiset::from_labels(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for HookMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// The window `l..=r` of diagonal entries a hook removal decrements.
/// Serialized as `[l, r]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Transition {
    pub l: usize,
    pub r: usize,
}

impl Transition {
    pub const fn new(l: usize, r: usize) -> Self {
        Transition { l, r }
    }

    /// The window of the forced second removal: `(bar(r - 1), bar(l - 1))`.
    pub fn mirrored(&self, board: &Board) -> Transition {
        Transition::new(board.bar(self.r - 1), board.bar(self.l - 1))
    }
}

impl From<[usize; 2]> for Transition {
    fn from([l, r]: [usize; 2]) -> Self {
        Transition { l, r }
    }
}

impl From<Transition> for [usize; 2] {
    fn from(t: Transition) -> Self {
        [t.l, t.r]
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l, self.r)
    }
}

impl Board {
    /// Labels of an arbitrary set of boxes.
    pub fn numbering_multiset(&self, cells: &[Cell]) -> Result<HookMultiset> {
        let labels = cells
            .iter()
            .map(|&c| self.label(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(HookMultiset::from_labels(labels))
    }

    pub fn hook_multiset(&self, p: &Partition, cell: Cell) -> Result<HookMultiset> {
        self.numbering_multiset(&p.hook_cells(cell)?)
    }

    /// The diagonal window removed together with the hook at `cell`:
    /// `l = m + j - i' + 1` and `r = m + j' - i + 1`, where `i'` is the last row
    /// of column `j` and `j'` the last column of row `i`.
    pub fn transition(&self, p: &Partition, cell: Cell) -> Result<Transition> {
        if !p.contains(cell) {
            return Err(MhrgError::NotInDiagram(cell));
        }
        let bottom = p.column_height(cell.col);
        let right = p.row(cell.row);
        Ok(Transition::new(
            self.m() + cell.col + 1 - bottom,
            self.m() + right + 1 - cell.row,
        ))
    }

    /// The diagram reached by the `(l, r)` window, computed on index sets:
    /// applicable exactly when `l - 1` is absent and `r` present, and then the
    /// index set becomes `I \ {r} ∪ {l - 1}`.
    pub fn apply_lr(&self, p: &Partition, l: usize, r: usize) -> Option<Partition> {
        if l < 2 || l > r || r > self.m() + self.n() {
            return None;
        }
        let next = self.index_set(p).swap(r, l - 1)?;
        Some(
            self.partition_of_index_set(&next)
                .expect("swapped index set stays on the board"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(m: usize, n: usize, parts: &[usize]) -> (Board, Partition) {
        let b = Board::new(m, n).unwrap();
        let p = b.partition(parts).unwrap();
        (b, p)
    }

    fn ms(labels: &[usize]) -> HookMultiset {
        HookMultiset::from_labels(labels.to_vec())
    }

    #[test]
    fn hook_multiset_examples() {
        let (b, p) = setup(2, 3, &[3, 3]);
        assert_eq!(b.hook_multiset(&p, Cell::new(1, 3)).unwrap(), ms(&[1, 2]));
        assert_eq!(b.hook_multiset(&p, Cell::new(1, 1)).unwrap(), ms(&[2, 2, 1, 1]));
        let (b, p) = setup(1, 1, &[1]);
        assert_eq!(b.hook_multiset(&p, Cell::new(1, 1)).unwrap(), ms(&[1]));
        assert!(b.hook_multiset(&b.empty(), Cell::new(1, 1)).is_err());
    }

    #[test]
    fn transition_examples() {
        let (b, p) = setup(3, 5, &[4, 3, 1]);
        assert_eq!(b.transition(&p, Cell::new(2, 1)).unwrap(), Transition::new(2, 5));
        let (b, p) = setup(1, 1, &[1]);
        assert_eq!(b.transition(&p, Cell::new(1, 1)).unwrap(), Transition::new(2, 2));
        let (b, p) = setup(2, 3, &[3, 3]);
        assert_eq!(b.transition(&p, Cell::new(1, 3)).unwrap(), Transition::new(4, 5));
        assert!(b.transition(&b.empty(), Cell::new(1, 1)).is_err());
    }

    #[test]
    fn apply_lr_examples() {
        let (b, p) = setup(3, 5, &[4, 3, 1]);
        assert_eq!(b.apply_lr(&p, 2, 5), Some(b.partition(&[4]).unwrap()));
        let (b, p) = setup(2, 3, &[3, 3]);
        assert_eq!(b.apply_lr(&p, 4, 5), Some(b.partition(&[2, 2]).unwrap()));
        for l in 2..=5 {
            for r in l..=5 {
                assert_eq!(b.apply_lr(&b.empty(), l, r), None, "({l},{r})");
            }
        }
    }

    #[test]
    fn transitions_stay_in_range() {
        for m in 1..=4 {
            for n in m..=6 {
                let b = Board::new(m, n).unwrap();
                for p in b.partitions() {
                    for cell in p.cells() {
                        let t = b.transition(&p, cell).unwrap();
                        assert!(2 <= t.l && t.l <= t.r && t.r <= m + n);
                    }
                }
            }
        }
    }

    /// Removing the hook at `cell` splits the label multiset of the diagram
    /// into that of the remaining boxes (labels taken before the shift) and
    /// the hook's own labels.
    #[test]
    fn label_multiset_splits_along_hook() {
        for m in 1..=4 {
            for n in m..=5 {
                let b = Board::new(m, n).unwrap();
                for p in b.partitions() {
                    let all: Vec<Cell> = p.cells().collect();
                    let whole = b.numbering_multiset(&all).unwrap();
                    for cell in p.cells() {
                        let hook = p.hook_cells(cell).unwrap();
                        let rest: Vec<Cell> =
                            all.iter().copied().filter(|c| !hook.contains(c)).collect();
                        let split = b
                            .numbering_multiset(&rest)
                            .unwrap()
                            .union(&b.hook_multiset(&p, cell).unwrap());
                        assert_eq!(split, whole);
                        // the shifted block keeps its labels: c(i-1, j-1) = c(i, j)
                        let after = p.remove_hook(cell).unwrap();
                        let moved: Vec<Cell> = after.cells().collect();
                        assert_eq!(b.numbering_multiset(&moved).unwrap(), b.numbering_multiset(&rest).unwrap());
                    }
                }
            }
        }
    }
}
