//! Young diagrams inside an `m x n` rectangle.
//!
//! All coordinates are 1-based: row `i` in `1..=m`, column `j` in `1..=n`.
//! A [`Partition`] bound to a [`Board`] always has exactly `m` parts, with
//! trailing zeros kept.

mod diagonal;
mod hook;
mod index_set;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{MhrgError, Result};

pub use diagonal::DiagonalExpression;
pub use hook::{HookMultiset, Transition};
pub use index_set::IndexSet;

/// A box `(row, col)` of a diagram. Serialized as `[i, j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl From<[usize; 2]> for Cell {
    fn from([row, col]: [usize; 2]) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for [usize; 2] {
    fn from(cell: Cell) -> Self {
        [cell.row, cell.col]
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing sequence of row lengths.
///
/// Ordering is lexicographic on the part sequence, which is the ordering used
/// for every deterministic listing in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(MhrgError::InvalidPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of stored parts, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Length of row `i` (1-based); rows past the stored length are empty.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of boxes in column `j` (1-based).
    pub fn column_height(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&part| part >= j).count()
    }

    /// Number of nonzero rows.
    pub fn height(&self) -> usize {
        self.column_height(1)
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// True for the empty diagram (all parts zero).
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&part| part == 0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row(cell.row)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |col| Cell::new(r + 1, col)))
    }

    /// The hook at `cell`: the box itself, its arm to the right and its leg below.
    pub fn hook_cells(&self, cell: Cell) -> Result<Vec<Cell>> {
        if !self.contains(cell) {
            return Err(MhrgError::NotInDiagram(cell));
        }
        let Cell { row, col } = cell;
        let arm = (col + 1..=self.row(row)).map(|c| Cell::new(row, c));
        let leg = (row + 1..=self.column_height(col)).map(|r| Cell::new(r, col));
        Ok(std::iter::once(cell).chain(arm).chain(leg).collect())
    }

    /// Removes the hook at `cell` and slides the block strictly below and to
    /// the right of it one step up-left.
    pub fn remove_hook(&self, cell: Cell) -> Result<Partition> {
        if !self.contains(cell) {
            return Err(MhrgError::NotInDiagram(cell));
        }
        let Cell { row, col } = cell;
        let mut parts = self.0.clone();
        for r in row..=parts.len() {
            let below = self.row(r + 1);
            parts[r - 1] = self.row(r).min(col - 1) + below.saturating_sub(col);
        }
        Ok(Partition(parts))
    }

    /// The first `rows` parts.
    pub fn truncated(&self, rows: usize) -> Partition {
        Partition(self.0.iter().copied().take(rows).collect())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = MhrgError;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, part) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

/// Parses `3,1`, `(3,1)` or `3 1`. An empty string (or `()`) is the zero-length partition.
impl FromStr for Partition {
    type Err = MhrgError;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Partition(Vec::new()));
        }
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| MhrgError::InvalidPartition(format!("not a part: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The rectangle `Y_{m,n}` a game is played in, with its parity flag and
/// largest unimodal label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BoardRepr", into = "BoardRepr")]
pub struct Board {
    m: usize,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct BoardRepr {
    m: usize,
    n: usize,
}

impl TryFrom<BoardRepr> for Board {
    type Error = MhrgError;

    fn try_from(repr: BoardRepr) -> Result<Self> {
        Board::new(repr.m, repr.n)
    }
}

impl From<Board> for BoardRepr {
    fn from(b: Board) -> Self {
        BoardRepr { m: b.m, n: b.n }
    }
}

impl Board {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(MhrgError::InvalidBoard { m, n });
        }
        Ok(Board { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1 when `m + n` is even, 0 otherwise.
    pub fn chi(&self) -> usize {
        usize::from((self.m + self.n).is_multiple_of(2))
    }

    /// The largest unimodal label `c = (m + n - 1 + chi) / 2`.
    pub fn max_label(&self) -> usize {
        (self.m + self.n - 1 + self.chi()) / 2
    }

    /// The bar involution `x -> m + n + 1 - x` on `[1, m + n]`.
    pub fn bar(&self, x: usize) -> usize {
        debug_assert!((1..=self.m + self.n).contains(&x));
        self.m + self.n + 1 - x
    }

    /// Number of diagrams in the rectangle, `C(m + n, m)`.
    pub fn partition_count(&self) -> u128 {
        binomial(self.m + self.n, self.m)
    }

    /// Pads `parts` with zeros to length `m` and checks it fits the rectangle.
    pub fn partition(&self, parts: &[usize]) -> Result<Partition> {
        if parts.len() > self.m {
            return Err(MhrgError::InvalidPartition(format!(
                "{} parts do not fit {} rows",
                parts.len(),
                self.m
            )));
        }
        let mut padded = parts.to_vec();
        padded.resize(self.m, 0);
        let p = Partition::new(padded)?;
        self.check(&p)?;
        Ok(p)
    }

    /// Checks that `p` has exactly `m` parts, each at most `n`.
    pub fn check(&self, p: &Partition) -> Result<()> {
        if p.len() != self.m {
            return Err(MhrgError::InvalidPartition(format!(
                "expected {} parts on a {}x{} board, got {}",
                self.m,
                self.m,
                self.n,
                p.len()
            )));
        }
        if p.row(1) > self.n {
            return Err(MhrgError::InvalidPartition(format!(
                "row length {} exceeds {} columns",
                p.row(1),
                self.n
            )));
        }
        Ok(())
    }

    pub fn full(&self) -> Partition {
        Partition(vec![self.n; self.m])
    }

    pub fn empty(&self) -> Partition {
        Partition(vec![0; self.m])
    }

    /// Every diagram of the rectangle in lexicographic order.
    pub fn partitions(&self) -> Vec<Partition> {
        fn extend(prefix: &mut Vec<usize>, rows: usize, max: usize, out: &mut Vec<Partition>) {
            if prefix.len() == rows {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in 0..=max {
                prefix.push(part);
                extend(prefix, rows, part, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::with_capacity(self.m), self.m, self.n, &mut out);
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        (1..=self.m).contains(&cell.row) && (1..=self.n).contains(&cell.col)
    }

    /// Unimodal label `min(j - i + m, i - j + n)` of a box of the rectangle.
    pub fn label(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(MhrgError::OutsideBoard(cell));
        }
        Ok((cell.col + self.m - cell.row).min(cell.row + self.n - cell.col))
    }

    /// The complement of `p` in the rectangle rotated by 180 degrees.
    pub fn dual(&self, p: &Partition) -> Partition {
        debug_assert!(self.check(p).is_ok());
        Partition(p.0.iter().rev().map(|&part| self.n - part).collect())
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
