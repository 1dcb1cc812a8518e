//! The move rule of the Multiple Hook Removing Game.
//!
//! A move picks a box `(i, j)` and removes its hook. If the result contains
//! a box whose hook carries the same label multiset as the removed hook
//! (there is at most one), that hook is removed as well.

mod graph;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Board, Cell, HookMultiset, Partition, Transition};
use crate::error::{MhrgError, Result};

pub use graph::{reachable_from, reachable_graph, reachable_graph_with_limit, GameGraph};

/// Largest `C(m + n, m)` accepted for full enumeration.
pub const DEFAULT_MAX_POSITIONS: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    /// single hook removal
    #[serde(rename = "MHR1")]
    Single,
    /// forced second removal of the matching hook
    #[serde(rename = "MHR2")]
    Double,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Single => "MHR1",
            MoveKind::Double => "MHR2",
        })
    }
}

/// One move, with both removals spelled out for a double move.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveRecord {
    pub from: Partition,
    #[serde(rename = "box")]
    pub cell: Cell,
    pub first_lr: Transition,
    pub op: MoveKind,
    #[serde(rename = "second_box")]
    pub second_cell: Option<Cell>,
    pub second_lr: Option<Transition>,
    pub to: Partition,
}

impl MoveRecord {
    /// Checks the record's internal consistency: tag agrees with the second
    /// removal fields, the second window mirrors the first, and the size drops.
    pub fn is_consistent(&self, board: &Board) -> bool {
        let tagged = match self.op {
            MoveKind::Single => self.second_cell.is_none() && self.second_lr.is_none(),
            MoveKind::Double => {
                self.second_cell.is_some()
                    && self.second_lr == Some(self.first_lr.mirrored(board))
            }
        };
        tagged && self.to.size() < self.from.size()
    }
}

/// Boxes of `p` whose hook multiset equals `hook`.
pub fn matching_cells(board: &Board, p: &Partition, hook: &HookMultiset) -> Vec<Cell> {
    p.cells()
        .filter(|&c| {
            // hook length is arm + leg + 1; skip the label scan when it differs
            let len = p.row(c.row) - c.col + p.column_height(c.col) - c.row + 1;
            len == hook.len()
                && board.hook_multiset(p, c).as_ref().ok() == Some(hook)
        })
        .collect()
}

/// Number of boxes of `Y<i,j>` whose hook multiset equals that of the hook
/// removed at `cell`, by direct scan. Never exceeds 1.
pub fn f_value(board: &Board, p: &Partition, cell: Cell) -> Result<usize> {
    board.check(p)?;
    let hook = board.hook_multiset(p, cell)?;
    let rest = p.remove_hook(cell)?;
    Ok(matching_cells(board, &rest, &hook).len())
}

/// The same count decided on index sets: with `(l, r)` the first window and
/// `I'` the index set after the first removal, a match exists iff
/// `bar(r)` is not in `I'` and `bar(l - 1)` is.
pub fn f_value_by_index_set(board: &Board, p: &Partition, cell: Cell) -> Result<usize> {
    board.check(p)?;
    let t = board.transition(p, cell)?;
    let after = board.index_set(&p.remove_hook(cell)?);
    let matched = !after.contains(board.bar(t.r)) && after.contains(board.bar(t.l - 1));
    Ok(usize::from(matched))
}

/// Plays the box `cell` of `p`.
pub fn mhr_move(board: &Board, p: &Partition, cell: Cell) -> Result<MoveRecord> {
    board.check(p)?;
    let first_lr = board.transition(p, cell)?;
    let hook = board.hook_multiset(p, cell)?;
    let mid = p.remove_hook(cell)?;
    let matches = matching_cells(board, &mid, &hook);
    assert!(
        matches.len() <= 1,
        "hook {hook} of {p} at {cell} matched {} boxes of {mid}",
        matches.len()
    );
    let record = match matches.first() {
        None => MoveRecord {
            from: p.clone(),
            cell,
            first_lr,
            op: MoveKind::Single,
            second_cell: None,
            second_lr: None,
            to: mid,
        },
        Some(&second) => MoveRecord {
            from: p.clone(),
            cell,
            first_lr,
            op: MoveKind::Double,
            second_cell: Some(second),
            second_lr: Some(board.transition(&mid, second)?),
            to: mid.remove_hook(second)?,
        },
    };
    Ok(record)
}

/// One record per box of `p`, in row-major box order.
pub fn moves(board: &Board, p: &Partition) -> Result<Vec<MoveRecord>> {
    board.check(p)?;
    p.cells().map(|c| mhr_move(board, p, c)).collect()
}

/// The distinct positions reachable in one move.
pub fn options(board: &Board, p: &Partition) -> Result<BTreeSet<Partition>> {
    board.check(p)?;
    if p.is_empty() {
        return Err(MhrgError::EndingPosition);
    }
    Ok(moves(board, p)?.into_iter().map(|mv| mv.to).collect())
}
