//! Index-set descriptions of moves between game positions, and an exhaustive
//! check of the engine's structural properties on one board.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::grundy::grundy_table;
use super::membership::member_by_index_sets;
use super::Violation;
use crate::diagram::{Board, HookMultiset, Partition, Transition};
use crate::engine::{
    f_value_by_index_set, matching_cells, mhr_move, reachable_graph_with_limit, MoveKind,
};
use crate::error::Result;

pub mod checks {
    pub const AT_MOST_ONE_MATCH: &str = "at-most-one-match";
    pub const INDEX_SET_CRITERION: &str = "index-set-criterion";
    pub const SECOND_WINDOW: &str = "second-window";
    pub const NO_THIRD_MATCH: &str = "no-third-match";
    pub const EQUAL_HOOKS_EQUAL_MOVES: &str = "equal-hooks-equal-moves";
    pub const APPLY_LR: &str = "apply-lr";
    pub const DESCENT_TAG: &str = "descent-tag";
    pub const ASCENT: &str = "ascent";
    pub const GRUNDY_RECURRENCE: &str = "grundy-recurrence";
}

/// Move type predicted from the index set of a game position `p` and the
/// window `(l, r)` of the first removal: a double move iff `bar(l - 1)` lies
/// in `I(p) \ {r}` or `l - 1` is fixed by the bar map.
pub fn predicted_kind(board: &Board, p: &Partition, first: Transition) -> MoveKind {
    let set = board.index_set(p);
    let mirror = board.bar(first.l - 1);
    if (set.contains(mirror) && mirror != first.r) || mirror == first.l - 1 {
        MoveKind::Double
    } else {
        MoveKind::Single
    }
}

/// A predecessor of a game position built on index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ascent {
    /// `r` is missing from `I(p)` and at least `n + 1`.
    pub r: usize,
    /// `l - 1` is in `I(p)` and below `r`.
    pub l: usize,
    /// The predecessor; absent if the construction leaves the board.
    pub from: Option<Partition>,
    pub op: MoveKind,
}

/// Every predecessor produced by the index-set construction, one per valid
/// choice of `(l, r)`. Empty for the full rectangle and for diagrams failing
/// the index-set membership criterion.
pub fn ascent_predecessors(board: &Board, p: &Partition) -> Vec<Ascent> {
    if *p == board.full() || !member_by_index_sets(board, p) {
        return Vec::new();
    }
    let set = board.index_set(p);
    let mut out = Vec::new();
    for r in (board.n() + 1..=board.m() + board.n()).filter(|&r| !set.contains(r)) {
        for &below in set.elements().iter().filter(|&&x| x < r) {
            let mirror_r = board.bar(r);
            let (next, op) = if !set.contains(mirror_r) || mirror_r == below {
                (set.swap(below, r), MoveKind::Single)
            } else {
                let twice = set
                    .swap(mirror_r, board.bar(below))
                    .and_then(|s| s.swap(below, r));
                (twice, MoveKind::Double)
            };
            let from = next.and_then(|s| board.partition_of_index_set(&s).ok());
            out.push(Ascent { r, l: below + 1, from, op });
        }
    }
    out
}

/// The first predecessor from [`ascent_predecessors`].
pub fn ascent_predecessor(board: &Board, p: &Partition) -> Option<Ascent> {
    ascent_predecessors(board, p).into_iter().next()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EngineReport {
    pub board: Board,
    pub partitions: usize,
    pub moves: usize,
    pub double_moves: usize,
    pub members: usize,
    pub violations: Vec<Violation>,
}

impl EngineReport {
    pub fn count(&self, check: &str) -> usize {
        self.violations.iter().filter(|v| v.check == check).count()
    }
}

/// Runs every engine check over all diagrams of the board (move-rule checks)
/// and over all game positions (descent, ascent and Grundy checks).
pub fn verify_engine_invariants(board: &Board, max_positions: u128) -> Result<EngineReport> {
    use checks::*;

    let graph = reachable_graph_with_limit(board, max_positions)?;
    let all = board.partitions();
    let mut violations = Vec::new();
    let mut moves = 0;
    let mut double_moves = 0;

    for p in &all {
        let mut by_hook: BTreeMap<HookMultiset, BTreeSet<(MoveKind, Partition)>> = BTreeMap::new();
        let mut windows = BTreeSet::new();
        for cell in p.cells() {
            let hook = board.hook_multiset(p, cell)?;
            let first = board.transition(p, cell)?;
            let mid = p.remove_hook(cell)?;
            windows.insert(first);

            if board.apply_lr(p, first.l, first.r).as_ref() != Some(&mid) {
                violations.push(Violation::at(APPLY_LR, p, format!("box {cell} window {first}")));
            }

            let matches = matching_cells(board, &mid, &hook);
            if matches.len() > 1 {
                violations.push(Violation::at(
                    AT_MOST_ONE_MATCH,
                    p,
                    format!("box {cell}: {} matching boxes", matches.len()),
                ));
                continue;
            }
            if f_value_by_index_set(board, p, cell)? != matches.len() {
                violations.push(Violation::at(
                    INDEX_SET_CRITERION,
                    p,
                    format!("box {cell}: scan found {}", matches.len()),
                ));
            }
            if let Some(&second) = matches.first() {
                let window = board.transition(&mid, second)?;
                if window != first.mirrored(board) {
                    violations.push(Violation::at(
                        SECOND_WINDOW,
                        p,
                        format!("box {cell}: second window {window}, first {first}"),
                    ));
                }
                let end = mid.remove_hook(second)?;
                if !matching_cells(board, &end, &hook).is_empty() {
                    violations.push(Violation::at(NO_THIRD_MATCH, p, format!("box {cell}")));
                }
            }

            let record = mhr_move(board, p, cell)?;
            moves += 1;
            if record.op == MoveKind::Double {
                double_moves += 1;
            }
            by_hook.entry(hook).or_default().insert((record.op, record.to));
        }

        for (hook, outcomes) in by_hook {
            if outcomes.len() > 1 {
                violations.push(Violation::at(
                    EQUAL_HOOKS_EQUAL_MOVES,
                    p,
                    format!("hook {hook} leads to {} distinct moves", outcomes.len()),
                ));
            }
        }

        let top = board.m() + board.n();
        for l in 2..=top {
            for r in l..=top {
                let t = Transition::new(l, r);
                if !windows.contains(&t) && board.apply_lr(p, l, r).is_some() {
                    violations.push(Violation::at(APPLY_LR, p, format!("window {t} has no box")));
                }
            }
        }
    }

    for p in graph.nodes() {
        for mv in graph.moves_from(p).unwrap_or_default() {
            let predicted = predicted_kind(board, p, mv.first_lr);
            if predicted != mv.op {
                violations.push(Violation::at(
                    DESCENT_TAG,
                    p,
                    format!("box {}: predicted {predicted}, engine {}", mv.cell, mv.op),
                ));
            }
        }
        if p == graph.start() {
            continue;
        }
        let ascents = ascent_predecessors(board, p);
        if ascents.is_empty() {
            violations.push(Violation::at(ASCENT, p, "no predecessor constructed".into()));
        }
        for a in ascents {
            let ok = a.from.as_ref().is_some_and(|from| {
                graph
                    .moves_from(from)
                    .is_some_and(|out| out.iter().any(|mv| mv.to == *p && mv.op == a.op))
            });
            if !ok {
                violations.push(Violation::at(
                    ASCENT,
                    p,
                    format!("(l,r)=({},{}) predecessor {:?} via {}", a.l, a.r, a.from, a.op),
                ));
            }
        }
    }

    violations.extend(grundy_table(&graph).check_recurrence(&graph));

    Ok(EngineReport {
        board: *board,
        partitions: all.len(),
        moves,
        double_moves,
        members: graph.len(),
        violations,
    })
}
