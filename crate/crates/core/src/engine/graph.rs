use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{moves, MoveRecord, DEFAULT_MAX_POSITIONS};
use crate::diagram::{Board, Partition};
use crate::error::{MhrgError, Result};

/// Every position reachable from a start position, with every move record
/// out of it. Records of a node are kept in row-major box order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameGraph {
    board: Board,
    start: Partition,
    edges: BTreeMap<Partition, Vec<MoveRecord>>,
}

impl GameGraph {
    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn start(&self) -> &Partition {
        &self.start
    }

    /// Positions in lexicographic order.
    pub fn nodes(&self) -> impl Iterator<Item = &Partition> {
        self.edges.keys()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.edges.contains_key(p)
    }

    pub fn moves_from(&self, p: &Partition) -> Option<&[MoveRecord]> {
        self.edges.get(p).map(Vec::as_slice)
    }

    /// All records of the graph, grouped by source node.
    pub fn records(&self) -> impl Iterator<Item = &MoveRecord> {
        self.edges.values().flatten()
    }

    /// Distinct resulting positions of `p`.
    pub fn options_of(&self, p: &Partition) -> Option<BTreeSet<&Partition>> {
        self.moves_from(p)
            .map(|recs| recs.iter().map(|mv| &mv.to).collect())
    }

    /// Distinct `(from, to)` pairs.
    pub fn distinct_edges(&self) -> BTreeSet<(&Partition, &Partition)> {
        self.records().map(|mv| (&mv.from, &mv.to)).collect()
    }

    /// Rebuilds a graph from its records, checking the structural invariants:
    /// records are consistent, every target is a node, the empty diagram has
    /// no moves and every node is reachable from `start`.
    pub fn from_records(
        board: Board,
        start: Partition,
        nodes: impl IntoIterator<Item = Partition>,
        records: impl IntoIterator<Item = MoveRecord>,
    ) -> Result<GameGraph> {
        let bad = |msg: String| Err(MhrgError::MalformedGraph(msg));
        board.check(&start)?;
        let mut edges: BTreeMap<Partition, Vec<MoveRecord>> = BTreeMap::new();
        for p in nodes {
            board.check(&p)?;
            edges.insert(p, Vec::new());
        }
        for mv in records {
            if !mv.is_consistent(&board) {
                return bad(format!("inconsistent record {mv:?}"));
            }
            if !edges.contains_key(&mv.to) {
                return bad(format!("target {} is not a node", mv.to));
            }
            match edges.get_mut(&mv.from) {
                Some(out) => out.push(mv),
                None => return bad(format!("source {} is not a node", mv.from)),
            }
        }
        for (p, out) in edges.iter_mut() {
            if p.is_empty() && !out.is_empty() {
                return bad("the empty diagram has outgoing moves".into());
            }
            out.sort_by_key(|mv| mv.cell);
        }
        let graph = GameGraph { board, start, edges };
        if !graph.contains(&graph.start) {
            return bad(format!("start {} is not a node", graph.start));
        }
        let reached = graph.reachable_count();
        if reached != graph.len() {
            return bad(format!("{} of {} nodes unreachable", graph.len() - reached, graph.len()));
        }
        Ok(graph)
    }

    fn reachable_count(&self) -> usize {
        let mut seen = BTreeSet::from([&self.start]);
        let mut queue = VecDeque::from([&self.start]);
        while let Some(p) = queue.pop_front() {
            for mv in &self.edges[p] {
                if seen.insert(&mv.to) {
                    queue.push_back(&mv.to);
                }
            }
        }
        seen.len()
    }
}

pub fn reachable_graph(board: &Board) -> Result<GameGraph> {
    reachable_graph_with_limit(board, DEFAULT_MAX_POSITIONS)
}

/// Breadth-first closure of the move rule from the full rectangle.
pub fn reachable_graph_with_limit(board: &Board, max_positions: u128) -> Result<GameGraph> {
    reachable_from(board, &board.full(), max_positions)
}

/// Closure from an arbitrary start position.
///
/// Only the full rectangle is a start position of the actual game; other
/// starts are exploratory.
pub fn reachable_from(board: &Board, start: &Partition, max_positions: u128) -> Result<GameGraph> {
    let positions = board.partition_count();
    if positions > max_positions {
        return Err(MhrgError::GuardrailExceeded {
            m: board.m(),
            n: board.n(),
            positions,
            limit: max_positions,
        });
    }
    board.check(start)?;
    let mut edges: BTreeMap<Partition, Vec<MoveRecord>> = BTreeMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    let mut seen = BTreeSet::from([start.clone()]);
    while let Some(p) = queue.pop_front() {
        let out = moves(board, &p)?;
        let fresh: BTreeSet<&Partition> = out
            .iter()
            .map(|mv| &mv.to)
            .filter(|to| !seen.contains(*to))
            .collect();
        for to in fresh {
            seen.insert(to.clone());
            queue.push_back(to.clone());
        }
        edges.insert(p, out);
    }
    Ok(GameGraph {
        board: *board,
        start: start.clone(),
        edges,
    })
}
