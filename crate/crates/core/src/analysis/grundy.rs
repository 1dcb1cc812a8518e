use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::Violation;
use crate::diagram::{Board, Partition};
use crate::engine::GameGraph;

/// Least nonnegative integer missing from `values`.
pub fn mex<I: IntoIterator<Item = u32>>(values: I) -> u32 {
    let present: BTreeSet<u32> = values.into_iter().collect();
    (0..).find(|k| !present.contains(k)).expect("finite set")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// previous player wins
    P,
    /// next player wins
    N,
}

impl Outcome {
    pub fn of_grundy(value: u32) -> Outcome {
        if value == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrundyTable {
    board: Board,
    values: BTreeMap<Partition, u32>,
}

impl GrundyTable {
    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn get(&self, p: &Partition) -> Option<u32> {
        self.values.get(p).copied()
    }

    pub fn outcome(&self, p: &Partition) -> Option<Outcome> {
        self.get(p).map(Outcome::of_grundy)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u32)> {
        self.values.iter().map(|(p, &g)| (p, g))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Positions with Grundy value 0.
    pub fn zeros(&self) -> BTreeSet<&Partition> {
        self.iter().filter(|&(_, g)| g == 0).map(|(p, _)| p).collect()
    }

    /// Recomputes `mex` over the options of every node and reports mismatches.
    pub fn check_recurrence(&self, graph: &GameGraph) -> Vec<Violation> {
        let mut out = Vec::new();
        for p in graph.nodes() {
            let Some(stored) = self.get(p) else {
                out.push(Violation::at("grundy-recurrence", p, "missing value".into()));
                continue;
            };
            let opts = graph.options_of(p).unwrap_or_default();
            let expected = if p.is_empty() {
                0
            } else {
                mex(opts.iter().filter_map(|q| self.get(q)))
            };
            if stored != expected || opts.iter().any(|q| self.get(q).is_none()) {
                out.push(Violation::at(
                    "grundy-recurrence",
                    p,
                    format!("stored {stored}, recomputed {expected}"),
                ));
            }
        }
        out
    }
}

/// Grundy value of every node, evaluated in order of increasing box count.
pub fn grundy_table(graph: &GameGraph) -> GrundyTable {
    let mut order: Vec<&Partition> = graph.nodes().collect();
    order.sort_by_key(|p| p.size());
    let mut values: BTreeMap<Partition, u32> = BTreeMap::new();
    for p in order {
        let opts = graph.options_of(p).expect("node of graph");
        let g = mex(opts.into_iter().map(|q| values[q]));
        values.insert(p.clone(), g);
    }
    GrundyTable {
        board: *graph.board(),
        values,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutcomeReport {
    pub board: Board,
    pub p_positions: BTreeSet<Partition>,
    pub n_positions: BTreeSet<Partition>,
}

pub fn outcome_report(graph: &GameGraph, table: &GrundyTable) -> OutcomeReport {
    let (p_positions, n_positions) = graph
        .nodes()
        .cloned()
        .partition(|p| table.get(p) == Some(0));
    OutcomeReport {
        board: *graph.board(),
        p_positions,
        n_positions,
    }
}
