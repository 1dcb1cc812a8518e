//! JSON records shared by the command line and the HTTP service.

use serde::{Deserialize, Serialize};

use mhrg_core::analysis::{best_moves, engine_reply, GrundyTable, Outcome};
use mhrg_core::engine::GameGraph;
use mhrg_core::{Board, Cell, MoveKind, MoveRecord, Partition, Result, Transition};

/// A diagram of a board, with its game data when it is a game position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionRecord {
    pub m: usize,
    pub n: usize,
    pub lambda: Partition,
    pub index_set: Vec<usize>,
    pub dual: Partition,
    pub member: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grundy: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<Outcome>,
}

impl PositionRecord {
    pub fn new(graph: &GameGraph, table: &GrundyTable, p: &Partition) -> Self {
        let board = graph.board();
        let grundy = table.get(p);
        PositionRecord {
            m: board.m(),
            n: board.n(),
            lambda: p.clone(),
            index_set: board.index_set(p).elements().to_vec(),
            dual: board.dual(p),
            member: grundy.is_some(),
            grundy,
            outcome: grundy.map(Outcome::of_grundy),
        }
    }
}

/// One box leading to an option.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViaBox {
    #[serde(rename = "box")]
    pub cell: Cell,
    pub first_lr: Transition,
    pub op: MoveKind,
    #[serde(default, rename = "second_box", skip_serializing_if = "Option::is_none")]
    pub second_cell: Option<Cell>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second_lr: Option<Transition>,
}

/// A distinct option of a position and every box reaching it. `op` is the
/// type of the move through the first listed box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptionRecord {
    pub to: Partition,
    pub op: MoveKind,
    pub via_boxes: Vec<ViaBox>,
    pub grundy: u32,
}

/// Groups the move records of `p` by target, ordered by target.
pub fn option_records(graph: &GameGraph, table: &GrundyTable, p: &Partition) -> Vec<OptionRecord> {
    let mut out: Vec<OptionRecord> = Vec::new();
    let mut records: Vec<&MoveRecord> = graph.moves_from(p).unwrap_or_default().iter().collect();
    records.sort_by(|a, b| (&a.to, a.cell).cmp(&(&b.to, b.cell)));
    for mv in records {
        let via = ViaBox {
            cell: mv.cell,
            first_lr: mv.first_lr,
            op: mv.op,
            second_cell: mv.second_cell,
            second_lr: mv.second_lr,
        };
        match out.last_mut() {
            Some(last) if last.to == mv.to => last.via_boxes.push(via),
            _ => out.push(OptionRecord {
                to: mv.to.clone(),
                op: mv.op,
                via_boxes: vec![via],
                grundy: table.get(&mv.to).expect("options are game positions"),
            }),
        }
    }
    out
}

/// Everything the play view needs about one game position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionView {
    #[serde(flatten)]
    pub position: PositionRecord,
    pub options: Vec<OptionRecord>,
    pub best_moves: Vec<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engine_move: Option<MoveRecord>,
}

impl PositionView {
    /// `p` must be a node of `graph`.
    pub fn new(graph: &GameGraph, table: &GrundyTable, p: &Partition) -> Result<Self> {
        let ending = p.is_empty();
        Ok(PositionView {
            position: PositionRecord::new(graph, table, p),
            options: option_records(graph, table, p),
            best_moves: if ending {
                Vec::new()
            } else {
                best_moves(graph, table, p)?.into_iter().collect()
            },
            engine_move: if ending {
                None
            } else {
                Some(engine_reply(graph, table, p)?)
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoardSummary {
    pub m: usize,
    pub n: usize,
    pub chi: usize,
    pub max_label: usize,
    pub positions_total: u128,
    pub members: usize,
    pub start_grundy: u32,
}

impl BoardSummary {
    pub fn new(graph: &GameGraph, table: &GrundyTable) -> Self {
        let board = graph.board();
        BoardSummary {
            m: board.m(),
            n: board.n(),
            chi: board.chi(),
            max_label: board.max_label(),
            positions_total: board.partition_count(),
            members: graph.len(),
            start_grundy: table.get(graph.start()).expect("start is a node"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub lambda: Partition,
    pub grundy: u32,
    pub options: Vec<OptionRecord>,
}

/// The full game graph: nodes in lexicographic order, each with its options.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub m: usize,
    pub n: usize,
    pub start: Partition,
    pub nodes: Vec<GraphNode>,
}

impl GraphDocument {
    pub fn new(graph: &GameGraph, table: &GrundyTable) -> Self {
        let board = graph.board();
        GraphDocument {
            m: board.m(),
            n: board.n(),
            start: graph.start().clone(),
            nodes: graph
                .nodes()
                .map(|p| GraphNode {
                    lambda: p.clone(),
                    grundy: table.get(p).expect("every node has a value"),
                    options: option_records(graph, table, p),
                })
                .collect(),
        }
    }

    /// Rebuilds the game graph, validating every record.
    pub fn to_graph(&self) -> Result<GameGraph> {
        let board = Board::new(self.m, self.n)?;
        let records = self.nodes.iter().flat_map(|node| {
            node.options.iter().flat_map(move |opt| {
                opt.via_boxes.iter().map(move |via| MoveRecord {
                    from: node.lambda.clone(),
                    cell: via.cell,
                    first_lr: via.first_lr,
                    op: via.op,
                    second_cell: via.second_cell,
                    second_lr: via.second_lr,
                    to: opt.to.clone(),
                })
            })
        });
        GameGraph::from_records(
            board,
            self.start.clone(),
            self.nodes.iter().map(|node| node.lambda.clone()),
            records,
        )
    }
}
