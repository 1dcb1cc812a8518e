use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use mhrg_core::analysis::{grundy_table, GrundyTable};
use mhrg_core::engine::{reachable_graph_with_limit, GameGraph};
use mhrg_core::{Board, MhrgError, Result};

/// Game graph and Grundy table of one board.
#[derive(Debug)]
pub struct Solved {
    pub graph: GameGraph,
    pub table: GrundyTable,
}

impl Solved {
    pub fn compute(board: &Board, max_positions: u128) -> Result<Self> {
        let graph = reachable_graph_with_limit(board, max_positions)?;
        let table = grundy_table(&graph);
        Ok(Solved { graph, table })
    }
}

type Slot = Arc<OnceLock<std::result::Result<Arc<Solved>, MhrgError>>>;

/// Solved boards keyed by `(m, n)`. Each board is computed at most once;
/// concurrent callers for the same board wait for the first computation.
#[derive(Debug)]
pub struct BoardCache {
    max_positions: u128,
    slots: Mutex<HashMap<(usize, usize), Slot>>,
}

impl BoardCache {
    pub fn new(max_positions: u128) -> Self {
        BoardCache {
            max_positions,
            slots: Mutex::new(HashMap::new()),
        }
    }

    pub fn max_positions(&self) -> u128 {
        self.max_positions
    }

    pub fn get(&self, board: &Board) -> Result<Arc<Solved>> {
        let slot = {
            let mut slots = self.slots.lock().expect("cache lock poisoned");
            slots.entry((board.m(), board.n())).or_default().clone()
        };
        slot.get_or_init(|| Solved::compute(board, self.max_positions).map(Arc::new))
            .clone()
    }
}
