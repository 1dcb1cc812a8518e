//! Checks and computations built on the full game graph of a board.

mod closed_form;
mod grundy;
mod invariants;
mod membership;
mod play;
mod transfer;

use serde::Serialize;

use crate::diagram::Partition;

pub use closed_form::{
    computed_two_row_zeros, p_positions_m2_closed_form, p_positions_two_rows_closed_form,
    verify_closed_form_m2, verify_closed_form_two_rows, ClosedFormReport,
};
pub use grundy::{grundy_table, mex, outcome_report, GrundyTable, Outcome, OutcomeReport};
pub use invariants::{
    ascent_predecessor, ascent_predecessors, checks, predicted_kind, verify_engine_invariants,
    Ascent, EngineReport,
};
pub use membership::{
    member_by_index_sets, member_by_part_sums, right_index_set, verify_main_theorem,
    MainTheoremReport,
};
pub use play::{best_moves, engine_reply};
pub use transfer::{embed_partition, verify_t_rows, TransferReport};

/// One failed check, tagged with the diagram it failed on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub position: Option<Partition>,
    pub detail: String,
}

impl Violation {
    pub fn at(check: &str, p: &Partition, detail: String) -> Self {
        Violation {
            check: check.to_string(),
            position: Some(p.clone()),
            detail,
        }
    }

    pub fn general(check: &str, detail: String) -> Self {
        Violation {
            check: check.to_string(),
            position: None,
            detail,
        }
    }
}
