//! Young diagrams in an `m x n` rectangle and the Multiple Hook Removing Game.
//!
//! [`diagram`] holds partitions, index sets, diagonal expressions and the
//! unimodal box labels; [`engine`] implements the move rule and builds the
//! game graph; [`analysis`] computes Grundy values and checks structural
//! properties of the game against the engine.

pub mod analysis;
pub mod diagram;
pub mod engine;
pub mod error;
pub mod suites;

pub use diagram::{Board, Cell, DiagonalExpression, HookMultiset, IndexSet, Partition, Transition};
pub use engine::{GameGraph, MoveKind, MoveRecord, DEFAULT_MAX_POSITIONS};
pub use error::{MhrgError, Result};
