use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use thiserror::Error;

use mhrg_core::suites::{self, Report};
use mhrg_core::{Board, MhrgError, MoveKind, Partition};

use crate::cache::Solved;
use crate::records::{GraphDocument, PositionRecord, PositionView};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Game(#[from] MhrgError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Main,
    TRows,
    ClosedFormM2,
    ClosedFormTwoRows,
    EngineInvariants,
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// One record per partition of the board, in lexicographic order.
pub fn enumerate(board: &Board, max_positions: u128, format: Format, members_only: bool, out: &mut impl Write) -> CliResult<()> {
    let solved = Solved::compute(board, max_positions)?;
    let records: Vec<PositionRecord> = board
        .partitions()
        .iter()
        .filter(|p| !members_only || solved.graph.contains(p))
        .map(|p| PositionRecord::new(&solved.graph, &solved.table, p))
        .collect();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &records)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["m", "n", "lambda", "index_set", "dual", "member", "grundy", "outcome"])?;
            for r in &records {
                w.write_record([
                    r.m.to_string(),
                    r.n.to_string(),
                    join(r.lambda.parts()),
                    join(&r.index_set),
                    join(r.dual.parts()),
                    r.member.to_string(),
                    r.grundy.map(|g| g.to_string()).unwrap_or_default(),
                    r.outcome.map(|o| format!("{o:?}")).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Dot => return Err(CliError::Usage("enumerate supports json and csv".into())),
    }
    Ok(())
}

/// Position data for one diagram; options and replies only for game positions.
pub fn grundy(board: &Board, lambda: &Partition, max_positions: u128, out: &mut impl Write) -> CliResult<()> {
    board.check(lambda)?;
    let solved = Solved::compute(board, max_positions)?;
    if solved.graph.contains(lambda) {
        let view = PositionView::new(&solved.graph, &solved.table, lambda)?;
        serde_json::to_writer_pretty(&mut *out, &view)?;
    } else {
        let record = PositionRecord::new(&solved.graph, &solved.table, lambda);
        serde_json::to_writer_pretty(&mut *out, &record)?;
    }
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct Summary {
    suite: Suite,
    reports: usize,
    violations: usize,
}

fn emit<R: Report>(suite: Suite, reports: &[R], out: &mut impl Write) -> CliResult<usize> {
    let mut violations = 0;
    for r in reports {
        violations += r.violations().len();
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    serde_json::to_writer(
        &mut *out,
        &Summary {
            suite,
            reports: reports.len(),
            violations,
        },
    )?;
    writeln!(out)?;
    Ok(violations)
}

/// Streams one JSON line per report and a summary line. Returns the total
/// number of violations.
pub fn verify(suite: Suite, max_sum: Option<usize>, max_n: Option<usize>, max_positions: u128, out: &mut impl Write) -> CliResult<usize> {
    match suite {
        Suite::ClosedFormM2 => {
            if max_sum.is_some() {
                return Err(CliError::Usage("closed-form-m2 takes --max-n".into()));
            }
        }
        _ if max_n.is_some() => return Err(CliError::Usage("--max-n applies to closed-form-m2 only".into())),
        _ => {}
    }
    match suite {
        Suite::Main => emit(suite, &suites::main_suite(max_sum.unwrap_or(12), max_positions)?, out),
        Suite::TRows => emit(suite, &suites::t_rows_suite(max_sum.unwrap_or(12), max_positions)?, out),
        Suite::ClosedFormM2 => emit(suite, &suites::closed_form_m2_suite(max_n.unwrap_or(18), max_positions)?, out),
        Suite::ClosedFormTwoRows => emit(
            suite,
            &suites::closed_form_two_rows_suite(max_sum.unwrap_or(14), max_positions)?,
            out,
        ),
        Suite::EngineInvariants => emit(suite, &suites::engine_suite(max_sum.unwrap_or(10), max_positions)?, out),
    }
}

fn node_id(p: &Partition) -> String {
    format!("\"{}\"", join(p.parts()))
}

/// DOT rendering: one node per game position labeled with the diagram and
/// its Grundy value, one edge per distinct option labeled with the move types.
pub fn to_dot(solved: &Solved) -> String {
    let board = solved.graph.board();
    let mut s = format!("digraph mhrg_{}x{} {{\n", board.m(), board.n());
    for p in solved.graph.nodes() {
        let g = solved.table.get(p).expect("every node has a value");
        s.push_str(&format!("  {} [label=\"{p}\\ng={g}\"];\n", node_id(p)));
    }
    for p in solved.graph.nodes() {
        let mut ops: BTreeMap<&Partition, BTreeSet<MoveKind>> = BTreeMap::new();
        for mv in solved.graph.moves_from(p).unwrap_or_default() {
            ops.entry(&mv.to).or_default().insert(mv.op);
        }
        for (to, kinds) in ops {
            let label = kinds.iter().map(MoveKind::to_string).collect::<Vec<_>>().join("|");
            s.push_str(&format!("  {} -> {} [label=\"{label}\"];\n", node_id(p), node_id(to)));
        }
    }
    s.push_str("}\n");
    s
}

pub fn graph(board: &Board, format: Format, max_positions: u128, out: &mut impl Write) -> CliResult<()> {
    let solved = Solved::compute(board, max_positions)?;
    match format {
        Format::Dot => out.write_all(to_dot(&solved).as_bytes())?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &GraphDocument::new(&solved.graph, &solved.table))?;
            writeln!(out)?;
        }
        Format::Csv => return Err(CliError::Usage("graph supports dot and json".into())),
    }
    Ok(())
}
