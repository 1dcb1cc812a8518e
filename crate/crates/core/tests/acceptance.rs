//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mhrg_core::analysis::{checks, grundy_table, mex};
use mhrg_core::engine::{options, reachable_graph, DEFAULT_MAX_POSITIONS};
use mhrg_core::suites::{self, boards_up_to, Report};
use mhrg_core::{Board, Cell, DiagonalExpression, IndexSet, Partition, Transition};

struct Outcome {
    ok: bool,
    detail: String,
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn expect(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn show(set: &BTreeSet<Partition>) -> String {
    let items: Vec<String> = set.iter().map(Partition::to_string).collect();
    format!("{{{}}}", items.join(" "))
}

fn parts(b: &Board, list: &[&[usize]]) -> BTreeSet<Partition> {
    list.iter().map(|q| b.partition(q).unwrap()).collect()
}

fn example_two_by_three() -> Outcome {
    let b = Board::new(2, 3).unwrap();
    let g = reachable_graph(&b).unwrap();
    let reached: BTreeSet<Partition> = g.nodes().cloned().collect();
    let expected = parts(&b, &[&[3, 3], &[3, 1], &[2, 0], &[0, 0]]);
    let excluded: BTreeSet<Partition> = b.partitions().into_iter().filter(|p| !g.contains(p)).collect();
    let expected_excluded = parts(&b, &[&[1, 0], &[1, 1], &[2, 1], &[2, 2], &[3, 0], &[3, 2]]);
    expect(
        reached == expected && excluded == expected_excluded,
        format!("reachable {}, excluded {}", show(&reached), show(&excluded)),
    )
}

fn example_diagonal_and_transition() -> Outcome {
    let b = Board::new(3, 5).unwrap();
    let p = b.partition(&[4, 3, 1]).unwrap();
    let diag = b.diagonal_expression(&p);
    let t = b.transition(&p, Cell::new(2, 1)).unwrap();
    let after = p.remove_hook(Cell::new(2, 1)).unwrap();
    expect(
        diag.counts() == [0, 1, 1, 2, 2, 1, 1, 0, 0]
            && t == Transition::new(2, 5)
            && after.parts() == [4, 0, 0],
        format!("diagonal {:?}, transition {t}, result {after}", diag.counts()),
    )
}

fn main_theorem() -> Outcome {
    let reports = match suites::main_suite(12, DEFAULT_MAX_POSITIONS) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let violations: usize = reports.iter().map(|r| r.violations().len()).sum();
    let largest = reports.iter().map(|r| r.partitions).max().unwrap_or(0);
    expect(
        violations == 0 && reports.len() == boards_up_to(12).len(),
        format!("{} boards, largest {largest} partitions, {violations} violations", reports.len()),
    )
}

/// Engine checks over every board with `m + n <= 12`, shared by two criteria.
struct EngineTotals {
    elapsed: Duration,
    by_check: BTreeMap<String, usize>,
    boards_10: usize,
    moves_12: usize,
    moves_10: usize,
    error: Option<String>,
}

fn engine_totals() -> EngineTotals {
    let start = Instant::now();
    let mut totals = EngineTotals {
        elapsed: Duration::ZERO,
        by_check: BTreeMap::new(),
        boards_10: 0,
        moves_12: 0,
        moves_10: 0,
        error: None,
    };
    for b in boards_up_to(12) {
        match mhrg_core::analysis::verify_engine_invariants(&b, DEFAULT_MAX_POSITIONS) {
            Ok(r) => {
                totals.moves_12 += r.moves;
                let small = b.m() + b.n() <= 10;
                if small {
                    totals.boards_10 += 1;
                    totals.moves_10 += r.moves;
                }
                for v in &r.violations {
                    // the m+n <= 10 criteria only count violations on those boards
                    let key = if small { v.check.clone() } else { format!("{}@12", v.check) };
                    *totals.by_check.entry(key).or_default() += 1;
                }
            }
            Err(e) => totals.error = Some(e.to_string()),
        }
    }
    totals.elapsed = start.elapsed();
    totals
}

fn count(t: &EngineTotals, check: &str, up_to_12: bool) -> usize {
    let small = t.by_check.get(check).copied().unwrap_or(0);
    let large = t.by_check.get(&format!("{check}@12")).copied().unwrap_or(0);
    if up_to_12 {
        small + large
    } else {
        small
    }
}

fn at_most_one_match(t: &EngineTotals) -> Outcome {
    if let Some(e) = &t.error {
        return fail(e.clone());
    }
    let over = count(t, checks::AT_MOST_ONE_MATCH, true);
    let disagree = count(t, checks::INDEX_SET_CRITERION, true);
    expect(
        over == 0 && disagree == 0,
        format!("{} boxes checked, {over} with f > 1, {disagree} criterion disagreements", t.moves_12),
    )
}

fn hook_remarks(t: &EngineTotals) -> Outcome {
    if let Some(e) = &t.error {
        return fail(e.clone());
    }
    let third = count(t, checks::NO_THIRD_MATCH, false);
    let equal = count(t, checks::EQUAL_HOOKS_EQUAL_MOVES, false);
    expect(
        third == 0 && equal == 0,
        format!(
            "{} boards, {} boxes, {third} repeated matches, {equal} equal-hook mismatches",
            t.boards_10, t.moves_10
        ),
    )
}

fn ascent(t: &EngineTotals) -> Outcome {
    if let Some(e) = &t.error {
        return fail(e.clone());
    }
    let v = count(t, checks::ASCENT, false);
    expect(v == 0, format!("{} boards, {v} violations", t.boards_10))
}

/// Grundy values by plain recursion over options, no memo and no graph.
fn brute_grundy(b: &Board, p: &Partition) -> u32 {
    if p.is_empty() {
        return 0;
    }
    mex(options(b, p).unwrap().iter().map(|q| brute_grundy(b, q)))
}

fn grundy_chain() -> Outcome {
    let b = Board::new(2, 3).unwrap();
    let chain = [[3, 3], [3, 1], [2, 0], [0, 0]];
    let table = grundy_table(&reachable_graph(&b).unwrap());
    let from_table: Vec<Option<u32>> = chain.iter().map(|q| table.get(&b.partition(q).unwrap())).collect();
    let brute: Vec<u32> = chain.iter().map(|q| brute_grundy(&b, &b.partition(q).unwrap())).collect();
    expect(
        brute == [3, 2, 1, 0] && from_table == [Some(3), Some(2), Some(1), Some(0)],
        format!("table {from_table:?}, recursion {brute:?}"),
    )
}

fn t_rows() -> Outcome {
    match suites::t_rows_suite(12, DEFAULT_MAX_POSITIONS) {
        Ok(reports) => {
            let v: usize = reports.iter().map(|r| r.violations().len()).sum();
            expect(v == 0, format!("{} (t,m,n) triples, {v} violations", reports.len()))
        }
        Err(e) => fail(e.to_string()),
    }
}

fn closed_form_m2() -> Outcome {
    match suites::closed_form_m2_suite(18, DEFAULT_MAX_POSITIONS) {
        Ok(reports) => {
            let v: usize = reports.iter().map(|r| r.violations().len()).sum();
            let sizes: Vec<usize> = reports.iter().map(|r| r.computed.len()).collect();
            expect(v == 0, format!("n = 2..18, P-position counts {sizes:?}, {v} violations"))
        }
        Err(e) => fail(e.to_string()),
    }
}

fn closed_form_two_rows() -> Outcome {
    match suites::closed_form_two_rows_suite(14, DEFAULT_MAX_POSITIONS) {
        Ok(reports) => {
            let v: usize = reports.iter().map(|r| r.violations().len()).sum();
            expect(v == 0, format!("{} boards, {v} violations", reports.len()))
        }
        Err(e) => fail(e.to_string()),
    }
}

/// `{lambda_{m-t+1} + t : 1 <= t <= m}` straight from the definition.
fn index_set_by_definition(b: &Board, p: &Partition) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=b.m()).map(|t| p.row(b.m() - t + 1) + t).collect();
    out.sort_unstable();
    out
}

/// Number of boxes on each diagonal `j - i = k - m - 1`, counted cell by cell.
fn diagonal_by_counting(b: &Board, p: &Partition) -> Vec<usize> {
    let mut out = vec![0; b.m() + b.n() + 1];
    for i in 1..=b.m() {
        for j in 1..=p.row(i) {
            out[j + b.m() - i] += 1;
        }
    }
    out
}

fn round_trips() -> Outcome {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for b in boards_up_to(10) {
        for p in b.partitions() {
            checked += 1;
            let s = b.index_set(&p);
            let from_set = b.partition_of_index_set(&s);
            let rebuilt = IndexSet::new(&b, index_set_by_definition(&b, &p));
            let d = b.diagonal_expression(&p);
            let from_diag = b.partition_of_diagonal(&d);
            let rebuilt_d = DiagonalExpression::new(&b, diagonal_by_counting(&b, &p));
            let ok = from_set.as_ref() == Ok(&p)
                && rebuilt.as_ref() == Ok(&s)
                && from_diag.as_ref() == Ok(&p)
                && rebuilt_d.as_ref() == Ok(&d);
            if !ok {
                bad.push(format!("{p} on ({},{})", b.m(), b.n()));
            }
        }
    }
    expect(bad.is_empty(), format!("{checked} partitions, failures {bad:?}"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |name: &str, limit: Option<Duration>, elapsed: Duration, o: Outcome| {
        let late = limit.is_some_and(|l| elapsed > l);
        let ok = o.ok && !late;
        if !ok {
            failed += 1;
        }
        let limit_note = match limit {
            Some(l) if late => format!(" [exceeded limit of {l:?}]"),
            Some(l) => format!(" [limit {l:?}]"),
            None => String::new(),
        };
        println!(
            "{} {name}: {} ({elapsed:.2?}){limit_note}",
            if ok { "PASS" } else { "FAIL" },
            o.detail
        );
    };
    let secs = Duration::from_secs;

    let mut timed = |name: &str, limit: Option<Duration>, f: fn() -> Outcome| {
        let start = Instant::now();
        let o = f();
        report(name, limit, start.elapsed(), o);
    };
    timed("reachable set of the 2x3 board", Some(secs(1)), example_two_by_three);
    timed("diagonal expression and transition examples", Some(secs(1)), example_diagonal_and_transition);
    timed("membership characterizations agree, m+n <= 12", Some(secs(120)), main_theorem);
    timed("Grundy chain 3,2,1,0 on the 2x3 board", None, grundy_chain);
    timed("t-row transfer, m+n <= 12", Some(secs(180)), t_rows);
    timed("two-row closed form on (2,n), n <= 18", Some(secs(60)), closed_form_m2);
    timed("two-row closed form on (m,n), m+n <= 14", None, closed_form_two_rows);
    timed("index set and diagonal round trips, m+n <= 10", None, round_trips);

    let totals = engine_totals();
    let elapsed = totals.elapsed;
    report("at most one matching hook, m+n <= 12", None, elapsed, at_most_one_match(&totals));
    report("hook multiset remarks, m+n <= 10", None, elapsed, hook_remarks(&totals));
    report("every non-full position has a member predecessor, m+n <= 10", None, elapsed, ascent(&totals));

    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
