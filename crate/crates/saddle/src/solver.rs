//! User-facing front end: strict-saddlepoint decision, PSP computation,
//! saddlepoint value under an existence assumption, and saddlepoint
//! location for a known value.
//!
//! The main path computes a pseudo-saddlepoint value `s` (every PSP shares
//! the strict saddlepoint's value when one exists) and then runs the
//! staircase feasibility test on `s`: a verified hit is the strict
//! saddlepoint, anything else proves there is none.

use std::time::{Duration, Instant};

use crate::alternating::ssp_alternative;
use crate::heap::psp_baseline;
use crate::matrix::{Entry, MatrixView};
use crate::recursive::{psp_rect_with, psp_square_fast, psp_square_simple};
use crate::staircase::{horizontal_search, test_value, SearchVerdict};
use crate::value::Value;

/// Which pseudo-saddlepoint engine backs the solve.
///
/// `Alternative` is a square-only strict-saddlepoint procedure; on
/// rectangular inputs (and for PSP queries) it falls back to the `Auto`
/// pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    /// Default: the transform-accelerated recursion on square chunks.
    Auto,
    /// Two-ended diagonal reduction only.
    Baseline,
    /// Block recursion without the transform preprocessing.
    Simple,
    /// Transform-accelerated block recursion (same as `Auto`).
    Fast,
    /// Alternating elimination (square strict-saddlepoint decision).
    Alternative,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Baseline => "baseline",
            Algo::Simple => "simple",
            Algo::Fast => "fast",
            Algo::Alternative => "alternative",
        }
    }

    /// All selectors, for benchmarking loops.
    pub fn all() -> [Algo; 5] {
        [Algo::Auto, Algo::Baseline, Algo::Simple, Algo::Fast, Algo::Alternative]
    }
}

/// Unrecognized algorithm selector name.
#[derive(Debug, thiserror::Error)]
#[error("unknown algorithm `{0}` (expected auto, baseline, simple, fast, or alt)")]
pub struct ParseAlgoError(String);

impl std::str::FromStr for Algo {
    type Err = ParseAlgoError;

    fn from_str(s: &str) -> Result<Algo, ParseAlgoError> {
        match s {
            "auto" => Ok(Algo::Auto),
            "baseline" => Ok(Algo::Baseline),
            "simple" => Ok(Algo::Simple),
            "fast" => Ok(Algo::Fast),
            "alt" | "alternative" => Ok(Algo::Alternative),
            other => Err(ParseAlgoError(other.to_string())),
        }
    }
}

/// Result of the strict-saddlepoint decision.
#[derive(Debug)]
pub enum SspOutcome {
    /// The strict saddlepoint; the entry passed full row/column strict
    /// verification on the queried matrix.
    Found(Entry),
    /// The matrix provably has no strict saddlepoint.
    Absent,
}

/// Cost accounting for one solve, taken from the root counters.
#[derive(Clone, Debug)]
pub struct SolveStats {
    pub queries: u64,
    pub comparisons: u64,
    pub elapsed: Duration,
    pub algo: &'static str,
    pub rows: usize,
    pub cols: usize,
}

fn measured<T>(view: &MatrixView, algo: Algo, run: impl FnOnce() -> T) -> (T, SolveStats) {
    let before = view.stats();
    let start = Instant::now();
    let out = run();
    let elapsed = start.elapsed();
    let used = view.stats().since(before);
    (
        out,
        SolveStats {
            queries: used.queries,
            comparisons: used.comparisons,
            elapsed,
            algo: algo.name(),
            rows: view.rows(),
            cols: view.cols(),
        },
    )
}

fn square_core(algo: Algo) -> fn(&MatrixView) -> Entry {
    match algo {
        Algo::Baseline => psp_baseline,
        Algo::Simple => psp_square_simple,
        Algo::Auto | Algo::Fast | Algo::Alternative => psp_square_fast,
    }
}

/// The default decision pipeline: rectangular PSP, then the feasibility
/// test on its value.
pub(crate) fn main_path(view: &MatrixView) -> SspOutcome {
    main_path_with(view, Algo::Auto)
}

fn main_path_with(view: &MatrixView, algo: Algo) -> SspOutcome {
    let core = square_core(algo);
    let psp = psp_rect_with(view, &core);
    match test_value(view, &psp.value) {
        SearchVerdict::FoundSsp(e) => SspOutcome::Found(e),
        // Any other verdict is conclusive: if a strict saddlepoint
        // existed, its value would equal every PSP value, including this
        // one, and the test would have certified it.
        _ => SspOutcome::Absent,
    }
}

/// Decide whether the matrix has a strict saddlepoint and locate it if so.
pub fn find_ssp(view: &MatrixView, algo: Algo) -> (SspOutcome, SolveStats) {
    measured(view, algo, || match algo {
        Algo::Alternative if view.is_square() => ssp_alternative(view),
        _ => main_path_with(view, algo),
    })
}

/// Compute a pseudo-saddlepoint entry with the selected engine
/// (`Alternative` has no PSP pipeline and uses the default).
pub fn find_psp(view: &MatrixView, algo: Algo) -> (Entry, SolveStats) {
    measured(view, algo, || {
        let core = square_core(algo);
        psp_rect_with(view, &core)
    })
}

/// The saddlepoint value, **assuming the matrix has a saddlepoint**. Under
/// that assumption every pseudo-saddlepoint carries the saddlepoint value,
/// so this returns a PSP value without verifying the assumption (checking
/// it would force reading the whole matrix). If the assumption is false
/// the result is still some PSP value, but it means nothing more.
pub fn sp_value_assuming_exists(view: &MatrixView) -> (Value, SolveStats) {
    measured(view, Algo::Auto, || psp_rect_with(view, &square_core(Algo::Auto)).value)
}

/// All saddlepoints of value `s` discoverable through the staircase
/// column filter, fully verified (weak row-maximum and column-minimum).
///
/// Precondition: `s` is the matrix's saddlepoint value (for example from
/// [`sp_value_assuming_exists`]). Then the horizontal walk necessarily
/// succeeds and every saddlepoint's column shows up as a tie on the path,
/// so the result is non-empty and complete for the filtered columns. An
/// empty result signals the precondition was violated. With `k` the
/// multiplicity of `s` in the matrix, the cost beyond the walk is at most
/// `k` column scans plus `k` verifications: `O(k (m + n))` queries.
pub fn locate_sp(view: &MatrixView, s: &Value) -> Vec<Entry> {
    let (m, n) = (view.rows(), view.cols());
    let walk = horizontal_search(view, s);
    if !walk.succeeded() {
        return Vec::new();
    }
    let mut cols: Vec<usize> = walk.ties.iter().map(|&(_, j)| j).collect();
    cols.dedup();
    let mut found = Vec::new();
    for &j in &cols {
        for i in 0..m {
            let q = view.query(i, j);
            if q == *s && is_weak_sp(view, i, j, &q, m, n) {
                found.push(Entry { row: i, col: j, value: q });
            }
        }
    }
    found.sort_by_key(|e| (e.row, e.col));
    found
}

fn is_weak_sp(view: &MatrixView, i: usize, j: usize, center: &Value, m: usize, n: usize) -> bool {
    (0..n).all(|jj| *center >= view.query(i, jj)) && (0..m).all(|ii| *center <= view.query(ii, j))
}
