//! Staircase feasibility searches.
//!
//! Both searches walk from the top-left corner moving only right or down,
//! comparing each visited entry against a probe value `s`. They answer the
//! question "could `s` be the strict saddlepoint value?" with linear query
//! cost, and [`test_value`] combines them into a four-way verdict.
//!
//! The two walks differ only in tie handling and in which edge means
//! success: the horizontal search moves right on `s >= q` and succeeds by
//! walking off the right edge; the vertical search moves down on `s <= q`
//! and succeeds by walking off the bottom edge.

use std::cmp::Ordering;

use crate::matrix::{Entry, MatrixView};
use crate::value::Value;

/// Which walk produced a [`StaircasePath`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// How a staircase walk halted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchExit {
    Success,
    Failure,
}

/// Trace of one staircase walk.
#[derive(Debug)]
pub struct StaircasePath {
    pub mode: Orientation,
    pub exit: SearchExit,
    /// Position when the walk halted. Exactly one coordinate sits one past
    /// the matrix edge: `col == n` on horizontal success, `row == m` on
    /// horizontal failure, and symmetrically for the vertical walk.
    pub row: usize,
    pub col: usize,
    /// Path positions whose entry compared equal to the probe, in visit
    /// order. Saddlepoint location filters on these: there are at most as
    /// many as the probe value's multiplicity in the matrix.
    pub ties: Vec<(usize, usize)>,
}

impl StaircasePath {
    pub fn succeeded(&self) -> bool {
        self.exit == SearchExit::Success
    }
}

/// Walk right on `s >= q`, down on `s < q`. Succeeds by leaving through the
/// right edge; fails by leaving through the bottom. At most `m + n - 1`
/// queries.
pub fn horizontal_search(view: &MatrixView, s: &Value) -> StaircasePath {
    let (m, n) = (view.rows(), view.cols());
    let (mut i, mut j) = (0usize, 0usize);
    let mut ties = Vec::new();
    while i < m && j < n {
        let q = view.query(i, j);
        match s.cmp(&q) {
            Ordering::Less => i += 1,
            Ordering::Equal => {
                ties.push((i, j));
                j += 1;
            }
            Ordering::Greater => j += 1,
        }
    }
    StaircasePath {
        mode: Orientation::Horizontal,
        exit: if j >= n { SearchExit::Success } else { SearchExit::Failure },
        row: i,
        col: j,
        ties,
    }
}

/// Walk down on `s <= q`, right on `s > q`. Succeeds by leaving through the
/// bottom edge; fails by leaving through the right. At most `m + n - 1`
/// queries.
pub fn vertical_search(view: &MatrixView, s: &Value) -> StaircasePath {
    let (m, n) = (view.rows(), view.cols());
    let (mut i, mut j) = (0usize, 0usize);
    let mut ties = Vec::new();
    while i < m && j < n {
        let q = view.query(i, j);
        match s.cmp(&q) {
            Ordering::Less => i += 1,
            Ordering::Equal => {
                ties.push((i, j));
                i += 1;
            }
            Ordering::Greater => j += 1,
        }
    }
    StaircasePath {
        mode: Orientation::Vertical,
        exit: if i >= m { SearchExit::Success } else { SearchExit::Failure },
        row: i,
        col: j,
        ties,
    }
}

/// Whether entry `(i, j)` is a strict saddlepoint: strictly greater than
/// every other entry of row `i` and strictly smaller than every other entry
/// of column `j`. Performs exactly `m + n - 2` comparisons (no early exit,
/// keeping the budget input-independent).
pub fn verify_ssp_candidate(view: &MatrixView, i: usize, j: usize) -> bool {
    let (m, n) = (view.rows(), view.cols());
    assert!(i < m && j < n, "candidate ({i}, {j}) out of range");
    let center = view.query(i, j);
    let mut ok = true;
    for jj in 0..n {
        if jj != j {
            ok &= center > view.query(i, jj);
        }
    }
    for ii in 0..m {
        if ii != i {
            ok &= center < view.query(ii, j);
        }
    }
    ok
}

/// Four-way feasibility verdict for a probe value.
#[derive(Debug)]
pub enum SearchVerdict {
    /// The strict saddlepoint exists, has value `s`, and sits here (fully
    /// verified against its row and column).
    FoundSsp(Entry),
    /// The matrix has no strict saddlepoint at all.
    NoSsp,
    /// If a strict saddlepoint exists, its value is greater than `s`.
    SspGreater,
    /// If a strict saddlepoint exists, its value is less than `s`.
    SspLess,
}

/// Decide how the probe `s` relates to the (possible) strict saddlepoint:
/// run both staircase searches, and when both succeed verify the crossing
/// candidate (row of the horizontal exit, column of the vertical exit).
/// Consumes at most `3(m + n)` queries.
///
/// Panics if both searches fail; that outcome is impossible for a correct
/// walk, so reaching it means the implementation is broken.
pub fn test_value(view: &MatrixView, s: &Value) -> SearchVerdict {
    let h = horizontal_search(view, s);
    let v = vertical_search(view, s);
    match (h.exit, v.exit) {
        (SearchExit::Failure, SearchExit::Failure) => {
            panic!("both staircase searches failed for one probe; the walk logic is broken")
        }
        (SearchExit::Failure, SearchExit::Success) => SearchVerdict::SspGreater,
        (SearchExit::Success, SearchExit::Failure) => SearchVerdict::SspLess,
        (SearchExit::Success, SearchExit::Success) => {
            let (i, j) = (h.row, v.col);
            if verify_ssp_candidate(view, i, j) {
                SearchVerdict::FoundSsp(Entry { row: i, col: j, value: view.query(i, j) })
            } else {
                SearchVerdict::NoSsp
            }
        }
    }
}
