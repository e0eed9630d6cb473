//! Two-ended reduction: the baseline pseudo-saddlepoint algorithm.
//!
//! The algorithm maintains a set `H` of (row, column, value) triplets with
//! three properties:
//!
//! * **P1** — at most one triplet per row and per column;
//! * **P2** — every row absent from `H` holds an entry at least as large as
//!   the maximum value in `H`;
//! * **P3** — every column absent from `H` holds an entry at most as small
//!   as the minimum value in `H`.
//!
//! Starting from the main diagonal of an `n x n` matrix, each
//! [`reduce_step`] queries a single new entry and shrinks `H` by one while
//! preserving P1–P3. The lone survivor is a pseudo-saddlepoint, found with
//! at most `2n - 1` base queries.

use std::collections::BTreeSet;

use crate::matrix::{Entry, MatrixView};
use crate::value::Value;

/// One active cell: a position together with the value read there.
#[derive(Clone, Debug)]
pub struct Triplet {
    pub row: usize,
    pub col: usize,
    pub value: Value,
}

/// Set key: value first (counted comparison), then (row, col) so ordering
/// is total and runs are reproducible.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct SetKey {
    value: Value,
    row: u32,
    col: u32,
}

impl SetKey {
    fn to_triplet(&self) -> Triplet {
        Triplet { row: self.row as usize, col: self.col as usize, value: self.value.clone() }
    }
}

/// Ordered collection of triplets with min and max access. Construction
/// enforces P1 (distinct rows, distinct columns); the reduce step preserves
/// it because the position it inserts reuses a row and a column it just
/// freed.
pub struct ActiveSet {
    inner: BTreeSet<SetKey>,
}

impl ActiveSet {
    /// Build from caller-supplied triplets. Panics when two triplets share
    /// a row or a column (P1) or when the input is empty.
    pub fn from_triplets(triplets: impl IntoIterator<Item = Triplet>) -> ActiveSet {
        let mut inner = BTreeSet::new();
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        for t in triplets {
            assert!(rows.insert(t.row), "two active triplets share row {}", t.row);
            assert!(cols.insert(t.col), "two active triplets share column {}", t.col);
            inner.insert(SetKey { value: t.value, row: t.row as u32, col: t.col as u32 });
        }
        assert!(!inner.is_empty(), "active set needs at least one triplet");
        ActiveSet { inner }
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn peek_min(&self) -> Triplet {
        self.inner.first().expect("active set is never empty").to_triplet()
    }

    pub fn peek_max(&self) -> Triplet {
        self.inner.last().expect("active set is never empty").to_triplet()
    }

    fn delete_min(&mut self) {
        self.inner.pop_first();
    }

    fn delete_max(&mut self) {
        self.inner.pop_last();
    }

    fn insert(&mut self, t: Triplet) {
        self.inner.insert(SetKey { value: t.value, row: t.row as u32, col: t.col as u32 });
    }

    /// Current triplets in ascending order (test and debug helper).
    pub fn triplets(&self) -> Vec<Triplet> {
        self.inner.iter().map(SetKey::to_triplet).collect()
    }
}

impl std::fmt::Debug for ActiveSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries(self.triplets().iter().map(|t| (t.row, t.col, t.value.raw())))
            .finish()
    }
}

/// One reduction: query the entry at (min triplet's row, max triplet's
/// column) and drop one or two triplets accordingly. Requires `|H| >= 2`;
/// shrinks `H` by exactly one and costs exactly one query.
///
/// Ties route to the first applicable case: `x <= v_min` drops the max,
/// else `x >= v_max` drops the min, else both go and `(row_min, col_max,
/// x)` enters.
pub fn reduce_step(h: &mut ActiveSet, view: &MatrixView) {
    reduce_step_with(h, &mut |i, j| view.query(i, j))
}

/// [`reduce_step`] over an arbitrary entry source, so the recursive solvers
/// can reduce virtual matrices whose entries are computed on demand.
pub fn reduce_step_with(h: &mut ActiveSet, fetch: &mut dyn FnMut(usize, usize) -> Value) {
    assert!(h.len() >= 2, "reduce step needs at least two active triplets");
    let min = h.peek_min();
    let max = h.peek_max();
    let x = fetch(min.row, max.col);
    if x <= min.value {
        h.delete_max();
    } else if x >= max.value {
        h.delete_min();
    } else {
        h.delete_min();
        h.delete_max();
        h.insert(Triplet { row: min.row, col: max.col, value: x });
    }
}

/// Reduce caller-supplied triplets (P1: distinct rows and columns) to the
/// lone survivor. Costs exactly `len - 1` fetches beyond the initial
/// values.
pub fn reduce_to_survivor(
    triplets: impl IntoIterator<Item = Triplet>,
    fetch: &mut dyn FnMut(usize, usize) -> Value,
) -> Triplet {
    let mut h = ActiveSet::from_triplets(triplets);
    while h.len() > 1 {
        reduce_step_with(&mut h, fetch);
    }
    h.peek_min()
}

/// Find a pseudo-saddlepoint of a square view: seed `H` with the main
/// diagonal and reduce to the survivor. At most `2n - 1` base queries.
pub fn psp_baseline(view: &MatrixView) -> Entry {
    assert!(
        view.is_square(),
        "the diagonal reduction needs a square view; rectangles are chunked by the caller"
    );
    let n = view.rows();
    let diag = (0..n).map(|i| Triplet { row: i, col: i, value: view.query(i, i) });
    let survivor = reduce_to_survivor(diag.collect::<Vec<_>>(), &mut |i, j| view.query(i, j));
    Entry { row: survivor.row, col: survivor.col, value: survivor.value }
}
