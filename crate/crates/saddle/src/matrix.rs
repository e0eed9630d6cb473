//! Instrumented read-only matrix views.
//!
//! A [`MatrixView`] is a cheap handle onto a stack of layers over a base
//! matrix:
//!
//! ```text
//! base | reflect | subview | permutation + diagonal overlay
//! ```
//!
//! * `reflect` transposes and order-reverses: `R.query(i, j)` is the
//!   order-reversal wrapper of `A.query(j, i)`, which swaps the roles of
//!   strict row maxima and strict column minima;
//! * `subview` restricts to explicit row/column index sets;
//! * a permutation layer supports in-place row/column swaps plus diagonal
//!   value overlays, the two mutations the transform preprocessing needs.
//!
//! Query and comparison counters live at the root and are shared by every
//! layer stacked above it, so an algorithm's budget can be measured no
//! matter how deep its view tower grows. Reads answered by a diagonal
//! overlay never reach the base and therefore do not consume a query.

use std::sync::{Arc, RwLock};

use crate::value::{Counters, QueryStats, Value};

/// Backing storage for a root matrix: either dense row-major cells or a
/// deterministic generating function (used for instances too large to
/// materialize).
pub enum MatrixData {
    Dense {
        rows: usize,
        cols: usize,
        cells: Vec<f64>,
    },
    Lazy {
        rows: usize,
        cols: usize,
        entry: Box<dyn Fn(usize, usize) -> f64 + Send + Sync>,
    },
}

impl MatrixData {
    /// Dense matrix from row vectors. Panics if the rows are ragged or empty.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> MatrixData {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix needs at least one column");
        let mut cells = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            assert_eq!(row.len(), cols, "ragged rows");
            cells.extend_from_slice(row);
        }
        MatrixData::Dense { rows: rows.len(), cols, cells }.into_checked()
    }

    /// Dense matrix from a flat row-major buffer. Panics if the buffer size
    /// does not match the dimensions or a dimension is zero.
    pub fn from_rows_flat(rows: usize, cols: usize, cells: Vec<f64>) -> MatrixData {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(cells.len(), rows * cols, "cell buffer must hold rows * cols values");
        MatrixData::Dense { rows, cols, cells }.into_checked()
    }

    /// Matrix whose entries are computed on demand by `entry`. The function
    /// must be pure: repeated evaluation at the same coordinates must return
    /// the identical value.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        entry: impl Fn(usize, usize) -> f64 + Send + Sync + 'static,
    ) -> MatrixData {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        MatrixData::Lazy { rows, cols, entry: Box::new(entry) }
    }

    fn into_checked(self) -> MatrixData {
        if let MatrixData::Dense { rows, cols, cells } = self {
            debug_assert_eq!(cells.len(), rows * cols);
            MatrixData::Dense { rows, cols, cells }
        } else {
            self
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            MatrixData::Dense { rows, .. } | MatrixData::Lazy { rows, .. } => *rows,
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            MatrixData::Dense { cols, .. } | MatrixData::Lazy { cols, .. } => *cols,
        }
    }

    /// Raw cell access, uninstrumented. Use a view for counted access.
    pub fn at(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows() && j < self.cols());
        match self {
            MatrixData::Dense { cols, cells, .. } => cells[i * cols + j],
            MatrixData::Lazy { entry, .. } => entry(i, j),
        }
    }
}

impl std::fmt::Debug for MatrixData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixData::Dense { rows, cols, .. } => write!(f, "MatrixData::Dense({rows}x{cols})"),
            MatrixData::Lazy { rows, cols, .. } => write!(f, "MatrixData::Lazy({rows}x{cols})"),
        }
    }
}

/// A located matrix entry: coordinates plus the value read there.
///
/// Solvers report entries in the coordinates of the view the caller handed
/// them; lifting through reflect layers transposes coordinates and restores
/// value polarity, and lifting through an overlay redirects to a base
/// position that genuinely holds the overlaid value.
#[derive(Clone, Debug)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub value: Value,
}

/// The pseudo-saddlepoint interval `[c, r]`: largest column minimum and
/// smallest row maximum. `c <= r` holds for every matrix.
#[derive(Clone, Debug)]
pub struct Interval {
    pub c: Value,
    pub r: Value,
}

impl Interval {
    /// Whether `v` lies in `[c, r]` (inclusive).
    pub fn contains(&self, v: &Value) -> bool {
        self.c <= *v && *v <= self.r
    }
}

struct DiagCell {
    value: Value,
    /// Parent coordinates of a position that genuinely holds `value`,
    /// resolved when the overlay was written. Lifting an entry that was read
    /// from this overlay redirects here.
    anchor: (u32, u32),
}

struct PermState {
    rows: Vec<u32>,
    cols: Vec<u32>,
    diag: Vec<Option<DiagCell>>,
}

enum Node {
    Base {
        data: Arc<MatrixData>,
        counters: Arc<Counters>,
    },
    Reflect {
        parent: MatrixView,
    },
    Sub {
        parent: MatrixView,
        rows: Arc<[u32]>,
        cols: Arc<[u32]>,
    },
    Perm {
        parent: MatrixView,
        state: RwLock<PermState>,
    },
}

/// Instrumented handle onto a (layered) matrix. Cloning shares the layer.
#[derive(Clone)]
pub struct MatrixView {
    node: Arc<Node>,
}

impl MatrixView {
    /// Root view over `data` with fresh counters. Several roots may share
    /// one `MatrixData`; each keeps its own budget.
    pub fn root(data: Arc<MatrixData>) -> MatrixView {
        assert!(data.rows() > 0 && data.cols() > 0);
        assert!(data.rows() <= u32::MAX as usize && data.cols() <= u32::MAX as usize);
        MatrixView {
            node: Arc::new(Node::Base { data, counters: Arc::new(Counters::default()) }),
        }
    }

    /// Convenience root over dense rows (test and fixture friendly).
    pub fn from_rows(rows: Vec<Vec<f64>>) -> MatrixView {
        MatrixView::root(Arc::new(MatrixData::from_rows(rows)))
    }

    pub fn rows(&self) -> usize {
        match &*self.node {
            Node::Base { data, .. } => data.rows(),
            Node::Reflect { parent } => parent.cols(),
            Node::Sub { rows, .. } => rows.len(),
            Node::Perm { parent, .. } => parent.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match &*self.node {
            Node::Base { data, .. } => data.cols(),
            Node::Reflect { parent } => parent.rows(),
            Node::Sub { cols, .. } => cols.len(),
            Node::Perm { parent, .. } => parent.cols(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    fn counters(&self) -> &Arc<Counters> {
        match &*self.node {
            Node::Base { counters, .. } => counters,
            Node::Reflect { parent } | Node::Sub { parent, .. } | Node::Perm { parent, .. } => {
                parent.counters()
            }
        }
    }

    /// Snapshot of the root counters shared by this layer stack.
    pub fn stats(&self) -> QueryStats {
        self.counters().snapshot()
    }

    /// Comparison polarity of values produced by this view: `true` after an
    /// odd number of reflect layers.
    pub(crate) fn polarity(&self) -> bool {
        match &*self.node {
            Node::Base { .. } => false,
            Node::Reflect { parent } => !parent.polarity(),
            Node::Sub { parent, .. } | Node::Perm { parent, .. } => parent.polarity(),
        }
    }

    /// Wrap a raw number as a probe comparable against this view's values.
    pub fn probe(&self, raw: f64) -> Value {
        Value::in_frame(raw, self.polarity(), Some(self.counters().clone()))
    }

    /// Read entry `(i, j)`. Counts one base query unless the read is
    /// answered by a diagonal overlay.
    pub fn query(&self, i: usize, j: usize) -> Value {
        assert!(
            i < self.rows() && j < self.cols(),
            "query ({i}, {j}) out of range for {}x{} view",
            self.rows(),
            self.cols()
        );
        self.fetch(i, j)
    }

    fn fetch(&self, i: usize, j: usize) -> Value {
        match &*self.node {
            Node::Base { data, counters } => {
                counters.bump_query();
                Value::in_frame(data.at(i, j), false, Some(counters.clone()))
            }
            Node::Reflect { parent } => parent.fetch(j, i).flipped(),
            Node::Sub { parent, rows, cols } => {
                parent.fetch(rows[i] as usize, cols[j] as usize)
            }
            Node::Perm { parent, state } => {
                let guard = state.read().unwrap();
                if i == j {
                    if let Some(cell) = &guard.diag[i] {
                        return cell.value.clone();
                    }
                }
                let (pi, pj) = (guard.rows[i] as usize, guard.cols[j] as usize);
                drop(guard);
                parent.fetch(pi, pj)
            }
        }
    }

    /// Uninstrumented-by-value read used by the oracle: still counts the
    /// query but skips `Value` construction. Polarity is *not* applied; the
    /// caller pairs this with [`MatrixView::polarity`].
    pub(crate) fn query_key(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows() && j < self.cols());
        match &*self.node {
            Node::Base { data, counters } => {
                counters.bump_query();
                data.at(i, j)
            }
            Node::Reflect { parent } => parent.query_key(j, i),
            Node::Sub { parent, rows, cols } => {
                parent.query_key(rows[i] as usize, cols[j] as usize)
            }
            Node::Perm { parent, state } => {
                let guard = state.read().unwrap();
                if i == j {
                    if let Some(cell) = &guard.diag[i] {
                        return cell.value.raw();
                    }
                }
                let (pi, pj) = (guard.rows[i] as usize, guard.cols[j] as usize);
                drop(guard);
                parent.query_key(pi, pj)
            }
        }
    }

    /// Transposed, order-reversed view of the same data.
    pub fn reflect(&self) -> MatrixView {
        MatrixView { node: Arc::new(Node::Reflect { parent: self.clone() }) }
    }

    /// Restriction to the given row and column index sets (parent
    /// coordinates, kept in the order given). Panics when a set is empty or
    /// out of range.
    pub fn subview(&self, rows: &[usize], cols: &[usize]) -> MatrixView {
        assert!(!rows.is_empty() && !cols.is_empty(), "subview needs non-empty index sets");
        let (m, n) = (self.rows(), self.cols());
        let rows: Arc<[u32]> = rows
            .iter()
            .map(|&r| {
                assert!(r < m, "subview row {r} out of range");
                r as u32
            })
            .collect();
        let cols: Arc<[u32]> = cols
            .iter()
            .map(|&c| {
                assert!(c < n, "subview col {c} out of range");
                c as u32
            })
            .collect();
        MatrixView { node: Arc::new(Node::Sub { parent: self.clone(), rows, cols }) }
    }

    /// A fresh permutation layer (identity maps, no overlays) over this
    /// view. This is the only layer kind that accepts `swap_rows`,
    /// `swap_cols` and `overlay_diagonal`.
    pub fn permutation_layer(&self) -> MatrixView {
        let state = PermState {
            rows: (0..self.rows() as u32).collect(),
            cols: (0..self.cols() as u32).collect(),
            diag: (0..self.rows().min(self.cols())).map(|_| None).collect(),
        };
        MatrixView {
            node: Arc::new(Node::Perm { parent: self.clone(), state: RwLock::new(state) }),
        }
    }

    fn perm_state(&self) -> &RwLock<PermState> {
        match &*self.node {
            Node::Perm { state, .. } => state,
            _ => panic!("operation requires a permutation layer"),
        }
    }

    pub(crate) fn is_permutation_layer(&self) -> bool {
        matches!(&*self.node, Node::Perm { .. })
    }

    /// Exchange rows `a` and `b`. Only valid on a permutation layer.
    pub fn swap_rows(&self, a: usize, b: usize) {
        assert!(a < self.rows() && b < self.rows(), "swap_rows out of range");
        if a != b {
            self.perm_state().write().unwrap().rows.swap(a, b);
        }
    }

    /// Exchange columns `a` and `b`. Only valid on a permutation layer.
    pub fn swap_cols(&self, a: usize, b: usize) {
        assert!(a < self.cols() && b < self.cols(), "swap_cols out of range");
        if a != b {
            self.perm_state().write().unwrap().cols.swap(a, b);
        }
    }

    /// Overwrite the reading of diagonal position `(i, i)` with `v`.
    /// Subsequent reads of `(i, i)` return `v` without consuming a query.
    /// Overlay lookups take precedence over the permutation maps of this
    /// layer; positions written here and untouched by later swaps keep
    /// returning `v`.
    pub fn overlay_diagonal(&self, i: usize, v: Value) {
        let anchor = self.permuted_target(i, i);
        self.overlay_diagonal_anchored(i, v, anchor);
    }

    /// Like [`MatrixView::overlay_diagonal`], but records `anchor` (parent
    /// coordinates known to hold `v`) so entries read from the overlay lift
    /// to a genuine position.
    pub(crate) fn overlay_diagonal_anchored(&self, i: usize, v: Value, anchor: (usize, usize)) {
        assert!(self.is_square(), "diagonal overlay requires a square view");
        assert!(i < self.rows(), "overlay_diagonal out of range");
        let mut guard = self.perm_state().write().unwrap();
        guard.diag[i] = Some(DiagCell { value: v, anchor: (anchor.0 as u32, anchor.1 as u32) });
    }

    /// Current parent coordinates behind position `(i, j)` of a permutation
    /// layer, ignoring overlays.
    pub(crate) fn permuted_target(&self, i: usize, j: usize) -> (usize, usize) {
        let guard = self.perm_state().read().unwrap();
        (guard.rows[i] as usize, guard.cols[j] as usize)
    }

    /// Translate an entry of this view into the parent layer's coordinates.
    /// Identity on a root view. An entry read from a diagonal overlay is
    /// redirected to the anchor recorded at overlay time, so the resulting
    /// coordinates genuinely hold the entry's value in the parent.
    pub fn lift_entry(&self, e: Entry) -> Entry {
        match &*self.node {
            Node::Base { .. } => e,
            Node::Reflect { .. } => Entry { row: e.col, col: e.row, value: e.value.flipped() },
            Node::Sub { rows, cols, .. } => Entry {
                row: rows[e.row] as usize,
                col: cols[e.col] as usize,
                value: e.value,
            },
            Node::Perm { state, .. } => {
                let guard = state.read().unwrap();
                if e.row == e.col {
                    if let Some(cell) = &guard.diag[e.row] {
                        if cell.value.raw().total_cmp(&e.value.raw()).is_eq() {
                            return Entry {
                                row: cell.anchor.0 as usize,
                                col: cell.anchor.1 as usize,
                                value: e.value,
                            };
                        }
                    }
                }
                Entry {
                    row: guard.rows[e.row] as usize,
                    col: guard.cols[e.col] as usize,
                    value: e.value,
                }
            }
        }
    }

    /// Translate an entry of this view all the way to root coordinates.
    pub fn entry_to_root(&self, e: Entry) -> Entry {
        let mut cur = self.clone();
        let mut e = e;
        loop {
            e = cur.lift_entry(e);
            let parent = match &*cur.node {
                Node::Base { .. } => break,
                Node::Reflect { parent }
                | Node::Sub { parent, .. }
                | Node::Perm { parent, .. } => parent.clone(),
            };
            cur = parent;
        }
        e
    }
}

impl std::fmt::Debug for MatrixView {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match &*self.node {
            Node::Base { .. } => "base",
            Node::Reflect { .. } => "reflect",
            Node::Sub { .. } => "sub",
            Node::Perm { .. } => "perm",
        };
        write!(f, "MatrixView<{kind} {}x{}>", self.rows(), self.cols())
    }
}
