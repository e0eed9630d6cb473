//! Block-recursive pseudo-saddlepoint solvers.
//!
//! Both square solvers shrink an `n x n` problem to a virtual
//! `ceil(n/l) x ceil(n/l)` matrix `A'` with `l = ceil(lg n)`: entry
//! `A'[I][J]` is a pseudo-saddlepoint value of the `l x l` block at block
//! coordinates `(I, J)`, computed on demand and memoized. Any PSP of `A'`
//! is a PSP of the original matrix, so reducing `A'` with the two-ended
//! baseline finishes the job.
//!
//! * [`psp_square_simple`] recurses into every requested block.
//! * [`psp_square_fast`] first runs the [`transform`] preprocessing, which
//!   permutes rows/columns and overlays median values onto the diagonal so
//!   that most *diagonal* blocks expose a uniform diagonal; those report a
//!   PSP for free, and the reduction of `A'` needs only `ceil(n/l) - 1`
//!   recursive block solves.
//! * [`psp_rect`] reduces an `m x n` rectangle to `ceil(m/n)` square
//!   chunks (reflecting first when `m < n`) and keeps the chunk PSP with
//!   the minimum value.

use std::collections::HashMap;
use std::ops::Range;

use crate::heap::{psp_baseline, reduce_to_survivor, Triplet};
use crate::matrix::{Entry, MatrixView};
use crate::select::{ceil_lg, partition_three_way, select_rank};
use crate::value::Value;

/// Below this side length the blocked recursion has no benefit and the
/// two-ended baseline runs directly.
pub const BASE_CUTOFF: usize = 64;

/// Equal-length index intervals covering `[0, n)`, each of side
/// `ceil(lg n)`; only the last may overlap its predecessor (when the side
/// does not divide `n`, it is pinned to `[n - side, n)`).
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    side: usize,
    starts: Vec<usize>,
}

impl BlockDecomposition {
    pub fn new(n: usize) -> BlockDecomposition {
        assert!(n >= 1);
        let side = (ceil_lg(n) as usize).max(1);
        let mut starts: Vec<usize> = (0..n / side).map(|i| i * side).collect();
        if n % side != 0 {
            starts.push(n - side);
        }
        BlockDecomposition { side, starts }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn count(&self) -> usize {
        self.starts.len()
    }

    /// Index interval of block `i`.
    pub fn interval(&self, i: usize) -> Range<usize> {
        let s = self.starts[i];
        s..s + self.side
    }
}

/// One uniform stretch of the transformed diagonal: positions
/// `[start, end)` all read `value`.
#[derive(Clone, Debug)]
pub struct DiagSection {
    pub start: usize,
    pub end: usize,
    pub value: Value,
}

/// Outcome of [`transform`]: the uniform diagonal sections written (top to
/// bottom) and the start of the untouched suffix.
#[derive(Debug)]
pub struct TransformState {
    pub sections: Vec<DiagSection>,
    pub tail_start: usize,
}

impl TransformState {
    /// The section value covering all of `range`, if one section does.
    pub fn uniform_value(&self, range: Range<usize>) -> Option<Value> {
        self.sections
            .iter()
            .find(|s| s.start <= range.start && range.end <= s.end)
            .map(|s| s.value.clone())
    }
}

/// Diagonal-uniformizing preprocessing. Repeatedly: take the current
/// trailing quadrant `[lo, n)^2` (stop once its side is at most `t`), read
/// its antidiagonal, select the median `v`, partition the antidiagonal
/// around `v` by paired row/column swaps (so the quadrant stays a
/// row/column permutation of the original), and overlay `v` onto the first
/// `ceil(size/2)` diagonal positions of the quadrant. The overlaid prefix
/// becomes one uniform section; recursion continues on the rest.
///
/// The layer must be a fresh permutation layer over a square view. Query
/// cost: one read per antidiagonal cell, at most `2n` in total. The
/// transformed matrix's PSP interval is contained in the original's, so
/// any PSP found on the layer is (after lifting) a PSP of the original.
pub fn transform(layer: &MatrixView, t: usize) -> TransformState {
    assert!(layer.is_permutation_layer(), "transform mutates a permutation layer");
    assert!(layer.is_square(), "transform needs a square view");
    let n = layer.rows();
    let hi = n - 1;
    let mut sections = Vec::new();
    let mut lo = 0usize;
    loop {
        let size = n - lo;
        if size <= t {
            break;
        }
        // Quadrant antidiagonal position p sits at (hi - p, lo + p).
        let mut vals: Vec<Value> = (0..size).map(|p| layer.query(hi - p, lo + p)).collect();
        let k0 = size.div_ceil(2) - 1;
        let pivot = select_rank(&vals, k0 + 1);
        partition_three_way(
            &mut vals,
            |v| v.cmp(&pivot),
            |p, q| {
                layer.swap_rows(hi - p, hi - q);
                layer.swap_cols(lo + p, lo + q);
            },
        );
        // Position k0 now holds the pivot. Resolve its underlying
        // coordinates before any later level can swap them away: they are
        // a stable location that genuinely holds the pivot value.
        let anchor = layer.permuted_target(hi - k0, lo + k0);
        for d in lo..=lo + k0 {
            layer.overlay_diagonal_anchored(d, pivot.clone(), anchor);
        }
        sections.push(DiagSection { start: lo, end: lo + k0 + 1, value: pivot });
        lo += k0 + 1;
    }
    TransformState { sections, tail_start: lo }
}

enum Core {
    Simple,
    Fast,
}

/// Memoizing block solver: materializes entries of the virtual matrix
/// `A'` by solving the corresponding block of `view`, keeping the located
/// entry (in `view` coordinates) for the final translation.
struct BlockSolver<'v> {
    view: &'v MatrixView,
    blocks: BlockDecomposition,
    memo: HashMap<(usize, usize), Entry>,
    core: Core,
    depth_limit: Option<u32>,
}

impl BlockSolver<'_> {
    fn entry(&mut self, bi: usize, bj: usize) -> Entry {
        if let Some(e) = self.memo.get(&(bi, bj)) {
            return e.clone();
        }
        let rows: Vec<usize> = self.blocks.interval(bi).collect();
        let cols: Vec<usize> = self.blocks.interval(bj).collect();
        let sub = self.view.subview(&rows, &cols);
        let inner = match self.core {
            Core::Simple => psp_square_simple_bounded(&sub, self.depth_limit),
            Core::Fast => psp_square_fast_bounded(&sub, self.depth_limit),
        };
        let lifted = sub.lift_entry(inner);
        self.memo.insert((bi, bj), lifted.clone());
        lifted
    }

    fn seed(&mut self, bi: usize) -> Triplet {
        let e = self.entry(bi, bi);
        Triplet { row: bi, col: bi, value: e.value }
    }

    fn record(&mut self, bi: usize, e: Entry) -> Triplet {
        let value = e.value.clone();
        self.memo.insert((bi, bi), e);
        Triplet { row: bi, col: bi, value }
    }
}

/// Reduce the virtual matrix seeded with `seeds` and translate the
/// survivor back to an entry of `solver.view`.
fn reduce_blocks(solver: &mut BlockSolver<'_>, seeds: Vec<Triplet>) -> Entry {
    let survivor = reduce_to_survivor(seeds, &mut |i, j| solver.entry(i, j).value);
    solver.memo[&(survivor.row, survivor.col)].clone()
}

/// Pseudo-saddlepoint of a square view by plain block recursion: all
/// `2*ceil(n/l) - 1` materialized blocks recurse, giving
/// `O(n * 2^(lg* n))` base queries overall.
pub fn psp_square_simple(view: &MatrixView) -> Entry {
    psp_square_simple_bounded(view, None)
}

/// [`psp_square_simple`] with an optional recursion-depth limit: at depth
/// 0 blocks are solved by the baseline instead of recursing. Shallower
/// recursion trades queries for simplicity; no budget is asserted for
/// limited depths.
pub fn psp_square_simple_bounded(view: &MatrixView, depth_limit: Option<u32>) -> Entry {
    assert!(view.is_square(), "square solver on a {}x{} view", view.rows(), view.cols());
    let n = view.rows();
    if n <= BASE_CUTOFF || depth_limit == Some(0) {
        return psp_baseline(view);
    }
    let mut solver = BlockSolver {
        view,
        blocks: BlockDecomposition::new(n),
        memo: HashMap::new(),
        core: Core::Simple,
        depth_limit: depth_limit.map(|d| d - 1),
    };
    let seeds: Vec<Triplet> = (0..solver.blocks.count()).map(|i| solver.seed(i)).collect();
    reduce_blocks(&mut solver, seeds)
}

/// Pseudo-saddlepoint of a square view in `O(n lg* n)` base queries:
/// transform first, then seed the block reduction with diagonal-box PSPs
/// (free where the transformed diagonal is uniform across the box, the
/// baseline on the few boxes it is not), and recurse only on the
/// `ceil(n/l) - 1` off-diagonal blocks the reduction actually requests.
pub fn psp_square_fast(view: &MatrixView) -> Entry {
    psp_square_fast_bounded(view, None)
}

/// [`psp_square_fast`] with the same optional depth limit as
/// [`psp_square_simple_bounded`].
pub fn psp_square_fast_bounded(view: &MatrixView, depth_limit: Option<u32>) -> Entry {
    assert!(view.is_square(), "square solver on a {}x{} view", view.rows(), view.cols());
    let n = view.rows();
    if n <= BASE_CUTOFF || depth_limit == Some(0) {
        return psp_baseline(view);
    }
    let layer = view.permutation_layer();
    let state = transform(&layer, 2 * ceil_lg(n) as usize);
    let mut solver = BlockSolver {
        view: &layer,
        blocks: BlockDecomposition::new(n),
        memo: HashMap::new(),
        core: Core::Fast,
        depth_limit: depth_limit.map(|d| d - 1),
    };
    let seeds: Vec<Triplet> = (0..solver.blocks.count())
        .map(|i| {
            let range = solver.blocks.interval(i);
            match state.uniform_value(range.clone()) {
                // The whole box diagonal reads one overlaid value, which is
                // therefore a PSP of the box; the overlay cell itself is a
                // zero-query witness entry.
                Some(v) => solver.record(
                    i,
                    Entry { row: range.start, col: range.start, value: v },
                ),
                None => {
                    let rows: Vec<usize> = range.collect();
                    let sub = layer.subview(&rows, &rows);
                    let e = sub.lift_entry(psp_baseline(&sub));
                    solver.record(i, e)
                }
            }
        })
        .collect();
    let on_layer = reduce_blocks(&mut solver, seeds);
    layer.lift_entry(on_layer)
}

/// Pseudo-saddlepoint of an arbitrary `m x n` view using
/// [`psp_square_fast`] on square chunks.
pub fn psp_rect(view: &MatrixView) -> Entry {
    psp_rect_with(view, &psp_square_fast)
}

/// [`psp_rect`] with a caller-chosen square core. Wide matrices are
/// reflected (tall in the reversed order) and the result lifted back; tall
/// matrices are cut into `ceil(m/n)` square row chunks (the last pinned to
/// the bottom edge) and the chunk PSP with the minimum value wins, ties to
/// the earliest chunk.
pub fn psp_rect_with(view: &MatrixView, core: &dyn Fn(&MatrixView) -> Entry) -> Entry {
    let (m, n) = (view.rows(), view.cols());
    if m < n {
        let refl = view.reflect();
        let e = psp_rect_with(&refl, core);
        return refl.lift_entry(e);
    }
    if m == n {
        return core(view);
    }
    let all_cols: Vec<usize> = (0..n).collect();
    let mut starts: Vec<usize> = (0..m / n).map(|i| i * n).collect();
    if m % n != 0 {
        starts.push(m - n);
    }
    let mut best: Option<Entry> = None;
    for &s in &starts {
        let rows: Vec<usize> = (s..s + n).collect();
        let sub = view.subview(&rows, &all_cols);
        let e = sub.lift_entry(core(&sub));
        best = match best {
            Some(b) if b.value <= e.value => Some(b),
            _ => Some(e),
        };
    }
    best.expect("at least one chunk")
}
