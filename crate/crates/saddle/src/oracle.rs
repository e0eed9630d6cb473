//! Brute-force reference implementations.
//!
//! Everything here reads every entry of the matrix. These routines exist to
//! check the sublinear algorithms against ground truth on instances small
//! enough to scan, not to be fast. [`oracle_scan`] materializes the matrix
//! (`m * n` floats); [`verify_psp`] streams and keeps O(1) state.
//!
//! All order decisions respect the view's polarity, so the oracle is equally
//! valid on reflected views (where "row maximum" means the reversed order's
//! maximum).

use std::cmp::Ordering;

use crate::matrix::{Entry, Interval, MatrixView};

/// Ground truth for one matrix, produced by [`oracle_scan`].
#[derive(Debug)]
pub struct OracleReport {
    /// The pseudo-saddlepoint interval `[c, r]` (largest column minimum,
    /// smallest row maximum).
    pub interval: Interval,
    /// Every entry whose value lies in `[c, r]`, in row-major order.
    pub psp_entries: Vec<Entry>,
    /// Every (weak) saddlepoint: a maximum of its row and a minimum of its
    /// column, ties allowed. Row-major order.
    pub sp_entries: Vec<Entry>,
    /// The strict saddlepoint, if one exists: the unique strict maximum of
    /// its row and unique strict minimum of its column. A matrix has at most
    /// one.
    pub ssp: Option<Entry>,
}

/// One full read of the matrix plus the comparator matching the view's
/// polarity.
struct RawScan {
    m: usize,
    n: usize,
    cells: Vec<f64>,
    rev: bool,
}

impl RawScan {
    fn read(view: &MatrixView) -> RawScan {
        let (m, n) = (view.rows(), view.cols());
        let mut cells = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                cells.push(view.query_key(i, j));
            }
        }
        RawScan { m, n, cells, rev: view.polarity() }
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        self.cells[i * self.n + j]
    }

    fn cmp(&self, a: f64, b: f64) -> Ordering {
        let o = a.total_cmp(&b);
        if self.rev {
            o.reverse()
        } else {
            o
        }
    }
}

/// Scan the whole matrix and report the pseudo-saddlepoint interval, all
/// entries inside it, all weak saddlepoints, and the strict saddlepoint if
/// one exists. Costs exactly `rows * cols` queries.
pub fn oracle_scan(view: &MatrixView) -> OracleReport {
    let scan = RawScan::read(view);
    let (m, n) = (scan.m, scan.n);

    // Row maxima and column minima, with multiplicity so strictness (a
    // unique extremum) is detectable.
    let mut row_max: Vec<(f64, usize)> = Vec::with_capacity(m);
    for i in 0..m {
        let mut best = scan.at(i, 0);
        let mut hits = 1usize;
        for j in 1..n {
            let v = scan.at(i, j);
            match scan.cmp(v, best) {
                Ordering::Greater => {
                    best = v;
                    hits = 1;
                }
                Ordering::Equal => hits += 1,
                Ordering::Less => {}
            }
        }
        row_max.push((best, hits));
    }
    let mut col_min: Vec<(f64, usize)> = Vec::with_capacity(n);
    for j in 0..n {
        let mut best = scan.at(0, j);
        let mut hits = 1usize;
        for i in 1..m {
            let v = scan.at(i, j);
            match scan.cmp(v, best) {
                Ordering::Less => {
                    best = v;
                    hits = 1;
                }
                Ordering::Equal => hits += 1,
                Ordering::Greater => {}
            }
        }
        col_min.push((best, hits));
    }

    let r = row_max
        .iter()
        .map(|&(v, _)| v)
        .reduce(|a, b| if scan.cmp(b, a) == Ordering::Less { b } else { a })
        .expect("matrix is non-empty");
    let c = col_min
        .iter()
        .map(|&(v, _)| v)
        .reduce(|a, b| if scan.cmp(b, a) == Ordering::Greater { b } else { a })
        .expect("matrix is non-empty");
    assert!(
        scan.cmp(c, r) != Ordering::Greater,
        "largest column minimum exceeds smallest row maximum; the scan is broken"
    );

    let entry = |i: usize, j: usize| Entry { row: i, col: j, value: view.probe(scan.at(i, j)) };

    let mut psp_entries = Vec::new();
    let mut sp_entries = Vec::new();
    let mut ssp: Option<Entry> = None;
    for i in 0..m {
        for j in 0..n {
            let v = scan.at(i, j);
            if scan.cmp(v, c) != Ordering::Less && scan.cmp(v, r) != Ordering::Greater {
                psp_entries.push(entry(i, j));
            }
            let is_row_max = scan.cmp(v, row_max[i].0) == Ordering::Equal;
            let is_col_min = scan.cmp(v, col_min[j].0) == Ordering::Equal;
            if is_row_max && is_col_min {
                sp_entries.push(entry(i, j));
                if row_max[i].1 == 1 && col_min[j].1 == 1 {
                    assert!(ssp.is_none(), "two strict saddlepoints cannot coexist");
                    ssp = Some(entry(i, j));
                }
            }
        }
    }

    OracleReport {
        interval: Interval { c: view.probe(c), r: view.probe(r) },
        psp_entries,
        sp_entries,
        ssp,
    }
}

/// All weak saddlepoints of the matrix, row-major: entries that are maxima
/// of their row and minima of their column, ties allowed.
pub fn quadratic_sp(view: &MatrixView) -> Vec<Entry> {
    oracle_scan(view).sp_entries
}

/// Check a claimed pseudo-saddlepoint by full scan: the entry's coordinates
/// must genuinely hold its value, and that value must lie in the
/// pseudo-saddlepoint interval. Streams the matrix without storing it.
pub fn verify_psp(view: &MatrixView, e: &Entry) -> bool {
    let (m, n) = (view.rows(), view.cols());
    if e.row >= m || e.col >= n {
        return false;
    }
    let rev = view.polarity();
    let cmp = move |a: f64, b: f64| {
        let o = a.total_cmp(&b);
        if rev {
            o.reverse()
        } else {
            o
        }
    };
    let claimed = e.value.raw();
    if view.query_key(e.row, e.col).total_cmp(&claimed) != Ordering::Equal {
        return false;
    }

    let mut r: Option<f64> = None;
    for i in 0..m {
        let mut best = view.query_key(i, 0);
        for j in 1..n {
            let v = view.query_key(i, j);
            if cmp(v, best) == Ordering::Greater {
                best = v;
            }
        }
        r = Some(match r {
            None => best,
            Some(cur) if cmp(best, cur) == Ordering::Less => best,
            Some(cur) => cur,
        });
    }
    let mut c: Option<f64> = None;
    for j in 0..n {
        let mut best = view.query_key(0, j);
        for i in 1..m {
            let v = view.query_key(i, j);
            if cmp(v, best) == Ordering::Less {
                best = v;
            }
        }
        c = Some(match c {
            None => best,
            Some(cur) if cmp(best, cur) == Ordering::Greater => best,
            Some(cur) => cur,
        });
    }
    let (c, r) = (c.expect("non-empty"), r.expect("non-empty"));
    cmp(claimed, c) != Ordering::Less && cmp(claimed, r) != Ordering::Greater
}
