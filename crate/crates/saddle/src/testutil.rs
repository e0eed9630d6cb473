//! Shared fixtures for unit tests.

use crate::matrix::MatrixView;

/// 3x3 matrix with no saddlepoint: largest column minimum 2, smallest row
/// maximum 6, so the pseudo-saddlepoint interval is [2, 6].
pub(crate) fn mixed_3x3() -> MatrixView {
    MatrixView::from_rows(vec![
        vec![0.0, 7.0, 5.0],
        vec![6.0, 4.0, 2.0],
        vec![3.0, 1.0, 8.0],
    ])
}

/// 9x9 matrix with a strict saddlepoint of value 0 at (4, 4).
pub(crate) fn saddle_9x9() -> MatrixView {
    MatrixView::from_rows(vec![
        vec![-0.08, 0.55, 0.98, 1.21, 1.24, 1.07, 0.70, 0.13, -0.64],
        vec![-0.69, -0.06, 0.37, 0.60, 0.63, 0.46, 0.09, -0.48, -1.25],
        vec![-1.10, -0.47, -0.04, 0.19, 0.22, 0.05, -0.32, -0.89, -1.66],
        vec![-1.31, -0.68, -0.25, -0.02, 0.01, -0.16, -0.53, -1.10, -1.87],
        vec![-1.32, -0.69, -0.26, -0.03, 0.00, -0.17, -0.54, -1.11, -1.88],
        vec![-1.13, -0.50, -0.07, 0.16, 0.19, 0.02, -0.35, -0.92, -1.69],
        vec![-0.74, -0.11, 0.32, 0.55, 0.58, 0.41, 0.04, -0.53, -1.30],
        vec![-0.15, 0.48, 0.91, 1.14, 1.17, 1.00, 0.63, 0.06, -0.71],
        vec![0.64, 1.27, 1.70, 1.93, 1.96, 1.79, 1.42, 0.85, 0.08],
    ])
}

/// 4x2 matrix used to exercise tall-rectangle chunking; its saddlepoint
/// value is 2 at (0, 1).
pub(crate) fn tall_4x2() -> MatrixView {
    MatrixView::from_rows(vec![
        vec![1.0, 2.0],
        vec![3.0, 4.0],
        vec![5.0, 6.0],
        vec![7.0, 8.0],
    ])
}

/// 2x2 matrix with two (non-strict) saddlepoints, (0, 0) and (0, 1), both
/// of value 1.
pub(crate) fn twin_2x2() -> MatrixView {
    MatrixView::from_rows(vec![vec![1.0, 1.0], vec![2.0, 3.0]])
}

/// Minimal deterministic generator for unit-test matrices (the library's
/// instance families live in `generate`; tests keep their own source so
/// fixtures stay frozen even if the families evolve).
pub(crate) struct TinyRng(u64);

impl TinyRng {
    pub(crate) fn new(seed: u64) -> TinyRng {
        TinyRng(seed ^ 0x9E37_79B9_7F4A_7C15)
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        // splitmix64 step: good enough scrambling for test data.
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub(crate) fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub(crate) fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Dense m x n matrix with a strict saddlepoint of value 0 planted at
/// `(pi, pj)`: the rest of row `pi` is strictly negative, the rest of
/// column `pj` strictly positive, everything else unconstrained in
/// [-1, 1).
pub(crate) fn planted_ssp_matrix(m: usize, n: usize, pi: usize, pj: usize, seed: u64) -> MatrixView {
    assert!(pi < m && pj < n);
    let mut rng = TinyRng::new(seed);
    MatrixView::from_rows(
        (0..m)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if (i, j) == (pi, pj) {
                            0.0
                        } else if i == pi {
                            -(0.05 + 0.9 * rng.unit_f64())
                        } else if j == pj {
                            0.05 + 0.9 * rng.unit_f64()
                        } else {
                            2.0 * rng.unit_f64() - 1.0
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Dense m x n matrix of pseudo-random reals in [0, 1), deterministic per
/// seed. Distinct with overwhelming probability.
pub(crate) fn random_matrix(m: usize, n: usize, seed: u64) -> MatrixView {
    let mut rng = TinyRng::new(seed);
    MatrixView::from_rows((0..m).map(|_| (0..n).map(|_| rng.unit_f64()).collect()).collect())
}

/// Like [`random_matrix`] but quantized to `levels` distinct values, so
/// duplicates are everywhere.
pub(crate) fn random_matrix_dup(m: usize, n: usize, seed: u64, levels: usize) -> MatrixView {
    assert!(levels >= 1);
    let mut rng = TinyRng::new(seed);
    MatrixView::from_rows(
        (0..m)
            .map(|_| (0..n).map(|_| rng.below(levels) as f64).collect())
            .collect(),
    )
}
