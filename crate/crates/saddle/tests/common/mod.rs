//! Helpers shared by the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use saddle::select::lg_star;
use saddle::{
    find_psp, generate, Algo, Entry, Family, Instance, MatrixData, MatrixView, SspOutcome,
};

/// Splitmix64: small, seedable, and good enough for test-shape decisions.
pub struct TinyRng(u64);

impl TinyRng {
    pub fn new(seed: u64) -> TinyRng {
        TinyRng(seed)
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn unit_f64(&mut self) -> f64 {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Every 0/1 matrix with at most four rows and four columns, exhaustively.
pub fn zero_one_matrices() -> impl Iterator<Item = Vec<Vec<f64>>> {
    (1usize..=4)
        .flat_map(|m| (1usize..=4).map(move |n| (m, n)))
        .flat_map(|(m, n)| {
            (0u32..1u32 << (m * n)).map(move |bits| {
                (0..m)
                    .map(|i| (0..n).map(|j| ((bits >> (i * n + j)) & 1) as f64).collect())
                    .collect()
            })
        })
}

/// The `index`-th small random matrix: dimensions drawn from 1..=8, and
/// every third instance drawn from a three-value pool so duplicates are
/// plentiful. Pure in `index`.
pub fn small_random_rows(index: u64) -> Vec<Vec<f64>> {
    let mut rng = TinyRng::new(0x5EED_0000 ^ index.wrapping_mul(0x9E37_79B9));
    let m = 1 + rng.below(8) as usize;
    let n = 1 + rng.below(8) as usize;
    let duplicates = index % 10 < 3;
    (0..m)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if duplicates {
                        rng.below(3) as f64
                    } else {
                        rng.unit_f64()
                    }
                })
                .collect()
        })
        .collect()
}

pub const SMALL_RANDOM_COUNT: u64 = 10_000;

/// The large instance corpus: per size, 500 instances cycling through the
/// five families (planted multiplicities cycle through 1, 4, 16).
pub fn large_cases() -> Vec<(Family, usize, u64)> {
    let mut cases = Vec::new();
    for &n in &[64usize, 256, 1024] {
        for i in 0..500u64 {
            let family = match i % 5 {
                0 => Family::PlantedSsp,
                1 => Family::PlantedSp { multiplicity: [1, 4, 16][(i as usize / 5) % 3] },
                2 => Family::NoSp,
                3 => Family::Random,
                _ => Family::Constant,
            };
            cases.push((family, n, 7000 + i));
        }
    }
    cases
}

pub fn instance(family: Family, m: usize, n: usize, seed: u64) -> Instance {
    generate(family, m, n, seed).expect("corpus parameters are feasible")
}

/// Materialize lazily generated cells into a dense buffer; repeated scans
/// over the same instance then cost array reads instead of hashing.
pub fn densify(data: &MatrixData) -> Arc<MatrixData> {
    let (m, n) = (data.rows(), data.cols());
    let cells = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| data.at(i, j));
    Arc::new(MatrixData::from_rows_flat(m, n, cells.collect()))
}

/// Base queries consumed by `run` on `view`.
pub fn queries_during<T>(view: &MatrixView, run: impl FnOnce() -> T) -> (T, u64) {
    let before = view.stats();
    let out = run();
    let used = view.stats().since(before).queries;
    (out, used)
}

/// Compare a solver decision against the oracle's strict saddlepoint.
pub fn decision_matches(got: &SspOutcome, want: Option<&Entry>) -> Result<(), String> {
    match (got, want) {
        (SspOutcome::Found(g), Some(w)) => {
            if (g.row, g.col) != (w.row, w.col) {
                return Err(format!(
                    "found ({}, {}) but the oracle says ({}, {})",
                    g.row, g.col, w.row, w.col
                ));
            }
            if g.value.raw() != w.value.raw() {
                return Err(format!(
                    "matching position but value {} vs oracle {}",
                    g.value.raw(),
                    w.value.raw()
                ));
            }
            Ok(())
        }
        (SspOutcome::Absent, None) => Ok(()),
        (SspOutcome::Found(g), None) => {
            Err(format!("claimed a strict saddlepoint at ({}, {}); the oracle finds none", g.row, g.col))
        }
        (SspOutcome::Absent, Some(w)) => {
            Err(format!("claimed no strict saddlepoint; the oracle has one at ({}, {})", w.row, w.col))
        }
    }
}

/// Probe values for a value sweep: every distinct entry, every midpoint of
/// consecutive distinct entries, and both infinite sentinels.
pub fn probe_sweep(cells: &[f64]) -> Vec<f64> {
    let mut sorted: Vec<f64> = cells.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();
    let mut probes = Vec::with_capacity(2 * sorted.len() + 1);
    probes.push(f64::NEG_INFINITY);
    for (idx, &v) in sorted.iter().enumerate() {
        probes.push(v);
        if let Some(&next) = sorted.get(idx + 1) {
            probes.push((v + next) / 2.0);
        }
    }
    probes.push(f64::INFINITY);
    probes
}

/// The fast-recursion budget constant: measured once on 4096-square random
/// instances, then widened by the 1.5x headroom factor.
pub fn calibrated_fast_constant() -> f64 {
    let mut worst: f64 = 0.0;
    for seed in 0..3 {
        let inst = instance(Family::Random, 4096, 4096, 40_960 + seed);
        let view = inst.view();
        let (_, used) = queries_during(&view, || find_psp(&view, Algo::Fast));
        let shape = 4096.0 * lg_star(4096) as f64;
        worst = worst.max(used as f64 / shape);
    }
    worst * 1.5
}
