//! Randomized invariants: solver-vs-oracle agreement, PSP validity,
//! staircase verdict soundness, text round-trips, and generator truths,
//! across shapes and tie-heavy value pools.

mod common;

use common::*;
use proptest::prelude::*;
use saddle::heap::psp_baseline;
use saddle::recursive::{psp_rect, psp_square_fast, psp_square_simple};
use saddle::staircase::{test_value, SearchVerdict};
use saddle::{
    find_ssp, generate, locate_sp, matrix_to_string, oracle_scan, read_matrix, verify_psp, Algo,
    Family, MatrixData, MatrixView, Truth,
};

/// Small integer pools force duplicate values; the rational arm adds
/// spread. Saddle structure must survive both.
fn tie_heavy_cell() -> impl Strategy<Value = f64> {
    prop_oneof![
        3 => (0u8..5).prop_map(f64::from),
        2 => (-1000i32..1000).prop_map(|v| v as f64 / 64.0),
    ]
}

fn small_rows() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(tie_heavy_cell(), n), m)
    })
}

fn square_rows() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(tie_heavy_cell(), n), n)
    })
}

fn finite_cell() -> impl Strategy<Value = f64> {
    any::<f64>().prop_filter("finite values only", |v| v.is_finite())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn every_selector_matches_the_oracle(rows in small_rows()) {
        let view = MatrixView::from_rows(rows);
        let want = oracle_scan(&view).ssp;
        for algo in Algo::all() {
            let (got, _) = find_ssp(&view, algo);
            if let Err(e) = decision_matches(&got, want.as_ref()) {
                prop_assert!(false, "selector {}: {e}", algo.name());
            }
        }
    }

    #[test]
    fn psp_entry_points_stay_pseudo(rows in small_rows()) {
        let view = MatrixView::from_rows(rows);
        if view.is_square() {
            for (name, point) in [
                ("baseline", psp_baseline as fn(&MatrixView) -> saddle::Entry),
                ("simple", psp_square_simple),
                ("fast", psp_square_fast),
                ("rect", psp_rect),
            ] {
                let e = point(&view);
                prop_assert!(verify_psp(&view, &e), "{name} returned a non-PSP entry");
            }
        } else {
            let e = psp_rect(&view);
            prop_assert!(verify_psp(&view, &e), "rect returned a non-PSP entry");
        }
    }

    #[test]
    fn staircase_verdicts_are_sound(rows in small_rows(), probe in tie_heavy_cell()) {
        let view = MatrixView::from_rows(rows);
        let want = oracle_scan(&view).ssp;
        match test_value(&view, &view.probe(probe)) {
            SearchVerdict::FoundSsp(e) => {
                let w = want.as_ref().expect("verdict claims a strict saddlepoint");
                prop_assert_eq!((e.row, e.col), (w.row, w.col));
                prop_assert_eq!(e.value.raw(), w.value.raw());
            }
            SearchVerdict::NoSsp => prop_assert!(want.is_none(), "oracle has a strict saddlepoint"),
            SearchVerdict::SspGreater => {
                if let Some(w) = want.as_ref() {
                    prop_assert!(w.value.raw() > probe);
                }
            }
            SearchVerdict::SspLess => {
                if let Some(w) = want.as_ref() {
                    prop_assert!(w.value.raw() < probe);
                }
            }
        }
    }

    #[test]
    fn diagonal_reduction_stays_within_linear_budget(rows in square_rows()) {
        let n = rows.len();
        let view = MatrixView::from_rows(rows);
        let (e, used) = queries_during(&view, || psp_baseline(&view));
        prop_assert!(used <= (2 * n - 1) as u64, "{used} queries on a {n}-square");
        prop_assert!(verify_psp(&view, &e));
    }

    #[test]
    fn located_saddles_are_genuine_and_complete_enough(rows in small_rows()) {
        let view = MatrixView::from_rows(rows);
        let report = oracle_scan(&view);
        prop_assume!(!report.sp_entries.is_empty());
        let s = report.interval.c.raw();
        let hits = locate_sp(&view, &view.probe(s));
        prop_assert!(!hits.is_empty(), "saddlepoint exists but none located");
        for hit in &hits {
            prop_assert!(
                report
                    .sp_entries
                    .iter()
                    .any(|o| (o.row, o.col) == (hit.row, hit.col)),
                "located ({}, {}) is not an oracle saddlepoint",
                hit.row,
                hit.col
            );
            prop_assert_eq!(hit.value.raw(), s);
        }
    }

    #[test]
    fn text_round_trip_preserves_bits(
        rows in (1usize..=5, 1usize..=5).prop_flat_map(|(m, n)| {
            proptest::collection::vec(proptest::collection::vec(finite_cell(), n), m)
        })
    ) {
        let data = MatrixData::from_rows(rows);
        let text = matrix_to_string(&data);
        let back = read_matrix(text.as_bytes()).expect("writer output must parse");
        prop_assert_eq!((back.rows(), back.cols()), (data.rows(), data.cols()));
        for i in 0..data.rows() {
            for j in 0..data.cols() {
                prop_assert_eq!(data.at(i, j).to_bits(), back.at(i, j).to_bits());
            }
        }
    }

    #[test]
    fn planted_strict_saddle_is_the_unique_truth(
        m in 1usize..=10,
        n in 1usize..=10,
        seed in 0u64..1000,
    ) {
        let inst = generate(Family::PlantedSsp, m, n, seed).unwrap();
        let (row, col) = match inst.truth {
            Truth::StrictSaddle { row, col, .. } => (row, col),
            ref other => panic!("unexpected truth {other:?}"),
        };
        let report = oracle_scan(&inst.view());
        let ssp = report.ssp.expect("planted strict saddle must exist");
        prop_assert_eq!((ssp.row, ssp.col, ssp.value.raw()), (row, col, 0.0));
    }

    #[test]
    fn planted_multiplicity_is_exact(
        m in 1usize..=10,
        n in 1usize..=10,
        k in 1usize..=10,
        seed in 0u64..1000,
    ) {
        prop_assume!(k <= m.min(n));
        let inst = generate(Family::PlantedSp { multiplicity: k }, m, n, seed).unwrap();
        let report = oracle_scan(&inst.view());
        prop_assert_eq!(report.sp_entries.len(), k);
        prop_assert_eq!(report.interval.c.raw(), 0.0);
        prop_assert_eq!(report.interval.r.raw(), 0.0);
    }

    #[test]
    fn saddle_free_family_has_no_saddle(
        m in 2usize..=12,
        n in 2usize..=12,
        seed in 0u64..1000,
    ) {
        let inst = generate(Family::NoSp, m, n, seed).unwrap();
        let report = oracle_scan(&inst.view());
        prop_assert!(report.sp_entries.is_empty());
        prop_assert!(report.ssp.is_none());
    }

    #[test]
    fn oracle_interval_is_ordered_and_tight_on_saddles(rows in small_rows()) {
        let view = MatrixView::from_rows(rows);
        let report = oracle_scan(&view);
        prop_assert!(report.interval.c.raw() <= report.interval.r.raw());
        if let Some(ssp) = &report.ssp {
            prop_assert_eq!(report.interval.c.raw(), ssp.value.raw());
            prop_assert_eq!(report.interval.r.raw(), ssp.value.raw());
            prop_assert!(report
                .sp_entries
                .iter()
                .any(|e| (e.row, e.col) == (ssp.row, ssp.col)));
        }
        if !report.sp_entries.is_empty() {
            prop_assert_eq!(report.interval.c.raw(), report.interval.r.raw());
        }
    }
}
