//! Low-rate behaviour of recombined failure curves.

use std::sync::Arc;

use qds_core::sim::{curve, log_space, loglog_slope, CodeMeta, SimGrid, TrialPlan};
use qds_core::stabilizer::DEFAULT_ENUMERATION_BUDGET;
use qds_core::{BchSm, LookupDecoder, QdsCode, RepetitionSm, StabilizerCode, SyndromeMeasurementCode};

fn grid(sm: Arc<dyn SyndromeMeasurementCode>, plan: &TrialPlan, seed: u64) -> SimGrid {
    let base = StabilizerCode::steane();
    let dec = LookupDecoder::build_complete(&base, DEFAULT_ENUMERATION_BUDGET).unwrap();
    let q = QdsCode::assemble(base, sm).unwrap();
    let meta = CodeMeta::new("steane", &q, Some(3));
    SimGrid::build(&q, &dec, meta, plan, seed).unwrap()
}

fn slope(g: &SimGrid, ratio: f64) -> f64 {
    let pts = curve(g, &log_space(1e-3, 1e-2, 10), ratio, 1e-12).unwrap();
    loglog_slope(&pts.iter().map(|p| (p.p_s, p.combined.p_err)).collect::<Vec<_>>()).unwrap()
}

fn pure_syndrome_plan() -> TrialPlan {
    TrialPlan { boundary: 10_000, far: 1_000, max_wq: Some(0), max_ws: None }
}

#[test]
fn bch_pure_syndrome_slope_is_four() {
    let g = grid(Arc::new(BchSm::for_syndrome(6, 3).unwrap()), &pure_syndrome_plan(), 1);
    for ws in 0..=3 {
        assert_eq!(g.cell(0, ws).unwrap().failures, 0);
    }
    let s = slope(&g, 0.0);
    assert!((s - 4.0).abs() <= 0.3, "slope {s}");
}

#[test]
fn repetition_pure_syndrome_slope_is_two() {
    let g = grid(Arc::new(RepetitionSm::new(6, 3).unwrap()), &pure_syndrome_plan(), 1);
    // two flips in the same triple: 6 * 3 of C(18, 2) pairs
    let p = g.cell(0, 2).unwrap().fraction();
    assert!((p - 18.0 / 153.0).abs() < 0.015, "p_L(0,2) = {p}");
    let s = slope(&g, 0.0);
    assert!((s - 2.0).abs() <= 0.3, "slope {s}");
}

#[test]
fn identity_sm_data_only_slope_is_two() {
    let plan = TrialPlan { boundary: 10_000, far: 1_000, max_wq: None, max_ws: Some(0) };
    let g = grid(Arc::new(RepetitionSm::identity(6).unwrap()), &plan, 2);
    let pts: Vec<(f64, f64)> = log_space(1e-3, 1e-2, 10)
        .into_iter()
        .map(|p| (p, qds_core::sim::combine_grid(&g, p, 0.0, 1e-12).unwrap().p_err))
        .collect();
    let s = loglog_slope(&pts).unwrap();
    assert!((s - 2.0).abs() <= 0.3, "slope {s}");
}

#[test]
fn bch_below_repetition_at_hundredfold_ratio() {
    let plan = TrialPlan::default();
    let bch = grid(Arc::new(BchSm::for_syndrome(6, 3).unwrap()), &plan, 3);
    let rep = grid(Arc::new(RepetitionSm::new(6, 3).unwrap()), &plan, 3);
    let ps = log_space(1e-4, 1e-2, 9);
    let a = curve(&bch, &ps, 0.01, 1e-12).unwrap();
    let b = curve(&rep, &ps, 0.01, 1e-12).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert!(x.combined.p_err < y.combined.p_err);
        assert!(x.combined.upper < y.combined.lower, "p_s={}", x.p_s);
    }
}

#[test]
fn doubling_trials_stays_within_confidence_bounds() {
    let sm: Arc<dyn SyndromeMeasurementCode> = Arc::new(BchSm::for_syndrome(6, 1).unwrap());
    let small = grid(sm.clone(), &TrialPlan::uniform(1_000), 8);
    let large = grid(sm, &TrialPlan::uniform(2_000), 8);
    for p in [1e-2, 3e-2, 1e-1] {
        let a = qds_core::sim::combine_grid(&small, p / 10.0, p, 1e-12).unwrap();
        let b = qds_core::sim::combine_grid(&large, p / 10.0, p, 1e-12).unwrap();
        assert!(a.lower <= b.upper && b.lower <= a.upper, "p={p}");
    }
}
