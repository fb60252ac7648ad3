use std::sync::Arc;

use qds_core::qds::{guarantee_case_count, verify_guarantee};
use qds_core::stabilizer::DEFAULT_ENUMERATION_BUDGET;
use qds_core::{BchSm, LookupDecoder, QdsCode, RepetitionSm, StabilizerCode, SyndromeMeasurementCode};

fn check(sm: Arc<dyn SyndromeMeasurementCode>) -> u64 {
    let base = StabilizerCode::steane();
    let dec = LookupDecoder::build_complete(&base, DEFAULT_ENUMERATION_BUDGET).unwrap();
    let q = QdsCode::assemble(base, sm).unwrap();
    let cells = verify_guarantee(&q, &dec, 1, DEFAULT_ENUMERATION_BUDGET).unwrap();
    for c in &cells {
        assert_eq!(c.failures, 0, "cell ({},{})", c.wq, c.ws);
    }
    cells.iter().map(|c| c.cases).sum()
}

#[test]
fn steane_bch_all_weight_one_with_three_flips() {
    let cases = check(Arc::new(BchSm::for_syndrome(6, 3).unwrap()));
    assert_eq!(cases, 32_802 + 1_562);
    assert_eq!(guarantee_case_count(7, 21, 1, 3), 34_364);
}

#[test]
fn steane_repetition_and_identity() {
    assert_eq!(check(Arc::new(RepetitionSm::new(6, 3).unwrap())), 22 * 19);
    assert_eq!(check(Arc::new(RepetitionSm::identity(6).unwrap())), 22);
}

#[test]
fn steane_bch_t1_and_t2() {
    for t in 1..=2 {
        let sm = BchSm::for_syndrome(6, t).unwrap();
        assert_eq!(sm.t_s(), t);
        check(Arc::new(sm));
    }
}
