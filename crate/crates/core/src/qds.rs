//! Quantum data-syndrome codes assembled from a stabilizer code and a
//! classical syndrome measurement (SM) code.
//!
//! An SM code with `ell × n_s` generator matrix `G` turns the `ell`
//! generators of the base code into `n_s` measured stabilizers
//! `H_Q = Gᵀ H`. Each row of `H_Q` is a product of base generators, so a
//! clean measurement of `H_Q` is the SM encoding of the base syndrome.
//! Decoding runs in two steps: the SM decoder recovers the `ell`-bit
//! syndrome from the noisy `n_s`-bit word, then a quantum decoder maps that
//! syndrome to a Pauli correction.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bch::{BchCode, BchDecodeError, MSelection};
use crate::error::{dim, Error, Result};
use crate::linalg::{BinaryMatrix, Bits};
use crate::stabilizer::{
    binomial, combinations, pauli_count, paulis_of_weight, LookupDecoder, PauliOperator, ResidualClass, StabilizerCode,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmDecodeError {
    #[error("measured word has {found} bits, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("syndrome word uncorrectable: {0}")]
    Uncorrectable(String),
}

/// Classical `[n_s, ell, 2 t_s + 1]` code protecting the syndrome.
pub trait SyndromeMeasurementCode: fmt::Debug + Send + Sync {
    /// Short identifier used in metadata (`bch`, `repetition`, ...).
    fn kind(&self) -> &'static str;
    fn ell(&self) -> usize;
    fn n_s(&self) -> usize;
    fn t_s(&self) -> usize;
    /// `ell × n_s` generator matrix.
    fn encode_matrix(&self) -> &BinaryMatrix;
    /// Recovers the `ell`-bit syndrome from a noisy `n_s`-bit word.
    fn decode(&self, word: &Bits) -> Result<Bits, SmDecodeError>;

    fn encode(&self, syndrome: &Bits) -> Result<Bits> {
        self.encode_matrix().vec_mul(syndrome)
    }

    /// Measurements beyond the `ell` generators.
    fn extra_measurements(&self) -> usize {
        self.n_s() - self.ell()
    }
}

/// Shortened BCH code as an SM code.
#[derive(Clone, Debug)]
pub struct BchSm {
    code: BchCode,
    matrix: BinaryMatrix,
}

impl BchSm {
    pub fn new(code: BchCode) -> Self {
        let matrix = code.generator_matrix();
        BchSm { code, matrix }
    }

    /// Smallest suitable BCH code for `ell` syndrome bits and `t` flips.
    pub fn for_syndrome(ell: usize, t: usize) -> Result<Self> {
        Ok(Self::new(BchCode::select(ell, t, MSelection::Bound)?))
    }

    pub fn code(&self) -> &BchCode {
        &self.code
    }
}

impl SyndromeMeasurementCode for BchSm {
    fn kind(&self) -> &'static str {
        "bch"
    }

    fn ell(&self) -> usize {
        self.code.k()
    }

    fn n_s(&self) -> usize {
        self.code.n()
    }

    fn t_s(&self) -> usize {
        self.code.t()
    }

    fn encode_matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    fn decode(&self, word: &Bits) -> Result<Bits, SmDecodeError> {
        match self.code.decode(word) {
            Ok(d) => Ok(d.message),
            Err(BchDecodeError::Length { expected, found }) => Err(SmDecodeError::Length { expected, found }),
            Err(e) => Err(SmDecodeError::Uncorrectable(e.to_string())),
        }
    }

    fn encode(&self, syndrome: &Bits) -> Result<Bits> {
        self.code.encode(syndrome)
    }
}

/// Every generator measured `reps` times; the word is `reps` consecutive
/// copies of the syndrome and decoding is a per-bit majority vote.
#[derive(Clone, Debug)]
pub struct RepetitionSm {
    ell: usize,
    reps: usize,
    matrix: BinaryMatrix,
}

impl RepetitionSm {
    pub fn new(ell: usize, reps: usize) -> Result<Self> {
        if reps == 0 || reps.is_multiple_of(2) {
            return Err(Error::Parameter(format!("repetition count must be odd and positive, got {reps}")));
        }
        if ell == 0 {
            return Err(Error::Parameter("ell must be positive".into()));
        }
        let mut matrix = BinaryMatrix::identity(ell);
        for _ in 1..reps {
            matrix = matrix.hstack(&BinaryMatrix::identity(ell))?;
        }
        Ok(RepetitionSm { ell, reps, matrix })
    }

    /// No redundancy: `n_s = ell`, `t_s = 0`.
    pub fn identity(ell: usize) -> Result<Self> {
        Self::new(ell, 1)
    }

    pub fn reps(&self) -> usize {
        self.reps
    }
}

impl SyndromeMeasurementCode for RepetitionSm {
    fn kind(&self) -> &'static str {
        if self.reps == 1 {
            "identity"
        } else {
            "repetition"
        }
    }

    fn ell(&self) -> usize {
        self.ell
    }

    fn n_s(&self) -> usize {
        self.ell * self.reps
    }

    fn t_s(&self) -> usize {
        (self.reps - 1) / 2
    }

    fn encode_matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    fn decode(&self, word: &Bits) -> Result<Bits, SmDecodeError> {
        if word.len() != self.n_s() {
            return Err(SmDecodeError::Length { expected: self.n_s(), found: word.len() });
        }
        let mut votes = vec![0usize; self.ell];
        for p in word.ones_positions() {
            votes[p % self.ell] += 1;
        }
        Ok(Bits::from_bools(&votes.iter().map(|&v| 2 * v > self.reps).collect::<Vec<_>>()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwoStepFailure {
    #[error(transparent)]
    SmDecode(#[from] SmDecodeError),
    #[error("syndrome {0} has no correction in the quantum decoder")]
    Unreachable(Bits),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoStepOutcome {
    pub correction: PauliOperator,
    pub decoded_syndrome: Bits,
}

/// A base stabilizer code measured through an SM code.
#[derive(Clone)]
pub struct QdsCode {
    base: StabilizerCode,
    sm: Arc<dyn SyndromeMeasurementCode>,
    h_q: BinaryMatrix,
}

impl QdsCode {
    pub fn assemble(base: StabilizerCode, sm: Arc<dyn SyndromeMeasurementCode>) -> Result<Self> {
        if sm.ell() != base.ell() {
            return Err(dim(format!(
                "SM code encodes {} bits but the base code has {} generators",
                sm.ell(),
                base.ell()
            )));
        }
        let h_q = sm.encode_matrix().transpose().mul(base.check_matrix())?;
        Ok(QdsCode { base, sm, h_q })
    }

    pub fn base(&self) -> &StabilizerCode {
        &self.base
    }

    pub fn sm(&self) -> &dyn SyndromeMeasurementCode {
        self.sm.as_ref()
    }

    /// `n_s × 2n` measured check matrix.
    pub fn h_q(&self) -> &BinaryMatrix {
        &self.h_q
    }

    pub fn n_s(&self) -> usize {
        self.sm.n_s()
    }

    pub fn extra_measurements(&self) -> usize {
        self.sm.extra_measurements()
    }

    /// Noisy measurement outcome: the symplectic product of each `H_Q` row
    /// with the data error, XOR the measurement flips.
    pub fn measure(&self, data_error: &PauliOperator, flips: &Bits) -> Result<Bits> {
        if data_error.n() != self.base.n() {
            return Err(dim(format!("data error on {} qubits, code has {}", data_error.n(), self.base.n())));
        }
        if flips.len() != self.n_s() {
            return Err(dim(format!("flip pattern has {} bits, expected {}", flips.len(), self.n_s())));
        }
        let mut out = self.h_q.mul_vec(&data_error.symplectic_dual())?;
        out.xor_assign(flips);
        Ok(out)
    }

    pub fn decode_two_step(&self, measured: &Bits, decoder: &LookupDecoder) -> Result<TwoStepOutcome, TwoStepFailure> {
        let syndrome = self.sm.decode(measured)?;
        let correction = decoder.decode(&syndrome).ok_or_else(|| TwoStepFailure::Unreachable(syndrome.clone()))?;
        Ok(TwoStepOutcome { correction: correction.clone(), decoded_syndrome: syndrome })
    }

    /// Runs measure → two-step decode → residual classification; `true` iff
    /// decoding succeeded and the residual is a stabilizer.
    pub fn corrects(&self, decoder: &LookupDecoder, data_error: &PauliOperator, flips: &Bits) -> Result<bool> {
        let measured = self.measure(data_error, flips)?;
        match self.decode_two_step(&measured, decoder) {
            Ok(out) => {
                let residual = data_error.mul(&out.correction)?;
                Ok(self.base.classify_residual(&residual)? == ResidualClass::Trivial)
            }
            Err(_) => Ok(false),
        }
    }
}

impl fmt::Debug for QdsCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QdsCode[[{},{}:{}]] sm={:?}", self.base.n(), self.base.k(), self.extra_measurements(), self.sm)
    }
}

/// Result of [`fujiwara_extra_measurements`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FujiwaraCount {
    pub total: u64,
    /// `m_1, ..., m_{t_c}`.
    pub m_list: Vec<u64>,
}

/// Decimal digits of e, enough to settle every ceiling we meet.
const E_DIGITS: &str =
    "27182818284590452353602874713526624977572470936999595749669676277240766303535475945713821785251664274";

fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Smallest `z` with `2^z ≥ d · e_num / 10^digits`.
fn min_pow2_at_least(d: &BigUint, e_num: &BigUint, scale: &BigUint) -> u64 {
    let target = d * e_num;
    let mut z = 0u64;
    let mut lhs = scale.clone();
    while lhs < target {
        lhs <<= 1;
        z += 1;
    }
    z
}

/// `⌈log2(D) + log2(e)⌉` for a positive integer `D`, exact: bracket e
/// between consecutive decimal truncations until both ends agree.
pub fn ceil_log2_times_e(d: &BigUint) -> u64 {
    assert!(!d.is_zero(), "D must be positive");
    for digits in [10usize, 20, 40, E_DIGITS.len() - 1] {
        let lo: BigUint = E_DIGITS[..=digits].parse().expect("digits");
        let hi = &lo + 1u32;
        let scale = BigUint::from(10u32).pow(digits as u32);
        let z_lo = min_pow2_at_least(d, &lo, &scale);
        let z_hi = min_pow2_at_least(d, &hi, &scale);
        if z_lo == z_hi {
            return z_lo;
        }
    }
    unreachable!("e digits exhausted without settling the ceiling")
}

/// Extra measurements of Fujiwara's DPM construction for `ell` generators
/// and `t_c` correctable syndrome errors:
/// `2 t_c + Σ_{i=1}^{t_c} (2 t_c - 2i + 1) m_i` with
/// `m_i = ⌈log2(C(ell, 2i) - C(ell - 2i, 2i)) + log2 e⌉`.
pub fn fujiwara_extra_measurements(ell: usize, t_c: usize) -> Result<FujiwaraCount> {
    if 2 * t_c > ell {
        return Err(Error::Parameter(format!("Fujiwara construction needs 2 t_c <= ell (t_c={t_c}, ell={ell})")));
    }
    let ell = ell as u64;
    let t_c = t_c as u64;
    let m_list: Vec<u64> = (1..=t_c)
        .map(|i| {
            let diff = big_binomial(ell, 2 * i) - big_binomial(ell - 2 * i, 2 * i);
            ceil_log2_times_e(&diff)
        })
        .collect();
    let sum: u64 = m_list.iter().zip(1..).map(|(m, i)| (2 * t_c - 2 * i + 1) * m).sum();
    Ok(FujiwaraCount { total: 2 * t_c + sum, m_list })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverheadRow {
    pub ell: usize,
    pub t: usize,
    /// `R(m, t)` of the selected BCH code; `None` if no `m <= 16` fits.
    pub bch: Option<usize>,
    /// `None` when `2t > ell`.
    pub fujiwara: Option<u64>,
    /// `(2t + 1)`-fold repetition: `2 t ell`.
    pub repetition: usize,
}

/// Extra measurements per construction over the grid `ells × ts`.
pub fn overhead_table(ells: &[usize], ts: &[usize]) -> Vec<OverheadRow> {
    let mut rows = Vec::with_capacity(ells.len() * ts.len());
    for &ell in ells {
        for &t in ts {
            rows.push(OverheadRow {
                ell,
                t,
                bch: BchCode::select(ell, t, MSelection::Bound).ok().map(|c| c.r()),
                fujiwara: fujiwara_extra_measurements(ell, t).ok().map(|f| f.total),
                repetition: 2 * t * ell,
            });
        }
    }
    rows
}

/// CSV with header `ell,t,bch,fujiwara,repetition`; inapplicable cells are `NA`.
pub fn overhead_csv(rows: &[OverheadRow]) -> String {
    let na = |v: Option<String>| v.unwrap_or_else(|| "NA".into());
    let mut s = String::from("ell,t,bch,fujiwara,repetition\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.ell,
            r.t,
            na(r.bch.map(|v| v.to_string())),
            na(r.fujiwara.map(|v| v.to_string())),
            r.repetition
        ));
    }
    s
}

/// Pass/fail counts for one `(w_q, w_s)` guarantee cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GuaranteeCell {
    pub wq: usize,
    pub ws: usize,
    pub cases: u64,
    pub failures: u64,
}

/// Cases needed to check every data error of weight `<= t_q` against every
/// flip pattern of weight `<= t_s`.
pub fn guarantee_case_count(n: usize, n_s: usize, t_q: usize, t_s: usize) -> u128 {
    let data: u128 = (0..=t_q).map(|w| pauli_count(n, w)).sum();
    let flips: u128 = (0..=t_s).map(|w| binomial(n_s as u64, w as u64)).sum();
    data.saturating_mul(flips)
}

/// Exhaustively checks that every simultaneous data error of weight
/// `<= t_q` and syndrome error of weight `<= t_s` is corrected.
pub fn verify_guarantee(q: &QdsCode, decoder: &LookupDecoder, t_q: usize, budget: u128) -> Result<Vec<GuaranteeCell>> {
    let (n, n_s, t_s) = (q.base().n(), q.n_s(), q.sm().t_s());
    let required = guarantee_case_count(n, n_s, t_q, t_s);
    if required > budget {
        return Err(Error::Budget { required, budget });
    }
    let mut cells = Vec::new();
    for wq in 0..=t_q {
        let data: Vec<PauliOperator> = paulis_of_weight(n, wq).collect();
        for ws in 0..=t_s {
            let mut cell = GuaranteeCell { wq, ws, cases: 0, failures: 0 };
            for support in combinations(n_s, ws) {
                let flips = Bits::from_positions(n_s, support);
                for e in &data {
                    cell.cases += 1;
                    if !q.corrects(decoder, e, &flips)? {
                        cell.failures += 1;
                    }
                }
            }
            cells.push(cell);
        }
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::DEFAULT_ENUMERATION_BUDGET;

    fn steane_bch() -> (QdsCode, LookupDecoder) {
        let base = StabilizerCode::steane();
        let sm = Arc::new(BchSm::for_syndrome(6, 3).unwrap());
        let dec = LookupDecoder::build_complete(&base, DEFAULT_ENUMERATION_BUDGET).unwrap();
        (QdsCode::assemble(base, sm).unwrap(), dec)
    }

    #[test]
    fn assemble_steane_bch() {
        let (q, _) = steane_bch();
        assert_eq!((q.h_q().rows(), q.h_q().cols()), (21, 14));
        assert_eq!(q.extra_measurements(), 15);
        let rr = q.base().check_matrix().row_reduce();
        let rows: Vec<PauliOperator> = q.h_q().row_iter().map(|r| PauliOperator::from_symplectic(r).unwrap()).collect();
        for (i, a) in rows.iter().enumerate() {
            assert!(rr.contains(q.h_q().row(i)));
            for b in &rows {
                assert!(!a.anticommutes(b).unwrap());
            }
        }
    }

    #[test]
    fn assemble_identity_is_base_check_matrix() {
        let base = StabilizerCode::steane();
        let q = QdsCode::assemble(base.clone(), Arc::new(RepetitionSm::identity(6).unwrap())).unwrap();
        assert_eq!(q.h_q(), base.check_matrix());
        assert_eq!(q.extra_measurements(), 0);
        assert!(QdsCode::assemble(base, Arc::new(RepetitionSm::identity(5).unwrap())).is_err());
    }

    #[test]
    fn measure_examples() {
        let (q, _) = steane_bch();
        let id = PauliOperator::identity(7);
        assert!(q.measure(&id, &Bits::zeros(21)).unwrap().is_zero());
        let e: Bits = "100000000001000000001".parse().unwrap();
        assert_eq!(q.measure(&id, &e).unwrap(), e);
        assert!(q.measure(&id, &Bits::zeros(20)).is_err());
        assert!(q.measure(&PauliOperator::identity(6), &Bits::zeros(21)).is_err());
    }

    #[test]
    fn clean_measurement_is_encoded_syndrome() {
        for sm in [
            Arc::new(BchSm::for_syndrome(6, 3).unwrap()) as Arc<dyn SyndromeMeasurementCode>,
            Arc::new(BchSm::for_syndrome(6, 1).unwrap()),
            Arc::new(RepetitionSm::new(6, 3).unwrap()),
        ] {
            let q = QdsCode::assemble(StabilizerCode::steane(), sm).unwrap();
            for e in (0..=1).flat_map(|w| paulis_of_weight(7, w)) {
                let clean = q.measure(&e, &Bits::zeros(q.n_s())).unwrap();
                let expect = q.sm().encode(&q.base().syndrome_of(&e).unwrap()).unwrap();
                assert_eq!(clean, expect);
            }
        }
    }

    #[test]
    fn two_step_examples() {
        let (q, dec) = steane_bch();
        let out = q.decode_two_step(&Bits::zeros(21), &dec).unwrap();
        assert!(out.correction.is_identity());
        let e: PauliOperator = "IIZIIII".parse().unwrap();
        let flips = Bits::from_positions(21, [0, 9, 20]);
        let out = q.decode_two_step(&q.measure(&e, &flips).unwrap(), &dec).unwrap();
        assert_eq!(out.correction, e);
        assert_eq!(out.decoded_syndrome, q.base().syndrome_of(&e).unwrap());
        assert!(matches!(
            q.decode_two_step(&Bits::zeros(20), &dec),
            Err(TwoStepFailure::SmDecode(SmDecodeError::Length { .. }))
        ));
    }

    #[test]
    fn four_flips_never_crash() {
        let (q, dec) = steane_bch();
        let e = PauliOperator::identity(7);
        for support in combinations(21, 4) {
            let flips = Bits::from_positions(21, support);
            let _ = q.decode_two_step(&q.measure(&e, &flips).unwrap(), &dec);
            assert!(!q.corrects(&dec, &e, &flips).unwrap());
        }
    }

    #[test]
    fn unreachable_syndrome_reported() {
        let base = StabilizerCode::steane();
        let dec = LookupDecoder::build(&base, 0).unwrap();
        let q = QdsCode::assemble(base, Arc::new(RepetitionSm::identity(6).unwrap())).unwrap();
        let e: PauliOperator = "XIIIIII".parse().unwrap();
        let measured = q.measure(&e, &Bits::zeros(6)).unwrap();
        assert!(matches!(q.decode_two_step(&measured, &dec), Err(TwoStepFailure::Unreachable(_))));
    }

    #[test]
    fn repetition_examples() {
        let r = RepetitionSm::new(6, 3).unwrap();
        assert_eq!((r.n_s(), r.t_s(), r.extra_measurements()), (18, 1, 12));
        let id = RepetitionSm::new(6, 1).unwrap();
        assert_eq!((id.n_s(), id.t_s(), id.kind()), (6, 0, "identity"));
        assert!(RepetitionSm::new(6, 2).is_err());
        assert!(RepetitionSm::new(6, 0).is_err());
        assert_eq!(r.encode_matrix().rank(), 6);
    }

    #[test]
    fn majority_fixes_one_flip_per_group() {
        let r = RepetitionSm::new(6, 3).unwrap();
        for s in 0u64..64 {
            let s = Bits::from_u64(s, 6);
            let cw = r.encode(&s).unwrap();
            assert_eq!(r.decode(&cw).unwrap(), s);
            // one flip in each of an arbitrary subset of groups, any round
            for groups in 0u64..64 {
                for round in 0..3 {
                    let mut w = cw.clone();
                    for g in Bits::from_u64(groups, 6).ones_positions() {
                        w.flip(((round + g) % 3) * 6 + g);
                    }
                    assert_eq!(r.decode(&w).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn fujiwara_examples() {
        let f = fujiwara_extra_measurements(10, 3).unwrap();
        assert_eq!(f.m_list, vec![6, 10, 10]);
        assert_eq!(f.total, 76);
        assert_eq!(fujiwara_extra_measurements(10, 0).unwrap().total, 0);
        assert!(fujiwara_extra_measurements(5, 3).is_err());
    }

    #[test]
    fn ceiling_matches_float_away_from_boundaries() {
        for d in 1u64..5000 {
            let exact = ceil_log2_times_e(&BigUint::from(d));
            let float = ((d as f64).log2() + std::f64::consts::E.log2()).ceil() as u64;
            assert_eq!(exact, float, "D={d}");
        }
    }

    #[test]
    fn overhead_examples_and_monotonicity() {
        let rows = overhead_table(&[6, 10], &[1, 3, 11]);
        let get = |ell, t| rows.iter().find(|r| r.ell == ell && r.t == t).unwrap();
        assert_eq!(get(6, 3).bch, Some(15));
        assert_eq!(get(6, 1).repetition, 12);
        assert_eq!(get(10, 3).fujiwara, Some(76));
        assert_eq!(get(10, 11).bch, Some(70));
        assert_eq!(get(10, 11).fujiwara, None);

        let ts: Vec<usize> = (1..=12).collect();
        for ell in 5..=60 {
            let rows = overhead_table(&[ell], &ts);
            for w in rows.windows(2) {
                assert!(w[0].bch <= w[1].bch, "bch ell={ell} t={}", w[0].t);
                assert!(w[0].repetition <= w[1].repetition);
                if let (Some(a), Some(b)) = (w[0].fujiwara, w[1].fujiwara) {
                    assert!(a <= b);
                }
            }
        }
        let csv = overhead_csv(&overhead_table(&[10], &[3, 11]));
        assert_eq!(csv, "ell,t,bch,fujiwara,repetition\n10,3,15,76,60\n10,11,70,NA,220\n");
    }

    #[test]
    fn bch_extra_equals_r_and_respects_bound() {
        for ell in 1..=80 {
            for t in 1..=8 {
                let sm = BchSm::for_syndrome(ell, t).unwrap();
                assert_eq!(sm.extra_measurements(), sm.code().r());
                assert!(sm.code().r() <= sm.code().m() as usize * t);
            }
        }
    }

    #[test]
    fn guarantee_budget_refusal() {
        let (q, dec) = steane_bch();
        assert_eq!(guarantee_case_count(7, 21, 1, 3), 22 * 1562);
        assert!(matches!(verify_guarantee(&q, &dec, 1, 1000), Err(Error::Budget { required: 34364, .. })));
    }
}
