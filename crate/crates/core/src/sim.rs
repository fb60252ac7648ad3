//! Phenomenological-noise Monte Carlo for QDS codes.
//!
//! Failure probabilities are estimated per weight cell `(w_q, w_s)`: a
//! uniformly random weight-`w_q` Pauli on the data and a uniformly random
//! weight-`w_s` flip pattern on the measured bits. Cells do not depend on
//! the physical error rates, so one grid recombines into a whole curve
//!
//! ```text
//! p_err(p_q, p_s) = Σ A_{w_q}(p_q, n) A_{w_s}(p_s, n_s) p_L(w_q, w_s)
//! ```
//!
//! with binomial weights `A_w(p, n) = C(n, w) p^w (1 - p)^(n - w)`.
//!
//! Every trial draws from its own ChaCha stream keyed by
//! `(seed, w_q, w_s, trial)`, so results do not depend on scheduling.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Bits;
use crate::qds::QdsCode;
use crate::stabilizer::{LookupDecoder, PauliLetter, PauliOperator};

/// Probability that a weight-`w` stabilizer is misread when each of its
/// single-qubit measurements flips independently with probability `p_m`:
/// the chance of an odd number of flips.
pub fn stabilizer_meas_error_prob(w: usize, p_m: f64) -> Result<f64> {
    check_probability("p_m", p_m)?;
    if w == 0 {
        return Err(Error::Parameter("stabilizer weight must be at least 1".into()));
    }
    Ok((0..=w).filter(|j| j % 2 == 1).map(|j| binomial_pmf(w, j, p_m)).sum())
}

/// Closed form `(1 - (1 - 2 p_m)^w) / 2` of [`stabilizer_meas_error_prob`].
pub fn stabilizer_meas_error_prob_closed(w: usize, p_m: f64) -> f64 {
    (1.0 - (1.0 - 2.0 * p_m).powi(w as i32)) / 2.0
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{name}={p} is not a probability")))
    }
}

/// `A_w(p, n) = C(n, w) p^w (1 - p)^(n - w)`, evaluated in log space.
pub fn binomial_pmf(n: usize, w: usize, p: f64) -> f64 {
    if w > n {
        return 0.0;
    }
    if p == 0.0 {
        return if w == 0 { 1.0 } else { 0.0 };
    }
    if p == 1.0 {
        return if w == n { 1.0 } else { 0.0 };
    }
    let k = w.min(n - w);
    let ln_c: f64 = (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum();
    (ln_c + w as f64 * p.ln() + (n - w) as f64 * (-p).ln_1p()).exp()
}

/// Physical noise parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorModel {
    /// Per-qubit depolarizing probability (X, Y, Z each with `p_q / 3`).
    pub p_q: f64,
    /// Per-measurement flip probability, or with `weight_aware` the
    /// single-qubit readout probability fed through
    /// [`stabilizer_meas_error_prob`] per measured row.
    pub p_s: f64,
    #[serde(default)]
    pub weight_aware: bool,
}

impl ErrorModel {
    pub fn new(p_q: f64, p_s: f64) -> Result<Self> {
        check_probability("p_q", p_q)?;
        check_probability("p_s", p_s)?;
        Ok(ErrorModel { p_q, p_s, weight_aware: false })
    }

    pub fn weight_aware(p_q: f64, p_m: f64) -> Result<Self> {
        Ok(ErrorModel { weight_aware: true, ..Self::new(p_q, p_m)? })
    }
}

/// Trial and failure counts of one cell.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellStats {
    pub trials: u64,
    pub failures: u64,
}

impl CellStats {
    pub fn fraction(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.failures as f64 / self.trials as f64
        }
    }

    pub fn merge(&self, other: &CellStats) -> CellStats {
        CellStats { trials: self.trials + other.trials, failures: self.failures + other.failures }
    }

    /// Wilson score interval at normal quantile `z`.
    pub fn wilson(&self, z: f64) -> (f64, f64) {
        if self.trials == 0 {
            return (0.0, 1.0);
        }
        let n = self.trials as f64;
        let p = self.fraction();
        let z2 = z * z;
        let denom = 1.0 + z2 / n;
        let centre = (p + z2 / (2.0 * n)) / denom;
        let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
        ((centre - half).max(0.0), (centre + half).min(1.0))
    }
}

/// Normal quantile of a two-sided 95% interval.
pub const Z95: f64 = 1.959963984540054;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn trial_rng(seed: u64, wq: u64, ws: u64, trial: u64) -> ChaCha8Rng {
    let h = [wq, ws, trial].iter().fold(splitmix64(seed), |h, &v| splitmix64(h ^ v));
    ChaCha8Rng::seed_from_u64(h)
}

fn random_pauli<R: Rng>(rng: &mut R, n: usize, w: usize) -> PauliOperator {
    let mut e = PauliOperator::identity(n);
    for q in sample(rng, n, w) {
        e.set(q, PauliLetter::NONTRIVIAL[rng.gen_range(0..3)]);
    }
    e
}

fn random_flips<R: Rng>(rng: &mut R, n: usize, w: usize) -> Bits {
    Bits::from_positions(n, sample(rng, n, w))
}

/// Runs trials `first .. first + count` of cell `(wq, ws)`.
pub fn run_cell(
    q: &QdsCode,
    decoder: &LookupDecoder,
    wq: usize,
    ws: usize,
    first: u64,
    count: u64,
    seed: u64,
) -> Result<CellStats> {
    let (n, n_s) = (q.base().n(), q.n_s());
    if wq > n || ws > n_s {
        return Err(Error::Parameter(format!("cell ({wq},{ws}) exceeds code size ({n},{n_s})")));
    }
    let mut stats = CellStats::default();
    for trial in first..first + count {
        let mut rng = trial_rng(seed, wq as u64, ws as u64, trial);
        let e = random_pauli(&mut rng, n, wq);
        let flips = random_flips(&mut rng, n_s, ws);
        stats.trials += 1;
        if !q.corrects(decoder, &e, &flips)? {
            stats.failures += 1;
        }
    }
    Ok(stats)
}

/// Failure fraction of cell `(wq, ws)` over `trials` samples.
pub fn estimate_cell(
    q: &QdsCode,
    decoder: &LookupDecoder,
    wq: usize,
    ws: usize,
    trials: u64,
    seed: u64,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be at least 1".into()));
    }
    Ok(run_cell(q, decoder, wq, ws, 0, trials, seed)?.fraction())
}

/// Identity of the simulated code, stored with every grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeMeta {
    pub code: String,
    pub n: usize,
    pub k: usize,
    /// Minimum distance of the base code; absent when `k = 0`.
    pub d: Option<usize>,
    pub ell: usize,
    pub sm: String,
    pub n_s: usize,
    pub t_s: usize,
    /// Guaranteed data-error weight `⌊(d - 1) / 2⌋`.
    pub t_q: usize,
}

impl CodeMeta {
    pub fn new(code_name: &str, q: &QdsCode, d: Option<usize>) -> Self {
        CodeMeta {
            code: code_name.to_string(),
            n: q.base().n(),
            k: q.base().k(),
            d,
            ell: q.base().ell(),
            sm: q.sm().kind().to_string(),
            n_s: q.n_s(),
            t_s: q.sm().t_s(),
            t_q: d.map_or(0, |d| d.saturating_sub(1) / 2),
        }
    }
}

/// How many trials each cell receives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialPlan {
    /// Cells with `w_q <= t_q + 1` and `w_s <= t_s + 1`.
    pub boundary: u64,
    pub far: u64,
    pub max_wq: Option<usize>,
    pub max_ws: Option<usize>,
}

impl Default for TrialPlan {
    fn default() -> Self {
        TrialPlan { boundary: 10_000, far: 1_000, max_wq: None, max_ws: None }
    }
}

impl TrialPlan {
    pub fn uniform(trials: u64) -> Self {
        TrialPlan { boundary: trials, far: trials, ..Default::default() }
    }

    pub fn trials_for(&self, meta: &CodeMeta, wq: usize, ws: usize) -> u64 {
        if wq <= meta.t_q + 1 && ws <= meta.t_s + 1 {
            self.boundary
        } else {
            self.far
        }
    }
}

/// Per-cell Monte Carlo results for one code and root seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "GridFile", try_from = "GridFile")]
pub struct SimGrid {
    pub code_meta: CodeMeta,
    pub seed: u64,
    /// Free-form run configuration echoed into the file.
    pub config: serde_json::Value,
    pub cells: BTreeMap<(usize, usize), CellStats>,
}

#[derive(Serialize, Deserialize)]
struct GridFile {
    code_meta: CodeMeta,
    seed: u64,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    config: serde_json::Value,
    cells: Vec<CellRecord>,
}

#[derive(Serialize, Deserialize)]
struct CellRecord {
    wq: usize,
    ws: usize,
    trials: u64,
    failures: u64,
}

impl From<SimGrid> for GridFile {
    fn from(g: SimGrid) -> Self {
        GridFile {
            code_meta: g.code_meta,
            seed: g.seed,
            config: g.config,
            cells: g
                .cells
                .into_iter()
                .map(|((wq, ws), c)| CellRecord { wq, ws, trials: c.trials, failures: c.failures })
                .collect(),
        }
    }
}

impl TryFrom<GridFile> for SimGrid {
    type Error = Error;

    fn try_from(f: GridFile) -> Result<Self> {
        let mut cells = BTreeMap::new();
        for c in f.cells {
            if c.failures > c.trials {
                return Err(Error::Parse(format!("cell ({},{}) has more failures than trials", c.wq, c.ws)));
            }
            if c.wq > f.code_meta.n || c.ws > f.code_meta.n_s {
                return Err(Error::Parse(format!("cell ({},{}) outside code size", c.wq, c.ws)));
            }
            if cells.insert((c.wq, c.ws), CellStats { trials: c.trials, failures: c.failures }).is_some() {
                return Err(Error::Parse(format!("duplicate cell ({},{})", c.wq, c.ws)));
            }
        }
        Ok(SimGrid { code_meta: f.code_meta, seed: f.seed, config: f.config, cells })
    }
}

impl SimGrid {
    pub fn empty(code_meta: CodeMeta, seed: u64) -> Self {
        SimGrid { code_meta, seed, config: serde_json::Value::Null, cells: BTreeMap::new() }
    }

    /// Simulates every cell allowed by `plan`, in parallel.
    pub fn build(
        q: &QdsCode,
        decoder: &LookupDecoder,
        code_meta: CodeMeta,
        plan: &TrialPlan,
        seed: u64,
    ) -> Result<Self> {
        let mut grid = SimGrid::empty(code_meta, seed);
        grid.extend(q, decoder, plan)?;
        Ok(grid)
    }

    /// Tops every planned cell up to its planned trial count. Additional
    /// trials continue each cell's stream where it stopped.
    pub fn extend(&mut self, q: &QdsCode, decoder: &LookupDecoder, plan: &TrialPlan) -> Result<()> {
        let meta = &self.code_meta;
        if q.base().n() != meta.n || q.n_s() != meta.n_s {
            return Err(Error::Parameter("grid metadata does not match the code".into()));
        }
        let max_wq = plan.max_wq.unwrap_or(meta.n).min(meta.n);
        let max_ws = plan.max_ws.unwrap_or(meta.n_s).min(meta.n_s);
        let work: Vec<(usize, usize, u64, u64)> = (0..=max_wq)
            .flat_map(|wq| (0..=max_ws).map(move |ws| (wq, ws)))
            .filter_map(|(wq, ws)| {
                let have = self.cells.get(&(wq, ws)).map_or(0, |c| c.trials);
                let want = plan.trials_for(meta, wq, ws);
                (want > have).then_some((wq, ws, have, want - have))
            })
            .collect();
        let seed = self.seed;
        let results: Vec<((usize, usize), CellStats)> = work
            .into_par_iter()
            .map(|(wq, ws, first, count)| run_cell(q, decoder, wq, ws, first, count, seed).map(|s| ((wq, ws), s)))
            .collect::<Result<_>>()?;
        for (key, stats) in results {
            let merged = self.cells.get(&key).copied().unwrap_or_default().merge(&stats);
            self.cells.insert(key, merged);
        }
        Ok(())
    }

    /// Adds the counts of another grid of the same code and seed.
    pub fn merge(&mut self, other: &SimGrid) -> Result<()> {
        if self.code_meta != other.code_meta || self.seed != other.seed {
            return Err(Error::Parameter("grids describe different codes or seeds".into()));
        }
        for (key, stats) in &other.cells {
            let merged = self.cells.get(key).copied().unwrap_or_default().merge(stats);
            self.cells.insert(*key, merged);
        }
        Ok(())
    }

    pub fn cell(&self, wq: usize, ws: usize) -> Option<&CellStats> {
        self.cells.get(&(wq, ws))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grid serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Recombined failure probability with a conservative 95% band.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Combined {
    pub p_err: f64,
    /// Total `A` weight of cells left out of the sum.
    pub truncation_mass: f64,
    /// Σ A · (Wilson lower bound).
    pub lower: f64,
    /// Σ A · (Wilson upper bound) plus the truncated mass. Cells inside
    /// the guaranteed region (`w_q <= t_q`, `w_s <= t_s`) are exact zeros
    /// and contribute nothing to either bound.
    pub upper: f64,
}

/// Weighted sum over cells. Cells whose prefactor is zero or below
/// `truncation` are dropped; any other cell must be present in the grid.
pub fn combine_grid(grid: &SimGrid, p_q: f64, p_s: f64, truncation: f64) -> Result<Combined> {
    check_probability("p_q", p_q)?;
    check_probability("p_s", p_s)?;
    let (n, n_s) = (grid.code_meta.n, grid.code_meta.n_s);
    let a_s: Vec<f64> = (0..=n_s).map(|w| binomial_pmf(n_s, w, p_s)).collect();
    let mut out = Combined { p_err: 0.0, truncation_mass: 0.0, lower: 0.0, upper: 0.0 };
    for wq in 0..=n {
        let a_q = binomial_pmf(n, wq, p_q);
        for (ws, &a_ws) in a_s.iter().enumerate() {
            let a = a_q * a_ws;
            if a == 0.0 || a < truncation {
                out.truncation_mass += a;
                continue;
            }
            let cell = grid.cell(wq, ws).filter(|c| c.trials > 0).ok_or(Error::MissingCell { wq, ws })?;
            let guaranteed = wq <= grid.code_meta.t_q && ws <= grid.code_meta.t_s && cell.failures == 0;
            let (lo, hi) = if guaranteed { (0.0, 0.0) } else { cell.wilson(Z95) };
            out.p_err += a * cell.fraction();
            out.lower += a * lo;
            out.upper += a * hi;
        }
    }
    out.upper += out.truncation_mass;
    Ok(out)
}

/// One point of a `p_err` curve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurvePoint {
    pub p_s: f64,
    pub p_q: f64,
    pub combined: Combined,
}

/// Recombines `grid` at each `p_s` with `p_q = ratio · p_s`.
pub fn curve(grid: &SimGrid, p_points: &[f64], ratio: f64, truncation: f64) -> Result<Vec<CurvePoint>> {
    p_points
        .iter()
        .map(|&p_s| {
            let p_q = ratio * p_s;
            Ok(CurvePoint { p_s, p_q, combined: combine_grid(grid, p_q, p_s, truncation)? })
        })
        .collect()
}

/// Builds the grid once, then recombines it per point.
#[allow(clippy::too_many_arguments)]
pub fn sweep(
    q: &QdsCode,
    decoder: &LookupDecoder,
    code_meta: CodeMeta,
    p_points: &[f64],
    ratio: f64,
    plan: &TrialPlan,
    seed: u64,
    truncation: f64,
) -> Result<(SimGrid, Vec<CurvePoint>)> {
    let grid = SimGrid::build(q, decoder, code_meta, plan, seed)?;
    let points = curve(&grid, p_points, ratio, truncation)?;
    Ok((grid, points))
}

/// CSV with header `p_s,p_q,p_err,truncation_mass`.
pub fn curve_csv(points: &[CurvePoint]) -> String {
    let mut s = String::from("p_s,p_q,p_err,truncation_mass\n");
    for p in points {
        s.push_str(&format!("{:e},{:e},{:e},{:e}\n", p.p_s, p.p_q, p.combined.p_err, p.combined.truncation_mass));
    }
    s
}

/// Least-squares slope of `log y` against `log x`, skipping non-positive `y`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> =
        points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    if logs.len() < 2 {
        return None;
    }
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// `count` log-spaced points from `lo` to `hi` inclusive.
pub fn log_space(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..count).map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp()).collect()
        }
    }
}

/// Unstratified Monte Carlo: every qubit and every measured bit fails
/// independently. With `weight_aware`, row `i` of `H_Q` flips with
/// probability [`stabilizer_meas_error_prob`]`(wt(row_i), p_s)`; this
/// breaks exchangeability of the measured bits, so no cell grid exists.
pub fn simulate_direct(
    q: &QdsCode,
    decoder: &LookupDecoder,
    model: &ErrorModel,
    trials: u64,
    seed: u64,
) -> Result<CellStats> {
    let n = q.base().n();
    let flip_probs: Vec<f64> = if model.weight_aware {
        q.h_q()
            .row_iter()
            .map(|row| stabilizer_meas_error_prob(PauliOperator::from_symplectic(row)?.weight().max(1), model.p_s))
            .collect::<Result<_>>()?
    } else {
        vec![model.p_s; q.n_s()]
    };
    let chunk = |t: u64| -> Result<bool> {
        let mut rng = trial_rng(seed, u64::MAX, u64::MAX, t);
        let mut e = PauliOperator::identity(n);
        for qubit in 0..n {
            if rng.gen::<f64>() < model.p_q {
                e.set(qubit, PauliLetter::NONTRIVIAL[rng.gen_range(0..3)]);
            }
        }
        let flips = Bits::from_bools(&flip_probs.iter().map(|&p| rng.gen::<f64>() < p).collect::<Vec<_>>());
        q.corrects(decoder, &e, &flips)
    };
    let failures =
        (0..trials).into_par_iter().map(|t| chunk(t).map(|ok| u64::from(!ok))).try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(CellStats { trials, failures })
}
