use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use qds_core::qds::{overhead_csv, overhead_table, verify_guarantee};
use qds_core::sim::{curve, curve_csv, log_space, CodeMeta, SimGrid, TrialPlan};
use qds_core::stabilizer::DEFAULT_ENUMERATION_BUDGET;
use qds_core::{BchCode, BchSm, LookupDecoder, QdsCode, RepetitionSm, StabilizerCode, SyndromeMeasurementCode};
use serde_json::{json, Value};

use crate::output::{config, emit, pretty, read, sidecar, usage, write_all, CliError, CliResult};
use crate::{BuiltinCode, CodeArgs, Format, SmKind};

struct Instance {
    name: String,
    q: QdsCode,
    d: Option<usize>,
}

impl Instance {
    fn meta(&self) -> CodeMeta {
        CodeMeta::new(&self.name, &self.q, self.d)
    }
}

fn code_params(args: &CodeArgs) -> Value {
    json!({
        "code": args.code.map(|_| "steane"),
        "code_file": args.code_file.as_ref().map(|p| p.display().to_string()),
        "sm": format!("{:?}", args.sm).to_lowercase(),
        "t": args.t,
    })
}

fn load_instance(args: &CodeArgs) -> CliResult<Instance> {
    let (name, base) = match (&args.code, &args.code_file) {
        (Some(BuiltinCode::Steane), _) => ("steane".to_string(), StabilizerCode::steane()),
        (None, Some(path)) => (path.display().to_string(), StabilizerCode::from_text(&read(path)?)?),
        (None, None) => return Err(usage("one of --code or --code-file is required")),
    };
    let ell = base.ell();
    let sm: Arc<dyn SyndromeMeasurementCode> = match (args.sm, args.t) {
        (SmKind::Identity, None | Some(0)) => Arc::new(RepetitionSm::identity(ell)?),
        (SmKind::Identity, Some(_)) => return Err(usage("--sm identity corrects no flips; drop --t")),
        (_, None | Some(0)) => return Err(usage("--t must be at least 1 for this SM code")),
        (SmKind::Bch, Some(t)) => Arc::new(BchSm::for_syndrome(ell, t)?),
        (SmKind::Repetition, Some(t)) => Arc::new(RepetitionSm::new(ell, 2 * t + 1)?),
    };
    let d = base.min_distance(DEFAULT_ENUMERATION_BUDGET)?;
    Ok(Instance { name, q: QdsCode::assemble(base, sm)?, d })
}

pub fn bch_info(m: u32, t: usize, shorten: usize, matrix_out: Option<&Path>, format: Format) -> CliResult {
    let code = BchCode::new(m, t)?.shorten(shorten)?;
    let generator = code.generator_poly();
    let report = json!({
        "n": code.n(),
        "k": code.k(),
        "d": code.d(),
        "r": code.r(),
        "m": m,
        "t": t,
        "shorten": shorten,
        "generator": generator.to_hex(),
        "primitive_polynomial": code.field().primitive_polynomial().to_hex(),
        "config": config("bch info", json!({"m": m, "t": t, "shorten": shorten})),
    });
    let text = match format {
        Format::Json => pretty(&report),
        _ => format!(
            "{code} R={}\ngenerator {} = {generator}\nprimitive_polynomial {}\n",
            code.r(),
            generator.to_hex(),
            code.field().primitive_polynomial().to_hex()
        ),
    };
    if let Some(path) = matrix_out {
        write_all(&[(path, &code.generator_matrix().to_text())])?;
    }
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

pub fn assemble(args: &CodeArgs, out: Option<&Path>, meta_out: Option<&Path>) -> CliResult {
    let inst = load_instance(args)?;
    let q = &inst.q;
    let meta = json!({
        "n": q.base().n(),
        "k": q.base().k(),
        "d": inst.d,
        "r": q.extra_measurements(),
        "n_s": q.n_s(),
        "t_s": q.sm().t_s(),
        "sm": q.sm().kind(),
        "config": config("qds assemble", code_params(args)),
    });
    let matrix = q.h_q().to_text();
    let meta_text = pretty(&meta);
    let meta_path = meta_out.map(Path::to_path_buf).or_else(|| {
        out.map(|p| {
            let mut s = p.as_os_str().to_owned();
            s.push(".json");
            PathBuf::from(s)
        })
    });
    match (out, meta_path.as_deref()) {
        (Some(o), Some(m)) => write_all(&[(o, &matrix), (m, &meta_text)])?,
        (None, Some(m)) => {
            write_all(&[(m, &meta_text)])?;
            print!("{matrix}");
        }
        _ => {
            print!("{matrix}");
            eprint!("{meta_text}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// `lo:hi` (inclusive), a single value, or a comma list.
fn parse_int_range(spec: &str, flag: &str) -> CliResult<Vec<usize>> {
    let bad = || usage(format!("--{flag}: cannot parse '{spec}'"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let values = if let Some((lo, hi)) = spec.split_once(':') {
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(bad());
        }
        (lo..=hi).collect()
    } else {
        spec.split(',').map(num).collect::<CliResult<Vec<_>>>()?
    };
    if values.is_empty() || values.contains(&0) {
        return Err(usage(format!("--{flag}: values must be positive")));
    }
    Ok(values)
}

pub fn count(ell_spec: &str, t_spec: &str, out: Option<&Path>, format: Format) -> CliResult {
    let ells = parse_int_range(ell_spec, "ell-range")?;
    let ts = parse_int_range(t_spec, "t-range")?;
    let rows = overhead_table(&ells, &ts);
    let cfg = config("qds count", json!({"ell_range": ell_spec, "t_range": t_spec}));
    match format {
        Format::Json => emit(out, &pretty(&json!({"config": cfg, "rows": rows})))?,
        _ => {
            let csv = overhead_csv(&rows);
            match out {
                Some(p) => write_all(&[(p, &csv), (&sidecar(p), &pretty(&cfg))])?,
                None => print!("{csv}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(args: &CodeArgs, budget: u128) -> CliResult {
    let inst = load_instance(args)?;
    let q = &inst.q;
    let t_q = inst.d.map_or(0, |d| (d - 1) / 2);
    let decoder = LookupDecoder::build_complete(q.base(), budget)?;
    let cells = verify_guarantee(q, &decoder, t_q, budget)?;
    println!("# {} + {} n_s={}: t_q={} t_s={}", inst.name, q.sm().kind(), q.n_s(), t_q, q.sm().t_s());
    let (mut cases, mut failures) = (0, 0);
    for c in &cells {
        let verdict = if c.failures == 0 { "PASS" } else { "FAIL" };
        println!("{verdict} wq={} ws={} cases={} failures={}", c.wq, c.ws, c.cases, c.failures);
        cases += c.cases;
        failures += c.failures;
    }
    if failures > 0 {
        println!("FAIL {failures} of {cases} cases");
        return Err(CliError::VerifyFailed { cases, failures });
    }
    println!("PASS all {cases} cases");
    Ok(ExitCode::SUCCESS)
}

pub struct GridRequest {
    pub code: CodeArgs,
    pub trials: u64,
    pub trials_far: u64,
    pub seed: u64,
    pub max_wq: Option<usize>,
    pub max_ws: Option<usize>,
    pub out: PathBuf,
}

pub fn sim_grid(req: &GridRequest) -> CliResult {
    if req.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    let inst = load_instance(&req.code)?;
    let decoder = LookupDecoder::build_complete(inst.q.base(), DEFAULT_ENUMERATION_BUDGET)?;
    let plan = TrialPlan {
        boundary: req.trials,
        far: req.trials_far.clamp(1, req.trials),
        max_wq: req.max_wq,
        max_ws: req.max_ws,
    };
    let mut grid = SimGrid::build(&inst.q, &decoder, inst.meta(), &plan, req.seed)?;
    let mut params = code_params(&req.code);
    params["trials"] = json!(plan.boundary);
    params["trials_far"] = json!(plan.far);
    params["seed"] = json!(req.seed);
    params["max_wq"] = json!(req.max_wq);
    params["max_ws"] = json!(req.max_ws);
    grid.config = config("sim grid", params);
    write_all(&[(&req.out, &grid.to_json())])?;
    eprintln!("wrote {} cells to {}", grid.cells.len(), req.out.display());
    Ok(ExitCode::SUCCESS)
}

/// `lo:hi:logN`, `lo:hi:linN`, or a comma list.
fn parse_points(spec: &str) -> CliResult<Vec<f64>> {
    let bad = || usage(format!("--ps: cannot parse '{spec}'"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    let parts: Vec<&str> = spec.split(':').collect();
    let points = match parts.as_slice() {
        [lo, hi, kind] => {
            let (lo, hi) = (num(lo)?, num(hi)?);
            let count = |prefix: &str| kind.strip_prefix(prefix).and_then(|c| c.parse::<usize>().ok());
            if let Some(c) = count("log") {
                if lo <= 0.0 {
                    return Err(bad());
                }
                log_space(lo, hi, c)
            } else if let Some(c) = count("lin") {
                match c {
                    0 => vec![],
                    1 => vec![lo],
                    _ => (0..c).map(|i| lo + (hi - lo) * i as f64 / (c - 1) as f64).collect(),
                }
            } else {
                return Err(bad());
            }
        }
        [single] => single.split(',').map(num).collect::<CliResult<Vec<_>>>()?,
        _ => return Err(bad()),
    };
    if points.is_empty() || points.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(usage("--ps: need at least one probability in [0, 1]"));
    }
    Ok(points)
}

pub fn sim_sweep(
    grid_path: &Path,
    ps: &str,
    ratio: f64,
    truncation: f64,
    out: Option<&Path>,
    format: Format,
) -> CliResult {
    let points = parse_points(ps)?;
    if !(ratio >= 0.0 && points.iter().all(|p| ratio * p <= 1.0)) {
        return Err(usage("--ratio must keep p_q = ratio * p_s within [0, 1]"));
    }
    if truncation.is_nan() || truncation < 0.0 {
        return Err(usage("--truncation must be non-negative"));
    }
    let grid = SimGrid::from_json(&read(grid_path)?)?;
    let curve = curve(&grid, &points, ratio, truncation)?;
    let cfg = config(
        "sim sweep",
        json!({
            "grid": grid_path.display().to_string(),
            "ps": ps,
            "ratio": ratio,
            "truncation": truncation,
            "seed": grid.seed,
            "code_meta": grid.code_meta,
        }),
    );
    match format {
        Format::Json => emit(out, &pretty(&json!({"config": cfg, "points": curve})))?,
        _ => {
            let csv = curve_csv(&curve);
            match out {
                Some(p) => write_all(&[(p, &csv), (&sidecar(p), &pretty(&cfg))])?,
                None => print!("{csv}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_ranges() {
        assert_eq!(parse_int_range("5:8", "x").unwrap(), vec![5, 6, 7, 8]);
        assert_eq!(parse_int_range("3", "x").unwrap(), vec![3]);
        assert_eq!(parse_int_range("1,4,2", "x").unwrap(), vec![1, 4, 2]);
        for bad in ["8:5", "a:3", "", "0:2"] {
            assert!(parse_int_range(bad, "x").is_err(), "{bad}");
        }
    }

    #[test]
    fn point_specs() {
        let p = parse_points("1e-4:1e-1:log25").unwrap();
        assert_eq!(p.len(), 25);
        assert!((p[0] - 1e-4).abs() < 1e-18);
        assert_eq!(parse_points("0.1:0.3:lin3").unwrap().len(), 3);
        assert_eq!(parse_points("0.01,0.02").unwrap(), vec![0.01, 0.02]);
        for bad in ["1e-4:1e-1", "0:1:log5", "1e-4:1e-1:exp3", "2", "x"] {
            assert!(parse_points(bad).is_err(), "{bad}");
        }
    }
}
