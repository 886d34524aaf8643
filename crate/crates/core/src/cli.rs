//! The `cjl` command line: seeded verification runs emitting JSON reports.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::distinguish::{distinguish, Family};
use crate::error::{Error, Result};
use crate::fox::{d1_dim_with_ratio, is_irreducible, Presentation, RepPoint};
use crate::gfamily::{
    block_rank, degeneration_check, f_poly, f_roots, halving_sequence, invariant_profile_g,
    sample_generic_rep_g, subfamilies, GParams,
};
use crate::hfamily::{
    double_root_check, fiber_counts, gamma_identities_check, invariant_profile_h,
    m2_double_root_lambdas, parabolic_search, power_identity_residual, sample_generic_rep_h,
    sample_r_lambda, sample_sigma,
};
use crate::numerics::{int_poly_squarefree, roots_of_unity, Complex64, Mat2, RANK_RATIO};
use crate::sampling::{annulus, rng_from_seed, split_seed, unit_square};
use crate::RESIDUAL_TOL;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cjl",
    version,
    about = "Cohomology jump loci of the G and H families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Squarefreeness of f, the gamma identities, roots of h_lambda and the parabolic case.
    VerifyLemmas,
    /// Sample points of every subfamily and check them.
    Sample,
    /// Print the invariant profile of one group.
    Invariants,
    /// Compare the invariant profiles of two groups.
    Distinguish,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyArg {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "H", alias = "h")]
    H,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::G => Family::G,
            FamilyArg::H => Family::H,
        }
    }
}

#[derive(clap::Args, Debug, Clone)]
pub struct Options {
    /// m; for verify-lemmas the bound of the grid |m| <= M.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub m: Option<i64>,
    /// n; for verify-lemmas the bound of the grid 1 <= n <= N.
    #[arg(long, global = true)]
    pub n: Option<i64>,
    /// m of the second group (distinguish).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub m2: Option<i64>,
    /// n of the second group (distinguish).
    #[arg(long, global = true)]
    pub n2: Option<i64>,
    #[arg(long, global = true, value_enum, default_value = "G")]
    pub family: FamilyArg,
    /// Points per subfamily (sample) or random cases per sweep (verify-lemmas).
    #[arg(long, global = true)]
    pub count: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = RESIDUAL_TOL)]
    pub tol_residual: f64,
    /// sigma_2 / sigma_1 below which the Fox matrix drops rank.
    #[arg(long, global = true, default_value_t = RANK_RATIO)]
    pub tol_rank: f64,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Omit wall time and timestamp so reports are byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
}

/// Validated settings echoed into every report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub family: FamilyArg,
    pub m: i64,
    pub n: i64,
    pub m2: Option<i64>,
    pub n2: Option<i64>,
    pub count: usize,
    pub seed: u64,
    pub tol_residual: f64,
    pub tol_rank: f64,
}

/// One checked case of a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub index: usize,
    pub kind: String,
    /// Sub-seed that replays this case, when it is random.
    pub seed: Option<u64>,
    pub params: Value,
    pub passed: bool,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config: RunConfig,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    /// Verdict or profile for `distinguish` and `invariants`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed == 0 {
            EXIT_PASS
        } else {
            EXIT_FAILURE
        }
    }
}

fn config_error(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

impl RunConfig {
    pub fn from_options(command: Command, o: &Options) -> Result<Self> {
        if !(o.tol_residual > 0.0 && o.tol_residual.is_finite()) {
            return Err(config_error("--tol-residual must be positive"));
        }
        if !(o.tol_rank > 0.0 && o.tol_rank < 1e-4) {
            return Err(config_error("--tol-rank must lie in (0, 1e-4)"));
        }
        let (dm, dn, dcount) = match command {
            Command::VerifyLemmas => (6, 6, 200),
            _ => (1, 1, 20),
        };
        let cfg = RunConfig {
            family: o.family,
            m: o.m.unwrap_or(dm),
            n: o.n.unwrap_or(dn),
            m2: o.m2,
            n2: o.n2,
            count: o.count.unwrap_or(dcount),
            seed: o.seed,
            tol_residual: o.tol_residual,
            tol_rank: o.tol_rank,
        };
        if cfg.count == 0 {
            return Err(config_error("--count must be positive"));
        }
        match command {
            Command::VerifyLemmas => {
                if cfg.m < 1 || cfg.n < 1 {
                    return Err(config_error(
                        "grid bounds --m and --n must be at least 1 (m = 0 is excluded)",
                    ));
                }
            }
            Command::Distinguish => {
                let (m2, n2) = cfg
                    .m2
                    .zip(cfg.n2)
                    .ok_or_else(|| config_error("distinguish needs --m2 and --n2"))?;
                check_family_params(cfg.family, cfg.m, cfg.n)?;
                check_family_params(cfg.family, m2, n2)?;
            }
            _ => check_family_params(cfg.family, cfg.m, cfg.n)?,
        }
        Ok(cfg)
    }
}

fn check_family_params(family: FamilyArg, m: i64, n: i64) -> Result<()> {
    match family {
        FamilyArg::G if m == 0 || n < 1 => {
            Err(config_error(format!("G({m},{n}) needs m != 0 and n >= 1")))
        }
        FamilyArg::H if m < 1 || n < 1 => Err(config_error(format!("H({m},{n}) needs m, n >= 1"))),
        _ => Ok(()),
    }
}

type Check = Box<dyn Fn(Option<u64>) -> Result<(bool, Value)> + Send + Sync>;

/// A case to run: a label, its parameters, an optional sub-seed and the check.
struct Job {
    kind: String,
    params: Value,
    seed: Option<u64>,
    run: Check,
}

impl Job {
    fn new<F>(kind: &str, params: Value, seed: Option<u64>, run: F) -> Self
    where
        F: Fn(Option<u64>) -> Result<(bool, Value)> + Send + Sync + 'static,
    {
        Job {
            kind: kind.to_string(),
            params,
            seed,
            run: Box::new(run),
        }
    }
}

fn run_jobs(jobs: Vec<Job>) -> Vec<CaseRecord> {
    jobs.into_par_iter()
        .enumerate()
        .map(|(index, job)| {
            let (passed, details) = match (job.run)(job.seed) {
                Ok(r) => r,
                Err(e) => (false, json!({ "error": e.to_string() })),
            };
            CaseRecord {
                index,
                kind: job.kind,
                seed: job.seed,
                params: job.params,
                passed,
                details,
            }
        })
        .collect()
}

/// Residual, `d¹`, irreducibility and `det_∗` of a point of `G(m,n)` or `H(m,n)`.
fn point_details(
    p: &Presentation,
    rep: &RepPoint,
    ratio: f64,
) -> Result<(f64, usize, bool, Value)> {
    let residual = rep.relation_residual_scaled(p);
    let irreducible = is_irreducible(rep);
    let d1 = if irreducible {
        d1_dim_with_ratio(p, rep, ratio)?
    } else {
        0
    };
    let v = json!({
        "residual": residual,
        "residual_abs": rep.relation_residual(p),
        "d1": d1,
        "irreducible": irreducible,
        "det_star": rep.det_star(),
        "params": rep.params(),
    });
    Ok((residual, d1, irreducible, v))
}

fn verify_lemmas_jobs(cfg: &RunConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    let mut next_seed = {
        let mut i = 0u64;
        let seed = cfg.seed;
        move || {
            i += 1;
            split_seed(seed, i)
        }
    };
    for m in (-cfg.m..=cfg.m).filter(|&m| m != 0) {
        for n in 1..=cfg.n {
            jobs.push(Job::new(
                "squarefree_f",
                json!({ "m": m, "n": n }),
                None,
                move |_| {
                    let exact = int_poly_squarefree(&f_poly(m, n)?)?;
                    let roots = f_roots(m, n)?.len() as i64;
                    let ell = GParams::new(m, n)?.ell;
                    Ok((
                        exact && roots == ell,
                        json!({ "squarefree": exact, "distinct_roots": roots, "ell": ell }),
                    ))
                },
            ));
        }
    }
    let tol = cfg.tol_residual;
    let batches = 10usize;
    let per_batch = cfg.count.div_ceil(batches);
    for b in 0..batches {
        jobs.push(Job::new(
            "gamma_identities",
            json!({ "samples": per_batch, "k_max": 40 }),
            Some(next_seed()),
            move |seed| {
                let mut rng = rng_from_seed(seed.unwrap_or_default());
                let mut worst: f64 = 0.0;
                let mut worst_power: f64 = 0.0;
                for _ in 0..per_batch {
                    let r = unit_square(&mut rng) * 3.0;
                    worst = worst.max(gamma_identities_check(r, 40)?);
                    let x = random_sl2(&mut rng);
                    for k in [-40, -7, -1, 0, 1, 2, 13, 40] {
                        worst_power = worst_power.max(power_identity_residual(&x, k)?);
                    }
                }
                Ok((
                    worst <= tol && worst_power <= 1e-8,
                    json!({ "batch": b, "max_identity_residual": worst, "max_power_residual": worst_power }),
                ))
            },
        ));
    }
    for m in 1..=cfg.m.min(5) {
        for n in 1..=cfg.n {
            jobs.push(Job::new(
                "h_double_roots",
                json!({ "m": m, "n": n, "grid": 50 }),
                Some(next_seed()),
                move |seed| {
                    let mut rng = rng_from_seed(seed.unwrap_or_default());
                    let mut grid = (0..50)
                        .map(|_| sample_r_lambda(m, n, &mut rng))
                        .collect::<Result<Vec<_>>>()?;
                    if m == 2 {
                        grid.extend(m2_double_root_lambdas(n)?);
                    }
                    let report = double_root_check(m, n, &grid)?;
                    Ok((
                        report.passed(),
                        serde_json::to_value(&report).unwrap_or(Value::Null),
                    ))
                },
            ));
        }
    }
    for m in 1..=cfg.m.min(4) {
        for n in 1..=cfg.n.min(4) {
            jobs.push(Job::new(
                "parabolic_exclusion",
                json!({ "m": m, "n": n, "resolution": 30 }),
                None,
                move |_| {
                    let report = parabolic_search(m, n, 30)?;
                    Ok((
                        report.passed(),
                        serde_json::to_value(&report).unwrap_or(Value::Null),
                    ))
                },
            ));
        }
    }
    jobs
}

fn random_sl2(rng: &mut impl rand::Rng) -> Mat2 {
    loop {
        let x = Mat2::new(
            unit_square(rng),
            unit_square(rng),
            unit_square(rng),
            unit_square(rng),
        ) * Complex64::new(2.0, 0.0);
        let det = x.det();
        if det.norm() > 0.05 {
            return x * det.sqrt().inv();
        }
    }
}

fn sample_g_jobs(cfg: &RunConfig) -> Result<Vec<Job>> {
    let gp = GParams::new(cfg.m, cfg.n)?;
    let (tol, ratio) = (cfg.tol_residual, cfg.tol_rank);
    let mut jobs = Vec::new();
    let mut idx = 0u64;
    let mut seed = || {
        idx += 1;
        Some(split_seed(cfg.seed, idx))
    };
    for sub in subfamilies(&gp)? {
        for _ in 0..cfg.count {
            jobs.push(Job::new(sub.label(), json!(sub), seed(), move |s| {
                let rep = sub.sample(&gp, &mut rng_from_seed(s.unwrap_or_default()))?;
                let p = Presentation::g_family(gp.m, gp.n);
                let (res, d1, irr, mut v) = point_details(&p, &rep, ratio)?;
                let blocks = block_rank(gp.m, gp.n, &rep)?;
                v["block_rank"] = json!(blocks);
                Ok((res <= tol && irr && d1 == 3, v))
            }));
        }
    }
    if gp.anti_diagonal() {
        let n = gp.n;
        let one = Complex64::new(1.0, 0.0);
        for zeta in std::iter::once(one).chain(roots_of_unity(n as usize)?) {
            jobs.push(Job::new(
                "degeneration",
                json!({ "zeta": zeta }),
                seed(),
                move |s| {
                    let mut rng = rng_from_seed(s.unwrap_or_default());
                    let aprime = unit_square(&mut rng);
                    let cprime = if (zeta - 1.0).norm() < 1e-12 {
                        Complex64::new(1.0 / n as f64, 0.0)
                    } else {
                        annulus(&mut rng, 0.5, 1.5)
                    };
                    let report =
                        degeneration_check(n, zeta, aprime, cprime, &halving_sequence(zeta, 4, 6))?;
                    let ok = report.converges && report.max_residual <= tol;
                    let mut v = serde_json::to_value(&report).unwrap_or(Value::Null);
                    v["aprime"] = json!(aprime);
                    v["cprime"] = json!(cprime);
                    Ok((ok, v))
                },
            ));
        }
    }
    for _ in 0..cfg.count {
        jobs.push(Job::new("generic", json!({}), seed(), move |s| {
            let rep = sample_generic_rep_g(&gp, s.unwrap_or_default())?;
            let (res, d1, irr, v) =
                point_details(&Presentation::g_family(gp.m, gp.n), &rep, ratio)?;
            Ok((res <= tol && irr && d1 == 2, v))
        }));
    }
    Ok(jobs)
}

fn sample_h_jobs(cfg: &RunConfig) -> Vec<Job> {
    let (m, n) = (cfg.m, cfg.n);
    let (tol, ratio) = (cfg.tol_residual, cfg.tol_rank);
    let mut jobs = Vec::new();
    let mut idx = 0u64;
    let mut seed = || {
        idx += 1;
        Some(split_seed(cfg.seed, idx))
    };
    for _ in 0..cfg.count {
        jobs.push(Job::new("sigma", json!({}), seed(), move |s| {
            let (rep, report) = sample_sigma(m, n, &mut rng_from_seed(s.unwrap_or_default()))?;
            let (_, d1, irr, mut v) = point_details(&Presentation::h_family(m, n), &rep, ratio)?;
            v["report"] = serde_json::to_value(report).unwrap_or(Value::Null);
            let ok = report.residual <= tol
                && irr
                && d1 == 3
                && report.trace_check <= tol
                && report.h1_check <= tol
                && report.det_h_margin > crate::hfamily::H_EXCLUSION_TOL;
            Ok((ok, v))
        }));
    }
    let count = cfg.count;
    jobs.push(Job::new(
        "fiber_count",
        json!({ "samples": count }),
        seed(),
        move |s| {
            let counts = fiber_counts(m, n, s.unwrap_or_default(), count)?;
            let ok = counts.iter().all(|&c| c as i64 == m);
            Ok((ok, json!({ "counts": counts, "expected": m })))
        },
    ));
    for _ in 0..cfg.count {
        jobs.push(Job::new("generic", json!({}), seed(), move |s| {
            let rep = sample_generic_rep_h(m, n, s.unwrap_or_default())?;
            let (res, d1, irr, v) = point_details(&Presentation::h_family(m, n), &rep, ratio)?;
            Ok((res <= tol && irr && d1 == 2, v))
        }));
    }
    jobs
}

fn invariants_job(cfg: &RunConfig) -> Result<Value> {
    Ok(match cfg.family {
        FamilyArg::G => serde_json::to_value(invariant_profile_g(cfg.m, cfg.n)?),
        FamilyArg::H => serde_json::to_value(invariant_profile_h(cfg.m, cfg.n)?),
    }
    .unwrap_or(Value::Null))
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::VerifyLemmas => "verify-lemmas",
        Command::Sample => "sample",
        Command::Invariants => "invariants",
        Command::Distinguish => "distinguish",
    }
}

/// Runs one command. Configuration problems are returned as `Error::Config`;
/// verification failures are recorded in the report.
pub fn execute(command: Command, cfg: &RunConfig, timestamp: bool) -> Result<Report> {
    let start = Instant::now();
    let mut result = None;
    let cases = match command {
        Command::VerifyLemmas => run_jobs(verify_lemmas_jobs(cfg)),
        Command::Sample => match cfg.family {
            FamilyArg::G => run_jobs(sample_g_jobs(cfg)?),
            FamilyArg::H => run_jobs(sample_h_jobs(cfg)),
        },
        Command::Invariants => {
            let (passed, details) = match invariants_job(cfg) {
                Ok(v) => {
                    result = Some(v.clone());
                    (true, v)
                }
                Err(e) => (false, json!({ "error": e.to_string() })),
            };
            vec![CaseRecord {
                index: 0,
                kind: "profile".into(),
                seed: None,
                params: json!({ "m": cfg.m, "n": cfg.n }),
                passed,
                details,
            }]
        }
        Command::Distinguish => {
            let (m2, n2) = (cfg.m2.unwrap_or_default(), cfg.n2.unwrap_or_default());
            let (passed, details) = match distinguish(cfg.family.into(), cfg.m, cfg.n, m2, n2) {
                Ok(v) => {
                    let v = serde_json::to_value(v).unwrap_or(Value::Null);
                    result = Some(v.clone());
                    (true, v)
                }
                Err(e) => (false, json!({ "error": e.to_string() })),
            };
            vec![CaseRecord {
                index: 0,
                kind: "verdict".into(),
                seed: None,
                params: json!({ "left": [cfg.m, cfg.n], "right": [m2, n2] }),
                passed,
                details,
            }]
        }
    };
    let passed = cases.iter().filter(|c| c.passed).count();
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: command_name(command).into(),
        config: cfg.clone(),
        summary: Summary {
            passed,
            failed: cases.len() - passed,
        },
        cases,
        result,
        wall_time_s: timestamp.then(|| start.elapsed().as_secs_f64()),
        timestamp: timestamp.then(|| {
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or_default()
        }),
    })
}

fn thread_pool() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var("CJL_THREADS") {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| {
            config_error(format!(
                "CJL_THREADS must be a nonnegative integer, got {v:?}"
            ))
        })?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| config_error(e.to_string()))
}

/// Parses `args`, runs the command and writes the report; returns the exit code.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_CONFIG
            } else {
                EXIT_PASS
            };
        }
    };
    match run_cli(&cli) {
        Ok(code) => code,
        Err(Error::Config(msg)) => {
            eprintln!("cjl: configuration error: {msg}");
            EXIT_CONFIG
        }
        Err(e) => {
            eprintln!("cjl: {e}");
            EXIT_FAILURE
        }
    }
}

fn run_cli(cli: &Cli) -> Result<i32> {
    let cfg = RunConfig::from_options(cli.command, &cli.opts).map_err(|e| match e {
        Error::Config(_) => e,
        other => config_error(other.to_string()),
    })?;
    let pool = thread_pool()?;
    let report = pool.install(|| execute(cli.command, &cfg, !cli.opts.no_timestamp))?;
    let text = to_json(&report);
    match &cli.opts.out {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| config_error(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(match cli.command {
        Command::Distinguish => {
            if report.summary.failed == 0 {
                EXIT_PASS
            } else {
                EXIT_FAILURE
            }
        }
        _ => report.exit_code(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).unwrap_or_default();
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("cjl").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn config_validation() {
        let cli = parse(&["verify-lemmas", "--tol-rank", "0.5"]);
        assert!(matches!(
            RunConfig::from_options(cli.command, &cli.opts),
            Err(Error::Config(_))
        ));
        let cli = parse(&["verify-lemmas", "--m", "0"]);
        assert!(RunConfig::from_options(cli.command, &cli.opts).is_err());
        let cli = parse(&["invariants", "--family", "G", "--m", "0", "--n", "2"]);
        assert!(RunConfig::from_options(cli.command, &cli.opts).is_err());
        let cli = parse(&["distinguish", "--m", "1", "--n", "1"]);
        assert!(RunConfig::from_options(cli.command, &cli.opts).is_err());
        let cli = parse(&["sample", "--family", "G", "--m", "-2", "--n", "2"]);
        assert_eq!(
            RunConfig::from_options(cli.command, &cli.opts).unwrap().m,
            -2
        );
    }

    #[test]
    fn distinguish_report() {
        let cli = parse(&[
            "distinguish",
            "--m",
            "1",
            "--n",
            "2",
            "--m2",
            "2",
            "--n2",
            "1",
        ]);
        let cfg = RunConfig::from_options(cli.command, &cli.opts).unwrap();
        let report = execute(cli.command, &cfg, false).unwrap();
        assert_eq!(report.exit_code(), 0);
        assert_eq!(report.result.unwrap()["distinguished"], json!(true));
    }

    #[test]
    fn small_sample_is_deterministic() {
        let cli = parse(&[
            "sample", "--family", "H", "--m", "2", "--n", "1", "--count", "2",
        ]);
        let cfg = RunConfig::from_options(cli.command, &cli.opts).unwrap();
        let a = to_json(&execute(cli.command, &cfg, false).unwrap());
        let b = to_json(&execute(cli.command, &cfg, false).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": 1"));
    }
}
