//! `yangian`: plane partitions, 3-Jack polynomials and the verification suites from the command line.

mod cache;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use yangian_core::scalar::parse_rational;
use yangian_core::verify::{run_suite, Status, Suite, SuiteReport, VerifyOptions};
use yangian_core::{jack3, planepart, Coeff, Error as CoreError, JackTable, ModelConfig, PBasis, PlanePartition};

use cache::Cache;
use output::{Format, Render};

#[derive(Parser, Debug)]
#[command(name = "yangian", version, about = "Affine Yangian of gl(1), 3D bosons and 3-Jack polynomials")]
struct Cli {
    /// number of bosons (maximal plane-partition height)
    #[arg(long = "N", value_name = "N", global = true, default_value_t = 3)]
    big_n: usize,
    #[arg(long, global = true, default_value_t = 6)]
    max_level: usize,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Symbolic)]
    mode: Mode,
    /// probe point "h1,h2" with rational entries; repeatable
    #[arg(long, global = true, value_name = "H1,H2")]
    probe: Vec<String>,
    /// seeds the random probe points used when none are given
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Probe,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List plane partitions of size n with heights at most N.
    Enumerate {
        #[arg(value_name = "n")]
        size: usize,
    },
    /// Expand a 3-Jack polynomial, e.g. `jack "[[1,1]]"`.
    Jack { partition: String },
    /// 3-Jack product of two plane partitions, expanded in 3-Jacks.
    Lr { left: String, right: String },
    /// The generators P_{n,j} up to a level and the P-words of that level.
    PBasis { level: usize },
    /// Run a verification suite and report every identity.
    Verify { suite: String },
    /// Inspect or empty the table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    Status,
    Clear,
}

/// Bad input that clap could not catch.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(msg.into()))
}

/// Exit status for an error: 2 for bad input, 3 for an internal inconsistency.
fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match e.downcast_ref::<CoreError>() {
        Some(
            CoreError::Scalar(_)
            | CoreError::InvalidPartition(_)
            | CoreError::NotAddable { .. }
            | CoreError::NotRemovable { .. }
            | CoreError::ContentCollision { .. }
            | CoreError::Unsupported(_)
            | CoreError::Parse(_),
        ) => 2,
        _ => 3,
    }
}

fn parse_point(s: &str) -> Result<(BigRational, BigRational)> {
    let (a, b) = s.split_once(',').ok_or_else(|| usage(format!("probe point {s:?} is not of the form h1,h2")))?;
    let h1 = parse_rational(a.trim()).map_err(|e| usage(format!("probe point {s:?}: {e}")))?;
    let h2 = parse_rational(b.trim()).map_err(|e| usage(format!("probe point {s:?}: {e}")))?;
    Ok((h1, h2))
}

/// Small ratios h1/h2 sit on special lines of the parameter space.
fn simple_ratio(h1: &BigRational, h2: &BigRational) -> bool {
    let r = h1 / h2;
    let small = BigInt::from(3);
    r.numer().magnitude() <= small.magnitude() && r.denom() <= &small
}

/// Seeded random points away from degenerate and rational-ratio loci.
fn random_points(n: usize, count: usize, seed: u64) -> Vec<(BigRational, BigRational)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut draw = || {
            let num: i64 = rng.gen_range(2..=29) * if rng.gen_bool(0.5) { 1 } else { -1 };
            BigRational::new(num.into(), rng.gen_range(1..=11i64).into())
        };
        let (h1, h2) = (draw(), draw());
        if simple_ratio(&h1, &h2) || out.contains(&(h1.clone(), h2.clone())) {
            continue;
        }
        if ModelConfig::probe(n, h1.clone(), h2.clone()).is_ok() {
            out.push((h1, h2));
        }
    }
    out
}

struct Ctx {
    n: usize,
    max_level: usize,
    points: Option<Vec<(BigRational, BigRational)>>,
    cache: Cache,
    format: Format,
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Self> {
        if cli.big_n == 0 {
            return Err(usage("--N must be at least 1"));
        }
        let points = match cli.mode {
            Mode::Symbolic => None,
            Mode::Probe if cli.probe.is_empty() => Some(random_points(cli.big_n, 3, cli.seed)),
            Mode::Probe => {
                let pts = cli.probe.iter().map(|s| parse_point(s)).collect::<Result<Vec<_>>>()?;
                for (h1, h2) in &pts {
                    ModelConfig::probe(cli.big_n, h1.clone(), h2.clone()).map_err(|e| usage(e.to_string()))?;
                }
                Some(pts)
            }
        };
        let dir = cli.cache_dir.clone().unwrap_or_else(default_cache_dir);
        Ok(Ctx { n: cli.big_n, max_level: cli.max_level, points, cache: Cache::new(dir), format: cli.output })
    }

    fn emit<T: Render>(&self, value: &T) -> Result<()> {
        let text = value.render(self.format)?;
        match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        }
    }
}

fn default_cache_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(x).join("yangian");
    }
    if let Some(h) = std::env::var_os("HOME") {
        return PathBuf::from(h).join(".cache").join("yangian");
    }
    PathBuf::from(".yangian-cache")
}

fn parse_pp(s: &str) -> Result<PlanePartition> {
    s.parse::<PlanePartition>().map_err(|e| usage(format!("{s:?}: {e}")))
}

fn check_partition(pi: &PlanePartition, ctx: &Ctx) -> Result<()> {
    if pi.max_height() as usize > ctx.n {
        bail!(usage(format!("{pi} has height {} > N = {}", pi.max_height(), ctx.n)));
    }
    Ok(())
}

fn table<F: Coeff>(ctx: &Ctx, cfg: &ModelConfig<F>, level: usize) -> Result<JackTable<F>> {
    let mut notices = Vec::new();
    let t = ctx.cache.table(cfg, level, &mut notices);
    for n in notices {
        eprintln!("note: {n}");
    }
    t
}

fn jack_at<F: Coeff>(ctx: &Ctx, cfg: &ModelConfig<F>, pi: &PlanePartition) -> Result<output::JackOutput> {
    let d = pi.size();
    let t = table(ctx, cfg, d)?;
    let j = t.jack(pi)?;
    let pb = PBasis::compute(d, cfg)?;
    Ok(output::JackOutput {
        partition: pi.clone(),
        n: cfg.n,
        point: output::point(&cfg.tag, &cfg.h1, &cfg.h2),
        p_monomials: output::fock_terms(j),
        p_basis: output::word_terms(&pb.to_p_basis(j, d)?),
    })
}

fn lr_at<F: Coeff>(ctx: &Ctx, cfg: &ModelConfig<F>, a: &PlanePartition, b: &PlanePartition) -> Result<output::LrOutput> {
    let t = table(ctx, cfg, a.size() + b.size())?;
    let pb = PBasis::compute(a.size(), cfg)?;
    let v = jack3::lr_product(&t, &pb, a, b)?;
    Ok(output::LrOutput {
        left: a.clone(),
        right: b.clone(),
        n: cfg.n,
        point: output::point(&cfg.tag, &cfg.h1, &cfg.h2),
        terms: output::pp_terms(&v),
    })
}

fn p_basis_at<F: Coeff>(cfg: &ModelConfig<F>, level: usize) -> Result<output::PBasisOutput> {
    let pb = PBasis::compute(level, cfg)?;
    let mut generators = Vec::new();
    for j in 1..=cfg.n.min(3) as u8 {
        for n in j as u32..=level as u32 {
            if let Some(s) = pb.generator(j, n) {
                generators.push(output::Generator { n, j, p_monomials: output::fock_terms(s) });
            }
        }
    }
    generators.sort_by_key(|g| (g.n, g.j));
    Ok(output::PBasisOutput {
        level,
        n: cfg.n,
        point: output::point(&cfg.tag, &cfg.h1, &cfg.h2),
        generators,
        words: pb.words(level).into_iter().map(|(w, _)| w.to_string()).collect(),
    })
}

/// Run `f` on the symbolic configuration or once per probe point.
fn per_config<T>(
    ctx: &Ctx,
    sym: impl Fn(&ModelConfig<yangian_core::Scalar>) -> Result<T>,
    probe: impl Fn(&ModelConfig<BigRational>) -> Result<T>,
) -> Result<Vec<T>> {
    match &ctx.points {
        None => Ok(vec![sym(&ModelConfig::symbolic(ctx.n)?)?]),
        Some(pts) => pts.iter().map(|(h1, h2)| probe(&ModelConfig::probe(ctx.n, h1.clone(), h2.clone())?)).collect(),
    }
}

/// Deviations (a printed form that fails next to a corrected form that holds) do not count as failures.
fn all_pass(reports: &[SuiteReport]) -> bool {
    reports.iter().all(|r| r.count(Status::Fail) == 0)
}

fn run(cli: Cli) -> Result<u8> {
    let ctx = Ctx::new(&cli)?;
    match &cli.command {
        Command::Enumerate { size } => {
            let partitions = planepart::enumerate(*size, ctx.n);
            ctx.emit(&output::EnumerateOutput { size: *size, n: ctx.n, count: partitions.len(), partitions })?;
        }
        Command::Jack { partition } => {
            let pi = parse_pp(partition)?;
            check_partition(&pi, &ctx)?;
            if pi.size() > ctx.max_level {
                bail!(usage(format!("|{pi}| = {} exceeds --max-level {}", pi.size(), ctx.max_level)));
            }
            ctx.emit(&per_config(&ctx, |c| jack_at(&ctx, c, &pi), |c| jack_at(&ctx, c, &pi))?)?;
        }
        Command::Lr { left, right } => {
            let (a, b) = (parse_pp(left)?, parse_pp(right)?);
            check_partition(&a, &ctx)?;
            check_partition(&b, &ctx)?;
            if a.size() + b.size() > ctx.max_level {
                bail!(usage(format!("|{a}| + |{b}| exceeds --max-level {}", ctx.max_level)));
            }
            ctx.emit(&per_config(&ctx, |c| lr_at(&ctx, c, &a, &b), |c| lr_at(&ctx, c, &a, &b))?)?;
        }
        Command::PBasis { level } => {
            if *level > ctx.max_level {
                bail!(usage(format!("level {level} exceeds --max-level {}", ctx.max_level)));
            }
            ctx.emit(&per_config(&ctx, |c| p_basis_at(c, *level), |c| p_basis_at(c, *level))?)?;
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(|e| usage(e.to_string()))?]
            };
            let mut opts = VerifyOptions::symbolic(ctx.n, ctx.max_level);
            opts.probe_points = ctx.points.clone();
            let mut reports = Vec::new();
            for s in suites {
                reports.extend(run_suite(s, &opts).with_context(|| format!("suite {}", s.name()))?);
            }
            let ok = all_pass(&reports);
            ctx.emit(&output::VerifyOutput { ok, reports })?;
            return Ok(if ok { 0 } else { 1 });
        }
        Command::Cache { action } => match action {
            CacheAction::Status => ctx.emit(&output::CacheStatus {
                dir: ctx.cache.dir().display().to_string(),
                entries: ctx.cache.entries()?,
            })?,
            CacheAction::Clear => {
                let removed = ctx.cache.clear()?;
                ctx.emit(&output::CacheCleared { dir: ctx.cache.dir().display().to_string(), removed })?;
            }
        },
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
