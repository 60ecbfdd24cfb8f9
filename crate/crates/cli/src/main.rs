//! `friable`: command-line front end for friable-core.
//!
//! Exit codes: 0 on success, 2 on argument errors, 3 when a capacity or
//! search budget is exceeded. Data goes to stdout, diagnostics to stderr.

mod config;
mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use friable_core::decomp::{self, DecompositionCertificate, Mode, SearchStatus, WindowSet};
use friable_core::psi::{self, PsiValue};
use friable_core::smooth::{self, FactorTable, SmoothnessThreshold, SortedIntSet};
use friable_core::sunit::{self, Domain, PrimeSet, SUnitEquation};
use serde_json::{json, Value};

use config::{Format, RunConfig, TABLE_LIMIT_ENV};
use output::Output;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] friable_core::Error),
    #[error("search budget exhausted after {0} nodes; results are partial")]
    Budget(u64),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_capacity() => 3,
            CliError::Budget(_) => 3,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "friable", version)]
#[command(about = "Smooth numbers, Psi(x, y), S-unit equations and set decompositions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads (defaults to the number of cores; output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// JSON run configuration; explicit flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Largest factor table a command may build.
    #[arg(long, global = true, env = TABLE_LIMIT_ENV)]
    table_limit: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor tables and friable windows.
    #[command(subcommand)]
    Sieve(SieveCmd),
    /// Exact and asymptotic Psi(x, y).
    #[command(subcommand)]
    Psi(PsiCmd),
    /// S-unit equations and solution-count bounds.
    #[command(subcommand)]
    Sunit(SunitCmd),
    /// Decomposition search, verification and growth scales.
    #[command(subcommand)]
    Decomp(DecompCmd),
    /// Contradiction-pipeline reports and case classification.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Debug, Subcommand)]
enum SieveCmd {
    /// Greatest prime factor of n.
    Gpf {
        #[arg(long)]
        n: u64,
    },
    /// y-smooth integers in [lo, hi] (or their unit shift with --shifted).
    Window {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        /// constant:Y, log:C or power:EPS.
        #[arg(long)]
        threshold: Option<SmoothnessThreshold>,
        #[arg(long)]
        shifted: bool,
    },
    /// Number of primes <= y.
    Pi {
        #[arg(long)]
        y: f64,
    },
}

#[derive(Debug, Subcommand)]
enum PsiCmd {
    Exact {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: f64,
    },
    Base2 {
        #[arg(long)]
        x: u64,
    },
    Debruijn {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: f64,
    },
    /// de Bruijn ratio over the configured grid.
    Grid,
}

#[derive(Debug, Args)]
struct PrimeArgs {
    /// Comma-separated primes.
    #[arg(long, value_delimiter = ',', conflicts_with = "y")]
    primes: Option<Vec<u64>>,
    /// Use every prime <= y.
    #[arg(long)]
    y: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum SunitCmd {
    /// Bound 2^{8(2s+2)} on the number of solutions.
    Bound {
        #[arg(long)]
        s: u64,
        /// Always print the decimal value (printed by default up to 2^64).
        #[arg(long)]
        value: bool,
    },
    /// Solve U X + V Y = 1 inside an exponent box.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[command(flatten)]
        primes: PrimeArgs,
        #[arg(long)]
        bound: u32,
        #[arg(long, default_value = "positive-integers")]
        domain: Domain,
    },
    /// y-smooth pairs X - Y = d inside [lo, hi].
    Pairs {
        #[arg(long)]
        y: f64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        lo: u64,
        #[arg(long)]
        hi: u64,
    },
    /// b in (n0/a1, N/a2] with a1 b - 1 and a2 b - 1 both y-smooth.
    Mpairs {
        #[arg(long)]
        a1: u64,
        #[arg(long)]
        a2: u64,
        #[arg(long)]
        y: f64,
        #[arg(long)]
        n0: u64,
        #[arg(long = "n")]
        n: u64,
    },
}

#[derive(Debug, Args)]
struct TargetArgs {
    /// Target set: comma-separated, or @FILE / @- for newline-delimited input.
    #[arg(long)]
    set: String,
    /// Window start (defaults to the smallest element).
    #[arg(long)]
    n0: Option<u64>,
    /// Window end (defaults to the largest element).
    #[arg(long = "n")]
    n: Option<u64>,
    #[arg(long, default_value = "additive")]
    mode: Mode,
}

#[derive(Debug, Subcommand)]
enum DecompCmd {
    Search {
        #[command(flatten)]
        target: TargetArgs,
        /// Largest element allowed in B or C (defaults to the window end).
        #[arg(long)]
        max_element: Option<u64>,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        max_certs: Option<usize>,
    },
    Verify {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        lo: Option<u64>,
        #[arg(long)]
        hi: Option<u64>,
    },
    /// D in [1, d_max] with A(mD) B(mD) < (m^2+1) A(D) B(D).
    Growth {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d_max: u64,
    },
}

#[derive(Debug, Subcommand)]
enum ReportCmd {
    Theorem1 {
        #[arg(long)]
        y: f64,
        #[arg(long)]
        a1: u64,
        #[arg(long)]
        a2: u64,
        #[arg(long)]
        n0: u64,
        #[arg(long = "n")]
        n: u64,
    },
    Theorem2 {
        #[arg(long)]
        y: f64,
        #[arg(long)]
        a1: u64,
        #[arg(long)]
        a2: u64,
        #[arg(long)]
        n0: u64,
        #[arg(long = "n")]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    Classify {
        /// Natural logarithm of N.
        #[arg(long)]
        log_n: f64,
        #[arg(long)]
        y: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(t) = cli.table_limit {
        cfg.table_limit = t;
    }
    cfg.validate()?;
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Usage(e.to_string()))?;
    }

    let (out, budget) = dispatch(cli.command, &cfg)?;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match out.render(cfg.format, &mut lock) {
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => return Ok(()),
        r => r?,
    }
    match budget {
        Some(nodes) => Err(CliError::Budget(nodes)),
        None => Ok(()),
    }
}

fn table(need: u64, cfg: &RunConfig) -> Result<FactorTable, CliError> {
    if need > cfg.table_limit {
        return Err(friable_core::Error::Capacity {
            what: "factor table",
            requested: need.to_string(),
            budget: cfg.table_limit.to_string(),
        }
        .into());
    }
    Ok(FactorTable::build(need.max(1))?)
}

fn parse_set(arg: &str) -> Result<SortedIntSet, CliError> {
    if let Some(path) = arg.strip_prefix('@') {
        let mut text = String::new();
        if path == "-" {
            std::io::stdin().read_to_string(&mut text)?;
        } else {
            text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
        }
        return Ok(SortedIntSet::parse_lines(&text)?);
    }
    Ok(SortedIntSet::parse_lines(&arg.replace(',', " "))?)
}

fn target(args: &TargetArgs) -> Result<WindowSet, CliError> {
    let set = parse_set(&args.set)?;
    let n0 = args.n0.or(set.smallest()).unwrap_or(0);
    let n = args.n.or(set.largest()).unwrap_or(n0);
    Ok(WindowSet::new(set, n0, n)?)
}

fn with_certification(list: &sunit::SolutionList) -> Value {
    let mut v = serde_json::to_value(list).expect("serializable");
    v["certification"] = serde_json::to_value(sunit::certify_count(list)).expect("serializable");
    v
}

type Dispatched = (Output, Option<u64>);

fn dispatch(cmd: Command, cfg: &RunConfig) -> Result<Dispatched, CliError> {
    let out = match cmd {
        Command::Sieve(c) => sieve(c, cfg)?,
        Command::Psi(c) => psi_cmd(c, cfg)?,
        Command::Sunit(c) => sunit_cmd(c, cfg)?,
        Command::Decomp(c) => return decomp_cmd(c, cfg),
        Command::Report(c) => report(c, cfg)?,
    };
    Ok((out, None))
}

fn sieve(cmd: SieveCmd, cfg: &RunConfig) -> Result<Output, CliError> {
    Ok(match cmd {
        SieveCmd::Gpf { n } => {
            let t = table(n, cfg)?;
            Output::Report(json!({ "n": n, "gpf": smooth::greatest_prime_factor(n, &t)? }))
        }
        SieveCmd::Window { lo, hi, threshold, shifted } => {
            let y = threshold
                .or(cfg.threshold)
                .ok_or_else(|| CliError::Usage("--threshold is required (or set one in --config)".into()))?;
            let t = table(hi, cfg)?;
            let set = if shifted {
                smooth::shifted_friable_window(&y, lo, hi, &t)?
            } else {
                smooth::friable_window(&y, lo, hi, &t)?
            };
            Output::Set(set)
        }
        SieveCmd::Pi { y } => Output::Report(json!({ "y": y, "count": smooth::prime_count(y) })),
    })
}

fn psi_cmd(cmd: PsiCmd, cfg: &RunConfig) -> Result<Output, CliError> {
    let tag = |r: &psi::DeBruijnReport| {
        let mut v = serde_json::to_value(r).expect("serializable");
        v["in_corridor"] = cfg.corridor.contains(r.ratio).into();
        v
    };
    Ok(match cmd {
        PsiCmd::Exact { x, y } => Output::report(&PsiValue::compute(x, y)?),
        PsiCmd::Base2 { x } => {
            if x == 0 {
                return Err(CliError::Usage("x must be at least 1".into()));
            }
            Output::Report(json!({ "x": x, "y": 2, "count": psi::psi_base2(x) }))
        }
        PsiCmd::Debruijn { x, y } => Output::Report(tag(&psi::debruijn_ratio(x, y)?)),
        PsiCmd::Grid => {
            let rows = cfg.debruijn_grid.evaluate()?;
            Output::Report(Value::Array(rows.iter().map(tag).collect()))
        }
    })
}

fn sunit_cmd(cmd: SunitCmd, cfg: &RunConfig) -> Result<Output, CliError> {
    Ok(match cmd {
        SunitCmd::Bound { s, value } => {
            let b = sunit::bs_bound(s)?;
            let mut v = json!({ "s": b.s, "exponent": b.exponent });
            if value || b.exponent <= 64 {
                v["value"] = b.value().to_string().into();
            }
            Output::Report(v)
        }
        SunitCmd::Solve { u, v, primes, bound, domain } => {
            let eq = SUnitEquation::new(sunit::parse_rational(&u)?, sunit::parse_rational(&v)?)?;
            let set = match (primes.primes, primes.y) {
                (Some(ps), _) => PrimeSet::new(ps)?,
                (None, Some(y)) => PrimeSet::up_to(y)?,
                (None, None) => return Err(CliError::Usage("give --primes or --y".into())),
            };
            let list = sunit::enumerate_solutions(&eq, &set, bound, domain)?;
            Output::Report(with_certification(&list))
        }
        SunitCmd::Pairs { y, d, lo, hi } => {
            let t = table(hi, cfg)?;
            let list = sunit::smooth_pair_difference(y, d, lo, hi, &t)?;
            Output::Report(with_certification(&list))
        }
        SunitCmd::Mpairs { a1, a2, y, n0, n } => {
            let t = table(n, cfg)?;
            let r = sunit::multiplicative_pairs(a1, a2, y, n0, n, &t)?;
            let mut v = serde_json::to_value(&r)?;
            v["certification"] = serde_json::to_value(sunit::certify_count(&r.solutions))?;
            Output::Report(v)
        }
    })
}

fn decomp_cmd(cmd: DecompCmd, cfg: &RunConfig) -> Result<Dispatched, CliError> {
    Ok(match cmd {
        DecompCmd::Search { target: args, max_element, max_nodes, max_certs } => {
            let t = target(&args)?;
            let mut limits = cfg.search;
            if let Some(n) = max_nodes {
                limits.max_nodes = n;
            }
            if max_certs.is_some() {
                limits.max_certificates = max_certs;
            }
            let max_element = max_element.unwrap_or(t.n());
            let outcome = decomp::search_decompositions(&t, args.mode, max_element, &limits)?;
            let budget = (outcome.status == SearchStatus::BudgetExceeded).then_some(outcome.nodes);
            let report = serde_json::to_value(&outcome)?;
            (Output::Certificates { report, certificates: outcome.certificates }, budget)
        }
        DecompCmd::Verify { target: args, b, c, lo, hi } => {
            let t = target(&args)?;
            let cert = DecompositionCertificate {
                b: parse_set(&b)?,
                c: parse_set(&c)?,
                mode: args.mode,
                verify_lo: lo.unwrap_or(t.n0()),
                verify_hi: hi.unwrap_or(t.n()),
            };
            let valid = decomp::verify_certificate(&t, &cert)?;
            let mut v = serde_json::to_value(&cert)?;
            v["valid"] = valid.into();
            (Output::Report(v), None)
        }
        DecompCmd::Growth { a, b, m, d_max } => {
            if m == 0 {
                return Err(CliError::Usage("m must be at least 1".into()));
            }
            let ds = decomp::growth_scales(&parse_set(&a)?, &parse_set(&b)?, m, d_max);
            (Output::Report(json!({ "m": m, "d_max": d_max, "scales": ds })), None)
        }
    })
}

fn report(cmd: ReportCmd, cfg: &RunConfig) -> Result<Output, CliError> {
    Ok(match cmd {
        ReportCmd::Theorem1 { y, a1, a2, n0, n } => {
            let t = table(n, cfg)?;
            Output::report(&decomp::theorem1_pipeline(y, a1, a2, n0, n, &t)?)
        }
        ReportCmd::Theorem2 { y, a1, a2, n0, n, m } => {
            let t = table(n, cfg)?;
            Output::report(&decomp::theorem2_pipeline(y, a1, a2, n0, n, m, &t)?)
        }
        ReportCmd::Classify { log_n, y } => {
            let case = decomp::case_classifier(log_n, y)?;
            Output::Report(json!({ "log_n": log_n, "y": y, "case_label": case }))
        }
    })
}
