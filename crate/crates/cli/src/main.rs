use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pants_core::farey::{self, Slope};
use pants_core::lamination::SurfaceSpec;
use pants_core::pants::audit::{self, AuditReport, ConvexityConfig, LipschitzConfig, Verdict};
use pants_core::pants::catalog::MAX_CATALOG_PUNCTURES;
use pants_core::pants::{CurveCatalog, MulticurveQ, PantsGraph};

const EXIT_REFUTED: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "pants-lab", version, about = "Catalog builds and convexity audits for pants graphs of punctured spheres")]
struct Cli {
    /// Directory for catalog caches.
    #[arg(long, env = "PANTS_LAB_CACHE", default_value = ".pants-cache", global = true)]
    cache_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build (or load) the curve catalog of a given norm bound.
    BuildCatalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        norm: usize,
    },
    /// Check that catalog geodesics between points of P_Q stay in P_Q.
    AuditConvexity {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        norm: usize,
        #[arg(long, default_value_t = 3)]
        max_dq: u32,
        /// Pairs sampled per d_Q value; all pairs when omitted.
        #[arg(long)]
        per_stratum: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        path_cap: usize,
    },
    /// Check that a grid of P_Q embeds isometrically.
    AuditFlat {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        grid: usize,
        /// Norm of the curve ball added around the grid.
        #[arg(long, default_value_t = 4)]
        norm: usize,
    },
    /// Search catalog paths for a failure of the projection bound.
    AuditLipschitz {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        norm: usize,
        #[arg(long, default_value_t = 40)]
        starts: usize,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
    /// Print the Farey graph distance between two slopes.
    FareyDistance { a: String, b: String },
    /// Print the table of a saved JSON report and exit with its status.
    Report { path: PathBuf },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    n: usize,
    /// A round curve as its consecutive punctures, e.g. `1,2`; repeatable.
    /// Defaults to the curve around the first half of the punctures.
    #[arg(long = "q")]
    q: Vec<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Report prefix; writes PREFIX.json and PREFIX.tsv.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct ConfigError(String);

impl<E: std::fmt::Display> From<E> for ConfigError {
    fn from(e: E) -> Self {
        ConfigError(e.to_string())
    }
}

fn surface(n: usize) -> Result<SurfaceSpec, ConfigError> {
    if !(4..=MAX_CATALOG_PUNCTURES).contains(&n) {
        return Err(ConfigError(format!("--n must be between 4 and {MAX_CATALOG_PUNCTURES}")));
    }
    Ok(SurfaceSpec::new(n)?)
}

fn parse_round(text: &str) -> Result<(usize, usize), ConfigError> {
    let ps: Vec<usize> = text.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>()?;
    let (lo, hi) = (*ps.iter().min().ok_or(ConfigError("empty --q".into()))?, *ps.iter().max().unwrap());
    if ps.len() != hi - lo + 1 || (lo..=hi).any(|p| !ps.contains(&p)) {
        return Err(ConfigError(format!("--q {text}: punctures must be consecutive")));
    }
    Ok((lo, hi))
}

fn multicurve(s: SurfaceSpec, specs: &[String]) -> Result<MulticurveQ, ConfigError> {
    let rounds = if specs.is_empty() {
        vec![(1, s.punctures() / 2)]
    } else {
        specs.iter().map(|t| parse_round(t)).collect::<Result<Vec<_>, _>>()?
    };
    Ok(MulticurveQ::standard(s, &rounds)?)
}

fn emit(report: &AuditReport, out: &Option<PathBuf>, default: &str) -> Result<ExitCode, ConfigError> {
    let prefix = out.clone().unwrap_or_else(|| PathBuf::from(default));
    let json = prefix.with_extension("json");
    let tsv = prefix.with_extension("tsv");
    std::fs::write(&json, report.to_json() + "\n")?;
    std::fs::write(&tsv, report.to_tsv())?;
    print_summary(report);
    println!("wrote {} and {}", json.display(), tsv.display());
    Ok(exit_for(report.verdict))
}

fn print_summary(report: &AuditReport) {
    let counts: Vec<String> = report.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let verdict = serde_json::to_value(report.verdict).unwrap();
    println!("{} audit on n={} (catalog bound {}): {} [{}]", report.audit, report.surface, report.catalog_bound, verdict.as_str().unwrap(), counts.join(" "));
}

fn exit_for(v: Verdict) -> ExitCode {
    match v {
        Verdict::CorroboratedComplete | Verdict::CorroboratedCapped => ExitCode::SUCCESS,
        Verdict::Refuted => ExitCode::from(EXIT_REFUTED),
        Verdict::Incomplete => ExitCode::from(EXIT_INCOMPLETE),
    }
}

fn catalog(dir: &Path, s: SurfaceSpec, norm: usize) -> Result<CurveCatalog, ConfigError> {
    if norm == 0 {
        return Err(ConfigError("--norm must be positive".into()));
    }
    Ok(CurveCatalog::load_or_build(dir, s, norm)?)
}

fn run(cli: Cli) -> Result<ExitCode, ConfigError> {
    match cli.command {
        Command::BuildCatalog { n, norm } => {
            let s = surface(n)?;
            let cat = catalog(&cli.cache_dir, s, norm)?;
            let g = PantsGraph::new(&cat);
            println!("n={n} norm={norm} curves={} pants_decompositions={}", cat.len(), g.len());
            println!("cache {}", CurveCatalog::cache_path(&cli.cache_dir, s, norm).display());
            Ok(ExitCode::SUCCESS)
        }
        Command::AuditConvexity { common, norm, max_dq, per_stratum, path_cap } => {
            let s = surface(common.n)?;
            let q = multicurve(s, &common.q)?;
            if path_cap == 0 {
                return Err(ConfigError("--path-cap must be positive".into()));
            }
            let cat = catalog(&cli.cache_dir, s, norm)?;
            let g = PantsGraph::new(&cat);
            let cfg = ConvexityConfig { max_dq, per_stratum, path_cap, seed: common.seed };
            let report = audit::convexity_audit(&g, &q, &cfg)?;
            emit(&report, &common.out, &format!("convexity-n{}-b{norm}", common.n))
        }
        Command::AuditFlat { common, grid, norm } => {
            let s = surface(common.n)?;
            let q = multicurve(s, &common.q)?;
            if norm == 0 {
                return Err(ConfigError("--norm must be positive".into()));
            }
            let cat = audit::flat_catalog(&q, grid, norm)?;
            let g = PantsGraph::new(&cat);
            let report = audit::flat_audit(&g, &q, grid)?;
            emit(&report, &common.out, &format!("flat-n{}-grid{grid}", common.n))
        }
        Command::AuditLipschitz { common, norm, starts, max_len } => {
            let s = surface(common.n)?;
            let q = multicurve(s, &common.q)?;
            let cat = catalog(&cli.cache_dir, s, norm)?;
            let g = PantsGraph::new(&cat);
            let cfg = LipschitzConfig { starts, max_len, seed: common.seed };
            let report = audit::lipschitz_audit(&g, &q, &cfg)?;
            emit(&report, &common.out, &format!("lipschitz-n{}-b{norm}", common.n))
        }
        Command::FareyDistance { a, b } => {
            let (a, b): (Slope, Slope) = (a.parse()?, b.parse()?);
            println!("{}", farey::distance(a, b));
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { path } => {
            let text = std::fs::read_to_string(&path)?;
            let report: AuditReport = serde_json::from_str(&text)?;
            print!("{}", report.to_tsv());
            print_summary(&report);
            Ok(exit_for(report.verdict))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}
