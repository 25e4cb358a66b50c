use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lapspec::graph::{
    dumbbell_with_cycles, graph6_decode, graph6_encode, make_cycle, make_path, theta_with_paths,
    Graph,
};
use lapspec::invariants::{degree_constraint_solver, DegreeProfile};
use lapspec::recurrence::{dumbbell_charpoly_rec, path_charpoly_rec, theta_charpoly_rec};
use lapspec::verify::{self, Enumerator, Grid, VerificationReport, DEFAULT_CAP};
use lapspec::{charpoly, invariants_from_charpoly, laplacian, IntPolynomial};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "lapspec",
    version,
    about = "Exact Laplacian spectra of dumbbell and theta graphs"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Laplacian characteristic polynomial of a graph.
    Charpoly {
        /// Also compute the recurrence route and report agreement.
        #[arg(long)]
        routes: bool,
        #[command(subcommand)]
        graph: GraphSpec,
    },
    /// Print the invariants recovered from the Laplacian characteristic polynomial.
    Invariants {
        #[command(subcommand)]
        graph: GraphSpec,
    },
    /// Run a verification suite; exits 0 iff the report passes.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug, Clone)]
enum GraphSpec {
    /// Two cycles joined by a path with K internal vertices.
    Dumbbell {
        p: usize,
        k: usize,
        q: usize,
    },
    /// Two hubs joined by paths with R, S, T internal vertices.
    Theta {
        r: usize,
        s: usize,
        t: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// A graph in graph6 format.
    G6 {
        code: String,
    },
}

impl GraphSpec {
    fn build(&self) -> Result<Graph> {
        Ok(match self {
            GraphSpec::Dumbbell { p, k, q } => dumbbell_with_cycles(*p, *k, *q)?,
            GraphSpec::Theta { r, s, t } => theta_with_paths(*r, *s, *t)?,
            GraphSpec::Path { n } => make_path(*n)?,
            GraphSpec::Cycle { n } => make_cycle(*n)?,
            GraphSpec::G6 { code } => graph6_decode(code.as_bytes())
                .with_context(|| format!("cannot decode graph6 string '{code}'"))?,
        })
    }

    fn recurrence(&self) -> Result<Option<IntPolynomial>> {
        Ok(match self {
            GraphSpec::Dumbbell { p, k, q } => Some(dumbbell_charpoly_rec(*p, *k, *q)?),
            GraphSpec::Theta { r, s, t } => Some(theta_charpoly_rec(*r, *s, *t)?),
            GraphSpec::Path { n } => Some(path_charpoly_rec(*n)),
            GraphSpec::Cycle { .. } | GraphSpec::G6 { .. } => None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Eq1,
    Eq2,
    Eq3,
    Prop23,
    Prop27,
    DeletionFormula,
    WithinFamily,
    Ds,
    Lemma34,
    Recurrences,
    Invariants,
    Enumeration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GridPreset {
    Default,
    Small,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,

    /// Largest r for eq1.
    #[arg(long, default_value_t = 50)]
    r_max: usize,
    /// Single vertex count for ds and lemma34.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    /// Upper bound on n; its meaning depends on the suite.
    #[arg(long)]
    n_max: Option<usize>,

    #[arg(long, value_enum, default_value_t = GridPreset::Default)]
    grid: GridPreset,
    #[arg(long)]
    cycle_max: Option<usize>,
    #[arg(long)]
    bridge_max: Option<usize>,
    #[arg(long)]
    theta_max: Option<usize>,

    /// Number of random graphs for deletion-formula and invariants.
    #[arg(long)]
    random_count: Option<usize>,
    #[arg(long)]
    random_n_max: Option<usize>,
    #[arg(long, default_value_t = 20_240_601)]
    seed: u64,

    /// Largest vertex count the enumerator will accept.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Directory for cached graph6 enumeration files.
    #[arg(long, env = "LAPSPEC_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Validated settings for one verification run.
#[derive(Debug)]
struct RunConfig {
    suite: Suite,
    grid: Grid,
    enumerator: Enumerator,
    seed: u64,
}

impl RunConfig {
    fn from_args(args: &VerifyArgs) -> Result<Self> {
        if args.cap < 4 {
            bail!("--cap must be at least 4, got {}", args.cap);
        }
        let mut grid = match args.grid {
            GridPreset::Default => Grid::default(),
            GridPreset::Small => Grid {
                cycle_min: 3,
                cycle_max: 5,
                bridge_max: 2,
                theta_max: 4,
            },
        };
        grid.cycle_max = args.cycle_max.unwrap_or(grid.cycle_max);
        grid.bridge_max = args.bridge_max.unwrap_or(grid.bridge_max);
        grid.theta_max = args.theta_max.unwrap_or(grid.theta_max);
        if grid.cycle_max < 3 || grid.theta_max < 1 {
            bail!("empty grid: --cycle-max must be >= 3 and --theta-max >= 1");
        }
        Ok(RunConfig {
            suite: args.suite,
            grid,
            enumerator: Enumerator::new(args.cap, args.cache_dir.clone()),
            seed: args.seed,
        })
    }
}

fn vertex_range(
    args: &VerifyArgs,
    default_min: usize,
    default_max: usize,
) -> Result<(usize, usize)> {
    let (lo, hi) = match args.n {
        Some(n) => (n, n),
        None => (
            args.n_min.unwrap_or(default_min),
            args.n_max.unwrap_or(default_max),
        ),
    };
    if lo > hi {
        bail!("empty vertex range {lo}..={hi}");
    }
    Ok((lo, hi))
}

fn run_suite(args: &VerifyArgs, cfg: &RunConfig) -> Result<VerificationReport> {
    let cap = cfg.enumerator.cap;
    Ok(match cfg.suite {
        Suite::Eq1 => verify::verify_eq1(args.r_max),
        Suite::Eq2 => verify::verify_eq2(&cfg.grid),
        Suite::Eq3 => verify::verify_eq3(&cfg.grid),
        Suite::Prop23 => verify::verify_prop23(args.n_max.unwrap_or(200)),
        Suite::Prop27 => verify::verify_prop27(&cfg.grid),
        Suite::Recurrences => verify::verify_recurrences(args.n_max.unwrap_or(40), &cfg.grid),
        Suite::DeletionFormula => verify::verify_deletion_formula(
            args.n_max.unwrap_or(12),
            args.random_count.unwrap_or(100),
            args.random_n_max.unwrap_or(9),
            cfg.seed,
        ),
        Suite::Invariants => verify::verify_invariants(
            args.random_count.unwrap_or(200),
            args.random_n_max.unwrap_or(10),
            cfg.seed,
            args.n_max.unwrap_or(12),
        ),
        Suite::WithinFamily => verify::verify_within_family_distinct(args.n_max.unwrap_or(20)),
        Suite::Ds => {
            let (lo, hi) = vertex_range(args, 6, cap)?;
            verify::verify_ds_range(lo, hi, &cfg.enumerator)
        }
        Suite::Lemma34 => {
            let (lo, hi) = vertex_range(args, 4, cap)?;
            let mut reports =
                (lo..=hi).map(|n| verify::verify_lemma34_reduction(n, &cfg.enumerator));
            let mut report = reports.next().expect("non-empty range");
            for r in reports {
                report.absorb(r);
            }
            report.grid.insert("n".into(), format!("{lo}..={hi}"));
            report.certified_range = Some(format!("{lo} <= n <= {hi}"));
            report
        }
        Suite::Enumeration => {
            verify::verify_enumeration(7.min(cap), args.n_max.unwrap_or(cap), &cfg.enumerator)
        }
    })
}

fn cmd_charpoly(spec: &GraphSpec, routes: bool, format: Format) -> Result<bool> {
    let g = spec.build()?;
    let matrix = charpoly(&laplacian(&g));
    let recurrence = if routes { spec.recurrence()? } else { None };
    let agree = recurrence.as_ref().is_none_or(|r| r == &matrix);
    match format {
        Format::Text => {
            println!("{matrix}");
            if routes {
                println!("matrix route:     {matrix}");
                match &recurrence {
                    Some(r) => {
                        println!("recurrence route: {r}");
                        println!("routes agree: {}", if agree { "yes" } else { "no" });
                    }
                    None => println!("recurrence route: not available for this graph"),
                }
            }
        }
        Format::Json => {
            let coeffs: Vec<String> = matrix.coeffs().iter().map(|c| c.to_string()).collect();
            let doc = serde_json::json!({
                "graph6": graph6_encode(&g),
                "polynomial": matrix.to_string(),
                "coefficients_ascending": coeffs,
                "recurrence": recurrence.as_ref().map(|r| r.to_string()),
                "routes_agree": recurrence.as_ref().map(|_| agree),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(agree)
}

fn cmd_invariants(spec: &GraphSpec, format: Format) -> Result<()> {
    let g = spec.build()?;
    let inv = invariants_from_charpoly(&charpoly(&laplacian(&g)))?;
    let profile = degree_constraint_solver(&inv);
    match format {
        Format::Text => {
            println!("n = {}", inv.n);
            println!("m = {}", inv.m);
            println!("components = {}", inv.c);
            println!("tau = {}", inv.tau);
            println!("sum of squared degrees = {}", inv.degree_square_sum);
            match &profile {
                DegreeProfile::Forced { counts } => println!("forced degree counts = {counts:?}"),
                DegreeProfile::Inconclusive { reason } => {
                    println!("degree profile: inconclusive ({reason})")
                }
            }
        }
        Format::Json => {
            let doc = serde_json::json!({ "invariants": inv, "degree_profile": profile });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<bool> {
    let cfg = RunConfig::from_args(args)?;
    let report = run_suite(args, &cfg)?;
    let rendered = match format {
        Format::Text => report.to_string(),
        Format::Json => report.to_json() + "\n",
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, rendered)
                .with_context(|| format!("cannot write report to {}", path.display()))?;
            eprintln!(
                "suite {}: {} (report written to {})",
                report.suite,
                if report.pass { "PASS" } else { "FAIL" },
                path.display()
            );
        }
        None => print!("{rendered}"),
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Charpoly { routes, graph } => cmd_charpoly(graph, *routes, cli.format),
        Command::Invariants { graph } => cmd_invariants(graph, cli.format).map(|()| true),
        Command::Verify(args) => cmd_verify(args, cli.format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
