//! kmatch: generate graphs, decide integer k-matchings, compute preclusion
//! numbers and check the closed-form value tables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 budget exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kmatch::generators::{
    arrangement, complete, complete_bipartite, cycle, path, random_bipartite, random_graph, ArrangementSpec,
};
use kmatch::ikm::{decide_almost_perfect_ikm, decide_perfect_ikm, lemma41_certificate, max_ikm, CertBudget};
use kmatch::preclusion::{preclusion_number, Mode, Options, PreclusionQuery, Status, Workers, DEFAULT_BUDGET};
use kmatch::theorems::{run_suite, Limits, Suite};
use kmatch::{Error, Graph};

const BUDGET_ENV: &str = "KMATCH_BUDGET";

#[derive(Parser)]
#[command(name = "kmatch", version, about = "Integer k-matchings and their preclusion numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from one of the built-in families.
    Gen(GenArgs),
    /// Decide or optimize integer k-matchings of a graph file.
    Solve(SolveArgs),
    /// Compute or verify mp^k / smp^k of a graph file.
    Preclude(PrecludeArgs),
    /// Recompute the closed-form value tables.
    Theorems(TheoremArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    RandomBipartite,
    Random,
    Arrangement,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    /// Tuple length for arrangement graphs.
    #[arg(long)]
    s: Option<usize>,
    /// Left side for bipartite families.
    #[arg(long)]
    a: Option<usize>,
    /// Right side for bipartite families.
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Label sidecar for arrangement graphs; defaults to `<out>.labels.json`.
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMode {
    Perfect,
    Almost,
    Mu,
    Certificate,
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum)]
    mode: SolveMode,
}

#[derive(Args)]
struct Budgeted {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Maximum number of fault sets to test (also read from KMATCH_BUDGET).
    #[arg(long)]
    budget: Option<u128>,
}

impl Budgeted {
    fn options(&self) -> Result<Options, Error> {
        let budget = match self.budget {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => {
                    v.trim().parse().map_err(|_| Error::Parameter(format!("{BUDGET_ENV}={v:?} is not a count")))?
                }
                Err(_) => DEFAULT_BUDGET,
            },
        };
        let workers = match self.jobs {
            Some(0) => return Err(Error::Parameter("--jobs must be at least 1".into())),
            Some(j) => Workers::with_jobs(j),
            None => Workers::default(),
        };
        Ok(Options { budget, workers })
    }
}

#[derive(Args)]
struct PrecludeArgs {
    graph: PathBuf,
    #[arg(long)]
    k: u32,
    /// Delete vertices as well as edges.
    #[arg(long)]
    strong: bool,
    #[arg(long, conflicts_with_all = ["verify", "sample"])]
    exact: bool,
    /// Claimed value m: check all size m-1 sets and find a size-m witness.
    #[arg(long, value_name = "M")]
    verify: Option<usize>,
    /// With --verify m, test N random size m-1 sets instead of all of them.
    #[arg(long, value_name = "N", requires = "verify")]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "sample")]
    seed: u64,
    #[command(flatten)]
    run: Budgeted,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Kn,
    Bipartite,
    Arrangement,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long, default_value_t = 3)]
    k: u32,
    /// Largest complete graph.
    #[arg(long, default_value_t = Limits::default().kn_max)]
    kn_max: usize,
    /// Number of random bipartite graphs.
    #[arg(long, default_value_t = Limits::default().bipartite_graphs)]
    bipartite_graphs: usize,
    /// Sampled fault sets for A_{5,2}.
    #[arg(long, default_value_t = Limits::default().a52_samples)]
    a52_samples: usize,
    /// Sampled fault sets for A_{5,3}.
    #[arg(long, default_value_t = Limits::default().a53_samples)]
    a53_samples: usize,
    #[arg(long, default_value_t = Limits::default().seed)]
    seed: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[command(flatten)]
    run: Budgeted,
}

/// Failure with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => 3,
            Error::Parse { .. } | Error::Parameter(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::UnknownVertex(_) | Error::UnknownEdge(..) | Error::VertexInEdgeQuery(_) => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure(2, format!("--{flag} is required for the {family} family")))
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure(2, format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn emit_json(v: &impl serde::Serialize) -> Result<(), Failure> {
    let mut text = serde_json::to_string(v).expect("json");
    text.push('\n');
    emit(&text)
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure(2, format!("{}: {e}", p.display()))),
        None => emit(text),
    }
}

fn read_graph(p: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(p).map_err(|e| Failure(2, format!("{}: {e}", p.display())))?;
    Graph::parse_text(&text).map_err(|e| Failure(2, format!("{}: {e}", p.display())))
}

fn check_k(k: u32) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure(2, "k must be positive".into()));
    }
    Ok(())
}

fn gen(a: GenArgs) -> Result<(), Failure> {
    let g = match a.family {
        Family::Complete => complete(need(a.n, "n", "complete")?)?,
        Family::Path => path(need(a.n, "n", "path")?)?,
        Family::Cycle => cycle(need(a.n, "n", "cycle")?)?,
        Family::CompleteBipartite => {
            complete_bipartite(need(a.a, "a", "complete-bipartite")?, need(a.b, "b", "complete-bipartite")?)?
        }
        Family::RandomBipartite => random_bipartite(
            need(a.a, "a", "random-bipartite")?,
            need(a.b, "b", "random-bipartite")?,
            need(a.p, "p", "random-bipartite")?,
            a.seed,
        )?,
        Family::Random => random_graph(need(a.n, "n", "random")?, need(a.p, "p", "random")?, a.seed)?,
        Family::Arrangement => {
            let spec = ArrangementSpec::new(need(a.n, "n", "arrangement")?, need(a.s, "s", "arrangement")?)?;
            let ag = arrangement(spec)?;
            let sidecar = a.labels.clone().or_else(|| {
                a.out.as_ref().map(|o| {
                    let mut name = o.as_os_str().to_owned();
                    name.push(".labels.json");
                    PathBuf::from(name)
                })
            });
            if let Some(p) = sidecar {
                fs::write(&p, ag.label_json()).map_err(|e| Failure(2, format!("{}: {e}", p.display())))?;
            }
            ag.graph
        }
    };
    write_out(a.out.as_deref(), &g.to_text())
}

fn solve(a: SolveArgs) -> Result<(), Failure> {
    check_k(a.k)?;
    let g = read_graph(&a.graph)?;
    let k = a.k;
    let out = match a.mode {
        SolveMode::Perfect => json!({ "k": k, "mode": "perfect", "result": decide_perfect_ikm(&g, k) }),
        SolveMode::Almost => json!({ "k": k, "mode": "almost", "result": decide_almost_perfect_ikm(&g, k) }),
        SolveMode::Mu => {
            let h = max_ikm(&g, k);
            json!({ "k": k, "mode": "mu", "mu_k": h.total(), "assignment": h })
        }
        SolveMode::Certificate => {
            json!({ "k": k, "mode": "certificate", "certificate": lemma41_certificate(&g, k, CertBudget::Auto) })
        }
    };
    emit_json(&out)
}

fn preclude(a: PrecludeArgs) -> Result<(), Failure> {
    check_k(a.k)?;
    let g = read_graph(&a.graph)?;
    let opts = a.run.options()?;
    let mode = match (a.verify, a.sample) {
        (Some(m), Some(count)) => Mode::Sample { m, count, seed: a.seed },
        (Some(m), None) => Mode::Verify(m),
        _ => Mode::Exact,
    };
    let q = PreclusionQuery { k: a.k, strong: a.strong, mode };
    let started = Instant::now();
    let r = preclusion_number(&g, &q, &opts)?;
    let name = a.graph.display().to_string();
    emit_json(&r.report(&name, &q, started))?;
    match r.status {
        Status::Proved | Status::SampledNoCounterexample => Ok(()),
        Status::UpperBoundOnly => Err(Failure(1, "a smaller preclusion set exists".into())),
        Status::LowerBoundOnly => Err(Failure(1, "no preclusion set of the claimed size was found".into())),
    }
}

fn theorems(a: TheoremArgs) -> Result<(), Failure> {
    let opts = a.run.options()?;
    let suite = match a.suite {
        SuiteArg::Kn => Suite::Kn,
        SuiteArg::Bipartite => Suite::Bipartite,
        SuiteArg::Arrangement => Suite::Arrangement,
        SuiteArg::All => Suite::All,
    };
    let limits = Limits {
        kn_max: a.kn_max,
        bipartite_graphs: a.bipartite_graphs,
        a52_samples: a.a52_samples,
        a53_samples: a.a53_samples,
        seed: a.seed,
    };
    let report = run_suite(suite, a.k, &limits, &opts)?;
    match a.format {
        Format::Csv => emit(&report.to_csv()?)?,
        Format::Json => emit(&format!("{}\n", report.to_json()))?,
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure(1, format!("overall: {}", report.overall)))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Preclude(a) => preclude(a),
        Command::Theorems(a) => theorems(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("kmatch: {msg}");
            ExitCode::from(code)
        }
    }
}
