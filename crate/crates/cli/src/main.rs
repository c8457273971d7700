//! Command-line front end: analyze a graph, write family graphs, run the
//! verification suites.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stabletoric::algebra::MonomialOrder;
use stabletoric::graph::io::{read_simple_graph, write_simple_graph};
use stabletoric::graph::Family;
use stabletoric::polytope::{cone_membership, stable_set_polytope, write_witness};
use stabletoric::stable::{analyze, AnalyzeOptions};
use stabletoric::suites::{run_suite, SuiteParams, SUITES};
use stabletoric::{Error, SimpleGraph};

#[derive(Parser)]
#[command(name = "stabletoric", version, about = "Toric rings and ideals of stable set polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one graph.
    Analyze(AnalyzeArgs),
    /// Write a named family member in the graph text format.
    Family {
        /// e.g. `two_odd_holes:2,3` or `complete(3)`.
        #[arg(long, value_name = "SPEC")]
        family: Option<String>,
        #[arg(value_name = "SPEC", conflicts_with = "family")]
        spec: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 if any instance fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Graph file in the `p`/`e` text format.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    input: Option<PathBuf>,
    /// Named family instead of a file.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, default_value_t = 4)]
    dmax: usize,
    /// Fixed walk length bound for the generator construction.
    #[arg(long)]
    walk_bound: Option<usize>,
    /// `grevlex`, `lex`, `glex`, optionally `:` and a 1-based variable
    /// permutation, largest first.
    #[arg(long)]
    order: Option<String>,
    #[arg(long, default_value_t = 8)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the nonnormality witness with a rational decomposition.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the suite names.
    suite: String,
    /// Scale parameters as `key=value` (n, cycles, kind, lengths, dmax,
    /// count, samples, seed, labeled).
    params: Vec<String>,
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    /// Bad input or arguments: exit code 2.
    Usage(String),
    /// The analysis or a suite failed: exit code 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidFamily(_) | Error::VertexOutOfRange { .. } | Error::LoopNotAllowed(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Check(e.to_string()),
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(input: &Option<PathBuf>, family: &Option<String>) -> Result<SimpleGraph, Failure> {
    match (input, family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(read_simple_graph(&text)?)
        }
        (None, Some(spec)) => Ok(spec.parse::<Family>()?.build()?),
        (None, None) => Err(Failure::Usage("give --input or --family".into())),
    }
}

fn cmd_analyze(a: &AnalyzeArgs) -> Result<(), Failure> {
    if a.dmax < 2 {
        return Err(Failure::Usage("--dmax must be at least 2".into()));
    }
    let g = load_graph(&a.input, &a.family)?;
    let nvars = g.stable_sets().len();
    let order = match &a.order {
        Some(s) => Some(MonomialOrder::parse(s, nvars).map_err(|e| Failure::Usage(format!("--order: {e}")))?),
        None => None,
    };
    let opts = AnalyzeOptions {
        dmax: a.dmax,
        walk_bound: a.walk_bound,
        order,
        budget: a.budget,
        seed: a.seed,
        ..AnalyzeOptions::default()
    };
    let report = analyze(&g, &opts)?;
    let text = match a.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    emit(&a.out, &text)?;
    if let Some(path) = &a.witness_out {
        let body = match &report.normal.witness {
            Some(w) => {
                let cert = cone_membership(w, &stable_set_polytope(&g))?.certificate;
                write_witness(w, cert.as_ref())
            }
            None => format!("c no nonnormality witness ({})\n", report.normal.status),
        };
        emit(&Some(path.clone()), &body)?;
    }
    let broken = report.inconsistencies();
    if broken.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("inconsistent report: {}", broken.join("; "))))
    }
}

fn cmd_family(spec: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    let family: Family = spec.parse()?;
    let g = family.build()?;
    emit(out, &write_simple_graph(&g, Some(&family.to_string())))
}

fn cmd_verify(v: &VerifyArgs) -> Result<(), Failure> {
    if !SUITES.contains(&v.suite.as_str()) {
        return Err(Failure::Usage(format!("unknown suite '{}'; expected one of {}", v.suite, SUITES.join(", "))));
    }
    let mut params = SuiteParams::parse(&v.params)?;
    if v.dmax.is_some() {
        params.dmax = v.dmax;
    }
    if let Some(s) = v.seed {
        params.seed = s;
    }
    if params.dmax.is_some_and(|d| d < 2) {
        return Err(Failure::Usage("dmax must be at least 2".into()));
    }
    let outcome = run_suite(&v.suite, &params)?;
    let text = match v.format {
        Format::Json => serde_json::to_string_pretty(&outcome).expect("serializable") + "\n",
        Format::Text => {
            let mut s = String::new();
            for r in &outcome.instances {
                s.push_str(&r.to_string());
                s.push('\n');
            }
            s.push_str(&outcome.summary());
            s.push('\n');
            s
        }
    };
    emit(&v.out, &text)?;
    if outcome.passed() {
        Ok(())
    } else {
        Err(Failure::Check(outcome.summary()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Family { family, spec, out } => match family.as_ref().or(spec.as_ref()) {
            Some(s) => cmd_family(s, out),
            None => Err(Failure::Usage("give a family spec".into())),
        },
        Command::Verify(v) => cmd_verify(v),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
