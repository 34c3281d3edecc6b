//! Command-line front end: build threshold graphs, emit exact eigenbases,
//! decide Laplacian controllability, synthesize minimum controllers, and
//! certify the bridged antiregular pair.
//!
//! stdout carries machine-parseable JSON only; diagnostics go to stderr.
//! Exit codes: 0 success (or controllable-as-queried), 1 negative decision,
//! 2 input error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lapctrl::antiregular::{certify_distinct_spectrum, combine, graph_stats};
use lapctrl::control::{
    check_all_methods, check_with_method, design_binary, design_terminal, min_controllers, Method,
};
use lapctrl::json::{
    CombinedJson, ControlMatrixJson, EigenJson, GraphJson, ReportJson, StatsJson, StringRepr,
};
use lapctrl::spectra::EigenBasis;
use lapctrl::sweep::run_sweep;
use lapctrl::threshold::ThresholdGraph;
use lapctrl::{Error, Result};

#[derive(Parser)]
#[command(name = "lapctrl", version, about = "Exact Laplacian controllability of threshold graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a threshold graph and print it as JSON.
    Build(GraphArgs),
    /// Print the exact integer Laplacian eigenbasis.
    Eigvecs(GraphArgs),
    /// Decide controllability of the graph with a control matrix.
    Check {
        #[command(flatten)]
        graph: GraphArgs,
        /// Control matrix JSON file ('-' for stdin).
        #[arg(long = "B", value_name = "FILE")]
        b: PathBuf,
        /// Decision procedure, or all three cross-validated.
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Synthesize a minimum control matrix of the given kind.
    Design {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Build the bridged pair of antiregular graphs on k vertices.
    Combine {
        #[arg(long)]
        k: usize,
        /// Also certify that all k eigenvalues are distinct.
        #[arg(long)]
        certify: bool,
    },
    /// Print BFS diameter and maximum degree.
    Stats(GraphArgs),
    /// Verify eigenbases and designed controllers over every construction
    /// string with up to --max-k vertices (capped by THRESHOLD_CTRL_MAX_K).
    Sweep {
        #[arg(long, default_value_t = 10)]
        max_k: usize,
    },
}

/// Exactly one source for the graph.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Construction string, e.g. 0011000101.
    #[arg(long)]
    string: Option<String>,
    /// Nonincreasing degree sequence, e.g. 5,3,2,2,1,1.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    /// Graph JSON file ('-' for stdin).
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    LocalRank,
    Pbh,
    Kalman,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Binary,
    Terminal,
}

impl GraphArgs {
    fn build(&self) -> Result<ThresholdGraph> {
        let json = if let Some(s) = &self.string {
            GraphJson {
                k: None,
                string: Some(StringRepr::Compact(s.clone())),
                degrees: None,
                laplacian: None,
            }
        } else if let Some(d) = &self.degrees {
            GraphJson { k: None, string: None, degrees: Some(d.clone()), laplacian: None }
        } else {
            let text = read_source(self.input.as_deref().expect("clap group"))?;
            parse_json(&text)?
        };
        json.to_graph()
    }
}

fn read_source(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("reading {}: {e}", path.display())))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")))
}

fn emit<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Build(graph) => {
            emit(&GraphJson::from(&graph.build()?));
            Ok(0)
        }
        Command::Eigvecs(graph) => {
            let g = graph.build()?;
            let basis = EigenBasis::from_laplacian(g.laplacian())?;
            emit(&EigenJson::from(&basis));
            Ok(0)
        }
        Command::Check { graph, b, method } => {
            let g = graph.build()?;
            let matrix = parse_json::<ControlMatrixJson>(&read_source(&b)?)?.to_control_matrix()?;
            let (report, name) = match method {
                MethodArg::LocalRank => (check_with_method(&g, &matrix, Method::LocalRank)?, "local-rank"),
                MethodArg::Pbh => (check_with_method(&g, &matrix, Method::Pbh)?, "pbh"),
                MethodArg::Kalman => (check_with_method(&g, &matrix, Method::Kalman)?, "kalman"),
                MethodArg::All => (check_all_methods(&g, &matrix)?, "all"),
            };
            emit(&ReportJson::new(&report, name, min_controllers(g.degrees())));
            Ok(if report.controllable { 0 } else { 1 })
        }
        Command::Design { graph, kind } => {
            let g = graph.build()?;
            let b = match kind {
                KindArg::Binary => design_binary(&g)?,
                KindArg::Terminal => design_terminal(&g)?,
            };
            emit(&ControlMatrixJson::from(&b));
            Ok(0)
        }
        Command::Combine { k, certify } => {
            let c = combine(k)?;
            let certified = if certify { Some(certify_distinct_spectrum(&c)?) } else { None };
            emit(&CombinedJson::new(&c, certified)?);
            Ok(if certified == Some(false) { 1 } else { 0 })
        }
        Command::Stats(graph) => {
            let g = graph.build()?;
            let stats = graph_stats(g.laplacian())?;
            emit(&StatsJson { diameter: stats.diameter, max_degree: stats.max_degree });
            Ok(0)
        }
        Command::Sweep { max_k } => {
            let cap = std::env::var("THRESHOLD_CTRL_MAX_K")
                .ok()
                .map(|v| {
                    v.parse::<usize>().map_err(|_| {
                        Error::InvalidInput(format!("THRESHOLD_CTRL_MAX_K={v:?} is not a number"))
                    })
                })
                .transpose()?
                .unwrap_or(10);
            let summary = run_sweep(max_k.min(cap))?;
            emit(&summary);
            Ok(if summary.ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
