use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pancyclic::io::{from_edge_list, from_graph6};
use pancyclic::pipelines::{certify_length, certify_with_profile, PipelineParams};
use pancyclic::search::{find_cycle, SearchOutcome};
use pancyclic::{ConditionProfile, Error, Graph};
use pancyclic_harness::hunt::{hunt, HuntConfig, HuntSource};
use pancyclic_harness::lemma_test::lemma_test;
use pancyclic_harness::oracle::ORACLE_BUDGET;
use serde_json::json;

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pancyclic",
    version,
    about = "Constructive pancyclicity certificates and verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Profile and certificate as JSON, one line per input graph.
    Check {
        /// Input file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// A cycle of one length, or a structured failure.
    FindCycle {
        file: PathBuf,
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Search for graphs with connectivity above independence number that
    /// are not pancyclic.
    Hunt {
        #[arg(long)]
        n_max: usize,
        /// Scan this graph6 file instead of every labelled graph.
        #[arg(long)]
        graph6: Option<PathBuf>,
        /// Worker threads; all cores by default.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run one lemma's invariant suite on seeded instances.
    LemmaTest {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// n, independence number, connectivity and minimum degree.
    Profile {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
}

/// Input problems exit 2, exhausted budgets 3, anything else 1.
fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidGraph(_)
        | Error::VertexOutOfRange { .. }
        | Error::TooManyVertices { .. }
        | Error::Precondition(_) => EXIT_INPUT,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_VIOLATION,
    }
}

fn read_graphs(file: &PathBuf, format: Format) -> Result<Vec<Graph>, Error> {
    let mut text = String::new();
    let read = if file.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    read.map_err(|e| Error::Parse(format!("cannot read {}: {e}", file.display())))?;
    match format {
        Format::Edgelist => Ok(vec![from_edge_list(&text)?]),
        Format::Graph6 => {
            let graphs: Vec<Graph> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with(">>"))
                .map(from_graph6)
                .collect::<Result<_, _>>()?;
            if graphs.is_empty() {
                return Err(Error::Parse(format!("{} holds no graph", file.display())));
            }
            Ok(graphs)
        }
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn run(cmd: Command) -> Result<u8, Error> {
    let params = PipelineParams::default();
    match cmd {
        Command::Check { file, format } => {
            let mut code = 0;
            for g in read_graphs(&file, format)? {
                let prof = ConditionProfile::compute_with_budget(&g, params.alpha_budget)?;
                let cert = certify_with_profile(&g, &prof, &params);
                cert.verify(&g)?;
                if cert.hypothesis_holds && !cert.is_pancyclic() {
                    code = EXIT_VIOLATION;
                }
                print_json(&cert);
            }
            Ok(code)
        }
        Command::FindCycle { file, length, format } => {
            let g = read_graphs(&file, format)?.remove(0);
            if length < 3 || length > g.n() {
                return Err(Error::Precondition(format!("length {length} outside 3..={}", g.n())));
            }
            let prof = ConditionProfile::compute_with_budget(&g, params.alpha_budget)?;
            if prof.kappa_exceeds_alpha() {
                let rc = certify_length(&g, &prof, length, &params)?;
                print_json(&json!({"length": length, "cycle": rc.cycle, "provenance": rc.provenance}));
                return Ok(0);
            }
            match find_cycle(&g, length, params.search_budget) {
                SearchOutcome::Found(c) => {
                    print_json(&json!({"length": length, "cycle": c, "provenance": "bounded-search"}));
                    Ok(0)
                }
                SearchOutcome::Absent => {
                    print_json(&json!({"length": length, "result": "none"}));
                    Ok(EXIT_VIOLATION)
                }
                SearchOutcome::Unknown => {
                    print_json(&json!({"length": length, "result": "unknown"}));
                    Ok(EXIT_BUDGET)
                }
            }
        }
        Command::Hunt { n_max, graph6, jobs } => {
            let cfg = HuntConfig {
                n_max,
                source: graph6.map_or(HuntSource::Internal, HuntSource::Graph6),
                params,
                oracle_budget: ORACLE_BUDGET,
                jobs,
            };
            let report = hunt(&cfg)?;
            print_json(&report);
            Ok(if report.clean() { 0 } else { EXIT_VIOLATION })
        }
        Command::LemmaTest { name, trials, seed } => {
            let report = lemma_test(&name, trials, seed)?;
            print_json(&report);
            Ok(if report.pass() { 0 } else { EXIT_VIOLATION })
        }
        Command::Profile { file, format } => {
            for g in read_graphs(&file, format)? {
                print_json(&ConditionProfile::compute_with_budget(&g, params.alpha_budget)?);
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            print_json(&json!({"error": e.to_string()}));
            ExitCode::from(exit_for(&e))
        }
    }
}
