//! Command-line front end: build crystals, decompose them, list highest
//! weight vectors, print characters, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure or resource limit,
//! 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcrystal::character::character;
use qcrystal::graph::multiplicity_table;
use qcrystal::tableaux::{build_tableau_crystal, ReadingStyle};
use qcrystal::verify::{self, Suite, SuiteParams};
use qcrystal::weyl::is_highest_weight;
use qcrystal::{all_words, Alphabet, CrystalGraph, Error, NodeBudget, StrictPartition};

/// Environment variable overriding the default node budget.
const BUDGET_ENV: &str = "QCRYSTAL_BUDGET";

#[derive(Parser)]
#[command(name = "qcrystal", version, about = "q(n)-crystal combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the tensor power crystal B^⊗power.
    Tensor {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        power: usize,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Build the shifted tableau crystal B(Y_λ).
    Tableaux {
        /// Strict partition, comma-separated (e.g. 3,1).
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum, default_value_t = ReadingArg::Me)]
        reading: ReadingArg,
        #[command(flatten)]
        output: OutputArgs,
        /// Print node/component/highest-weight statistics instead of the graph.
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Decompose B^⊗power into connected components.
    Decompose {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        power: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// List the highest weight words of B^⊗power.
    Hwv {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        power: usize,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Print the weight generating function of a crystal.
    Character {
        #[arg(long)]
        n: u8,
        #[arg(long, conflicts_with = "shape")]
        power: Option<usize>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t = ReadingArg::Me)]
        reading: ReadingArg,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run a verification suite (or all of them).
    Verify {
        /// nilpotency | assoc | charhw | strict | e1f1 | lemmaA | swib0 |
        /// branching | reading | weyl | counts | all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n_max: u8,
        #[arg(long, default_value_t = 6)]
        power_max: usize,
        #[arg(long, default_value_t = 6)]
        shape_max: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReadingArg {
    Me,
    Fe,
}

impl From<ReadingArg> for ReadingStyle {
    fn from(arg: ReadingArg) -> ReadingStyle {
        match arg {
            ReadingArg::Me => ReadingStyle::Me,
            ReadingArg::Fe => ReadingStyle::Fe,
        }
    }
}

/// Failures carrying their process exit code.
struct Exit {
    code: u8,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Exit {
        Exit { code: 2, message: message.into() }
    }

    fn failure(message: impl Into<String>) -> Exit {
        Exit { code: 1, message: message.into() }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Exit {
        match e {
            // Bad user input.
            Error::RankTooSmall { .. }
            | Error::NotStrictPartition(_)
            | Error::LetterOutOfRange { .. }
            | Error::Parse(_) => Exit::usage(e.to_string()),
            // Resource limits and failed internal checks.
            _ => Exit::failure(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Exit {
        Exit::failure(e.to_string())
    }
}

fn resolve_budget(flag: Option<usize>) -> Result<NodeBudget, Exit> {
    if let Some(nodes) = flag {
        return Ok(NodeBudget(nodes));
    }
    match std::env::var(BUDGET_ENV) {
        Ok(text) => text
            .parse()
            .map(NodeBudget)
            .map_err(|_| Exit::usage(format!("invalid {BUDGET_ENV} value {text:?}"))),
        Err(_) => Ok(NodeBudget::default()),
    }
}

fn emit(graph: &CrystalGraph, output: &OutputArgs) -> Result<(), Exit> {
    let text = match output.format {
        FormatArg::Json => qcrystal::io::to_json(graph),
        FormatArg::Dot => qcrystal::io::to_dot(graph),
    };
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_shape(text: &str) -> Result<StrictPartition, Exit> {
    text.parse::<StrictPartition>()
        .map_err(|e| Exit::usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Exit> {
    match cli.command {
        Command::Tensor { n, power, output, budget } => {
            let alphabet = Alphabet::new(n)?;
            let budget = resolve_budget(budget)?;
            let graph = CrystalGraph::tensor_power(&alphabet, power, budget)?;
            emit(&graph, &output)
        }
        Command::Tableaux { shape, n, reading, output, stats, budget } => {
            let alphabet = Alphabet::new(n)?;
            let lambda = parse_shape(&shape)?;
            let budget = resolve_budget(budget)?;
            let estimated = (n as u128).saturating_pow(lambda.size());
            if estimated > budget.0 as u128 {
                return Err(Error::BudgetExceeded { nodes: estimated, budget: budget.0 }.into());
            }
            let graph = build_tableau_crystal(&alphabet, &lambda, reading.into())?;
            if stats {
                let components = graph.components();
                println!("nodes={}", graph.node_count());
                println!("edges={}", graph.edge_count());
                println!("components={}", components.len());
                for c in &components {
                    for &k in &c.hw_nodes {
                        let node = &c.graph.nodes()[k];
                        println!(
                            "hw word={} weight={} component_size={}",
                            node.word,
                            node.weight,
                            c.graph.node_count()
                        );
                    }
                }
                Ok(())
            } else {
                emit(&graph, &output)
            }
        }
        Command::Decompose { n, power, budget } => {
            let alphabet = Alphabet::new(n)?;
            let budget = resolve_budget(budget)?;
            let table = multiplicity_table(&alphabet, power, budget)?;
            let mut covered: u128 = 0;
            for (lambda, m) in table.iter().rev() {
                println!(
                    "lambda={lambda} multiplicity={} size={}",
                    m.count, m.component_size
                );
                covered += (m.count * m.component_size) as u128;
            }
            let expected = (n as u128).pow(power as u32);
            println!("total={covered} expected={expected}");
            if covered != expected {
                return Err(Exit::failure(format!(
                    "component sizes cover {covered} nodes, expected {expected}"
                )));
            }
            Ok(())
        }
        Command::Hwv { n, power, budget } => {
            let alphabet = Alphabet::new(n)?;
            let budget = resolve_budget(budget)?;
            let nodes = (n as u128).checked_pow(power as u32).unwrap_or(u128::MAX);
            if nodes > budget.0 as u128 {
                return Err(Error::BudgetExceeded { nodes, budget: budget.0 }.into());
            }
            let mut count = 0usize;
            for word in all_words(&alphabet, power) {
                if is_highest_weight(&alphabet, &word) {
                    let wt = qcrystal::operators::weight(&alphabet, &word);
                    println!("{word} weight={wt}");
                    count += 1;
                }
            }
            println!("count={count}");
            Ok(())
        }
        Command::Character { n, power, shape, reading, budget } => {
            let alphabet = Alphabet::new(n)?;
            let budget = resolve_budget(budget)?;
            let graph = match (power, shape) {
                (Some(power), None) => CrystalGraph::tensor_power(&alphabet, power, budget)?,
                (None, Some(shape)) => {
                    let lambda = parse_shape(&shape)?;
                    build_tableau_crystal(&alphabet, &lambda, reading.into())?
                }
                _ => return Err(Exit::usage("exactly one of --power or --shape is required")),
            };
            let ch = character(&graph);
            for (weight, count) in ch.terms().iter().rev() {
                println!("{weight} {count}");
            }
            println!("total={}", ch.total());
            Ok(())
        }
        Command::Verify { suite, n_max, power_max, shape_max, trials } => {
            if n_max < 2 {
                return Err(Exit::usage(format!("--n-max must be at least 2, got {n_max}")));
            }
            let params = SuiteParams { n_max, power_max, shape_max, trials };
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(|e| Exit::usage(e.to_string()))?]
            };
            let mut all_passed = true;
            for suite in suites {
                let report = verify::run(suite, &params);
                print!("{}", report.render());
                eprintln!("{}: elapsed {:?}", report.suite, report.elapsed);
                all_passed &= report.passed();
            }
            if all_passed {
                Ok(())
            } else {
                Err(Exit::failure("verification failed"))
            }
        }
    }
}

fn main() -> ExitCode {
    // Piping into `head` must end the process quietly, not panic mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(exit) => {
            eprintln!("error: {}", exit.message);
            ExitCode::from(exit.code)
        }
    }
}
