//! `mvd`: analyze, verify, solve, and generate directed graphs for
//! mutual-visibility questions, over edge-list files or stdin.
//!
//! Exit codes are a stable contract: 0 success (or a positive verification
//! verdict), 1 verification-negative, 2 input error, 3 budget/cap refusal.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mvd::generators;
use mvd::solver;
use mvd::structure;
use mvd::visibility::{self, Variant};
use mvd::{Digraph, Error, VertexId};

#[derive(Parser)]
#[command(name = "mvd", version, about = "Mutual visibility in directed graphs")]
struct Cli {
    /// Output format; json is the stable machine contract.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Read the input graph from this file instead of stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Strong-connectivity report: components, condensation, bridges.
    Analyze,
    /// Check whether a vertex set is a mutual-visibility set.
    Verify {
        /// Comma-separated vertex labels (indices on unlabeled graphs).
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
        #[arg(long, default_value = "standard", value_parser = parse_variant)]
        variant: Variant,
    },
    /// Compute the exact mutual-visibility number.
    Solve {
        #[arg(long, default_value = "standard", value_parser = parse_variant)]
        variant: Variant,
        /// Largest component size the exact search will take on
        /// (default 25; MVD_BUDGET overrides the default).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Emit a graph family as an edge list on stdout.
    ///
    /// Families and parameters: cycle N | path_dag N | random_dag N
    /// P_PER_MILLE SEED | complete N | random_tournament N SEED | paley Q |
    /// two_clique N | figure1 | symmetrize (undirected edge list on input).
    Gen { family: String, params: Vec<u64> },
    /// Run the brute-force reference engines instead of the fast paths.
    Oracle {
        #[command(subcommand)]
        engine: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustive set verification (shortest-path enumeration).
    Verify {
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
        #[arg(long, default_value = "standard", value_parser = parse_variant)]
        variant: Variant,
        /// Vertex-count cap (default 12).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Exhaustive maximum by subset enumeration.
    Solve {
        #[arg(long, default_value = "standard", value_parser = parse_variant)]
        variant: Variant,
        /// Vertex-count cap (default 15).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Undirected maximum on a symmetrized edge list.
    SolveUndirected {
        /// Vertex-count cap (default 15).
        #[arg(long)]
        cap: Option<usize>,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse::<Variant>().map_err(|e| e.to_string())
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::OracleCapExceeded { .. } | Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze => {
            let d = read_graph(&cli.input)?;
            cmd_analyze(&d, cli.format)
        }
        Command::Verify { set, variant } => {
            let d = read_graph(&cli.input)?;
            let members = resolve_set(&d, &set)?;
            let report = visibility::verify(&d, &members, variant)?;
            print_report(&d, &report, cli.format);
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::Solve { variant, budget } => {
            let d = read_graph(&cli.input)?;
            let result = match variant {
                Variant::Standard => solver::mu_with_budget(&d, effective_budget(budget)?)?,
                other => solver::mu_variant(&d, other)?,
            };
            print_mu(&d, &result, cli.format);
            Ok(0)
        }
        Command::Gen { family, params } => cmd_gen(&family, &params, &cli.input),
        Command::Oracle { engine } => match engine {
            OracleCommand::Verify { set, variant, cap } => {
                let d = read_graph(&cli.input)?;
                let members = resolve_set(&d, &set)?;
                let cap = cap.unwrap_or(visibility::DEFAULT_ORACLE_CAP);
                let report = visibility::naive_verify_capped(&d, &members, variant, cap)?;
                print_report(&d, &report, cli.format);
                Ok(if report.valid { 0 } else { 1 })
            }
            OracleCommand::Solve { variant, cap } => {
                let d = read_graph(&cli.input)?;
                let cap = cap.unwrap_or(solver::DEFAULT_BRUTEFORCE_CAP);
                let result = match variant {
                    Variant::Standard => solver::mu_bruteforce_capped(&d, cap)?,
                    other => solver::mu_variant_capped(&d, other, cap)?,
                };
                print_mu(&d, &result, cli.format);
                Ok(0)
            }
            OracleCommand::SolveUndirected { cap } => {
                let text = read_input(&cli.input)?;
                let d = generators::symmetrize(&text)?;
                let cap = cap.unwrap_or(solver::DEFAULT_BRUTEFORCE_CAP);
                let result = solver::mu_undirected_bruteforce_capped(&d, cap)?;
                print_mu(&d, &result, cli.format);
                Ok(0)
            }
        },
    }
}

fn read_input(input: &Option<PathBuf>) -> Result<String, Failure> {
    match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn read_graph(input: &Option<PathBuf>) -> Result<Digraph, Failure> {
    Ok(Digraph::from_edge_list(&read_input(input)?)?)
}

fn resolve_set(d: &Digraph, tokens: &[String]) -> Result<Vec<VertexId>, Failure> {
    tokens
        .iter()
        .filter(|t| !t.is_empty())
        .map(|t| {
            d.vertex_by_label(t)
                .ok_or_else(|| Failure::input(format!("unknown vertex {t:?}")))
        })
        .collect()
}

fn effective_budget(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("MVD_BUDGET") {
        Ok(value) => value
            .parse::<usize>()
            .map_err(|_| Failure::input(format!("MVD_BUDGET must be an integer, got {value:?}"))),
        Err(_) => Ok(solver::DEFAULT_SEARCH_BUDGET),
    }
}

fn cmd_analyze(d: &Digraph, format: Format) -> Result<u8, Failure> {
    let report = structure::analysis_json(d);
    match format {
        Format::Json => println!("{report}"),
        Format::Text => {
            println!("vertices: {}", d.vertex_count());
            println!("arcs: {}", d.arc_count());
            println!("is_dag: {}", report["is_dag"]);
            let components = report["components"].as_array().unwrap();
            println!("components: {}", components.len());
            for c in components {
                let labels: Vec<&str> = c
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_str().unwrap())
                    .collect();
                println!("  {{{}}}", labels.join(", "));
            }
            let bridges = report["bridges"].as_array().unwrap();
            println!("beta: {}", bridges.len());
            for b in bridges {
                println!(
                    "  bridge {} -> {}",
                    b[0].as_str().unwrap(),
                    b[1].as_str().unwrap()
                );
            }
        }
    }
    Ok(0)
}

fn print_report(d: &Digraph, report: &visibility::VisibilityReport, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json(d)),
        Format::Text => {
            println!(
                "valid: {} (variant {}, {} pairs checked)",
                report.valid, report.variant, report.pairs_checked
            );
            for b in &report.blocked {
                let free = b
                    .d_free
                    .map_or("unreachable".to_string(), |x| x.to_string());
                let restricted = b
                    .d_restricted
                    .map_or("unreachable".to_string(), |x| x.to_string());
                println!(
                    "  blocked {} -> {}: free distance {free}, avoiding the set {restricted}",
                    d.label(b.from),
                    d.label(b.to),
                );
            }
        }
    }
}

fn print_mu(d: &Digraph, result: &solver::MuResult, format: Format) {
    match format {
        Format::Json => println!("{}", result.to_json(d)),
        Format::Text => {
            let witness: Vec<String> = result.witness.iter().map(|&v| d.label(v)).collect();
            println!("mu: {}", result.mu);
            println!("witness: {{{}}}", witness.join(", "));
            println!("shortcut: {}", result.shortcut.name());
            println!("nodes_explored: {}", result.nodes_explored);
        }
    }
}

fn cmd_gen(family: &str, params: &[u64], input: &Option<PathBuf>) -> Result<u8, Failure> {
    let arity_error = |expected: &str| {
        Failure::input(format!(
            "family {family} expects parameters: {expected} (got {} values)",
            params.len()
        ))
    };
    let one = || -> Result<u64, Failure> {
        match params {
            [a] => Ok(*a),
            _ => Err(arity_error("1 integer")),
        }
    };
    let d = match family {
        "cycle" => generators::gen_cycle(one()? as usize)?,
        "path_dag" => generators::gen_path_dag(one()? as usize)?,
        "complete" => generators::gen_complete(one()? as usize)?,
        "two_clique" => generators::gen_two_clique(one()? as usize)?,
        "paley" => generators::gen_paley(one()?)?,
        "random_dag" => match params {
            [n, p_mille, seed] => {
                generators::gen_random_dag(*n as usize, *p_mille as f64 / 1000.0, *seed)?
            }
            _ => return Err(arity_error("N P_PER_MILLE SEED")),
        },
        "random_tournament" => match params {
            [n, seed] => generators::gen_random_tournament(*n as usize, *seed),
            _ => return Err(arity_error("N SEED")),
        },
        "figure1" => match params {
            [] => generators::gen_figure1(),
            _ => return Err(arity_error("no parameters")),
        },
        "symmetrize" => match params {
            [] => generators::symmetrize(&read_input(input)?)?,
            _ => return Err(arity_error("no parameters; undirected edge list on input")),
        },
        other => {
            return Err(Failure::input(format!(
                "unknown family {other:?}; expected cycle, path_dag, random_dag, complete, \
                 random_tournament, paley, two_clique, figure1, or symmetrize"
            )))
        }
    };
    let text = d.to_edge_list();
    if !text.is_empty() {
        println!("{text}");
    }
    Ok(0)
}
