use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kronsym::distinguishing::{distinguishing_index, distinguishing_number, DistinguishingResult, Labeling};
use kronsym::families::{self, FormulaResult, MultipartiteSpec};
use kronsym::io::{detect_format, parse_graph, serialize, GraphFormat};
use kronsym::verify::{emit_report, exit_code, run_suite_with, RunOptions, Status};
use kronsym::{automorphism_group, cartesian_skeleton, kronecker, cartesian, Error, Graph, SearchBudget};

const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "kronsym", version, about = "Symmetry breaking in Kronecker and Cartesian graph products")]
struct Cli {
    /// Input format for graph files; detected from the first byte when omitted.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<GraphFormat>,

    /// Format for graphs written to stdout.
    #[arg(long, global = true, value_parser = parse_format, default_value = "edgelist")]
    output_format: GraphFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Kron,
    Cart,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker or Cartesian product of two graphs.
    Product {
        #[arg(long, value_enum)]
        kind: Kind,
        a: String,
        b: String,
    },
    /// Order and generators of the automorphism group.
    Aut { graph: String },
    /// Distinguishing number with a certificate labeling.
    Dnum {
        graph: String,
        /// Search node budget (default: KRONSYM_BUDGET or 10^7).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Distinguishing index with a certificate edge labeling.
    Dindex {
        graph: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Cartesian skeleton.
    Skeleton { graph: String },
    /// Evaluate a closed-form value or bound.
    Families {
        formula: String,
        params: Vec<u64>,
    },
    /// Run verification suites and write a JSON-lines report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        /// Report path, `-` for stdout.
        #[arg(long)]
        report: PathBuf,
        /// Include per-case wall-clock times (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
    },
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|_| format!("expected `edgelist` or `graph6`, got `{s}`"))
}

fn budget(max_labelings: Option<u64>) -> SearchBudget {
    let b = SearchBudget::from_env();
    match max_labelings {
        Some(n) => b.with_max_labelings(n),
        None => b,
    }
}

/// `K5`, `C5`, `P4`, `K2,3`, `paw`.
fn named_graph(name: &str) -> Option<Graph> {
    if name == "paw" {
        return Some(Graph::paw());
    }
    let (head, rest) = name.split_at_checked(1)?;
    if let Some((a, b)) = rest.split_once(',') {
        return (head == "K").then_some(Graph::complete_bipartite(a.parse().ok()?, b.parse().ok()?));
    }
    let n: usize = rest.parse().ok()?;
    match head {
        "K" => Some(Graph::complete(n)),
        "C" if n >= 3 => Some(Graph::cycle(n)),
        "P" => Some(Graph::path(n)),
        _ => None,
    }
}

fn load(arg: &str, format: Option<GraphFormat>) -> Result<Graph, String> {
    let bytes = if arg == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| format!("stdin: {e}"))?;
        buf
    } else if Path::new(arg).exists() {
        std::fs::read(arg).map_err(|e| format!("{arg}: {e}"))?
    } else if let Some(g) = named_graph(arg) {
        return Ok(g);
    } else {
        return Err(format!("`{arg}` is neither a file nor a known graph name"));
    };
    let format = format.unwrap_or_else(|| detect_format(&bytes));
    parse_graph(&bytes, format).map_err(|e| format!("{arg}: {e}"))
}

fn print_result(r: &DistinguishingResult) {
    println!("{}", r.value);
    match &r.certificate {
        Labeling::Vertex(l) => {
            let labels: Vec<String> = l.0.iter().map(u32::to_string).collect();
            println!("{}", labels.join(" "));
        }
        Labeling::Edge(l) => {
            for (&(u, v), lab) in &l.0 {
                println!("{u} {v} {lab}");
            }
        }
    }
}

fn solve(result: kronsym::Result<DistinguishingResult>) -> Result<ExitCode, Failure> {
    match result {
        Ok(r) => {
            print_result(&r);
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::BudgetExceeded { best }) => {
            eprintln!("search budget exhausted");
            if let Some(best) = best {
                eprintln!("certified upper bound {}", best.value);
                print_result(&best);
            }
            Ok(ExitCode::from(EXIT_BUDGET))
        }
        Err(e) => Err(e.into()),
    }
}

fn formula(name: &str, p: &[u64]) -> Result<FormulaResult, Failure> {
    let arity = |n: usize| -> Result<(), Failure> {
        if p.len() == n {
            Ok(())
        } else {
            Err(Failure::Usage(format!("`{name}` takes {n} parameters, got {}", p.len())))
        }
    };
    let r = match name {
        "kron-complete" => {
            arity(2)?;
            families::d_kron_complete(p[0], p[1])
        }
        "complete-multipartite" => {
            let sizes: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            MultipartiteSpec::from_part_sizes(&sizes).map(|s| families::d_complete_multipartite(&s))
        }
        "kron-complete-bipartite" => {
            arity(4)?;
            families::d_kron_complete_bipartite(p[0], p[1], p[2], p[3])
        }
        "kron-stars" => {
            arity(2)?;
            families::d_kron_stars(p[0], p[1])
        }
        "k2-power-index" => {
            arity(1)?;
            u32::try_from(p[0])
                .map_err(|_| Error::DomainError("k too large".into()))
                .and_then(families::dprime_k2_power)
        }
        "kron-paths-index" => {
            arity(2)?;
            families::dprime_kron_paths(p[0], p[1])
        }
        "kron-path-star-index" => {
            arity(2)?;
            families::dprime_kron_path_star(p[0], p[1])
        }
        "kron-stars-index" => {
            arity(2)?;
            families::dprime_kron_stars(p[0], p[1])
        }
        "bipartite-index-upper" => {
            arity(2)?;
            families::dprime_bipartite_upper(p[0], p[1])
        }
        "kron-index-upper" => {
            arity(2)?;
            families::dprime_kron_upper(p[0], p[1], &SearchBudget::from_env()).map(|b| b.bound)
        }
        other => return Err(Failure::Usage(format!("unknown formula `{other}`"))),
    };
    Ok(r?)
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let fmt = cli.format;
    let emit = |g: &Graph| print!("{}", serialize(g, cli.output_format));
    match cli.command {
        Command::Product { kind, a, b } => {
            let (a, b) = (load(&a, fmt)?, load(&b, fmt)?);
            emit(&match kind {
                Kind::Kron => kronecker(&a, &b),
                Kind::Cart => cartesian(&a, &b),
            });
        }
        Command::Aut { graph } => {
            let group = automorphism_group(&load(&graph, fmt)?)?;
            println!("{}", group.order());
            for g in group.generators() {
                let images: Vec<String> = g.images().iter().map(usize::to_string).collect();
                println!("{}", images.join(" "));
            }
        }
        Command::Dnum { graph, budget: b } => {
            return solve(distinguishing_number(&load(&graph, fmt)?, &budget(b)));
        }
        Command::Dindex { graph, budget: b } => {
            return solve(distinguishing_index(&load(&graph, fmt)?, &budget(b)));
        }
        Command::Skeleton { graph } => emit(&cartesian_skeleton(&load(&graph, fmt)?)),
        Command::Families { formula: name, params } => println!("{}", formula(&name, &params)?),
        Command::Verify {
            suite,
            seed,
            budget: b,
            report,
            timings,
        } => {
            let lines = run_suite_with(&suite, &budget(b), seed, RunOptions { timings })?;
            let bytes = emit_report(&lines);
            if report.as_os_str() == "-" {
                std::io::stdout().write_all(&bytes).map_err(|e| format!("stdout: {e}"))?;
            } else {
                std::fs::write(&report, bytes).map_err(|e| format!("{}: {e}", report.display()))?;
            }
            let count = |s: Status| lines.iter().filter(|l| l.status == s).count();
            eprintln!(
                "{} cases: {} pass, {} fail, {} skipped (budget)",
                lines.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::SkippedBudget)
            );
            return Ok(ExitCode::from(exit_code(&lines) as u8));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } | Error::GroupNotEnumerated { .. } | Error::SizeCapExceeded { .. } => {
                    ExitCode::from(EXIT_BUDGET)
                }
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}
