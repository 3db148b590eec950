use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use grundy_core::atoms::{enumerate_atoms_with, enumerate_minimal_atoms, write_catalog, AtomLimits};
use grundy_core::families::{build_g_rki, parse_script, run_script, Family};
use grundy_core::graph::{enumerate_graphs, enumerate_regular_graphs, write_graph6, Graph, SparseGraph};
use grundy_core::harness::{read_graph6_lines, run_campaign, write_csv, write_jsonl, CampaignConfig, Claim, Source};
use grundy_core::solver::{grundy_exact_with, partial_grundy_exact_with, SolveOptions, SolverError, DEFAULT_BUDGET};
use grundy_core::twins::cubic_grundy_linear;

const EXIT_FAIL: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "grundylab", version, about = "Exact Grundy numbers, t-atoms and claim verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grundy number and an ordering that attains it.
    Grundy {
        /// graph6 string, or `-` for one graph per line on stdin.
        graph: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Partial Grundy number and a coloring that attains it.
    PartialGrundy {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Linear-time Grundy number of a connected cubic graph.
    Cubic { graph: String },
    /// Writes a t-atom catalog in graph6.
    Atoms {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        max_order: Option<usize>,
        /// Only forests.
        #[arg(long)]
        forest: bool,
        /// Only minimal atoms.
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Runs a build script and prints the resulting graph.
    Family {
        kind: FamilyKind,
        #[arg(long)]
        script: PathBuf,
        /// Degree for gstar.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Prints G_{r,k,i} in graph6.
    Grki {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated block sizes summing to r.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(long)]
        i: usize,
    },
    /// Prints graphs on n vertices, r-regular if --r is given.
    Enumerate {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Runs a verification campaign and writes the report to stdout.
    Verify {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 0)]
        max_n: usize,
        /// graph6 file, or `-` for stdin, instead of the claim's enumerator.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    F3,
    Gstar,
}

fn read_stdin() -> Result<String> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text).context("reading stdin")?;
    Ok(text)
}

fn inputs(arg: &str) -> Result<Vec<Graph>> {
    let text = if arg == "-" { read_stdin()? } else { arg.to_string() };
    Ok(read_graph6_lines(&text)?)
}

fn join(values: impl IntoIterator<Item = usize>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Budget exhaustion is reported on stderr and turns into exit code 2.
fn budget_exceeded(e: &anyhow::Error) -> bool {
    matches!(e.downcast_ref::<SolverError>(), Some(SolverError::BudgetExceeded { .. }))
}

fn run(cli: Cli) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Grundy { graph, budget } => {
            for g in inputs(&graph)? {
                let sol = grundy_exact_with(&g, &SolveOptions { budget })?;
                writeln!(out, "{} {} {}", write_graph6(&g), sol.value, join(sol.ordering.as_slice().iter().copied()))?;
            }
        }
        Command::PartialGrundy { graph, budget } => {
            for g in inputs(&graph)? {
                let sol = partial_grundy_exact_with(&g, &SolveOptions { budget })?;
                writeln!(out, "{} {} {}", write_graph6(&g), sol.value, join(sol.coloring.colors().iter().copied()))?;
            }
        }
        Command::Cubic { graph } => {
            for g in inputs(&graph)? {
                let value = cubic_grundy_linear(&SparseGraph::from(&g))?;
                writeln!(out, "{} {}", write_graph6(&g), value)?;
            }
        }
        Command::Atoms {
            t,
            max_degree,
            max_order,
            forest,
            minimal,
            out: path,
        } => {
            let limits = AtomLimits {
                max_degree,
                max_order,
                forest,
            };
            let catalog = if minimal {
                enumerate_minimal_atoms(t, limits)?
            } else {
                enumerate_atoms_with(t, limits)?
            };
            fs::write(&path, write_catalog(&catalog)).with_context(|| format!("writing {}", path.display()))?;
            writeln!(out, "{} atoms, largest order {}", catalog.len(), catalog.max_order())?;
        }
        Command::Family { kind, script, r } => {
            let family = match (kind, r) {
                (FamilyKind::F3, None | Some(3)) => Family::F3Star,
                (FamilyKind::F3, Some(r)) => bail!("f3 is cubic; --r {r} does not apply"),
                (FamilyKind::Gstar, Some(r)) if r >= 2 => Family::GStar(r),
                (FamilyKind::Gstar, _) => bail!("gstar needs --r of at least 2"),
            };
            let text = if script.as_os_str() == "-" {
                read_stdin()?
            } else {
                fs::read_to_string(&script).with_context(|| format!("reading {}", script.display()))?
            };
            let result = run_script(&parse_script(&text)?, family)?;
            writeln!(
                out,
                "{} n={} regular={}",
                write_graph6(&result.graph),
                result.graph.n(),
                result.regular
            )?;
        }
        Command::Grki { r, k, parts, i } => {
            writeln!(out, "{}", write_graph6(&build_g_rki(r, k, &parts, i)?))?;
        }
        Command::Enumerate { r, n, connected } => {
            let graphs = match r {
                Some(r) => enumerate_regular_graphs(r, n, connected)?,
                None => enumerate_graphs(n, connected)?,
            };
            for g in graphs {
                writeln!(out, "{}", write_graph6(&g))?;
            }
        }
        Command::Verify {
            claim,
            r,
            max_n,
            input,
            budget,
            json: _,
            csv,
            threads,
            samples,
            seed,
        } => {
            let claim: Claim = claim.parse()?;
            let source = match input {
                None => Source::Enumerate,
                Some(path) => {
                    let text = if path == "-" {
                        read_stdin()?
                    } else {
                        fs::read_to_string(&path).with_context(|| format!("reading {path}"))?
                    };
                    Source::Graphs(read_graph6_lines(&text)?)
                }
            };
            let cfg = CampaignConfig {
                budget,
                threads,
                samples,
                seed,
                ..CampaignConfig::new(claim, r, max_n)
            };
            let report = run_campaign(&cfg, &source)?;
            if csv {
                write_csv(&report, &mut out)?;
            } else {
                write_jsonl(&report, &mut out)?;
            }
            out.flush()?;
            let s = &report.summary;
            eprintln!(
                "{}: {} passed, {} failed, {} unknown, {} skipped in {:.3}s",
                s.claim,
                s.passed,
                s.failed,
                s.unknown,
                s.skipped,
                report.wall_time.as_secs_f64()
            );
            return Ok(u8::try_from(s.verdict.exit_code()).unwrap_or(EXIT_FAIL));
        }
    }
    out.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if budget_exceeded(&e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INCONCLUSIVE)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
