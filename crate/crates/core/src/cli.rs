//! Command-line front end for the `zcyclic` binary.
//!
//! Exit codes: 0 on success, 1 when a theorem check fails or a group cannot
//! be analyzed, 2 on usage or input errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::graphs::{commuting_graph, cyclic_graph, diameter, enhanced_power_graph, to_dot, to_edge_list};
use crate::io::{format_cayley_table, parse_group_file, GroupFormat};
use crate::kernel::GroupConfig;
use crate::structure::{center, is_frobenius};
use crate::verifier::{
    analyze_with, default_corpus, run_suite, CorpusEntry, Fixture, GroupSpec, SourceKind,
    SuiteConfig, VerifyConfig,
};
use crate::zgen::{enumerate_z_params, realize, DEFAULT_ORDER_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "zcyclic", version, about = "Cyclic graphs of finite groups and Z-groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the Z-groups of an order (or a range of orders) as m:n:r triples.
    Generate {
        #[arg(long)]
        order: usize,
        /// Last order of a range starting at --order.
        #[arg(long)]
        to: Option<usize>,
        /// Print one JSON object per group with its order statistics.
        #[arg(long)]
        json: bool,
    },
    /// Check every theorem over the default corpus and write JSON lines.
    Verify {
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exhaustive conjugation-covariance checks instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Add a C6 whose cyclic graph has one vertex cut off; the run must fail.
        #[arg(long)]
        negative_control: bool,
        /// Omit the wall-clock duration so output is byte-for-byte reproducible.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
    /// Analyze one group file and print its report as JSON.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        format: Option<GroupFormat>,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Write a graph (or the Cayley table) of a group file.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "input-format")]
        input_format: Option<GroupFormat>,
        #[arg(long, value_enum, default_value_t = GraphChoice::Cyclic)]
        graph: GraphChoice,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphChoice {
    Cyclic,
    Commuting,
    EnhancedPower,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Edges,
    Table,
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn write_output(out: &Option<PathBuf>, text: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display()))),
        None => Ok(io::stdout().lock().write_all(text)?),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn check_range(lo: usize, hi: usize) -> Result<(), CliError> {
    if lo < 2 || hi < lo || hi > DEFAULT_ORDER_CAP {
        return Err(CliError(format!("order range {lo}..={hi} outside 2..={DEFAULT_ORDER_CAP}")));
    }
    Ok(())
}

fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Generate { order, to, json } => {
            let last = to.unwrap_or(order);
            check_range(order, last)?;
            let mut out = String::new();
            for n in order..=last {
                for p in enumerate_z_params(n as u64) {
                    let g = realize(p)?;
                    let center = center(&g).len();
                    let frobenius = is_frobenius(&g)?.is_frobenius;
                    let diam = diameter(&cyclic_graph(&g)?);
                    if json {
                        let stats: Vec<(usize, usize)> = g.order_statistics().into_iter().collect();
                        let line = serde_json::json!({
                            "order": n,
                            "zparams": p.to_string(),
                            "center_order": center,
                            "is_frobenius": frobenius,
                            "cyclic_diameter": diam,
                            "order_statistics": stats,
                        });
                        out.push_str(&line.to_string());
                    } else {
                        out.push_str(&format!(
                            "{p}\torder={n}\tcenter={center}\tfrobenius={frobenius}\tdiameter={diam}"
                        ));
                    }
                    out.push('\n');
                }
            }
            write_output(&None, out.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { max_order, jobs, out, exhaustive, negative_control, no_timing, seed } => {
            check_range(2, max_order)?;
            if jobs == 0 {
                return Err(CliError("--jobs must be at least 1".into()));
            }
            let mut corpus = default_corpus(max_order);
            if negative_control {
                corpus.push(CorpusEntry::corrupted(GroupSpec::Cyclic(6), Fixture::IsolateVertex(1)));
            }
            let config = SuiteConfig {
                jobs,
                verify: VerifyConfig { exhaustive_conjugation: exhaustive, seed, ..VerifyConfig::default() },
                description: format!(
                    "z-groups 2..={max_order} + extras{}",
                    if negative_control { " + negative-control" } else { "" }
                ),
                timing: !no_timing,
            };
            let report = run_suite(&corpus, &config);
            let mut buf = Vec::new();
            report.write_jsonl(&mut buf)?;
            write_output(&out, &buf)?;
            let failed = report.failed();
            eprintln!("{} groups, {} failures", report.group_count, failed);
            for f in &report.failures {
                eprintln!("FAIL {} {}: {}", f.group, f.theorem, f.witness);
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Analyze { input, format, exhaustive } => {
            let (g, fmt) = parse_group_file(&input, format, &GroupConfig::default())?;
            let source = match fmt {
                GroupFormat::Permutations => SourceKind::Permutations,
                _ => SourceKind::File,
            };
            let zparams = match fmt {
                GroupFormat::ZParams => Some(crate::io::parse_zparams_text(&fs::read_to_string(&input)?)?),
                _ => None,
            };
            let verify = VerifyConfig { exhaustive_conjugation: exhaustive, ..VerifyConfig::default() };
            let report = analyze_with(&g, source, zparams, verify)?;
            let mut line = serde_json::to_string(&report)?;
            line.push('\n');
            write_output(&None, line.as_bytes())?;
            Ok(if report.failures().next().is_none() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Export { input, input_format, graph, format, out } => {
            let (g, _) = parse_group_file(&input, input_format, &GroupConfig::default())?;
            let text = if let ExportFormat::Table = format {
                format_cayley_table(&g)
            } else {
                let graph = match graph {
                    GraphChoice::Cyclic => cyclic_graph(&g)?,
                    GraphChoice::Commuting => commuting_graph(&g)?,
                    GraphChoice::EnhancedPower => enhanced_power_graph(&g),
                };
                match format {
                    ExportFormat::Dot => to_dot(&graph),
                    _ => to_edge_list(&graph),
                }
            };
            write_output(&out, text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}
