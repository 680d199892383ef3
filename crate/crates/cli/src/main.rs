use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use cliquelab::graph::{enumerate_labeled_graphs, enumerate_labeled_trees, parse_edge_list};
use cliquelab::{
    analyze_family, clique_polynomial, clique_root_report, parse_family, random_family_stress,
    run_scan, verify, ClaimId, Emit, Graph, ScanConfig, Source, Target,
};

/// Exact clique polynomials, real-rootedness and conjecture scans.
#[derive(Parser)]
#[command(name = "cliquelab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the clique polynomial as an ascending coefficient list.
    Poly {
        /// Edge-list or graph6 file; stdin when omitted.
        file: Option<PathBuf>,
    },
    /// Print the exact real-root report of the clique polynomial as JSON.
    Roots { file: Option<PathBuf> },
    /// Analyze a polynomial family (one coefficient list per line).
    Lemma {
        file: Option<PathBuf>,
        /// Run this many random families instead of reading a file.
        #[arg(long, conflicts_with = "file")]
        stress: Option<usize>,
        #[arg(long, default_value_t = 1, requires = "stress")]
        seed: u64,
    },
    /// Check one claim on every input graph, one JSON line per graph.
    Verify {
        #[arg(long)]
        claim: ClaimId,
        file: Option<PathBuf>,
    },
    /// Scan a graph stream for counterexamples.
    Scan {
        /// conj1, conj2, conj3:L, quest1, prop:<claim> or identities.
        #[arg(long)]
        target: Target,
        /// Enumerate every labeled graph on N vertices (N <= 7).
        #[arg(long, conflicts_with = "input")]
        n: Option<usize>,
        /// graph6 file, or `-` for stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, env = "CLIQUELAB_JOBS", default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "all")]
        emit: Emit,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print labeled graphs in graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        /// Labeled trees from Prüfer sequences.
        #[arg(long)]
        trees: bool,
    },
}

fn read_input(file: Option<&Path>) -> Result<String> {
    match file {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("cannot read stdin")?;
            Ok(s)
        }
    }
}

fn is_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.parse::<usize>().is_ok())
}

/// Edge-list text is one graph; otherwise every non-blank line is graph6.
/// Malformed graph6 lines are skipped with a warning.
fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    if is_edge_list(text) {
        return Ok(vec![parse_edge_list(text)?]);
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match Graph::parse_graph6(line) {
            Ok(g) => out.push(g),
            Err(e) => log::warn!("line {}: skipping malformed graph6: {e}", i + 1),
        }
    }
    Ok(out)
}

fn read_one_graph(file: Option<&Path>) -> Result<Graph> {
    let graphs = read_graphs(&read_input(file)?)?;
    match graphs.len() {
        1 => Ok(graphs.into_iter().next().expect("one graph")),
        0 => bail!("no graph in input"),
        k => bail!("expected one graph, found {k}"),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Exit status: `Ok(true)` means a counterexample or violation was found.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Poly { file } => {
            let g = read_one_graph(file.as_deref())?;
            println!("{}", clique_polynomial(&g));
            Ok(false)
        }
        Command::Roots { file } => {
            let g = read_one_graph(file.as_deref())?;
            print_json(&clique_root_report(&g))?;
            Ok(false)
        }
        Command::Lemma {
            file,
            stress: Some(trials),
            seed,
        } => {
            debug_assert!(file.is_none());
            if trials == 0 {
                bail!("--stress needs at least one trial");
            }
            let summary = random_family_stress(seed, trials);
            print_json(&summary)?;
            Ok(!summary.violations.is_empty())
        }
        Command::Lemma { file, .. } => {
            let family = parse_family(&read_input(file.as_deref())?)?;
            let report = analyze_family(&family)?;
            print_json(&report)?;
            Ok(report.conclusion_holds == Some(false))
        }
        Command::Verify { claim, file } => {
            let graphs = read_graphs(&read_input(file.as_deref())?)?;
            let mut out = BufWriter::new(io::stdout().lock());
            let mut failed = false;
            for g in &graphs {
                let r = verify(claim, g);
                failed |= r.conclusion_holds == Some(false);
                serde_json::to_writer(&mut out, &r)?;
                writeln!(out)?;
            }
            out.flush()?;
            Ok(failed)
        }
        Command::Scan {
            target,
            n,
            input,
            jobs,
            emit,
            output,
        } => {
            let source = match (n, input) {
                (Some(n), None) => Source::Builtin(n),
                (None, Some(p)) if p == Path::new("-") => Source::Stdin,
                (None, Some(p)) => Source::Graph6File(p),
                (None, None) => Source::Stdin,
                (Some(_), Some(_)) => unreachable!("clap rejects --n with --input"),
            };
            let config = ScanConfig {
                target,
                source,
                jobs,
                emit,
            };
            config.validate()?;
            let summary = match output {
                Some(path) => {
                    let file = File::create(&path)
                        .with_context(|| format!("cannot create {}", path.display()))?;
                    run_scan(&config, &mut BufWriter::new(file))?
                }
                None => run_scan(&config, &mut BufWriter::new(io::stdout().lock()))?,
            };
            if summary.malformed > 0 {
                log::warn!("{} malformed input lines skipped", summary.malformed);
            }
            Ok(summary.counterexamples > 0)
        }
        Command::Enumerate {
            n,
            connected,
            trees,
        } => {
            let mut out = BufWriter::new(io::stdout().lock());
            let graphs: Box<dyn Iterator<Item = Graph>> = if trees {
                Box::new(enumerate_labeled_trees(n)?)
            } else {
                Box::new(enumerate_labeled_graphs(n, move |g| {
                    !connected || g.is_connected()
                })?)
            };
            for g in graphs {
                writeln!(out, "{}", g.to_graph6()?)?;
            }
            out.flush()?;
            Ok(false)
        }
    }
}

/// Output closed early, e.g. piped into `head`.
fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        let kind = c
            .downcast_ref::<io::Error>()
            .map(io::Error::kind)
            .or_else(|| {
                c.downcast_ref::<serde_json::Error>()
                    .and_then(|j| j.io_error_kind())
            });
        kind == Some(io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            if is_broken_pipe(&e) {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
