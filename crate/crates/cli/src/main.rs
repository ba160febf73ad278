//! `graphinv`: compute exact resolvability and zero forcing invariants
//! of small graphs, emit family generators, and run the sweep harness.
//!
//! Exit codes: 0 success with no violations, 1 violations found,
//! 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};

use graphinv::format;
use graphinv::sweep::{self, SweepReport};
use graphinv_core::line_graph::line_graph;
use graphinv_core::metric_dim::{metric_dimension_with, DIM_ORDER_CAP};
use graphinv_core::zero_forcing::{
    edge_zero_forcing_number_with, path_cover_number, zero_forcing_number_with,
};
use graphinv_core::{families, Graph};

#[derive(Parser)]
#[command(name = "graphinv", version, about = "Exact graph resolvability and zero forcing invariants")]
struct Cli {
    /// Per-graph solver node budget.
    #[arg(long, global = true, default_value_t = sweep::DEFAULT_BUDGET)]
    budget_nodes: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvariantArg {
    Dim,
    Z,
    Ze,
    Pathcover,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariants of a graph given in edge-list format.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        invariant: InvariantArg,
    },
    /// Emit a generated family graph (or its line graph) as an edge list.
    Family {
        /// path, cycle, complete, bipartite, star, wheel, bouquet, tree
        name: String,
        /// Family parameters, e.g. `wheel 6`, `bipartite 2 3`,
        /// `bouquet 2 3 4`, `tree <n> <seed>`.
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the line graph of the generated graph.
        #[arg(long)]
        line: bool,
        /// Emit DOT instead of the edge-list format.
        #[arg(long)]
        dot: bool,
    },
    /// Run a named conjecture over its graph source.
    Sweep {
        /// z-vs-2zl, z-vs-zl, dim-vs-zl, tree-z-vs-zl, p-vs-z
        conjecture: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Recompute the closed-form line-graph table at desk scale.
    Table {
        #[arg(long, value_enum, default_value = "md")]
        format: TableFormat,
    },
    /// Re-check every published witness construction.
    VerifyWitnesses {
        #[arg(long)]
        family: Option<String>,
    },
}

fn build_family(name: &str, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| -> Result<()> {
        if params.len() != k {
            bail!("family {name:?} takes {k} parameter(s), got {}", params.len());
        }
        Ok(())
    };
    let g = match name {
        "path" => {
            want(1)?;
            families::path(params[0])
        }
        "cycle" => {
            want(1)?;
            families::cycle(params[0])
        }
        "complete" => {
            want(1)?;
            families::complete(params[0])
        }
        "bipartite" => {
            want(2)?;
            families::complete_bipartite(params[0], params[1])
        }
        "star" => {
            want(1)?;
            families::star(params[0])
        }
        "wheel" => {
            want(1)?;
            families::wheel(params[0]).map(|(g, _)| g)
        }
        "bouquet" => families::bouquet(params).map(|(g, _)| g),
        "tree" => {
            want(2)?;
            families::random_tree(params[0], params[1] as u64)
        }
        other => bail!("unknown family {other:?}"),
    };
    g.map_err(|e| anyhow!("{e}"))
}

fn run_compute(file: &std::path::Path, invariant: InvariantArg, budget: u64) -> Result<()> {
    let g = format::read_edge_list(file)?;
    let want = |i: InvariantArg| invariant == i || invariant == InvariantArg::All;
    if want(InvariantArg::Dim) {
        let r = metric_dimension_with(&g, budget, DIM_ORDER_CAP).map_err(|e| anyhow!("dim: {e}"))?;
        println!("dim = {}", r.value);
    }
    if want(InvariantArg::Z) {
        let r = zero_forcing_number_with(&g, budget, 0).map_err(|e| anyhow!("Z: {e}"))?;
        println!("Z = {}", r.value);
    }
    if want(InvariantArg::Ze) {
        let r = edge_zero_forcing_number_with(&g, budget).map_err(|e| anyhow!("Z_e: {e}"))?;
        println!("Z_e = {}", r.value);
    }
    if want(InvariantArg::Pathcover) {
        let p = path_cover_number(&g).map_err(|e| anyhow!("P: {e}"))?;
        println!("P = {}", p);
    }
    Ok(())
}

fn emit_report(report: &SweepReport, format: ReportFormat) -> ExitCode {
    match format {
        ReportFormat::Json => print!("{}", report.to_json()),
        ReportFormat::Csv => print!("{}", report.to_csv()),
    }
    if report.has_violations() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute { file, invariant } => {
            run_compute(&file, invariant, cli.budget_nodes)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Family {
            name,
            params,
            out,
            line,
            dot,
        } => {
            let mut g = build_family(&name, &params)?;
            if line {
                g = line_graph(&g).map_err(|e| anyhow!("{e}"))?.into_graph();
            }
            let text = if dot {
                format::write_dot(&g, &name)
            } else {
                format::write_edge_list(&g)
            };
            match out {
                Some(path) => std::fs::write(&path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            conjecture,
            max_n,
            seed,
            format,
        } => {
            let spec = sweep::named_conjecture(&conjecture, max_n, seed)?;
            let report = sweep::run_conjecture(&spec, cli.budget_nodes)?;
            Ok(emit_report(&report, format))
        }
        Command::Table { format } => {
            let report = sweep::reproduce_table(cli.budget_nodes)?;
            match format {
                TableFormat::Json => print!("{}", report.to_json()),
                TableFormat::Csv => print!("{}", report.to_csv()),
                TableFormat::Md => print!("{}", report.to_markdown()),
            }
            Ok(if report.has_violations() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::VerifyWitnesses { family } => {
            let report = sweep::verify_witnesses(family.as_deref())?;
            print!("{}", report.to_markdown());
            Ok(if report.has_violations() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("GRAPHINV_THREADS") {
        if let Ok(t) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
