mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use mvis::families::{reduction_gprime, reduction_witness};
use mvis::oracles::reduction_oracle;
use mvis::{
    classify_set, comparison_table, edgelist, oracle, solve, solve_independence, FamilySpec, Graph,
    OracleValue, SolveError, SolveOptions, SolveResult, Variant, VertexSet, VisibilityReport,
};
use serde::Serialize;

use crate::input::{load_graph, parse_set};
use crate::verify::{RunReport, Scope, Status};

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

#[derive(Parser)]
#[command(name = "mvis", version, about = "Mutual-visibility sets in graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// mutual, total, outer or dual
    #[arg(long, global = true)]
    variant: Option<Variant>,
    /// Search-node budget (0 = unlimited)
    #[arg(long, global = true, default_value_t = 0)]
    budget_nodes: u64,
    /// Wall-clock budget per solve in milliseconds (0 = unlimited)
    #[arg(long, global = true, env = "MVIS_BUDGET_MS", default_value_t = 0)]
    budget_ms: u64,
    /// Worker threads
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomly generated instances
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member as an edge-list file
    Gen {
        spec: FamilySpec,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Classify a vertex set against all four variants
    Check {
        /// Edge-list file or family spec
        graph: String,
        /// Vertex ids or labels, e.g. "0,4" or "(1,1),(2,1)"
        set: String,
    },
    /// Compute a maximum set and its size
    Solve { graph: String },
    /// Print the known value for a family
    Oracle { spec: FamilySpec },
    /// Compare solver, oracle and explicit witnesses across families
    Verify(VerifyArgs),
    /// Build the reduction graph from a base graph and certify its value
    Reduce {
        graph: String,
        #[arg(short, default_value_t = 3)]
        t: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Solve all four variants and report the ordering and mu/mu_o ratio
    Compare { graph: String },
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to these groups: cycles, trees, grids, tori, gadgets, reduction
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    #[arg(long, default_value_t = 10)]
    max_cycle: usize,
    #[arg(long, default_value_t = 6)]
    max_grid: usize,
    #[arg(long, default_value_t = 5)]
    max_torus: usize,
    #[arg(long, default_value_t = 20)]
    trees: u64,
}

const GROUPS: [&str; 6] = ["cycles", "trees", "grids", "tori", "gadgets", "reduction"];

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn options(g: &Global) -> SolveOptions {
    SolveOptions {
        node_budget: g.budget_nodes,
        time_budget_ms: g.budget_ms,
        parallel: g.parallel.max(1),
        ..SolveOptions::default()
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", text());
    }
    Ok(())
}

fn show_set(g: &Graph, x: &VertexSet) -> String {
    let names: Vec<String> = x
        .iter()
        .map(|v| g.label(v).map_or_else(|| v.to_string(), str::to_string))
        .collect();
    format!("{{{}}}", names.join(", "))
}

fn show_pair(g: &Graph, p: Option<(usize, usize)>) -> String {
    let name = |v: usize| g.label(v).map_or_else(|| v.to_string(), str::to_string);
    p.map_or_else(String::new, |(u, v)| format!("  ({} cannot see {})", name(u), name(v)))
}

fn show_oracle(o: &OracleValue) -> String {
    let value = o.value.map_or_else(|| "?".to_string(), |v| v.to_string());
    format!("{:?} {value} [{}]", o.kind, o.source)
}

fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    let opts = options(g);
    match &cli.command {
        Command::Gen { spec, out } => {
            let graph = spec.generate()?;
            match out {
                Some(path) => {
                    edgelist::write_file(&graph, path)?;
                    eprintln!("wrote {} ({} vertices, {} edges)", path.display(), graph.n(), graph.m());
                }
                None => print!("{}", edgelist::render(&graph)),
            }
            Ok(0)
        }
        Command::Check { graph, set } => {
            let graph = load_graph(graph)?;
            let x = parse_set(&graph, set)?;
            let report = classify_set(&graph, &x);
            emit(g.json, &CheckOutput { set: &x, report: &report }, || {
                let mut s = format!("set {}\n", show_set(&graph, &x));
                for v in Variant::ALL {
                    s += &format!("{:<7}{}{}\n", v.as_str(), report.holds(v), show_pair(&graph, report.violation(v)));
                }
                s
            })?;
            Ok(0)
        }
        Command::Solve { graph } => {
            let Some(variant) = g.variant else { bail!("solve needs --variant") };
            let graph = load_graph(graph)?;
            match solve(&graph, variant, &opts) {
                Ok(r) => {
                    emit(g.json, &r, || render_result(&graph, &r))?;
                    Ok(0)
                }
                Err(SolveError::Incomplete(r)) => {
                    emit(g.json, &r, || format!("incomplete: {}", render_result(&graph, &r)))?;
                    Ok(EXIT_INCOMPLETE)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Oracle { spec } => {
            let variants = g.variant.map_or(Variant::ALL.to_vec(), |v| vec![v]);
            let mut rows = Vec::new();
            for v in variants {
                rows.push(OracleRow { variant: v, oracle: oracle(spec, v)? });
            }
            emit(g.json, &rows, || {
                rows.iter().map(|r| format!("{:<7}{}\n", r.variant.as_str(), show_oracle(&r.oracle))).collect()
            })?;
            Ok(0)
        }
        Command::Verify(args) => cmd_verify(cli, args, &opts),
        Command::Reduce { graph, t, out } => cmd_reduce(g, graph, *t, out.as_ref(), &opts),
        Command::Compare { graph } => {
            let graph = load_graph(graph)?;
            let c = comparison_table(&graph, &opts)?;
            emit(g.json, &c, || {
                format!(
                    "mutual {}  total {}  outer {}  dual {}\nordering holds: {}  mu/mu_o = {:.3}{}\n",
                    c.mutual.value,
                    c.total.value,
                    c.outer.value,
                    c.dual.value,
                    c.ordering_holds,
                    c.ratio,
                    if c.exceeds_twice_outer { "  (mu > 2 mu_o)" } else { "" }
                )
            })?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    set: &'a VertexSet,
    report: &'a VisibilityReport,
}

#[derive(Serialize)]
struct OracleRow {
    variant: Variant,
    oracle: OracleValue,
}

fn render_result(g: &Graph, r: &SolveResult) -> String {
    format!(
        "{} = {}\nwitness {}\n{} nodes, {} ms, {:?}\n",
        r.variant.as_str(),
        r.value,
        show_set(g, &r.witness),
        r.stats.nodes_explored,
        r.stats.elapsed_ms,
        r.method
    )
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs, opts: &SolveOptions) -> Result<u8> {
    for group in &args.only {
        if !GROUPS.contains(&group.as_str()) {
            bail!("unknown group {group:?}; expected one of {}", GROUPS.join(", "));
        }
    }
    let on = |name: &str| args.only.is_empty() || args.only.iter().any(|o| o == name);
    let scope = Scope {
        cycles: on("cycles"),
        trees: on("trees"),
        grids: on("grids"),
        tori: on("tori"),
        gadgets: on("gadgets"),
        reduction: on("reduction"),
        max_cycle: args.max_cycle,
        max_grid: args.max_grid,
        max_torus: args.max_torus,
        tree_count: args.trees,
        seed: cli.global.seed,
        variant: cli.global.variant,
    };
    let command: Vec<String> = std::env::args().collect();
    // Each instance is solved on one thread; parallelism goes to the pool.
    let single = SolveOptions { parallel: 1, ..opts.clone() };
    let report = verify::run(&scope, &single, cli.global.parallel, command.join(" "));
    emit(cli.global.json, &report, || render_report(&report))?;
    Ok(if report.summary.disagree > 0 {
        EXIT_DISAGREE
    } else if report.summary.incomplete > 0 {
        EXIT_INCOMPLETE
    } else {
        0
    })
}

fn render_report(report: &RunReport) -> String {
    let mut s = String::new();
    for r in &report.records {
        let tag = match r.status {
            Status::Agree => "ok",
            Status::Disagree => "DISAGREE",
            Status::Incomplete => "incomplete",
        };
        let solved = r.solved.map_or_else(|| "-".to_string(), |v| v.to_string());
        let oracle = r.oracle.as_ref().map_or_else(|| "no oracle".to_string(), show_oracle);
        s += &format!("{tag:<10} {:<22} {:<7} solved {solved:<4} oracle {oracle}", r.family, r.variant.as_str());
        if r.explicit_witness_valid == Some(false) {
            s += "  explicit witness invalid";
        }
        if let Some(note) = &r.note {
            s += &format!("  ({note})");
        }
        s.push('\n');
    }
    let m = &report.summary;
    s += &format!("{} instances: {} agree, {} disagree, {} incomplete\n", m.instances, m.agree, m.disagree, m.incomplete);
    s
}

#[derive(Serialize)]
struct ReduceOutput {
    base_vertices: usize,
    base_edges: usize,
    t: usize,
    vertices: usize,
    alpha: usize,
    independent_set: VertexSet,
    witness: VertexSet,
    witness_is_total: bool,
    oracle: OracleValue,
    solved_total: Option<usize>,
    status: Status,
}

fn cmd_reduce(g: &Global, graph: &str, t: usize, out: Option<&PathBuf>, opts: &SolveOptions) -> Result<u8> {
    let base = load_graph(graph)?;
    let r = reduction_gprime(&base, t)?;
    if let Some(path) = out {
        edgelist::write_file(&r.gprime, path)?;
        eprintln!("wrote {} ({} vertices)", path.display(), r.gprime.n());
    }
    let alpha = match solve_independence(&base, opts) {
        Ok(a) => a,
        Err(SolveError::IncompleteIndependence(partial)) => {
            eprintln!("independence number not certified; best lower bound {}", partial.value);
            return Ok(EXIT_INCOMPLETE);
        }
        Err(e) => return Err(e.into()),
    };
    let s = reduction_witness(&r, &alpha.witness.to_vec())?;
    let witness_is_total = classify_set(&r.gprime, &s).is_total;
    let oracle = reduction_oracle(r.base_edges.len(), t, alpha.value);
    let seeded = SolveOptions { seed_witness: Some(s.clone()), ..opts.clone() };
    let solved = match solve(&r.gprime, Variant::Total, &seeded) {
        Ok(res) => Some(res.value),
        Err(SolveError::Incomplete(_)) | Err(SolveError::TooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let status = match solved {
        _ if !witness_is_total => Status::Disagree,
        Some(v) if oracle.value == Some(v) => Status::Agree,
        Some(_) => Status::Disagree,
        None => Status::Incomplete,
    };
    let output = ReduceOutput {
        base_vertices: base.n(),
        base_edges: r.base_edges.len(),
        t,
        vertices: r.gprime.n(),
        alpha: alpha.value,
        independent_set: alpha.witness,
        witness: s,
        witness_is_total,
        oracle,
        solved_total: solved,
        status,
    };
    emit(g.json, &output, || {
        format!(
            "G' has {} vertices; alpha(base) = {}; (m+1)t + alpha = {}\nS has {} vertices, total: {}\nsolved total = {}\n",
            output.vertices,
            output.alpha,
            output.oracle.value.unwrap_or_default(),
            output.witness.len(),
            output.witness_is_total,
            solved.map_or_else(|| "not certified within budget".to_string(), |v| v.to_string()),
        )
    })?;
    Ok(match status {
        Status::Agree => 0,
        Status::Disagree => EXIT_DISAGREE,
        Status::Incomplete => EXIT_INCOMPLETE,
    })
}
