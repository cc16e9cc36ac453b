//! `tspanner`: inspect temporal graphs and compute temporal spanners.
//!
//! Exit status 0 on success, 1 when the input violates a method's
//! precondition or fails validation, 2 on unreadable or malformed input.

mod report;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use temporal_spanner::bipartite::full_biclique_spanner;
use temporal_spanner::dismount::{algorithm1_spanner, recursively_dismount};
use temporal_spanner::graph::{
    is_clique, is_temporally_connected, parse_graph, write_edge_list, GraphError,
};
use temporal_spanner::oracle::{
    fixture, gen_full_range_clique, gen_layered_clique, gen_random_clique, min_spanner_bruteforce,
    minimal_spanner_greedy, oracle_dismountable_nodes, oracle_pivot_edges, OracleError,
    SearchBudget,
};
use temporal_spanner::pivot::{compress, find_pivot, pivot_spanner};
use temporal_spanner::structure::reduce_to_biclique;
use temporal_spanner::{EdgeSubset, Phase, SpannerResult, TemporalGraph};

use report::{analyze, triples, SpannerStats};

#[derive(Parser)]
#[command(name = "tspanner", version, about = "Temporal clique spanners")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an edge list.
    Validate { input: String },
    /// Print an analysis report as JSON.
    Analyze {
        input: String,
        /// Extra hop bound to test besides 1, 2, 3 and n-2.
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Compute a spanner.
    Spanner {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Hop bound for dismount steps.
        #[arg(long, default_value_t = 2)]
        kmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the edge list here and the stats to standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the certificate trail as JSON.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Seconds allowed for `oracle-min`.
        #[arg(long, default_value_t = 60)]
        time_limit: u64,
    },
    /// Relabel with the smallest labels preserving adjacent order.
    Compress {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Node count (for `layered`, twice the part size).
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random label swaps applied to a layered clique.
        #[arg(long, default_value_t = 0)]
        swaps: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive checks: minimum spanner, dismountable nodes, pivot edges.
    Oracle {
        input: String,
        /// Hop bound for the dismountability scan; defaults to n-2.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = 60)]
        time_limit: u64,
    },
    /// Run methods on random cliques and print CSV.
    Bench {
        /// Inclusive node-count range such as `4..9`.
        #[arg(long, default_value = "4..9")]
        n_range: String,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        /// Comma-separated method names.
        #[arg(long, default_value = "auto")]
        methods: String,
        #[arg(long, default_value_t = 2)]
        kmax: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Dismount,
    Bipartite,
    Pivot,
    OracleMin,
    Greedy,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Dismount => "dismount",
            Method::Bipartite => "bipartite",
            Method::Pivot => "pivot",
            Method::OracleMin => "oracle-min",
            Method::Greedy => "greedy",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Clique,
    FullRange,
    Layered,
}

#[derive(Debug)]
enum CliError {
    /// Precondition or validation failure.
    Domain(String),
    /// Unreadable or malformed input.
    Input(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Input(m) => m,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn domain(e: impl ToString) -> CliError {
    CliError::Domain(e.to_string())
}

fn graph_error(source: &str, e: GraphError) -> CliError {
    let msg = format!("{source}: {e}");
    match e {
        GraphError::Syntax { .. } => CliError::Input(msg),
        _ => CliError::Domain(msg),
    }
}

/// Reads a file, `-` for standard input, or `fixture:NAME`.
fn load(input: &str) -> CliResult<TemporalGraph> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return fixture(name).map_err(|e| CliError::Input(e.to_string()));
    }
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::Input(format!("cannot read {input}: {e}")))?
    };
    parse_graph(&text).map_err(|e| graph_error(input, e))
}

fn write_out(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn require_clique(g: &TemporalGraph, method: Method) -> CliResult<()> {
    if is_clique(g) {
        Ok(())
    } else {
        Err(domain(format!(
            "method {} needs a temporal clique",
            method.name()
        )))
    }
}

fn run_method(
    g: &TemporalGraph,
    method: Method,
    kmax: usize,
    seed: u64,
    time_limit: Duration,
) -> CliResult<SpannerResult> {
    if !is_temporally_connected(g) {
        return Err(domain("graph is not temporally connected"));
    }
    let tagged = |edges: EdgeSubset, phase: Phase| SpannerResult {
        edges,
        steps: Vec::new(),
        phases: vec![phase],
    };
    match method {
        Method::Auto => {
            require_clique(g, method)?;
            algorithm1_spanner(g, kmax).map_err(domain)
        }
        Method::Dismount => {
            require_clique(g, method)?;
            recursively_dismount(g, kmax).ok_or_else(|| {
                domain(format!(
                    "recursion stuck: some scope has no node dismountable within {kmax} hops"
                ))
            })
        }
        Method::Bipartite => {
            require_clique(g, method)?;
            let red = reduce_to_biclique(g).map_err(domain)?;
            full_biclique_spanner(g, &red).map_err(domain)
        }
        Method::Pivot => {
            let cert = find_pivot(g)
                .map_err(domain)?
                .ok_or_else(|| domain("no pivot edge"))?;
            pivot_spanner(g, &cert).map_err(domain)
        }
        Method::OracleMin => {
            let m = min_spanner_bruteforce(g, SearchBudget::with_time_limit(time_limit))
                .map_err(domain)?
                .ok_or_else(|| domain("search found no spanner"))?;
            Ok(tagged(m.edges, Phase::Exhaustive { optimal: m.optimal }))
        }
        Method::Greedy => {
            let s = minimal_spanner_greedy(g, seed).map_err(domain)?;
            Ok(tagged(s, Phase::Greedy { seed }))
        }
    }
}

/// Edge list of the spanner and whether that text, parsed back, is a
/// temporally connected subgraph of `g` on all its nodes.
fn render_and_check(g: &TemporalGraph, s: &EdgeSubset) -> (String, bool) {
    let text = write_edge_list(&g.with_edges(s).0);
    let valid = match parse_graph(&text) {
        Ok(back) => {
            back.node_count() == g.node_count()
                && back.contacts().iter().all(|c| {
                    g.edge_named(back.name(c.u), back.name(c.v))
                        .is_ok_and(|e| g.label(e) == c.label)
                })
                && is_temporally_connected(&back)
        }
        Err(_) => false,
    };
    (text, valid)
}

fn cmd_validate(input: &str) -> CliResult<()> {
    let g = load(input)?;
    eprintln!(
        "{input}: {} nodes, {} contacts, labels {}..{}",
        g.node_count(),
        g.edge_count(),
        g.min_label().unwrap_or(0),
        g.max_label().unwrap_or(0)
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_spanner(
    input: &str,
    method: Method,
    kmax: usize,
    seed: u64,
    output: Option<&PathBuf>,
    certificate: Option<&PathBuf>,
    time_limit: u64,
) -> CliResult<()> {
    let g = load(input)?;
    let r = run_method(&g, method, kmax, seed, Duration::from_secs(time_limit))?;
    let (text, valid) = render_and_check(&g, &r.edges);
    let stats = SpannerStats {
        method: method.name().to_string(),
        n: g.node_count(),
        size: r.size(),
        valid: valid && r.verify(&g),
    };
    let stats_line = serde_json::to_string(&stats).expect("serializable");
    if let Some(path) = certificate {
        write_out(Some(path), &json(&r.certificate(&g)))?;
    }
    match output {
        Some(path) => {
            write_out(Some(path), &text)?;
            println!("{stats_line}");
        }
        None => {
            print!("{text}");
            eprintln!("{stats_line}");
        }
    }
    if stats.valid {
        Ok(())
    } else {
        Err(domain("computed edge set failed verification"))
    }
}

#[derive(Serialize)]
struct NodeCost {
    node: String,
    cost: usize,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum MinDoc {
    Found {
        size: usize,
        optimal: bool,
        edges: Vec<temporal_spanner::certificate::TripleDoc>,
    },
    Exhausted {
        size: usize,
        elapsed_ms: u128,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Serialize)]
struct OracleDoc {
    min_spanner: MinDoc,
    kmax: Option<usize>,
    dismountable: Option<Vec<NodeCost>>,
    pivot_edges: Option<Vec<temporal_spanner::certificate::TripleDoc>>,
}

fn cmd_oracle(input: &str, kmax: Option<usize>, time_limit: u64) -> CliResult<()> {
    let g = load(input)?;
    let tc = is_temporally_connected(&g);
    let min_spanner = match min_spanner_bruteforce(
        &g,
        SearchBudget::with_time_limit(Duration::from_secs(time_limit)),
    ) {
        Ok(Some(m)) => MinDoc::Found {
            size: m.size,
            optimal: m.optimal,
            edges: triples(&g, &m.edges.iter().collect::<Vec<_>>()),
        },
        Ok(None) => MinDoc::Skipped {
            reason: "no spanner found".into(),
        },
        Err(OracleError::BudgetExhausted { size, elapsed_ms }) => {
            MinDoc::Exhausted { size, elapsed_ms }
        }
        Err(e) => MinDoc::Skipped {
            reason: e.to_string(),
        },
    };
    let clique = is_clique(&g);
    let k = clique.then(|| kmax.unwrap_or(g.node_count().saturating_sub(2)).max(1));
    let dismountable = k.map(|k| {
        oracle_dismountable_nodes(&g, k)
            .into_iter()
            .map(|(v, cost)| NodeCost {
                node: g.name(v).to_string(),
                cost,
            })
            .collect()
    });
    let pivot_edges =
        tc.then(|| triples(&g, &oracle_pivot_edges(&g).into_iter().collect::<Vec<_>>()));
    print!(
        "{}",
        json(&OracleDoc {
            min_spanner,
            kmax: k,
            dismountable,
            pivot_edges,
        })
    );
    Ok(())
}

fn parse_range(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Input(format!("bad range `{s}`, expected `a..b`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn cmd_bench(n_range: &str, trials: u64, methods: &str, kmax: usize) -> CliResult<()> {
    let (lo, hi) = parse_range(n_range)?;
    if lo < 2 {
        return Err(domain("cliques need at least 2 nodes"));
    }
    let methods: Vec<Method> = methods
        .split(',')
        .map(|m| {
            Method::from_str(m.trim(), false)
                .map_err(|_| CliError::Input(format!("unknown method `{m}`")))
        })
        .collect::<CliResult<_>>()?;
    let mut rows = Vec::new();
    for n in lo..=hi {
        for seed in 0..trials {
            let g = gen_random_clique(n, seed).map_err(domain)?;
            for &m in &methods {
                let t = Instant::now();
                let r = run_method(&g, m, kmax, seed, Duration::from_secs(60));
                let millis = t.elapsed().as_millis();
                let (size, valid) = match r {
                    Ok(r) => (r.size().to_string(), (r.verify(&g)).to_string()),
                    Err(_) => ("-".to_string(), "na".to_string()),
                };
                rows.push((n, seed, m.name(), size, valid, millis));
            }
        }
    }
    rows.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    let mut out = String::from("n,seed,method,size,valid,millis\n");
    for (n, seed, m, size, valid, ms) in rows {
        writeln!(out, "{n},{seed},{m},{size},{valid},{ms}").expect("string write");
    }
    print!("{out}");
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Validate { input } => cmd_validate(&input),
        Command::Analyze { input, kmax } => {
            let g = load(&input)?;
            print!("{}", json(&analyze(&g, kmax)));
            Ok(())
        }
        Command::Spanner {
            input,
            method,
            kmax,
            seed,
            output,
            certificate,
            time_limit,
        } => cmd_spanner(
            &input,
            method,
            kmax,
            seed,
            output.as_ref(),
            certificate.as_ref(),
            time_limit,
        ),
        Command::Compress { input, output } => {
            let g = load(&input)?;
            write_out(output.as_ref(), &write_edge_list(&compress(&g).graph))
        }
        Command::Gen {
            kind,
            n,
            seed,
            swaps,
            output,
        } => {
            let g = match kind {
                GenKind::Clique => gen_random_clique(n, seed),
                GenKind::FullRange => gen_full_range_clique(n, seed),
                GenKind::Layered => {
                    if n % 2 != 0 {
                        return Err(domain(format!(
                            "layered cliques have an even node count, got {n}"
                        )));
                    }
                    gen_layered_clique(n / 2, swaps, seed)
                }
            }
            .map_err(domain)?;
            write_out(output.as_ref(), &write_edge_list(&g))
        }
        Command::Oracle {
            input,
            kmax,
            time_limit,
        } => cmd_oracle(&input, kmax, time_limit),
        Command::Bench {
            n_range,
            trials,
            methods,
            kmax,
        } => cmd_bench(&n_range, trials, &methods, kmax),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
