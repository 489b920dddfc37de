//! Command-line front end for the search-order solvers.
//!
//! Exit codes: 0 found or pass, 1 infeasible or fail, 2 input or usage error.

pub mod format;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use search_order::chordal_bipartite::{solve_psop_lbfs_cb_rooted_assumed, validate_chordal_bipartite};
use search_order::generic::{solve_psop_gs_rooted, solve_psop_unrooted, solve_rooted_via};
use search_order::graph::{find_split_partition, DEFAULT_CB_CAP};
use search_order::oracle::{brute_force_psop_capped, DEFAULT_PSOP_CAP};
use search_order::reductions::{
    end_vertex_order, extract_f_tree, extract_l_tree, f_tree_to_psop, l_tree_to_psop_bipartite,
};
use search_order::search::{check_lbfs_4point, is_search_ordering};
use search_order::split::{solve_psop_lbfs_split, solve_psop_mcs_split};
use search_order::{generate, Graph, Ordering, PartialOrder, Search, Solution, Vertex};

use format::{
    parse_graph, parse_names, parse_order, parse_ordering, parse_tree, print_graph, print_order, print_ordering,
};

/// Overrides both the exhaustive-search cap and the chordal bipartite recognition cap.
pub const SIZE_CAP_VAR: &str = "SEARCH_ORDER_SIZE_CAP";

pub const AVAILABILITY: &str = "\
available solvers (search x class):
  gs    general, cb, split
  lbfs  cb, split
  mcs   split
  bfs, mns and any other combination need --oracle";

#[derive(Debug, Parser)]
#[command(
    name = "search-order",
    version,
    about = "Graph search orderings extending a partial order"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a search ordering that extends a partial order.
    Solve(SolveArgs),
    /// Check that an ordering is a search ordering extending a partial order.
    Verify(VerifyArgs),
    /// Write a random instance to stdout.
    Generate(GenerateArgs),
    /// Find a search ordering ending at a given vertex.
    Endvertex(EndvertexArgs),
    /// Find a search ordering whose first-neighbor tree is the given tree.
    Ftree(TreeArgs),
    /// Find a search ordering whose last-neighbor tree is the given tree.
    Ltree(TreeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphClass {
    General,
    #[value(alias = "chordal-bipartite")]
    Cb,
    Split,
}

#[derive(Debug, Args)]
pub struct SolverOpts {
    #[arg(long, value_parser = parse_search)]
    pub search: Search,
    #[arg(long, value_enum, default_value = "general")]
    pub class: GraphClass,
    /// Use the exhaustive search instead of a dedicated solver.
    #[arg(long, conflicts_with = "cross_check")]
    pub oracle: bool,
    /// Run the dedicated solver and the exhaustive search and compare them.
    #[arg(long)]
    pub cross_check: bool,
    /// Trust that the graph is in `--class` without the exhaustive recognition.
    #[arg(long)]
    pub assume_class: bool,
    /// Print a JSON envelope instead of plain text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Partial order file; empty order if omitted.
    #[arg(long)]
    pub order: Option<PathBuf>,
    /// Vertex the ordering must start with.
    #[arg(long)]
    pub root: Option<String>,
    #[command(flatten)]
    pub solver: SolverOpts,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub order: Option<PathBuf>,
    #[arg(long)]
    pub ordering: PathBuf,
    #[arg(long, value_parser = parse_search)]
    pub search: Search,
    #[arg(long)]
    pub root: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EndvertexArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Vertex the ordering must end with.
    #[arg(long)]
    pub vertex: String,
    #[command(flatten)]
    pub solver: SolverOpts,
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub tree: PathBuf,
    #[command(flatten)]
    pub solver: SolverOpts,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub kind: GenerateKind,
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    /// Connected split graph.
    Split(SizeArgs),
    /// Connected chordal bipartite graph.
    Cb(SizeArgs),
    /// Connected graph: a random tree plus each other edge with probability `--p`.
    Graph(GraphGenArgs),
    /// Partial order.
    Order(OrderGenArgs),
}

#[derive(Debug, Args)]
pub struct SizeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GraphGenArgs {
    #[command(flatten)]
    pub size: SizeArgs,
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("universe").required(true).args(["n", "graph", "from_ordering"]))]
pub struct OrderGenArgs {
    /// Order on vertices named `0..n`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Order on the vertices of this graph.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Order extended by the ordering in this file.
    #[arg(long, conflicts_with_all = ["search", "graph", "n"])]
    pub from_ordering: Option<PathBuf>,
    /// Sample pairs from a real search ordering of `--graph`.
    #[arg(long, value_parser = parse_search, requires = "graph")]
    pub search: Option<Search>,
    /// Number of random pairs before closing.
    #[arg(long, default_value_t = 3)]
    pub pairs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_search(s: &str) -> Result<Search, String> {
    s.parse()
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Positive,
    Negative,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Self::Positive => 0,
            Self::Negative => 1,
        }
    }
}

#[derive(Debug, Serialize)]
struct Envelope {
    status: &'static str,
    ordering: Option<Vec<String>>,
    witness: Option<String>,
    stats: serde_json::Value,
}

/// Runs `cli`, writing results to `out` and diagnostics to `err`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let json = match &cli.command {
        Command::Solve(a) => a.solver.json,
        Command::Endvertex(a) => a.solver.json,
        Command::Ftree(a) | Command::Ltree(a) => a.solver.json,
        Command::Verify(a) => a.json,
        Command::Generate(_) => false,
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Endvertex(a) => cmd_endvertex(&a, out, err),
        Command::Ftree(a) => cmd_tree(&a, TreeKind::First, out, err),
        Command::Ltree(a) => cmd_tree(&a, TreeKind::Last, out, err),
    };
    match result {
        Ok(v) => v.exit_code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if json {
                let env = Envelope {
                    status: "error",
                    ordering: None,
                    witness: Some(format!("{e:#}")),
                    stats: serde_json::json!({}),
                };
                let _ = writeln!(out, "{}", serde_json::to_string(&env).unwrap());
            }
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).with_context(|| format!("in graph file {}", path.display()))
}

fn load_order(path: Option<&Path>, g: &Graph) -> Result<PartialOrder> {
    match path {
        Some(p) => parse_order(&read(p)?, g).with_context(|| format!("in order file {}", p.display())),
        None => Ok(PartialOrder::empty(g.vertex_count())),
    }
}

fn vertex(g: &Graph, name: &str) -> Result<Vertex> {
    g.vertex(name).ok_or_else(|| anyhow!("unknown vertex `{name}`"))
}

/// The size cap from the environment, or `default`.
pub fn size_cap(default: usize) -> Result<usize> {
    match std::env::var(SIZE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{SIZE_CAP_VAR}={v} is not a number")),
        Err(_) => Ok(default),
    }
}

/// Name of the dedicated solver for a combination, if any.
pub fn dedicated_solver(search: Search, class: GraphClass) -> Option<&'static str> {
    match (search, class) {
        (Search::Gs, _) => Some("gs"),
        (Search::Lbfs, GraphClass::Cb) => Some("lbfs-cb"),
        (Search::Lbfs, GraphClass::Split) => Some("lbfs-split"),
        (Search::Mcs, GraphClass::Split) => Some("mcs-split"),
        _ => None,
    }
}

fn check_class(g: &Graph, opts: &SolverOpts) -> Result<()> {
    match opts.class {
        GraphClass::General => {}
        GraphClass::Split => {
            find_split_partition(g)?;
        }
        GraphClass::Cb if opts.assume_class => {
            if !g.is_bipartite() {
                bail!("graph is not bipartite");
            }
        }
        GraphClass::Cb => validate_chordal_bipartite(g, size_cap(DEFAULT_CB_CAP)?)
            .context("use --assume-class to skip the exhaustive recognition")?,
    }
    Ok(())
}

fn run_dedicated(
    g: &Graph,
    pi: &PartialOrder,
    root: Option<Vertex>,
    search: Search,
    class: GraphClass,
) -> Result<Solution> {
    let s = match (search, class, root) {
        (Search::Gs, _, Some(r)) => solve_psop_gs_rooted(g, r, pi),
        (Search::Gs, _, None) => solve_psop_unrooted(g, pi, solve_psop_gs_rooted),
        (Search::Lbfs, GraphClass::Cb, Some(r)) => solve_psop_lbfs_cb_rooted_assumed(g, r, pi),
        (Search::Lbfs, GraphClass::Cb, None) => solve_psop_unrooted(g, pi, solve_psop_lbfs_cb_rooted_assumed),
        (Search::Lbfs, GraphClass::Split, Some(r)) => solve_rooted_via(g, r, pi, solve_psop_lbfs_split),
        (Search::Lbfs, GraphClass::Split, None) => solve_psop_lbfs_split(g, pi),
        (Search::Mcs, GraphClass::Split, Some(r)) => solve_rooted_via(g, r, pi, solve_psop_mcs_split),
        (Search::Mcs, GraphClass::Split, None) => solve_psop_mcs_split(g, pi),
        _ => bail!("no dedicated solver for {search} on class {class:?}\n{AVAILABILITY}"),
    };
    Ok(s?)
}

fn run_oracle(g: &Graph, pi: &PartialOrder, root: Option<Vertex>, search: Search) -> Result<Solution> {
    Ok(brute_force_psop_capped(
        g,
        search,
        pi,
        root,
        size_cap(DEFAULT_PSOP_CAP)?,
    )?)
}

/// A solved instance together with what the output should report.
struct Solved {
    solution: Solution,
    solver: &'static str,
    micros: u128,
}

fn solve_instance(g: &Graph, pi: &PartialOrder, root: Option<Vertex>, opts: &SolverOpts) -> Result<Solved> {
    g.require_connected()?;
    let dedicated = dedicated_solver(opts.search, opts.class);
    if dedicated.is_none() && !opts.oracle {
        bail!(
            "{} is not supported on class {:?} without --oracle\n{AVAILABILITY}",
            opts.search,
            opts.class
        );
    }
    check_class(g, opts)?;
    let start = Instant::now();
    let (solution, solver) = match dedicated {
        Some(name) if !opts.oracle => (run_dedicated(g, pi, root, opts.search, opts.class)?, name),
        _ => (run_oracle(g, pi, root, opts.search)?, "oracle"),
    };
    let micros = start.elapsed().as_micros();
    if let Some(sigma) = solution.ordering() {
        let ok = is_search_ordering(g, opts.search, sigma)? && pi.is_linear_extension(sigma)?;
        if !ok || root.is_some_and(|r| sigma.first() != Some(r)) {
            bail!(
                "internal error: {solver} returned an invalid ordering {}",
                sigma.display_names(g)
            );
        }
    }
    if opts.cross_check {
        let other = run_oracle(g, pi, root, opts.search)?;
        if other.is_found() != solution.is_found() {
            bail!(
                "cross-check mismatch: {solver} says {}, oracle says {}",
                if solution.is_found() { "found" } else { "infeasible" },
                if other.is_found() { "found" } else { "infeasible" }
            );
        }
    }
    Ok(Solved {
        solution,
        solver,
        micros,
    })
}

fn report(
    g: &Graph,
    pi: &PartialOrder,
    solved: &Solved,
    opts: &SolverOpts,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Verdict> {
    let witness = match &solved.solution {
        Solution::Found(_) => None,
        Solution::Infeasible(why) => Some(why.describe(g)),
    };
    if opts.json {
        let env = Envelope {
            status: if solved.solution.is_found() {
                "found"
            } else {
                "infeasible"
            },
            ordering: solved
                .solution
                .ordering()
                .map(|o| o.iter().map(|v| g.name(v).to_string()).collect()),
            witness,
            stats: serde_json::json!({
                "solver": solved.solver,
                "search": opts.search.name(),
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "order_pairs": pi.generator_count(),
                "cross_checked": opts.cross_check,
                "elapsed_us": solved.micros,
            }),
        };
        writeln!(out, "{}", serde_json::to_string(&env)?)?;
    } else {
        match &solved.solution {
            Solution::Found(sigma) => write!(out, "{}", print_ordering(sigma, g))?,
            Solution::Infeasible(_) => {
                writeln!(out, "INFEASIBLE")?;
                writeln!(err, "{}", witness.unwrap_or_default())?;
            }
        }
    }
    Ok(if solved.solution.is_found() {
        Verdict::Positive
    } else {
        Verdict::Negative
    })
}

pub fn cmd_solve(a: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict> {
    let g = load_graph(&a.graph)?;
    let pi = load_order(a.order.as_deref(), &g)?;
    let root = a.root.as_deref().map(|r| vertex(&g, r)).transpose()?;
    let solved = solve_instance(&g, &pi, root, &a.solver)?;
    report(&g, &pi, &solved, &a.solver, out, err)
}

pub fn cmd_endvertex(a: &EndvertexArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict> {
    let g = load_graph(&a.graph)?;
    let t = vertex(&g, &a.vertex)?;
    let pi = end_vertex_order(&g, t)?;
    let solved = solve_instance(&g, &pi, None, &a.solver)?;
    report(&g, &pi, &solved, &a.solver, out, err)
}

#[derive(Debug, Clone, Copy)]
enum TreeKind {
    First,
    Last,
}

fn cmd_tree(a: &TreeArgs, kind: TreeKind, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict> {
    let g = load_graph(&a.graph)?;
    let tree = parse_tree(&read(&a.tree)?, &g).with_context(|| format!("in tree file {}", a.tree.display()))?;
    let encoded = match kind {
        TreeKind::First => f_tree_to_psop(&g, &tree),
        TreeKind::Last => l_tree_to_psop_bipartite(&g, &tree),
    };
    let pi = match encoded {
        Ok(pi) => pi,
        Err(search_order::Error::Cycle(_)) => {
            let solved = Solved {
                solution: Solution::Infeasible(search_order::Infeasible::Exhausted),
                solver: "encoding",
                micros: 0,
            };
            writeln!(err, "the tree constraints are cyclic")?;
            return report(&g, &PartialOrder::empty(g.vertex_count()), &solved, &a.solver, out, err);
        }
        Err(e) => return Err(e.into()),
    };
    let solved = solve_instance(&g, &pi, Some(tree.root), &a.solver)?;
    if let Some(sigma) = solved.solution.ordering() {
        let got = match kind {
            TreeKind::First => extract_f_tree(&g, sigma)?,
            TreeKind::Last => extract_l_tree(&g, sigma)?,
        };
        if got != tree {
            bail!(
                "internal error: the ordering {} does not induce the tree",
                sigma.display_names(&g)
            );
        }
    }
    report(&g, &pi, &solved, &a.solver, out, err)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict> {
    let g = load_graph(&a.graph)?;
    let pi = load_order(a.order.as_deref(), &g)?;
    let sigma = parse_ordering(&read(&a.ordering)?, &g)
        .with_context(|| format!("in ordering file {}", a.ordering.display()))?;
    let root = a.root.as_deref().map(|r| vertex(&g, r)).transpose()?;
    let failures = verify_failures(&g, &pi, &sigma, a.search, root)?;
    let verdict = if failures.is_empty() {
        Verdict::Positive
    } else {
        Verdict::Negative
    };
    if a.json {
        let env = Envelope {
            status: if failures.is_empty() { "pass" } else { "fail" },
            ordering: Some(sigma.iter().map(|v| g.name(v).to_string()).collect()),
            witness: (!failures.is_empty()).then(|| failures.join("; ")),
            stats: serde_json::json!({ "search": a.search.name(), "vertices": g.vertex_count() }),
        };
        writeln!(out, "{}", serde_json::to_string(&env)?)?;
    } else if failures.is_empty() {
        writeln!(out, "PASS")?;
    } else {
        writeln!(out, "FAIL")?;
        for f in &failures {
            writeln!(err, "{f}")?;
        }
    }
    Ok(verdict)
}

fn verify_failures(
    g: &Graph,
    pi: &PartialOrder,
    sigma: &Ordering,
    search: Search,
    root: Option<Vertex>,
) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let is_search = is_search_ordering(g, search, sigma)?;
    if search == Search::Lbfs && check_lbfs_4point(g, sigma)? != is_search {
        bail!("internal error: the four-point check disagrees with the simulation");
    }
    if !is_search {
        failures.push(format!("not a {search} ordering"));
    }
    if let Some((x, y)) = pi.generators().find(|&(x, y)| !sigma.before(x, y)) {
        failures.push(format!("{} must precede {}", g.name(x), g.name(y)));
    }
    if let Some(r) = root {
        if sigma.first() != Some(r) {
            failures.push(format!("does not start at {}", g.name(r)));
        }
    }
    Ok(failures)
}

pub fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<Verdict> {
    let text = match &a.kind {
        GenerateKind::Split(s) => {
            check_size(s.n)?;
            print_graph(&generate::random_split_graph(
                &mut ChaCha8Rng::seed_from_u64(s.seed),
                s.n,
            ))
        }
        GenerateKind::Cb(s) => {
            check_size(s.n)?;
            let cap = size_cap(DEFAULT_CB_CAP)?;
            if s.n > cap {
                bail!(
                    "chordal bipartite generation is exhaustive; {} vertices exceed the cap of {cap} ({SIZE_CAP_VAR})",
                    s.n
                );
            }
            print_graph(&generate::random_chordal_bipartite_graph(
                &mut ChaCha8Rng::seed_from_u64(s.seed),
                s.n,
            ))
        }
        GenerateKind::Graph(gg) => {
            check_size(gg.size.n)?;
            if !(0.0..=1.0).contains(&gg.p) {
                bail!("--p must lie in [0, 1]");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(gg.size.seed);
            print_graph(&generate::random_connected_graph(&mut rng, gg.size.n, gg.p))
        }
        GenerateKind::Order(o) => generate_order(o)?,
    };
    write!(out, "{text}")?;
    Ok(Verdict::Positive)
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    Ok(())
}

fn generate_order(o: &OrderGenArgs) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    if let Some(path) = &o.from_ordering {
        let names = parse_names(&read(path)?);
        let mut text = String::new();
        for name in &names {
            writeln!(text, "{name}").unwrap();
        }
        let g = parse_graph(&text).context("ordering names must be distinct")?;
        if g.vertex_count() != names.len() {
            bail!("ordering in {} repeats a vertex", path.display());
        }
        let sigma = Ordering::identity(names.len());
        let pi = generate::order_from_ordering(&mut rng, &sigma, o.pairs);
        return Ok(print_order(&pi, &g));
    }
    if let Some(path) = &o.graph {
        let g = load_graph(path)?;
        let pi = match o.search {
            Some(search) => {
                g.require_connected()?;
                generate::forced_order(&mut rng, &g, search, o.pairs).0
            }
            None => generate::random_order(&mut rng, g.vertex_count(), o.pairs),
        };
        return Ok(print_order(&pi, &g));
    }
    let n = o.n.expect("clap requires one universe flag");
    check_size(n)?;
    let g = Graph::from_edges(n, &[])?;
    Ok(print_order(&generate::random_order(&mut rng, n, o.pairs), &g))
}
