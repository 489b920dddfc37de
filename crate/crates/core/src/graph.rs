//! Undirected simple graphs over dense vertex ids, plus the structural
//! queries the solvers need: BFS layers, split partitions and a desk-scale
//! chordal bipartite test.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Default vertex cap for the exhaustive chordal bipartite check.
pub const DEFAULT_CB_CAP: usize = 16;

/// An undirected simple graph.
///
/// Self-loops and repeated edges handed to the constructors are dropped from
/// the adjacency but remembered, so that [`validate_graph`] can report them.
#[derive(Clone)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<Vec<Vertex>>,
    adj_bits: OnceLock<Vec<FixedBitSet>>,
    edge_count: usize,
    loops: Vec<Vertex>,
    duplicate_edges: usize,
}

impl Graph {
    /// Builds a graph on `0..n` with names `"0"`, `"1"`, ...
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let names = (0..n).map(|v| v.to_string()).collect();
        Self::with_names(names, edges)
    }

    /// Builds a graph from named edges; vertex ids follow first appearance.
    pub fn from_named_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Self {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, Vertex> = HashMap::new();
        let mut id_of = |name: &str, names: &mut Vec<String>| -> Vertex {
            if let Some(&v) = index.get(name) {
                return v;
            }
            let v = names.len();
            names.push(name.to_string());
            index.insert(name.to_string(), v);
            v
        };
        let mut ids = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let u = id_of(u.as_ref(), &mut names);
            let v = id_of(v.as_ref(), &mut names);
            ids.push((u, v));
        }
        Self::with_names(names, &ids).expect("ids are in range by construction")
    }

    /// Builds a graph with explicit names (which may include isolated vertices).
    pub fn with_names(names: Vec<String>, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let n = names.len();
        let mut adj = vec![Vec::new(); n];
        let mut loops = Vec::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                loops.push(u);
            } else {
                pairs.push((u.min(v), u.max(v)));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let duplicate_edges = edges.len() - loops.len() - pairs.len();
        let edge_count = pairs.len();
        for (u, v) in pairs {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let index = names.iter().enumerate().map(|(v, s)| (s.clone(), v)).collect();
        Ok(Self {
            names,
            index,
            adj,
            adj_bits: OnceLock::new(),
            edge_count,
            loops,
            duplicate_edges,
        })
    }

    fn bits(&self) -> &[FixedBitSet] {
        self.adj_bits.get_or_init(|| {
            let n = self.adj.len();
            self.adj
                .iter()
                .map(|list| {
                    let mut row = FixedBitSet::with_capacity(n);
                    row.extend(list.iter().copied());
                    row
                })
                .collect()
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Neighbors of `v`, sorted by id.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.bits()[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    /// Union of the neighborhoods of `set`.
    pub fn neighborhood_of(&self, set: &[Vertex]) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.vertex_count());
        for &v in set {
            out.union_with(&self.bits()[v]);
        }
        out
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Returns the first vertex not reachable from vertex 0, if any.
    pub fn first_unreachable(&self) -> Option<Vertex> {
        if self.vertex_count() == 0 {
            return None;
        }
        let mut seen = FixedBitSet::with_capacity(self.vertex_count());
        let mut queue = VecDeque::from([0]);
        seen.insert(0);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen.put(w) {
                    queue.push_back(w);
                }
            }
        }
        self.vertices().find(|&v| !seen.contains(v))
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    pub fn require_connected(&self) -> Result<()> {
        match self.first_unreachable() {
            None => Ok(()),
            Some(unreached) => Err(Error::Disconnected { unreached }),
        }
    }

    /// A proper 2-coloring, or `None` when the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.name(u), self.name(v)))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &edges)
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.adj == other.adj
    }
}

impl Eq for Graph {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub loop_free: bool,
    pub simple: bool,
    pub connected: bool,
    pub issues: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.loop_free && self.simple && self.connected
    }
}

/// Reports whether `g` was built without self-loops or repeated edges, and
/// whether it is connected.
pub fn validate_graph(g: &Graph) -> ValidationReport {
    let mut issues = Vec::new();
    for &v in &g.loops {
        issues.push(format!("self-loop at {}", g.name(v)));
    }
    if g.duplicate_edges > 0 {
        issues.push(format!("{} repeated edge(s)", g.duplicate_edges));
    }
    let unreachable = g.first_unreachable();
    if let Some(v) = unreachable {
        issues.push(format!("vertex {} is not reachable from {}", g.name(v), g.name(0)));
    }
    ValidationReport {
        loop_free: g.loops.is_empty(),
        simple: g.loops.is_empty() && g.duplicate_edges == 0,
        connected: unreachable.is_none(),
        issues,
    }
}

/// Distance layers `N^0(r), N^1(r), ...` of a BFS from `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayering {
    pub root: Vertex,
    pub layer_of: Vec<usize>,
    pub layers: Vec<Vec<Vertex>>,
}

impl BfsLayering {
    /// Largest distance from the root.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, i: usize) -> &[Vertex] {
        &self.layers[i]
    }
}

pub fn bfs_layering(g: &Graph, root: Vertex) -> Result<BfsLayering> {
    g.check_vertex(root)?;
    let n = g.vertex_count();
    let mut layer_of = vec![usize::MAX; n];
    layer_of[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if layer_of[w] == usize::MAX {
                layer_of[w] = layer_of[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if let Some(unreached) = (0..n).find(|&v| layer_of[v] == usize::MAX) {
        return Err(Error::Disconnected { unreached });
    }
    let depth = layer_of.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for v in 0..n {
        layers[layer_of[v]].push(v);
    }
    Ok(BfsLayering { root, layer_of, layers })
}

/// A partition of the vertices into a clique and an independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
    in_clique: FixedBitSet,
    /// A clique vertex without independent neighbors that was moved to the
    /// independent side.
    pub moved_to_independent: Option<Vertex>,
}

impl SplitPartition {
    pub fn new(n: usize, clique: Vec<Vertex>) -> Self {
        let mut in_clique = FixedBitSet::with_capacity(n);
        for &v in &clique {
            in_clique.insert(v);
        }
        let mut clique = clique;
        clique.sort_unstable();
        let independent = (0..n).filter(|&v| !in_clique.contains(v)).collect();
        Self {
            clique,
            independent,
            in_clique,
            moved_to_independent: None,
        }
    }

    pub fn is_clique(&self, v: Vertex) -> bool {
        self.in_clique.contains(v)
    }

    pub fn clique_set(&self) -> &FixedBitSet {
        &self.in_clique
    }

    /// Direct check that the clique side is complete and the other side has no edges.
    pub fn verify(&self, g: &Graph) -> bool {
        let clique_ok = self
            .clique
            .iter()
            .enumerate()
            .all(|(i, &u)| self.clique[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        let independent_ok = self
            .independent
            .iter()
            .all(|&u| g.neighbors(u).iter().all(|&v| self.is_clique(v)));
        clique_ok && independent_ok
    }
}

/// Finds a split partition from the degree sequence, or `Error::NotSplit`.
///
/// The `m` highest-degree vertices form the clique candidate, where `m` is the
/// largest `k` with `d_k >= k - 1`. The graph is split iff the top-`m` degree
/// sum equals `m(m-1)` plus the remaining degree sum. If a clique vertex has no
/// neighbor on the independent side, the one with the largest id is moved over.
pub fn find_split_partition(g: &Graph) -> Result<SplitPartition> {
    let n = g.vertex_count();
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = (1..=n)
        .filter(|&k| g.degree(by_degree[k - 1]) + 1 >= k)
        .max()
        .unwrap_or(0);
    let top: usize = by_degree[..m].iter().map(|&v| g.degree(v)).sum();
    let rest: usize = by_degree[m..].iter().map(|&v| g.degree(v)).sum();
    if top != m * m.saturating_sub(1) + rest {
        return Err(Error::NotSplit);
    }
    let mut partition = SplitPartition::new(n, by_degree[..m].to_vec());
    if !partition.verify(g) {
        // boundary swap with an equal-degree vertex just outside the clique
        let last = by_degree[m - 1];
        let swapped = by_degree[m..]
            .iter()
            .filter(|&&v| g.degree(v) == g.degree(last))
            .map(|&v| {
                let mut clique = by_degree[..m - 1].to_vec();
                clique.push(v);
                SplitPartition::new(n, clique)
            })
            .find(|p| p.verify(g));
        partition = swapped.ok_or(Error::NotSplit)?;
    }
    let movable = partition
        .clique
        .iter()
        .copied()
        .filter(|&v| g.degree(v) + 1 == partition.clique.len())
        .max();
    if let Some(v) = movable {
        let clique = partition.clique.iter().copied().filter(|&u| u != v).collect();
        partition = SplitPartition::new(n, clique);
        partition.moved_to_independent = Some(v);
    }
    if !partition.verify(g) {
        return Err(Error::NotSplit);
    }
    Ok(partition)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalBipartiteCheck {
    Yes,
    NotBipartite,
    /// Vertices of an induced cycle of length at least six.
    LongInducedCycle(Vec<Vertex>),
    /// Bipartite, but too many vertices for the exhaustive check.
    TooLarge,
}

impl ChordalBipartiteCheck {
    pub fn is_yes(&self) -> bool {
        matches!(self, Self::Yes)
    }
}

/// Exhaustive chordal bipartite test over all vertex subsets.
///
/// Only attempted when `g` has at most `size_cap` vertices (and never above 64).
pub fn check_chordal_bipartite(g: &Graph, size_cap: usize) -> ChordalBipartiteCheck {
    if !g.is_bipartite() {
        return ChordalBipartiteCheck::NotBipartite;
    }
    let n = g.vertex_count();
    if n > size_cap || n > 63 {
        return ChordalBipartiteCheck::TooLarge;
    }
    match find_long_induced_cycle(g) {
        None => ChordalBipartiteCheck::Yes,
        Some(cycle) => ChordalBipartiteCheck::LongInducedCycle(cycle),
    }
}

/// Smallest-mask induced cycle with at least six vertices, by subset enumeration.
fn find_long_induced_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let is_cycle = |mask: u64| -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & mask).count_ones() != 2 {
                return false;
            }
        }
        // 2-regular: connected iff a single cycle
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = adj[v] & mask & !seen;
            seen |= next;
            frontier |= next;
        }
        seen == mask
    };
    (0u64..1 << n)
        .filter(|m| m.count_ones() >= 6)
        .find(|&m| is_cycle(m))
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}
