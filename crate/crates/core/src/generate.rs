//! Random instances for tests, benchmarks and the `generate` command.
//!
//! Generated graphs name their vertices `0..n`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{check_chordal_bipartite, Graph, Vertex};
use crate::order::PartialOrder;
use crate::ordering::Ordering;
use crate::reductions::RootedTree;
use crate::search::{run_plus_search, Search};

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Ordering {
    let mut seq: Vec<Vertex> = (0..n).collect();
    seq.shuffle(rng);
    Ordering::new(seq, n).expect("shuffle is a permutation")
}

fn random_tree_edges(rng: &mut impl Rng, n: usize) -> Vec<(Vertex, Vertex)> {
    let order = random_permutation(rng, n);
    (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect()
}

/// A random spanning tree plus every other pair independently with probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = random_tree_edges(rng, n);
    let tree: HashSet<(Vertex, Vertex)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("endpoints are in range")
}

/// A connected split graph: a clique of random size, every independent
/// vertex adjacent to a nonempty random subset of it, ids shuffled.
pub fn random_split_graph(rng: &mut impl Rng, n: usize) -> Graph {
    if n == 0 {
        return Graph::from_edges(0, &[]).unwrap();
    }
    let k = rng.gen_range(1..=n);
    let ids = random_permutation(rng, n);
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((ids[i], ids[j]));
        }
    }
    for i in k..n {
        let attach = rng.gen_range(0..k);
        for j in 0..k {
            if j == attach || rng.gen_bool(0.5) {
                edges.push((ids[i], ids[j]));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("endpoints are in range")
}

/// A connected chordal bipartite graph: a random tree with random
/// cross-color edges added while the exhaustive check still passes.
///
/// `n` must not exceed the exhaustive check's limit of 63.
pub fn random_chordal_bipartite_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let mut edges = random_tree_edges(rng, n);
    let tree = Graph::from_edges(n, &edges).expect("endpoints are in range");
    let color = tree.bipartition().expect("trees are bipartite");
    let mut candidates: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| color[u] != color[v] && !tree.has_edge(u, v))
        .collect();
    candidates.shuffle(rng);
    let attempts = rng.gen_range(0..=candidates.len());
    let mut g = tree;
    for &e in &candidates[..attempts] {
        edges.push(e);
        let next = Graph::from_edges(n, &edges).expect("endpoints are in range");
        if check_chordal_bipartite(&next, n.max(1)).is_yes() {
            g = next;
        } else {
            edges.pop();
        }
    }
    g
}

/// Closes `pairs` random pairs oriented along a hidden random permutation.
pub fn random_order(rng: &mut impl Rng, n: usize, pairs: usize) -> PartialOrder {
    let hidden = random_permutation(rng, n);
    order_from_ordering(rng, &hidden, pairs)
}

/// Closes `pairs` random pairs `(σ(i), σ(j))` with `i < j`; `sigma` extends the result.
pub fn order_from_ordering(rng: &mut impl Rng, sigma: &Ordering, pairs: usize) -> PartialOrder {
    let n = sigma.len();
    let mut out = Vec::with_capacity(pairs);
    if n >= 2 {
        for _ in 0..pairs {
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(i + 1..n);
            out.push((sigma[i], sigma[j]));
        }
    }
    PartialOrder::new(n, &out).expect("pairs follow one ordering")
}

/// A `search` ordering of `g` and an order with `pairs` random pairs it extends.
pub fn forced_order(rng: &mut impl Rng, g: &Graph, search: Search, pairs: usize) -> (PartialOrder, Ordering) {
    let rho = random_permutation(rng, g.vertex_count());
    let sigma = run_plus_search(g, search, &rho).expect("rho permutes the vertices");
    (order_from_ordering(rng, &sigma, pairs), sigma)
}

/// A random spanning tree of connected `g` rooted at `root`.
pub fn random_spanning_tree(rng: &mut impl Rng, g: &Graph, root: Vertex) -> RootedTree {
    let n = g.vertex_count();
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(rng);
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(comp: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while comp[r] != r {
            r = comp[r];
        }
        comp[x] = r;
        r
    }
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        let (a, b) = (find(&mut comp, u), find(&mut comp, v));
        if a != b {
            comp[a] = b;
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                stack.push(w);
            }
        }
    }
    RootedTree::new(g, root, parent).expect("connected graphs have spanning trees")
}
