//! Small named graphs used throughout the tests and documentation.

use crate::graph::Graph;
use crate::order::PartialOrder;

/// Path `a - b - c`.
pub fn p3() -> Graph {
    Graph::from_named_edges(&[("a", "b"), ("b", "c")])
}

/// Cycle `v1 - v2 - v3 - v4 - v1`.
pub fn c4() -> Graph {
    Graph::from_named_edges(&[("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")])
}

/// Chordal bipartite graph with BFS layers `{r}, {u1, u2}, {w1, w2}` from `r`.
pub fn ladder() -> Graph {
    Graph::from_named_edges(&[("r", "u1"), ("r", "u2"), ("u1", "w1"), ("u1", "w2"), ("u2", "w2")])
}

/// Star with center `s` and leaves `x`, `y`, `z`.
pub fn star() -> Graph {
    Graph::from_named_edges(&[("s", "x"), ("s", "y"), ("s", "z")])
}

pub fn triangle() -> Graph {
    Graph::from_named_edges(&[("a", "b"), ("b", "c"), ("a", "c")])
}

/// Split graph with clique `{a, b, c}` and independent set `{d, e, f, g}`.
pub fn fig1() -> Graph {
    Graph::from_named_edges(&[
        ("a", "b"),
        ("a", "c"),
        ("b", "c"),
        ("a", "d"),
        ("c", "d"),
        ("b", "e"),
        ("c", "e"),
        ("a", "f"),
        ("b", "g"),
    ])
}

/// Closure of `{(f, e), (g, d)}` on [`fig1`].
pub fn fig1_order() -> PartialOrder {
    named_order(&fig1(), &[("f", "e"), ("g", "d")])
}

/// Cycle on `0..n`.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Path on `0..n`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Builds a partial order from vertex names; panics on unknown names or cycles.
pub fn named_order(g: &Graph, pairs: &[(&str, &str)]) -> PartialOrder {
    let ids: Vec<_> = pairs
        .iter()
        .map(|(x, y)| {
            (
                g.vertex(x).expect("unknown vertex"),
                g.vertex(y).expect("unknown vertex"),
            )
        })
        .collect();
    PartialOrder::new(g.vertex_count(), &ids).expect("pairs must be acyclic")
}

/// Looks up a sequence of vertex names.
pub fn ids(g: &Graph, names: &[&str]) -> Vec<usize> {
    names.iter().map(|s| g.vertex(s).expect("unknown vertex")).collect()
}
