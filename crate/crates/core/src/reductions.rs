//! End-vertex and search tree questions phrased as partial orders.

use crate::error::{Error, Result};
use crate::graph::{bfs_layering, Graph, Vertex};
use crate::order::PartialOrder;
use crate::ordering::Ordering;

/// A spanning tree of a graph, rooted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub root: Vertex,
    /// `parent[v]` is `None` exactly for the root.
    pub parent: Vec<Option<Vertex>>,
}

impl RootedTree {
    /// Checks that `parent` describes a spanning tree of `g` rooted at `root`.
    pub fn new(g: &Graph, root: Vertex, parent: Vec<Option<Vertex>>) -> Result<Self> {
        let n = g.vertex_count();
        g.check_vertex(root)?;
        if parent.len() != n {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: parent.len(),
            });
        }
        for (v, p) in parent.iter().enumerate() {
            match (v == root, p) {
                (true, Some(_)) => return Err(Error::NotSpanningTree(format!("root {} has a parent", g.name(v)))),
                (false, None) => return Err(Error::NotSpanningTree(format!("{} has no parent", g.name(v)))),
                (false, Some(p)) if !g.has_edge(v, *p) => {
                    return Err(Error::NotSpanningTree(format!(
                        "{} - {} is not an edge",
                        g.name(*p),
                        g.name(v)
                    )))
                }
                _ => {}
            }
        }
        let mut depth: Vec<Option<usize>> = vec![None; n];
        depth[root] = Some(0);
        for start in 0..n {
            let mut chain = Vec::new();
            let mut v = start;
            while depth[v].is_none() {
                if chain.len() > n {
                    return Err(Error::NotSpanningTree(format!(
                        "parent links through {} form a cycle",
                        g.name(start)
                    )));
                }
                chain.push(v);
                v = parent[v].expect("only the root lacks a parent");
            }
            let mut d = depth[v].unwrap();
            for &u in chain.iter().rev() {
                d += 1;
                depth[u] = Some(d);
            }
        }
        Ok(Self { root, parent })
    }

    /// Builds a tree from `(parent, child)` pairs.
    pub fn from_pairs(g: &Graph, root: Vertex, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut parent = vec![None; g.vertex_count()];
        for &(p, c) in pairs {
            g.check_vertex(p)?;
            g.check_vertex(c)?;
            if parent[c].replace(p).is_some() {
                return Err(Error::NotSpanningTree(format!("{} has two parents", g.name(c))));
            }
        }
        Self::new(g, root, parent)
    }

    /// `(parent, child)` pairs in child id order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.parent.iter().enumerate().filter_map(|(c, p)| p.map(|p| (p, c)))
    }

    pub fn children(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.parent.len()];
        for (p, c) in self.edges() {
            out[p].push(c);
        }
        out
    }
}

/// `t` is last in every extension: `u ≺ t` for all `u ≠ t`.
pub fn end_vertex_order(g: &Graph, t: Vertex) -> Result<PartialOrder> {
    g.check_vertex(t)?;
    let pairs: Vec<_> = g.vertices().filter(|&u| u != t).map(|u| (u, t)).collect();
    PartialOrder::new(g.vertex_count(), &pairs)
}

/// The order whose extensions (among connected search orderings rooted at
/// the tree's root) are exactly those with F-tree `t`.
///
/// A cycle error means no ordering has `t` as its F-tree.
pub fn f_tree_to_psop(g: &Graph, t: &RootedTree) -> Result<PartialOrder> {
    let mut pairs = Vec::new();
    for (x, z) in t.edges() {
        pairs.push((x, z));
        for &y in g.neighbors(z) {
            if y != x {
                pairs.push((x, y));
            }
        }
    }
    PartialOrder::new(g.vertex_count(), &pairs)
}

/// The order whose extensions (among BFS-type orderings rooted at the
/// tree's root) are exactly those with L-tree `t`. Bipartite graphs only.
pub fn l_tree_to_psop_bipartite(g: &Graph, t: &RootedTree) -> Result<PartialOrder> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let lay = bfs_layering(g, t.root)?;
    let mut pairs = Vec::new();
    for (x, y) in t.edges() {
        pairs.push((x, y));
        for &z in g.neighbors(y) {
            if z != x && lay.layer_of[z] == lay.layer_of[x] {
                pairs.push((z, x));
            }
        }
    }
    PartialOrder::new(g.vertex_count(), &pairs)
}

fn extract_tree(
    g: &Graph,
    sigma: &Ordering,
    pick: impl Fn(&mut dyn Iterator<Item = usize>) -> Option<usize>,
) -> Result<RootedTree> {
    let n = g.vertex_count();
    if sigma.len() != n {
        return Err(Error::UniverseMismatch {
            expected: n,
            found: sigma.len(),
        });
    }
    let root = sigma
        .first()
        .ok_or_else(|| Error::NotSpanningTree("graph has no vertices".into()))?;
    let mut parent = vec![None; n];
    for v in sigma.iter().skip(1) {
        let pv = sigma.position(v);
        let mut earlier = g.neighbors(v).iter().map(|&w| sigma.position(w)).filter(|&p| p < pv);
        let p = pick(&mut earlier).ok_or(Error::NotConnectedSearch { vertex: v })?;
        parent[v] = Some(sigma[p]);
    }
    RootedTree::new(g, root, parent)
}

/// Each vertex hangs from its leftmost neighbor in `sigma`.
pub fn extract_f_tree(g: &Graph, sigma: &Ordering) -> Result<RootedTree> {
    extract_tree(g, sigma, |it| it.min())
}

/// Each vertex hangs from its rightmost earlier neighbor in `sigma`.
pub fn extract_l_tree(g: &Graph, sigma: &Ordering) -> Result<RootedTree> {
    extract_tree(g, sigma, |it| it.max())
}
