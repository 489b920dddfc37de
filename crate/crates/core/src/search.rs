//! The label search framework.
//!
//! Every search keeps a label per vertex: the set of step indices (1-based)
//! at which a neighbor was visited. A vertex may be visited next iff no other
//! unvisited vertex has a strictly larger label under the search's label
//! order. Searches differ only in that order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::ordering::Ordering;

/// A graph search, identified by its label order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Search {
    /// Generic Search: `A ≺ B` iff `A = ∅` and `B ≠ ∅`.
    Gs,
    /// BFS: as GS, or `min(A) > min(B)`.
    Bfs,
    /// Lexicographic BFS: `A ⊊ B`, or `min(A \ B) > min(B \ A)`.
    Lbfs,
    /// Maximum Cardinality Search: `|A| < |B|`.
    Mcs,
    /// Maximal Neighborhood Search: `A ⊊ B`.
    Mns,
}

impl Search {
    pub const ALL: [Search; 5] = [Search::Gs, Search::Bfs, Search::Lbfs, Search::Mcs, Search::Mns];

    pub fn name(self) -> &'static str {
        match self {
            Search::Gs => "gs",
            Search::Bfs => "bfs",
            Search::Lbfs => "lbfs",
            Search::Mcs => "mcs",
            Search::Mns => "mns",
        }
    }

    /// Whether the label order is a strict weak order (incomparability is an
    /// equivalence), which allows a linear-time eligibility scan.
    fn is_weak_order(self) -> bool {
        !matches!(self, Search::Mns)
    }
}

impl fmt::Display for Search {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Search {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Search::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown search {s:?} (expected gs, bfs, lbfs, mcs or mns)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelCmp {
    /// `A ≺ B`.
    Less,
    /// `B ≺ A`.
    Greater,
    Incomparable,
}

/// Is `a ≺ b` under `search`'s label order? Labels are sorted ascending.
pub fn precedes(search: Search, a: &[usize], b: &[usize]) -> bool {
    match search {
        Search::Gs => a.is_empty() && !b.is_empty(),
        Search::Bfs => match (a.first(), b.first()) {
            (None, Some(_)) => true,
            (Some(x), Some(y)) => x > y,
            _ => false,
        },
        // the smallest element of the symmetric difference decides; covers A ⊊ B too
        Search::Lbfs => matches!(min_symmetric_difference(a, b), Some(Side::Right)),
        Search::Mcs => a.len() < b.len(),
        Search::Mns => a.len() < b.len() && is_subset(a, b),
    }
}

pub fn compare_labels(search: Search, a: &[usize], b: &[usize]) -> LabelCmp {
    if precedes(search, a, b) {
        LabelCmp::Less
    } else if precedes(search, b, a) {
        LabelCmp::Greater
    } else {
        LabelCmp::Incomparable
    }
}

enum Side {
    Left,
    Right,
}

fn min_symmetric_difference(a: &[usize], b: &[usize]) -> Option<Side> {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) => return Some(if x < y { Side::Left } else { Side::Right }),
            (Some(_), None) => return Some(Side::Left),
            (None, Some(_)) => return Some(Side::Right),
            (None, None) => return None,
        }
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// Mutable state of one label search run.
#[derive(Clone)]
pub struct LabelState<'g> {
    g: &'g Graph,
    search: Search,
    labels: Vec<Vec<usize>>,
    numbered: FixedBitSet,
    order: Vec<Vertex>,
}

impl<'g> LabelState<'g> {
    pub fn new(g: &'g Graph, search: Search) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            search,
            labels: vec![Vec::new(); n],
            numbered: FixedBitSet::with_capacity(n),
            order: Vec::with_capacity(n),
        }
    }

    pub fn search(&self) -> Search {
        self.search
    }

    /// Number of visited vertices.
    pub fn step(&self) -> usize {
        self.order.len()
    }

    pub fn is_done(&self) -> bool {
        self.order.len() == self.g.vertex_count()
    }

    pub fn label(&self, v: Vertex) -> &[usize] {
        &self.labels[v]
    }

    pub fn is_numbered(&self, v: Vertex) -> bool {
        self.numbered.contains(v)
    }

    pub fn numbered(&self) -> &FixedBitSet {
        &self.numbered
    }

    pub fn visited(&self) -> &[Vertex] {
        &self.order
    }

    fn unnumbered(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.numbered.zeroes()
    }

    /// Whether `v` may be visited next.
    pub fn is_eligible(&self, v: Vertex) -> bool {
        !self.is_numbered(v)
            && !self
                .unnumbered()
                .any(|y| precedes(self.search, &self.labels[v], &self.labels[y]))
    }

    /// The vertices that may be visited next, sorted by id.
    pub fn eligible(&self) -> Vec<Vertex> {
        if !self.search.is_weak_order() {
            return self.unnumbered().filter(|&v| self.is_eligible(v)).collect();
        }
        let mut best = match self.unnumbered().next() {
            Some(v) => v,
            None => return Vec::new(),
        };
        for y in self.unnumbered() {
            if precedes(self.search, &self.labels[best], &self.labels[y]) {
                best = y;
            }
        }
        self.unnumbered()
            .filter(|&x| !precedes(self.search, &self.labels[x], &self.labels[best]))
            .collect()
    }

    /// Numbers `v` with the next index and labels its unnumbered neighbors.
    pub fn visit(&mut self, v: Vertex) {
        debug_assert!(!self.is_numbered(v));
        self.order.push(v);
        let i = self.order.len();
        self.numbered.insert(v);
        for &w in self.g.neighbors(v) {
            if !self.numbered.contains(w) {
                self.labels[w].push(i);
            }
        }
    }

    /// Key that determines every future choice of the search.
    ///
    /// For GS, MCS and MNS the label relation among unvisited vertices
    /// depends only on the visited set. For BFS and LBFS it additionally
    /// depends on the ranking of current labels, which later indices cannot
    /// change.
    pub fn state_key(&self) -> (FixedBitSet, Vec<u32>) {
        match self.search {
            Search::Gs | Search::Mcs | Search::Mns => (self.numbered.clone(), Vec::new()),
            Search::Bfs | Search::Lbfs => {
                let mut rest: Vec<Vertex> = self.unnumbered().collect();
                let search = self.search;
                let labels = &self.labels;
                rest.sort_by(|&x, &y| match compare_labels(search, &labels[x], &labels[y]) {
                    LabelCmp::Less => std::cmp::Ordering::Less,
                    LabelCmp::Greater => std::cmp::Ordering::Greater,
                    LabelCmp::Incomparable => std::cmp::Ordering::Equal,
                });
                let mut rank = vec![u32::MAX; self.g.vertex_count()];
                let mut r = 0;
                for (i, &v) in rest.iter().enumerate() {
                    if i > 0 && precedes(search, &labels[rest[i - 1]], &labels[v]) {
                        r += 1;
                    }
                    rank[v] = r;
                }
                (self.numbered.clone(), rank)
            }
        }
    }

    pub fn into_ordering(self) -> Ordering {
        let n = self.g.vertex_count();
        Ordering::new(self.order, n).expect("search visits every vertex once")
    }
}

fn check_len(g: &Graph, o: &Ordering) -> Result<()> {
    if o.len() == g.vertex_count() {
        Ok(())
    } else {
        Err(Error::UniverseMismatch {
            expected: g.vertex_count(),
            found: o.len(),
        })
    }
}

/// The `search⁺(rho)` ordering: always visit the eligible vertex leftmost in `rho`.
pub fn run_plus_search(g: &Graph, search: Search, rho: &Ordering) -> Result<Ordering> {
    check_len(g, rho)?;
    let mut state = LabelState::new(g, search);
    while !state.is_done() {
        let next = state
            .eligible()
            .into_iter()
            .min_by_key(|&v| rho.position(v))
            .expect("some unnumbered vertex is always eligible");
        state.visit(next);
    }
    Ok(state.into_ordering())
}

/// Whether `sigma` can be produced by `search` on `g`.
pub fn is_search_ordering(g: &Graph, search: Search, sigma: &Ordering) -> Result<bool> {
    check_len(g, sigma)?;
    let mut state = LabelState::new(g, search);
    for v in sigma.iter() {
        if !state.is_eligible(v) {
            return Ok(false);
        }
        state.visit(v);
    }
    Ok(true)
}

/// LBFS four-point condition: for all `a ≺ b ≺ c` with `ac ∈ E`, `ab ∉ E`
/// there is `d ≺ a` with `bd ∈ E`, `cd ∉ E`.
pub fn check_lbfs_4point(g: &Graph, sigma: &Ordering) -> Result<bool> {
    check_len(g, sigma)?;
    let n = g.vertex_count();
    // earliest position of a vertex adjacent to b but not to c
    let mut first_private: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut first = |b: Vertex, c: Vertex| -> usize {
        *first_private.entry((b, c)).or_insert_with(|| {
            g.neighbors(b)
                .iter()
                .filter(|&&d| d != c && !g.has_edge(c, d))
                .map(|&d| sigma.position(d))
                .min()
                .unwrap_or(usize::MAX)
        })
    };
    for ia in 0..n {
        let a = sigma[ia];
        for ib in ia + 1..n {
            let b = sigma[ib];
            if g.has_edge(a, b) {
                continue;
            }
            for ic in ib + 1..n {
                let c = sigma[ic];
                if g.has_edge(a, c) && first(b, c) >= ia {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Result of [`enumerate_search_orderings`].
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub orderings: Vec<Ordering>,
    pub truncated: bool,
}

/// All orderings `search` can produce, optionally starting at `root`, in
/// lexicographic id order and truncated after `cap` results.
pub fn enumerate_search_orderings(g: &Graph, search: Search, root: Option<Vertex>, cap: usize) -> Result<Enumeration> {
    if let Some(r) = root {
        g.check_vertex(r)?;
    }
    let mut out = Enumeration {
        orderings: Vec::new(),
        truncated: false,
    };
    let mut state = LabelState::new(g, search);
    match root {
        Some(r) => {
            state.visit(r);
            expand(&state, cap, &mut out);
        }
        None => expand(&state, cap, &mut out),
    }
    Ok(out)
}

fn expand(state: &LabelState<'_>, cap: usize, out: &mut Enumeration) {
    if out.truncated {
        return;
    }
    if state.is_done() {
        if out.orderings.len() == cap {
            out.truncated = true;
        } else {
            out.orderings.push(state.clone().into_ordering());
        }
        return;
    }
    for v in state.eligible() {
        let mut next = state.clone();
        next.visit(v);
        expand(&next, cap, out);
    }
}
