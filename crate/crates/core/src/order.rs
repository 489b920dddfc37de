//! Partial orders on `0..n`.
//!
//! A [`PartialOrder`] keeps the generating pairs as a DAG (used by the linear
//! time solvers) and computes the transitive closure lazily as per-vertex
//! successor/predecessor bitsets. Reflexive pairs are implicit.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::ordering::Ordering;

#[derive(Clone)]
pub struct PartialOrder {
    n: usize,
    succ: Vec<Vec<Vertex>>,
    in_degree: Vec<usize>,
    generator_count: usize,
    input_pairs: usize,
    closure: OnceLock<Closure>,
}

#[derive(Clone)]
struct Closure {
    succ: Vec<FixedBitSet>,
    pred: Vec<FixedBitSet>,
}

impl PartialOrder {
    /// Order with no strict pairs.
    pub fn empty(n: usize) -> Self {
        Self::new(n, &[]).expect("empty relation is acyclic")
    }

    /// Closes `pairs` reflexively and transitively.
    ///
    /// Reflexive pairs are accepted and dropped; [`input_pair_count`] still
    /// counts them. Fails with [`Error::Cycle`] if the closure would not be
    /// antisymmetric.
    ///
    /// [`input_pair_count`]: Self::input_pair_count
    pub fn new(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut strict: Vec<(Vertex, Vertex)> = Vec::with_capacity(pairs.len());
        for &(x, y) in pairs {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
            }
            if x != y {
                strict.push((x, y));
            }
        }
        strict.sort_unstable();
        strict.dedup();
        let mut succ = vec![Vec::new(); n];
        let mut in_degree = vec![0; n];
        for &(x, y) in &strict {
            succ[x].push(y);
            in_degree[y] += 1;
        }
        let order = Self {
            n,
            succ,
            in_degree,
            generator_count: strict.len(),
            input_pairs: pairs.len(),
            closure: OnceLock::new(),
        };
        order.check_acyclic()?;
        Ok(order)
    }

    /// Adds `pairs` to this order and closes again.
    pub fn extended(&self, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut all: Vec<_> = self.generators().collect();
        all.extend_from_slice(pairs);
        Self::new(self.n, &all)
    }

    fn check_acyclic(&self) -> Result<()> {
        let mut indeg = self.in_degree.clone();
        let mut stack: Vec<Vertex> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &self.succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if seen == self.n {
            return Ok(());
        }
        // every leftover vertex has a leftover predecessor; walk back until a repeat
        let mut pred_of = vec![usize::MAX; self.n];
        for x in 0..self.n {
            for &y in &self.succ[x] {
                if indeg[x] > 0 && indeg[y] > 0 {
                    pred_of[y] = x;
                }
            }
        }
        let start = (0..self.n).find(|&v| indeg[v] > 0).unwrap();
        let mut walk = vec![start];
        let mut at = vec![usize::MAX; self.n];
        at[start] = 0;
        let mut v = start;
        loop {
            v = pred_of[v];
            if at[v] != usize::MAX {
                let mut cycle = walk[at[v]..].to_vec();
                cycle.reverse();
                return Err(Error::Cycle(cycle));
            }
            at[v] = walk.len();
            walk.push(v);
        }
    }

    fn closure(&self) -> &Closure {
        self.closure.get_or_init(|| {
            let topo = self.topological_order();
            let mut succ = vec![FixedBitSet::with_capacity(self.n); self.n];
            for &v in topo.as_slice().iter().rev() {
                let mut row = FixedBitSet::with_capacity(self.n);
                for &w in &self.succ[v] {
                    row.insert(w);
                    row.union_with(&succ[w]);
                }
                succ[v] = row;
            }
            let mut pred = vec![FixedBitSet::with_capacity(self.n); self.n];
            for (x, row) in succ.iter().enumerate() {
                for y in row.ones() {
                    pred[y].insert(x);
                }
            }
            Closure { succ, pred }
        })
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    /// Number of pairs the order was built from, reflexive ones included.
    pub fn input_pair_count(&self) -> usize {
        self.input_pairs
    }

    /// Number of distinct strict generating pairs.
    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    /// `x ≺ y` strictly.
    pub fn less(&self, x: Vertex, y: Vertex) -> bool {
        self.closure().succ[x].contains(y)
    }

    pub fn comparable(&self, x: Vertex, y: Vertex) -> bool {
        self.less(x, y) || self.less(y, x)
    }

    /// All strict pairs of the closure, sorted.
    pub fn strict_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let closure = self.closure();
        (0..self.n)
            .flat_map(|x| closure.succ[x].ones().map(move |y| (x, y)))
            .collect()
    }

    pub fn strict_pair_count(&self) -> usize {
        self.closure().succ.iter().map(|row| row.count_ones(..)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.generator_count == 0
    }

    /// Strict successors of `x` in the closure.
    pub fn successors(&self, x: Vertex) -> &FixedBitSet {
        &self.closure().succ[x]
    }

    /// Strict predecessors of `x` in the closure.
    pub fn predecessors(&self, x: Vertex) -> &FixedBitSet {
        &self.closure().pred[x]
    }

    /// Deduplicated strict generating pairs.
    pub fn generators(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    /// Successors of `x` in the generating DAG.
    pub fn generator_successors(&self, x: Vertex) -> &[Vertex] {
        &self.succ[x]
    }

    /// In-degree of `x` in the generating DAG; zero iff `x` is minimal.
    pub fn generator_in_degree(&self, x: Vertex) -> usize {
        self.in_degree[x]
    }

    pub fn is_minimal(&self, x: Vertex) -> bool {
        self.in_degree[x] == 0
    }

    pub fn minimal_elements(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(|&v| self.in_degree[v] == 0)
    }

    /// Some strict predecessor of `x`, if any.
    pub fn some_predecessor(&self, x: Vertex) -> Option<Vertex> {
        (0..self.n).find(|&w| self.succ[w].binary_search(&x).is_ok())
    }

    /// Linear extension taking the smallest available id at each step.
    pub fn topological_order(&self) -> Ordering {
        let mut indeg = self.in_degree.clone();
        let mut heap: BinaryHeap<Reverse<Vertex>> = (0..self.n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut seq = Vec::with_capacity(self.n);
        while let Some(Reverse(v)) = heap.pop() {
            seq.push(v);
            for &w in &self.succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        Ordering::new(seq, self.n).expect("order is acyclic")
    }

    /// Whether `sigma` respects every strict pair.
    ///
    /// Checking the generating pairs suffices: the closure follows by transitivity.
    pub fn is_linear_extension(&self, sigma: &Ordering) -> Result<bool> {
        if sigma.len() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                found: sigma.len(),
            });
        }
        Ok(self.generators().all(|(x, y)| sigma.before(x, y)))
    }
}

/// Free-function form of [`PartialOrder::is_linear_extension`].
pub fn is_linear_extension(sigma: &Ordering, pi: &PartialOrder) -> Result<bool> {
    pi.is_linear_extension(sigma)
}

impl PartialEq for PartialOrder {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.closure().succ == other.closure().succ
    }
}

impl Eq for PartialOrder {}

impl fmt::Debug for PartialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialOrder")
            .field("n", &self.n)
            .field("generators", &self.generators().collect::<Vec<_>>())
            .finish()
    }
}
