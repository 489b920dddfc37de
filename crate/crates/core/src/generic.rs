//! Partial search orders of Generic Search, plus root handling shared by
//! all solvers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::order::PartialOrder;
use crate::ordering::Ordering;
use crate::solution::{Infeasible, Solution};

/// Work counters of [`solve_psop_gs_rooted_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GsStats {
    /// Adjacency lists iterated.
    pub adjacency_scans: usize,
    /// Order successor lists iterated.
    pub successor_scans: usize,
    /// Most times any single list was iterated.
    pub max_scans_per_list: usize,
}

pub(crate) fn check_instance(g: &Graph, pi: &PartialOrder) -> Result<()> {
    if pi.universe_size() != g.vertex_count() {
        return Err(Error::UniverseMismatch {
            expected: g.vertex_count(),
            found: pi.universe_size(),
        });
    }
    g.require_connected()
}

pub(crate) fn root_check(pi: &PartialOrder, r: Vertex) -> Option<Infeasible> {
    (!pi.is_minimal(r)).then(|| Infeasible::RootNotMinimal {
        root: r,
        predecessor: pi.some_predecessor(r).unwrap(),
    })
}

/// A Generic Search ordering starting at `r` that extends `pi`.
pub fn solve_psop_gs_rooted(g: &Graph, r: Vertex, pi: &PartialOrder) -> Result<Solution> {
    solve_psop_gs_rooted_with_stats(g, r, pi).map(|(s, _)| s)
}

/// As [`solve_psop_gs_rooted`], also reporting how often each list was read.
pub fn solve_psop_gs_rooted_with_stats(g: &Graph, r: Vertex, pi: &PartialOrder) -> Result<(Solution, GsStats)> {
    g.check_vertex(r)?;
    check_instance(g, pi)?;
    let mut stats = GsStats::default();
    if pi.generator_in_degree(r) > 0 {
        let reason = root_check(pi, r).expect("root has a predecessor");
        return Ok((Solution::Infeasible(reason), stats));
    }
    let n = g.vertex_count();
    let mut in_degree: Vec<u32> = (0..n).map(|v| pi.generator_in_degree(v) as u32).collect();
    let mut marked = vec![false; n];
    let mut queued = vec![false; n];
    let mut adj_reads = vec![0u32; n];
    let mut succ_reads = vec![0u32; n];
    let mut frontier = BinaryHeap::from([Reverse(r)]);
    queued[r] = true;
    let mut sigma = Vec::with_capacity(n);
    while let Some(Reverse(v)) = frontier.pop() {
        sigma.push(v);
        adj_reads[v] += 1;
        stats.adjacency_scans += 1;
        for &w in g.neighbors(v) {
            marked[w] = true;
            if !queued[w] && in_degree[w] == 0 {
                queued[w] = true;
                frontier.push(Reverse(w));
            }
        }
        succ_reads[v] += 1;
        stats.successor_scans += 1;
        for &w in pi.generator_successors(v) {
            in_degree[w] -= 1;
            if in_degree[w] == 0 && marked[w] && !queued[w] {
                queued[w] = true;
                frontier.push(Reverse(w));
            }
        }
    }
    stats.max_scans_per_list = adj_reads.iter().chain(&succ_reads).copied().max().unwrap_or(0) as usize;
    let solution = if sigma.len() == n {
        Solution::Found(Ordering::new(sigma, n)?)
    } else {
        Solution::Infeasible(Infeasible::Stuck { placed: sigma.len() })
    };
    Ok((solution, stats))
}

/// Tries every minimal element of `pi` as the start vertex, in id order.
pub fn solve_psop_unrooted<F>(g: &Graph, pi: &PartialOrder, mut rooted: F) -> Result<Solution>
where
    F: FnMut(&Graph, Vertex, &PartialOrder) -> Result<Solution>,
{
    check_instance(g, pi)?;
    for r in pi.minimal_elements() {
        if let found @ Solution::Found(_) = rooted(g, r, pi)? {
            return Ok(found);
        }
    }
    Ok(Solution::Infeasible(Infeasible::NoRoot))
}

/// Runs an unrooted solver with `r` forced first by adding `r ≺ v` for all `v`.
pub fn solve_rooted_via<F>(g: &Graph, r: Vertex, pi: &PartialOrder, unrooted: F) -> Result<Solution>
where
    F: FnOnce(&Graph, &PartialOrder) -> Result<Solution>,
{
    g.check_vertex(r)?;
    check_instance(g, pi)?;
    if let Some(reason) = root_check(pi, r) {
        return Ok(Solution::Infeasible(reason));
    }
    let pairs: Vec<_> = g.vertices().filter(|&v| v != r).map(|v| (r, v)).collect();
    let forced = pi.extended(&pairs)?;
    unrooted(g, &forced)
}
