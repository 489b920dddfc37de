//! Rooted LBFS partial search orders on chordal bipartite graphs.
//!
//! Constraints inside each BFS layer are pushed towards the root as
//! one-before-all tuples; each layer is then solved independently and the
//! layer orderings become the tie-breaker of an LBFS⁺ run.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::generic::{check_instance, root_check, solve_psop_unrooted};
use crate::graph::{
    bfs_layering, check_chordal_bipartite, BfsLayering, ChordalBipartiteCheck, Graph, Vertex, DEFAULT_CB_CAP,
};
use crate::oba::{solve_oba, ObaInstance};
use crate::order::PartialOrder;
use crate::ordering::Ordering;
use crate::search::{run_plus_search, Search};
use crate::solution::{Infeasible, Solution};

/// Keeps only the pairs of `pi` inside one BFS layer.
///
/// Pairs pointing to a deeper layer hold in every BFS ordering from the
/// root and are dropped; pairs pointing to a shallower layer can never hold.
pub fn normalize_layer_constraints(
    pi: &PartialOrder,
    lay: &BfsLayering,
) -> std::result::Result<PartialOrder, Infeasible> {
    let mut kept = Vec::new();
    for (x, y) in pi.strict_pairs() {
        match lay.layer_of[x].cmp(&lay.layer_of[y]) {
            std::cmp::Ordering::Less => {}
            std::cmp::Ordering::Equal => kept.push((x, y)),
            std::cmp::Ordering::Greater => return Err(Infeasible::CrossLayer { before: x, after: y }),
        }
    }
    Ok(PartialOrder::new(pi.universe_size(), &kept).expect("subset of a partial order"))
}

/// One one-before-all instance per BFS layer; index 0 is the root's (empty) layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerRelations {
    pub layers: Vec<ObaInstance>,
}

impl LayerRelations {
    pub fn layer(&self, i: usize) -> &ObaInstance {
        &self.layers[i]
    }
}

/// Seeds every layer with the singleton pairs of `pi` and propagates them
/// from the deepest layer up to layer 1.
///
/// `pi` must contain same-layer pairs only.
pub fn build_layer_relations(g: &Graph, lay: &BfsLayering, pi: &PartialOrder) -> LayerRelations {
    let n = g.vertex_count();
    let k = lay.depth();
    let mut layers: Vec<ObaInstance> = lay.layers.iter().map(|l| ObaInstance::new(l.clone())).collect();
    let mut singleton = vec![usize::MAX; n];
    for inst in layers.iter_mut().skip(1) {
        for x in inst.ground.clone() {
            singleton[x] = inst.add_set(vec![x]);
        }
    }
    for (x, y) in pi.strict_pairs() {
        let i = lay.layer_of[x];
        debug_assert_eq!(i, lay.layer_of[y]);
        if i > 0 {
            layers[i].relation.push((singleton[x], singleton[y]));
        }
    }

    let masks: Vec<FixedBitSet> = lay
        .layers
        .iter()
        .map(|l| {
            let mut m = FixedBitSet::with_capacity(n);
            l.iter().for_each(|&v| m.insert(v));
            m
        })
        .collect();
    // neighbors in the previous layer
    let up_degree: Vec<usize> = (0..n)
        .map(|v| match lay.layer_of[v] {
            0 => 0,
            i => g.neighbor_set(v).intersection(&masks[i - 1]).count(),
        })
        .collect();

    for i in (2..=k).rev() {
        let (upper, lower) = layers.split_at_mut(i);
        let inst = &lower[0];
        let target = &mut upper[i - 1];
        for (a, b) in inst.tuples() {
            let na = g.neighborhood_of(a);
            let nb = g.neighborhood_of(b);
            let mut a1 = na.clone();
            a1.intersect_with(&masks[i - 1]);
            a1.difference_with(&nb);
            let best = a1.ones().map(|v| up_degree[v]).max().unwrap_or(0);
            let a2: Vec<Vertex> = a1.ones().filter(|&v| up_degree[v] == best).collect();
            let mut b1 = nb;
            b1.intersect_with(&masks[i - 1]);
            b1.difference_with(&na);
            target.add_tuple(a2, b1.ones().collect());
        }
    }
    LayerRelations { layers }
}

/// Fails unless `g` is connected and chordal bipartite according to the
/// exhaustive check with the given size cap.
pub fn validate_chordal_bipartite(g: &Graph, cap: usize) -> Result<()> {
    g.require_connected()?;
    match check_chordal_bipartite(g, cap) {
        ChordalBipartiteCheck::Yes => Ok(()),
        ChordalBipartiteCheck::NotBipartite => Err(Error::NotBipartite),
        ChordalBipartiteCheck::LongInducedCycle(c) => Err(Error::NotChordalBipartite { cycle_len: c.len() }),
        ChordalBipartiteCheck::TooLarge => Err(Error::ClassUnverified {
            n: g.vertex_count(),
            cap,
        }),
    }
}

/// An LBFS ordering starting at `r` that extends `pi`.
///
/// `g` is checked to be chordal bipartite exhaustively, which is refused above
/// [`DEFAULT_CB_CAP`] vertices; use [`solve_psop_lbfs_cb_rooted_assumed`] to
/// skip the check.
pub fn solve_psop_lbfs_cb_rooted(g: &Graph, r: Vertex, pi: &PartialOrder) -> Result<Solution> {
    validate_chordal_bipartite(g, DEFAULT_CB_CAP)?;
    solve_psop_lbfs_cb_rooted_assumed(g, r, pi)
}

/// As [`solve_psop_lbfs_cb_rooted`], trusting the caller that `g` is chordal
/// bipartite. Only bipartiteness and connectivity are checked.
pub fn solve_psop_lbfs_cb_rooted_assumed(g: &Graph, r: Vertex, pi: &PartialOrder) -> Result<Solution> {
    g.check_vertex(r)?;
    check_instance(g, pi)?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    if let Some(reason) = root_check(pi, r) {
        return Ok(Solution::Infeasible(reason));
    }
    let lay = bfs_layering(g, r)?;
    let same_layer = match normalize_layer_constraints(pi, &lay) {
        Ok(p) => p,
        Err(reason) => return Ok(Solution::Infeasible(reason)),
    };
    let rel = build_layer_relations(g, &lay, &same_layer);
    let mut rho = vec![r];
    for i in 1..=lay.depth() {
        match solve_oba(rel.layer(i))? {
            Some(tau) => rho.extend(tau),
            None => return Ok(Solution::Infeasible(Infeasible::LayerRelation { layer: i })),
        }
    }
    let rho = Ordering::new(rho, g.vertex_count())?;
    Ok(Solution::Found(run_plus_search(g, Search::Lbfs, &rho)?))
}

/// Tries every minimal vertex of `pi` as the start, validating `g` once.
pub fn solve_psop_lbfs_cb_unrooted(g: &Graph, pi: &PartialOrder) -> Result<Solution> {
    validate_chordal_bipartite(g, DEFAULT_CB_CAP)?;
    solve_psop_unrooted(g, pi, solve_psop_lbfs_cb_rooted_assumed)
}
