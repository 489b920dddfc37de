//! MCS and LBFS partial search orders on split graphs.
//!
//! An independent vertex is premature for `π` when `π` forces it before a
//! clique vertex, or before an independent vertex that any MCS (LBFS) would
//! prefer once the clique is exhausted. The premature vertices must have
//! nested neighborhoods; if they do, the nested partial order `π^N` refines
//! `π` and a suitable linear extension of it is a working tie-breaker.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::generic::check_instance;
use crate::graph::{find_split_partition, Graph, SplitPartition, Vertex};
use crate::oba::{solve_oba, ObaInstance};
use crate::order::PartialOrder;
use crate::search::{run_plus_search, Search};
use crate::solution::{Infeasible, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrematureMode {
    /// `u ≺ v` with `v` in the clique or `|N(u)| < |N(v)|`.
    Mcs,
    /// `u ≺ v` with `v` in the clique or `N(u) ⊊ N(v)`.
    Lbfs,
}

/// Independent vertices that must be visited before some clique vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrematureSet {
    pub members: Vec<Vertex>,
    pub mode: PrematureMode,
    mask: FixedBitSet,
}

impl PrematureSet {
    pub fn contains(&self, v: Vertex) -> bool {
        self.mask.contains(v)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn compute_premature_set(g: &Graph, sp: &SplitPartition, pi: &PartialOrder, mode: PrematureMode) -> PrematureSet {
    let n = g.vertex_count();
    let mut mask = FixedBitSet::with_capacity(n);
    for (u, v) in pi.strict_pairs() {
        if sp.is_clique(u) || mask.contains(u) {
            continue;
        }
        let forced = sp.is_clique(v)
            || match mode {
                PrematureMode::Mcs => g.degree(u) < g.degree(v),
                PrematureMode::Lbfs => g.degree(u) < g.degree(v) && g.neighbor_set(u).is_subset(g.neighbor_set(v)),
            };
        if forced {
            mask.insert(u);
        }
    }
    PrematureSet {
        members: mask.ones().collect(),
        mode,
        mask,
    }
}

/// One step `(C_i, I_i)` of a nested decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedBlock {
    /// `C_i`: the clique vertices first reached by this block's neighborhood.
    pub clique: Vec<Vertex>,
    /// `I_i`: premature vertices with neighborhood `C_1 ∪ … ∪ C_i`.
    pub independent: Vec<Vertex>,
    /// The only member of `I_i` that precedes a vertex of `C_i`, if any.
    pub distinguished: Option<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedDecomposition {
    pub blocks: Vec<NestedBlock>,
    block_of: Vec<Option<usize>>,
}

impl NestedDecomposition {
    /// 0-based block index of `v`, if `v` is premature or adjacent to a premature vertex.
    pub fn block_of(&self, v: Vertex) -> Option<usize> {
        self.block_of[v]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// The first failed nested condition, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NestedViolation {
    /// `before ≺ clique`, `clique` in the clique, `before` neither clique nor premature.
    N1 { before: Vertex, clique: Vertex },
    /// Two premature vertices with incomparable neighborhoods.
    N2 { x: Vertex, y: Vertex },
    /// `before ≺ after` but `before` lies in a later block (or none).
    N3 { before: Vertex, after: Vertex },
    /// Two members of one block precede clique vertices of that block.
    N4 {
        block: usize,
        first: Vertex,
        second: Vertex,
    },
}

impl NestedViolation {
    pub fn condition(&self) -> &'static str {
        match self {
            Self::N1 { .. } => "N1",
            Self::N2 { .. } => "N2",
            Self::N3 { .. } => "N3",
            Self::N4 { .. } => "N4",
        }
    }

    pub fn describe(&self, g: &Graph) -> String {
        let n = |v: &Vertex| g.name(*v).to_string();
        match self {
            Self::N1 { before, clique } => {
                format!(
                    "(N1) {} precedes clique vertex {} but is not premature",
                    n(before),
                    n(clique)
                )
            }
            Self::N2 { x, y } => format!("(N2) neighborhoods of {} and {} are not nested", n(x), n(y)),
            Self::N3 { before, after } => {
                format!("(N3) {} precedes {} but belongs to a later block", n(before), n(after))
            }
            Self::N4 { block, first, second } => format!(
                "(N4) both {} and {} precede clique vertices of block {}",
                n(first),
                n(second),
                block + 1
            ),
        }
    }
}

impl fmt::Display for NestedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Checks conditions (N1) to (N4) in this order.
pub fn check_nested_property(
    g: &Graph,
    sp: &SplitPartition,
    pi: &PartialOrder,
    a: &PrematureSet,
) -> std::result::Result<NestedDecomposition, NestedViolation> {
    let n = g.vertex_count();
    let pairs = pi.strict_pairs();
    for &(x, y) in &pairs {
        if sp.is_clique(y) && !sp.is_clique(x) && !a.contains(x) {
            return Err(NestedViolation::N1 { before: x, clique: y });
        }
    }

    let mut chain = a.members.clone();
    chain.sort_by_key(|&v| (g.degree(v), v));
    let mut blocks: Vec<NestedBlock> = Vec::new();
    let mut block_of = vec![None; n];
    let mut seen = FixedBitSet::with_capacity(n);
    for (i, &x) in chain.iter().enumerate() {
        if i > 0 {
            let prev = chain[i - 1];
            if !g.neighbor_set(prev).is_subset(g.neighbor_set(x)) {
                return Err(NestedViolation::N2 { x: prev, y: x });
            }
            if g.degree(prev) == g.degree(x) {
                blocks.last_mut().unwrap().independent.push(x);
                block_of[x] = Some(blocks.len() - 1);
                continue;
            }
        }
        let fresh: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&c| !seen.contains(c)).collect();
        for &c in &fresh {
            seen.insert(c);
            block_of[c] = Some(blocks.len());
        }
        block_of[x] = Some(blocks.len());
        blocks.push(NestedBlock {
            clique: fresh,
            independent: vec![x],
            distinguished: None,
        });
    }
    for block in &mut blocks {
        block.independent.sort_unstable();
    }

    for &(x, y) in &pairs {
        if let Some(i) = block_of[y] {
            if !matches!(block_of[x], Some(j) if j <= i) {
                return Err(NestedViolation::N3 { before: x, after: y });
            }
        }
    }

    for (i, block) in blocks.iter_mut().enumerate() {
        let mut leaders = block
            .independent
            .iter()
            .copied()
            .filter(|&x| block.clique.iter().any(|&z| pi.less(x, z)));
        block.distinguished = leaders.next();
        if let (Some(first), Some(second)) = (block.distinguished, leaders.next()) {
            return Err(NestedViolation::N4 {
                block: i,
                first,
                second,
            });
        }
    }
    Ok(NestedDecomposition { blocks, block_of })
}

/// Closure of `pi` with the block order, clique-before-rest and
/// distinguished-first pairs.
pub fn nested_partial_order(
    g: &Graph,
    sp: &SplitPartition,
    pi: &PartialOrder,
    a: &PrematureSet,
    dec: &NestedDecomposition,
) -> Result<PartialOrder> {
    let mut pairs: Vec<(Vertex, Vertex)> = pi.generators().collect();
    // consecutive blocks, then the last block before everything else
    let members = |b: &NestedBlock| b.clique.iter().chain(&b.independent).copied().collect::<Vec<_>>();
    for w in dec.blocks.windows(2) {
        for x in members(&w[0]) {
            pairs.extend(members(&w[1]).into_iter().map(|y| (x, y)));
        }
    }
    if let Some(last) = dec.blocks.last() {
        let outside: Vec<Vertex> = g.vertices().filter(|&v| dec.block_of(v).is_none()).collect();
        for x in members(last) {
            pairs.extend(outside.iter().map(|&y| (x, y)));
        }
    }
    for &x in &sp.clique {
        pairs.extend(sp.independent.iter().filter(|&&y| !a.contains(y)).map(|&y| (x, y)));
    }
    for block in &dec.blocks {
        if let Some(x) = block.distinguished {
            pairs.extend(block.independent.iter().filter(|&&y| y != x).map(|&y| (x, y)));
        }
    }
    PartialOrder::new(g.vertex_count(), &pairs)
}

struct Prepared {
    sp: SplitPartition,
    a: PrematureSet,
    nested: PartialOrder,
}

fn prepare(g: &Graph, pi: &PartialOrder, mode: PrematureMode) -> Result<std::result::Result<Prepared, Infeasible>> {
    check_instance(g, pi)?;
    let sp = find_split_partition(g)?;
    let a = compute_premature_set(g, &sp, pi, mode);
    let dec = match check_nested_property(g, &sp, pi, &a) {
        Ok(dec) => dec,
        Err(v) => return Ok(Err(Infeasible::Nested(v))),
    };
    let nested = nested_partial_order(g, &sp, pi, &a, &dec)?;
    Ok(Ok(Prepared { sp, a, nested }))
}

/// An MCS ordering of split graph `g` extending `pi`.
pub fn solve_psop_mcs_split(g: &Graph, pi: &PartialOrder) -> Result<Solution> {
    let p = match prepare(g, pi, PrematureMode::Mcs)? {
        Ok(p) => p,
        Err(reason) => return Ok(Solution::Infeasible(reason)),
    };
    let rho = p.nested.topological_order();
    Ok(Solution::Found(run_plus_search(g, Search::Mcs, &rho)?))
}

/// The one-before-all instance on the clique whose orderings are the clique
/// orders of LBFS orderings extending `pi`.
pub fn build_lbfs_clique_relation(
    g: &Graph,
    sp: &SplitPartition,
    pi: &PartialOrder,
    a: &PrematureSet,
    nested: &PartialOrder,
) -> ObaInstance {
    let mut inst = ObaInstance::new(sp.clique.clone());
    let free = |v: Vertex| !sp.is_clique(v) && !a.contains(v);
    for (x, y) in pi.strict_pairs() {
        if free(x) && free(y) {
            let (nx, ny) = (g.neighbor_set(x), g.neighbor_set(y));
            inst.add_tuple(nx.difference(ny).collect(), ny.difference(nx).collect());
        }
    }
    for (x, y) in nested.strict_pairs() {
        if sp.is_clique(x) && sp.is_clique(y) {
            inst.add_tuple(vec![x], vec![y]);
        }
    }
    inst
}

/// An LBFS ordering of split graph `g` extending `pi`.
pub fn solve_psop_lbfs_split(g: &Graph, pi: &PartialOrder) -> Result<Solution> {
    let p = match prepare(g, pi, PrematureMode::Lbfs)? {
        Ok(p) => p,
        Err(reason) => return Ok(Solution::Infeasible(reason)),
    };
    let relation = build_lbfs_clique_relation(g, &p.sp, pi, &p.a, &p.nested);
    let Some(tau) = solve_oba(&relation)? else {
        return Ok(Solution::Infeasible(Infeasible::CliqueRelation));
    };
    let chain: Vec<_> = tau.windows(2).map(|w| (w[0], w[1])).collect();
    let rho = p.nested.extended(&chain)?.topological_order();
    Ok(Solution::Found(run_plus_search(g, Search::Lbfs, &rho)?))
}
