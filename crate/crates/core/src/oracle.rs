//! Exhaustive deciders for small instances.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::generic::{check_instance, root_check};
use crate::graph::{Graph, Vertex};
use crate::oba::{check_oba, ObaInstance};
use crate::order::PartialOrder;
use crate::search::{LabelState, Search};
use crate::solution::{Infeasible, Solution};

pub const DEFAULT_PSOP_CAP: usize = 10;
pub const DEFAULT_OBA_CAP: usize = 8;

/// The lexicographically first `search` ordering extending `pi`, optionally
/// starting at `root`. Refuses graphs with more than [`DEFAULT_PSOP_CAP`] vertices.
pub fn brute_force_psop(g: &Graph, search: Search, pi: &PartialOrder, root: Option<Vertex>) -> Result<Solution> {
    brute_force_psop_capped(g, search, pi, root, DEFAULT_PSOP_CAP)
}

pub fn brute_force_psop_capped(
    g: &Graph,
    search: Search,
    pi: &PartialOrder,
    root: Option<Vertex>,
    cap: usize,
) -> Result<Solution> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::SizeGuard { n, cap });
    }
    check_instance(g, pi)?;
    let mut dfs = Dfs {
        pi,
        remaining: (0..n).map(|v| pi.generator_in_degree(v)).collect(),
        failed: HashSet::new(),
    };
    let mut state = LabelState::new(g, search);
    if let Some(r) = root {
        g.check_vertex(r)?;
        if let Some(reason) = root_check(pi, r) {
            return Ok(Solution::Infeasible(reason));
        }
        dfs.place(&mut state, r);
    }
    Ok(match dfs.expand(state) {
        Some(done) => Solution::Found(done.into_ordering()),
        None => Solution::Infeasible(Infeasible::Exhausted),
    })
}

struct Dfs<'p> {
    pi: &'p PartialOrder,
    remaining: Vec<usize>,
    failed: HashSet<(FixedBitSet, Vec<u32>)>,
}

impl Dfs<'_> {
    fn place(&mut self, state: &mut LabelState<'_>, v: Vertex) {
        state.visit(v);
        for &w in self.pi.generator_successors(v) {
            self.remaining[w] -= 1;
        }
    }

    fn unplace(&mut self, v: Vertex) {
        for &w in self.pi.generator_successors(v) {
            self.remaining[w] += 1;
        }
    }

    fn expand<'g>(&mut self, state: LabelState<'g>) -> Option<LabelState<'g>> {
        if state.is_done() {
            return Some(state);
        }
        let key = state.state_key();
        if self.failed.contains(&key) {
            return None;
        }
        for v in state.eligible() {
            if self.remaining[v] > 0 {
                continue;
            }
            let mut next = state.clone();
            self.place(&mut next, v);
            let result = self.expand(next);
            self.unplace(v);
            if result.is_some() {
                return result;
            }
        }
        self.failed.insert(key);
        None
    }
}

/// The lexicographically first one-before-all ordering of `inst`'s ground
/// set. Refuses ground sets larger than [`DEFAULT_OBA_CAP`].
pub fn brute_force_oba(inst: &ObaInstance) -> Result<Option<Vec<usize>>> {
    brute_force_oba_capped(inst, DEFAULT_OBA_CAP)
}

pub fn brute_force_oba_capped(inst: &ObaInstance, cap: usize) -> Result<Option<Vec<usize>>> {
    inst.validate()?;
    let m = inst.ground.len();
    if m > cap {
        return Err(Error::SizeGuard { n: m, cap });
    }
    let local: HashMap<usize, usize> = inst.ground.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let tuples: Vec<(Vec<usize>, Vec<usize>)> = inst
        .tuples()
        .filter(|(_, b)| !b.is_empty())
        .map(|(a, b)| {
            (
                a.iter().map(|x| local[x]).collect(),
                b.iter().map(|x| local[x]).collect(),
            )
        })
        .collect();
    let mut perm = Vec::with_capacity(m);
    let mut used = vec![false; m];
    if permute(&tuples, &mut perm, &mut used) {
        let sigma: Vec<usize> = perm.iter().map(|&i| inst.ground[i]).collect();
        debug_assert!(check_oba(&sigma, inst).unwrap());
        Ok(Some(sigma))
    } else {
        Ok(None)
    }
}

/// Extends `perm` in lexicographic order; a prefix dies as soon as some
/// target element is placed before every element of its source.
fn permute(tuples: &[(Vec<usize>, Vec<usize>)], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if perm.len() == used.len() {
        return true;
    }
    for x in 0..used.len() {
        if used[x] {
            continue;
        }
        let violates = tuples
            .iter()
            .any(|(a, b)| b.contains(&x) && !a.iter().any(|y| used[*y]));
        if violates {
            continue;
        }
        used[x] = true;
        perm.push(x);
        if permute(tuples, perm, used) {
            return true;
        }
        perm.pop();
        used[x] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, ids, named_order};
    use crate::generate;
    use crate::ordering::Ordering;
    use crate::search::{enumerate_search_orderings, is_search_ordering};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn split_example_orders() {
        let g = fixtures::fig1();
        let pi = fixtures::fig1_order();
        let s = brute_force_psop(&g, Search::Mns, &pi, None).unwrap();
        let sigma = s.into_ordering().unwrap();
        assert!(is_search_ordering(&g, Search::Mns, &sigma).unwrap());
        assert!(pi.is_linear_extension(&sigma).unwrap());
        let witness = Ordering::new(ids(&g, &["f", "a", "b", "c", "e", "g", "d"]), 7).unwrap();
        assert!(is_search_ordering(&g, Search::Mns, &witness).unwrap());
        assert!(pi.is_linear_extension(&witness).unwrap());

        for s in [Search::Mcs, Search::Lbfs] {
            assert_eq!(
                brute_force_psop(&g, s, &pi, None).unwrap(),
                Solution::Infeasible(Infeasible::Exhausted)
            );
        }
    }

    #[test]
    fn rooted_and_guarded() {
        let p3 = fixtures::p3();
        let pi = named_order(&p3, &[("c", "b")]);
        assert_eq!(
            brute_force_psop(&p3, Search::Gs, &pi, Some(0)).unwrap(),
            Solution::Infeasible(Infeasible::Exhausted)
        );
        assert!(matches!(
            brute_force_psop(&p3, Search::Gs, &pi, Some(1)).unwrap(),
            Solution::Infeasible(Infeasible::RootNotMinimal { .. })
        ));
        let big = fixtures::path(11);
        assert_eq!(
            brute_force_psop(&big, Search::Gs, &PartialOrder::empty(11), None),
            Err(Error::SizeGuard { n: 11, cap: 10 })
        );
    }

    #[test]
    fn oba_examples() {
        let mut inst = ObaInstance::new(vec![0, 1, 2]);
        assert_eq!(brute_force_oba(&inst).unwrap(), Some(vec![0, 1, 2]));
        inst.add_tuple(vec![0], vec![1, 2]);
        assert_eq!(brute_force_oba(&inst).unwrap(), Some(vec![0, 1, 2]));
        inst.add_tuple(vec![1], vec![0, 2]);
        assert_eq!(brute_force_oba(&inst).unwrap(), None);
        let inst = ObaInstance::new((0..9).collect());
        assert!(matches!(brute_force_oba(&inst), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn agrees_with_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..150 {
            let n = rng.gen_range(1..=6);
            let g = generate::random_connected_graph(&mut rng, n, 0.35);
            let k = rng.gen_range(0..4);
            let pi = generate::random_order(&mut rng, n, k);
            for s in Search::ALL {
                let all = enumerate_search_orderings(&g, s, None, usize::MAX).unwrap().orderings;
                let first = all.iter().find(|o| pi.is_linear_extension(o).unwrap());
                let got = brute_force_psop(&g, s, &pi, None).unwrap();
                assert_eq!(got.ordering(), first, "{s} on {g:?} with {pi:?}");
            }
        }
    }
}
