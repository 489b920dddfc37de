//! One-before-all orderings.
//!
//! An instance is a ground set `M`, a family `Q` of subsets of `M` and a
//! relation `R` on `Q`. An ordering of `M` fulfils `(A, B) ∈ R` if `B = ∅`
//! or some element of `A` precedes every element of `B`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::order::PartialOrder;

/// A one-before-all instance.
///
/// Elements are arbitrary ids (usually vertex ids); `ground` lists them in
/// canonical order. Family members are referenced by index, so equal sets
/// added twice stay distinct.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ObaInstance {
    pub ground: Vec<usize>,
    pub family: Vec<Vec<usize>>,
    pub relation: Vec<(usize, usize)>,
}

impl ObaInstance {
    /// An instance over `ground` with no family and no relation.
    pub fn new(mut ground: Vec<usize>) -> Self {
        ground.sort_unstable();
        ground.dedup();
        Self {
            ground,
            family: Vec::new(),
            relation: Vec::new(),
        }
    }

    /// Adds a family member and returns its index.
    pub fn add_set(&mut self, mut set: Vec<usize>) -> usize {
        set.sort_unstable();
        set.dedup();
        self.family.push(set);
        self.family.len() - 1
    }

    /// Adds two fresh family members and relates them.
    pub fn add_tuple(&mut self, a: Vec<usize>, b: Vec<usize>) {
        let a = self.add_set(a);
        let b = self.add_set(b);
        self.relation.push((a, b));
    }

    /// The relation as pairs of sets.
    pub fn tuples(&self) -> impl Iterator<Item = (&[usize], &[usize])> + '_ {
        self.relation
            .iter()
            .map(|&(a, b)| (self.family[a].as_slice(), self.family[b].as_slice()))
    }

    pub fn validate(&self) -> Result<()> {
        let local = self.local_index();
        if local.len() != self.ground.len() {
            return Err(Error::InvalidObaInstance("ground set has repeated elements".into()));
        }
        for (i, set) in self.family.iter().enumerate() {
            if let Some(x) = set.iter().find(|x| !local.contains_key(x)) {
                return Err(Error::InvalidObaInstance(format!(
                    "member {i} contains {x}, which is not in the ground set"
                )));
            }
        }
        for &(a, b) in &self.relation {
            if a >= self.family.len() || b >= self.family.len() {
                return Err(Error::InvalidObaInstance(format!(
                    "tuple ({a}, {b}) refers to a missing member"
                )));
            }
        }
        Ok(())
    }

    fn local_index(&self) -> HashMap<usize, usize> {
        self.ground.iter().enumerate().map(|(i, &x)| (x, i)).collect()
    }
}

/// Finds a one-before-all ordering of the ground set, or `None`.
///
/// Among the elements that may come next, the one earliest in `ground` is
/// taken.
pub fn solve_oba(inst: &ObaInstance) -> Result<Option<Vec<usize>>> {
    inst.validate()?;
    let local = inst.local_index();
    let m = inst.ground.len();
    let q = inst.family.len();
    let members: Vec<Vec<usize>> = inst
        .family
        .iter()
        .map(|s| s.iter().map(|x| local[x]).collect())
        .collect();

    let mut r = vec![0usize; q];
    let mut out_tuples = vec![Vec::new(); q];
    for &(a, b) in &inst.relation {
        r[b] += 1;
        out_tuples[a].push(b);
    }
    let mut t = vec![0usize; m];
    let mut containing = vec![Vec::new(); m];
    for (a, set) in members.iter().enumerate() {
        for &x in set {
            containing[x].push(a);
            if r[a] > 0 {
                t[x] += 1;
            }
        }
    }

    let mut ready: BinaryHeap<Reverse<usize>> = (0..m).filter(|&x| t[x] == 0).map(Reverse).collect();
    let mut retired = vec![false; q];
    let mut sigma = Vec::with_capacity(m);
    while let Some(Reverse(x)) = ready.pop() {
        sigma.push(inst.ground[x]);
        for &a in &containing[x] {
            if std::mem::replace(&mut retired[a], true) {
                continue;
            }
            for &b in &out_tuples[a] {
                r[b] -= 1;
                if r[b] == 0 {
                    for &y in &members[b] {
                        t[y] -= 1;
                        if t[y] == 0 {
                            ready.push(Reverse(y));
                        }
                    }
                }
            }
        }
    }
    Ok((sigma.len() == m).then_some(sigma))
}

/// Whether `sigma`, an ordering of the ground set, is one-before-all.
pub fn check_oba(sigma: &[usize], inst: &ObaInstance) -> Result<bool> {
    inst.validate()?;
    let local = inst.local_index();
    let mut pos = vec![usize::MAX; inst.ground.len()];
    for (i, x) in sigma.iter().enumerate() {
        match local.get(x) {
            Some(&l) if pos[l] == usize::MAX => pos[l] = i,
            _ => {
                return Err(Error::NotPermutation(format!(
                    "{x} is repeated or not in the ground set"
                )))
            }
        }
    }
    if sigma.len() != inst.ground.len() {
        return Err(Error::UniverseMismatch {
            expected: inst.ground.len(),
            found: sigma.len(),
        });
    }
    let first = |set: &[usize]| set.iter().map(|x| pos[local[x]]).min();
    Ok(inst.tuples().all(|(a, b)| match (first(a), first(b)) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(i), Some(j)) => i < j,
    }))
}

/// Encodes `pi` so that one-before-all orderings are its linear extensions.
pub fn encode_partial_order_as_oba(pi: &PartialOrder) -> ObaInstance {
    let n = pi.universe_size();
    let mut inst = ObaInstance::new((0..n).collect());
    for x in 0..n {
        inst.add_set(vec![x]);
    }
    inst.relation = pi.strict_pairs();
    inst
}
