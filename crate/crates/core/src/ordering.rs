use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A permutation of `0..n` together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    seq: Vec<Vertex>,
    pos: Vec<usize>,
}

impl Ordering {
    /// Checks that `seq` is a permutation of `0..n`.
    pub fn new(seq: Vec<Vertex>, n: usize) -> Result<Self> {
        if seq.len() != n {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: seq.len(),
            });
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::NotPermutation(format!("element {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::NotPermutation(format!("element {v} repeated")));
            }
            pos[v] = i;
        }
        Ok(Self { seq, pos })
    }

    /// `0, 1, ..., n-1`.
    pub fn identity(n: usize) -> Self {
        Self {
            seq: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    /// Parses vertex names against `g`.
    pub fn from_names<S: AsRef<str>>(g: &Graph, names: &[S]) -> Result<Self> {
        let seq = names
            .iter()
            .map(|s| {
                g.vertex(s.as_ref())
                    .ok_or_else(|| Error::NotPermutation(format!("unknown vertex {:?}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(seq, g.vertex_count())
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.seq
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    pub fn before(&self, u: Vertex, v: Vertex) -> bool {
        self.pos[u] < self.pos[v]
    }

    pub fn first(&self) -> Option<Vertex> {
        self.seq.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.seq.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.seq.iter().copied()
    }

    /// Vertex names joined by single spaces.
    pub fn display_names(&self, g: &Graph) -> String {
        self.seq.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Debug for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.seq).finish()
    }
}

impl std::ops::Index<usize> for Ordering {
    type Output = Vertex;

    fn index(&self, i: usize) -> &Vertex {
        &self.seq[i]
    }
}
