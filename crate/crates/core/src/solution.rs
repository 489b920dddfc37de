use std::fmt;

use crate::graph::{Graph, Vertex};
use crate::ordering::Ordering;
use crate::split::NestedViolation;

/// Outcome of a partial search order solver on a well-formed instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Found(Ordering),
    Infeasible(Infeasible),
}

impl Solution {
    pub fn is_found(&self) -> bool {
        matches!(self, Self::Found(_))
    }

    pub fn ordering(&self) -> Option<&Ordering> {
        match self {
            Self::Found(o) => Some(o),
            Self::Infeasible(_) => None,
        }
    }

    pub fn into_ordering(self) -> Option<Ordering> {
        match self {
            Self::Found(o) => Some(o),
            Self::Infeasible(_) => None,
        }
    }
}

/// Why no search ordering extends the given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasible {
    /// The requested start vertex has a strict predecessor.
    RootNotMinimal {
        root: Vertex,
        predecessor: Vertex,
    },
    /// The greedy frontier emptied after `placed` vertices.
    Stuck {
        placed: usize,
    },
    /// `before ≺ after` but `before` lies in a deeper BFS layer.
    CrossLayer {
        before: Vertex,
        after: Vertex,
    },
    /// The one-before-all instance of a BFS layer has no ordering.
    LayerRelation {
        layer: usize,
    },
    Nested(NestedViolation),
    /// The one-before-all instance on the clique has no ordering.
    CliqueRelation,
    /// No start vertex admits an ordering.
    NoRoot,
    /// Exhaustive search found nothing.
    Exhausted,
}

impl Infeasible {
    /// Human-readable reason using vertex names from `g`.
    pub fn describe(&self, g: &Graph) -> String {
        let n = |v: &Vertex| g.name(*v).to_string();
        match self {
            Self::RootNotMinimal { root, predecessor } => {
                format!("start vertex {} is preceded by {}", n(root), n(predecessor))
            }
            Self::Stuck { placed } => format!("order cannot be linearized after {placed} vertices"),
            Self::CrossLayer { before, after } => {
                format!("{} must precede {} but lies in a deeper layer", n(before), n(after))
            }
            Self::LayerRelation { layer } => format!("no one-before-all ordering for layer {layer}"),
            Self::Nested(v) => format!("nested property violated: {}", v.describe(g)),
            Self::CliqueRelation => "no one-before-all ordering for the clique relation".to_string(),
            Self::NoRoot => "no start vertex admits an extending ordering".to_string(),
            Self::Exhausted => "no search ordering extends the order".to_string(),
        }
    }
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}
