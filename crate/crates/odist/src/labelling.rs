//! Vertex- and arc-indexed label arrays.

use crate::automorphism::LabelTarget;
use crate::error::{invalid, Result};
use crate::graph::OrientedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelling {
    pub target: LabelTarget,
    /// Positive labels in 1..=r, one per vertex or arc in canonical order.
    pub labels: Vec<u32>,
    pub r: u32,
}

impl Labelling {
    pub fn vertices(labels: Vec<u32>, r: u32) -> Self {
        Labelling { target: LabelTarget::Vertices, labels, r }
    }

    pub fn arcs(labels: Vec<u32>, r: u32) -> Self {
        Labelling { target: LabelTarget::Arcs, labels, r }
    }

    pub fn constant_vertices(n: usize) -> Self {
        Labelling::vertices(vec![1; n], 1)
    }

    pub fn check_indexing(&self, og: &OrientedGraph) -> Result<()> {
        let want = match self.target {
            LabelTarget::Vertices => og.n,
            LabelTarget::Arcs => og.arcs.len(),
        };
        if self.labels.len() != want {
            return Err(invalid(format!(
                "labelling has {} entries, expected {want}",
                self.labels.len()
            )));
        }
        if self.labels.iter().any(|&l| l == 0 || l > self.r) {
            return Err(invalid("labels must lie in 1..=r"));
        }
        Ok(())
    }

    /// Proper means: endpoints of each arc get different labels (vertex
    /// case), or arcs sharing an endpoint get different labels (arc case).
    pub fn is_proper(&self, og: &OrientedGraph) -> bool {
        match self.target {
            LabelTarget::Vertices => og
                .arcs
                .iter()
                .all(|&(u, v)| self.labels[u] != self.labels[v]),
            LabelTarget::Arcs => {
                let m = og.arcs.len();
                for i in 0..m {
                    for j in i + 1..m {
                        let (a, b) = og.arcs[i];
                        let (c, d) = og.arcs[j];
                        if (a == c || a == d || b == c || b == d)
                            && self.labels[i] == self.labels[j]
                        {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    pub fn distinct_labels_used(&self) -> usize {
        let mut seen: Vec<u32> = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}
