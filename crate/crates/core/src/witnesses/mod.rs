//! Executable versions of the explicit constructions: induced paths in the
//! two case structures, subdivided stars from the four products, the
//! half-graph reduction for asymmetric link matrices, and the blown-product
//! reductions. Every construction returns data that the checkers in
//! [`crate::verify`] re-validate from scratch.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::families::{complete, edgeless};
use crate::graph::{Graph, ProductKind};
use crate::vm::{apply_witness_labeled, VMWitness};

mod blown;
mod cases;
mod halfgraph;
mod t2n;

pub use blown::{
    asym_halfgraph, blown_reduce_d1, blown_reduce_offdiag, offdiag_chain, AsymHalfgraph, Chain,
    Reduction,
};
pub use cases::{
    build_case_structure, check_case_structure, lemma_first1_path, lemma_first2_path, CaseShape,
    CaseStructure, First2,
};
pub use halfgraph::{halfgraph_equiv_check, HalfgraphCheck};
pub use t2n::{t2n_source, t2n_witness, T2n};

/// The four products `K_m ⊙ K_m` / `K_m ⊙ S_m` with `⊙` a matching or an
/// anti-matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HKind {
    pub kind: ProductKind,
    /// bottom side is a clique (`K_m`) rather than edgeless (`S_m`)
    pub bottom_clique: bool,
}

impl HKind {
    pub const ALL: [HKind; 4] = [
        HKind {
            kind: ProductKind::Match,
            bottom_clique: true,
        },
        HKind {
            kind: ProductKind::Match,
            bottom_clique: false,
        },
        HKind {
            kind: ProductKind::Antimatch,
            bottom_clique: true,
        },
        HKind {
            kind: ProductKind::Antimatch,
            bottom_clique: false,
        },
    ];

    pub fn new(kind: ProductKind, bottom_clique: bool) -> Result<Self> {
        if kind == ProductKind::Half {
            return Err(Error::input(
                "only matching and anti-matching products are used here",
            ));
        }
        Ok(HKind {
            kind,
            bottom_clique,
        })
    }

    /// Top side `K_m` and the bottom side.
    pub fn sides(self, m: usize) -> Result<(Graph, Graph)> {
        let bottom = if self.bottom_clique {
            complete(m)?
        } else {
            edgeless(m)?
        };
        Ok((complete(m)?, bottom))
    }

    pub fn name(self) -> String {
        let op = match self.kind {
            ProductKind::Match => "match",
            _ => "antimatch",
        };
        format!("K {op} {}", if self.bottom_clique { "K" } else { "S" })
    }
}

/// A graph obtained by replaying a witness, addressed by source labels.
pub(crate) struct Replayed {
    pub graph: Graph,
    pub labels: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Replayed {
    pub fn new(source: &Graph, w: &VMWitness) -> Result<Self> {
        let (graph, labels) = apply_witness_labeled(source, w)?;
        let mut position = vec![None; source.n()];
        for (i, &l) in labels.iter().enumerate() {
            position[l] = Some(i);
        }
        Ok(Replayed {
            graph,
            labels,
            position,
        })
    }

    pub fn index(&self, label: usize) -> Result<usize> {
        self.position
            .get(label)
            .copied()
            .flatten()
            .ok_or_else(|| Error::witness(format!("vertex {label} was deleted")))
    }

    /// Neighbors as source labels, ascending.
    pub fn neighbors(&self, label: usize) -> Result<Vec<usize>> {
        let i = self.index(label)?;
        Ok(self
            .graph
            .neighbors(i)
            .iter()
            .map(|j| self.labels[j])
            .collect())
    }

    /// Induced subgraph on the given source labels, in that order.
    pub fn induced(&self, labels: &[usize]) -> Result<Graph> {
        let idx = labels
            .iter()
            .map(|&l| self.index(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.graph.induced(&idx))
    }
}
