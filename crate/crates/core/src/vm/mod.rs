//! Local complementation, vertex-minors, and twin reduction.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::twins::twin_classes;
use crate::graph::Graph;

mod minor;
mod orbit;

pub use minor::{has_vertex_minor_exhaustive, has_vertex_minor_isomorphic};
pub use orbit::{
    local_orbit, locally_equivalent, locally_equivalent_labeled, rank_profile, LocalEquivalence,
    Orbit,
};

/// `G * v`: complements the subgraph induced on `N(v)`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    check_vertex(g, v)?;
    Ok(lc(g, v))
}

pub(crate) fn lc(g: &Graph, v: usize) -> Graph {
    let mut out = g.clone();
    out.toggle_within(g.neighbors(v));
    out
}

/// `G ∧ uv = G * u * v * u` for an edge `uv`.
pub fn pivot(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if !g.has_edge(u, v) {
        return Err(Error::input(format!(
            "pivot needs an edge, but {u}{v} is not one"
        )));
    }
    Ok(lc(&lc(&lc(g, u), v), u))
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::input(format!("vertex {v} outside 0..{}", g.n())));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Lc,
    Del,
}

/// One step of a witness; `v` is a label of the source graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub op: Op,
    pub v: usize,
}

impl Step {
    pub fn lc(v: usize) -> Self {
        Step { op: Op::Lc, v }
    }

    pub fn del(v: usize) -> Self {
        Step { op: Op::Del, v }
    }
}

/// A replayable sequence of local complementations and deletions.
///
/// Vertices keep the labels they had in the source graph for the whole
/// sequence, so deleting vertex 0 does not rename vertex 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VMWitness {
    pub steps: Vec<Step>,
}

impl VMWitness {
    pub fn new(steps: Vec<Step>) -> Self {
        VMWitness { steps }
    }

    pub fn is_local(&self) -> bool {
        self.steps.iter().all(|s| s.op == Op::Lc)
    }

    /// Rewrites every step label through `labels` (index to label).
    pub fn relabel(&self, labels: &[usize]) -> VMWitness {
        VMWitness::new(
            self.steps
                .iter()
                .map(|s| Step {
                    op: s.op,
                    v: labels[s.v],
                })
                .collect(),
        )
    }

    pub fn then(mut self, other: &VMWitness) -> VMWitness {
        self.steps.extend_from_slice(&other.steps);
        self
    }
}

/// Replays `w` on `g`.
pub fn apply_witness(g: &Graph, w: &VMWitness) -> Result<Graph> {
    Ok(apply_witness_labeled(g, w)?.0)
}

/// Replays `w` on `g`, also returning the source label of each surviving
/// vertex (in order).
pub fn apply_witness_labeled(g: &Graph, w: &VMWitness) -> Result<(Graph, Vec<usize>)> {
    let mut cur = g.clone();
    let mut labels: Vec<usize> = (0..g.n()).collect();
    for (i, step) in w.steps.iter().enumerate() {
        let pos = labels.iter().position(|&l| l == step.v).ok_or_else(|| {
            Error::witness(format!(
                "step {i} uses vertex {} which is not present",
                step.v
            ))
        })?;
        match step.op {
            Op::Lc => cur = lc(&cur, pos),
            Op::Del => {
                cur = cur.delete_vertex(pos);
                labels.remove(pos);
            }
        }
    }
    Ok((cur, labels))
}

/// Least member of the first twin class (by least vertex) with three or
/// more members.
pub fn triple_twin_vertex(g: &Graph) -> Option<usize> {
    twin_classes(g)
        .into_iter()
        .find(|c| c.len() >= 3)
        .and_then(VertexSet::first)
}

/// Deletes vertices until every twin class has at most two members.
pub fn reduce_triple_twin(g: &Graph) -> Graph {
    let mut cur = g.clone();
    while let Some(v) = triple_twin_vertex(&cur) {
        cur = cur.delete_vertex(v);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::graph::enumerate::random_graph;
    use crate::graph::families::{complete, path, star};
    use rand::{Rng, SeedableRng};

    #[test]
    fn lc_examples() {
        let k3 = complete(3).unwrap();
        for v in 0..3 {
            let g = local_complement(&k3, v).unwrap();
            assert_eq!(g.edge_count(), 2);
            assert_eq!(g.degree(v), 2);
        }
        assert_eq!(local_complement(&path(3).unwrap(), 1).unwrap(), k3);
        assert!(local_complement(&k3, 3).is_err());
    }

    #[test]
    fn lc_is_an_involution() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(n, 0.5, &mut rng);
            let v = rng.gen_range(0..n);
            assert_eq!(lc(&lc(&g, v), v), g);
        }
    }

    #[test]
    fn pivot_is_symmetric() {
        assert_eq!(
            pivot(&complete(2).unwrap(), 0, 1).unwrap(),
            complete(2).unwrap()
        );
        let p3 = path(3).unwrap();
        assert_eq!(pivot(&p3, 0, 1).unwrap(), lc(&lc(&lc(&p3, 0), 1), 0));
        assert!(pivot(&p3, 0, 2).is_err());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let g = random_graph(rng.gen_range(2..=9), 0.5, &mut rng);
            for (u, v) in g.edges() {
                assert_eq!(pivot(&g, u, v).unwrap(), pivot(&g, v, u).unwrap());
            }
        }
    }

    #[test]
    fn witness_replay() {
        let p3 = path(3).unwrap();
        assert_eq!(apply_witness(&p3, &VMWitness::default()).unwrap(), p3);
        let twice = VMWitness::new(vec![Step::lc(1), Step::lc(1)]);
        assert_eq!(apply_witness(&p3, &twice).unwrap(), p3);
        let g = apply_witness(&p3, &VMWitness::new(vec![Step::del(0)])).unwrap();
        assert_eq!(g, complete(2).unwrap());
        // labels are stable: after deleting 0, vertex 2 is still called 2
        let w = VMWitness::new(vec![Step::del(0), Step::del(2)]);
        let (g, labels) = apply_witness_labeled(&p3, &w).unwrap();
        assert_eq!((g.n(), labels), (1, vec![1]));
        let bad = VMWitness::new(vec![Step::del(0), Step::lc(0)]);
        assert!(matches!(apply_witness(&p3, &bad), Err(Error::Witness(_))));
    }

    #[test]
    fn witness_json() {
        let w = VMWitness::new(vec![Step::lc(1), Step::del(0)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"[{"op":"lc","v":1},{"op":"del","v":0}]"#);
        assert_eq!(serde_json::from_str::<VMWitness>(&s).unwrap(), w);
    }

    #[test]
    fn triple_twins() {
        assert_eq!(
            reduce_triple_twin(&complete(3).unwrap()),
            complete(2).unwrap()
        );
        assert_eq!(
            reduce_triple_twin(&complete(6).unwrap()),
            complete(2).unwrap()
        );
        let k13 = star(3).unwrap();
        let r = reduce_triple_twin(&k13);
        assert!(are_isomorphic(&r, &path(3).unwrap()).unwrap().is_some());
        assert_eq!(triple_twin_vertex(&k13), Some(1));
        let p4 = path(4).unwrap();
        assert_eq!(reduce_triple_twin(&p4), p4);
    }
}
