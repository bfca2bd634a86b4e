//! Breadth-first search over local-equivalence classes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{lc, Step, VMWitness};
use crate::caps::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::iso::are_isomorphic_with_limit;
use crate::graph::Graph;
use crate::rank::cut_rank_unchecked;

/// Labeled graphs reachable from a start graph by local complementations,
/// in breadth-first order.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub graphs: Vec<Graph>,
    /// Predecessor and the vertex complemented to reach each graph.
    parents: Vec<Option<(usize, usize)>>,
    /// Set when the search stopped at the cap before closing the orbit.
    pub truncated: bool,
}

impl Orbit {
    /// Local complementations leading from the start graph to `graphs[i]`.
    pub fn witness(&self, mut i: usize) -> VMWitness {
        let mut steps = Vec::new();
        while let Some((p, v)) = self.parents[i] {
            steps.push(Step::lc(v));
            i = p;
        }
        steps.reverse();
        VMWitness::new(steps)
    }
}

/// Explores the orbit of `g` until `stop` accepts a graph or `cap` graphs
/// have been seen. Successors are generated by complementing at `0, 1, ...`
/// so the first accepted graph has a shortest witness, least in that order.
fn explore(
    g: &Graph,
    cap: usize,
    mut stop: impl FnMut(&Graph) -> Result<bool>,
) -> Result<(Orbit, Option<usize>)> {
    if cap == 0 {
        return Err(Error::input("orbit cap must be at least 1"));
    }
    let mut orbit = Orbit {
        graphs: vec![g.clone()],
        parents: vec![None],
        truncated: false,
    };
    if stop(g)? {
        return Ok((orbit, Some(0)));
    }
    let mut index: HashMap<Graph, usize> = HashMap::from([(g.clone(), 0)]);
    let mut head = 0;
    while head < orbit.graphs.len() {
        for v in 0..g.n() {
            let next = lc(&orbit.graphs[head], v);
            if index.contains_key(&next) {
                continue;
            }
            if orbit.graphs.len() == cap {
                orbit.truncated = true;
                return Ok((orbit, None));
            }
            let i = orbit.graphs.len();
            index.insert(next.clone(), i);
            orbit.graphs.push(next);
            orbit.parents.push(Some((head, v)));
            if stop(&orbit.graphs[i])? {
                return Ok((orbit, Some(i)));
            }
        }
        head += 1;
    }
    Ok((orbit, None))
}

/// The labeled local-equivalence class of `g`, truncated (and flagged) at
/// `cap` graphs.
pub fn local_orbit(g: &Graph, cap: usize) -> Result<Orbit> {
    Ok(explore(g, cap, |_| Ok(false))?.0)
}

/// Number of vertex subsets with each cut-rank value. Both local
/// complementation and relabeling preserve it.
pub fn rank_profile(g: &Graph) -> Vec<u32> {
    let mut profile = vec![0u32; g.n() / 2 + 1];
    for s in g.vertices().subsets() {
        profile[cut_rank_unchecked(g, s) as usize] += 1;
    }
    profile
}

/// Sorted component sizes; local complementation preserves components.
pub(crate) fn component_sizes(g: &Graph) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes
}

/// Local complementations turning `G` into a graph isomorphic to `H`, and
/// the isomorphism (`isomorphism[v]` is the vertex of `H` matched to `v`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalEquivalence {
    pub witness: VMWitness,
    pub isomorphism: Vec<usize>,
}

/// Decides whether some graph locally equivalent to `g` is isomorphic to `h`.
///
/// Returns `Ok(None)` only after closing the whole orbit; running into the
/// orbit cap first is a resource error.
pub fn locally_equivalent(
    g: &Graph,
    h: &Graph,
    caps: &SolverCaps,
) -> Result<Option<LocalEquivalence>> {
    if g.n() != h.n() {
        return Err(Error::input(format!(
            "local equivalence needs equal orders, got {} and {}",
            g.n(),
            h.n()
        )));
    }
    if component_sizes(g) != component_sizes(h) {
        return Ok(None);
    }
    if g.n() <= 16 && rank_profile(g) != rank_profile(h) {
        return Ok(None);
    }
    let (edges, degrees) = (h.edge_count(), h.degree_sequence());
    let mut iso = None;
    let (orbit, found) = explore(g, caps.orbit_cap, |x| {
        if x.edge_count() != edges || x.degree_sequence() != degrees {
            return Ok(false);
        }
        iso = are_isomorphic_with_limit(x, h, caps.search_node_limit)?;
        Ok(iso.is_some())
    })?;
    match found {
        Some(i) => Ok(Some(LocalEquivalence {
            witness: orbit.witness(i),
            isomorphism: iso.expect("set when found"),
        })),
        None if orbit.truncated => Err(Error::resource(format!(
            "local-equivalence orbit exceeds the cap of {} graphs",
            caps.orbit_cap
        ))),
        None => Ok(None),
    }
}

/// Local complementations turning `g` into exactly `h` (same labels).
pub fn locally_equivalent_labeled(
    g: &Graph,
    h: &Graph,
    caps: &SolverCaps,
) -> Result<Option<VMWitness>> {
    if g.n() != h.n() {
        return Err(Error::input("local equivalence needs equal orders"));
    }
    let (orbit, found) = explore(g, caps.orbit_cap, |x| Ok(x == h))?;
    match found {
        Some(i) => Ok(Some(orbit.witness(i))),
        None if orbit.truncated => Err(Error::resource(format!(
            "local-equivalence orbit exceeds the cap of {} graphs",
            caps.orbit_cap
        ))),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate::random_graph;
    use crate::graph::families::{complete, edgeless, path, product, ProductKind};
    use crate::graph::iso::is_isomorphism;
    use crate::vm::apply_witness;
    use rand::{Rng, SeedableRng};

    fn caps() -> SolverCaps {
        SolverCaps::default()
    }

    #[test]
    fn orbit_examples() {
        let k2 = complete(2).unwrap();
        let o = local_orbit(&k2, 100).unwrap();
        assert_eq!(o.graphs, vec![k2]);
        let k3 = complete(3).unwrap();
        let o = local_orbit(&k3, 100).unwrap();
        assert_eq!(o.graphs.len(), 4);
        assert_eq!(o.graphs.iter().filter(|g| g.edge_count() == 2).count(), 3);
        let p4 = path(4).unwrap();
        let o = local_orbit(&p4, 1000).unwrap();
        let cp4 = p4.complement();
        assert!(o
            .graphs
            .iter()
            .any(|g| are_isomorphic_with_limit(g, &cp4, 1000).unwrap().is_some()));
        for (i, g) in o.graphs.iter().enumerate() {
            assert_eq!(&apply_witness(&p4, &o.witness(i)).unwrap(), g);
        }
    }

    #[test]
    fn truncation_is_flagged() {
        let g = path(6).unwrap();
        let full = local_orbit(&g, 1_000_000).unwrap();
        assert!(!full.truncated);
        let cut = local_orbit(&g, 3).unwrap();
        assert!(cut.truncated);
        assert_eq!(cut.graphs.len(), 3);
        assert!(local_orbit(&g, 0).is_err());
        let tiny = SolverCaps {
            orbit_cap: 2,
            ..caps()
        };
        let other = lc(&lc(&lc(&g, 1), 2), 3);
        assert!(matches!(
            locally_equivalent(&g, &other, &tiny),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn equivalence_examples() {
        let p3 = path(3).unwrap();
        let k3 = complete(3).unwrap();
        let eq = locally_equivalent(&p3, &k3, &caps()).unwrap().unwrap();
        assert_eq!(eq.witness, VMWitness::new(vec![Step::lc(1)]));
        let s2 = edgeless(2).unwrap();
        let half = product(&s2, &s2, ProductKind::Half).unwrap();
        let eq = locally_equivalent(&half, &path(4).unwrap(), &caps())
            .unwrap()
            .unwrap();
        assert!(eq.witness.steps.is_empty());
        let s3 = edgeless(3).unwrap();
        let half3 = product(&s3, &s3, ProductKind::Half).unwrap();
        let p6 = path(6).unwrap();
        let eq = locally_equivalent(&half3, &p6, &caps()).unwrap().unwrap();
        let end = apply_witness(&half3, &eq.witness).unwrap();
        assert!(is_isomorphism(&end, &p6, &eq.isomorphism));
        // K_3 and P_3 are equivalent, K_3 and S_3 are not
        assert!(locally_equivalent(&k3, &s3, &caps()).unwrap().is_none());
        assert!(locally_equivalent(&k3, &path(4).unwrap(), &caps()).is_err());
    }

    #[test]
    fn profile_is_lc_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let n = rng.gen_range(1..=8);
            let g = random_graph(n, 0.5, &mut rng);
            let v = rng.gen_range(0..n);
            assert_eq!(rank_profile(&g), rank_profile(&lc(&g, v)));
        }
    }

    #[test]
    fn equivalence_is_symmetric() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let n = rng.gen_range(2..=6);
            let g = random_graph(n, 0.5, &mut rng);
            let h = random_graph(n, 0.5, &mut rng);
            let a = locally_equivalent(&g, &h, &caps()).unwrap().is_some();
            let b = locally_equivalent(&h, &g, &caps()).unwrap().is_some();
            assert_eq!(a, b);
            assert!(locally_equivalent(&g, &g, &caps()).unwrap().is_some());
            let labeled = locally_equivalent_labeled(&g, &h, &caps()).unwrap();
            if let Some(w) = labeled {
                assert_eq!(apply_witness(&g, &w).unwrap(), h);
                assert!(a);
            }
        }
    }
}
