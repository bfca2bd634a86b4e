//! Vertex-minor containment up to isomorphism.
//!
//! If `H` is a vertex-minor of `G` on a vertex set avoiding `v`, then it is
//! a vertex-minor of `G - v`, `G * v - v`, or `G ∧ vw - v` for any fixed
//! neighbor `w` of `v`. The search walks the vertices of `G` in a fixed
//! order, deciding for each one whether it survives into `H` or is removed
//! through one of the three branches, and finally asks whether what is left
//! is locally equivalent to `H`. Keeping a vertex is tried before removing
//! it, and the removals in the order listed.

use std::collections::HashMap;

use super::orbit::{component_sizes, local_orbit, rank_profile};
use super::{apply_witness, lc, locally_equivalent, Step, VMWitness};
use crate::bitset::VertexSet;
use crate::caps::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::iso::are_isomorphic_with_limit;
use crate::graph::Graph;

struct Containment<'a> {
    h: &'a Graph,
    h_components: Vec<usize>,
    h_profile: Option<Vec<u32>>,
    caps: &'a SolverCaps,
    /// Source labels, highest degree first, ties by least label.
    order: Vec<usize>,
    cache: HashMap<Graph, Option<VMWitness>>,
}

impl Containment<'_> {
    /// Local complementations (in `g`'s own indices) making `g` isomorphic to `h`.
    fn leaf(&mut self, g: &Graph) -> Result<Option<VMWitness>> {
        if let Some(hit) = self.cache.get(g) {
            return Ok(hit.clone());
        }
        let plausible = component_sizes(g) == self.h_components
            && self
                .h_profile
                .as_ref()
                .is_none_or(|p| *p == rank_profile(g));
        let found = if plausible {
            locally_equivalent(g, self.h, self.caps)?.map(|e| e.witness)
        } else {
            None
        };
        self.cache.insert(g.clone(), found.clone());
        Ok(found)
    }

    /// `labels[i]` is the source label of vertex `i` of `g`; `order[pos..]`
    /// are the vertices not yet decided.
    fn search(
        &mut self,
        g: &Graph,
        labels: &[usize],
        pos: usize,
        steps: &mut Vec<Step>,
    ) -> Result<Option<VMWitness>> {
        let excess = g.n() - self.h.n();
        if excess == 0 {
            return Ok(self
                .leaf(g)?
                .map(|w| VMWitness::new(steps.clone()).then(&w.relabel(labels))));
        }
        if self.order.len() - pos < excess {
            return Ok(None);
        }
        let kept = g.n() - (self.order.len() - pos);
        if kept < self.h.n() {
            if let Some(found) = self.search(g, labels, pos + 1, steps)? {
                return Ok(Some(found));
            }
        }
        let label = self.order[pos];
        let v = labels
            .iter()
            .position(|&l| l == label)
            .expect("undecided vertices are present");
        let mut rest = labels.to_vec();
        rest.remove(v);

        let nbrs = g.neighbors(v);
        let mut branches: Vec<(Vec<Step>, Graph)> =
            vec![(vec![Step::del(label)], g.delete_vertex(v))];
        if let Some(w) = nbrs.first() {
            branches.push((
                vec![Step::lc(label), Step::del(label)],
                lc(g, v).delete_vertex(v),
            ));
            let piv = lc(&lc(&lc(g, v), w), v);
            branches.push((
                vec![
                    Step::lc(label),
                    Step::lc(labels[w]),
                    Step::lc(label),
                    Step::del(label),
                ],
                piv.delete_vertex(v),
            ));
        }
        for (extra, next) in branches {
            let mark = steps.len();
            steps.extend(extra);
            let found = self.search(&next, &rest, pos + 1, steps)?;
            steps.truncate(mark);
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Searches for local complementations and deletions turning `g` into a
/// graph isomorphic to `h`.
pub fn has_vertex_minor_isomorphic(
    g: &Graph,
    h: &Graph,
    caps: &SolverCaps,
) -> Result<Option<VMWitness>> {
    if h.n() > g.n() {
        return Err(Error::input(format!(
            "target has {} vertices but the source only {}",
            h.n(),
            g.n()
        )));
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Containment {
        h,
        h_components: component_sizes(h),
        h_profile: (h.n() <= 16).then(|| rank_profile(h)),
        caps,
        order,
        cache: HashMap::new(),
    };
    let labels: Vec<usize> = (0..g.n()).collect();
    let found = search.search(g, &labels, 0, &mut Vec::new())?;
    if let Some(w) = &found {
        let end = apply_witness(g, w)?;
        if are_isomorphic_with_limit(&end, h, caps.search_node_limit)?.is_none() {
            return Err(Error::witness(
                "vertex-minor witness does not replay to the target",
            ));
        }
    }
    Ok(found)
}

/// Reference decision procedure: enumerate the whole labeled orbit of `g`
/// and test every induced subgraph of the right order against `h`.
pub fn has_vertex_minor_exhaustive(g: &Graph, h: &Graph, caps: &SolverCaps) -> Result<bool> {
    if h.n() > g.n() {
        return Ok(false);
    }
    let orbit = local_orbit(g, caps.orbit_cap)?;
    if orbit.truncated {
        return Err(Error::resource("orbit exceeds the cap"));
    }
    for x in &orbit.graphs {
        for s in x
            .vertices()
            .subsets()
            .filter(|s: &VertexSet| s.len() == h.n())
        {
            let sub = x.induced(&s.to_vec());
            if are_isomorphic_with_limit(&sub, h, caps.search_node_limit)?.is_some() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate::{nonisomorphic_up_to, random_graph};
    use crate::graph::families::{complete, path, product, ProductKind};
    use rand::{Rng, SeedableRng};

    fn caps() -> SolverCaps {
        SolverCaps::default()
    }

    #[test]
    fn containment_examples() {
        let k1 = complete(1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let g = random_graph(7, 0.5, &mut rng);
        assert!(has_vertex_minor_isomorphic(&g, &k1, &caps())
            .unwrap()
            .is_some());
        let p4 = path(4).unwrap();
        let w = has_vertex_minor_isomorphic(&p4, &path(3).unwrap(), &caps())
            .unwrap()
            .unwrap();
        assert_eq!(w.steps.len(), 1);
        let k3 = complete(3).unwrap();
        let half = product(&k3, &k3, ProductKind::Half).unwrap();
        assert!(has_vertex_minor_isomorphic(&half, &p4, &caps())
            .unwrap()
            .is_some());
        // every vertex-minor of K_4 is complete, a star, or edgeless
        let k4 = complete(4).unwrap();
        assert!(has_vertex_minor_isomorphic(&k4, &path(3).unwrap(), &caps())
            .unwrap()
            .is_some());
        assert!(has_vertex_minor_isomorphic(
            &k4,
            &crate::graph::families::edgeless(2).unwrap(),
            &caps()
        )
        .unwrap()
        .is_some());
        assert!(has_vertex_minor_isomorphic(&k4, &p4, &caps())
            .unwrap()
            .is_none());
        assert!(has_vertex_minor_isomorphic(&k1, &p4, &caps()).is_err());
    }

    #[test]
    fn agrees_with_exhaustive_oracle() {
        let targets = nonisomorphic_up_to(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..60 {
            let g = random_graph(rng.gen_range(4..=6), rng.gen_range(0.2..0.8), &mut rng);
            let h = &targets[rng.gen_range(0..targets.len())];
            let fast = has_vertex_minor_isomorphic(&g, h, &caps()).unwrap();
            let slow = has_vertex_minor_exhaustive(&g, h, &caps()).unwrap();
            assert_eq!(fast.is_some(), slow, "{g:?} vs {h:?}");
        }
    }
}
