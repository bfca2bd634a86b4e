//! Orderings between parameters, checked on every graph with at most 7
//! vertices.

use rankbrittle::graph::enumerate::nonisomorphic_up_to;
use rankbrittle::rank::{lrw_exact, rank_depth_exact, rbrit_exact};
use rankbrittle::SolverCaps;
use rayon::prelude::*;

#[test]
fn parameter_orderings_on_all_small_graphs() {
    let caps = SolverCaps::default();
    let graphs: Vec<_> = nonisomorphic_up_to(7)
        .into_iter()
        .filter(|g| g.n() >= 2)
        .collect();
    graphs.par_iter().for_each(|g| {
        let r: Vec<u32> = (1..=3)
            .map(|d| rbrit_exact(g, d, &caps).unwrap().0)
            .collect();
        let (rd, _) = rank_depth_exact(g, &caps).unwrap();
        let (lrw, _) = lrw_exact(g, &caps).unwrap();
        assert!(r[0] >= r[1] && r[1] >= r[2], "{g:?}: {r:?}");
        for (d, &w) in r.iter().enumerate() {
            assert!(
                rd <= w.max(d as u32 + 1),
                "{g:?}: rd {rd} vs rbrit_{} = {w}",
                d + 1
            );
        }
        assert!(lrw <= rd * rd, "{g:?}: lrw {lrw} > rd^2 = {}", rd * rd);
    });
}
