use serde::{Deserialize, Serialize};

use super::{cut_rank_unchecked, Decomposition};
use crate::bitset::VertexSet;
use crate::caps::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex ordering together with its width (max cut-rank over proper
/// nonempty prefixes; `0` for a single vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearLayout {
    pub order: Vec<usize>,
    pub width: u32,
}

pub fn layout_width(g: &Graph, order: &[usize]) -> Result<u32> {
    let as_set: VertexSet = order.iter().copied().filter(|&v| v < 64).collect();
    if order.len() != g.n() || as_set != g.vertices() {
        return Err(Error::input("layout is not a permutation of the vertices"));
    }
    let mut prefix = VertexSet::EMPTY;
    let mut width = 0;
    for &v in order.iter().take(g.n().saturating_sub(1)) {
        prefix.insert(v);
        width = width.max(cut_rank_unchecked(g, prefix));
    }
    Ok(width)
}

impl LinearLayout {
    pub fn from_order(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let width = layout_width(g, &order)?;
        Ok(LinearLayout { order, width })
    }
}

/// Exact linear rank-width by dynamic programming over vertex subsets:
/// `best(S) = max(ρ(S), min_{v ∈ S} best(S \ v))`, where `best(S)` is the
/// least width of an ordering of `S` used as a prefix.
///
/// Among optimal layouts, the one returned places last, at every step, the
/// least-index vertex that keeps the remaining prefix optimal.
pub fn lrw_exact(g: &Graph, caps: &SolverCaps) -> Result<(u32, LinearLayout)> {
    let n = g.n();
    SolverCaps::check(caps.lrw_max_n, n, "linear rank-width")?;
    if n <= 1 {
        return Ok((
            0,
            LinearLayout {
                order: (0..n).collect(),
                width: 0,
            },
        ));
    }
    let size = 1usize << n;
    let mut best = vec![0u8; size];
    for mask in 1..size {
        let set = VertexSet::from_bits(mask as u64);
        let sub = set
            .iter()
            .map(|v| best[mask & !(1 << v)])
            .min()
            .unwrap_or(0);
        best[mask] = sub.max(cut_rank_unchecked(g, set) as u8);
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = size - 1;
    while mask != 0 {
        let set = VertexSet::from_bits(mask as u64);
        let target = set
            .iter()
            .map(|v| best[mask & !(1 << v)])
            .min()
            .unwrap_or(0);
        let v = set
            .iter()
            .find(|&v| best[mask & !(1 << v)] == target)
            .expect("a minimiser exists");
        order.push(v);
        mask &= !(1 << v);
    }
    order.reverse();
    let layout = LinearLayout::from_order(g, order)?;
    debug_assert_eq!(layout.width, best[size - 1] as u32);
    Ok((best[size - 1] as u32, layout))
}

/// Orders vertices by the depth-first order of their leaves in `d`.
///
/// For a decomposition of radius and width at most `k`, every prefix
/// complement splits into at most `k` sets hanging off one root path, each
/// of cut-rank at most `k`, so the layout has width at most `k²`.
pub fn dfs_layout(g: &Graph, d: &Decomposition) -> Result<LinearLayout> {
    d.validate(g.n())?;
    LinearLayout::from_order(g, d.leaf_order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate::random_graph;
    use crate::graph::families::{complete, cycle, path};
    use rand::{Rng, SeedableRng};

    fn brute_lrw(g: &Graph) -> u32 {
        fn rec(g: &Graph, order: &mut Vec<usize>, used: VertexSet, best: &mut u32) {
            if order.len() == g.n() {
                *best = (*best).min(layout_width(g, order).unwrap());
                return;
            }
            for v in g.vertices() - used {
                order.push(v);
                let mut u = used;
                u.insert(v);
                rec(g, order, u, best);
                order.pop();
            }
        }
        let mut best = u32::MAX;
        rec(g, &mut Vec::new(), VertexSet::EMPTY, &mut best);
        best
    }

    #[test]
    fn spec_examples() {
        let caps = SolverCaps::default();
        for n in 2..=10 {
            assert_eq!(lrw_exact(&path(n).unwrap(), &caps).unwrap().0, 1);
            assert_eq!(lrw_exact(&complete(n).unwrap(), &caps).unwrap().0, 1);
        }
        let c5 = cycle(5).unwrap();
        assert_eq!(brute_lrw(&c5), 2);
        assert_eq!(lrw_exact(&c5, &caps).unwrap().0, 2);
        assert_eq!(lrw_exact(&complete(1).unwrap(), &caps).unwrap().0, 0);
    }

    #[test]
    fn dp_matches_permutation_oracle() {
        let caps = SolverCaps::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..60 {
            let n = rng.gen_range(1..=7);
            let g = random_graph(n, rng.gen_range(0.2..0.8), &mut rng);
            let (value, layout) = lrw_exact(&g, &caps).unwrap();
            assert_eq!(value, brute_lrw(&g));
            assert_eq!(layout_width(&g, &layout.order).unwrap(), value);
        }
    }

    #[test]
    fn dfs_layout_examples() {
        let k4 = complete(4).unwrap();
        assert_eq!(dfs_layout(&k4, &Decomposition::star(4)).unwrap().width, 1);
        let p4 = path(4).unwrap();
        let d: Decomposition = serde_json::from_str("[[0,1],[2,3]]").unwrap();
        assert!(dfs_layout(&p4, &d).unwrap().width <= 1);
    }

    #[test]
    fn caps_and_bad_layouts() {
        let caps = SolverCaps {
            lrw_max_n: 4,
            ..SolverCaps::default()
        };
        assert!(matches!(
            lrw_exact(&path(5).unwrap(), &caps),
            Err(Error::Resource(_))
        ));
        assert!(layout_width(&path(3).unwrap(), &[0, 0, 1]).is_err());
        assert!(layout_width(&path(3).unwrap(), &[0, 1]).is_err());
    }
}
