use super::Graph;
use crate::bitset::VertexSet;

/// `N(v) \ {v,w} == N(w) \ {v,w}`.
#[inline]
pub fn are_twins(g: &Graph, v: usize, w: usize) -> bool {
    let pair = VertexSet::singleton(v) | VertexSet::singleton(w);
    g.neighbors(v) - pair == g.neighbors(w) - pair
}

/// Maximal classes of pairwise twins, ordered by least vertex.
pub fn twin_classes(g: &Graph) -> Vec<VertexSet> {
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 0..g.n() {
        match classes
            .iter_mut()
            .find(|c| are_twins(g, c.first().expect("classes are nonempty"), v))
        {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    debug_assert!(classes.iter().all(|&c| is_twin_class(g, c)));
    classes
}

/// Every pair in `class` is a twin pair, and the class is a clique or an
/// independent set.
pub fn is_twin_class(g: &Graph, class: VertexSet) -> bool {
    let members = class.to_vec();
    let pairwise = members
        .iter()
        .enumerate()
        .all(|(i, &v)| members[i + 1..].iter().all(|&w| are_twins(g, v, w)));
    let inside: usize = members
        .iter()
        .map(|&v| (g.neighbors(v) & class).len())
        .sum();
    let k = members.len();
    pairwise && (inside == 0 || inside == k * (k - 1))
}
