use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, ProductKind};

/// Orderings of two vertex sets under which the bipartite adjacency is
/// exactly `kind`: `left[i] ~ right[j]` iff `kind.links(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pattern {
    pub kind: ProductKind,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Re-derives the bipartite submatrix and compares it with the pattern.
pub fn is_pattern(g: &Graph, p: &Pattern) -> bool {
    let n = p.left.len();
    let all: VertexSet = p.left.iter().chain(&p.right).collect();
    p.right.len() == n
        && all.len() == 2 * n
        && all.is_subset(g.vertices())
        && (0..n).all(|i| (0..n).all(|j| g.has_edge(p.left[i], p.right[j]) == p.kind.links(i, j)))
}

struct Search<'a> {
    g: &'a Graph,
    kind: ProductKind,
    n: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn extend(&mut self, s: VertexSet, t: VertexSet) -> Result<bool> {
        let i = self.left.len();
        if i == self.n {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::resource(format!(
                "bipartite pattern search exceeded {} nodes",
                self.limit
            )));
        }
        // matchings and anti-matchings are symmetric under reordering pairs,
        // so their left sides are chosen in increasing order
        let floor = match (self.kind, self.left.last()) {
            (ProductKind::Half, _) | (_, None) => 0,
            (_, Some(&prev)) => prev + 1,
        };
        for a in s.iter().filter(|&a| a >= floor) {
            let fits_left =
                (0..i).all(|j| self.g.has_edge(a, self.right[j]) == self.kind.links(i, j));
            if !fits_left {
                continue;
            }
            for b in t {
                let ok = self.g.has_edge(a, b) == self.kind.links(i, i)
                    && (0..i).all(|j| self.g.has_edge(self.left[j], b) == self.kind.links(j, i));
                if !ok {
                    continue;
                }
                self.left.push(a);
                self.right.push(b);
                let rest_s = s - VertexSet::singleton(a);
                let rest_t = t - VertexSet::singleton(b);
                if self.extend(rest_s, rest_t)? {
                    return Ok(true);
                }
                self.left.pop();
                self.right.pop();
            }
        }
        Ok(false)
    }
}

/// Finds `n`-subsets of `s` and `t` inducing a matching, an anti-matching or
/// a half-graph between them, trying the kinds in that order.
pub fn bipartite_pattern(
    g: &Graph,
    s: VertexSet,
    t: VertexSet,
    n: usize,
    node_limit: u64,
) -> Result<Option<Pattern>> {
    if !(s | t).is_subset(g.vertices()) {
        return Err(Error::input(
            "pattern sides must be vertex sets of the graph",
        ));
    }
    if !(s & t).is_empty() {
        return Err(Error::input("pattern sides must be disjoint"));
    }
    for kind in [
        ProductKind::Match,
        ProductKind::Antimatch,
        ProductKind::Half,
    ] {
        let mut search = Search {
            g,
            kind,
            n,
            left: Vec::with_capacity(n),
            right: Vec::with_capacity(n),
            nodes: 0,
            limit: node_limit,
        };
        if search.extend(s, t)? {
            let p = Pattern {
                kind,
                left: search.left,
                right: search.right,
            };
            debug_assert!(is_pattern(g, &p));
            return Ok(Some(p));
        }
    }
    Ok(None)
}
