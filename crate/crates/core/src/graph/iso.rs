//! Isomorphism testing by colour refinement plus backtracking.

use std::collections::BTreeMap;

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Backtracking nodes explored before giving up with a resource error.
pub const DEFAULT_NODE_LIMIT: u64 = 20_000_000;

/// Returns a bijection `map` with `u ~ v in g` iff `map[u] ~ map[v] in h`, or
/// `None` when the graphs are not isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    are_isomorphic_with_limit(g, h, DEFAULT_NODE_LIMIT)
}

pub fn are_isomorphic_with_limit(
    g: &Graph,
    h: &Graph,
    node_limit: u64,
) -> Result<Option<Vec<usize>>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(None);
    }
    let Some((cg, ch)) = refine_pair(g, h) else {
        return Ok(None);
    };
    let mut search = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        map: vec![usize::MAX; g.n()],
        used: VertexSet::EMPTY,
        mapped: VertexSet::EMPTY,
        nodes: 0,
        limit: node_limit,
    };
    if search.extend()? {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

/// Stable colours of both graphs under joint 1-dimensional refinement, or
/// `None` as soon as the colour histograms disagree. Colour ids are ranks of
/// the signatures, so they are invariant under relabeling.
pub(crate) fn refine_pair(g: &Graph, h: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.n();
    let mut cg: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut ch: Vec<u32> = (0..n).map(|v| h.degree(v) as u32).collect();
    let mut classes = 0usize;
    loop {
        let sig = |gr: &Graph, c: &[u32], v: usize| {
            let mut nb: Vec<u32> = gr.neighbors(v).iter().map(|u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..n).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| sig(h, &ch, v)).collect();
        let mut ids: BTreeMap<_, u32> =
            sg.iter().chain(sh.iter()).map(|s| (s.clone(), 0)).collect();
        for (rank, id) in ids.values_mut().enumerate() {
            *id = rank as u32;
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        let mut hist_g = cg.clone();
        let mut hist_h = ch.clone();
        hist_g.sort_unstable();
        hist_h.sort_unstable();
        if hist_g != hist_h {
            return None;
        }
        if ids.len() == classes {
            return Some((cg, ch));
        }
        classes = ids.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [u32],
    ch: &'a [u32],
    map: Vec<usize>,
    used: VertexSet,
    mapped: VertexSet,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    /// Next vertex of `g` to place: most already-placed neighbours, then the
    /// rarest colour, then least index.
    fn pick(&self) -> Option<usize> {
        let free = self.g.vertices() - self.mapped;
        free.iter().max_by_key(|&v| {
            let placed = (self.g.neighbors(v) & self.mapped).len();
            let rarity = self.cg.iter().filter(|&&c| c == self.cg[v]).count();
            (placed, std::cmp::Reverse(rarity), std::cmp::Reverse(v))
        })
    }

    fn extend(&mut self) -> Result<bool> {
        let Some(u) = self.pick() else {
            return Ok(true);
        };
        let mut image_nbrs = VertexSet::EMPTY;
        for x in self.g.neighbors(u) & self.mapped {
            image_nbrs.insert(self.map[x]);
        }
        for c in self.h.vertices() - self.used {
            if self.ch[c] != self.cg[u] || self.h.neighbors(c) & self.used != image_nbrs {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::resource(format!(
                    "isomorphism search exceeded {} nodes",
                    self.limit
                )));
            }
            self.map[u] = c;
            self.used.insert(c);
            self.mapped.insert(u);
            if self.extend()? {
                return Ok(true);
            }
            self.mapped.remove(u);
            self.used.remove(c);
            self.map[u] = usize::MAX;
        }
        Ok(false)
    }
}

/// Checks that `map` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.n() != h.n() || map.len() != g.n() {
        return false;
    }
    let image: VertexSet = map.iter().copied().filter(|&v| v < h.n()).collect();
    if image.len() != g.n() {
        return false;
    }
    (0..g.n()).all(|u| (0..g.n()).all(|v| g.has_edge(u, v) == h.has_edge(map[u], map[v])))
}
