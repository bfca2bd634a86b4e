use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Consecutive vertices adjacent, all other pairs non-adjacent, no repeats.
pub fn is_induced_path(g: &Graph, seq: &[usize]) -> bool {
    let set: VertexSet = seq.iter().collect();
    if set.len() != seq.len() || !set.is_subset(g.vertices()) {
        return false;
    }
    seq.iter().enumerate().all(|(i, &u)| {
        seq[i + 1..]
            .iter()
            .enumerate()
            .all(|(d, &v)| g.has_edge(u, v) == (d == 0))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathOrDegree {
    HighDegree(usize),
    InducedPath(Vec<usize>),
}

/// A vertex of degree at least `k`, or else an induced path on `l`
/// vertices. `None` only when neither exists.
pub fn path_or_high_degree(g: &Graph, k: usize, l: usize) -> Result<Option<PathOrDegree>> {
    if k <= 3 || l == 0 {
        return Err(Error::input("needs k > 3 and l > 0"));
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::input("graph must be connected and nonempty"));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) >= k) {
        return Ok(Some(PathOrDegree::HighDegree(v)));
    }
    let mut path = Vec::with_capacity(l);
    for v in 0..g.n() {
        path.push(v);
        if extend(g, &mut path, l) {
            return Ok(Some(PathOrDegree::InducedPath(path)));
        }
        path.pop();
    }
    Ok(None)
}

/// Extends an induced path to `target` vertices, depth first.
fn extend(g: &Graph, path: &mut Vec<usize>, target: usize) -> bool {
    if path.len() == target {
        return true;
    }
    let (&last, head) = path.split_last().expect("paths start nonempty");
    // a new vertex must see `last` and nothing earlier on the path
    let blocked = head
        .iter()
        .fold(path.iter().collect::<VertexSet>(), |acc, &v| {
            acc | g.neighbors(v)
        });
    for w in g.neighbors(last) - blocked {
        path.push(w);
        if extend(g, path, target) {
            return true;
        }
        path.pop();
    }
    false
}

/// A longest induced path, by exhaustive search.
pub fn longest_induced_path(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for target in 1..=g.n() {
        let mut found = None;
        for v in 0..g.n() {
            let mut path = vec![v];
            if extend(g, &mut path, target) {
                found = Some(path);
                break;
            }
        }
        match found {
            Some(p) => best = p,
            None => break,
        }
    }
    best
}
