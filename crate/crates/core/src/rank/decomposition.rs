//! Decompositions as rooted hierarchies.
//!
//! A decomposition tree `(T, σ)` is stored rooted at a node within distance
//! `radius` of every node, so its radius bound becomes a depth bound. The
//! root has at least two children; other internal nodes have at least one.
//! In JSON a leaf is a vertex index and an internal node is an array of
//! children, e.g. `[[0,1],[2,3]]`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::max_union_rank;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DecompositionNode {
    Leaf(usize),
    Internal(Vec<DecompositionNode>),
}

impl DecompositionNode {
    /// Vertices at the leaves below this node.
    pub fn leaf_set(&self) -> VertexSet {
        match self {
            DecompositionNode::Leaf(v) => VertexSet::singleton(*v),
            DecompositionNode::Internal(ch) => ch
                .iter()
                .fold(VertexSet::EMPTY, |acc, c| acc | c.leaf_set()),
        }
    }

    fn depth(&self) -> usize {
        match self {
            DecompositionNode::Leaf(_) => 0,
            DecompositionNode::Internal(ch) => 1 + ch.iter().map(|c| c.depth()).max().unwrap_or(0),
        }
    }

    fn visit_internal<'a>(&'a self, f: &mut impl FnMut(&'a [DecompositionNode])) {
        if let DecompositionNode::Internal(ch) = self {
            f(ch);
            for c in ch {
                c.visit_internal(f);
            }
        }
    }

    fn leaves_preorder(&self, out: &mut Vec<usize>) {
        match self {
            DecompositionNode::Leaf(v) => out.push(*v),
            DecompositionNode::Internal(ch) => ch.iter().for_each(|c| c.leaves_preorder(out)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Decomposition {
    pub root: DecompositionNode,
}

impl Decomposition {
    pub fn new(root: DecompositionNode) -> Self {
        Decomposition { root }
    }

    /// Root with one leaf per vertex (radius 1).
    pub fn star(n: usize) -> Self {
        Decomposition::new(DecompositionNode::Internal(
            (0..n).map(DecompositionNode::Leaf).collect(),
        ))
    }

    /// Maximum root-to-leaf distance.
    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let DecompositionNode::Internal(children) = &self.root else {
            return Err(Error::input("a decomposition needs an internal root"));
        };
        if children.len() < 2 {
            return Err(Error::input(
                "the root needs at least two children (otherwise it is a leaf of the tree)",
            ));
        }
        let mut seen = VertexSet::EMPTY;
        fn walk(node: &DecompositionNode, n: usize, seen: &mut VertexSet) -> Result<()> {
            match node {
                DecompositionNode::Leaf(v) => {
                    if *v >= n {
                        return Err(Error::input(format!("leaf {v} outside 0..{n}")));
                    }
                    if seen.contains(*v) {
                        return Err(Error::input(format!("vertex {v} appears on two leaves")));
                    }
                    seen.insert(*v);
                }
                DecompositionNode::Internal(ch) => {
                    if ch.is_empty() {
                        return Err(Error::input("internal node without children"));
                    }
                    for c in ch {
                        walk(c, n, seen)?;
                    }
                }
            }
            Ok(())
        }
        walk(&self.root, n, &mut seen)?;
        if seen != VertexSet::full(n) {
            return Err(Error::input(format!(
                "vertices {:?} have no leaf",
                VertexSet::full(n) - seen
            )));
        }
        Ok(())
    }

    /// Leaf sets of the children of every internal node, root first, preorder.
    pub fn internal_nodes(&self) -> Vec<Vec<VertexSet>> {
        let mut out = Vec::new();
        self.root
            .visit_internal(&mut |ch| out.push(ch.iter().map(|c| c.leaf_set()).collect()));
        out
    }

    /// Leaves in depth-first order.
    pub fn leaf_order(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.root.leaves_preorder(&mut out);
        out
    }

    /// Children of the root.
    pub fn root_children(&self) -> &[DecompositionNode] {
        match &self.root {
            DecompositionNode::Internal(ch) => ch,
            DecompositionNode::Leaf(_) => &[],
        }
    }
}

/// Width of every internal node, root first in preorder.
///
/// The parts at a node are its children's leaf sets plus, away from the
/// root, everything outside the node. Because `ρ(X) = ρ(V \ X)`, unions
/// that contain the outside part repeat the values of unions of children,
/// so only the children are enumerated.
pub fn node_widths(g: &Graph, d: &Decomposition) -> Result<Vec<u32>> {
    d.validate(g.n())?;
    d.internal_nodes()
        .iter()
        .map(|children| max_union_rank(g, children))
        .collect()
}

pub fn decomposition_width(g: &Graph, d: &Decomposition) -> Result<u32> {
    Ok(node_widths(g, d)?.into_iter().max().unwrap_or(0))
}

/// A random decomposition of `0..n` (`n >= 2`) with depth at most `max_depth`.
pub fn random_decomposition<R: Rng + ?Sized>(
    n: usize,
    max_depth: usize,
    rng: &mut R,
) -> Decomposition {
    assert!(n >= 2 && max_depth >= 1);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    loop {
        let root = random_node(&verts, max_depth, rng);
        if matches!(&root, DecompositionNode::Internal(ch) if ch.len() >= 2) {
            return Decomposition::new(root);
        }
    }
}

fn random_node<R: Rng + ?Sized>(verts: &[usize], depth: usize, rng: &mut R) -> DecompositionNode {
    if depth == 1 {
        return DecompositionNode::Internal(
            verts.iter().map(|&v| DecompositionNode::Leaf(v)).collect(),
        );
    }
    let groups = rng.gen_range(1..=verts.len());
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); groups];
    for (i, &v) in verts.iter().enumerate() {
        let b = if i < groups {
            i
        } else {
            rng.gen_range(0..groups)
        };
        buckets[b].push(v);
    }
    DecompositionNode::Internal(
        buckets
            .into_iter()
            .map(|b| {
                if b.len() == 1 && rng.gen_bool(0.7) {
                    DecompositionNode::Leaf(b[0])
                } else {
                    random_node(&b, depth - 1, rng)
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate::random_graph;
    use crate::graph::families::{complete, path};
    use crate::rank::cut_rank_unchecked;
    use rand::SeedableRng;

    use DecompositionNode::{Internal, Leaf};

    /// Width straight from the tree definition: delete each internal node,
    /// take the components, and maximise `ρ` over all unions of their leaf sets.
    fn literal_width(g: &Graph, d: &Decomposition) -> u32 {
        // explicit tree: node ids, adjacency, leaf labels
        let mut adj: Vec<Vec<usize>> = Vec::new();
        let mut label: Vec<Option<usize>> = Vec::new();
        fn build(
            node: &DecompositionNode,
            adj: &mut Vec<Vec<usize>>,
            label: &mut Vec<Option<usize>>,
        ) -> usize {
            let id = adj.len();
            adj.push(Vec::new());
            match node {
                Leaf(v) => label.push(Some(*v)),
                Internal(ch) => {
                    label.push(None);
                    for c in ch {
                        let cid = build(c, adj, label);
                        adj[id].push(cid);
                        adj[cid].push(id);
                    }
                }
            }
            id
        }
        build(&d.root, &mut adj, &mut label);
        let mut width = 0;
        for t in 0..adj.len() {
            if label[t].is_some() {
                continue;
            }
            let mut comp = vec![usize::MAX; adj.len()];
            let mut parts = Vec::new();
            for &start in &adj[t] {
                let id = parts.len();
                let mut set = VertexSet::EMPTY;
                let mut stack = vec![start];
                comp[start] = id;
                while let Some(x) = stack.pop() {
                    if let Some(v) = label[x] {
                        set.insert(v);
                    }
                    for &y in &adj[x] {
                        if y != t && comp[y] == usize::MAX {
                            comp[y] = id;
                            stack.push(y);
                        }
                    }
                }
                parts.push(set);
            }
            for mask in 0u64..1 << parts.len() {
                let u = (0..parts.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(VertexSet::EMPTY, |a, i| a | parts[i]);
                width = width.max(cut_rank_unchecked(g, u));
            }
        }
        width
    }

    #[test]
    fn spec_examples() {
        let k4 = complete(4).unwrap();
        assert_eq!(
            decomposition_width(&k4, &Decomposition::star(4)).unwrap(),
            1
        );
        let p4 = path(4).unwrap();
        let two = Decomposition::new(Internal(vec![
            Internal(vec![Leaf(0), Leaf(1)]),
            Internal(vec![Leaf(2), Leaf(3)]),
        ]));
        assert_eq!(node_widths(&p4, &two).unwrap(), vec![1, 1, 1]);
        assert_eq!(two.depth(), 2);
        assert_eq!(literal_width(&p4, &two), 1);
    }

    #[test]
    fn single_vertex_has_no_decomposition() {
        let k1 = complete(1).unwrap();
        assert!(decomposition_width(&k1, &Decomposition::star(1)).is_err());
        assert!(decomposition_width(&k1, &Decomposition::new(Leaf(0))).is_err());
    }

    #[test]
    fn validation_errors() {
        let bad = [
            Decomposition::new(Internal(vec![Leaf(0), Leaf(0)])),
            Decomposition::new(Internal(vec![Leaf(0), Internal(vec![])])),
            Decomposition::new(Internal(vec![Leaf(0), Leaf(5)])),
            Decomposition::new(Internal(vec![Leaf(0)])),
            Decomposition::new(Internal(vec![Leaf(0), Leaf(1)])),
        ];
        for d in bad {
            assert!(d.validate(3).is_err(), "{d:?}");
        }
    }

    #[test]
    fn child_enumeration_matches_literal_definition() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let n = rng.gen_range(2..=8);
            let g = random_graph(n, 0.5, &mut rng);
            let depth = rng.gen_range(1..=4);
            let d = random_decomposition(n, depth, &mut rng);
            d.validate(n).unwrap();
            assert!(d.depth() <= depth);
            assert_eq!(
                decomposition_width(&g, &d).unwrap(),
                literal_width(&g, &d),
                "{d:?}"
            );
        }
    }

    #[test]
    fn json_shape() {
        let d = Decomposition::new(Internal(vec![Internal(vec![Leaf(0), Leaf(1)]), Leaf(2)]));
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, "[[0,1],2]");
        assert_eq!(serde_json::from_str::<Decomposition>(&s).unwrap(), d);
    }
}
