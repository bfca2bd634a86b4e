//! Lower-bound certificates for depth-2 decompositions of `nT_{2,n}`.
//!
//! Color every vertex by the root child whose subtree holds its leaf. Either
//! some component of `nT_{2,n}` lies inside a single root child, and then
//! the middle vertices of that component form a union of that child's
//! children with cut-rank `n` (they are matched to their private leaves), or
//! every component has an edge whose ends get different colors. In the
//! second case pick one such edge per component and a set `X` of colors;
//! the edges with exactly one end colored in `X` lie in distinct components,
//! so the union of the root children colored in `X` has cut-rank at least
//! their number. Averaging over `X` shows some `X` reaches `n/2`; here `X`
//! is found by trying every subset of the colors involved.

use serde::{Deserialize, Serialize};

use super::{cut_rank_unchecked, Decomposition, DecompositionNode};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::families::{copies, subdivided_star};
use crate::graph::Graph;

/// Evidence that a decomposition has width at least `bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColorfulCertificate {
    /// `set` is a union of children of root child `child` and a whole
    /// component of the graph lies below that child.
    InsideChild {
        child: usize,
        set: VertexSet,
        rank: u32,
    },
    /// `set` is the union of the root children listed in `colors`;
    /// `edges` holds one edge per component, cut by `set` where marked.
    RootUnion {
        colors: Vec<usize>,
        edges: Vec<(usize, usize)>,
        set: VertexSet,
        rank: u32,
    },
}

impl ColorfulCertificate {
    pub fn rank(&self) -> u32 {
        match self {
            ColorfulCertificate::InsideChild { rank, .. }
            | ColorfulCertificate::RootUnion { rank, .. } => *rank,
        }
    }
}

/// `nT_{2,n}` with component `c` at `c(2n+1)..`: center first, then the
/// middle vertices, then the leaves.
pub fn subdivided_star_copies(n: usize) -> Result<Graph> {
    copies(n, &subdivided_star(n)?)
}

/// Smallest width the certificate must reach.
pub fn required_width(n: usize) -> u32 {
    n.div_ceil(2) as u32
}

fn check_input(g: &Graph, n: usize, d: &Decomposition) -> Result<()> {
    if n == 0 {
        return Err(Error::input("n must be positive"));
    }
    if *g != subdivided_star_copies(n)? {
        return Err(Error::input(format!(
            "graph is not the canonical {n} copies of the subdivided star with {n} rays"
        )));
    }
    d.validate(g.n())?;
    if d.depth() > 2 {
        return Err(Error::input(format!(
            "decomposition has depth {} > 2",
            d.depth()
        )));
    }
    Ok(())
}

/// Leaf sets of each root child's children (a leaf child is its own child).
fn child_blocks(d: &Decomposition) -> Vec<Vec<VertexSet>> {
    d.root_children()
        .iter()
        .map(|c| match c {
            DecompositionNode::Leaf(v) => vec![VertexSet::singleton(*v)],
            DecompositionNode::Internal(ch) => ch.iter().map(|x| x.leaf_set()).collect(),
        })
        .collect()
}

/// Finds a certificate that `d` has width at least `⌈n/2⌉` on `nT_{2,n}`.
pub fn colorful_cut_witness(g: &Graph, n: usize, d: &Decomposition) -> Result<ColorfulCertificate> {
    check_input(g, n, d)?;
    let size = 2 * n + 1;
    let blocks = child_blocks(d);
    let child_sets: Vec<VertexSet> = blocks
        .iter()
        .map(|b| b.iter().fold(VertexSet::EMPTY, |a, &s| a | s))
        .collect();
    let mut color = vec![0usize; g.n()];
    for (j, s) in child_sets.iter().enumerate() {
        for v in s.iter() {
            color[v] = j;
        }
    }

    for c in 0..n {
        let component = VertexSet::full(size).bits() << (c * size);
        let component = VertexSet::from_bits(component);
        if let Some(j) = child_sets.iter().position(|s| component.is_subset(*s)) {
            let middles: VertexSet = (1..=n).map(|i| c * size + i).collect();
            return Ok(ColorfulCertificate::InsideChild {
                child: j,
                set: middles,
                rank: cut_rank_unchecked(g, middles),
            });
        }
    }

    // one colorful edge per component, first in edge order
    let edges: Vec<(usize, usize)> = (0..n)
        .map(|c| {
            let component = VertexSet::from_bits(VertexSet::full(size).bits() << (c * size));
            g.edges()
                .find(|&(u, v)| component.contains(u) && color[u] != color[v])
                .expect("a component split across root children has a colorful edge")
        })
        .collect();
    let mut palette: Vec<usize> = edges
        .iter()
        .flat_map(|&(u, v)| [color[u], color[v]])
        .collect();
    palette.sort_unstable();
    palette.dedup();

    let mut best: Option<(usize, u64)> = None;
    for pick in 0..(1u64 << palette.len()) {
        let in_x = |v: usize| {
            let idx = palette.binary_search(&color[v]).expect("color in palette");
            pick >> idx & 1 == 1
        };
        let cut = edges.iter().filter(|&&(u, v)| in_x(u) != in_x(v)).count();
        if best.is_none_or(|(b, _)| cut > b) {
            best = Some((cut, pick));
        }
    }
    let (_, pick) = best.expect("palette subsets are nonempty");
    let colors: Vec<usize> = palette
        .iter()
        .enumerate()
        .filter(|&(i, _)| pick >> i & 1 == 1)
        .map(|(_, &c)| c)
        .collect();
    let set = colors
        .iter()
        .fold(VertexSet::EMPTY, |a, &c| a | child_sets[c]);
    Ok(ColorfulCertificate::RootUnion {
        colors,
        edges,
        set,
        rank: cut_rank_unchecked(g, set),
    })
}

/// Re-checks a certificate from scratch: the set must be a union of parts at
/// the claimed node, its cut-rank must match, and reach `⌈n/2⌉`.
pub fn check_colorful_certificate(
    g: &Graph,
    n: usize,
    d: &Decomposition,
    cert: &ColorfulCertificate,
) -> Result<()> {
    check_input(g, n, d)?;
    let blocks = child_blocks(d);
    let (set, rank, parts): (VertexSet, u32, Vec<VertexSet>) = match cert {
        ColorfulCertificate::InsideChild { child, set, rank } => {
            let parts = blocks
                .get(*child)
                .ok_or_else(|| Error::witness(format!("root has no child {child}")))?;
            (*set, *rank, parts.clone())
        }
        ColorfulCertificate::RootUnion { set, rank, .. } => {
            let parts = blocks
                .iter()
                .map(|b| b.iter().fold(VertexSet::EMPTY, |a, &s| a | s))
                .collect();
            (*set, *rank, parts)
        }
    };
    let covered = parts
        .iter()
        .filter(|p| !(**p & set).is_empty())
        .fold(VertexSet::EMPTY, |a, &p| a | p);
    if covered != set {
        return Err(Error::witness(format!(
            "{set:?} is not a union of parts at the node"
        )));
    }
    let actual = cut_rank_unchecked(g, set);
    if actual != rank {
        return Err(Error::witness(format!(
            "claimed cut-rank {rank}, actual {actual}"
        )));
    }
    if actual < required_width(n) {
        return Err(Error::witness(format!(
            "cut-rank {actual} is below the required {}",
            required_width(n)
        )));
    }
    Ok(())
}
