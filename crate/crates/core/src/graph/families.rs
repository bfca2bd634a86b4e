//! Named graph families and the matching / anti-matching / half-graph products.
//!
//! Canonical labelings:
//! - `path(n)`: `0 - 1 - ... - (n-1)`; `cycle(n)` adds `(n-1) - 0`.
//! - `star(n)` (`K_{1,n}`): center `0`, leaves `1..=n`.
//! - `subdivided_star(n)` (`T_{2,n}`): center `0`, middle vertices `1..=n`,
//!   leaves `n+1..=2n`, middle `i` adjacent to leaf `n+i`.
//! - `product(G, H, _)`: `G` occupies `0..n`, `H` occupies `n..2n`; the `i`-th
//!   vertex of each side is the `i`-th in its own order.
//! - `blown_product(G, H, _, t, _)`: copy `k` occupies `2nk..2n(k+1)`, with its
//!   `G` part first.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// How the `i`-th vertex of the first side meets the `j`-th of the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    /// adjacent iff `i == j`
    Match,
    /// adjacent iff `i != j`
    Antimatch,
    /// adjacent iff `i >= j`
    Half,
}

impl ProductKind {
    #[inline]
    pub fn links(self, i: usize, j: usize) -> bool {
        match self {
            ProductKind::Match => i == j,
            ProductKind::Antimatch => i != j,
            ProductKind::Half => i >= j,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Match => "match",
            ProductKind::Antimatch => "antimatch",
            ProductKind::Half => "half",
        }
    }
}

impl std::str::FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "match" | "mat" => Ok(ProductKind::Match),
            "antimatch" | "anti" => Ok(ProductKind::Antimatch),
            "half" | "tri" => Ok(ProductKind::Half),
            other => Err(Error::input(format!("unknown product kind {other:?}"))),
        }
    }
}

/// The 2x2 matrix `(a b; c d)` of a blown product. For copies `i < j`:
/// `a`: G_i to G_j, `b`: G_i to H_j, `c`: H_i to G_j, `d`: H_i to H_j.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkMatrix {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl LinkMatrix {
    pub const ZERO: LinkMatrix = LinkMatrix::new(false, false, false, false);

    pub const fn new(a: bool, b: bool, c: bool, d: bool) -> Self {
        LinkMatrix { a, b, c, d }
    }

    pub fn from_bits(a: u8, b: u8, c: u8, d: u8) -> Result<Self> {
        let bit = |x: u8| match x {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(Error::input(format!("link matrix entry {x} is not a bit"))),
        };
        Ok(LinkMatrix::new(bit(a)?, bit(b)?, bit(c)?, bit(d)?))
    }
}

fn positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::input(format!("{name} needs a positive parameter")))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    positive("path", n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// `C_n`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input("cycle needs at least 3 vertices"));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    positive("complete", n)?;
    Ok(Graph::empty(n)?.complement())
}

pub fn edgeless(n: usize) -> Result<Graph> {
    positive("edgeless", n)?;
    Graph::empty(n)
}

/// `K_{1,n}`.
pub fn star(n: usize) -> Result<Graph> {
    positive("star", n)?;
    let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Graph::from_edges(n + 1, &edges)
}

/// `T_{2,n}`, the 1-subdivision of `K_{1,n}`.
pub fn subdivided_star(n: usize) -> Result<Graph> {
    positive("subdivided_star", n)?;
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push((0, i));
        edges.push((i, n + i));
    }
    Graph::from_edges(2 * n + 1, &edges)
}

/// `t` disjoint copies of `g`, copy `k` on `k*|g|..(k+1)*|g|`.
pub fn copies(t: usize, g: &Graph) -> Result<Graph> {
    positive("copies", t)?;
    let mut out = Graph::empty(0)?;
    for _ in 0..t {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

/// Looks up a family by name with integer parameters.
pub fn make_family(name: &str, params: &[usize]) -> Result<Graph> {
    let one = |params: &[usize]| match params {
        [n] => Ok(*n),
        _ => Err(Error::input(format!(
            "family {name} takes exactly one parameter, got {}",
            params.len()
        ))),
    };
    match name {
        "path" => path(one(params)?),
        "cycle" => cycle(one(params)?),
        "complete" => complete(one(params)?),
        "edgeless" => edgeless(one(params)?),
        "star" => star(one(params)?),
        "subdivided_star" | "subdiv_star" => subdivided_star(one(params)?),
        "copies" => Err(Error::input(
            "copies takes a graph argument: use copies(t, <graph spec>)",
        )),
        other => Err(Error::input(format!("unknown family {other:?}"))),
    }
}

/// `G ⊙ H` on `V(G) ⊔ V(H)`; `G` keeps its indices and `H` is shifted by `n`.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Result<Graph> {
    if g.n() != h.n() {
        return Err(Error::input(format!(
            "product sides differ in size: {} vs {}",
            g.n(),
            h.n()
        )));
    }
    let n = g.n();
    let mut out = g.disjoint_union(h)?;
    for i in 0..n {
        for j in 0..n {
            if kind.links(i, j) {
                out.set_edge(i, n + j, true);
            }
        }
    }
    Ok(out)
}

/// `(G ⊙ H)^t_A`.
pub fn blown_product(
    g: &Graph,
    h: &Graph,
    kind: ProductKind,
    t: usize,
    link: LinkMatrix,
) -> Result<Graph> {
    if t == 0 {
        return Err(Error::input("blown product needs t >= 1"));
    }
    let base = product(g, h, kind)?;
    let mut out = copies(t, &base)?;
    let n = g.n();
    let top = |k: usize| VertexSet::full(n * (2 * k + 1)) - VertexSet::full(2 * n * k);
    let bottom = |k: usize| VertexSet::full(2 * n * (k + 1)) - VertexSet::full(n * (2 * k + 1));
    for i in 0..t {
        for j in i + 1..t {
            out.join(top(i), top(j), link.a);
            out.join(top(i), bottom(j), link.b);
            out.join(bottom(i), top(j), link.c);
            out.join(bottom(i), bottom(j), link.d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let p5 = path(5).unwrap();
        assert_eq!(
            (p5.n(), p5.edge_count(), p5.degree_sequence()[0]),
            (5, 4, 2)
        );
        let t = subdivided_star(3).unwrap();
        assert_eq!((t.n(), t.edge_count()), (7, 6));
        assert_eq!(t.degree_sequence(), vec![3, 2, 2, 2, 1, 1, 1]);
        let k2 = complete(2).unwrap();
        let three = copies(3, &k2).unwrap();
        assert_eq!((three.n(), three.edge_count()), (6, 3));
        assert_eq!(make_family("star", &[3]).unwrap().degree(0), 3);
    }

    #[test]
    fn family_errors() {
        assert!(make_family("path", &[0]).is_err());
        assert!(make_family("wheel", &[4]).is_err());
        assert!(make_family("path", &[1, 2]).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn small_products() {
        let k1 = complete(1).unwrap();
        assert_eq!(
            product(&k1, &k1, ProductKind::Match).unwrap(),
            complete(2).unwrap()
        );
        let s2 = edgeless(2).unwrap();
        let half = product(&s2, &s2, ProductKind::Half).unwrap();
        // v1w1, v2w1, v2w2 with v = 0,1 and w = 2,3
        assert_eq!(
            half,
            Graph::from_edges(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()
        );
        let fig2 = product(
            &complete(5).unwrap(),
            &edgeless(5).unwrap(),
            ProductKind::Match,
        )
        .unwrap();
        assert_eq!(fig2.n(), 10);
        assert!((0..5).all(|v| fig2.degree(v) == 5));
        assert!((5..10).all(|w| fig2.degree(w) == 1));
        assert!(product(&k1, &s2, ProductKind::Match).is_err());
    }

    #[test]
    fn blown_product_figure_three() {
        let k4 = complete(4).unwrap();
        let s4 = edgeless(4).unwrap();
        let a = LinkMatrix::new(false, true, false, true);
        let g = blown_product(&k4, &s4, ProductKind::Match, 3, a).unwrap();
        assert_eq!(g.n(), 24);
        // per copy: 6 clique edges + 4 matching edges; between copies i<j:
        // top_i-bottom_j (16) and bottom_i-bottom_j (16), three pairs.
        assert_eq!(g.edge_count(), 3 * 10 + 3 * 32);
        assert!(g.has_edge(0, 12)); // v_1^(1) - w_1^(2)
        assert!(!g.has_edge(4, 8)); // w_1^(1) - v_1^(2)
        assert!(g.has_edge(4, 12)); // w_1^(1) - w_1^(2)
        assert!(!g.has_edge(0, 8)); // v_1^(1) - v_1^(2)
    }

    #[test]
    fn blown_product_degenerate_cases() {
        let k3 = complete(3).unwrap();
        let s3 = edgeless(3).unwrap();
        let any = LinkMatrix::new(true, false, true, true);
        assert_eq!(
            blown_product(&k3, &s3, ProductKind::Half, 1, any).unwrap(),
            product(&k3, &s3, ProductKind::Half).unwrap()
        );
        let base = product(&k3, &s3, ProductKind::Antimatch).unwrap();
        assert_eq!(
            blown_product(&k3, &s3, ProductKind::Antimatch, 3, LinkMatrix::ZERO).unwrap(),
            copies(3, &base).unwrap()
        );
        assert!(blown_product(&k3, &s3, ProductKind::Half, 0, any).is_err());
    }
}
