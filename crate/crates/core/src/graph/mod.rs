//! Labeled simple undirected graphs with bit-packed adjacency rows.
//!
//! Vertices are always `0..n`. Every constructor in this module follows a
//! fixed canonical labeling (see [`families`]) because the witness constructions
//! refer to vertices by index.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub mod enumerate;
pub mod families;
pub mod graph6;
pub mod iso;
pub mod spec;
pub mod twins;

pub use families::{blown_product, make_family, product, LinkMatrix, ProductKind};
pub use iso::{are_isomorphic, are_isomorphic_with_limit};
pub use twins::twin_classes;

/// Largest supported vertex count: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::input(format!(
                "graph with {n} vertices exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop edge at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, checking symmetry and the zero diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::input(format!("{n} rows exceed the vertex limit")));
        }
        let all = VertexSet::full(n).bits();
        for (i, &r) in rows.iter().enumerate() {
            if r & !all != 0 {
                return Err(Error::input(format!("row {i} references a vertex >= {n}")));
            }
            if (r >> i) & 1 == 1 {
                return Err(Error::input(format!("loop at vertex {i}")));
            }
            for j in VertexSet::from_bits(r) {
                if (rows[j] >> i) & 1 == 0 {
                    return Err(Error::input(format!("asymmetric entry ({i},{j})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        if present {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
        } else {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    /// Makes every vertex of `a` adjacent (or non-adjacent) to every vertex of `b`.
    pub(crate) fn join(&mut self, a: VertexSet, b: VertexSet, present: bool) {
        for u in a {
            for v in b {
                if u != v {
                    self.set_edge(u, v, present);
                }
            }
        }
    }

    /// Complements the subgraph induced on `set`.
    pub(crate) fn toggle_within(&mut self, set: VertexSet) {
        for u in set {
            self.rows[u] ^= set.bits() & !(1u64 << u);
        }
    }

    /// Edge set inverted off the diagonal.
    pub fn complement(&self) -> Graph {
        let all = self.vertices().bits();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &r)| !r & all & !(1u64 << i))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced on `vertices`, relabeled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut rows = vec![0u64; k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Graph { n: k, rows }
    }

    /// Removes `set`, keeping the remaining vertices in their original order.
    pub fn delete(&self, set: VertexSet) -> Graph {
        let keep: Vec<usize> = (self.vertices() - set).to_vec();
        self.induced(&keep)
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.delete(VertexSet::singleton(v))
    }

    /// `self` followed by `other`, with no edges between them.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.rows[..self.n].copy_from_slice(&self.rows);
        for (i, &r) in other.rows.iter().enumerate() {
            g.rows[self.n + i] = r << self.n;
        }
        Ok(g)
    }

    /// The graph whose vertex `perm[v]` plays the role of `v` in `self`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, rows }
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | self.neighbors(v);
                }
                frontier = next - comp;
                comp = comp | next;
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Parses the edge-list text format: `n` on the first line, then one
    /// `u v` pair per line. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let (_, first) = lines
            .next()
            .ok_or_else(|| Error::input("edge list is empty"))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::input(format!("bad vertex count {first:?}")))?;
        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::input(format!("line {}: bad vertex {s:?}", lineno + 1)))
            };
            match parts.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => return Err(Error::input(format!("line {}: expected `u v`", lineno + 1))),
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Graphs serialize as graph6 strings.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        graph6::encode(self)
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        graph6::decode(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_path() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.has_edge(1, 0) && !p3.has_edge(0, 2));
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.degree_sequence(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::Input(_))
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
    }

    #[test]
    fn complement_of_p4_is_relabeled_p4() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // 1-3-0-2
        let expect = Graph::from_edges(4, &[(1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(p4.complement(), expect);
    }

    #[test]
    fn from_rows_checks_symmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 2), (2, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        assert!(Graph::parse_edge_list("3\n0 1 2\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn components_and_delete() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components().len(), 3);
        assert!(!g.is_connected());
        let h = g.delete_vertex(2);
        assert_eq!(h, Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
    }
}
