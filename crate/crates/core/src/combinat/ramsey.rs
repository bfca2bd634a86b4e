use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// An edge coloring of `K_m` (`m <= 64`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Coloring {
    m: usize,
    /// full symmetric matrix, diagonal unused
    colors: Vec<Vec<u32>>,
}

impl Coloring {
    /// Builds a coloring from `color(i, j)` for `i < j`.
    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> u32) -> Result<Self> {
        if m > 64 {
            return Err(Error::input(format!("colorings support m <= 64, got {m}")));
        }
        let mut colors = vec![vec![0; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                let c = f(i, j);
                colors[i][j] = c;
                colors[j][i] = c;
            }
        }
        Ok(Coloring { m, colors })
    }

    /// Row `i` lists the colors of `ij` for `j > i`; the last (empty) row may
    /// be omitted.
    pub fn from_upper_triangle(rows: &[Vec<u32>]) -> Result<Self> {
        let m = if rows.last().is_some_and(Vec::is_empty) {
            rows.len()
        } else {
            rows.len() + 1
        };
        let m = if rows.is_empty() { 0 } else { m };
        for (i, r) in rows.iter().enumerate() {
            if r.len() != m - 1 - i {
                return Err(Error::input(format!(
                    "row {i} of the upper triangle has {} entries, expected {}",
                    r.len(),
                    m - 1 - i
                )));
            }
        }
        Coloring::from_fn(m, |i, j| rows[i][j - i - 1])
    }

    /// A full symmetric `m x m` matrix; the diagonal is ignored.
    pub fn from_matrix(rows: &[Vec<u32>]) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::input("coloring matrix is not square"));
        }
        for i in 0..m {
            for j in i + 1..m {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::input(format!(
                        "coloring matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Coloring::from_fn(m, |i, j| rows[i][j])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn color(&self, i: usize, j: usize) -> u32 {
        self.colors[i][j]
    }

    fn palette(&self) -> Vec<u32> {
        let mut p: Vec<u32> = (0..self.m)
            .flat_map(|i| (i + 1..self.m).map(move |j| (i, j)))
            .map(|(i, j)| self.colors[i][j])
            .collect();
        p.sort_unstable();
        p.dedup();
        p
    }
}

impl TryFrom<Vec<Vec<u32>>> for Coloring {
    type Error = Error;

    /// Square input is read as a full matrix, anything else as an upper triangle.
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() > 1 && rows.iter().all(|r| r.len() == rows.len()) {
            Coloring::from_matrix(&rows)
        } else {
            Coloring::from_upper_triangle(&rows)
        }
    }
}

impl From<Coloring> for Vec<Vec<u32>> {
    fn from(c: Coloring) -> Self {
        (0..c.m).map(|i| c.colors[i][i + 1..].to_vec()).collect()
    }
}

/// First `n`-subset (by color, then lexicographically) whose internal edges
/// all have one color, with that color.
pub fn monochromatic_subset(coloring: &Coloring, n: usize) -> Option<(Vec<usize>, u32)> {
    let m = coloring.m;
    if n > m {
        return None;
    }
    if n <= 1 {
        return Some(((0..n).collect(), 0));
    }
    for c in coloring.palette() {
        let nbrs: Vec<VertexSet> = (0..m)
            .map(|i| {
                (0..m)
                    .filter(|&j| j != i && coloring.colors[i][j] == c)
                    .collect()
            })
            .collect();
        let mut chosen = Vec::with_capacity(n);
        if clique(&nbrs, VertexSet::full(m), n, &mut chosen) {
            return Some((chosen, c));
        }
    }
    None
}

fn clique(nbrs: &[VertexSet], candidates: VertexSet, n: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == n {
        return true;
    }
    if chosen.len() + candidates.len() < n {
        return false;
    }
    for v in candidates {
        chosen.push(v);
        let later = VertexSet::from_bits(candidates.bits() & (u64::MAX << v << 1));
        if clique(nbrs, later & nbrs[v], n, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_coloring() {
        let c = Coloring::from_fn(5, |_, _| 7).unwrap();
        assert_eq!(monochromatic_subset(&c, 3), Some((vec![0, 1, 2], 7)));
        assert_eq!(monochromatic_subset(&c, 6), None);
        assert_eq!(monochromatic_subset(&c, 2), Some((vec![0, 1], 7)));
    }

    #[test]
    fn pentagon_has_no_triangle() {
        // the 2-coloring of K_5 by C_5 and its complement
        let c =
            Coloring::from_fn(5, |i, j| u32::from((j - i) % 5 == 1 || (j - i) % 5 == 4)).unwrap();
        assert_eq!(monochromatic_subset(&c, 3), None);
    }

    #[test]
    fn json_forms() {
        let tri: Coloring = serde_json::from_str("[[0,1],[1]]").unwrap();
        let full: Coloring = serde_json::from_str("[[0,0,1],[0,0,1],[1,1,0]]").unwrap();
        assert_eq!(tri, full);
        assert_eq!(serde_json::to_string(&tri).unwrap(), "[[0,1],[1],[]]");
        assert!(serde_json::from_str::<Coloring>("[[0,1,2],[1]]").is_err());
        assert!(serde_json::from_str::<Coloring>("[[0,1],[0,0]]").is_err());
    }
}
