//! The two structures a graph without long induced paths is pushed into:
//! cliques `X_1..X_n` that all meet one independent set `Q` the same way,
//! or cliques each paired with its own set `Y_i`.

use serde::{Deserialize, Serialize};

use super::{HKind, Replayed};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::families::{blown_product, complete, copies, edgeless, product, LinkMatrix};
use crate::graph::{Graph, ProductKind};
use crate::vm::{Step, VMWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum CaseShape {
    /// Every `G[X_i ∪ Q]` is `K_n ⊙ S_n` for the same matching kind.
    Shared { kind: ProductKind },
    /// Every `G[X_i ∪ Y_i]` is the given product and distinct pairs are
    /// anti-complete.
    Paired { h: HKind },
}

/// Labeled blocks. `x[i][j]` is matched (or anti-matched) to `q[j]`, or to
/// `y[i][j]` in the paired case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseStructure {
    pub n: usize,
    pub shape: CaseShape,
    pub x: Vec<Vec<usize>>,
    pub q: Vec<usize>,
    pub y: Vec<Vec<usize>>,
}

/// The canonical graph for `shape`. Shared case: `X_i` occupies
/// `(i-1)n..in` and `Q` follows at `n²..n²+n`. Paired case: the blown
/// product with zero link matrix, so pair `i` starts at `2n(i-1)`.
pub fn build_case_structure(n: usize, shape: CaseShape) -> Result<(Graph, CaseStructure)> {
    if n < 2 {
        return Err(Error::input("case structures need n >= 2"));
    }
    match shape {
        CaseShape::Shared { kind } => {
            if kind == ProductKind::Half {
                return Err(Error::input(
                    "the shared case uses a matching or anti-matching",
                ));
            }
            let mut g = Graph::empty(n * n + n)?;
            let x: Vec<Vec<usize>> = (0..n).map(|i| (i * n..(i + 1) * n).collect()).collect();
            let q: Vec<usize> = (n * n..n * n + n).collect();
            for block in &x {
                g.join(block.iter().collect(), block.iter().collect(), true);
                for (j, &u) in block.iter().enumerate() {
                    for (k, &v) in q.iter().enumerate() {
                        if kind.links(j, k) {
                            g.set_edge(u, v, true);
                        }
                    }
                }
            }
            Ok((
                g,
                CaseStructure {
                    n,
                    shape,
                    x,
                    q,
                    y: Vec::new(),
                },
            ))
        }
        CaseShape::Paired { h } => {
            let (top, bottom) = h.sides(n)?;
            let g = blown_product(&top, &bottom, h.kind, n, LinkMatrix::ZERO)?;
            let x = (0..n)
                .map(|i| (2 * n * i..2 * n * i + n).collect())
                .collect();
            let y = (0..n)
                .map(|i| (2 * n * i + n..2 * n * (i + 1)).collect())
                .collect();
            Ok((
                g,
                CaseStructure {
                    n,
                    shape,
                    x,
                    q: Vec::new(),
                    y,
                },
            ))
        }
    }
}

/// Checks the block invariants and that each block pair induces the
/// product under the recorded orderings.
pub fn check_case_structure(g: &Graph, cs: &CaseStructure) -> bool {
    let n = cs.n;
    let mut all: Vec<usize> =
        cs.x.iter()
            .flatten()
            .chain(&cs.q)
            .chain(cs.y.iter().flatten())
            .copied()
            .collect();
    let count = all.len();
    all.sort_unstable();
    all.dedup();
    if all.len() != count || all.last().is_some_and(|&v| v >= g.n()) || cs.x.len() != n {
        return false;
    }
    let xs: Vec<usize> = cs.x.iter().flatten().copied().collect();
    let Ok(nkn) = complete(n).and_then(|k| copies(n, &k)) else {
        return false;
    };
    if g.induced(&xs) != nkn {
        return false;
    }
    let expect = |kind: ProductKind, bottom_clique: bool| -> Result<Graph> {
        let bottom = if bottom_clique {
            complete(n)?
        } else {
            edgeless(n)?
        };
        product(&complete(n)?, &bottom, kind)
    };
    match cs.shape {
        CaseShape::Shared { kind } => {
            let Ok(want) = expect(kind, false) else {
                return false;
            };
            cs.q.len() == n
                && cs.x.iter().all(|xi| {
                    let verts: Vec<usize> = xi.iter().chain(&cs.q).copied().collect();
                    g.induced(&verts) == want
                })
        }
        CaseShape::Paired { h } => {
            let Ok(want) = expect(h.kind, h.bottom_clique) else {
                return false;
            };
            let blocks: Vec<VertexSet> =
                cs.x.iter()
                    .zip(&cs.y)
                    .map(|(a, b)| a.iter().chain(b).collect())
                    .collect();
            cs.y.len() == n
                && cs.x.iter().zip(&cs.y).all(|(xi, yi)| {
                    let verts: Vec<usize> = xi.iter().chain(yi).copied().collect();
                    g.induced(&verts) == want
                })
                && blocks.iter().enumerate().all(|(i, &a)| {
                    blocks[i + 1..]
                        .iter()
                        .all(|&b| a.iter().all(|u| (g.neighbors(u) & b).is_empty()))
                })
        }
    }
}

fn require(g: &Graph, cs: &CaseStructure, kind: ProductKind) -> Result<()> {
    if cs.shape != (CaseShape::Shared { kind }) || !check_case_structure(g, cs) {
        return Err(Error::input(format!(
            "graph does not have the shared structure with {} links",
            kind.name()
        )));
    }
    Ok(())
}

/// Vertices of `block` whose only neighbor in `among` is `target`.
fn private_to(g: &Graph, block: &[usize], among: VertexSet, target: usize) -> Option<usize> {
    block
        .iter()
        .copied()
        .find(|&u| g.neighbors(u) & among == VertexSet::singleton(target))
}

/// The induced path `v_1 x_1 y_1 v_2 x_2 y_2 ... v_n x_n` on `3n - 1`
/// vertices, where `v_1..v_n` is `Q` in ascending order, `x_i ∈ X_i` sees
/// only `v_i` in `Q` and `y_i ∈ X_i` sees only `v_{i+1}`.
pub fn lemma_first1_path(g: &Graph, cs: &CaseStructure) -> Result<Vec<usize>> {
    require(g, cs, ProductKind::Match)?;
    let n = cs.n;
    let q_set: VertexSet = cs.q.iter().collect();
    let mut seq = Vec::with_capacity(3 * n - 1);
    for i in 0..n {
        let v = cs.q[i];
        let x = private_to(g, &cs.x[i], q_set, v)
            .ok_or_else(|| Error::input("missing matched vertex"))?;
        seq.push(v);
        seq.push(x);
        if i + 1 < n {
            let y = private_to(g, &cs.x[i], q_set, cs.q[i + 1])
                .ok_or_else(|| Error::input("missing matched vertex"))?;
            seq.push(y);
        }
    }
    Ok(seq)
}

/// Outcome of the anti-matching construction, with labels of the source graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct First2 {
    /// the vertex of `Q` removed first
    pub v: usize,
    /// `v_i ∈ X_i`, the non-neighbor of `v`
    pub vi: Vec<usize>,
    /// steps producing the intermediate graph `G_1`
    pub to_g1: VMWitness,
    /// all steps, producing `G_2`
    pub witness: VMWitness,
    /// induced path on `4n - 5` vertices of `G_2`
    pub path: Vec<usize>,
}

/// Builds the path `w_1 x_1 v_1 y_1 w_2 ... w_{n-1} x_{n-1} v_{n-1}` on
/// `4n - 5` vertices. `v` is the least vertex of `Q`. `G_1` complements at
/// `v_1..v_n` (`n` even) or `v_1..v_{n-1}` (`n` odd) and deletes `v` and
/// `X_n`; `G_2` then complements at every vertex of `X_i \ {v_i}`, `i < n`.
pub fn lemma_first2_path(g: &Graph, cs: &CaseStructure) -> Result<First2> {
    require(g, cs, ProductKind::Antimatch)?;
    let n = cs.n;
    if n < 3 {
        return Err(Error::input(
            "the anti-matching path construction needs n >= 3",
        ));
    }
    let v = cs.q[0];
    let vi: Vec<usize> =
        cs.x.iter()
            .map(|xi| {
                xi.iter()
                    .copied()
                    .find(|&u| !g.has_edge(u, v))
                    .expect("anti-matched")
            })
            .collect();
    let last = if n.is_multiple_of(2) { n } else { n - 1 };
    let mut steps: Vec<Step> = vi[..last].iter().map(|&u| Step::lc(u)).collect();
    steps.push(Step::del(v));
    steps.extend(cs.x[n - 1].iter().map(|&u| Step::del(u)));
    let to_g1 = VMWitness::new(steps.clone());
    for i in 0..n - 1 {
        steps.extend(
            cs.x[i]
                .iter()
                .filter(|&&u| u != vi[i])
                .map(|&u| Step::lc(u)),
        );
    }
    let witness = VMWitness::new(steps);

    let g2 = Replayed::new(g, &witness)?;
    let w: Vec<usize> = cs.q[1..].to_vec();
    let private = |i: usize, target: usize| -> Result<usize> {
        for &u in cs.x[i].iter().filter(|&&u| u != vi[i]) {
            let nq: Vec<usize> = g2
                .neighbors(u)?
                .into_iter()
                .filter(|z| w.contains(z))
                .collect();
            if nq == [target] {
                return Ok(u);
            }
        }
        Err(Error::witness(format!(
            "no vertex of X_{} sees only {target} in Q",
            i + 1
        )))
    };
    let mut path = Vec::with_capacity(4 * n - 5);
    for i in 0..n - 1 {
        path.push(w[i]);
        path.push(private(i, w[i])?);
        path.push(vi[i]);
        if i + 2 < n {
            path.push(private(i, w[i + 1])?);
        }
    }
    Ok(First2 {
        v,
        vi,
        to_g1,
        witness,
        path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{is_induced_path, longest_induced_path};
    use crate::vm::apply_witness;

    #[test]
    fn structures_validate() {
        for n in 2..=4 {
            for kind in [ProductKind::Match, ProductKind::Antimatch] {
                let (g, cs) = build_case_structure(n, CaseShape::Shared { kind }).unwrap();
                assert_eq!(g.n(), n * n + n);
                assert!(check_case_structure(&g, &cs));
            }
            for h in HKind::ALL {
                let (g, cs) = build_case_structure(n, CaseShape::Paired { h }).unwrap();
                assert_eq!(g.n(), 2 * n * n);
                assert!(check_case_structure(&g, &cs));
            }
        }
        assert!(build_case_structure(
            1,
            CaseShape::Shared {
                kind: ProductKind::Match
            }
        )
        .is_err());
        let (g, mut cs) = build_case_structure(
            3,
            CaseShape::Shared {
                kind: ProductKind::Match,
            },
        )
        .unwrap();
        cs.q.swap(0, 1);
        assert!(!check_case_structure(&g, &cs));
    }

    #[test]
    fn first1_paths() {
        for n in 2..=5 {
            let (g, cs) = build_case_structure(
                n,
                CaseShape::Shared {
                    kind: ProductKind::Match,
                },
            )
            .unwrap();
            let p = lemma_first1_path(&g, &cs).unwrap();
            assert_eq!(p.len(), 3 * n - 1);
            assert!(is_induced_path(&g, &p));
        }
        let (g, _) = build_case_structure(
            3,
            CaseShape::Shared {
                kind: ProductKind::Match,
            },
        )
        .unwrap();
        assert!(longest_induced_path(&g).len() >= 8);
        let (g, anti) = build_case_structure(
            3,
            CaseShape::Shared {
                kind: ProductKind::Antimatch,
            },
        )
        .unwrap();
        assert!(lemma_first1_path(&g, &anti).is_err());
    }

    #[test]
    fn first2_paths() {
        for n in 3..=5 {
            let (g, cs) = build_case_structure(
                n,
                CaseShape::Shared {
                    kind: ProductKind::Antimatch,
                },
            )
            .unwrap();
            let f = lemma_first2_path(&g, &cs).unwrap();
            assert_eq!(f.path.len(), 4 * n - 5);
            let g2 = Replayed::new(&g, &f.witness).unwrap();
            let idx: Vec<usize> = f.path.iter().map(|&l| g2.index(l).unwrap()).collect();
            assert!(is_induced_path(&g2.graph, &idx));
            let g1 = apply_witness(&g, &f.to_g1).unwrap();
            assert_eq!(g1.n(), n * n + n - 1 - n);
        }
    }
}
