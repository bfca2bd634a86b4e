//! Reductions between blown products `H^t_A` and the asymmetric case.
//!
//! In `H^t_A` copy `k` (from 0) occupies `2mk..2m(k+1)`, top side first.
//! The reductions are certified by labeled equality: the replayed graph must
//! coincide with a directly constructed blown product, vertex for vertex.

use serde::{Deserialize, Serialize};

use super::t2n::{t2n_source, t2n_steps};
use super::HKind;
use crate::bitset::VertexSet;
use crate::caps::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::families::{
    blown_product, complete, copies, edgeless, path, product, subdivided_star, LinkMatrix,
};
use crate::graph::iso::are_isomorphic_with_limit;
use crate::graph::{Graph, ProductKind};
use crate::vm::{apply_witness_labeled, has_vertex_minor_isomorphic, Step, VMWitness};

/// A witness from one blown product to another, with the graph it must
/// reproduce exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub source: Graph,
    pub witness: VMWitness,
    pub expected: Graph,
    /// product of the expected graph
    pub expected_h: HKind,
    pub expected_copies: usize,
    pub expected_link: LinkMatrix,
}

fn blown(h: HKind, m: usize, t: usize, link: LinkMatrix) -> Result<Graph> {
    let (top, bottom) = h.sides(m)?;
    blown_product(&top, &bottom, h.kind, t, link)
}

fn check_size(m: usize, t: usize) -> Result<()> {
    if 2 * m * t > crate::graph::MAX_VERTICES {
        return Err(Error::resource(format!(
            "a blown product with {t} copies of {} vertices exceeds {} vertices",
            2 * m,
            crate::graph::MAX_VERTICES
        )));
    }
    Ok(())
}

/// `G = H^{n+1}_A` with `H = K_{n+2} ⊙ K/S_{n+2}` and `A = (0 0; 0 1)`.
/// Complementing at the first bottom vertex `w` of copy 0 and deleting copy 0
/// leaves `H'^n_0`, where `H'` has its bottom side complemented: `w` sees
/// every other bottom vertex, so the bottoms lose their links across copies
/// and flip between clique and edgeless inside each copy.
pub fn blown_reduce_d1(h: HKind, n: usize) -> Result<Reduction> {
    if n < 2 {
        return Err(Error::input("needs n >= 2"));
    }
    let m = n + 2;
    check_size(m, n + 1)?;
    let source = blown(h, m, n + 1, LinkMatrix::new(false, false, false, true))?;
    let w = m;
    let mut steps = vec![Step::lc(w)];
    steps.extend((0..2 * m).map(Step::del));
    let expected_h = HKind {
        kind: h.kind,
        bottom_clique: !h.bottom_clique,
    };
    Ok(Reduction {
        source,
        witness: VMWitness::new(steps),
        expected: blown(expected_h, m, n, LinkMatrix::ZERO)?,
        expected_h,
        expected_copies: n,
        expected_link: LinkMatrix::ZERO,
    })
}

/// `G = H^{n+2}_A` with `A = (0 1; 1 d)`. Keep from copy 0 only its first
/// top vertex `x` and a bottom neighbor `y` of it, then pivot on `xy` and
/// delete both. The pivot toggles every top-bottom pair, which clears the
/// off-diagonal links between copies and swaps matching with anti-matching
/// inside each copy, leaving `H'^{n+1}_B` with `B = (0 0; 0 d)`.
pub fn blown_reduce_offdiag(h: HKind, d: bool, n: usize) -> Result<Reduction> {
    if n < 2 {
        return Err(Error::input("needs n >= 2"));
    }
    let m = n + 2;
    check_size(m, n + 2)?;
    let source = blown(h, m, n + 2, LinkMatrix::new(false, true, true, d))?;
    let x = 0;
    let y = (m..2 * m)
        .find(|&y| source.has_edge(x, y))
        .expect("x has a bottom neighbor");
    let mut steps: Vec<Step> = (0..2 * m)
        .filter(|&u| u != x && u != y)
        .map(Step::del)
        .collect();
    steps.extend([
        Step::lc(x),
        Step::lc(y),
        Step::lc(x),
        Step::del(x),
        Step::del(y),
    ]);
    let flipped = match h.kind {
        ProductKind::Match => ProductKind::Antimatch,
        _ => ProductKind::Match,
    };
    let expected_h = HKind {
        kind: flipped,
        bottom_clique: h.bottom_clique,
    };
    let link = LinkMatrix::new(false, false, false, d);
    Ok(Reduction {
        source,
        witness: VMWitness::new(steps),
        expected: blown(expected_h, m, n + 1, link)?,
        expected_h,
        expected_copies: n + 1,
        expected_link: link,
    })
}

/// A witness from a blown product all the way to `nT_{2,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub source: Graph,
    pub witness: VMWitness,
    pub target: Graph,
}

/// Appends `stage` (in the current graph's indices) to `steps` in source
/// labels and returns the replayed graph with updated labels.
fn push_stage(
    cur: &Graph,
    labels: &mut Vec<usize>,
    stage: &VMWitness,
    steps: &mut Vec<Step>,
) -> Result<Graph> {
    steps.extend(stage.relabel(labels).steps);
    let (next, kept) = apply_witness_labeled(cur, stage)?;
    *labels = kept.iter().map(|&i| labels[i]).collect();
    Ok(next)
}

/// Turns each copy of `h` (sides `m = n + 2`) in `H^n_0` into `T_{2,n}`.
fn copies_to_t2n(h: HKind, n: usize) -> Vec<Step> {
    let m = n + 2;
    let case = match (h.kind, h.bottom_clique) {
        (ProductKind::Match, false) => 1,
        (ProductKind::Match, true) => 2,
        (_, false) => 3,
        (_, true) => 4,
    };
    let (_, side) = t2n_source(case, n).expect("valid case");
    let mut steps = Vec::new();
    for k in 0..n {
        let base = 2 * m * k;
        // cases 1 and 4 use sides of n + 1: drop the last matched pair
        // (v_m, w_m) first, then shift the bottom labels down by one
        if side < m {
            steps.push(Step::del(base + m - 1));
            steps.push(Step::del(base + 2 * m - 1));
        }
        steps.extend(t2n_steps(case, side).into_iter().map(|s| {
            let v = if s.v < side {
                base + s.v
            } else {
                base + m + (s.v - side)
            };
            Step { op: s.op, v }
        }));
    }
    steps
}

/// Chains the off-diagonal reduction, then (for `d = 1`) the diagonal one,
/// then the subdivided-star construction in every remaining copy. For
/// `d = 0` the extra copy left by the first reduction is deleted instead.
pub fn offdiag_chain(h: HKind, d: bool, n: usize) -> Result<Chain> {
    let first = blown_reduce_offdiag(h, d, n)?;
    let mut labels: Vec<usize> = (0..first.source.n()).collect();
    let mut steps = Vec::new();
    let mut cur = push_stage(&first.source, &mut labels, &first.witness, &mut steps)?;
    if cur != first.expected {
        return Err(Error::witness(
            "off-diagonal reduction did not reproduce the blown product",
        ));
    }
    let mut h_now = first.expected_h;
    let m = n + 2;
    if d {
        let second = blown_reduce_d1(h_now, n)?;
        if cur != second.source {
            return Err(Error::witness(
                "intermediate graph is not the expected blown product",
            ));
        }
        cur = push_stage(&cur, &mut labels, &second.witness, &mut steps)?;
        if cur != second.expected {
            return Err(Error::witness(
                "diagonal reduction did not reproduce the blown product",
            ));
        }
        h_now = second.expected_h;
    } else {
        let extra = VMWitness::new((2 * m * n..2 * m * (n + 1)).map(Step::del).collect());
        cur = push_stage(&cur, &mut labels, &extra, &mut steps)?;
    }
    push_stage(
        &cur,
        &mut labels,
        &VMWitness::new(copies_to_t2n(h_now, n)),
        &mut steps,
    )?;
    Ok(Chain {
        source: first.source,
        witness: VMWitness::new(steps),
        target: copies(n, &subdivided_star(n)?)?,
    })
}

/// Both graphs of the asymmetric case with the half-graphs found in them
/// and path vertex-minor witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymHalfgraph {
    pub link: LinkMatrix,
    /// `(K_1 ⋈ K_1)^n_A`
    pub matched: Graph,
    /// `(K_1 ▽ K_1)^{n+1}_A`
    pub antimatched: Graph,
    /// the half-graph both contain: `S_n ⊲ S_n` if `d = 0`, `K_n ⊲ S_n` if `d = 1`
    pub half: Graph,
    pub half_name: String,
    /// isomorphism from `matched` onto `half`
    pub matched_iso: Vec<usize>,
    /// vertices of `antimatched` inducing a copy of `half`, with the isomorphism
    pub antimatched_subset: Vec<usize>,
    pub antimatched_iso: Vec<usize>,
    /// `P_{2n-2}`
    pub path: Graph,
    pub matched_path: VMWitness,
    pub antimatched_path: VMWitness,
}

/// For `A = (0 b; c d)` with `b != c`, the `K_1` tops are independent and
/// the bottoms form a clique exactly when `d = 1`; the links between copies
/// order the top-bottom adjacencies into a half-graph. So `(K_1 ⋈ K_1)^n_A`
/// is `S_n ⊲ S_n` (`d = 0`) or `K_n ⊲ S_n` (`d = 1`, reading the clique side
/// as the first factor), and `(K_1 ▽ K_1)^{n+1}_A` contains it after
/// dropping one vertex from each end. Both then have `P_{2n-2}` as a
/// vertex-minor.
pub fn asym_halfgraph(
    b: bool,
    c: bool,
    d: bool,
    n: usize,
    caps: &SolverCaps,
) -> Result<AsymHalfgraph> {
    if b == c {
        return Err(Error::input("the link matrix must be asymmetric (b != c)"));
    }
    if n < 2 {
        return Err(Error::input("needs n >= 2"));
    }
    check_size(1, n + 1)?;
    let link = LinkMatrix::new(false, b, c, d);
    let k1 = complete(1)?;
    let matched = blown_product(&k1, &k1, ProductKind::Match, n, link)?;
    let antimatched = blown_product(&k1, &k1, ProductKind::Antimatch, n + 1, link)?;
    let (half, half_name) = if d {
        (
            product(&complete(n)?, &edgeless(n)?, ProductKind::Half)?,
            format!("K_{n} half S_{n}"),
        )
    } else {
        (
            product(&edgeless(n)?, &edgeless(n)?, ProductKind::Half)?,
            format!("S_{n} half S_{n}"),
        )
    };
    let limit = caps.search_node_limit;
    let matched_iso = are_isomorphic_with_limit(&matched, &half, limit)?
        .ok_or_else(|| Error::witness(format!("(K_1 match K_1)^{n}_A is not {half_name}")))?;

    let mut found = None;
    let all = antimatched.vertices();
    for a in all.iter() {
        for b2 in all.iter().filter(|&b2| b2 > a) {
            let subset = (all - VertexSet::singleton(a) - VertexSet::singleton(b2)).to_vec();
            if let Some(iso) =
                are_isomorphic_with_limit(&antimatched.induced(&subset), &half, limit)?
            {
                found = Some((subset, iso));
                break;
            }
        }
        if found.is_some() {
            break;
        }
    }
    let (antimatched_subset, antimatched_iso) =
        found.ok_or_else(|| Error::witness(format!("no induced {half_name} found")))?;

    let target = path(2 * n - 2)?;
    let matched_path = has_vertex_minor_isomorphic(&matched, &target, caps)?
        .ok_or_else(|| Error::witness("no path vertex-minor in the matched graph"))?;
    let inner = antimatched.induced(&antimatched_subset);
    let inner_path = has_vertex_minor_isomorphic(&inner, &target, caps)?
        .ok_or_else(|| Error::witness("no path vertex-minor in the induced half-graph"))?;
    let outside: Vec<Step> = (all - antimatched_subset.iter().collect())
        .iter()
        .map(Step::del)
        .collect();
    let antimatched_path = VMWitness::new(outside).then(&inner_path.relabel(&antimatched_subset));
    Ok(AsymHalfgraph {
        link,
        matched,
        antimatched,
        half,
        half_name,
        matched_iso,
        antimatched_subset,
        antimatched_iso,
        path: target,
        matched_path,
        antimatched_path,
    })
}

/// Labeled comparison of a reduction's replay against its expected graph.
#[cfg(test)]
fn reduction_holds(r: &Reduction) -> Result<bool> {
    let replay = super::Replayed::new(&r.source, &r.witness)?;
    Ok(replay.graph == r.expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::vm::apply_witness;

    #[test]
    fn diagonal_reduction() {
        for h in HKind::ALL {
            let r = blown_reduce_d1(h, 2).unwrap();
            assert_eq!(r.source.n(), 24);
            assert!(reduction_holds(&r).unwrap(), "{}", h.name());
            assert_eq!(r.expected_h.bottom_clique, !h.bottom_clique);
        }
    }

    #[test]
    fn offdiagonal_reduction() {
        for h in HKind::ALL {
            for d in [false, true] {
                let r = blown_reduce_offdiag(h, d, 2).unwrap();
                assert_eq!(r.source.n(), 32);
                assert!(reduction_holds(&r).unwrap(), "{} d={d}", h.name());
            }
        }
    }

    #[test]
    fn chains_reach_copies_of_subdivided_stars() {
        for h in HKind::ALL {
            for d in [false, true] {
                let c = offdiag_chain(h, d, 2).unwrap();
                let end = apply_witness(&c.source, &c.witness).unwrap();
                assert!(
                    are_isomorphic(&end, &c.target).unwrap().is_some(),
                    "{} d={d}",
                    h.name()
                );
            }
        }
    }

    #[test]
    fn asymmetric_links_give_half_graphs() {
        let caps = SolverCaps::default();
        for n in 2..=4 {
            for (b, c) in [(true, false), (false, true)] {
                for d in [false, true] {
                    let a = asym_halfgraph(b, c, d, n, &caps).unwrap();
                    let p = apply_witness(&a.matched, &a.matched_path).unwrap();
                    assert!(are_isomorphic(&p, &a.path).unwrap().is_some());
                    let p = apply_witness(&a.antimatched, &a.antimatched_path).unwrap();
                    assert!(are_isomorphic(&p, &a.path).unwrap().is_some());
                }
            }
        }
        assert!(asym_halfgraph(true, true, false, 3, &caps).is_err());
    }

    #[test]
    fn matched_case_is_not_the_clique_half_graph() {
        // at n = 2 with d = 0 the graph is P_4, which has 3 edges; K_2 ⊲ S_2 has 4
        let k1 = complete(1).unwrap();
        let g = blown_product(
            &k1,
            &k1,
            ProductKind::Match,
            2,
            LinkMatrix::new(false, true, false, false),
        )
        .unwrap();
        assert_eq!(g.edge_count(), 3);
    }
}
