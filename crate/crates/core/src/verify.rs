//! Verification reports: each constructs the objects for one claim and
//! re-checks every property with code independent of the construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::caps::SolverCaps;
use crate::combinat::{is_induced_path, longest_induced_path};
use crate::error::{Error, Result};
use crate::graph::enumerate::{nonisomorphic_up_to, random_graph};
use crate::graph::families::{copies, edgeless, product, subdivided_star};
use crate::graph::iso::is_isomorphism;
use crate::graph::twins::{is_twin_class, twin_classes};
use crate::graph::{are_isomorphic, Graph, ProductKind};
use crate::rank::colorful::{
    check_colorful_certificate, colorful_cut_witness, subdivided_star_copies,
};
use crate::rank::decomposition::random_decomposition;
use crate::rank::{beta_rho_k, dfs_layout, lrw_exact, rank_depth_exact, rbrit_exact};
use crate::vm::{apply_witness, reduce_triple_twin, triple_twin_vertex, Op};
use crate::witnesses::Replayed;
use crate::witnesses::{
    asym_halfgraph, blown_reduce_d1, blown_reduce_offdiag, build_case_structure,
    check_case_structure, halfgraph_equiv_check, lemma_first1_path, lemma_first2_path,
    offdiag_chain, t2n_witness, CaseShape, HKind, Reduction,
};

/// Identifiers accepted by [`verify`].
pub const CLAIM_IDS: [&str; 16] = [
    "L2.3-1", "L2.3-2", "L2.3-3", "L3.1", "L4.1", "L4.3", "L4.4", "L4.6-1", "L4.6-2", "L4.6-3",
    "L4.6-4", "L4.7", "L4.8", "L4.9", "P6.1", "S5-lower",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub parameters: Value,
    pub witness: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyParams {
    /// size parameter; each claim has its own default
    pub n: Option<usize>,
    /// random instances for sampled claims
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            n: None,
            samples: 50,
            seed: 0,
        }
    }
}

fn default_n(id: &str) -> usize {
    match id {
        "L3.1" => 7,
        "L4.1" => 8,
        "L4.3" => 4,
        "L4.4" => 5,
        "L4.8" | "L4.9" | "S5-lower" => 2,
        "P6.1" => 6,
        _ => 3,
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, pass: bool) {
        self.0.push(Check {
            name: name.into(),
            pass,
        });
    }
}

/// Runs the checks for `id`.
pub fn verify(id: &str, params: &VerifyParams, caps: &SolverCaps) -> Result<Report> {
    let n = params.n.unwrap_or_else(|| default_n(id));
    let mut checks = Checks(Vec::new());
    let witness = match id {
        "L2.3-1" | "L2.3-2" | "L2.3-3" => halfgraph(id, n, caps, &mut checks)?,
        "L3.1" => triple_twins(n, params, caps, &mut checks)?,
        "L4.1" => brittleness_bound(n, params, caps, &mut checks)?,
        "L4.3" => first1(n, &mut checks)?,
        "L4.4" => first2(n, &mut checks)?,
        "L4.6-1" | "L4.6-2" | "L4.6-3" | "L4.6-4" => {
            let case = id.as_bytes()[id.len() - 1] - b'0';
            t2n(case, n, &mut checks)?
        }
        "L4.7" => asymmetric(n, caps, &mut checks)?,
        "L4.8" => diagonal(n, &mut checks)?,
        "L4.9" => offdiagonal(n, &mut checks)?,
        "P6.1" => layouts(n, params, caps, &mut checks)?,
        "S5-lower" => lower_bound(n, params, caps, &mut checks)?,
        other => {
            return Err(Error::input(format!(
                "unknown claim {other:?}; expected one of {}",
                CLAIM_IDS.join(", ")
            )))
        }
    };
    let parameters = json!({ "n": n, "samples": params.samples, "seed": params.seed });
    Ok(Report {
        claim: id.to_string(),
        parameters,
        witness,
        checks: checks.0,
    })
}

fn iso_checked(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(match are_isomorphic(g, h)? {
        Some(map) => is_isomorphism(g, h, &map),
        None => false,
    })
}

fn halfgraph(id: &str, n: usize, caps: &SolverCaps, checks: &mut Checks) -> Result<Value> {
    let case = id.as_bytes()[id.len() - 1] - b'0';
    let c = halfgraph_equiv_check(case, n, caps)?;
    checks.add("witness found", c.witness.is_some());
    if let Some(w) = &c.witness {
        if case != 3 {
            checks.add("witness uses only local complementations", w.is_local());
        }
        checks.add(
            "replay is isomorphic to the path",
            iso_checked(&apply_witness(&c.source, w)?, &c.target)?,
        );
    }
    Ok(json!({ "source": c.source, "target": c.target, "steps": c.witness }))
}

/// `n` vertices with `1` and `2` made twins of `0`.
fn planted_triple_twin(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let base = random_graph(n, 0.5, rng);
    let mut edges: Vec<(usize, usize)> = base.edges().filter(|&(u, v)| u > 2 && v > 2).collect();
    for u in 3..n {
        if base.has_edge(0, u) {
            edges.extend([(0, u), (1, u), (2, u)]);
        }
    }
    if rng.gen_bool(0.5) {
        edges.extend([(0, 1), (0, 2), (1, 2)]);
    }
    Graph::from_edges(n, &edges)
}

fn triple_twins(
    n: usize,
    params: &VerifyParams,
    caps: &SolverCaps,
    checks: &mut Checks,
) -> Result<Value> {
    let graphs: Vec<Graph> = if n <= 8 {
        nonisomorphic_up_to(n)
            .into_iter()
            .filter(|g| triple_twin_vertex(g).is_some())
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        (0..params.samples)
            .map(|_| planted_triple_twin(n, &mut rng))
            .collect::<Result<_>>()?
    };
    let outcomes: Vec<(bool, bool)> = graphs
        .par_iter()
        .map(|g| -> Result<(bool, bool)> {
            let v = triple_twin_vertex(g).expect("filtered");
            let before = rbrit_exact(g, 2, caps)?.0;
            let after = rbrit_exact(&g.delete_vertex(v), 2, caps)?.0;
            let reduced = reduce_triple_twin(g);
            let small = twin_classes(&reduced)
                .iter()
                .all(|&c| c.len() <= 2 && is_twin_class(&reduced, c));
            Ok((before == after, small))
        })
        .collect::<Result<_>>()?;
    let mismatches: Vec<String> = graphs
        .iter()
        .zip(&outcomes)
        .filter(|(_, o)| !o.0)
        .take(5)
        .map(|(g, _)| crate::graph::graph6::encode(g).unwrap_or_default())
        .collect();
    checks.add("instances exist", !graphs.is_empty());
    checks.add(
        "depth-2 rank-brittleness unchanged by deleting a triple twin",
        outcomes.iter().all(|o| o.0),
    );
    checks.add(
        "reduction leaves twin classes of size at most 2",
        outcomes.iter().all(|o| o.1),
    );
    Ok(json!({ "graphs": graphs.len(), "mismatches": mismatches }))
}

fn brittleness_bound(
    n: usize,
    params: &VerifyParams,
    caps: &SolverCaps,
    checks: &mut Checks,
) -> Result<Value> {
    if n < 2 {
        return Err(Error::input("needs n >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let graphs: Vec<Graph> = (0..params.samples)
        .map(|_| {
            let k = rng.gen_range(2..=n);
            let p = rng.gen_range(0.1..0.9);
            random_graph(k, p, &mut rng)
        })
        .collect();
    let rows: Vec<[bool; 3]> = graphs
        .par_iter()
        .map(|g| -> Result<[bool; 3]> {
            let r2 = rbrit_exact(g, 2, caps)?.0;
            let mut ok = [false; 3];
            for k in 1..=3 {
                let beta = beta_rho_k(g, k, caps)?.0;
                ok[k - 1] = r2 <= 2.max(k as u32).max(beta);
            }
            Ok(ok)
        })
        .collect::<Result<_>>()?;
    for k in 1..=3 {
        checks.add(
            format!("rbrit_2 <= max(2, {k}, beta_{k}) on all samples"),
            rows.iter().all(|r| r[k - 1]),
        );
    }
    Ok(json!({ "graphs": graphs.len() }))
}

fn first1(n: usize, checks: &mut Checks) -> Result<Value> {
    let (g, cs) = build_case_structure(
        n,
        CaseShape::Shared {
            kind: ProductKind::Match,
        },
    )?;
    checks.add("case structure is valid", check_case_structure(&g, &cs));
    let p = lemma_first1_path(&g, &cs)?;
    checks.add("sequence is an induced path", is_induced_path(&g, &p));
    checks.add(
        format!("path has 3n-1 = {} vertices", 3 * n - 1),
        p.len() == 3 * n - 1,
    );
    if n <= 4 {
        let longest = longest_induced_path(&g).len();
        checks.add(
            "exhaustive longest induced path is at least as long",
            longest >= p.len(),
        );
    }
    Ok(json!({ "graph": g, "structure": cs, "path": p }))
}

fn first2(n: usize, checks: &mut Checks) -> Result<Value> {
    let (g, cs) = build_case_structure(
        n,
        CaseShape::Shared {
            kind: ProductKind::Antimatch,
        },
    )?;
    checks.add("case structure is valid", check_case_structure(&g, &cs));
    let f = lemma_first2_path(&g, &cs)?;
    let q_rest: Vec<usize> = cs.q.iter().copied().filter(|&u| u != f.v).collect();
    let g1 = Replayed::new(&g, &f.to_g1)?;
    let g2 = Replayed::new(&g, &f.witness)?;
    let mut deg2 = true;
    let mut nbr1 = true;
    let mut nbr2 = true;
    let mut matched = true;
    let s = edgeless(n - 1)?;
    let smatch = product(&s, &s, ProductKind::Match)?;
    for i in 0..n - 1 {
        let rest: Vec<usize> = cs.x[i].iter().copied().filter(|&u| u != f.vi[i]).collect();
        for &u in &rest {
            deg2 &= g1.neighbors(u)?.len() == 2;
        }
        let mut want1: Vec<usize> = rest.iter().chain(&q_rest).copied().collect();
        want1.sort_unstable();
        nbr1 &= g1.neighbors(f.vi[i])? == want1;
        nbr2 &= g2.neighbors(f.vi[i])? == rest;
        let block: Vec<usize> = rest.iter().chain(&q_rest).copied().collect();
        matched &= iso_checked(&g2.induced(&block)?, &smatch)?;
    }
    checks.add("G_1: every vertex of X_i minus v_i has degree 2", deg2);
    checks.add("G_1: N(v_i) = (X_i minus v_i) + (Q minus v)", nbr1);
    checks.add("G_2: N(v_i) = X_i minus v_i", nbr2);
    checks.add(
        "G_2: each (X_i minus v_i) + (Q minus v) induces S_{n-1} match S_{n-1}",
        matched,
    );
    let idx = f
        .path
        .iter()
        .map(|&l| g2.index(l))
        .collect::<Result<Vec<_>>>()?;
    checks.add(
        "sequence is an induced path of G_2",
        is_induced_path(&g2.graph, &idx),
    );
    checks.add(
        format!("path has 4n-5 = {} vertices", 4 * n - 5),
        f.path.len() == 4 * n - 5,
    );
    Ok(
        json!({ "graph": g, "structure": cs, "v": f.v, "v_i": f.vi, "to_g1": f.to_g1, "steps": f.witness, "path": f.path }),
    )
}

fn t2n(case: u8, n: usize, checks: &mut Checks) -> Result<Value> {
    let t = t2n_witness(case, n)?;
    let end = apply_witness(&t.source, &t.witness)?;
    checks.add(
        "target is the subdivided star",
        t.target == subdivided_star(n)?,
    );
    checks.add(
        "replay is isomorphic to T_{2,n}",
        iso_checked(&end, &t.target)?,
    );
    Ok(json!({ "source": t.source, "steps": t.witness, "target": t.target }))
}

fn asymmetric(n: usize, caps: &SolverCaps, checks: &mut Checks) -> Result<Value> {
    let mut out = Vec::new();
    for (b, c) in [(true, false), (false, true)] {
        for d in [false, true] {
            let a = asym_halfgraph(b, c, d, n, caps)?;
            let tag = format!("b={} c={} d={}", u8::from(b), u8::from(c), u8::from(d));
            checks.add(
                format!("{tag}: (K_1 match K_1)^n_A is {}", a.half_name),
                is_isomorphism(&a.matched, &a.half, &a.matched_iso),
            );
            let sub = a.antimatched.induced(&a.antimatched_subset);
            checks.add(
                format!(
                    "{tag}: (K_1 antimatch K_1)^(n+1)_A has an induced {}",
                    a.half_name
                ),
                is_isomorphism(&sub, &a.half, &a.antimatched_iso),
            );
            checks.add(
                format!("{tag}: matched graph has a P_(2n-2) vertex-minor"),
                iso_checked(&apply_witness(&a.matched, &a.matched_path)?, &a.path)?,
            );
            checks.add(
                format!("{tag}: antimatched graph has a P_(2n-2) vertex-minor"),
                iso_checked(
                    &apply_witness(&a.antimatched, &a.antimatched_path)?,
                    &a.path,
                )?,
            );
            out.push(json!({
                "b": b, "c": c, "d": d,
                "half_graph": a.half_name,
                "antimatched_subset": a.antimatched_subset,
                "matched_steps": a.matched_path,
                "antimatched_steps": a.antimatched_path,
            }));
        }
    }
    checks.add("2n-2 >= n, so P_n is a vertex-minor too", 2 * n - 2 >= n);
    Ok(Value::Array(out))
}

fn reduction_json(h: HKind, r: &Reduction) -> Value {
    json!({
        "h": h.name(),
        "steps": r.witness,
        "result": r.expected_h.name(),
        "copies": r.expected_copies,
        "link": r.expected_link,
    })
}

fn labeled_equal(r: &Reduction) -> Result<bool> {
    Ok(apply_witness(&r.source, &r.witness)? == r.expected)
}

fn diagonal(n: usize, checks: &mut Checks) -> Result<Value> {
    let mut out = Vec::new();
    for h in HKind::ALL {
        let r = blown_reduce_d1(h, n)?;
        let shape = r.witness.steps.first().is_some_and(|s| s.op == Op::Lc)
            && r.witness.steps[1..].iter().all(|s| s.op == Op::Del);
        checks.add(
            format!("{}: one local complementation, then deletions", h.name()),
            shape,
        );
        checks.add(
            format!(
                "{}: replay equals {} blown with zero links",
                h.name(),
                r.expected_h.name()
            ),
            labeled_equal(&r)?,
        );
        out.push(reduction_json(h, &r));
    }
    Ok(Value::Array(out))
}

fn offdiagonal(n: usize, checks: &mut Checks) -> Result<Value> {
    let mut out = Vec::new();
    for h in HKind::ALL {
        for d in [false, true] {
            let r = blown_reduce_offdiag(h, d, n)?;
            checks.add(
                format!(
                    "{} d={}: replay equals {} blown with B = (0 0; 0 d)",
                    h.name(),
                    u8::from(d),
                    r.expected_h.name()
                ),
                labeled_equal(&r)?,
            );
            let mut entry = reduction_json(h, &r);
            if 2 * (n + 2) * (n + 2) <= crate::graph::MAX_VERTICES {
                let chain = offdiag_chain(h, d, n)?;
                let end = apply_witness(&chain.source, &chain.witness)?;
                checks.add(
                    format!(
                        "{} d={}: chained witness reaches n copies of T_(2,n)",
                        h.name(),
                        u8::from(d)
                    ),
                    iso_checked(&end, &chain.target)?
                        && chain.target == copies(n, &subdivided_star(n)?)?,
                );
                entry["chain_steps"] = json!(chain.witness);
            }
            out.push(entry);
        }
    }
    Ok(Value::Array(out))
}

fn layouts(
    n: usize,
    params: &VerifyParams,
    caps: &SolverCaps,
    checks: &mut Checks,
) -> Result<Value> {
    if n < 2 {
        return Err(Error::input("needs n >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let graphs: Vec<Graph> = (0..params.samples)
        .map(|_| {
            let p = rng.gen_range(0.1..0.9);
            random_graph(n, p, &mut rng)
        })
        .collect();
    let rows: Vec<(u32, u32, u32)> = graphs
        .par_iter()
        .map(|g| -> Result<(u32, u32, u32)> {
            let (lrw, _) = lrw_exact(g, caps)?;
            let (rd, dec) = rank_depth_exact(g, caps)?;
            let dec = dec.expect("n >= 2");
            let layout = dfs_layout(g, &dec)?;
            Ok((lrw, rd, layout.width))
        })
        .collect::<Result<_>>()?;
    checks.add(
        "lrw <= rd^2 on all samples",
        rows.iter().all(|&(l, r, _)| l <= r * r),
    );
    checks.add(
        "DFS layout of an optimal decomposition has width <= rd^2",
        rows.iter().all(|&(_, r, w)| w <= r * r),
    );
    checks.add(
        "lrw <= DFS layout width",
        rows.iter().all(|&(l, _, w)| l <= w),
    );
    let worst = rows
        .iter()
        .map(|&(l, r, w)| json!([l, r, w]))
        .max_by_key(|v| v[0].as_u64());
    Ok(
        json!({ "graphs": graphs.len(), "columns": ["lrw", "rd", "dfs_width"], "max_lrw_row": worst }),
    )
}

fn lower_bound(
    n: usize,
    params: &VerifyParams,
    caps: &SolverCaps,
    checks: &mut Checks,
) -> Result<Value> {
    let g = subdivided_star_copies(n)?;
    let need = crate::rank::colorful::required_width(n);
    let mut exact = Value::Null;
    if g.n() <= caps.rbrit2_max_n {
        let (value, dec) = rbrit_exact(&g, 2, caps)?;
        checks.add(format!("exact rbrit_2 is at least {need}"), value >= need);
        exact = json!({ "value": value, "decomposition": dec });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut certs = Vec::new();
    let mut valid = true;
    for _ in 0..params.samples {
        let d = random_decomposition(g.n(), 2, &mut rng);
        let cert = colorful_cut_witness(&g, n, &d)?;
        valid &= check_colorful_certificate(&g, n, &d, &cert).is_ok();
        certs.push(cert);
    }
    checks.add(
        format!(
            "certificates of width >= {need} validate on {} random depth-2 decompositions",
            params.samples
        ),
        valid && certs.len() == params.samples,
    );
    let inside = certs
        .iter()
        .filter(|c| {
            matches!(
                c,
                crate::rank::colorful::ColorfulCertificate::InsideChild { .. }
            )
        })
        .count();
    Ok(
        json!({ "graph": g, "exact": exact, "inside_child": inside, "root_union": certs.len() - inside, "first": certs.first() }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_claim_passes_at_small_size() {
        let caps = SolverCaps::default();
        let params = VerifyParams {
            n: None,
            samples: 10,
            seed: 1,
        };
        for id in CLAIM_IDS {
            let p = match id {
                "L3.1" => VerifyParams {
                    n: Some(5),
                    ..params
                },
                "L4.1" | "P6.1" => VerifyParams {
                    n: Some(5),
                    ..params
                },
                "L2.3-1" | "L2.3-2" | "L2.3-3" => VerifyParams {
                    n: Some(2),
                    ..params
                },
                _ => params,
            };
            let r = verify(id, &p, &caps).unwrap();
            assert!(r.passed(), "{id}: {:?}", r.checks);
        }
        assert!(verify("L9.9", &params, &caps).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let caps = SolverCaps::default();
        let p = VerifyParams {
            n: Some(5),
            samples: 8,
            seed: 3,
        };
        let a = serde_json::to_string(&verify("L4.1", &p, &caps).unwrap()).unwrap();
        let b = serde_json::to_string(&verify("L4.1", &p, &caps).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
