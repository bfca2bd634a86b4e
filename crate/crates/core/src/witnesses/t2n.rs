//! Subdivided stars `T_{2,n}` as vertex-minors of the four small products.
//!
//! Product labels: `v_i = i - 1` on the `K` side and `w_i = m + i - 1` on the
//! other side, where `m` is the side size.

use serde::{Deserialize, Serialize};

use super::HKind;
use crate::error::{Error, Result};
use crate::graph::families::{product, subdivided_star};
use crate::graph::{Graph, ProductKind};
use crate::vm::{Step, VMWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T2n {
    pub case: u8,
    pub source: Graph,
    pub witness: VMWitness,
    pub target: Graph,
}

/// The product used by `case` and its side size.
pub fn t2n_source(case: u8, n: usize) -> Result<(HKind, usize)> {
    let (kind, clique, m) = match case {
        1 => (ProductKind::Match, false, n + 1),
        2 => (ProductKind::Match, true, n + 2),
        3 => (ProductKind::Antimatch, false, n + 2),
        4 => (ProductKind::Antimatch, true, n + 1),
        _ => return Err(Error::input(format!("case must be 1..4, got {case}"))),
    };
    Ok((HKind::new(kind, clique)?, m))
}

/// Steps on the `case` product with sides of size `m`, in product labels.
pub(crate) fn t2n_steps(case: u8, m: usize) -> Vec<Step> {
    let v = |i: usize| i - 1;
    let w = |i: usize| m + i - 1;
    match case {
        1 => vec![Step::del(w(1)), Step::lc(v(1))],
        2 => vec![
            Step::del(v(1)),
            Step::del(w(2)),
            Step::lc(v(2)),
            Step::lc(w(1)),
            Step::del(w(1)),
        ],
        3 => vec![
            Step::del(w(1)),
            Step::del(v(2)),
            Step::lc(v(1)),
            Step::lc(w(2)),
            Step::del(w(2)),
        ],
        _ => std::iter::once(Step::del(w(1)))
            .chain((1..=m).map(|i| Step::lc(v(i))))
            .collect(),
    }
}

/// Source product, witness, and the target `T_{2,n}` for one of the four
/// constructions:
/// 1. `(K_{n+1} ⋈ S_{n+1} - w_1) * v_1`
/// 2. `((K_{n+2} ⋈ K_{n+2} - {v_1, w_2}) * v_2 * w_1) - w_1`
/// 3. `((K_{n+2} ▽ S_{n+2} - {w_1, v_2}) * v_1 * w_2) - w_2`
/// 4. `(K_{n+1} ▽ K_{n+1} - w_1) * v_1 * v_2 * ... * v_{n+1}`
pub fn t2n_witness(case: u8, n: usize) -> Result<T2n> {
    if n == 0 {
        return Err(Error::input("n must be positive"));
    }
    let (h, m) = t2n_source(case, n)?;
    let (top, bottom) = h.sides(m)?;
    Ok(T2n {
        case,
        source: product(&top, &bottom, h.kind)?,
        witness: VMWitness::new(t2n_steps(case, m)),
        target: subdivided_star(n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::vm::apply_witness;

    #[test]
    fn all_cases_give_subdivided_stars() {
        for case in 1..=4 {
            for n in 1..=5 {
                let t = t2n_witness(case, n).unwrap();
                let end = apply_witness(&t.source, &t.witness).unwrap();
                assert!(
                    are_isomorphic(&end, &t.target).unwrap().is_some(),
                    "case {case} n {n}"
                );
            }
        }
        assert!(t2n_witness(5, 2).is_err());
        assert!(t2n_witness(1, 0).is_err());
    }

    #[test]
    fn case_two_at_one_is_a_path() {
        let t = t2n_witness(2, 1).unwrap();
        assert_eq!(t.source.n(), 6);
        assert_eq!(t.target, crate::graph::families::path(3).unwrap());
    }
}
