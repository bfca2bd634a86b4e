use serde::{Deserialize, Serialize};

use crate::caps::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::families::{complete, edgeless, path, product};
use crate::graph::{Graph, ProductKind};
use crate::vm::{has_vertex_minor_isomorphic, locally_equivalent, VMWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfgraphCheck {
    pub case: u8,
    pub source: Graph,
    pub target: Graph,
    /// `None` when the search closed without finding one
    pub witness: Option<VMWitness>,
}

/// Searches for the relation between a half-graph and a path:
/// 1. `S_n ⊲ S_n` locally equivalent to `P_{2n}`;
/// 2. `K_n ⊲ S_n` locally equivalent to `P_{2n}`;
/// 3. `K_n ⊲ K_n` has a vertex-minor isomorphic to `P_{2n-2}` (`n >= 2`).
pub fn halfgraph_equiv_check(case: u8, n: usize, caps: &SolverCaps) -> Result<HalfgraphCheck> {
    if n == 0 {
        return Err(Error::input("n must be positive"));
    }
    let half = |a: Graph, b: Graph| product(&a, &b, ProductKind::Half);
    let (source, target) = match case {
        1 => (half(edgeless(n)?, edgeless(n)?)?, path(2 * n)?),
        2 => (half(complete(n)?, edgeless(n)?)?, path(2 * n)?),
        3 if n >= 2 => (half(complete(n)?, complete(n)?)?, path(2 * n - 2)?),
        3 => return Err(Error::input("case 3 needs n >= 2")),
        _ => return Err(Error::input(format!("case must be 1..3, got {case}"))),
    };
    let witness = if case == 3 {
        has_vertex_minor_isomorphic(&source, &target, caps)?
    } else {
        locally_equivalent(&source, &target, caps)?.map(|e| e.witness)
    };
    Ok(HalfgraphCheck {
        case,
        source,
        target,
        witness,
    })
}
