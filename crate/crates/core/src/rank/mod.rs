//! Cut-rank over GF(2) and the width parameters built on it.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub mod colorful;
pub mod decomposition;
pub mod layout;
pub mod partition;
pub mod solver;

pub use decomposition::{decomposition_width, Decomposition, DecompositionNode};
pub use layout::{dfs_layout, layout_width, lrw_exact, LinearLayout};
pub use partition::{rho_width, Partition};
pub use solver::{beta_rho_k, rank_depth_exact, rbrit_exact};

/// Rank over GF(2) of the given rows.
pub fn gf2_rank<I: IntoIterator<Item = u64>>(rows: I) -> u32 {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut r in rows {
        while r != 0 {
            let pivot = 63 - r.leading_zeros() as usize;
            if basis[pivot] == 0 {
                basis[pivot] = r;
                rank += 1;
                break;
            }
            r ^= basis[pivot];
        }
    }
    rank
}

/// `ρ_G(S)` without range checks.
#[inline]
pub fn cut_rank_unchecked(g: &Graph, set: VertexSet) -> u32 {
    let outside = (g.vertices() - set).bits();
    gf2_rank(set.iter().map(|v| g.rows()[v] & outside))
}

/// GF(2) rank of the `S × (V \ S)` adjacency submatrix.
pub fn cut_rank(g: &Graph, set: VertexSet) -> Result<u32> {
    if !set.is_subset(g.vertices()) {
        return Err(Error::input(format!(
            "vertex set {set:?} is not contained in 0..{}",
            g.n()
        )));
    }
    Ok(cut_rank_unchecked(g, set))
}

/// Vertices of `S` whose rows into `V \ S` are linearly independent; its
/// length is `ρ_G(S)`. Greedy in increasing vertex order.
pub fn cut_rank_basis(g: &Graph, set: VertexSet) -> Result<Vec<usize>> {
    cut_rank(g, set)?;
    let outside = (g.vertices() - set).bits();
    let mut basis = Vec::new();
    let mut rows = Vec::new();
    for v in set.iter() {
        rows.push(g.rows()[v] & outside);
        if gf2_rank(rows.iter().copied()) as usize > basis.len() {
            basis.push(v);
        } else {
            rows.pop();
        }
    }
    Ok(basis)
}

/// `ρ_G` for every subset of `V(G)`, indexed by bitmask.
pub(crate) fn cut_rank_table(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= 24, "cut-rank tables are limited to n <= 24");
    let full = (1u64 << n) - 1;
    let mut table = vec![0u8; 1 << n];
    for mask in 0..(1u64 << n) {
        let comp = full & !mask;
        // ρ(S) = ρ(V \ S): fill both halves from the smaller mask.
        if comp < mask {
            table[mask as usize] = table[comp as usize];
        } else {
            table[mask as usize] = cut_rank_unchecked(g, VertexSet::from_bits(mask)) as u8;
        }
    }
    table
}

/// Maximum of `ρ_G` over all unions of `sets` (which must be pairwise
/// disjoint). Visits the unions in Gray-code order.
pub(crate) fn max_union_rank(g: &Graph, sets: &[VertexSet]) -> Result<u32> {
    if sets.len() > 30 {
        return Err(Error::resource(format!(
            "width evaluation over {} parts needs 2^{} cut-rank evaluations",
            sets.len(),
            sets.len()
        )));
    }
    let mut best = 0;
    let mut union = VertexSet::EMPTY;
    for step in 1u64..(1u64 << sets.len()) {
        union = union ^ sets[step.trailing_zeros() as usize];
        best = best.max(cut_rank_unchecked(g, union));
    }
    Ok(best)
}
