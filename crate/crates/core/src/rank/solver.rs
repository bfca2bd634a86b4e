//! Exact solvers for depth-`d` rank-brittleness, rank-depth and rank
//! `k`-brittleness.
//!
//! All three reduce to choosing set partitions. A decomposition rooted at a
//! center is a nested family of partitions: the root splits `V` into at least
//! two parts, and every part of size at least two is an internal node that
//! splits again with one less unit of depth. Internal nodes with a single
//! child never lower the width (the child's width already dominates
//! `ρ(S)`), so they are not generated.
//!
//! Partitions are enumerated part by part: each new part contains the least
//! vertex not yet covered, and the candidate parts are tried in decreasing
//! bitmask order, so coarser splits come first. The first optimum met in
//! this order is returned: listing parts by least element, it is the
//! lexicographically least optimum when each part is keyed by the bitwise
//! complement of its mask. The choice does not depend on thread count.

use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

use super::{cut_rank_table, Decomposition, DecompositionNode, Partition};
use crate::bitset::VertexSet;
use crate::caps::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::Graph;

struct Search<'a, F> {
    rho: &'a [u8],
    part_cost: &'a F,
    min_parts: usize,
    universe: VertexSet,
    /// exclusive bound: only strictly better solutions are recorded
    best: u32,
    shared: Option<&'a AtomicU32>,
    best_parts: Option<Vec<VertexSet>>,
    parts: Vec<VertexSet>,
    unions: Vec<u64>,
}

impl<'a, F: Fn(VertexSet) -> Option<u32> + Sync> Search<'a, F> {
    fn new(
        rho: &'a [u8],
        part_cost: &'a F,
        min_parts: usize,
        universe: VertexSet,
        bound: u32,
    ) -> Self {
        Search {
            rho,
            part_cost,
            min_parts,
            universe,
            best: bound,
            shared: None,
            best_parts: None,
            parts: Vec::new(),
            unions: vec![0],
        }
    }

    fn pruned(&self, value: u32) -> bool {
        value >= self.best
            || self
                .shared
                .is_some_and(|s| value > s.load(Ordering::Relaxed))
    }

    /// Adds `part` and returns the new running width, or `None` if pruned.
    fn push(&mut self, part: VertexSet, current: u32) -> Option<u32> {
        let cost = (self.part_cost)(part)?;
        let mut width = current.max(cost);
        if self.pruned(width) {
            return None;
        }
        let base = self.unions.len();
        for i in 0..base {
            let u = self.unions[i] | part.bits();
            width = width.max(self.rho[u as usize] as u32);
            if self.pruned(width) {
                self.unions.truncate(base);
                return None;
            }
            self.unions.push(u);
        }
        self.parts.push(part);
        Some(width)
    }

    fn pop(&mut self) {
        self.parts.pop();
        self.unions.truncate(self.unions.len() / 2);
    }

    fn run(&mut self, remaining: VertexSet, current: u32) {
        let Some(v) = remaining.first() else {
            if self.parts.len() >= self.min_parts && current < self.best {
                self.best = current;
                self.best_parts = Some(self.parts.clone());
                if let Some(s) = self.shared {
                    s.fetch_min(current, Ordering::Relaxed);
                }
            }
            return;
        };
        let rest = (remaining - VertexSet::singleton(v)).bits();
        let mut sub = rest;
        loop {
            let part = VertexSet::from_bits(sub) | VertexSet::singleton(v);
            if !(self.min_parts >= 2 && part == self.universe) {
                if let Some(width) = self.push(part, current) {
                    self.run(remaining - part, width);
                    self.pop();
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
}

/// Minimum over partitions of `universe` into at least `min_parts` parts of
/// `max(ρ-width of the partition, max part_cost(part))`, restricted to values
/// below `bound`. `part_cost` returns `None` for forbidden parts.
fn best_partition<F>(
    rho: &[u8],
    universe: VertexSet,
    min_parts: usize,
    bound: u32,
    part_cost: &F,
    parallel: bool,
) -> Option<(u32, Vec<VertexSet>)>
where
    F: Fn(VertexSet) -> Option<u32> + Sync,
{
    let Some(v) = universe.first() else {
        return (min_parts == 0).then(|| (0, Vec::new()));
    };
    if !parallel || universe.len() < 7 {
        let mut s = Search::new(rho, part_cost, min_parts, universe, bound);
        s.run(universe, 0);
        return s.best_parts.map(|p| (s.best, p));
    }
    // Split on the part containing the least vertex. Each branch finds its own
    // first optimum; a shared bound prunes only strictly worse branches.
    let shared = AtomicU32::new(bound);
    let mut firsts: Vec<VertexSet> = (universe - VertexSet::singleton(v))
        .subsets()
        .map(|s| s | VertexSet::singleton(v))
        .filter(|&p| !(min_parts >= 2 && p == universe))
        .collect();
    firsts.reverse();
    firsts
        .par_iter()
        .enumerate()
        .filter_map(|(i, &first)| {
            let mut s = Search::new(rho, part_cost, min_parts, universe, bound);
            s.shared = Some(&shared);
            let width = s.push(first, 0)?;
            s.run(universe - first, width);
            s.best_parts.map(|p| (s.best, i, p))
        })
        .min_by_key(|(value, i, _)| (*value, *i))
        .map(|(value, _, p)| (value, p))
}

/// Optimal non-root subtrees for every vertex subset, level by level.
///
/// `levels[r - 1][S]` is the least width of a subtree of depth at most `r`
/// whose leaves are `S` (for `|S| >= 2`), with the chosen split of `S`.
struct DepthTables {
    n: usize,
    rho: Vec<u8>,
    levels: Vec<Vec<(u8, Vec<VertexSet>)>>,
}

impl DepthTables {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let rho = cut_rank_table(g);
        // depth 1: all children are leaves, so the width is max ρ over subsets
        let mut level1: Vec<(u8, Vec<VertexSet>)> = Vec::with_capacity(1 << n);
        for mask in 0..(1usize << n) {
            let set = VertexSet::from_bits(mask as u64);
            let sub = set
                .iter()
                .map(|v| level1[mask & !(1 << v)].0)
                .max()
                .unwrap_or(0);
            level1.push((sub.max(rho[mask]), Vec::new()));
        }
        DepthTables {
            n,
            rho,
            levels: vec![level1],
        }
    }

    fn part_cost(&self, depth: usize) -> impl Fn(VertexSet) -> Option<u32> + Sync + '_ {
        move |p: VertexSet| {
            if p.len() == 1 {
                Some(0)
            } else if depth == 0 {
                None
            } else {
                Some(self.levels[depth - 1][p.bits() as usize].0 as u32)
            }
        }
    }

    /// Makes `levels[depth - 1]` available.
    fn ensure(&mut self, depth: usize) {
        while self.levels.len() < depth {
            let r = self.levels.len() + 1;
            let level = self.next_level(r);
            self.levels.push(level);
        }
    }

    fn next_level(&self, r: usize) -> Vec<(u8, Vec<VertexSet>)> {
        let prev = &self.levels[r - 2];
        let cost = self.part_cost(r - 1);
        (0..(1usize << self.n))
            .into_par_iter()
            .map(|mask| {
                let set = VertexSet::from_bits(mask as u64);
                if set.len() < 2 {
                    return (0, Vec::new());
                }
                let bound = prev[mask].0 as u32 + 1;
                let (value, parts) = best_partition(&self.rho, set, 2, bound, &cost, false)
                    .expect("the previous level's split is always available");
                (value as u8, parts)
            })
            .collect()
    }

    fn node(&self, set: VertexSet, depth: usize) -> DecompositionNode {
        if set.len() == 1 {
            return DecompositionNode::Leaf(set.first().expect("nonempty"));
        }
        let parts = &self.levels[depth - 1][set.bits() as usize].1;
        if depth == 1 || parts.is_empty() {
            return DecompositionNode::Internal(set.iter().map(DecompositionNode::Leaf).collect());
        }
        DecompositionNode::Internal(parts.iter().map(|&p| self.node(p, depth - 1)).collect())
    }

    /// Optimal decomposition of depth at most `depth`, searching only below `bound`.
    fn root(&mut self, depth: usize, bound: u32) -> Option<(u32, Decomposition)> {
        let all = VertexSet::full(self.n);
        if depth == 1 {
            let value = self.levels[0][all.bits() as usize].0 as u32;
            return (value < bound).then(|| (value, Decomposition::star(self.n)));
        }
        self.ensure(depth - 1);
        let cost = self.part_cost(depth - 1);
        let (value, parts) = best_partition(&self.rho, all, 2, bound, &cost, true)?;
        let root =
            DecompositionNode::Internal(parts.iter().map(|&p| self.node(p, depth - 1)).collect());
        Some((value, Decomposition::new(root)))
    }
}

/// Exact `rbrit_d(G)` with an optimal decomposition of depth at most `d`.
/// Graphs with fewer than two vertices have value `0` and no decomposition.
pub fn rbrit_exact(g: &Graph, d: usize, caps: &SolverCaps) -> Result<(u32, Option<Decomposition>)> {
    if d == 0 {
        return Err(Error::input("depth bound d must be at least 1"));
    }
    let n = g.n();
    let limit = match d {
        1 => caps.lrw_max_n,
        2 => caps.rbrit2_max_n,
        _ => caps.decomposition_max_n,
    };
    SolverCaps::check(limit, n, &format!("depth-{d} rank-brittleness"))?;
    if n < 2 {
        return Ok((0, None));
    }
    let mut tables = DepthTables::new(g);
    // a subtree never needs more depth than it has vertices minus one
    let depth = d.min(n - 1);
    let (value, witness) = tables
        .root(depth, u32::MAX)
        .expect("unbounded search always finds a decomposition");
    Ok((value, Some(witness)))
}

/// Exact rank-depth: the least `k` admitting a decomposition of depth and
/// width at most `k`, with that decomposition.
pub fn rank_depth_exact(g: &Graph, caps: &SolverCaps) -> Result<(u32, Option<Decomposition>)> {
    let n = g.n();
    SolverCaps::check(caps.decomposition_max_n, n, "rank-depth")?;
    if n < 2 {
        return Ok((0, None));
    }
    let mut tables = DepthTables::new(g);
    for k in 1.. {
        let depth = (k as usize).min(n - 1);
        if let Some((_, witness)) = tables.root(depth, k + 1) {
            return Ok((k, Some(witness)));
        }
    }
    unreachable!("rank-depth is at most the depth-1 width")
}

/// Exact rank `k`-brittleness: least `ρ`-width over partitions whose parts
/// have at most `k` vertices.
pub fn beta_rho_k(g: &Graph, k: usize, caps: &SolverCaps) -> Result<(u32, Partition)> {
    if k == 0 {
        return Err(Error::input("part-size bound k must be at least 1"));
    }
    let n = g.n();
    let limit = if k == 1 {
        caps.lrw_max_n
    } else {
        caps.partition_max_n
    };
    SolverCaps::check(limit, n, "rank k-brittleness")?;
    if n == 0 {
        return Ok((0, Partition::new(Vec::new())));
    }
    if k == 1 {
        let tables = DepthTables::new(g);
        let value = tables.levels[0][VertexSet::full(n).bits() as usize].0 as u32;
        return Ok((value, Partition::singletons(n)));
    }
    let rho = cut_rank_table(g);
    let cost = |p: VertexSet| (p.len() <= k).then_some(0);
    let (value, parts) = best_partition(&rho, VertexSet::full(n), 1, u32::MAX, &cost, true)
        .expect("singletons are always allowed");
    Ok((value, Partition::new(parts)))
}
