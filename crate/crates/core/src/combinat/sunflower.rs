use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sets whose pairwise intersections all equal `core`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sunflower {
    pub members: Vec<Vec<usize>>,
    pub core: Vec<usize>,
}

/// `k!(p-1)^k`; families of more distinct `k`-sets contain a sunflower with
/// `p` petals. Saturates at `u128::MAX`.
pub fn erdos_rado_threshold(k: usize, p: usize) -> u128 {
    let mut t: u128 = 1;
    for i in 1..=k {
        t = t
            .saturating_mul(i as u128)
            .saturating_mul(p.saturating_sub(1) as u128);
    }
    t
}

/// Checks distinct members, pairwise intersections equal to the core.
pub fn is_sunflower(s: &Sunflower) -> bool {
    let sets: Vec<BTreeSet<usize>> = s
        .members
        .iter()
        .map(|m| m.iter().copied().collect())
        .collect();
    let core: BTreeSet<usize> = s.core.iter().copied().collect();
    if s.members.len() == 1 {
        return core.is_subset(&sets[0]);
    }
    sets.iter().enumerate().all(|(i, a)| {
        sets[i + 1..]
            .iter()
            .all(|b| a != b && a.intersection(b).copied().collect::<BTreeSet<_>>() == core)
    })
}

/// Looks for `p` members of `family` forming a sunflower.
///
/// Follows the Erdős–Rado argument: take a maximal pairwise disjoint
/// subfamily; if it is too small, some element lies in many sets, so recurse
/// into the sets containing the most frequent one (least element on ties)
/// with that element removed. Repeated sets count once. Above
/// [`erdos_rado_threshold`] distinct sets the search always succeeds.
pub fn find_sunflower(family: &[Vec<usize>], p: usize) -> Result<Option<Sunflower>> {
    if p == 0 {
        return Err(Error::input("a sunflower needs at least one petal"));
    }
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(family.len());
    for m in family {
        let mut s = m.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != m.len() {
            return Err(Error::input(format!("set {m:?} repeats an element")));
        }
        sets.push(s);
    }
    let Some(k) = sets.first().map(Vec::len) else {
        return Ok(None);
    };
    if k == 0 {
        return Err(Error::input("sets must be nonempty"));
    }
    if let Some(bad) = sets.iter().find(|s| s.len() != k) {
        return Err(Error::input(format!("set {bad:?} does not have size {k}")));
    }
    let mut seen = BTreeSet::new();
    sets.retain(|s| seen.insert(s.clone()));

    let found = grow(&sets, p).map(|(members, core)| Sunflower { members, core });
    if let Some(s) = &found {
        debug_assert!(is_sunflower(s));
    }
    Ok(found)
}

fn grow(sets: &[Vec<usize>], p: usize) -> Option<(Vec<Vec<usize>>, Vec<usize>)> {
    if p == 1 {
        return sets.first().map(|s| (vec![s.clone()], s.clone()));
    }
    let mut disjoint: Vec<&Vec<usize>> = Vec::new();
    let mut used = BTreeSet::new();
    for s in sets {
        if s.iter().all(|x| !used.contains(x)) {
            used.extend(s.iter().copied());
            disjoint.push(s);
            if disjoint.len() == p {
                return Some((disjoint.into_iter().cloned().collect(), Vec::new()));
            }
        }
    }
    let mut counts = std::collections::BTreeMap::new();
    for x in sets.iter().flatten() {
        *counts.entry(*x).or_insert(0usize) += 1;
    }
    // BTreeMap iterates in ascending order, so max_by_key keeping the first
    // maximum needs reversed iteration.
    let (&x, _) = counts.iter().rev().max_by_key(|(_, &c)| c)?;
    let reduced: Vec<Vec<usize>> = sets
        .iter()
        .filter(|s| s.contains(&x))
        .map(|s| s.iter().copied().filter(|&y| y != x).collect())
        .collect();
    if reduced.first().is_none_or(Vec::is_empty) {
        return None;
    }
    let (members, core) = grow(&reduced, p)?;
    let restore = |mut s: Vec<usize>| {
        let at = s.partition_point(|&y| y < x);
        s.insert(at, x);
        s
    };
    Some((members.into_iter().map(restore).collect(), restore(core)))
}
