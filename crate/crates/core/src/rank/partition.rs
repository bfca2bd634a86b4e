use serde::{Deserialize, Serialize};

use super::max_union_rank;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An ordered list of disjoint nonempty vertex sets covering `V(G)`.
/// Serialized as an array of arrays of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    pub parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        Partition { parts }
    }

    pub fn singletons(n: usize) -> Self {
        Partition::new((0..n).map(VertexSet::singleton).collect())
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = VertexSet::EMPTY;
        for (i, &p) in self.parts.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::input(format!("part {i} is empty")));
            }
            if !p.is_subset(VertexSet::full(n)) {
                return Err(Error::input(format!(
                    "part {i} has a vertex outside 0..{n}"
                )));
            }
            if !(seen & p).is_empty() {
                return Err(Error::input(format!("part {i} overlaps an earlier part")));
            }
            seen = seen | p;
        }
        if seen != VertexSet::full(n) {
            return Err(Error::input(format!(
                "parts miss vertices {:?}",
                VertexSet::full(n) - seen
            )));
        }
        Ok(())
    }

    pub fn max_part_size(&self) -> usize {
        self.parts.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    /// Parts sorted internally and ordered by least element.
    pub fn normalized(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|p| p.first());
        Partition::new(parts)
    }
}

/// `ρ_G`-width: the maximum cut-rank over all unions of parts.
pub fn rho_width(g: &Graph, p: &Partition) -> Result<u32> {
    p.validate(g.n())?;
    match p.parts.split_last() {
        None => Ok(0),
        // a union containing the last part is the complement of one that does not
        Some((_, rest)) => max_union_rank(g, rest),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, path};
    use crate::rank::cut_rank_unchecked;

    fn brute_width(g: &Graph, p: &Partition) -> u32 {
        let m = p.parts.len();
        (0u64..1 << m)
            .map(|mask| {
                let u: VertexSet = (0..m)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(VertexSet::EMPTY, |acc, i| acc | p.parts[i]);
                cut_rank_unchecked(g, u)
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn spec_examples() {
        let p4 = path(4).unwrap();
        assert_eq!(
            rho_width(&p4, &Partition::new(vec![VertexSet::full(4)])).unwrap(),
            0
        );
        assert_eq!(
            rho_width(&complete(4).unwrap(), &Partition::singletons(4)).unwrap(),
            1
        );
        let halves = Partition::new(vec![
            VertexSet::from_bits(0b0011),
            VertexSet::from_bits(0b1100),
        ]);
        assert_eq!(rho_width(&p4, &halves).unwrap(), 1);
        assert_eq!(brute_width(&p4, &halves), 1);
    }

    #[test]
    fn invalid_partitions_rejected() {
        let p4 = path(4).unwrap();
        let overlap = Partition::new(vec![
            VertexSet::from_bits(0b0111),
            VertexSet::from_bits(0b1100),
        ]);
        assert!(rho_width(&p4, &overlap).is_err());
        let missing = Partition::new(vec![VertexSet::from_bits(0b0111)]);
        assert!(rho_width(&p4, &missing).is_err());
        let empty_part = Partition::new(vec![VertexSet::full(4), VertexSet::EMPTY]);
        assert!(rho_width(&p4, &empty_part).is_err());
    }

    #[test]
    fn halved_enumeration_matches_full() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let g = crate::graph::enumerate::random_graph(n, 0.5, &mut rng);
            let m = rng.gen_range(1..=n);
            let mut parts = vec![VertexSet::EMPTY; m];
            for v in 0..n {
                parts[if v < m { v } else { rng.gen_range(0..m) }].insert(v);
            }
            let p = Partition::new(parts);
            assert_eq!(rho_width(&g, &p).unwrap(), brute_width(&g, &p));
        }
    }

    #[test]
    fn serde_shape() {
        let p = Partition::new(vec![
            VertexSet::from_bits(0b101),
            VertexSet::from_bits(0b010),
        ]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[[0,2],[1]]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), p);
    }
}
