//! Solver size limits. Exceeding a limit is a resource error, never a
//! silent approximation.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolverCaps {
    /// Largest `n` for exact depth-2 rank-brittleness.
    pub rbrit2_max_n: usize,
    /// Largest `n` for rank-depth and depth-`d` rank-brittleness with `d >= 3`.
    pub decomposition_max_n: usize,
    /// Largest `n` for rank `k`-brittleness.
    pub partition_max_n: usize,
    /// Largest `n` for subset dynamic programs (linear rank-width, depth 1).
    pub lrw_max_n: usize,
    /// Labeled graphs visited by one local-equivalence orbit search.
    pub orbit_cap: usize,
    /// Backtracking nodes for isomorphism and pattern searches.
    pub search_node_limit: u64,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps {
            rbrit2_max_n: 10,
            decomposition_max_n: 8,
            partition_max_n: 10,
            lrw_max_n: 20,
            orbit_cap: 1_000_000,
            search_node_limit: 20_000_000,
        }
    }
}

pub const CAPS_ENV_VAR: &str = "RANKBRITTLE_CAPS";

impl SolverCaps {
    /// Defaults overridden by `RANKBRITTLE_CAPS`, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPS_ENV_VAR) {
            Ok(s) => SolverCaps::default().with_overrides(&s),
            Err(_) => Ok(SolverCaps::default()),
        }
    }

    /// Applies `key=value` pairs separated by commas, e.g.
    /// `rbrit2=12,lrw=22,orbit=2000000`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::input(format!("cap override {item:?} is not key=value")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("cap {key} has non-integer value {value:?}")))?;
            let small = |v: u64| -> Result<usize> {
                if v > 24 {
                    Err(Error::input(format!(
                        "cap {key}={v} exceeds 24, the largest size with subset tables"
                    )))
                } else {
                    Ok(v as usize)
                }
            };
            match key.trim() {
                "rbrit2" => self.rbrit2_max_n = small(value)?,
                "rankdepth" | "decomposition" => self.decomposition_max_n = small(value)?,
                "betark" | "partition" => self.partition_max_n = small(value)?,
                "lrw" => self.lrw_max_n = small(value)?,
                "orbit" => self.orbit_cap = value as usize,
                "nodes" => self.search_node_limit = value,
                other => return Err(Error::input(format!("unknown cap {other:?}"))),
            }
        }
        Ok(self)
    }

    pub(crate) fn check(limit: usize, n: usize, what: &str) -> Result<()> {
        if n > limit {
            Err(Error::resource(format!(
                "{what} is capped at n <= {limit}, got n = {n}"
            )))
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = SolverCaps::default()
            .with_overrides("rbrit2=12, lrw=22,orbit=5")
            .unwrap();
        assert_eq!(
            (caps.rbrit2_max_n, caps.lrw_max_n, caps.orbit_cap),
            (12, 22, 5)
        );
        assert!(SolverCaps::default().with_overrides("bogus=1").is_err());
        assert!(SolverCaps::default().with_overrides("lrw").is_err());
        assert!(SolverCaps::default().with_overrides("lrw=99").is_err());
    }
}
