//! Constructive searches for sunflowers, monochromatic cliques, bipartite
//! patterns, and long induced paths.

mod paths;
mod pattern;
mod ramsey;
mod sunflower;

pub use paths::{is_induced_path, longest_induced_path, path_or_high_degree, PathOrDegree};
pub use pattern::{bipartite_pattern, is_pattern, Pattern};
pub use ramsey::{monochromatic_subset, Coloring};
pub use sunflower::{erdos_rado_threshold, find_sunflower, is_sunflower, Sunflower};
