//! Forbidden ordered patterns, grounded intersection representations and
//! the small-catalog tooling that ties them together.

pub mod construct;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod hierarchy;
pub mod oracles;
pub mod ordering;
pub mod pattern;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{canonical_form, emit_graph6, enumerate_catalog, parse_graph6, Graph, GraphCatalog};
pub use ordering::Ordering;
pub use pattern::{make_ps, mirror, occurs, pattern_included, Label, Pattern, PatternSet, PsSubset};
pub use solver::{avoids_all, brute_force_membership, find_avoiding_ordering, MembershipResult};
