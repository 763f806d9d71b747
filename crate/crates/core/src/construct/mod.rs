//! Builders for the four grounded representation kinds. Every builder
//! verifies its own output before returning it.

mod filaments;
mod lshapes;
mod rectangles;
mod stairs;

use crate::error::{Error, Result};
use crate::geometry::{verify_representation, Representation};
use crate::graph::Graph;
use crate::ordering::Ordering;
use crate::pattern::{make_ps, occurs, PsSubset};

pub use filaments::build_interval_filaments;
pub use lshapes::build_touching_lshapes;
pub use rectangles::build_touching_rectangles;
pub use stairs::build_grounded_stairs;

/// Fails with `OrderingNotAvoiding` if `sigma` realizes `P_S`.
fn require_avoiding(g: &Graph, sigma: &Ordering, s: PsSubset) -> Result<()> {
    match occurs(g, sigma, &make_ps(s))? {
        Some(witness) => Err(Error::OrderingNotAvoiding { witness }),
        None => Ok(()),
    }
}

fn self_verify(rep: Representation, g: &Graph) -> Result<Representation> {
    let report = verify_representation(&rep, g)?;
    if report.is_valid() {
        Ok(rep)
    } else {
        Err(Error::VerificationFailed(report))
    }
}
