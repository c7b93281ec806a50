//! Cospans and spans of finite-dimensional vector spaces up to the bound equivalence,
//! together with composition, dagger, tensor, and the transposition between them.

mod class;
mod cosp;
mod span;

pub use class::CanonicalClass;
pub use cosp::{
    canonical_cosp, compose_cosp, dagger_cosp, equiv_cosp, iota_cosp, leq_cosp, lower_bound,
    minimal_rep, tensor_cosp, upper_bound, BoundWitness, Cospan,
};
pub use span::{
    canonical_span, compose_span, dagger_span, equiv_span, iota_span, leq_span, tensor_span,
    transpose_cosp, transpose_span, Span,
};

use crate::abcat::VecObj;
use crate::error::{Error, Result};

fn check_feet(a0: VecObj, a1: VecObj, b0: VecObj, b1: VecObj) -> Result<()> {
    if a0 != b0 || a1 != b1 {
        return Err(Error::FootMismatch(format!(
            "({a0}, {a1}) vs ({b0}, {b1})"
        )));
    }
    Ok(())
}
