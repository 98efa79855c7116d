//! Exact linear algebra over the rationals and small cyclotomic fields.
//!
//! Everything here is deterministic: the same input always produces the same
//! representation, and subspaces are canonical (reduced echelon basis), so
//! `==` on [`Subspace`] is equality of subspaces.

mod cyclotomic;
mod field;
mod matrix;
pub mod poly;
mod subspace;

pub use cyclotomic::{cyclotomic_poly, extend_subspace, totient, Cyclotomic};
pub use field::{format_rational, parse_rational, Field, Rational};
pub use matrix::Matrix;
pub use subspace::{extend_basis, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("lcm is undefined for a zero argument")]
    ZeroArgument,
}

pub fn gcd_nat(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm_nat(a: u64, b: u64) -> Result<u64, LinAlgError> {
    if a == 0 || b == 0 {
        return Err(LinAlgError::ZeroArgument);
    }
    Ok(a / gcd_nat(a, b) * b)
}
