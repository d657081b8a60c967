//! Exact rational linear algebra.

mod mat;
mod rat;

pub use mat::{kernel_basis, rank, rref, solve, vecops, Mat};
pub use rat::{Rat, RatParseError};

pub(crate) use mat::kernel_from_rref;
