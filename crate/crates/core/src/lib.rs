//! Exact rational workbench for Rota-Baxter family BiHom-Ω-associative algebras.
//!
//! Everything is computed over ℚ with no rounding. The crate is `no_std` and
//! needs only `alloc`.
#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod cochain_complex;
pub mod deformation;
pub mod error;
pub mod exact_linalg;
pub mod extension;
pub mod gerstenhaber;
pub mod monoid;
pub mod omega_algebra;
pub mod omega_bimodule;
pub mod rbf_cohomology;

pub use error::{Check, Error, ErrorKind, Result, Witness};
pub use exact_linalg::{Mat, Rat};
pub use monoid::Monoid;
