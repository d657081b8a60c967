use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact_linalg::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input data has the wrong shape or refers to missing keys.
    Malformed,
    /// An operation was called on inputs outside its domain.
    Precondition,
    /// A mathematical identity that must hold by construction failed.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Error {
    pub kind: ErrorKind,
    pub message: String,
}

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Error {
        Error { kind: ErrorKind::Malformed, message: msg.into() }
    }

    pub fn precondition(msg: impl Into<String>) -> Error {
        Error { kind: ErrorKind::Precondition, message: msg.into() }
    }

    pub fn internal(msg: impl Into<String>) -> Error {
        Error { kind: ErrorKind::Internal, message: msg.into() }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            ErrorKind::Malformed => "malformed input",
            ErrorKind::Precondition => "precondition failed",
            ErrorKind::Internal => "internal consistency failure",
        };
        write!(f, "{}: {}", k, self.message)
    }
}

pub type Result<T> = core::result::Result<T, Error>;

/// First counterexample found by a validation scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub equation: &'static str,
    /// Ω indices in the order they appear in the identity.
    pub omega: Vec<usize>,
    /// Basis indices of the arguments.
    pub basis: Vec<usize>,
    pub lhs: Vec<Rat>,
    pub rhs: Vec<Rat>,
}

impl Witness {
    pub fn new(equation: &'static str, omega: &[usize], basis: &[usize], lhs: Vec<Rat>, rhs: Vec<Rat>) -> Witness {
        Witness { equation, omega: omega.to_vec(), basis: basis.to_vec(), lhs, rhs }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at omega={:?} basis={:?}: {:?} != {:?}", self.equation, self.omega, self.basis, self.lhs, self.rhs)
    }
}

/// Outcome of a validation: `Ok(())` or the first counterexample.
pub type Check = core::result::Result<(), Witness>;

/// Compares two vectors and produces a witness when they differ.
pub(crate) fn expect_eq(equation: &'static str, omega: &[usize], basis: &[usize], lhs: Vec<Rat>, rhs: Vec<Rat>) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(equation, omega, basis, lhs, rhs))
    }
}
