//! Crate-wide error type.

use thiserror::Error;

/// Broad failure categories, used by callers (notably the CLI) to map
/// errors onto exit codes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ErrorKind {
    /// Mathematically invalid request (inverting zero, non-unit inversion).
    Domain,
    /// Mismatched or malformed inputs (moduli, dimensions, parse errors).
    Configuration,
    /// A computation was refused because it would exceed a stated budget.
    Resource,
    /// An input violated a structural contract (non-ideal, non-commutative,
    /// broken ring axioms).
    Contract,
}

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range [2, 2^31)")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("total degree {degree} exceeds the degree cap {cap}")]
    DegreeOverflow { degree: u32, cap: u32 },

    #[error("parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("ring load error: {0}")]
    RingLoad(String),

    #[error("associativity fails at basis triple ({i},{j},{k})")]
    Associativity { i: usize, j: usize, k: usize },

    #[error("identity axiom fails at basis index {0}")]
    IdentityAxiom(usize),

    #[error("enumeration budget exceeded for {check}: would scan {needed} elements, budget is {budget}")]
    BudgetExceeded {
        check: String,
        needed: u128,
        budget: u128,
    },

    #[error("non-unit element: valuation {0}")]
    NonUnit(usize),

    #[error("subspace is not nilpotent: powers stabilize at dimension {stabilized_dim}")]
    NotNilpotent { stabilized_dim: usize },

    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::DivisionByZero | Error::NonUnit(_) => ErrorKind::Domain,
            Error::NotPrime(_)
            | Error::ModulusMismatch(..)
            | Error::Parse { .. }
            | Error::DimensionMismatch { .. }
            | Error::AlgebraMismatch
            | Error::RingLoad(_) => ErrorKind::Configuration,
            Error::DegreeOverflow { .. } | Error::BudgetExceeded { .. } => ErrorKind::Resource,
            Error::Associativity { .. }
            | Error::IdentityAxiom(_)
            | Error::NotNilpotent { .. }
            | Error::Contract(_) => ErrorKind::Contract,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
