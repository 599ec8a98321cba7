//! Exact coefficient arithmetic: prime fields, bivariate polynomials, the
//! rational-function field F_p(x, y), and its two partial derivations.

pub mod fp;
pub mod poly;
pub mod ratfunc;

pub use fp::PrimeField;
pub use poly::{degree_cap, Monomial, MultiPoly, Var};
pub use ratfunc::{parse, Derivation, RatFunc};
