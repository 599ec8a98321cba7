//! Exact construction and certification of ring-theoretic properties.
//!
//! The crate has four layers:
//!
//! - [`exactalg`]: prime fields, bivariate polynomials, the rational-
//!   function field F_p(x, y), and its two partial derivations;
//! - [`finalg`]: finite-dimensional algebras over F_p given by structure
//!   constants, exact linear algebra, and decision procedures for
//!   centers, radicals, singular ideals, central essentiality,
//!   uniformity, uniseriality, and related properties, each emitting a
//!   [`finalg::Certificate`];
//! - [`constructions`]: builders for group algebras (quaternion, cyclic,
//!   dihedral), exterior algebras, matrix algebras, small controls, and
//!   the derivation-twisted matrix ring family;
//! - [`valuation`]: the decision layer for the twisted family —
//!   valuations, unit inversion, centrality, ideal chains — with exact
//!   identity checks and seeded randomized suites.
//!
//! Every decision is exact: no floating point anywhere. Finite rings are
//! decided by linear algebra plus full enumeration within a budget;
//! the infinite twisted rings by closed forms plus post-verified sampling.

pub mod constructions;
pub mod error;
pub mod exactalg;
pub mod finalg;
pub mod valuation;

pub use error::{Error, ErrorKind, Result};
