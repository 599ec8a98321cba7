//! Finite-dimensional algebras over prime fields: exact linear algebra,
//! structure-constant rings, and the decision procedures and certificates
//! for their ring-theoretic properties.

pub mod algebra;
pub mod cert;
pub mod essential;
pub mod linalg;
pub mod radical;
pub mod structural;
pub mod suite;

pub use algebra::{
    pretty_element, AlgebraElement, QuotientAlgebra, RingFile, Side, StructureAlgebra, MAX_DIM,
};
pub use cert::{overall_verdict, Certificate, Method, Verdict, Witness};
pub use essential::{
    centrally_essential, centrally_essential_exhaustive, centrally_essential_socle,
    distinct_principal_ideals, singular_ideal, zero_divisor_analysis, CeMethod, CeOutcome,
};
pub use linalg::{FpMat, Subspace};
pub use radical::{
    jacobson_radical, jacobson_radical_generic, nilpotence_index, nilradical,
    nilradical_commutative, principal_left_ideal, principal_right_ideal, DEFAULT_BUDGET,
};
pub use structural::{
    completely_prime, essential_ideal, is_ideal_certificate, local,
    nilpotence_index_certificate, uniform, uniserial,
};
pub use suite::structure_suite;
