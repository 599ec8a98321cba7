//! Radicals: the nilradical of a commutative (sub)algebra via iterated
//! Frobenius kernels, and the Jacobson radical of a finite algebra, either
//! verified from a construction-supplied ideal or computed by enumeration.

use crate::error::{Error, Result};
use crate::finalg::algebra::{Side, StructureAlgebra};
use crate::finalg::linalg::{FpMat, Subspace};

/// Enumeration budget: full element scans are refused when p^dim exceeds it.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

/// Checks that a p^dim-element scan fits the budget.
pub fn require_budget(alg: &StructureAlgebra, budget: u128, check: &str) -> Result<u128> {
    let needed = alg.element_count().unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            check: check.into(),
            needed,
            budget,
        });
    }
    Ok(needed)
}

/// Nilradical of a commutative subalgebra, given by a spanning subspace
/// closed under multiplication (pass the full space for the whole algebra).
///
/// In characteristic p the map x ↦ x^p is F_p-linear on a commutative
/// algebra; x is nilpotent iff x^(p^m) = 0 once p^m bounds the nilpotency
/// index, so the nilradical is the kernel of the m-fold iterate of the
/// Frobenius matrix. For a finite-dimensional commutative algebra this
/// equals the Jacobson radical.
pub fn nilradical_commutative(alg: &StructureAlgebra, sub: &Subspace) -> Result<Subspace> {
    let field = alg.field();
    let k = sub.dim();
    if k == 0 {
        return Ok(Subspace::zero(field, alg.dim()));
    }
    // Contract: closed under multiplication and commutative.
    for (i, a) in sub.basis().iter().enumerate() {
        for (j, b) in sub.basis().iter().enumerate() {
            let ab = alg.mul_vec(a, b);
            if !sub.contains(&ab) {
                return Err(Error::Contract(format!(
                    "subspace is not closed under multiplication at basis pair ({i},{j})"
                )));
            }
            if ab != alg.mul_vec(b, a) {
                return Err(Error::Contract(format!(
                    "subspace is not commutative at basis pair ({i},{j})"
                )));
            }
        }
    }
    // Frobenius matrix in the subspace basis.
    let mut frob = FpMat::zeros(field, k, k);
    for (j, b) in sub.basis().iter().enumerate() {
        let bp = alg.pow_vec(b, alg.modulus());
        let coords = sub
            .coords_in_basis(&bp)
            .ok_or_else(|| Error::Contract("p-th power left the subspace".into()))?;
        for i in 0..k {
            frob[(i, j)] = coords[i];
        }
    }
    // Iterate until p^m ≥ k+1, which bounds any nilpotency index inside a
    // k-dimensional algebra.
    let mut m = 0u32;
    let mut bound: u128 = 1;
    while bound < (k as u128) + 1 {
        bound *= alg.modulus() as u128;
        m += 1;
    }
    let iterated = frob.pow(m);
    let kernel_in_sub = iterated.kernel();
    // Map back to ambient coordinates.
    let f = field;
    let members = kernel_in_sub.into_iter().map(|w| {
        let mut v = vec![0u64; alg.dim()];
        for (i, &c) in w.iter().enumerate() {
            for (idx, &b) in sub.basis()[i].iter().enumerate() {
                v[idx] = f.add(v[idx], f.mul(c, b));
            }
        }
        v
    });
    Ok(Subspace::from_spanning(field, alg.dim(), members))
}

/// Nilradical of a whole commutative algebra.
pub fn nilradical(alg: &StructureAlgebra) -> Result<Subspace> {
    if !alg.is_commutative() {
        return Err(Error::Contract(
            "nilradical computation requires a commutative algebra".into(),
        ));
    }
    nilradical_commutative(alg, &Subspace::full(alg.field(), alg.dim()))
}

/// Whether a right ideal (as a subspace) is nilpotent: powers of a right
/// ideal descend, so iterate products until zero or stabilization.
pub fn is_nilpotent_subspace(alg: &StructureAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    for _ in 0..=alg.dim() {
        if cur.is_zero() {
            return true;
        }
        let next = alg.subspace_product(&cur, s);
        if next.dim() == cur.dim() {
            return next.is_zero();
        }
        cur = next;
    }
    cur.is_zero()
}

/// Least n with S^n = 0 under iterated subspace products, or an error if
/// no power vanishes by dim+1. A nilpotent ideal's power chain descends
/// strictly until zero, so dim+1 steps always suffice.
pub fn nilpotence_index(alg: &StructureAlgebra, s: &Subspace) -> Result<usize> {
    let mut cur = s.clone(); // S^n for the current n
    let mut n = 1usize;
    loop {
        if cur.is_zero() {
            return Ok(n);
        }
        if n > alg.dim() {
            return Err(Error::NotNilpotent {
                stabilized_dim: cur.dim(),
            });
        }
        cur = alg.subspace_product(&cur, s);
        n += 1;
    }
}

/// Jacobson radical by full enumeration, within budget.
///
/// For a finite ring the radical is the sum of all nilpotent right ideals,
/// and nilpotent principal right ideals suffice: if x ∈ J then xA is a
/// nilpotent right ideal containing x. So scan elements in lexicographic
/// order, accumulate every nilpotent principal right ideal, and skip
/// elements already absorbed.
pub fn jacobson_radical_generic(alg: &StructureAlgebra, budget: u128) -> Result<Subspace> {
    require_budget(alg, budget, "jacobson radical (generic enumeration)")?;
    let mut rad = Subspace::zero(alg.field(), alg.dim());
    let mut seen = std::collections::HashSet::new();
    for x in alg.nonzero_elements() {
        if rad.contains(&x) {
            continue;
        }
        let principal = principal_right_ideal(alg, &x);
        if !seen.insert(principal.basis().to_vec()) {
            continue;
        }
        if is_nilpotent_subspace(alg, &principal) {
            rad = rad.sum(&principal);
        }
    }
    Ok(rad)
}

/// The right ideal xA as a subspace (the image of left multiplication).
pub fn principal_right_ideal(alg: &StructureAlgebra, x: &[u64]) -> Subspace {
    alg.left_mul_matrix(x).column_space()
}

/// The left ideal Ax.
pub fn principal_left_ideal(alg: &StructureAlgebra, x: &[u64]) -> Subspace {
    alg.right_mul_matrix(x).column_space()
}

/// Jacobson radical: verifies a construction-supplied radical when one is
/// present (two-sided ideal, nilpotent, and — budget permitting — the
/// quotient has zero radical), otherwise enumerates.
pub fn jacobson_radical(alg: &StructureAlgebra, budget: u128) -> Result<Subspace> {
    if let Some(rows) = alg.claimed_radical() {
        let s = Subspace::from_spanning(alg.field(), alg.dim(), rows.to_vec());
        if !alg.is_ideal(&s, Side::TwoSided) {
            return Err(Error::Contract(
                "supplied radical is not a two-sided ideal".into(),
            ));
        }
        if !is_nilpotent_subspace(alg, &s) {
            return Err(Error::Contract("supplied radical is not nilpotent".into()));
        }
        // Maximality: the quotient must be semisimple, i.e. have zero
        // radical. Verified whenever the quotient fits the budget.
        if s.dim() < alg.dim() {
            let q = alg.quotient(&s)?;
            if q.algebra.element_count().map(|n| n <= budget) == Some(true) {
                let qrad = jacobson_radical_generic(&q.algebra, budget)?;
                if !qrad.is_zero() {
                    return Err(Error::Contract(
                        "supplied radical is not maximal: quotient has a nonzero nilpotent ideal"
                            .into(),
                    ));
                }
            }
        }
        return Ok(s);
    }
    jacobson_radical_generic(alg, budget)
}
