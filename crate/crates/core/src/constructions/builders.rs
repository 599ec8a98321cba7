//! Builders for the concrete finite rings: group algebras, exterior
//! algebras, full matrix algebras, and the small control rings used as
//! positive and negative examples.

use crate::error::{Error, Result};
use crate::exactalg::PrimeField;
use crate::finalg::StructureAlgebra;

use super::groups::GroupTable;

/// Group algebra F_p[G]: one basis vector per group element, products from
/// the group table. For a p-group in characteristic p the radical is the
/// augmentation ideal; it is attached as a claimed radical and verified by
/// the radical machinery before use.
pub fn group_algebra(group: &GroupTable, p: u64) -> Result<StructureAlgebra> {
    let field = PrimeField::new(p)?;
    let n = group.order();
    let mut mul = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            mul[i][j][group.mul(i, j)] = 1;
        }
    }
    let mut one = vec![0u64; n];
    one[group.identity()] = 1;
    let mut alg = StructureAlgebra::new(
        field,
        group.element_names().to_vec(),
        mul,
        one,
        format!("group:{},p={p}", group.name()),
    )?;
    if is_power_of(n as u64, p) {
        // Augmentation ideal: coordinate sums zero; spanned by g − 1.
        let e = group.identity();
        let rows: Vec<Vec<u64>> = (0..n)
            .filter(|&i| i != e)
            .map(|i| {
                let mut v = vec![0u64; n];
                v[i] = 1;
                v[e] = field.neg(1);
                v
            })
            .collect();
        alg.set_claimed_radical(rows);
    }
    Ok(alg)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Exterior algebra on a d-dimensional space over F_p: basis indexed by
/// subsets of the generators as bitmasks, products with the sign of the
/// interleaving permutation, squares of generators zero.
///
/// Characteristic 2 is allowed for the construction itself, but the
/// odd-characteristic hypothesis behind the parity criterion for central
/// essentiality fails there, so such rings carry a caveat note.
pub fn exterior_algebra(p: u64, d: u32) -> Result<StructureAlgebra> {
    let field = PrimeField::new(p)?;
    if d == 0 {
        return Err(Error::Contract("exterior algebra needs d >= 1".into()));
    }
    let dim = 1usize
        .checked_shl(d)
        .filter(|&n| n <= crate::finalg::MAX_DIM)
        .ok_or_else(|| Error::Contract(format!("2^{d} exceeds the dimension cap")))?;
    let mut mul = vec![vec![vec![0u64; dim]; dim]; dim];
    for s in 0..dim {
        for t in 0..dim {
            if s & t != 0 {
                continue; // shared generator, product is zero
            }
            // Sign: (−1)^inversions, counting pairs (a in s, b in t) with
            // a > b that must swap past each other.
            let mut inversions = 0u32;
            for a in 0..d {
                if s >> a & 1 == 0 {
                    continue;
                }
                inversions += (t & ((1 << a) - 1)).count_ones();
            }
            let sign = if inversions % 2 == 0 {
                1
            } else {
                field.neg(1)
            };
            mul[s][t][s | t] = sign;
        }
    }
    let mut one = vec![0u64; dim];
    one[0] = 1;
    let names = (0..dim)
        .map(|mask| {
            if mask == 0 {
                "1".to_string()
            } else {
                (0..d)
                    .filter(|a| mask >> a & 1 == 1)
                    .map(|a| format!("v{}", a + 1))
                    .collect::<Vec<_>>()
                    .join("")
            }
        })
        .collect();
    let mut alg = StructureAlgebra::new(field, names, mul, one, format!("exterior:p={p},d={d}"))?;
    // Radical = span of all positive-degree monomials; the quotient is F_p.
    let rows: Vec<Vec<u64>> = (1..dim)
        .map(|mask| {
            let mut v = vec![0u64; dim];
            v[mask] = 1;
            v
        })
        .collect();
    alg.set_claimed_radical(rows);
    if p == 2 {
        alg.set_caveat(
            "characteristic 2: outside the odd-characteristic hypothesis of the parity criterion",
        );
    }
    Ok(alg)
}

/// Full matrix algebra M_N(F_p) on the basis e_{i,j} (row-major order).
/// Simple, so the claimed radical is zero.
pub fn matrix_algebra(p: u64, n: usize) -> Result<StructureAlgebra> {
    let field = PrimeField::new(p)?;
    if n == 0 {
        return Err(Error::Contract("matrix algebra needs N >= 1".into()));
    }
    let dim = n * n;
    if dim > crate::finalg::MAX_DIM {
        return Err(Error::Contract(format!(
            "N^2 = {dim} exceeds the dimension cap"
        )));
    }
    let idx = |r: usize, c: usize| r * n + c;
    let mut mul = vec![vec![vec![0u64; dim]; dim]; dim];
    for r1 in 0..n {
        for c1 in 0..n {
            for r2 in 0..n {
                for c2 in 0..n {
                    if c1 == r2 {
                        mul[idx(r1, c1)][idx(r2, c2)][idx(r1, c2)] = 1;
                    }
                }
            }
        }
    }
    let mut one = vec![0u64; dim];
    for r in 0..n {
        one[idx(r, r)] = 1;
    }
    let names = (0..n)
        .flat_map(|r| (0..n).map(move |c| format!("e{}{}", r + 1, c + 1)))
        .collect();
    let mut alg =
        StructureAlgebra::new(field, names, mul, one, format!("matrix:p={p},N={n}"))?;
    alg.set_claimed_radical(Vec::new());
    Ok(alg)
}

/// F_p[t]/(t^k): the chain-ring control.
pub fn truncated_polynomial_algebra(p: u64, k: usize) -> Result<StructureAlgebra> {
    let field = PrimeField::new(p)?;
    if k == 0 || k > crate::finalg::MAX_DIM {
        return Err(Error::Contract(format!(
            "truncation order {k} outside supported range"
        )));
    }
    let mut mul = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i + j < k {
                mul[i][j][i + j] = 1;
            }
        }
    }
    let mut one = vec![0u64; k];
    one[0] = 1;
    let names = (0..k)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    StructureAlgebra::new(field, names, mul, one, format!("trunc:p={p},k={k}"))
}

/// The split product F_p × … × F_p (m factors): the standard non-uniform
/// commutative control.
pub fn field_product(p: u64, m: usize) -> Result<StructureAlgebra> {
    let field = PrimeField::new(p)?;
    if m == 0 || m > crate::finalg::MAX_DIM {
        return Err(Error::Contract(format!(
            "factor count {m} outside supported range"
        )));
    }
    let mut mul = vec![vec![vec![0u64; m]; m]; m];
    for i in 0..m {
        mul[i][i][i] = 1;
    }
    let one = vec![1u64; m];
    let names = (0..m).map(|i| format!("e{}", i + 1)).collect();
    StructureAlgebra::new(field, names, mul, one, format!("product:p={p},m={m}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::{
        jacobson_radical, jacobson_radical_generic, Side, Subspace, DEFAULT_BUDGET,
    };

    #[test]
    fn quaternion_group_algebra_shape() {
        let a = group_algebra(&GroupTable::quaternion(), 2).unwrap();
        assert_eq!(a.dim(), 8);
        assert!(!a.is_commutative());
        // Center is spanned by the conjugacy-class sums {1}, {-1},
        // {±i}, {±j}, {±k}: dimension 5, verified against the oracle.
        let center = a.center();
        assert_eq!(center.dim(), 5);
        let g = GroupTable::quaternion();
        let class_sums = [0usize, 4, 1, 2, 3].map(|rep| {
            let mut v = vec![0u64; 8];
            for e in g.conjugacy_class(rep) {
                v[e] = 1;
            }
            v
        });
        let oracle = Subspace::from_spanning(a.field(), 8, class_sums.to_vec());
        assert_eq!(center, oracle);
        // Commutator [i, j] = ij − ji = k + (−k) in characteristic 2.
        let comm = a.commutator_vec(&a.basis_vec(1), &a.basis_vec(2));
        assert_eq!(comm, vec![0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn quaternion_radical_is_the_augmentation_ideal() {
        let a = group_algebra(&GroupTable::quaternion(), 2).unwrap();
        let j = jacobson_radical(&a, DEFAULT_BUDGET).unwrap();
        assert_eq!(j.dim(), 7);
        // Claimed radical agrees with the generic enumeration.
        let generic = jacobson_radical_generic(&a, DEFAULT_BUDGET).unwrap();
        assert_eq!(j, generic);
        // Oracle: J is the unique maximal right ideal of a local ring —
        // every element outside it is invertible, everything inside not.
        for x in a.nonzero_elements() {
            assert_eq!(a.is_unit(&x), !j.contains(&x));
        }
        // Quotient is the one-dimensional field.
        let q = a.quotient(&j).unwrap();
        assert_eq!(q.algebra.dim(), 1);
    }

    #[test]
    fn c2_group_algebra_is_dual_numbers() {
        let a = group_algebra(&GroupTable::cyclic(2).unwrap(), 2).unwrap();
        assert!(a.is_commutative());
        // (1+g)^2 = 0: the ring is F_2[s]/(s^2) in disguise.
        let s = a.add_vec(&a.basis_vec(0), &a.basis_vec(1));
        assert_eq!(a.mul_vec(&s, &s), a.zero_vec());
        let j = jacobson_radical(&a, DEFAULT_BUDGET).unwrap();
        assert_eq!(j.dim(), 1);
    }

    #[test]
    fn c3_group_algebra_in_coprime_characteristic_is_semisimple() {
        // gcd(|G|, p) = 1: the radical is zero, confirmed by enumeration.
        let a = group_algebra(&GroupTable::cyclic(3).unwrap(), 2).unwrap();
        assert!(a.claimed_radical().is_none());
        let j = jacobson_radical(&a, DEFAULT_BUDGET).unwrap();
        assert!(j.is_zero());
    }

    #[test]
    fn exterior_algebra_relations() {
        let a = exterior_algebra(3, 2).unwrap();
        assert_eq!(a.dim(), 4);
        let v1 = a.basis_vec(1);
        let v2 = a.basis_vec(2);
        // v1 v2 = −v2 v1 and squares vanish.
        assert_eq!(a.mul_vec(&v1, &v2), a.neg_vec(&a.mul_vec(&v2, &v1)));
        assert_eq!(a.mul_vec(&v1, &v1), a.zero_vec());
        assert_eq!(a.mul_vec(&v2, &v2), a.zero_vec());
    }

    #[test]
    fn exterior_algebra_anticommutation_all_generators() {
        let a = exterior_algebra(3, 3).unwrap();
        assert_eq!(a.dim(), 8);
        for g1 in [1usize, 2, 4] {
            for g2 in [1usize, 2, 4] {
                let x = a.basis_vec(g1);
                let y = a.basis_vec(g2);
                if g1 == g2 {
                    assert_eq!(a.mul_vec(&x, &y), a.zero_vec());
                } else {
                    assert_eq!(a.mul_vec(&x, &y), a.neg_vec(&a.mul_vec(&y, &x)));
                }
            }
        }
        let j = jacobson_radical(&a, DEFAULT_BUDGET).unwrap();
        assert_eq!(j.dim(), 7);
    }

    #[test]
    fn matrix_algebra_units() {
        let a = matrix_algebra(2, 2).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.center().dim(), 1);
        let j = jacobson_radical(&a, DEFAULT_BUDGET).unwrap();
        assert!(j.is_zero());
        // e12 · e21 = e11, e21 · e12 = e22.
        let e12 = a.basis_vec(1);
        let e21 = a.basis_vec(2);
        assert_eq!(a.mul_vec(&e12, &e21), a.basis_vec(0));
        assert_eq!(a.mul_vec(&e21, &e12), a.basis_vec(3));
    }

    #[test]
    fn one_by_one_matrices_are_the_field() {
        let a = matrix_algebra(2, 1).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.is_commutative());
    }

    #[test]
    fn three_by_three_matrices_are_simple() {
        let a = matrix_algebra(3, 3).unwrap();
        let j = jacobson_radical(&a, DEFAULT_BUDGET).unwrap();
        assert!(j.is_zero());
    }

    #[test]
    fn dihedral_group_algebra_loads() {
        let a = group_algebra(&GroupTable::dihedral4(), 2).unwrap();
        assert_eq!(a.dim(), 8);
        assert!(!a.is_commutative());
        assert!(a.is_ideal(
            &Subspace::from_spanning(a.field(), 8, a.claimed_radical().unwrap().to_vec()),
            Side::TwoSided
        ));
    }
}
