//! Finite-dimensional algebras over F_p presented by structure constants,
//! together with the exact linear-algebra operations that everything else
//! builds on: multiplication matrices, centers, annihilators, quotients,
//! and deterministic element enumeration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::PrimeField;
use crate::finalg::linalg::{FpMat, Subspace};

/// Largest supported dimension. The multiplication table is dim³ entries,
/// so this bounds memory; every ring in scope is far smaller.
pub const MAX_DIM: usize = 64;

/// An associative unital F_p-algebra given by a basis and the coordinate
/// vectors of all pairwise basis products. Construction validates the
/// associativity and identity axioms on all basis triples, so a value of
/// this type is always an actual ring.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    field: PrimeField,
    dim: usize,
    basis_names: Vec<String>,
    /// mul[i][j] = coordinates of b_i · b_j.
    mul: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
    label: String,
    /// Radical supplied by a construction that knows it; verified before use.
    claimed_radical: Option<Vec<Vec<u64>>>,
    /// Attached by builders when a result needs a qualifying note.
    caveat: Option<String>,
}

/// JSON shape of the ring description file:
/// `{"p": 2, "dim": 8, "basis": [...], "one": [...], "mul": [[[...]]]}`.
#[derive(Serialize, Deserialize, Debug)]
pub struct RingFile {
    pub p: u64,
    pub dim: usize,
    pub basis: Vec<String>,
    pub one: Vec<u64>,
    pub mul: Vec<Vec<Vec<u64>>>,
}

impl StructureAlgebra {
    pub fn new(
        field: PrimeField,
        basis_names: Vec<String>,
        mul: Vec<Vec<Vec<u64>>>,
        one: Vec<u64>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::RingLoad(
                "dimension 0: a ring must contain a non-zero identity element".into(),
            ));
        }
        if dim > MAX_DIM {
            return Err(Error::RingLoad(format!(
                "dimension {dim} exceeds the supported maximum {MAX_DIM}"
            )));
        }
        if mul.len() != dim {
            return Err(Error::RingLoad(format!(
                "multiplication table has {} rows, expected {dim}",
                mul.len()
            )));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::RingLoad(format!(
                    "multiplication table row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (j, coords) in row.iter().enumerate() {
                if coords.len() != dim {
                    return Err(Error::RingLoad(format!(
                        "product ({i},{j}) has {} coordinates, expected {dim}",
                        coords.len()
                    )));
                }
                if coords.iter().any(|&c| c >= field.modulus()) {
                    return Err(Error::RingLoad(format!(
                        "product ({i},{j}) has a coordinate outside [0, p)"
                    )));
                }
            }
        }
        if one.len() != dim {
            return Err(Error::RingLoad(format!(
                "identity vector has {} coordinates, expected {dim}",
                one.len()
            )));
        }
        if one.iter().all(|&c| c == 0) {
            return Err(Error::RingLoad("identity vector is zero".into()));
        }
        let alg = Self {
            field,
            dim,
            basis_names,
            mul,
            one,
            label: label.into(),
            claimed_radical: None,
            caveat: None,
        };
        alg.check_axioms()?;
        Ok(alg)
    }

    /// Validates the identity on every basis vector and associativity on
    /// every basis triple, reporting the first violation.
    fn check_axioms(&self) -> Result<()> {
        for i in 0..self.dim {
            let e = self.basis_vec(i);
            if self.mul_vec(&self.one, &e) != e || self.mul_vec(&e, &self.one) != e {
                return Err(Error::IdentityAxiom(i));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul[i][j].clone();
                for k in 0..self.dim {
                    let left = self.mul_vec(&ij, &self.basis_vec(k));
                    let right = self.mul_vec(&self.basis_vec(i), &self.mul[j][k]);
                    if left != right {
                        return Err(Error::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_ring_file(file: &RingFile, label: impl Into<String>) -> Result<Self> {
        let field = PrimeField::new(file.p)?;
        if file.basis.len() != file.dim {
            return Err(Error::RingLoad(format!(
                "basis has {} names, dim is {}",
                file.basis.len(),
                file.dim
            )));
        }
        Self::new(
            field,
            file.basis.clone(),
            file.mul.clone(),
            file.one.clone(),
            label,
        )
    }

    pub fn to_ring_file(&self) -> RingFile {
        RingFile {
            p: self.field.modulus(),
            dim: self.dim,
            basis: self.basis_names.clone(),
            one: self.one.clone(),
            mul: self.mul.clone(),
        }
    }

    pub(crate) fn set_claimed_radical(&mut self, rows: Vec<Vec<u64>>) {
        self.claimed_radical = Some(rows);
    }

    pub fn claimed_radical(&self) -> Option<&[Vec<u64>]> {
        self.claimed_radical.as_deref()
    }

    pub(crate) fn set_caveat(&mut self, note: impl Into<String>) {
        self.caveat = Some(note.into());
    }

    pub fn caveat(&self) -> Option<&str> {
        self.caveat.as_deref()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn zero_vec(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn add_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.field;
        a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
    }

    pub fn sub_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.field;
        a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
    }

    pub fn neg_vec(&self, a: &[u64]) -> Vec<u64> {
        let f = self.field;
        a.iter().map(|&x| f.neg(x)).collect()
    }

    pub fn scale_vec(&self, c: u64, a: &[u64]) -> Vec<u64> {
        let f = self.field;
        a.iter().map(|&x| f.mul(c, x)).collect()
    }

    /// Product in coordinates: bilinear extension of the structure table.
    pub fn mul_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        debug_assert_eq!(a.len(), self.dim);
        debug_assert_eq!(b.len(), self.dim);
        let f = self.field;
        let mut out = vec![0u64; self.dim];
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let c = f.mul(ca, cb);
                for (k, &t) in self.mul[i][j].iter().enumerate() {
                    if t != 0 {
                        out[k] = f.add(out[k], f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    /// [a, b] = ab − ba.
    pub fn commutator_vec(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.sub_vec(&self.mul_vec(a, b), &self.mul_vec(b, a))
    }

    pub fn pow_vec(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.one.clone();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_vec(&acc, &base);
            }
            base = self.mul_vec(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of x ↦ a·x.
    pub fn left_mul_matrix(&self, a: &[u64]) -> FpMat {
        let mut m = FpMat::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_vec(a, &self.basis_vec(j));
            for i in 0..self.dim {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    /// Matrix of x ↦ x·a.
    pub fn right_mul_matrix(&self, a: &[u64]) -> FpMat {
        let mut m = FpMat::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_vec(&self.basis_vec(j), a);
            for i in 0..self.dim {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self.mul[i][j] != self.mul[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// The center, computed as the joint kernel of the commutator maps
    /// x ↦ [b_i, x] over all basis elements.
    pub fn center(&self) -> Subspace {
        let mut stacked = FpMat::zeros(self.field, self.dim * self.dim, self.dim);
        for i in 0..self.dim {
            let bi = self.basis_vec(i);
            let ad = {
                let mut m = FpMat::zeros(self.field, self.dim, self.dim);
                for j in 0..self.dim {
                    let col = self.commutator_vec(&bi, &self.basis_vec(j));
                    for r in 0..self.dim {
                        m[(r, j)] = col[r];
                    }
                }
                m
            };
            for r in 0..self.dim {
                for c in 0..self.dim {
                    stacked[(i * self.dim + r, c)] = ad[(r, c)];
                }
            }
        }
        Subspace::from_spanning(self.field, self.dim, stacked.kernel())
    }

    /// Left annihilator {r : r·s = 0 for all s in gens}. The annihilator
    /// of a set equals the annihilator of its span, so generators suffice.
    pub fn left_annihilator(&self, gens: &[Vec<u64>]) -> Subspace {
        self.joint_kernel(gens, |g| self.right_mul_matrix(g))
    }

    /// Right annihilator {r : s·r = 0 for all s in gens}.
    pub fn right_annihilator(&self, gens: &[Vec<u64>]) -> Subspace {
        self.joint_kernel(gens, |g| self.left_mul_matrix(g))
    }

    fn joint_kernel<F: Fn(&[u64]) -> FpMat>(&self, gens: &[Vec<u64>], mat: F) -> Subspace {
        if gens.is_empty() {
            return Subspace::full(self.field, self.dim);
        }
        let mut stacked = FpMat::zeros(self.field, self.dim * gens.len(), self.dim);
        for (gi, g) in gens.iter().enumerate() {
            let m = mat(g);
            for r in 0..self.dim {
                for c in 0..self.dim {
                    stacked[(gi * self.dim + r, c)] = m[(r, c)];
                }
            }
        }
        Subspace::from_spanning(self.field, self.dim, stacked.kernel())
    }

    /// Span of all pairwise products of the two subspaces' bases.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let products = u
            .basis()
            .iter()
            .flat_map(|a| v.basis().iter().map(move |b| self.mul_vec(a, b)));
        Subspace::from_spanning(self.field, self.dim, products)
    }

    /// Checks closure of a subspace under one- or two-sided multiplication
    /// by the whole algebra; on failure returns (basis index, subspace
    /// vector index) of the violating product.
    pub fn ideal_violation(&self, s: &Subspace, side: Side) -> Option<(usize, usize)> {
        for (vi, v) in s.basis().iter().enumerate() {
            for i in 0..self.dim {
                let left_ok = side == Side::Right
                    || s.contains(&self.mul_vec(&self.basis_vec(i), v));
                let right_ok = side == Side::Left
                    || s.contains(&self.mul_vec(v, &self.basis_vec(i)));
                if !left_ok || !right_ok {
                    return Some((i, vi));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, s: &Subspace, side: Side) -> bool {
        self.ideal_violation(s, side).is_none()
    }

    /// Smallest two-sided ideal containing the given vectors: closes the
    /// span under multiplication by basis elements on both sides.
    pub fn ideal_generated_by(&self, gens: &[Vec<u64>]) -> Subspace {
        let mut cur = Subspace::from_spanning(self.field, self.dim, gens.to_vec());
        loop {
            let mut next = cur.clone();
            for v in cur.basis() {
                for i in 0..self.dim {
                    let b = self.basis_vec(i);
                    next = next.sum(&Subspace::from_spanning(
                        self.field,
                        self.dim,
                        vec![self.mul_vec(&b, v), self.mul_vec(v, &b)],
                    ));
                }
            }
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// Two-sided inverse of a, found by solving a·x = 1 and checking
    /// x·a = 1. In these finite rings one-sided inverses are two-sided;
    /// the check is kept anyway.
    pub fn try_inverse(&self, a: &[u64]) -> Option<Vec<u64>> {
        let x = self.left_mul_matrix(a).solve(&self.one)?;
        if self.mul_vec(&x, a) == self.one {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_unit(&self, a: &[u64]) -> bool {
        self.try_inverse(a).is_some()
    }

    /// Number of elements p^dim, if it fits in a u128.
    pub fn element_count(&self) -> Option<u128> {
        let p = self.modulus() as u128;
        let mut acc: u128 = 1;
        for _ in 0..self.dim {
            acc = acc.checked_mul(p)?;
        }
        Some(acc)
    }

    /// All elements in lexicographic coordinate order (coordinate 0 most
    /// significant), starting from zero. This is the scan order behind
    /// every "first counterexample" contract.
    pub fn elements(&self) -> ElementIter {
        ElementIter {
            p: self.modulus(),
            next: Some(vec![0; self.dim]),
        }
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Vec<u64>> {
        self.elements().skip(1)
    }

    /// Element at a given position of the lexicographic scan.
    pub fn element_at(&self, index: u128) -> Vec<u64> {
        let p = self.modulus() as u128;
        let mut v = vec![0u64; self.dim];
        let mut rest = index;
        for slot in v.iter_mut().rev() {
            *slot = (rest % p) as u64;
            rest /= p;
        }
        v
    }

    /// Quotient by a two-sided ideal. Returns the quotient algebra and the
    /// projection data mapping ambient coordinates to quotient coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientAlgebra> {
        if !self.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::Contract(
                "quotient requires a two-sided ideal".into(),
            ));
        }
        if ideal.dim() == self.dim {
            return Err(Error::Contract(
                "quotient by the whole ring has no identity".into(),
            ));
        }
        let coords = ideal.non_pivots();
        let qdim = coords.len();
        let project = |v: &[u64]| -> Vec<u64> {
            let r = ideal.reduce(v);
            coords.iter().map(|&c| r[c]).collect()
        };
        // Quotient basis: classes of the ambient basis vectors at the
        // non-pivot coordinates.
        let lift = |q: &[u64]| -> Vec<u64> {
            let mut v = vec![0u64; self.dim];
            for (qi, &c) in coords.iter().enumerate() {
                v[c] = q[qi];
            }
            v
        };
        let mut mul = vec![vec![Vec::new(); qdim]; qdim];
        for i in 0..qdim {
            for j in 0..qdim {
                let a = lift(&{
                    let mut e = vec![0u64; qdim];
                    e[i] = 1;
                    e
                });
                let b = lift(&{
                    let mut e = vec![0u64; qdim];
                    e[j] = 1;
                    e
                });
                mul[i][j] = project(&self.mul_vec(&a, &b));
            }
        }
        let names = coords
            .iter()
            .map(|&c| format!("[{}]", self.basis_names[c]))
            .collect();
        let one = project(&self.one);
        let algebra = StructureAlgebra::new(
            self.field,
            names,
            mul,
            one,
            format!("{}/ideal(dim {})", self.label, ideal.dim()),
        )?;
        Ok(QuotientAlgebra {
            algebra,
            ideal: ideal.clone(),
            coords,
        })
    }
}

/// Sidedness selector for ideals, annihilators, and module conditions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
            Side::TwoSided => write!(f, "two-sided"),
        }
    }
}

/// A quotient algebra together with the data to move elements between the
/// ambient ring and the quotient.
pub struct QuotientAlgebra {
    pub algebra: StructureAlgebra,
    ideal: Subspace,
    coords: Vec<usize>,
}

impl QuotientAlgebra {
    pub fn project(&self, v: &[u64]) -> Vec<u64> {
        let r = self.ideal.reduce(v);
        self.coords.iter().map(|&c| r[c]).collect()
    }

    /// A representative in the ambient ring of a quotient element.
    pub fn lift(&self, q: &[u64]) -> Vec<u64> {
        let mut v = vec![0u64; self.ideal.ambient_dim()];
        for (qi, &c) in self.coords.iter().enumerate() {
            v[c] = q[qi];
        }
        v
    }
}

/// Iterator over all coordinate vectors in lexicographic order.
pub struct ElementIter {
    p: u64,
    next: Option<Vec<u64>>,
}

impl Iterator for ElementIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        // Increment the least significant (last) coordinate with carry.
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.p {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// An element bound to its algebra; arithmetic checks that both operands
/// come from the same algebra object.
#[derive(Clone, Debug)]
pub struct AlgebraElement<'a> {
    alg: &'a StructureAlgebra,
    coords: Vec<u64>,
}

impl<'a> AlgebraElement<'a> {
    pub fn new(alg: &'a StructureAlgebra, coords: Vec<u64>) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::DimensionMismatch {
                left: alg.dim(),
                right: coords.len(),
            });
        }
        let coords = coords.iter().map(|&c| alg.field().canon_u(c)).collect();
        Ok(Self { alg, coords })
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.alg, other.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self {
            alg: self.alg,
            coords: self.alg.add_vec(&self.coords, &other.coords),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self {
            alg: self.alg,
            coords: self.alg.mul_vec(&self.coords, &other.coords),
        })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self {
            alg: self.alg,
            coords: self.alg.commutator_vec(&self.coords, &other.coords),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl std::fmt::Display for AlgebraElement<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", pretty_element(self.alg, &self.coords))
    }
}

/// Renders coordinates against the basis names, e.g. `i+3*k`.
pub fn pretty_element(alg: &StructureAlgebra, coords: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let name = &alg.basis_names()[i];
        if c == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{c}*{name}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// F_p[t]/(t^k) as a raw table, for loader tests.
    fn trunc_table(p: u64, k: usize) -> StructureAlgebra {
        let field = PrimeField::new(p).unwrap();
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
            .map(|i| if i == 0 { "1".into() } else { format!("t^{i}") })
            .collect();
        StructureAlgebra::new(field, names, mul, one, format!("F{p}[t]/(t^{k})")).unwrap()
    }

    #[test]
    fn loader_rejects_broken_associativity() {
        let field = PrimeField::new(2).unwrap();
        // u·u = v, u·v = 1, v·u = 0: then (u·u)·u = 0 but u·(u·u) = 1.
        let mul = vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]],
            vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]],
        ];
        let r = StructureAlgebra::new(
            field,
            vec!["1".into(), "u".into(), "v".into()],
            mul,
            vec![1, 0, 0],
            "broken",
        );
        match r {
            Err(Error::Associativity { i: 1, j: 1, k: 1 }) => {}
            other => panic!("expected associativity failure at (1,1,1), got {other:?}"),
        }
    }

    #[test]
    fn loader_rejects_dim_zero() {
        let field = PrimeField::new(2).unwrap();
        let r = StructureAlgebra::new(field, vec![], vec![], vec![], "empty");
        assert!(matches!(r, Err(Error::RingLoad(_))));
    }

    #[test]
    fn loader_rejects_bad_identity() {
        let field = PrimeField::new(2).unwrap();
        let mul = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![0, 0]],
        ];
        // claim `t` is the identity
        let r = StructureAlgebra::new(
            field,
            vec!["1".into(), "t".into()],
            mul,
            vec![0, 1],
            "bad one",
        );
        assert!(matches!(r, Err(Error::IdentityAxiom(_))));
    }

    #[test]
    fn truncated_polynomial_arithmetic() {
        let a = trunc_table(3, 3);
        let t = a.basis_vec(1);
        let t2 = a.mul_vec(&t, &t);
        assert_eq!(t2, a.basis_vec(2));
        assert_eq!(a.mul_vec(&t2, &t), a.zero_vec());
        assert!(a.is_commutative());
        assert_eq!(a.center().dim(), 3);
    }

    #[test]
    fn annihilator_in_dual_numbers() {
        let a = trunc_table(2, 2);
        let t = a.basis_vec(1);
        let ann = a.right_annihilator(&[t.clone()]);
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&t));
        // r.Ann({1}) = 0
        let ann_one = a.right_annihilator(&[a.one().to_vec()]);
        assert!(ann_one.is_zero());
    }

    #[test]
    fn element_iteration_is_lexicographic() {
        let a = trunc_table(2, 2);
        let all: Vec<Vec<u64>> = a.elements().collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(a.element_at(2), vec![1, 0]);
        assert_eq!(a.element_count(), Some(4));
    }

    #[test]
    fn inverse_solving() {
        let a = trunc_table(3, 3);
        // 1 + t is a unit; t is not.
        let u = a.add_vec(&a.basis_vec(0), &a.basis_vec(1));
        let inv = a.try_inverse(&u).expect("1+t invertible");
        assert_eq!(a.mul_vec(&u, &inv), a.one().to_vec());
        assert!(a.try_inverse(&a.basis_vec(1)).is_none());
    }

    #[test]
    fn quotient_of_dual_numbers_is_the_field() {
        let a = trunc_table(2, 2);
        let ideal = Subspace::from_spanning(a.field(), 2, vec![a.basis_vec(1)]);
        let q = a.quotient(&ideal).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert_eq!(q.project(&a.basis_vec(1)), vec![0]);
        assert_eq!(q.project(&a.one().to_vec()), vec![1]);
    }

    #[test]
    fn element_wrapper_rejects_cross_algebra_products() {
        let a = trunc_table(2, 2);
        let b = trunc_table(2, 2);
        let x = AlgebraElement::new(&a, vec![1, 0]).unwrap();
        let y = AlgebraElement::new(&b, vec![1, 0]).unwrap();
        assert_eq!(x.mul(&y).unwrap_err(), Error::AlgebraMismatch);
        let z = AlgebraElement::new(&a, vec![0, 1]).unwrap();
        assert!(x.commutator(&z).unwrap().is_zero());
    }
}
