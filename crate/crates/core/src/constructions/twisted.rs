//! The derivation-twisted matrix ring family.
//!
//! Inside M_N(F) with F = F_p(x, y) and N = 2n−1, take the nilpotent
//! "skip-one" shift s = Σ e_{2i−1, 2i+1} and the embedding
//!
//!     f(α) = α·E + D_x(α)·e_{1,N−1} + D_y(α)·e_{N−1,N}
//!
//! of F twisted by the two partial derivations. The subring generated by
//! f(F) and s is spanned by f(α₀) + Σ_{k≥1} α_k s^k, so an element is a
//! coefficient tuple (α₀, …, α_{n−1}); the product rule is the ordinary
//! truncated convolution except for one twist term D_x(α₀)·D_y(β₀) landing
//! in the top coefficient. That rule is derived, so `to_matrix` doubles as
//! the independent oracle it is validated against.
//!
//! Key exact identities, verified at construction and in the test suites:
//! s^n = 0, s^{n−1} = e_{1,N}, f(α)s = sf(α) = αs, and
//! [f(α), f(β)] = (D_x(α)D_y(β) − D_x(β)D_y(α))·s^{n−1}.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Derivation, PrimeField, RatFunc};

/// Square matrix over F_p(x, y).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMat {
    size: usize,
    entries: Vec<RatFunc>,
}

impl RatMat {
    pub fn zeros(field: PrimeField, size: usize) -> Self {
        Self {
            size,
            entries: vec![RatFunc::zero(field); size * size],
        }
    }

    pub fn identity(field: PrimeField, size: usize) -> Self {
        let mut m = Self::zeros(field, size);
        for i in 0..size {
            m.set(i, i, RatFunc::one(field));
        }
        m
    }

    /// The matrix unit with a single 1 at (row, col), 0-indexed.
    pub fn unit(field: PrimeField, size: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zeros(field, size);
        m.set(row, col, RatFunc::one(field));
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.entries[i * self.size + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &RatMat) -> Result<RatMat> {
        assert_eq!(self.size, rhs.size);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = a.add(b)?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &RatMat) -> Result<RatMat> {
        assert_eq!(self.size, rhs.size);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = a.sub(b)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> Result<RatMat> {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &RatMat) -> Result<RatMat> {
        assert_eq!(self.size, rhs.size);
        let field = self.entries[0].field();
        let mut out = RatMat::zeros(field, self.size);
        for i in 0..self.size {
            for k in 0..self.size {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.size {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b)?;
                    let cur = out.get(i, j).add(&prod)?;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &RatMat) -> Result<RatMat> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }
}

/// Configuration and operations of one member of the twisted family:
/// prime p and radical nilpotency index n ≥ 2 (matrix size N = 2n−1).
#[derive(Clone, Debug)]
pub struct TwistedRing {
    field: PrimeField,
    n: usize,
    /// Cached powers s^0 .. s^{n-1} of the shift matrix.
    shift_powers: Vec<RatMat>,
}

impl TwistedRing {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if n < 2 {
            return Err(Error::Contract(
                "twisted ring needs nilpotency index n >= 2".into(),
            ));
        }
        if n > 16 {
            return Err(Error::Contract("nilpotency index above 16 unsupported".into()));
        }
        let size = 2 * n - 1;
        // s = Σ_{i=1}^{n−1} e_{2i−1, 2i+1}, 1-indexed.
        let mut shift = RatMat::zeros(field, size);
        for i in 1..n {
            shift.set(2 * i - 2, 2 * i, RatFunc::one(field));
        }
        let mut shift_powers = vec![RatMat::identity(field, size)];
        for _ in 1..n {
            let next = shift_powers.last().unwrap().mul(&shift)?;
            shift_powers.push(next);
        }
        let ring = Self {
            field,
            n,
            shift_powers,
        };
        // Construction-time identities: s^n = 0 and s^{n−1} = e_{1,N}.
        let s_n = ring.shift_powers[n - 1].mul(&shift)?;
        if !s_n.is_zero() {
            return Err(Error::Contract("shift power n is not zero".into()));
        }
        let corner = RatMat::unit(field, size, 0, size - 1);
        if ring.shift_powers[n - 1] != corner {
            return Err(Error::Contract(
                "shift power n-1 is not the corner matrix unit".into(),
            ));
        }
        Ok(ring)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    /// Nilpotency index of the radical.
    pub fn index(&self) -> usize {
        self.n
    }

    pub fn matrix_size(&self) -> usize {
        2 * self.n - 1
    }

    pub fn label(&self) -> String {
        format!("prop29:p={},n={}", self.modulus(), self.n)
    }

    /// The nilpotent shift matrix generating the radical.
    pub fn shift_matrix(&self) -> &RatMat {
        &self.shift_powers[1]
    }

    pub fn shift_power(&self, k: usize) -> &RatMat {
        &self.shift_powers[k]
    }

    /// The twisted embedding f(α) = αE + D_x(α)e_{1,N−1} + D_y(α)e_{N−1,N}.
    pub fn embed(&self, alpha: &RatFunc) -> Result<RatMat> {
        let size = self.matrix_size();
        let mut m = RatMat::identity(self.field, size).scale(alpha)?;
        let dx = Derivation::X.apply(alpha)?;
        let dy = Derivation::Y.apply(alpha)?;
        m.set(0, size - 2, m.get(0, size - 2).add(&dx)?);
        m.set(size - 2, size - 1, m.get(size - 2, size - 1).add(&dy)?);
        Ok(m)
    }

    pub fn element(&self, coeffs: Vec<RatFunc>) -> Result<TwistedElement> {
        if coeffs.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: coeffs.len(),
            });
        }
        for c in &coeffs {
            self.field.require_same(&c.field())?;
        }
        Ok(TwistedElement { coeffs })
    }

    /// Element from textual coefficient expressions.
    pub fn element_from_strs(&self, exprs: &[&str]) -> Result<TwistedElement> {
        let coeffs = exprs
            .iter()
            .map(|s| crate::exactalg::parse(s, self.field))
            .collect::<Result<Vec<_>>>()?;
        self.element(coeffs)
    }

    pub fn zero(&self) -> TwistedElement {
        TwistedElement {
            coeffs: vec![RatFunc::zero(self.field); self.n],
        }
    }

    pub fn one(&self) -> TwistedElement {
        let mut e = self.zero();
        e.coeffs[0] = RatFunc::one(self.field);
        e
    }

    /// The element s^k (coefficient 1 in slot k), for 1 ≤ k ≤ n−1; k = 0
    /// gives the identity.
    pub fn shift_element(&self, k: usize) -> TwistedElement {
        assert!(k < self.n);
        let mut e = self.zero();
        e.coeffs[k] = RatFunc::one(self.field);
        e
    }

    /// The element f(α).
    pub fn scalar(&self, alpha: RatFunc) -> TwistedElement {
        let mut e = self.zero();
        e.coeffs[0] = alpha;
        e
    }

    pub fn add(&self, a: &TwistedElement, b: &TwistedElement) -> Result<TwistedElement> {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.add(y))
            .collect::<Result<Vec<_>>>()?;
        Ok(TwistedElement { coeffs })
    }

    pub fn sub(&self, a: &TwistedElement, b: &TwistedElement) -> Result<TwistedElement> {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.sub(y))
            .collect::<Result<Vec<_>>>()?;
        Ok(TwistedElement { coeffs })
    }

    pub fn neg(&self, a: &TwistedElement) -> TwistedElement {
        TwistedElement {
            coeffs: a.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// The twisted product: truncated convolution of the coefficient
    /// tuples, plus the term D_x(α₀)·D_y(β₀) in the top slot. Derived from
    /// f(α)f(β) = f(αβ) + D_x(α)D_y(β)s^{n−1} and f(α)s = sf(α) = αs;
    /// validated against the matrix model by `to_matrix`.
    pub fn mul(&self, a: &TwistedElement, b: &TwistedElement) -> Result<TwistedElement> {
        let n = self.n;
        let mut coeffs = vec![RatFunc::zero(self.field); n];
        for k in 0..n {
            for (i, ai) in a.coeffs.iter().enumerate() {
                if i > k || ai.is_zero() {
                    continue;
                }
                let bj = &b.coeffs[k - i];
                if bj.is_zero() {
                    continue;
                }
                coeffs[k] = coeffs[k].add(&ai.mul(bj)?)?;
            }
        }
        let twist = Derivation::X
            .apply(&a.coeffs[0])?
            .mul(&Derivation::Y.apply(&b.coeffs[0])?)?;
        coeffs[n - 1] = coeffs[n - 1].add(&twist)?;
        Ok(TwistedElement { coeffs })
    }

    /// The matrix model: f(α₀) + Σ_{k≥1} α_k s^k. Injective, and a ring
    /// homomorphism with respect to the twisted product — the oracle for
    /// everything the coefficient representation claims.
    pub fn to_matrix(&self, a: &TwistedElement) -> Result<RatMat> {
        let mut m = self.embed(&a.coeffs[0])?;
        for (k, c) in a.coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.shift_powers[k].scale(c)?)?;
        }
        Ok(m)
    }
}

/// An element of the twisted ring: the coefficient tuple
/// (α₀, α₁, …, α_{n−1}) of f(α₀) + Σ α_k s^k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedElement {
    coeffs: Vec<RatFunc>,
}

impl TwistedElement {
    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for TwistedElement {
    /// Textual form `(a0; a1; ...)` with the coefficient syntax of the
    /// rational-function layer.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(out, "; ")?;
            }
            write!(out, "{c}")?;
        }
        write!(out, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse, Var};

    fn rf(ring: &TwistedRing, s: &str) -> RatFunc {
        parse(s, ring.field()).unwrap()
    }

    #[test]
    fn shift_matrix_shapes() {
        // n=2: s = e_{1,3}, s² = 0.
        let r2 = TwistedRing::new(5, 2).unwrap();
        assert_eq!(
            *r2.shift_matrix(),
            RatMat::unit(r2.field(), 3, 0, 2)
        );
        // n=3: s = e_{1,3}+e_{3,5}, s² = e_{1,5}, s³ = 0.
        let r3 = TwistedRing::new(5, 3).unwrap();
        let mut expected = RatMat::zeros(r3.field(), 5);
        expected.set(0, 2, RatFunc::one(r3.field()));
        expected.set(2, 4, RatFunc::one(r3.field()));
        assert_eq!(*r3.shift_matrix(), expected);
        assert_eq!(*r3.shift_power(2), RatMat::unit(r3.field(), 5, 0, 4));
        assert!(r3.shift_power(2).mul(r3.shift_matrix()).unwrap().is_zero());
        // n=4: s³ = e_{1,7} ≠ 0, s⁴ = 0.
        let r4 = TwistedRing::new(5, 4).unwrap();
        assert_eq!(*r4.shift_power(3), RatMat::unit(r4.field(), 7, 0, 6));
        assert!(r4.shift_power(3).mul(r4.shift_matrix()).unwrap().is_zero());
    }

    #[test]
    fn embed_of_one_is_identity() {
        let ring = TwistedRing::new(5, 2).unwrap();
        let one = RatFunc::one(ring.field());
        assert_eq!(
            ring.embed(&one).unwrap(),
            RatMat::identity(ring.field(), 3)
        );
    }

    #[test]
    fn embed_of_x_at_n2() {
        // f(x) = xE + e_{1,2} since D_x(x) = 1 and D_y(x) = 0.
        let ring = TwistedRing::new(5, 2).unwrap();
        let x = RatFunc::var(ring.field(), Var::X);
        let fx = ring.embed(&x).unwrap();
        let mut expected = RatMat::identity(ring.field(), 3).scale(&x).unwrap();
        expected.set(0, 1, RatFunc::one(ring.field()));
        assert_eq!(fx, expected);
    }

    #[test]
    fn generator_commutator_is_the_corner() {
        // [f(x), f(y)] = e_{1,3} = s^{n−1} at n=2, by direct matrix
        // multiplication.
        let ring = TwistedRing::new(5, 2).unwrap();
        let fx = ring.embed(&rf(&ring, "x")).unwrap();
        let fy = ring.embed(&rf(&ring, "y")).unwrap();
        let comm = fx.commutator(&fy).unwrap();
        assert_eq!(comm, *ring.shift_power(1));
        assert!(!comm.is_zero());
    }

    #[test]
    fn twisted_product_of_x_and_y() {
        // (x,0)·(y,0) = (xy, 1): the twist term D_x(x)·D_y(y) = 1.
        // Reversed, (y,0)·(x,0) = (xy, 0); the commutator is s.
        let ring = TwistedRing::new(5, 2).unwrap();
        let a = ring.scalar(rf(&ring, "x"));
        let b = ring.scalar(rf(&ring, "y"));
        let ab = ring.mul(&a, &b).unwrap();
        assert_eq!(ab, ring.element_from_strs(&["x*y", "1"]).unwrap());
        let ba = ring.mul(&b, &a).unwrap();
        assert_eq!(ba, ring.element_from_strs(&["x*y", "0"]).unwrap());
        let comm = ring.sub(&ab, &ba).unwrap();
        assert_eq!(comm, ring.shift_element(1));

        // Cross-check both products through the matrix model.
        for (lhs, rhs, prod) in [(&a, &b, &ab), (&b, &a, &ba)] {
            let m = ring
                .to_matrix(lhs)
                .unwrap()
                .mul(&ring.to_matrix(rhs).unwrap())
                .unwrap();
            assert_eq!(m, ring.to_matrix(prod).unwrap());
        }
    }

    #[test]
    fn identity_element_is_neutral() {
        let ring = TwistedRing::new(3, 3).unwrap();
        let b = ring.element_from_strs(&["x/y", "x+1", "y^2"]).unwrap();
        assert_eq!(ring.mul(&ring.one(), &b).unwrap(), b);
        assert_eq!(ring.mul(&b, &ring.one()).unwrap(), b);
    }

    #[test]
    fn display_form() {
        let ring = TwistedRing::new(5, 2).unwrap();
        let e = ring.element_from_strs(&["(x^2+4*y)/(x*y)", "1"]).unwrap();
        assert_eq!(e.to_string(), "((x^2+4*y)/(x*y); 1)");
    }
}
