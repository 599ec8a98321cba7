//! Bivariate polynomials over a prime field in the variables x and y.
//!
//! Terms live in an ordered map keyed by exponent pairs under lexicographic
//! order with x dominant, with no zero coefficients stored, so structural
//! equality coincides with mathematical equality. Products are guarded by a
//! total-degree cap so runaway arithmetic chains fail loudly instead of
//! hanging.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactalg::fp::PrimeField;

/// Exponent pair `(x_degree, y_degree)`. The derived tuple order is exactly
/// lexicographic order with x > y, which is the term order used everywhere.
pub type Monomial = (u32, u32);

/// The two polynomial variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
}

/// Total-degree cap applied to products at the public arithmetic surface.
/// Overridable through the `CENTRESS_DEGREE_CAP` environment variable.
pub fn degree_cap() -> u32 {
    static CAP: OnceLock<u32> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("CENTRESS_DEGREE_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(512)
    })
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    field: PrimeField,
    terms: BTreeMap<Monomial, u64>,
}

impl MultiPoly {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self::monomial(field, c, (0, 0))
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn var(field: PrimeField, v: Var) -> Self {
        match v {
            Var::X => Self::monomial(field, 1, (1, 0)),
            Var::Y => Self::monomial(field, 1, (0, 1)),
        }
    }

    pub fn monomial(field: PrimeField, coeff: u64, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        let c = field.canon_u(coeff);
        if c != 0 {
            terms.insert(m, c);
        }
        Self { field, terms }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, u64)>>(field: PrimeField, it: I) -> Self {
        let mut p = Self::zero(field);
        for (m, c) in it {
            p.add_term(m, field.canon_u(c));
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(m).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)) == Some(&1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    /// Leading (monomial, coefficient) under the lexicographic order.
    pub fn leading(&self) -> Option<(Monomial, u64)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, *c))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.field.require_same(&rhs.field)?;
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self {
            field: f,
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        let c = f.canon_u(c);
        if c == 0 {
            return Self::zero(f);
        }
        Self {
            field: f,
            terms: self.terms.iter().map(|(m, k)| (*m, f.mul(*k, c))).collect(),
        }
    }

    /// Product with the total-degree cap enforced.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.field.require_same(&rhs.field)?;
        if !self.is_zero() && !rhs.is_zero() {
            let degree = self.total_degree() + rhs.total_degree();
            let cap = degree_cap();
            if degree > cap {
                return Err(Error::DegreeOverflow { degree, cap });
            }
        }
        Ok(self.mul_unchecked(rhs))
    }

    /// Raw product without the degree guard. Used internally where
    /// intermediates are transient (gcd) or already bounded.
    pub(crate) fn mul_unchecked(&self, rhs: &Self) -> Self {
        let f = self.field;
        let mut out = Self::zero(f);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term((ma.0 + mb.0, ma.1 + mb.1), f.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Self {
        let f = self.field;
        let mut out = Self::zero(f);
        for ((ex, ey), c) in self.terms() {
            match v {
                Var::X if ex > 0 => {
                    out.add_term((ex - 1, ey), f.mul(c, f.canon_u(ex as u64)));
                }
                Var::Y if ey > 0 => {
                    out.add_term((ex, ey - 1), f.mul(c, f.canon_u(ey as u64)));
                }
                _ => {}
            }
        }
        out
    }

    /// Scales so the lexicographic leading coefficient is 1. The zero
    /// polynomial maps to itself.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                if lc == 1 {
                    self.clone()
                } else {
                    // lc is nonzero, so inversion cannot fail.
                    self.scale(self.field.inv(lc).unwrap())
                }
            }
        }
    }

    /// Exact quotient `self / divisor`, or None when the division leaves a
    /// remainder. Greedy leading-term elimination under the lex order; for
    /// exact divisions the leading term of the remainder is always
    /// divisible, so the loop runs to zero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if divisor.is_one() {
            return Some(self.clone());
        }
        let f = self.field;
        // Monomial divisors divide term by term.
        if divisor.term_count() == 1 {
            let ((dx, dy), dc) = divisor.leading().unwrap();
            let dc_inv = f.inv(dc).unwrap();
            let mut terms = BTreeMap::new();
            for ((ex, ey), c) in self.terms() {
                if ex < dx || ey < dy {
                    return None;
                }
                terms.insert((ex - dx, ey - dy), f.mul(c, dc_inv));
            }
            return Some(Self {
                field: f,
                terms,
            });
        }
        let (dm, dc) = divisor.leading().unwrap();
        let dc_inv = f.inv(dc).unwrap();
        let mut rem = self.clone();
        let mut quo = Self::zero(f);
        while let Some((rm, rc)) = rem.leading() {
            if rm.0 < dm.0 || rm.1 < dm.1 {
                return None;
            }
            let qm = (rm.0 - dm.0, rm.1 - dm.1);
            let qc = f.mul(rc, dc_inv);
            quo.add_term(qm, qc);
            let piece = Self::monomial(f, qc, qm).mul_unchecked(divisor);
            rem = rem.sub(&piece).unwrap();
        }
        Some(quo)
    }

    /// Minimum exponent pair over all terms; the monomial content.
    fn monomial_content(&self) -> Monomial {
        let mut min = (u32::MAX, u32::MAX);
        for ((ex, ey), _) in self.terms() {
            min.0 = min.0.min(ex);
            min.1 = min.1.min(ey);
        }
        min
    }

    /// Divides out a monomial known to divide every term.
    fn shift_down(&self, m: Monomial) -> Self {
        if m == (0, 0) {
            return self.clone();
        }
        Self {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(&(ex, ey), &c)| ((ex - m.0, ey - m.1), c))
                .collect(),
        }
    }

    /// Monic greatest common divisor.
    ///
    /// Strips the monomial content of both inputs, then treats them as
    /// polynomials in x over F_p[y] and runs a primitive polynomial
    /// remainder sequence: univariate Euclid on the y-contents, remainder
    /// steps in x with the y-content stripped as it appears, so
    /// coefficient degrees stay near the primitive bound throughout.
    /// `gcd(f, 0)` is `monic(f)`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.field.require_same(&other.field)?;
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        // Common monomial factor is the min of the exponent pairs.
        let ma = self.monomial_content();
        let mb = other.monomial_content();
        let shared = (ma.0.min(mb.0), ma.1.min(mb.1));
        let lhs = self.shift_down(ma);
        let rhs = other.shift_down(mb);
        if lhs.term_count() == 1 || rhs.term_count() == 1 {
            // After stripping, a single-term side forces a monomial gcd,
            // and the stripped sides contribute nothing more.
            return Ok(Self::monomial(self.field, 1, shared));
        }
        let f = self.field;
        let a = XPoly::from_multi(&lhs);
        let b = XPoly::from_multi(&rhs);
        let ca = a.content(f);
        let cb = b.content(f);
        let c = uni_gcd(f, &ca, &cb);
        let mut big = a.divide_content(f, &ca);
        let mut small = b.divide_content(f, &cb);
        if big.deg_x() < small.deg_x() {
            std::mem::swap(&mut big, &mut small);
        }
        // Coprimality fast path: at any evaluation point y = t where a
        // leading x-coefficient survives, the evaluated univariate gcd
        // bounds the x-degree of the true gcd. Degree zero there means the
        // primitive parts are coprime, which is the common case after
        // fraction arithmetic.
        let coprime = small.deg_x() >= 1 && {
            let mut decided = false;
            for t in 0..f.modulus() {
                let la = uni_eval(f, big.lead(), t);
                let lb = uni_eval(f, small.lead(), t);
                if la == 0 && lb == 0 {
                    continue;
                }
                let ua = big.eval_y(f, t);
                let ub = small.eval_y(f, t);
                if uni_gcd(f, &ua, &ub).len() == 1 {
                    decided = true;
                    break;
                }
            }
            decided
        };
        if coprime {
            let g = XPoly {
                coeffs: vec![c.clone()],
            };
            let g = g.to_multi(f);
            return Ok(Self::monomial(f, 1, shared).mul_unchecked(&g).monic());
        }
        while !small.is_zero() {
            let rem = big.reduced_rem(f, &small);
            big = small;
            small = rem.primitive_part(f);
        }
        let g = big.mul_content(f, &c);
        let g = g.to_multi(f);
        Ok(Self::monomial(f, 1, shared).mul_unchecked(&g).monic())
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical textual form: terms in descending lexicographic order,
    /// `*` between factors, `^` for powers, e.g. `x^2*y+4*y+3`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (&(ex, ey), &c) in self.terms.iter().rev() {
            if !first {
                write!(out, "+")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if c != 1 || (ex == 0 && ey == 0) {
                factors.push(c.to_string());
            }
            if ex == 1 {
                factors.push("x".into());
            } else if ex > 1 {
                factors.push(format!("x^{ex}"));
            }
            if ey == 1 {
                factors.push("y".into());
            } else if ey > 1 {
                factors.push(format!("y^{ey}"));
            }
            write!(out, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Univariate polynomial in y, coefficients ascending by degree, no
/// trailing zeros. Scratch representation for the gcd routine.
type UniPoly = Vec<u64>;

fn uni_trim(p: &mut UniPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn uni_mul(f: PrimeField, a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(ca, cb));
        }
    }
    uni_trim(&mut out);
    out
}

fn uni_sub(f: PrimeField, a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = f.sub(out[i], c);
    }
    uni_trim(&mut out);
    out
}

/// Remainder of a by b (b nonzero), standard Euclidean division.
fn uni_rem(f: PrimeField, a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut rem = a.clone();
    let lb_inv = f.inv(*b.last().unwrap()).unwrap();
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let q = f.mul(*rem.last().unwrap(), lb_inv);
        for (i, &c) in b.iter().enumerate() {
            rem[shift + i] = f.sub(rem[shift + i], f.mul(q, c));
        }
        uni_trim(&mut rem);
    }
    rem
}

/// Horner evaluation of a univariate polynomial.
fn uni_eval(f: PrimeField, p: &UniPoly, t: u64) -> u64 {
    let mut acc = 0u64;
    for &c in p.iter().rev() {
        acc = f.add(f.mul(acc, t), c);
    }
    acc
}

/// Monic univariate gcd via Euclid.
fn uni_gcd(f: PrimeField, a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = uni_rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        if lc != 1 {
            let inv = f.inv(lc).unwrap();
            for c in a.iter_mut() {
                *c = f.mul(*c, inv);
            }
        }
    }
    a
}

/// Exact univariate quotient; panics if the division is not exact, which
/// only happens on internal logic errors.
fn uni_div_exact(f: PrimeField, a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_empty() {
        return Vec::new();
    }
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.clone();
    let mut quo = vec![0u64; a.len() - b.len() + 1];
    let lb_inv = f.inv(*b.last().unwrap()).unwrap();
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let q = f.mul(*rem.last().unwrap(), lb_inv);
        quo[shift] = q;
        for (i, &c) in b.iter().enumerate() {
            rem[shift + i] = f.sub(rem[shift + i], f.mul(q, c));
        }
        uni_trim(&mut rem);
    }
    assert!(rem.is_empty(), "inexact univariate division");
    quo
}

/// Polynomial in x with coefficients in F_p[y]: `coeffs[j]` is the
/// coefficient of x^j. No trailing zero coefficients.
struct XPoly {
    coeffs: Vec<UniPoly>,
}

impl XPoly {
    fn from_multi(p: &MultiPoly) -> Self {
        let dx = p.terms().map(|((ex, _), _)| ex).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Vec::new(); dx + 1];
        for ((ex, ey), c) in p.terms() {
            let slot = &mut coeffs[ex as usize];
            if slot.len() <= ey as usize {
                slot.resize(ey as usize + 1, 0);
            }
            slot[ey as usize] = c;
        }
        let mut out = Self { coeffs };
        out.trim();
        out
    }

    fn to_multi(&self, f: PrimeField) -> MultiPoly {
        MultiPoly::from_terms(
            f,
            self.coeffs.iter().enumerate().flat_map(|(ex, uni)| {
                uni.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(move |(ey, &c)| ((ex as u32, ey as u32), c))
            }),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_empty()) == Some(true) {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg_x(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lead(&self) -> &UniPoly {
        self.coeffs.last().unwrap()
    }

    /// Evaluates y = t, leaving a univariate polynomial in x (coefficient
    /// vector ascending by x-degree, trailing zeros trimmed).
    fn eval_y(&self, f: PrimeField, t: u64) -> UniPoly {
        let mut out: UniPoly = self.coeffs.iter().map(|c| uni_eval(f, c, t)).collect();
        uni_trim(&mut out);
        out
    }

    /// gcd of all x-coefficients, monic in F_p[y].
    fn content(&self, f: PrimeField) -> UniPoly {
        let mut g: UniPoly = Vec::new();
        for c in &self.coeffs {
            if c.is_empty() {
                continue;
            }
            g = uni_gcd(f, &g, c);
            if g.len() == 1 {
                break;
            }
        }
        g
    }

    fn divide_content(&self, f: PrimeField, content: &UniPoly) -> XPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| uni_div_exact(f, c, content))
            .collect();
        let mut out = XPoly { coeffs };
        out.trim();
        out
    }

    fn mul_content(&self, f: PrimeField, content: &UniPoly) -> XPoly {
        let coeffs = self.coeffs.iter().map(|c| uni_mul(f, c, content)).collect();
        let mut out = XPoly { coeffs };
        out.trim();
        out
    }

    fn primitive_part(&self, f: PrimeField) -> XPoly {
        if self.is_zero() {
            return XPoly { coeffs: Vec::new() };
        }
        let c = self.content(f);
        self.divide_content(f, &c)
    }

    /// Remainder of self by rhs in x, up to y-content. Each step scales by
    /// only lead(rhs)/g with g = gcd of the two leading coefficients, and
    /// the remainder's y-content is stripped as soon as it grows, keeping
    /// coefficient degrees near the primitive bound. The result equals a
    /// nonzero F_p[y]-multiple of (self mod rhs), which is all the
    /// primitive-PRS caller needs.
    fn reduced_rem(&self, f: PrimeField, rhs: &XPoly) -> XPoly {
        let db = rhs.deg_x();
        let mut rem = XPoly {
            coeffs: self.coeffs.clone(),
        };
        loop {
            rem.trim();
            if rem.is_zero() || rem.deg_x() < db {
                break;
            }
            let da = rem.deg_x();
            let la = rem.lead().clone();
            let g = uni_gcd(f, &la, rhs.lead());
            let scale_rem = uni_div_exact(f, rhs.lead(), &g);
            let scale_rhs = uni_div_exact(f, &la, &g);
            if scale_rem.len() != 1 || scale_rem[0] != 1 {
                for c in rem.coeffs.iter_mut() {
                    *c = uni_mul(f, c, &scale_rem);
                }
            }
            let shift = da - db;
            for (i, c) in rhs.coeffs.iter().enumerate() {
                let sub = uni_mul(f, c, &scale_rhs);
                rem.coeffs[shift + i] = uni_sub(f, &rem.coeffs[shift + i], &sub);
            }
            // Keep degrees primitive while reducing.
            rem.trim();
            if !rem.is_zero() {
                let content = rem.content(f);
                if content.len() > 1 {
                    rem = rem.divide_content(f, &content);
                }
            }
        }
        rem.trim();
        rem
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn x(f: PrimeField) -> MultiPoly {
        MultiPoly::var(f, Var::X)
    }

    fn y(f: PrimeField) -> MultiPoly {
        MultiPoly::var(f, Var::Y)
    }

    #[test]
    fn difference_of_squares_mod_five() {
        let f = fp(5);
        let sum = x(f).add(&y(f)).unwrap();
        let diff = x(f).sub(&y(f)).unwrap();
        let prod = sum.mul(&diff).unwrap();
        let expected = x(f)
            .pow(2)
            .unwrap()
            .sub(&y(f).pow(2).unwrap())
            .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let f = fp(2);
        let s = x(f).add(&y(f)).unwrap();
        let sq = s.mul(&s).unwrap();
        let expected = x(f)
            .pow(2)
            .unwrap()
            .add(&y(f).pow(2).unwrap())
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn adding_zero_is_identity() {
        let f = fp(3);
        let p = MultiPoly::from_terms(f, [((2, 1), 2), ((0, 0), 1)]);
        assert_eq!(p.add(&MultiPoly::zero(f)).unwrap(), p);
    }

    #[test]
    fn gcd_of_monomials() {
        let f = fp(5);
        let a = MultiPoly::monomial(f, 1, (2, 1)); // x^2 y
        let b = MultiPoly::monomial(f, 1, (1, 2)); // x y^2
        assert_eq!(a.gcd(&b).unwrap(), MultiPoly::monomial(f, 1, (1, 1)));
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = fp(5);
        let a = x(f).add(&y(f)).unwrap().scale(3);
        let g = a.gcd(&MultiPoly::zero(f)).unwrap();
        assert_eq!(g, x(f).add(&y(f)).unwrap());
        assert_eq!(MultiPoly::zero(f).gcd(&a).unwrap(), g);
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // gcd((x+y)^2, (x+y)(x−y)) = x+y over F_5; checked by exact
        // division of both inputs by the result.
        let f = fp(5);
        let s = x(f).add(&y(f)).unwrap();
        let d = x(f).sub(&y(f)).unwrap();
        let a = s.mul(&s).unwrap();
        let b = s.mul(&d).unwrap();
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, s);
        let qa = a.div_exact(&g).expect("g divides a");
        let qb = b.div_exact(&g).expect("g divides b");
        assert_eq!(qa.mul(&g).unwrap(), a);
        assert_eq!(qb.mul(&g).unwrap(), b);
    }

    #[test]
    fn exact_division_detects_remainder() {
        let f = fp(5);
        let a = x(f).add(&MultiPoly::one(f)).unwrap();
        assert!(x(f).div_exact(&a).is_none());
    }

    #[test]
    fn derivative_of_mixed_term() {
        let f = fp(5);
        // d/dx (x^2 y) = 2xy
        let p = MultiPoly::monomial(f, 1, (2, 1));
        assert_eq!(p.derivative(Var::X), MultiPoly::monomial(f, 2, (1, 1)));
        // d/dy y = 1, d/dx y = 0
        assert_eq!(y(f).derivative(Var::Y), MultiPoly::one(f));
        assert!(y(f).derivative(Var::X).is_zero());
    }

    #[test]
    fn display_uses_canonical_order() {
        let f = fp(5);
        let p = MultiPoly::from_terms(f, [((0, 1), 4), ((2, 0), 1), ((0, 0), 3)]);
        assert_eq!(p.to_string(), "x^2+4*y+3");
        assert_eq!(MultiPoly::zero(f).to_string(), "0");
        assert_eq!(MultiPoly::monomial(f, 1, (1, 1)).to_string(), "x*y");
    }

    #[test]
    fn degree_cap_trips_on_huge_products() {
        let f = fp(2);
        let big = MultiPoly::monomial(f, 1, (400, 0));
        let also_big = MultiPoly::monomial(f, 1, (200, 0));
        match big.mul(&also_big) {
            Err(Error::DegreeOverflow { degree, .. }) => assert_eq!(degree, 600),
            other => panic!("expected degree overflow, got {other:?}"),
        }
    }
}
