//! The rational-function field F_p(x, y) and its two partial derivations.
//!
//! Every value is kept normalized: numerator and denominator coprime, the
//! denominator monic under the lex order, and zero represented as 0/1.
//! Structural equality therefore decides mathematical equality.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::fp::PrimeField;
use crate::exactalg::poly::{MultiPoly, Var};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Builds `num/den`, normalizing. Fails on a zero denominator.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        num.field().require_same(&den.field())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self {
                den: MultiPoly::one(num.field()),
                num,
            });
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        // Make the denominator monic, folding the scale into the numerator.
        let lc = den.leading().unwrap().1;
        let inv = num.field().inv(lc)?;
        Ok(Self {
            num: num.scale(inv),
            den: den.scale(inv),
        })
    }

    /// Constructor for numerator/denominator pairs already known to be
    /// coprime (cross-cancelled products, swapped inverses): only the
    /// monic normalization runs, no gcd.
    fn from_coprime(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self {
                den: MultiPoly::one(num.field()),
                num,
            });
        }
        let lc = den.leading().unwrap().1;
        if lc == 1 {
            return Ok(Self { num, den });
        }
        let inv = num.field().inv(lc)?;
        Ok(Self {
            num: num.scale(inv),
            den: den.scale(inv),
        })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self {
            den: MultiPoly::one(p.field()),
            num: p,
        }
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::from_poly(MultiPoly::zero(field))
    }

    pub fn one(field: PrimeField) -> Self {
        Self::from_poly(MultiPoly::one(field))
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self::from_poly(MultiPoly::constant(field, c))
    }

    pub fn var(field: PrimeField, v: Var) -> Self {
        Self::from_poly(MultiPoly::var(field, v))
    }

    pub fn field(&self) -> PrimeField {
        self.num.field()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        // Work over lcm of the denominators to keep degrees down.
        let g = self.den.gcd(&rhs.den)?;
        let right_cof = rhs.den.div_exact(&g).expect("gcd divides");
        let left_cof = self.den.div_exact(&g).expect("gcd divides");
        let num = self
            .num
            .mul(&right_cof)?
            .add(&rhs.num.mul(&left_cof)?)?;
        let den = self.den.mul(&right_cof)?;
        Self::new(num, den)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.field()));
        }
        // Cross-cancel before multiplying; each factor of the result is
        // then coprime to each factor of the denominator, so no further
        // gcd is needed.
        let g1 = self.num.gcd(&rhs.den)?;
        let g2 = rhs.num.gcd(&self.den)?;
        let num = self
            .num
            .div_exact(&g1)
            .unwrap()
            .mul(&rhs.num.div_exact(&g2).unwrap())?;
        let den = self
            .den
            .div_exact(&g2)
            .unwrap()
            .mul(&rhs.den.div_exact(&g1).unwrap())?;
        Self::from_coprime(num, den)
    }

    /// Multiplicative inverse; fails on zero. The stored pair is already
    /// coprime, so this is a swap plus monic normalization.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.mul(&rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.field());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }
}

/// The two derivations of F_p(x, y): the partial derivatives with respect
/// to x and y, extended from polynomials by the quotient rule. Their
/// kernels are incomparable: y is killed by the x-derivation but not the
/// y-derivation, and symmetrically for x.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Derivation {
    /// ∂/∂x
    X,
    /// ∂/∂y
    Y,
}

impl Derivation {
    pub fn var(&self) -> Var {
        match self {
            Derivation::X => Var::X,
            Derivation::Y => Var::Y,
        }
    }

    /// Index form: 0 for ∂/∂x, 1 for ∂/∂y.
    pub fn index(&self) -> usize {
        match self {
            Derivation::X => 0,
            Derivation::Y => 1,
        }
    }

    /// Applies the derivation: D(n/d) = (D(n)·d − n·D(d)) / d².
    pub fn apply(&self, a: &RatFunc) -> Result<RatFunc> {
        let dn = a.num.derivative(self.var());
        let dd = a.den.derivative(self.var());
        let num = dn.mul(&a.den)?.sub(&a.num.mul(&dd)?)?;
        let den = a.den.mul(&a.den)?;
        RatFunc::new(num, den)
    }
}

impl fmt::Display for RatFunc {
    /// Canonical textual form. The denominator, when not 1, is always
    /// parenthesized; the numerator is parenthesized only when it has more
    /// than one term and a denominator follows.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(out, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(out, "({})/({})", self.num, self.den)
        } else {
            write!(out, "{}/({})", self.num, self.den)
        }
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s, PrimeField::new(DEFAULT_PARSE_MODULUS).unwrap())
    }
}

// FromStr needs a modulus; the CLI always goes through `parse` instead.
const DEFAULT_PARSE_MODULUS: u64 = 5;

/// Parses the canonical textual form over the given field: integer
/// coefficients, `^` powers, `*` products, `/` quotients, parentheses,
/// unary minus. Integers are reduced mod p.
pub fn parse(input: &str, field: PrimeField) -> Result<RatFunc> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
        field,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    field: PrimeField,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            at: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(op) = self.peek() {
            match op {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?)?;
                }
                b'/' => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            if e > 4096 {
                return Err(self.error("exponent too large"));
            }
            return base.pow(e as i32);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(RatFunc::var(self.field, Var::X))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(RatFunc::var(self.field, Var::Y))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(RatFunc::constant(self.field, self.field.canon_u(n)))
            }
            _ => Err(self.error("expected a number, variable, or '('")),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn rf(s: &str, p: u64) -> RatFunc {
        parse(s, fp(p)).unwrap()
    }

    #[test]
    fn sum_of_reciprocals() {
        // 1/x + 1/y = (x+y)/(xy)
        let got = rf("1/x", 5).add(&rf("1/y", 5)).unwrap();
        assert_eq!(got, rf("(x+y)/(x*y)", 5));
    }

    #[test]
    fn reciprocal_product_cancels() {
        let got = rf("x/y", 5).mul(&rf("y/x", 5)).unwrap();
        assert!(got.is_one());
    }

    #[test]
    fn inverse_swaps_and_normalizes() {
        let a = rf("(x^2+y)/x", 5);
        assert_eq!(a.inv().unwrap(), rf("x/(x^2+y)", 5));
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(RatFunc::zero(fp(5)).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivation_kernels_are_incomparable() {
        for p in [2u64, 3, 5] {
            let x = RatFunc::var(fp(p), Var::X);
            let y = RatFunc::var(fp(p), Var::Y);
            assert!(Derivation::X.apply(&y).unwrap().is_zero());
            assert!(!Derivation::Y.apply(&y).unwrap().is_zero());
            assert!(!Derivation::X.apply(&x).unwrap().is_zero());
            assert!(Derivation::Y.apply(&x).unwrap().is_zero());
        }
    }

    #[test]
    fn derivative_of_monomial() {
        // D_x(x^2 y) = 2xy over F_5
        let a = rf("x^2*y", 5);
        assert_eq!(Derivation::X.apply(&a).unwrap(), rf("2*x*y", 5));
    }

    #[test]
    fn quotient_rule_on_reciprocal() {
        // D_y(1/(xy)) = −1/(xy²), i.e. 4/(x*y^2) over F_5. Cross-check:
        // Leibniz on (xy)·(1/(xy)) must give zero.
        let a = rf("1/(x*y)", 5);
        let got = Derivation::Y.apply(&a).unwrap();
        assert_eq!(got, rf("4/(x*y^2)", 5));

        let b = rf("x*y", 5);
        let leibniz = b
            .mul(&Derivation::Y.apply(&a).unwrap())
            .unwrap()
            .add(&Derivation::Y.apply(&b).unwrap().mul(&a).unwrap())
            .unwrap();
        assert!(leibniz.is_zero());
    }

    #[test]
    fn display_round_trips() {
        for s in ["(x^2+4*y)/(x*y)", "x/(x^2+y)", "0", "1", "4/(x*y^2)"] {
            let v = rf(s, 5);
            assert_eq!(parse(&v.to_string(), fp(5)).unwrap(), v);
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(parse("x +", fp(5)).is_err());
        assert!(parse("(x", fp(5)).is_err());
        assert!(parse("z", fp(5)).is_err());
        assert!(parse("x y", fp(5)).is_err());
        assert!(parse("1/0", fp(5)).is_err());
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        assert_eq!(rf("7", 5), RatFunc::constant(fp(5), 2));
        assert_eq!(rf("-1", 5), RatFunc::constant(fp(5), 4));
    }
}
