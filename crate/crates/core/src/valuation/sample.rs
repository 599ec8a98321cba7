//! Seeded random generation of rational functions and twisted-ring
//! elements. One named ChaCha stream per suite run; the seed is recorded
//! in every randomized certificate, so runs are reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::twisted::{TwistedElement, TwistedRing};
use crate::exactalg::{MultiPoly, PrimeField, RatFunc};

/// Maximum total degree of sampled numerators and denominators. Small
/// degrees keep products tractable while still exercising normalization.
const SAMPLE_DEGREE: u32 = 3;

pub struct Sampler {
    field: PrimeField,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(field: PrimeField, seed: u64) -> Self {
        Self {
            field,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    fn coeff(&mut self) -> u64 {
        self.rng.gen_range(0..self.field.modulus())
    }

    /// Uniform coefficients over every monomial of total degree ≤ 3;
    /// may be zero.
    pub fn poly(&mut self) -> MultiPoly {
        let mut terms = Vec::new();
        for ex in 0..=SAMPLE_DEGREE {
            for ey in 0..=(SAMPLE_DEGREE - ex) {
                terms.push(((ex, ey), self.coeff()));
            }
        }
        MultiPoly::from_terms(self.field, terms)
    }

    fn nonzero_poly(&mut self) -> MultiPoly {
        loop {
            let p = self.poly();
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Random rational function: numerator and denominator of total degree
    /// ≤ 3, denominator resampled until nonzero.
    pub fn ratfunc(&mut self) -> RatFunc {
        RatFunc::new(self.poly(), self.nonzero_poly()).expect("nonzero denominator")
    }

    pub fn nonzero_ratfunc(&mut self) -> RatFunc {
        loop {
            let r = self.ratfunc();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Random element: each coefficient independently zero with
    /// probability 1/4, otherwise a random rational function. This
    /// exercises every valuation, including the zero element.
    pub fn element(&mut self, ring: &TwistedRing) -> TwistedElement {
        let coeffs = (0..ring.index())
            .map(|_| {
                if self.rng.gen_range(0..4u8) == 0 {
                    RatFunc::zero(self.field)
                } else {
                    self.ratfunc()
                }
            })
            .collect();
        ring.element(coeffs).expect("matching coefficient count")
    }

    pub fn nonzero_element(&mut self, ring: &TwistedRing) -> TwistedElement {
        loop {
            let e = self.element(ring);
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// Random unit: valuation zero, i.e. nonzero head coefficient.
    pub fn unit(&mut self, ring: &TwistedRing) -> TwistedElement {
        loop {
            let e = self.element(ring);
            if !e.coeff(0).is_zero() {
                return e;
            }
        }
    }

    /// Random nonzero element of the radical: zero head coefficient.
    pub fn radical_element(&mut self, ring: &TwistedRing) -> TwistedElement {
        loop {
            let mut coeffs: Vec<RatFunc> = vec![RatFunc::zero(self.field)];
            coeffs.extend((1..ring.index()).map(|_| {
                if self.rng.gen_range(0..4u8) == 0 {
                    RatFunc::zero(self.field)
                } else {
                    self.ratfunc()
                }
            }));
            let e = ring.element(coeffs).expect("matching coefficient count");
            if !e.is_zero() {
                return e;
            }
        }
    }
}
