//! Prime fields F_p with canonical residues.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exclusive upper bound on supported moduli. Keeping p below 2^31 means a
/// product of two canonical residues fits in a `u64` without overflow.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Arithmetic context for the field F_p.
///
/// Elements are canonical residues in `[0, p)` stored as plain `u64`; the
/// context carries the modulus and performs all arithmetic. Constructing a
/// `PrimeField` checks primality, so holding one is proof the modulus is
/// prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical residue of an arbitrary signed integer.
    pub fn canon(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Canonical residue of an arbitrary unsigned integer.
    pub fn canon_u(&self, n: u64) -> u64 {
        n % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse via Fermat's little theorem. Fails on zero.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Checks that two contexts agree, for operations combining values
    /// from separately constructed objects.
    pub fn require_same(&self, other: &PrimeField) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }
}

/// Trial division; fast enough for moduli below 2^31.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        for bad in [0u64, 1, 4, 9, 2147483649] {
            assert!(PrimeField::new(bad).is_err(), "accepted {bad}");
        }
        for good in [2u64, 3, 5, 7, 31, 2147483647] {
            assert!(PrimeField::new(good).is_ok(), "rejected {good}");
        }
    }

    #[test]
    fn inverse_of_two_mod_five() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.inv(2).unwrap(), 3);
        assert_eq!(f.mul(2, f.inv(2).unwrap()), 1);
    }

    #[test]
    fn add_wraps_mod_three() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.add(2, 2), 1);
    }

    #[test]
    fn negation_in_characteristic_two() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(f.neg(1), 1);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn every_nonzero_element_inverts() {
        let f = PrimeField::new(31).unwrap();
        for a in 1..31 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn canon_handles_negatives() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.canon(-1), 4);
        assert_eq!(f.canon(-10), 0);
        assert_eq!(f.canon(7), 2);
    }
}
