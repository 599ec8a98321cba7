//! Decision layer for the twisted matrix ring: valuations, unit inversion
//! by back-substitution, centrality, central-witness pairs, and principal
//! ideal comparison with explicit membership witnesses.
//!
//! The ring is infinite, so universal statements are certified two ways:
//! exact symbolic identities on generators, and seeded random sampling
//! with every sampled witness post-verified exactly. Randomized
//! certificates never claim more than the sampled instances.

pub mod sample;
pub mod suites;

use crate::constructions::twisted::{TwistedElement, TwistedRing};
use crate::error::{Error, Result};
use crate::exactalg::{Derivation, RatFunc};
use crate::finalg::Side;

/// Valuation of an element: the index of its first nonzero coefficient,
/// i.e. the exact power of the shift dividing it. The zero element gets
/// the sentinel value n.
pub fn value(ring: &TwistedRing, a: &TwistedElement) -> usize {
    a.coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .unwrap_or(ring.index())
}

/// Two-sided inverse of a unit, by back-substitution: β₀ = α₀⁻¹, each
/// later β_k from one linear equation, with the derivation twist entering
/// only in the top coefficient. Fails with the element's valuation when
/// it is not a unit. The result is post-verified on both sides.
pub fn invert(ring: &TwistedRing, a: &TwistedElement) -> Result<TwistedElement> {
    let v = value(ring, a);
    if v != 0 {
        return Err(Error::NonUnit(v));
    }
    let n = ring.index();
    let a0_inv = a.coeff(0).inv()?;
    let mut b: Vec<RatFunc> = Vec::with_capacity(n);
    b.push(a0_inv.clone());
    for m in 1..n {
        // 0 = Σ_{k=0..m} α_k β_{m−k} (+ twist at m = n−1), solve for β_m.
        let mut rhs = RatFunc::zero(ring.field());
        for k in 1..=m {
            rhs = rhs.add(&a.coeff(k).mul(&b[m - k])?)?;
        }
        if m == n - 1 {
            let twist = Derivation::X
                .apply(a.coeff(0))?
                .mul(&Derivation::Y.apply(&b[0])?)?;
            rhs = rhs.add(&twist)?;
        }
        b.push(rhs.neg().mul(&a0_inv)?);
    }
    let inv = ring.element(b)?;
    let left = ring.mul(a, &inv)?;
    let right = ring.mul(&inv, a)?;
    if left != ring.one() || right != ring.one() {
        return Err(Error::Contract(
            "inverse post-verification failed on a side".into(),
        ));
    }
    Ok(inv)
}

/// Centrality in closed form: an element is central iff both partial
/// derivations kill its degree-zero coefficient. (Commutators with the
/// embedded generators x and y recover both derivatives, so the condition
/// is necessary; every higher coefficient multiplies a central shift
/// power, so it is sufficient.)
pub fn is_central(ring: &TwistedRing, a: &TwistedElement) -> Result<bool> {
    let _ = ring;
    let a0 = a.coeff(0);
    Ok(Derivation::X.apply(a0)?.is_zero() && Derivation::Y.apply(a0)?.is_zero())
}

/// The defining pair for central essentiality: for a ≠ 0, a nonzero
/// central c with d = a·c central and nonzero. Central elements take
/// c = 1; everything else is pushed into the central corner by
/// c = s^{n−1}. Both outputs are post-verified.
pub fn central_witness(
    ring: &TwistedRing,
    a: &TwistedElement,
) -> Result<(TwistedElement, TwistedElement)> {
    if a.is_zero() {
        return Err(Error::Contract(
            "central witness requires a nonzero element".into(),
        ));
    }
    let c = if is_central(ring, a)? {
        ring.one()
    } else {
        ring.shift_element(ring.index() - 1)
    };
    let d = ring.mul(a, &c)?;
    if d.is_zero()
        || c.is_zero()
        || !is_central(ring, &c)?
        || !is_central(ring, &d)?
    {
        return Err(Error::Contract(
            "central witness post-verification failed".into(),
        ));
    }
    Ok((c, d))
}

/// Solves a·z = target (right side) or z·a = target (left side) in the
/// twisted representation. Returns None when no solution exists, which
/// for a ≠ 0 happens exactly when the target has a nonzero coefficient
/// below the valuation of a.
pub fn solve_mul(
    ring: &TwistedRing,
    a: &TwistedElement,
    target: &TwistedElement,
    side: Side,
) -> Result<Option<TwistedElement>> {
    assert!(side != Side::TwoSided, "solve is one-sided");
    let n = ring.index();
    if a.is_zero() {
        return Ok(if target.is_zero() {
            Some(ring.zero())
        } else {
            None
        });
    }
    let v = value(ring, a);
    if (0..v).any(|m| !target.coeff(m).is_zero()) {
        return Ok(None);
    }
    let av_inv = a.coeff(v).inv()?;
    let mut z: Vec<RatFunc> = vec![RatFunc::zero(ring.field()); n];
    for m in v..n {
        // Unknown in this equation: z_{m−v}, paired with a_v.
        let mut rhs = target.coeff(m).clone();
        for k in (v + 1)..=m {
            let known = &z[m - k];
            if known.is_zero() {
                continue;
            }
            let factor = match side {
                Side::Right => a.coeff(k).mul(known)?,
                Side::Left => known.mul(a.coeff(k))?,
                Side::TwoSided => unreachable!(),
            };
            rhs = rhs.sub(&factor)?;
        }
        if m == n - 1 && v == 0 {
            // Twist term: D_x of the left factor's head times D_y of the
            // right factor's head; z₀ is known by the time we get here.
            let twist = match side {
                Side::Right => Derivation::X
                    .apply(a.coeff(0))?
                    .mul(&Derivation::Y.apply(&z[0])?)?,
                Side::Left => Derivation::X
                    .apply(&z[0])?
                    .mul(&Derivation::Y.apply(a.coeff(0))?)?,
                Side::TwoSided => unreachable!(),
            };
            rhs = rhs.sub(&twist)?;
        }
        z[m - v] = rhs.mul(&av_inv)?;
    }
    let z = ring.element(z)?;
    let check = match side {
        Side::Right => ring.mul(a, &z)?,
        Side::Left => ring.mul(&z, a)?,
        Side::TwoSided => unreachable!(),
    };
    if &check != target {
        return Err(Error::Contract("solved product failed verification".into()));
    }
    Ok(Some(z))
}

/// Strict comparison of two principal one-sided ideals.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealOrder {
    Equal,
    /// The first ideal strictly contains the second.
    LeftContainsRight,
    /// The second ideal strictly contains the first.
    RightContainsLeft,
    /// Never produced by this family; kept so a failure of the valuation
    /// argument would surface as a value instead of a panic.
    Incomparable,
}

/// Compares the principal ideals generated by a and b on the given side.
/// The verdict comes from the valuations; membership is then witnessed by
/// explicitly solving the defining equations, so a wrong verdict cannot
/// escape: it would come back `Incomparable`.
pub fn ideal_compare(
    ring: &TwistedRing,
    a: &TwistedElement,
    b: &TwistedElement,
    side: Side,
) -> Result<IdealOrder> {
    let va = value(ring, a);
    let vb = value(ring, b);
    if va == vb {
        if a.is_zero() {
            return Ok(IdealOrder::Equal);
        }
        let fwd = solve_mul(ring, a, b, side)?.is_some();
        let bwd = solve_mul(ring, b, a, side)?.is_some();
        return Ok(match (fwd, bwd) {
            (true, true) => IdealOrder::Equal,
            (true, false) => IdealOrder::LeftContainsRight,
            (false, true) => IdealOrder::RightContainsLeft,
            (false, false) => IdealOrder::Incomparable,
        });
    }
    if va < vb {
        // b should lie in the ideal of a, and not conversely.
        let fwd = solve_mul(ring, a, b, side)?.is_some();
        let bwd = solve_mul(ring, b, a, side)?.is_some();
        return Ok(match (fwd, bwd) {
            (true, false) => IdealOrder::LeftContainsRight,
            (true, true) => IdealOrder::Equal,
            _ => IdealOrder::Incomparable,
        });
    }
    match ideal_compare(ring, b, a, side)? {
        IdealOrder::LeftContainsRight => Ok(IdealOrder::RightContainsLeft),
        IdealOrder::RightContainsLeft => Ok(IdealOrder::LeftContainsRight),
        other => Ok(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse;

    fn ring(p: u64, n: usize) -> TwistedRing {
        TwistedRing::new(p, n).unwrap()
    }

    fn elem(r: &TwistedRing, strs: &[&str]) -> TwistedElement {
        r.element_from_strs(strs).unwrap()
    }

    #[test]
    fn valuation_basics() {
        let r = ring(5, 2);
        assert_eq!(value(&r, &elem(&r, &["0", "y"])), 1);
        assert_eq!(value(&r, &elem(&r, &["x", "0"])), 0);
        assert_eq!(value(&r, &r.zero()), 2);
    }

    #[test]
    fn inverse_of_identity() {
        let r = ring(5, 3);
        assert_eq!(invert(&r, &r.one()).unwrap(), r.one());
    }

    #[test]
    fn inverse_of_x_has_no_twist() {
        // (x,0)⁻¹ = (1/x, 0): the twist term D_y(1/x) vanishes. Verified
        // through the matrix model.
        let r = ring(5, 2);
        let a = elem(&r, &["x", "0"]);
        let inv = invert(&r, &a).unwrap();
        assert_eq!(inv, elem(&r, &["1/x", "0"]));
        let m = r.to_matrix(&a).unwrap().mul(&r.to_matrix(&inv).unwrap()).unwrap();
        assert_eq!(m, r.to_matrix(&r.one()).unwrap());
    }

    #[test]
    fn inverse_of_xy_picks_up_the_twist() {
        // (xy,0)⁻¹ = (1/(xy), 1/(x²y²)); both one-sided products equal the
        // identity exactly.
        let r = ring(5, 2);
        let a = elem(&r, &["x*y", "0"]);
        let inv = invert(&r, &a).unwrap();
        assert_eq!(inv, elem(&r, &["1/(x*y)", "1/(x^2*y^2)"]));
        assert_eq!(r.mul(&a, &inv).unwrap(), r.one());
        assert_eq!(r.mul(&inv, &a).unwrap(), r.one());
    }

    #[test]
    fn non_units_report_their_valuation() {
        let r = ring(5, 3);
        let a = elem(&r, &["0", "x", "0"]);
        assert_eq!(invert(&r, &a), Err(Error::NonUnit(1)));
    }

    #[test]
    fn centrality_closed_form() {
        let r = ring(5, 2);
        // Anything with zero head coefficient is central.
        assert!(is_central(&r, &elem(&r, &["0", "x/y"])).unwrap());
        // x is not central.
        assert!(!is_central(&r, &elem(&r, &["x", "0"])).unwrap());
        // In characteristic 3, x³ is a derivation constant, hence central.
        let r3 = ring(3, 2);
        let cube = elem(&r3, &["x^3", "0"]);
        assert!(is_central(&r3, &cube).unwrap());
        // Matrix cross-check: [f(x³), f(y)] = 0 while [f(x), f(y)] ≠ 0.
        let fx3 = r3.to_matrix(&cube).unwrap();
        let fy = r3.embed(&parse("y", r3.field()).unwrap()).unwrap();
        assert!(fx3.commutator(&fy).unwrap().is_zero());
        let fx = r3.embed(&parse("x", r3.field()).unwrap()).unwrap();
        assert!(!fx.commutator(&fy).unwrap().is_zero());
    }

    #[test]
    fn central_witness_cases() {
        let r = ring(5, 2);
        // Already-central input pairs with the identity.
        let a = elem(&r, &["0", "1"]);
        let (c, d) = central_witness(&r, &a).unwrap();
        assert_eq!(c, r.one());
        assert_eq!(d, a);
        // Non-central input is pushed into the corner: higher coefficients
        // are killed, only the head survives.
        let b = elem(&r, &["x", "y^5"]);
        let (c2, d2) = central_witness(&r, &b).unwrap();
        assert_eq!(c2, r.shift_element(1));
        assert_eq!(d2, elem(&r, &["0", "x"]));
    }

    #[test]
    fn translation_solve_within_radical() {
        // a = (x,0), w = (0,1): z = (0, 1/x) satisfies a·z = w.
        let r = ring(5, 2);
        let a = elem(&r, &["x", "0"]);
        let w = elem(&r, &["0", "1"]);
        let z = solve_mul(&r, &a, &w, Side::Right).unwrap().unwrap();
        assert_eq!(z, elem(&r, &["0", "1/x"]));
    }

    #[test]
    fn ideal_comparison_by_valuation() {
        let r = ring(5, 2);
        let a = elem(&r, &["x", "0"]);
        let b = elem(&r, &["0", "1"]);
        assert_eq!(
            ideal_compare(&r, &a, &b, Side::Right).unwrap(),
            IdealOrder::LeftContainsRight
        );
        assert_eq!(
            ideal_compare(&r, &a, &a, Side::Right).unwrap(),
            IdealOrder::Equal
        );
        // Same valuation, different generators: equal ideals, witnessed
        // in both directions.
        let c = elem(&r, &["0", "y"]);
        let d = elem(&r, &["0", "x"]);
        assert_eq!(
            ideal_compare(&r, &c, &d, Side::Right).unwrap(),
            IdealOrder::Equal
        );
        // Zero against nonzero.
        assert_eq!(
            ideal_compare(&r, &r.zero(), &a, Side::Right).unwrap(),
            IdealOrder::RightContainsLeft
        );
        assert_eq!(
            ideal_compare(&r, &r.zero(), &r.zero(), Side::Right).unwrap(),
            IdealOrder::Equal
        );
    }

    #[test]
    fn left_side_solves_mirror() {
        let r = ring(5, 2);
        let a = elem(&r, &["x", "0"]);
        let w = elem(&r, &["0", "1"]);
        let z = solve_mul(&r, &a, &w, Side::Left).unwrap().unwrap();
        assert_eq!(r.mul(&z, &a).unwrap(), w);
    }
}
