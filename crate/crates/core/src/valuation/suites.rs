//! Certificate batteries for the twisted ring: exact generator identities,
//! the sampled structure suite (units, central witnesses, valuation
//! additivity, ideal chains), and representation soundness against the
//! matrix model.

use std::time::Instant;

use crate::constructions::twisted::{RatMat, TwistedRing};
use crate::error::Result;
use crate::exactalg::{Derivation, RatFunc, Var};
use crate::finalg::{Certificate, Method, Side, Verdict, Witness};
use crate::valuation::sample::Sampler;
use crate::valuation::{central_witness, ideal_compare, invert, is_central, solve_mul, value,
    IdealOrder};

fn randomized(
    property: &str,
    statement: &str,
    failure: Option<Witness>,
    seed: u64,
    samples: u64,
    started: Instant,
) -> Certificate {
    let mut c = Certificate::new(
        property,
        statement,
        Verdict::from_bool(failure.is_none()),
        Method::Randomized,
    )
    .with_randomization(seed, samples)
    .with_millis(started);
    if let Some(w) = failure {
        c = c.with_witness(w);
    }
    c
}

fn structural(property: &str, statement: &str, ok: bool, started: Instant) -> Certificate {
    Certificate::new(
        property,
        statement,
        Verdict::from_bool(ok),
        Method::Structural,
    )
    .with_millis(started)
}

/// Exact identities of the construction: shift nilpotency, the
/// shift/embedding commutation law, the product twist, the commutator
/// formula, and non-commutativity on the generators. Scalar-quantified
/// identities are checked on `samples` random scalars.
pub fn identity_suite(ring: &TwistedRing, samples: u64, seed: u64) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    let field = ring.field();
    let n = ring.index();
    let corner = ring.shift_power(n - 1).clone();

    // Shift nilpotency: s^n = 0, s^{n−1} = corner unit ≠ 0.
    {
        let started = Instant::now();
        let s_n = ring.shift_power(n - 1).mul(ring.shift_matrix())?;
        let ok = s_n.is_zero()
            && !corner.is_zero()
            && corner == RatMat::unit(field, ring.matrix_size(), 0, ring.matrix_size() - 1);
        certs.push(structural(
            "shift_nilpotence",
            "the shift satisfies s^n = 0 and s^(n-1) is the corner matrix unit",
            ok,
            started,
        ));
    }

    // f(α)s = sf(α) = αs on random scalars.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed);
        let mut failure = None;
        for _ in 0..samples {
            let alpha = sampler.ratfunc();
            let f_alpha = ring.embed(&alpha)?;
            let s = ring.shift_matrix();
            let alpha_s = s.scale(&alpha)?;
            if f_alpha.mul(s)? != alpha_s || s.mul(&f_alpha)? != alpha_s {
                failure = Some(Witness::Twisted {
                    text: alpha.to_string(),
                });
                break;
            }
        }
        certs.push(randomized(
            "embed_shift_commutation",
            "f(a)*s = s*f(a) = a*s for the embedding f and shift s",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // f(α)f(β) = f(αβ) + D_x(α)D_y(β)·s^(n−1) on random pairs.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(1));
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.ratfunc();
            let b = sampler.ratfunc();
            let lhs = ring.embed(&a)?.mul(&ring.embed(&b)?)?;
            let twist = Derivation::X.apply(&a)?.mul(&Derivation::Y.apply(&b)?)?;
            let rhs = ring.embed(&a.mul(&b)?)?.add(&corner.scale(&twist)?)?;
            if lhs != rhs {
                failure = Some(Witness::TwistedPair {
                    left: a.to_string(),
                    right: b.to_string(),
                });
                break;
            }
        }
        certs.push(randomized(
            "embed_product_twist",
            "f(a)*f(b) = f(a*b) + Dx(a)*Dy(b)*s^(n-1)",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // [f(α), f(β)] = (D_x(α)D_y(β) − D_x(β)D_y(α))·s^(n−1) on random pairs.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(2));
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.ratfunc();
            let b = sampler.ratfunc();
            let lhs = ring.embed(&a)?.commutator(&ring.embed(&b)?)?;
            let coeff = Derivation::X
                .apply(&a)?
                .mul(&Derivation::Y.apply(&b)?)?
                .sub(&Derivation::X.apply(&b)?.mul(&Derivation::Y.apply(&a)?)?)?;
            if lhs != corner.scale(&coeff)? {
                failure = Some(Witness::TwistedPair {
                    left: a.to_string(),
                    right: b.to_string(),
                });
                break;
            }
        }
        certs.push(randomized(
            "embed_commutator_formula",
            "[f(a), f(b)] = (Dx(a)Dy(b) - Dx(b)Dy(a))*s^(n-1)",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // Non-commutativity witness: [f(x), f(y)] = s^(n−1) ≠ 0.
    {
        let started = Instant::now();
        let fx = ring.embed(&RatFunc::var(field, Var::X))?;
        let fy = ring.embed(&RatFunc::var(field, Var::Y))?;
        let comm = fx.commutator(&fy)?;
        certs.push(structural(
            "generator_noncommutativity",
            "[f(x), f(y)] equals s^(n-1) and is nonzero",
            comm == corner && !comm.is_zero(),
            started,
        ));
    }

    Ok(certs)
}

/// Sampled structure suite: unit characterization, quasi-regularity of the
/// radical, central witness pairs, valuation additivity, total ordering of
/// principal ideals on both sides with the full chain of levels, membership
/// of the corner in every nonzero ideal, the closed centrality form against
/// matrix commutators, and translation of the radical by units.
pub fn structure_suite(ring: &TwistedRing, samples: u64, seed: u64) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    let field = ring.field();
    let n = ring.index();

    // Units are exactly the elements of valuation zero; inversion
    // post-verifies both sides internally.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed);
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.element(ring);
            let v = value(ring, &a);
            match invert(ring, &a) {
                Ok(inv) => {
                    if v != 0
                        || ring.mul(&a, &inv)? != ring.one()
                        || ring.mul(&inv, &a)? != ring.one()
                    {
                        failure = Some(Witness::Twisted { text: a.to_string() });
                        break;
                    }
                }
                Err(_) => {
                    if v == 0 {
                        failure = Some(Witness::Twisted { text: a.to_string() });
                        break;
                    }
                }
            }
        }
        certs.push(randomized(
            "unit_iff_valuation_zero",
            "an element is invertible exactly when its valuation is zero",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // Quasi-regularity: 1 + a is a unit for every radical element a.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(1));
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.radical_element(ring);
            let one_plus = ring.add(&ring.one(), &a)?;
            if invert(ring, &one_plus).is_err() {
                failure = Some(Witness::Twisted { text: a.to_string() });
                break;
            }
        }
        certs.push(randomized(
            "radical_quasi_regularity",
            "1 + a is invertible for every a of positive valuation",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // Central witness pairs post-verify on random nonzero elements.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(2));
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.nonzero_element(ring);
            if central_witness(ring, &a).is_err() {
                failure = Some(Witness::Twisted { text: a.to_string() });
                break;
            }
        }
        certs.push(randomized(
            "central_witness_pairs",
            "every nonzero a admits nonzero central c with a*c central and nonzero",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // Valuation additivity: v(ab) = v(a) + v(b) below the index, ab = 0 at
    // or above it.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(3));
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.element(ring);
            let b = sampler.element(ring);
            let (va, vb) = (value(ring, &a), value(ring, &b));
            let ab = ring.mul(&a, &b)?;
            let ok = if va + vb < n {
                value(ring, &ab) == va + vb
            } else {
                ab.is_zero()
            };
            if !ok {
                failure = Some(Witness::TwistedPair {
                    left: a.to_string(),
                    right: b.to_string(),
                });
                break;
            }
        }
        certs.push(randomized(
            "valuation_additivity",
            "v(a*b) = v(a) + v(b) when the sum is below the index, else a*b = 0",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // Principal ideal chains on both sides: sampled pairs are always
    // comparable, each sampled ideal equals the shift-power level of its
    // valuation, and the n+1 levels are strictly descending.
    for (side, name) in [(Side::Right, "right_ideal_chain"), (Side::Left, "left_ideal_chain")] {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(4));
        let mut failure = None;
        // Strict chain of levels: s^0, s^1, …, s^{n−1}, 0.
        for k in 0..n {
            let upper = ring.shift_element(k);
            let lower = if k + 1 < n {
                ring.shift_element(k + 1)
            } else {
                ring.zero()
            };
            if ideal_compare(ring, &upper, &lower, side)? != IdealOrder::LeftContainsRight {
                failure = Some(Witness::TwistedPair {
                    left: upper.to_string(),
                    right: lower.to_string(),
                });
                break;
            }
        }
        if failure.is_none() {
            for _ in 0..samples {
                let a = sampler.element(ring);
                let b = sampler.element(ring);
                if ideal_compare(ring, &a, &b, side)? == IdealOrder::Incomparable {
                    failure = Some(Witness::TwistedPair {
                        left: a.to_string(),
                        right: b.to_string(),
                    });
                    break;
                }
                // Every nonzero ideal sits at the level of its valuation.
                if !a.is_zero() {
                    let level = ring.shift_element(value(ring, &a));
                    if ideal_compare(ring, &a, &level, side)? != IdealOrder::Equal {
                        failure = Some(Witness::Twisted { text: a.to_string() });
                        break;
                    }
                }
            }
        }
        certs.push(randomized(
            name,
            "principal ideals form a strict chain with n+1 levels indexed by valuation",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // The corner s^{n−1} lies in every nonzero one-sided ideal, witnessed
    // by explicit solves; this is the uniformity mechanism.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(5));
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.nonzero_element(ring);
            let corner = ring.shift_element(n - 1);
            let right = solve_mul(ring, &a, &corner, Side::Right)?;
            let left = solve_mul(ring, &a, &corner, Side::Left)?;
            if right.is_none() || left.is_none() {
                failure = Some(Witness::Twisted { text: a.to_string() });
                break;
            }
        }
        certs.push(randomized(
            "corner_in_every_ideal",
            "s^(n-1) is a multiple of every nonzero element on both sides",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // Closed centrality form against matrix commutators with the
    // generators f(x), f(y), f(x + y²), and s.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(6));
        let x = RatFunc::var(field, Var::X);
        let y = RatFunc::var(field, Var::Y);
        let mixed = x.add(&y.mul(&y)?)?;
        let gens = vec![
            ring.embed(&x)?,
            ring.embed(&y)?,
            ring.embed(&mixed)?,
            ring.shift_matrix().clone(),
        ];
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.element(ring);
            let m = ring.to_matrix(&a)?;
            let mut commutes = true;
            for g in &gens {
                if !m.commutator(g)?.is_zero() {
                    commutes = false;
                    break;
                }
            }
            if is_central(ring, &a)? != commutes {
                failure = Some(Witness::Twisted { text: a.to_string() });
                break;
            }
        }
        certs.push(randomized(
            "centrality_formula_vs_matrix",
            "the closed centrality criterion agrees with matrix commutators against the generators",
            failure,
            seed,
            samples,
            started,
        ));
    }

    // Radical translation: for units a, multiplication maps the radical
    // onto itself — a·z = w solves inside the radical for every radical w.
    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(7));
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.unit(ring);
            let w = sampler.radical_element(ring);
            match solve_mul(ring, &a, &w, Side::Right)? {
                Some(z) if value(ring, &z) >= 1 => {}
                _ => {
                    failure = Some(Witness::TwistedPair {
                        left: a.to_string(),
                        right: w.to_string(),
                    });
                    break;
                }
            }
        }
        certs.push(randomized(
            "radical_translation_by_units",
            "for units a, every radical element w solves a*z = w with z in the radical",
            failure,
            seed,
            samples,
            started,
        ));
    }

    Ok(certs)
}

/// Representation soundness: the coefficient representation and the matrix
/// model agree on sums, products, distinctness, and inverses.
pub fn representation_suite(
    ring: &TwistedRing,
    samples: u64,
    seed: u64,
) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    let field = ring.field();

    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed);
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.element(ring);
            let b = sampler.element(ring);
            let ma = ring.to_matrix(&a)?;
            let mb = ring.to_matrix(&b)?;
            let sum_ok = ring.to_matrix(&ring.add(&a, &b)?)? == ma.add(&mb)?;
            let prod_ok = ring.to_matrix(&ring.mul(&a, &b)?)? == ma.mul(&mb)?;
            // Distinct elements map to distinct matrices.
            let inj_ok = (a == b) == (ma == mb);
            if !sum_ok || !prod_ok || !inj_ok {
                failure = Some(Witness::TwistedPair {
                    left: a.to_string(),
                    right: b.to_string(),
                });
                break;
            }
        }
        certs.push(randomized(
            "representation_homomorphism",
            "the matrix model is additive, multiplicative, and injective on samples",
            failure,
            seed,
            samples,
            started,
        ));
    }

    {
        let started = Instant::now();
        let mut sampler = Sampler::new(field, seed.wrapping_add(1));
        let identity = RatMat::identity(field, ring.matrix_size());
        let mut failure = None;
        for _ in 0..samples {
            let a = sampler.unit(ring);
            let inv = invert(ring, &a)?;
            let ma = ring.to_matrix(&a)?;
            let mi = ring.to_matrix(&inv)?;
            if ma.mul(&mi)? != identity || mi.mul(&ma)? != identity {
                failure = Some(Witness::Twisted { text: a.to_string() });
                break;
            }
        }
        certs.push(randomized(
            "inverse_two_sided_via_matrix",
            "twisted inverses verify two-sidedly in the matrix model",
            failure,
            seed,
            samples,
            started,
        ));
    }

    Ok(certs)
}

/// The whole battery: identities at `identity_samples`, structure and
/// representation at `samples`.
pub fn full_suite(
    ring: &TwistedRing,
    identity_samples: u64,
    samples: u64,
    seed: u64,
) -> Result<Vec<Certificate>> {
    let mut certs = identity_suite(ring, identity_samples, seed)?;
    certs.extend(structure_suite(ring, samples, seed)?);
    certs.extend(representation_suite(ring, samples, seed)?);
    Ok(certs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::overall_verdict;

    #[test]
    fn small_config_passes_everything() {
        let ring = TwistedRing::new(5, 2).unwrap();
        let certs = full_suite(&ring, 10, 10, 42).unwrap();
        assert!(overall_verdict(&certs), "{certs:#?}");
        assert_eq!(certs.len(), 5 + 9 + 2);
    }

    #[test]
    fn characteristic_two_config_passes() {
        let ring = TwistedRing::new(2, 3).unwrap();
        let certs = full_suite(&ring, 5, 5, 42).unwrap();
        assert!(overall_verdict(&certs), "{certs:#?}");
    }
}
