//! The structure suite: a battery of zero-divisor, uniformity, singular-
//! ideal, and translation properties that hold in centrally essential
//! rings, each clause gated on its own hypotheses. Clauses whose
//! hypotheses fail report "not applicable" rather than failure, so the
//! suite doubles as a negative control on rings outside the hypotheses.

use std::time::Instant;

use crate::error::Result;
use crate::finalg::algebra::{Side, StructureAlgebra};
use crate::finalg::cert::{Certificate, Method, Verdict, Witness};
use crate::finalg::essential::{centrally_essential, element_flags, CeMethod};
use crate::finalg::linalg::Subspace;
use crate::finalg::structural::{completely_prime, uniform};

/// Pairwise scans switch to the exact linear reduction above this many
/// element pairs.
const PAIR_BUDGET: u128 = 1 << 22;

/// Runs the full clause battery. The first certificate is the centrally-
/// essential hypothesis itself; the remaining clauses are gated on it
/// (and on uniformity where required).
pub fn structure_suite(alg: &StructureAlgebra, budget: u128) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();

    let ce_cert = centrally_essential(alg, CeMethod::Auto, budget)?;
    let ce_holds = ce_cert.verdict.holds();
    certs.push(ce_cert);

    let flags = element_flags(alg, budget)?;
    let elements: Vec<Vec<u64>> = alg.elements().collect();
    let left_zds: Vec<&Vec<u64>> = elements
        .iter()
        .enumerate()
        .filter(|(i, _)| flags.left_zd[*i])
        .map(|(_, v)| v)
        .collect();

    // Zero-divisor span and whether the set is literally an ideal.
    let zd_span = Subspace::from_spanning(
        alg.field(),
        alg.dim(),
        left_zds.iter().map(|v| (*v).clone()),
    );
    let zd_count = (alg.modulus() as u128).checked_pow(zd_span.dim() as u32);
    let zd_set_is_subspace = zd_count == Some(left_zds.len() as u128 + 1);
    let zd_set_is_ideal = zd_set_is_subspace && alg.is_ideal(&zd_span, Side::TwoSided);

    // Clause: if the left zero-divisors form an ideal, that ideal is
    // completely prime. Needs no central-essentiality hypothesis.
    certs.push(if zd_set_is_ideal && zd_span.dim() < alg.dim() {
        let mut c = completely_prime(alg, &zd_span, budget)?;
        c.property = "zero_divisor_ideal_completely_prime".into();
        c.statement =
            "the left zero-divisors form an ideal, and that ideal is completely prime".into();
        c
    } else {
        Certificate::not_applicable(
            "zero_divisor_ideal_completely_prime",
            "the left zero-divisors form an ideal, and that ideal is completely prime",
            "the left zero-divisor set is not a proper ideal",
        )
    });

    let gate = |name: &str, statement: &str| -> Certificate {
        Certificate::not_applicable(name, statement, "ring is not centrally essential")
    };

    // Clause: one-sided zero-divisors are two-sided.
    {
        let name = "one_sided_zero_divisors_two_sided";
        let statement = "every left zero-divisor is a right zero-divisor and conversely";
        certs.push(if !ce_holds {
            gate(name, statement)
        } else {
            let started = Instant::now();
            let mismatch = elements
                .iter()
                .enumerate()
                .find(|(i, _)| flags.left_zd[*i] != flags.right_zd[*i]);
            let mut c = Certificate::new(
                name,
                statement,
                Verdict::from_bool(mismatch.is_none()),
                Method::Exhaustive,
            )
            .with_millis(started);
            if let Some((_, w)) = mismatch {
                c = c.with_witness(Witness::Element { coords: w.clone() });
            }
            c
        });
    }

    // Uniformity on both sides feeds two clauses below.
    let uniform_right = uniform(alg, Side::Right, budget)?;
    let uniform_left = uniform(alg, Side::Left, budget)?;
    let right_uniform_holds = uniform_right.verdict.holds();

    // Clause: left uniform iff right uniform.
    {
        let name = "left_uniform_iff_right_uniform";
        let statement = "the ring is left uniform exactly when it is right uniform";
        certs.push(if !ce_holds {
            gate(name, statement)
        } else {
            let agree = uniform_left.verdict == uniform_right.verdict;
            let mut c = Certificate::new(
                name,
                statement,
                Verdict::from_bool(agree),
                Method::Exhaustive,
            )
            .with_detail(format!(
                "left uniform: {:?}, right uniform: {:?}",
                uniform_left.verdict, uniform_right.verdict
            ));
            if !agree {
                c.witness = uniform_left
                    .witness
                    .clone()
                    .or_else(|| uniform_right.witness.clone());
            }
            c
        });
    }

    // Clause: in a right uniform ring the right singular ideal is exactly
    // the zero-divisor set and is completely prime.
    {
        let name = "singular_ideal_is_zero_divisor_set";
        let statement = "the right singular ideal equals the set of zero-divisors and is a completely prime ideal";
        certs.push(if !ce_holds {
            gate(name, statement)
        } else if !right_uniform_holds {
            Certificate::not_applicable(name, statement, "ring is not right uniform")
        } else {
            let started = Instant::now();
            let sing = crate::finalg::essential::singular_ideal(alg, Side::Right, budget)?;
            // Set equality: every zero-divisor in Sing, every nonzero
            // member of Sing a zero-divisor, counts matching.
            let mut witness = None;
            for (i, x) in elements.iter().enumerate() {
                let is_zd = flags.left_zd[i] || flags.right_zd[i];
                let in_sing = sing.contains(x);
                let nonzero = x.iter().any(|&c| c != 0);
                if nonzero && is_zd != in_sing {
                    witness = Some(x.clone());
                    break;
                }
            }
            let sets_match = witness.is_none();
            let prime = completely_prime(alg, &sing, budget)?;
            let verdict = Verdict::from_bool(sets_match && prime.verdict.holds());
            let mut c = Certificate::new(name, statement, verdict, Method::Exhaustive)
                .with_millis(started);
            if let Some(w) = witness {
                c = c.with_witness(Witness::Element { coords: w });
            } else if !prime.verdict.holds() {
                c.witness = prime.witness.clone();
            }
            c
        });
    }

    // Clause: modulo a proper ideal containing all left zero-divisors the
    // ring is commutative. Uses the smallest such ideal.
    {
        let name = "commutative_modulo_zero_divisor_ideal";
        let statement = "commutators of elements outside the zero-divisor ideal lie inside it";
        certs.push(if !ce_holds {
            gate(name, statement)
        } else {
            let closure = alg.ideal_generated_by(
                &left_zds.iter().map(|v| (*v).clone()).collect::<Vec<_>>(),
            );
            if closure.dim() == alg.dim() {
                Certificate::not_applicable(
                    name,
                    statement,
                    "no proper ideal contains all left zero-divisors",
                )
            } else {
                let started = Instant::now();
                let outside = alg
                    .element_count()
                    .map(|n| n - (alg.modulus() as u128).pow(closure.dim() as u32));
                let pairwise = outside
                    .and_then(|n| n.checked_mul(n))
                    .map(|n| n <= PAIR_BUDGET)
                    == Some(true);
                let mut witness = None;
                let method = if pairwise {
                    for a in elements.iter().filter(|v| !closure.contains(v)) {
                        for b in elements.iter().filter(|v| !closure.contains(v)) {
                            if !closure.contains(&alg.commutator_vec(a, b)) {
                                witness = Some((a.clone(), b.clone()));
                                break;
                            }
                        }
                        if witness.is_some() {
                            break;
                        }
                    }
                    Method::Exhaustive
                } else {
                    // Commutators are bilinear and the ideal absorbs
                    // products, so basis pairs decide the full statement.
                    'outer: for i in 0..alg.dim() {
                        for j in 0..alg.dim() {
                            let c = alg
                                .commutator_vec(&alg.basis_vec(i), &alg.basis_vec(j));
                            if !closure.contains(&c) {
                                witness = Some((alg.basis_vec(i), alg.basis_vec(j)));
                                break 'outer;
                            }
                        }
                    }
                    Method::Structural
                };
                let mut c = Certificate::new(
                    name,
                    statement,
                    Verdict::from_bool(witness.is_none()),
                    method,
                )
                .with_millis(started);
                if let Some((a, b)) = witness {
                    c = c.with_witness(Witness::Pair { left: a, right: b });
                }
                c
            }
        });
    }

    // Clause: the left annihilator of any ideal containing all central
    // zero-divisors is central. Checked on the smallest such ideal, which
    // gives the strongest instance.
    {
        let name = "central_zero_divisor_annihilator_is_central";
        let statement =
            "the left annihilator of the ideal generated by central zero-divisors lies in the center";
        certs.push(if !ce_holds {
            gate(name, statement)
        } else {
            let started = Instant::now();
            let center = alg.center();
            let central_zds: Vec<Vec<u64>> = center
                .elements()
                .filter(|x| {
                    x.iter().any(|&c| c != 0)
                        && alg.left_mul_matrix(x).rank() < alg.dim()
                })
                .collect();
            let b5 = alg.ideal_generated_by(&central_zds);
            let ann = alg.left_annihilator(b5.basis());
            let escape = ann.basis().iter().find(|v| !center.contains(v));
            let mut c = Certificate::new(
                name,
                statement,
                Verdict::from_bool(escape.is_none()),
                Method::Exhaustive,
            )
            .with_millis(started);
            if let Some(w) = escape {
                c = c.with_witness(Witness::Element { coords: w.clone() });
            }
            c
        });
    }

    // Clause: in a right uniform ring, left and right singular ideals
    // coincide.
    {
        let name = "left_singular_equals_right_singular";
        let statement = "the left singular ideal coincides with the right singular ideal";
        certs.push(if !ce_holds {
            gate(name, statement)
        } else if !right_uniform_holds {
            Certificate::not_applicable(name, statement, "ring is not right uniform")
        } else {
            let started = Instant::now();
            let right = crate::finalg::essential::singular_ideal(alg, Side::Right, budget)?;
            let left = crate::finalg::essential::singular_ideal(alg, Side::Left, budget)?;
            let equal = left == right;
            let mut c = Certificate::new(
                name,
                statement,
                Verdict::from_bool(equal),
                Method::Exhaustive,
            )
            .with_millis(started);
            if !equal {
                let w = left
                    .basis()
                    .iter()
                    .find(|v| !right.contains(v))
                    .or_else(|| right.basis().iter().find(|v| !left.contains(v)))
                    .unwrap();
                c = c.with_witness(Witness::Element { coords: w.clone() });
            }
            c
        });
    }

    // Clause: for a completely prime ideal P, multiplication by any element
    // outside P maps P onto itself. Uses the zero-divisor ideal as P.
    {
        let name = "prime_complement_translation";
        let statement =
            "for every a outside the completely prime ideal P, the set a*P equals P";
        let prime_available = zd_set_is_ideal
            && zd_span.dim() < alg.dim()
            && certs
                .iter()
                .find(|c| c.property == "zero_divisor_ideal_completely_prime")
                .map(|c| c.verdict.holds())
                == Some(true);
        certs.push(if !prime_available {
            Certificate::not_applicable(
                name,
                statement,
                "no completely prime zero-divisor ideal available",
            )
        } else {
            let started = Instant::now();
            let mut witness = None;
            for a in elements.iter().filter(|v| !zd_span.contains(v)) {
                let image = Subspace::from_spanning(
                    alg.field(),
                    alg.dim(),
                    zd_span.basis().iter().map(|p| alg.mul_vec(a, p)),
                );
                if image != zd_span {
                    witness = Some(a.clone());
                    break;
                }
            }
            let mut c = Certificate::new(
                name,
                statement,
                Verdict::from_bool(witness.is_none()),
                Method::Exhaustive,
            )
            .with_millis(started);
            if let Some(w) = witness {
                c = c.with_witness(Witness::Element { coords: w });
            }
            c
        });
    }

    Ok(certs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;
    use crate::finalg::cert::overall_verdict;
    use crate::finalg::radical::DEFAULT_BUDGET;

    fn trunc(p: u64, k: usize) -> StructureAlgebra {
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
        let names = (0..k).map(|i| format!("t{i}")).collect();
        StructureAlgebra::new(field, names, mul, one, format!("F{p}[t]/(t^{k})")).unwrap()
    }

    fn split_pair() -> StructureAlgebra {
        let field = PrimeField::new(2).unwrap();
        let mul = vec![
            vec![vec![1, 0], vec![0, 0]],
            vec![vec![0, 0], vec![0, 1]],
        ];
        StructureAlgebra::new(
            field,
            vec!["e1".into(), "e2".into()],
            mul,
            vec![1, 1],
            "F2xF2",
        )
        .unwrap()
    }

    #[test]
    fn chain_ring_passes_every_applicable_clause() {
        let certs = structure_suite(&trunc(3, 3), DEFAULT_BUDGET).unwrap();
        assert!(overall_verdict(&certs));
        // All clauses applicable for this local chain ring.
        assert!(certs.iter().all(|c| c.verdict == Verdict::True), "{certs:#?}");
    }

    #[test]
    fn split_pair_gates_the_uniformity_clauses() {
        let certs = structure_suite(&split_pair(), DEFAULT_BUDGET).unwrap();
        assert!(overall_verdict(&certs), "{certs:#?}");
        let by_name = |n: &str| certs.iter().find(|c| c.property == n).unwrap().clone();
        assert_eq!(by_name("centrally_essential").verdict, Verdict::True);
        assert_eq!(
            by_name("singular_ideal_is_zero_divisor_set").verdict,
            Verdict::NotApplicable
        );
        assert_eq!(
            by_name("left_singular_equals_right_singular").verdict,
            Verdict::NotApplicable
        );
        assert_eq!(
            by_name("zero_divisor_ideal_completely_prime").verdict,
            Verdict::NotApplicable
        );
        // The biconditional clause holds: both sides non-uniform.
        assert_eq!(
            by_name("left_uniform_iff_right_uniform").verdict,
            Verdict::True
        );
    }
}
