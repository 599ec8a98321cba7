//! Property certificates: a verdict, the method that produced it, and a
//! concrete witness or counterexample where one exists.

use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Outcome of a property check. `NotApplicable` marks a clause whose
/// hypothesis fails on the given input; such clauses are excluded from
/// overall verdicts.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    True,
    False,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::True)
    }
}

/// How a verdict was reached. Randomized verdicts are never definitive:
/// they certify only the sampled instances.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Exact linear algebra or closed-form identities.
    Structural,
    /// The socle containment criterion for central essentiality.
    SocleCriterion,
    /// Full enumeration of elements in lexicographic order.
    Exhaustive,
    /// Seeded random sampling with post-verified witnesses.
    Randomized,
}

/// Concrete evidence attached to a certificate.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A single element of a finite algebra, by coordinates.
    Element { coords: Vec<u64> },
    /// A pair of elements of a finite algebra.
    Pair { left: Vec<u64>, right: Vec<u64> },
    /// An element of the twisted ring in textual form `(a0; a1; ...)`.
    Twisted { text: String },
    /// A pair of twisted-ring elements.
    TwistedPair { left: String, right: String },
}

/// One property check: what was checked, what came out, and how.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Certificate {
    /// Machine-readable property name.
    pub property: String,
    pub verdict: Verdict,
    /// Self-contained statement of the checked property.
    pub statement: String,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Seed of the PRNG stream, for randomized methods.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Sample count, for randomized methods.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    /// Wall-clock milliseconds; omitted from reports unless timings are
    /// requested, so report bytes stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
    /// Free-form qualification: hypothesis failures, caveats, dimensions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Certificate {
    pub fn new(
        property: impl Into<String>,
        statement: impl Into<String>,
        verdict: Verdict,
        method: Method,
    ) -> Self {
        Self {
            property: property.into(),
            verdict,
            statement: statement.into(),
            method,
            witness: None,
            seed: None,
            samples: None,
            millis: None,
            detail: None,
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn with_randomization(mut self, seed: u64, samples: u64) -> Self {
        self.seed = Some(seed);
        self.samples = Some(samples);
        self
    }

    pub fn with_millis(mut self, started: Instant) -> Self {
        self.millis = Some(started.elapsed().as_millis());
        self
    }

    /// Strips the timing field; used for byte-reproducible reports.
    pub fn without_millis(mut self) -> Self {
        self.millis = None;
        self
    }

    pub fn not_applicable(
        property: impl Into<String>,
        statement: impl Into<String>,
        reason: impl Into<String>,
    ) -> Self {
        Self::new(property, statement, Verdict::NotApplicable, Method::Structural)
            .with_detail(reason)
    }
}

/// Overall verdict of a certificate list: AND over applicable clauses.
pub fn overall_verdict(certs: &[Certificate]) -> bool {
    certs
        .iter()
        .filter(|c| c.verdict != Verdict::NotApplicable)
        .all(|c| c.verdict.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let cert = Certificate::new("example", "something holds", Verdict::False, Method::Exhaustive)
            .with_witness(Witness::Element { coords: vec![0, 0, 0, 1] })
            .with_detail("note");
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        assert!(json.contains("\"verdict\":\"false\""));
        assert!(json.contains("\"method\":\"exhaustive\""));
    }

    #[test]
    fn overall_excludes_not_applicable() {
        let certs = vec![
            Certificate::new("a", "s", Verdict::True, Method::Structural),
            Certificate::not_applicable("b", "s", "hypothesis fails"),
        ];
        assert!(overall_verdict(&certs));
        let with_false = [
            certs,
            vec![Certificate::new("c", "s", Verdict::False, Method::Exhaustive)],
        ]
        .concat();
        assert!(!overall_verdict(&with_false));
    }
}
