use serde::Serialize;

use crate::group::order;
use crate::relation::RelationSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING-KEBAB-CASE")]
pub enum CertificateVerdict {
    /// No relation-as-vector representation can distinguish the witness's
    /// powers.
    Impossible { witness: String, order: u64 },
    /// No finite-order obstruction was found. This is not a proof that a
    /// well-representing embedding exists.
    NoObstructionFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub verdict: CertificateVerdict,
    pub argument: String,
}

impl Certificate {
    pub fn is_impossible(&self) -> bool {
        matches!(self.verdict, CertificateVerdict::Impossible { .. })
    }
}

/// Looks for a relation of finite order `k >= 2` whose powers `r, r^2, ...,
/// r^k` all belong to the set.
///
/// Any additive homomorphism sends such an `r` to a vector whose order divides
/// `k`. Over the reals only the zero vector has finite order, so every power
/// of `r` is sent to zero and the set cannot be well represented. When the
/// powers are not all in the set, nothing demands that they be told apart,
/// and no claim is made. Among several witnesses the one of largest order
/// wins, ties going to the first name.
pub fn theorem1_certificate(relations: &RelationSet) -> Certificate {
    let mut best: Option<(&str, u64)> = None;
    for (name, r) in relations {
        let Some(k) = order(r).finite() else { continue };
        if k < 2 || best.is_some_and(|(_, b)| b >= k) {
            continue;
        }
        let mut power = r.clone();
        let mut all_present = true;
        for _ in 1..=k {
            if !relations.values().any(|other| *other == power) {
                all_present = false;
                break;
            }
            power = power.compose_unchecked(r);
        }
        if all_present {
            best = Some((name, k));
        }
    }
    match best {
        Some((name, k)) => Certificate {
            verdict: CertificateVerdict::Impossible { witness: name.to_owned(), order: k },
            argument: format!(
                "{name} has order {k}; under any relation-as-vector representation its vector has \
                 an order dividing {k}, but every nonzero vector over a field of characteristic 0 \
                 has infinite order, so {name} and all of its {k} distinct powers are sent to the \
                 zero vector and cannot be distinguished"
            ),
        },
        None => Certificate {
            verdict: CertificateVerdict::NoObstructionFound,
            argument: "no relation of finite order >= 2 has all of its powers in the set; \
                       this does not show that a well-representing embedding exists"
                .to_owned(),
        },
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::relation::{Relation, Universe};

    fn cyclic_set(n: usize) -> RelationSet {
        let u = Arc::new(Universe::from_words((0..n).map(|i| format!("w{i}"))).unwrap());
        let s = Relation::successor_cycle(&u);
        (1..=n as u64).map(|k| (format!("s{k:02}"), s.power(k))).collect()
    }

    #[test]
    fn weekdays_impossible() {
        let cert = theorem1_certificate(&cyclic_set(7));
        assert_eq!(
            cert.verdict,
            CertificateVerdict::Impossible { witness: "s01".into(), order: 7 }
        );
        assert!(cert.argument.contains("order 7"));
    }

    #[test]
    fn hours_impossible() {
        let cert = theorem1_certificate(&cyclic_set(24));
        assert_eq!(cert.verdict, CertificateVerdict::Impossible { witness: "s01".into(), order: 24 });
    }

    #[test]
    fn identity_alone_is_no_obstruction() {
        let u = Arc::new(Universe::from_words(["a", "b"]).unwrap());
        let set: RelationSet = [("e".to_owned(), Relation::identity(&u))].into();
        assert_eq!(theorem1_certificate(&set).verdict, CertificateVerdict::NoObstructionFound);
    }

    #[test]
    fn generator_without_powers_is_no_obstruction() {
        let mut set = cyclic_set(7);
        set.retain(|name, _| name == "s01");
        assert!(!theorem1_certificate(&set).is_impossible());
    }

    #[test]
    fn largest_order_witness_wins() {
        // Z6: s^2 has order 3 and s^3 order 2, both closed; s has order 6.
        let mut set = cyclic_set(6);
        assert_eq!(
            theorem1_certificate(&set).verdict,
            CertificateVerdict::Impossible { witness: "s01".into(), order: 6 }
        );
        set.remove("s01");
        set.remove("s05");
        assert_eq!(
            theorem1_certificate(&set).verdict,
            CertificateVerdict::Impossible { witness: "s02".into(), order: 3 }
        );
    }

    #[test]
    fn serializes_with_flat_verdict() {
        let json = serde_json::to_value(theorem1_certificate(&cyclic_set(3))).unwrap();
        assert_eq!(json["verdict"], "IMPOSSIBLE");
        assert_eq!(json["order"], 3);
    }
}
