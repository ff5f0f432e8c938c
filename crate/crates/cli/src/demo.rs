//! The weekdays walkthrough: successor relation, its cyclic group, the
//! vector obstruction, and the multiplicative representations that avoid it.

use std::fmt::Write as _;
use std::sync::Arc;

use anyhow::Result;
use relalg::alt_repr::{cayley_repr, roots_of_unity_repr, verify_multiplicative, MultiplicativeRepresentation, SCALAR_TOLERANCE};
use relalg::group::{generate_closure, is_abelian, is_group, iso_to_cyclic, order, verify_homomorphism, HomomorphismMap, Residue, Target};
use relalg::vector_repr::{fit_embedding, theorem1_certificate, CertificateVerdict};
use relalg::{Relation, RelationSet, Universe};
use serde_json::json;

use crate::commands::num;
use crate::Outcome;

const WEEKDAYS: [&str; 7] = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"];

struct Transcript {
    text: String,
    ok: bool,
}

impl Default for Transcript {
    fn default() -> Self {
        Transcript { text: String::new(), ok: true }
    }
}

impl std::fmt::Write for Transcript {
    fn write_str(&mut self, s: &str) -> std::fmt::Result {
        self.text.push_str(s);
        Ok(())
    }
}

impl Transcript {
    fn check(&mut self, label: String, holds: bool) -> Result<()> {
        self.ok &= holds;
        writeln!(self.text, "{label}: {holds}")?;
        Ok(())
    }
}

pub fn weekdays() -> Result<Outcome> {
    let mut t = Transcript::default();

    let u = Arc::new(Universe::from_words(WEEKDAYS)?);
    writeln!(t, "W = {{{}}} ({} words)", WEEKDAYS.join(", "), u.len())?;
    let pairs: Vec<(&str, &str)> = (0..7).map(|i| (WEEKDAYS[i], WEEKDAYS[(i + 1) % 7])).collect();
    let s = Relation::from_pairs(&u, &pairs)?;
    writeln!(t, "s = successor relation, {} pairs", s.len())?;
    t.check("(Monday, Tuesday) in s".into(), s.contains_words("Monday", "Tuesday"))?;
    t.check("(Monday, Sunday) not in s".into(), !s.contains_words("Monday", "Sunday"))?;
    let s2 = s.compose(&s)?;
    t.check("(Monday, Wednesday) in s o s".into(), s2.contains_words("Monday", "Wednesday"))?;
    t.check("s^7 = e".into(), s.power(7).is_identity())?;
    t.check("s^8 = s".into(), s.power(8) == s)?;
    let periodic = (0..=21u64).all(|k| (0..=21u64).all(|l| (s.power(k) == s.power(l)) == (k % 7 == l % 7)));
    t.check("s^k = s^l iff k = l (mod 7), 0 <= k, l <= 21".into(), periodic)?;

    let ord = order(&s);
    writeln!(t, "order(s) = {ord}")?;
    t.ok &= ord.finite() == Some(7);

    let c = generate_closure(&[("s", s.clone())])?;
    writeln!(t, "R = closure of {{s}}: {} elements", c.len())?;
    t.check("associative".into(), c.is_associative())?;
    t.check("group".into(), is_group(&c).is_group)?;
    t.check("abelian".into(), is_abelian(&c).is_abelian)?;
    let iso = iso_to_cyclic(&c);
    let k = iso.as_ref().map_or(0, |iso| iso.k);
    t.check(format!("R isomorphic to Z_{k}"), k == 7)?;
    if let Some(iso) = &iso {
        let h = HomomorphismMap::from_fn(&c, |i| Residue::new(iso.residues[i], iso.k));
        let verified = verify_homomorphism(&h, &c, 0.0)?.holds;
        t.check(format!("s^k -> k (mod 7) is a homomorphism on all {} pairs", c.len() * c.len()), verified)?;
    }

    let powers: RelationSet = (1..=7u64)
        .map(|k| (if k == 1 { "s".to_owned() } else { format!("s{k}") }, s.power(k)))
        .collect();
    let cert = theorem1_certificate(&powers);
    match &cert.verdict {
        CertificateVerdict::Impossible { witness, order } => {
            writeln!(t, "certify {{s, s^2, ..., s^7}}: IMPOSSIBLE (witness {witness}, order {order})")?;
            t.ok &= witness == "s" && *order == 7;
        }
        CertificateVerdict::NoObstructionFound => {
            writeln!(t, "certify {{s, s^2, ..., s^7}}: NO-OBSTRUCTION-FOUND")?;
            t.ok = false;
        }
    }

    let fit = fit_embedding(&u, &powers, 2, 1e-9)?;
    let max_norm = fit
        .relation_vectors
        .iter()
        .map(|(_, v)| v.iter().map(|x| x * x).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    writeln!(
        t,
        "fit d = 2: objective = {}, max |v_r| = {}, collapsed = {}",
        num(fit.objective),
        num(max_norm),
        fit.collapsed
    )?;
    t.ok &= fit.collapsed;

    let roots = roots_of_unity_repr::<f64>(&c)?;
    let z = roots.images[c.generator_indices[0]];
    writeln!(t, "roots of unity: s -> e^(2πi/7) = {} + {}i", num(z.re), num(z.im))?;
    let rcheck = verify_multiplicative(&roots, SCALAR_TOLERANCE);
    t.check(
        format!("  multiplicative on all pairs (max error {}), distinct images", num(rcheck.max_product_error)),
        rcheck.holds,
    )?;
    let zord = roots.image_order(c.generator_indices[0], SCALAR_TOLERANCE);
    t.check(format!("  order of e^(2πi/7) = {}", zord.unwrap_or(0)), zord == Some(7))?;

    let cayley = cayley_repr(&c)?;
    let p = &cayley.images[c.generator_indices[0]];
    let p7 = (1..7).fold(p.clone(), |acc, _| acc.combine(p));
    writeln!(t, "cayley: {} permutation matrices of size {n}x{n}", cayley.images.len(), n = c.len())?;
    t.check("  P_s^7 = I".into(), p7.0.iter().enumerate().all(|(i, &j)| i == j))?;
    t.check("  multiplicative and injective".into(), verify_multiplicative(&cayley, 0.0).holds)?;

    Ok(Outcome {
        json: json!({
            "demo": "weekdays",
            "passed": t.ok,
            "order": 7,
            "certificate": cert,
            "fit_collapsed": fit.collapsed,
            "generator_root": [z.re, z.im],
            "transcript": t.text.lines().collect::<Vec<_>>(),
        }),
        passed: t.ok,
        text: t.text,
    })
}
