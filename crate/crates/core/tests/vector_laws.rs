use std::sync::Arc;

use proptest::prelude::*;
use relalg::cond_dist::{build_conditional, classify_escape, CountTable};
use relalg::vector_repr::{directions_equivalent, fit_embedding, relation_vector, Comparison, Embedding};
use relalg::{OrderResult, Relation, RelationSet, Universe};

fn universe(n: usize) -> Arc<Universe> {
    Arc::new(Universe::from_words((0..n).map(|i| format!("w{i}"))).unwrap())
}

fn arb_vec(d: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-10.0f64..10.0, d)
}

proptest! {
    #[test]
    fn translation_invariance(
        vecs in proptest::collection::vec(arb_vec(3), 6),
        offset in arb_vec(3),
        pairs in proptest::collection::vec((0usize..6, 0usize..6), 1..10),
    ) {
        let u = universe(6);
        let e = Embedding::new(&u, vecs).unwrap();
        let r = Relation::from_index_pairs(&u, &pairs);
        let a = relation_vector(&e, "r", &r, 1e-6).unwrap();
        let b = relation_vector(&e.translate(&offset), "r", &r, 1e-6).unwrap();
        for (x, y) in a.mean.iter().zip(&b.mean) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
        prop_assert!((a.max_deviation - b.max_deviation).abs() <= 1e-12);
        prop_assert_eq!(a.is_representation, b.is_representation);
        prop_assert_eq!(a.pair_count, b.pair_count);
    }

    #[test]
    fn ray_and_line_are_equivalence_relations(
        v in arb_vec(2), w in arb_vec(2), x in arb_vec(2),
        sv in 0.1f64..5.0, sw in 0.1f64..5.0,
    ) {
        // equivalent triples built by scaling, so transitivity is exercised non-vacuously
        prop_assume!(v.iter().any(|&c| c.abs() > 1e-3));
        let scaled: Vec<f64> = v.iter().map(|c| c * sv).collect();
        let negated: Vec<f64> = v.iter().map(|c| -c * sw).collect();
        for mode in [Comparison::Ray, Comparison::Line] {
            for a in [&v, &w, &x] {
                prop_assert!(directions_equivalent(a, a, mode, 0.0) || a.iter().all(|&c| c == 0.0));
            }
            for (a, b) in [(&v, &w), (&w, &x), (&v, &x), (&v, &scaled)] {
                prop_assert_eq!(
                    directions_equivalent(a, b, mode, 1e-12),
                    directions_equivalent(b, a, mode, 1e-12)
                );
            }
            prop_assert!(directions_equivalent(&v, &scaled, mode, 1e-9));
            prop_assert_eq!(directions_equivalent(&scaled, &negated, mode, 1e-9), mode == Comparison::Line);
            if directions_equivalent(&v, &w, mode, 0.0) && directions_equivalent(&w, &x, mode, 0.0) {
                prop_assert!(directions_equivalent(&v, &x, mode, 1e-12));
            }
        }
    }

    #[test]
    fn monotone_escape(v in arb_vec(3), kmax in 1u64..60) {
        prop_assume!(v.iter().any(|&c| c != 0.0));
        let out = classify_escape(&v, OrderResult::Infinite { witness: (1, 2) }, kmax, 1e-12);
        prop_assert!(out.min_power_norm > 0.0);
        for &c in v.iter().filter(|c| **c != 0.0) {
            let mags: Vec<f64> = (1..=kmax).map(|k| (k as f64 * c).abs()).collect();
            prop_assert!(mags.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn conditionals_normalize(counts in proptest::collection::vec(proptest::collection::vec(0u64..50, 4), 1..6), alpha in 0.01f64..3.0) {
        let u = universe(counts.len());
        let t = CountTable::new(u, (0..4).map(|c| format!("c{c}")).collect(), counts).unwrap();
        let m = build_conditional(&t, alpha).unwrap();
        for row in &m.probs {
            prop_assert!((row.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            prop_assert!(row.iter().all(|&p| p > 0.0 && p <= 1.0));
        }
    }

    #[test]
    fn fit_objective_matches_recomputation(
        n in 2usize..7,
        pairs in proptest::collection::vec(proptest::collection::vec((0usize..7, 0usize..7), 1..6), 1..4),
        dim in 1usize..4,
    ) {
        let u = universe(n);
        let rels: RelationSet = pairs
            .iter()
            .enumerate()
            .map(|(i, ps)| {
                let ps: Vec<_> = ps.iter().map(|&(a, b)| (a % n, b % n)).collect();
                (format!("r{i}"), Relation::from_index_pairs(&u, &ps))
            })
            .collect();
        let fit = fit_embedding(&u, &rels, dim, 1e-9f64).unwrap();
        prop_assert!(fit.objective >= 0.0);
        // every fit is an exact representation
        prop_assert!(fit.objective <= 1e-24);
        let again = fit.recompute_objective(&rels);
        prop_assert!((again - fit.objective).abs() <= 1e-9 * fit.objective.max(f64::MIN_POSITIVE));
        for (name, r) in &rels {
            let rep = relation_vector(&fit.embedding, name, r, 1e-9).unwrap();
            prop_assert!(rep.is_representation);
            let v = fit.relation_vector(name).unwrap();
            for (x, y) in rep.mean.iter().zip(v) {
                prop_assert!((x - y).abs() <= 1e-12);
            }
        }
        let twice = fit_embedding(&u, &rels, dim, 1e-9f64).unwrap();
        prop_assert_eq!(fit, twice);
    }
}

/// Finite-order relations are forced to the zero vector by any exact fit,
/// whatever extra relations are thrown in.
#[test]
fn finite_order_forces_zero_vector() {
    for n in 2..=9 {
        let u = universe(n);
        let s = Relation::successor_cycle(&u);
        let mut rels: RelationSet = (1..=n as u64).map(|k| (format!("s{k}"), s.power(k))).collect();
        rels.insert("x".into(), Relation::from_index_pairs(&u, &[(0, 0)]));
        let fit = fit_embedding(&u, &rels, 3, 1e-9f64).unwrap();
        for k in 1..=n {
            let v = fit.relation_vector(&format!("s{k}")).unwrap();
            assert!(v.iter().all(|&c| c == 0.0), "n={n} k={k}");
        }
    }
}

#[test]
fn smoothing_converges_to_maximum_likelihood() {
    let t = CountTable::from_tsv_str(relalg::bundled::TOY_COUNTS).unwrap();
    // restrict to words with all-positive counts so alpha = 0 is defined
    let keep = ["king", "queen"];
    let u = Arc::new(Universe::from_words(keep).unwrap());
    let rows: Vec<Vec<u64>> = keep
        .iter()
        .map(|w| t.counts[t.words.lookup(w).unwrap()].iter().map(|&c| c + 1).collect())
        .collect();
    let t = CountTable::new(u, t.contexts.clone(), rows).unwrap();
    let ml = build_conditional(&t, 0.0f64).unwrap();
    for alpha in [1.0f64, 0.1, 0.01] {
        let m = build_conditional(&t, alpha).unwrap();
        for (a, b) in m.probs.iter().flatten().zip(ml.probs.iter().flatten()) {
            assert!((a - b).abs() <= 0.05, "alpha={alpha}");
        }
    }
}
