//! Word embeddings built from context-word conditional distributions:
//! `ψ(w) = (c ↦ log P[c|w])`, so relation vectors are log-ratios of
//! conditional probabilities.

use std::collections::HashMap;
use std::io::BufRead;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{order, OrderResult};
use crate::relation::{Relation, Universe};
use crate::scalar::{norm, Real};
use crate::vector_repr::{relation_vector, Embedding, RelationVectorReport};

pub const DEFAULT_ALPHA: f64 = 0.5;

/// Co-occurrence counts of words with context words.
#[derive(Debug, Clone, PartialEq)]
pub struct CountTable {
    pub words: Arc<Universe>,
    pub contexts: Vec<String>,
    /// `counts[w][c]`.
    pub counts: Vec<Vec<u64>>,
}

impl CountTable {
    pub fn new(words: Arc<Universe>, contexts: Vec<String>, counts: Vec<Vec<u64>>) -> Result<Self> {
        if contexts.is_empty() {
            return Err(Error::Spec("count table needs at least one context".into()));
        }
        if counts.len() != words.len() || counts.iter().any(|row| row.len() != contexts.len()) {
            return Err(Error::Spec("count matrix does not match vocabulary sizes".into()));
        }
        Ok(CountTable { words, contexts, counts })
    }

    /// Parses `word<TAB>context<TAB>count` records. Words and contexts are
    /// ordered by first appearance; missing pairs count 0 and repeated pairs
    /// are summed.
    pub fn read_tsv<R: BufRead>(input: R) -> Result<Self> {
        let mut words: Vec<String> = Vec::new();
        let mut word_index: HashMap<String, usize> = HashMap::new();
        let mut contexts: Vec<String> = Vec::new();
        let mut context_index: HashMap<String, usize> = HashMap::new();
        let mut entries: Vec<(usize, usize, u64)> = Vec::new();

        for (i, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let [word, context, count] = fields[..] else {
                return Err(Error::Format {
                    line: i + 1,
                    message: format!("expected 3 tab-separated fields, found {}", fields.len()),
                });
            };
            let count: u64 = count.trim().parse().map_err(|_| Error::Format {
                line: i + 1,
                message: format!("bad count {count:?}"),
            })?;
            let w = *word_index.entry(word.to_owned()).or_insert_with(|| {
                words.push(word.to_owned());
                words.len() - 1
            });
            let c = *context_index.entry(context.to_owned()).or_insert_with(|| {
                contexts.push(context.to_owned());
                contexts.len() - 1
            });
            entries.push((w, c, count));
        }
        let universe = Arc::new(Universe::from_words(words)?);
        let mut counts = vec![vec![0u64; contexts.len()]; universe.len()];
        for (w, c, n) in entries {
            counts[w][c] += n;
        }
        CountTable::new(universe, contexts, counts)
    }

    pub fn from_tsv_str(text: &str) -> Result<Self> {
        CountTable::read_tsv(text.as_bytes())
    }
}

/// Additively smoothed `P[c|w]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalModel<T = f64> {
    pub table: CountTable,
    pub alpha: T,
    /// `probs[w][c]`.
    pub probs: Vec<Vec<T>>,
}

/// `P[c|w] = (count(w,c) + α) / (Σ_c' count(w,c') + α|C|)`.
///
/// With `alpha == 0` every count must be positive, otherwise a logarithm
/// downstream would be undefined.
pub fn build_conditional<T: Real>(t: &CountTable, alpha: T) -> Result<ConditionalModel<T>> {
    if !alpha.is_finite() || alpha < T::zero() {
        return Err(Error::InvalidAlpha(alpha.as_f64()));
    }
    if alpha == T::zero() {
        for (w, row) in t.counts.iter().enumerate() {
            if let Some(c) = row.iter().position(|&n| n == 0) {
                return Err(Error::ZeroCount {
                    word: t.words.word(w).to_owned(),
                    context: t.contexts[c].clone(),
                });
            }
        }
    }
    let width = T::of(t.contexts.len() as f64);
    let probs = t
        .counts
        .iter()
        .map(|row| {
            let total = T::of(row.iter().sum::<u64>() as f64) + alpha * width;
            row.iter().map(|&n| (T::of(n as f64) + alpha) / total).collect()
        })
        .collect();
    Ok(ConditionalModel { table: t.clone(), alpha, probs })
}

/// Natural-log conditional embedding over the context vocabulary.
pub fn psi<T: Real>(m: &ConditionalModel<T>) -> Embedding<T> {
    let vectors = m.probs.iter().map(|row| row.iter().map(|p| p.ln()).collect()).collect();
    Embedding::new(&m.table.words, vectors).expect("probabilities are positive and finite")
}

pub fn psi_relation_vector<T: Real>(
    m: &ConditionalModel<T>,
    name: &str,
    r: &Relation,
    tol: T,
) -> Result<RelationVectorReport<T>> {
    relation_vector(&psi(m), name, r, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING-KEBAB-CASE")]
pub enum EscapeVerdict {
    /// The relation vector is (numerically) zero.
    ZeroVector,
    /// Every multiple up to `kmax` stays away from zero.
    Escapes,
    /// A nonzero relation vector for a relation of finite order: impossible
    /// for an exact representation.
    Contradiction { order: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EscapeOutcome<T = f64> {
    #[serde(flatten)]
    pub verdict: EscapeVerdict,
    pub norm: T,
    pub kmax: u64,
    /// Smallest `|k·v|` over `1 <= k <= kmax`.
    pub min_power_norm: T,
    pub order: OrderResult,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EscapeReport<T = f64> {
    pub representation: RelationVectorReport<T>,
    pub outcome: EscapeOutcome<T>,
}

/// Classifies a relation vector `v` of a relation with the given order.
///
/// The image of `r^k` under an additive homomorphism is `k·v`; for nonzero
/// `v` none of these is zero, so `v` can only belong to a relation of
/// infinite order.
pub fn classify_escape<T: Real>(v: &[T], order: OrderResult, kmax: u64, tol: T) -> EscapeOutcome<T> {
    let len = norm(v);
    let min_power_norm = (1..=kmax.max(1))
        .map(|k| {
            let kv: Vec<T> = v.iter().map(|&x| x * T::of(k as f64)).collect();
            norm(&kv)
        })
        .fold(T::infinity(), T::min);
    let verdict = if len <= tol {
        EscapeVerdict::ZeroVector
    } else {
        match order {
            OrderResult::Finite { value } if value >= 2 => EscapeVerdict::Contradiction { order: value },
            _ => EscapeVerdict::Escapes,
        }
    };
    EscapeOutcome { verdict, norm: len, kmax, min_power_norm, order }
}

/// [`classify_escape`] on the relation vector of `r` under an arbitrary
/// embedding, which must represent `r` at `tol`.
pub fn power_escape_check_embedding<T: Real>(
    e: &Embedding<T>,
    name: &str,
    r: &Relation,
    kmax: u64,
    tol: T,
) -> Result<EscapeReport<T>> {
    let representation = relation_vector(e, name, r, tol)?;
    if !representation.is_representation {
        return Err(Error::NotRepresented {
            name: name.to_owned(),
            max_deviation: representation.max_deviation.as_f64(),
        });
    }
    let outcome = classify_escape(&representation.mean, order(r), kmax, tol);
    Ok(EscapeReport { representation, outcome })
}

pub fn power_escape_check<T: Real>(
    m: &ConditionalModel<T>,
    name: &str,
    r: &Relation,
    kmax: u64,
    tol: T,
) -> Result<EscapeReport<T>> {
    power_escape_check_embedding(&psi(m), name, r, kmax, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(words: &[&str], contexts: &[&str], counts: Vec<Vec<u64>>) -> CountTable {
        CountTable::new(
            Arc::new(Universe::from_words(words.iter().copied()).unwrap()),
            contexts.iter().map(|s| s.to_string()).collect(),
            counts,
        )
        .unwrap()
    }

    #[test]
    fn maximum_likelihood() {
        let t = table(&["w"], &["c0", "c1"], vec![vec![3, 1]]);
        let m = build_conditional(&t, 0.0).unwrap();
        assert_eq!(m.probs[0], vec![0.75, 0.25]);
        let e = psi(&m);
        assert_eq!(e.vector(0), &[0.75f64.ln(), 0.25f64.ln()]);
    }

    #[test]
    fn smoothing_zero_counts_gives_uniform() {
        let t = table(&["w"], &["a", "b", "c", "d"], vec![vec![0; 4]]);
        let m = build_conditional(&t, 1.0).unwrap();
        assert_eq!(m.probs[0], vec![0.25; 4]);
        assert_eq!(psi(&m).vector(0), &[0.25f64.ln(); 4]);
    }

    #[test]
    fn zero_count_without_smoothing_rejected() {
        let t = table(&["w"], &["c0", "c1"], vec![vec![1, 0]]);
        match build_conditional(&t, 0.0) {
            Err(Error::ZeroCount { word, context }) => assert_eq!((word.as_str(), context.as_str()), ("w", "c1")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(build_conditional(&t, -1.0), Err(Error::InvalidAlpha(_))));
        assert!(matches!(build_conditional(&t, f64::NAN), Err(Error::InvalidAlpha(_))));
    }

    #[test]
    fn log_ratio_coordinate() {
        // P[.|w] = (1/4, 3/4), P[.|w'] = (1/2, 1/2): ratio 2 at c0
        let t = table(&["w", "w'"], &["c0", "c1"], vec![vec![1, 3], vec![1, 1]]);
        let m = build_conditional(&t, 0.0).unwrap();
        let r = Relation::from_pairs(&t.words, &[("w", "w'")]).unwrap();
        let rep = psi_relation_vector(&m, "r", &r, 1e-12).unwrap();
        assert!((rep.mean[0] - 2f64.ln()).abs() < 1e-12);
        assert!((rep.mean[1] - (2.0f64 / 3.0).ln()).abs() < 1e-12);
        let id = Relation::identity(&t.words);
        assert!(psi_relation_vector(&m, "e", &id, 1e-12).unwrap().mean.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn tsv_parsing() {
        let t = CountTable::from_tsv_str("a\tx\t2\nb\ty\t3\na\ty\t1\na\tx\t1\n\n").unwrap();
        assert_eq!(t.words.words(), &["a", "b"]);
        assert_eq!(t.contexts, vec!["x", "y"]);
        assert_eq!(t.counts, vec![vec![3, 1], vec![0, 3]]);
        assert!(CountTable::from_tsv_str("a\tx\n").is_err());
        assert!(CountTable::from_tsv_str("a\tx\t-1\n").is_err());
        assert!(CountTable::from_tsv_str("").is_err());
    }

    #[test]
    fn contradiction_branch_on_synthetic_vector() {
        let out = classify_escape(&[0.5, 0.0], OrderResult::Finite { value: 7 }, 10, 1e-9);
        assert_eq!(out.verdict, EscapeVerdict::Contradiction { order: 7 });
        let out = classify_escape(&[0.0, 0.0], OrderResult::Finite { value: 7 }, 10, 1e-9);
        assert_eq!(out.verdict, EscapeVerdict::ZeroVector);
        let out = classify_escape(&[0.5], OrderResult::Infinite { witness: (2, 3) }, 10, 1e-9);
        assert_eq!(out.verdict, EscapeVerdict::Escapes);
        assert_eq!(out.min_power_norm, 0.5);
    }

    #[test]
    fn escape_requires_representation() {
        let u = Arc::new(Universe::from_words(["a", "b", "c"]).unwrap());
        let e = Embedding::new(&u, vec![vec![0.0], vec![1.0], vec![5.0]]).unwrap();
        let chain = Relation::successor_chain(&u);
        assert!(matches!(
            power_escape_check_embedding(&e, "s", &chain, 5, 1e-9),
            Err(Error::NotRepresented { .. })
        ));
    }
}
