use serde::Serialize;

use super::Embedding;
use crate::error::{Error, Result};
use crate::relation::{Relation, RelationSet};
use crate::scalar::{distance, norm, Real};

/// How well one relation is captured by a single difference vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationVectorReport<T = f64> {
    pub name: String,
    /// Arithmetic mean of `φ(b) - φ(a)` over the pairs `(a, b)`.
    pub mean: Vec<T>,
    /// Largest Euclidean distance of a pair difference from the mean.
    pub max_deviation: T,
    pub pair_count: usize,
    /// `max_deviation <= tol * (1 + |mean|)`.
    pub is_representation: bool,
}

/// Computes the relation vector of `r` under `e`.
///
/// The tolerance is relative: a relation is represented when every pair
/// difference lies within `tol * (1 + |mean|)` of the mean.
pub fn relation_vector<T: Real>(
    e: &Embedding<T>,
    name: &str,
    r: &Relation,
    tol: T,
) -> Result<RelationVectorReport<T>> {
    if e.universe() != r.universe() {
        return Err(Error::UniverseMismatch);
    }
    if r.is_empty() {
        return Err(Error::EmptyRelation(name.to_owned()));
    }
    let diffs: Vec<Vec<T>> = r
        .pairs()
        .map(|(a, b)| e.vector(b).iter().zip(e.vector(a)).map(|(&y, &x)| y - x).collect())
        .collect();
    let count = T::of(diffs.len() as f64);
    let mut mean = vec![T::zero(); e.dim()];
    for d in &diffs {
        for (m, &x) in mean.iter_mut().zip(d) {
            *m += x;
        }
    }
    for m in &mut mean {
        *m /= count;
    }
    let max_deviation = if diffs.len() <= 1 {
        T::zero()
    } else {
        diffs.iter().map(|d| distance(d, &mean)).fold(T::zero(), T::max)
    };
    let is_representation = max_deviation <= tol * (T::one() + norm(&mean));
    Ok(RelationVectorReport {
        name: name.to_owned(),
        mean,
        max_deviation,
        pair_count: diffs.len(),
        is_representation,
    })
}

/// How relation vectors are compared for distinctness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    /// Plain vectors.
    Vector,
    /// Directions: positive multiples are identified.
    Ray,
    /// Lines: all nonzero multiples are identified.
    Line,
}

/// Whether `v` and `w` name the same direction (`Ray`) or line (`Line`).
///
/// Two vectors within `tol` of zero are equivalent to each other; a zero
/// vector is never equivalent to a nonzero one. `Vector` mode compares the
/// vectors themselves.
pub fn directions_equivalent<T: Real>(v: &[T], w: &[T], mode: Comparison, tol: T) -> bool {
    if mode == Comparison::Vector {
        return distance(v, w) <= tol;
    }
    let (nv, nw) = (norm(v), norm(w));
    match (nv <= tol, nw <= tol) {
        (true, true) => return true,
        (true, false) | (false, true) => return false,
        _ => {}
    }
    let unit_v: Vec<T> = v.iter().map(|&x| x / nv).collect();
    let unit_w: Vec<T> = w.iter().map(|&x| x / nw).collect();
    if distance(&unit_v, &unit_w) <= tol {
        return true;
    }
    if mode == Comparison::Line {
        let neg_w: Vec<T> = unit_w.iter().map(|&x| -x).collect();
        return distance(&unit_v, &neg_w) <= tol;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairDistance<T = f64> {
    pub first: String,
    pub second: String,
    /// Euclidean distance between the two mean vectors.
    pub distance: T,
    pub distinct: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WellRepresented<T = f64> {
    pub verdict: bool,
    pub mode: Comparison,
    pub reports: Vec<RelationVectorReport<T>>,
    pub distances: Vec<PairDistance<T>>,
    /// Fewer than two distinct relations, so distinctness holds vacuously.
    pub vacuous: bool,
}

/// Every relation is a representation and distinct relations get distinct
/// vectors (distance above `tol_distinct`).
pub fn well_represented<T: Real>(
    e: &Embedding<T>,
    relations: &RelationSet,
    tol_rep: T,
    tol_distinct: T,
) -> Result<WellRepresented<T>> {
    well_represented_with(e, relations, tol_rep, tol_distinct, Comparison::Vector)
}

/// [`well_represented`] with distinctness judged in the given quotient.
/// Named relations that are equal as relations are not required to differ.
pub fn well_represented_with<T: Real>(
    e: &Embedding<T>,
    relations: &RelationSet,
    tol_rep: T,
    tol_distinct: T,
    mode: Comparison,
) -> Result<WellRepresented<T>> {
    let reports = relations
        .iter()
        .map(|(name, r)| relation_vector(e, name, r, tol_rep))
        .collect::<Result<Vec<_>>>()?;
    let rels: Vec<&Relation> = relations.values().collect();

    let mut distances = Vec::new();
    for i in 0..reports.len() {
        for j in i + 1..reports.len() {
            if rels[i] == rels[j] {
                continue;
            }
            let (a, b) = (&reports[i], &reports[j]);
            let d = distance(&a.mean, &b.mean);
            let distinct = match mode {
                Comparison::Vector => d > tol_distinct,
                _ => !directions_equivalent(&a.mean, &b.mean, mode, tol_distinct),
            };
            distances.push(PairDistance {
                first: a.name.clone(),
                second: b.name.clone(),
                distance: d,
                distinct,
            });
        }
    }
    let verdict = reports.iter().all(|r| r.is_representation) && distances.iter().all(|d| d.distinct);
    Ok(WellRepresented { verdict, mode, reports, vacuous: distances.is_empty(), distances })
}

/// Whether `φ(r∘r2) ≈ φ(r) + φ(r2)` within `3 * tol`.
///
/// All three relations must be represented at `tol`; otherwise the relation
/// vectors are not defined and an error is returned.
pub fn check_homomorphism_additive<T: Real>(
    e: &Embedding<T>,
    r: &Relation,
    r2: &Relation,
    tol: T,
) -> Result<bool> {
    let composed = r.compose(r2)?;
    let reports = [("r", r), ("r2", r2), ("r o r2", &composed)]
        .into_iter()
        .map(|(name, rel)| {
            let rep = relation_vector(e, name, rel, tol)?;
            if rep.is_representation {
                Ok(rep)
            } else {
                Err(Error::NotRepresented {
                    name: name.to_owned(),
                    max_deviation: rep.max_deviation.as_f64(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let sum: Vec<T> = reports[0].mean.iter().zip(&reports[1].mean).map(|(&a, &b)| a + b).collect();
    Ok(distance(&reports[2].mean, &sum) <= T::of(3.0) * tol)
}
