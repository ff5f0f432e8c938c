//! Fitting a relation-as-vector embedding to a set of relations.
//!
//! Unknowns are one vector per word and one per relation; every pair `(a, b)`
//! of relation `r` contributes the residual `φ(b) - φ(a) - v_r`. Each
//! coordinate is the same homogeneous linear system `A x = 0`, so the exact
//! representations are precisely the null space of `A`. Translation is fixed
//! by pinning the first word of each connected component of the pair graph to
//! the origin; the remaining null space is computed exactly over the
//! rationals, orthonormalized, and its basis vectors are laid out one per
//! coordinate. When the null space is trivial every relation vector is
//! forced to zero (the collapse).

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::Embedding;
use crate::error::{Error, Result};
use crate::linalg;
use crate::relation::{RelationSet, Universe};
use crate::scalar::{norm, Real};

#[derive(Debug, Clone, PartialEq)]
pub struct FitResult<T = f64> {
    pub embedding: Embedding<T>,
    /// One vector per relation, in name order.
    pub relation_vectors: Vec<(String, Vec<T>)>,
    /// Sum of squared residuals of the returned solution.
    pub objective: T,
    /// Every relation vector is within `tol` of zero.
    pub collapsed: bool,
    /// Dimension of the space of exact representations after gauge fixing.
    pub solution_dim: usize,
    /// The exact solution is not unique: the returned one is the orthonormal
    /// choice from a `solution_dim`-dimensional family.
    pub degenerate: bool,
    /// `solution_dim` exceeded the requested dimension, so some independent
    /// directions were dropped.
    pub truncated: bool,
}

impl<T: Real> FitResult<T> {
    pub fn relation_vector(&self, name: &str) -> Option<&[T]> {
        self.relation_vectors.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    /// Recomputes the objective from the stored embedding and vectors.
    pub fn recompute_objective(&self, relations: &RelationSet) -> T {
        let vectors: Vec<&[T]> = self.relation_vectors.iter().map(|(_, v)| v.as_slice()).collect();
        residual(&self.embedding, relations, &vectors)
    }
}

/// `Σ_r Σ_{(a,b) ∈ r} |φ(b) - φ(a) - v_r|²`, with `vectors` in name order.
pub fn residual<T: Real>(e: &Embedding<T>, relations: &RelationSet, vectors: &[&[T]]) -> T {
    let mut total = T::zero();
    for (r, v) in relations.values().zip(vectors) {
        for (a, b) in r.pairs() {
            for ((&xb, &xa), &vr) in e.vector(b).iter().zip(e.vector(a)).zip(v.iter()) {
                let d = xb - xa - vr;
                total += d * d;
            }
        }
    }
    total
}

/// First word (universe order) of each connected component of the graph whose
/// edges are all relation pairs.
fn gauge_words(n: usize, relations: &RelationSet) -> Vec<bool> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for r in relations.values() {
        for (a, b) in r.pairs() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            // keep the smaller index as root so it is the pinned word
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    (0..n).map(|i| find(&mut parent, i) == i).collect()
}

fn orthonormalize<T: Real>(basis: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = Vec::with_capacity(basis.len());
    for mut v in basis {
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for q in &out {
                let dot = v.iter().zip(q).fold(T::zero(), |acc, (&a, &b)| acc + a * b);
                for (x, &qi) in v.iter_mut().zip(q) {
                    *x -= dot * qi;
                }
            }
        }
        let len = norm(&v);
        for x in &mut v {
            *x /= len;
        }
        out.push(v);
    }
    out
}

/// Fits word and relation vectors in `dim` dimensions.
///
/// The returned objective is the recomputed residual, zero up to rounding.
/// `tol` only decides the `collapsed` flag.
pub fn fit_embedding<T: Real>(
    universe: &Arc<Universe>,
    relations: &RelationSet,
    dim: usize,
    tol: T,
) -> Result<FitResult<T>> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    for (name, r) in relations {
        if r.universe() != universe {
            return Err(Error::UniverseMismatch);
        }
        if r.is_empty() {
            return Err(Error::EmptyRelation(name.clone()));
        }
    }

    let n = universe.len();
    let pinned = gauge_words(n, relations);
    let mut word_col = vec![None; n];
    let mut cols = 0;
    for (i, &p) in pinned.iter().enumerate() {
        if !p {
            word_col[i] = Some(cols);
            cols += 1;
        }
    }
    let rel_col0 = cols;
    let ncols = cols + relations.len();

    let one = || BigRational::from_integer(BigInt::from(1));
    let mut rows = Vec::new();
    for (ri, r) in relations.values().enumerate() {
        for (a, b) in r.pairs() {
            let mut row = vec![BigRational::zero(); ncols];
            if let Some(cb) = word_col[b] {
                row[cb] += one();
            }
            if let Some(ca) = word_col[a] {
                row[ca] -= one();
            }
            row[rel_col0 + ri] -= one();
            rows.push(row);
        }
    }
    let exact = linalg::nullspace(rows, ncols);
    let solution_dim = exact.len();

    let basis: Vec<Vec<T>> = exact
        .iter()
        .map(|v| v.iter().map(|x| T::of(x.to_f64().expect("small rational"))).collect())
        .collect();
    let mut basis = orthonormalize(basis);
    let tiny = T::epsilon().sqrt();
    for v in &mut basis {
        let lead = v[rel_col0..]
            .iter()
            .chain(&v[..rel_col0])
            .find(|x| x.abs() > tiny)
            .copied()
            .unwrap_or(T::one());
        if lead < T::zero() {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }

    let coord = |col: usize| -> Vec<T> {
        (0..dim).map(|k| basis.get(k).map_or(T::zero(), |b| b[col])).collect()
    };
    let word_vectors: Vec<Vec<T>> = word_col
        .iter()
        .map(|c| c.map_or_else(|| vec![T::zero(); dim], coord))
        .collect();
    let embedding = Embedding::new(universe, word_vectors)?;
    let relation_vectors: Vec<(String, Vec<T>)> = relations
        .keys()
        .enumerate()
        .map(|(ri, name)| (name.clone(), coord(rel_col0 + ri)))
        .collect();
    let collapsed = relation_vectors.iter().all(|(_, v)| norm(v) <= tol);

    let mut fit = FitResult {
        embedding,
        relation_vectors,
        objective: T::zero(),
        collapsed,
        solution_dim,
        degenerate: solution_dim > 0,
        truncated: solution_dim > dim,
    };
    fit.objective = fit.recompute_objective(relations);
    Ok(fit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Relation;

    fn universe(n: usize) -> Arc<Universe> {
        Arc::new(Universe::from_words((0..n).map(|i| format!("w{i}"))).unwrap())
    }

    #[test]
    fn cycle_collapses() {
        let u = universe(7);
        let rels: RelationSet = [("s".to_owned(), Relation::successor_cycle(&u))].into();
        let fit = fit_embedding(&u, &rels, 2, 1e-9).unwrap();
        assert!(fit.collapsed);
        assert_eq!(fit.solution_dim, 0);
        assert!(!fit.degenerate);
        assert_eq!(fit.objective, 0.0);
        assert!(fit.embedding.vectors().iter().all(|v| v == &[0.0, 0.0]));
    }

    #[test]
    fn chain_is_linear() {
        let u = universe(7);
        let rels: RelationSet = [("s".to_owned(), Relation::successor_chain(&u))].into();
        let fit = fit_embedding(&u, &rels, 1, 1e-9).unwrap();
        assert!(!fit.collapsed);
        assert_eq!(fit.solution_dim, 1);
        let v = fit.relation_vector("s").unwrap()[0];
        // unit norm over (φ_1..φ_6, v) = (1..6, 1)·v
        assert!((v - 1.0 / 92f64.sqrt()).abs() < 1e-15);
        for i in 0..7 {
            assert!((fit.embedding.vector(i)[0] - i as f64 * v).abs() < 1e-14);
        }
        assert!(fit.objective < 1e-28);
    }

    #[test]
    fn single_pair_is_degenerate() {
        let u = universe(2);
        let rels: RelationSet = [("r".to_owned(), Relation::from_index_pairs(&u, &[(0, 1)]))].into();
        let fit = fit_embedding(&u, &rels, 1, 1e-9f64).unwrap();
        assert!(fit.degenerate);
        let v = fit.relation_vector("r").unwrap()[0];
        assert!((fit.embedding.vector(1)[0] - fit.embedding.vector(0)[0] - v).abs() < 1e-15);
    }

    #[test]
    fn isolated_words_stay_at_origin() {
        let u = universe(4);
        let rels: RelationSet = [("r".to_owned(), Relation::from_index_pairs(&u, &[(1, 2)]))].into();
        let fit = fit_embedding(&u, &rels, 2, 1e-9).unwrap();
        assert_eq!(fit.embedding.vector(0), &[0.0, 0.0]);
        assert_eq!(fit.embedding.vector(3), &[0.0, 0.0]);
        assert_eq!(fit.embedding.vector(1), &[0.0, 0.0]);
    }

    #[test]
    fn independent_components_fill_separate_coordinates() {
        let u = universe(4);
        let rels: RelationSet = [
            ("p".to_owned(), Relation::from_index_pairs(&u, &[(0, 1)])),
            ("q".to_owned(), Relation::from_index_pairs(&u, &[(2, 3)])),
        ]
        .into();
        let fit = fit_embedding(&u, &rels, 2, 1e-9f64).unwrap();
        assert_eq!(fit.solution_dim, 2);
        let (p, q) = (fit.relation_vector("p").unwrap(), fit.relation_vector("q").unwrap());
        let dot = p[0] * q[0] + p[1] * q[1];
        assert!(norm(p) > 0.1 && norm(q) > 0.1 && dot.abs() < 1e-12);
        let trunc = fit_embedding(&u, &rels, 1, 1e-9).unwrap();
        assert!(trunc.truncated);
    }

    #[test]
    fn errors() {
        let u = universe(3);
        let rels: RelationSet = [("r".to_owned(), Relation::empty(&u))].into();
        assert!(matches!(fit_embedding(&u, &rels, 1, 1e-9f64), Err(Error::EmptyRelation(_))));
        let rels: RelationSet = [("s".to_owned(), Relation::successor_cycle(&u))].into();
        assert!(matches!(fit_embedding(&u, &rels, 0, 1e-9f64), Err(Error::ZeroDimension)));
        assert!(matches!(
            fit_embedding(&universe(4), &rels, 1, 1e-9f64),
            Err(Error::UniverseMismatch)
        ));
    }

    #[test]
    fn single_precision_fit() {
        let u = universe(5);
        let rels: RelationSet = [("s".to_owned(), Relation::successor_chain(&u))].into();
        let fit = fit_embedding(&u, &rels, 1, 1e-5f32).unwrap();
        assert!(!fit.collapsed);
        assert!(fit.objective < 1e-10);
    }
}
