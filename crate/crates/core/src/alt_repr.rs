//! Multiplicative representations that escape the vector-difference
//! obstruction: complex roots of unity for cyclic closures and Cayley
//! permutation matrices for any finite group of relations.

use num_complex::Complex;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::group::{is_group, iso_to_cyclic, target_order, MonoidClosure, Target};
use crate::scalar::Real;

/// A permutation of `0..m`; `perm[j]` is the image of `j`. As a matrix,
/// `P[i][j] = 1` iff `perm[j] == i`, so matrix product is composition
/// (`P_g P_h` applies `h` first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0.iter().all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
    }

    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.0.len();
        let mut p = vec![vec![0; m]; m];
        for (j, &i) in self.0.iter().enumerate() {
            p[i][j] = 1;
        }
        p
    }
}

impl Target for Permutation {
    fn combine(&self, other: &Self) -> Self {
        Permutation(other.0.iter().map(|&j| self.0[j]).collect())
    }

    fn identity_like(&self) -> Self {
        Permutation::identity(self.0.len())
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

/// `g^j ↦ e^(2πij/k)` for a cyclic closure with generator `g`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarRepresentation<T = f64> {
    pub closure: MonoidClosure,
    pub k: u64,
    pub generator: usize,
    pub images: Vec<Complex<T>>,
}

/// Left-regular representation: `g ↦ (x ↦ g∘x)` on closure indices.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRepresentation {
    pub closure: MonoidClosure,
    pub images: Vec<Permutation>,
}

/// Shared surface of the two representations for verification.
pub trait MultiplicativeRepresentation {
    type Image: Target;

    fn closure(&self) -> &MonoidClosure;
    fn images(&self) -> &[Self::Image];
    /// Size of the difference between two images.
    fn gap(a: &Self::Image, b: &Self::Image) -> f64;

    fn image_order(&self, element: usize, tol: f64) -> Option<u64> {
        target_order(&self.images()[element], self.closure().len() as u64, tol)
    }
}

impl<T: Real> MultiplicativeRepresentation for ScalarRepresentation<T> {
    type Image = Complex<T>;

    fn closure(&self) -> &MonoidClosure {
        &self.closure
    }

    fn images(&self) -> &[Complex<T>] {
        &self.images
    }

    fn gap(a: &Complex<T>, b: &Complex<T>) -> f64 {
        (a - b).norm().as_f64()
    }
}

impl MultiplicativeRepresentation for MatrixRepresentation {
    type Image = Permutation;

    fn closure(&self) -> &MonoidClosure {
        &self.closure
    }

    fn images(&self) -> &[Permutation] {
        &self.images
    }

    fn gap(a: &Permutation, b: &Permutation) -> f64 {
        a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count() as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicativeCheck {
    pub holds: bool,
    /// Pairs `(g, h)` with `ρ(g∘h) != ρ(g)ρ(h)`.
    pub product_violations: Vec<(usize, usize)>,
    /// Pairs `(g, h)`, `g < h`, whose images coincide within `tol`.
    pub coincident_images: Vec<(usize, usize)>,
    pub max_product_error: f64,
    pub min_image_gap: f64,
}

/// Checks `ρ(g∘h) ≈ ρ(g)ρ(h)` on every pair and that images are pairwise
/// distinct (more than `tol` apart).
pub fn verify_multiplicative<R: MultiplicativeRepresentation>(rep: &R, tol: f64) -> MultiplicativeCheck {
    let c = rep.closure();
    let images = rep.images();
    let n = c.len();
    let mut product_violations = Vec::new();
    let mut max_product_error: f64 = 0.0;
    for g in 0..n {
        for h in 0..n {
            let expected = images[g].combine(&images[h]);
            let actual = &images[c.table[g][h]];
            max_product_error = max_product_error.max(R::gap(actual, &expected));
            if !actual.approx_eq(&expected, tol) {
                product_violations.push((g, h));
            }
        }
    }
    let mut coincident_images = Vec::new();
    let mut min_image_gap = f64::INFINITY;
    for g in 0..n {
        for h in g + 1..n {
            let gap = R::gap(&images[g], &images[h]);
            min_image_gap = min_image_gap.min(gap);
            if gap <= tol {
                coincident_images.push((g, h));
            }
        }
    }
    MultiplicativeCheck {
        holds: product_violations.is_empty() && coincident_images.is_empty(),
        product_violations,
        coincident_images,
        max_product_error,
        min_image_gap,
    }
}

/// Tolerance used when verifying a freshly built scalar representation.
pub const SCALAR_TOLERANCE: f64 = 1e-9;

pub fn roots_of_unity_repr<T: Real>(c: &MonoidClosure) -> Result<ScalarRepresentation<T>> {
    let iso = iso_to_cyclic(c).ok_or(Error::NotCyclic)?;
    let turn = T::of(2.0) * T::of(std::f64::consts::PI) / T::of(iso.k as f64);
    let images = iso
        .residues
        .iter()
        .map(|&j| Complex::from_polar(T::one(), turn * T::of(j as f64)))
        .collect();
    let rep = ScalarRepresentation { closure: c.clone(), k: iso.k, generator: iso.generator, images };
    let tol = SCALAR_TOLERANCE.max(T::epsilon().as_f64() * 16.0 * iso.k as f64);
    let check = verify_multiplicative(&rep, tol);
    assert!(check.holds, "roots of unity must be multiplicative and distinct: {check:?}");
    Ok(rep)
}

pub fn cayley_repr(c: &MonoidClosure) -> Result<MatrixRepresentation> {
    if !is_group(c).is_group {
        return Err(Error::NotAGroup);
    }
    let images = c.table.iter().map(|row| Permutation(row.clone())).collect();
    let rep = MatrixRepresentation { closure: c.clone(), images };
    let check = verify_multiplicative(&rep, 0.0);
    assert!(
        check.holds,
        "left-regular representation of a group table must be faithful: {check:?}"
    );
    Ok(rep)
}

impl<T: Real> ScalarRepresentation<T> {
    /// Element name → `[re, im]`.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, z)| (self.closure.element_name(i), json!([z.re.as_f64(), z.im.as_f64()])))
            .collect();
        Value::Object(map)
    }
}

impl MatrixRepresentation {
    /// Element name → permutation index array.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, p)| (self.closure.element_name(i), json!(p.0)))
            .collect();
        Value::Object(map)
    }
}
