use num_complex::Complex;
use serde::Serialize;

use super::MonoidClosure;
use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::scalar::{distance, Real};

/// A target structure for homomorphisms out of a relation closure: a binary
/// operation with an identity and a comparison.
pub trait Target: Clone {
    /// The target operation, `self · other`.
    fn combine(&self, other: &Self) -> Self;
    /// The identity of the structure `self` lives in.
    fn identity_like(&self) -> Self;
    /// Exact targets ignore `tol`.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
}

impl Target for Relation {
    fn combine(&self, other: &Self) -> Self {
        self.compose_unchecked(other)
    }

    fn identity_like(&self) -> Self {
        Relation::identity(self.universe())
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

/// An element of the additive group of integers mod `modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Residue { value: value % modulus, modulus }
    }
}

impl Target for Residue {
    fn combine(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Residue::new(self.value + other.value, self.modulus)
    }

    fn identity_like(&self) -> Self {
        Residue::new(0, self.modulus)
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

/// A real vector under addition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Additive<T>(pub Vec<T>);

impl<T: Real> Target for Additive<T> {
    fn combine(&self, other: &Self) -> Self {
        Additive(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    fn identity_like(&self) -> Self {
        Additive(vec![T::zero(); self.0.len()])
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        distance(&self.0, &other.0) <= T::of(tol)
    }
}

/// A complex scalar under multiplication.
impl<T: Real> Target for Complex<T> {
    fn combine(&self, other: &Self) -> Self {
        self * other
    }

    fn identity_like(&self) -> Self {
        Complex::new(T::one(), T::zero())
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= T::of(tol)
    }
}

/// Images of every closure element, indexed like `MonoidClosure::elements`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomomorphismMap<X> {
    pub images: Vec<X>,
}

impl<X: Target> HomomorphismMap<X> {
    pub fn new(images: Vec<X>) -> Self {
        HomomorphismMap { images }
    }

    pub fn from_fn(c: &MonoidClosure, f: impl FnMut(usize) -> X) -> Self {
        HomomorphismMap { images: (0..c.len()).map(f).collect() }
    }

    fn check_total(&self, c: &MonoidClosure) -> Result<()> {
        if self.images.len() != c.len() {
            return Err(Error::PartialMap { expected: c.len(), got: self.images.len() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomomorphismCheck {
    pub holds: bool,
    /// `(a, b, a∘b)` triples where `h(a∘b) != h(a)·h(b)`, lexicographic in `(a, b)`.
    pub violations: Vec<(usize, usize, usize)>,
}

/// Checks `h(a∘b) == h(a)·h(b)` for every pair of closure elements.
pub fn verify_homomorphism<X: Target>(
    h: &HomomorphismMap<X>,
    c: &MonoidClosure,
    tol: f64,
) -> Result<HomomorphismCheck> {
    h.check_total(c)?;
    let n = c.len();
    let mut violations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = c.table[a][b];
            if !h.images[ab].approx_eq(&h.images[a].combine(&h.images[b]), tol) {
                violations.push((a, b, ab));
            }
        }
    }
    Ok(HomomorphismCheck { holds: violations.is_empty(), violations })
}

/// Smallest `m` in `1..=limit` with `x^m` equal to the identity.
pub fn target_order<X: Target>(x: &X, limit: u64, tol: f64) -> Option<u64> {
    let e = x.identity_like();
    let mut current = x.clone();
    for m in 1..=limit {
        if current.approx_eq(&e, tol) {
            return Some(m);
        }
        current = current.combine(x);
    }
    None
}

/// Whether the order of `h(element)` divides the order of `element`.
///
/// The image order is searched only up to the source order, since a
/// divisor can be no larger. An element of infinite order passes trivially
/// (every integer divides the zero exponent of an infinite cyclic monoid).
pub fn check_order_divides<X: Target>(
    h: &HomomorphismMap<X>,
    c: &MonoidClosure,
    element: usize,
    tol: f64,
) -> Result<bool> {
    h.check_total(c)?;
    let Some(source) = c.element_order(element) else {
        return Ok(true);
    };
    Ok(match target_order(&h.images[element], source, tol) {
        Some(image) => source % image == 0,
        None => false,
    })
}
