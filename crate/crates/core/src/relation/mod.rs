//! Finite word universes and binary relations over them.
//!
//! Composition follows the existential convention: `(w, w')` is in
//! `r.compose(r2)` iff some `w''` has `(w, w'')` in `r` and `(w'', w')` in
//! `r2`. The first argument is applied first, so the adjacency of the result
//! is the boolean matrix product `adj(r) * adj(r2)`. Some textbooks write the
//! same operation with the arguments swapped.

mod spec_file;
mod universe;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use spec_file::{RelationSet, RelationSpec};
pub use universe::Universe;

use crate::error::{Error, Result};

/// A binary relation over a [`Universe`], stored as dense row bitsets.
#[derive(Clone)]
pub struct Relation {
    universe: Arc<Universe>,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(universe: &Arc<Universe>) -> Self {
        let n = universe.len();
        let words_per_row = n.div_ceil(64);
        Relation {
            universe: Arc::clone(universe),
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    /// The diagonal relation: `(w, w')` is included iff `w == w'`.
    pub fn identity(universe: &Arc<Universe>) -> Self {
        let mut r = Relation::empty(universe);
        for i in 0..universe.len() {
            r.insert(i, i);
        }
        r
    }

    /// Builds a relation from word pairs. Repeated pairs are ignored.
    pub fn from_pairs<S: AsRef<str>>(universe: &Arc<Universe>, pairs: &[(S, S)]) -> Result<Self> {
        let mut r = Relation::empty(universe);
        for (a, b) in pairs {
            let i = universe.require(a.as_ref())?;
            let j = universe.require(b.as_ref())?;
            r.insert(i, j);
        }
        Ok(r)
    }

    /// Builds a relation from index pairs. Panics on out-of-range indices.
    pub fn from_index_pairs(universe: &Arc<Universe>, pairs: &[(usize, usize)]) -> Self {
        let mut r = Relation::empty(universe);
        for &(i, j) in pairs {
            let n = universe.len();
            assert!(i < n && j < n, "pair ({i}, {j}) outside universe of size {n}");
            r.insert(i, j);
        }
        r
    }

    /// `w_i -> w_{i+1 mod n}` in universe order.
    pub fn successor_cycle(universe: &Arc<Universe>) -> Self {
        let n = universe.len();
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Relation::from_index_pairs(universe, &pairs)
    }

    /// `w_i -> w_{i+1}` in universe order, without the wrap from last to first.
    pub fn successor_chain(universe: &Arc<Universe>) -> Self {
        let n = universe.len();
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Relation::from_index_pairs(universe, &pairs)
    }

    fn insert(&mut self, i: usize, j: usize) {
        self.bits[i * self.words_per_row + j / 64] |= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn contains_words(&self, a: &str, b: &str) -> bool {
        match (self.universe.lookup(a), self.universe.lookup(b)) {
            (Some(i), Some(j)) => self.contains(i, j),
            _ => false,
        }
    }

    /// Number of pairs in the relation.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Index pairs in row-major (universe) order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.universe.len();
        (0..n).flat_map(move |i| (0..n).filter(move |&j| self.contains(i, j)).map(move |j| (i, j)))
    }

    pub fn word_pairs(&self) -> Vec<(String, String)> {
        self.pairs()
            .map(|(i, j)| (self.universe.word(i).to_owned(), self.universe.word(j).to_owned()))
            .collect()
    }

    /// Relational composition, first argument applied first.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        if !self.same_universe(other) {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Relation) -> Relation {
        let n = self.universe.len();
        let mut out = Relation::empty(&self.universe);
        let wpr = self.words_per_row;
        for i in 0..n {
            let dst = i * wpr;
            for k in 0..n {
                if self.contains(i, k) {
                    for (w, &src) in other.row(k).iter().enumerate() {
                        out.bits[dst + w] |= src;
                    }
                }
            }
        }
        out
    }

    /// `k`-fold composition by repeated squaring; `power(0)` is the identity.
    pub fn power(&self, mut k: u64) -> Relation {
        let mut acc = Relation::identity(&self.universe);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.compose_unchecked(&base);
            }
        }
        acc
    }

    /// `k`-fold composition by left-to-right iteration.
    pub fn power_naive(&self, k: u64) -> Relation {
        (0..k).fold(Relation::identity(&self.universe), |acc, _| acc.compose_unchecked(self))
    }

    /// Transpose of the adjacency matrix.
    ///
    /// This is the compositional inverse only when the relation is a
    /// bijection; in general `r.compose(&r.converse())` is not the identity.
    pub fn converse(&self) -> Relation {
        let mut out = Relation::empty(&self.universe);
        for (i, j) in self.pairs() {
            out.insert(j, i);
        }
        out
    }

    /// Exactly one pair in every row and every column.
    pub fn is_bijection(&self) -> bool {
        let n = self.universe.len();
        let mut col_counts = vec![0usize; n];
        for i in 0..n {
            let row_count: u32 = self.row(i).iter().map(|w| w.count_ones()).sum();
            if row_count != 1 {
                return false;
            }
        }
        for (_, j) in self.pairs() {
            col_counts[j] += 1;
        }
        col_counts.iter().all(|&c| c == 1)
    }

    pub fn is_identity(&self) -> bool {
        *self == Relation::identity(&self.universe)
    }

    pub fn same_universe(&self, other: &Relation) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.same_universe(other) && self.bits == other.bits
    }
}

impl Eq for Relation {}

impl Hash for Relation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.words().hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.word_pairs()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weekdays() -> Arc<Universe> {
        Arc::new(
            Universe::from_words([
                "Monday",
                "Tuesday",
                "Wednesday",
                "Thursday",
                "Friday",
                "Saturday",
                "Sunday",
            ])
            .unwrap(),
        )
    }

    fn abc() -> Arc<Universe> {
        Arc::new(Universe::from_words(["a", "b", "c"]).unwrap())
    }

    #[test]
    fn successor_from_pairs() {
        let u = weekdays();
        let words: Vec<_> = u.words().to_vec();
        let pairs: Vec<_> = (0..7).map(|i| (words[i].clone(), words[(i + 1) % 7].clone())).collect();
        let s = Relation::from_pairs(&u, &pairs).unwrap();
        assert_eq!(s.len(), 7);
        assert_eq!(s, Relation::successor_cycle(&u));
        assert!(s.contains_words("Monday", "Tuesday"));
        assert!(!s.contains_words("Monday", "Sunday"));
    }

    #[test]
    fn duplicate_pairs_ignored_and_unknown_rejected() {
        let u = weekdays();
        let r = Relation::from_pairs(&u, &[("Monday", "Tuesday"), ("Monday", "Tuesday")]).unwrap();
        assert_eq!(r.len(), 1);
        let empty: Vec<(&str, &str)> = vec![];
        assert!(Relation::from_pairs(&u, &empty).unwrap().is_empty());
        match Relation::from_pairs(&u, &[("Monday", "Funday")]) {
            Err(Error::UnknownWord(w)) => assert_eq!(w, "Funday"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn compose_examples() {
        let u = weekdays();
        let s = Relation::successor_cycle(&u);
        let s2 = s.compose(&s).unwrap();
        assert!(s2.contains_words("Monday", "Wednesday"));
        assert_eq!(s2.len(), 7);

        let u = abc();
        let ab = Relation::from_pairs(&u, &[("a", "b")]).unwrap();
        let bc = Relation::from_pairs(&u, &[("b", "c")]).unwrap();
        let ac = Relation::from_pairs(&u, &[("a", "c")]).unwrap();
        assert_eq!(ab.compose(&bc).unwrap(), ac);
        // argument order matters
        assert!(bc.compose(&ab).unwrap().is_empty());
        let e = Relation::identity(&u);
        assert_eq!(ab.compose(&e).unwrap(), ab);
        assert_eq!(e.compose(&ab).unwrap(), ab);
    }

    #[test]
    fn universe_mismatch_rejected() {
        let r = Relation::identity(&abc());
        let other = Relation::identity(&weekdays());
        assert!(matches!(r.compose(&other), Err(Error::UniverseMismatch)));
        // equal word lists are the same universe even through distinct Arcs
        assert!(r.compose(&Relation::identity(&abc())).is_ok());
    }

    #[test]
    fn powers() {
        let u = weekdays();
        let s = Relation::successor_cycle(&u);
        let e = Relation::identity(&u);
        assert_eq!(s.power(7), e);
        assert_eq!(s.power(8), s);
        assert_eq!(s.power(0), e);
        assert_eq!(e.power(5), e);
        assert_eq!(e.compose(&e).unwrap(), e);
        for k in 0..30 {
            assert_eq!(s.power(k), s.power_naive(k));
        }
    }

    #[test]
    fn converse_and_bijection() {
        let u = weekdays();
        let s = Relation::successor_cycle(&u);
        let e = Relation::identity(&u);
        // enumerate both sides
        let conv: Vec<_> = s.converse().pairs().collect();
        let s6: Vec<_> = s.power(6).pairs().collect();
        assert_eq!(conv, s6);
        assert_eq!(e.converse(), e);
        assert_eq!(s.converse().converse(), s);

        assert!(s.is_bijection());
        assert!(e.is_bijection());
        assert!(!Relation::empty(&u).is_bijection());
        assert!(!Relation::successor_chain(&u).is_bijection());
    }

    #[test]
    fn wide_universe_uses_multiple_words_per_row() {
        let words: Vec<String> = (0..130).map(|i| format!("w{i}")).collect();
        let u = Arc::new(Universe::from_words(words).unwrap());
        let s = Relation::successor_cycle(&u);
        assert_eq!(s.power(130), Relation::identity(&u));
        assert_eq!(s.power(131), s);
        assert!(s.contains(64, 65) && s.contains(129, 0));
    }
}
