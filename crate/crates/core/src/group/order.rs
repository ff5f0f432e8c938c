use std::collections::HashMap;

use serde::Serialize;

use crate::relation::Relation;

/// Order of a relation under composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OrderResult {
    /// Smallest positive `k` with `r^k` equal to the identity.
    Finite { value: u64 },
    /// No positive power is the identity. The witness `(i, j)`, `i < j`, is the
    /// first repetition `r^i == r^j` in the power sequence.
    Infinite { witness: (u64, u64) },
}

impl OrderResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            OrderResult::Finite { value } => Some(value),
            OrderResult::Infinite { .. } => None,
        }
    }
}

impl std::fmt::Display for OrderResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrderResult::Finite { value } => write!(f, "{value}"),
            OrderResult::Infinite { witness: (i, j) } => {
                write!(f, "infinite (r^{i} = r^{j})")
            }
        }
    }
}

/// Walks `r, r^2, r^3, ...` until the identity or a repeated power appears.
///
/// The power sequence of a relation over a finite universe is eventually
/// periodic, so this always terminates.
pub fn order(r: &Relation) -> OrderResult {
    let identity = Relation::identity(r.universe());
    let mut seen: HashMap<Relation, u64> = HashMap::new();
    let mut current = r.clone();
    let mut k = 1u64;
    loop {
        if current == identity {
            return OrderResult::Finite { value: k };
        }
        if let Some(&i) = seen.get(&current) {
            return OrderResult::Infinite { witness: (i, k) };
        }
        let next = current.compose_unchecked(r);
        seen.insert(current, k);
        current = next;
        k += 1;
    }
}
