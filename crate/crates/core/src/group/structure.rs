use serde::Serialize;

use super::MonoidClosure;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupVerdict {
    pub is_group: bool,
    /// Elements with no two-sided inverse, ascending.
    pub missing_inverses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianVerdict {
    pub is_abelian: bool,
    /// First pair `(i, j)`, `i < j`, with `i∘j != j∘i`.
    pub violation: Option<(usize, usize)>,
}

/// Isomorphism from a cyclic closure onto the integers mod `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicIso {
    pub k: u64,
    pub generator: usize,
    /// `residues[i]` is the exponent `j` with `elements[i] == generator^j`.
    pub residues: Vec<u64>,
}

/// The closure always contains the identity and its table is associative by
/// construction, so only inverses need checking.
pub fn is_group(c: &MonoidClosure) -> GroupVerdict {
    let e = c.identity_index();
    let missing_inverses: Vec<usize> = (0..c.len())
        .filter(|&i| !(0..c.len()).any(|j| c.table[i][j] == e && c.table[j][i] == e))
        .collect();
    GroupVerdict { is_group: missing_inverses.is_empty(), missing_inverses }
}

pub fn is_abelian(c: &MonoidClosure) -> AbelianVerdict {
    let n = c.len();
    let violation = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| c.table[i][j] != c.table[j][i]);
    AbelianVerdict { is_abelian: violation.is_none(), violation }
}

/// Tries each element in index order as a generator of the whole closure.
pub fn iso_to_cyclic(c: &MonoidClosure) -> Option<CyclicIso> {
    if !is_group(c).is_group {
        return None;
    }
    let n = c.len();
    let e = c.identity_index();
    for g in 0..n {
        let mut residues = vec![u64::MAX; n];
        let mut current = e;
        let mut j = 0u64;
        loop {
            residues[current] = j;
            current = c.table[current][g];
            j += 1;
            if current == e {
                break;
            }
        }
        if j as usize != n {
            continue;
        }
        let k = n as u64;
        let homomorphic = (0..n).all(|a| {
            (0..n).all(|b| residues[c.table[a][b]] == (residues[a] + residues[b]) % k)
        });
        if homomorphic {
            return Some(CyclicIso { k, generator: g, residues });
        }
    }
    None
}
