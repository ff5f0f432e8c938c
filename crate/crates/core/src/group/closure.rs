use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::relation::{Relation, Universe};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// The monoid generated by a set of relations under composition.
///
/// Element 0 is always the identity; the remaining elements appear in
/// breadth-first discovery order. `table[i][j]` is the index of
/// `elements[i] ∘ elements[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonoidClosure {
    pub universe: Arc<Universe>,
    pub elements: Vec<Relation>,
    pub table: Vec<Vec<usize>>,
    pub generator_indices: Vec<usize>,
    pub generator_names: Vec<String>,
    /// Each element as a word in the generators (generator positions).
    pub words: Vec<Vec<usize>>,
}

pub fn generate_closure<N: AsRef<str>>(generators: &[(N, Relation)]) -> Result<MonoidClosure> {
    generate_closure_with_cap(generators, DEFAULT_CLOSURE_CAP)
}

pub fn generate_closure_with_cap<N: AsRef<str>>(
    generators: &[(N, Relation)],
    cap: usize,
) -> Result<MonoidClosure> {
    let (_, first) = generators
        .first()
        .ok_or_else(|| Error::Spec("closure needs at least one generator".into()))?;
    let universe = Arc::clone(first.universe());
    if generators.iter().any(|(_, g)| !g.same_universe(first)) {
        return Err(Error::UniverseMismatch);
    }

    let mut elements = vec![Relation::identity(&universe)];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut index: HashMap<Relation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);

    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (g, (_, gen)) in generators.iter().enumerate() {
            let product = elements[i].compose_unchecked(gen);
            if index.contains_key(&product) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::ClosureTooLarge { cap, count: elements.len() + 1 });
            }
            let mut word = words[i].clone();
            word.push(g);
            index.insert(product.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(product);
            words.push(word);
        }
    }

    let table = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.compose_unchecked(b)]).collect())
        .collect();
    let generator_indices = generators.iter().map(|(_, g)| index[g]).collect();

    Ok(MonoidClosure {
        universe,
        elements,
        table,
        generator_indices,
        generator_names: generators.iter().map(|(n, _)| n.as_ref().to_owned()).collect(),
        words,
    })
}

impl MonoidClosure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Never true: the identity is always present.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, r: &Relation) -> Option<usize> {
        self.elements.iter().position(|e| e == r)
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Order of an element computed on the table; `None` when infinite.
    pub fn element_order(&self, i: usize) -> Option<u64> {
        let mut current = i;
        for k in 1..=self.len() as u64 {
            if current == 0 {
                return Some(k);
            }
            current = self.table[current][i];
        }
        None
    }

    /// The element as an expression over generator names, e.g. `s^3 o t`.
    /// The identity is `e`.
    pub fn element_name(&self, i: usize) -> String {
        let word = &self.words[i];
        if word.is_empty() {
            return "e".to_owned();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut run = 0;
        for (pos, &g) in word.iter().enumerate() {
            run += 1;
            if word.get(pos + 1) != Some(&g) {
                let name = &self.generator_names[g];
                parts.push(if run == 1 { name.clone() } else { format!("{name}^{run}") });
                run = 0;
            }
        }
        parts.join(" o ")
    }

    /// Exhaustive associativity check of the table.
    pub fn is_associative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.table[a][b];
                (0..n).all(|c| self.table[ab][c] == self.table[a][self.table[b][c]])
            })
        })
    }
}
