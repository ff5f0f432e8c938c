use std::collections::HashMap;

use crate::error::{Error, Result};

/// An ordered, nonempty set of distinct word labels.
#[derive(Debug, Clone)]
pub struct Universe {
    words: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn from_words<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut words = Vec::new();
        let mut index = HashMap::new();
        for label in labels {
            let label = label.into();
            if index.contains_key(&label) {
                return Err(Error::DuplicateWord(label));
            }
            index.insert(label.clone(), words.len());
            words.push(label);
        }
        if words.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        Ok(Universe { words, index })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &str {
        &self.words[i]
    }

    pub fn lookup(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub(crate) fn require(&self, word: &str) -> Result<usize> {
        self.lookup(word).ok_or_else(|| Error::UnknownWord(word.to_owned()))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

impl Eq for Universe {}

impl std::hash::Hash for Universe {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.words.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_in_order() {
        let u = Universe::from_words(["Monday", "Tuesday", "Wednesday"]).unwrap();
        assert_eq!(u.len(), 3);
        assert_eq!(u.lookup("Tuesday"), Some(1));
        assert_eq!(u.word(2), "Wednesday");
        assert_eq!(u.lookup("Funday"), None);
        assert_eq!(Universe::from_words(["a"]).unwrap().len(), 1);
    }

    #[test]
    fn rejects_duplicates_and_empty() {
        match Universe::from_words(["a", "a"]) {
            Err(Error::DuplicateWord(w)) => assert_eq!(w, "a"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Universe::from_words(Vec::<String>::new()),
            Err(Error::EmptyUniverse)
        ));
    }
}
