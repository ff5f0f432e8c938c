use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Relation, Universe};
use crate::error::{Error, Result};

/// Named relations, iterated in name order.
pub type RelationSet = BTreeMap<String, Relation>;

#[derive(Serialize, Deserialize)]
struct RawSpec {
    universe: Vec<String>,
    relations: BTreeMap<String, Vec<[String; 2]>>,
}

/// A universe plus named relations over it, as stored in a relation spec file:
///
/// ```json
/// { "universe": ["a", "b"], "relations": { "r": [["a", "b"]] } }
/// ```
#[derive(Debug, Clone)]
pub struct RelationSpec {
    pub universe: Arc<Universe>,
    pub relations: RelationSet,
}

impl RelationSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(text)?;
        let universe = Arc::new(Universe::from_words(raw.universe)?);
        let mut relations = BTreeMap::new();
        for (name, pairs) in raw.relations {
            let pairs: Vec<(String, String)> =
                pairs.into_iter().map(|[a, b]| (a, b)).collect();
            let rel = Relation::from_pairs(&universe, &pairs).map_err(|e| match e {
                Error::UnknownWord(w) => Error::Spec(format!("relation {name:?}: unknown word {w:?}")),
                e => e,
            })?;
            relations.insert(name, rel);
        }
        Ok(RelationSpec { universe, relations })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        RelationSpec::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let raw = RawSpec {
            universe: self.universe.words().to_vec(),
            relations: self
                .relations
                .iter()
                .map(|(name, r)| {
                    (name.clone(), r.word_pairs().into_iter().map(|(a, b)| [a, b]).collect())
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("spec serializes")
    }

    pub fn get(&self, name: &str) -> Result<&Relation> {
        self.relations
            .get(name)
            .ok_or_else(|| Error::UnknownRelation(name.to_owned()))
    }
}
