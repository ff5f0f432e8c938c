use std::io::{BufRead, Write};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::relation::Universe;
use crate::scalar::Real;

/// One `dim`-dimensional vector per universe word.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding<T = f64> {
    universe: Arc<Universe>,
    dim: usize,
    vectors: Vec<Vec<T>>,
}

impl<T: Real> Embedding<T> {
    pub fn new(universe: &Arc<Universe>, vectors: Vec<Vec<T>>) -> Result<Self> {
        let dim = vectors.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if vectors.len() != universe.len() {
            return Err(Error::Spec(format!(
                "embedding has {} vectors for a universe of {} words",
                vectors.len(),
                universe.len()
            )));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::Spec(format!(
                    "vector for {:?} has dimension {}, expected {dim}",
                    universe.word(i),
                    v.len()
                )));
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::Spec(format!("non-finite coordinate for {:?}", universe.word(i))));
            }
        }
        Ok(Embedding { universe: Arc::clone(universe), dim, vectors })
    }

    /// Every word mapped to the same vector.
    pub fn constant(universe: &Arc<Universe>, v: Vec<T>) -> Result<Self> {
        Embedding::new(universe, vec![v; universe.len()])
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vector(&self, i: usize) -> &[T] {
        &self.vectors[i]
    }

    pub fn vector_of(&self, word: &str) -> Option<&[T]> {
        self.universe.lookup(word).map(|i| self.vector(i))
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    /// Adds `offset` to every word vector.
    pub fn translate(&self, offset: &[T]) -> Self {
        let vectors = self
            .vectors
            .iter()
            .map(|v| v.iter().zip(offset).map(|(&x, &o)| x + o).collect())
            .collect();
        Embedding { universe: Arc::clone(&self.universe), dim: self.dim, vectors }
    }

    /// Reorders (and subsets) the vectors to match `universe`. Words of the
    /// embedding that are not in `universe` are dropped.
    pub fn restrict_to(&self, universe: &Arc<Universe>) -> Result<Self> {
        let vectors = universe
            .words()
            .iter()
            .map(|w| {
                self.vector_of(w)
                    .map(<[T]>::to_vec)
                    .ok_or_else(|| Error::UnknownWord(w.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Embedding::new(universe, vectors)
    }

    /// Writes the text interchange format: a `N d` header, then one
    /// `word x_1 ... x_d` line per word. Coordinates use the shortest
    /// representation that parses back to the same value, in exponent form
    /// for very small or very large magnitudes.
    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.universe.len(), self.dim)?;
        for (word, v) in self.universe.words().iter().zip(&self.vectors) {
            write!(out, "{word}")?;
            for &x in v {
                let mag = x.abs();
                if mag != T::zero() && (mag < T::of(1e-4) || mag >= T::of(1e16)) {
                    write!(out, " {x:e}")?;
                } else {
                    write!(out, " {x}")?;
                }
            }
            writeln!(out)?;
        }
        Ok(())
    }

    /// Reads the text format written by [`Embedding::write_text`]; the
    /// universe is the file's word order.
    pub fn read_text<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines().enumerate();
        let header = loop {
            match lines.next() {
                Some((_, line)) if line.as_ref().is_ok_and(|l| l.trim().is_empty()) => continue,
                Some((i, line)) => break (i + 1, line?),
                None => return Err(Error::Format { line: 1, message: "missing header".into() }),
            }
        };
        let fields: Vec<&str> = header.1.split_whitespace().collect();
        let parse_count = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Format {
                line: header.0,
                message: format!("expected \"N d\" header, found {:?}", header.1),
            })
        };
        if fields.len() != 2 {
            return Err(Error::Format {
                line: header.0,
                message: format!("expected \"N d\" header, found {:?}", header.1),
            });
        }
        let (count, dim) = (parse_count(fields[0])?, parse_count(fields[1])?);

        let mut words = Vec::with_capacity(count);
        let mut vectors = Vec::with_capacity(count);
        for (i, line) in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let lineno = i + 1;
            let mut tokens = line.split_whitespace();
            let word = tokens.next().expect("nonblank line has a token");
            let v = tokens
                .map(|t| {
                    t.parse::<T>().map_err(|_| Error::Format {
                        line: lineno,
                        message: format!("bad coordinate {t:?}"),
                    })
                })
                .collect::<Result<Vec<T>>>()?;
            if v.len() != dim {
                return Err(Error::Format {
                    line: lineno,
                    message: format!("expected {dim} coordinates, found {}", v.len()),
                });
            }
            words.push(word.to_owned());
            vectors.push(v);
        }
        if words.len() != count {
            return Err(Error::Format {
                line: header.0,
                message: format!("header promises {count} words, found {}", words.len()),
            });
        }
        let universe = Arc::new(Universe::from_words(words)?);
        Embedding::new(&universe, vectors)
    }
}
