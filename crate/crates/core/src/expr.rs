//! A small expression language over named relations:
//!
//! ```text
//! expr := term { ("o" | "∘") term }*
//! term := atom [ "^" integer ]
//! atom := name | "e" | "(" expr ")"
//! ```
//!
//! Composition is left-associative and `e` is the identity relation.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::relation::{Relation, RelationSet, Universe};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationExpr {
    Name(String),
    Identity,
    Compose(Box<RelationExpr>, Box<RelationExpr>),
    Power(Box<RelationExpr>, u64),
}

impl RelationExpr {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { text, pos: 0 };
        let expr = p.expr()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.error("unexpected input"));
        }
        Ok(expr)
    }

    pub fn eval(&self, universe: &Arc<Universe>, relations: &RelationSet) -> Result<Relation> {
        match self {
            RelationExpr::Name(name) => {
                let r = relations.get(name).ok_or_else(|| Error::UnknownRelation(name.clone()))?;
                if r.universe() != universe {
                    return Err(Error::UniverseMismatch);
                }
                Ok(r.clone())
            }
            RelationExpr::Identity => Ok(Relation::identity(universe)),
            RelationExpr::Compose(a, b) => a.eval(universe, relations)?.compose(&b.eval(universe, relations)?),
            RelationExpr::Power(base, k) => Ok(base.eval(universe, relations)?.power(*k)),
        }
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '\'' | '.' | '-')
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: message.to_owned() }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn peek_name(&mut self) -> Option<&str> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest.find(|c: char| !is_name_char(c)).unwrap_or(rest.len());
        (end > 0).then(|| &rest[..end])
    }

    fn compose_op(&mut self) -> bool {
        if self.peek() == Some('∘') {
            self.pos += '∘'.len_utf8();
            return true;
        }
        if self.peek_name() == Some("o") {
            self.pos += 1;
            return true;
        }
        false
    }

    fn expr(&mut self) -> Result<RelationExpr> {
        let mut lhs = self.term()?;
        while self.compose_op() {
            let rhs = self.term()?;
            lhs = RelationExpr::Compose(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<RelationExpr> {
        let atom = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.pos += 1;
        self.skip_ws();
        let digits = self.rest().len() - self.rest().trim_start_matches(|c: char| c.is_ascii_digit()).len();
        if digits == 0 {
            return Err(self.error("expected integer exponent"));
        }
        let k = self.rest()[..digits].parse::<u64>().map_err(|_| self.error("malformed integer"))?;
        self.pos += digits;
        Ok(RelationExpr::Power(Box::new(atom), k))
    }

    fn atom(&mut self) -> Result<RelationExpr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            None => Err(self.error("unexpected end of input")),
            Some(_) => match self.peek_name() {
                Some("o") | None => Err(self.error("expected relation name, 'e' or '('")),
                Some(name) => {
                    let name = name.to_owned();
                    self.pos += name.len();
                    Ok(if name == "e" { RelationExpr::Identity } else { RelationExpr::Name(name) })
                }
            },
        }
    }
}

impl fmt::Display for RelationExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationExpr::Name(name) => f.write_str(name),
            RelationExpr::Identity => f.write_str("e"),
            RelationExpr::Compose(a, b) => match **b {
                RelationExpr::Compose(..) => write!(f, "{a} o ({b})"),
                _ => write!(f, "{a} o {b}"),
            },
            RelationExpr::Power(base, k) => match **base {
                RelationExpr::Name(_) | RelationExpr::Identity => write!(f, "{base}^{k}"),
                _ => write!(f, "({base})^{k}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::bundled;
    use crate::relation::RelationSpec;

    fn name(s: &str) -> Box<RelationExpr> {
        Box::new(RelationExpr::Name(s.into()))
    }

    #[test]
    fn parses_composition() {
        assert_eq!(
            RelationExpr::parse("s o s").unwrap(),
            RelationExpr::Compose(name("s"), name("s"))
        );
        assert_eq!(
            RelationExpr::parse("a o b ∘ c").unwrap(),
            RelationExpr::Compose(Box::new(RelationExpr::Compose(name("a"), name("b"))), name("c"))
        );
        assert_eq!(
            RelationExpr::parse(" ( s2 )^10 o e").unwrap(),
            RelationExpr::Compose(Box::new(RelationExpr::Power(name("s2"), 10)), Box::new(RelationExpr::Identity))
        );
        // "so" is a name, not "s" followed by the operator
        assert_eq!(RelationExpr::parse("so").unwrap(), RelationExpr::Name("so".into()));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let cases = [
            ("s ^", 3),
            ("s ^ x", 4),
            ("(s o t", 6),
            ("s)", 1),
            ("", 0),
            ("s o", 3),
            ("o", 0),
            ("s^99999999999999999999999", 2),
        ];
        for (text, offset) in cases {
            match RelationExpr::parse(text) {
                Err(Error::Parse { offset: got, .. }) => assert_eq!(got, offset, "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn evaluates_on_weekdays() {
        let spec = RelationSpec::from_json(bundled::WEEKDAYS).unwrap();
        let eval = |t: &str| RelationExpr::parse(t).unwrap().eval(&spec.universe, &spec.relations);
        let s = spec.get("s").unwrap();
        assert_eq!(&eval("s^3 o s^5").unwrap(), s);
        assert_eq!(eval("s o s").unwrap(), s.power(2));
        assert!(eval("s^7").unwrap().is_identity());
        assert!(eval("e").unwrap().is_identity());
        assert!(matches!(eval("t"), Err(Error::UnknownRelation(n)) if n == "t"));
    }

    fn arb_expr() -> impl Strategy<Value = RelationExpr> {
        let leaf = prop_oneof![
            "[a-df-np-z][a-z0-9_]{0,3}".prop_map(RelationExpr::Name),
            Just(RelationExpr::Identity),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| RelationExpr::Compose(Box::new(a), Box::new(b))),
                (inner, 0u64..50).prop_map(|(a, k)| RelationExpr::Power(Box::new(a), k)),
            ]
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(expr in arb_expr()) {
            let printed = expr.to_string();
            prop_assert_eq!(RelationExpr::parse(&printed).unwrap(), expr);
        }
    }
}
