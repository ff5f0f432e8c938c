//! Algebra of finite binary relations over word universes.
//!
//! Relations are composed as boolean matrices, closed under composition into
//! monoids, and analysed for group structure and element orders. On the
//! numeric side, word embeddings are checked (and fitted) as relation-as-vector
//! representations, finite-order relations are certified as unrepresentable by
//! vector differences, and the multiplicative alternatives (roots of unity and
//! Cayley permutation matrices) are constructed and verified.
//!
//! Numeric code is generic over a [`Real`] scalar (`f32` or `f64`); the type
//! aliases at the crate root fix it to `f64`. Fitting solves its null space in
//! exact rational arithmetic before converting to the requested scalar.

pub mod alt_repr;
pub mod cond_dist;
pub mod error;
pub mod expr;
pub mod group;
pub mod linalg;
pub mod relation;
pub mod scalar;
pub mod vector_repr;

pub use error::{Error, Result};
pub use expr::RelationExpr;
pub use group::{
    check_order_divides, generate_closure, generate_closure_with_cap, is_abelian, is_group,
    iso_to_cyclic, order, verify_homomorphism, CyclicIso, GroupVerdict, HomomorphismCheck,
    HomomorphismMap, MonoidClosure, OrderResult, Residue, Target, DEFAULT_CLOSURE_CAP,
};
pub use relation::{Relation, RelationSet, RelationSpec, Universe};
pub use scalar::Real;

/// Embedding with `f64` coordinates.
pub type Embedding = vector_repr::Embedding<f64>;
/// Embedding with `f32` coordinates.
pub type Embedding32 = vector_repr::Embedding<f32>;
pub type RelationVectorReport = vector_repr::RelationVectorReport<f64>;
pub type FitResult = vector_repr::FitResult<f64>;
pub type ConditionalModel = cond_dist::ConditionalModel<f64>;
pub type ScalarRepresentation = alt_repr::ScalarRepresentation<f64>;
pub use alt_repr::MatrixRepresentation;

/// Bundled relation spec files and count tables.
pub mod bundled {
    pub const WEEKDAYS: &str = include_str!("../data/weekdays.json");
    pub const MONTHS: &str = include_str!("../data/months.json");
    pub const HOURS: &str = include_str!("../data/hours.json");
    pub const ANTONYMS: &str = include_str!("../data/antonyms.json");
    /// Seven words linked by a successor that does not wrap around.
    pub const CHAIN7: &str = include_str!("../data/chain7.json");

    pub const TOY_COUNTS: &str = include_str!("../data/toy_counts.tsv");
    pub const DOUBLING_CHAIN_COUNTS: &str = include_str!("../data/doubling_chain.tsv");
    pub const WEEKDAYS_UNIFORM_COUNTS: &str = include_str!("../data/weekdays_uniform.tsv");
}
