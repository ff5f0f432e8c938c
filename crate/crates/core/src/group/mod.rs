//! Closures of relations under composition, element orders, group and
//! cyclic-group certification, and homomorphism checks.

mod closure;
mod homomorphism;
mod order;
mod structure;

pub use closure::{generate_closure, generate_closure_with_cap, MonoidClosure, DEFAULT_CLOSURE_CAP};
pub use homomorphism::{
    check_order_divides, target_order, verify_homomorphism, Additive, HomomorphismCheck,
    HomomorphismMap, Residue, Target,
};
pub use order::{order, OrderResult};
pub use structure::{is_abelian, is_group, iso_to_cyclic, AbelianVerdict, CyclicIso, GroupVerdict};
