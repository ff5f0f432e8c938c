//! Relation-as-vector representations: word embeddings in which every pair of
//! a relation differs by the same vector.

mod certificate;
mod embedding;
mod fit;
mod report;

pub use certificate::{theorem1_certificate, Certificate, CertificateVerdict};
pub use embedding::Embedding;
pub use fit::{fit_embedding, residual, FitResult};
pub use report::{
    check_homomorphism_additive, directions_equivalent, relation_vector, well_represented,
    well_represented_with, Comparison, PairDistance, RelationVectorReport, WellRepresented,
};
