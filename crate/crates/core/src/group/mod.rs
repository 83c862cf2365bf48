//! Finitely presented groups attached to a trisection: π₁ of the 4-manifold,
//! bounded Tietze simplification, homomorphism counts into small symmetric
//! groups, and the cube of groups with its verification.

mod cube;
mod homcount;
mod presentation;
mod tietze;

use num_bigint::BigUint;
use thiserror::Error;

use crate::invariants::InvariantError;

pub use cube::{
    build_cube, faces, verify_cube, vertex_name, CheckStatus, CubeMap, CubeReport, FaceCheck,
    GroupTrisectionCube, MapCheck, EDGE_COUNT, VERTEX_COUNT,
};
pub use homcount::{
    count_homs, count_homs_naive, hom_cost_estimate, SymmetricGroup, DEFAULT_HOM_CAP,
};
pub use presentation::{
    abelianize_presentation, canonical_relator, exponent_vector, pi1_presentation,
    surface_generator_names, surface_quotient, surface_word_to_letters, FreeWord, Letter,
    Presentation,
};
pub use tietze::{simplify_with_report, tietze_simplify, Simplification};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator {generator} out of range for {count} generators")]
    GeneratorOutOfRange { generator: usize, count: usize },
    #[error("unsupported target S_{0}; degree must be between 1 and 5")]
    UnsupportedTarget(usize),
    #[error("refused: enumeration of {estimate} assignments exceeds cap {cap}")]
    Refused { estimate: BigUint, cap: u64 },
    #[error("malformed cube: {0}")]
    MalformedCube(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
