//! Exact integer linear algebra: Smith normal form, sublattice operations and
//! the symplectic intersection pairing on `H₁(Σ_g)`.

mod lattice;
mod matrix;
mod snf;
mod symplectic;

use thiserror::Error;

pub use lattice::{
    contains, hermite_basis, is_sublattice, lattice_intersect, lattice_sum, left_kernel,
    quotient_invariants, rank, right_kernel, saturate, solve_left, QuotientInvariants,
};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithNormalForm};
pub use symplectic::{symplectic_pairing, SymplecticSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("column count mismatch: {left} vs {right}")]
    ColumnMismatch { left: usize, right: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}
