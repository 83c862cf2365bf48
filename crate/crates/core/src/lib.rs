//! Trisection diagrams of closed oriented 4-manifolds.
//!
//! Diagrams are handled algebraically: each curve is a word in the surface
//! generators plus its homology class. From a diagram the crate computes the
//! Heegaard pair parameters, Euler characteristic, integral homology,
//! intersection form, a presentation of π₁ and the cube of groups of the
//! trisection. Handle slides, stabilizations and connected sums act on
//! diagrams and leave all of these invariant.

pub mod diagram;
pub mod group;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod word;

pub use diagram::{Family, HeegaardDiagram, StandardManifold, TrisectionDiagram};
pub use linalg::IntMatrix;
pub use word::Word;
