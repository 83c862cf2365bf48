//! Algebraic trisection and Heegaard diagrams.
//!
//! A curve is kept as a cyclically reduced word together with its homology
//! class. A cut system of genus `g` is `g` curves whose homology rows span a
//! primitive Lagrangian sublattice of `H₁(Σ_g)`. Simplicity and disjointness of
//! the curves on the surface are not checked; everything computed downstream
//! depends only on the words and their classes.

mod library;
mod moves;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{quotient_invariants, symplectic_pairing, IntMatrix};
use crate::word::{Word, WordError};

pub use library::{cp2_sum_cp2bar, standard_diagram, StandardManifold};
pub use moves::{connected_sum, handle_slide, stabilize, Move};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("expected {expected} curves, found {found}")]
    WrongCurveCount { expected: usize, found: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("curves {} and {} have algebraic intersection {pairing}, expected 0", .first + 1, .second + 1)]
    NotLagrangian {
        first: usize,
        second: usize,
        pairing: BigInt,
    },
    #[error("curve classes are not primitive of rank {genus}: quotient has free rank {free_rank}, divisors {divisors:?}")]
    Imprimitive {
        genus: usize,
        free_rank: usize,
        divisors: Vec<BigInt>,
    },
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("curve index {index} out of range for {count} curves")]
    CurveIndex { index: usize, count: usize },
    #[error("cannot slide curve {0} over itself")]
    SelfSlide(usize),
    #[error("slide sign must be +1 or -1, got {0}")]
    BadSign(i8),
    #[error("unknown standard diagram `{0}`")]
    UnknownStandard(String),
}

/// The three curve colours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Alpha,
    Beta,
    Gamma,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Alpha, Family::Beta, Family::Gamma];

    pub fn name(self) -> &'static str {
        match self {
            Family::Alpha => "alpha",
            Family::Beta => "beta",
            Family::Gamma => "gamma",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alpha" => Ok(Family::Alpha),
            "beta" => Ok(Family::Beta),
            "gamma" => Ok(Family::Gamma),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Curve {
    word: Word,
    homology: Vec<BigInt>,
}

impl Curve {
    /// Cyclically reduces `word` and records its class in `H₁(Σ_genus)`.
    pub fn new(word: &Word, genus: usize) -> Result<Self, WordError> {
        let word = word.canonicalize(true);
        let homology = word.abelianize(genus)?;
        Ok(Curve { word, homology })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn homology(&self) -> &[BigInt] {
        &self.homology
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutSystem {
    genus: usize,
    curves: Vec<Curve>,
    matrix: IntMatrix,
}

impl CutSystem {
    /// Checks the count, the Lagrangian condition and primitivity.
    pub fn new(words: &[Word], genus: usize) -> Result<Self, DiagramError> {
        if words.len() != genus {
            return Err(DiagramError::WrongCurveCount {
                expected: genus,
                found: words.len(),
            });
        }
        let curves = words
            .iter()
            .map(|w| Curve::new(w, genus))
            .collect::<Result<Vec<_>, _>>()?;
        let rows = curves.iter().map(|c| c.homology.clone()).collect();
        let matrix = IntMatrix::from_rows(2 * genus, rows).expect("homology rows have length 2g");

        for i in 0..genus {
            for j in i + 1..genus {
                let p =
                    symplectic_pairing(matrix.row(i), matrix.row(j), genus).expect("row length 2g");
                if !p.is_zero() {
                    return Err(DiagramError::NotLagrangian {
                        first: i,
                        second: j,
                        pairing: p,
                    });
                }
            }
        }
        let q = quotient_invariants(2 * genus, &matrix).expect("ambient rank matches");
        if q.free_rank != genus || !q.torsion.is_empty() {
            return Err(DiagramError::Imprimitive {
                genus,
                free_rank: q.free_rank,
                divisors: q.torsion,
            });
        }
        Ok(CutSystem {
            genus,
            curves,
            matrix,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn words(&self) -> Vec<Word> {
        self.curves.iter().map(|c| c.word.clone()).collect()
    }

    /// The `g × 2g` matrix of homology rows.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }
}

/// Validates a list of curve words as a cut system on the genus-`genus` surface.
pub fn validate_cut_system(words: &[Word], genus: usize) -> Result<CutSystem, DiagramError> {
    CutSystem::new(words, genus)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeegaardDiagram {
    genus: usize,
    first: CutSystem,
    second: CutSystem,
}

impl HeegaardDiagram {
    pub fn new(first: CutSystem, second: CutSystem) -> Result<Self, DiagramError> {
        if first.genus != second.genus {
            return Err(DiagramError::GenusMismatch(first.genus, second.genus));
        }
        Ok(HeegaardDiagram {
            genus: first.genus,
            first,
            second,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn first(&self) -> &CutSystem {
        &self.first
    }

    pub fn second(&self) -> &CutSystem {
        &self.second
    }

    /// The `2g × 2g` matrix with the first system's rows above the second's.
    pub fn stacked_matrix(&self) -> IntMatrix {
        self.first
            .matrix
            .vstack(&self.second.matrix)
            .expect("same genus")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrisectionDiagram {
    genus: usize,
    alpha: CutSystem,
    beta: CutSystem,
    gamma: CutSystem,
}

impl TrisectionDiagram {
    pub fn new(alpha: CutSystem, beta: CutSystem, gamma: CutSystem) -> Result<Self, DiagramError> {
        let g = alpha.genus;
        for other in [&beta, &gamma] {
            if other.genus != g {
                return Err(DiagramError::GenusMismatch(g, other.genus));
            }
        }
        Ok(TrisectionDiagram {
            genus: g,
            alpha,
            beta,
            gamma,
        })
    }

    /// Validates three lists of words on the same surface.
    pub fn from_words(
        genus: usize,
        alpha: &[Word],
        beta: &[Word],
        gamma: &[Word],
    ) -> Result<Self, DiagramError> {
        Self::new(
            CutSystem::new(alpha, genus)?,
            CutSystem::new(beta, genus)?,
            CutSystem::new(gamma, genus)?,
        )
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn family(&self, f: Family) -> &CutSystem {
        match f {
            Family::Alpha => &self.alpha,
            Family::Beta => &self.beta,
            Family::Gamma => &self.gamma,
        }
    }

    pub fn alpha(&self) -> &CutSystem {
        &self.alpha
    }

    pub fn beta(&self) -> &CutSystem {
        &self.beta
    }

    pub fn gamma(&self) -> &CutSystem {
        &self.gamma
    }

    /// Returns a copy with one family replaced.
    pub fn with_family(&self, f: Family, sys: CutSystem) -> Result<Self, DiagramError> {
        let mut parts = [self.alpha.clone(), self.beta.clone(), self.gamma.clone()];
        parts[f as usize] = sys;
        let [a, b, c] = parts;
        Self::new(a, b, c)
    }

    /// The three two-colour diagrams in the fixed order (α,β), (β,γ), (γ,α).
    pub fn heegaard_pairs(&self) -> [HeegaardDiagram; 3] {
        let pair = |x: &CutSystem, y: &CutSystem| {
            HeegaardDiagram::new(x.clone(), y.clone()).expect("same genus")
        };
        [
            pair(&self.alpha, &self.beta),
            pair(&self.beta, &self.gamma),
            pair(&self.gamma, &self.alpha),
        ]
    }

    /// Rows of all three families, `3g × 2g`.
    pub fn stacked_matrix(&self) -> IntMatrix {
        self.alpha
            .matrix
            .vstack(&self.beta.matrix)
            .and_then(|m| m.vstack(&self.gamma.matrix))
            .expect("same genus")
    }
}

/// Free-function form of [`TrisectionDiagram::heegaard_pairs`].
pub fn heegaard_pairs(d: &TrisectionDiagram) -> [HeegaardDiagram; 3] {
    d.heegaard_pairs()
}
