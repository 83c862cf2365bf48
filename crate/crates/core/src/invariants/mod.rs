//! Invariants of the 4-manifold encoded by a trisection diagram.
//!
//! Heegaard pairs are always taken in the order (α,β), (β,γ), (γ,α) and the
//! k-triple is reported in that order.

mod form;

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::{HeegaardDiagram, TrisectionDiagram};
use crate::group::{pi1_presentation, simplify_with_report};
use crate::linalg::{quotient_invariants, QuotientInvariants};

pub use form::{form_invariants, intersection_form, FormInvariants, Parity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("Heegaard pair is not homologically standard: torsion {divisors:?}")]
    NotHomologicallyStandard {
        pair: Option<usize>,
        divisors: Vec<BigInt>,
    },
    #[error("intersection form unsupported: H1 has torsion {0:?}")]
    Unsupported(Vec<BigInt>),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("inconsistent homology data: {0}")]
    Inconsistent(String),
}

/// `H₁` of the 3-manifold of a Heegaard pair must be `ℤ^k`; returns `k`.
pub fn pair_k(h: &HeegaardDiagram) -> Result<usize, InvariantError> {
    let q = quotient_invariants(2 * h.genus(), &h.stacked_matrix()).expect("stack has 2g columns");
    if q.torsion.is_empty() {
        Ok(q.free_rank)
    } else {
        Err(InvariantError::NotHomologicallyStandard {
            pair: None,
            divisors: q.torsion,
        })
    }
}

/// `(k_αβ, k_βγ, k_γα)`.
pub fn k_triple(d: &TrisectionDiagram) -> Result<[usize; 3], InvariantError> {
    let pairs = d.heegaard_pairs();
    let mut out = [0; 3];
    for (i, h) in pairs.iter().enumerate() {
        out[i] = pair_k(h).map_err(|e| match e {
            InvariantError::NotHomologicallyStandard { divisors, .. } => {
                InvariantError::NotHomologicallyStandard {
                    pair: Some(i),
                    divisors,
                }
            }
            other => other,
        })?;
    }
    Ok(out)
}

/// `χ = 2 + g − (k_αβ + k_βγ + k_γα)`.
pub fn euler_characteristic(d: &TrisectionDiagram) -> Result<i64, InvariantError> {
    let k = k_triple(d)?;
    Ok(2 + d.genus() as i64 - k.iter().map(|&x| x as i64).sum::<i64>())
}

/// `H₀ … H₄` of the encoded manifold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homology {
    pub groups: [QuotientInvariants; 5],
}

impl Homology {
    pub fn h(&self, i: usize) -> &QuotientInvariants {
        &self.groups[i]
    }

    pub fn betti(&self, i: usize) -> usize {
        self.groups[i].free_rank
    }

    /// `(ℤ, 0, 0, 0, ℤ)`.
    pub fn is_sphere_like(&self) -> bool {
        self.groups[0] == QuotientInvariants::free(1)
            && self.groups[4] == QuotientInvariants::free(1)
            && self.groups[1..4].iter().all(QuotientInvariants::is_trivial)
    }
}

/// `H₁ = ℤ^{2g} / (L_α + L_β + L_γ)`, `H₃ ≅ ℤ^{b₁}`, and `H₂` of free rank
/// `χ − 2 + 2b₁` with the torsion of `H₁`.
pub fn homology_of_x(d: &TrisectionDiagram) -> Result<Homology, InvariantError> {
    let chi = euler_characteristic(d)?;
    let h1 = quotient_invariants(2 * d.genus(), &d.stacked_matrix()).expect("stack has 2g columns");
    let b1 = h1.free_rank as i64;
    let b2 = chi - 2 + 2 * b1;
    let b2 = usize::try_from(b2)
        .map_err(|_| InvariantError::Inconsistent(format!("negative b2 = {b2}")))?;
    let h2 = QuotientInvariants {
        free_rank: b2,
        torsion: h1.torsion.clone(),
    };
    let h3 = QuotientInvariants::free(h1.free_rank);
    let z = QuotientInvariants::free(1);
    Ok(Homology {
        groups: [z.clone(), h1, h2, h3, z],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PoincareVerdict {
    NotHomotopySphere,
    HomologySphereUnresolved,
    TrivializedPi1,
}

impl std::fmt::Display for PoincareVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PoincareVerdict::NotHomotopySphere => "NotHomotopySphere",
            PoincareVerdict::HomologySphereUnresolved => "HomologySphereUnresolved",
            PoincareVerdict::TrivializedPi1 => "TrivializedPi1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareReport {
    pub homology_matches_s4: bool,
    pub pi1_trivialized: bool,
    pub tietze_steps: usize,
    pub verdict: PoincareVerdict,
}

pub const DEFAULT_POINCARE_BUDGET: usize = 10_000;

/// Screens a diagram as a homotopy 4-sphere candidate: homology must be that
/// of `S⁴`, then a bounded Tietze search tries to kill π₁.
pub fn poincare_candidate_check(d: &TrisectionDiagram, budget: usize) -> PoincareReport {
    let homology_matches_s4 = homology_of_x(d).is_ok_and(|h| h.is_sphere_like());
    let s = simplify_with_report(&pi1_presentation(d), budget);
    let pi1_trivialized = s.presentation.is_trivial();
    let verdict = match (homology_matches_s4, pi1_trivialized) {
        (false, _) => PoincareVerdict::NotHomotopySphere,
        (true, true) => PoincareVerdict::TrivializedPi1,
        (true, false) => PoincareVerdict::HomologySphereUnresolved,
    };
    PoincareReport {
        homology_matches_s4,
        pi1_trivialized,
        tietze_steps: s.steps,
        verdict,
    }
}
