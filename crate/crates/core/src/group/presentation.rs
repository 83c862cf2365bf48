use std::fmt;

use num_bigint::BigInt;

use super::GroupError;
use crate::diagram::{Family, TrisectionDiagram};
use crate::linalg::{quotient_invariants, IntMatrix, QuotientInvariants};
use crate::word::{cyclic_reduce, free_reduce, invert_letters, Invertible, Word};

/// A generator of a presentation or its inverse. Generators are numbered from 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: usize) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }
}

impl Invertible for Letter {
    fn inverse(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

/// Word in abstract generators.
pub type FreeWord = Vec<Letter>;

/// Converts a surface word to generator numbers in the `(a1..ag, b1..bg)` layout.
pub fn surface_word_to_letters(w: &Word, genus: usize) -> FreeWord {
    w.tokens()
        .iter()
        .map(|t| Letter {
            generator: t.slot(genus),
            inverse: t.inverted,
        })
        .collect()
}

/// Smallest rotation of the word or of its inverse; equal keys mean the
/// relators have the same normal closure trivially.
pub fn canonical_relator(r: &[Letter]) -> FreeWord {
    let r = cyclic_reduce(r);
    if r.is_empty() {
        return r;
    }
    let inv = invert_letters(&r);
    let mut best: Option<FreeWord> = None;
    for w in [&r, &inv] {
        for k in 0..w.len() {
            let rot: FreeWord = w[k..].iter().chain(&w[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Exponent-sum vector of a word over `n` generators.
pub fn exponent_vector(w: &[Letter], n: usize) -> Vec<BigInt> {
    let mut v = vec![0i64; n];
    for l in w {
        v[l.generator] += if l.inverse { -1 } else { 1 };
    }
    v.into_iter().map(BigInt::from).collect()
}

/// A finite presentation `⟨x₀..x_{n-1} | r₁..r_m⟩` with freely reduced,
/// nonempty relators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    /// Generators named `x1..xn`.
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Result<Self, GroupError> {
        let names = (1..=generators).map(|i| format!("x{i}")).collect();
        Self::with_names(names, relators)
    }

    pub fn with_names(names: Vec<String>, relators: Vec<FreeWord>) -> Result<Self, GroupError> {
        let n = names.len();
        if let Some(l) = relators.iter().flatten().find(|l| l.generator >= n) {
            return Err(GroupError::GeneratorOutOfRange {
                generator: l.generator,
                count: n,
            });
        }
        let relators = relators
            .iter()
            .map(|r| free_reduce(r))
            .filter(|r| !r.is_empty())
            .collect();
        Ok(Presentation { names, relators })
    }

    pub fn trivial() -> Self {
        Presentation {
            names: Vec::new(),
            relators: Vec::new(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.names.is_empty() && self.relators.is_empty()
    }

    /// Relator exponent sums as an `m × n` matrix.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let n = self.generator_count();
        IntMatrix::from_rows(
            n,
            self.relators
                .iter()
                .map(|r| exponent_vector(r, n))
                .collect(),
        )
        .expect("exponent vectors have length n")
    }

    /// Generator count plus relators in canonical cyclic form, sorted and
    /// deduplicated. Names are ignored.
    pub fn canonical_key(&self) -> (usize, Vec<FreeWord>) {
        let mut rels: Vec<FreeWord> = self
            .relators
            .iter()
            .map(|r| canonical_relator(r))
            .filter(|r| !r.is_empty())
            .collect();
        rels.sort();
        rels.dedup();
        (self.generator_count(), rels)
    }

    pub(crate) fn from_parts(names: Vec<String>, relators: Vec<FreeWord>) -> Self {
        Presentation { names, relators }
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "e".into();
        }
        w.iter()
            .map(|l| {
                if l.inverse {
                    format!("{}^-1", self.names[l.generator])
                } else {
                    self.names[l.generator].clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        let pad = |s: String| if s.is_empty() { s } else { format!("{s} ") };
        write!(
            f,
            "< {}| {}>",
            pad(self.names.join(", ")),
            pad(rels.join(", "))
        )
    }
}

/// Names `a1..ag, b1..bg` in slot order.
pub fn surface_generator_names(genus: usize) -> Vec<String> {
    (1..=genus)
        .map(|i| format!("a{i}"))
        .chain((1..=genus).map(|i| format!("b{i}")))
        .collect()
}

/// π₁(Σ) with the curve words of the given families adjoined as relators.
pub fn surface_quotient(d: &TrisectionDiagram, families: &[Family]) -> Presentation {
    let g = d.genus();
    let mut relators = Vec::new();
    if g > 0 {
        relators.push(surface_word_to_letters(&Word::surface_relator(g), g));
    }
    for &f in families {
        relators.extend(
            d.family(f)
                .curves()
                .iter()
                .map(|c| surface_word_to_letters(c.word(), g)),
        );
    }
    Presentation::with_names(surface_generator_names(g), relators)
        .expect("indices checked by the cut systems")
}

/// `π₁(X) = ⟨a, b | ∏[aᵢ,bᵢ], α-, β-, γ-curves⟩`.
pub fn pi1_presentation(d: &TrisectionDiagram) -> Presentation {
    surface_quotient(d, &Family::ALL)
}

/// Smith invariants of the relator exponent matrix.
pub fn abelianize_presentation(p: &Presentation) -> QuotientInvariants {
    quotient_invariants(p.generator_count(), &p.exponent_matrix()).expect("matrix has n columns")
}
