//! Words in the free group on the standard surface generators `a1..ag, b1..bg`.
//!
//! Curves on the central surface are recorded as words. A curve has no
//! basepoint, so the words attached to curves are kept cyclically reduced and
//! stand for free homotopy classes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("malformed token `{0}`")]
    BadToken(String),
    #[error("generator index {index} exceeds genus {genus}")]
    IndexOutOfRange { index: u32, genus: usize },
}

/// Anything with a formal inverse, so free and cyclic reduction can be shared
/// between surface words and abstract presentation words.
pub trait Invertible: Copy + Eq {
    fn inverse(self) -> Self;
}

/// Removes adjacent `x x⁻¹` pairs.
pub fn free_reduce<T: Invertible>(letters: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(letters.len());
    for &x in letters {
        match out.last() {
            Some(&y) if y == x.inverse() => {
                out.pop();
            }
            _ => out.push(x),
        }
    }
    out
}

/// Free reduction followed by stripping matching ends (`x w x⁻¹ -> w`).
pub fn cyclic_reduce<T: Invertible>(letters: &[T]) -> Vec<T> {
    let reduced = free_reduce(letters);
    let mut lo = 0;
    let mut hi = reduced.len();
    while hi - lo >= 2 && reduced[lo] == reduced[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    reduced[lo..hi].to_vec()
}

pub fn invert_letters<T: Invertible>(letters: &[T]) -> Vec<T> {
    letters.iter().rev().map(|x| x.inverse()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    A,
    B,
}

/// One of `a_i`, `b_i` or their inverses. Uppercase spells the inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorToken {
    pub kind: GeneratorKind,
    pub index: u32,
    pub inverted: bool,
}

impl GeneratorToken {
    pub fn a(index: u32) -> Self {
        GeneratorToken {
            kind: GeneratorKind::A,
            index,
            inverted: false,
        }
    }

    pub fn b(index: u32) -> Self {
        GeneratorToken {
            kind: GeneratorKind::B,
            index,
            inverted: false,
        }
    }

    /// Position in the `(a1..ag, b1..bg)` layout, zero-based.
    pub fn slot(self, genus: usize) -> usize {
        let i = self.index as usize - 1;
        match self.kind {
            GeneratorKind::A => i,
            GeneratorKind::B => genus + i,
        }
    }

    /// Same generator with its index moved up by `offset`.
    pub fn shifted(self, offset: u32) -> Self {
        GeneratorToken {
            index: self.index + offset,
            ..self
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }
}

impl Invertible for GeneratorToken {
    fn inverse(self) -> Self {
        GeneratorToken {
            inverted: !self.inverted,
            ..self
        }
    }
}

impl fmt::Display for GeneratorToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.kind, self.inverted) {
            (GeneratorKind::A, false) => 'a',
            (GeneratorKind::A, true) => 'A',
            (GeneratorKind::B, false) => 'b',
            (GeneratorKind::B, true) => 'B',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for GeneratorToken {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::BadToken(s.to_string());
        let mut chars = s.chars();
        let (kind, inverted) = match chars.next().ok_or_else(bad)? {
            'a' => (GeneratorKind::A, false),
            'A' => (GeneratorKind::A, true),
            'b' => (GeneratorKind::B, false),
            'B' => (GeneratorKind::B, true),
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty()
            || !digits.bytes().all(|c| c.is_ascii_digit())
            || digits.starts_with('0')
        {
            return Err(bad());
        }
        let index = digits.parse::<u32>().map_err(|_| bad())?;
        Ok(GeneratorToken {
            kind,
            index,
            inverted,
        })
    }
}

/// A finite sequence of surface generator tokens. Not reduced unless produced
/// by [`Word::canonicalize`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<GeneratorToken>);

impl Word {
    pub fn new(tokens: Vec<GeneratorToken>) -> Self {
        Word(tokens)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn tokens(&self) -> &[GeneratorToken] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Freely reduced form; with `cyclic` also cyclically reduced.
    pub fn canonicalize(&self, cyclic: bool) -> Word {
        if cyclic {
            Word(cyclic_reduce(&self.0))
        } else {
            Word(free_reduce(&self.0))
        }
    }

    pub fn invert(&self) -> Word {
        Word(invert_letters(&self.0))
    }

    /// Plain concatenation, no reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self^sign` for `sign = ±1`.
    pub fn signed(&self, sign: i8) -> Word {
        if sign < 0 {
            self.invert()
        } else {
            self.clone()
        }
    }

    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|t| t.index).max().unwrap_or(0)
    }

    pub fn check_genus(&self, genus: usize) -> Result<(), WordError> {
        match self.0.iter().find(|t| t.index as usize > genus) {
            Some(t) => Err(WordError::IndexOutOfRange {
                index: t.index,
                genus,
            }),
            None => Ok(()),
        }
    }

    pub fn shifted(&self, offset: u32) -> Word {
        Word(self.0.iter().map(|t| t.shifted(offset)).collect())
    }

    /// Signed exponent sums in the layout `(a1..ag, b1..bg)`.
    pub fn abelianize(&self, genus: usize) -> Result<Vec<BigInt>, WordError> {
        self.check_genus(genus)?;
        let mut sums = vec![0i64; 2 * genus];
        for t in &self.0 {
            sums[t.slot(genus)] += t.exponent();
        }
        Ok(sums.into_iter().map(BigInt::from).collect())
    }

    /// The surface relator `[a1,b1]···[ag,bg]`.
    pub fn surface_relator(genus: usize) -> Word {
        let mut v = Vec::with_capacity(4 * genus);
        for i in 1..=genus as u32 {
            let (a, b) = (GeneratorToken::a(i), GeneratorToken::b(i));
            v.extend([a, b, a.inverse(), b.inverse()]);
        }
        Word(v)
    }
}

impl From<Vec<GeneratorToken>> for Word {
    fn from(v: Vec<GeneratorToken>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Whitespace separated tokens; `e` alone is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts == ["e"] {
            return Ok(Word::empty());
        }
        parts
            .into_iter()
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}
