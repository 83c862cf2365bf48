use super::{CutSystem, DiagramError, Family, TrisectionDiagram};
use crate::word::{GeneratorToken, Word};

/// Slides curve `i` over curve `j` along a band described by `conjugator`:
/// `w_i ← w_i · c · w_j^sign · c⁻¹`. On homology this adds `sign · row_j` to `row_i`.
pub fn handle_slide(
    sys: &CutSystem,
    i: usize,
    j: usize,
    conjugator: &Word,
    sign: i8,
) -> Result<CutSystem, DiagramError> {
    let count = sys.curves.len();
    for idx in [i, j] {
        if idx >= count {
            return Err(DiagramError::CurveIndex { index: idx, count });
        }
    }
    if i == j {
        return Err(DiagramError::SelfSlide(i));
    }
    if sign != 1 && sign != -1 {
        return Err(DiagramError::BadSign(sign));
    }
    conjugator.check_genus(sys.genus)?;

    let band = conjugator
        .concat(&sys.curves[j].word.signed(sign))
        .concat(&conjugator.invert());
    let mut words = sys.words();
    words[i] = words[i].concat(&band);
    CutSystem::new(&words, sys.genus)
}

impl TrisectionDiagram {
    /// [`handle_slide`] applied to one family.
    pub fn slide(
        &self,
        family: Family,
        i: usize,
        j: usize,
        conjugator: &Word,
        sign: i8,
    ) -> Result<TrisectionDiagram, DiagramError> {
        let sys = handle_slide(self.family(family), i, j, conjugator, sign)?;
        self.with_family(family, sys)
    }
}

/// Adds a handle: `family` gains the meridian `b_{g+1}` and the other two
/// families gain the longitude `a_{g+1}`.
pub fn stabilize(d: &TrisectionDiagram, family: Family) -> TrisectionDiagram {
    let g = d.genus;
    let new_index = g as u32 + 1;
    let grow = |f: Family| {
        let mut words = d.family(f).words();
        words.push(Word::new(vec![if f == family {
            GeneratorToken::b(new_index)
        } else {
            GeneratorToken::a(new_index)
        }]));
        CutSystem::new(&words, g + 1).expect("stabilization preserves cut systems")
    };
    TrisectionDiagram::new(grow(Family::Alpha), grow(Family::Beta), grow(Family::Gamma))
        .expect("same genus")
}

/// Diagrammatic connected sum: `d2`'s handles are renumbered after `d1`'s.
pub fn connected_sum(d1: &TrisectionDiagram, d2: &TrisectionDiagram) -> TrisectionDiagram {
    let g = d1.genus + d2.genus;
    let join = |f: Family| {
        let mut words = d1.family(f).words();
        words.extend(
            d2.family(f)
                .words()
                .iter()
                .map(|w| w.shifted(d1.genus as u32)),
        );
        CutSystem::new(&words, g).expect("connected sum of cut systems is a cut system")
    };
    TrisectionDiagram::new(join(Family::Alpha), join(Family::Beta), join(Family::Gamma))
        .expect("same genus")
}

/// A single diagram move, for recording and replaying move sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Slide {
        family: Family,
        curve: usize,
        over: usize,
        conjugator: Word,
        sign: i8,
    },
    Stabilize(Family),
}

impl Move {
    pub fn apply(&self, d: &TrisectionDiagram) -> Result<TrisectionDiagram, DiagramError> {
        match self {
            Move::Slide {
                family,
                curve,
                over,
                conjugator,
                sign,
            } => d.slide(*family, *curve, *over, conjugator, *sign),
            Move::Stabilize(family) => Ok(stabilize(d, *family)),
        }
    }
}
