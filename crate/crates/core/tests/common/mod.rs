#![allow(dead_code)]

use rand::Rng;
use trisect_core::diagram::{cp2_sum_cp2bar, standard_diagram, Family, Move, StandardManifold};
use trisect_core::word::{GeneratorKind, GeneratorToken, Word};
use trisect_core::TrisectionDiagram;

pub fn library() -> Vec<(&'static str, TrisectionDiagram)> {
    let mut v: Vec<(&'static str, TrisectionDiagram)> = StandardManifold::ALL
        .iter()
        .map(|m| (m.name(), standard_diagram(*m)))
        .collect();
    v.push(("CP2#CP2BAR", cp2_sum_cp2bar()));
    v
}

pub fn random_word<R: Rng>(rng: &mut R, genus: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(
        (0..len)
            .map(|_| GeneratorToken {
                kind: if rng.gen_bool(0.5) {
                    GeneratorKind::A
                } else {
                    GeneratorKind::B
                },
                index: rng.gen_range(1..=genus as u32),
                inverted: rng.gen_bool(0.5),
            })
            .collect(),
    )
}

pub fn random_family<R: Rng>(rng: &mut R) -> Family {
    Family::ALL[rng.gen_range(0..3)]
}

/// A stabilization when the genus is below 2 (no slide possible), otherwise a
/// slide with probability 0.7.
pub fn random_move<R: Rng>(rng: &mut R, d: &TrisectionDiagram) -> Move {
    let g = d.genus();
    if g < 2 || rng.gen_bool(0.3) {
        return Move::Stabilize(random_family(rng));
    }
    let curve = rng.gen_range(0..g);
    let mut over = rng.gen_range(0..g - 1);
    if over >= curve {
        over += 1;
    }
    Move::Slide {
        family: random_family(rng),
        curve,
        over,
        conjugator: random_word(rng, g, 2),
        sign: if rng.gen_bool(0.5) { 1 } else { -1 },
    }
}
