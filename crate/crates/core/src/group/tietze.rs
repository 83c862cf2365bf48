//! Bounded Tietze simplification.
//!
//! Moves are tried in a fixed order and each applied move costs one step:
//!
//! 1. eliminate a generator that occurs exactly once in some relator, using
//!    the shortest such relator (ties: lowest generator, then lowest relator);
//! 2. replace a relator by a strictly shorter product with a conjugate of
//!    another relator (or its inverse).
//!
//! Between moves the relators are put in canonical cyclic form, sorted and
//! deduplicated, so a presentation at a fixpoint is returned unchanged.

use super::presentation::{FreeWord, Letter, Presentation};
use crate::word::{cyclic_reduce, invert_letters};

/// Result of a bounded simplification run.
#[derive(Debug, Clone)]
pub struct Simplification {
    pub presentation: Presentation,
    pub steps: usize,
    pub reached_fixpoint: bool,
}

fn normalize(p: &Presentation) -> Presentation {
    let (_, rels) = p.canonical_key();
    Presentation::from_parts(p.names().to_vec(), rels)
}

fn occurrences(r: &[Letter], g: usize) -> usize {
    r.iter().filter(|l| l.generator == g).count()
}

fn measure(p: &Presentation) -> usize {
    p.generator_count() + p.total_length()
}

/// First elimination, in candidate order, that does not grow the presentation.
fn find_elimination(p: &Presentation) -> Option<Presentation> {
    let mut candidates = Vec::new();
    for (ri, r) in p.relators().iter().enumerate() {
        for g in 0..p.generator_count() {
            if occurrences(r, g) == 1 {
                candidates.push((r.len(), g, ri));
            }
        }
    }
    candidates.sort_unstable();
    let limit = measure(p);
    candidates
        .into_iter()
        .map(|(_, g, ri)| normalize(&eliminate(p, ri, g)))
        .find(|q| measure(q) <= limit)
}

fn eliminate(p: &Presentation, ri: usize, g: usize) -> Presentation {
    let r = &p.relators()[ri];
    let pos = r
        .iter()
        .position(|l| l.generator == g)
        .expect("generator occurs");
    // rotate to x^ε · w
    let rotated: FreeWord = r[pos..].iter().chain(&r[..pos]).copied().collect();
    let rest = &rotated[1..];
    let value: FreeWord = if rotated[0].inverse {
        rest.to_vec()
    } else {
        invert_letters(rest)
    };
    let value_inv = invert_letters(&value);

    let renumber = |l: Letter| Letter {
        generator: if l.generator > g {
            l.generator - 1
        } else {
            l.generator
        },
        ..l
    };
    let relators = p
        .relators()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ri)
        .map(|(_, s)| {
            let mut out = Vec::with_capacity(s.len());
            for &l in s {
                if l.generator == g {
                    out.extend(
                        if l.inverse { &value_inv } else { &value }
                            .iter()
                            .map(|&m| renumber(m)),
                    );
                } else {
                    out.push(renumber(l));
                }
            }
            cyclic_reduce(&out)
        })
        .collect();
    let mut names = p.names().to_vec();
    names.remove(g);
    Presentation::from_parts(names, relators)
}

fn find_shortening(p: &Presentation) -> Option<(usize, FreeWord)> {
    let rels = p.relators();
    for (i, r) in rels.iter().enumerate() {
        for (j, s) in rels.iter().enumerate() {
            if i == j || s.len() > 2 * r.len() {
                continue;
            }
            let inv = invert_letters(s);
            for w in [s, &inv] {
                for k in 0..w.len() {
                    let mut cand = r.clone();
                    cand.extend(w[k..].iter().chain(&w[..k]));
                    let cand = cyclic_reduce(&cand);
                    if cand.len() < r.len() {
                        return Some((i, cand));
                    }
                }
            }
        }
    }
    None
}

/// Simplifies with at most `budget` moves, reporting whether a fixpoint was reached.
pub fn simplify_with_report(p: &Presentation, budget: usize) -> Simplification {
    let mut cur = normalize(p);
    let mut steps = 0;
    loop {
        let next = if let Some(q) = find_elimination(&cur) {
            Some(q)
        } else {
            find_shortening(&cur).map(|(i, cand)| {
                let mut rels = cur.relators().to_vec();
                rels[i] = cand;
                Presentation::from_parts(cur.names().to_vec(), rels)
            })
        };
        match next {
            None => {
                return Simplification {
                    presentation: cur,
                    steps,
                    reached_fixpoint: true,
                }
            }
            Some(_) if steps >= budget => {
                return Simplification {
                    presentation: cur,
                    steps,
                    reached_fixpoint: false,
                };
            }
            Some(n) => {
                cur = normalize(&n);
                steps += 1;
            }
        }
    }
}

/// Presentation of an isomorphic group after at most `budget` Tietze moves.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    simplify_with_report(p, budget).presentation
}
