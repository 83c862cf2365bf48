//! Counting homomorphisms from a finitely presented group to `S_n`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::presentation::{Letter, Presentation};
use super::GroupError;

/// Default bound on the number of assignments enumerated.
pub const DEFAULT_HOM_CAP: u64 = 200_000_000;

/// `S_n` for `1 ≤ n ≤ 5`, with elements indexed so that 0 is the identity.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    degree: usize,
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u8);
            out.push(q);
        }
    }
    out.sort();
    out
}

impl SymmetricGroup {
    pub fn new(degree: usize) -> Result<Self, GroupError> {
        if !(1..=5).contains(&degree) {
            return Err(GroupError::UnsupportedTarget(degree));
        }
        let elems = permutations(degree);
        let order = elems.len();
        let index = |p: &[u8]| {
            elems
                .binary_search_by(|q| q.as_slice().cmp(p))
                .expect("permutation") as u16
        };
        let mut mul = vec![0u16; order * order];
        let mut inv = vec![0u16; order];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                // p first, then q
                let r: Vec<u8> = (0..degree).map(|k| q[p[k] as usize]).collect();
                mul[i * order + j] = index(&r);
            }
            let mut pi = vec![0u8; degree];
            for (k, &v) in p.iter().enumerate() {
                pi[v as usize] = k as u8;
            }
            inv[i] = index(&pi);
        }
        Ok(SymmetricGroup {
            degree,
            order,
            mul,
            inv,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn eval(&self, relator: &[Letter], images: &[u16]) -> u16 {
        relator.iter().fold(0u16, |acc, l| {
            let x = images[l.generator];
            let x = if l.inverse { self.inv[x as usize] } else { x };
            self.mul[acc as usize * self.order + x as usize]
        })
    }
}

struct Plan<'a> {
    target: &'a SymmetricGroup,
    order: Vec<usize>,
    /// relators fully assigned once depth `d` has been filled
    checks: Vec<Vec<&'a [Letter]>>,
}

impl Plan<'_> {
    fn count(&self, depth: usize, images: &mut [u16]) -> u64 {
        if depth == self.order.len() {
            return 1;
        }
        let g = self.order[depth];
        let mut total = 0;
        for x in 0..self.target.order as u16 {
            images[g] = x;
            if self.checks[depth]
                .iter()
                .all(|r| self.target.eval(r, images) == 0)
            {
                total += self.count(depth + 1, images);
            }
        }
        total
    }
}

/// Number of assignments in the enumeration for `p`, before pruning.
pub fn hom_cost_estimate(p: &Presentation, target: &SymmetricGroup) -> BigUint {
    BigUint::from(target.order).pow(active_generators(p).len() as u32)
}

fn active_generators(p: &Presentation) -> Vec<usize> {
    let mut seen = vec![false; p.generator_count()];
    for l in p.relators().iter().flatten() {
        seen[l.generator] = true;
    }
    (0..seen.len()).filter(|&g| seen[g]).collect()
}

/// Exact number of homomorphisms `p → target`. Generators absent from every
/// relator contribute a factor `|target|` each and are not enumerated; the
/// rest are refused when the enumeration would exceed `cap` assignments.
pub fn count_homs(
    p: &Presentation,
    target: &SymmetricGroup,
    cap: u64,
) -> Result<BigUint, GroupError> {
    let active = active_generators(p);
    let estimate = hom_cost_estimate(p, target);
    if estimate > BigUint::from(cap) {
        return Err(GroupError::Refused { estimate, cap });
    }
    let free = p.generator_count() - active.len();

    // Greedy order: next generator is the one completing the most relators.
    let mut order: Vec<usize> = Vec::with_capacity(active.len());
    let mut placed = vec![false; p.generator_count()];
    let mut pending: Vec<&[Letter]> = p.relators().iter().map(Vec::as_slice).collect();
    let mut checks: Vec<Vec<&[Letter]>> = Vec::new();
    while order.len() < active.len() {
        let score = |g: usize| {
            pending
                .iter()
                .filter(|r| r.iter().all(|l| placed[l.generator] || l.generator == g))
                .count()
        };
        let &g = active
            .iter()
            .filter(|&&g| !placed[g])
            .max_by(|&&a, &&b| score(a).cmp(&score(b)).then(b.cmp(&a)))
            .expect("unplaced generator");
        placed[g] = true;
        order.push(g);
        let (done, rest): (Vec<_>, Vec<_>) = pending
            .into_iter()
            .partition(|r| r.iter().all(|l| placed[l.generator]));
        pending = rest;
        checks.push(done);
    }

    let plan = Plan {
        target,
        order,
        checks,
    };
    let n = p.generator_count();
    let enumerated: u64 = if plan.order.is_empty() {
        1
    } else {
        let first = plan.order[0];
        (0..target.order as u16)
            .into_par_iter()
            .map(|x| {
                let mut images = vec![0u16; n];
                images[first] = x;
                if plan.checks[0].iter().all(|r| target.eval(r, &images) == 0) {
                    plan.count(1, &mut images)
                } else {
                    0
                }
            })
            .sum()
    };
    let mut total = BigUint::from(enumerated);
    if !total.is_zero() {
        total *= BigUint::from(target.order).pow(free as u32);
    }
    Ok(total)
}

/// Sequential reference count by full enumeration; used to cross-check the
/// pruned parallel search.
pub fn count_homs_naive(p: &Presentation, target: &SymmetricGroup) -> BigUint {
    let n = p.generator_count();
    let mut images = vec![0u16; n];
    let mut total = BigUint::zero();
    loop {
        if p.relators().iter().all(|r| target.eval(r, &images) == 0) {
            total += BigUint::one();
        }
        let mut i = 0;
        while i < n && images[i] as usize == target.order - 1 {
            images[i] = 0;
            i += 1;
        }
        if i == n {
            return total;
        }
        images[i] += 1;
    }
}
