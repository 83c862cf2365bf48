use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{k_triple, InvariantError};
use crate::diagram::TrisectionDiagram;
use crate::linalg::{
    lattice_intersect, lattice_sum, quotient_invariants, smith_normal_form, solve_left,
    symplectic_pairing, IntMatrix,
};

/// Gram matrix of the intersection form on a basis of
/// `H₂ = (L_β ∩ (L_α + L_γ)) / ((L_β ∩ L_α) + (L_β ∩ L_γ))`.
///
/// For classes `x, y` of the numerator, write `y = y_α + y_γ` with
/// `y_α ∈ L_α`, `y_γ ∈ L_γ`; then `Q(x, y) = ⟨x, y_α⟩`. The choice of
/// decomposition does not matter because the three lattices are Lagrangian.
pub fn intersection_form(d: &TrisectionDiagram) -> Result<IntMatrix, InvariantError> {
    k_triple(d)?;
    let g = d.genus();
    let h1 = quotient_invariants(2 * g, &d.stacked_matrix()).expect("2g columns");
    if !h1.torsion.is_empty() {
        return Err(InvariantError::Unsupported(h1.torsion));
    }
    let (la, lb, lc) = (d.alpha().matrix(), d.beta().matrix(), d.gamma().matrix());
    let numerator =
        lattice_intersect(lb, &lattice_sum(la, lc).expect("same width")).expect("same width");
    let denominator = lattice_sum(
        &lattice_intersect(lb, la).expect("same width"),
        &lattice_intersect(lb, lc).expect("same width"),
    )
    .expect("same width");

    // denominator in numerator coordinates
    let n = numerator.rows();
    let coords = (0..denominator.rows())
        .map(|i| {
            solve_left(&numerator, denominator.row(i))
                .expect("same width")
                .ok_or_else(|| {
                    InvariantError::Inconsistent("denominator not inside numerator".into())
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let coords = IntMatrix::from_rows(n, coords).expect("n coordinates");
    let snf = smith_normal_form(&coords);
    let divisors = snf.divisors();
    if let Some(d) = divisors.iter().find(|d| **d > BigInt::from(1)) {
        return Err(InvariantError::Unsupported(vec![d.clone()]));
    }
    // rows r.. of V⁻¹ complete the denominator to a basis of the numerator
    let r = divisors.len();
    let basis = snf
        .v_inv
        .select_rows(r..n)
        .checked_mul(&numerator)
        .expect("n columns");

    let stacked = la.vstack(lc).expect("same width");
    let alpha_parts = (0..basis.rows())
        .map(|j| {
            let s = solve_left(&stacked, basis.row(j))
                .expect("same width")
                .ok_or_else(|| {
                    InvariantError::Inconsistent("class not in L_alpha + L_gamma".into())
                })?;
            Ok(la.left_apply(&s[..g]).expect("g coefficients"))
        })
        .collect::<Result<Vec<_>, InvariantError>>()?;

    let b2 = basis.rows();
    let mut q = IntMatrix::zeros(b2, b2);
    for i in 0..b2 {
        for j in 0..b2 {
            q[(i, j)] = symplectic_pairing(basis.row(i), &alpha_parts[j], g).expect("length 2g");
        }
    }
    if !q.is_symmetric() {
        return Err(InvariantError::Inconsistent(format!(
            "form {q} is not symmetric"
        )));
    }
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormInvariants {
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
}

/// Rank, signature and parity of a symmetric integer form.
///
/// Signature comes from symmetric Gaussian elimination over ℚ. A zero pivot
/// with a nonzero off-diagonal entry `q_ij` is fixed by the congruence
/// `e_i ← e_i + e_j`, which puts `2 q_ij + q_jj` (or `q_ii + 2 q_ij`) on the diagonal.
/// Parity: `Q(x,x) ≡ Σ xᵢ² Q_ii (mod 2)`, so the form is even iff every diagonal entry is.
pub fn form_invariants(q: &IntMatrix) -> Result<FormInvariants, InvariantError> {
    if !q.is_symmetric() {
        return Err(InvariantError::NotSymmetric);
    }
    let parity = if (0..q.rows()).all(|i| q[(i, i)].is_even()) {
        Parity::Even
    } else {
        Parity::Odd
    };
    let (pos, neg) = inertia(q);
    Ok(FormInvariants {
        rank: pos + neg,
        signature: pos as i64 - neg as i64,
        parity,
    })
}

/// Number of positive and negative squares.
fn inertia(q: &IntMatrix) -> (usize, usize) {
    let mut a: Vec<Vec<BigRational>> = (0..q.rows())
        .map(|i| {
            q.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let (mut pos, mut neg) = (0, 0);
    while !a.is_empty() {
        let n = a.len();
        let pivot = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => Some(i),
            None => {
                let off = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                off.map(|(i, j)| {
                    // diagonal is zero here, so the new a[i][i] is 2 a[i][j]
                    let row_j = a[j].clone();
                    for (x, v) in a[i].iter_mut().zip(row_j) {
                        *x += v;
                    }
                    for row in a.iter_mut() {
                        let v = row[j].clone();
                        row[i] += v;
                    }
                    i
                })
            }
        };
        let Some(p) = pivot else { break };
        a.swap(0, p);
        for row in a.iter_mut() {
            row.swap(0, p);
        }
        let piv = a[0][0].clone();
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let first = a[0].clone();
        a = a
            .into_iter()
            .skip(1)
            .map(|row| {
                let f = &row[0] / &piv;
                row.iter()
                    .zip(&first)
                    .skip(1)
                    .map(|(x, y)| x - &f * y)
                    .collect()
            })
            .collect();
    }
    (pos, neg)
}
