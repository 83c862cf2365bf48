//! Sublattices of `ℤⁿ` given as row spans of integer matrices.
//!
//! Every routine accepts an arbitrary spanning set and returns a basis in
//! Hermite normal form, so two lattices are equal iff their returned bases are.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{smith_normal_form, IntMatrix, LinalgError};

/// `ℤⁿ / L ≅ ℤ^free_rank ⊕ ⊕ ℤ/dᵢ` with every `dᵢ > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl QuotientInvariants {
    pub fn trivial() -> Self {
        QuotientInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        QuotientInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl std::fmt::Display for QuotientInvariants {
    /// `0`, `Z`, `Z^3`, `Z + Z/2 + Z/6`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Row-style Hermite normal form of the row span, zero rows dropped.
pub fn hermite_basis(a: &IntMatrix) -> IntMatrix {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by(|&i, &j| m[(i, c)].abs().cmp(&m[(j, c)].abs()).then(i.cmp(&j)));
            let Some(p) = pivot else { break };
            m.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let q = m[(i, c)].div_floor(&m[(r, c)]);
                m.add_row_multiple(i, r, &-q);
                done &= m[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if m[(r, c)].is_zero() {
            continue;
        }
        if m[(r, c)].is_negative() {
            m.negate_row(r);
        }
        for i in 0..r {
            let q = m[(i, c)].div_floor(&m[(r, c)]);
            m.add_row_multiple(i, r, &-q);
        }
        r += 1;
    }
    m.select_rows(0..r)
}

pub fn rank(a: &IntMatrix) -> usize {
    hermite_basis(a).rows()
}

/// Basis (as rows) of `{x : x·M = 0}`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let r = s.rank();
    hermite_basis(&s.u.select_rows(r..m.rows()))
}

/// Basis (as rows) of `{v : M·v = 0}`.
pub fn right_kernel(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let r = s.rank();
    hermite_basis(&s.v.select_cols(r..m.cols()).transpose())
}

fn check_cols(a: &IntMatrix, b: &IntMatrix) -> Result<(), LinalgError> {
    if a.cols() != b.cols() {
        return Err(LinalgError::ColumnMismatch {
            left: a.cols(),
            right: b.cols(),
        });
    }
    Ok(())
}

pub fn lattice_sum(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    Ok(hermite_basis(&a.vstack(b)?))
}

/// `rowspan(A) ∩ rowspan(B)` from the left kernel of `[A; B]`: every relation
/// `x·A + y·B = 0` contributes the common vector `x·A`.
pub fn lattice_intersect(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    check_cols(a, b)?;
    let kernel = left_kernel(&a.vstack(b)?);
    let coeffs = kernel.select_cols(0..a.rows());
    Ok(hermite_basis(&coeffs.checked_mul(a)?))
}

/// `(rowspan(A) ⊗ ℚ) ∩ ℤⁿ`, computed as the annihilator of the right kernel.
pub fn saturate(a: &IntMatrix) -> IntMatrix {
    let k = right_kernel(a);
    if k.rows() == 0 {
        return IntMatrix::identity(a.cols());
    }
    left_kernel(&k.transpose())
}

pub fn quotient_invariants(
    ambient_rank: usize,
    a: &IntMatrix,
) -> Result<QuotientInvariants, LinalgError> {
    if a.cols() != ambient_rank {
        return Err(LinalgError::ColumnMismatch {
            left: ambient_rank,
            right: a.cols(),
        });
    }
    let divisors = smith_normal_form(a).divisors();
    Ok(QuotientInvariants {
        free_rank: ambient_rank - divisors.len(),
        torsion: divisors
            .into_iter()
            .filter(|d| *d > BigInt::from(1))
            .collect(),
    })
}

/// An integer `x` with `x·M = y`, if one exists.
pub fn solve_left(m: &IntMatrix, y: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if y.len() != m.cols() {
        return Err(LinalgError::LengthMismatch {
            expected: m.cols(),
            found: y.len(),
        });
    }
    // x U⁻¹ D V⁻¹ = y  ⇔  w D = y V  with  x = w U
    let s = smith_normal_form(m);
    let target = s.v.left_apply(y)?;
    let divs = s.divisors();
    let mut w = vec![BigInt::zero(); m.rows()];
    for (j, t) in target.iter().enumerate() {
        match divs.get(j) {
            Some(d) => {
                let (q, rem) = t.div_rem(d);
                if !rem.is_zero() {
                    return Ok(None);
                }
                w[j] = q;
            }
            None if !t.is_zero() => return Ok(None),
            None => {}
        }
    }
    Ok(Some(s.u.left_apply(&w)?))
}

pub fn contains(a: &IntMatrix, v: &[BigInt]) -> Result<bool, LinalgError> {
    Ok(solve_left(a, v)?.is_some())
}

/// `rowspan(A) ⊆ rowspan(B)`.
pub fn is_sublattice(a: &IntMatrix, b: &IntMatrix) -> Result<bool, LinalgError> {
    check_cols(a, b)?;
    for i in 0..a.rows() {
        if !contains(b, a.row(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}
