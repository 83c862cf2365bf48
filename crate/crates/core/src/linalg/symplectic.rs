use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntMatrix, LinalgError};

/// `H₁(Σ_g; ℤ)` with basis `(a1..ag, b1..bg)` and `a_i · b_i = +1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticSpace {
    pub genus: usize,
}

impl SymplecticSpace {
    pub fn new(genus: usize) -> Self {
        SymplecticSpace { genus }
    }

    pub fn dimension(&self) -> usize {
        2 * self.genus
    }

    pub fn pairing_matrix(&self) -> IntMatrix {
        let g = self.genus;
        let mut j = IntMatrix::zeros(2 * g, 2 * g);
        for i in 0..g {
            j[(i, g + i)] = BigInt::one();
            j[(g + i, i)] = -BigInt::one();
        }
        j
    }

    pub fn pairing(&self, u: &[BigInt], v: &[BigInt]) -> Result<BigInt, LinalgError> {
        symplectic_pairing(u, v, self.genus)
    }

    /// `L · J · Lᵀ` for a matrix of row vectors.
    pub fn gram(&self, rows: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        rows.checked_mul(&self.pairing_matrix())?
            .checked_mul(&rows.transpose())
    }
}

/// `uᵀ J v = Σ (u_{a_i} v_{b_i} − u_{b_i} v_{a_i})`.
pub fn symplectic_pairing(u: &[BigInt], v: &[BigInt], genus: usize) -> Result<BigInt, LinalgError> {
    for w in [u, v] {
        if w.len() != 2 * genus {
            return Err(LinalgError::LengthMismatch {
                expected: 2 * genus,
                found: w.len(),
            });
        }
    }
    let mut s = BigInt::zero();
    for i in 0..genus {
        s += &u[i] * &v[genus + i] - &u[genus + i] * &v[i];
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn basis_convention() {
        assert_eq!(
            symplectic_pairing(&v(&[1, 0]), &v(&[0, 1]), 1).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            symplectic_pairing(&v(&[3, 5]), &v(&[3, 5]), 1).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            symplectic_pairing(&v(&[0, 1]), &v(&[1, 1]), 1).unwrap(),
            BigInt::from(-1)
        );
        assert!(symplectic_pairing(&v(&[0, 1]), &v(&[1, 1, 0]), 1).is_err());
    }

    #[test]
    fn pairing_matrix_agrees() {
        let s = SymplecticSpace::new(2);
        let j = s.pairing_matrix();
        assert!(j.is_unimodular());
        assert_eq!(j.transpose(), {
            let mut n = j.clone();
            for r in 0..4 {
                n.negate_row(r);
            }
            n
        });
        let u = v(&[1, -2, 0, 3]);
        let w = v(&[2, 1, 1, -1]);
        let uj = j.left_apply(&u).unwrap();
        let direct: BigInt = uj.iter().zip(&w).map(|(a, b)| a * b).sum();
        assert_eq!(direct, s.pairing(&u, &w).unwrap());
        assert_eq!(s.pairing(&u, &w).unwrap(), -s.pairing(&w, &u).unwrap());
    }
}
