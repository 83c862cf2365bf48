use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith decomposition `U · M · V = D` with `U`, `V` unimodular and the
/// diagonal of `D` a nonnegative divisibility chain. The inverses of the two
/// transforms are carried along since the lattice routines need them.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries, in order.
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] += q row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_row_multiple(dst, src, q);
        self.u.add_row_multiple(dst, src, q);
        self.u_inv.add_col_multiple(src, dst, &-q);
    }

    /// col[dst] += q col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_col_multiple(dst, src, q);
        self.v.add_col_multiple(dst, src, q);
        self.v_inv.add_row_multiple(src, dst, &-q);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Smallest nonzero |entry| in the trailing block, ties to lowest row then column.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a[(i, j)].abs();
                if x.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, _, b)| x < *b) {
                    best = Some((i, j, x));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(mut self) -> SmithNormalForm {
        let (m, n) = (self.a.rows(), self.a.cols());
        for t in 0..m.min(n) {
            loop {
                let Some((pi, pj)) = self.pivot(t) else {
                    return self.finish();
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);

                let p = self.a[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..m {
                    let q = self.a[(i, t)].div_floor(&p);
                    self.add_row(i, t, &-q);
                    clean &= self.a[(i, t)].is_zero();
                }
                for j in t + 1..n {
                    let q = self.a[(t, j)].div_floor(&p);
                    self.add_col(j, t, &-q);
                    clean &= self.a[(t, j)].is_zero();
                }
                if !clean {
                    continue;
                }
                let offender =
                    (t + 1..m).find(|&i| (t + 1..n).any(|j| !self.a[(i, j)].is_multiple_of(&p)));
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
        self.finish()
    }

    fn finish(self) -> SmithNormalForm {
        SmithNormalForm {
            u: self.u,
            d: self.a,
            v: self.v,
            u_inv: self.u_inv,
            v_inv: self.v_inv,
        }
    }
}

/// Smith normal form with pivoting on the smallest nonzero absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    Reducer {
        a: m.clone(),
        u: IntMatrix::identity(m.rows()),
        u_inv: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
        v_inv: IntMatrix::identity(m.cols()),
    }
    .run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Determinantal divisors d_k = gcd of all k×k minors, by enumeration.
    fn minor_gcds(m: &IntMatrix) -> Vec<BigInt> {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for last in k - 1..n {
                for mut s in subsets(last, k - 1) {
                    s.push(last);
                    out.push(s);
                }
            }
            out
        }
        let mut out = Vec::new();
        for k in 1..=m.rows().min(m.cols()) {
            let mut g = BigInt::zero();
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let rows = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| m[(i, j)].clone()).collect())
                        .collect();
                    let det = IntMatrix::from_rows(k, rows)
                        .unwrap()
                        .determinant()
                        .unwrap();
                    g = g.gcd(&det);
                }
            }
            if g.is_zero() {
                break;
            }
            out.push(g);
        }
        out
    }

    fn expected_divisors(m: &IntMatrix) -> Vec<BigInt> {
        let gcds = minor_gcds(m);
        let mut prev = BigInt::one();
        gcds.into_iter()
            .map(|d| {
                let e = &d / &prev;
                prev = d;
                e
            })
            .collect()
    }

    fn check_decomposition(m: &IntMatrix) -> SmithNormalForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d, "U M V != D for {m}");
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(m.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let divs = s.divisors();
        for w in divs.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(divs.iter().all(|d| d.is_positive()));
        s
    }

    #[test]
    fn two_by_two_example() {
        let m = IntMatrix::from_i64(2, &[&[2, 4], &[6, 8]]);
        assert_eq!(
            expected_divisors(&m),
            vec![BigInt::from(2), BigInt::from(4)]
        );
        let s = check_decomposition(&m);
        assert_eq!(s.d, IntMatrix::from_i64(2, &[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn identity_and_zero() {
        let s = check_decomposition(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        let s = check_decomposition(&IntMatrix::zeros(3, 2));
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
        let s = check_decomposition(&IntMatrix::zeros(0, 4));
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn random_matrices_match_minor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a17);
        for _ in 0..300 {
            let r = rng.gen_range(1..=5);
            let c = rng.gen_range(1..=5);
            let rows = (0..r)
                .map(|_| {
                    (0..c)
                        .map(|_| BigInt::from(rng.gen_range(-4i64..=4)))
                        .collect()
                })
                .collect();
            let m = IntMatrix::from_rows(c, rows).unwrap();
            let s = check_decomposition(&m);
            assert_eq!(s.divisors(), expected_divisors(&m), "matrix {m}");
        }
    }
}
