//! Smith normal form over a Euclidean scalar.

use super::Matrix;
use crate::scalar::EuclideanScalar;

/// Decomposition `a = u * s * v` with `u`, `v` unimodular and `s`
/// diagonal with a nonnegative divisibility chain d_1 | d_2 | ...
///
/// The inverses are tracked during the reduction so that integral
/// solving does not have to invert unimodular matrices afterwards.
#[derive(Clone)]
pub struct SmithNormalForm<T> {
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: EuclideanScalar> SmithNormalForm<T> {
    /// Diagonal entries d_i (including zeros).
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.s.nrows().min(self.s.ncols())).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

struct Reducer<T> {
    u: Matrix<T>,
    s: Matrix<T>,
    v: Matrix<T>,
    u_inv: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: EuclideanScalar> Reducer<T> {
    // Invariant maintained by every elementary step: u * s * v equals the
    // input matrix, u_inv * u = 1, v * v_inv = 1.

    fn row_add(&mut self, a: usize, b: usize, c: &T) {
        self.s.row_add(a, b, c);
        self.u_inv.row_add(a, b, c);
        let neg = T::zero() - c.clone();
        self.u.col_add(b, a, &neg);
    }

    fn col_add(&mut self, a: usize, b: usize, c: &T) {
        self.s.col_add(a, b, c);
        self.v_inv.col_add(a, b, c);
        let neg = T::zero() - c.clone();
        self.v.row_add(b, a, &neg);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u_inv.swap_rows(a, b);
        self.u.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v_inv.swap_cols(a, b);
        self.v.swap_rows(a, b);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u_inv.negate_row(i);
        self.u.negate_col(i);
    }

    /// Position of the entry with smallest nonzero absolute value in the
    /// trailing block starting at (k, k).
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in k..self.s.nrows() {
            for j in k..self.s.ncols() {
                let e = &self.s[(i, j)];
                if e.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if e.abs() < self.s[(bi, bj)].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }

    fn clear_position(&mut self, k: usize) {
        loop {
            let Some((pi, pj)) = self.pivot(k) else { return };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);
            let mut dirty = false;
            for i in k + 1..self.s.nrows() {
                if self.s[(i, k)].is_zero() {
                    continue;
                }
                let q = self.s[(i, k)].div_floor(&self.s[(k, k)]);
                let neg = T::zero() - q;
                self.row_add(i, k, &neg);
                if !self.s[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..self.s.ncols() {
                if self.s[(k, j)].is_zero() {
                    continue;
                }
                let q = self.s[(k, j)].div_floor(&self.s[(k, k)]);
                let neg = T::zero() - q;
                self.col_add(j, k, &neg);
                if !self.s[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                return;
            }
        }
    }
}

/// Smith normal form `a = u * s * v`.
pub fn smith_normal_form<T: EuclideanScalar>(a: &Matrix<T>) -> SmithNormalForm<T> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut r = Reducer {
        u: Matrix::identity(m),
        s: a.clone(),
        v: Matrix::identity(n),
        u_inv: Matrix::identity(m),
        v_inv: Matrix::identity(n),
    };

    for k in 0..m.min(n) {
        r.clear_position(k);
        if r.s[(k, k)].is_zero() {
            break;
        }
    }

    // Sign normalization and the divisibility chain.
    let rank = (0..m.min(n)).take_while(|&i| !r.s[(i, i)].is_zero()).count();
    for i in 0..rank {
        if r.s[(i, i)] < T::zero() {
            r.negate_row(i);
        }
    }
    let mut i = 0;
    while i + 1 < rank {
        if (r.s[(i + 1, i + 1)].clone() % r.s[(i, i)].clone()).is_zero() {
            i += 1;
            continue;
        }
        // Fold d_{i+1} into position i and re-reduce the 2x2 block.
        let one = T::one();
        r.col_add(i, i + 1, &one);
        r.clear_position(i);
        if r.s[(i, i)] < T::zero() {
            r.negate_row(i);
        }
        if r.s[(i + 1, i + 1)] < T::zero() {
            r.negate_row(i + 1);
        }
        i = 0; // the chain below i may have been disturbed; restart
    }

    SmithNormalForm { u: r.u, s: r.s, v: r.v, u_inv: r.u_inv, v_inv: r.v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, Int, IntMatrix};
    use num_traits::Zero;

    fn check(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(&snf.s).mul(&snf.v), *a, "u*s*v != a");
        assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(a.nrows()));
        assert_eq!(snf.v_inv.mul(&snf.v), IntMatrix::identity(a.ncols()));
        let d = snf.diagonal();
        for i in 0..d.len() {
            assert!(d[i] >= Int::from(0));
            if i + 1 < d.len() && !d[i].is_zero() && !d[i + 1].is_zero() {
                assert!((d[i + 1].clone() % d[i].clone()).is_zero(), "no divisibility chain: {d:?}");
            }
            if d[i].is_zero() && i + 1 < d.len() {
                assert!(d[i + 1].is_zero(), "zero before nonzero in {d:?}");
            }
        }
        // off-diagonal zero
        for i in 0..snf.s.nrows() {
            for j in 0..snf.s.ncols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn already_diagonal() {
        let a = IntMatrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(0)]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal(), vec![int(2), int(0)]);
        check(&a);
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMatrix::identity(3);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal(), vec![int(1), int(1), int(1)]);
        check(&a);
    }

    #[test]
    fn divisibility_forced() {
        // diag(2, 3) has SNF diag(1, 6)
        let a = IntMatrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(3)]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal(), vec![int(1), int(6)]);
        check(&a);
    }

    #[test]
    fn textbook_example() {
        let a = IntMatrix::from_rows(vec![
            vec![int(-6), int(111), int(-36), int(6)],
            vec![int(5), int(-672), int(210), int(74)],
            vec![int(0), int(-255), int(81), int(24)],
            vec![int(-7), int(255), int(-81), int(-10)],
        ]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal(), vec![int(1), int(3), int(21), int(0)]);
        check(&a);
    }

    #[test]
    fn empty_and_rectangular() {
        check(&IntMatrix::zero(0, 3));
        check(&IntMatrix::zero(3, 0));
        check(&IntMatrix::zero(2, 5));
        let a = IntMatrix::from_rows(vec![vec![int(4), int(6), int(10)]]);
        check(&a);
        assert_eq!(smith_normal_form(&a).diagonal(), vec![int(2)]);
    }
}
