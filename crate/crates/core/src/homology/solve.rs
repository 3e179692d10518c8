//! Exact linear solvers: ℚ, ℤ, and the mixed case.

use super::{smith_normal_form, Matrix};
use crate::scalar::FieldScalar;
use crate::{Int, IntMatrix, Rat, RatMatrix};
use num_traits::{One, Zero};

/// Row echelon data produced by exact Gaussian elimination.
struct Echelon<T> {
    mat: Matrix<T>,
    /// pivot column of each nonzero row
    pivots: Vec<usize>,
}

fn eliminate<T: FieldScalar>(a: &Matrix<T>) -> Echelon<T> {
    let mut m = a.clone();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
        m.swap_rows(r, p);
        let inv = m[(r, c)].recip();
        for j in c..cols {
            m[(r, j)] = m[(r, j)].clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[(i, c)].is_zero() {
                let f = T::zero() - m[(i, c)].clone();
                m.row_add(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    Echelon { mat: m, pivots }
}

/// Rank over the fraction field.
pub fn rank_rational<T: FieldScalar>(a: &Matrix<T>) -> usize {
    eliminate(a).pivots.len()
}

/// Solves `a x = b` exactly over the field; free variables are set to
/// zero.  Returns `None` when inconsistent.
pub fn solve_rational<T: FieldScalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.nrows(), b.len(), "rhs length mismatch");
    let mut aug = Matrix::from_fn(a.nrows(), a.ncols() + 1, |i, j| {
        if j < a.ncols() {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let ech = eliminate(&aug);
    aug = ech.mat;
    let n = a.ncols();
    // inconsistent iff a pivot lands in the rhs column
    if ech.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (row, &col) in ech.pivots.iter().enumerate() {
        x[col] = aug[(row, n)].clone();
    }
    Some(x)
}

/// Basis of the right nullspace of `a` over the field.
pub fn nullspace_rational<T: FieldScalar>(a: &Matrix<T>) -> Vec<Vec<T>> {
    let ech = eliminate(a);
    let n = a.ncols();
    let pivot_set: std::collections::HashSet<usize> = ech.pivots.iter().copied().collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![T::zero(); n];
        v[f] = T::one();
        for (row, &col) in ech.pivots.iter().enumerate() {
            v[col] = T::zero() - ech.mat[(row, f)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `a x = b` over ℤ via Smith normal form.  `None` means the
/// system has no integral solution (it may still be rationally
/// solvable); this is a value, not an error.
pub fn solve_integral(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.nrows(), b.len(), "rhs length mismatch");
    let snf = smith_normal_form(a);
    let c = snf.u_inv.mul_vec(b);
    let d = snf.diagonal();
    let n = a.ncols();
    let mut y = vec![Int::zero(); n];
    for i in 0..a.nrows() {
        if i < d.len() && !d[i].is_zero() {
            let (q, r) = num_integer::Integer::div_rem(&c[i], &d[i]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !c[i].is_zero() {
            return None;
        }
    }
    Some(snf.v_inv.mul_vec(&y))
}

/// Solution of a mixed system (see [`solve_mixed`]).
#[derive(Clone, Debug)]
pub struct MixedSolution {
    pub rational: Vec<Rat>,
    pub integral: Vec<Int>,
}

/// Solves `a x + b z = r` with `x` rational and `z` integral.
///
/// The rational block is eliminated first: `z` must satisfy `n b z = n r`
/// for a basis `n` of the left nullspace of `a`, which is an integral
/// problem after clearing denominators.  Sound and complete.
pub fn solve_mixed(a: &RatMatrix, b: &RatMatrix, r: &[Rat]) -> Option<MixedSolution> {
    assert_eq!(a.nrows(), b.nrows(), "block row mismatch");
    assert_eq!(a.nrows(), r.len(), "rhs length mismatch");
    // rows y with y a = 0  <=>  columns of the nullspace of a^T
    let left_null = nullspace_rational(&a.transpose());
    let nb = Matrix::from_fn(left_null.len(), b.ncols(), |i, j| {
        (0..b.nrows()).fold(Rat::zero(), |acc, k| acc + left_null[i][k].clone() * b[(k, j)].clone())
    });
    let nr: Vec<Rat> = (0..left_null.len())
        .map(|i| (0..r.len()).fold(Rat::zero(), |acc, k| acc + left_null[i][k].clone() * r[k].clone()))
        .collect();
    // clear denominators row by row
    let mut int_rows = Vec::with_capacity(nb.nrows());
    let mut int_rhs = Vec::with_capacity(nb.nrows());
    for i in 0..nb.nrows() {
        let mut l = Int::one();
        for j in 0..nb.ncols() {
            l = num_integer::lcm(l, nb[(i, j)].denom().clone());
        }
        l = num_integer::lcm(l, nr[i].denom().clone());
        let lr = Rat::from_integer(l);
        int_rows.push(
            (0..nb.ncols())
                .map(|j| (nb[(i, j)].clone() * lr.clone()).to_integer())
                .collect::<Vec<_>>(),
        );
        int_rhs.push((nr[i].clone() * lr).to_integer());
    }
    let int_mat = IntMatrix::from_fn(int_rows.len(), b.ncols(), |i, j| int_rows[i][j].clone());
    let z = solve_integral(&int_mat, &int_rhs)?;
    // back-substitute: a x = r - b z, consistent over Q by construction
    let bz = b.mul_vec(&z.iter().map(|e| Rat::from_integer(e.clone())).collect::<Vec<_>>());
    let rhs: Vec<Rat> = r.iter().zip(&bz).map(|(ri, bi)| ri.clone() - bi.clone()).collect();
    let x = solve_rational(a, &rhs).expect("projected system must be consistent");
    Some(MixedSolution { rational: x, integral: z })
}

/// `true` iff `b` lies in the integral column span of `a`.
pub fn in_lattice_image(a: &IntMatrix, b: &[Int]) -> bool {
    solve_integral(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};


    #[test]
    fn doubled_identity() {
        let a = IntMatrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(2)]]);
        assert_eq!(solve_integral(&a, &[int(2), int(4)]), Some(vec![int(1), int(2)]));
        assert_eq!(solve_integral(&a, &[int(1), int(0)]), None);
        let aq = a.map(|e| Rat::from_integer(e.clone()));
        let x = solve_rational(&aq, &[rat(1, 1), rat(0, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(0, 1)]);
    }

    #[test]
    fn rational_consistency_detection() {
        let a = RatMatrix::from_rows(vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(2, 1), rat(4, 1)],
        ]);
        assert!(solve_rational(&a, &[rat(1, 1), rat(2, 1)]).is_some());
        assert!(solve_rational(&a, &[rat(1, 1), rat(3, 1)]).is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let a = RatMatrix::from_rows(vec![vec![rat(1, 1), rat(2, 1), rat(3, 1)]]);
        let ns = nullspace_rational(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let w = a.mul_vec(v);
            assert!(w.iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn mixed_dirichlet() {
        // x + 2 z = 1/2 with z integral: z free, x = 1/2 - 2z
        let a = RatMatrix::from_rows(vec![vec![rat(1, 1)]]);
        let b = RatMatrix::from_rows(vec![vec![rat(2, 1)]]);
        let sol = solve_mixed(&a, &b, &[rat(1, 2)]).unwrap();
        let lhs = sol.rational[0].clone() + rat(2, 1) * Rat::from_integer(sol.integral[0].clone());
        assert_eq!(lhs, rat(1, 2));
        // no rational vars: 2 z = 1 unsolvable, 2 z = 4 solvable
        let a0 = RatMatrix::zero(1, 0);
        let sol = solve_mixed(&a0, &b, &[rat(1, 1)]);
        assert!(sol.is_none());
        let sol = solve_mixed(&a0, &b, &[rat(4, 1)]).unwrap();
        assert_eq!(sol.integral, vec![int(2)]);
    }
}
