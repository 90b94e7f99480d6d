//! Smith normal form over the integers.
//!
//! Pivoting always picks the nonzero entry of least absolute value in the
//! remaining block, which keeps intermediate entries small on the sparse
//! 0/±1 boundary matrices this crate produces.

use num_traits::Zero;

use super::matrix::{Matrix, Scalar};

/// `u * a * v == d`, with `u`, `v` unimodular and `d` diagonal with
/// `d[0] | d[1] | ... | d[r-1]` all positive and zeros afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: Scalar> SnfResult<T> {
    /// Nonzero diagonal entries in divisibility order.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).take_while(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Checks every postcondition by direct multiplication.
    pub fn verify(&self, a: &Matrix<T>) -> bool {
        let (m, n) = a.shape();
        let uav = &(&self.u * a) * &self.v;
        uav == self.d
            && self.d.is_diagonal()
            && is_divisor_chain(&self.d)
            && &self.u * &self.u_inv == Matrix::identity(m)
            && &self.v * &self.v_inv == Matrix::identity(n)
            && self.u.determinant().abs().is_one()
            && self.v.determinant().abs().is_one()
    }
}

fn is_divisor_chain<T: Scalar>(d: &Matrix<T>) -> bool {
    let diag: Vec<T> = (0..d.rows().min(d.cols())).map(|i| d[(i, i)].clone()).collect();
    let r = diag.iter().take_while(|x| !x.is_zero()).count();
    diag[..r].iter().all(|x| x.is_positive())
        && diag[r..].iter().all(Zero::is_zero)
        && diag[..r].windows(2).all(|w| (w[1].clone() % w[0].clone()).is_zero())
}

/// Records row and column operations on the transform matrices.
trait Tracker<T> {
    fn swap_rows(&mut self, a: usize, b: usize);
    fn swap_cols(&mut self, a: usize, b: usize);
    /// row[target] += f * row[source]
    fn add_row(&mut self, target: usize, source: usize, f: &T);
    /// col[target] += f * col[source]
    fn add_col(&mut self, target: usize, source: usize, f: &T);
    fn negate_row(&mut self, i: usize);
}

struct NoTracking;

impl<T> Tracker<T> for NoTracking {
    fn swap_rows(&mut self, _: usize, _: usize) {}
    fn swap_cols(&mut self, _: usize, _: usize) {}
    fn add_row(&mut self, _: usize, _: usize, _: &T) {}
    fn add_col(&mut self, _: usize, _: usize, _: &T) {}
    fn negate_row(&mut self, _: usize) {}
}

struct Transforms<T> {
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: Scalar> Tracker<T> for Transforms<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn add_row(&mut self, target: usize, source: usize, f: &T) {
        // E = I + f e_t e_s^T; U <- E U, U^-1 <- U^-1 E^-1
        self.u.add_row_multiple(target, source, f);
        self.u_inv.add_col_multiple(source, target, &-f.clone());
    }

    fn add_col(&mut self, target: usize, source: usize, f: &T) {
        // E = I + f e_s e_t^T; V <- V E, V^-1 <- E^-1 V^-1
        self.v.add_col_multiple(target, source, f);
        self.v_inv.add_row_multiple(source, target, &-f.clone());
    }

    fn negate_row(&mut self, i: usize) {
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

/// Full Smith normal form with transforms and their inverses.
pub fn snf<T: Scalar>(a: &Matrix<T>) -> SnfResult<T> {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut t = Transforms { u: Matrix::identity(m), u_inv: Matrix::identity(m), v: Matrix::identity(n), v_inv: Matrix::identity(n) };
    reduce(&mut d, &mut t);
    let result = SnfResult { u: t.u, d, v: t.v, u_inv: t.u_inv, v_inv: t.v_inv };
    debug_assert!(result.verify(a), "Smith normal form postcondition violated");
    result
}

/// Invariant factors only (no transforms); the fast path used for homology.
pub fn invariant_factors<T: Scalar>(a: &Matrix<T>) -> Vec<T> {
    let mut d = a.clone();
    reduce(&mut d, &mut NoTracking);
    (0..d.rows().min(d.cols())).map(|i| d[(i, i)].clone()).take_while(|x| !x.is_zero()).collect()
}

pub fn rank<T: Scalar>(a: &Matrix<T>) -> usize {
    invariant_factors(a).len()
}

fn reduce<T: Scalar>(a: &mut Matrix<T>, tr: &mut impl Tracker<T>) {
    let (m, n) = a.shape();
    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_abs_entry(a, t) else { return };
            a.swap_rows(t, pi);
            tr.swap_rows(t, pi);
            a.swap_cols(t, pj);
            tr.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&pivot);
                let f = -q;
                a.add_row_multiple(i, t, &f);
                tr.add_row(i, t, &f);
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&pivot);
                let f = -q;
                a.add_col_multiple(j, t, &f);
                tr.add_col(j, t, &f);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Pivot row and column are clear; enforce divisibility of the rest.
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(a[(i, j)].clone() % pivot.clone()).is_zero()));
            match offender {
                Some(i) => {
                    let one = T::one();
                    a.add_row_multiple(t, i, &one);
                    tr.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            tr.negate_row(t);
        }
    }
}

fn min_abs_entry<T: Scalar>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                let unit = ax.is_one();
                best = Some((i, j, ax));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
