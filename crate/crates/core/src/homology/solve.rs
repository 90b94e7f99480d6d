use super::group::FGAbelianGroup;
use super::matrix::{Matrix, Scalar};
use super::snf::{invariant_factors, snf};

/// `Z^rows / (column span of a)`.
pub fn cokernel<T: Scalar>(a: &Matrix<T>) -> FGAbelianGroup {
    let factors = invariant_factors(a);
    let torsion = factors.iter().filter(|d| !d.is_one()).map(Scalar::to_bigint).collect();
    FGAbelianGroup { rank: a.rows() - factors.len(), torsion }
}

/// Finds `x` with `a x = b` over the integers, or `a x ≡ b (mod q)` when a
/// modulus is given. Returns `None` when no solution exists.
pub fn solve_integer<T: Scalar>(a: &Matrix<T>, b: &[T], modulus: Option<&T>) -> Option<Vec<T>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    match modulus {
        None => solve_exact(a, b),
        Some(q) => {
            // a x + q y = b over Z, then keep x reduced mod q.
            let (m, n) = a.shape();
            let mut aug = Matrix::zeros(m, n + m);
            for i in 0..m {
                for j in 0..n {
                    aug[(i, j)] = a[(i, j)].clone();
                }
                aug[(i, n + i)] = q.clone();
            }
            let rhs: Vec<T> = b.iter().map(|x| x.mod_floor(q)).collect();
            let sol = solve_exact(&aug, &rhs)?;
            Some(sol[..n].iter().map(|x| x.mod_floor(q)).collect())
        }
    }
}

fn solve_exact<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let r = snf(a);
    // D y = U b, x = V y
    let ub = r.u.mul_vec(b);
    let diag = r.invariant_factors();
    let mut y = vec![T::zero(); a.cols()];
    for (i, c) in ub.iter().enumerate() {
        match diag.get(i) {
            Some(d) => {
                let (q, rem) = c.div_rem(d);
                if !rem.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            None if !c.is_zero() => return None,
            None => {}
        }
    }
    let x = r.v.mul_vec(&y);
    debug_assert_eq!(a.mul_vec(&x), b.to_vec());
    Some(x)
}
