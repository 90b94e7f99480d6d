//! Characteristic pairs `(N, λ)` over a nerve, their validation, and the
//! integer invariants attached to them.
//!
//! "Spanning a `k`-dimensional subtorus" is read as spanning a rank-`k`
//! direct summand of `Z^n`, which is what the Smith normal form test in
//! [`unimodular_span`] decides.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ghs::is_ghs;
use crate::homology::{cokernel, invariant_factors, snf, FGAbelianGroup};
use crate::simplicial::{Simplex, SimplicialComplex};
use crate::IntegerMatrix;

/// True iff the rows of `vectors` form part of a basis of `Z^n`.
pub fn unimodular_span(vectors: &IntegerMatrix) -> bool {
    let k = vectors.rows();
    if k > vectors.cols() {
        return false;
    }
    let factors = invariant_factors(vectors);
    factors.len() == k && factors.iter().all(BigInt::is_one)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPair {
    nerve: SimplicialComplex,
    n: usize,
    /// `m x n`, row `i` is `λ_i`.
    lambda: IntegerMatrix,
}

impl CharacteristicPair {
    pub fn new(nerve: SimplicialComplex, n: usize, lambda: IntegerMatrix) -> Result<Self> {
        let m = nerve.num_vertices();
        if n == 0 {
            return Err(Error::InvalidCharacteristic("torus rank must be positive".into()));
        }
        if lambda.shape() != (m, n) {
            return Err(Error::InvalidCharacteristic(format!(
                "λ is {}x{}, expected {m}x{n} (one row per nerve vertex)",
                lambda.rows(),
                lambda.cols()
            )));
        }
        if m < n {
            return Err(Error::InvalidCharacteristic(format!("{m} facets cannot span a rank {n} torus")));
        }
        if let Some(i) = (0..m).find(|&i| lambda.row(i).iter().all(BigInt::is_zero)) {
            return Err(Error::InvalidCharacteristic(format!("λ_{i} is zero")));
        }
        Ok(CharacteristicPair { nerve, n, lambda })
    }

    pub fn from_i64(nerve: SimplicialComplex, n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCharacteristic(format!("every λ row must have length {n}")));
        }
        let lambda = if rows.is_empty() { IntegerMatrix::zeros(0, n) } else { IntegerMatrix::from_i64_rows(rows) };
        Self::new(nerve, n, lambda)
    }

    pub fn nerve(&self) -> &SimplicialComplex {
        &self.nerve
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.lambda.rows()
    }

    pub fn lambda(&self) -> &IntegerMatrix {
        &self.lambda
    }

    /// The rows `λ_v` for `v` in `s`.
    pub fn rows_of(&self, s: &Simplex) -> IntegerMatrix {
        select_rows(&self.lambda, s)
    }

    /// Divides every row by the gcd of its entries; one warning per changed row.
    pub fn normalized(&self) -> (Self, Vec<String>) {
        let mut lambda = self.lambda.clone();
        let mut warnings = Vec::new();
        for i in 0..self.m() {
            let g = self.lambda.row(i).iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g > BigInt::one() {
                for j in 0..self.n {
                    lambda[(i, j)] = &self.lambda[(i, j)] / &g;
                }
                warnings.push(format!("λ_{i} was not primitive; divided by {g}"));
            }
        }
        (CharacteristicPair { nerve: self.nerve.clone(), n: self.n, lambda }, warnings)
    }

    /// Same pair with `λ_i` replaced by `-λ_i`.
    pub fn with_row_negated(&self, i: usize) -> Self {
        let mut lambda = self.lambda.clone();
        lambda.negate_row(i);
        CharacteristicPair { nerve: self.nerve.clone(), n: self.n, lambda }
    }
}

fn select_rows(m: &IntegerMatrix, s: &Simplex) -> IntegerMatrix {
    let mut out = IntegerMatrix::zeros(s.len(), m.cols());
    for (i, &v) in s.vertices().iter().enumerate() {
        for j in 0..m.cols() {
            out[(i, j)] = m[(v, j)].clone();
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacteristicCheck {
    pub characteristic: bool,
    /// First facet (in facet order) whose `λ`-rows fail [`unimodular_span`].
    pub offending: Option<Simplex>,
}

/// Checks [`unimodular_span`] on every facet of the nerve.
pub fn is_characteristic(p: &CharacteristicPair) -> CharacteristicCheck {
    let offending = p.nerve.facets().par_iter().find_first(|f| !unimodular_span(&p.rows_of(f))).cloned();
    CharacteristicCheck { characteristic: offending.is_none(), offending }
}

/// Checks every nonempty simplex rather than only the facets.
pub fn is_characteristic_exhaustive(p: &CharacteristicPair) -> CharacteristicCheck {
    let offending = p
        .nerve
        .all_simplices()
        .into_iter()
        .flatten()
        .filter(|s| !s.is_empty())
        .find(|s| !unimodular_span(&p.rows_of(s)));
    CharacteristicCheck { characteristic: offending.is_none(), offending }
}

/// `Z^n / <λ_1, ..., λ_m>`.
pub fn pi1_orbit_union(p: &CharacteristicPair) -> FGAbelianGroup {
    cokernel(&p.lambda.transpose())
}

/// Cokernel of the square matrix whose columns are the lifts `l_i ∈ Z^m`.
/// Each lift must agree with `λ_i` in its first `n` coordinates.
pub fn h1_total_space(p: &CharacteristicPair, lifts: &IntegerMatrix) -> Result<FGAbelianGroup> {
    let m = p.m();
    if lifts.shape() != (m, m) {
        return Err(Error::DimensionMismatch(format!("lifts must be {m}x{m}, got {}x{}", lifts.rows(), lifts.cols())));
    }
    if let Some(i) = (0..m).find(|&i| lifts.row(i)[..p.n] != *p.lambda.row(i)) {
        return Err(Error::InvalidCharacteristic(format!("lift {i} does not project to λ_{i}")));
    }
    Ok(cokernel(&lifts.transpose()))
}

/// Lifts `l_i = (λ_i, c_i)` forming a unimodular `m x m` matrix, found from
/// the Smith normal form of `λ`. `None` when `λ` is not onto `Z^n`, in which
/// case no such lifts exist.
pub fn unimodular_completion(p: &CharacteristicPair) -> Option<IntegerMatrix> {
    let (m, n) = (p.m(), p.n);
    let s = snf(&p.lambda);
    let factors = s.invariant_factors();
    if factors.len() != n || !factors.iter().all(BigInt::is_one) {
        return None;
    }
    // λ = U⁻¹ [I; 0] V⁻¹ = U⁻¹ diag(V⁻¹, I) restricted to the first n columns.
    let mut block = IntegerMatrix::identity(m);
    for i in 0..n {
        for j in 0..n {
            block[(i, j)] = s.v_inv[(i, j)].clone();
        }
    }
    let lifts = &s.u_inv * &block;
    debug_assert!(lifts.determinant().abs().is_one());
    debug_assert!((0..m).all(|i| lifts.row(i)[..n] == *p.lambda.row(i)));
    Some(lifts)
}

/// A simplicial fan: primitive rays and maximal cones given as ray-index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    n: usize,
    rays: IntegerMatrix,
    cones: Vec<Simplex>,
}

impl Fan {
    pub fn new(n: usize, rays: Vec<Vec<BigInt>>, cones: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCharacteristic("fan dimension must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidCharacteristic(format!("ray {i} has length {}, expected {n}", r.len())));
            }
            let g = r.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_one() {
                return Err(Error::InvalidCharacteristic(format!("ray {i} is not primitive")));
            }
        }
        let count = rays.len();
        let rays = if rays.is_empty() { IntegerMatrix::zeros(0, n) } else { IntegerMatrix::from_rows(rays) };
        let mut out = Vec::with_capacity(cones.len());
        for c in cones {
            let s = Simplex::new(c);
            if s.len() > n {
                return Err(Error::InvalidCharacteristic(format!("cone {s} has more than {n} rays")));
            }
            if let Some(&v) = s.vertices().iter().find(|&&v| v >= count) {
                return Err(Error::VertexOutOfRange { vertex: v, num_vertices: count });
            }
            out.push(s);
        }
        Ok(Fan { n, rays, cones: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rays(&self) -> &IntegerMatrix {
        &self.rays
    }

    pub fn cones(&self) -> &[Simplex] {
        &self.cones
    }
}

/// The characteristic pair of a nonsingular fan. Completeness is not checked
/// here; run [`is_ghs`] on the nerve for the combinatorial certificate.
pub fn from_fan(f: &Fan) -> Result<CharacteristicPair> {
    let singular: Vec<Vec<usize>> =
        f.cones.iter().filter(|c| !unimodular_span(&select_rows(&f.rays, c))).map(|c| c.vertices().to_vec()).collect();
    if !singular.is_empty() {
        return Err(Error::SingularCones(singular));
    }
    let nerve = SimplicialComplex::from_simplices(f.cones.clone())?;
    if nerve.num_vertices() != f.rays.rows() {
        return Err(Error::VertexGap(nerve.num_vertices()));
    }
    CharacteristicPair::new(nerve, f.n, f.rays.clone())
}

/// `h_i = Σ_j (-1)^(i-j) C(n-j, i-j) f_(j-1)` for `i = 0..=n`, with `f_(-1) = 1`.
pub fn h_vector(nerve: &SimplicialComplex, n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one()];
    f.extend(nerve.f_vector().into_iter().map(BigInt::from));
    let f_at = |j: usize| f.get(j).cloned().unwrap_or_default();
    (0..=n)
        .map(|i| {
            (0..=i).fold(BigInt::zero(), |acc, j| {
                let term = binomial(n - j, i - j) * f_at(j);
                if (i - j) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    #[serde(with = "crate::serde_bigint::vec")]
    pub h_vector: Vec<BigInt>,
    /// `b_0, ..., b_2n`; odd entries are zero.
    #[serde(with = "crate::serde_bigint::vec")]
    pub betti: Vec<BigInt>,
    /// Where `b_2i = h_i` comes from.
    pub basis: &'static str,
}

pub const BETTI_BASIS: &str = "cited: even Betti numbers of a quasitoric manifold equal the h-vector of its nerve";

/// Betti numbers of the quasitoric manifold over a pair that passes both
/// [`is_ghs`] and [`is_characteristic`].
pub fn even_betti_report(p: &CharacteristicPair) -> Result<BettiReport> {
    let ghs = is_ghs(&p.nerve, p.n as isize)?;
    if !ghs.verdict {
        return Err(Error::Precondition(format!("nerve is not a homology {}-sphere", p.n - 1)));
    }
    if let Some(s) = is_characteristic(p).offending {
        return Err(Error::Precondition(format!("λ fails the span condition on {s}")));
    }
    let h = h_vector(&p.nerve, p.n);
    let betti = (0..=2 * p.n).map(|k| if k % 2 == 0 { h[k / 2].clone() } else { BigInt::zero() }).collect();
    Ok(BettiReport { h_vector: h, betti, basis: BETTI_BASIS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(r)
    }

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn triangle_pair(lambda: &[Vec<i64>]) -> CharacteristicPair {
        CharacteristicPair::from_i64(SimplicialComplex::boundary_simplex(2), 2, lambda).unwrap()
    }

    #[test]
    fn span_examples() {
        assert!(unimodular_span(&rows(&[vec![1, 0, 0], vec![0, 1, 0]])));
        assert!(!unimodular_span(&rows(&[vec![2, 0]])));
        assert!(unimodular_span(&rows(&[vec![1, 0], vec![1, 1]])));
        assert!(!unimodular_span(&rows(&[vec![1, 0], vec![0, 1], vec![1, 1]])));
        assert!(unimodular_span(&IntegerMatrix::zeros(0, 3)));
    }

    #[test]
    fn projective_plane_pair() {
        let p = triangle_pair(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(is_characteristic(&p).characteristic);
        assert!(pi1_orbit_union(&p).is_trivial());
        let r = even_betti_report(&p).unwrap();
        assert_eq!(r.h_vector, big(&[1, 1, 1]));
        assert_eq!(r.betti, big(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn determinant_two_fails_on_the_first_edge() {
        let p = triangle_pair(&[vec![2, 0], vec![0, 1], vec![1, 1]]);
        let c = is_characteristic(&p);
        assert!(!c.characteristic);
        assert_eq!(c.offending, Some(Simplex::new(vec![0, 1])));
        assert!(even_betti_report(&p).is_err());
        // normalizing the row repairs it
        let (q, warnings) = p.normalized();
        assert_eq!(warnings.len(), 1);
        assert!(is_characteristic(&q).characteristic);
    }

    #[test]
    fn identity_on_a_simplex_boundary() {
        for n in 2..=5 {
            let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
            let p = CharacteristicPair::from_i64(SimplicialComplex::boundary_simplex(n - 1), n, &id).unwrap();
            assert!(is_characteristic(&p).characteristic);
            assert!(h1_total_space(&p, &IntegerMatrix::identity(n)).unwrap().is_trivial());
        }
    }

    #[test]
    fn pi1_examples() {
        let nerve = SimplicialComplex::boundary_simplex(2);
        let same = CharacteristicPair::from_i64(nerve.clone(), 2, &[vec![1, 0], vec![1, 0], vec![1, 0]]).unwrap();
        assert_eq!(pi1_orbit_union(&same), FGAbelianGroup::integers());
        let two = CharacteristicPair::from_i64(
            SimplicialComplex::build(&[vec![0], vec![1]]).unwrap(),
            2,
            &[vec![2, 0], vec![0, 1]],
        )
        .unwrap();
        assert_eq!(pi1_orbit_union(&two), FGAbelianGroup::cyclic(2));
    }

    #[test]
    fn lifts() {
        let p = triangle_pair(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let good = rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]]);
        assert!(h1_total_space(&p, &good).unwrap().is_trivial());
        let three = rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 3]]);
        assert_eq!(h1_total_space(&p, &three).unwrap(), FGAbelianGroup::cyclic(3));
        let bad = rows(&[vec![1, 0, 0], vec![0, 2, 0], vec![1, 1, 1]]);
        assert!(h1_total_space(&p, &bad).is_err());
        let c = unimodular_completion(&p).unwrap();
        assert!(h1_total_space(&p, &c).unwrap().is_trivial());

        let not_onto = triangle_pair(&[vec![2, 0], vec![0, 2], vec![2, 2]]);
        assert_eq!(unimodular_completion(&not_onto), None);
    }

    #[test]
    fn fans() {
        let cp2 = Fan::new(2, vec![big(&[1, 0]), big(&[0, 1]), big(&[-1, -1])], vec![vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap();
        let p = from_fan(&cp2).unwrap();
        assert!(is_characteristic(&p).characteristic);
        assert!(is_ghs(p.nerve(), 2).unwrap().verdict);

        let singular = Fan::new(2, vec![big(&[1, 0]), big(&[1, 2])], vec![vec![0, 1]]).unwrap();
        assert!(matches!(from_fan(&singular), Err(Error::SingularCones(c)) if c == vec![vec![0, 1]]));

        let line = Fan::new(1, vec![big(&[1]), big(&[-1])], vec![vec![0], vec![1]]).unwrap();
        let p = from_fan(&line).unwrap();
        assert!(is_characteristic(&p).characteristic);
        assert_eq!(even_betti_report(&p).unwrap().betti, big(&[1, 0, 1]));

        assert!(Fan::new(2, vec![big(&[2, 0])], vec![vec![0]]).is_err());
        assert!(Fan::new(2, vec![big(&[1, 0])], vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn h_vectors() {
        assert_eq!(h_vector(&SimplicialComplex::boundary_simplex(3), 3), big(&[1, 1, 1, 1]));
        let octahedron = crate::simplicial::suspension(&SimplicialComplex::cycle(4));
        assert_eq!(h_vector(&octahedron, 3), big(&[1, 3, 3, 1]));
        let h: BigInt = h_vector(&octahedron, 3).into_iter().sum();
        assert_eq!(h, BigInt::from(octahedron.facets().len()));
    }

    #[test]
    fn invalid_pairs() {
        let nerve = SimplicialComplex::boundary_simplex(2);
        assert!(CharacteristicPair::from_i64(nerve.clone(), 2, &[vec![1, 0], vec![0, 0], vec![1, 1]]).is_err());
        assert!(CharacteristicPair::from_i64(nerve.clone(), 2, &[vec![1, 0], vec![0, 1]]).is_err());
        assert!(CharacteristicPair::from_i64(nerve, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]).is_err());
    }
}
