use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::One;

use super::group::FGAbelianGroup;
use super::snf::invariant_factors;
use crate::simplicial::{Simplex, SimplicialComplex};
use crate::IntegerMatrix;

/// A bounded chain complex of free abelian groups with named bases.
///
/// Degrees run from `min_degree` upward; `boundary(k)` maps `C_k` to
/// `C_{k-1}` with rows indexed by `basis(k - 1)` and columns by `basis(k)`.
#[derive(Clone, Debug)]
pub struct ChainComplex<B> {
    min_degree: isize,
    bases: Vec<Vec<B>>,
    boundaries: Vec<IntegerMatrix>,
}

impl<B: Clone + Eq + Hash> ChainComplex<B> {
    /// `boundaries[i]` is the map out of degree `min_degree + i`; the first
    /// one must have zero rows.
    pub fn new(min_degree: isize, bases: Vec<Vec<B>>, boundaries: Vec<IntegerMatrix>) -> Self {
        assert_eq!(bases.len(), boundaries.len(), "one boundary map per degree");
        for (i, d) in boundaries.iter().enumerate() {
            assert_eq!(d.cols(), bases[i].len(), "boundary columns must match the basis");
            let expected_rows = if i == 0 { 0 } else { bases[i - 1].len() };
            assert_eq!(d.rows(), expected_rows, "boundary rows must match the basis below");
        }
        ChainComplex { min_degree, bases, boundaries }
    }

    pub fn min_degree(&self) -> isize {
        self.min_degree
    }

    pub fn max_degree(&self) -> isize {
        self.min_degree + self.bases.len() as isize - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<isize> {
        self.min_degree..=self.max_degree()
    }

    fn index(&self, k: isize) -> Option<usize> {
        (k >= self.min_degree && k <= self.max_degree()).then(|| (k - self.min_degree) as usize)
    }

    pub fn basis(&self, k: isize) -> &[B] {
        self.index(k).map_or(&[], |i| &self.bases[i])
    }

    pub fn rank(&self, k: isize) -> usize {
        self.basis(k).len()
    }

    /// `∂_k : C_k -> C_{k-1}` (an empty matrix outside the range).
    pub fn boundary(&self, k: isize) -> IntegerMatrix {
        match self.index(k) {
            Some(i) => self.boundaries[i].clone(),
            None => IntegerMatrix::zeros(self.rank(k - 1), self.rank(k)),
        }
    }

    pub fn position(&self, k: isize, b: &B) -> Option<usize> {
        self.basis(k).iter().position(|x| x == b)
    }

    /// True when every composite `∂_{k-1} ∘ ∂_k` vanishes.
    pub fn is_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| (&w[0] * &w[1]).is_zero())
    }

    /// Homology in every degree from `min_degree` to `max_degree`.
    pub fn homology_all(&self) -> Vec<FGAbelianGroup> {
        let factors: Vec<Vec<BigInt>> = self.boundaries.iter().map(invariant_factors).collect();
        (0..self.bases.len())
            .map(|i| {
                let kernel = self.bases[i].len() - factors[i].len();
                let (image_rank, torsion) = match factors.get(i + 1) {
                    Some(f) => (f.len(), f.iter().filter(|d| !d.is_one()).cloned().collect()),
                    None => (0, Vec::new()),
                };
                FGAbelianGroup { rank: kernel - image_rank, torsion }
            })
            .collect()
    }

    pub fn homology(&self, k: isize) -> FGAbelianGroup {
        let Some(i) = self.index(k) else { return FGAbelianGroup::trivial() };
        let here = invariant_factors(&self.boundaries[i]).len();
        let above = self.boundaries.get(i + 1).map(invariant_factors).unwrap_or_default();
        FGAbelianGroup {
            rank: self.bases[i].len() - here - above.len(),
            torsion: above.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    /// Alternating sum of chain ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|k| if k.rem_euclid(2) == 0 { self.rank(k) as i64 } else { -(self.rank(k) as i64) }).sum()
    }
}

fn simplicial_complex_from(k: &SimplicialComplex, reduced: bool) -> ChainComplex<Simplex> {
    let start = if reduced { -1 } else { 0 };
    let bases: Vec<Vec<Simplex>> = (start..=k.dim()).map(|d| k.simplices(d)).collect();
    let mut boundaries = Vec::with_capacity(bases.len());
    for (i, basis) in bases.iter().enumerate() {
        if i == 0 {
            boundaries.push(IntegerMatrix::zeros(0, basis.len()));
            continue;
        }
        let below = &bases[i - 1];
        let row_of: HashMap<&Simplex, usize> = below.iter().enumerate().map(|(r, s)| (s, r)).collect();
        let mut m = IntegerMatrix::zeros(below.len(), basis.len());
        for (j, s) in basis.iter().enumerate() {
            for (pos, face) in s.boundary_faces() {
                m[(row_of[&face], j)] = if pos % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            }
        }
        boundaries.push(m);
    }
    ChainComplex::new(start, bases, boundaries)
}

/// Simplicial chain complex in degrees `0..=dim K`, bases in lexicographic
/// order, sign `(-1)^i` for deleting the `i`-th vertex.
pub fn chain_complex(k: &SimplicialComplex) -> ChainComplex<Simplex> {
    simplicial_complex_from(k, false)
}

/// Augmented chain complex (degree -1 spanned by the empty simplex).
pub fn augmented_chain_complex(k: &SimplicialComplex) -> ChainComplex<Simplex> {
    simplicial_complex_from(k, true)
}

pub fn homology(k: &SimplicialComplex, degree: isize) -> FGAbelianGroup {
    chain_complex(k).homology(degree)
}

/// Reduced homology in one degree (degree -1 allowed).
pub fn reduced_homology(k: &SimplicialComplex, degree: isize) -> FGAbelianGroup {
    augmented_chain_complex(k).homology(degree)
}

/// Reduced homology in degrees `-1..=dim K`.
pub fn reduced_homology_all(k: &SimplicialComplex) -> Vec<FGAbelianGroup> {
    augmented_chain_complex(k).homology_all()
}

/// Betti numbers `b_0, ..., b_dim` (unreduced).
pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    chain_complex(k).homology_all().iter().map(|g| g.rank).collect()
}
