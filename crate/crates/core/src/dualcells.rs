//! Dual cell structure of `Cone(N)` and the cochain algebra on it.
//!
//! Every simplex `σ` of `N` contributes a dual face `D_σ` of dimension
//! `n - |σ|`; the empty simplex contributes the top cell `D_∅`. The faces of
//! `D_σ` are the `D_τ` with `τ ⊋ σ`, and the incidence number
//! `[D_τ : D_σ]` for `τ = σ ∪ {v}` is `(-1)^i` where `i` is the position of
//! `v` in the sorted `τ`. With this convention the cellular boundary of the
//! dual complex is the simplicial coboundary of the augmented complex of `N`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{solve_integer, ChainComplex, FGAbelianGroup, GroupElement};
use crate::simplicial::{Simplex, SimplicialComplex};
use crate::IntegerMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DualFace {
    /// Simplex of `N` the face is dual to; empty for the top cell.
    pub label: Simplex,
    pub dim: usize,
}

impl fmt::Display for DualFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.label)
    }
}

#[derive(Clone, Debug)]
pub struct DualComplex {
    n: usize,
    include_top: bool,
    /// `faces[d]`: labels of the `d`-dimensional dual faces, lexicographic.
    faces: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    /// `boundaries[d]`: `C_d -> C_{d-1}`.
    boundaries: Vec<IntegerMatrix>,
}

/// Dual complex including the top cell `D_∅`.
pub fn dual_complex(nerve: &SimplicialComplex, n: usize) -> Result<DualComplex> {
    DualComplex::new(nerve, n, true)
}

impl DualComplex {
    /// `include_top = false` drops `D_∅`, leaving the boundary of the resolution.
    pub fn new(nerve: &SimplicialComplex, n: usize, include_top: bool) -> Result<Self> {
        if (n as isize) < nerve.dim() + 1 {
            return Err(Error::InvalidDimension(format!(
                "resolution dimension {n} is below dim N + 1 = {}",
                nerve.dim() + 1
            )));
        }
        let faces: Vec<Vec<Simplex>> = (0..=n)
            .map(|d| {
                let size = n - d;
                if size == 0 && !include_top {
                    Vec::new()
                } else {
                    nerve.simplices(size as isize - 1)
                }
            })
            .collect();
        let index: Vec<HashMap<Simplex, usize>> =
            faces.iter().map(|fs| fs.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect()).collect();
        let mut boundaries = Vec::with_capacity(n + 1);
        for d in 0..=n {
            if d == 0 {
                boundaries.push(IntegerMatrix::zeros(0, faces[0].len()));
                continue;
            }
            let mut m = IntegerMatrix::zeros(faces[d - 1].len(), faces[d].len());
            for (j, sigma) in faces[d].iter().enumerate() {
                for v in 0..nerve.num_vertices() {
                    if let Some((tau, pos)) = sigma.insert(v) {
                        if let Some(&i) = index[d - 1].get(&tau) {
                            m[(i, j)] = sign(pos);
                        }
                    }
                }
            }
            boundaries.push(m);
        }
        let complex = DualComplex { n, include_top, faces, index, boundaries };
        assert!(complex.chain_complex().is_complex(), "dual boundary maps must compose to zero");
        Ok(complex)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn includes_top(&self) -> bool {
        self.include_top
    }

    /// Labels of the `d`-dimensional faces.
    pub fn face_labels(&self, d: usize) -> &[Simplex] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self, d: usize) -> Vec<DualFace> {
        self.face_labels(d).iter().map(|s| DualFace { label: s.clone(), dim: d }).collect()
    }

    pub fn num_faces(&self, d: usize) -> usize {
        self.face_labels(d).len()
    }

    pub fn face_index(&self, d: usize, label: &Simplex) -> Option<usize> {
        self.index.get(d)?.get(label).copied()
    }

    /// Dimension of the face dual to `label`, when that face exists.
    pub fn dim_of(&self, label: &Simplex) -> Option<usize> {
        let d = self.n.checked_sub(label.len())?;
        self.face_index(d, label).map(|_| d)
    }

    /// `∂_d : C_d -> C_{d-1}`.
    pub fn boundary(&self, d: usize) -> &IntegerMatrix {
        &self.boundaries[d]
    }

    /// `[G : F]`, the coefficient of `G` in `∂F`.
    pub fn incidence(&self, g: &Simplex, f: &Simplex) -> i64 {
        match (self.dim_of(g), self.dim_of(f)) {
            (Some(dg), Some(df)) if dg + 1 == df => {
                let i = self.face_index(dg, g).expect("face");
                let j = self.face_index(df, f).expect("face");
                i64::try_from(&self.boundaries[df][(i, j)]).expect("incidence is a unit")
            }
            _ => 0,
        }
    }

    pub fn chain_complex(&self) -> ChainComplex<Simplex> {
        ChainComplex::new(0, self.faces.clone(), self.boundaries.clone())
    }
}

fn sign(pos: usize) -> BigInt {
    if pos % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicityReport {
    /// `H_0, ..., H_n` of the dual chain complex.
    pub homology: Vec<FGAbelianGroup>,
    /// `H_0 = Z` and every higher group vanishes.
    pub resolution_ready: bool,
}

pub fn acyclicity_report(d: &DualComplex) -> AcyclicityReport {
    let homology = d.chain_complex().homology_all();
    let resolution_ready = homology
        .iter()
        .enumerate()
        .all(|(i, h)| if i == 0 { *h == FGAbelianGroup::integers() } else { h.is_trivial() });
    AcyclicityReport { homology, resolution_ready }
}

/// A cellular cochain with values in a finitely generated abelian group,
/// stored densely in the face order of its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub group: FGAbelianGroup,
    pub values: Vec<GroupElement>,
}

impl Cochain {
    pub fn zero(d: &DualComplex, degree: usize, group: &FGAbelianGroup) -> Self {
        Cochain { degree, group: group.clone(), values: vec![group.zero(); d.num_faces(degree)] }
    }

    /// `d_{G,γ}`: `γ` on the face dual to `label`, zero elsewhere.
    pub fn indicator(d: &DualComplex, label: &Simplex, group: &FGAbelianGroup, gamma: GroupElement) -> Result<Self> {
        let degree = d.dim_of(label).ok_or_else(|| Error::NotASimplex(label.clone()))?;
        let mut c = Cochain::zero(d, degree, group);
        let i = d.face_index(degree, label).expect("face");
        c.values[i] = gamma;
        Ok(c)
    }

    /// Builds from sparse `(label, value)` pairs; missing faces are zero.
    pub fn from_values(
        d: &DualComplex,
        degree: usize,
        group: &FGAbelianGroup,
        values: impl IntoIterator<Item = (Simplex, GroupElement)>,
    ) -> Result<Self> {
        if degree > d.n() {
            return Err(Error::InvalidDimension(format!("cochain degree {degree} exceeds {}", d.n())));
        }
        let mut c = Cochain::zero(d, degree, group);
        for (label, mut value) in values {
            let i = d.face_index(degree, &label).ok_or_else(|| {
                Error::InvalidElement(format!("{label} does not label a {degree}-dimensional dual face"))
            })?;
            if value.0.len() != group.coordinates() {
                return Err(Error::InvalidElement(format!("value on {label} has the wrong number of coordinates")));
            }
            group.reduce(&mut value);
            c.values[i] = value;
        }
        Ok(c)
    }

    pub fn value(&self, d: &DualComplex, label: &Simplex) -> Option<&GroupElement> {
        d.face_index(self.degree, label).map(|i| &self.values[i])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(GroupElement::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.degree != other.degree || self.group != other.group {
            return Err(Error::DimensionMismatch("cochains of different degree or group".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| self.group.add(a, b)).collect();
        Ok(Cochain { degree: self.degree, group: self.group.clone(), values })
    }

    pub fn neg(&self) -> Cochain {
        Cochain { degree: self.degree, group: self.group.clone(), values: self.values.iter().map(|v| self.group.neg(v)).collect() }
    }

    /// Sparse `(label, value)` view of the nonzero entries.
    pub fn support<'a>(&'a self, d: &'a DualComplex) -> impl Iterator<Item = (&'a Simplex, &'a GroupElement)> + 'a {
        d.face_labels(self.degree).iter().zip(&self.values).filter(|(_, v)| !v.is_zero())
    }
}

/// `(δc)(F) = Σ_G [G:F] c(G)` over the codimension-one faces `G` of `F`.
pub fn coboundary(d: &DualComplex, c: &Cochain) -> Result<Cochain> {
    let k = c.degree + 1;
    if k > d.n() {
        return Err(Error::InvalidDimension(format!("no faces of dimension {k} in a {}-dimensional complex", d.n())));
    }
    if c.values.len() != d.num_faces(c.degree) {
        return Err(Error::DimensionMismatch("cochain does not match the complex".into()));
    }
    let bd = d.boundary(k);
    let group = &c.group;
    let values = (0..bd.cols())
        .map(|j| {
            (0..bd.rows()).filter(|&i| !bd[(i, j)].is_zero()).fold(group.zero(), |acc, i| {
                group.add(&acc, &group.scale(&bd[(i, j)], &c.values[i]))
            })
        })
        .collect();
    Ok(Cochain { degree: k, group: group.clone(), values })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleCheck {
    pub cocycle: bool,
    /// A face `E` of one dimension higher with `(δc)(E) ≠ 0`.
    pub witness: Option<Simplex>,
}

pub fn is_cocycle(d: &DualComplex, c: &Cochain) -> CocycleCheck {
    if c.degree >= d.n() {
        return CocycleCheck { cocycle: true, witness: None };
    }
    let dc = coboundary(d, c).expect("degree in range");
    let witness = dc.support(d).next().map(|(label, _)| label.clone());
    CocycleCheck { cocycle: witness.is_none(), witness }
}

/// Solves `δd = c` for a cocycle `c` of degree `k >= 1`, one coordinate of the
/// coefficient group at a time (over `Z` on free coordinates, modulo `q` on
/// torsion ones). `Ok(None)` means the complex is not acyclic in this degree.
pub fn solve_obstruction(d: &DualComplex, c: &Cochain) -> Result<Option<Cochain>> {
    if c.degree == 0 {
        return Err(Error::InvalidDimension("obstruction cochains have degree at least 1".into()));
    }
    if let Some(w) = is_cocycle(d, c).witness {
        return Err(Error::NotACocycle(w));
    }
    let delta = d.boundary(c.degree).transpose();
    let group = &c.group;
    let mut coords: Vec<Vec<BigInt>> = vec![Vec::new(); d.num_faces(c.degree - 1)];
    for j in 0..group.coordinates() {
        let rhs: Vec<BigInt> = c.values.iter().map(|v| v.0[j].clone()).collect();
        let Some(x) = solve_integer(&delta, &rhs, group.modulus(j)) else { return Ok(None) };
        for (face, xi) in coords.iter_mut().zip(x) {
            face.push(xi);
        }
    }
    let values = coords.into_iter().map(|cs| group.element(cs)).collect::<Result<Vec<_>>>()?;
    let solution = Cochain { degree: c.degree - 1, group: group.clone(), values };
    assert_eq!(coboundary(d, &solution)?, *c, "solution must reproduce the cocycle");
    Ok(Some(solution))
}
