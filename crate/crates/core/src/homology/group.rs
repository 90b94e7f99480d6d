use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::snf::invariant_factors;
use crate::error::{Error, Result};

/// `Z^rank ⊕ Z/q1 ⊕ ... ⊕ Z/qk` with `q1 | q2 | ... | qk`, all `qi >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FGAbelianGroup {
    pub rank: usize,
    #[serde(with = "crate::serde_bigint::vec")]
    pub torsion: Vec<BigInt>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    pub fn cyclic(q: u64) -> Self {
        Self::new(0, vec![BigInt::from(q)])
    }

    /// Normalizes arbitrary torsion orders into divisor-chain form; entries
    /// equal to 0 count as free summands and ±1 disappear.
    pub fn new(rank: usize, orders: Vec<BigInt>) -> Self {
        let extra_free = orders.iter().filter(|q| q.is_zero()).count();
        let finite: Vec<BigInt> = orders.into_iter().filter(|q| !q.is_zero()).map(|q| q.abs()).collect();
        let diag = Matrix::diagonal(finite.len(), finite.len(), &finite);
        let torsion = invariant_factors(&diag).into_iter().filter(|d| !d.is_one()).collect();
        FGAbelianGroup { rank: rank + extra_free, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().fold(BigInt::one(), |acc, q| acc * q))
    }

    /// Number of coordinates of an element.
    pub fn coordinates(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Modulus for coordinate `i`; `None` for free coordinates.
    pub fn modulus(&self, i: usize) -> Option<&BigInt> {
        i.checked_sub(self.rank).map(|t| &self.torsion[t])
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![BigInt::zero(); self.coordinates()])
    }

    /// Reduces torsion coordinates into `[0, q)`.
    pub fn element(&self, coords: Vec<BigInt>) -> Result<GroupElement> {
        if coords.len() != self.coordinates() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates for {self}, got {}",
                self.coordinates(),
                coords.len()
            )));
        }
        let mut e = GroupElement(coords);
        self.reduce(&mut e);
        Ok(e)
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<GroupElement> {
        self.element(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn reduce(&self, e: &mut GroupElement) {
        for (i, x) in e.0.iter_mut().enumerate() {
            if let Some(q) = self.modulus(i) {
                *x = x.mod_floor(q);
            }
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut e = GroupElement(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
        self.reduce(&mut e);
        e
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        let mut e = GroupElement(a.0.iter().map(|x| k * x).collect());
        self.reduce(&mut e);
        e
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.scale(&BigInt::from(-1), a)
    }

    /// Every element; only for finite groups of small order.
    pub fn elements(&self) -> Vec<GroupElement> {
        assert!(self.is_finite(), "cannot enumerate an infinite group");
        let mut out = vec![GroupElement(Vec::new())];
        for q in &self.torsion {
            let q = q.to_u64().expect("small torsion");
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..q).map(move |x| {
                        let mut c = e.0.clone();
                        c.push(BigInt::from(x));
                        GroupElement(c)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|q| format!("Z/{q}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coordinates of an element of an [`FGAbelianGroup`]: free part first, then
/// one residue per torsion summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(#[serde(with = "crate::serde_bigint::vec")] pub Vec<BigInt>);

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }
}
