//! Homology-manifold and generalized-homology-sphere recognition.
//!
//! A complex is a polyhedral homology `m`-manifold when it is pure of
//! dimension `m` and the link of every `k`-simplex has the integral homology
//! of `S^{m-k-1}`. It is a generalized homology sphere `GHS^{n-1}` when it is
//! additionally an integral homology `(n-1)`-sphere itself.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{reduced_homology_all, FGAbelianGroup};
use crate::simplicial::{Simplex, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Defect {
    /// A facet whose dimension differs from the expected one.
    Impure { facet: Simplex, dim: isize },
    /// Reduced homology of `link(simplex)` (of the whole complex when the
    /// simplex is empty) differs from that of the expected sphere.
    Homology { simplex: Simplex, degree: isize, expected: FGAbelianGroup, actual: FGAbelianGroup },
}

#[derive(Clone, Debug, Serialize)]
pub struct GhsReport {
    pub verdict: bool,
    pub dimension: usize,
    pub defects: Vec<Defect>,
    pub links_checked: usize,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Stop after the first dimension that produces a defect.
    pub stop_at_first: bool,
}

/// Degrees where the reduced homology of `k` differs from that of `S^d`.
/// `d = -1` is the empty sphere, realised by the complex `{∅}`.
pub fn sphere_homology_defects(k: &SimplicialComplex, d: isize) -> Vec<(isize, FGAbelianGroup, FGAbelianGroup)> {
    let actual = reduced_homology_all(k);
    let top = k.dim().max(d);
    (-1..=top)
        .filter_map(|deg| {
            let got = actual.get((deg + 1) as usize).cloned().unwrap_or_default();
            let want = if deg == d { FGAbelianGroup::integers() } else { FGAbelianGroup::trivial() };
            (got != want).then_some((deg, want, got))
        })
        .collect()
}

pub fn has_sphere_homology(k: &SimplicialComplex, d: isize) -> bool {
    sphere_homology_defects(k, d).is_empty()
}

fn homology_defects(k: &SimplicialComplex, s: &Simplex, sphere_dim: isize) -> Vec<Defect> {
    let link = if s.is_empty() { k.clone() } else { k.link(s).expect("simplex of the complex").complex };
    sphere_homology_defects(&link, sphere_dim)
        .into_iter()
        .map(|(degree, expected, actual)| Defect::Homology { simplex: s.clone(), degree, expected, actual })
        .collect()
}

fn impure(k: &SimplicialComplex, m: isize) -> Vec<Defect> {
    k.facets().iter().filter(|f| f.dim() != m).map(|f| Defect::Impure { facet: f.clone(), dim: f.dim() }).collect()
}

fn link_checks(k: &SimplicialComplex, m: isize, opts: CheckOptions, defects: &mut Vec<Defect>) -> usize {
    let mut checked = 0;
    for dim in 0..=m {
        let simplices = k.simplices(dim);
        checked += simplices.len();
        let found: Vec<Defect> =
            simplices.par_iter().flat_map_iter(|s| homology_defects(k, s, m - dim - 1)).collect();
        let hit = !found.is_empty();
        defects.extend(found);
        if hit && opts.stop_at_first {
            break;
        }
    }
    checked
}

/// Polyhedral homology `m`-manifold test with a full defect list.
pub fn is_polyhedral_homology_manifold(k: &SimplicialComplex, m: isize) -> Result<GhsReport> {
    is_polyhedral_homology_manifold_with(k, m, CheckOptions::default())
}

pub fn is_polyhedral_homology_manifold_with(k: &SimplicialComplex, m: isize, opts: CheckOptions) -> Result<GhsReport> {
    if m < 0 {
        return Err(Error::InvalidDimension(format!("manifold dimension {m} is negative")));
    }
    let start = Instant::now();
    let mut defects = impure(k, m);
    let mut links_checked = 0;
    if defects.is_empty() {
        links_checked = link_checks(k, m, opts, &mut defects);
    }
    Ok(GhsReport { verdict: defects.is_empty(), dimension: m as usize, defects, links_checked, wall_time: start.elapsed() })
}

/// Generalized homology sphere test for the nerve of an `n`-dimensional
/// resolution: a homology `(n-1)`-manifold with the homology of `S^{n-1}`.
pub fn is_ghs(k: &SimplicialComplex, n: isize) -> Result<GhsReport> {
    is_ghs_with(k, n, CheckOptions::default())
}

pub fn is_ghs_with(k: &SimplicialComplex, n: isize, opts: CheckOptions) -> Result<GhsReport> {
    if n < 1 {
        return Err(Error::InvalidDimension(format!("resolution dimension {n} must be at least 1")));
    }
    let start = Instant::now();
    let m = n - 1;
    let mut defects = impure(k, m);
    let mut links_checked = 0;
    if defects.is_empty() {
        defects.extend(homology_defects(k, &Simplex::empty(), m));
        if defects.is_empty() || !opts.stop_at_first {
            links_checked = link_checks(k, m, opts, &mut defects);
        }
    }
    log::debug!("GHS check in dimension {m}: {links_checked} links, {} defects", defects.len());
    Ok(GhsReport { verdict: defects.is_empty(), dimension: m as usize, defects, links_checked, wall_time: start.elapsed() })
}
