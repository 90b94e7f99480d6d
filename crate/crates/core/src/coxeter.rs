//! Coxeter systems attached to edge-labeled complexes.
//!
//! Generators are the vertices; `m(s,t)` is the label of the edge `{s,t}` and
//! infinity when `{s,t}` is not an edge. Finiteness of special subgroups is
//! decided by matching Coxeter diagrams against the classification of finite
//! irreducible Coxeter groups, which needs only integer comparisons.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::simplicial::{LabeledComplex, Simplex, SimplicialComplex};

pub const DEFAULT_CLIQUE_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoxeterEntry {
    Finite(u64),
    Infinity,
}

impl CoxeterEntry {
    pub fn finite(self) -> Option<u64> {
        match self {
            CoxeterEntry::Finite(m) => Some(m),
            CoxeterEntry::Infinity => None,
        }
    }
}

impl Serialize for CoxeterEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CoxeterEntry::Finite(m) => s.serialize_u64(*m),
            CoxeterEntry::Infinity => s.serialize_str("inf"),
        }
    }
}

impl fmt::Display for CoxeterEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterEntry::Finite(m) => write!(f, "{m}"),
            CoxeterEntry::Infinity => write!(f, "inf"),
        }
    }
}

/// Symmetric Coxeter matrix; `generators[i]` is the vertex behind row `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterMatrix {
    pub generators: Vec<usize>,
    pub entries: Vec<Vec<CoxeterEntry>>,
}

impl CoxeterMatrix {
    /// Builds from an explicit table; validates symmetry, the unit diagonal and
    /// off-diagonal entries `>= 2`.
    pub fn new(entries: Vec<Vec<CoxeterEntry>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch("Coxeter matrix must be square".into()));
            }
            for (j, e) in row.iter().enumerate() {
                let ok = if i == j { *e == CoxeterEntry::Finite(1) } else { *e >= CoxeterEntry::Finite(2) && *e == entries[j][i] };
                if !ok {
                    return Err(Error::InvalidDimension(format!("invalid Coxeter entry m({i},{j}) = {e}")));
                }
            }
        }
        Ok(CoxeterMatrix { generators: (0..n).collect(), entries })
    }

    /// Rank-`k` matrix from the upper-triangular labels `m(i,j)` for `i < j`,
    /// `None` meaning infinity.
    pub fn from_pairs(k: usize, pairs: impl IntoIterator<Item = ((usize, usize), Option<u64>)>) -> Result<Self> {
        let mut entries = vec![vec![CoxeterEntry::Finite(2); k]; k];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = CoxeterEntry::Finite(1);
        }
        for ((i, j), m) in pairs {
            let e = m.map_or(CoxeterEntry::Infinity, CoxeterEntry::Finite);
            entries[i][j] = e;
            entries[j][i] = e;
        }
        Self::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> CoxeterEntry {
        self.entries[i][j]
    }

    /// Reorders generators; `perm[i]` is the new position of generator `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.rank();
        let mut entries = vec![vec![CoxeterEntry::Finite(1); n]; n];
        let mut generators = vec![0; n];
        for i in 0..n {
            generators[perm[i]] = self.generators[i];
            for j in 0..n {
                entries[perm[i]][perm[j]] = self.entries[i][j];
            }
        }
        CoxeterMatrix { generators, entries }
    }
}

/// Coxeter matrix of the labeled 1-skeleton, optionally restricted to a
/// vertex subset.
pub fn coxeter_matrix(lk: &LabeledComplex, subset: Option<&[usize]>) -> CoxeterMatrix {
    let generators: Vec<usize> = match subset {
        Some(s) => s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect(),
        None => (0..lk.num_vertices()).collect(),
    };
    let entries = generators
        .iter()
        .map(|&s| {
            generators
                .iter()
                .map(|&t| match (s == t, lk.label(s, t)) {
                    (true, _) => CoxeterEntry::Finite(1),
                    (false, Some(m)) => CoxeterEntry::Finite(m),
                    (false, None) => CoxeterEntry::Infinity,
                })
                .collect()
        })
        .collect();
    CoxeterMatrix { generators, entries }
}

/// Irreducible Coxeter types, finite ones by their classification name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u64),
    Infinite,
}

impl CoxeterType {
    pub fn is_finite(self) -> bool {
        self != CoxeterType::Infinite
    }

    /// Group order from the closed-form catalog.
    pub fn order(self) -> Option<BigInt> {
        let fact = |n: usize| (1..=n).fold(BigInt::one(), |acc, k| acc * k);
        let pow2 = |n: usize| BigInt::one() << n;
        Some(match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => pow2(n) * fact(n),
            CoxeterType::D(n) => pow2(n - 1) * fact(n),
            CoxeterType::E6 => BigInt::from(51_840u64),
            CoxeterType::E7 => BigInt::from(2_903_040u64),
            CoxeterType::E8 => BigInt::from(696_729_600u64),
            CoxeterType::F4 => BigInt::from(1_152u64),
            CoxeterType::H3 => BigInt::from(120u64),
            CoxeterType::H4 => BigInt::from(14_400u64),
            CoxeterType::I2(m) => BigInt::from(2 * m),
            CoxeterType::Infinite => return None,
        })
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            CoxeterType::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Vertices (generator labels) of the connected diagram component.
    pub generators: Vec<usize>,
    #[serde(rename = "type")]
    pub kind: CoxeterType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitenessVerdict {
    pub finite: bool,
    pub components: Vec<Component>,
    #[serde(serialize_with = "crate::serde_bigint::option::serialize")]
    pub order: Option<BigInt>,
}

/// Decides finiteness of `W` by splitting the diagram into components and
/// matching each against the finite types.
pub fn is_finite(m: &CoxeterMatrix) -> FinitenessVerdict {
    let n = m.rank();
    // Diagram edges: m >= 3 or infinity.
    let adj: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).filter(|&j| j != i && m.get(i, j) != CoxeterEntry::Finite(2)).collect()).collect();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            for &j in &adj[comp[i]] {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let kind = classify_component(m, &comp, &adj);
        components.push(Component { generators: comp.iter().map(|&i| m.generators[i]).collect(), kind });
    }
    components.sort_by(|a, b| a.generators.cmp(&b.generators));
    let finite = components.iter().all(|c| c.kind.is_finite());
    let order = finite.then(|| components.iter().map(|c| c.kind.order().expect("finite type")).product());
    FinitenessVerdict { finite, components, order }
}

fn classify_component(m: &CoxeterMatrix, comp: &[usize], adj: &[Vec<usize>]) -> CoxeterType {
    let k = comp.len();
    let label = |i: usize, j: usize| m.get(i, j).finite();
    if k == 1 {
        return CoxeterType::A(1);
    }
    let mut edges = 0;
    for &i in comp {
        for &j in &adj[i] {
            if i < j {
                match label(i, j) {
                    Some(_) => edges += 1,
                    None => return CoxeterType::Infinite,
                }
            }
        }
    }
    if k == 2 {
        return match label(comp[0], comp[1]).expect("finite label") {
            3 => CoxeterType::A(2),
            4 => CoxeterType::B(2),
            p => CoxeterType::I2(p),
        };
    }
    if edges != k - 1 {
        return CoxeterType::Infinite; // contains a cycle
    }
    let degree = |i: usize| adj[i].len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&i| degree(i) >= 3).collect();
    if branch.iter().any(|&i| degree(i) > 3) || branch.len() > 1 {
        return CoxeterType::Infinite;
    }
    if let Some(&center) = branch.first() {
        // Star-shaped tree; every edge must be simple.
        let all_simple = comp.iter().all(|&i| adj[i].iter().all(|&j| label(i, j) == Some(3)));
        if !all_simple {
            return CoxeterType::Infinite;
        }
        let mut arms: Vec<usize> = adj[center]
            .iter()
            .map(|&first| {
                let (mut prev, mut cur, mut len) = (center, first, 1);
                while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect();
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, _] => CoxeterType::D(k),
            [1, 2, 2] => CoxeterType::E6,
            [1, 2, 3] => CoxeterType::E7,
            [1, 2, 4] => CoxeterType::E8,
            _ => CoxeterType::Infinite,
        };
    }
    // A path: read the labels from one end.
    let end = *comp.iter().find(|&&i| degree(i) == 1).expect("path has an end");
    let mut labels = Vec::with_capacity(k - 1);
    let (mut prev, mut cur) = (usize::MAX, end);
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        labels.push(label(cur, next).expect("finite label"));
        prev = cur;
        cur = next;
    }
    let special: Vec<(usize, u64)> = labels.iter().copied().enumerate().filter(|&(_, l)| l != 3).collect();
    let at_end = |pos: usize| pos == 0 || pos == labels.len() - 1;
    match special.as_slice() {
        [] => CoxeterType::A(k),
        [(pos, 4)] if at_end(*pos) => CoxeterType::B(k),
        [(1, 4)] if k == 4 => CoxeterType::F4,
        [(pos, 5)] if at_end(*pos) && k == 3 => CoxeterType::H3,
        [(pos, 5)] if at_end(*pos) && k == 4 => CoxeterType::H4,
        _ => CoxeterType::Infinite,
    }
}

/// Result of a properness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperVerdict {
    pub proper: bool,
    /// Inclusion-minimal simplex whose special subgroup is infinite.
    pub offending: Option<Simplex>,
    /// Diagram decomposition of the offending simplex.
    pub offending_verdict: Option<FinitenessVerdict>,
}

fn finite_on(lk: &LabeledComplex, vertices: &[usize]) -> bool {
    is_finite(&coxeter_matrix(lk, Some(vertices))).finite
}

fn minimal_infinite(lk: &LabeledComplex, s: &Simplex) -> Simplex {
    let mut current = s.vertices().to_vec();
    let mut i = 0;
    while i < current.len() {
        let mut smaller = current.clone();
        smaller.remove(i);
        if !smaller.is_empty() && !finite_on(lk, &smaller) {
            current = smaller;
        } else {
            i += 1;
        }
    }
    Simplex::new(current)
}

fn proper_verdict(lk: &LabeledComplex, bad: Option<&Simplex>) -> ProperVerdict {
    match bad {
        None => ProperVerdict { proper: true, offending: None, offending_verdict: None },
        Some(s) => {
            let minimal = minimal_infinite(lk, s);
            let verdict = is_finite(&coxeter_matrix(lk, Some(minimal.vertices())));
            ProperVerdict { proper: false, offending: Some(minimal), offending_verdict: Some(verdict) }
        }
    }
}

/// Properness: every simplex spans a finite special subgroup. Only facets
/// are tested, since special subgroups of finite Coxeter groups are finite.
pub fn is_proper_labeling(lk: &LabeledComplex) -> ProperVerdict {
    let bad = lk.complex().facets().par_iter().find_first(|f| !finite_on(lk, f.vertices()));
    proper_verdict(lk, bad)
}

/// Properness tested on every nonempty simplex, not only facets.
pub fn is_proper_labeling_exhaustive(lk: &LabeledComplex) -> ProperVerdict {
    let k = lk.complex();
    let all: Vec<Simplex> = (0..=k.dim()).flat_map(|d| k.simplices(d)).collect();
    proper_verdict(lk, all.iter().find(|s| !finite_on(lk, s.vertices())))
}

/// The nerve `L(W,S)`: all vertex sets of size `<= max_rank` spanning a finite
/// special subgroup. Enumeration walks cliques of the 1-skeleton only, since
/// non-edges carry infinite labels.
pub fn coxeter_nerve(lk: &LabeledComplex, max_rank: usize, budget: usize) -> Result<SimplicialComplex> {
    let k = lk.complex();
    let needed = (k.dim() + 1).max(0) as usize;
    if max_rank < needed {
        return Err(Error::InvalidDimension(format!("max_rank {max_rank} is below dim + 1 = {needed}")));
    }
    if k.is_empty_complex() {
        return Ok(SimplicialComplex::empty());
    }
    let adj = k.neighbors();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> =
        (0..k.num_vertices()).rev().map(|v| (vec![v], adj[v].iter().copied().filter(|&w| w > v).collect())).collect();
    while let Some((set, candidates)) = stack.pop() {
        found.push(set.clone());
        if found.len() > budget {
            return Err(Error::BudgetExceeded { budget, visited: found.len() });
        }
        if set.len() == max_rank {
            continue;
        }
        for (idx, &c) in candidates.iter().enumerate().rev() {
            let mut bigger = set.clone();
            bigger.push(c);
            if finite_on(lk, &bigger) {
                let rest = candidates[idx + 1..].iter().copied().filter(|w| adj[c].contains(w)).collect();
                stack.push((bigger, rest));
            }
        }
    }
    log::debug!("coxeter nerve: {} finite simplices enumerated", found.len());
    let mut non_maximal: HashSet<Vec<usize>> = HashSet::new();
    for s in found.iter().filter(|s| s.len() > 1) {
        for i in 0..s.len() {
            let mut sub = s.clone();
            sub.remove(i);
            non_maximal.insert(sub);
        }
    }
    let facets = found.into_iter().filter(|s| !non_maximal.contains(s)).map(Simplex::new).collect();
    SimplicialComplex::from_simplices(facets)
}

/// Asphericity criterion `L(W,S) = N`. Errors on improper labelings.
pub fn is_aspherical(lk: &LabeledComplex) -> Result<bool> {
    Ok(asphericity_witness(lk)?.is_none())
}

/// `None` when aspherical; otherwise a minimal vertex set spanning a finite
/// special subgroup that is not a simplex of the complex.
pub fn asphericity_witness(lk: &LabeledComplex) -> Result<Option<Simplex>> {
    asphericity_witness_with_budget(lk, DEFAULT_CLIQUE_BUDGET)
}

pub fn asphericity_witness_with_budget(lk: &LabeledComplex, budget: usize) -> Result<Option<Simplex>> {
    let proper = is_proper_labeling(lk);
    if let Some(s) = proper.offending {
        return Err(Error::NotProper(s));
    }
    let k = lk.complex();
    // One size beyond the facets is enough to see any extra simplex.
    let cap = ((k.dim() + 2).max(1) as usize).min(k.num_vertices().max(1));
    let nerve = coxeter_nerve(lk, cap, budget)?;
    if nerve == *k {
        return Ok(None);
    }
    let extra = nerve.facets().iter().find(|f| !k.contains(f)).expect("nerve contains the complex and differs");
    for size in 2..=extra.len() {
        if let Some(s) = extra.subsets(size).into_iter().find(|s| !k.contains(s)) {
            return Ok(Some(s));
        }
    }
    unreachable!("a non-face has a minimal non-face")
}

fn superscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).expect("digit") as usize]).collect()
}

/// `s0 s1 ... | s0², ..., (si sj)^m, ...` with infinite pairs omitted.
pub fn presentation(lk: &LabeledComplex) -> String {
    let n = lk.num_vertices();
    if n == 0 {
        return String::new();
    }
    let gens: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut relators: Vec<String> = gens.iter().map(|g| format!("{g}²")).collect();
    let labels: &BTreeMap<(usize, usize), u64> = lk.labels();
    relators.extend(labels.iter().map(|(&(i, j), &m)| format!("(s{i} s{j}){}", superscript(m))));
    format!("{} | {}", gens.join(" "), relators.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{barycentric_all_two, suspension};

    fn triangle(p: u64, q: u64, r: u64) -> CoxeterMatrix {
        CoxeterMatrix::from_pairs(3, [((0, 1), Some(p)), ((1, 2), Some(q)), ((0, 2), Some(r))]).unwrap()
    }

    fn path(labels: &[u64]) -> CoxeterMatrix {
        CoxeterMatrix::from_pairs(labels.len() + 1, labels.iter().enumerate().map(|(i, &m)| ((i, i + 1), Some(m))))
            .unwrap()
    }

    fn pentagon() -> LabeledComplex {
        LabeledComplex::uniform(SimplicialComplex::cycle(5), 2)
    }

    #[test]
    fn pentagon_matrix() {
        let m = coxeter_matrix(&pentagon(), None);
        for i in 0..5 {
            assert_eq!(m.get(i, (i + 1) % 5), CoxeterEntry::Finite(2));
            assert_eq!(m.get(i, (i + 2) % 5), CoxeterEntry::Infinity);
        }
        let sub = coxeter_matrix(&pentagon(), Some(&[0, 2]));
        assert_eq!(sub.get(0, 1), CoxeterEntry::Infinity);
    }

    #[test]
    fn rank_two() {
        let edge = LabeledComplex::new(SimplicialComplex::simplex(1), [((0, 1), 5)]).unwrap();
        let m = coxeter_matrix(&edge, None);
        assert_eq!(m.get(0, 1), CoxeterEntry::Finite(5));
        let v = is_finite(&m);
        assert!(v.finite);
        assert_eq!(v.components[0].kind, CoxeterType::I2(5));
        assert_eq!(v.order, Some(BigInt::from(10)));
    }

    #[test]
    fn triangles() {
        let h3 = is_finite(&triangle(2, 3, 5));
        assert!(h3.finite);
        assert_eq!(h3.components.len(), 1);
        assert_eq!(h3.components[0].kind, CoxeterType::H3);
        assert_eq!(h3.order, Some(BigInt::from(120)));
        assert!(!is_finite(&triangle(2, 3, 6)).finite);
        assert!(!is_finite(&triangle(3, 3, 3)).finite);
        let split = is_finite(&triangle(2, 2, 7));
        assert_eq!(split.components.len(), 2);
        assert_eq!(split.order, Some(BigInt::from(28)));
    }

    #[test]
    fn catalog_orders() {
        let cases: Vec<(CoxeterMatrix, CoxeterType, u64)> = vec![
            (path(&[3, 3]), CoxeterType::A(3), 24),
            (path(&[4, 3, 3]), CoxeterType::B(4), 384),
            (path(&[3, 3, 4]), CoxeterType::B(4), 384),
            (path(&[3, 4, 3]), CoxeterType::F4, 1152),
            (path(&[5, 3, 3]), CoxeterType::H4, 14400),
            (path(&[3, 3, 5]), CoxeterType::H4, 14400),
        ];
        for (m, kind, order) in cases {
            let v = is_finite(&m);
            assert_eq!(v.components[0].kind, kind);
            assert_eq!(v.order, Some(BigInt::from(order)));
        }
        assert!(!is_finite(&path(&[4, 4])).finite);
        assert!(!is_finite(&path(&[3, 6])).finite);
        assert!(!is_finite(&path(&[3, 5, 3])).finite);
        assert!(!is_finite(&path(&[5, 3, 3, 3])).finite);
    }

    fn star(arms: &[usize]) -> CoxeterMatrix {
        let mut pairs = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                pairs.push(((prev, next), Some(3)));
                prev = next;
                next += 1;
            }
        }
        CoxeterMatrix::from_pairs(next, pairs).unwrap()
    }

    #[test]
    fn branched_diagrams() {
        assert_eq!(is_finite(&star(&[1, 1, 1])).components[0].kind, CoxeterType::D(4));
        // D6: 2^5 * 6!
        assert_eq!(is_finite(&star(&[1, 1, 3])).order, Some(BigInt::from(32 * 720)));
        assert_eq!(is_finite(&star(&[1, 2, 2])).order, Some(BigInt::from(51_840)));
        assert_eq!(is_finite(&star(&[1, 2, 3])).order, Some(BigInt::from(2_903_040)));
        assert_eq!(is_finite(&star(&[1, 2, 4])).order, Some(BigInt::from(696_729_600)));
        assert!(!is_finite(&star(&[2, 2, 2])).finite);
        assert!(!is_finite(&star(&[1, 2, 5])).finite);
        assert!(!is_finite(&star(&[1, 1, 1, 1])).finite);
    }

    #[test]
    fn infinity_kills_finiteness() {
        let m = CoxeterMatrix::from_pairs(2, [((0, 1), None)]).unwrap();
        assert!(!is_finite(&m).finite);
        assert_eq!(is_finite(&m).order, None);
    }

    #[test]
    fn properness() {
        assert!(is_proper_labeling(&pentagon()).proper);
        let tri = LabeledComplex::new(SimplicialComplex::simplex(2), [((0, 1), 2), ((1, 2), 3), ((0, 2), 6)]).unwrap();
        let v = is_proper_labeling(&tri);
        assert!(!v.proper);
        assert_eq!(v.offending, Some(Simplex::new(vec![0, 1, 2])));
        assert_eq!(is_proper_labeling_exhaustive(&tri).offending, v.offending);
        let sd = barycentric_all_two(&SimplicialComplex::boundary_simplex(3));
        assert!(is_proper_labeling(&sd).proper);
    }

    #[test]
    fn offending_simplex_is_minimal() {
        // 4-simplex facet with one 3-3-3 cycle inside it
        let k = SimplicialComplex::simplex(3);
        let labels = [((0, 1), 3), ((1, 2), 3), ((0, 2), 3), ((0, 3), 2), ((1, 3), 2), ((2, 3), 2)];
        let lk = LabeledComplex::new(k, labels).unwrap();
        assert_eq!(is_proper_labeling(&lk).offending, Some(Simplex::new(vec![0, 1, 2])));
    }

    #[test]
    fn nerves() {
        let nerve = coxeter_nerve(&pentagon(), 5, DEFAULT_CLIQUE_BUDGET).unwrap();
        assert_eq!(nerve, SimplicialComplex::cycle(5));
        let tri = LabeledComplex::uniform(SimplicialComplex::cycle(3), 2);
        assert_eq!(coxeter_nerve(&tri, 3, DEFAULT_CLIQUE_BUDGET).unwrap(), SimplicialComplex::simplex(2));
        let edge = LabeledComplex::new(SimplicialComplex::simplex(1), [((0, 1), 3)]).unwrap();
        assert_eq!(coxeter_nerve(&edge, 2, DEFAULT_CLIQUE_BUDGET).unwrap(), SimplicialComplex::simplex(1));
        assert!(coxeter_nerve(&tri, 1, DEFAULT_CLIQUE_BUDGET).is_err());
        assert!(matches!(coxeter_nerve(&tri, 3, 2), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn asphericity() {
        assert!(is_aspherical(&pentagon()).unwrap());
        let tri = LabeledComplex::uniform(SimplicialComplex::cycle(3), 2);
        assert!(!is_aspherical(&tri).unwrap());
        assert_eq!(asphericity_witness(&tri).unwrap(), Some(Simplex::new(vec![0, 1, 2])));
        assert!(is_aspherical(&barycentric_all_two(&SimplicialComplex::boundary_simplex(3))).unwrap());
        assert!(is_aspherical(&barycentric_all_two(&suspension(&SimplicialComplex::cycle(3)))).unwrap());
        let bad = LabeledComplex::new(SimplicialComplex::simplex(2), [((0, 1), 3), ((1, 2), 3), ((0, 2), 3)]).unwrap();
        assert!(matches!(is_aspherical(&bad), Err(Error::NotProper(_))));
    }

    #[test]
    fn presentations() {
        let edge = LabeledComplex::new(SimplicialComplex::simplex(1), [((0, 1), 3)]).unwrap();
        assert_eq!(presentation(&edge), "s0 s1 | s0², s1², (s0 s1)³");
        let p = presentation(&pentagon());
        assert_eq!(p.matches("²").count(), 10);
        assert_eq!(p.matches('(').count(), 5);
        assert_eq!(presentation(&LabeledComplex::uniform(SimplicialComplex::empty(), 2)), "");
        let big = LabeledComplex::new(SimplicialComplex::simplex(1), [((0, 1), 12)]).unwrap();
        assert!(presentation(&big).ends_with("(s0 s1)¹²"));
    }
}
