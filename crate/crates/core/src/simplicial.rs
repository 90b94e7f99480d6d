//! Finite abstract simplicial complexes stored as facet lists.
//!
//! Simplices keep their vertices sorted ascending; every orientation sign in
//! the crate is derived from that order. Constructions that create or drop
//! vertices (links, joins, subdivisions) renumber densely from zero.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simplex as a strictly increasing list of vertices. The empty list is the
/// empty simplex, of dimension -1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains_vertex(*v)).collect())
    }

    /// Adds `v`, returning the new simplex and the position `v` lands at.
    pub fn insert(&self, v: usize) -> Option<(Simplex, usize)> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut vs = self.0.clone();
                vs.insert(pos, v);
                Some((Simplex(vs), pos))
            }
        }
    }

    /// The codimension-one faces, paired with the index of the removed vertex.
    pub fn boundary_faces(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut vs = self.0.clone();
            vs.remove(i);
            (i, Simplex(vs))
        })
    }

    /// All faces with exactly `size` vertices, in lexicographic order.
    pub fn subsets(&self, size: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        if size > self.0.len() {
            return out;
        }
        let n = self.0.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(Simplex(idx.iter().map(|&i| self.0[i]).collect()));
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    fn map(&self, f: impl Fn(usize) -> usize) -> Simplex {
        Simplex::new(self.0.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Simplex {
    type Err = Error;

    /// Accepts `[0,1,2]`, `0,1,2` and `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Simplex::empty());
        }
        let vs = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("simplex {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let simplex = Simplex::new(vs.clone());
        if simplex.len() != vs.len() {
            return Err(Error::Parse(format!("simplex {s:?} repeats a vertex")));
        }
        Ok(simplex)
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

/// A finite simplicial complex given by its facets.
///
/// The complex whose only simplex is the empty simplex (no vertices, one empty
/// facet) plays the role of the empty complex `S^-1`; it is the link of every
/// facet and the unit for [`join`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Simplex>,
}

impl SimplicialComplex {
    /// Builds a complex from raw vertex lists, deduplicating and removing
    /// non-maximal faces. Vertices must be exactly `0..=max`.
    pub fn build(raw_facets: &[Vec<i64>]) -> Result<Self> {
        if raw_facets.is_empty() {
            return Err(Error::NoFacets);
        }
        let mut facets = Vec::with_capacity(raw_facets.len());
        for raw in raw_facets {
            let mut vs = Vec::with_capacity(raw.len());
            for &v in raw {
                if v < 0 {
                    return Err(Error::NegativeVertex(v));
                }
                vs.push(v as usize);
            }
            facets.push(Simplex::new(vs));
        }
        Self::from_simplices(facets)
    }

    /// Same as [`SimplicialComplex::build`] for already non-negative input.
    pub fn from_simplices(simplices: Vec<Simplex>) -> Result<Self> {
        if simplices.is_empty() {
            return Err(Error::NoFacets);
        }
        let facets = maximal(simplices);
        let num_vertices = facets
            .iter()
            .flat_map(|f| f.vertices().last().copied())
            .max()
            .map_or(0, |m| m + 1);
        let mut seen = vec![false; num_vertices];
        for f in &facets {
            for &v in f.vertices() {
                seen[v] = true;
            }
        }
        if let Some(gap) = seen.iter().position(|s| !s) {
            return Err(Error::VertexGap(gap));
        }
        Ok(SimplicialComplex { num_vertices, facets })
    }

    /// Builds from arbitrary simplices, renumbering the used vertices densely.
    /// Returns the complex and `map[new] = old`.
    pub fn from_simplices_relabeled(simplices: Vec<Simplex>) -> Result<(Self, Vec<usize>)> {
        let used: BTreeSet<usize> = simplices.iter().flat_map(|s| s.vertices().iter().copied()).collect();
        let map: Vec<usize> = used.into_iter().collect();
        let inverse: HashMap<usize, usize> = map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let renamed = simplices.iter().map(|s| s.map(|v| inverse[&v])).collect();
        Ok((Self::from_simplices(renamed)?, map))
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex { num_vertices: 0, facets: vec![Simplex::empty()] }
    }

    /// The full simplex on `k + 1` vertices.
    pub fn simplex(k: usize) -> Self {
        SimplicialComplex { num_vertices: k + 1, facets: vec![Simplex((0..=k).collect())] }
    }

    /// The boundary of the `k`-simplex, a combinatorial `(k-1)`-sphere.
    pub fn boundary_simplex(k: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        let full = Simplex((0..=k).collect());
        SimplicialComplex { num_vertices: k + 1, facets: full.subsets(k) }
    }

    /// Cycle graph on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let facets = (0..n).map(|i| Simplex::new(vec![i, (i + 1) % n])).collect();
        Self::from_simplices(facets).expect("cycle has facets")
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_empty_complex(&self) -> bool {
        self.num_vertices == 0
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// All `k`-simplices in lexicographic order; `k = -1` yields `[∅]`.
    pub fn simplices(&self, k: isize) -> Vec<Simplex> {
        if k < -1 {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let set: BTreeSet<Simplex> = self.facets.iter().flat_map(|f| f.subsets(size)).collect();
        set.into_iter().collect()
    }

    /// Every simplex including `∅`, grouped by dimension starting at -1.
    pub fn all_simplices(&self) -> Vec<Vec<Simplex>> {
        (-1..=self.dim()).map(|k| self.simplices(k)).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim()).map(|k| self.simplices(k).len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Sorted list of edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.simplices(1).iter().map(|e| (e.vertices()[0], e.vertices()[1])).collect()
    }

    /// Adjacency sets of the 1-skeleton.
    pub fn neighbors(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.num_vertices];
        for (u, v) in self.edges() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// The link of `s`, with vertices renumbered densely.
    pub fn link(&self, s: &Simplex) -> Result<Link> {
        let star: Vec<Simplex> =
            self.facets.iter().filter(|f| s.is_face_of(f)).map(|f| f.difference(s)).collect();
        if star.is_empty() {
            return Err(Error::NotASimplex(s.clone()));
        }
        let (complex, vertex_map) = Self::from_simplices_relabeled(star)?;
        Ok(Link { complex, vertex_map })
    }

    /// Applies `perm` (old vertex -> new vertex) to every facet.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.num_vertices {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.num_vertices
            )));
        }
        Self::from_simplices(self.facets.iter().map(|f| f.map(|v| perm[v])).collect())
    }

    /// True when every clique of the 1-skeleton spans a simplex.
    pub fn is_flag(&self) -> bool {
        clique_complex(self) == *self
    }
}

/// Output of [`SimplicialComplex::link`]; `vertex_map[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub complex: SimplicialComplex,
    pub vertex_map: Vec<usize>,
}

fn maximal(simplices: Vec<Simplex>) -> Vec<Simplex> {
    let mut sorted: Vec<Simplex> = simplices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    // Larger simplices first so containment only needs checking against kept ones.
    sorted.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Simplex> = Vec::new();
    for s in sorted {
        if !kept.iter().any(|k| k.len() > s.len() && s.is_face_of(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Join of two complexes; `L`'s vertices are shifted past `K`'s.
pub fn join(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    let shift = k.num_vertices;
    let mut facets = Vec::with_capacity(k.facets.len() * l.facets.len());
    for f in &k.facets {
        for g in &l.facets {
            let mut vs = f.vertices().to_vec();
            vs.extend(g.vertices().iter().map(|v| v + shift));
            facets.push(Simplex(vs));
        }
    }
    facets.sort();
    SimplicialComplex { num_vertices: k.num_vertices + l.num_vertices, facets }
}

pub fn cone(k: &SimplicialComplex) -> SimplicialComplex {
    join(k, &SimplicialComplex::simplex(0))
}

pub fn suspension(k: &SimplicialComplex) -> SimplicialComplex {
    join(k, &SimplicialComplex::boundary_simplex(1))
}

/// Barycentric subdivision together with the vertex -> simplex dictionary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `barycenters[v]` is the simplex of the original complex that vertex `v`
    /// subdivides. Ordered by dimension, then lexicographically.
    pub barycenters: Vec<Simplex>,
}

pub fn barycentric_with_map(k: &SimplicialComplex) -> Subdivision {
    let barycenters: Vec<Simplex> = (0..=k.dim()).flat_map(|d| k.simplices(d)).collect();
    if barycenters.is_empty() {
        return Subdivision { complex: SimplicialComplex::empty(), barycenters };
    }
    let index: HashMap<&Simplex, usize> = barycenters.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut facets = Vec::new();
    for f in &k.facets {
        for order in permutations(f.len()) {
            // chain {v_{o0}} ⊂ {v_{o0}, v_{o1}} ⊂ ... ⊂ f
            let mut chain = Vec::with_capacity(f.len());
            let mut acc = Vec::with_capacity(f.len());
            for &i in &order {
                acc.push(f.vertices()[i]);
                chain.push(index[&Simplex::new(acc.clone())]);
            }
            facets.push(Simplex::new(chain));
        }
    }
    let complex = SimplicialComplex::from_simplices(facets).expect("subdivision has facets");
    Subdivision { complex, barycenters }
}

pub fn barycentric(k: &SimplicialComplex) -> SimplicialComplex {
    barycentric_with_map(k).complex
}

/// Barycentric subdivision with every edge labeled 2.
pub fn barycentric_all_two(k: &SimplicialComplex) -> LabeledComplex {
    LabeledComplex::uniform(barycentric(k), 2)
}

/// The flag complex spanned by the cliques of `k`'s 1-skeleton.
pub fn clique_complex(k: &SimplicialComplex) -> SimplicialComplex {
    let adj = k.neighbors();
    let mut maximal_cliques = Vec::new();
    let all: BTreeSet<usize> = (0..k.num_vertices).collect();
    bron_kerbosch(&adj, Vec::new(), all, BTreeSet::new(), &mut maximal_cliques);
    if maximal_cliques.is_empty() {
        return SimplicialComplex::empty();
    }
    SimplicialComplex::from_simplices(maximal_cliques).expect("cliques cover every vertex")
}

fn bron_kerbosch(
    adj: &[BTreeSet<usize>],
    r: Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Simplex>,
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(Simplex::new(r));
        }
        return;
    }
    let pivot = *p.iter().chain(x.iter()).max_by_key(|u| adj[**u].intersection(&p).count()).unwrap();
    let candidates: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.intersection(&adj[v]).copied().collect();
        let x2 = x.intersection(&adj[v]).copied().collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.remove(&v);
        x.insert(v);
    }
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// A simplicial complex with an integer label `m >= 2` on every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledComplex {
    complex: SimplicialComplex,
    labels: BTreeMap<(usize, usize), u64>,
}

impl LabeledComplex {
    pub fn new(complex: SimplicialComplex, labels: impl IntoIterator<Item = ((usize, usize), u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((u, v), m) in labels {
            let key = (u.min(v), u.max(v));
            if m < 2 {
                return Err(Error::LabelTooSmall { edge: key, label: m });
            }
            map.insert(key, m);
        }
        let edges: BTreeSet<(usize, usize)> = complex.edges().into_iter().collect();
        if let Some(e) = edges.iter().find(|e| !map.contains_key(e)) {
            return Err(Error::MissingLabel(*e));
        }
        if let Some(e) = map.keys().find(|e| !edges.contains(e)) {
            return Err(Error::LabelOnNonEdge(*e));
        }
        Ok(LabeledComplex { complex, labels: map })
    }

    /// Every edge gets the same label.
    pub fn uniform(complex: SimplicialComplex, m: u64) -> Self {
        let labels = complex.edges().into_iter().map(|e| (e, m)).collect();
        LabeledComplex { complex, labels }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn labels(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.labels
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u64> {
        self.labels.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.complex.num_vertices()
    }

    /// Copy with one edge relabeled.
    pub fn with_label(&self, u: usize, v: usize, m: u64) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.insert((u.min(v), u.max(v)), m);
        LabeledComplex::new(self.complex.clone(), labels)
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let complex = self.complex.relabel(perm)?;
        let labels = self.labels.iter().map(|(&(u, v), &m)| ((perm[u], perm[v]), m));
        LabeledComplex::new(complex, labels)
    }
}
