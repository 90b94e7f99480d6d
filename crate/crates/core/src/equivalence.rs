//! Combinatorial equivalence: label-preserving simplicial isomorphisms.
//!
//! Backtracking over vertex assignments, most constrained vertex first, with
//! per-vertex invariants as the candidate filter. Unlabeled complexes go
//! through the same search with every edge carrying the same label.

use std::collections::HashSet;

use serde::Serialize;

use crate::simplicial::{LabeledComplex, Simplex, SimplicialComplex};

/// `map[v]` is the image in the target complex of source vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexMapping(pub Vec<usize>);

impl VertexMapping {
    pub fn identity(n: usize) -> Self {
        VertexMapping((0..n).collect())
    }

    pub fn apply(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|&v| self.0[v]).collect())
    }
}

/// Isomorphism-invariant summary; equal fingerprints are necessary for
/// isomorphism, never sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub f_vector: Vec<usize>,
    pub degrees: Vec<usize>,
    pub label_profiles: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct VertexInvariant {
    degree: usize,
    labels: Vec<u64>,
    facet_count: usize,
    facet_sizes: Vec<usize>,
}

fn vertex_invariants(lk: &LabeledComplex) -> Vec<VertexInvariant> {
    let k = lk.complex();
    let adj = k.neighbors();
    (0..k.num_vertices())
        .map(|v| {
            let mut labels: Vec<u64> = adj[v].iter().map(|&u| lk.label(u, v).expect("edge label")).collect();
            labels.sort_unstable();
            let mut facet_sizes: Vec<usize> =
                k.facets().iter().filter(|f| f.contains_vertex(v)).map(Simplex::len).collect();
            facet_sizes.sort_unstable();
            VertexInvariant { degree: adj[v].len(), labels, facet_count: facet_sizes.len(), facet_sizes }
        })
        .collect()
}

pub fn invariant_fingerprint(lk: &LabeledComplex) -> Fingerprint {
    let inv = vertex_invariants(lk);
    let mut degrees: Vec<usize> = inv.iter().map(|i| i.degree).collect();
    degrees.sort_unstable();
    let mut label_profiles: Vec<Vec<u64>> = inv.into_iter().map(|i| i.labels).collect();
    label_profiles.sort();
    Fingerprint { f_vector: lk.complex().f_vector(), degrees, label_profiles }
}

/// True iff `f` is a bijection taking facets onto facets and preserving every
/// edge label.
pub fn verify_isomorphism(a: &LabeledComplex, b: &LabeledComplex, f: &VertexMapping) -> bool {
    let n = a.num_vertices();
    if f.0.len() != n || b.num_vertices() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in &f.0 {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    let image: HashSet<Simplex> = a.complex().facets().iter().map(|s| f.apply(s)).collect();
    let target: HashSet<Simplex> = b.complex().facets().iter().cloned().collect();
    image == target && a.labels().iter().all(|(&(u, v), &m)| b.label(f.0[u], f.0[v]) == Some(m))
}

struct Search<'a> {
    a: &'a LabeledComplex,
    b: &'a LabeledComplex,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    /// Facets of `a` whose last vertex (in search order) is `order[i]`.
    closing: Vec<Vec<&'a Simplex>>,
    b_facets: HashSet<&'a Simplex>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        for (u, image) in self.map.iter().enumerate() {
            if let Some(x) = *image {
                if self.a.label(u, v) != self.b.label(x, w) {
                    return false;
                }
            }
        }
        true
    }

    fn facets_close(&self, depth: usize) -> bool {
        self.closing[depth].iter().all(|f| {
            let image = Simplex::new(f.vertices().iter().map(|&v| self.map[v].expect("mapped")).collect());
            self.b_facets.contains(&image)
        })
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for i in 0..self.candidates[v].len() {
            let w = self.candidates[v][i];
            if self.used[w] || !self.consistent(v, w) {
                continue;
            }
            self.map[v] = Some(w);
            self.used[w] = true;
            if self.facets_close(depth) && self.run(depth + 1) {
                return true;
            }
            self.map[v] = None;
            self.used[w] = false;
        }
        false
    }
}

/// Finds a label-preserving simplicial isomorphism `a -> b`, verified before
/// it is returned. Deterministic: candidates are tried in increasing order.
pub fn find_isomorphism(a: &LabeledComplex, b: &LabeledComplex) -> Option<VertexMapping> {
    let n = a.num_vertices();
    if n != b.num_vertices() || a.complex().facets().len() != b.complex().facets().len() {
        return None;
    }
    if invariant_fingerprint(a) != invariant_fingerprint(b) {
        return None;
    }
    let inv_a = vertex_invariants(a);
    let inv_b = vertex_invariants(b);
    let candidates: Vec<Vec<usize>> = inv_a.iter().map(|ia| (0..n).filter(|&w| inv_b[w] == *ia).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }

    // Static order: fewest candidates first, then most already-placed neighbors.
    let adj = a.complex().neighbors();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let linked = adj[v].iter().filter(|&&u| placed[u]).count();
                (usize::from(linked == 0 && !order.is_empty()), candidates[v].len(), std::cmp::Reverse(linked), v)
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    let position: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let mut closing: Vec<Vec<&Simplex>> = vec![Vec::new(); n];
    for f in a.complex().facets() {
        if let Some(last) = f.vertices().iter().map(|&v| position[v]).max() {
            closing[last].push(f);
        }
    }
    let mut search = Search {
        a,
        b,
        order,
        candidates,
        closing,
        b_facets: b.complex().facets().iter().collect(),
        map: vec![None; n],
        used: vec![false; n],
    };
    if !search.run(0) {
        return None;
    }
    let mapping = VertexMapping(search.map.into_iter().map(|x| x.expect("complete mapping")).collect());
    assert!(verify_isomorphism(a, b, &mapping), "search produced an invalid mapping");
    Some(mapping)
}

/// Unlabeled variant: every edge is treated as carrying the same label.
pub fn find_isomorphism_unlabeled(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<VertexMapping> {
    find_isomorphism(&LabeledComplex::uniform(a.clone(), 2), &LabeledComplex::uniform(b.clone(), 2))
}
