//! Independent reference implementations used to cross-check the library.
//! Nothing here calls into the crate under test.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Rank over the rationals by fraction-free elimination.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let (f, g) = (a[rank][c].clone(), a[i][c].clone());
            for j in c..cols {
                let v = &a[i][j] * &f - &a[rank][j] * &g;
                a[i][j] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `F_p`.
pub fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).expect("invertible");
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, piv);
        let s = inv(a[rank][c]);
        for j in 0..cols {
            a[rank][j] = a[rank][j] * s % p;
        }
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Every face of the facets, grouped by size (index 0 holds the empty face).
pub fn faces(facets: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut by_size: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        for mask in 0u64..(1 << f.len()) {
            let s: Vec<usize> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            by_size.entry(s.len()).or_default().insert(s);
        }
    }
    let top = by_size.keys().max().copied().unwrap_or(0);
    (0..=top).map(|k| by_size.get(&k).map(|s| s.iter().cloned().collect()).unwrap_or_default()).collect()
}

/// Augmented boundary from faces of size `k` to size `k - 1`, as rows x cols.
fn boundary(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let index: BTreeMap<&Vec<usize>, usize> = lower.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (j, s) in upper.iter().enumerate() {
        for i in 0..s.len() {
            let mut t = s.clone();
            t.remove(i);
            m[index[&t]][j] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Reduced homology data per degree `-1..=dim`: `(betti, dims over F_p for each prime)`.
pub fn reduced_homology_oracle(facets: &[Vec<usize>], primes: &[i64]) -> Vec<(usize, Vec<usize>)> {
    let fs = faces(facets);
    let ranks = |field: Option<i64>| -> Vec<usize> {
        // ranks[k] = rank of the map from size-k faces to size-(k-1) faces
        (0..=fs.len())
            .map(|k| {
                if k == 0 || k >= fs.len() {
                    return 0;
                }
                let m = boundary(&fs[k - 1], &fs[k]);
                match field {
                    None => rank_rational(&m),
                    Some(p) => rank_mod_p(&m, p),
                }
            })
            .collect()
    };
    let rq = ranks(None);
    let rp: Vec<Vec<usize>> = primes.iter().map(|&p| ranks(Some(p))).collect();
    (0..fs.len())
        .map(|k| {
            let dim = |r: &Vec<usize>| fs[k].len() - r[k] - r[k + 1];
            (dim(&rq), rp.iter().map(dim).collect())
        })
        .collect()
}

/// Order of `Z^n / A Z^n` for square nonsingular `A`, by enumerating the
/// subgroup generated by the columns inside `(Z/d)^n`, `d = |det A|`.
pub fn brute_cokernel_order(a: &[Vec<i64>], det: i64) -> u64 {
    let n = a.len();
    let d = det.abs();
    if d == 1 {
        return 1;
    }
    let gens: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| a[i][j].rem_euclid(d)).collect()).collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let start = vec![0; n];
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| (a + b) % d).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    (d as u64).pow(n as u32) / seen.len() as u64
}

pub fn det_i64(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                a[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &x)| x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * a[0][j] * det_i64(&minor)
        })
        .sum()
}

/// Triangle group with labels p, q, r is finite iff 1/p + 1/q + 1/r > 1.
pub fn triangle_finite(p: u64, q: u64, r: u64) -> bool {
    q * r + p * r + p * q > p * q * r
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// A labeled complex in plain data: sorted facets and labels on sorted edges.
#[derive(Clone, Debug)]
pub struct Plain {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    pub labels: BTreeMap<(usize, usize), u64>,
}

impl Plain {
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut e = BTreeSet::new();
        for f in &self.facets {
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    e.insert((f[i].min(f[j]), f[i].max(f[j])));
                }
            }
        }
        e
    }
}

fn canonical_facets(facets: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    facets
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect()
}

/// Tries every bijection.
pub fn brute_isomorphic(a: &Plain, b: &Plain) -> bool {
    if a.n != b.n {
        return false;
    }
    let target = canonical_facets(&b.facets);
    permutations(a.n).into_iter().any(|p| {
        let image: Vec<Vec<usize>> = a.facets.iter().map(|f| f.iter().map(|&v| p[v]).collect()).collect();
        canonical_facets(&image) == target
            && a.labels.iter().all(|(&(u, v), m)| b.labels.get(&(p[u].min(p[v]), p[u].max(p[v]))) == Some(m))
    })
}

/// Random complex on exactly `n` vertices with facets of size 1..=max_size and
/// labels drawn from `2..=max_label`.
pub fn random_plain(rng: &mut impl Rng, n: usize, max_size: usize, max_label: u64) -> Plain {
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let count = rng.gen_range(1..=n + 2);
    for _ in 0..count {
        let size = rng.gen_range(1..=max_size.min(n));
        let mut f: Vec<usize> = rand::seq::index::sample(rng, n, size).into_vec();
        f.sort_unstable();
        facets.push(f);
    }
    let covered: BTreeSet<usize> = facets.iter().flatten().copied().collect();
    for v in 0..n {
        if !covered.contains(&v) {
            let w = rng.gen_range(0..n);
            let mut f = if w == v { vec![v] } else { vec![v.min(w), v.max(w)] };
            f.dedup();
            facets.push(f);
        }
    }
    // keep only maximal facets
    let set = canonical_facets(&facets);
    let facets: Vec<Vec<usize>> = set
        .iter()
        .filter(|f| !set.iter().any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v))))
        .cloned()
        .collect();
    let mut p = Plain { n, facets, labels: BTreeMap::new() };
    p.labels = p.edges().into_iter().map(|e| (e, rng.gen_range(2..=max_label))).collect();
    p
}

/// Bounded search for an integer solution of `a x = b`.
pub fn brute_solve(a: &[Vec<i64>], b: &[i64], bound: i64) -> bool {
    let cols = a.first().map_or(0, Vec::len);
    let mut x = vec![-bound; cols];
    loop {
        if a.iter().zip(b).all(|(row, &bi)| row.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>() == bi) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == cols {
                return false;
            }
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = -bound;
            i += 1;
        }
    }
}

/// Determinant by cofactor-free Bareiss elimination on a copy.
pub fn det_big(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
            a.swap(i, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::from(1)
    } else {
        sign * &a[n - 1][n - 1]
    }
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect())
        .collect()
}

pub fn is_unit(x: &BigInt) -> bool {
    x.abs() == BigInt::from(1)
}
