//! Library results against the independent reference implementations.

mod common;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cornerkit::coxeter::{is_finite, CoxeterMatrix};
use cornerkit::corpus;
use cornerkit::equivalence::{find_isomorphism, verify_isomorphism};
use cornerkit::homology::{cokernel, reduced_homology_all, solve_integer, FGAbelianGroup};
use cornerkit::simplicial::{suspension, LabeledComplex, Simplex, SimplicialComplex};
use cornerkit::IntegerMatrix;

use common::Plain;

const PRIMES: [i64; 3] = [2, 3, 5];

fn facets_of(k: &SimplicialComplex) -> Vec<Vec<usize>> {
    k.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

fn torsion_count(g: &FGAbelianGroup, p: i64) -> usize {
    g.torsion.iter().filter(|t| (*t % p) == BigInt::from(0)).count()
}

/// Universal coefficients: dim H̃_k(F_p) = b_k + t_k(p) + t_{k-1}(p).
fn check_against_oracle(k: &SimplicialComplex) {
    let groups = reduced_homology_all(k);
    let oracle = common::reduced_homology_oracle(&facets_of(k), &PRIMES);
    assert_eq!(groups.len(), oracle.len());
    for (deg, (g, (betti, fp))) in groups.iter().zip(&oracle).enumerate() {
        assert_eq!(g.rank, *betti, "betti number in degree {}", deg as isize - 1);
        for (i, &p) in PRIMES.iter().enumerate() {
            let below = if deg > 0 { torsion_count(&groups[deg - 1], p) } else { 0 };
            assert_eq!(fp[i], g.rank + torsion_count(g, p) + below, "F_{p} dimension in degree {}", deg as isize - 1);
        }
    }
}

#[test]
fn homology_matches_rank_oracle_on_corpus() {
    for n in 1..=5 {
        check_against_oracle(&SimplicialComplex::boundary_simplex(n));
    }
    check_against_oracle(&SimplicialComplex::cycle(7));
    check_against_oracle(&corpus::rp2_6().complex);
    check_against_oracle(&suspension(&corpus::rp2_6().complex));
    check_against_oracle(&corpus::poincare16().complex);
}

#[test]
fn homology_matches_rank_oracle_on_random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(3..=8);
        let p = common::random_plain(&mut rng, n, 4, 2);
        let k = SimplicialComplex::from_simplices(p.facets.into_iter().map(Simplex::new).collect()).unwrap();
        check_against_oracle(&k);
    }
}

#[test]
fn poincare_sphere_has_no_torsion_by_oracle() {
    let oracle = common::reduced_homology_oracle(&facets_of(&corpus::poincare16().complex), &PRIMES);
    let betti: Vec<usize> = oracle.iter().map(|(b, _)| *b).collect();
    assert_eq!(betti, vec![0, 0, 0, 0, 1]);
    assert!(oracle.iter().all(|(b, fp)| fp.iter().all(|d| d == b)));
}

#[test]
fn cokernel_order_is_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tested = 0;
    while tested < 200 {
        let a: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        let det = common::det_i64(&a);
        if det == 0 || det.abs() > 50 {
            continue;
        }
        let g = cokernel(&IntegerMatrix::from_i64_rows(&a));
        assert_eq!(g.order(), Some(BigInt::from(common::brute_cokernel_order(&a, det))));
        assert_eq!(g.order(), Some(BigInt::from(det.abs())));
        tested += 1;
    }
}

#[test]
fn integer_solver_agrees_with_box_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..300 {
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=3);
        let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let b: Vec<i64> = (0..rows).map(|_| rng.gen_range(-4..=4)).collect();
        let m = IntegerMatrix::from_i64_rows(&a);
        let rhs: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
        match solve_integer(&m, &rhs, None) {
            Some(x) => assert_eq!(m.mul_vec(&x), rhs),
            None => assert!(!common::brute_solve(&a, &b, 6), "box search found a solution to {a:?} x = {b:?}"),
        }
    }
}

#[test]
fn triangle_groups_match_the_angle_criterion() {
    let mut cases = 0;
    for p in 2..=12u64 {
        for q in p..=12 {
            for r in q..=12 {
                let m = CoxeterMatrix::from_pairs(3, [((0, 1), Some(p)), ((1, 2), Some(q)), ((0, 2), Some(r))]).unwrap();
                assert_eq!(is_finite(&m).finite, common::triangle_finite(p, q, r), "({p},{q},{r})");
                cases += 1;
            }
        }
    }
    assert_eq!(cases, 286);
}

fn labeled(p: &Plain) -> LabeledComplex {
    let k = SimplicialComplex::from_simplices(p.facets.iter().cloned().map(Simplex::new).collect()).unwrap();
    LabeledComplex::new(k, p.labels.clone()).unwrap()
}

fn shuffled(p: &Plain, perm: &[usize]) -> Plain {
    Plain {
        n: p.n,
        facets: p.facets.iter().map(|f| f.iter().map(|&v| perm[v]).collect()).collect(),
        labels: p.labels.iter().map(|(&(u, v), &m)| ((perm[u].min(perm[v]), perm[u].max(perm[v])), m)).collect(),
    }
}

#[test]
fn isomorphism_search_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..80 {
        let n = rng.gen_range(2..=7);
        let a = common::random_plain(&mut rng, n, 3, 3);
        let mut perm: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let candidates = [shuffled(&a, &perm), common::random_plain(&mut rng, n, 3, 3)];
        for b in candidates {
            let (la, lb) = (labeled(&a), labeled(&b));
            let found = find_isomorphism(&la, &lb);
            if let Some(f) = &found {
                assert!(verify_isomorphism(&la, &lb, f));
            }
            assert_eq!(found.is_some(), common::brute_isomorphic(&a, &b), "{a:?} vs {b:?}");
        }
    }
}
