use std::collections::HashMap;
use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grassmirror::gelfand_cetlin::{theta_substitution, torus_registry};
use grassmirror::laurent::{LaurentPoly, VarRegistry};
use grassmirror::mirror::{chart_report, critical_points, mirror_sign, DihedralElement};
use grassmirror::quantum::{closed_form_eigenvalue, qh_sign};
use grassmirror::symmetric::schur_ssyt;
use grassmirror::young::{binomial, enumerate_diagrams, GridShape, YoungDiagram};
use grassmirror::{CycInt, RootSet};

/// Zero iff every embedding vanishes: a nonzero algebraic integer has norm
/// at least 1, so some conjugate has modulus at least 1.
fn zero_by_embeddings(order: u32, dense: &[i64]) -> bool {
    (1..order.max(2))
        .filter(|j| j.gcd(&order) == 1 || order == 1)
        .all(|j| {
            let z: Complex64 = dense
                .iter()
                .enumerate()
                .map(|(e, &c)| Complex64::from_polar(c as f64, TAU * (j as f64) * e as f64 / order as f64))
                .sum();
            z.norm() < 1e-6
        })
}

fn cyc(order: u32, dense: &[i64]) -> CycInt {
    dense
        .iter()
        .enumerate()
        .fold(CycInt::zero(order), |acc, (e, &c)| acc + CycInt::root(order, e as i64).scale(&BigInt::from(c)))
}

/// Adds `c` times the vanishing sum over a coset of the order-`p` subgroup.
fn add_prime_sum(dense: &mut [i64], p: usize, start: usize, c: i64) {
    let n = dense.len();
    for i in 0..p {
        dense[(start + i * n / p) % n] += c;
    }
}

#[test]
fn zero_test_matches_embedding_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let mut zeros = 0;
    for _ in 0..10_000 {
        let order: u32 = rng.gen_range(1..=40);
        let n = order as usize;
        let mut dense = vec![0i64; n];
        match rng.gen_range(0..3) {
            // sparse random element
            0 => {
                for _ in 0..rng.gen_range(1..4) {
                    dense[rng.gen_range(0..n)] += rng.gen_range(-5..=5);
                }
            }
            // a combination of vanishing prime sums, sometimes perturbed
            1 => {
                let primes: Vec<usize> = (2..=n).filter(|p| n.is_multiple_of(*p) && (2..*p).all(|q| !(*p).is_multiple_of(q))).collect();
                if !primes.is_empty() {
                    for _ in 0..rng.gen_range(1..4) {
                        let p = primes[rng.gen_range(0..primes.len())];
                        add_prime_sum(&mut dense, p, rng.gen_range(0..n), rng.gen_range(-5..=5));
                    }
                }
                if rng.gen_bool(0.3) {
                    dense[rng.gen_range(0..n)] += rng.gen_range(-1..=1);
                }
            }
            _ => {
                for c in dense.iter_mut() {
                    *c = rng.gen_range(-5..=5);
                }
            }
        }
        let expected = zero_by_embeddings(order, &dense);
        let x = cyc(order, &dense);
        assert_eq!(x.is_zero(), expected, "order {order}, coeffs {dense:?}");
        assert_eq!(x.canonical().iter().all(|c| *c == BigInt::from(0)), expected);
        zeros += expected as usize;
    }
    assert!(zeros > 1000, "only {zeros} zero cases generated");
}

fn arb_cyc(order: u32) -> impl Strategy<Value = CycInt> {
    prop::collection::vec(-5i64..=5, order as usize).prop_map(move |d| cyc(order, &d))
}

fn arb_triple() -> impl Strategy<Value = (CycInt, CycInt, CycInt)> {
    (1u32..=24).prop_flat_map(|n| (arb_cyc(n), arb_cyc(n), arb_cyc(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cyclotomic_ring_axioms((a, b, c) in arb_triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &CycInt::one(a.order()), a.clone());
    }

    #[test]
    fn conj_is_a_ring_map((a, b, _c) in arb_triple()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        let lhs = (&a * &b).to_complex();
        prop_assert!((lhs - a.to_complex() * b.to_complex()).norm() < 1e-9 * (1.0 + lhs.norm()));
    }

    #[test]
    fn rotate_commutes_with_product((a, b, _c) in arb_triple()) {
        prop_assert_eq!(&a.rotate() * &b, (&a * &b).rotate());
        prop_assert_eq!(a.rotate(), &a * &CycInt::root(a.order(), 2));
    }
}

fn registry() -> std::sync::Arc<VarRegistry> {
    VarRegistry::new(["a", "b", "c"]).unwrap()
}

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, 3), -4i64..=4), 0..5).prop_map(|terms| {
        let reg = registry();
        terms.into_iter().fold(LaurentPoly::zero(&reg), |acc, (e, c)| {
            acc.try_add(&LaurentPoly::monomial(&reg, e, c).unwrap()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laurent_ring_axioms(p in arb_laurent(), q in arb_laurent(), r in arb_laurent()) {
        let pq = p.try_mul(&q).unwrap();
        prop_assert!(pq.equals(&q.try_mul(&p).unwrap()).unwrap());
        let lhs = p.try_mul(&q.try_add(&r).unwrap()).unwrap();
        let rhs = pq.try_add(&p.try_mul(&r).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
        prop_assert!(p.try_sub(&p).unwrap().is_zero());
        let vals = [Complex64::new(0.7, 0.2), Complex64::new(-1.1, 0.5), Complex64::new(0.3, -0.9)];
        let z = pq.evaluate(&vals).unwrap();
        let w = p.evaluate(&vals).unwrap() * q.evaluate(&vals).unwrap();
        prop_assert!((z - w).norm() < 1e-8 * (1.0 + z.norm()));
    }

    #[test]
    fn theta_substitution_is_multiplicative(seed in any::<u64>()) {
        let g = GridShape::new(2, 5).unwrap();
        let src = torus_registry(g);
        let subst = theta_substitution(g);
        let target = grassmirror::gelfand_cetlin::chart_registry(g);
        let map: HashMap<String, _> = subst.into_iter().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut random = || {
            (0..3).fold(LaurentPoly::zero(&src), |acc, _| {
                let e: Vec<i32> = (0..src.len()).map(|_| rng.gen_range(-1..=1)).collect();
                acc.try_add(&LaurentPoly::monomial(&src, e, rng.gen_range(-3i64..=3)).unwrap()).unwrap()
            })
        };
        let (p, q) = (random(), random());
        let lhs = p.try_mul(&q).unwrap().substitute_monomials(&map, &target).unwrap();
        let rhs = p.substitute_monomials(&map, &target).unwrap()
            .try_mul(&q.substitute_monomials(&map, &target).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }
}

fn arb_grid(max_area: usize) -> impl Strategy<Value = GridShape> {
    (2usize..=max_area + 1)
        .prop_flat_map(|n| (1..n, Just(n)))
        .prop_filter("area", move |(k, n)| k * (n - k) <= max_area)
        .prop_map(|(k, n)| GridShape::new(k, n).unwrap())
}

fn arb_diagram(max_area: usize) -> impl Strategy<Value = YoungDiagram> {
    arb_grid(max_area).prop_flat_map(|g| {
        let all = enumerate_diagrams(g);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn young_invariants(d in arb_diagram(30)) {
        let g = d.grid();
        prop_assert_eq!(&YoungDiagram::from_vertical_steps(g, &d.vertical_steps()).unwrap(), &d);
        prop_assert_eq!(&d.transpose().transpose(), &d);
        prop_assert_eq!(&d.poincare_dual().poincare_dual(), &d);
        prop_assert_eq!(d.poincare_dual().size(), g.area() - d.size());
        prop_assert_eq!(d.transpose().size(), d.size());
        let (v, h) = d.border_steps();
        prop_assert_eq!(&v.elements, &d.vertical_steps());
        prop_assert_eq!(&h.elements, &d.horizontal_steps());
        let ex = d.pieri_expand();
        for e in &ex.classical {
            prop_assert_eq!(e.size(), d.size() + 1);
        }
        if let Some(q) = &ex.quantum {
            prop_assert_eq!(q.size() + g.n(), d.size() + 1);
        }
    }

    #[test]
    fn enumeration_is_complete_and_graded(g in arb_grid(16)) {
        let all = enumerate_diagrams(g);
        prop_assert_eq!(all.len() as u128, binomial(g.n(), g.k()));
        prop_assert!(all.windows(2).all(|w| w[0].size() <= w[1].size()));
        prop_assert!(all.first().unwrap().is_empty());
        prop_assert_eq!(all.last().unwrap(), &YoungDiagram::full(g));
    }
}

fn arb_roots() -> impl Strategy<Value = (YoungDiagram, RootSet)> {
    arb_diagram(9).prop_flat_map(|d| {
        let g = d.grid();
        let sets = RootSet::enumerate(g.n(), g.k(), qh_sign(g.k()));
        (Just(d), 0..sets.len()).prop_map(move |(d, i)| (d, sets[i].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn schur_homogeneity_and_conjugation((d, j) in arb_roots(), e in 0i64..40) {
        let s = schur_ssyt(d.rows(), &j).unwrap();
        let shifted = schur_ssyt(d.rows(), &j.shift(e)).unwrap();
        prop_assert_eq!(shifted, s.mul_root(e * d.size() as i64));
        prop_assert_eq!(schur_ssyt(d.rows(), &j.conj()).unwrap(), s.conj());
    }

    #[test]
    fn spectrum_is_rotation_and_conjugation_stable(g in arb_grid(12)) {
        let sets = RootSet::enumerate(g.n(), g.k(), qh_sign(g.k()));
        let canon = |it: &mut dyn Iterator<Item = CycInt>| {
            let mut v: Vec<_> = it.map(|x| x.canonical()).collect();
            v.sort();
            v
        };
        let base = canon(&mut sets.iter().map(|j| closed_form_eigenvalue(g, j).unwrap()));
        let rotated = canon(&mut sets.iter().map(|j| closed_form_eigenvalue(g, &j.rotate()).unwrap()));
        let conjugated = canon(&mut sets.iter().map(|j| closed_form_eigenvalue(g, j).unwrap().conj()));
        prop_assert_eq!(&base, &rotated);
        prop_assert_eq!(&base, &conjugated);
        for j in &sets {
            prop_assert_eq!(
                closed_form_eigenvalue(g, &j.rotate()).unwrap(),
                closed_form_eigenvalue(g, j).unwrap().mul_root(2)
            );
        }
    }

    #[test]
    fn chart_membership_is_an_orbit_property(g in arb_grid(12), t in 0i64..12, flip in any::<bool>()) {
        let h = DihedralElement::new(g.n(), t, flip);
        for i in critical_points(g) {
            prop_assert_eq!(i.sign(), mirror_sign(g));
            let a = chart_report(g, &i).unwrap().member;
            let b = chart_report(g, &h.act(&i)).unwrap().member;
            prop_assert_eq!(a, b, "{} vs {}", i, h.act(&i));
        }
    }
}
