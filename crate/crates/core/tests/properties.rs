mod common;

use std::collections::BTreeMap;

use common::*;
use derham_graded::bounds::{class_l, Caps};
use derham_graded::derham::slice::differential;
use derham_graded::derham::{
    eulerian_check_frac, frac_partial, normal_form, pole_order, shifted_euler_power, theta,
    DeRhamStrand, FracVector, PoleOrder,
};
use derham_graded::eulerian::{extension_closure_check, GradedOpModule};
use derham_graded::koszul::{class_is_zero, lemma13_check};
use derham_graded::linalg::{self, q, Matrix, Rational};
use derham_graded::polyring::{divide_exact, euler_apply, Weights};
use derham_graded::quotient::Hypersurface;
use derham_graded::parse_poly;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick(seed: u64) -> Hypersurface {
    let zoo = isolated_zoo();
    zoo[(seed % zoo.len() as u64) as usize].clone()
}

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r).prop_map(move |rows| {
            let rows: Vec<Vec<Rational>> = rows.into_iter().map(|row| row.into_iter().map(q).collect()).collect();
            Matrix::from_rows(c, rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_nullity(m in matrix_strategy()) {
        let null = linalg::nullspace_basis(&m);
        prop_assert_eq!(linalg::rank(&m) + null.len(), m.cols());
        prop_assert_eq!(linalg::rank(&m), linalg::rank(&m.transpose()));
        for v in &null {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn affine_solutions_reproduce_target(m in matrix_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let coeffs: Vec<Rational> = (0..m.cols()).map(|_| small_rational(&mut r)).collect();
        let target = m.mul_vec(&coeffs).unwrap();
        let cols: Vec<Vec<Rational>> = (0..m.cols()).map(|c| m.column(c)).collect();
        let x = linalg::in_affine(&target, &cols, &[]).unwrap().expect("target is in the span");
        prop_assert_eq!(m.mul_vec(&x).unwrap(), target);
    }

    #[test]
    fn poly_ring_laws_and_display_roundtrip(seed in any::<u64>(), d in 0i64..7) {
        let mut r = rng(seed);
        let w = Weights::new(vec![1, 2, 3]).unwrap();
        let a = random_poly(&mut r, &w, d);
        let b = random_poly(&mut r, &w, d + 1);
        let c = random_poly(&mut r, &w, 2);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(parse_poly(&a.to_string(), 3).unwrap(), a.clone());
        prop_assert_eq!(euler_apply(&a, &w), a.scale(&q(d)));
    }

    #[test]
    fn divisibility_matches_division_algorithm(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = pick(seed);
        let qd = r.gen_range(0..6);
        let quotient = random_poly(&mut r, &h.weights, qd);
        let multiple = &quotient * &h.f;
        prop_assert_eq!(divide_exact(&multiple, &h.f, &h.weights).unwrap(), Some(quotient));
        let g = random_poly(&mut r, &h.weights, qd + h.deg_f);
        let ours = divide_exact(&g, &h.f, &h.weights).unwrap();
        prop_assert_eq!(ours, lex_divide(&g, &h.f));
    }

    #[test]
    fn partials_commute(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = pick(seed);
        let d = r.gen_range(0..8);
        let e = random_frac(&mut r, &h, d, 2);
        let n = h.nvars();
        let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
        let a = frac_partial(&h, &frac_partial(&h, &e, i), j);
        let b = frac_partial(&h, &frac_partial(&h, &e, j), i);
        prop_assert!(a.equals(&h, &b));
    }

    #[test]
    fn euler_identity_on_fractions(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = pick(seed);
        let d = r.gen_range(-4..8);
        let e = random_frac(&mut r, &h, d, 3);
        prop_assert!(eulerian_check_frac(&h, &e));
    }

    #[test]
    fn shifted_euler_powers_never_vanish(seed in any::<u64>(), l in prop_oneof![-3i64..=-1, 1i64..=3]) {
        let mut r = rng(seed);
        let h = pick(seed);
        let e = loop {
            let d = r.gen_range(0..6);
            let e = random_frac(&mut r, &h, d, 2);
            if !e.is_zero() {
                break e;
            }
        };
        for k in 1..=4 {
            prop_assert!(!shifted_euler_power(&h, &e, l, k).is_zero());
        }
    }

    #[test]
    fn normal_form_unique_and_idempotent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = pick(seed);
        let d = -h.omega() + r.gen_range(-2..3);
        let v = random_k1_vector(&mut r, &h, d, 3);
        let nf = normal_form(&h, &v);
        prop_assert_eq!(&normal_form(&h, &nf), &nf);
        prop_assert_eq!(&v.normal_form_by_components(&h), &nf);
        prop_assert!(nf.equals(&h, &v));
        let pole = nf.common_pole();
        if pole >= 1 {
            let divisible = nf
                .numerators()
                .iter()
                .all(|a| divide_exact(a, &h.f, &h.weights).unwrap().is_some());
            prop_assert!(!divisible);
        }
    }

    #[test]
    fn pole_order_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = pick(seed);
        let d = -h.omega() + r.gen_range(-2..3);
        let v1 = random_k1_vector(&mut r, &h, d, 3);
        let v2 = random_k1_vector(&mut r, &h, d, 3);
        let (l1, l2) = (pole_order(&h, &v1), pole_order(&h, &v2));
        let sum = pole_order(&h, &v1.add(&h, &v2));
        if l1 < l2 {
            prop_assert_eq!(sum, l2);
        }
        if l2 < l1 {
            prop_assert_eq!(sum, l1);
        }
        if l1 == l2 {
            prop_assert!(sum <= l2);
        }
        prop_assert!(sum <= l1.max(l2));
        let alpha = nonzero_rational(&mut r);
        prop_assert_eq!(pole_order(&h, &v1.scale(&alpha)), l1);
        let beta = small_rational(&mut r);
        prop_assert!(pole_order(&h, &v1.scale(&beta)) <= l1);
        let combo = v1.scale(&alpha).add(&h, &v2.scale(&beta));
        prop_assert!(pole_order(&h, &combo) <= l1.max(l2));
        let v3 = random_k1_vector(&mut r, &h, d, 3);
        let l3 = pole_order(&h, &v3);
        let combo3 = combo.add(&h, &v3.scale(&small_rational(&mut r)));
        prop_assert!(pole_order(&h, &combo3) <= l1.max(l2).max(l3));
        prop_assert!(pole_order(&h, &v1.scale(&q(0))) == PoleOrder::MinusInfinity);
    }

    #[test]
    fn boundaries_map_to_zero_classes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = pick(seed);
        let cap = r.gen_range(0..3);
        let chains = DeRhamStrand::build(&h, 2, -h.omega(), cap);
        let (phi2, k1) = differential(&h, &chains);
        let xi: Vec<Rational> = (0..chains.dim()).map(|_| small_rational(&mut r)).collect();
        let u = k1.vector(&h, &phi2.mul_vec(&xi).unwrap());
        if !u.is_zero() {
            let c = theta(&h, &u).unwrap();
            prop_assert!(class_is_zero(&h, &c).unwrap());
        }
    }

    #[test]
    fn theta_degree_law(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = pick(seed);
        let cap = r.gen_range(1..4);
        let strand = DeRhamStrand::build(&h, 1, -h.omega(), cap);
        let (phi1, _) = differential(&h, &strand);
        let cycles = linalg::nullspace_basis(&phi1);
        let coeffs: Vec<Rational> = cycles.iter().map(|_| small_rational(&mut r)).collect();
        let z = strand.vector(&h, &linalg::combine(strand.dim(), &coeffs, &cycles));
        if !z.is_zero() {
            let c = theta(&h, &z).unwrap();
            let PoleOrder::Order(i) = pole_order(&h, &z) else { unreachable!() };
            prop_assert_eq!(c.degree, (i as i64 + 1) * h.deg_f - h.omega());
        }
    }

    #[test]
    fn koszul_dims_on_commuting_operators(seed in any::<u64>(), size in 1usize..=6, count in 1usize..=3) {
        let mut r = rng(seed);
        let ops = commuting_ops(&mut r, size, count);
        for i in 0..=count {
            prop_assert!(lemma13_check(&ops, i).unwrap());
        }
    }

    #[test]
    fn extensions_and_shifts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m1 = random_gen_eulerian(&mut r);
        let m3 = random_gen_eulerian(&mut r);
        let glue = random_glue(&mut r, &m1, &m3);
        prop_assert!(extension_closure_check(&m1, &m3, &glue).unwrap());
        let m2 = GradedOpModule::extension(&m1, &m3, &glue).unwrap();
        prop_assert!(m2.is_generalized_eulerian(m2.dim()));
        let l = if r.gen_bool(0.5) { r.gen_range(1..4) } else { -r.gen_range(1..4) };
        for k in 1..=m1.dim() {
            prop_assert!(!m1.shift(l).is_generalized_eulerian(k));
        }
        prop_assert!(extension_closure_check(&m1, &m3.shift(l), &BTreeMap::new()).unwrap());
    }

    #[test]
    fn invariant_sub_and_quotient(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_gen_eulerian(&mut r);
        let gens: BTreeMap<i64, Vec<Vec<Rational>>> = m
            .pieces()
            .iter()
            .map(|(&d, op)| (d, vec![(0..op.rows()).map(|_| small_rational(&mut r)).collect()]))
            .collect();
        let (s, quo) = m.sub_and_quotient(&gens).unwrap();
        prop_assert_eq!(s.dim() + quo.dim(), m.dim());
        prop_assert!(s.is_generalized_eulerian(s.dim()));
        prop_assert!(quo.is_generalized_eulerian(quo.dim()));
    }
}

#[test]
fn class_pole_order_after_adding_boundaries() {
    let mut r = rng(7);
    let h = hyp("x1^2 + x2^2", &[2, 2]);
    let radial = FracVector::from_numerators(
        vec![parse_poly("x1", 2).unwrap(), parse_poly("x2", 2).unwrap()],
        1,
        vec![2, 2],
    );
    let caps = Caps { c_z: 3, c_b: 3 };
    for _ in 0..10 {
        let cap = r.gen_range(1..3);
        let chains = DeRhamStrand::build(&h, 2, -4, cap);
        let (phi2, k1) = differential(&h, &chains);
        let xi: Vec<Rational> = (0..chains.dim()).map(|_| small_rational(&mut r)).collect();
        let moved = radial.add(&h, &k1.vector(&h, &phi2.mul_vec(&xi).unwrap()));
        assert_eq!(class_l(&h, &moved, caps).unwrap().order, 1);
    }
}
