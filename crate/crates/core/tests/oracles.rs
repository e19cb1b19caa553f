mod common;

use common::*;
use derham_graded::bounds::{candidate_degree, equation_solutions, example01, theorem2_bound};
use derham_graded::derham::{derham_slice, truncated_h, truncated_h1};
use derham_graded::koszul::{euler_characteristics, h1_hilbert, koszul_slice};
use derham_graded::quotient::hilbert_function;

#[test]
fn hilbert_function_matches_product_series() {
    for h in isolated_zoo().into_iter().chain([family(4, 3), family(3, 5)]) {
        let hi = 3 * h.deg_f;
        let hf = hilbert_function(&h, 0, hi).unwrap();
        let expected = quotient_series(&h, hi);
        for d in 0..=hi {
            let want = expected.get(&d).copied().unwrap_or(0);
            assert_eq!(hf.get(d).unwrap() as i64, want, "{} at {d}", h.f);
        }
    }
}

#[test]
fn koszul_h1_matches_shifted_milnor_series() {
    for h in isolated_zoo() {
        let hi = 3 * h.deg_f;
        let hf = h1_hilbert(&h, 0, hi).unwrap();
        let expected = h1_series(&h, hi);
        for d in 0..=hi {
            let want = expected.get(&d).copied().unwrap_or(0);
            assert_eq!(hf.get(d).unwrap() as i64, want, "{} at {d}", h.f);
        }
    }
}

#[test]
fn euler_characteristic_per_degree() {
    for h in isolated_zoo() {
        for d in -2..=3 * h.deg_f {
            let (chain, homology) = euler_characteristics(&h, d);
            assert_eq!(chain, homology, "{} at {d}", h.f);
        }
    }
}

#[test]
fn complex_identities_on_zoo() {
    for h in isolated_zoo() {
        for d in 0..=3 * h.deg_f {
            let s = koszul_slice(&h, d);
            for p in 2..=s.top() {
                assert!(s.psi(p - 1).mul(s.psi(p)).unwrap().is_zero());
            }
        }
        for d in -h.omega() - 3..=-h.omega() + 3 {
            let s = derham_slice(&h, d, 1, 2).unwrap();
            assert!(s.complex_identity_holds(&h));
            assert!(s.embedding_commutes(&h));
        }
    }
}

#[test]
fn derham_slice_examples() {
    let h = hyp("x1^2 + x2^2", &[2, 2]);
    let s = derham_slice(&h, -4, 1, 1).unwrap();
    assert_eq!(s.k1.dim(), 4);
    assert_eq!(s.cycle_basis().len(), 2);
    assert_eq!(truncated_h1(&h, -4, 1, 1).unwrap().dim, 2);
    assert_eq!(truncated_h1(&h, -3, 1, 1).unwrap().dim, 0);

    let line = hyp("x1", &[1]);
    assert_eq!(truncated_h1(&line, -1, 1, 1).unwrap().dim, 1);
    assert_eq!(truncated_h(&line, 0, -1, 1, 2).unwrap().dim, 1);
    for d in [-4, -3, -2, 0, 1] {
        assert_eq!(truncated_h(&line, 0, d, 2, 4).unwrap().dim, 0, "degree {d}");
    }
}

#[test]
fn candidate_arithmetic_for_family() {
    for n in 2..=6usize {
        for m in 2..=6u32 {
            let h = family(n, m);
            for nu in 1..=6u32 {
                let closed = (2 * nu as i64 - n as i64 + 3) * m as i64 - 2;
                assert_eq!(candidate_degree(&h, nu), closed);
            }
        }
    }
}

#[test]
fn equation_solvable_exactly_for_even_even() {
    for n in 2..=6usize {
        for m in 2..=6u32 {
            let sols = equation_solutions(n, m, 10);
            if n % 2 == 0 && m % 2 == 0 {
                assert!(!sols.is_empty());
                assert!(sols.iter().all(|&(nu, _)| nu as usize == n / 2));
            } else {
                assert!(sols.is_empty(), "n={n} m={m}: {sols:?}");
            }
        }
    }
}

#[test]
fn family_h1_support_matches_closed_form() {
    for n in 2..=4usize {
        for m in 2..=5u32 {
            let h = family(n, m);
            let hf = h1_hilbert(&h, 0, 4 * m as i64).unwrap();
            let expected: Vec<(i64, usize)> = (0..=m as i64 - 2).map(|k| (2 * m as i64 + 2 * k, 1)).collect();
            assert_eq!(hf.support().into_iter().collect::<Vec<_>>(), expected, "n={n} m={m}");
        }
    }
}

#[test]
fn family_bounds_follow_parity() {
    for n in 2..=5usize {
        for m in 2..=5u32 {
            let r = example01(n, m).unwrap();
            let want = usize::from(n % 2 == 0 && m % 2 == 0);
            assert_eq!(r.bound, want, "n={n} m={m}");
            assert!(r.matches_prediction);
            if want == 1 {
                assert_eq!(r.contributing_nu, vec![n as u32 / 2]);
            }
        }
    }
}

#[test]
fn bound_rows_cover_the_h1_support() {
    for h in isolated_zoo() {
        let r = theorem2_bound(&h, None).unwrap();
        let (lo, hi) = r.scan_window;
        let hf = h1_hilbert(&h, lo, hi + 2 * h.deg_f).unwrap();
        for (d, k) in hf.support() {
            if (d + h.omega()) % h.deg_f == 0 && (d + h.omega()) / h.deg_f >= 2 {
                let row = r.rows.iter().find(|row| row.degree == d).expect("candidate row");
                assert_eq!(row.h1dim, k);
            }
        }
    }
}
