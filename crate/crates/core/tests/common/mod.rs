#![allow(dead_code)]

use std::collections::BTreeMap;

use derham_graded::derham::{FracElem, FracVector};
use derham_graded::eulerian::GradedOpModule;
use derham_graded::linalg::{q, Matrix, Rational};
use derham_graded::polyring::{monomial_basis, Monomial, Poly, Weights};
use derham_graded::quotient::Hypersurface;
use derham_graded::parse_poly;
use rand::Rng;

pub fn hyp(f: &str, w: &[u32]) -> Hypersurface {
    let w = Weights::new(w.to_vec()).unwrap();
    Hypersurface::new(parse_poly(f, w.nvars()).unwrap(), w).unwrap()
}

/// Isolated weighted-homogeneous singularities small enough for random
/// testing.
pub fn isolated_zoo() -> Vec<Hypersurface> {
    vec![
        hyp("x1^2 + x2^2", &[2, 2]),
        hyp("x1^2 + x2^3", &[3, 2]),
        hyp("x1^3 + x2^3", &[1, 1]),
        hyp("x1^2*x2 + x2^3", &[1, 1]),
        hyp("x1^2 + x2^2 + x3^3", &[3, 3, 2]),
        hyp("x1^2 + x2^2 + x3^4", &[2, 2, 1]),
    ]
}

pub fn family(n: usize, m: u32) -> Hypersurface {
    let mut terms: Vec<String> = (1..n).map(|i| format!("x{i}^2")).collect();
    terms.push(format!("x{n}^{m}"));
    let mut w = vec![m; n - 1];
    w.push(2);
    hyp(&terms.join(" + "), &w)
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    q(rng.gen_range(-3..=3))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = rng.gen_range(-4..=4);
        if x != 0 {
            return Rational::new(x.into(), (rng.gen_range(1..=3) as i64).into());
        }
    }
}

/// Random element of `R_d` with small integer coefficients (possibly zero).
pub fn random_poly<R: Rng>(rng: &mut R, w: &Weights, d: i64) -> Poly {
    let basis = monomial_basis(d, w);
    let mut p = Poly::zero(w.nvars());
    for m in basis {
        if rng.gen_bool(0.6) {
            p.add_term(m, small_rational(rng));
        }
    }
    p
}

/// Random nonzero element of `R_d`, or `None` when `R_d = 0`.
pub fn random_nonzero_poly<R: Rng>(rng: &mut R, w: &Weights, d: i64) -> Option<Poly> {
    if monomial_basis(d, w).is_empty() {
        return None;
    }
    loop {
        let p = random_poly(rng, w, d);
        if !p.is_zero() {
            return Some(p);
        }
    }
}

/// Random strand-1 vector of total degree `d` whose slots have pole orders
/// drawn from `0..=max_pole`. May be zero.
pub fn random_k1_vector<R: Rng>(rng: &mut R, h: &Hypersurface, d: i64, max_pole: u32) -> FracVector {
    let n = h.nvars();
    let twists: Vec<i64> = (0..n).map(|i| h.weights.weight(i)).collect();
    let comps = twists
        .iter()
        .map(|t| {
            let pole = rng.gen_range(0..=max_pole);
            let deg = d + t + pole as i64 * h.deg_f;
            FracElem::new(random_poly(rng, &h.weights, deg), pole)
        })
        .collect();
    FracVector::new(comps, twists)
}

pub fn random_nonzero_k1_vector<R: Rng>(rng: &mut R, h: &Hypersurface, d: i64, max_pole: u32) -> FracVector {
    loop {
        let v = random_k1_vector(rng, h, d, max_pole);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random fraction of degree roughly `d` with pole order up to `max_pole`.
pub fn random_frac<R: Rng>(rng: &mut R, h: &Hypersurface, d: i64, max_pole: u32) -> FracElem {
    let pole = rng.gen_range(0..=max_pole);
    FracElem::new(random_poly(rng, &h.weights, d + pole as i64 * h.deg_f), pole)
}

/// Coefficients of a truncated power series product, `prod (1 - t^a) /
/// prod (1 - t^b)` up to `t^hi`, shifted by `t^shift`.
pub fn series(numer: &[i64], denom: &[i64], shift: i64, hi: i64) -> BTreeMap<i64, i64> {
    let len = (hi + 1).max(0) as usize;
    let mut c = vec![0i64; len];
    if len > 0 {
        c[0] = 1;
    }
    for &a in numer {
        for k in (a as usize..len).rev() {
            c[k] -= c[k - a as usize];
        }
    }
    for &b in denom {
        for k in b as usize..len {
            c[k] += c[k - b as usize];
        }
    }
    (0..len as i64)
        .filter_map(|k| {
            let d = k + shift;
            (d <= hi && c[k as usize] != 0).then_some((d, c[k as usize]))
        })
        .collect()
}

/// Hilbert series support of `H_1(df; A)` for an isolated quasi-homogeneous
/// `f`: the Milnor algebra shifted by `deg f`.
pub fn h1_series(h: &Hypersurface, hi: i64) -> BTreeMap<i64, i64> {
    let numer: Vec<i64> = (0..h.nvars()).map(|i| h.deg_f - h.weights.weight(i)).collect();
    let denom: Vec<i64> = (0..h.nvars()).map(|i| h.weights.weight(i)).collect();
    series(&numer, &denom, h.deg_f, hi)
}

/// Hilbert series of `R/(f)`.
pub fn quotient_series(h: &Hypersurface, hi: i64) -> BTreeMap<i64, i64> {
    let denom: Vec<i64> = (0..h.nvars()).map(|i| h.weights.weight(i)).collect();
    series(&[h.deg_f], &denom, 0, hi)
}

/// Classical division by leading terms in lex order: remainder zero iff
/// `f` divides `g` (single divisor).
pub fn lex_divide(g: &Poly, f: &Poly) -> Option<Poly> {
    let (lf, cf) = {
        let (m, c) = f.leading_term()?;
        (m.clone(), c.clone())
    };
    let mut rest = g.clone();
    let mut quotient = Poly::zero(g.nvars());
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let mq: Monomial = m.div(&lf)?;
        let coeff = c / &cf;
        quotient.add_term(mq.clone(), coeff.clone());
        let sub = f.mul_monomial(&mq).scale(&coeff);
        rest = &rest - &sub;
    }
    Some(quotient)
}

/// Random pairwise-commuting operators: polynomials in one random matrix.
pub fn commuting_ops<R: Rng>(rng: &mut R, size: usize, count: usize) -> Vec<Matrix> {
    let mut a = Matrix::zeros(size, size);
    for r in 0..size {
        for c in 0..size {
            if rng.gen_bool(0.4) {
                a.set(r, c, q(rng.gen_range(-2..=2)));
            }
        }
    }
    (0..count)
        .map(|_| {
            let mut acc = Matrix::zeros(size, size);
            let mut power = Matrix::identity(size);
            for _ in 0..3 {
                acc = acc.add_matrix(&power.scale(&q(rng.gen_range(-2..=2))));
                power = power.mul(&a).unwrap();
            }
            acc
        })
        .collect()
}

trait AddMatrix {
    fn add_matrix(&self, other: &Matrix) -> Matrix;
}

impl AddMatrix for Matrix {
    fn add_matrix(&self, other: &Matrix) -> Matrix {
        self.sub(&other.scale(&q(-1))).unwrap()
    }
}

/// Per degree: `d I + N` with `N` strictly upper triangular, conjugated by
/// a unipotent matrix.
pub fn random_gen_eulerian<R: Rng>(r: &mut R) -> GradedOpModule {
    let mut pieces = BTreeMap::new();
    for _ in 0..r.gen_range(1..=3) {
        let d = r.gen_range(-4..=4);
        let k = r.gen_range(1..=3);
        let mut n = Matrix::identity(k).scale(&q(d));
        let mut p = Matrix::identity(k);
        for i in 0..k {
            for j in i + 1..k {
                n.set(i, j, q(r.gen_range(-2..=2)));
                p.set(j, i, q(r.gen_range(-2..=2)));
            }
        }
        let p_inv = inverse_unipotent_lower(&p);
        pieces.insert(d, p.mul(&n).unwrap().mul(&p_inv).unwrap());
    }
    GradedOpModule::new(pieces).unwrap()
}

pub fn inverse_unipotent_lower(p: &Matrix) -> Matrix {
    let k = p.rows();
    let nil = p.sub(&Matrix::identity(k)).unwrap();
    let mut inv = Matrix::identity(k);
    let mut term = Matrix::identity(k);
    for _ in 1..k {
        term = term.mul(&nil).unwrap().scale(&q(-1));
        inv = inv.sub(&term.scale(&q(-1))).unwrap();
    }
    inv
}

pub fn random_glue<R: Rng>(r: &mut R, m1: &GradedOpModule, m3: &GradedOpModule) -> BTreeMap<i64, Matrix> {
    let mut glue = BTreeMap::new();
    for (&d, a) in m1.pieces() {
        if let Some(b) = m3.pieces().get(&d) {
            let mut g = Matrix::zeros(a.rows(), b.rows());
            for i in 0..a.rows() {
                for j in 0..b.rows() {
                    g.set(i, j, q(r.gen_range(-3..=3)));
                }
            }
            glue.insert(d, g);
        }
    }
    glue
}
