//! The weighted-graded polynomial ring `R = Q[x1, ..., xn]`.
//!
//! `deg xi = wi` for positive integer weights. Coefficients are exact
//! rationals; the field of characteristic zero is always `Q` here.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("weights must be a non-empty list of positive integers")]
    BadWeights,
    #[error("polynomial has {found} variables but the weights describe {expected}")]
    VariableCount { expected: usize, found: usize },
    #[error("polynomial is not homogeneous for weights {weights:?}")]
    NotHomogeneous { weights: Vec<u32> },
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Positive integer weights `w1..wn` with their sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Weights {
    w: Vec<u32>,
    omega: i64,
}

impl Weights {
    pub fn new(w: Vec<u32>) -> Result<Self, PolyError> {
        if w.is_empty() || w.contains(&0) {
            return Err(PolyError::BadWeights);
        }
        let omega = w.iter().map(|&x| x as i64).sum();
        Ok(Weights { w, omega })
    }

    /// All weights equal to one.
    pub fn standard(n: usize) -> Self {
        Self::new(vec![1; n]).expect("n >= 1")
    }

    pub fn nvars(&self) -> usize {
        self.w.len()
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.w[i] as i64
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.w
    }

    /// Sum of the weights.
    pub fn omega(&self) -> i64 {
        self.omega
    }

    pub fn max_weight(&self) -> i64 {
        self.w.iter().copied().max().unwrap_or(1) as i64
    }

    pub fn degree_of(&self, m: &Monomial) -> i64 {
        weighted_degree(m, self)
    }
}

impl TryFrom<Vec<u32>> for Weights {
    type Error = PolyError;
    fn try_from(w: Vec<u32>) -> Result<Self, PolyError> {
        Weights::new(w)
    }
}

impl From<Weights> for Vec<u32> {
    fn from(w: Weights) -> Vec<u32> {
        w.w
    }
}

/// Exponent vector. The derived order is ascending lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// `sum exponents[i] * w[i]`.
pub fn weighted_degree(m: &Monomial, w: &Weights) -> i64 {
    m.0.iter()
        .zip(&w.w)
        .map(|(&e, &wi)| e as i64 * wi as i64)
        .sum()
}

/// All monomials of weighted degree exactly `d`, in descending
/// lexicographic order of exponent vectors (`x1^2, x1*x2, x2^2, ...`).
pub fn monomial_basis(d: i64, w: &Weights) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let mut current = vec![0u32; w.nvars()];
    fill_basis(d, 0, w, &mut current, &mut out);
    out
}

fn fill_basis(rest: i64, i: usize, w: &Weights, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    let wi = w.weight(i);
    if i + 1 == w.nvars() {
        if rest % wi == 0 {
            current[i] = (rest / wi) as u32;
            out.push(Monomial(current.clone()));
        }
        return;
    }
    for e in (0..=rest / wi).rev() {
        current[i] = e as u32;
        fill_basis(rest - e * wi, i + 1, w, current, out);
    }
    current[i] = 0;
}

/// A graded piece `R_d` with a coordinate index for its monomials.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    pub degree: i64,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedBasis {
    pub fn new(d: i64, w: &Weights) -> Self {
        let monomials = monomial_basis(d, w);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        GradedBasis {
            degree: d,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a homogeneous polynomial of this degree. Terms of any
    /// other degree are a caller bug and panic.
    pub fn coordinates(&self, p: &Poly) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.len()];
        for (m, c) in p.terms() {
            let i = self
                .position(m)
                .unwrap_or_else(|| panic!("monomial {m} not in degree {}", self.degree));
            v[i] = c.clone();
        }
        v
    }

    pub fn poly(&self, coords: &[Rational], nvars: usize) -> Poly {
        let mut p = Poly::zero(nvars);
        for (m, c) in self.monomials.iter().zip(coords) {
            if !c.is_zero() {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }
}

/// Sparse polynomial with rational coefficients; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The degree shared by all terms, `None` for zero or mixed-degree input.
    pub fn homogeneous_degree(&self, w: &Weights) -> Option<i64> {
        let mut degs = self.terms.keys().map(|m| weighted_degree(m, w));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, w: &Weights) -> bool {
        self.is_zero() || self.homogeneous_degree(w).is_some()
    }

    /// Degree of a nonzero homogeneous polynomial, or an error.
    pub fn degree(&self, w: &Weights) -> Result<i64, PolyError> {
        self.check_arity(w)?;
        self.homogeneous_degree(w)
            .ok_or_else(|| PolyError::NotHomogeneous {
                weights: w.as_slice().to_vec(),
            })
    }

    pub fn check_arity(&self, w: &Weights) -> Result<(), PolyError> {
        if self.nvars != w.nvars() {
            return Err(PolyError::VariableCount {
                expected: w.nvars(),
                found: self.nvars,
            });
        }
        Ok(())
    }

    /// Formal partial derivative with respect to `x_{j+1}`.
    pub fn partial(&self, j: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[j] -= 1;
            out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Leading term in ascending lex order (largest monomial).
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Poly {
    /// Renders in the textual grammar accepted by [`crate::parse::parse_poly`],
    /// largest monomial first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

pub fn partial(p: &Poly, j: usize) -> Poly {
    p.partial(j)
}

/// The Euler operator `sum wi * xi * d/dxi`.
pub fn euler_apply(p: &Poly, w: &Weights) -> Poly {
    let mut out = Poly::zero(p.nvars());
    for (m, c) in p.terms() {
        let d = weighted_degree(m, w);
        out.add_term(m.clone(), c * Rational::from_integer(BigInt::from(d)));
    }
    out
}

/// The partial derivatives of `f`.
pub fn jacobian(f: &Poly) -> Vec<Poly> {
    (0..f.nvars()).map(|j| f.partial(j)).collect()
}

/// Matrix of multiplication by homogeneous `f` from `R_{d - deg f}` to `R_d`
/// (rows indexed by `target`, columns by `source`).
pub fn multiplication_matrix(f: &Poly, source: &GradedBasis, target: &GradedBasis) -> Matrix {
    let mut m = Matrix::zeros(target.len(), source.len());
    for (j, mono) in source.monomials.iter().enumerate() {
        for (t, c) in f.terms() {
            let i = target
                .position(&t.mul(mono))
                .expect("product lands in the target degree");
            m.add_to(i, j, c);
        }
    }
    m
}

/// Exact quotient `g / f` for homogeneous `f != 0`, or `None` when `f`
/// does not divide `g`. Decided by solving the linear system
/// `q * f = g` with `q` ranging over `R_{deg g - deg f}`.
pub fn divide_exact(g: &Poly, f: &Poly, w: &Weights) -> Result<Option<Poly>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    let df = f.degree(w)?;
    if g.is_zero() {
        return Ok(Some(Poly::zero(w.nvars())));
    }
    let dg = g.degree(w)?;
    if dg < df {
        return Ok(None);
    }
    let source = GradedBasis::new(dg - df, w);
    let target = GradedBasis::new(dg, w);
    let mult = multiplication_matrix(f, &source, &target);
    let columns: Vec<Vec<Rational>> = (0..mult.cols()).map(|j| mult.column(j)).collect();
    let rhs = target.coordinates(g);
    let solution = linalg::in_affine(&rhs, &columns, &[]).expect("consistent dimensions");
    Ok(solution.map(|coeffs| source.poly(&coeffs, w.nvars())))
}
