//! Elements of `R_f` and `R_f^m` as numerators over powers of `f`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::linalg::Rational;
use crate::polyring::{divide_exact, Poly};
use crate::quotient::Hypersurface;

/// `numerator / f^pole`. The zero element is stored as `0 / f^0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FracElem {
    pub numerator: Poly,
    pub pole: u32,
}

impl FracElem {
    pub fn new(numerator: Poly, pole: u32) -> Self {
        if numerator.is_zero() {
            return FracElem {
                numerator,
                pole: 0,
            };
        }
        FracElem { numerator, pole }
    }

    pub fn zero(nvars: usize) -> Self {
        FracElem::new(Poly::zero(nvars), 0)
    }

    pub fn from_poly(p: Poly) -> Self {
        FracElem::new(p, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `deg numerator - pole * deg f`, or `None` for zero or mixed degree.
    pub fn degree(&self, h: &Hypersurface) -> Option<i64> {
        let d = self.numerator.homogeneous_degree(&h.weights)?;
        Some(d - self.pole as i64 * h.deg_f)
    }

    /// Same element written over `f^(pole + k)`.
    pub fn raise(&self, h: &Hypersurface, k: u32) -> FracElem {
        FracElem {
            numerator: &self.numerator * &h.f.pow(k),
            pole: self.pole + k,
        }
    }

    /// Strips factors of `f` from the numerator while the pole is positive.
    pub fn normalize(&self, h: &Hypersurface) -> FracElem {
        let mut out = self.clone();
        if out.is_zero() {
            return FracElem::zero(h.nvars());
        }
        while out.pole > 0 {
            match divide_exact(&out.numerator, &h.f, &h.weights).expect("homogeneous numerator") {
                Some(q) => {
                    out.numerator = q;
                    out.pole -= 1;
                }
                None => break,
            }
        }
        out
    }

    pub fn add(&self, h: &Hypersurface, other: &FracElem) -> FracElem {
        let pole = self.pole.max(other.pole);
        let a = self.raise(h, pole - self.pole);
        let b = other.raise(h, pole - other.pole);
        FracElem::new(&a.numerator + &b.numerator, pole)
    }

    pub fn scale(&self, s: &Rational) -> FracElem {
        FracElem::new(self.numerator.scale(s), self.pole)
    }

    pub fn mul_poly(&self, p: &Poly) -> FracElem {
        FracElem::new(&self.numerator * p, self.pole)
    }

    /// Equality in `R_f` by cross multiplication.
    pub fn equals(&self, h: &Hypersurface, other: &FracElem) -> bool {
        let pole = self.pole.max(other.pole);
        self.raise(h, pole - self.pole).numerator == other.raise(h, pole - other.pole).numerator
    }
}

impl fmt::Display for FracElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/f^{}", self.numerator, self.pole)
    }
}

impl fmt::Debug for FracElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `d/dx_j (a / f^i) = (f da/dx_j - i a df/dx_j) / f^(i+1)`, normalized.
pub fn frac_partial(h: &Hypersurface, e: &FracElem, j: usize) -> FracElem {
    if e.is_zero() {
        return FracElem::zero(h.nvars());
    }
    let a = &e.numerator;
    if e.pole == 0 {
        return FracElem::new(a.partial(j), 0);
    }
    let i = Rational::from_integer(BigInt::from(e.pole));
    let num = &(&h.f * &a.partial(j)) - &(a * &h.f.partial(j)).scale(&i);
    FracElem::new(num, e.pole + 1).normalize(h)
}

/// The Euler operator `sum wi xi d/dxi` on `R_f`.
pub fn euler_apply_frac(h: &Hypersurface, e: &FracElem) -> FracElem {
    let mut acc = FracElem::zero(h.nvars());
    for i in 0..h.nvars() {
        let term = frac_partial(h, e, i)
            .mul_poly(&Poly::var(h.nvars(), i))
            .scale(&Rational::from_integer(h.weights.weight(i).into()));
        acc = acc.add(h, &term);
    }
    acc.normalize(h)
}

/// Whether `E e = deg(e) e` for a homogeneous `e`.
pub fn eulerian_check_frac(h: &Hypersurface, e: &FracElem) -> bool {
    if e.is_zero() {
        return euler_apply_frac(h, e).is_zero();
    }
    let Some(d) = e.degree(h) else {
        return false;
    };
    let lhs = euler_apply_frac(h, e);
    lhs.equals(h, &e.scale(&Rational::from_integer(d.into())))
}

/// `(E - (deg e - shift))^k e`.
pub fn shifted_euler_power(h: &Hypersurface, e: &FracElem, shift: i64, k: u32) -> FracElem {
    let d = e.degree(h).unwrap_or(0);
    let c = Rational::from_integer((d - shift).into());
    let mut x = e.clone();
    for _ in 0..k {
        let ex = euler_apply_frac(h, &x);
        x = ex.add(h, &x.scale(&-c.clone())).normalize(h);
    }
    x
}

/// Pole order of a vector: `-inf` at zero, `0` on polynomial vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PoleOrder {
    MinusInfinity,
    Order(u32),
}

impl fmt::Display for PoleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoleOrder::MinusInfinity => write!(f, "-inf"),
            PoleOrder::Order(i) => write!(f, "{i}"),
        }
    }
}

impl Serialize for PoleOrder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PoleOrder::MinusInfinity => s.serialize_str("-inf"),
            PoleOrder::Order(i) => s.serialize_u32(*i),
        }
    }
}

/// Column vector over `R_f`. `twists[k]` is the shift of slot `k` in its
/// ambient free module (`w_k` for the first De Rham strand, `w_i + w_j` for
/// the second), so slot `k` of a vector of total degree `d` has degree
/// `d + twists[k]`.
#[derive(Clone, PartialEq, Eq)]
pub struct FracVector {
    pub components: Vec<FracElem>,
    pub twists: Vec<i64>,
}

impl FracVector {
    pub fn new(components: Vec<FracElem>, twists: Vec<i64>) -> Self {
        assert_eq!(components.len(), twists.len(), "one twist per slot");
        FracVector { components, twists }
    }

    /// Numerators over a common `f^pole`.
    pub fn from_numerators(numerators: Vec<Poly>, pole: u32, twists: Vec<i64>) -> Self {
        let components = numerators
            .into_iter()
            .map(|a| FracElem {
                pole: if a.is_zero() { 0 } else { pole },
                numerator: a,
            })
            .collect();
        FracVector::new(components, twists)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(FracElem::is_zero)
    }

    /// Total degree in the twisted free module, when consistent.
    pub fn total_degree(&self, h: &Hypersurface) -> Option<i64> {
        let mut degs = self
            .components
            .iter()
            .zip(&self.twists)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, t)| c.degree(h).map(|d| d - t));
        let first = degs.next()??;
        for d in degs {
            if d? != first {
                return None;
            }
        }
        Some(first)
    }

    /// Common pole of a vector whose components all share one.
    pub fn common_pole(&self) -> u32 {
        self.components.iter().map(|c| c.pole).max().unwrap_or(0)
    }

    pub fn numerators(&self) -> Vec<Poly> {
        self.components.iter().map(|c| c.numerator.clone()).collect()
    }

    pub fn add(&self, h: &Hypersurface, other: &FracVector) -> FracVector {
        assert_eq!(self.twists, other.twists, "vectors from different modules");
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(h, b))
            .collect();
        FracVector::new(components, self.twists.clone())
    }

    pub fn scale(&self, s: &Rational) -> FracVector {
        FracVector::new(
            self.components.iter().map(|c| c.scale(s)).collect(),
            self.twists.clone(),
        )
    }

    /// Equality in `R_f^m`.
    pub fn equals(&self, h: &Hypersurface, other: &FracVector) -> bool {
        self.len() == other.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.equals(h, b))
    }

    /// Normal form: one common pole `i`, with `i >= 1` and some numerator not
    /// divisible by `f` off `R^m`, pole 0 on `R^m`. Built by raising every
    /// slot to the largest pole and then stripping common factors of `f`.
    pub fn normal_form(&self, h: &Hypersurface) -> FracVector {
        let nvars = h.nvars();
        if self.is_zero() {
            return FracVector::new(vec![FracElem::zero(nvars); self.len()], self.twists.clone());
        }
        let top = self.common_pole();
        let mut nums: Vec<Poly> = self
            .components
            .iter()
            .map(|c| c.raise(h, top - c.pole).numerator)
            .collect();
        let mut pole = top;
        while pole > 0 {
            let quotients: Option<Vec<Poly>> = nums
                .iter()
                .map(|a| divide_exact(a, &h.f, &h.weights).expect("homogeneous numerator"))
                .collect();
            match quotients {
                Some(q) => {
                    nums = q;
                    pole -= 1;
                }
                None => break,
            }
        }
        FracVector::from_numerators(nums, pole, self.twists.clone())
    }

    /// The same normal form reached the other way round: normalize each slot
    /// on its own, then raise all slots to the largest remaining pole.
    pub fn normal_form_by_components(&self, h: &Hypersurface) -> FracVector {
        let reduced: Vec<FracElem> = self.components.iter().map(|c| c.normalize(h)).collect();
        let top = reduced.iter().map(|c| c.pole).max().unwrap_or(0);
        let nums = reduced
            .iter()
            .map(|c| {
                if c.is_zero() {
                    c.numerator.clone()
                } else {
                    c.raise(h, top - c.pole).numerator
                }
            })
            .collect();
        FracVector::from_numerators(nums, top, self.twists.clone())
    }

    pub fn pole_order(&self, h: &Hypersurface) -> PoleOrder {
        pole_order(h, self)
    }

    /// `"(p1)/f^i, ..., (pm)/f^i"` in normal form.
    pub fn render(&self, h: &Hypersurface) -> String {
        let nf = self.normal_form(h);
        let pole = nf.common_pole();
        nf.components
            .iter()
            .map(|c| format!("({})/f^{}", c.numerator, pole))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Debug for FracVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.components).finish()
    }
}

pub fn normal_form(h: &Hypersurface, v: &FracVector) -> FracVector {
    v.normal_form(h)
}

/// The pole-order function `L`.
pub fn pole_order(h: &Hypersurface, v: &FracVector) -> PoleOrder {
    if v.is_zero() {
        return PoleOrder::MinusInfinity;
    }
    PoleOrder::Order(v.normal_form(h).common_pole())
}

impl PartialOrd<u32> for PoleOrder {
    fn partial_cmp(&self, other: &u32) -> Option<Ordering> {
        Some(self.cmp(&PoleOrder::Order(*other)))
    }
}

impl PartialEq<u32> for PoleOrder {
    fn eq(&self, other: &u32) -> bool {
        *self == PoleOrder::Order(*other)
    }
}

/// Sum of `d/dx_j v_j` for a vector in the first De Rham strand.
pub fn divergence(h: &Hypersurface, v: &FracVector) -> FracElem {
    let mut acc = FracElem::zero(h.nvars());
    for (j, c) in v.components.iter().enumerate() {
        acc = acc.add(h, &frac_partial(h, c, j));
    }
    acc.normalize(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::parse::parse_poly;
    use crate::polyring::Weights;

    fn circle() -> Hypersurface {
        let w = Weights::new(vec![2, 2]).unwrap();
        Hypersurface::new(parse_poly("x1^2+x2^2", 2).unwrap(), w).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, 2).unwrap()
    }

    fn twists() -> Vec<i64> {
        vec![2, 2]
    }

    #[test]
    fn partial_examples() {
        let h = circle();
        let e = FracElem::new(p("x1"), 1);
        assert_eq!(frac_partial(&h, &e, 0), FracElem::new(p("x2^2 - x1^2"), 2));
        assert!(frac_partial(&h, &FracElem::from_poly(p("5")), 1).is_zero());
        let inv = FracElem::new(p("1"), 1);
        assert_eq!(frac_partial(&h, &inv, 0), FracElem::new(p("-2*x1"), 2));
    }

    #[test]
    fn normal_form_examples() {
        let h = circle();
        let f = h.f.clone();
        let v = FracVector::from_numerators(vec![&p("x1") * &f, &p("x2") * &f], 2, twists());
        let nf = v.normal_form(&h);
        assert_eq!(nf, FracVector::from_numerators(vec![p("x1"), p("x2")], 1, twists()));

        let already = FracVector::from_numerators(vec![p("x1"), p("x2")], 1, twists());
        assert_eq!(already.normal_form(&h), already);

        let mixed = FracVector::from_numerators(vec![p("x1"), &f * &p("x2")], 2, twists());
        assert_eq!(mixed.normal_form(&h), mixed);
    }

    #[test]
    fn pole_order_examples() {
        let h = circle();
        let zero = FracVector::from_numerators(vec![p("0"), p("0")], 0, twists());
        assert_eq!(pole_order(&h, &zero), PoleOrder::MinusInfinity);
        let poly = FracVector::from_numerators(vec![p("x1"), p("x2")], 0, twists());
        assert_eq!(pole_order(&h, &poly), PoleOrder::Order(0));
        let one = FracVector::from_numerators(vec![p("x1"), p("x2")], 1, twists());
        assert_eq!(pole_order(&h, &one), PoleOrder::Order(1));
        assert!(PoleOrder::MinusInfinity < PoleOrder::Order(0));
    }

    #[test]
    fn euler_on_fractions() {
        let h = circle();
        let e = FracElem::new(p("x1"), 1);
        assert_eq!(e.degree(&h), Some(-2));
        assert!(euler_apply_frac(&h, &e).equals(&h, &e.scale(&q(-2))));
        assert!(eulerian_check_frac(&h, &e));
        assert!(eulerian_check_frac(&h, &FracElem::from_poly(p("1"))));
        assert!(eulerian_check_frac(&h, &FracElem::new(p("1"), 1)));
        assert!(!eulerian_check_frac(&h, &FracElem::new(p("x1 + 1"), 1)));
    }

    #[test]
    fn shifted_euler_never_vanishes() {
        let h = circle();
        let e = FracElem::new(p("x1*x2"), 3);
        for shift in [-2, -1, 1, 3] {
            for k in 1..=4 {
                let x = shifted_euler_power(&h, &e, shift, k);
                assert!(!x.is_zero());
                assert!(x.equals(&h, &e.scale(&q(shift.pow(k)))));
            }
        }
        assert!(shifted_euler_power(&h, &e, 0, 1).is_zero());
    }

    #[test]
    fn divergence_of_radial_field() {
        let h = circle();
        let v = FracVector::from_numerators(vec![p("x1"), p("x2")], 1, twists());
        assert!(divergence(&h, &v).is_zero());
        assert_eq!(v.total_degree(&h), Some(-4));
        assert_eq!(v.render(&h), "(x1)/f^1, (x2)/f^1");
    }
}
