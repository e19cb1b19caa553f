//! Degree slices of the De Rham complex of `R_f` with bounded pole order.
//!
//! Strand `p` is `sum_{|S| = p} R_f(w_S)`. In internal degree `d` with pole
//! cap `c`, the component for `S` is coordinatized by `R_{d + w_S + c deg f}`
//! through `a -> a / f^c`. The differential raises the cap by one.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::frac::{FracElem, FracVector};
use super::DerhamError;
use crate::complex::{drop_at, koszul_sign, subsets};
use crate::linalg::{self, Matrix, Rational, RowSpace};
use crate::polyring::{GradedBasis, Poly};
use crate::quotient::Hypersurface;

#[derive(Debug, Clone)]
pub struct DeRhamComponent {
    pub subset: Vec<usize>,
    pub twist: i64,
    pub basis: Arc<GradedBasis>,
    pub offset: usize,
}

/// Strand `p` in degree `d`, elements with pole order at most `cap`.
#[derive(Debug, Clone)]
pub struct DeRhamStrand {
    pub index: usize,
    pub degree: i64,
    pub cap: u32,
    pub components: Vec<DeRhamComponent>,
    dim: usize,
}

type Sparse = Vec<(usize, Rational)>;

impl DeRhamStrand {
    pub fn build(h: &Hypersurface, p: usize, d: i64, cap: u32) -> DeRhamStrand {
        let mut offset = 0;
        let mut cache: HashMap<i64, Arc<GradedBasis>> = HashMap::new();
        let components = subsets(h.nvars(), p)
            .into_iter()
            .map(|subset| {
                let twist: i64 = subset.iter().map(|&j| h.weights.weight(j)).sum();
                let deg = d + twist + cap as i64 * h.deg_f;
                let basis = cache
                    .entry(deg)
                    .or_insert_with(|| Arc::new(GradedBasis::new(deg, &h.weights)))
                    .clone();
                let comp = DeRhamComponent {
                    subset,
                    twist,
                    basis,
                    offset,
                };
                offset += comp.basis.len();
                comp
            })
            .collect();
        DeRhamStrand {
            index: p,
            degree: d,
            cap,
            components,
            dim: offset,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twists(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.twist).collect()
    }

    /// The vector with the given coordinates, over the common pole `cap`.
    pub fn vector(&self, h: &Hypersurface, coords: &[Rational]) -> FracVector {
        let nums = self
            .components
            .iter()
            .map(|c| c.basis.poly(&coords[c.offset..c.offset + c.basis.len()], h.nvars()))
            .collect();
        FracVector::from_numerators(nums, self.cap, self.twists())
    }

    /// Coordinates of `v`, which must have this strand's shape and degree
    /// and pole order at most `cap`.
    pub fn coordinates(&self, h: &Hypersurface, v: &FracVector) -> Result<Vec<Rational>, DerhamError> {
        if v.len() != self.components.len() || v.twists != self.twists() {
            return Err(DerhamError::Shape {
                expected: self.components.len(),
                found: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (comp, e) in self.components.iter().zip(&v.components) {
            if e.is_zero() {
                continue;
            }
            let e = e.normalize(h);
            if e.pole > self.cap {
                return Err(DerhamError::PoleExceedsCap {
                    pole: e.pole,
                    cap: self.cap,
                });
            }
            let raised = e.raise(h, self.cap - e.pole);
            let deg = raised.numerator.homogeneous_degree(&h.weights);
            if deg != Some(comp.basis.degree) {
                return Err(DerhamError::WrongDegree {
                    expected: self.degree,
                    found: v.total_degree(h),
                });
            }
            let coords = comp.basis.coordinates(&raised.numerator);
            out[comp.offset..comp.offset + coords.len()].clone_from_slice(&coords);
        }
        Ok(out)
    }

    fn index_of(&self) -> HashMap<&[usize], &DeRhamComponent> {
        self.components
            .iter()
            .map(|c| (c.subset.as_slice(), c))
            .collect()
    }
}

fn push_poly(out: &mut Sparse, comp: &DeRhamComponent, p: &Poly) {
    for (m, c) in p.terms() {
        let i = comp
            .basis
            .position(m)
            .expect("image lies in the target degree");
        out.push((comp.offset + i, c.clone()));
    }
}

fn densify(rows: usize, columns: &[Sparse]) -> Matrix {
    let mut m = Matrix::zeros(rows, columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, x) in col {
            m.add_to(*r, c, x);
        }
    }
    m
}

fn to_dense(col: &Sparse, dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (r, x) in col {
        out[*r] += x;
    }
    out
}

fn apply_sparse(columns: &[Sparse], dim: usize, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (x, col) in v.iter().zip(columns) {
        if x.is_zero() {
            continue;
        }
        for (r, y) in col {
            out[*r] += x * y;
        }
    }
    out
}

/// Columns of the differential from `src` (cap `c`) to `tgt` (strand
/// `p - 1`, cap `c + 1`).
fn differential_columns(h: &Hypersurface, src: &DeRhamStrand, tgt: &DeRhamStrand) -> Vec<Sparse> {
    assert_eq!(src.index, tgt.index + 1);
    assert_eq!(src.cap + 1, tgt.cap);
    let jac = h.jacobian();
    let index = tgt.index_of();
    let c = Rational::from_integer(src.cap.into());
    let mut columns = Vec::with_capacity(src.dim);
    for comp in &src.components {
        for m in &comp.basis.monomials {
            let a = Poly::term(m.clone(), Rational::from_integer(1.into()));
            let mut col = Sparse::new();
            for (t, &j) in comp.subset.iter().enumerate() {
                let target = index[drop_at(&comp.subset, t).as_slice()];
                let mut num = &(&h.f * &a.partial(j)) - &(&a * &jac[j]).scale(&c);
                if koszul_sign(t) < 0 {
                    num = -&num;
                }
                push_poly(&mut col, target, &num);
            }
            columns.push(col);
        }
    }
    columns
}

/// Matrix of the differential out of strand `p >= 1` at cap `cap`.
pub fn differential(h: &Hypersurface, src: &DeRhamStrand) -> (Matrix, DeRhamStrand) {
    let tgt = DeRhamStrand::build(h, src.index - 1, src.degree, src.cap + 1);
    let cols = differential_columns(h, src, &tgt);
    (densify(tgt.dim(), &cols), tgt)
}

/// Columns of the inclusion `pole <= from.cap` into `pole <= to.cap`.
fn embedding_columns(h: &Hypersurface, from: &DeRhamStrand, to: &DeRhamStrand) -> Vec<Sparse> {
    assert!(to.cap >= from.cap && to.index == from.index && to.degree == from.degree);
    let power = h.f.pow(to.cap - from.cap);
    let mut columns = Vec::with_capacity(from.dim);
    for (comp, target) in from.components.iter().zip(&to.components) {
        for m in &comp.basis.monomials {
            let mut col = Sparse::new();
            push_poly(&mut col, target, &power.mul_monomial(m));
            columns.push(col);
        }
    }
    columns
}

/// Maps coordinate vectors at `from.cap` to coordinates at `to.cap`.
pub struct Embedding {
    columns: Vec<Sparse>,
    target_dim: usize,
}

impl Embedding {
    pub fn new(h: &Hypersurface, from: &DeRhamStrand, to: &DeRhamStrand) -> Self {
        Embedding {
            columns: embedding_columns(h, from, to),
            target_dim: to.dim(),
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        apply_sparse(&self.columns, self.target_dim, v)
    }

    pub fn matrix(&self) -> Matrix {
        densify(self.target_dim, &self.columns)
    }
}

/// The first two differentials in one internal degree: `phi1` on cycles
/// capped at `c_z`, `phi2` on chains capped at `c_b`.
#[derive(Debug, Clone)]
pub struct DeRhamSlice {
    pub degree: i64,
    pub c_z: u32,
    pub c_b: u32,
    /// Strand 1 at cap `c_z`.
    pub k1: DeRhamStrand,
    /// Strand 0 at cap `c_z + 1`.
    pub k0: DeRhamStrand,
    /// Strand 2 at cap `c_b`.
    pub k2: DeRhamStrand,
    /// Strand 1 at cap `c_b + 1`, where boundaries land.
    pub k1_boundary: DeRhamStrand,
    pub phi1: Matrix,
    pub phi2: Matrix,
}

fn check_caps(c_z: u32, c_b: u32) -> Result<(), DerhamError> {
    if c_z == 0 || c_b < c_z {
        return Err(DerhamError::CapOrder { c_z, c_b });
    }
    Ok(())
}

pub fn derham_slice(h: &Hypersurface, d: i64, c_z: u32, c_b: u32) -> Result<DeRhamSlice, DerhamError> {
    check_caps(c_z, c_b)?;
    let k1 = DeRhamStrand::build(h, 1, d, c_z);
    let (phi1, k0) = differential(h, &k1);
    let k2 = DeRhamStrand::build(h, 2, d, c_b);
    let (phi2, k1_boundary) = differential(h, &k2);
    Ok(DeRhamSlice {
        degree: d,
        c_z,
        c_b,
        k1,
        k0,
        k2,
        k1_boundary,
        phi1,
        phi2,
    })
}

impl DeRhamSlice {
    /// Kernel of `phi1` at cap `c_z`.
    pub fn cycle_basis(&self) -> Vec<Vec<Rational>> {
        linalg::nullspace_basis(&self.phi1)
    }

    /// `phi1 phi2 = 0` with `phi1` rebuilt at the boundary cap.
    pub fn complex_identity_holds(&self, h: &Hypersurface) -> bool {
        let (phi1_top, _) = differential(h, &self.k1_boundary);
        phi1_top
            .mul(&self.phi2)
            .map(|m| m.is_zero())
            .unwrap_or(false)
    }

    /// `phi1` composed with the cap embedding of strand 1 agrees with
    /// `phi1` taken directly at the higher cap.
    pub fn embedding_commutes(&self, h: &Hypersurface) -> bool {
        let (phi1_top, k0_top) = differential(h, &self.k1_boundary);
        let up1 = Embedding::new(h, &self.k1, &self.k1_boundary).matrix();
        let up0 = Embedding::new(h, &self.k0, &k0_top).matrix();
        match (phi1_top.mul(&up1), up0.mul(&self.phi1)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

/// Truncated homology of strand `p` in one degree.
#[derive(Debug, Clone, Serialize)]
pub struct TruncatedHomology {
    pub index: usize,
    pub degree: i64,
    pub c_z: u32,
    pub c_b: u32,
    pub cycle_dim: usize,
    /// `dim (cycles meet boundaries)` at the boundary cap.
    pub boundary_overlap: usize,
    pub dim: usize,
    /// Complement representatives, rendered.
    pub representatives: Vec<String>,
    #[serde(skip)]
    pub cycles: Vec<FracVector>,
}

/// `dim Z_p(pole <= c_z) - dim(Z_p(pole <= c_z) meet d(pole <= c_b))` in
/// degree `d`, with cycle representatives spanning a complement.
pub fn truncated_h(
    h: &Hypersurface,
    p: usize,
    d: i64,
    c_z: u32,
    c_b: u32,
) -> Result<TruncatedHomology, DerhamError> {
    check_caps(c_z, c_b)?;
    let n = h.nvars();
    if p > n {
        return Err(DerhamError::IndexOutOfRange { index: p, max: n });
    }
    let zs = DeRhamStrand::build(h, p, d, c_z);
    let cycles: Vec<Vec<Rational>> = if p == 0 {
        (0..zs.dim())
            .map(|i| {
                let mut v = vec![Rational::zero(); zs.dim()];
                v[i] = Rational::from_integer(1.into());
                v
            })
            .collect()
    } else {
        linalg::nullspace_basis(&differential(h, &zs).0)
    };

    let top = DeRhamStrand::build(h, p, d, c_b + 1);
    let mut space = RowSpace::new(top.dim());
    if p < n {
        let chains = DeRhamStrand::build(h, p + 1, d, c_b);
        for col in differential_columns(h, &chains, &top) {
            space.insert(&to_dense(&col, top.dim()))?;
        }
    }
    let up = Embedding::new(h, &zs, &top);
    let mut reps = Vec::new();
    for z in &cycles {
        if space.insert(&up.apply(z))? {
            reps.push(zs.vector(h, z).normal_form(h));
        }
    }
    Ok(TruncatedHomology {
        index: p,
        degree: d,
        c_z,
        c_b,
        cycle_dim: cycles.len(),
        boundary_overlap: cycles.len() - reps.len(),
        dim: reps.len(),
        representatives: reps.iter().map(|v| v.render(h)).collect(),
        cycles: reps,
    })
}

pub fn truncated_h1(
    h: &Hypersurface,
    d: i64,
    c_z: u32,
    c_b: u32,
) -> Result<TruncatedHomology, DerhamError> {
    truncated_h(h, 1, d, c_z, c_b)
}

/// Cap sweep settings: cycles capped at `c = 1..=c_max`, boundaries at
/// `c + slack`, value declared after `run` equal results in a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub c_max: u32,
    pub slack: u32,
    pub run: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            c_max: 8,
            slack: 3,
            run: 3,
        }
    }
}

/// Outcome of a cap sweep. A value is an estimate, not a certified
/// dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Stabilized {
    /// `dim` held from cap `at_cap` through the last `run` caps.
    Value {
        dim: usize,
        at_cap: u32,
        sequence: Vec<usize>,
    },
    Unstable { sequence: Vec<usize> },
}

impl Stabilized {
    pub fn value(&self) -> Option<usize> {
        match self {
            Stabilized::Value { dim, .. } => Some(*dim),
            Stabilized::Unstable { .. } => None,
        }
    }

    pub fn sequence(&self) -> &[usize] {
        match self {
            Stabilized::Value { sequence, .. } | Stabilized::Unstable { sequence } => sequence,
        }
    }
}

pub fn stabilized_h(
    h: &Hypersurface,
    p: usize,
    d: i64,
    cfg: SweepConfig,
) -> Result<Stabilized, DerhamError> {
    if cfg.run < 2 {
        return Err(DerhamError::RunTooShort(cfg.run));
    }
    let mut sequence = Vec::new();
    for c in 1..=cfg.c_max {
        sequence.push(truncated_h(h, p, d, c, c + cfg.slack)?.dim);
        let len = sequence.len();
        if len >= cfg.run && sequence[len - cfg.run..].iter().all(|&x| x == sequence[len - 1]) {
            let dim = sequence[len - 1];
            let start = sequence.iter().rposition(|&x| x != dim).map_or(0, |i| i + 1);
            return Ok(Stabilized::Value {
                dim,
                at_cap: start as u32 + 1,
                sequence,
            });
        }
    }
    Ok(Stabilized::Unstable { sequence })
}

pub fn stabilized_h1(h: &Hypersurface, d: i64, cfg: SweepConfig) -> Result<Stabilized, DerhamError> {
    stabilized_h(h, 1, d, cfg)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConcentrationEntry {
    pub degree: i64,
    pub outcome: Stabilized,
    /// Whether vanishing is asserted here (every degree other than `-omega`).
    pub expect_zero: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConcentrationReport {
    pub index: usize,
    pub omega: i64,
    pub config: SweepConfig,
    pub entries: Vec<ConcentrationEntry>,
    pub all_ok: bool,
}

/// Per-degree verdicts for `H_p` of the De Rham complex of `R_f`: every
/// probed degree other than `-omega` must stabilize to zero.
pub fn concentration_check_index(
    h: &Hypersurface,
    p: usize,
    degrees: &[i64],
    cfg: SweepConfig,
) -> Result<ConcentrationReport, DerhamError> {
    let omega = h.omega();
    let mut entries = Vec::with_capacity(degrees.len());
    for &d in degrees {
        let outcome = stabilized_h(h, p, d, cfg)?;
        let expect_zero = d != -omega;
        let ok = !expect_zero || outcome.value() == Some(0);
        entries.push(ConcentrationEntry {
            degree: d,
            outcome,
            expect_zero,
            ok,
        });
    }
    Ok(ConcentrationReport {
        index: p,
        omega,
        config: cfg,
        all_ok: entries.iter().all(|e| e.ok),
        entries,
    })
}

pub fn concentration_check(
    h: &Hypersurface,
    degrees: &[i64],
    cfg: SweepConfig,
) -> Result<ConcentrationReport, DerhamError> {
    concentration_check_index(h, 1, degrees, cfg)
}

/// Convenience: the element `a / f^pole` placed in one slot of strand 1.
pub fn unit_slot(h: &Hypersurface, k: usize, e: FracElem) -> FracVector {
    let n = h.nvars();
    let mut comps = vec![FracElem::zero(n); n];
    comps[k] = e;
    FracVector::new(comps, (0..n).map(|i| h.weights.weight(i)).collect())
}
