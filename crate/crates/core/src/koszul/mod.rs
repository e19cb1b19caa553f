//! Graded Koszul complex of `A = R/(f)` on the partials of `f`.
//!
//! Strand `p` is `sum_{|S| = p} A(-p deg f + w_S)`, so in internal degree `d`
//! the component for `S` is `A_{d - p deg f + w_S}`. The differential
//! multiplies by `df/dx_j`, which has degree `deg f - w_j`, and uses the sign
//! convention of [`crate::complex`].

pub mod generic;

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{drop_at, koszul_sign, subsets};
use crate::linalg::{self, LinalgError, Matrix, Rational, RowSpace};
use crate::polyring::Poly;
use crate::quotient::{quotient_basis, HilbertFn, Hypersurface, QuotientBasis, QuotientError};

pub use generic::{generic_koszul_dims, lemma13_check};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KoszulError {
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("vector is not a cycle of the Koszul complex in degree {degree}")]
    NotACycle { degree: i64 },
    #[error("homological index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("operators {first} and {second} do not commute")]
    NonCommuting { first: usize, second: usize },
    #[error("operator {index} is {rows}x{cols}, expected {dim}x{dim}")]
    OperatorShape {
        index: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("at least one operator is required")]
    NoOperators,
}

/// One summand `A_{degree}` of a strand, labelled by its index set.
#[derive(Debug, Clone)]
pub struct KoszulComponent {
    pub subset: Vec<usize>,
    /// Degree inside `A` of this component's piece.
    pub degree: i64,
    pub basis: Arc<QuotientBasis>,
    /// Offset of this component's coordinates within the strand.
    pub offset: usize,
}

/// The Koszul complex restricted to one internal degree, strands
/// `0..=top`.
#[derive(Debug, Clone)]
pub struct KoszulSlice {
    pub degree: i64,
    pub strands: Vec<Vec<KoszulComponent>>,
    /// `psi[p]` maps strand `p` to strand `p - 1`; `psi[0]` is the zero map
    /// out of strand 0.
    pub psi: Vec<Matrix>,
}

impl KoszulSlice {
    /// Builds strands `0..=top` (clamped to `n`).
    pub fn build(h: &Hypersurface, d: i64, top: usize) -> KoszulSlice {
        let n = h.nvars();
        let top = top.min(n);
        let jac = h.jacobian();
        let mut cache: HashMap<i64, Arc<QuotientBasis>> = HashMap::new();
        let mut basis_at = |deg: i64| {
            cache
                .entry(deg)
                .or_insert_with(|| Arc::new(quotient_basis(h, deg)))
                .clone()
        };
        let mut strands = Vec::with_capacity(top + 1);
        for p in 0..=top {
            let mut offset = 0;
            let comps = subsets(n, p)
                .into_iter()
                .map(|subset| {
                    let w_s: i64 = subset.iter().map(|&j| h.weights.weight(j)).sum();
                    let degree = d - p as i64 * h.deg_f + w_s;
                    let basis = basis_at(degree);
                    let comp = KoszulComponent {
                        subset,
                        degree,
                        basis,
                        offset,
                    };
                    offset += comp.basis.dim();
                    comp
                })
                .collect::<Vec<_>>();
            strands.push(comps);
        }
        let mut psi = vec![Matrix::zeros(0, strand_dim(&strands[0]))];
        for p in 1..=top {
            psi.push(differential(&jac, &strands[p], &strands[p - 1]));
        }
        KoszulSlice {
            degree: d,
            strands,
            psi,
        }
    }

    pub fn top(&self) -> usize {
        self.strands.len() - 1
    }

    pub fn dim(&self, p: usize) -> usize {
        strand_dim(&self.strands[p])
    }

    pub fn psi(&self, p: usize) -> &Matrix {
        &self.psi[p]
    }

    /// `dim H_p` in this degree. Needs strand `p + 1` unless `p = n`.
    pub fn homology_dim(&self, p: usize, n: usize) -> usize {
        assert!(p <= self.top(), "strand {p} not built");
        let rank_out = if p == 0 { 0 } else { linalg::rank(&self.psi[p]) };
        let rank_in = if p < n {
            assert!(p < self.top(), "strand {} not built", p + 1);
            linalg::rank(&self.psi[p + 1])
        } else {
            0
        };
        self.dim(p) - rank_out - rank_in
    }

    /// Echelon basis of the boundaries `im psi_{p+1}` inside strand `p`.
    pub fn boundary_basis(&self, p: usize) -> Vec<Vec<Rational>> {
        let mut space = RowSpace::new(self.dim(p));
        if p < self.top() {
            let m = &self.psi[p + 1];
            for c in 0..m.cols() {
                space.insert(&m.column(c)).expect("strand dimension");
            }
        }
        space.basis()
    }

    /// Coordinates in strand 1 of a vector of polynomials, one per variable;
    /// entry `j` must be homogeneous of degree `self.strands[1][j].degree`.
    pub fn strand1_coordinates(&self, entries: &[Poly]) -> Vec<Rational> {
        let mut v = Vec::with_capacity(self.dim(1));
        for (comp, p) in self.strands[1].iter().zip(entries) {
            v.extend(comp.basis.reduce(p));
        }
        v
    }

    /// Packages a strand-1 cycle with the boundary basis of this degree.
    pub fn class_rep(&self, cycle: Vec<Rational>) -> Result<ClassRep, KoszulError> {
        let image = self.psi[1].mul_vec(&cycle)?;
        if image.iter().any(|x| !x.is_zero()) {
            return Err(KoszulError::NotACycle {
                degree: self.degree,
            });
        }
        Ok(ClassRep {
            degree: self.degree,
            cycle,
            boundary_basis: self.boundary_basis(1),
        })
    }
}

fn strand_dim(comps: &[KoszulComponent]) -> usize {
    comps.iter().map(|c| c.basis.dim()).sum()
}

fn differential(
    jac: &[Poly],
    source: &[KoszulComponent],
    target: &[KoszulComponent],
) -> Matrix {
    let index: HashMap<&[usize], &KoszulComponent> =
        target.iter().map(|c| (c.subset.as_slice(), c)).collect();
    let mut m = Matrix::zeros(strand_dim(target), strand_dim(source));
    for comp in source {
        for (k, mono) in comp.basis.representatives.iter().enumerate() {
            let col = comp.offset + k;
            for (t, &j) in comp.subset.iter().enumerate() {
                let tgt = index[drop_at(&comp.subset, t).as_slice()];
                if tgt.basis.dim() == 0 || jac[j].is_zero() {
                    continue;
                }
                let prod = jac[j].mul_monomial(mono);
                let prod = if koszul_sign(t) < 0 { -&prod } else { prod };
                let coords = tgt.basis.reduce(&prod);
                for (r, x) in coords.iter().enumerate() {
                    if !x.is_zero() {
                        m.add_to(tgt.offset + r, col, x);
                    }
                }
            }
        }
    }
    m
}

/// Koszul slice with strands up to `min(n, 3)`.
pub fn koszul_slice(h: &Hypersurface, d: i64) -> KoszulSlice {
    KoszulSlice::build(h, d, 3)
}

/// `dim H_i(df; A)_d`.
pub fn koszul_h_dim(h: &Hypersurface, i: usize, d: i64) -> Result<usize, KoszulError> {
    let n = h.nvars();
    if i > n {
        return Err(KoszulError::IndexOutOfRange { index: i, max: n });
    }
    let slice = KoszulSlice::build(h, d, i + 1);
    Ok(slice.homology_dim(i, n))
}

/// Hilbert function of `H_1(df; A)` over `[lo, hi]`.
pub fn h1_hilbert(h: &Hypersurface, lo: i64, hi: i64) -> Result<HilbertFn, KoszulError> {
    if lo > hi {
        return Err(QuotientError::EmptyWindow { lo, hi }.into());
    }
    let dims = (lo..=hi)
        .map(|d| koszul_h_dim(h, 1, d))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HilbertFn { lo, hi, dims })
}

/// A class in `H_1(df; A)_degree`: a strand-1 cycle together with a basis
/// of the boundaries in that degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRep {
    pub degree: i64,
    #[serde(serialize_with = "crate::report::ser_rationals")]
    pub cycle: Vec<Rational>,
    #[serde(skip)]
    pub boundary_basis: Vec<Vec<Rational>>,
}

impl ClassRep {
    pub fn is_zero_vector(&self) -> bool {
        self.cycle.iter().all(Zero::is_zero)
    }
}

/// Whether the class of `c.cycle` vanishes, i.e. the cycle is a boundary.
pub fn class_is_zero(h: &Hypersurface, c: &ClassRep) -> Result<bool, KoszulError> {
    let slice = KoszulSlice::build(h, c.degree, 2);
    let image = slice.psi(1).mul_vec(&c.cycle)?;
    if image.iter().any(|x| !x.is_zero()) {
        return Err(KoszulError::NotACycle { degree: c.degree });
    }
    Ok(linalg::in_affine(&c.cycle, &[], &c.boundary_basis)?.is_some())
}

/// Euler characteristics `(sum (-1)^p dim K_p, sum (-1)^p dim H_p)` of the
/// full complex in degree `d`.
pub fn euler_characteristics(h: &Hypersurface, d: i64) -> (i64, i64) {
    let n = h.nvars();
    let slice = KoszulSlice::build(h, d, n);
    let mut chain = 0i64;
    let mut homology = 0i64;
    for p in 0..=n {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        chain += sign * slice.dim(p) as i64;
        homology += sign * slice.homology_dim(p, n) as i64;
    }
    (chain, homology)
}
