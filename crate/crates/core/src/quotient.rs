//! Degreewise model of the hypersurface ring `A = R/(f)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Matrix, Rational, RowSpace};
use crate::polyring::{jacobian, monomial_basis, GradedBasis, Monomial, Poly, PolyError, Weights};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("f must be a nonzero homogeneous polynomial")]
    ZeroModulus,
    #[error("window {lo}:{hi} is empty")]
    EmptyWindow { lo: i64, hi: i64 },
}

/// Validated homogeneous modulus: `f` together with its weights and degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypersurface {
    pub f: Poly,
    pub weights: Weights,
    pub deg_f: i64,
}

impl Hypersurface {
    pub fn new(f: Poly, weights: Weights) -> Result<Self, QuotientError> {
        if f.is_zero() {
            return Err(QuotientError::ZeroModulus);
        }
        let deg_f = f.degree(&weights)?;
        Ok(Hypersurface { f, weights, deg_f })
    }

    pub fn nvars(&self) -> usize {
        self.weights.nvars()
    }

    pub fn omega(&self) -> i64 {
        self.weights.omega()
    }

    pub fn jacobian(&self) -> Vec<Poly> {
        jacobian(&self.f)
    }
}

/// Inclusive degree window `[lo, hi]` with one dimension per degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFn {
    pub lo: i64,
    pub hi: i64,
    pub dims: Vec<usize>,
}

impl HilbertFn {
    pub fn from_fn(lo: i64, hi: i64, mut dim: impl FnMut(i64) -> usize) -> Self {
        HilbertFn {
            lo,
            hi,
            dims: (lo..=hi).map(&mut dim).collect(),
        }
    }

    /// Dimension at `d`; `None` outside the window.
    pub fn get(&self, d: i64) -> Option<usize> {
        if d < self.lo || d > self.hi {
            return None;
        }
        self.dims.get((d - self.lo) as usize).copied()
    }

    /// Degrees with nonzero dimension.
    pub fn support(&self) -> BTreeMap<i64, usize> {
        (self.lo..=self.hi)
            .zip(&self.dims)
            .filter(|(_, &n)| n > 0)
            .map(|(d, &n)| (d, n))
            .collect()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Parses a `lo:hi` window.
pub fn parse_window(s: &str) -> Option<(i64, i64)> {
    let (lo, hi) = s.split_once(':')?;
    let lo = lo.trim().parse().ok()?;
    let hi = hi.trim().parse().ok()?;
    (lo <= hi).then_some((lo, hi))
}

/// A basis of `A_d` by monomial representatives, with the projection from
/// `R_d` onto their span along `f * R_{d - deg f}`.
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    pub degree: i64,
    pub ambient: GradedBasis,
    pub representatives: Vec<Monomial>,
    /// `representatives.len() x ambient.len()`.
    pub projection: Matrix,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of a homogeneous `p` of this degree.
    pub fn reduce(&self, p: &Poly) -> Vec<Rational> {
        let coords = self.ambient.coordinates(p);
        self.project(&coords)
    }

    pub fn project(&self, ambient_coords: &[Rational]) -> Vec<Rational> {
        self.projection
            .mul_vec(ambient_coords)
            .expect("ambient coordinates")
    }

    /// The polynomial built from representative coordinates.
    pub fn lift(&self, coords: &[Rational], nvars: usize) -> Poly {
        Poly::from_terms(
            nvars,
            self.representatives
                .iter()
                .cloned()
                .zip(coords.iter().cloned())
                .filter(|(_, c)| !c.is_zero()),
        )
    }
}

/// Row space spanned by `g * R_{d - deg g}` for each generator, inside
/// coordinates of `R_d`.
pub(crate) fn ideal_piece(gens: &[(Poly, i64)], target: &GradedBasis, w: &Weights) -> RowSpace {
    let mut space = RowSpace::new(target.len());
    for (g, dg) in gens {
        if g.is_zero() {
            continue;
        }
        for m in monomial_basis(target.degree - dg, w) {
            let v = target.coordinates(&g.mul_monomial(&m));
            space.insert(&v).expect("target dimension");
        }
    }
    space
}

pub fn quotient_basis(h: &Hypersurface, d: i64) -> QuotientBasis {
    let ambient = GradedBasis::new(d, &h.weights);
    let space = ideal_piece(&[(h.f.clone(), h.deg_f)], &ambient, &h.weights);
    let reduced = space.reduced();
    let mut is_pivot = vec![false; ambient.len()];
    for (c, _) in &reduced {
        is_pivot[*c] = true;
    }
    let reps: Vec<usize> = (0..ambient.len()).filter(|c| !is_pivot[*c]).collect();
    let mut rep_pos = vec![usize::MAX; ambient.len()];
    for (k, &c) in reps.iter().enumerate() {
        rep_pos[c] = k;
    }
    let mut projection = Matrix::zeros(reps.len(), ambient.len());
    for (k, &c) in reps.iter().enumerate() {
        projection.set(k, c, Rational::from_integer(1.into()));
    }
    // a pivot monomial equals minus the rest of its reduced row modulo f
    for (pivot, row) in &reduced {
        for (k, &c) in reps.iter().enumerate() {
            if !row[c].is_zero() {
                projection.set(k, *pivot, -row[c].clone());
            }
        }
    }
    QuotientBasis {
        degree: d,
        representatives: reps.iter().map(|&c| ambient.monomials[c].clone()).collect(),
        ambient,
        projection,
    }
}

/// `d -> dim A_d` over `[lo, hi]`.
pub fn hilbert_function(h: &Hypersurface, lo: i64, hi: i64) -> Result<HilbertFn, QuotientError> {
    if lo > hi {
        return Err(QuotientError::EmptyWindow { lo, hi });
    }
    Ok(HilbertFn::from_fn(lo, hi, |d| quotient_basis(h, d).dim()))
}

/// `dim (R/(gens, f))_d`.
pub fn residue_dim(gens: &[Poly], f: &Poly, w: &Weights, d: i64) -> Result<usize, QuotientError> {
    let mut all = Vec::with_capacity(gens.len() + 1);
    for g in gens.iter().chain(std::iter::once(f)) {
        if g.is_zero() {
            continue;
        }
        all.push((g.clone(), g.degree(w)?));
    }
    let target = GradedBasis::new(d, w);
    let space = ideal_piece(&all, &target, w);
    Ok(target.len() - space.rank())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ArtinianVerdict {
    /// `top_degree` is the last degree with a nonzero piece; `None` when the
    /// residue ring is zero.
    Artinian { top_degree: Option<i64> },
    /// No zero run of the required length up to `scanned_to`.
    Inconclusive { scanned_to: i64 },
}

/// Scans `dim (R/(gens, f))_d` for `d = 0..=d_max` looking for a run of
/// `max wi` consecutive zeros. Such a run forces every higher piece to
/// vanish, since each `B_e` is spanned by `xi * B_{e - wi}`.
pub fn artinian_residue_check(
    gens: &[Poly],
    f: &Poly,
    w: &Weights,
    d_max: i64,
) -> Result<ArtinianVerdict, QuotientError> {
    let run_needed = w.max_weight();
    let mut run = 0;
    let mut top = None;
    for d in 0..=d_max {
        if residue_dim(gens, f, w, d)? == 0 {
            run += 1;
            if run >= run_needed {
                return Ok(ArtinianVerdict::Artinian { top_degree: top });
            }
        } else {
            run = 0;
            top = Some(d);
        }
    }
    Ok(ArtinianVerdict::Inconclusive { scanned_to: d_max })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SingularityVerdict {
    /// `R/(J + (f))` is Artinian with the given top degree.
    Isolated { top_degree: Option<i64> },
    Inconclusive { scanned_to: i64 },
}

impl SingularityVerdict {
    pub fn is_isolated(&self) -> bool {
        matches!(self, SingularityVerdict::Isolated { .. })
    }
}

/// Default scan bound `4 deg f + 2 omega`.
pub fn default_scan_bound(h: &Hypersurface) -> i64 {
    4 * h.deg_f + 2 * h.omega()
}

/// Isolated-singularity test via Artinian-ness of `R/(J + (f))`.
pub fn isolated_singularity_check(
    h: &Hypersurface,
    d_max: i64,
) -> Result<SingularityVerdict, QuotientError> {
    Ok(
        match artinian_residue_check(&h.jacobian(), &h.f, &h.weights, d_max)? {
            ArtinianVerdict::Artinian { top_degree } => SingularityVerdict::Isolated { top_degree },
            ArtinianVerdict::Inconclusive { scanned_to } => {
                SingularityVerdict::Inconclusive { scanned_to }
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn hyp(f: &str, w: &[u32]) -> Hypersurface {
        let w = Weights::new(w.to_vec()).unwrap();
        Hypersurface::new(parse_poly(f, w.nvars()).unwrap(), w).unwrap()
    }

    #[test]
    fn quotient_dims() {
        let h = hyp("x1^2+x2^2", &[2, 2]);
        assert_eq!(quotient_basis(&h, 0).dim(), 1);
        assert_eq!(quotient_basis(&h, 4).dim(), 2);
        assert_eq!(quotient_basis(&h, 3).dim(), 0);
    }

    #[test]
    fn projection_kills_f_multiples() {
        let h = hyp("x1^2+x2^2", &[2, 2]);
        let qb = quotient_basis(&h, 6);
        let g = &h.f * &parse_poly("3*x1 - x2", 2).unwrap();
        assert!(qb.reduce(&g).iter().all(Zero::is_zero));
        for (k, m) in qb.representatives.iter().enumerate() {
            let v = qb.reduce(&Poly::term(m.clone(), crate::linalg::q(1)));
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x.is_zero(), j != k);
            }
        }
    }

    #[test]
    fn hilbert_examples() {
        let h = hyp("x1^2+x2^2", &[2, 2]);
        assert_eq!(
            hilbert_function(&h, 0, 8).unwrap().dims,
            vec![1, 0, 2, 0, 2, 0, 2, 0, 2]
        );
        assert_eq!(hilbert_function(&h, -3, -1).unwrap().dims, vec![0, 0, 0]);
        let line = hyp("x1", &[1]);
        assert_eq!(hilbert_function(&line, 0, 3).unwrap().dims, vec![1, 0, 0, 0]);
        assert!(hilbert_function(&h, 2, 1).is_err());
    }

    #[test]
    fn artinian_examples() {
        let h = hyp("x1^2+x2^2", &[2, 2]);
        assert_eq!(
            artinian_residue_check(&h.jacobian(), &h.f, &h.weights, 20).unwrap(),
            ArtinianVerdict::Artinian {
                top_degree: Some(0)
            }
        );
        for m in 2..6u32 {
            let f = format!("x1^2+x2^2+x3^{m}");
            let h = hyp(&f, &[m, m, 2]);
            assert_eq!(
                artinian_residue_check(&h.jacobian(), &h.f, &h.weights, 40).unwrap(),
                ArtinianVerdict::Artinian {
                    top_degree: Some(2 * (m as i64 - 2))
                }
            );
        }
        let w = Weights::new(vec![1, 1]).unwrap();
        let x1 = parse_poly("x1", 2).unwrap();
        let x1sq = parse_poly("x1^2", 2).unwrap();
        assert_eq!(
            artinian_residue_check(&[x1], &x1sq, &w, 12).unwrap(),
            ArtinianVerdict::Inconclusive { scanned_to: 12 }
        );
    }

    #[test]
    fn isolated_examples() {
        let h = hyp("x1^2+x2^2", &[2, 2]);
        assert!(isolated_singularity_check(&h, default_scan_bound(&h))
            .unwrap()
            .is_isolated());
        let h = hyp("x1^2*x2", &[1, 1]);
        assert_eq!(
            isolated_singularity_check(&h, 30).unwrap(),
            SingularityVerdict::Inconclusive { scanned_to: 30 }
        );
        let h = hyp("x1^2+x2^2+x3^4", &[2, 2, 1]);
        assert!(isolated_singularity_check(&h, default_scan_bound(&h))
            .unwrap()
            .is_isolated());
        let smooth = hyp("x1", &[1]);
        assert_eq!(
            isolated_singularity_check(&smooth, 4).unwrap(),
            SingularityVerdict::Isolated { top_degree: None }
        );
    }

    #[test]
    fn window_parsing() {
        assert_eq!(parse_window("0:8"), Some((0, 8)));
        assert_eq!(parse_window("-3:-1"), Some((-3, -1)));
        assert_eq!(parse_window("4:1"), None);
        assert_eq!(parse_window("4"), None);
    }
}
