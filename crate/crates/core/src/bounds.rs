//! Candidate degrees, the dimension bound for `H_1` of the De Rham complex of
//! `R_f`, pole orders of classes, and the pole-order filtration.

use serde::Serialize;
use thiserror::Error;

use crate::derham::{
    self, check_top_cycle, stabilized_h1, theta, DeRhamStrand, DerhamError, Embedding, FracVector,
    Stabilized, SweepConfig,
};
use crate::koszul::{class_is_zero, h1_hilbert, koszul_h_dim, KoszulError, KoszulSlice};
use crate::linalg::{self, LinalgError, Rational, RowSpace};
use crate::parse::parse_poly;
use crate::polyring::Weights;
use crate::quotient::{
    default_scan_bound, isolated_singularity_check, Hypersurface, QuotientError, SingularityVerdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("isolated-singularity check inconclusive up to degree {scanned_to}")]
    NotIsolated { scanned_to: i64 },
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    Derham(#[from] DerhamError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("cap sweep at degree {degree} did not stabilize: {sequence:?}")]
    Unstable { degree: i64, sequence: Vec<usize> },
    #[error("example family needs n >= 2 and m >= 2, got n = {n}, m = {m}")]
    BadFamily { n: usize, m: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateScan {
    /// Last nonzero degree of the residue ring `R/(J + (f))`.
    pub witness_top: Option<i64>,
    /// Window over which `H_1(df; A)` was scanned.
    pub scan_window: (i64, i64),
    pub d_top: Option<i64>,
    pub nu_max: u32,
    /// `(nu, (nu + 1) deg f - omega)` for `nu = 1..=nu_max`.
    pub candidates: Vec<(u32, i64)>,
}

fn require_isolated(h: &Hypersurface) -> Result<Option<i64>, BoundsError> {
    match isolated_singularity_check(h, default_scan_bound(h))? {
        SingularityVerdict::Isolated { top_degree } => Ok(top_degree),
        SingularityVerdict::Inconclusive { scanned_to } => Err(BoundsError::NotIsolated { scanned_to }),
    }
}

pub fn candidate_degree(h: &Hypersurface, nu: u32) -> i64 {
    (nu as i64 + 1) * h.deg_f - h.omega()
}

pub fn candidate_degrees(h: &Hypersurface) -> Result<CandidateScan, BoundsError> {
    let witness_top = require_isolated(h)?;
    let lo = (h.deg_f - h.weights.max_weight()).min(0);
    let hi = witness_top.unwrap_or(0) + h.deg_f + h.weights.max_weight();
    let hf = h1_hilbert(h, lo, hi)?;
    let d_top = hf.support().keys().next_back().copied();
    let nu_max = d_top.map_or(0, |t| ((t + h.omega()).div_euclid(h.deg_f) - 1).max(0) as u32);
    Ok(CandidateScan {
        witness_top,
        scan_window: (lo, hi),
        d_top,
        nu_max,
        candidates: (1..=nu_max).map(|nu| (nu, candidate_degree(h, nu))).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub nu: u32,
    pub degree: i64,
    pub h1dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedEstimate {
    pub degree: i64,
    pub config: SweepConfig,
    pub outcome: Stabilized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub f: String,
    pub weights: Vec<u32>,
    pub deg_f: i64,
    pub omega: i64,
    pub nu_max: u32,
    pub scan_window: (i64, i64),
    pub rows: Vec<BoundRow>,
    /// Upper bound as stated: the sum of the row dimensions.
    pub bound: usize,
    pub truncated_estimate: Option<TruncatedEstimate>,
    /// `Some(true)` when the estimate stabilized to a value other than the
    /// bound; `None` when there is no stabilized estimate.
    pub divergence: Option<bool>,
}

/// Sum of `dim H_1(df; A)` over the candidate degrees, optionally beside a
/// cap-sweep estimate of the De Rham `H_1` in degree `-omega`.
pub fn theorem2_bound(h: &Hypersurface, estimate: Option<SweepConfig>) -> Result<BoundReport, BoundsError> {
    let scan = candidate_degrees(h)?;
    let rows = scan
        .candidates
        .iter()
        .map(|&(nu, degree)| {
            Ok(BoundRow {
                nu,
                degree,
                h1dim: koszul_h_dim(h, 1, degree)?,
            })
        })
        .collect::<Result<Vec<_>, KoszulError>>()?;
    let bound = rows.iter().map(|r| r.h1dim).sum();
    let truncated_estimate = estimate
        .map(|cfg| {
            let degree = -h.omega();
            stabilized_h1(h, degree, cfg).map(|outcome| TruncatedEstimate {
                degree,
                config: cfg,
                outcome,
            })
        })
        .transpose()?;
    let divergence = truncated_estimate
        .as_ref()
        .and_then(|t| t.outcome.value())
        .map(|v| v != bound);
    Ok(BoundReport {
        f: h.f.to_string(),
        weights: h.weights.as_slice().to_vec(),
        deg_f: h.deg_f,
        omega: h.omega(),
        nu_max: scan.nu_max,
        scan_window: scan.scan_window,
        rows,
        bound,
        truncated_estimate,
        divergence,
    })
}

/// Pole caps: cycles up to `c_z`, boundaries from chains up to `c_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub c_z: u32,
    pub c_b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassL {
    pub order: u32,
    /// A representative of the class with pole order `order`.
    pub representative: FracVector,
}

struct Boundaries {
    strand: DeRhamStrand,
    basis: Vec<Vec<Rational>>,
}

fn boundaries(h: &Hypersurface, d: i64, c_b: u32) -> Result<Boundaries, DerhamError> {
    let chains = DeRhamStrand::build(h, 2, d, c_b);
    let (phi2, strand) = derham::slice::differential(h, &chains);
    let mut space = RowSpace::new(strand.dim());
    for c in 0..phi2.cols() {
        space.insert(&phi2.column(c))?;
    }
    Ok(Boundaries {
        strand,
        basis: space.basis(),
    })
}

fn unit_columns(e: &Embedding, dim: usize) -> Vec<Vec<Rational>> {
    (0..dim)
        .map(|i| {
            let mut v = vec![Rational::from_integer(0.into()); dim];
            v[i] = Rational::from_integer(1.into());
            e.apply(&v)
        })
        .collect()
}

/// Least pole order over representatives of the class of `cycle`, with
/// boundaries drawn from chains of pole order at most `caps.c_b`.
pub fn class_l(h: &Hypersurface, cycle: &FracVector, caps: Caps) -> Result<ClassL, BoundsError> {
    check_top_cycle(h, cycle)?;
    let d = -h.omega();
    let b = boundaries(h, d, caps.c_b)?;
    let xi = b.strand.coordinates(h, cycle)?;
    if linalg::in_affine(&xi, &[], &b.basis)?.is_some() {
        return Err(DerhamError::ZeroClass.into());
    }
    for p in 1..=b.strand.cap {
        let low = DeRhamStrand::build(h, 1, d, p);
        let up = Embedding::new(h, &low, &b.strand);
        let gens = unit_columns(&up, low.dim());
        if let Some(coeffs) = linalg::in_affine(&xi, &gens, &b.basis)? {
            return Ok(ClassL {
                order: p,
                representative: low.vector(h, &coeffs).normal_form(h),
            });
        }
    }
    unreachable!("the cycle itself has pole order within the boundary cap")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaImage {
    /// Rendered minimal-pole representative.
    pub representative: String,
    pub degree: i64,
    pub is_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationStep {
    pub nu: u32,
    pub dim_f: usize,
    pub jump: usize,
    pub images: Vec<EtaImage>,
    /// Rank of the induced map on `F_nu / F_(nu-1)`.
    pub eta_rank: usize,
    pub injective: bool,
    /// Representative independence, tested by adding a boundary of pole
    /// order at most `nu` to one representative; `None` if no such boundary
    /// keeps the pole order.
    pub well_defined: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub note: &'static str,
    pub degree: i64,
    pub caps: Caps,
    pub stabilized_dim: usize,
    pub f0_zero: bool,
    pub monotone: bool,
    pub exhaustive: bool,
    pub steps: Vec<FiltrationStep>,
}

const FILTRATION_NOTE: &str =
    "filtration computed on the truncated stabilized space, assumed equal to the true H_1";

/// Pole-order filtration of the stabilized degree `-omega` homology, with
/// the images of minimal representatives in `H_1(df; A)`.
pub fn filtration_report(h: &Hypersurface, cfg: SweepConfig) -> Result<FiltrationReport, BoundsError> {
    require_isolated(h)?;
    let d = -h.omega();
    match stabilized_h1(h, d, cfg)? {
        Stabilized::Value { dim: 0, .. } => Ok(FiltrationReport {
            note: FILTRATION_NOTE,
            degree: d,
            caps: Caps { c_z: 0, c_b: 0 },
            stabilized_dim: 0,
            f0_zero: true,
            monotone: true,
            exhaustive: true,
            steps: vec![],
        }),
        Stabilized::Value { dim, sequence, .. } => {
            let c_z = sequence.len() as u32;
            filtration_at(h, Caps { c_z, c_b: c_z + cfg.slack }, dim)
        }
        Stabilized::Unstable { sequence } => Err(BoundsError::Unstable { degree: d, sequence }),
    }
}

/// The filtration with explicit caps. `expected_dim` is the homology
/// dimension the jumps must add up to.
pub fn filtration_at(h: &Hypersurface, caps: Caps, expected_dim: usize) -> Result<FiltrationReport, BoundsError> {
    let d = -h.omega();
    let b = boundaries(h, d, caps.c_b)?;
    let mut space = RowSpace::new(b.strand.dim());
    for v in &b.basis {
        space.insert(v)?;
    }
    let rank_b = space.rank();
    let mut dims = Vec::new();
    let mut steps = Vec::new();
    for nu in 0..=caps.c_z {
        let low = DeRhamStrand::build(h, 1, d, nu);
        let (phi1, _) = derham::slice::differential(h, &low);
        let up = Embedding::new(h, &low, &b.strand);
        let mut fresh = Vec::new();
        for z in linalg::nullspace_basis(&phi1) {
            if space.insert(&up.apply(&z))? {
                fresh.push(low.vector(h, &z));
            }
        }
        let dim_f = space.rank() - rank_b;
        dims.push(dim_f);
        if nu == 0 {
            continue;
        }
        steps.push(eta_step(h, nu, dim_f, &fresh)?);
    }
    let monotone = dims.windows(2).all(|w| w[0] <= w[1]);
    Ok(FiltrationReport {
        note: FILTRATION_NOTE,
        degree: d,
        caps,
        stabilized_dim: expected_dim,
        f0_zero: dims[0] == 0,
        monotone,
        exhaustive: dims.last() == Some(&expected_dim),
        steps,
    })
}

fn eta_step(h: &Hypersurface, nu: u32, dim_f: usize, reps: &[FracVector]) -> Result<FiltrationStep, BoundsError> {
    let degree = (nu as i64 + 1) * h.deg_f - h.omega();
    let slice = KoszulSlice::build(h, degree, 2);
    let mut space = RowSpace::new(slice.dim(1));
    for v in slice.boundary_basis(1) {
        space.insert(&v)?;
    }
    let mut images = Vec::with_capacity(reps.len());
    let mut eta_rank = 0;
    for v in reps {
        let c = theta(h, v)?;
        if space.insert(&c.cycle)? {
            eta_rank += 1;
        }
        images.push(EtaImage {
            representative: v.render(h),
            degree: c.degree,
            is_zero: class_is_zero(h, &c)?,
        });
    }
    let well_defined = match reps.first() {
        Some(z) => spot_check(h, nu, z)?,
        None => None,
    };
    Ok(FiltrationStep {
        nu,
        dim_f,
        jump: reps.len(),
        images,
        eta_rank,
        injective: eta_rank == reps.len(),
        well_defined,
    })
}

/// Adds each boundary of pole order at most `nu` to `z` until one keeps the
/// pole order at `nu`, then compares the two images.
fn spot_check(h: &Hypersurface, nu: u32, z: &FracVector) -> Result<Option<bool>, BoundsError> {
    let d = -h.omega();
    let chains = DeRhamStrand::build(h, 2, d, nu - 1);
    let (phi2, strand) = derham::slice::differential(h, &chains);
    let base = theta(h, z)?;
    for c in 0..phi2.cols() {
        let col = phi2.column(c);
        if col.iter().all(|x| *x == Rational::from_integer(0.into())) {
            continue;
        }
        let moved = z.add(h, &strand.vector(h, &col));
        if moved.pole_order(h) != nu {
            continue;
        }
        let other = theta(h, &moved)?;
        let diff: Vec<Rational> = other.cycle.iter().zip(&base.cycle).map(|(a, b)| a - b).collect();
        return Ok(Some(linalg::in_affine(&diff, &[], &base.boundary_basis)?.is_some()));
    }
    Ok(None)
}

/// `x1^2 + ... + x_(n-1)^2 + x_n^m` with weights `(m, ..., m, 2)`.
pub fn example01_hypersurface(n: usize, m: u32) -> Result<Hypersurface, BoundsError> {
    if n < 2 || m < 2 {
        return Err(BoundsError::BadFamily { n, m });
    }
    let mut terms: Vec<String> = (1..n).map(|i| format!("x{i}^2")).collect();
    terms.push(format!("x{n}^{m}"));
    let mut w = vec![m; n - 1];
    w.push(2);
    let weights = Weights::new(w).map_err(QuotientError::from)?;
    let f = parse_poly(&terms.join(" + "), n).expect("generated polynomial parses");
    Ok(Hypersurface::new(f, weights)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub nu: u32,
    pub degree: i64,
    /// `(2 nu - n + 3) m - 2`, which must equal `degree`.
    pub closed_form: i64,
    pub h1dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example01Report {
    pub n: usize,
    pub m: u32,
    pub f: String,
    pub weights: Vec<u32>,
    pub trace: Vec<TraceRow>,
    /// Solutions `(nu, j)` of `2 nu m = (n - 1) m + 2 (j + 1)` with
    /// `1 <= nu <= 10`, `0 <= j <= m - 2`.
    pub solutions: Vec<(u32, u32)>,
    pub contributing_nu: Vec<u32>,
    pub bound: usize,
    pub verdict: &'static str,
    pub predicted: &'static str,
    pub matches_prediction: bool,
}

pub fn equation_solutions(n: usize, m: u32, nu_max: u32) -> Vec<(u32, u32)> {
    let (n, m) = (n as i64, m as i64);
    let mut out = Vec::new();
    for nu in 1..=nu_max {
        for j in 0..=(m - 2) {
            if 2 * nu as i64 * m == (n - 1) * m + 2 * (j + 1) {
                out.push((nu, j as u32));
            }
        }
    }
    out
}

pub fn predicted_verdict(n: usize, m: u32) -> &'static str {
    if m % 2 == 1 || n % 2 == 1 {
        "zero"
    } else {
        "at_most_one"
    }
}

pub fn example01(n: usize, m: u32) -> Result<Example01Report, BoundsError> {
    let h = example01_hypersurface(n, m)?;
    let report = theorem2_bound(&h, None)?;
    let trace = report
        .rows
        .iter()
        .map(|r| TraceRow {
            nu: r.nu,
            degree: r.degree,
            closed_form: (2 * r.nu as i64 - n as i64 + 3) * m as i64 - 2,
            h1dim: r.h1dim,
        })
        .collect::<Vec<_>>();
    let contributing_nu = trace.iter().filter(|r| r.h1dim > 0).map(|r| r.nu).collect();
    let verdict = if report.bound == 0 { "zero" } else { "at_most_one" };
    let predicted = predicted_verdict(n, m);
    let matches_prediction = verdict == predicted && report.bound <= 1;
    Ok(Example01Report {
        n,
        m,
        f: report.f,
        weights: report.weights,
        trace,
        solutions: equation_solutions(n, m, 10),
        contributing_nu,
        bound: report.bound,
        verdict,
        predicted,
        matches_prediction,
    })
}
