//! The map from degree `-omega` De Rham cycles to Koszul classes.

use super::frac::{divergence, FracVector};
use super::DerhamError;
use crate::koszul::{ClassRep, KoszulSlice};
use crate::polyring::{divide_exact, Poly};
use crate::quotient::Hypersurface;

/// Checks that `v` is a nonzero strand-1 cycle of total degree `-omega`.
pub fn check_top_cycle(h: &Hypersurface, v: &FracVector) -> Result<(), DerhamError> {
    let n = h.nvars();
    let twists: Vec<i64> = (0..n).map(|i| h.weights.weight(i)).collect();
    if v.len() != n || v.twists != twists {
        return Err(DerhamError::Shape {
            expected: n,
            found: v.len(),
        });
    }
    if v.is_zero() {
        return Err(DerhamError::ZeroVector);
    }
    let d = v.total_degree(h);
    if d != Some(-h.omega()) {
        return Err(DerhamError::WrongDegree {
            expected: -h.omega(),
            found: d,
        });
    }
    if !divergence(h, v).is_zero() {
        return Err(DerhamError::NotACycle);
    }
    Ok(())
}

/// With normal form `(a_1/f^i, ..., a_n/f^i)`, the class of `(a_1, ..., a_n)`
/// in `H_1(df; A)` of degree `(i+1) deg f - omega`.
pub fn theta(h: &Hypersurface, v: &FracVector) -> Result<ClassRep, DerhamError> {
    check_top_cycle(h, v)?;
    let nf = v.normal_form(h);
    let pole = nf.common_pole();
    if pole == 0 {
        return Err(DerhamError::PolynomialVector);
    }
    let nums = nf.numerators();
    let mut contraction = Poly::zero(h.nvars());
    for (a, g) in nums.iter().zip(h.jacobian()) {
        contraction = &contraction + &(a * &g);
    }
    if divide_exact(&contraction, &h.f, &h.weights)
        .map_err(|e| DerhamError::Quotient(e.into()))?
        .is_none()
    {
        return Err(DerhamError::Divisibility);
    }
    let degree = (pole as i64 + 1) * h.deg_f - h.omega();
    let slice = KoszulSlice::build(h, degree, 2);
    Ok(slice.class_rep(slice.strand1_coordinates(&nums))?)
}
