//! The localization `R_f` and its De Rham complex, the Koszul complex of
//! `R_f` on the partial derivatives.

pub mod frac;
pub mod slice;
pub mod theta;

use thiserror::Error;

use crate::koszul::KoszulError;
use crate::linalg::LinalgError;
use crate::quotient::QuotientError;

pub use frac::{
    divergence, euler_apply_frac, eulerian_check_frac, frac_partial, normal_form, pole_order,
    shifted_euler_power, FracElem, FracVector, PoleOrder,
};
pub use slice::{
    concentration_check, concentration_check_index, derham_slice, stabilized_h, stabilized_h1,
    truncated_h, truncated_h1, ConcentrationEntry, ConcentrationReport, DeRhamSlice, DeRhamStrand,
    Embedding, Stabilized, SweepConfig, TruncatedHomology,
};
pub use theta::{check_top_cycle, theta};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerhamError {
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("the zero vector has no class")]
    ZeroVector,
    #[error("vector is not a cycle")]
    NotACycle,
    #[error("expected total degree {expected}, found {found:?}")]
    WrongDegree { expected: i64, found: Option<i64> },
    #[error("expected {expected} components with matching twists, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("polynomial vector has no pole")]
    PolynomialVector,
    #[error("f does not divide the contraction with the gradient")]
    Divisibility,
    #[error("pole caps need 1 <= c_z <= c_b, got c_z = {c_z}, c_b = {c_b}")]
    CapOrder { c_z: u32, c_b: u32 },
    #[error("pole order {pole} exceeds cap {cap}")]
    PoleExceedsCap { pole: u32, cap: u32 },
    #[error("homological index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("stabilization run must be at least 2, got {0}")]
    RunTooShort(usize),
    #[error("class is zero")]
    ZeroClass,
}
