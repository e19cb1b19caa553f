//! Exact graded invariants of weighted-homogeneous hypersurfaces.
//!
//! Everything is computed degree by degree over the rationals: Hilbert
//! functions of `A = R/(f)`, Koszul homology of `A` on the partials of `f`,
//! normal forms and pole orders in the localization `R_f`, truncated De Rham
//! homology of `R_f`, and the dimension bound built from them.

pub mod cli;
pub mod complex;
pub mod bounds;
pub mod derham;
pub mod eulerian;
pub mod koszul;
pub mod linalg;
pub mod parse;
pub mod polyring;
pub mod quotient;
pub mod report;

pub use linalg::{Matrix, Rational, RowSpace};
pub use parse::{parse_poly, ParseError};
pub use polyring::{Monomial, Poly, Weights};
pub use quotient::{HilbertFn, Hypersurface};
