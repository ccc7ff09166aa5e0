//! Exact-arithmetic toolkit for graded modules over the polynomial ring in
//! two variables and the weak Lefschetz property.
//!
//! The library is organized bottom-up:
//!
//! * [`field`]: exact scalars over the rationals or a prime field
//! * [`poly`]: bivariate polynomials, ideal expressions, text grammar
//! * [`groebner`]: Buchberger's algorithm and standard-monomial bases
//! * [`linalg`]: exact matrices, subspaces, and matrix-pencil computations
//! * [`module`]: finite graded modules given by per-degree multiplication
//!   matrices, with quotient-submodule construction, sums, duals, shifts
//! * [`wlp`]: the deciders, witness extraction, and decision traces

pub mod field;
pub mod groebner;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod wlp;

pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace, UniPoly};
pub use module::{GradedModule, HilbertFunction};
pub use poly::{BiPoly, IdealGens, Monomial};
pub use wlp::{Method, WlpReport};
