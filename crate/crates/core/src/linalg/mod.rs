//! Exact linear algebra over the field and over one-variable polynomial
//! extensions: reduced row echelon forms, kernels, subspace lattice
//! operations, and matrix-pencil computations (`det(g*A + B)` and generic
//! rank). No thresholds anywhere; every rank decision is exact.

mod matrix;
mod pencil;
mod subspace;
mod unipoly;

pub use matrix::{solve_column, LinalgError, Matrix, Rref};
pub use pencil::{pencil_generic_rank, polydet};
pub use subspace::Subspace;
pub use unipoly::UniPoly;
