//! Subspaces of `K^n` with canonical reduced-row-echelon bases, so equality
//! of subspaces is equality of representations.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::matrix::{LinalgError, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zero(field, 0, ambient),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_rows(field: FieldSpec, ambient: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
        assert!(rows.iter().all(|r| r.len() == ambient), "ambient dimension");
        let m = Matrix::from_rows(field, rows).expect("equal row lengths");
        let red = m.rref();
        let basis = Matrix::from_rows(
            field,
            (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect(),
        )
        .expect("rectangular");
        Subspace {
            ambient,
            basis: if red.rank == 0 {
                Matrix::zero(field, 0, ambient)
            } else {
                basis
            },
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis vectors as rows of an RREF matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension");
        let mut joined: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect();
        joined.push(v.to_vec());
        Matrix::from_rows(self.field(), joined).unwrap().rank() == self.dim()
    }

    /// Intersection, computed from the kernel of the matrix whose columns
    /// are the two bases side by side.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let c = self
            .basis
            .transpose()
            .hstack(&other.basis.transpose())
            .expect("same ambient dimension");
        let relations = kernel_basis(&c);
        let mut rows = Vec::new();
        for r in 0..relations.dim() {
            let coeffs = &relations.basis().row(r)[..self.dim()];
            let mut w = vec![self.field().zero(); self.ambient];
            for (i, a) in coeffs.iter().enumerate() {
                for j in 0..self.ambient {
                    w[j] = &w[j] + &(a * self.basis.get(i, j));
                }
            }
            rows.push(w);
        }
        Ok(Subspace::from_rows(self.field(), self.ambient, rows))
    }

    /// Sum of subspaces: the span of both bases.
    pub fn join(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let rows = (0..self.dim())
            .map(|i| self.basis.row(i).to_vec())
            .chain((0..other.dim()).map(|i| other.basis.row(i).to_vec()))
            .collect();
        Ok(Subspace::from_rows(self.field(), self.ambient, rows))
    }

    /// Image of this subspace under a linear map given by `m` (acting on
    /// column vectors of length `ambient`).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map domain");
        let rows = (0..self.dim())
            .map(|i| m.mul_vec(self.basis.row(i)))
            .collect();
        Subspace::from_rows(self.field(), m.rows(), rows)
    }
}

/// Canonical basis of the right kernel `{v : m v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let red = m.rref();
    let field = m.field();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !red.pivots.contains(c)).collect();
    let mut rows = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![field.zero(); m.cols()];
        v[f] = field.one();
        for (r, &p) in red.pivots.iter().enumerate() {
            v[p] = red.matrix.get(r, f).negated();
        }
        rows.push(v);
    }
    Subspace::from_rows(field, m.cols(), rows)
}

impl Matrix {
    pub fn kernel_basis(&self) -> Subspace {
        kernel_basis(self)
    }
}
