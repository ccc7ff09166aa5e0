//! Dense exact matrices and Gauss-Jordan elimination.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LinalgError {
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("rows have unequal lengths")]
    RaggedRows,
}

/// A rows x cols matrix of exact scalars, row-major. Zero-dimensional
/// shapes are legal; graded modules routinely have empty components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::RaggedRows);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            field,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Row construction from integer literals; test and fixture helper.
    pub fn from_int_rows(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|n| Scalar::from_integer(field, *n)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * &v[k]);
                }
                acc
            })
            .collect()
    }

    /// Stack `rhs` below `self`.
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.cols {
            return Err(LinalgError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut entries = self.entries.clone();
        entries.extend(rhs.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    /// Place `rhs` to the right of `self`.
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out = Matrix::zero(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Linear combination `self*a + rhs*b` of equally-shaped matrices.
    pub fn pencil_at(&self, rhs: &Matrix, a: &Scalar, b: &Scalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "pencil shape");
        let mut out = Matrix::zero(self.field, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, &(self.get(i, j) * a) + &(rhs.get(i, j) * b));
            }
        }
        out
    }

    /// Reduced row echelon form with pivot bookkeeping.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                m.set(r, j, &inv * m.get(r, j));
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            rank: pivots.len(),
            pivots,
            matrix: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Exact determinant by Gaussian elimination; requires a square matrix.
    pub fn det(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = det.negated();
            }
            det = &det * m.get(c, c);
            let inv = m.get(c, c).inv().expect("pivot is nonzero");
            for i in c + 1..m.rows {
                if !m.get(i, c).is_zero() {
                    let f = &inv * m.get(i, c);
                    for j in c..m.cols {
                        let v = m.get(i, j) - &(&f * m.get(c, j));
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries
                .swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Result of reduced row echelon elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Any solution `x` of `a * x = v`, with free coordinates set to zero;
/// `None` when the system is inconsistent.
pub fn solve_column(a: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(v.len(), a.rows(), "right-hand side length");
    let rhs = Matrix::from_rows(a.field(), vec![v.to_vec()])
        .unwrap()
        .transpose();
    let aug = a.hstack(&rhs).expect("same row count");
    let red = aug.rref();
    // a pivot in the appended column means v is outside the column span
    if red.pivots.contains(&a.cols()) {
        return None;
    }
    let mut x = vec![a.field().zero(); a.cols()];
    for (r, &c) in red.pivots.iter().enumerate() {
        x[c] = red.matrix.get(r, a.cols()).clone();
    }
    Some(x)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        let cells: Vec<String> = self.entries.iter().map(Scalar::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                write!(f, " {:>width$}", cells[i * self.cols + j])?;
            }
            write!(f, " ]")?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_of_identity_and_zero() {
        let id = Matrix::identity(Q, 4);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 4);

        let z = Matrix::zero(Q, 3, 5);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rank_of_the_block_form_x_matrix() {
        // multiplication-by-x in the changed basis of the vanishing-pencil
        // module: two independent rows
        let a = Matrix::from_int_rows(Q, &[&[1, 1, 0], &[0, 0, 0], &[0, -2, 0]]);
        assert_eq!(a.rank(), 2);
        // cross-check by brute force: some 2x2 minor is nonzero, det is zero
        assert!(a.det().unwrap().is_zero());
        let minor = Matrix::from_int_rows(Q, &[&[1, 1], &[0, -2]]);
        assert!(!minor.det().unwrap().is_zero());
    }

    #[test]
    fn solve_column_finds_coordinates() {
        let a = Matrix::from_int_rows(Q, &[&[1, 0], &[1, 1], &[0, 2]]);
        let v = vec![
            Scalar::from_integer(Q, 3),
            Scalar::from_integer(Q, 5),
            Scalar::from_integer(Q, 4),
        ];
        let x = solve_column(&a, &v).unwrap();
        assert_eq!(a.mul_vec(&x), v);

        let w = vec![
            Scalar::from_integer(Q, 1),
            Scalar::from_integer(Q, 0),
            Scalar::from_integer(Q, 0),
        ];
        assert_eq!(solve_column(&a, &w), None);
    }

    #[test]
    fn determinant_edge_cases() {
        assert_eq!(Matrix::zero(Q, 0, 0).det().unwrap(), Q.one());
        assert_eq!(
            Matrix::from_int_rows(Q, &[&[2, 1], &[1, 1]]).det().unwrap(),
            Q.one()
        );
        assert_eq!(
            Matrix::zero(Q, 2, 3).det(),
            Err(LinalgError::NotSquare(2, 3))
        );
    }

    pub fn arb_matrix(max: usize) -> impl Strategy<Value = Matrix> {
        (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-4i64..=4, r * c).prop_map(move |vals| Matrix {
                rows: r,
                cols: c,
                field: Q,
                entries: vals
                    .into_iter()
                    .map(|n| Scalar::from_integer(Q, n))
                    .collect(),
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_equals_rank_of_transpose(m in arb_matrix(5)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rref_is_idempotent(m in arb_matrix(5)) {
            let r = m.rref();
            prop_assert_eq!(r.matrix.rref().matrix, r.matrix);
        }
    }
}
