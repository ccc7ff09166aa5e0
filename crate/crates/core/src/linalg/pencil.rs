//! Matrix-pencil computations: the determinant of `g*A + B` as a polynomial
//! and the rank of the pencil over the rational-function field.
//!
//! The default route evaluates at the integer points `0, 1, ..., n` and
//! interpolates, which is deterministic and exact. Over a prime field too
//! small to supply enough distinct points, a fraction-free Bareiss
//! elimination over `GF(p)[g]` takes over.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::matrix::{LinalgError, Matrix};
use crate::linalg::unipoly::UniPoly;

/// `det(g*a + b)` as a polynomial in `g`, exactly.
pub fn polydet(a: &Matrix, b: &Matrix) -> Result<UniPoly, LinalgError> {
    check_same_shape(a, b)?;
    if a.rows() != a.cols() {
        return Err(LinalgError::NotSquare(a.rows(), a.cols()));
    }
    let n = a.rows();
    let field = a.field();
    match field {
        // degree <= n, so n+1 sample points determine the polynomial
        FieldSpec::Rationals => Ok(polydet_by_interpolation(a, b, n)),
        FieldSpec::Prime(p) if p > n as u64 => Ok(polydet_by_interpolation(a, b, n)),
        FieldSpec::Prime(_) => Ok(bareiss_det(field, pencil_entries(a, b))),
    }
}

/// Rank of `g*a + b` over `K(g)`: the maximum rank the pencil attains at
/// any specialization with the `g`-coefficient nonzero, and an upper bound
/// for the rank at every specialization.
pub fn pencil_generic_rank(a: &Matrix, b: &Matrix) -> Result<usize, LinalgError> {
    check_same_shape(a, b)?;
    let field = a.field();
    let points = a.rows().max(a.cols()) + 1;
    match field {
        // a nonzero maximal minor has at most max(rows, cols) roots, so
        // some sample evaluates to the generic rank; no sample exceeds it
        FieldSpec::Rationals => Ok(generic_rank_by_sampling(a, b, points)),
        FieldSpec::Prime(p) if p >= points as u64 => Ok(generic_rank_by_sampling(a, b, points)),
        FieldSpec::Prime(_) => Ok(bareiss_rank(pencil_entries(a, b))),
    }
}


fn check_same_shape(a: &Matrix, b: &Matrix) -> Result<(), LinalgError> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) || a.field() != b.field() {
        return Err(LinalgError::ShapeMismatch(
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols(),
        ));
    }
    Ok(())
}

fn polydet_by_interpolation(a: &Matrix, b: &Matrix, n: usize) -> UniPoly {
    let field = a.field();
    let points: Vec<Scalar> = (0..=n as i64)
        .map(|t| Scalar::from_integer(field, t))
        .collect();
    let values: Vec<Scalar> = points
        .iter()
        .map(|t| {
            a.pencil_at(b, t, &field.one())
                .det()
                .expect("square by construction")
        })
        .collect();
    UniPoly::interpolate(field, &points, &values)
}

fn generic_rank_by_sampling(a: &Matrix, b: &Matrix, points: usize) -> usize {
    let field = a.field();
    (0..points as i64)
        .map(|t| {
            a.pencil_at(b, &Scalar::from_integer(field, t), &field.one())
                .rank()
        })
        .max()
        .unwrap_or(0)
}

fn pencil_entries(a: &Matrix, b: &Matrix) -> Vec<Vec<UniPoly>> {
    (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| UniPoly::linear(a.get(i, j).clone(), b.get(i, j).clone()))
                .collect()
        })
        .collect()
}

/// Fraction-free determinant of a polynomial matrix (two-step Bareiss with
/// row pivoting). Every division is exact by the Sylvester identity.
fn bareiss_det(field: FieldSpec, mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(field);
    }
    let mut sign = false;
    let mut prev = UniPoly::one(field);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return UniPoly::zero(field);
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Rank of a polynomial matrix by fraction-free elimination with full
/// pivoting.
fn bareiss_rank(mut m: Vec<Vec<UniPoly>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let field = match m.first().and_then(|r| r.first()) {
        Some(e) => e.field(),
        None => return 0,
    };
    let mut prev = UniPoly::one(field);
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        let Some((pi, pj)) = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero())
        else {
            break;
        };
        m.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
        }
        rank += 1;
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ints(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(Q, cs.iter().map(|n| Scalar::from_integer(Q, *n)).collect())
    }

    #[test]
    fn polydet_examples() {
        let one = Matrix::identity(Q, 1);
        assert_eq!(polydet(&one, &one).unwrap(), ints(&[1, 1]));

        // the vanishing pencil: det(g*A + B) is identically zero
        let a = Matrix::from_int_rows(Q, &[&[1, 1, 0], &[0, 0, 0], &[0, -2, 0]]);
        let b = Matrix::from_int_rows(Q, &[&[0, 0, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(polydet(&a, &b).unwrap().is_zero());

        assert_eq!(
            polydet(&Matrix::zero(Q, 2, 3), &Matrix::zero(Q, 2, 3)),
            Err(LinalgError::NotSquare(2, 3))
        );
        assert_eq!(
            polydet(&Matrix::zero(Q, 0, 0), &Matrix::zero(Q, 0, 0)).unwrap(),
            UniPoly::one(Q)
        );
    }

    #[test]
    fn generic_rank_examples() {
        let id = Matrix::identity(Q, 4);
        assert_eq!(pencil_generic_rank(&id, &Matrix::zero(Q, 4, 4)).unwrap(), 4);
        assert_eq!(
            pencil_generic_rank(&Matrix::zero(Q, 3, 2), &Matrix::zero(Q, 3, 2)).unwrap(),
            0
        );

        // all 3x3 minors of the vanishing pencil are zero but a 2x2 minor
        // is a nonzero polynomial
        let a = Matrix::from_int_rows(Q, &[&[1, 1, 0], &[0, 0, 0], &[0, -2, 0]]);
        let b = Matrix::from_int_rows(Q, &[&[0, 0, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(pencil_generic_rank(&a, &b).unwrap(), 2);
    }

    #[test]
    fn small_prime_field_falls_back_to_symbolic_elimination() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = Matrix::identity(f2, 3);
        let b = Matrix::zero(f2, 3, 3);
        // det(g*I) = g^3
        let p = polydet(&a, &b).unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(pencil_generic_rank(&a, &b).unwrap(), 3);

        // over GF(2) the pencil g*I + diag(0,1) has generic rank 2 even
        // though no field point attains it
        let b = Matrix::from_int_rows(f2, &[&[0, 0], &[0, 1]]);
        let a = Matrix::identity(f2, 2);
        assert_eq!(pencil_generic_rank(&a, &b).unwrap(), 2);
        for t in 0..2 {
            let s = Scalar::from_integer(f2, t);
            assert!(a.pencil_at(&b, &s, &f2.one()).rank() < 2);
        }
    }

    fn arb_pair(n: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
        let entries = proptest::collection::vec(-3i64..=3, n * n);
        (entries.clone(), entries).prop_map(move |(ea, eb)| {
            let mk = |v: Vec<i64>| {
                Matrix::from_rows(
                    Q,
                    v.chunks(n)
                        .map(|r| r.iter().map(|x| Scalar::from_integer(Q, *x)).collect())
                        .collect(),
                )
                .unwrap()
            };
            (mk(ea), mk(eb))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn polydet_matches_pointwise_determinants((a, b) in arb_pair(3)) {
            let p = polydet(&a, &b).unwrap();
            for t in -10i64..10 {
                let s = Scalar::from_integer(Q, t);
                prop_assert_eq!(p.eval(&s), a.pencil_at(&b, &s, &Q.one()).det().unwrap());
            }
        }

        #[test]
        fn interpolation_and_bareiss_agree((a, b) in arb_pair(3)) {
            let by_interp = polydet(&a, &b).unwrap();
            prop_assert_eq!(by_interp, bareiss_det(Q, pencil_entries(&a, &b)));
        }

        #[test]
        fn generic_rank_dominates_specializations((a, b) in arb_pair(3)) {
            let g = pencil_generic_rank(&a, &b).unwrap();
            prop_assert_eq!(g, bareiss_rank(pencil_entries(&a, &b)));
            let mut attained = 0;
            for t in 0..=3i64 {
                let r = a.pencil_at(&b, &Scalar::from_integer(Q, t), &Q.one()).rank();
                prop_assert!(r <= g);
                attained = attained.max(r);
            }
            prop_assert_eq!(attained, g, "some small sample attains the generic rank");
            prop_assert!(g >= a.rank());
            prop_assert!(g >= b.rank());
        }
    }
}
