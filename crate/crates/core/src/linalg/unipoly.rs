//! Univariate polynomials over the field, used for pencil determinants
//! `det(g*A + B)` in the parameter `g`.

use std::fmt;

use crate::field::{FieldSpec, Scalar};

/// Coefficients in ascending degree with no trailing zeros; the zero
/// polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero(field: FieldSpec) -> UniPoly {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Scalar) -> UniPoly {
        UniPoly::from_coeffs(c.field(), vec![c])
    }

    pub fn one(field: FieldSpec) -> UniPoly {
        UniPoly::constant(field.one())
    }

    /// The linear polynomial `a*g + b`.
    pub fn linear(a: Scalar, b: Scalar) -> UniPoly {
        UniPoly::from_coeffs(a.field(), vec![b, a])
    }

    pub fn from_coeffs(field: FieldSpec, mut coeffs: Vec<Scalar>) -> UniPoly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero());
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero());
            coeffs.push(&a + &b);
        }
        UniPoly::from_coeffs(self.field, coeffs)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(self.field, coeffs)
    }

    /// Exact quotient `self / rhs`; panics if the division leaves a
    /// remainder. Fraction-free elimination guarantees exactness where this
    /// is used.
    pub fn div_exact(&self, rhs: &UniPoly) -> UniPoly {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut rem = self.clone();
        let dr = rhs.degree().unwrap();
        let lead_inv = rhs.coeffs.last().unwrap().inv().expect("nonzero leading");
        let dq = self
            .degree()
            .unwrap()
            .checked_sub(dr)
            .expect("quotient degree");
        let mut q = vec![self.field.zero(); dq + 1];
        while let Some(d) = rem.degree() {
            if d < dr {
                break;
            }
            let c = &rem.coeffs[d] * &lead_inv;
            q[d - dr] = c.clone();
            let mut shifted = vec![self.field.zero(); d - dr];
            shifted.extend(rhs.coeffs.iter().map(|rc| rc * &c));
            rem = rem.sub(&UniPoly::from_coeffs(self.field, shifted));
        }
        assert!(rem.is_zero(), "inexact polynomial division");
        UniPoly::from_coeffs(self.field, q)
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Smallest nonnegative integer point where the polynomial does not
    /// vanish. `None` for the zero polynomial, and over `GF(p)` also when
    /// every residue is a root.
    pub fn smallest_nonroot(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let limit = match self.field {
            FieldSpec::Rationals => self.coeffs.len() as u64, // more points than roots
            FieldSpec::Prime(p) => p,
        };
        (0..limit)
            .map(|t| Scalar::from_integer(self.field, t as i64))
            .find(|t| !self.eval(t).is_zero())
    }

    /// Lagrange interpolation through distinct points.
    pub fn interpolate(field: FieldSpec, points: &[Scalar], values: &[Scalar]) -> UniPoly {
        assert_eq!(points.len(), values.len(), "points vs values");
        let mut acc = UniPoly::zero(field);
        for (i, x_i) in points.iter().enumerate() {
            let mut basis = UniPoly::one(field);
            let mut denom = field.one();
            for (j, x_j) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&UniPoly::linear(field.one(), x_j.negated()));
                denom = &denom * &(x_i - x_j);
            }
            let scale = values[i]
                .arith(crate::field::ArithOp::Div, &denom)
                .expect("distinct interpolation points");
            acc = acc.add(&basis.mul(&UniPoly::constant(scale)));
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() {
                (true, c.negated())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        write!(f, "gamma")?;
                    } else {
                        write!(f, "gamma^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn ints(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(Q, cs.iter().map(|n| Scalar::from_integer(Q, *n)).collect())
    }

    #[test]
    fn arithmetic_and_normalization() {
        let p = ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.add(&ints(&[-1, -2])), UniPoly::zero(Q));
        assert_eq!(ints(&[0, 1]).mul(&ints(&[0, 1])), ints(&[0, 0, 1]));
    }

    #[test]
    fn exact_division() {
        let num = ints(&[-1, 0, 1]); // g^2 - 1
        let den = ints(&[1, 1]); // g + 1
        assert_eq!(num.div_exact(&den), ints(&[-1, 1]));
    }

    #[test]
    fn evaluation_and_nonroot() {
        let p = ints(&[0, -3, 1]); // g^2 - 3g
        assert!(p.eval(&Scalar::from_integer(Q, 3)).is_zero());
        assert_eq!(p.smallest_nonroot(), Some(Scalar::from_integer(Q, 1)));
        assert_eq!(UniPoly::zero(Q).smallest_nonroot(), None);

        // over GF(2), g^2 + g vanishes on the whole field
        let f2 = FieldSpec::prime(2).unwrap();
        let p = UniPoly::from_coeffs(
            f2,
            vec![f2.zero(), f2.one(), f2.one()],
        );
        assert_eq!(p.smallest_nonroot(), None);
    }

    #[test]
    fn interpolation_reconstructs() {
        let p = ints(&[2, -1, 3]);
        let points: Vec<Scalar> = (0..3).map(|n| Scalar::from_integer(Q, n)).collect();
        let values: Vec<Scalar> = points.iter().map(|t| p.eval(t)).collect();
        assert_eq!(UniPoly::interpolate(Q, &points, &values), p);
    }

    #[test]
    fn display_format() {
        assert_eq!(ints(&[1, 1]).to_string(), "gamma + 1");
        assert_eq!(ints(&[0, -3, 1]).to_string(), "gamma^2 - 3*gamma");
        assert_eq!(UniPoly::zero(Q).to_string(), "0");
    }
}
