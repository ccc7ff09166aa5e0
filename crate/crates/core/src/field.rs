//! Exact scalar arithmetic over the rationals and prime fields.
//!
//! Every scalar carries its field, values are kept in canonical form
//! (reduced fraction with positive denominator, or residue in `[0, p)`),
//! and equality is representation equality. Nothing here is approximate:
//! rank decisions downstream depend on exact zero tests.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// The coefficient field: `Q` or `GF(p)` for a prime `p`.
///
/// Construct prime fields through [`FieldSpec::prime`], which checks
/// primality; the algorithms in this crate silently assume it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Finite fields taint every verdict downstream with a caveat flag:
    /// witness-existence arguments need an infinite field.
    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_integer(*self, 0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_integer(*self, 1)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
}

/// An exact field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    repr: Repr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn from_integer(field: FieldSpec, n: i64) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar {
                field,
                repr: Repr::Rat(BigRational::from(BigInt::from(n))),
            },
            FieldSpec::Prime(p) => Scalar {
                field,
                repr: Repr::Mod((n as i128).rem_euclid(p as i128) as u64),
            },
        }
    }

    /// The fraction `num/den`, canonicalized; over `GF(p)` this is
    /// `num * den^-1`.
    pub fn from_fraction(field: FieldSpec, num: i64, den: i64) -> Result<Scalar, FieldError> {
        Scalar::from_integer(field, num).arith(ArithOp::Div, &Scalar::from_integer(field, den))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod(v) => *v == 1,
        }
    }

    /// True for rationals below zero. Prime-field residues carry no sign
    /// and always report false, so printers keep them as-is.
    pub fn is_negative(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r < &BigRational::zero(),
            Repr::Mod(_) => false,
        }
    }

    /// Exact field arithmetic with typed errors; the operator impls below
    /// wrap this and panic instead.
    pub fn arith(&self, op: ArithOp, rhs: &Scalar) -> Result<Scalar, FieldError> {
        if self.field != rhs.field {
            return Err(FieldError::FieldMismatch(self.field, rhs.field));
        }
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                ArithOp::Mul => a * b,
                ArithOp::Div => {
                    if b.is_zero() {
                        return Err(FieldError::DivisionByZero);
                    }
                    a / b
                }
            }),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = match self.field {
                    FieldSpec::Prime(p) => p,
                    FieldSpec::Rationals => unreachable!(),
                };
                Repr::Mod(match op {
                    ArithOp::Add => add_mod(*a, *b, p),
                    ArithOp::Sub => add_mod(*a, p - *b % p, p),
                    ArithOp::Mul => mul_mod(*a, *b, p),
                    ArithOp::Div => {
                        if *b == 0 {
                            return Err(FieldError::DivisionByZero);
                        }
                        mul_mod(*a, inv_mod(*b, p), p)
                    }
                })
            }
            _ => unreachable!("repr always matches field"),
        };
        Ok(Scalar {
            field: self.field,
            repr,
        })
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        self.field.one().arith(ArithOp::Div, self)
    }

    pub fn negated(&self) -> Scalar {
        self.field
            .zero()
            .arith(ArithOp::Sub, self)
            .expect("same field")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => write!(f, "{r}"),
            Repr::Mod(v) => write!(f, "{v}"),
        }
    }
}

// Operator impls for references panic on field mismatch; internal linear
// algebra only ever combines scalars from one field, so a mismatch there is
// a bug, not an input error. Fallible paths go through `arith`.
macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.arith($op, rhs).expect("scalar op")
            }
        }
    };
}

scalar_binop!(Add, add, ArithOp::Add);
scalar_binop!(Sub, sub, ArithOp::Sub);
scalar_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negated()
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Modular inverse by the extended Euclidean algorithm; `a` must be nonzero
/// mod the prime `p`.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit");
    t0.rem_euclid(p as i128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the usual 12-witness set).
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_fraction(Q, n, d).unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(q(1, 2).arith(ArithOp::Add, &q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(q(-4, -8), q(1, 2), "canonical form has positive denominator");
        assert_eq!(q(1, 2).to_string(), "1/2");
        assert_eq!(q(6, 3).to_string(), "2");
    }

    #[test]
    fn prime_field_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let three = Scalar::from_integer(f7, 3);
        let four = Scalar::from_integer(f7, 4);
        assert_eq!(&three * &four, Scalar::from_integer(f7, 5));

        // inv(2) = (p+1)/2 for odd p
        for p in [3u64, 5, 7, 101, 1009] {
            let fp = FieldSpec::prime(p).unwrap();
            let two = Scalar::from_integer(fp, 2);
            assert_eq!(
                two.inv().unwrap(),
                Scalar::from_integer(fp, ((p + 1) / 2) as i64)
            );
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            q(1, 1).arith(ArithOp::Div, &q(0, 1)),
            Err(FieldError::DivisionByZero)
        );
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(
            Scalar::from_integer(f5, 3).arith(ArithOp::Div, &Scalar::from_integer(f5, 0)),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let f5 = FieldSpec::prime(5).unwrap();
        let r = q(1, 1).arith(ArithOp::Add, &Scalar::from_integer(f5, 1));
        assert_eq!(r, Err(FieldError::FieldMismatch(Q, f5)));
    }

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(65537).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(FieldSpec::prime(91), Err(FieldError::NotPrime(91)));
        assert_eq!(FieldSpec::prime(1_000_000), Err(FieldError::NotPrime(1_000_000)));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let a = q(-10, 4);
        let b = a.arith(ArithOp::Add, &q(0, 1)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "-5/2");
    }

    fn arb_rational() -> impl Strategy<Value = Scalar> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| q(n, d))
    }

    fn arb_gf101() -> impl Strategy<Value = Scalar> {
        (0i64..=100).prop_map(|n| Scalar::from_integer(FieldSpec::prime(101).unwrap(), n))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &a.negated(), Q.zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), Q.one());
            }
        }

        #[test]
        fn prime_field_axioms(a in arb_gf101(), b in arb_gf101(), c in arb_gf101()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            let f = a.field();
            prop_assert_eq!(&a + &a.negated(), f.zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), f.one());
            }
        }
    }
}
