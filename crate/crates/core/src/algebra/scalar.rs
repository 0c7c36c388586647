use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::quad::{rational_sign, QuadScalar};

pub type Rational = BigRational;

/// The coefficient field shared by all coordinates of one arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Field {
    Rational,
    QuadraticTau,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Rational => "rational",
            Field::QuadraticTau => "quadratic-tau",
        }
    }

    pub fn join(self, other: Field) -> Field {
        self.max(other)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact element of ℚ or ℚ(τ).
///
/// Values with a vanishing τ-part are always stored as `Rational`, so the
/// representation is canonical and `==`/`Hash` are numeric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Quad(QuadScalar),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::Rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(Rational::new(num.into(), den.into()))
    }

    /// `a + b·τ` from integers.
    pub fn quad(a: i64, b: i64) -> Self {
        Self::from_quad(QuadScalar::from_integers(a, b))
    }

    pub fn tau() -> Self {
        Self::quad(0, 1)
    }

    pub fn from_quad(q: QuadScalar) -> Self {
        if q.is_rational() {
            Scalar::Rational(q.rational_part().clone())
        } else {
            Scalar::Quad(q)
        }
    }

    pub fn from_parts(a: Rational, b: Rational) -> Self {
        Self::from_quad(QuadScalar::new(a, b))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Quad(_) => Field::QuadraticTau,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Quad(q) => q.is_zero(),
        }
    }

    pub fn signum(&self) -> i8 {
        match self {
            Scalar::Rational(r) => rational_sign(r),
            Scalar::Quad(q) => q.signum(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rational(r.recip())
            }
            Scalar::Quad(q) => Scalar::from_quad(q.inv()),
        }
    }

    pub fn to_quad(&self) -> QuadScalar {
        match self {
            Scalar::Rational(r) => QuadScalar::from_rational(r.clone()),
            Scalar::Quad(q) => q.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quad(_) => None,
        }
    }

    /// Rational and τ coefficients `(a, b)` of `a + b·τ`.
    pub fn parts(&self) -> (Rational, Rational) {
        match self {
            Scalar::Rational(r) => (r.clone(), Rational::zero()),
            Scalar::Quad(q) => (q.rational_part().clone(), q.tau_part().clone()),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(v: Rational) -> Self {
        Scalar::Rational(v)
    }
}

impl From<QuadScalar> for Scalar {
    fn from(v: QuadScalar) -> Self {
        Scalar::from_quad(v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $quad:expr) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.$method(b)),
                    _ => {
                        let f: fn(&QuadScalar, &QuadScalar) -> QuadScalar = $quad;
                        Scalar::from_quad(f(&self.to_quad(), &rhs.to_quad()))
                    }
                }
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a + b);
binop!(Sub, sub, |a, b| a - b);
binop!(Mul, mul, |a, b| a * b);
binop!(Div, div, |a, b| a / b);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quad(q) => Scalar::Quad(-q),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            _ => (self - other).signum().cmp(&0),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Quad(q) => write!(f, "{q}"),
        }
    }
}

/// Standard dot product of two equally long coordinate slices.
pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    debug_assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}
