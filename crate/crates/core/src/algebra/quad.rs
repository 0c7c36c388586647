//! Elements of the real quadratic field ℚ(τ), τ = (1+√5)/2.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `a + b·τ` with rational `a`, `b` and τ² = τ + 1.
///
/// The pair `(a, b)` is unique for every value, so structural equality is
/// numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadScalar {
    a: BigRational,
    b: BigRational,
}

impl QuadScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_integers(a: i64, b: i64) -> Self {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self::new(a, BigRational::zero())
    }

    /// The golden ratio τ itself.
    pub fn tau() -> Self {
        Self::from_integers(0, 1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn tau_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate, sending τ to 1 − τ: `(a + b) − b·τ`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a + &self.b, -&self.b)
    }

    /// Field norm `x · conj(x) = a² + ab − b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact sign in {-1, 0, 1}.
    ///
    /// `a + bτ = ((2a + b) + b√5) / 2`, so with `u = 2a + b` the sign is that
    /// of `u + b√5`. When `u` and `b` disagree in sign, the larger of `u²`
    /// and `5b²` wins; they are never equal because √5 is irrational.
    pub fn signum(&self) -> i8 {
        let u = &self.a + &self.a + &self.b;
        let su = rational_sign(&u);
        let sb = rational_sign(&self.b);
        if su == sb || sb == 0 {
            return su;
        }
        if su == 0 {
            return sb;
        }
        let five = BigRational::from_integer(BigInt::from(5));
        let lhs = &u * &u;
        let rhs = five * &self.b * &self.b;
        if lhs > rhs {
            su
        } else {
            sb
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(tau)");
        let c = self.conj();
        Self::new(c.a / &n, c.b / n)
    }
}

pub(crate) fn rational_sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for &QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: &QuadScalar) -> QuadScalar {
        QuadScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: &QuadScalar) -> QuadScalar {
        QuadScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &QuadScalar) -> QuadScalar {
        // (a + bτ)(c + dτ) = (ac + bd) + (ad + bc + bd)τ
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a + &bd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a + bd;
        QuadScalar::new(a, b)
    }
}

impl Div for &QuadScalar {
    type Output = QuadScalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadScalar) -> QuadScalar {
        self * &rhs.inv()
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar::new(-&self.a, -&self.b)
    }
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        Self::from_integers(1, 0)
    }
}

impl Mul for QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: QuadScalar) -> QuadScalar {
        &self * &rhs
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let coeff = if self.b.abs().is_one() {
            String::new()
        } else {
            format!("{}*", self.b.abs())
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{sign}{coeff}t")
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{}{sign}{coeff}t", self.a)
        }
    }
}
