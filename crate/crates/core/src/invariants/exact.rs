use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

/// An exact number in a report. Serializes as a JSON integer when it is an
/// integer that fits in `i64`, and as a string such as `"4913/27"` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub BigRational);

impl Exact {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(v.into()))
    }

    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self(BigRational::new(num.into(), den.into()))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.denom().is_one() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn cmp_value(&self, other: &Exact) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl From<u64> for Exact {
    fn from(v: u64) -> Self {
        Self::int(v)
    }
}

impl From<i64> for Exact {
    fn from(v: i64) -> Self {
        Self::int(v)
    }
}

impl From<BigInt> for Exact {
    fn from(v: BigInt) -> Self {
        Self::int(v)
    }
}

impl From<BigRational> for Exact {
    fn from(v: BigRational) -> Self {
        Self(v)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.to_string()),
        }
    }
}
