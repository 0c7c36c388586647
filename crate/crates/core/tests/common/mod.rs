//! Strategies and oracles shared by the property suite and the acceptance run.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use arr4::algebra::{Rational, Scalar};
use arr4::arrangement::Arrangement;
use arr4::chambers::SignVector;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => rational().prop_map(Scalar::from),
        3 => (rational(), rational()).prop_map(|(a, b)| Scalar::from_parts(a, b)),
    ]
}

/// Sign of `a + bτ` with τ = (1 + √5)/2, from `2a + b + b√5` by squaring.
pub fn sign_oracle(x: &Scalar) -> Ordering {
    let (a, b) = x.parts();
    let u = a * BigRational::from_integer(2.into()) + &b;
    let five_b2 = &b * &b * BigRational::from_integer(5.into());
    let u2 = &u * &u;
    match (u.signum(), b.signum()) {
        (u, b) if !u.is_negative() && !b.is_negative() => {
            if u.is_zero() && b.is_zero() {
                Ordering::Equal
            } else {
                Ordering::Greater
            }
        }
        (u, b) if !u.is_positive() && !b.is_positive() => Ordering::Less,
        // opposite signs: compare |u| with |b|√5
        (u, _) => {
            let b_wins = five_b2.cmp(&u2);
            if u.is_positive() {
                b_wins.reverse()
            } else {
                b_wins
            }
        }
    }
}

/// Encloses √x in rational intervals by bisection until `(a ± √x)/d`
/// has a single floor/ceiling on the interval or √x is hit exactly.
/// Terminates: an irrational √x never puts `(a ± √x)/d` on an integer.
pub fn surd_by_refinement(a: &BigInt, x: &BigInt, d: &BigInt, plus: bool) -> BigInt {
    let r = |v: &BigInt| BigRational::from_integer(v.clone());
    let target = r(x);
    let value = |s: &BigRational| {
        let v = if plus { r(a) + s } else { r(a) - s } / r(d);
        if plus {
            v.floor().to_integer()
        } else {
            v.ceil().to_integer()
        }
    };
    // a power-of-two upper end makes every integer in range a bisection point
    let (mut lo, mut hi) = (BigRational::zero(), r(&(BigInt::one() << (x.bits() + 1))));
    loop {
        if &lo * &lo == target {
            return value(&lo);
        }
        if &hi * &hi == target {
            return value(&hi);
        }
        let (vl, vh) = (value(&lo), value(&hi));
        if vl == vh {
            return vl;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        if &mid * &mid <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

pub fn valid_counts() -> impl Strategy<Value = (u64, u64)> {
    // h = Σ (i−1)hᵢ ranges from n−1 (a pencil-like extreme) to C(n,2)
    (4u64..=200).prop_flat_map(|n| (Just(n), (n - 1)..=(n * (n - 1) / 2)))
}

/// Counts with a nonnegative radicand, `3h ≤ n² + n − 2`.
pub fn counts_with_real_surd() -> impl Strategy<Value = (u64, u64)> {
    (4u64..=200).prop_flat_map(|n| (Just(n), (n - 1)..=((n * n + n - 2) / 3)))
}

pub fn sign_vector(len: usize) -> impl Strategy<Value = SignVector> {
    proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], len).prop_map(|s| SignVector::from_signs(&s))
}

pub fn small_arrangement() -> impl Strategy<Value = Arrangement> {
    proptest::collection::vec(proptest::array::uniform4(-2i64..=2), 4..=9)
        .prop_filter_map("essential, no repeats", |rows| Arrangement::from_ints(&rows).ok())
}
