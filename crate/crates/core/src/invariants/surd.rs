//! Floors and ceilings of `(a ± 2·√(c³)) / d` in exact integer arithmetic.
//!
//! With `s = ⌊√(4c³)⌋`, `a + √(4c³)` lies in `[a + s, a + s + 1)` and is an
//! integer only when `s² = 4c³`. A non-integer real strictly between two
//! consecutive integers has the same floor after division by `d` as the
//! lower one, so `⌊(a + √(4c³))/d⌋ = ⌊(a + s)/d⌋` in every case; the
//! ceiling case is symmetric.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// `⌊√x⌋` for `x ≥ 0`.
pub fn isqrt(x: &BigInt) -> BigInt {
    assert!(!x.is_negative(), "square root of a negative integer");
    x.sqrt()
}

/// `⌊(a + 2·√(c³)) / d⌋` for `c ≥ 0`, `d > 0`.
pub fn floor_plus_surd(a: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    let s = isqrt(&(c.pow(3) * 4u32));
    (a + s).div_floor(d)
}

/// `⌈(a − 2·√(c³)) / d⌉` for `c ≥ 0`, `d > 0`.
pub fn ceil_minus_surd(a: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    let s = isqrt(&(c.pow(3) * 4u32));
    (a - s).div_ceil(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn perfect_cube_radicand() {
        // c = 1: 2√1 = 2
        assert_eq!(floor_plus_surd(&b(4862), &b(1), &b(27)), b(180));
        assert_eq!(ceil_minus_surd(&b(4862), &b(1), &b(27)), b(180));
    }

    #[test]
    fn irrational_radicand() {
        // 2√27 ≈ 10.392
        assert_eq!(floor_plus_surd(&b(1620), &b(3), &b(27)), b(60));
        assert_eq!(ceil_minus_surd(&b(1620), &b(3), &b(27)), b(60));
        assert_eq!(ceil_minus_surd(&b(-20), &b(3), &b(1)), b(-30));
        assert_eq!(floor_plus_surd(&b(-20), &b(3), &b(1)), b(-10));
    }

    #[test]
    fn zero_radicand() {
        assert_eq!(floor_plus_surd(&b(-28), &b(0), &b(27)), b(-2));
        assert_eq!(ceil_minus_surd(&b(-28), &b(0), &b(27)), b(-1));
    }
}
