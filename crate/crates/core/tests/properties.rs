//! Randomized properties. Run alone with `cargo test --test properties`.

mod common;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use arr4::algebra::Scalar;
use arr4::chambers::ChamberEngine;
use common::*;
use arr4::invariants::{
    ceil_minus_surd, char_poly_moebius, floor_plus_surd, projective_chamber_count, radicand, real_roots_test,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        let (zero, one) = (Scalar::zero(), Scalar::one());
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &zero, x.clone());
        prop_assert_eq!(&x * &one, x.clone());
        prop_assert_eq!(&x + &(-&x), zero.clone());
        prop_assert_eq!(&x - &y, &x + &(-&y));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv(), one.clone());
            prop_assert_eq!(&y / &x, &y * &x.inv());
        }
        let tau = Scalar::tau();
        prop_assert_eq!(&tau * &tau, &tau + &one);
    }

    #[test]
    fn order_is_compatible_with_the_field(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(x.cmp(&Scalar::zero()), sign_oracle(&x));
        prop_assert_eq!(x.cmp(&y), sign_oracle(&(&x - &y)));
        prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
        prop_assert_eq!((&x + &z).cmp(&(&y + &z)), x.cmp(&y));
        if z.is_positive() {
            prop_assert_eq!((&x * &z).cmp(&(&y * &z)), x.cmp(&y));
        }
        if z.is_negative() {
            prop_assert_eq!((&x * &z).cmp(&(&y * &z)), x.cmp(&y).reverse());
        }
        prop_assert!(!(&x * &x).is_negative());
        if x <= y && y <= z {
            prop_assert!(x <= z);
        }
        prop_assert_eq!(x.abs(), if x.is_negative() { -&x } else { x.clone() });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn surd_rounding_matches_interval_refinement((n, h) in counts_with_real_surd(), a in -100_000i64..100_000) {
        let c = radicand(n, h);
        prop_assert!(!c.is_negative());
        let x = c.pow(3) * 4u32;
        let (a, d) = (BigInt::from(a), BigInt::from(27));
        prop_assert_eq!(floor_plus_surd(&a, &c, &d), surd_by_refinement(&a, &x, &d, true));
        prop_assert_eq!(ceil_minus_surd(&a, &c, &d), surd_by_refinement(&a, &x, &d, false));
    }

    #[test]
    fn discriminant_verdict_matches_relations((n, h) in valid_counts(), offset in -3i64..=3, pick in 0u8..3) {
        // probe f₃ near the bounds, where the two verdicts could disagree
        let base = real_roots_test(n, h, 0);
        let centre = match (pick, &base.r2, &base.r3) {
            (0, Some(r2), _) => r2.rhs.to_i64().unwrap_or(0),
            (1, _, Some(r3)) => r3.rhs.to_i64().unwrap_or(0),
            _ => (n as i64).pow(3) / 27,
        };
        let f3 = (centre + offset).max(0) as u64;
        let t = real_roots_test(n, h, f3);
        prop_assert!(t.verdicts_agree, "n={} h={} f3={}", n, h, f3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn canonical_form_is_idempotent_and_antipodal(s in (1usize..150).prop_flat_map(sign_vector)) {
        let c = s.clone().canonical();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.clone().canonical(), c.clone());
        prop_assert_eq!(s.negated().canonical(), c.clone());
        prop_assert!(c == s || c == s.negated());
        for i in 0..s.len() {
            prop_assert_eq!(s.flipped(i).flipped(i), s.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_is_closed_and_counts_agree(a in small_arrangement()) {
        let engine = ChamberEngine::new(&a);
        let chambers = engine.enumerate(None).unwrap().chambers;
        prop_assert_eq!(chambers.len() as u64, projective_chamber_count(&a));
        let signs: HashSet<_> = chambers.iter().map(|c| c.sign.clone()).collect();
        prop_assert_eq!(signs.len(), chambers.len());
        for c in &chambers {
            prop_assert!(c.sign.is_canonical());
            prop_assert!(c.walls.len() >= 4);
            let w = engine.witness(&c.sign).unwrap();
            prop_assert_eq!(engine.sign_of(&w), c.sign.clone());
            for &wall in &c.walls {
                prop_assert!(signs.contains(&c.sign.flipped(wall).canonical()));
            }
        }
        // χ(1) = 0 for every central arrangement
        prop_assert!(char_poly_moebius(&a).eval(&BigInt::one()).is_zero());
    }
}
