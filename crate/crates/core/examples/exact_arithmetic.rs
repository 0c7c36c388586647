//! Exact arithmetic in ℚ(τ), τ² = τ + 1: field operations, signs, and a
//! rank computation that floating point would get wrong.

use arr4::algebra::{rank_of, Scalar};

fn main() {
    let tau = Scalar::tau();
    let sigma = Scalar::one() - &tau; // the conjugate root 1 − τ
    println!("τ² = {}", tau.clone() * &tau);
    println!("τ·(1−τ) = {}", tau.clone() * &sigma);
    println!("1/τ = {}", tau.inv());
    println!("τ⁻¹ = τ − 1: {}", tau.inv() == tau.clone() - Scalar::one());

    // 987·τ − 1597 is tiny and negative: consecutive Fibonacci numbers approximate τ
    let x = Scalar::quad(-1597, 987);
    println!("sign(987τ − 1597) = {}", x.signum());
    println!("sign(610τ − 987) = {}", Scalar::quad(-987, 610).signum());

    // rows (1, τ) and (τ, τ + 1) are proportional since τ + 1 = τ·τ
    let rows = vec![vec![Scalar::one(), tau.clone()], vec![tau.clone(), tau.clone() + Scalar::one()]];
    println!("rank [[1, τ], [τ, τ+1]] = {}", rank_of(2, &rows));
    let rows = vec![vec![Scalar::one(), tau.clone()], vec![tau.clone(), Scalar::from_int(2)]];
    println!("rank [[1, τ], [τ, 2]] = {}", rank_of(2, &rows));
}
