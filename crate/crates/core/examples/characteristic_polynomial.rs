//! Characteristic polynomial of a built-in by the Möbius recursion on its
//! intersection lattice and by the closed form in (n, h, f₃); both are
//! factored over the integers.
//!
//! `cargo run --example characteristic_polynomial -- F4`

use arr4::catalogue::builtin;
use arr4::invariants::{char_poly_formula, char_poly_moebius, projective_chamber_count, ArrangementData};

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "A4".into());
    let a = builtin(&label).expect("label with normal vectors");
    let lat = a.lattice();
    println!("{label}: {} hyperplanes, {} lines, {} vertices", a.len(), lat.rank2().len(), lat.rank3().len());

    let moebius = char_poly_moebius(&a);
    let d = ArrangementData::from_arrangement(&a);
    let formula = char_poly_formula(d.n, d.h_sum(), d.f.chambers());
    println!("χ (Möbius)      = {moebius}");
    println!("χ (closed form) = {formula}");
    println!("routes agree: {}", moebius == formula);
    let f = moebius.integer_factorization();
    println!("factored: {f}  (splits over ℤ: {})", f.splits_over_integers());
    println!("chambers |χ(−1)|/2 = {}", projective_chamber_count(&a));
    println!("f-vector {}", d.f);
}
