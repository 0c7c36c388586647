//! The data-only tests on a catalogue row: the three relations deciding
//! whether χ splits over ℝ, the discriminant, and the bounds on f₃ and f₀.
//!
//! `cargo run --example real_roots_tests -- 'A^3_2(15)'`

use arr4::catalogue::entry;
use arr4::invariants::{CheckSuite, Flags};

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "A^3_2(15)".into());
    let e = entry(&label).expect("catalogue label");
    let data = e.data();
    let suite = CheckSuite::evaluate(&data, Flags { simplicial: true, irreducible: true });
    let rr = &suite.real_roots;
    println!("{} n={} h={} f={}", e.label, e.n, e.h, e.f);
    println!("Δ = {}  real-rooted = {}  agrees with relations = {}", rr.discriminant, rr.real_rooted, rr.verdicts_agree);
    for r in suite.results() {
        println!("  {r}");
    }
}
