//! Builds every arrangement that has normal vectors and prints its counts.
//!
//! Pass labels to restrict the list: `cargo run --example builtin_invariants -- D4 A^3_1(28)`

use std::time::Instant;

use arr4::catalogue::{builtin, entry, BUILTINS};
use arr4::invariants::ArrangementData;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let labels: Vec<String> =
        if args.is_empty() { BUILTINS.iter().map(|(l, _)| l.to_string()).collect() } else { args };
    for label in labels {
        let start = Instant::now();
        let a = builtin(&label).expect("label with normal vectors");
        let d = ArrangementData::from_arrangement(&a);
        let row = entry(&label).expect("catalogue row");
        let matches = d.h == row.h && d.t == row.t && d.f == row.f;
        println!(
            "{:<10} n={:<3} h={} t={} f={}  {} ({:.2?})",
            row.label,
            d.n,
            d.h,
            d.t,
            d.f,
            if matches { "matches table" } else { "DIFFERS FROM TABLE" },
            start.elapsed()
        );
    }
}
