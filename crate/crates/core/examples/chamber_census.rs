//! Enumerates chambers and tallies wall counts and Coxeter diagram types.
//!
//! `cargo run --release --example chamber_census -- H4` takes a while; the
//! default list stops at 28 hyperplanes.

use std::time::Instant;

use arr4::catalogue::builtin;
use arr4::chambers::{ChamberEngine, ChamberSummary};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let labels = if args.is_empty() {
        ["A4", "D4", "B4", "F4", "A^3_1(27)", "A^3_1(28)"].map(String::from).to_vec()
    } else {
        args
    };
    for label in labels {
        let a = builtin(&label).expect("label with normal vectors");
        let start = Instant::now();
        let engine = ChamberEngine::new(&a);
        let e = engine.enumerate(None).expect("chamber search");
        let s = ChamberSummary::from_enumeration(&engine, &e);
        println!("{label}: {} chambers in {:.2?}", s.count, start.elapsed());
        println!("  walls per chamber: {:?}", s.wall_counts);
        println!("  diagram types:     {:?}", s.diagram_types);
        println!("  simplicial={} simply_laced={} irreducible={}", s.simplicial, s.simply_laced, s.irreducible);
    }
}
