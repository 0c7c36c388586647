//! Walks a few chambers of a built-in: sign vector, an interior witness,
//! walls found from extreme rays and again by Fourier–Motzkin elimination,
//! and the Coxeter diagram of the chamber.
//!
//! `cargo run --example chamber_walls -- B4`

use arr4::catalogue::builtin;
use arr4::chambers::{walls, ChamberEngine};

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "D4".into());
    let a = builtin(&label).expect("label with normal vectors");
    let engine = ChamberEngine::new(&a);
    let all = engine.enumerate(None).expect("chambers");
    println!("{label}: {} chambers", all.chambers.len());
    for c in all.chambers.iter().take(3) {
        let w = engine.witness(&c.sign).expect("open chamber");
        let by_elimination = walls(&a, &c.sign).expect("feasible sign vector");
        let coords: Vec<String> = w.iter().map(ToString::to_string).collect();
        println!("{}", c.sign);
        println!("  witness ({})", coords.join(", "));
        println!("  walls {:?} (elimination agrees: {})", c.walls, by_elimination == c.walls);
        println!("  {} extreme rays, {} edges", engine.extreme_rays(&c.sign).len(), engine.edges(&c.sign).len());
        println!("  diagram {}", engine.diagram(c));
    }
}
