//! Writes a built-in in the text file format, reads it back and checks
//! that the counts survive the round trip.
//!
//! `cargo run --example file_round_trip -- H4`

use arr4::catalogue::builtin;
use arr4::invariants::ArrangementData;
use arr4::io::{emit_arrangement, parse_arrangement};

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "A^3_1(27)".into());
    let a = builtin(&label).expect("label with normal vectors");
    let text = emit_arrangement(&a);
    for line in text.lines().take(5) {
        println!("{line}");
    }
    println!("... {} lines", text.lines().count());
    let b = parse_arrangement(&text).expect("emitted files parse");
    assert_eq!(emit_arrangement(&b), text, "emitting is idempotent");
    let (da, db) = (ArrangementData::from_arrangement(&a), ArrangementData::from_arrangement(&b));
    println!("h {} t {} f {}", db.h, db.t, db.f);
    println!("round trip preserves counts: {}", da.h == db.h && da.t == db.t && da.f == db.f);
}
