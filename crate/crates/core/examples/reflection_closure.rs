//! Closes simple roots under their reflections and prints the size of each
//! root-line arrangement, plus the 12 root lines of D₄ (its 24 roots up to sign).

use arr4::catalogue::{reflection_closure, RootSystemSpec};

fn main() {
    for spec in RootSystemSpec::all() {
        let a = reflection_closure(&spec).expect("finite reflection group");
        println!("{:<3} over {:<13} {} reflecting hyperplanes", spec.name, spec.field.name(), a.len());
    }
    let d4 = reflection_closure(&RootSystemSpec::d4()).expect("finite reflection group");
    for v in d4.sorted().normals() {
        let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("  ({})", coords.join(", "));
    }
}
