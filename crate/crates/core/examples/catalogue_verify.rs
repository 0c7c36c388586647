//! Verifies every catalogue row and prints one line per row, followed by
//! any failing checks.

use arr4::catalogue::{verify_all, Status};
use arr4::report::ChamberPolicy;

fn main() {
    let v = verify_all(ChamberPolicy::Auto);
    for r in &v.reports {
        println!("{:<10} {:>2} pass {:>2} fail {:>2} skip", r.label, r.passed, r.failed, r.skipped);
        for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
            println!("    {}: {}", c.name, c.detail);
        }
    }
    println!("{} rows, {} failed", v.rows, v.failed_rows);
}
