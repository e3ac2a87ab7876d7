//! Run the whole identity suite at default bounds and print the report.
//! Equivalent to `altrun verify --suite all`.
//!
//! ```text
//! cargo run --release --example verify_all
//! ```

use altrun::verify::{run_full_suite, Status};

fn main() {
    let report = run_full_suite();
    for check in &report.checks {
        let status = match check.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flag => "FLAG",
        };
        print!("{status}  {:24} cases {}..={}", check.id.name(), check.lo, check.hi);
        if let Some(note) = &check.note {
            print!("  [{note}]");
        }
        println!("  ({} ms)", check.elapsed.as_millis());
        if let Some(ce) = &check.counterexample {
            println!("      n = {}:\n      lhs {}\n      rhs {}", ce.n, ce.lhs, ce.rhs);
        }
    }
    let (pass, fail, flag) = report.counts();
    println!("{pass} passed, {fail} failed, {flag} flagged");
    std::process::exit(if report.has_fail() { 1 } else { 0 });
}
