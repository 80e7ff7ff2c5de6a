//! Helpers shared by the integration test binaries.
#![allow(dead_code)]

use eigencut::enumerate::{enumerate_regular, EnumSpec};
use eigencut::multigraph::Multigraph;

/// The combined enumerated universe used by the acceptance suite:
/// connected d-regular multigraphs for (d, n_max) in
/// {(3, 6), (4, 5), (5, 4)}, tagged with their degree.
pub fn acceptance_universe() -> Vec<(u64, Multigraph)> {
    let mut out = Vec::new();
    for (d, n_max) in [(3u64, 6usize), (4, 5), (5, 4)] {
        let spec = EnumSpec::new(d, n_max, true).expect("valid spec");
        for g in enumerate_regular(&spec).expect("enumeration succeeds") {
            out.push((d, g));
        }
    }
    out
}

pub fn check(fails: &mut Vec<String>, ok: bool, msg: impl Into<String>) {
    if !ok {
        fails.push(msg.into());
    }
}

/// Prints the single pass/fail line for one acceptance criterion and
/// panics when anything failed.
pub fn finish(name: &str, fails: Vec<String>) {
    if fails.is_empty() {
        println!("acceptance {name}: PASS");
    } else {
        println!("acceptance {name}: FAIL");
        for f in &fails {
            println!("  - {f}");
        }
        panic!(
            "acceptance criterion {name} failed with {} issue(s)",
            fails.len()
        );
    }
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
