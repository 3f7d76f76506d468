//! Runs every acceptance criterion and prints one line each.
//!
//! `cargo test --test acceptance -- C7` restricts to matching criteria.

use std::process::ExitCode;

use autfree::verify::{run_criterion, VerifyConfig};

fn main() -> ExitCode {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let cfg = VerifyConfig::default();
    let mut failed = 0;
    let mut ran = 0;
    for id in 1..=13u8 {
        let tag = format!("C{id}");
        if !filters.is_empty() && !filters.iter().any(|f| *f == tag) {
            continue;
        }
        let o = run_criterion(id, &cfg);
        println!("{o}");
        ran += 1;
        if !o.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
