//! Runs the built-in cross-checks with a custom seed.
//!
//! cargo run --release --example self_check -- 1234

use hyperent::verify::{run, VerifyConfig};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(42);
    let report = run(&VerifyConfig {
        seed,
        max_n: 6,
        ..VerifyConfig::default()
    });
    for suite in &report.suites {
        match &suite.failure {
            None => println!("{:<22} ok   {}", suite.name, suite.checked),
            Some(f) => println!("{:<22} FAIL {f}", suite.name),
        }
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
