//! Class counts over every hypergraph on n vertices.
//!
//! cargo run --release --example census -- 4

use hyperent::cli::{enumerate_summary, EnumerateOptions};

fn main() -> hyperent::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let (rows, summary) = enumerate_summary(&EnumerateOptions::exhaustive(n))?;
    let lme = rows.iter().filter(|r| r.lme).count();
    let odd = rows.iter().filter(|r| r.hw % 2 == 1).count();
    println!(
        "n = {n}: {} hypergraphs, {odd} with odd weight, {lme} locally maximally entangled",
        rows.len()
    );
    println!(
        "{}",
        serde_json::to_string_pretty(&summary).expect("summary serializes")
    );
    Ok(())
}
