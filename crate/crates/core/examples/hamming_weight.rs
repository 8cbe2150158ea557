//! Hamming weight of a hypergraph by each available method.
//!
//! cargo run --example hamming_weight -- "4: {1,2,3,4} {1,2} {3}"

use hyperent::weight::{hamming_weight, hw_full_edge_recurrence};
use hyperent::{Hypergraph, Method};

fn main() -> hyperent::Result<()> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3: {} {3} {2,3}".to_string());
    let g = Hypergraph::parse(&input)?;
    println!("{g}");
    for method in [Method::InclusionExclusion, Method::TruthTable, Method::Auto] {
        let (hw, used) = hamming_weight(&g, method)?;
        println!(
            "{:>4} -> hw = {} ({})",
            method.name(),
            hw.value(),
            used.name()
        );
    }
    if g.contains_full_edge() {
        println!(
            "recurrence -> hw = {}",
            hw_full_edge_recurrence(&g)?.value()
        );
    }
    Ok(())
}
