//! Per-vertex entropic measures with their classification.
//!
//! cargo run --example local_entropy -- crates/core/fixtures/fig1b.json

use hyperent::cli::load_input;
use hyperent::entropy::{classify_vertex, vertex_measure};
use hyperent::rational::render;
use hyperent::Method;

fn main() -> hyperent::Result<()> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "4: {4} {1,2} {3,4} {2,3,4}".to_string());
    let g = load_input(&input)?;
    println!("{g}");
    for t in 1..=g.n() {
        let v = vertex_measure(&g, t, Method::Auto)?;
        let class = classify_vertex(&g, t)?;
        println!(
            "t={t} rank(g_t)={} a={} E={} class={}",
            v.adjacent_rank,
            render(&v.off_diagonal),
            render(&v.measure),
            class.class.name()
        );
    }
    Ok(())
}
