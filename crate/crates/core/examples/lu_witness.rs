//! Checks whether local entropic measures separate two hypergraph states.

use hyperent::entropy::{lu_inequivalence_witness, lu_inequivalence_witness_up_to_relabeling};
use hyperent::rational::render;
use hyperent::{fixtures, Hypergraph};

fn main() -> hyperent::Result<()> {
    let fig1a = fixtures::fig1a();
    let pairs = [
        (fig1a.with_edge(fig1a.full_edge())?, fig1a.clone()),
        (fixtures::all_triples4(), fixtures::fig1c()),
        (
            Hypergraph::parse("3: {1,2}")?,
            Hypergraph::parse("3: {2,3}")?,
        ),
    ];
    for (g, h) in &pairs {
        let w = lu_inequivalence_witness(g, h)?;
        let relabeled = lu_inequivalence_witness_up_to_relabeling(g, h)?;
        println!("{g}  vs  {h}");
        match (w.vertex, w.values) {
            (Some(t), Some((x, y))) => println!(
                "  per qubit: {:?} at t={t}: {} vs {}",
                w.kind,
                render(&x),
                render(&y)
            ),
            _ => println!("  per qubit: {:?}", w.kind),
        }
        println!("  up to relabeling: {:?}", relabeled.kind);
    }
    Ok(())
}
