//! Bundled hypergraphs from the worked examples, shipped as JSON under
//! `fixtures/`.

use crate::hypergraph::Hypergraph;

pub const FIG1A_JSON: &str = include_str!("../fixtures/fig1a.json");
pub const FIG1B_JSON: &str = include_str!("../fixtures/fig1b.json");
pub const FIG1C_JSON: &str = include_str!("../fixtures/fig1c.json");
pub const FIG1D_JSON: &str = include_str!("../fixtures/fig1d.json");
pub const ALL_TRIPLES4_JSON: &str = include_str!("../fixtures/all_triples4.json");
pub const COMPLETE3_JSON: &str = include_str!("../fixtures/complete3.json");

fn load(json: &str) -> Hypergraph {
    Hypergraph::parse(json).expect("bundled fixture parses")
}

/// `{4} {1,2} {3,4} {2,3,4}` on 4 vertices.
pub fn fig1a() -> Hypergraph {
    load(FIG1A_JSON)
}

/// `{1,2,4} {1,3,4} {2,3,4}`: maximally entangled at vertex 4 despite
/// `ran(g_4) = 2`.
pub fn fig1b() -> Hypergraph {
    load(FIG1B_JSON)
}

/// The star graph `{1,3} {2,3} {3,4}`.
pub fn fig1c() -> Hypergraph {
    load(FIG1C_JSON)
}

/// `{} {3} {2,3}` on 3 vertices, the 4-adjacent subhypergraph of [`fig1a`].
pub fn fig1d() -> Hypergraph {
    load(FIG1D_JSON)
}

/// Every 3-subset of `{1,2,3,4}`: locally maximally entangled, not a graph.
pub fn all_triples4() -> Hypergraph {
    load(ALL_TRIPLES4_JSON)
}

/// The triangle `{1,2} {1,3} {2,3}`.
pub fn complete3() -> Hypergraph {
    load(COMPLETE3_JSON)
}

/// Connected graphs on `n` vertices: path, star, cycle (n >= 3) and complete.
pub fn connected_graphs(n: usize) -> Vec<Hypergraph> {
    if n < 2 {
        return Vec::new();
    }
    let path: Vec<[usize; 2]> = (1..n).map(|i| [i, i + 1]).collect();
    let star: Vec<[usize; 2]> = (2..=n).map(|i| [1, i]).collect();
    let mut cycle = path.clone();
    let complete: Vec<[usize; 2]> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| [i, j]))
        .collect();
    let mut out = vec![path, star];
    if n >= 3 {
        cycle.push([1, n]);
        out.push(cycle);
    }
    out.push(complete);
    let mut graphs: Vec<Hypergraph> = out
        .into_iter()
        .map(|edges| Hypergraph::from_edge_lists(n, edges).expect("vertices in range"))
        .collect();
    graphs.dedup();
    graphs
}
