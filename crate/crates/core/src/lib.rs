//! Entanglement of qubit hypergraph states in combinatorial terms.
//!
//! A hypergraph `g = ([n], E)` defines the state `|g> = prod_{e in E} Z_e |+>^n`
//! whose amplitudes are `(-1)^(u(g)(x)) / sqrt(2^n)`. The single-qubit reduced
//! state at vertex `t` depends only on the Hamming weight of the t-adjacent
//! subhypergraph `g_t`, which gives exact local entropic measures without ever
//! building the state. The [`state`] module builds it anyway, as an oracle.
//!
//! ```
//! use hyperent::{entropy, Hypergraph, Rational};
//!
//! let g: Hypergraph = "4: {4} {1,2} {3,4} {2,3,4}".parse().unwrap();
//! assert_eq!(entropy::entropic_measure(&g, 4).unwrap(), Rational::new(3, 16));
//! ```

pub mod cli;
pub mod entropy;
pub mod error;
pub mod fixtures;
pub mod hypergraph;
pub mod rational;
pub mod state;
pub mod verify;
pub mod weight;

pub use entropy::{EntropicProfile, LuWitness, VertexClass, WitnessKind};
pub use error::{HyperError, Result};
pub use hypergraph::{EdgeMask, Hypergraph, MAX_N};
pub use rational::Rational;
pub use state::{AmplitudeVector, ReducedDensity1Q, SignVector};
pub use weight::{HammingWeight, Method, TruthTable, M_MAX};
