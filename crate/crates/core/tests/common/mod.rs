//! Reference computations that share no code with the library's weight or
//! state paths: every quantity is evaluated input by input from the monomials.

#![allow(dead_code)]

use hyperent::{Hypergraph, Rational};

/// `u(g)(x)`, evaluating each monomial directly.
pub fn eval(g: &Hypergraph, x: u64) -> bool {
    g.edges()
        .iter()
        .filter(|e| x & e.bits() == e.bits())
        .count()
        % 2
        == 1
}

pub fn naive_hw(g: &Hypergraph) -> u64 {
    (0..1u64 << g.n()).filter(|&x| eval(g, x)).count() as u64
}

/// Off-diagonal of `rho_t` from `sum_rest (-1)^(f(x_t=0) xor f(x_t=1)) / 2^n`.
pub fn naive_off_diagonal(g: &Hypergraph, t: usize) -> Rational {
    let bit = 1u64 << (t - 1);
    let sum: i128 = (0..1u64 << g.n())
        .filter(|x| x & bit == 0)
        .map(|x| if eval(g, x) ^ eval(g, x | bit) { -1 } else { 1 })
        .sum();
    Rational::new(sum, 1i128 << g.n())
}

pub fn naive_measure(g: &Hypergraph, t: usize) -> Rational {
    let a = naive_off_diagonal(g, t);
    Rational::new(1, 4) - a * a
}

/// Largest edge size, scanning vertex lists.
pub fn naive_rank(g: &Hypergraph) -> usize {
    g.edges()
        .iter()
        .map(|e| e.vertices().count())
        .max()
        .unwrap_or(0)
}
