//! Hamming weight of a hypergraph, i.e. the number of inputs on which the
//! Boolean function `u(g) = XOR_{e in E} prod_{k in e} x_k` evaluates to 1.
//!
//! Two independent routes are provided:
//!
//! - [`hw_bruteforce`] materializes the truth table (subset zeta transform of
//!   the monomial set) and counts ones. Needs `n <= MAX_N`.
//! - [`hw_inclusion_exclusion`] sums `(-2)^(|S|-1) * 2^(n - |union S|)` over all
//!   nonempty edge subsets `S`. Needs `|E| <= M_MAX` but no dense storage.

use std::fmt;
use std::str::FromStr;

use crate::error::{HyperError, Result};
use crate::hypergraph::{check_dense, dense_limit, EdgeMask, Hypergraph};
use crate::state;

/// Largest edge count accepted by [`hw_inclusion_exclusion`].
pub const M_MAX: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HammingWeight(u64);

impl HammingWeight {
    pub const fn new(value: u64) -> Self {
        HammingWeight(value)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    pub const fn is_odd(self) -> bool {
        self.0 & 1 == 1
    }
}

impl fmt::Display for HammingWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Truth table of `u(g)`: bit `x` holds `u(g)(x_1, ..., x_n)` where `x_i` is
/// bit `i - 1` of `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

// bit positions whose index has bit i clear, for i < 6
const LOW_HALVES: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

impl TruthTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, x: usize) -> bool {
        assert!(
            x < self.len(),
            "input {x} out of range for {} variables",
            self.n
        );
        self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |x| self.get(x))
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({}: ", self.n)?;
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// Evaluates `u(g)` on all `2^n` inputs.
///
/// `u(g)(x)` is the XOR of the monomial indicators of all edges `e ⊆ x`, so the
/// table is the GF(2) superset-sum transform of the edge-membership vector.
pub fn truth_table(g: &Hypergraph) -> Result<TruthTable> {
    let n = g.n();
    check_dense(n)?;
    let len = 1usize << n;
    let mut words = vec![0u64; len.div_ceil(64)];
    for e in g.edges() {
        let x = e.bits() as usize;
        words[x >> 6] |= 1 << (x & 63);
    }
    for (i, &low) in LOW_HALVES.iter().enumerate().take(n) {
        let shift = 1 << i;
        for w in words.iter_mut() {
            *w ^= (*w & low) << shift;
        }
    }
    for i in 6..n {
        let stride = 1usize << (i - 6);
        for block in words.chunks_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
    Ok(TruthTable { n, words })
}

/// Reference weight: popcount of the truth table.
pub fn hw_bruteforce(g: &Hypergraph) -> Result<HammingWeight> {
    Ok(HammingWeight(truth_table(g)?.count_ones()))
}

/// Weight by inclusion-exclusion over nonempty edge subsets.
///
/// Every term is bounded by `2^(M_MAX - 1 + n)`, and there are fewer than
/// `2^M_MAX` of them, so `i128` never overflows for `n <= 62`.
pub fn hw_inclusion_exclusion(g: &Hypergraph) -> Result<HammingWeight> {
    let m = g.edge_count();
    if m > M_MAX {
        return Err(HyperError::TooManyEdges { m, limit: M_MAX });
    }
    let n = g.n();
    let total = subset_sum(g.edges(), n as u32, EdgeMask::EMPTY, 0);
    let max = 1i128 << n;
    if !(0..=max).contains(&total) {
        return Err(HyperError::Invariant(format!(
            "inclusion-exclusion sum {total} outside 0..={max} for {g}"
        )));
    }
    Ok(HammingWeight(total as u64))
}

// Sum over every nonempty extension of the current subset by edges taken in
// increasing index order, so each subset is visited exactly once.
fn subset_sum(edges: &[EdgeMask], n: u32, union: EdgeMask, depth: u32) -> i128 {
    let mut total = 0i128;
    for (i, &e) in edges.iter().enumerate() {
        let u = union.union(e);
        let k = depth + 1;
        let magnitude = 1i128 << (k - 1 + n - u.cardinality() as u32);
        total += if k % 2 == 1 { magnitude } else { -magnitude };
        total += subset_sum(&edges[i + 1..], n, u, k);
    }
    total
}

/// `hw(g)` is odd iff `[n] ∈ E`.
pub fn hw_is_odd(g: &Hypergraph) -> bool {
    g.contains_full_edge()
}

/// `hw(g) = hw(g - [n]) + (-1)^(m-1)` for `[n] ∈ E`, with the reduced weight
/// taken by inclusion-exclusion.
pub fn hw_full_edge_recurrence(g: &Hypergraph) -> Result<HammingWeight> {
    hw_full_edge_recurrence_with(g, hw_inclusion_exclusion)
}

/// [`hw_full_edge_recurrence`] with a caller-chosen weight for `g - [n]`.
pub fn hw_full_edge_recurrence_with<F>(g: &Hypergraph, weight: F) -> Result<HammingWeight>
where
    F: Fn(&Hypergraph) -> Result<HammingWeight>,
{
    let full = g.full_edge();
    if !g.contains_edge(full) {
        return Err(HyperError::MissingFullEdge { n: g.n() });
    }
    let m = g.edge_count();
    let reduced = weight(&g.without_edge(full))?.value() as i128;
    let value = if m % 2 == 1 { reduced + 1 } else { reduced - 1 };
    if value < 0 {
        return Err(HyperError::Invariant(format!(
            "recurrence produced negative weight for {g}"
        )));
    }
    Ok(HammingWeight(value as u64))
}

/// Weight values implied by the rank alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightConstraint {
    /// rank 0: `hw ∈ {0, 2^n}`
    ZeroOrFull {
        full: u64,
    },
    /// rank 1: `hw = 2^(n-1)`
    Half {
        half: u64,
    },
    Unconstrained,
}

impl WeightConstraint {
    pub fn admits(self, hw: HammingWeight) -> bool {
        match self {
            WeightConstraint::ZeroOrFull { full } => hw.value() == 0 || hw.value() == full,
            WeightConstraint::Half { half } => hw.value() == half,
            WeightConstraint::Unconstrained => true,
        }
    }

    /// The predicted weights, or `None` when unconstrained.
    pub fn allowed(self) -> Option<Vec<u64>> {
        match self {
            WeightConstraint::ZeroOrFull { full } => Some(vec![0, full]),
            WeightConstraint::Half { half } => Some(vec![half]),
            WeightConstraint::Unconstrained => None,
        }
    }
}

pub fn rank_weight_bounds(g: &Hypergraph) -> WeightConstraint {
    let n = g.n() as u32;
    match g.rank() {
        0 => WeightConstraint::ZeroOrFull { full: 1 << n },
        1 => WeightConstraint::Half { half: 1 << (n - 1) },
        _ => WeightConstraint::Unconstrained,
    }
}

/// How a weight is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Cheapest feasible of inclusion-exclusion and truth table.
    #[default]
    Auto,
    InclusionExclusion,
    TruthTable,
    /// Count negative amplitudes of the sign vector built gate by gate.
    StateVector,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::InclusionExclusion => "ie",
            Method::TruthTable => "tt",
            Method::StateVector => "statevector",
        }
    }

    /// Picks the concrete method `Auto` stands for on `g`.
    pub fn resolve(self, g: &Hypergraph) -> Result<Method> {
        if self != Method::Auto {
            return Ok(self);
        }
        let (n, m) = (g.n(), g.edge_count());
        let ie_ok = m <= M_MAX;
        let tt_ok = n <= dense_limit();
        match (ie_ok, tt_ok) {
            (true, false) => Ok(Method::InclusionExclusion),
            (false, true) => Ok(Method::TruthTable),
            (true, true) => {
                // 2^m subset terms against n passes over 2^n / 64 words
                let ie_cost = 1u128 << m;
                let tt_cost = (n.max(1) as u128) * ((1u128 << n) / 64 + 1);
                Ok(if ie_cost <= tt_cost {
                    Method::InclusionExclusion
                } else {
                    Method::TruthTable
                })
            }
            (false, false) => Err(HyperError::TooManyEdges { m, limit: M_MAX }),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Method::Auto),
            "ie" => Ok(Method::InclusionExclusion),
            "tt" => Ok(Method::TruthTable),
            "statevector" => Ok(Method::StateVector),
            other => Err(format!(
                "unknown method {other:?} (expected auto, ie, tt or statevector)"
            )),
        }
    }
}

/// Computes `hw(g)` with `method`, returning the concrete method that ran.
pub fn hamming_weight(g: &Hypergraph, method: Method) -> Result<(HammingWeight, Method)> {
    let method = method.resolve(g)?;
    let hw = match method {
        Method::InclusionExclusion => hw_inclusion_exclusion(g)?,
        Method::TruthTable => hw_bruteforce(g)?,
        Method::StateVector => HammingWeight(state::build_state(g)?.negative_count()),
        Method::Auto => unreachable!("resolved above"),
    };
    Ok((hw, method))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Hypergraph {
        Hypergraph::parse(text).unwrap()
    }

    // direct evaluation of each monomial at each input
    fn naive_table(g: &Hypergraph) -> Vec<bool> {
        (0..1u64 << g.n())
            .map(|x| {
                g.edges()
                    .iter()
                    .fold(false, |acc, e| acc ^ (x & e.bits() == e.bits()))
            })
            .collect()
    }

    #[test]
    fn fig1d_truth_table() {
        // f = 1 ⊕ x3 ⊕ x2x3
        let tt = truth_table(&g("3: {} {3} {2,3}")).unwrap();
        let bits: Vec<bool> = tt.iter().collect();
        let expected = [true, true, true, true, false, false, true, true];
        assert_eq!(bits, expected);
        assert_eq!(tt.count_ones(), 6);
        assert!(tt.get(0));
    }

    #[test]
    fn constant_tables() {
        assert_eq!(truth_table(&g("3:")).unwrap().count_ones(), 0);
        let ones = truth_table(&g("2: {}")).unwrap();
        assert!(ones.iter().all(|b| b));
    }

    #[test]
    fn truth_table_matches_naive_evaluation_across_word_boundaries() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=9 {
            for _ in 0..20 {
                let h = crate::hypergraph::random_hypergraph(&mut rng, n, 8);
                let tt: Vec<bool> = truth_table(&h).unwrap().iter().collect();
                assert_eq!(tt, naive_table(&h), "{h}");
            }
        }
    }

    #[test]
    fn weight_examples() {
        let g4 = g("3: {} {3} {2,3}");
        assert_eq!(hw_bruteforce(&g4).unwrap().value(), 6);
        assert_eq!(hw_inclusion_exclusion(&g4).unwrap().value(), 6);
        for n in 1..=5 {
            let empty = Hypergraph::empty(n).unwrap();
            assert_eq!(hw_bruteforce(&empty).unwrap().value(), 0);
            assert_eq!(hw_inclusion_exclusion(&empty).unwrap().value(), 0);
        }
        let k3 = g("3: {1,2} {1,3} {2,3}");
        assert_eq!(hw_bruteforce(&k3).unwrap().value(), 4);
        assert_eq!(hw_inclusion_exclusion(&k3).unwrap().value(), 4);
    }

    #[test]
    fn single_edge_weight() {
        let h = g("5: {1,3,4}");
        assert_eq!(hw_inclusion_exclusion(&h).unwrap().value(), 1 << 2);
        assert_eq!(hw_inclusion_exclusion(&g("5: {}")).unwrap().value(), 32);
    }

    #[test]
    fn inclusion_exclusion_beyond_dense_limit() {
        // disjoint a = {1,2}, b = {3,4,5}: P(f = 1) = 1/4 * 7/8 + 1/8 * 3/4 = 10/32
        let h = Hypergraph::from_edge_lists(40, [&[1, 2][..], &[3, 4, 5]]).unwrap();
        assert_eq!(hw_inclusion_exclusion(&h).unwrap().value(), 10 << 35);
        assert!(matches!(
            hw_bruteforce(&h),
            Err(HyperError::DenseTooLarge { .. })
        ));
        let (hw, used) = hamming_weight(&h, Method::Auto).unwrap();
        assert_eq!(used, Method::InclusionExclusion);
        assert_eq!(hw.value(), 10 << 35);
    }

    #[test]
    fn too_many_edges() {
        let edges = (1..=25u64).map(EdgeMask::new);
        let h = Hypergraph::new(5, edges).unwrap();
        assert!(matches!(
            hw_inclusion_exclusion(&h),
            Err(HyperError::TooManyEdges { m: 25, limit: 24 })
        ));
        let (hw, used) = hamming_weight(&h, Method::Auto).unwrap();
        assert_eq!(used, Method::TruthTable);
        assert_eq!(hw, hw_bruteforce(&h).unwrap());
    }

    #[test]
    fn parity_examples() {
        assert!(hw_is_odd(&g("3: {1,2,3} {1,2}")));
        assert!(!hw_is_odd(&g("4: {4} {1,2} {3,4} {2,3,4}")));
        assert!(hw_bruteforce(&g("3: {1,2,3} {1,2}")).unwrap().is_odd());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(
            hw_full_edge_recurrence(&g("3: {1,2,3}")).unwrap().value(),
            1
        );
        assert_eq!(
            hw_full_edge_recurrence(&g("2: {1,2} {1}")).unwrap().value(),
            1
        );
        let h = g("4: {1,2,3,4} {1,2} {3}");
        let reduced = hw_bruteforce(&g("4: {1,2} {3}")).unwrap().value();
        assert_eq!(hw_full_edge_recurrence(&h).unwrap().value(), reduced + 1);
        assert_eq!(
            hw_full_edge_recurrence(&h).unwrap(),
            hw_bruteforce(&h).unwrap()
        );
        assert!(matches!(
            hw_full_edge_recurrence(&g("3: {1,2}")),
            Err(HyperError::MissingFullEdge { n: 3 })
        ));
    }

    #[test]
    fn rank_bounds_examples() {
        let c = rank_weight_bounds(&g("3: {}"));
        assert_eq!(c.allowed(), Some(vec![0, 8]));
        assert!(c.admits(hw_bruteforce(&g("3: {}")).unwrap()));

        let loops = g("3: {1} {2} {}");
        assert_eq!(rank_weight_bounds(&loops).allowed(), Some(vec![4]));
        assert_eq!(hw_bruteforce(&loops).unwrap().value(), 4);

        let k3 = g("3: {1,2} {1,3} {2,3}");
        assert_eq!(rank_weight_bounds(&k3), WeightConstraint::Unconstrained);
        assert_eq!(hw_bruteforce(&k3).unwrap().value(), 4);
    }

    #[test]
    fn method_parsing() {
        for m in [
            Method::Auto,
            Method::InclusionExclusion,
            Method::TruthTable,
            Method::StateVector,
        ] {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("bogus".parse::<Method>().is_err());
    }

    #[test]
    fn statevector_method_agrees() {
        let fig = g("4: {4} {1,2} {3,4} {2,3,4}");
        let (sv, _) = hamming_weight(&fig, Method::StateVector).unwrap();
        assert_eq!(sv, hw_bruteforce(&fig).unwrap());
    }
}
