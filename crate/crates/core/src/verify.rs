//! Self-verification: cross-checks every combinatorial result against the
//! truth-table and state-vector oracles, exhaustively on small `n` and on
//! seeded random hypergraphs above that.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entropy::{
    measure_from_off_diagonal, off_diagonal, profile_bounds, EntropicProfile, VertexClass,
};
use crate::error::Result;
use crate::hypergraph::{dense_limit, random_hypergraph, EdgeMask, Hypergraph};
use crate::rational::{to_f64, Rational};
use crate::state::{
    apply_local_unitary, build_state, det2, random_unitary, reduced_density, reduced_density_float,
    to_amplitudes, SignVector,
};
use crate::weight::{
    hw_bruteforce, hw_full_edge_recurrence_with, hw_inclusion_exclusion, rank_weight_bounds,
    HammingWeight,
};

pub type WeightFn = fn(&Hypergraph) -> Result<HammingWeight>;

/// Tolerance for determinants compared across random local unitaries.
pub const LU_TOLERANCE: f64 = 1e-9;
/// Tolerance between the float determinant and the exact measure.
pub const FLOAT_EXACT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest `n` for random cases (exhaustive checks stop at 3 or 4).
    pub max_n: usize,
    /// Random hypergraphs per randomized suite.
    pub samples: usize,
    /// Inclusion-exclusion implementation under test.
    pub inclusion_exclusion: WeightFn,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            max_n: 8,
            samples: 250,
            inclusion_exclusion: hw_inclusion_exclusion,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    /// First failing instance, serialized for reproduction.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_n: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

type Check<'a> = dyn FnMut(&Hypergraph) -> std::result::Result<usize, String> + 'a;

fn run_suite(name: &'static str, cases: &[Hypergraph], check: &mut Check<'_>) -> SuiteResult {
    let mut checked = 0;
    for g in cases {
        match check(g) {
            Ok(k) => checked += k,
            Err(msg) => {
                return SuiteResult {
                    name,
                    checked,
                    failure: Some(format!("{g}: {msg}")),
                }
            }
        }
    }
    SuiteResult {
        name,
        checked,
        failure: None,
    }
}

fn err_str<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn exhaustive(max: usize) -> Vec<Hypergraph> {
    (1..=max)
        .flat_map(|n| Hypergraph::enumerate_all(n).expect("n within exhaustive range"))
        .collect()
}

fn random_cases(rng: &mut ChaCha8Rng, lo: usize, hi: usize, count: usize) -> Vec<Hypergraph> {
    if lo > hi {
        return Vec::new();
    }
    (0..count)
        .map(|_| {
            let n = rng.random_range(lo..=hi);
            random_hypergraph(rng, n, 12)
        })
        .collect()
}

fn measure_with(ie: WeightFn, g: &Hypergraph, t: usize) -> Result<(usize, Rational)> {
    let gt = g.t_adjacent(t)?;
    let a = off_diagonal(g.n(), ie(&gt)?)?;
    Ok((gt.rank(), measure_from_off_diagonal(a)))
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let ie = config.inclusion_exclusion;
    let max_n = config.max_n.clamp(1, dense_limit().max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let small = exhaustive(max_n.min(3));
    let census = exhaustive(max_n.min(4));
    let mut cases = small.clone();
    cases.extend(random_cases(&mut rng, 4, max_n, config.samples));
    let lu_cases = random_cases(&mut rng, 1, max_n.min(8), config.samples.min(100));

    let mut suites = Vec::new();

    suites.push(run_suite("weight-oracle", &cases, &mut |g| {
        let (a, b) = (err_str(ie(g))?, err_str(hw_bruteforce(g))?);
        if a != b {
            return Err(format!("inclusion-exclusion {a} != truth table {b}"));
        }
        Ok(1)
    }));

    suites.push(run_suite("parity", &cases, &mut |g| {
        let hw = err_str(hw_bruteforce(g))?;
        if hw.is_odd() != g.contains_full_edge() {
            return Err(format!(
                "hw = {hw} but full edge present = {}",
                g.contains_full_edge()
            ));
        }
        Ok(1)
    }));

    suites.push(run_suite("full-edge-recurrence", &cases, &mut |g| {
        let with_full = err_str(g.with_edge(g.full_edge()))?;
        let rec = err_str(hw_full_edge_recurrence_with(&with_full, ie))?;
        let oracle = err_str(hw_bruteforce(&with_full))?;
        if rec != oracle {
            return Err(format!(
                "recurrence {rec} != truth table {oracle} with [n] added"
            ));
        }
        Ok(1)
    }));

    let mut low_rank = Vec::new();
    for n in 1..=max_n.min(4) {
        for set in 0u64..1 << (n + 1) {
            // bit 0 selects ∅, bit i selects the loop {i}
            let edges = (0..=n).filter(|i| set >> i & 1 == 1).map(|i| {
                if i == 0 {
                    EdgeMask::EMPTY
                } else {
                    EdgeMask::new(1 << (i - 1))
                }
            });
            low_rank.push(Hypergraph::new(n, edges).expect("loops within [n]"));
        }
    }
    low_rank.extend(census.iter().cloned());
    suites.push(run_suite("rank-bounds", &low_rank, &mut |g| {
        let hw = err_str(hw_bruteforce(g))?;
        if !rank_weight_bounds(g).admits(hw) {
            return Err(format!("rank {} but hw = {hw}", g.rank()));
        }
        let extreme = hw.value() == 0 || hw.value() == 1 << g.n();
        if extreme != (g.rank() == 0) {
            return Err(format!("hw = {hw} with rank {}", g.rank()));
        }
        Ok(1)
    }));

    suites.push(run_suite("complement", &cases, &mut |g| {
        let hw = err_str(hw_bruteforce(g))?.value();
        let flipped = err_str(g.toggle_edge(EdgeMask::EMPTY))?;
        let hw_flipped = err_str(ie(&flipped))?.value();
        if hw + hw_flipped != 1 << g.n() {
            return Err(format!("toggling ∅ maps hw {hw} to {hw_flipped}"));
        }
        Ok(1)
    }));

    suites.push(run_suite("density-chain", &cases, &mut |g| {
        let sv = err_str(build_state(g))?;
        for t in 1..=g.n() {
            let rho = err_str(reduced_density(&sv, t))?;
            let hw_gt = err_str(hw_bruteforce(&err_str(g.t_adjacent(t))?))?;
            let a = err_str(off_diagonal(g.n(), hw_gt))?;
            if rho.a() != a {
                return Err(format!(
                    "t = {t}: partial trace a = {} but weight gives {a}",
                    rho.a()
                ));
            }
            let (_, measure) = err_str(measure_with(ie, g, t))?;
            if measure != rho.det() {
                return Err(format!("t = {t}: E = {measure} but det = {}", rho.det()));
            }
        }
        Ok(g.n())
    }));

    suites.push(run_suite("vertex-classes", &census, &mut |g| {
        for t in 1..=g.n() {
            let (rank, measure) = err_str(measure_with(ie, g, t))?;
            let class = VertexClass::for_rank(g.n(), rank);
            if !class.admits(&measure) {
                return Err(format!("t = {t}: class {class} but E = {measure}"));
            }
            if (measure == Rational::from_integer(0)) != (rank == 0) {
                return Err(format!("t = {t}: E = {measure} with ran(g_t) = {rank}"));
            }
        }
        Ok(g.n())
    }));

    suites.push(run_suite("profile-bounds", &cases, &mut |g| {
        let measures = (1..=g.n())
            .map(|t| measure_with(ie, g, t).map(|(_, m)| m))
            .collect::<Result<Vec<_>>>();
        let profile = EntropicProfile::new(err_str(measures)?);
        if !profile_bounds(g).admits(&profile) {
            return Err(format!("rank {} but profile {profile}", g.rank()));
        }
        Ok(1)
    }));

    let pair_space: Vec<Hypergraph> = if max_n >= 3 {
        Hypergraph::enumerate_all(3)
            .expect("n = 3 enumerable")
            .collect()
    } else {
        Vec::new()
    };
    let profiles: std::result::Result<Vec<(bool, Vec<Rational>)>, String> = pair_space
        .iter()
        .map(|g| {
            let ms = (1..=3)
                .map(|t| measure_with(ie, g, t).map(|(_, m)| m))
                .collect::<Result<Vec<_>>>();
            Ok((g.contains_full_edge(), err_str(ms)?))
        })
        .collect();
    suites.push(match profiles {
        Err(msg) => SuiteResult {
            name: "parity-separation",
            checked: 0,
            failure: Some(msg),
        },
        Ok(profiles) => {
            let (full, rest): (Vec<_>, Vec<_>) =
                profiles.iter().zip(&pair_space).partition(|((f, _), _)| *f);
            let mut checked = 0;
            let mut failure = None;
            'outer: for ((_, pf), gf) in &full {
                for ((_, pr), gr) in &rest {
                    for t in 0..3 {
                        if pf[t] == pr[t] {
                            failure =
                                Some(format!("{gf} vs {gr}: E_{} = {} on both", t + 1, pf[t]));
                            break 'outer;
                        }
                        checked += 1;
                    }
                }
            }
            SuiteResult {
                name: "parity-separation",
                checked,
                failure,
            }
        }
    });

    let mut lu_rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5eed);
    suites.push(run_suite("lu-invariance", &lu_cases, &mut |g| {
        let sv = err_str(build_state(g))?;
        let before = to_amplitudes(&sv);
        let mut after = before.clone();
        for t in 1..=g.n() {
            after = err_str(apply_local_unitary(&after, t, &random_unitary(&mut lu_rng)))?;
        }
        for t in 1..=g.n() {
            let d0 = det2(&err_str(reduced_density_float(&before, t))?).re;
            let d1 = det2(&err_str(reduced_density_float(&after, t))?).re;
            if (d0 - d1).abs() > LU_TOLERANCE {
                return Err(format!(
                    "t = {t}: det {d0} before, {d1} after local unitaries"
                ));
            }
            let exact = to_f64(&err_str(measure_with(ie, g, t))?.1);
            if (d0 - exact).abs() > FLOAT_EXACT_TOLERANCE {
                return Err(format!("t = {t}: float det {d0} vs exact {exact}"));
            }
        }
        Ok(g.n())
    }));

    let mut order_rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x0de4);
    suites.push(run_suite("gate-order", &cases, &mut |g| {
        let canonical = err_str(build_state(g))?;
        let mut edges = g.edges().to_vec();
        edges.shuffle(&mut order_rng);
        let mut sv = err_str(SignVector::plus(g.n()))?;
        for e in edges {
            sv = err_str(crate::state::apply_hyperedge_gate(&sv, e))?;
        }
        if sv != canonical {
            return Err("state depends on gate order".to_string());
        }
        Ok(1)
    }));

    VerifyReport {
        seed: config.seed,
        max_n,
        suites,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = run(&VerifyConfig {
            max_n: 3,
            samples: 10,
            ..VerifyConfig::default()
        });
        for s in &report.suites {
            assert!(s.passed(), "{}: {:?}", s.name, s.failure);
            assert!(s.checked > 0, "{} checked nothing", s.name);
        }
    }
}
