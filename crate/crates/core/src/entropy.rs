//! Local entropic measures `E_t = det(rho_t)` computed combinatorially from the
//! Hamming weight of the t-adjacent subhypergraph, plus the predicates and
//! LU-inequivalence witnesses built on them.
//!
//! For an `n`-qubit hypergraph state the reduced state of qubit `t` has
//! off-diagonal `a = (2^(n-1) - 2 hw(g_t)) / 2^n` and `E_t = 1/4 - a^2`.

use std::fmt;

use num_traits::Signed;

use crate::error::{HyperError, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::{half, quarter, Rational};
use crate::state::{build_state, reduced_density};
use crate::weight::{hamming_weight, HammingWeight, Method};

/// `(2^(n-1) - 2 hw_gt) / 2^n`, where `hw_gt` is the weight of an
/// `(n-1)`-vertex hypergraph.
pub fn off_diagonal(n: usize, hw_gt: HammingWeight) -> Result<Rational> {
    if n == 0 || n > crate::hypergraph::MAX_VERTICES {
        return Err(HyperError::VertexCount {
            n,
            min: 1,
            max: crate::hypergraph::MAX_VERTICES,
        });
    }
    let max = 1u64 << (n - 1);
    if hw_gt.value() > max {
        return Err(HyperError::WeightOutOfRange {
            hw: hw_gt.value(),
            max,
        });
    }
    let numer = i128::from(max) - 2 * i128::from(hw_gt.value());
    Ok(Rational::new(numer, 1i128 << n))
}

/// `1/4 - a^2`.
pub fn measure_from_off_diagonal(a: Rational) -> Rational {
    quarter() - a * a
}

/// Smallest eigenvalue `1/2 - |a|` of `[[1/2, a], [a, 1/2]]`; the determinant
/// equals `lambda (1 - lambda)`.
pub fn smallest_eigenvalue(a: Rational) -> Rational {
    half() - a.abs()
}

/// Everything computed for one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMeasure {
    pub vertex: usize,
    pub adjacent_rank: usize,
    pub adjacent_weight: HammingWeight,
    pub off_diagonal: Rational,
    pub measure: Rational,
}

/// Computes the measure at `t`. With [`Method::StateVector`] the off-diagonal
/// comes from the partial trace of the sign vector; every other method goes
/// through `hw(g_t)`.
pub fn vertex_measure(g: &Hypergraph, t: usize, method: Method) -> Result<VertexMeasure> {
    let adjacent = g.t_adjacent(t)?;
    let (adjacent_weight, _) = hamming_weight(&adjacent, method)?;
    let off_diagonal = match method {
        Method::StateVector => reduced_density(&build_state(g)?, t)?.a(),
        _ => off_diagonal(g.n(), adjacent_weight)?,
    };
    Ok(VertexMeasure {
        vertex: t,
        adjacent_rank: adjacent.rank(),
        adjacent_weight,
        off_diagonal,
        measure: measure_from_off_diagonal(off_diagonal),
    })
}

/// `E_t(|g>)` by the combinatorial route.
pub fn entropic_measure(g: &Hypergraph, t: usize) -> Result<Rational> {
    Ok(vertex_measure(g, t, Method::Auto)?.measure)
}

/// `(E_1, ..., E_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EntropicProfile {
    measures: Vec<Rational>,
}

impl EntropicProfile {
    pub fn new(measures: Vec<Rational>) -> Self {
        EntropicProfile { measures }
    }

    pub fn n(&self) -> usize {
        self.measures.len()
    }

    pub fn measures(&self) -> &[Rational] {
        &self.measures
    }

    /// Measure at 1-based vertex `t`.
    pub fn get(&self, t: usize) -> Option<Rational> {
        t.checked_sub(1).and_then(|i| self.measures.get(i).copied())
    }

    pub fn is_locally_maximally_entangled(&self) -> bool {
        self.measures.iter().all(|m| *m == quarter())
    }

    /// The measures as a sorted multiset, for comparisons up to relabeling.
    pub fn sorted(&self) -> Vec<Rational> {
        let mut v = self.measures.clone();
        v.sort();
        v
    }
}

impl fmt::Display for EntropicProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, m) in self.measures.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

pub fn entropic_profile(g: &Hypergraph) -> Result<EntropicProfile> {
    entropic_profile_with(g, Method::Auto)
}

pub fn entropic_profile_with(g: &Hypergraph, method: Method) -> Result<EntropicProfile> {
    let measures = (1..=g.n())
        .map(|t| vertex_measure(g, t, method).map(|v| v.measure))
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropicProfile { measures })
}

pub fn is_locally_maximally_entangled(g: &Hypergraph) -> Result<bool> {
    Ok(entropic_profile(g)?.is_locally_maximally_entangled())
}

/// What the rank of `g_t` alone says about `E_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    /// `ran(g_t) = 0`, so `E_t = 0`.
    Unentangled,
    /// `ran(g_t) = 1`, so `E_t = 1/4`.
    GuaranteedMax,
    /// `ran(g_t) = n - 1 >= 2`, so `0 < E_t < 1/4`.
    StrictInterior,
    Unconstrained,
}

impl VertexClass {
    pub const ALL: [VertexClass; 4] = [
        VertexClass::Unentangled,
        VertexClass::GuaranteedMax,
        VertexClass::StrictInterior,
        VertexClass::Unconstrained,
    ];

    /// Class for a vertex of an `n`-vertex hypergraph whose adjacent
    /// subhypergraph has rank `adjacent_rank`.
    ///
    /// The interior bound relies on `hw(g_t)` being odd and different from
    /// `2^(n-2)`, which needs `n >= 3`; for `n <= 2` the rank-0 and rank-1
    /// cases already cover `ran(g_t) = n - 1`.
    pub fn for_rank(n: usize, adjacent_rank: usize) -> VertexClass {
        match adjacent_rank {
            0 => VertexClass::Unentangled,
            1 => VertexClass::GuaranteedMax,
            r if n >= 3 && r == n - 1 => VertexClass::StrictInterior,
            _ => VertexClass::Unconstrained,
        }
    }

    pub fn admits(self, measure: &Rational) -> bool {
        let zero = Rational::from_integer(0);
        match self {
            VertexClass::Unentangled => *measure == zero,
            VertexClass::GuaranteedMax => *measure == quarter(),
            VertexClass::StrictInterior => zero < *measure && *measure < quarter(),
            VertexClass::Unconstrained => zero <= *measure && *measure <= quarter(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexClass::Unentangled => "unentangled",
            VertexClass::GuaranteedMax => "guaranteed-max",
            VertexClass::StrictInterior => "strict-interior",
            VertexClass::Unconstrained => "unconstrained",
        }
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: VertexClass,
    pub measure: Rational,
    pub adjacent_rank: usize,
}

/// Classifies vertex `t` by `ran(g_t)` and checks the computed measure obeys
/// the class bound.
pub fn classify_vertex(g: &Hypergraph, t: usize) -> Result<Classification> {
    let v = vertex_measure(g, t, Method::Auto)?;
    classify_measure(g.n(), &v)
}

pub fn classify_measure(n: usize, v: &VertexMeasure) -> Result<Classification> {
    let class = VertexClass::for_rank(n, v.adjacent_rank);
    if !class.admits(&v.measure) {
        return Err(HyperError::Invariant(format!(
            "vertex {} classified {class} but E = {}",
            v.vertex, v.measure
        )));
    }
    Ok(Classification {
        class,
        measure: v.measure,
        adjacent_rank: v.adjacent_rank,
    })
}

/// Constraint on every entry of the profile implied by `ran(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileConstraint {
    /// rank 0 or 1
    AllZero,
    /// rank 2
    ZeroOrMax,
    /// rank `n >= 3`
    StrictInterior,
    Unconstrained,
}

impl ProfileConstraint {
    pub fn admits_measure(self, measure: &Rational) -> bool {
        let zero = Rational::from_integer(0);
        match self {
            ProfileConstraint::AllZero => *measure == zero,
            ProfileConstraint::ZeroOrMax => *measure == zero || *measure == quarter(),
            ProfileConstraint::StrictInterior => zero < *measure && *measure < quarter(),
            ProfileConstraint::Unconstrained => true,
        }
    }

    pub fn admits(self, profile: &EntropicProfile) -> bool {
        profile.measures().iter().all(|m| self.admits_measure(m))
    }
}

/// Per-vertex bound from the rank of the whole hypergraph. Rank 2 is checked
/// before rank `n`, so `n = 2` falls under `ZeroOrMax`.
pub fn profile_bounds(g: &Hypergraph) -> ProfileConstraint {
    match g.rank() {
        0 | 1 => ProfileConstraint::AllZero,
        2 => ProfileConstraint::ZeroOrMax,
        r if r == g.n() => ProfileConstraint::StrictInterior,
        _ => ProfileConstraint::Unconstrained,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// Exactly one of the two hypergraphs contains `[n]`.
    ParityCertificate,
    /// Per-qubit measures differ at some vertex.
    ProfileMismatch,
    /// Sorted measures differ, so no relabeling plus local unitaries helps.
    SortedProfileMismatch,
    Inconclusive,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::ParityCertificate => "parity-certificate",
            WitnessKind::ProfileMismatch => "profile-mismatch",
            WitnessKind::SortedProfileMismatch => "sorted-profile-mismatch",
            WitnessKind::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence that two hypergraph states are not LU equivalent. Equal profiles
/// never certify equivalence; they give [`WitnessKind::Inconclusive`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LuWitness {
    pub kind: WitnessKind,
    pub vertex: Option<usize>,
    pub values: Option<(Rational, Rational)>,
}

impl LuWitness {
    pub fn is_certified(&self) -> bool {
        self.kind != WitnessKind::Inconclusive
    }

    fn inconclusive() -> Self {
        LuWitness {
            kind: WitnessKind::Inconclusive,
            vertex: None,
            values: None,
        }
    }
}

/// Tries to certify that `|g>` and `|h>` are not related by `U_1 ⊗ ... ⊗ U_n`.
///
/// Full-edge parity is checked first. It needs `n >= 2`: on one qubit `|+>` and
/// `|->` differ only by a local `Z`.
pub fn lu_inequivalence_witness(g: &Hypergraph, h: &Hypergraph) -> Result<LuWitness> {
    if let Some(w) = parity_witness(g, h)? {
        return Ok(w);
    }
    let (pg, ph) = (entropic_profile(g)?, entropic_profile(h)?);
    let mismatch = pg
        .measures()
        .iter()
        .zip(ph.measures())
        .position(|(a, b)| a != b);
    Ok(match mismatch {
        Some(i) => LuWitness {
            kind: WitnessKind::ProfileMismatch,
            vertex: Some(i + 1),
            values: Some((pg.measures()[i], ph.measures()[i])),
        },
        None => LuWitness::inconclusive(),
    })
}

/// Like [`lu_inequivalence_witness`] but also allows permuting qubits, so
/// profiles are compared as sorted multisets.
pub fn lu_inequivalence_witness_up_to_relabeling(
    g: &Hypergraph,
    h: &Hypergraph,
) -> Result<LuWitness> {
    if let Some(w) = parity_witness(g, h)? {
        return Ok(w);
    }
    let (sg, sh) = (entropic_profile(g)?.sorted(), entropic_profile(h)?.sorted());
    Ok(match sg.iter().zip(&sh).find(|(a, b)| a != b) {
        Some((a, b)) => LuWitness {
            kind: WitnessKind::SortedProfileMismatch,
            vertex: None,
            values: Some((*a, *b)),
        },
        None => LuWitness::inconclusive(),
    })
}

fn parity_witness(g: &Hypergraph, h: &Hypergraph) -> Result<Option<LuWitness>> {
    if g.n() != h.n() {
        return Err(HyperError::VertexCountMismatch(g.n(), h.n()));
    }
    if g.n() < 2 || g.contains_full_edge() == h.contains_full_edge() {
        return Ok(None);
    }
    // every vertex separates the two; report vertex 1
    let (eg, eh) = (entropic_measure(g, 1)?, entropic_measure(h, 1)?);
    if eg == eh {
        return Err(HyperError::Invariant(format!(
            "parity certificate for {g} vs {h} but E_1 agrees ({eg})"
        )));
    }
    Ok(Some(LuWitness {
        kind: WitnessKind::ParityCertificate,
        vertex: Some(1),
        values: Some((eg, eh)),
    }))
}
