//! Hypergraphs over vertices `1..=n` with hyperedges stored as bit masks.
//!
//! Vertex `i` lives at bit `i - 1` of an [`EdgeMask`]. The empty hyperedge is
//! the all-zero mask and is a legal member of the edge set. Edge sets are kept
//! sorted by `(cardinality, mask)` and deduplicated, so two hypergraphs with the
//! same edge set compare equal and serialize identically.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{HyperError, Result};

/// Largest vertex count accepted by the dense paths (truth tables, state
/// vectors). `2^20` entries keeps every dense table around a megabyte.
pub const MAX_N: usize = 20;

/// Largest vertex count a [`Hypergraph`] can carry at all. The combinatorial
/// paths work up to here; the bound keeps the exact entropic measure, whose
/// denominator divides `2^(2n)`, inside `i128`.
pub const MAX_VERTICES: usize = 62;

/// Largest `n` for which every edge set can be enumerated (`2^(2^4)` sets).
pub const EXHAUSTIVE_MAX_N: usize = 4;

/// Environment variable that may lower [`MAX_N`] for constrained machines.
pub const MAX_N_ENV: &str = "HYPERENT_MAX_N";

/// Effective dense limit: [`MAX_N`], or `HYPERENT_MAX_N` when that is smaller.
pub fn dense_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map_or(MAX_N, |v| v.min(MAX_N))
    })
}

pub(crate) fn check_dense(n: usize) -> Result<()> {
    let limit = dense_limit();
    if n > limit {
        return Err(HyperError::DenseTooLarge { n, limit });
    }
    Ok(())
}

/// One hyperedge: bit `i - 1` is set iff vertex `i` belongs to the edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeMask(u64);

impl EdgeMask {
    pub const EMPTY: EdgeMask = EdgeMask(0);

    pub const fn new(bits: u64) -> Self {
        EdgeMask(bits)
    }

    /// The edge `[n] = {1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            EdgeMask(u64::MAX)
        } else {
            EdgeMask((1u64 << n) - 1)
        }
    }

    /// Builds a mask from 1-based vertex labels, checked against `n`.
    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > n {
                return Err(HyperError::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << (v - 1);
        }
        Ok(EdgeMask(bits))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, vertex: usize) -> bool {
        (1..=64).contains(&vertex) && self.0 >> (vertex - 1) & 1 == 1
    }

    pub const fn union(self, other: EdgeMask) -> EdgeMask {
        EdgeMask(self.0 | other.0)
    }

    pub const fn is_subset_of(self, other: EdgeMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// True iff no bit above vertex `n` is set.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(EdgeMask::full(n))
    }

    /// 1-based vertex labels in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let low = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(low + 1)
        })
    }

    /// Drops vertex `t` and shifts every higher vertex down by one.
    pub fn remove_vertex(self, t: usize) -> EdgeMask {
        debug_assert!(t >= 1);
        let below = self.0 & ((1u64 << (t - 1)) - 1);
        let above = if t >= 64 { 0 } else { (self.0 >> t) << (t - 1) };
        EdgeMask(below | above)
    }
}

impl Ord for EdgeMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cardinality()
            .cmp(&other.cardinality())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for EdgeMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EdgeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for EdgeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A hypergraph `([n], E)`.
///
/// `n = 0` is representable so that the adjacent subhypergraph of a one-vertex
/// hypergraph is well formed, but [`Hypergraph::parse`] requires `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<EdgeMask>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = HyperError;

    fn try_from(raw: HypergraphJson) -> Result<Self> {
        check_vertex_count(raw.n, 0)?;
        let edges = raw
            .edges
            .into_iter()
            .map(|e| EdgeMask::from_vertices(raw.n, e))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(raw.n, edges)
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(g: Hypergraph) -> Self {
        HypergraphJson {
            n: g.n,
            edges: g.edges.iter().map(|e| e.vertices().collect()).collect(),
        }
    }
}

fn check_vertex_count(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_VERTICES {
        return Err(HyperError::VertexCount {
            n,
            min,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

impl Hypergraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = EdgeMask>,
    {
        check_vertex_count(n, 0)?;
        let mut edges: Vec<EdgeMask> = edges.into_iter().collect();
        if let Some(bad) = edges.iter().find(|e| !e.fits(n)) {
            return Err(HyperError::EdgeOutOfRange {
                mask: bad.bits(),
                n,
            });
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Hypergraph { n, edges })
    }

    /// `(V, ∅)`.
    pub fn empty(n: usize) -> Result<Self> {
        Hypergraph::new(n, [])
    }

    /// Builds from 1-based vertex lists, e.g. `&[&[1, 2][..], &[3]]`.
    pub fn from_edge_lists<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        check_vertex_count(n, 0)?;
        let masks = edges
            .into_iter()
            .map(|e| EdgeMask::from_vertices(n, e.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(n, masks)
    }

    /// Decodes an edge-set index: bit `j` of `set` selects the edge with mask `j`.
    /// Supports `n <= 6`, where `2^n` candidate edges fit in 64 bits.
    pub fn from_edge_set_mask(n: usize, set: u64) -> Result<Self> {
        if n > 6 {
            return Err(HyperError::EnumerationTooLarge { n, max: 6 });
        }
        let candidates = 1usize << n;
        if candidates < 64 && set >> candidates != 0 {
            return Err(HyperError::Parse(format!(
                "edge-set index {set:#x} has bits beyond the {candidates} edges of n = {n}"
            )));
        }
        let edges = (0..candidates as u64)
            .filter(|j| set >> j & 1 == 1)
            .map(EdgeMask::new);
        Hypergraph::new(n, edges)
    }

    /// Every hypergraph on `n` vertices, in ascending edge-set index order.
    pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = Hypergraph>> {
        if n == 0 || n > EXHAUSTIVE_MAX_N {
            return Err(HyperError::EnumerationTooLarge {
                n,
                max: EXHAUSTIVE_MAX_N,
            });
        }
        let total = 1u64 << (1u64 << n);
        Ok((0..total).map(move |set| {
            Hypergraph::from_edge_set_mask(n, set).expect("index within range by construction")
        }))
    }

    /// Reads either the compact form `4: {4} {1,2} {}` or the JSON form
    /// `{"n": 4, "edges": [[4], [1, 2], []]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let g = if trimmed.starts_with('{') {
            serde_json::from_str::<HypergraphJson>(trimmed)
                .map_err(|e| HyperError::Parse(e.to_string()))
                .and_then(Hypergraph::try_from)?
        } else {
            parse_compact(trimmed)?
        };
        check_vertex_count(g.n, 1)?;
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serialization is infallible")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in canonical `(cardinality, mask)` order.
    pub fn edges(&self) -> &[EdgeMask] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: EdgeMask) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Maximum hyperedge cardinality; 0 for `E = ∅` and `E = {∅}`.
    pub fn rank(&self) -> usize {
        // canonical order puts the largest edges last
        self.edges.last().map_or(0, |e| e.cardinality())
    }

    /// The t-adjacent subhypergraph `g_t`: edges through `t` with `t` removed,
    /// remaining vertices relabeled `1..n-1` in their original order.
    pub fn t_adjacent(&self, t: usize) -> Result<Hypergraph> {
        self.check_vertex(t)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| e.contains(t))
            .map(|e| e.remove_vertex(t));
        Hypergraph::new(self.n - 1, edges)
    }

    pub fn full_edge(&self) -> EdgeMask {
        EdgeMask::full(self.n)
    }

    /// `[n] ∈ E`.
    pub fn contains_full_edge(&self) -> bool {
        self.contains_edge(self.full_edge())
    }

    /// Every edge has exactly two vertices (vacuously true for `E = ∅`).
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.cardinality() == 2)
    }

    pub fn with_edge(&self, e: EdgeMask) -> Result<Hypergraph> {
        Hypergraph::new(self.n, self.edges.iter().copied().chain([e]))
    }

    pub fn without_edge(&self, e: EdgeMask) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|&x| x != e).collect(),
        }
    }

    /// Adds `e` if absent, removes it if present (`Z_e` is an involution).
    pub fn toggle_edge(&self, e: EdgeMask) -> Result<Hypergraph> {
        if self.contains_edge(e) {
            Ok(self.without_edge(e))
        } else {
            self.with_edge(e)
        }
    }

    pub fn check_vertex(&self, t: usize) -> Result<()> {
        if t == 0 || t > self.n {
            return Err(HyperError::VertexOutOfRange {
                vertex: t,
                n: self.n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({self})")
    }
}

impl FromStr for Hypergraph {
    type Err = HyperError;

    fn from_str(s: &str) -> Result<Self> {
        Hypergraph::parse(s)
    }
}

fn parse_compact(text: &str) -> Result<Hypergraph> {
    let (head, body) = text
        .split_once(':')
        .ok_or_else(|| HyperError::Parse(format!("missing ':' after vertex count in {text:?}")))?;
    let n: usize = head
        .trim()
        .parse()
        .map_err(|_| HyperError::Parse(format!("invalid vertex count {:?}", head.trim())))?;
    check_vertex_count(n, 1)?;

    let mut edges = Vec::new();
    let mut rest = body.trim_start();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('{')
            .ok_or_else(|| HyperError::Parse(format!("expected '{{' at {rest:?}")))?;
        let close = inner
            .find('}')
            .ok_or_else(|| HyperError::Parse(format!("unterminated edge at {rest:?}")))?;
        let list = inner[..close].trim();
        let vertices = if list.is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<usize>()
                        .map_err(|_| HyperError::Parse(format!("invalid vertex {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        edges.push(EdgeMask::from_vertices(n, vertices)?);
        rest = inner[close + 1..].trim_start();
    }
    Hypergraph::new(n, edges)
}

/// A random hypergraph on `n` vertices with at most `max_edges` edges.
///
/// Edge masks are uniform over `℘([n])`; the empty edge and the full edge are
/// each added with probability 1/4 so that parity and complement cases show up
/// even for larger `n`.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, n: usize, max_edges: usize) -> Hypergraph {
    let full = EdgeMask::full(n).bits();
    let mut edges = Vec::new();
    if max_edges > 0 && rng.random_ratio(1, 4) {
        edges.push(EdgeMask::EMPTY);
    }
    if edges.len() < max_edges && rng.random_ratio(1, 4) {
        edges.push(EdgeMask::full(n));
    }
    let extra = rng.random_range(0..=max_edges - edges.len());
    edges.extend((0..extra).map(|_| EdgeMask::new(rng.random::<u64>() & full)));
    Hypergraph::new(n, edges).expect("masks restricted to [n]")
}
