//! Command implementations behind the `hyperent` binary. Each command writes
//! its output to a caller-supplied writer and returns the process exit code,
//! so the same code paths are testable without spawning a process.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::entropy::{
    classify_measure, lu_inequivalence_witness, lu_inequivalence_witness_up_to_relabeling,
    vertex_measure, LuWitness, VertexClass,
};
use crate::error::{HyperError, Result};
use crate::hypergraph::{Hypergraph, EXHAUSTIVE_MAX_N};
use crate::rational::{decimal, quarter, render, Rational, RationalRecord};
use crate::verify::{self, VerifyConfig};
use crate::weight::{hamming_weight, Method};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_INCONCLUSIVE: i32 = 10;

/// Largest `n` accepted by `enumerate --sample`.
pub const SAMPLE_MAX_N: usize = 5;

pub fn exit_code(err: &HyperError) -> i32 {
    match err {
        HyperError::DenseTooLarge { .. }
        | HyperError::TooManyEdges { .. }
        | HyperError::EnumerationTooLarge { .. } => EXIT_INFEASIBLE,
        HyperError::VertexCountMismatch(..) => EXIT_MISMATCH,
        HyperError::Invariant(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_INPUT,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
    Tsv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            other => Err(format!(
                "unknown format {other:?} (expected text, json or tsv)"
            )),
        }
    }
}

/// Row filter for `enumerate`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    Rank(usize),
    Odd,
    Even,
    Lme,
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "lme" => Ok(Filter::Lme),
            "parity=odd" => Ok(Filter::Odd),
            "parity=even" => Ok(Filter::Even),
            _ => s
                .strip_prefix("rank=")
                .and_then(|k| k.parse().ok())
                .map(Filter::Rank)
                .ok_or_else(|| {
                    format!("unknown filter {s:?} (expected rank=K, parity=odd|even or lme)")
                }),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Rank(k) => write!(f, "rank={k}"),
            Filter::Odd => f.write_str("parity=odd"),
            Filter::Even => f.write_str("parity=even"),
            Filter::Lme => f.write_str("lme"),
        }
    }
}

/// A hypergraph literal, or the path of a file holding one (JSON or compact).
pub fn load_input(arg: &str) -> Result<Hypergraph> {
    let path = Path::new(arg);
    if path.is_file() {
        Hypergraph::parse(&std::fs::read_to_string(path)?)
    } else {
        Hypergraph::parse(arg)
    }
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    RationalRecord::from(r).serialize(s)
}

fn ser_rationals<S: Serializer>(rs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    rs.iter()
        .map(RationalRecord::from)
        .collect::<Vec<_>>()
        .serialize(s)
}

fn parity_name(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let line = serde_json::to_string(value).map_err(|e| HyperError::Io(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub hypergraph: String,
    pub n: usize,
    pub edges: usize,
    pub hw: u64,
    pub parity: &'static str,
    pub method: &'static str,
}

pub fn weight_report(g: &Hypergraph, method: Method) -> Result<WeightReport> {
    let (hw, used) = hamming_weight(g, method)?;
    Ok(WeightReport {
        hypergraph: g.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        hw: hw.value(),
        parity: parity_name(hw.is_odd()),
        method: used.name(),
    })
}

pub fn cmd_weight(
    out: &mut dyn Write,
    g: &Hypergraph,
    method: Method,
    format: Format,
) -> Result<i32> {
    let r = weight_report(g, method)?;
    match format {
        Format::Text => {
            writeln!(out, "hypergraph: {}", r.hypergraph)?;
            writeln!(out, "hw: {}", r.hw)?;
            writeln!(out, "parity: {}", r.parity)?;
            writeln!(out, "method: {}", r.method)?;
        }
        Format::Json => write_json(out, &r)?,
        Format::Tsv => {
            writeln!(out, "hypergraph\tn\tedges\thw\tparity\tmethod")?;
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.hypergraph, r.n, r.edges, r.hw, r.parity, r.method
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexRecord {
    pub t: usize,
    pub adjacent_rank: usize,
    pub adjacent_hw: u64,
    #[serde(serialize_with = "ser_rational")]
    pub a: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub measure: Rational,
    pub class: &'static str,
}

impl VertexRecord {
    fn text(&self) -> String {
        format!(
            "t={} rank(g_t)={} hw(g_t)={} a={} E={} class={}",
            self.t,
            self.adjacent_rank,
            self.adjacent_hw,
            render(&self.a),
            render(&self.measure),
            self.class
        )
    }

    fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.t,
            self.adjacent_rank,
            self.adjacent_hw,
            self.a,
            decimal(&self.a),
            self.measure,
            decimal(&self.measure),
            self.class
        )
    }
}

const VERTEX_TSV_HEADER: &str = "t\trank_gt\thw_gt\ta\ta_decimal\tE\tE_decimal\tclass";

/// Full per-hypergraph entropy report.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub hypergraph: String,
    pub n: usize,
    pub rank: usize,
    pub hw: u64,
    pub method: &'static str,
    pub parity: &'static str,
    pub vertices: Vec<VertexRecord>,
    pub lme: bool,
}

fn vertex_record(g: &Hypergraph, t: usize, method: Method) -> Result<VertexRecord> {
    let v = vertex_measure(g, t, method)?;
    let c = classify_measure(g.n(), &v)?;
    Ok(VertexRecord {
        t,
        adjacent_rank: v.adjacent_rank,
        adjacent_hw: v.adjacent_weight.value(),
        a: v.off_diagonal,
        measure: v.measure,
        class: c.class.name(),
    })
}

pub fn build_report(g: &Hypergraph, method: Method) -> Result<Report> {
    let (hw, used) = hamming_weight(g, method)?;
    let vertices = (1..=g.n())
        .map(|t| vertex_record(g, t, method))
        .collect::<Result<Vec<_>>>()?;
    let lme = vertices.iter().all(|v| v.measure == quarter());
    Ok(Report {
        hypergraph: g.to_string(),
        n: g.n(),
        rank: g.rank(),
        hw: hw.value(),
        method: used.name(),
        parity: parity_name(hw.is_odd()),
        vertices,
        lme,
    })
}

pub fn cmd_entropy(
    out: &mut dyn Write,
    g: &Hypergraph,
    method: Method,
    qubit: Option<usize>,
    format: Format,
) -> Result<i32> {
    if let Some(t) = qubit {
        g.check_vertex(t)?;
        let v = vertex_record(g, t, method)?;
        match format {
            Format::Text => writeln!(out, "{}", v.text())?,
            Format::Json => write_json(out, &v)?,
            Format::Tsv => {
                writeln!(out, "{VERTEX_TSV_HEADER}")?;
                writeln!(out, "{}", v.tsv())?;
            }
        }
        return Ok(EXIT_OK);
    }
    let r = build_report(g, method)?;
    match format {
        Format::Text => {
            writeln!(out, "hypergraph: {}", r.hypergraph)?;
            writeln!(out, "n: {}", r.n)?;
            writeln!(out, "rank: {}", r.rank)?;
            writeln!(out, "hw: {} ({})", r.hw, r.method)?;
            writeln!(out, "parity: {}", r.parity)?;
            for v in &r.vertices {
                writeln!(out, "{}", v.text())?;
            }
            writeln!(out, "lme: {}", r.lme)?;
        }
        Format::Json => write_json(out, &r)?,
        Format::Tsv => {
            writeln!(out, "# hypergraph: {}", r.hypergraph)?;
            writeln!(out, "# rank: {}", r.rank)?;
            writeln!(out, "# hw: {} ({})", r.hw, r.method)?;
            writeln!(out, "# parity: {}", r.parity)?;
            writeln!(out, "# lme: {}", r.lme)?;
            writeln!(out, "{VERTEX_TSV_HEADER}")?;
            for v in &r.vertices {
                writeln!(out, "{}", v.tsv())?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub first: String,
    pub second: String,
    pub kind: &'static str,
    pub certified: bool,
    pub vertex: Option<usize>,
    #[serde(serialize_with = "ser_rationals")]
    pub values: Vec<Rational>,
}

pub fn witness_report(
    g: &Hypergraph,
    h: &Hypergraph,
    up_to_relabeling: bool,
) -> Result<WitnessReport> {
    let w: LuWitness = if up_to_relabeling {
        lu_inequivalence_witness_up_to_relabeling(g, h)?
    } else {
        lu_inequivalence_witness(g, h)?
    };
    Ok(WitnessReport {
        first: g.to_string(),
        second: h.to_string(),
        kind: w.kind.name(),
        certified: w.is_certified(),
        vertex: w.vertex,
        values: w.values.map(|(a, b)| vec![a, b]).unwrap_or_default(),
    })
}

pub fn cmd_witness(
    out: &mut dyn Write,
    g: &Hypergraph,
    h: &Hypergraph,
    up_to_relabeling: bool,
    format: Format,
) -> Result<i32> {
    let r = witness_report(g, h, up_to_relabeling)?;
    let vertex = r.vertex.map_or("-".to_string(), |t| t.to_string());
    let values: Vec<String> = r.values.iter().map(render).collect();
    match format {
        Format::Text => {
            writeln!(out, "certificate: {}", r.kind)?;
            if r.vertex.is_some() {
                writeln!(out, "vertex: {vertex}")?;
            }
            if !values.is_empty() {
                writeln!(out, "values: {}", values.join(" vs "))?;
            }
        }
        Format::Json => write_json(out, &r)?,
        Format::Tsv => {
            writeln!(out, "first\tsecond\tcertificate\tvertex\tvalues")?;
            let plain: Vec<String> = r.values.iter().map(|v| v.to_string()).collect();
            writeln!(
                out,
                "{}\t{}\t{}\t{vertex}\t{}",
                r.first,
                r.second,
                r.kind,
                plain.join(",")
            )?;
        }
    }
    Ok(if r.certified {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    })
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub n: usize,
    pub filter: Option<Filter>,
    /// Random mode: this many distinct edge sets instead of all of them.
    pub sample: Option<usize>,
    pub seed: u64,
    pub method: Method,
}

impl EnumerateOptions {
    pub fn exhaustive(n: usize) -> Self {
        EnumerateOptions {
            n,
            filter: None,
            sample: None,
            seed: 42,
            method: Method::Auto,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateRow {
    pub hypergraph: String,
    pub rank: usize,
    pub hw: u64,
    pub parity: &'static str,
    #[serde(serialize_with = "ser_rationals")]
    pub profile: Vec<Rational>,
    pub classes: Vec<&'static str>,
    pub lme: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ClassCounts {
    pub unentangled: usize,
    pub guaranteed_max: usize,
    pub strict_interior: usize,
    pub unconstrained: usize,
}

impl ClassCounts {
    fn add(&mut self, class: VertexClass) {
        match class {
            VertexClass::Unentangled => self.unentangled += 1,
            VertexClass::GuaranteedMax => self.guaranteed_max += 1,
            VertexClass::StrictInterior => self.strict_interior += 1,
            VertexClass::Unconstrained => self.unconstrained += 1,
        }
    }

    fn get(&self, class: VertexClass) -> usize {
        match class {
            VertexClass::Unentangled => self.unentangled,
            VertexClass::GuaranteedMax => self.guaranteed_max,
            VertexClass::StrictInterior => self.strict_interior,
            VertexClass::Unconstrained => self.unconstrained,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct EnumerateSummary {
    pub rows: usize,
    pub odd: usize,
    pub lme: usize,
    /// Per-vertex classifications over all emitted rows.
    pub vertex_classes: ClassCounts,
}

fn enumerate_row(g: &Hypergraph, method: Method) -> Result<(EnumerateRow, Vec<VertexClass>)> {
    let (hw, _) = hamming_weight(g, method)?;
    let mut profile = Vec::with_capacity(g.n());
    let mut classes = Vec::with_capacity(g.n());
    for t in 1..=g.n() {
        let v = vertex_measure(g, t, method)?;
        classes.push(classify_measure(g.n(), &v)?.class);
        profile.push(v.measure);
    }
    let lme = profile.iter().all(|m| *m == quarter());
    let row = EnumerateRow {
        hypergraph: g.to_string(),
        rank: g.rank(),
        hw: hw.value(),
        parity: parity_name(hw.is_odd()),
        profile,
        classes: classes.iter().map(|c| c.name()).collect(),
        lme,
    };
    Ok((row, classes))
}

fn keep(filter: Option<Filter>, row: &EnumerateRow) -> bool {
    match filter {
        None => true,
        Some(Filter::Rank(k)) => row.rank == k,
        Some(Filter::Odd) => row.hw % 2 == 1,
        Some(Filter::Even) => row.hw.is_multiple_of(2),
        Some(Filter::Lme) => row.lme,
    }
}

/// Edge-set indices to visit, ascending.
fn edge_set_indices(opts: &EnumerateOptions) -> Result<Vec<u64>> {
    let n = opts.n;
    if n == 0 {
        return Err(HyperError::VertexCount {
            n,
            min: 1,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    match opts.sample {
        None => {
            if n > EXHAUSTIVE_MAX_N {
                return Err(HyperError::EnumerationTooLarge {
                    n,
                    max: EXHAUSTIVE_MAX_N,
                });
            }
            Ok((0..1u64 << (1u64 << n)).collect())
        }
        Some(count) => {
            if n > SAMPLE_MAX_N {
                return Err(HyperError::EnumerationTooLarge {
                    n,
                    max: SAMPLE_MAX_N,
                });
            }
            let space = 1u64 << (1u64 << n);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut picks: Vec<u64> = (0..count).map(|_| rng.random_range(0..space)).collect();
            picks.sort_unstable();
            picks.dedup();
            Ok(picks)
        }
    }
}

pub fn enumerate_summary(opts: &EnumerateOptions) -> Result<(Vec<EnumerateRow>, EnumerateSummary)> {
    let mut rows = Vec::new();
    let summary = enumerate_each(opts, |row| {
        rows.push(row.clone());
        Ok(())
    })?;
    Ok((rows, summary))
}

fn enumerate_each<F>(opts: &EnumerateOptions, mut emit: F) -> Result<EnumerateSummary>
where
    F: FnMut(&EnumerateRow) -> Result<()>,
{
    let mut summary = EnumerateSummary::default();
    for set in edge_set_indices(opts)? {
        let g = Hypergraph::from_edge_set_mask(opts.n, set)?;
        let (row, classes) = enumerate_row(&g, opts.method)?;
        if !keep(opts.filter, &row) {
            continue;
        }
        summary.rows += 1;
        summary.odd += usize::from(row.hw % 2 == 1);
        summary.lme += usize::from(row.lme);
        for c in classes {
            summary.vertex_classes.add(c);
        }
        emit(&row)?;
    }
    Ok(summary)
}

fn profile_text(profile: &[Rational]) -> String {
    let parts: Vec<String> = profile.iter().map(|m| m.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn cmd_enumerate(out: &mut dyn Write, opts: &EnumerateOptions, format: Format) -> Result<i32> {
    if format == Format::Tsv {
        writeln!(out, "hypergraph\trank\thw\tparity\tprofile\tclasses\tlme")?;
    }
    let summary = enumerate_each(opts, |row| {
        match format {
            Format::Text => writeln!(
                out,
                "{} | rank={} hw={} profile={} classes={} lme={}",
                row.hypergraph,
                row.rank,
                row.hw,
                profile_text(&row.profile),
                row.classes.join(","),
                row.lme
            )?,
            Format::Json => write_json(out, row)?,
            Format::Tsv => writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                row.hypergraph,
                row.rank,
                row.hw,
                row.parity,
                profile_text(&row.profile),
                row.classes.join(","),
                row.lme
            )?,
        }
        Ok(())
    })?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Wrapped<'a> {
                summary: &'a EnumerateSummary,
            }
            write_json(out, &Wrapped { summary: &summary })?;
        }
        Format::Text | Format::Tsv => {
            let prefix = if format == Format::Tsv { "# " } else { "" };
            writeln!(
                out,
                "{prefix}summary: rows={} odd={} lme={}",
                summary.rows, summary.odd, summary.lme
            )?;
            for class in VertexClass::ALL {
                writeln!(
                    out,
                    "{prefix}vertices {}={}",
                    class.name(),
                    summary.vertex_classes.get(class)
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    name: &'a str,
    checked: usize,
    passed: bool,
    failure: Option<&'a str>,
}

pub fn cmd_verify(out: &mut dyn Write, config: &VerifyConfig, format: Format) -> Result<i32> {
    let report = verify::run(config);
    let passed = report.all_passed();
    match format {
        Format::Text | Format::Tsv => {
            let sep = if format == Format::Tsv { "\t" } else { " " };
            if format == Format::Tsv {
                writeln!(out, "suite\tchecked\tresult\tfailure")?;
            } else {
                writeln!(out, "verify seed={} max-n={}", report.seed, report.max_n)?;
            }
            for s in &report.suites {
                let status = if s.passed() { "pass" } else { "FAIL" };
                let failure = s.failure.as_deref().unwrap_or("");
                if format == Format::Tsv {
                    writeln!(out, "{}\t{}\t{status}\t{failure}", s.name, s.checked)?;
                } else if s.passed() {
                    writeln!(out, "{}:{sep}{status} ({} checks)", s.name, s.checked)?;
                } else {
                    writeln!(
                        out,
                        "{}:{sep}{status} after {} checks: {failure}",
                        s.name, s.checked
                    )?;
                }
            }
            if format == Format::Text {
                writeln!(out, "result: {}", if passed { "pass" } else { "fail" })?;
            }
        }
        Format::Json => {
            for s in &report.suites {
                write_json(
                    out,
                    &SuiteJson {
                        name: s.name,
                        checked: s.checked,
                        passed: s.passed(),
                        failure: s.failure.as_deref(),
                    },
                )?;
            }
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
