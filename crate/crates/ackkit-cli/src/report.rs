//! The JSON report: one stable, versioned shape shared by every command.
//!
//! Rational values are serialized as exact strings — `"p/q"`, with the
//! denominator omitted when it is 1 — never as floats. The human-readable
//! output is rendered from this structure, not computed separately, so the
//! two can never drift apart.

use ackkit::ack::{class_c_report, AckMethod, AckReport, AckStatus};
use ackkit::graph::Graph;
use ackkit::ratlinalg::Rational;
use ackkit::spectral::classify;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, PartialEq, Clone, Debug)]
pub struct Report {
    pub schema_version: u32,
    pub input: InputInfo,
    pub graph_summary: GraphSummary,
    pub spectral: SpectralInfo,
    pub class_c: ClassCInfo,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ack: Option<AckInfo>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleInfo>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

#[derive(Serialize, Deserialize, PartialEq, Clone, Debug)]
pub struct InputInfo {
    /// "catalog" or "file".
    pub kind: String,
    /// Catalog name or file path.
    pub name: String,
}

#[derive(Serialize, Deserialize, PartialEq, Clone, Debug)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub degree_multiset: Vec<usize>,
}

#[derive(Serialize, Deserialize, PartialEq, Clone, Debug)]
pub struct SpectralInfo {
    pub nullity: usize,
    pub is_core: bool,
    pub is_nut: bool,
    pub zero_is_main: bool,
    pub mult_plus1: usize,
    pub mult_minus1: usize,
    /// Exact rational entries, vertex order, or null for non-core graphs.
    pub full_kernel_vector: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, PartialEq, Clone, Debug)]
pub struct ClassCInfo {
    pub core: bool,
    pub zero_main: bool,
    pub vertex_triangle: bool,
    pub edge_triangle: bool,
    pub non_regular: bool,
    pub connected: bool,
    pub non_bipartite: bool,
    pub diameter_2_or_3: bool,
    pub in_class_c: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Clone, Debug)]
pub struct AckInfo {
    pub status: String,
    pub witness: Option<Vec<usize>>,
    pub method: String,
    pub checked_count: u64,
    pub n: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Clone, Debug)]
pub struct OracleInfo {
    pub status: String,
    pub witness: Option<Vec<usize>>,
    /// None when the oracle gave up on size, Some(agreement) otherwise.
    pub agrees: Option<bool>,
}

#[derive(Serialize, Deserialize, PartialEq, Clone, Debug)]
pub struct Timings {
    /// Reading and decoding the input (zero for catalog entries).
    pub parse_ms: u64,
    /// Kernel computation, classification and the class-C verdicts.
    pub classify_ms: u64,
    /// Witness search, including the oracle cross-check when requested.
    pub search_ms: u64,
    pub total_ms: u64,
}

pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

pub fn status_string(s: AckStatus) -> String {
    match s {
        AckStatus::WitnessFound => "WITNESS_FOUND",
        AckStatus::NoWitness => "NO_WITNESS",
        AckStatus::AbortedTooLarge => "ABORTED_TOO_LARGE",
    }
    .to_string()
}

pub fn method_string(m: AckMethod) -> String {
    match m {
        AckMethod::OrthogonalitySearch => "ORTHOGONALITY_SEARCH",
        AckMethod::BruteOracle => "BRUTE_ORACLE",
        AckMethod::DegreePruned => "DEGREE_PRUNED",
    }
    .to_string()
}

pub fn ack_info(r: &AckReport) -> AckInfo {
    AckInfo {
        status: status_string(r.status),
        witness: r.witness.as_ref().map(|s| s.iter().copied().collect()),
        method: method_string(r.method),
        checked_count: r.checked_count,
        n: r.n,
    }
}

/// Assembles the spectral and class-C portions of a report for a graph.
pub fn base_report(input: InputInfo, g: &Graph) -> Report {
    let profile = classify(g);
    let c = class_c_report(g);
    Report {
        schema_version: SCHEMA_VERSION,
        input,
        graph_summary: GraphSummary {
            n: g.n(),
            edges: g.edge_count(),
            degree_multiset: g.degree_sequence(),
        },
        spectral: SpectralInfo {
            nullity: profile.nullity,
            is_core: profile.is_core,
            is_nut: profile.is_nut,
            zero_is_main: profile.zero_is_main,
            mult_plus1: profile.mult_plus1,
            mult_minus1: profile.mult_minus1,
            full_kernel_vector: profile
                .full_kernel_vector
                .as_ref()
                .map(|x| x.iter().map(rational_string).collect()),
        },
        class_c: ClassCInfo {
            core: c.core,
            zero_main: c.zero_main,
            vertex_triangle: c.vertex_triangle,
            edge_triangle: c.edge_triangle,
            non_regular: c.non_regular,
            connected: c.connected,
            non_bipartite: c.non_bipartite,
            diameter_2_or_3: c.diameter_2_or_3,
            in_class_c: c.in_class_c,
        },
        ack: None,
        oracle: None,
        timings: None,
    }
}

pub fn to_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serialization is infallible")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_text(w: &Option<Vec<usize>>) -> String {
    match w {
        Some(vs) => format!(
            "{{{}}}",
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        None => "-".to_string(),
    }
}

/// Plain-text rendering of the report; reads nothing but the report itself.
pub fn render_human(r: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("input      {}:{}\n", r.input.kind, r.input.name));
    out.push_str(&format!(
        "graph      n={} edges={} degrees={:?}\n",
        r.graph_summary.n, r.graph_summary.edges, r.graph_summary.degree_multiset
    ));
    out.push_str(&format!(
        "spectral   nullity={} core={} nut={} zero-main={} mult(+1)={} mult(-1)={}\n",
        r.spectral.nullity,
        yes_no(r.spectral.is_core),
        yes_no(r.spectral.is_nut),
        yes_no(r.spectral.zero_is_main),
        r.spectral.mult_plus1,
        r.spectral.mult_minus1
    ));
    if let Some(x) = &r.spectral.full_kernel_vector {
        out.push_str(&format!(
            "           full kernel vector [{}]\n",
            x.join(", ")
        ));
    }
    let c = &r.class_c;
    out.push_str(&format!(
        "class-C    core={} zero_main={} vertex_triangle={} edge_triangle={} non_regular={} \
         connected={} non_bipartite={} diameter_2_or_3={} => in_class_c={}\n",
        yes_no(c.core),
        yes_no(c.zero_main),
        yes_no(c.vertex_triangle),
        yes_no(c.edge_triangle),
        yes_no(c.non_regular),
        yes_no(c.connected),
        yes_no(c.non_bipartite),
        yes_no(c.diameter_2_or_3),
        yes_no(c.in_class_c)
    ));
    if let Some(a) = &r.ack {
        out.push_str(&format!(
            "ack        {} witness={} method={} checked={}\n",
            a.status,
            witness_text(&a.witness),
            a.method,
            a.checked_count
        ));
    }
    if let Some(o) = &r.oracle {
        let verdict = match o.agrees {
            Some(true) => "agrees".to_string(),
            Some(false) => "DISAGREES".to_string(),
            None => "inconclusive (aborted)".to_string(),
        };
        out.push_str(&format!(
            "oracle     {} witness={} -> {}\n",
            o.status,
            witness_text(&o.witness),
            verdict
        ));
    }
    if let Some(t) = &r.timings {
        out.push_str(&format!(
            "timings    parse={}ms classify={}ms search={}ms total={}ms\n",
            t.parse_ms, t.classify_ms, t.search_ms, t.total_ms
        ));
    }
    out
}
