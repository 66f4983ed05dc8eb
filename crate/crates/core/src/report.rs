//! Machine-readable invariant reports. Field order and map ordering are
//! fixed so identical queries serialize byte-identically.

use std::collections::BTreeMap;

use serde::Serialize;

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Echo of the request that produced a report.
#[derive(Serialize, Clone, Default)]
pub struct Query {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<i64>,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<String>>,
}

/// One computation or suite outcome. Every isomorphism check recorded in
/// `certificates` carries both sides' dimensions, never a bare boolean.
#[derive(Serialize)]
pub struct InvariantReport {
    pub query: Query,
    pub dims: BTreeMap<String, usize>,
    pub certificates: Vec<String>,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    pub version: String,
}

impl InvariantReport {
    pub fn new(query: Query) -> InvariantReport {
        InvariantReport {
            query,
            dims: BTreeMap::new(),
            certificates: Vec::new(),
            agreement: true,
            failures: Vec::new(),
            timing_ms: None,
            version: REPORT_VERSION.to_string(),
        }
    }

    pub fn record_equality(&mut self, label: &str, lhs: usize, rhs: usize) {
        let line = format!("{label}: {lhs} = {rhs}");
        if lhs == rhs {
            self.certificates.push(line);
        } else {
            self.agreement = false;
            self.failures.push(format!("{label}: {lhs} != {rhs}"));
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-oriented rendering for `--pretty`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let q = &self.query;
        out.push_str(&format!("command   {}", q.command));
        for (label, v) in [
            ("fixture", &q.fixture),
            ("kind", &q.kind),
            ("suite", &q.suite),
            ("A", &q.a),
            ("B", &q.b),
        ] {
            if let Some(v) = v {
                out.push_str(&format!("\n{label:<9} {v}"));
            }
        }
        if let Some(n) = q.n {
            out.push_str(&format!("\nn         {n}"));
        }
        if let Some(n_max) = q.n_max {
            out.push_str(&format!("\nn_max     {n_max}"));
        }
        out.push_str(&format!("\np         {}", q.p));
        if !self.dims.is_empty() {
            out.push_str("\n\nroute                        dim");
            for (route, dim) in &self.dims {
                out.push_str(&format!("\n{route:<28} {dim}"));
            }
        }
        if !self.certificates.is_empty() {
            out.push_str("\n\ncertificates");
            for c in &self.certificates {
                out.push_str(&format!("\n  {c}"));
            }
        }
        if !self.failures.is_empty() {
            out.push_str("\n\nfailures");
            for f in &self.failures {
                out.push_str(&format!("\n  {f}"));
            }
        }
        out.push_str(&format!(
            "\n\nagreement {}",
            if self.agreement { "yes" } else { "NO" }
        ));
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("\ntiming    {ms} ms"));
        }
        out.push_str(&format!("\nversion   {}", self.version));
        out
    }
}
