//! JSON payloads with 1-based codeword indices and positions.

use sepcode::{Evidence, Outcome, TraceReport, Verdict, Witness};
use serde::Serialize;
use serde_json::{json, Value};

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::Framed { coalition, framed } => json!({
            "kind": "framed",
            "coalition": one_based(coalition),
            "framed": framed + 1,
        }),
        Witness::Inseparable { first, second } => json!({
            "kind": "inseparable",
            "first": one_based(first),
            "second": one_based(second),
        }),
        Witness::NotStronglySeparable {
            coalition,
            alternative,
        } => json!({
            "kind": "not_strongly_separable",
            "coalition": one_based(coalition),
            "alternative": one_based(alternative),
        }),
        Witness::Forbidden {
            first,
            second,
            pattern,
        } => json!({
            "kind": "forbidden",
            "first": first + 1,
            "second": second + 1,
            "pattern": pattern,
        }),
        Witness::ShortenedOverlap {
            position,
            symbols,
            common,
        } => json!({
            "kind": "shortened_overlap",
            "position": position + 1,
            "symbols": symbols,
            "common": common,
        }),
    }
}

#[derive(Debug, Serialize)]
pub struct VerdictView {
    pub holds: bool,
    pub witness: Option<Value>,
}

impl From<&Verdict> for VerdictView {
    fn from(v: &Verdict) -> Self {
        VerdictView {
            holds: v.holds(),
            witness: v.witness().map(witness),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EvidenceView {
    pub position: usize,
    pub bit: u32,
    pub index: usize,
}

impl From<&Evidence> for EvidenceView {
    fn from(e: &Evidence) -> Self {
        EvidenceView {
            position: e.position + 1,
            bit: e.bit,
            index: e.index + 1,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TraceView {
    pub outcome: &'static str,
    pub colluders: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub recovered: Vec<usize>,
    pub candidates: Vec<usize>,
    pub evidence: Vec<EvidenceView>,
    pub operations: u64,
}

impl From<&TraceReport> for TraceView {
    fn from(r: &TraceReport) -> Self {
        let (outcome, message) = match &r.outcome {
            Outcome::Identified { .. } => ("identified", None),
            Outcome::Overflow { message, .. } => ("overflow", Some(message.clone())),
        };
        TraceView {
            outcome,
            colluders: r.identified().map(one_based),
            message,
            recovered: one_based(r.recovered()),
            candidates: one_based(&r.candidates),
            evidence: r.evidence.iter().map(EvidenceView::from).collect(),
            operations: r.operations,
        }
    }
}
