//! JSON-lines output records. Every integer is rendered as a decimal string.

use serde::Serialize;
use sparsepow::{CaseStatus, FamilyMember, SearchHit, SparseForm};

fn terms(sparse: &SparseForm) -> Vec<[String; 2]> {
    sparse
        .terms()
        .iter()
        .map(|t| [t.exponent.to_string(), t.coefficient.to_string()])
        .collect()
}

#[derive(Debug, Serialize)]
pub struct Classification {
    kind: &'static str,
    base: String,
    digits: String,
    square_only: bool,
    status: &'static str,
    citation: Option<&'static str>,
    family: Option<String>,
    degree: Option<String>,
}

impl Classification {
    pub fn new(base: u32, digits: u32, square_only: bool, status: &CaseStatus) -> Self {
        let degree = match status {
            CaseStatus::Infinite { degree, .. } => Some(degree.to_string()),
            _ => None,
        };
        Self {
            kind: "classification",
            base: base.to_string(),
            digits: digits.to_string(),
            square_only,
            status: status.label(),
            citation: status.citation().map(|c| c.tag()),
            family: status.family().map(|f| f.to_string()),
            degree,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Member {
    kind: &'static str,
    base: String,
    digits: String,
    t: String,
    family: String,
    y: String,
    d: String,
    value: String,
    terms: Vec<[String; 2]>,
    alphas: Vec<String>,
    normalization: String,
    leading: String,
    verified: bool,
}

impl From<&FamilyMember> for Member {
    fn from(m: &FamilyMember) -> Self {
        Self {
            kind: "member",
            base: m.base.to_string(),
            digits: m.target_k.to_string(),
            t: m.t.to_string(),
            family: m.family.to_string(),
            y: m.root.to_string(),
            d: m.degree.to_string(),
            value: m.value.to_string(),
            terms: terms(&m.sparse),
            alphas: m
                .params
                .alphas
                .as_slice()
                .iter()
                .map(u32::to_string)
                .collect(),
            normalization: m.params.normalization.to_string(),
            leading: m.params.leading.to_string(),
            // Generators only return members that passed their digit check.
            verified: true,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub kind: &'static str,
    pub base: String,
    pub value: String,
    /// Least significant first.
    pub digits: Vec<String>,
    pub nonzero: String,
    pub gcd: String,
    pub coprime: bool,
    pub power: Option<String>,
    pub root: Option<String>,
    pub degree: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Hit {
    kind: &'static str,
    value: String,
    root: String,
    degree: String,
    power: String,
    terms: Vec<[String; 2]>,
}

impl From<&SearchHit> for Hit {
    fn from(h: &SearchHit) -> Self {
        Self {
            kind: "hit",
            value: h.value.to_string(),
            root: h.witness.root.to_string(),
            degree: h.witness.degree.to_string(),
            power: h.witness.to_string(),
            terms: terms(&h.sparse),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub kind: &'static str,
    pub base: String,
    pub digits: String,
    pub max_exponent: String,
    pub candidates: String,
    pub tuples: String,
    pub hits: String,
    pub feasible: bool,
    pub next: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct TableCell {
    kind: &'static str,
    base: String,
    digits: String,
    status: &'static str,
    family: Option<String>,
    degree: Option<String>,
    cell: String,
    square_status: &'static str,
    square_family: Option<String>,
    square_cell: String,
}

impl TableCell {
    pub fn new(base: u32, digits: u32, any: &CaseStatus, square: &CaseStatus) -> Self {
        let degree = match any {
            CaseStatus::Infinite { degree, .. } => Some(degree.to_string()),
            _ => None,
        };
        Self {
            kind: "table-cell",
            base: base.to_string(),
            digits: digits.to_string(),
            status: any.label(),
            family: any.family().map(|f| f.to_string()),
            degree,
            cell: any.cell(),
            square_status: square.label(),
            square_family: square.family().map(|f| f.to_string()),
            square_cell: square.cell(),
        }
    }
}
