//! The JSON report produced by `verify` and `spectrum --json`.
//!
//! Floats are written by `serde_json` in shortest round-trip form, so every
//! value parses back to the identical `f64`.

use serde::Serialize;

use crate::error::Result;
use crate::format::GraphJson;
use crate::graph::{BalanceKind, SignedGraph};
use crate::theorems::{
    bound_report, check_theorem1, classify_with_report, multiplicities, ExtremalCase, IntegerCheck,
    Lambda, Multiplicities, Theorem1Case,
};

/// `value` is a `"p/q"` string when `exact`, a number otherwise.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: Lambda,
    pub multiplicity: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundJson {
    pub limit: i64,
    pub min_slack: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictJson {
    pub case: ExtremalCase,
    /// First equality eigenvalue, if any.
    pub lambda: Option<Lambda>,
    pub lambdas: Vec<Lambda>,
    pub multiplicity: Option<usize>,
    pub anomaly: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Json {
    pub nullity: usize,
    pub limit: i64,
    pub equality: bool,
    pub case: Option<Theorem1Case>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportJson {
    pub graph: GraphJson,
    pub girth: Option<usize>,
    pub balance_class: BalanceKind,
    pub spectrum: Vec<SpectrumEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem1: Option<Theorem1Json>,
    /// Exact versus clustered multiplicity for each integer candidate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_checks: Option<Vec<IntegerCheck>>,
}

pub fn spectrum_entries(m: &Multiplicities) -> Vec<SpectrumEntry> {
    m.rows
        .iter()
        .map(|r| SpectrumEntry {
            value: r.lambda,
            multiplicity: r.multiplicity,
            exact: r.exact,
        })
        .collect()
}

/// Graph, balance, girth if there is a cycle, and the spectrum. Requires a
/// connected graph.
pub fn spectrum_report(g: &SignedGraph) -> Result<ReportJson> {
    let balance = g.balance_class()?.kind;
    let m = multiplicities(g)?;
    Ok(ReportJson {
        graph: GraphJson::from(g),
        girth: g.girth().ok().map(|w| w.length),
        balance_class: balance,
        spectrum: spectrum_entries(&m),
        bound: None,
        verdict: None,
        theorem1: None,
        exact_checks: None,
    })
}

/// The full report: bound, extremal verdict and nullity verdict. Requires a
/// connected graph with a cycle.
pub fn verify_report(g: &SignedGraph, with_exact_checks: bool) -> Result<ReportJson> {
    let balance = g.balance_class()?.kind;
    let report = bound_report(g)?;
    let verdict = classify_with_report(g, &report)?;
    let t1 = check_theorem1(g)?;
    Ok(ReportJson {
        graph: GraphJson::from(g),
        girth: Some(report.girth),
        balance_class: balance,
        spectrum: spectrum_entries(&report.multiplicities),
        bound: Some(BoundJson {
            limit: report.limit,
            min_slack: report.min_slack,
        }),
        verdict: Some(VerdictJson {
            case: verdict.case,
            lambda: verdict.lambdas.first().copied(),
            lambdas: verdict.lambdas,
            multiplicity: verdict.multiplicity,
            anomaly: verdict.anomaly,
        }),
        theorem1: Some(Theorem1Json {
            nullity: t1.nullity,
            limit: t1.limit,
            equality: t1.equality,
            case: t1.case,
            consistent: t1.consistent,
        }),
        exact_checks: with_exact_checks.then(|| report.multiplicities.integer_checks.clone()),
    })
}
