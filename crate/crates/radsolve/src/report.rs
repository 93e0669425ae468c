//! Rendering of solution reports: JSON (schema-stable, byte-deterministic),
//! plain text, and the step-by-step derivation format.

use serde::Serialize;

use crate::algebra::AlgebraicReal;
use crate::realset::{Component, RealSet};
use crate::solver::{Analysis, SolutionReport, Verdict};

/// Which solution sets a report should include.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Strong,
    Formal,
    Both,
}

impl Mode {
    fn keeps(&self, verdict: Verdict) -> bool {
        match self {
            Mode::Strong => verdict == Verdict::Strong,
            Mode::Formal => verdict != Verdict::Rejected,
            Mode::Both => true,
        }
    }
}

/// Formats `v` with exactly `digits` significant digits (round-half-even, as
/// performed by the standard formatter's exact decimal conversion). Values
/// outside a moderate magnitude range stay in scientific notation.
pub fn format_significant(v: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mant, exp_str) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp_str.parse().expect("exponent value");
    if !(-4..(digits as i32 + 2)).contains(&exp) {
        return sci;
    }
    let neg = mant.starts_with('-');
    let digs: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digs.len(), digits);
    let sign = if neg { "-" } else { "" };
    if exp >= 0 {
        let int_len = (exp + 1) as usize;
        if int_len >= digits {
            format!("{sign}{digs}{}", "0".repeat(int_len - digits))
        } else {
            format!("{sign}{}.{}", &digs[..int_len], &digs[int_len..])
        }
    } else {
        format!("{sign}0.{}{}", "0".repeat((-exp - 1) as usize), digs)
    }
}

/// 12-significant-digit decimal used everywhere a numeric approximation is
/// printed.
pub fn approx_string(x: &AlgebraicReal) -> String {
    format_significant(x.approx_f64(), 12)
}

/// JSON form of an algebraic endpoint.
#[derive(Debug, Clone, Serialize)]
pub struct JsonEndpoint {
    pub defining_coeffs: Vec<String>,
    pub iso_lo: String,
    pub iso_hi: String,
    pub approx: String,
}

impl JsonEndpoint {
    pub fn from_algebraic(x: &AlgebraicReal) -> Self {
        JsonEndpoint {
            defining_coeffs: x
                .defining()
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            iso_lo: x.iso_lo().to_string(),
            iso_hi: x.iso_hi().to_string(),
            approx: approx_string(x),
        }
    }
}

/// JSON form of one set component.
#[derive(Debug, Clone, Serialize)]
pub struct JsonComponent {
    pub kind: &'static str,
    pub lo: Option<JsonEndpoint>,
    pub hi: Option<JsonEndpoint>,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl JsonComponent {
    pub fn from_component(c: &Component) -> Self {
        JsonComponent {
            kind: if c.is_point() { "point" } else { "interval" },
            lo: c.lo().map(JsonEndpoint::from_algebraic),
            hi: c.hi().map(JsonEndpoint::from_algebraic),
            lo_closed: c.lo_closed(),
            hi_closed: c.hi_closed(),
        }
    }
}

pub fn set_components_json(s: &RealSet) -> Vec<JsonComponent> {
    s.components()
        .iter()
        .map(JsonComponent::from_component)
        .collect()
}

/// Human-readable rendering of a set, e.g. `{2} u [5, +inf)`.
pub fn format_set(s: &RealSet) -> String {
    if s.is_empty() {
        return "(empty)".to_string();
    }
    let parts: Vec<String> = s.components().iter().map(format_component).collect();
    parts.join(" u ")
}

fn format_endpoint_value(x: &AlgebraicReal) -> String {
    match x.as_rational() {
        Some(r) => r.to_string(),
        None => format!("~{}", approx_string(x)),
    }
}

fn format_component(c: &Component) -> String {
    if c.is_point() {
        return format!(
            "{{{}}}",
            format_endpoint_value(c.lo().expect("point endpoint"))
        );
    }
    let lo = match c.lo() {
        None => "(-inf".to_string(),
        Some(x) => format!(
            "{}{}",
            if c.lo_closed() { "[" } else { "(" },
            format_endpoint_value(x)
        ),
    };
    let hi = match c.hi() {
        None => "+inf)".to_string(),
        Some(x) => format!(
            "{}{}",
            format_endpoint_value(x),
            if c.hi_closed() { "]" } else { ")" }
        ),
    };
    format!("{lo}, {hi}")
}

/// JSON form of one candidate.
#[derive(Debug, Clone, Serialize)]
pub struct JsonCandidate {
    pub defining_coeffs: Vec<String>,
    pub iso_lo: String,
    pub iso_hi: String,
    pub approx: String,
    pub verdict: &'static str,
    pub failed: Vec<String>,
}

/// Top-level JSON report. Field names and order are part of the output
/// contract; unselected solution sets serialize as `null`.
#[derive(Debug, Clone, Serialize)]
pub struct JsonReport {
    pub equation: String,
    pub form: &'static str,
    pub strong: Option<Vec<JsonComponent>>,
    pub formal: Option<Vec<JsonComponent>>,
    pub candidates: Vec<JsonCandidate>,
    pub notes: Vec<String>,
}

impl JsonReport {
    pub fn build(report: &SolutionReport, mode: Mode) -> Self {
        let strong =
            matches!(mode, Mode::Strong | Mode::Both).then(|| set_components_json(&report.strong));
        let formal =
            matches!(mode, Mode::Formal | Mode::Both).then(|| set_components_json(&report.formal));
        let candidates = report
            .candidates
            .iter()
            .filter(|c| mode.keeps(c.verdict))
            .map(|c| {
                let ep = JsonEndpoint::from_algebraic(&c.value);
                JsonCandidate {
                    defining_coeffs: ep.defining_coeffs,
                    iso_lo: ep.iso_lo,
                    iso_hi: ep.iso_hi,
                    approx: ep.approx,
                    verdict: c.verdict.id(),
                    failed: c.failed.iter().map(|n| n.to_string()).collect(),
                }
            })
            .collect();
        JsonReport {
            equation: report.equation.to_string(),
            form: report.equation.kind().id(),
            strong,
            formal,
            candidates,
            notes: report.notes.clone(),
        }
    }
}

/// Serializes a report as deterministic pretty-printed JSON.
pub fn render_json(report: &SolutionReport, mode: Mode) -> String {
    let mut out = serde_json::to_string_pretty(&JsonReport::build(report, mode))
        .expect("report serialization cannot fail");
    out.push('\n');
    out
}

fn candidate_lines(analysis: &Analysis, mode: Mode, out: &mut String) {
    let report = &analysis.report;
    if report.candidates.iter().any(|c| mode.keeps(c.verdict)) {
        out.push_str("candidates:\n");
        for c in &report.candidates {
            if !mode.keeps(c.verdict) {
                continue;
            }
            let value = match c.value.as_rational() {
                Some(r) => r.to_string(),
                None => format!("~{}", c.approx),
            };
            match c.verdict {
                Verdict::Strong => out.push_str(&format!("  x = {value}: strong\n")),
                Verdict::FormalOnly => out.push_str(&format!(
                    "  x = {value}: formal only ({})\n",
                    failed_text(analysis, c)
                )),
                Verdict::Rejected => out.push_str(&format!(
                    "  x = {value}: rejected ({})\n",
                    failed_text(analysis, c)
                )),
            }
        }
    }
}

fn failed_text(analysis: &Analysis, c: &crate::solver::Candidate) -> String {
    if c.failed.is_empty() {
        return "no restriction failed".to_string();
    }
    let parts: Vec<String> = c
        .failed
        .iter()
        .map(
            |n| match analysis.system.named.iter().find(|r| r.name == *n) {
                Some(r) => format!("fails {}: {}", n, r.description),
                None => format!("fails {n}"),
            },
        )
        .collect();
    parts.join("; ")
}

/// Plain-text report.
pub fn render_text(analysis: &Analysis, mode: Mode) -> String {
    let report = &analysis.report;
    let mut out = String::new();
    out.push_str(&format!(
        "equation: {}   [{}]\n",
        report.equation,
        report.equation.kind().id()
    ));
    if matches!(mode, Mode::Strong | Mode::Both) {
        out.push_str(&format!("strong: {}\n", format_set(&report.strong)));
    }
    if matches!(mode, Mode::Formal | Mode::Both) {
        out.push_str(&format!("formal: {}\n", format_set(&report.formal)));
    }
    candidate_lines(analysis, mode, &mut out);
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

/// Step-by-step derivation: the squaring chain, each restriction set, and
/// every candidate's verdict.
pub fn render_steps(analysis: &Analysis, mode: Mode) -> String {
    let report = &analysis.report;
    let mut out = String::new();
    out.push_str(&format!(
        "equation: {}   [{}]\n",
        report.equation,
        report.equation.kind().id()
    ));
    for line in &analysis.system.derivation {
        out.push_str(&format!("  {line}\n"));
    }
    out.push_str(&format!(
        "strong formula: {}\n",
        analysis.system.strong_formula
    ));
    out.push_str(&format!(
        "formal formula: {}\n",
        analysis.system.formal_formula
    ));
    if matches!(mode, Mode::Strong | Mode::Both) {
        out.push_str(&format!("strong: {}\n", format_set(&report.strong)));
    }
    if matches!(mode, Mode::Formal | Mode::Both) {
        out.push_str(&format!("formal: {}\n", format_set(&report.formal)));
    }
    candidate_lines(analysis, mode, &mut out);
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}
