//! Serializable reports for the command line and the C interface.
//!
//! Field order is the JSON key order; keys are always present.

use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidError, BraidWord, DiagramClass, GapProfile};
use crate::invariants::{
    alexander_from, certificate_from, mfw_from, AlexanderReport, BraidIndexCertificate, InvariantError, MfwReport,
    Verdict,
};
use crate::method::Method;
use crate::poly::LaurentPoly2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodValue {
    pub method: Method,
    /// Canonical text form.
    pub polynomial: String,
    pub terms: LaurentPoly2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub word: String,
    pub strands: usize,
    pub crossings: usize,
    pub writhe: i64,
    pub cycles: String,
    pub return_order: Vec<usize>,
    pub gap_profile: GapProfile,
    pub classification: DiagramClass,
    /// One entry per requested method, in request order.
    pub homfly: Vec<MethodValue>,
    pub methods_agree: bool,
    pub mfw: MfwReport,
    pub certificate: BraidIndexCertificate,
    pub alexander: AlexanderReport,
}

impl ComputeReport {
    /// The polynomial of the first requested method.
    pub fn polynomial(&self) -> &LaurentPoly2 {
        &self.homfly[0].terms
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("methods disagree on [{word}]: {}", .values.iter().map(|(m, p)| format!("{m} = {p}")).collect::<Vec<_>>().join(", "))]
    Mismatch { word: String, values: Vec<(Method, String)> },
    #[error("[{word}]: {source}")]
    Invariant { word: String, source: InvariantError },
}

/// Compute the requested methods (at least one) and the derived invariants.
/// The invariants are read off the first method's polynomial.
pub fn build_report(word: &BraidWord, methods: &[Method], parallel: bool) -> Result<ComputeReport, ReportError> {
    assert!(!methods.is_empty(), "at least one method");
    let homfly: Vec<MethodValue> = methods
        .iter()
        .map(|&m| {
            let p = if parallel { m.compute_parallel(word) } else { m.compute(word) };
            MethodValue { method: m, polynomial: p.to_string(), terms: p }
        })
        .collect();
    let methods_agree = homfly.iter().all(|v| v.terms == homfly[0].terms);
    if !methods_agree {
        return Err(ReportError::Mismatch {
            word: word.to_line(),
            values: homfly.into_iter().map(|v| (v.method, v.polynomial)).collect(),
        });
    }
    let p = &homfly[0].terms;
    let invariant = |source| ReportError::Invariant { word: word.to_line(), source };
    let perm = word.permutation();
    Ok(ComputeReport {
        word: word.to_string(),
        strands: word.strands(),
        crossings: word.len(),
        writhe: word.writhe(),
        cycles: perm.to_string(),
        return_order: perm.return_order(),
        gap_profile: word.gap_profile(),
        classification: word.classify(),
        mfw: mfw_from(word, p).map_err(invariant)?,
        certificate: certificate_from(word, p).map_err(invariant)?,
        alexander: alexander_from(p).map_err(invariant)?,
        homfly,
        methods_agree,
    })
}

pub fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::Certified(n) => format!("braid index = {n}"),
        Verdict::BoundOnly(b) => format!("braid index >= {b} (MFW bound only)"),
    }
}

fn flag_list(c: &DiagramClass) -> String {
    let flags = [
        (c.alternating, "alternating"),
        (c.positive_leading, "positive-leading"),
        (c.negative_leading, "negative-leading"),
        (c.reduced, "reduced"),
        (c.non_split, "non-split"),
    ];
    let set: Vec<&str> = flags.iter().filter(|(on, _)| *on).map(|(_, name)| *name).collect();
    if set.is_empty() {
        "none".to_string()
    } else {
        set.join(", ")
    }
}

/// Multi-line human-readable form used by `analyze`.
pub fn render_text(r: &ComputeReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<14}{v}\n"));
    line("word:", if r.word.is_empty() { "(empty)".into() } else { r.word.clone() });
    line("strands:", r.strands.to_string());
    line("crossings:", r.crossings.to_string());
    line("writhe:", r.writhe.to_string());
    line("permutation:", r.cycles.clone());
    line("return order:", r.return_order.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));
    let gaps: Vec<String> = r
        .gap_profile
        .gaps
        .iter()
        .enumerate()
        .map(|(i, g)| format!("{}:{}(+{}/-{})", i + 1, g.count, g.positive, g.negative))
        .collect();
    line("gaps:", if gaps.is_empty() { "none".into() } else { gaps.join(" ") });
    line("class:", flag_list(&r.classification));
    for v in &r.homfly {
        line(&format!("{}:", v.method), v.polynomial.clone());
    }
    line(
        "a-degrees:",
        format!(
            "E = {}, e = {}, span = {}, window [{}, {}]",
            r.mfw.max_a, r.mfw.min_a, r.mfw.span, r.mfw.window.0, r.mfw.window.1
        ),
    );
    line("MFW bound:", format!("braid index >= {}", r.mfw.lower_bound));
    line("certificate:", verdict_text(r.certificate.verdict));
    line(
        "alexander:",
        format!(
            "{} (leading coefficient {}{})",
            r.alexander.delta,
            r.alexander.leading_coeff,
            if r.alexander.leading_is_unit { ", unit" } else { "" }
        ),
    );
    out
}

/// Outcome class of one unit of work; the process exit code is the worst.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    InputError,
    VerificationFailure,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InputError => 2,
            Status::VerificationFailure => 3,
        }
    }
}

/// Parse one batch line: `#` starts a comment, blank lines are skipped
/// (`None`), and an optional `n;` prefix sets the strand count.
pub fn parse_batch_line(line: &str) -> Option<Result<BraidWord, BraidError>> {
    let body = line.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        return None;
    }
    Some(match body.split_once(';') {
        None => parse_braid(body, None),
        Some((prefix, rest)) => match prefix.trim().parse::<usize>() {
            Ok(n) => parse_braid(rest, Some(n)),
            Err(_) => Err(BraidError::BadToken { token: format!("{};", prefix.trim()) }),
        },
    })
}

/// One line of batch output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchEntry {
    /// 1-based line number in the input file.
    pub line: usize,
    pub input: String,
    pub status: Status,
    pub error: Option<String>,
    pub report: Option<ComputeReport>,
}

pub fn batch_entry(line: usize, input: &str, methods: &[Method]) -> Option<BatchEntry> {
    let parsed = parse_batch_line(input)?;
    let input = input.trim().to_string();
    let entry = match parsed {
        Err(e) => BatchEntry { line, input, status: Status::InputError, error: Some(e.to_string()), report: None },
        Ok(word) => match build_report(&word, methods, false) {
            Ok(r) => BatchEntry { line, input, status: Status::Ok, error: None, report: Some(r) },
            Err(e) => BatchEntry {
                line,
                input,
                status: Status::VerificationFailure,
                error: Some(e.to_string()),
                report: None,
            },
        },
    };
    Some(entry)
}
