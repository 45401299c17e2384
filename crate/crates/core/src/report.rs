//! Report emission. Every document is a pure function of its input: keys are
//! sorted, polynomials use the canonical text form, and timings are zeroed
//! unless explicitly requested.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{format_rational, BigRational};
use crate::hypersurface::ExampleRow;
use crate::verify::{CaseB, DerivationReport, StepReport, StepStatus};

pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "p",
    "c",
    "overall",
    "eliminant_degree",
    "eliminant_nonzero",
    "a90_match",
    "a09_zero",
    "wall_ms",
    "path",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EmitOptions {
    /// Keep measured timings; otherwise every `ms` field is 0.
    pub timestamps: bool,
}

pub fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn ms(value: u64, opts: EmitOptions) -> u64 {
    if opts.timestamps {
        value
    } else {
        0
    }
}

fn opt_rational(r: &Option<BigRational>) -> Value {
    r.as_ref().map_or(Value::Null, |r| Value::String(format_rational(r)))
}

pub fn step_json(s: &StepReport, opts: EmitOptions) -> Value {
    json!({
        "name": s.name,
        "status": s.status,
        "scale": opt_rational(&s.scale),
        "residual": s.residual.as_ref().map(|r| r.to_string()),
        "s_convention": s.s_convention,
        "note": s.note,
        "ms": ms(s.ms, opts),
    })
}

/// `Case B` instances take the `n - p = 1` path; the rest the general one.
pub fn path_label(r: &DerivationReport) -> &'static str {
    if r.params.is_case_b() {
        "caseb"
    } else {
        "casea"
    }
}

pub fn instance_json(r: &DerivationReport, examples: &[ExampleRow], opts: EmitOptions) -> Value {
    let eliminant = match &r.eliminant {
        Some(e) => json!({
            "degree": e.degree,
            "nonzero": e.nonzero,
            "n_terms": e.n_terms,
            "agreement": e.agreement,
            "flagged": e.flagged,
            "sampled_check": e.sampled_check,
            "common_factor": e.common_factor.as_ref().map(|p| p.to_string()),
        }),
        None => Value::Null,
    };
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "instance": {
            "n": r.params.n(),
            "p": r.params.p(),
            "c": r.params.c().to_string(),
        },
        "path": path_label(r),
        "transcription": r.transcription,
        "s_convention": r.s_convention,
        "steps": r.steps.iter().map(|s| step_json(s, opts)).collect::<Vec<_>>(),
        "eliminant": eliminant,
        "a90": {
            "expected": format_rational(&r.a90.expected),
            "computed": format_rational(&r.a90.computed),
            "match": r.a90.matches,
        },
        "a09_zero": r.a09_zero,
        "examples": examples,
        "discrepancies": r.discrepancies,
        "overall": r.overall,
        "wall_ms": ms(r.wall_ms, opts),
    });
    if let Some(polys) = &r.polys {
        let trace: Vec<Value> = r
            .eliminant
            .iter()
            .flat_map(|e| e.trace.entries.iter())
            .map(|t| json!({"strategy": t.strategy, "alpha_degree": t.alpha_degree, "poly": t.poly.as_ref().map(|p| p.to_string())}))
            .collect();
        doc["polynomials"] = json!(polys);
        doc["elimination_trace"] = Value::Array(trace);
    }
    doc
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn csv_row(r: &DerivationReport, opts: EmitOptions) -> Vec<String> {
    let (deg, nonzero) = match &r.eliminant {
        Some(e) => (e.degree.to_string(), e.nonzero.to_string()),
        None => (String::new(), String::new()),
    };
    vec![
        r.params.n().to_string(),
        r.params.p().to_string(),
        r.params.c().to_string(),
        r.overall.as_str().to_string(),
        deg,
        nonzero,
        r.a90.matches.to_string(),
        r.a09_zero.to_string(),
        ms(r.wall_ms, opts).to_string(),
        path_label(r).to_string(),
    ]
}

pub fn to_csv(reports: &[DerivationReport], opts: EmitOptions) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        w.write_record(csv_row(r, opts)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub fn instance_text(r: &DerivationReport) -> String {
    let mut out = format!(
        "instance {} [{} transcription, S {}]\n",
        r.params,
        serde_json::to_value(r.transcription).unwrap().as_str().unwrap_or(""),
        r.s_convention
    );
    for s in &r.steps {
        let scale = s.scale.as_ref().map(|k| format!(" scale {}", format_rational(k))).unwrap_or_default();
        out.push_str(&format!("  {:<17} {:<15}{scale}\n", s.name, s.status.as_str()));
    }
    match &r.eliminant {
        Some(e) => out.push_str(&format!(
            "  eliminant: degree {} in H, {} terms, nonzero {}\n",
            e.degree, e.n_terms, e.nonzero
        )),
        None => out.push_str("  eliminant: not computed\n"),
    }
    out.push_str(&format!(
        "  a90: computed {} vs closed form {} ({})\n",
        format_rational(&r.a90.computed),
        format_rational(&r.a90.expected),
        if r.a90.matches { "match" } else { "mismatch" }
    ));
    for d in &r.discrepancies {
        out.push_str(&format!("  note: {d}\n"));
    }
    out.push_str(&format!("overall: {}\n", r.overall.as_str()));
    out
}

/// Instance counts per overall status.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub passes: usize,
    pub pass_with_scale: usize,
    pub failures: usize,
    pub flagged: usize,
    pub min_degree: Option<u32>,
    pub max_degree: Option<u32>,
    pub wall_ms: u64,
}

impl SweepSummary {
    pub fn from_reports(reports: &[DerivationReport], wall_ms: u64) -> Self {
        let count = |s: StepStatus| reports.iter().filter(|r| r.overall == s).count();
        let degrees = reports.iter().filter_map(|r| r.eliminant.as_ref().map(|e| e.degree));
        SweepSummary {
            total: reports.len(),
            passes: count(StepStatus::Pass),
            pass_with_scale: count(StepStatus::PassWithScale),
            failures: count(StepStatus::Fail),
            flagged: count(StepStatus::Flagged),
            min_degree: degrees.clone().min(),
            max_degree: degrees.max(),
            wall_ms,
        }
    }

    pub fn text(&self) -> String {
        let deg = match (self.min_degree, self.max_degree) {
            (Some(a), Some(b)) => format!("{a}..{b}"),
            _ => "-".to_string(),
        };
        format!(
            "{} instances: {} pass, {} pass-with-scale, {} fail, {} flagged; eliminant degree {deg}; {} ms",
            self.total, self.passes, self.pass_with_scale, self.failures, self.flagged, self.wall_ms
        )
    }
}

pub fn sweep_json(reports: &[DerivationReport], summary: &SweepSummary, opts: EmitOptions) -> Value {
    let mut summary = json!(summary);
    if !opts.timestamps {
        summary["wall_ms"] = json!(0);
    }
    json!({
        "schema_version": SCHEMA_VERSION,
        "instances": reports.iter().map(|r| instance_json(r, &[], opts)).collect::<Vec<_>>(),
        "summary": summary,
    })
}

pub fn examples_json(rows: &[ExampleRow]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "examples": rows,
        "overall": if rows.iter().all(|r| r.matches) { "pass" } else { "fail" },
    })
}

pub fn examples_text(rows: &[ExampleRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{:<34} c={:<3} {:<15} {}{}\n",
            r.spec.to_string(),
            format_rational(&r.c),
            serde_json::to_value(r.expected).unwrap().as_str().unwrap_or(""),
            r.witness,
            if r.matches { "" } else { "  MISMATCH" }
        ));
    }
    out
}

pub fn caseb_json(results: &[CaseB], opts: EmitOptions) -> Value {
    let rows: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "step": step_json(&r.step, opts),
                "constant": opt_rational(&r.constant),
                "l1_ln_power": r.l1_ln_power,
                "combined": r.combined.to_string(),
                "target": r.target.to_string(),
                "forbidden_alpha": r.forbidden_alpha.to_string(),
                "matches_excluded": r.matches_excluded,
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "case_b": rows,
        "overall": if results.iter().all(|r| r.step.status.is_pass()) { "pass" } else { "fail" },
    })
}

pub fn caseb_text(results: &[CaseB]) -> String {
    let mut out = String::new();
    for r in results {
        let k = r.constant.as_ref().map(format_rational).unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "n={:<3} {:<15} constant {:<8} alpha = {}\n",
            r.n,
            r.step.status.as_str(),
            k,
            r.forbidden_alpha
        ));
    }
    out
}
