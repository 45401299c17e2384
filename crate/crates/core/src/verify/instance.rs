//! The per-instance pipeline: build, replay, eliminate, assemble.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, BigRational, SparsePoly, Var};
use crate::system::{
    a90_closed_form, excluded_alphas, make_state, Bracket, Curvature, EquationSet, InstanceParams, SConvention, Transcription,
    TranscriptionKind,
};

use super::eliminate::{eliminate_alpha, Agreement, EliminationError, EliminationTrace};
use super::replay::{verify_e1h, verify_eq346, verify_eq347_348, verify_eq350};
use super::step::{StepReport, StepStatus};
use super::{verify_case_b, FormalDerivation};

/// Points used for the `P2` consistency check.
pub const P2_POINTS: usize = 20;
const P2_SEED: u64 = 0x9_2c0f;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub transcription: TranscriptionKind,
    /// Keep intermediate polynomials in the report.
    pub trace: bool,
    /// Run the elimination. It is skipped for symbolic `c` regardless.
    pub eliminate: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { transcription: TranscriptionKind::Printed, trace: false, eliminate: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A90Check {
    pub expected: BigRational,
    pub computed: BigRational,
    pub matches: bool,
}

#[derive(Debug, Clone)]
pub struct EliminantSummary {
    pub q: SparsePoly,
    pub degree: u32,
    pub nonzero: bool,
    pub n_terms: usize,
    pub agreement: Agreement,
    pub flagged: bool,
    pub common_factor: Option<SparsePoly>,
    pub sampled_check: bool,
    pub trace: EliminationTrace,
}

#[derive(Debug, Clone)]
pub struct DerivationReport {
    pub params: InstanceParams,
    pub transcription: TranscriptionKind,
    pub s_convention: SConvention,
    pub steps: Vec<StepReport>,
    pub eliminant: Option<EliminantSummary>,
    pub a90: A90Check,
    pub a09_zero: bool,
    pub discrepancies: Vec<String>,
    /// Named polynomials, kept only with `trace`.
    pub polys: Option<BTreeMap<String, String>>,
    pub overall: StepStatus,
    pub wall_ms: u64,
}

impl DerivationReport {
    pub fn step(&self, name: &str) -> Option<&StepReport> {
        self.steps.iter().find(|s| s.name == name)
    }

    pub fn failed_steps(&self) -> Vec<&str> {
        self.steps.iter().filter(|s| s.status == StepStatus::Fail).map(|s| s.name.as_str()).collect()
    }
}

/// Worst status wins: fail, then flagged, then pass-with-scale.
pub fn overall_status<'a>(statuses: impl IntoIterator<Item = &'a StepStatus>) -> StepStatus {
    let mut out = StepStatus::Pass;
    for s in statuses {
        out = match (out, *s) {
            (StepStatus::Fail, _) | (_, StepStatus::Fail) => StepStatus::Fail,
            (StepStatus::Flagged, _) | (_, StepStatus::Flagged) => StepStatus::Flagged,
            (StepStatus::PassWithScale, _) | (_, StepStatus::PassWithScale) => StepStatus::PassWithScale,
            _ => StepStatus::Pass,
        };
    }
    out
}

fn trace_identity(params: &InstanceParams) -> StepReport {
    let start = Instant::now();
    StepReport::from_residual("trace_identity", make_state(params).trace_residual(params)).timed(start)
}

fn excluded_distinct(params: &InstanceParams) -> StepReport {
    let [a, b, c] = excluded_alphas(params);
    let ok = a != b && b != c && a != c;
    StepReport::check("excluded_alphas", ok, format!("{a}; {b}; {c}"))
}

fn h1_rule(params: &InstanceParams) -> StepReport {
    StepReport::from_residual("h1_rule", FormalDerivation::new(params).h1_rule_residual(params))
}

/// The derivation replays, which depend on the transcription only.
pub fn replay_steps(eq: &EquationSet) -> Vec<StepReport> {
    vec![verify_e1h(&eq.params), verify_eq346(eq), verify_eq347_348(eq), verify_eq350(eq)]
}

/// The replays with `C` kept as a ring variable, so that transcribed
/// coefficients of `c` are checked even where the instance kills them.
fn c_block(params: &InstanceParams, transcription: &Transcription) -> Option<StepReport> {
    if params.c().is_symbolic() {
        return None;
    }
    let start = Instant::now();
    let symbolic = params.with_c(Curvature::Symbolic);
    let eq = EquationSet::build(&symbolic, transcription);
    let replays = replay_steps(&eq);
    let failed: Vec<&str> = replays
        .iter()
        .filter(|s| !s.status.is_pass())
        .map(|s| s.name.as_str())
        .collect();
    let note = if failed.is_empty() { String::new() } else { format!("symbolic c fails {}", failed.join(", ")) };
    Some(StepReport::check("c_block", failed.is_empty(), note).timed(start))
}

fn lead_consistency(eq: &EquationSet) -> StepReport {
    let t = &eq.transcription;
    let product = t.h3(Bracket::L) * t.h3(Bracket::M) * t.h3(Bracket::N);
    let expected = a90_closed_form(&eq.params);
    StepReport::check(
        "lead_consistency",
        product == expected,
        format!("L*M*N leading H^3 product {product}, closed form {expected}"),
    )
}

fn coefficient_steps(eq: &EquationSet) -> (StepReport, StepReport, A90Check, bool) {
    let chosen = eq.candidate(eq.s_convention);
    let check = A90Check { expected: a90_closed_form(&eq.params), computed: chosen.a90.clone(), matches: chosen.a90_match };
    let a90 = StepReport::check(
        "a90",
        check.matches,
        format!("computed {}, closed form {}", check.computed, check.expected),
    )
    .with_convention(eq.s_convention);
    let a09 = StepReport::check("a09", chosen.a09_zero, "").with_convention(eq.s_convention);
    (a90, a09, check, chosen.a09_zero)
}

fn ha_degree(p: &SparsePoly) -> u32 {
    p.degree_in_vars(&[Var::H, Var::Alpha])
}

fn p1_shape(eq: &EquationSet) -> StepReport {
    let deg = ha_degree(&eq.p1);
    let alpha = eq.p1.degree_in(Var::Alpha);
    let ok = deg == 9 && alpha <= 8;
    StepReport::check("p1_shape", ok, format!("degree {deg} in (H, ALPHA), ALPHA-degree {alpha}"))
}

fn sample(rng: &mut ChaCha8Rng) -> BigRational {
    rat(rng.gen_range(-40..=40), rng.gen_range(1..=7))
}

/// `P2` is nonzero of degree 12, and `content * P2` agrees with
/// `dP1/dH * num + dP1/dalpha * den` at random points where `den != 0`.
fn p2_check(eq: &EquationSet) -> StepReport {
    let start = Instant::now();
    let (Some(p2), Some(content)) = (&eq.p2, &eq.p2_content) else {
        return StepReport::fail("p2", "combination vanishes identically");
    };
    let deg = ha_degree(p2);
    let (dh, da) = (eq.p1.differentiate(Var::H), eq.p1.differentiate(Var::Alpha));
    let mut rng = ChaCha8Rng::seed_from_u64(P2_SEED);
    let (mut checked, mut bad) = (0, 0);
    while checked < P2_POINTS {
        let mut point = vec![(Var::H, sample(&mut rng)), (Var::Alpha, sample(&mut rng))];
        if eq.params.c().is_symbolic() {
            point.push((Var::C, sample(&mut rng)));
        }
        let den = eq.dh_den.eval_point(&point).expect("all variables bound");
        if den.is_zero() {
            continue;
        }
        let num = eq.dh_num.eval_point(&point).expect("all variables bound");
        let raw = dh.eval_point(&point).unwrap() * num + da.eval_point(&point).unwrap() * den;
        if raw != content * p2.eval_point(&point).unwrap() {
            bad += 1;
        }
        checked += 1;
    }
    let ok = deg == 12 && bad == 0;
    StepReport::check("p2", ok, format!("degree {deg} in (H, ALPHA); {bad} of {P2_POINTS} points disagree"))
        .timed(start)
}

fn elimination_step(eq: &EquationSet, trace: bool) -> (StepReport, Option<EliminantSummary>) {
    let start = Instant::now();
    let Some(p2) = &eq.p2 else {
        return (StepReport::fail("eliminate_alpha", "P2 unavailable"), None);
    };
    match eliminate_alpha(&eq.p1, p2, trace) {
        Ok(e) => {
            let summary = EliminantSummary {
                degree: e.degree(),
                nonzero: e.nonzero(),
                n_terms: e.q.n_terms(),
                agreement: e.agreement,
                flagged: e.flagged,
                common_factor: e.common_factor.clone(),
                sampled_check: matches!(e.cross_check, crate::algebra::resultant::CrossCheck::Sampled(_)),
                trace: e.trace,
                q: e.q,
            };
            let no_alpha = !summary.q.contains_var(Var::Alpha);
            let agree = summary.agreement != Agreement::Disagree;
            let status = if !(summary.nonzero && no_alpha && agree) {
                StepStatus::Fail
            } else if summary.flagged {
                StepStatus::Flagged
            } else {
                StepStatus::Pass
            };
            let note = format!(
                "degree {} in H, {} terms, routes agree on {:?}",
                summary.degree, summary.n_terms, summary.agreement
            );
            (StepReport::new("eliminate_alpha", status).with_note(note).timed(start), Some(summary))
        }
        Err(EliminationError::DegenerateInput) => {
            (StepReport::fail("eliminate_alpha", "P1 or P2 has degree 0 in ALPHA"), None)
        }
        Err(e) => (StepReport::fail("eliminate_alpha", e.to_string()), None),
    }
}

fn convention_note(eq: &EquationSet) -> String {
    let parts: Vec<String> = eq
        .candidates
        .iter()
        .map(|c| format!("{}: a90 {}, a09 {}", c.convention, if c.a90_match { "matches" } else { "differs" }, if c.a09_zero { "zero" } else { "nonzero" }))
        .collect();
    format!("S convention {} selected for P1 ({})", eq.s_convention, parts.join("; "))
}

/// Runs every step on one instance; never panics on a mathematical failure.
pub fn run_instance(params: &InstanceParams, opts: &RunOptions) -> DerivationReport {
    let transcription = Transcription::new(opts.transcription, params);
    run_with_transcription(params, &transcription, opts)
}

pub fn run_with_transcription(params: &InstanceParams, transcription: &Transcription, opts: &RunOptions) -> DerivationReport {
    let start = Instant::now();
    let eq = EquationSet::build(params, transcription);
    let mut steps = vec![trace_identity(params), excluded_distinct(params), h1_rule(params)];
    steps.extend(replay_steps(&eq));
    steps.extend(c_block(params, transcription));
    if params.is_case_b() {
        match verify_case_b(params.n(), params.c().clone()) {
            Ok(r) => steps.push(r.step),
            Err(e) => steps.push(StepReport::fail("case_b", e.to_string())),
        }
    }
    let (a90_step, a09_step, a90, a09_zero) = coefficient_steps(&eq);
    steps.extend([a90_step, a09_step, lead_consistency(&eq), p1_shape(&eq), p2_check(&eq)]);

    let mut discrepancies = vec![convention_note(&eq)];
    let eliminant = if params.c().is_symbolic() || !opts.eliminate {
        discrepancies.push("elimination not run".to_string());
        None
    } else {
        let (step, summary) = elimination_step(&eq, opts.trace);
        steps.push(step);
        summary
    };
    for s in steps.iter().filter(|s| s.status == StepStatus::Fail) {
        let detail = s.note.as_deref().unwrap_or("nonzero residual");
        discrepancies.push(format!("{} failed: {detail}", s.name));
    }

    let polys = opts.trace.then(|| {
        let mut m = BTreeMap::new();
        m.insert("L".to_string(), eq.l.to_string());
        m.insert("M".to_string(), eq.m.to_string());
        m.insert("N".to_string(), eq.n.to_string());
        m.insert("G".to_string(), eq.g.to_string());
        m.insert("S".to_string(), eq.s.to_string());
        m.insert("P1".to_string(), eq.p1.to_string());
        m.insert("P2".to_string(), eq.p2.as_ref().map(|p| p.to_string()).unwrap_or_default());
        if let Some(e) = &eliminant {
            m.insert("Q".to_string(), e.q.to_string());
        }
        m
    });
    let mut overall = overall_status(steps.iter().map(|s| &s.status));
    if eliminant.as_ref().is_some_and(|e| !e.nonzero) {
        overall = StepStatus::Fail;
    }
    DerivationReport {
        params: params.clone(),
        transcription: opts.transcription,
        s_convention: eq.s_convention,
        steps,
        eliminant,
        a90,
        a09_zero,
        discrepancies,
        polys,
        overall,
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, p: u32, c: i64) -> InstanceParams {
        InstanceParams::new(n, p, Curvature::from_int(c)).unwrap()
    }

    #[test]
    fn printed_4_3_fails_only_on_replays() {
        let r = run_instance(&params(4, 3, 1), &RunOptions::default());
        assert_eq!(r.overall, StepStatus::Fail);
        assert_eq!(r.failed_steps(), vec!["eq346", "eq350", "c_block"]);
        assert!(r.a90.matches);
        assert_eq!(r.a90.computed, rat(75116160, 1));
        let e = r.eliminant.as_ref().unwrap();
        assert!(e.nonzero);
        assert_eq!(e.degree, 107);
    }

    #[test]
    fn reconciled_fails_only_on_printed_a90() {
        let opts = RunOptions { transcription: TranscriptionKind::Reconciled, ..RunOptions::default() };
        let r = run_instance(&params(5, 3, -1), &opts);
        assert_eq!(r.failed_steps(), vec!["a90", "lead_consistency"]);
        assert!(r.eliminant.unwrap().nonzero);
    }

    #[test]
    fn tampered_l_isolated_to_eq350() {
        let pr = params(5, 3, 1);
        let t = Transcription::reconciled(&pr).perturb(Bracket::L, 2, &rat(1, 1));
        let opts = RunOptions { eliminate: false, ..RunOptions::default() };
        let r = run_with_transcription(&pr, &t, &opts);
        let replays: Vec<_> = r
            .failed_steps()
            .into_iter()
            .filter(|s| s.starts_with("eq") || *s == "e1H")
            .collect();
        assert_eq!(replays, vec!["eq350"]);
    }

    #[test]
    fn c_coefficient_caught_at_c_zero() {
        let pr = params(6, 4, 0);
        let base = Transcription::reconciled(&pr);
        let opts = RunOptions { eliminate: false, ..RunOptions::default() };
        let clean = run_with_transcription(&pr, &base, &opts);
        assert!(clean.step("c_block").unwrap().status.is_pass());
        let (b, i) = base
            .coefficient_ids()
            .into_iter()
            .find(|&(b, i)| base.entries(b)[i].monomial.exp(Var::C) > 0)
            .unwrap();
        let r = run_with_transcription(&pr, &base.perturb(b, i, &rat(1, 1)), &opts);
        assert_eq!(r.step("c_block").unwrap().status, StepStatus::Fail);
    }

    #[test]
    fn symbolic_c_skips_elimination() {
        let pr = InstanceParams::new(5, 4, Curvature::Symbolic).unwrap();
        let r = run_instance(&pr, &RunOptions::default());
        assert!(r.eliminant.is_none());
        assert!(r.step("case_b").unwrap().status.is_pass());
        assert!(r.step("p2").unwrap().status.is_pass(), "{:?}", r.step("p2"));
    }

    #[test]
    fn overall_ordering() {
        use StepStatus::*;
        assert_eq!(overall_status(&[Pass, PassWithScale]), PassWithScale);
        assert_eq!(overall_status(&[Flagged, PassWithScale]), Flagged);
        assert_eq!(overall_status(&[Flagged, Fail, Pass]), Fail);
        assert_eq!(overall_status(&[]), Pass);
    }
}
