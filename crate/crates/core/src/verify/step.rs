use std::time::Instant;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{BigRational, SparsePoly};
use crate::system::SConvention;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StepStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "pass-with-scale")]
    PassWithScale,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "flagged")]
    Flagged,
}

impl StepStatus {
    pub fn is_pass(self) -> bool {
        matches!(self, StepStatus::Pass | StepStatus::PassWithScale)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StepStatus::Pass => "pass",
            StepStatus::PassWithScale => "pass-with-scale",
            StepStatus::Fail => "fail",
            StepStatus::Flagged => "flagged",
        }
    }
}

/// Outcome of one replayed step.
///
/// `Pass` carries no residual; `PassWithScale` means
/// `replay = scale * target` exactly with `scale != 0, 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    pub name: String,
    pub status: StepStatus,
    pub scale: Option<BigRational>,
    pub residual: Option<SparsePoly>,
    pub s_convention: Option<SConvention>,
    pub note: Option<String>,
    pub ms: u64,
}

impl StepReport {
    pub fn new(name: &str, status: StepStatus) -> Self {
        StepReport {
            name: name.to_string(),
            status,
            scale: None,
            residual: None,
            s_convention: None,
            note: None,
            ms: 0,
        }
    }

    pub fn pass(name: &str) -> Self {
        Self::new(name, StepStatus::Pass)
    }

    pub fn fail(name: &str, note: impl Into<String>) -> Self {
        Self::new(name, StepStatus::Fail).with_note(note)
    }

    pub fn check(name: &str, ok: bool, note: impl Into<String>) -> Self {
        let r = Self::new(name, if ok { StepStatus::Pass } else { StepStatus::Fail });
        r.with_note(note)
    }

    /// `Pass` on a zero residual, `Fail` carrying it otherwise.
    pub fn from_residual(name: &str, residual: SparsePoly) -> Self {
        if residual.is_zero() {
            Self::pass(name)
        } else {
            StepReport { residual: Some(residual), ..Self::new(name, StepStatus::Fail) }
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.note = (!note.is_empty()).then_some(note);
        self
    }

    pub fn with_convention(mut self, conv: SConvention) -> Self {
        self.s_convention = Some(conv);
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.ms = start.elapsed().as_millis() as u64;
        self
    }
}

/// Result of comparing a replayed expression against a transcribed target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledMatch {
    pub status: StepStatus,
    pub scale: Option<BigRational>,
    /// `replay - scale * target` when nonzero.
    pub residual: Option<SparsePoly>,
}

/// Decides `replay = k * target`: `k` is the ratio of the coefficients at
/// the leading monomial of `target`, then checked on every term.
pub fn compare_up_to_scale(replay: &SparsePoly, target: &SparsePoly) -> ScaledMatch {
    let Some((lm, lc)) = target.leading_term() else {
        return if replay.is_zero() {
            ScaledMatch { status: StepStatus::Pass, scale: None, residual: None }
        } else {
            ScaledMatch { status: StepStatus::Fail, scale: None, residual: Some(replay.clone()) }
        };
    };
    let k = replay.coeff(lm) / lc;
    if k.is_zero() {
        return ScaledMatch {
            status: StepStatus::Fail,
            scale: None,
            residual: Some(replay - target),
        };
    }
    let residual = replay - &target.scale(&k);
    if !residual.is_zero() {
        return ScaledMatch { status: StepStatus::Fail, scale: Some(k), residual: Some(residual) };
    }
    let status = if k.is_one() { StepStatus::Pass } else { StepStatus::PassWithScale };
    ScaledMatch { status, scale: Some(k), residual: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> SparsePoly {
        s.parse().unwrap()
    }

    #[test]
    fn scale_detection() {
        let t = p("2*H^2 + -1*ALPHA^1");
        let m = compare_up_to_scale(&p("-3*H^2 + 3/2*ALPHA^1"), &t);
        assert_eq!(m.status, StepStatus::PassWithScale);
        assert_eq!(m.scale, Some(rat(-3, 2)));
        assert_eq!(compare_up_to_scale(&t, &t).status, StepStatus::Pass);
        let m = compare_up_to_scale(&p("4*H^2 + -1*ALPHA^1"), &t);
        assert_eq!(m.status, StepStatus::Fail);
        assert_eq!(m.residual, Some(p("1*ALPHA^1")));
        assert_eq!(compare_up_to_scale(&p("1*ALPHA^1"), &t).status, StepStatus::Fail);
    }
}
