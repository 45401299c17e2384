//! The `n - p = 1` contradiction chain.
//!
//! With `lambda_n = beta`, the unknown combination
//! `u = (e1(lambda_n)/(lambda1 - lambda_n) - alpha/(lambda1 - alpha)) e1(H)`
//! is carried as the ring variable `T`. The first relation is solved for
//! `u`, the value substituted into the second, and the numerator compared
//! with `(n-2) H (3nH - 2(n-1) alpha)^2`.

use std::time::Instant;

use crate::algebra::{substitute, BigRational, PolyFraction, SparsePoly, Var};
use crate::system::{excluded_alphas, make_state, Curvature, InstanceParams, ParamError};

use super::step::{compare_up_to_scale, StepReport};

fn q(num: i128) -> BigRational {
    BigRational::from_integer(num.into())
}

fn v(x: Var) -> SparsePoly {
    SparsePoly::var(x)
}

fn frac(p: SparsePoly) -> PolyFraction {
    PolyFraction::from_poly(p)
}

#[derive(Debug, Clone)]
pub struct CaseB {
    pub n: u32,
    pub step: StepReport,
    /// The combined relation times `(lambda1 - lambda_n)(lambda_n - alpha)`,
    /// divided by `(lambda1 - lambda_n)^l1_ln_power`.
    pub combined: SparsePoly,
    pub l1_ln_power: u32,
    /// `(n-2) H (3nH - 2(n-1) alpha)^2`.
    pub target: SparsePoly,
    /// `combined = constant * target`, when it holds.
    pub constant: Option<BigRational>,
    /// Root in `alpha` of the squared factor.
    pub forbidden_alpha: SparsePoly,
    /// `forbidden_alpha` is term-identical to the second excluded value.
    pub matches_excluded: bool,
}

/// Runs the chain for `(n, n-1, c)`. `c` does not enter either relation.
pub fn verify_case_b(n: u32, c: Curvature) -> Result<CaseB, ParamError> {
    let start = Instant::now();
    let params = InstanceParams::new(n, n.saturating_sub(1), c)?;
    let ni = params.ni();
    let st = make_state(&params);
    let (h, al, u) = (v(Var::H), v(Var::Alpha), v(Var::T));
    let lambda_n = st.beta();
    let l1_ln = &st.lambda1 - &lambda_n;
    let ln_al = &lambda_n - &al;

    // 2u/(lambda1 - lambda_n) + H(-3nH + 2(n-1) alpha)
    let first_tail = &h * &(h.scale(&q(-3 * ni)) + al.scale(&q(2 * (ni - 1))));
    let first = frac(u.scale(&q(2)))
        .div(&frac(l1_ln.clone()))
        .expect("lambda1 != lambda_n")
        .add(&frac(first_tail));

    // [2n(4-n)H + 2(n-2)(n-1) alpha] u / ((lambda1 - lambda_n)(lambda_n - alpha))
    //   + H((10 - 7n) n H + 4(n-1)(n-2) alpha)
    let lead = h.scale(&q(2 * ni * (4 - ni))) + al.scale(&q(2 * (ni - 2) * (ni - 1)));
    let second_tail = &h * &(h.scale(&q((10 - 7 * ni) * ni)) + al.scale(&q(4 * (ni - 1) * (ni - 2))));
    let second = frac(&lead * &u)
        .div(&frac(&l1_ln * &ln_al))
        .expect("nonzero denominators")
        .add(&frac(second_tail));

    // The first relation is linear in u.
    let (a1, a0) = (first.num().coefficient_of(Var::T, 1), first.num().coefficient_of(Var::T, 0));
    let u_value = PolyFraction::new(-a0, a1).expect("u has a nonzero coefficient");
    // Clear the printed denominators, then strip what remains of lambda1 - lambda_n.
    let cleared = substitute(second.num(), Var::T, &u_value)
        .div(&frac(second.den().clone()))
        .expect("nonzero denominator")
        .mul(&frac(&l1_ln * &ln_al));
    let mut combined = cleared.as_poly().cloned().unwrap_or_else(|| cleared.num().clone());
    let mut l1_ln_power = 0;
    while let Ok(rest) = combined.div_exact(&l1_ln) {
        if combined.is_zero() {
            break;
        }
        combined = rest;
        l1_ln_power += 1;
    }

    let linear = h.scale(&q(3 * ni)) - al.scale(&q(2 * (ni - 1)));
    let target = (&h * &linear.pow(2)).scale(&q(ni - 2));
    let m = compare_up_to_scale(&combined, &target);

    let forbidden_alpha = linear
        .coefficient_of(Var::Alpha, 0)
        .scale(&linear.coefficient_of(Var::Alpha, 1).constant_term().recip())
        .scale(&q(-1));
    let matches_excluded = forbidden_alpha == excluded_alphas(&params)[1];

    let ok = m.status.is_pass() && matches_excluded && cleared.as_poly().is_some() && ni != 2;
    let mut step = StepReport { scale: m.scale.clone(), residual: m.residual, ..StepReport::new("case_b", m.status) };
    if !ok && step.status.is_pass() {
        step.status = super::StepStatus::Fail;
    }
    let note = if matches_excluded {
        format!("forces alpha = {forbidden_alpha}; (lambda1 - lambda_n)^{l1_ln_power} divided out")
    } else {
        format!("forced alpha {forbidden_alpha} is not an excluded value")
    };
    Ok(CaseB {
        n,
        step: step.with_note(note).timed(start),
        combined,
        l1_ln_power,
        target,
        constant: m.scale.filter(|_| ok),
        forbidden_alpha,
        matches_excluded,
    })
}
