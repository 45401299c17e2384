//! Elimination of `alpha` from the pair `(P1, P2)`.
//!
//! Two routes are run. The cascade is hand elimination: repeatedly multiply
//! the higher-degree polynomial by the other's leading coefficient and
//! subtract the matching multiple, one degree at a time. Left alone the
//! coefficients explode and pick up extraneous factors, so after each full
//! round the known factor of the subresultant sequence is divided out.
//! The resultant route is the checked resultant of the algebra layer.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::gcd::{primitive_part, primitive_part_in, same_up_to_scalar, squarefree_part};
use crate::algebra::resultant::{resultant_checked, CrossCheck};
use crate::algebra::{AlgebraError, IntPoly, Ring, SparsePoly, UniPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminationError {
    #[error("input has degree 0 in ALPHA; nothing to eliminate")]
    DegenerateInput,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Cascade,
    Resultant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub strategy: Strategy,
    pub alpha_degree: Option<usize>,
    /// Kept only when requested; intermediate polynomials are large.
    pub poly: Option<SparsePoly>,
}

/// Intermediate polynomials in order. Along the cascade the `alpha`-degree
/// strictly decreases within each round.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EliminationTrace {
    pub entries: Vec<TraceEntry>,
}

impl EliminationTrace {
    fn push<R: Ring>(&mut self, strategy: Strategy, p: &UniPoly<R>, keep: Option<&dyn Fn(&UniPoly<R>) -> SparsePoly>) {
        self.entries.push(TraceEntry { strategy, alpha_degree: p.degree(), poly: keep.map(|f| f(p)) });
    }
}

/// How the two routes were found to agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    PrimitivePart,
    SquarefreePart,
    /// Both routes ended in zero.
    BothZero,
    Disagree,
}

#[derive(Debug, Clone)]
pub struct Elimination {
    /// Primitive part of the resultant (of the reduced pair when flagged).
    pub q: SparsePoly,
    pub resultant: SparsePoly,
    pub cascade: SparsePoly,
    pub agreement: Agreement,
    pub cross_check: CrossCheck,
    /// Nonconstant gcd of the inputs in `alpha`, if any.
    pub common_factor: Option<SparsePoly>,
    /// Set when the first resultant vanished and the common factor was
    /// removed before eliminating again.
    pub flagged: bool,
    pub trace: EliminationTrace,
}

impl Elimination {
    pub fn nonzero(&self) -> bool {
        !self.q.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.q.degree_in(Var::H)
    }
}

/// Result of the cascade: the final element (degree 0 in `alpha`, or zero)
/// and the last nonzero element before it.
struct CascadeEnd<R> {
    last: UniPoly<R>,
    previous: UniPoly<R>,
}

fn cascade<R: Ring>(
    f: UniPoly<R>,
    g: UniPoly<R>,
    trace: &mut EliminationTrace,
    keep: Option<&dyn Fn(&UniPoly<R>) -> SparsePoly>,
) -> Result<CascadeEnd<R>, AlgebraError> {
    let (mut a, mut b) = if f.degree() >= g.degree() { (f, g) } else { (g, f) };
    trace.push(Strategy::Cascade, &a, keep);
    trace.push(Strategy::Cascade, &b, keep);
    let mut gg = R::one();
    let mut h = R::one();
    loop {
        let (da, db) = (a.degree().expect("nonzero"), b.degree().expect("nonzero"));
        if db == 0 {
            return Ok(CascadeEnd { last: b, previous: a });
        }
        let lb = b.lc();
        let mut r = a.clone();
        for top in (db..=da).rev() {
            let t = r.coeff(top);
            r = r.scale(&lb);
            if !t.is_zero() {
                r = r.sub(&b.shift(top - db).scale(&t));
            }
            trace.push(Strategy::Cascade, &r, keep);
        }
        if r.is_zero() {
            return Ok(CascadeEnd { last: r, previous: b });
        }
        let delta = (da - db) as u32;
        let r = r.div_exact_scalar(&gg.mul(&h.pow(delta)))?;
        a = b;
        b = r;
        gg = a.lc();
        h = if delta == 0 { h } else { gg.pow(delta).div_exact(&h.pow(delta - 1))? };
    }
}

/// Runs the cascade over dense integer coefficients in `H` when possible.
fn run_cascade(
    f: &SparsePoly,
    g: &SparsePoly,
    trace: &mut EliminationTrace,
    keep: bool,
) -> Result<CascadeEnd<SparsePoly>, AlgebraError> {
    let (uf, ug) = (UniPoly::from_poly(f, Var::Alpha), UniPoly::from_poly(g, Var::Alpha));
    let dense = uf.dense_var().filter(|&w| ug.dense_var() == Some(w));
    if let Some((w, df, dg)) = dense.and_then(|w| Some((w, uf.to_dense(w)?, ug.to_dense(w)?))) {
        let conv = move |p: &UniPoly<IntPoly>| p.to_sparse(w).to_poly();
        let end = cascade(df, dg, trace, keep.then_some(&conv as &dyn Fn(&UniPoly<IntPoly>) -> SparsePoly))?;
        return Ok(CascadeEnd { last: end.last.to_sparse(w), previous: end.previous.to_sparse(w) });
    }
    let conv = |p: &UniPoly| p.to_poly();
    cascade(uf, ug, trace, keep.then_some(&conv as &dyn Fn(&UniPoly) -> SparsePoly))
}

fn compare(cascade: &SparsePoly, resultant: &SparsePoly) -> Agreement {
    match (cascade.is_zero(), resultant.is_zero()) {
        (true, true) => return Agreement::BothZero,
        (true, false) | (false, true) => return Agreement::Disagree,
        _ => {}
    }
    if same_up_to_scalar(cascade, resultant) {
        return Agreement::PrimitivePart;
    }
    match (squarefree_part(cascade, Var::H), squarefree_part(resultant, Var::H)) {
        (Ok(x), Ok(y)) if x == y => Agreement::SquarefreePart,
        _ => Agreement::Disagree,
    }
}

/// Eliminates `alpha` from `p1`, `p2` by both routes.
pub fn eliminate_alpha(p1: &SparsePoly, p2: &SparsePoly, keep_polys: bool) -> Result<Elimination, EliminationError> {
    if p1.degree_in(Var::Alpha) == 0 || p2.degree_in(Var::Alpha) == 0 {
        return Err(EliminationError::DegenerateInput);
    }
    let (f, _) = primitive_part(p1)?;
    let (g, _) = primitive_part(p2)?;
    let mut trace = EliminationTrace::default();
    let end = run_cascade(&f, &g, &mut trace, keep_polys)?;
    let cascade_final = end.last.to_poly();
    let common_factor = if end.last.is_zero() {
        Some(primitive_part_in(&end.previous.to_poly(), Var::Alpha)?)
    } else {
        None
    };
    let (resultant, cross_check) = resultant_checked(&f, &g, Var::Alpha)?;
    trace.entries.push(TraceEntry {
        strategy: Strategy::Resultant,
        alpha_degree: Some(0),
        poly: keep_polys.then(|| resultant.clone()),
    });
    let agreement = compare(&cascade_final, &resultant);

    if let Some(common) = common_factor.as_ref().filter(|_| resultant.is_zero()) {
        let f2 = f.div_exact(common)?;
        let g2 = g.div_exact(common)?;
        let reduced = match eliminate_alpha(&f2, &g2, keep_polys) {
            Ok(e) => e,
            Err(EliminationError::DegenerateInput) => {
                let r = crate::algebra::resultant_prs(&f2, &g2, Var::Alpha)?;
                Elimination {
                    q: primitive_part(&r).map(|(pp, _)| pp).unwrap_or_default(),
                    resultant: r.clone(),
                    cascade: r,
                    agreement: Agreement::PrimitivePart,
                    cross_check: CrossCheck::Exact,
                    common_factor: None,
                    flagged: false,
                    trace: EliminationTrace::default(),
                }
            }
            Err(e) => return Err(e),
        };
        trace.entries.extend(reduced.trace.entries);
        return Ok(Elimination {
            q: reduced.q,
            resultant,
            cascade: cascade_final,
            agreement: reduced.agreement,
            cross_check: reduced.cross_check,
            common_factor,
            flagged: true,
            trace,
        });
    }

    let q = primitive_part(&resultant).map(|(pp, _)| pp).unwrap_or_default();
    Ok(Elimination {
        q,
        resultant,
        cascade: cascade_final,
        agreement,
        cross_check,
        common_factor,
        flagged: false,
        trace,
    })
}
