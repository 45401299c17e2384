use serde::Serialize;

use crate::algebra::{gcd::primitive_part, BigRational, Monomial, PolyFraction, SparsePoly, Var};

use super::{make_state, Bracket, InstanceParams, Transcription, TranscriptionKind};

fn q(num: i128, den: i128) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn h() -> SparsePoly {
    SparsePoly::var(Var::H)
}

fn alpha() -> SparsePoly {
    SparsePoly::var(Var::Alpha)
}

/// Which value of the product `AB` is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SConvention {
    /// `AB = -alpha beta - c`, from the Gauss equation.
    Gauss,
    /// `AB = alpha beta + c`, the form written inline in the product `LM * (...)`.
    Inline,
}

impl SConvention {
    pub const ALL: [SConvention; 2] = [SConvention::Gauss, SConvention::Inline];
}

impl std::fmt::Display for SConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SConvention::Gauss => "gauss",
            SConvention::Inline => "inline",
        })
    }
}

pub fn build_g(params: &InstanceParams, t: &Transcription) -> SparsePoly {
    t.poly(Bracket::G, params.c())
}

pub fn build_lmn(params: &InstanceParams, t: &Transcription) -> (SparsePoly, SparsePoly, SparsePoly) {
    let c = params.c();
    (t.poly(Bracket::L, c), t.poly(Bracket::M, c), t.poly(Bracket::N, c))
}

/// The value of `AB`. Denominators are the constant `n - p`, so the
/// fraction always has denominator `1`.
pub fn build_s(params: &InstanceParams, conv: SConvention) -> PolyFraction {
    let ab = &alpha() * &make_state(params).beta() + params.c().as_poly();
    PolyFraction::from_poly(match conv {
        SConvention::Gauss => -ab,
        SConvention::Inline => ab,
    })
}

/// `(4-p)(p-1)(nH + 2 alpha)` and `(3+p-n)(n(n+3-p)H - 2(p-1) alpha)`,
/// the coefficients of `A^2` and `B^2` in the quadratic relation.
pub fn quadratic_coefficients(params: &InstanceParams) -> (SparsePoly, SparsePoly) {
    let (n, p) = (params.ni(), params.pi());
    let c1 = (h().scale(&q(n, 1)) + alpha().scale(&q(2, 1))).scale(&q((4 - p) * (p - 1), 1));
    let c2 = (h().scale(&q(n * (n + 3 - p), 1)) - alpha().scale(&q(2 * (p - 1), 1)))
        .scale(&q(3 + p - n, 1));
    (c1, c2)
}

/// `c1 M^2 S + c2 L^2 S + L M N`, kept at its own normalization
/// (clearing factor 1).
pub fn build_p1(
    params: &InstanceParams,
    l: &SparsePoly,
    m: &SparsePoly,
    n: &SparsePoly,
    s: &SparsePoly,
) -> SparsePoly {
    let (c1, c2) = quadratic_coefficients(params);
    let quad = &(&c1 * &(m * m)) + &(&c2 * &(l * l));
    &(&quad * s) + &(&(l * m) * n)
}

/// `dH/dalpha` as the unreduced pair `(numerator, denominator)` over the
/// common denominator `3n(nH + 2 alpha) M`.
pub fn dh_dalpha(params: &InstanceParams, l: &SparsePoly, m: &SparsePoly) -> (SparsePoly, SparsePoly) {
    let (n, p) = (params.ni(), params.pi());
    let nh2a = h().scale(&q(n, 1)) + alpha().scale(&q(2, 1));
    let lin = h().scale(&q(n + 3 - p, 1)) - alpha().scale(&q(2 * (p - 1), 1));
    let num = (&nh2a * m).scale(&q(2 * (p - 1), 1)) + (&lin * l).scale(&q(2, 1));
    let den = (&nh2a * m).scale(&q(3 * n, 1));
    (num, den)
}

/// Primitive part of `dP1/dH * num + dP1/dalpha * den`; `None` when that
/// combination vanishes identically.
pub fn build_p2(p1: &SparsePoly, num: &SparsePoly, den: &SparsePoly) -> Option<(SparsePoly, BigRational)> {
    let raw = &(&p1.differentiate(Var::H) * num) + &(&p1.differentiate(Var::Alpha) * den);
    primitive_part(&raw).ok()
}

/// `729 n^6 (n-p+6)(3n-2p+17)(2n-2p+3) / (32 (n-p))`.
pub fn a90_closed_form(params: &InstanceParams) -> BigRational {
    let (n, p) = (params.ni(), params.pi());
    q(729 * n.pow(6) * (n - p + 6) * (3 * n - 2 * p + 17) * (2 * n - 2 * p + 3), 32 * (n - p))
}

/// The coefficient claims checked against one `S` convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCandidate {
    pub convention: SConvention,
    pub a90: BigRational,
    pub a90_match: bool,
    pub a09_zero: bool,
}

/// Every named polynomial of one instance.
#[derive(Debug, Clone)]
pub struct EquationSet {
    pub params: InstanceParams,
    pub transcription: Transcription,
    pub l: SparsePoly,
    pub m: SparsePoly,
    pub n: SparsePoly,
    pub g: SparsePoly,
    /// Convention under which `p1` was built.
    pub s_convention: SConvention,
    pub s: PolyFraction,
    pub candidates: Vec<SCandidate>,
    pub p1: SparsePoly,
    pub dh_num: SparsePoly,
    pub dh_den: SparsePoly,
    /// `None` when the combination defining it vanishes.
    pub p2: Option<SparsePoly>,
    /// Rational content divided out of the raw combination for `p2`.
    pub p2_content: Option<BigRational>,
}

pub fn a90_of(p1: &SparsePoly) -> BigRational {
    p1.coeff(&Monomial::var(Var::H, 9))
}

pub fn a09_of(p1: &SparsePoly) -> BigRational {
    p1.coeff(&Monomial::var(Var::Alpha, 9))
}

impl EquationSet {
    /// Builds everything; `P1` uses the first convention (Gauss first)
    /// under which both printed coefficient claims hold, else the first
    /// with `a_09 = 0`, else Gauss.
    pub fn build(params: &InstanceParams, transcription: &Transcription) -> Self {
        let (l, m, n) = build_lmn(params, transcription);
        let g = build_g(params, transcription);
        let expected = a90_closed_form(params);
        let mut candidates = Vec::new();
        let mut built = Vec::new();
        for conv in SConvention::ALL {
            let s = build_s(params, conv);
            let p1 = build_p1(params, &l, &m, &n, s.num());
            let a90 = a90_of(&p1);
            candidates.push(SCandidate {
                convention: conv,
                a90_match: a90 == expected,
                a09_zero: num_traits::Zero::is_zero(&a09_of(&p1)),
                a90,
            });
            built.push((conv, s, p1));
        }
        let pick = candidates
            .iter()
            .position(|c| c.a90_match && c.a09_zero)
            .or_else(|| candidates.iter().position(|c| c.a09_zero))
            .unwrap_or(0);
        let (s_convention, s, p1) = built.swap_remove(pick);
        let (dh_num, dh_den) = dh_dalpha(params, &l, &m);
        let (p2, p2_content) = match build_p2(&p1, &dh_num, &dh_den) {
            Some((p2, content)) => (Some(p2), Some(content)),
            None => (None, None),
        };
        EquationSet {
            params: params.clone(),
            transcription: transcription.clone(),
            l,
            m,
            n,
            g,
            s_convention,
            s,
            candidates,
            p1,
            dh_num,
            dh_den,
            p2,
            p2_content,
        }
    }

    pub fn printed(params: &InstanceParams) -> Self {
        Self::build(params, &Transcription::new(TranscriptionKind::Printed, params))
    }

    pub fn dh_dalpha(&self) -> PolyFraction {
        PolyFraction::new(self.dh_num.clone(), self.dh_den.clone()).expect("M is nonzero")
    }

    pub fn candidate(&self, conv: SConvention) -> &SCandidate {
        self.candidates.iter().find(|c| c.convention == conv).expect("both conventions built")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::system::Curvature;

    fn params(n: u32, p: u32, c: i64) -> InstanceParams {
        InstanceParams::new(n, p, Curvature::from_int(c)).unwrap()
    }

    #[test]
    fn s_forms_at_4_3() {
        let pr = params(4, 3, 1);
        let gauss = build_s(&pr, SConvention::Gauss);
        assert_eq!(gauss.as_poly().unwrap(), &"-6*H^1*ALPHA^1 + 2*ALPHA^2 + -1".parse().unwrap());
        let inline = build_s(&pr, SConvention::Inline);
        assert_eq!(inline.num(), &-gauss.num().clone());
        let origin = [(Var::H, rat(0, 1)), (Var::Alpha, rat(0, 1))];
        assert_eq!(gauss.num().eval_point(&origin).unwrap(), rat(-1, 1));
    }

    #[test]
    fn a90_closed_form_at_4_3() {
        assert_eq!(a90_closed_form(&params(4, 3, 1)), rat(75116160, 1));
    }

    #[test]
    fn printed_p1_matches_coefficient_claims() {
        let eq = EquationSet::printed(&params(4, 3, 1));
        assert_eq!(eq.s_convention, SConvention::Inline);
        assert_eq!(a90_of(&eq.p1), rat(75116160, 1));
        assert!(eq.candidate(SConvention::Gauss).a90_match);
        assert!(!eq.candidate(SConvention::Gauss).a09_zero);
        assert_eq!(eq.p1.total_degree(), 9);
        assert_eq!(eq.p1.degree_in(Var::Alpha), 8);
        let p2 = eq.p2.as_ref().unwrap();
        assert_eq!(p2.total_degree(), 12);
    }

    #[test]
    fn dh_dalpha_construction_identity() {
        let pr = params(5, 3, -1);
        let eq = EquationSet::printed(&pr);
        let lin = h().scale(&q(5, 1)) - alpha().scale(&q(4, 1));
        let rest = &eq.dh_num - &eq.dh_den.scale(&q(4, 15)) - (&lin * &eq.l).scale(&q(2, 1));
        assert!(rest.is_zero());
    }
}
