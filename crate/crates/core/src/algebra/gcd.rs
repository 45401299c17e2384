//! Content, primitive parts and polynomial gcds.
//!
//! The gcd is the classical recursive one: split off the content with
//! respect to the main variable (itself a gcd in fewer variables), then run a
//! subresultant remainder sequence on the primitive parts. Subresultants keep
//! coefficient growth linear without computing any integer gcds inside the
//! loop.

use num_traits::{Signed, Zero};

use super::poly::SparsePoly;
use super::rational::{rational_gcd, BigRational};
use super::ring::Ring;
use super::univariate::UniPoly;
use super::var::Var;
use super::AlgebraError;

/// Splits `p = content * primitive`, where `primitive` has coprime integer
/// coefficients and a positive graded-lex leading coefficient.
pub fn primitive_part(p: &SparsePoly) -> Result<(SparsePoly, BigRational), AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut content = p
        .terms()
        .fold(BigRational::zero(), |g, (_, c)| rational_gcd(&g, c));
    if p.leading_coeff().is_negative() {
        content = -content;
    }
    let inv = content.recip();
    Ok((p.scale(&inv), content))
}

/// Primitive part, mapping zero to zero.
pub fn normalize(p: &SparsePoly) -> SparsePoly {
    primitive_part(p).map(|(pp, _)| pp).unwrap_or_default()
}

/// Polynomial content of `p` viewed as univariate in `v`: the gcd of its
/// coefficients, which live in the remaining variables.
pub fn content_in(p: &SparsePoly, v: Var) -> SparsePoly {
    let mut g = SparsePoly::zero();
    for c in p.to_univariate(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return SparsePoly::one();
        }
    }
    g
}

/// Primitive part with respect to `v`, also stripped of rational content.
pub fn primitive_part_in(p: &SparsePoly, v: Var) -> Result<SparsePoly, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let c = content_in(p, v);
    Ok(normalize(&p.div_exact(&c)?))
}

/// Full multivariate gcd over the rationals, normalized by
/// [`primitive_part`]. `gcd(0, 0) = 0`.
pub fn gcd(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.is_constant() || b.is_constant() {
        return SparsePoly::one();
    }
    let v = Var::ALL
        .into_iter()
        .find(|&v| a.contains_var(v) || b.contains_var(v))
        .expect("non-constant polynomial has a variable");
    if !a.contains_var(v) {
        return gcd(a, &content_in(b, v));
    }
    if !b.contains_var(v) {
        return gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = prs_gcd(&pa, &pb, v).expect("nonzero inputs");
    normalize(&(&gcd(&ca, &cb) * &g))
}

/// GCD of `a` and `b` as univariate polynomials in `v` over the fraction
/// field of the remaining variables, returned primitive in `v` with
/// coprime integer coefficients and positive leading coefficient.
pub fn gcd_poly(a: &SparsePoly, b: &SparsePoly, v: Var) -> Result<SparsePoly, AlgebraError> {
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::GcdUndefined);
    }
    if a.is_zero() {
        return if b.contains_var(v) { primitive_part_in(b, v) } else { Ok(SparsePoly::one()) };
    }
    if b.is_zero() {
        return if a.contains_var(v) { primitive_part_in(a, v) } else { Ok(SparsePoly::one()) };
    }
    if !a.contains_var(v) || !b.contains_var(v) {
        return Ok(SparsePoly::one());
    }
    prs_gcd(a, b, v)
}

/// Last nonzero element of the subresultant sequence, made primitive in `v`.
fn prs_gcd(a: &SparsePoly, b: &SparsePoly, v: Var) -> Result<SparsePoly, AlgebraError> {
    let mut f = UniPoly::from_poly(a, v);
    let mut g = UniPoly::from_poly(b, v);
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    let seq = subresultant_sequence(f, g)?;
    let last = seq.last().expect("sequence is nonempty");
    if last.degree() == Some(0) {
        return Ok(SparsePoly::one());
    }
    primitive_part_in(&last.to_poly(), v)
}

/// Subresultant polynomial remainder sequence `[f, g, r_2, ...]`, stopping
/// at the last nonzero element. Requires `deg f >= deg g`, `g != 0`.
pub fn subresultant_sequence<R: Ring>(f: UniPoly<R>, g: UniPoly<R>) -> Result<Vec<UniPoly<R>>, AlgebraError> {
    if g.is_zero() {
        return Ok(vec![f]);
    }
    let mut seq = vec![f, g];
    let mut gg = R::one();
    let mut h = R::one();
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.degree() == Some(0) {
            break;
        }
        let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
        let r = a.prem(b)?;
        if r.is_zero() {
            break;
        }
        let divisor = gg.mul(&h.pow(delta));
        let next = r.div_exact_scalar(&divisor)?;
        gg = b.lc();
        h = if delta == 0 {
            h
        } else {
            gg.pow(delta).div_exact(&h.pow(delta - 1))?
        };
        seq.push(next);
    }
    Ok(seq)
}

/// `p / gcd(p, dp/dv)`: the squarefree part in `v`, normalized.
pub fn squarefree_part(p: &SparsePoly, v: Var) -> Result<SparsePoly, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !p.contains_var(v) {
        return Ok(normalize(p));
    }
    let g = gcd(p, &p.differentiate(v));
    Ok(normalize(&p.div_exact(&g)?))
}

/// True when `a = k * b` for some nonzero rational `k`.
pub fn same_up_to_scalar(a: &SparsePoly, b: &SparsePoly) -> bool {
    match (primitive_part(a), primitive_part(b)) {
        (Ok((pa, _)), Ok((pb, _))) => pa == pb,
        (Err(_), Err(_)) => true,
        _ => false,
    }
}

/// `num/den` reduced so that the gcd is a constant.
pub fn cancel_common(num: &SparsePoly, den: &SparsePoly) -> (SparsePoly, SparsePoly) {
    let g = gcd(num, den);
    if g.is_constant() || g.is_zero() {
        return (num.clone(), den.clone());
    }
    (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn h() -> SparsePoly {
        SparsePoly::var(Var::H)
    }
    fn al() -> SparsePoly {
        SparsePoly::var(Var::Alpha)
    }
    fn k(c: i64) -> SparsePoly {
        SparsePoly::from_int(c)
    }

    #[test]
    fn primitive_part_examples() {
        let (pp, c) = primitive_part(&(k(6) * h() + k(9) * al())).unwrap();
        assert_eq!(pp, k(2) * h() + k(3) * al());
        assert_eq!(c, rat(3, 1));
        let (pp, c) = primitive_part(&(SparsePoly::constant(rat(3, 2)) * h())).unwrap();
        assert_eq!(pp, h());
        assert_eq!(c, rat(3, 2));
        let (pp, c) = primitive_part(&(k(-2) * h() + k(4))).unwrap();
        assert_eq!(pp, h() - k(2));
        assert_eq!(c, rat(-2, 1));
        assert_eq!(primitive_part(&SparsePoly::zero()), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn gcd_poly_examples() {
        let a = (h() - k(1)) * (h() - k(2));
        let b = (h() - k(1)) * (h() - k(3));
        assert_eq!(gcd_poly(&a, &b, Var::H).unwrap(), h() - k(1));
        assert_eq!(gcd_poly(&(h().pow(2) + k(1)), &(h() + k(2)), Var::H).unwrap(), k(1));
        let p = k(4) * h().pow(2) * al() - k(2) * al();
        assert_eq!(gcd_poly(&SparsePoly::zero(), &p, Var::H).unwrap(), k(2) * h().pow(2) - k(1));
        assert_eq!(
            gcd_poly(&SparsePoly::zero(), &SparsePoly::zero(), Var::H),
            Err(AlgebraError::GcdUndefined)
        );
    }

    #[test]
    fn multivariate_gcd_recovers_common_factor() {
        let common = &h() * &al() + k(3) * SparsePoly::var(Var::C);
        let a = &common * &(h() - al());
        let b = &common * &(h().pow(2) + k(1));
        assert_eq!(gcd(&a, &b), normalize(&common));
        let (n, d) = cancel_common(&a, &b);
        assert_eq!(n, h() - al());
        assert_eq!(d, h().pow(2) + k(1));
    }

    #[test]
    fn squarefree_part_drops_repeats() {
        let p = (h() - k(1)).pow(3) * (h() + k(2));
        assert_eq!(squarefree_part(&p, Var::H).unwrap(), normalize(&((h() - k(1)) * (h() + k(2)))));
    }
}
