use std::fmt;

use num_traits::One;

use super::gcd::{cancel_common, primitive_part};
use super::poly::SparsePoly;
use super::var::Var;
use super::AlgebraError;

/// A reduced quotient of polynomials.
///
/// Invariants: the denominator is nonzero, primitive with positive leading
/// coefficient (a constant denominator is always `1`), and shares no
/// nonconstant factor with the numerator. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyFraction {
    num: SparsePoly,
    den: SparsePoly,
}

impl PolyFraction {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(PolyFraction::from_poly(SparsePoly::zero()));
        }
        let (num, den) = if den.is_constant() { (num, den) } else { cancel_common(&num, &den) };
        let (den_pp, den_content) = primitive_part(&den)?;
        Ok(PolyFraction { num: num.scale(&den_content.recip()), den: den_pp })
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        PolyFraction { num: p, den: SparsePoly::one() }
    }

    pub fn num(&self) -> &SparsePoly {
        &self.num
    }

    pub fn den(&self) -> &SparsePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator when the denominator is `1`.
    pub fn as_poly(&self) -> Option<&SparsePoly> {
        self.den.is_one_poly().then_some(&self.num)
    }

    pub fn add(&self, o: &PolyFraction) -> PolyFraction {
        if self.den == o.den {
            return PolyFraction::new(&self.num + &o.num, self.den.clone()).expect("nonzero den");
        }
        PolyFraction::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
            .expect("nonzero den")
    }

    pub fn neg(&self) -> PolyFraction {
        PolyFraction { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &PolyFraction) -> PolyFraction {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &PolyFraction) -> PolyFraction {
        PolyFraction::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero den")
    }

    pub fn div(&self, o: &PolyFraction) -> Result<PolyFraction, AlgebraError> {
        if o.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        PolyFraction::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// Formal derivative by the quotient rule.
    pub fn differentiate(&self, v: Var) -> PolyFraction {
        let num = &self.num.differentiate(v) * &self.den - &self.num * &self.den.differentiate(v);
        PolyFraction::new(num, &self.den * &self.den).expect("nonzero den")
    }
}

impl SparsePoly {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }
}

/// Replaces `v` by `value` in `pol`; the result is reduced.
///
/// With `value = u/w` and `d = deg_v pol`, the numerator is assembled as
/// `sum_k c_k u^k w^(d-k)` over the single denominator `w^d`.
pub fn substitute(pol: &SparsePoly, v: Var, value: &PolyFraction) -> PolyFraction {
    let coeffs = pol.to_univariate(v);
    if coeffs.len() <= 1 {
        return PolyFraction::from_poly(pol.clone());
    }
    let d = coeffs.len() - 1;
    if value.den.is_one_poly() {
        return PolyFraction::from_poly(pol.compose(v, &value.num));
    }
    let mut num = SparsePoly::zero();
    let mut u_pow = SparsePoly::one();
    let w_pows: Vec<SparsePoly> = std::iter::successors(Some(SparsePoly::one()), |p| Some(p * &value.den))
        .take(d + 1)
        .collect();
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            num = num + &(c * &u_pow) * &w_pows[d - k];
        }
        if k < d {
            u_pow = &u_pow * &value.num;
        }
    }
    PolyFraction::new(num, w_pows[d].clone()).expect("nonzero den")
}

impl From<SparsePoly> for PolyFraction {
    fn from(p: SparsePoly) -> Self {
        PolyFraction::from_poly(p)
    }
}

impl fmt::Display for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(s: &str) -> SparsePoly {
        s.parse().unwrap()
    }

    #[test]
    fn substitute_shift() {
        let r = substitute(&p("1*H^2 + -1"), Var::H, &PolyFraction::from_poly(p("1*ALPHA^1 + 1")));
        assert_eq!(r.as_poly().unwrap(), &p("1*ALPHA^2 + 2*ALPHA^1"));
    }

    #[test]
    fn substitute_constant_denominator_folds() {
        // T stands for beta = (15H/2 - 2 alpha)/2 at n = 5, p = 3
        let beta = PolyFraction::new(p("15/2*H^1 + -2*ALPHA^1"), SparsePoly::from_int(2)).unwrap();
        let r = substitute(&p("1*A^1*B^1 + 1*ALPHA^1*T^1 + 1*C^1"), Var::T, &beta);
        let expect = p("4*A^1*B^1 + 15*H^1*ALPHA^1 + -4*ALPHA^2 + 4*C^1").scale(&rat(1, 4));
        assert_eq!(r.as_poly().unwrap(), &expect);
    }

    #[test]
    fn substitute_rational_function_reduces() {
        let v = PolyFraction::new(p("1*ALPHA^2"), p("1*ALPHA^1")).unwrap();
        assert_eq!(v.as_poly().unwrap(), &p("1*ALPHA^1"));
        let w = PolyFraction::new(p("1*ALPHA^1 + 1"), p("1*H^1")).unwrap();
        let r = substitute(&p("1*H^1*T^2 + -1*T^1"), Var::T, &w);
        // H (a+1)^2 / H^2 - (a+1)/H = ((a+1)^2 - (a+1)) / H = (a^2 + a) / H
        assert_eq!(r.num(), &p("1*ALPHA^2 + 1*ALPHA^1"));
        assert_eq!(r.den(), &p("1*H^1"));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            PolyFraction::new(SparsePoly::one(), SparsePoly::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }
}
