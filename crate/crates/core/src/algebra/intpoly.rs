//! Dense univariate polynomials with integer coefficients.
//!
//! When the curvature is instantiated, every coefficient met while
//! eliminating `alpha` is an integer polynomial in `H` alone. This ring
//! carries those coefficients without per-operation rational normalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::SparsePoly;
use super::rational::BigRational;
use super::ring::Ring;
use super::var::{Monomial, Var};
use super::AlgebraError;

/// Coefficients by ascending power; never has a zero top coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `p` as a polynomial in `w` with integer coefficients, if it is one.
    pub fn from_sparse(p: &SparsePoly, w: Var) -> Option<IntPoly> {
        let mut out = vec![BigInt::zero(); p.degree_in(w) as usize + 1];
        for (m, c) in p.terms() {
            if m.total_degree() != m.exp(w) as u32 || !c.denom().is_one() {
                return None;
            }
            out[m.exp(w) as usize] = c.numer().clone();
        }
        Some(IntPoly::new(out))
    }

    pub fn to_sparse(&self, w: Var) -> SparsePoly {
        SparsePoly::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var(w, k as u16), BigRational::from_integer(c.clone()))),
        )
    }
}

impl Ring for IntPoly {
    fn zero() -> Self {
        IntPoly(Vec::new())
    }

    fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.0.len() >= o.0.len() { (self, o) } else { (o, self) };
        let mut out = long.0.clone();
        for (x, y) in out.iter_mut().zip(&short.0) {
            *x += y;
        }
        IntPoly::new(out)
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPoly::new(out)
    }

    fn neg(&self) -> Self {
        IntPoly(self.0.iter().map(|x| -x).collect())
    }

    fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(ds) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if ds < dd {
            return Err(AlgebraError::NotDivisible);
        }
        let lc = &d.0[dd];
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            for (i, dc) in d.0.iter().enumerate() {
                rem[k + i] -= &qk * dc;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = ip(&[-1, 0, 1]);
        let b = ip(&[1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), ip(&[-1, 1]));
        assert_eq!(b.mul(&ip(&[-1, 1])), a);
        assert_eq!(a.div_exact(&ip(&[2, 1])), Err(AlgebraError::NotDivisible));
        assert_eq!(ip(&[2, 4]).div_exact(&ip(&[3])), Err(AlgebraError::NotDivisible));
        assert!(a.sub(&a).is_zero());
        assert_eq!(b.pow(3), ip(&[1, 3, 3, 1]));
    }

    #[test]
    fn sparse_round_trip() {
        let p: SparsePoly = "3*H^4 + -2*H^1 + 7".parse().unwrap();
        let d = IntPoly::from_sparse(&p, Var::H).unwrap();
        assert_eq!(d.to_sparse(Var::H), p);
        assert!(IntPoly::from_sparse(&"1/2*H^1".parse().unwrap(), Var::H).is_none());
        assert!(IntPoly::from_sparse(&"1*H^1*C^1".parse().unwrap(), Var::H).is_none());
    }
}
