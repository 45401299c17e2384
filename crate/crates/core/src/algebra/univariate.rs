//! Dense univariate view: a polynomial in one distinguished variable whose
//! coefficients are [`SparsePoly`] values in the remaining variables.

use super::intpoly::IntPoly;
use super::poly::SparsePoly;
use super::ring::Ring;
use super::var::Var;
use super::AlgebraError;

/// Coefficients indexed by power; never has a zero top coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<R = SparsePoly> {
    var: Var,
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(var: Var, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the distinguished variable; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> UniPoly<R> {
        UniPoly::new(self.var, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> UniPoly<R> {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly::new(self.var, coeffs)
    }

    pub fn sub(&self, other: &UniPoly<R>) -> UniPoly<R> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect();
        UniPoly::new(self.var, coeffs)
    }

    pub fn div_exact_scalar(&self, d: &R) -> Result<UniPoly<R>, AlgebraError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div_exact(d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::new(self.var, coeffs))
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.var, self.coeffs.iter().map(f).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    ///
    /// Each round cancels the current top coefficient against `d`, one
    /// degree at a time; exactly `deg self - deg d + 1` multiplications by
    /// `lc(d)` are performed, even when a round finds a zero coefficient.
    pub fn prem(&self, d: &UniPoly<R>) -> Result<UniPoly<R>, AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(ds) = self.degree() else {
            return Ok(self.clone());
        };
        if ds < dd {
            return Ok(self.clone());
        }
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        for top in (dd..=ds).rev() {
            let t = std::mem::replace(&mut r[top], R::zero());
            for c in r.iter_mut().take(top) {
                *c = c.mul(&lc);
            }
            if !t.is_zero() {
                let shift = top - dd;
                for (k, dc) in d.coeffs.iter().enumerate().take(dd) {
                    r[k + shift] = r[k + shift].sub(&t.mul(dc));
                }
            }
            r.truncate(top);
        }
        Ok(UniPoly::new(self.var, r))
    }
}

impl UniPoly<SparsePoly> {
    pub fn from_poly(p: &SparsePoly, var: Var) -> Self {
        UniPoly::new(var, p.to_univariate(var))
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::from_univariate(self.var, &self.coeffs)
    }

    /// The single variable other than the main one, when every coefficient
    /// is an integer polynomial in it (`H` when all are constants).
    pub fn dense_var(&self) -> Option<Var> {
        let mut found = None;
        for c in &self.coeffs {
            for v in c.vars() {
                match found {
                    None => found = Some(v),
                    Some(w) if w != v => return None,
                    _ => {}
                }
            }
        }
        let w = found.unwrap_or(if self.var == Var::H { Var::Alpha } else { Var::H });
        self.coeffs.iter().all(|c| IntPoly::from_sparse(c, w).is_some()).then_some(w)
    }

    pub fn to_dense(&self, w: Var) -> Option<UniPoly<IntPoly>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| IntPoly::from_sparse(c, w))
            .collect::<Option<Vec<_>>>()?;
        Some(UniPoly::new(self.var, coeffs))
    }
}

impl UniPoly<IntPoly> {
    pub fn to_sparse(&self, w: Var) -> UniPoly<SparsePoly> {
        self.map(|c| c.to_sparse(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> SparsePoly {
        SparsePoly::var(Var::Alpha)
    }
    fn k(c: i64) -> SparsePoly {
        SparsePoly::from_int(c)
    }

    #[test]
    fn prem_matches_hand_division() {
        // (x^2 - 1) prem (2x - 2): lc^2 * (x^2 - 1) = 4x^2 - 4 = (2x-2)(2x+2) + 0
        let a = UniPoly::from_poly(&(x().pow(2) - k(1)), Var::Alpha);
        let b = UniPoly::from_poly(&(k(2) * x() - k(2)), Var::Alpha);
        assert!(a.prem(&b).unwrap().is_zero());
        // (x^2 + 1) prem (x + 2) = 5
        let a = UniPoly::from_poly(&(x().pow(2) + k(1)), Var::Alpha);
        let b = UniPoly::from_poly(&(x() + k(2)), Var::Alpha);
        assert_eq!(a.prem(&b).unwrap().to_poly(), k(5));
    }

    #[test]
    fn prem_with_polynomial_leading_coefficient() {
        let h = SparsePoly::var(Var::H);
        // a = x^2, d = h x + 1 -> h^2 x^2 = (h x + 1)(h x - 1) + 1
        let a = UniPoly::from_poly(&x().pow(2), Var::Alpha);
        let d = UniPoly::from_poly(&(&h * &x() + k(1)), Var::Alpha);
        assert_eq!(a.prem(&d).unwrap().to_poly(), k(1));
    }
}
