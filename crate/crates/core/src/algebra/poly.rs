use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::rational::{format_rational, int, parse_rational, pow, BigRational};
use super::var::{Monomial, Var, NVARS};
use super::AlgebraError;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a `BTreeMap` keyed by graded-lex [`Monomial`], so
/// iteration is ascending and the leading term is the last entry. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigRational>,
}

/// Arithmetic selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &SparsePoly, b: &SparsePoly, op: ArithOp) -> SparsePoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(BigRational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in it {
            add_into(&mut terms, m, c);
        }
        SparsePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&Monomial::ONE).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v) as u32).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.contains_var(v)).collect()
    }

    /// Total degree counting only the listed variables.
    pub fn degree_in_vars(&self, vars: &[Var]) -> u32 {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|&v| m.exp(v) as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut result = SparsePoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative.
    pub fn differentiate(&self, v: Var) -> SparsePoly {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(v);
            (e > 0).then(|| (m.with_exp(v, e - 1), c * int(e as i64)))
        });
        SparsePoly::from_terms(terms)
    }

    /// The polynomial in the remaining variables multiplying `v^k`.
    pub fn coefficient_of(&self, v: Var, k: u32) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) as u32 == k)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Dense coefficient list in `v` (index = power of `v`).
    pub fn to_univariate(&self, v: Var) -> Vec<SparsePoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out = vec![SparsePoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out[e].terms.insert(m.with_exp(v, 0), c.clone());
        }
        out
    }

    pub fn from_univariate(v: Var, coeffs: &[SparsePoly]) -> SparsePoly {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                debug_assert_eq!(m.exp(v), 0);
                terms.insert(m.with_exp(v, k as u16), x.clone());
            }
        }
        SparsePoly { terms }
    }

    /// Replaces `v` by a rational constant.
    pub fn eval(&self, v: Var, value: &BigRational) -> SparsePoly {
        let deg = self.degree_in(v);
        let powers: Vec<BigRational> = (0..=deg).map(|k| pow(value, k)).collect();
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exp(v) as usize;
            (m.with_exp(v, 0), c * &powers[e])
        }))
    }

    /// Replaces each listed variable by its value.
    pub fn eval_many(&self, values: &[(Var, BigRational)]) -> SparsePoly {
        values.iter().fold(self.clone(), |p, (v, x)| p.eval(*v, x))
    }

    /// Replaces `v` by a polynomial.
    pub fn compose(&self, v: Var, value: &SparsePoly) -> SparsePoly {
        let coeffs = self.to_univariate(v);
        // Horner
        let mut acc = SparsePoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Exact quotient `self / d`; errors when the division leaves a remainder.
    pub fn div_exact(&self, d: &SparsePoly) -> Result<SparsePoly, AlgebraError> {
        let (lm, lc) = match d.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(AlgebraError::DivisionByZero),
        };
        if d.terms.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.div(&lm).ok_or(AlgebraError::NotDivisible)?;
                terms.insert(q, c / &lc);
            }
            return Ok(SparsePoly { terms });
        }
        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let qm = m.div(&lm).ok_or(AlgebraError::NotDivisible)?;
            let qc = &c / &lc;
            for (dm, dc) in &d.terms {
                add_into(&mut rem, qm.mul(dm), -(&qc * dc));
            }
            debug_assert!(!rem.contains_key(&m));
            quot.insert(qm, qc);
        }
        Ok(SparsePoly { terms: quot })
    }

    pub fn map_coeffs<F: FnMut(&BigRational) -> BigRational>(&self, mut f: F) -> SparsePoly {
        SparsePoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Fully evaluates; every variable present must be listed.
    pub fn eval_point(&self, values: &[(Var, BigRational)]) -> Result<BigRational, AlgebraError> {
        let p = self.eval_many(values);
        if p.is_constant() {
            Ok(p.constant_term())
        } else {
            Err(AlgebraError::Unevaluated(p.vars()))
        }
    }
}

fn add_into(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl<'a> Add<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            add_into(&mut terms, *m, c.clone());
        }
        SparsePoly { terms }
    }
}

impl<'a> Sub<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut terms, *m, -c.clone());
        }
        SparsePoly { terms }
    }
}

impl<'a> Mul<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                add_into(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        SparsePoly { terms }
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: SparsePoly) -> SparsePoly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: &SparsePoly) -> SparsePoly { (&self).$f(rhs) }
        }
        impl<'a> $tr<SparsePoly> for &'a SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: SparsePoly) -> SparsePoly { self.$f(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl From<BigRational> for SparsePoly {
    fn from(c: BigRational) -> Self {
        SparsePoly::constant(c)
    }
}

impl From<Var> for SparsePoly {
    fn from(v: Var) -> Self {
        SparsePoly::var(v)
    }
}

/// Canonical text form: terms from the leading term down, each written
/// `coeff*VAR^e*...` (only nonzero exponents), joined by ` + `. Negative
/// coefficients stay in the coefficient, so `H - 1` prints as `1*H^1 + -1`.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str(&format_rational(c))?;
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    write!(f, "*{}^{}", v.name(), e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

impl FromStr for SparsePoly {
    type Err = AlgebraError;

    /// Parses the canonical text form. Terms may appear in any order and
    /// variables may omit `^1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(SparsePoly::zero());
        }
        let mut terms = Vec::new();
        for term in s.split(" + ") {
            let mut parts = term.trim().split('*');
            let coeff = parse_rational(parts.next().unwrap_or(""))?;
            let mut exps = [0u16; NVARS];
            for factor in parts {
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u16>()
                            .map_err(|_| AlgebraError::Parse(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                let v: Var = name.parse()?;
                exps[v.index()] += e;
            }
            terms.push((Monomial::from_exponents(exps), coeff));
        }
        Ok(SparsePoly::from_terms(terms))
    }
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
    fn arithmetic_examples() {
        assert_eq!(poly_arith(&(h() + al()), &(h() - al()), ArithOp::Add), k(2) * h());
        assert_eq!(poly_arith(&(h() + k(1)), &(h() - k(1)), ArithOp::Mul), h().pow(2) - k(1));
        let lhs = k(2) * h().pow(2) * al();
        assert_eq!(poly_arith(&lhs, &(k(3) * al()), ArithOp::Mul), k(6) * h().pow(2) * al().pow(2));
        assert!(poly_arith(&lhs, &lhs, ArithOp::Sub).is_zero());
    }

    #[test]
    fn differentiate_examples() {
        let p = h().pow(2) * al().pow(3);
        assert_eq!(p.differentiate(Var::Alpha), k(3) * h().pow(2) * al().pow(2));
        assert!(SparsePoly::var(Var::C).differentiate(Var::H).is_zero());
    }

    #[test]
    fn coefficient_of_examples() {
        let p = k(3) * h().pow(2) * al() + k(5) * al();
        assert_eq!(p.coefficient_of(Var::Alpha, 1), k(3) * h().pow(2) + k(5));
        assert!(p.coefficient_of(Var::Alpha, p.degree_in(Var::Alpha) + 1).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = (h() - k(1)) * (h() + al());
        assert_eq!(a.div_exact(&(h() - k(1))).unwrap(), h() + al());
        assert_eq!(a.div_exact(&(h() + k(2))), Err(AlgebraError::NotDivisible));
        assert_eq!((k(3) * h()).div_exact(&k(2)).unwrap(), SparsePoly::constant(rat(3, 2)) * h());
    }

    #[test]
    fn text_form() {
        let p = SparsePoly::constant(rat(-5, 2)) * h().pow(3) * al() + k(4) * SparsePoly::var(Var::C) - k(1);
        assert_eq!(p.to_string(), "-5/2*H^3*ALPHA^1 + 4*C^1 + -1");
        assert_eq!(p.to_string().parse::<SparsePoly>().unwrap(), p);
        assert_eq!("2*H*ALPHA + 1".parse::<SparsePoly>().unwrap(), k(2) * h() * al() + k(1));
        assert_eq!(SparsePoly::zero().to_string(), "0");
    }

    #[test]
    fn compose_and_eval() {
        let p = h().pow(2) - k(1);
        assert_eq!(p.compose(Var::H, &(al() + k(1))), al().pow(2) + k(2) * al());
        assert_eq!(p.eval(Var::H, &rat(1, 2)), SparsePoly::constant(rat(-3, 4)));
    }
}
