use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{format_rational, BigRational, SparsePoly, Var};

/// Largest dimension accepted; keeps closed-form coefficients inside `i128`.
pub const MAX_N: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("n = {0} violates n >= 4")]
    DimensionTooSmall(u32),
    #[error("n = {0} exceeds the supported maximum {MAX_N}")]
    DimensionTooLarge(u32),
    #[error("p = {p} violates ceil((n+1)/2) = {lo} <= p (which also gives p-1 >= 2)")]
    IndexTooSmall { p: u32, lo: u32 },
    #[error("p = {p} violates p <= n-1 = {hi}")]
    IndexTooLarge { p: u32, hi: u32 },
}

/// Ambient sectional curvature: a concrete rational, or the ring variable `C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curvature {
    Value(BigRational),
    Symbolic,
}

impl Curvature {
    pub fn from_int(c: i64) -> Self {
        Curvature::Value(BigRational::from_integer(c.into()))
    }

    pub fn as_poly(&self) -> SparsePoly {
        match self {
            Curvature::Value(c) => SparsePoly::constant(c.clone()),
            Curvature::Symbolic => SparsePoly::var(Var::C),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Curvature::Symbolic)
    }

    pub fn value(&self) -> Option<&BigRational> {
        match self {
            Curvature::Value(c) => Some(c),
            Curvature::Symbolic => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value().is_some_and(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.value().is_some_and(One::is_one)
    }
}

impl fmt::Display for Curvature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curvature::Value(c) => f.write_str(&format_rational(c)),
            Curvature::Symbolic => f.write_str("symbolic"),
        }
    }
}

impl Serialize for Curvature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Validated instance: `n >= 4`, `ceil((n+1)/2) <= p <= n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InstanceParams {
    n: u32,
    p: u32,
    c: Curvature,
}

impl InstanceParams {
    pub fn new(n: u32, p: u32, c: Curvature) -> Result<Self, ParamError> {
        if n < 4 {
            return Err(ParamError::DimensionTooSmall(n));
        }
        if n > MAX_N {
            return Err(ParamError::DimensionTooLarge(n));
        }
        let lo = Self::min_p(n);
        if p < lo {
            return Err(ParamError::IndexTooSmall { p, lo });
        }
        if p > n - 1 {
            return Err(ParamError::IndexTooLarge { p, hi: n - 1 });
        }
        Ok(InstanceParams { n, p, c })
    }

    /// `ceil((n+1)/2)`.
    pub fn min_p(n: u32) -> u32 {
        (n + 2) / 2
    }

    /// Admissible `p` for dimension `n`, increasing.
    pub fn admissible_p(n: u32) -> std::ops::RangeInclusive<u32> {
        Self::min_p(n)..=n.saturating_sub(1)
    }

    /// The default sweep grid in `(n, p, c)` order.
    pub fn grid(n_min: u32, n_max: u32, cs: &[Curvature]) -> Result<Vec<InstanceParams>, ParamError> {
        let mut out = Vec::new();
        for n in n_min..=n_max {
            for p in Self::admissible_p(n) {
                for c in cs {
                    out.push(InstanceParams::new(n, p, c.clone())?);
                }
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn c(&self) -> &Curvature {
        &self.c
    }

    pub fn ni(&self) -> i128 {
        self.n as i128
    }

    pub fn pi(&self) -> i128 {
        self.p as i128
    }

    /// `n - p = 1`: the only case with a single `beta` direction.
    pub fn is_case_b(&self) -> bool {
        self.n - self.p == 1
    }

    pub fn with_c(&self, c: Curvature) -> Self {
        InstanceParams { c, ..self.clone() }
    }
}

impl fmt::Display for InstanceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, p={}, c={})", self.n, self.p, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(InstanceParams::new(4, 3, Curvature::from_int(1)).is_ok());
        assert_eq!(
            InstanceParams::new(4, 2, Curvature::from_int(1)),
            Err(ParamError::IndexTooSmall { p: 2, lo: 3 })
        );
        assert_eq!(
            InstanceParams::new(5, 5, Curvature::from_int(1)),
            Err(ParamError::IndexTooLarge { p: 5, hi: 4 })
        );
        assert_eq!(InstanceParams::new(3, 2, Curvature::Symbolic), Err(ParamError::DimensionTooSmall(3)));
    }

    #[test]
    fn grid_counts() {
        let cs = [Curvature::from_int(1), Curvature::from_int(0), Curvature::from_int(-1)];
        assert_eq!(InstanceParams::grid(4, 4, &cs).unwrap().len(), 3);
        let pairs: usize = (4..=12).map(|n| InstanceParams::admissible_p(n).count()).sum();
        assert_eq!(pairs, 29);
        assert_eq!(InstanceParams::grid(4, 12, &cs).unwrap().len(), 87);
    }
}
