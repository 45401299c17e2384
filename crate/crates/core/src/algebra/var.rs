use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Number of ring variables.
pub const NVARS: usize = 7;

/// The closed set of ring variables, listed in the fixed global order
/// `H < ALPHA < A < B < C < H1 < T`.
///
/// `H` is the mean curvature, `Alpha` the principal curvature of multiplicity
/// `p - 1`, `A`/`B` the logarithmic derivatives of `alpha`/`beta` along the
/// gradient direction, `C` the ambient curvature, `H1` the derivative of `H`
/// along that direction. `T` is an auxiliary unknown (used as a placeholder
/// by the Case B replay and by substitution tests).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    H,
    Alpha,
    A,
    B,
    C,
    H1,
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::H, Var::Alpha, Var::A, Var::B, Var::C, Var::H1, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::H => "H",
            Var::Alpha => "ALPHA",
            Var::A => "A",
            Var::B => "B",
            Var::C => "C",
            Var::H1 => "H1",
            Var::T => "T",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| AlgebraError::Parse(format!("unknown variable `{s}`")))
    }
}

/// Exponent vector indexed by [`Var`].
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared variable by variable in the global order (a larger `H`
/// exponent wins first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn from_exponents(exps: [u16; NVARS]) -> Self {
        Monomial(exps)
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial(exps)
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables accumulate.
    pub fn from_pairs(pairs: &[(Var, u16)]) -> Self {
        let mut exps = [0; NVARS];
        for &(v, e) in pairs {
            exps[v.index()] += e;
        }
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0.iter()) {
            *o += *e;
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(out))
    }

    pub fn with_exp(&self, v: Var, e: u16) -> Monomial {
        let mut out = self.0;
        out[v.index()] = e;
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e > 0 {
                if !first {
                    f.write_str("*")?;
                }
                write!(f, "{}^{}", v.name(), e)?;
                first = false;
            }
        }
        Ok(())
    }
}
