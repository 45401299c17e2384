//! Biharmonicity of the isoparametric candidates: hyperspheres and
//! Clifford products in the unit sphere, and their behaviour when the
//! ambient curvature is not positive.
//!
//! Curvatures are carried as `lambda^2` with a separate sign, so `trace A^2`
//! is rational. Whether `H = 0` is decided from squares: the profiles here
//! have at most one entry of each sign, and `m1 sqrt(x1) = m2 sqrt(x2)` iff
//! `m1^2 x1 = m2^2 x2`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{format_rational, rat, BigRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypersurfaceError {
    #[error("degenerate radius")]
    DegenerateRadius,
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("no proper biharmonic radius")]
    NoProperRadius,
    #[error("the radius family is modelled in the unit sphere only (c = 1)")]
    NonUnitSphere,
    #[error("use check_biharmonic")]
    PositiveCurvature,
    #[error("H = 0 is undecidable from squares for this profile")]
    Undecidable,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum HypersurfaceSpec {
    /// `S^n(a)` with `a2 = a^2`.
    Hypersphere { n: u32, a2: BigRational },
    /// `S^n1(a) x S^n2(b)` with `a2 = a^2`, `b^2 = 1 - a2`.
    CliffordProduct { n1: u32, n2: u32, a2: BigRational },
}

impl HypersurfaceSpec {
    pub fn hypersphere(n: u32, a2: BigRational) -> Self {
        HypersurfaceSpec::Hypersphere { n, a2 }
    }

    pub fn clifford(n1: u32, n2: u32, a2: BigRational) -> Self {
        HypersurfaceSpec::CliffordProduct { n1, n2, a2 }
    }

    pub fn dimension(&self) -> u32 {
        match self {
            HypersurfaceSpec::Hypersphere { n, .. } => *n,
            HypersurfaceSpec::CliffordProduct { n1, n2, .. } => n1 + n2,
        }
    }
}

impl fmt::Display for HypersurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypersurfaceSpec::Hypersphere { n, a2 } => write!(f, "hypersphere(n={n}, a2={})", format_rational(a2)),
            HypersurfaceSpec::CliffordProduct { n1, n2, a2 } => {
                write!(f, "clifford(n1={n1}, n2={n2}, a2={})", format_rational(a2))
            }
        }
    }
}

impl Serialize for HypersurfaceSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub lambda_squared: BigRational,
    /// `+1` or `-1`.
    pub sign: i8,
    pub multiplicity: u32,
}

/// Invariants: multiplicities sum to `n`; `trace_a2 >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureProfile {
    pub entries: Vec<ProfileEntry>,
    pub n: u32,
    pub trace_a2: BigRational,
}

impl CurvatureProfile {
    pub fn new(entries: Vec<ProfileEntry>) -> Self {
        let n = entries.iter().map(|e| e.multiplicity).sum();
        let trace_a2 = entries
            .iter()
            .fold(BigRational::zero(), |t, e| t + &e.lambda_squared * BigRational::from_integer(e.multiplicity.into()));
        CurvatureProfile { entries, n, trace_a2 }
    }

    /// Whether `sum sign * multiplicity * sqrt(lambda^2)` vanishes.
    pub fn h_is_zero(&self) -> Result<bool, HypersurfaceError> {
        let side = |sign: i8| -> Result<BigRational, HypersurfaceError> {
            // (multiplicity * lambda)^2 of the only nonzero entry of this sign.
            let mut nonzero = self.entries.iter().filter(|e| e.sign == sign && !e.lambda_squared.is_zero());
            match (nonzero.next(), nonzero.next()) {
                (None, _) => Ok(BigRational::zero()),
                (Some(e), None) => {
                    let m = BigRational::from_integer(e.multiplicity.into());
                    Ok(&m * &m * &e.lambda_squared)
                }
                _ => Err(HypersurfaceError::Undecidable),
            }
        };
        Ok(side(1)? == side(-1)?)
    }
}

fn check_a2(a2: &BigRational, allow_one: bool) -> Result<(), HypersurfaceError> {
    if a2.is_zero() || (!allow_one && a2.is_one()) {
        return Err(HypersurfaceError::DegenerateRadius);
    }
    if a2.is_negative() || *a2 > BigRational::one() {
        return Err(HypersurfaceError::InvalidSpec(format!("a2 = {} outside (0, 1]", format_rational(a2))));
    }
    Ok(())
}

/// Hyperspheres have `lambda^2 = (1-a2)/a2` with multiplicity `n`; the
/// Clifford second factor carries the negative curvature `a2/(1-a2)`.
pub fn curvature_profile(spec: &HypersurfaceSpec) -> Result<CurvatureProfile, HypersurfaceError> {
    let one = BigRational::one();
    match spec {
        HypersurfaceSpec::Hypersphere { n, a2 } => {
            check_a2(a2, true)?;
            if *n == 0 {
                return Err(HypersurfaceError::InvalidSpec("n = 0".into()));
            }
            Ok(CurvatureProfile::new(vec![ProfileEntry {
                lambda_squared: (&one - a2) / a2,
                sign: 1,
                multiplicity: *n,
            }]))
        }
        HypersurfaceSpec::CliffordProduct { n1, n2, a2 } => {
            check_a2(a2, false)?;
            if *n1 == 0 || *n2 == 0 {
                return Err(HypersurfaceError::InvalidSpec("factor dimension 0".into()));
            }
            Ok(CurvatureProfile::new(vec![
                ProfileEntry { lambda_squared: (&one - a2) / a2, sign: 1, multiplicity: *n1 },
                ProfileEntry { lambda_squared: a2 / (&one - a2), sign: -1, multiplicity: *n2 },
            ]))
        }
    }
}

/// Invariant: `is_proper_biharmonic` implies `is_cmc && !is_minimal`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiharmonicVerdict {
    pub is_cmc: bool,
    pub is_minimal: bool,
    pub is_proper_biharmonic: bool,
    pub witness: String,
}

fn is_standard(c: &BigRational) -> bool {
    [rat(1, 1), rat(0, 1), rat(-1, 1)].contains(c)
}

/// For a CMC hypersurface the system reduces to `H (trace A^2 - n c) = 0`.
pub fn check_biharmonic(spec: &HypersurfaceSpec, c: &BigRational) -> Result<BiharmonicVerdict, HypersurfaceError> {
    let profile = curvature_profile(spec)?;
    let nc = BigRational::from_integer(profile.n.into()) * c;
    let suffix = if is_standard(c) { "" } else { " (nonstandard c)" };
    let t = format_rational(&profile.trace_a2);
    if profile.h_is_zero()? {
        return Ok(BiharmonicVerdict {
            is_cmc: true,
            is_minimal: true,
            is_proper_biharmonic: false,
            witness: format!("H = 0{suffix}"),
        });
    }
    let proper = profile.trace_a2 == nc;
    let witness = if proper {
        format!("H != 0 and trace A^2 = {t} = nc{suffix}")
    } else {
        format!("H != 0 and trace A^2 = {t} != {} = nc{suffix}", format_rational(&nc))
    };
    Ok(BiharmonicVerdict { is_cmc: true, is_minimal: false, is_proper_biharmonic: proper, witness })
}

/// The squared radius `a2` of the proper biharmonic hypersphere: the
/// solution of `(1 - a2)/a2 = c`.
pub fn solve_biharmonic_radius(n: u32, c: &BigRational) -> Result<BigRational, HypersurfaceError> {
    if !c.is_positive() {
        return Err(HypersurfaceError::NoProperRadius);
    }
    if !c.is_one() {
        return Err(HypersurfaceError::NonUnitSphere);
    }
    if n == 0 {
        return Err(HypersurfaceError::InvalidSpec("n = 0".into()));
    }
    // trace A^2 = n (1 - a2)/a2 = n c is linear in 1/a2.
    Ok((BigRational::one() + c).recip())
}

/// With `c <= 0`: `trace A^2 >= 0 >= nc`, so `H (trace A^2 - nc) = 0` forces
/// `H = 0`, or `trace A^2 = 0 = c`, which gives all `lambda = 0` and again `H = 0`.
pub fn nonpositive_ambient_verdict(
    profile: &CurvatureProfile,
    c: &BigRational,
) -> Result<BiharmonicVerdict, HypersurfaceError> {
    if c.is_positive() {
        return Err(HypersurfaceError::PositiveCurvature);
    }
    let nc = BigRational::from_integer(profile.n.into()) * c;
    let minimal = profile.h_is_zero()?;
    let witness = if minimal {
        "H = 0".to_string()
    } else if profile.trace_a2.is_zero() {
        "trace A^2 = 0 forces every lambda = 0, contradicting H != 0".to_string()
    } else {
        format!("trace A^2 = {} > {} = nc", format_rational(&profile.trace_a2), format_rational(&nc))
    };
    Ok(BiharmonicVerdict { is_cmc: true, is_minimal: minimal, is_proper_biharmonic: false, witness })
}

/// Known class of a row of the classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Proper,
    Minimal,
    NotBiharmonic,
}

impl Expected {
    pub fn of(v: &BiharmonicVerdict) -> Expected {
        if v.is_proper_biharmonic {
            Expected::Proper
        } else if v.is_minimal {
            Expected::Minimal
        } else {
            Expected::NotBiharmonic
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleRow {
    pub spec: HypersurfaceSpec,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub c: BigRational,
    pub is_cmc: bool,
    pub is_minimal: bool,
    pub is_proper_biharmonic: bool,
    pub witness: String,
    pub expected: Expected,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Golden data: at `c = 1` only the radius `1/sqrt 2` is proper, Clifford
/// products are proper exactly when `n1 != n2`; the great sphere and the
/// balanced product are minimal; nothing is proper when `c <= 0`.
pub fn expected_class(spec: &HypersurfaceSpec, c: &BigRational) -> Expected {
    let half = rat(1, 2);
    let proper_allowed = c.is_one();
    match spec {
        HypersurfaceSpec::Hypersphere { a2, .. } if a2.is_one() => Expected::Minimal,
        HypersurfaceSpec::Hypersphere { a2, .. } if *a2 == half && proper_allowed => Expected::Proper,
        HypersurfaceSpec::CliffordProduct { n1, n2, a2 } if *a2 == half && n1 == n2 => Expected::Minimal,
        HypersurfaceSpec::CliffordProduct { a2, .. } if *a2 == half && proper_allowed => Expected::Proper,
        _ => Expected::NotBiharmonic,
    }
}

pub fn radius_sweep(n: u32) -> Vec<HypersurfaceSpec> {
    (1..=19).map(|k| HypersurfaceSpec::hypersphere(n, rat(k, 20))).collect()
}

/// Every `(n1, n2)` with `n1, n2 >= 1`, `n1 + n2 <= max_n`, at `a2 = 1/2`.
pub fn clifford_table(max_n: u32) -> Vec<HypersurfaceSpec> {
    let mut out = Vec::new();
    for n1 in 1..max_n {
        for n2 in 1..=max_n - n1 {
            out.push(HypersurfaceSpec::clifford(n1, n2, rat(1, 2)));
        }
    }
    out
}

/// Dimensions used for the hypersphere radius sweep.
pub const SWEEP_DIMENSIONS: std::ops::RangeInclusive<u32> = 2..=12;
/// Largest `n1 + n2` in the Clifford table.
pub const CLIFFORD_MAX_N: u32 = 12;

/// The verdict table for the given curvatures, hyperspheres first.
pub fn classification_table(cs: &[BigRational]) -> Result<Vec<ExampleRow>, HypersurfaceError> {
    let mut specs: Vec<HypersurfaceSpec> = SWEEP_DIMENSIONS.flat_map(radius_sweep).collect();
    specs.push(HypersurfaceSpec::hypersphere(4, rat(1, 1)));
    specs.extend(clifford_table(CLIFFORD_MAX_N));
    let mut rows = Vec::new();
    for c in cs {
        for spec in &specs {
            let v = if c.is_positive() {
                check_biharmonic(spec, c)?
            } else {
                nonpositive_ambient_verdict(&curvature_profile(spec)?, c)?
            };
            let expected = expected_class(spec, c);
            rows.push(ExampleRow {
                spec: spec.clone(),
                c: c.clone(),
                is_cmc: v.is_cmc,
                is_minimal: v.is_minimal,
                is_proper_biharmonic: v.is_proper_biharmonic,
                matches: Expected::of(&v) == expected,
                witness: v.witness,
                expected,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> BigRational {
        rat(1, 1)
    }

    #[test]
    fn profiles() {
        let p = curvature_profile(&HypersurfaceSpec::hypersphere(5, rat(1, 2))).unwrap();
        assert_eq!(p.entries, vec![ProfileEntry { lambda_squared: one(), sign: 1, multiplicity: 5 }]);
        let p = curvature_profile(&HypersurfaceSpec::hypersphere(5, one())).unwrap();
        assert!(p.entries[0].lambda_squared.is_zero());
        let p = curvature_profile(&HypersurfaceSpec::clifford(2, 3, rat(1, 2))).unwrap();
        assert_eq!(p.entries[1], ProfileEntry { lambda_squared: one(), sign: -1, multiplicity: 3 });
        assert_eq!(p.trace_a2, rat(5, 1));
        assert_eq!(
            curvature_profile(&HypersurfaceSpec::clifford(2, 3, one())),
            Err(HypersurfaceError::DegenerateRadius)
        );
        assert_eq!(
            curvature_profile(&HypersurfaceSpec::hypersphere(3, rat(0, 1))),
            Err(HypersurfaceError::DegenerateRadius)
        );
    }

    #[test]
    fn verdicts_at_c_one() {
        let v = check_biharmonic(&HypersurfaceSpec::hypersphere(4, rat(1, 2)), &one()).unwrap();
        assert!(v.is_proper_biharmonic);
        let v = check_biharmonic(&HypersurfaceSpec::clifford(2, 3, rat(1, 2)), &one()).unwrap();
        assert!(v.is_proper_biharmonic);
        let v = check_biharmonic(&HypersurfaceSpec::clifford(2, 2, rat(1, 2)), &one()).unwrap();
        assert!(v.is_minimal && !v.is_proper_biharmonic);
        // trace A^2 = n/3
        let v = check_biharmonic(&HypersurfaceSpec::hypersphere(6, rat(3, 4)), &one()).unwrap();
        assert!(!v.is_minimal && !v.is_proper_biharmonic);
        assert!(v.witness.contains("trace A^2 = 2 != 6"), "{}", v.witness);
    }

    #[test]
    fn clifford_minimal_off_balance() {
        // n1 (1-a2)/a2 = n2 a2/(1-a2) at a2 = n1/(n1+n2)
        let v = check_biharmonic(&HypersurfaceSpec::clifford(1, 3, rat(1, 4)), &one()).unwrap();
        assert!(v.is_minimal);
    }

    #[test]
    fn radius() {
        assert_eq!(solve_biharmonic_radius(3, &one()), Ok(rat(1, 2)));
        assert_eq!(solve_biharmonic_radius(10, &one()), Ok(rat(1, 2)));
        assert_eq!(solve_biharmonic_radius(4, &rat(-1, 1)), Err(HypersurfaceError::NoProperRadius));
    }

    #[test]
    fn nonpositive() {
        let p = curvature_profile(&HypersurfaceSpec::clifford(2, 3, rat(1, 2))).unwrap();
        let v = nonpositive_ambient_verdict(&p, &rat(0, 1)).unwrap();
        assert!(!v.is_proper_biharmonic);
        assert_eq!(v.witness, "trace A^2 = 5 > 0 = nc");
        let flat = CurvatureProfile::new(vec![ProfileEntry { lambda_squared: rat(0, 1), sign: 1, multiplicity: 4 }]);
        assert!(nonpositive_ambient_verdict(&flat, &rat(0, 1)).unwrap().is_minimal);
        assert_eq!(nonpositive_ambient_verdict(&p, &one()), Err(HypersurfaceError::PositiveCurvature));
    }

    #[test]
    fn table_matches_expectations() {
        let rows = classification_table(&[one(), rat(0, 1), rat(-1, 1)]).unwrap();
        assert!(rows.iter().all(|r| r.matches), "{:?}", rows.iter().find(|r| !r.matches));
    }
}
