//! Exact rational arithmetic and the sparse multivariate polynomial ring.

pub mod fraction;
pub mod gcd;
pub mod intpoly;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod univariate;
pub mod var;

use thiserror::Error;

pub use fraction::{substitute, PolyFraction};
pub use intpoly::IntPoly;
pub use ring::Ring;
pub use gcd::{gcd, gcd_poly, primitive_part, squarefree_part};
pub use poly::{poly_arith, ArithOp, SparsePoly};
pub use rational::{format_rational, int, parse_rational, rat, BigRational};
pub use resultant::{resultant, resultant_prs, resultant_sylvester};
pub use univariate::UniPoly;
pub use var::{Monomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: nonzero remainder")]
    NotDivisible,
    #[error("cannot evaluate to a scalar: variables {0:?} left free")]
    Unevaluated(Vec<Var>),
    #[error("gcd undefined")]
    GcdUndefined,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("resultant of a zero polynomial")]
    ZeroResultantInput,
    #[error("resultant strategies disagree: {0}")]
    ResultantMismatch(String),
}
