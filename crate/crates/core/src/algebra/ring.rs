//! The coefficient ring interface used by remainder sequences.

use std::fmt::Debug;

use super::poly::SparsePoly;
use super::AlgebraError;

/// An integral domain with exact division, as needed by pseudo-division
/// and subresultant sequences.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d`, failing when `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError>;

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for SparsePoly {
    fn zero() -> Self {
        SparsePoly::zero()
    }
    fn one() -> Self {
        SparsePoly::one()
    }
    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError> {
        SparsePoly::div_exact(self, d)
    }
    fn pow(&self, e: u32) -> Self {
        SparsePoly::pow(self, e)
    }
}
