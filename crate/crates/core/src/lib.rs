//! Exact-arithmetic audit of the elimination argument showing that
//! biharmonic hypersurfaces with at most three distinct principal
//! curvatures have constant mean curvature.
//!
//! [`algebra`] is the polynomial kernel, [`system`] builds the named
//! polynomials of one instance `(n, p, c)`, [`verify`] replays the
//! derivation and eliminates `alpha`, [`hypersurface`] checks the
//! classification examples, and [`report`] with [`sweep`] and [`cli`]
//! turn all of it into deterministic reports.

pub mod algebra;
pub mod cli;
pub mod hypersurface;
pub mod report;
pub mod sweep;
pub mod system;
pub mod verify;
