//! The concrete polynomial system of one instance `(n, p, c)`.
//!
//! Every bracket is materialized from a [`Transcription`]: the printed
//! coefficient table, or the reconciled one whose entries are re-derived
//! by the replay.

mod equations;
mod params;
mod state;
mod transcription;

pub use equations::{
    a09_of, a90_closed_form, a90_of, build_g, build_lmn, build_p1, build_p2, build_s, dh_dalpha,
    quadratic_coefficients, EquationSet, SCandidate, SConvention,
};
pub use params::{Curvature, InstanceParams, ParamError};
pub use state::{excluded_alphas, make_state, CurvatureState};
pub use transcription::{Bracket, Transcription, TranscriptionKind};
