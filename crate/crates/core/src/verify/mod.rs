//! Replays of the derivation, the final elimination of `alpha`, and the
//! per-instance driver.

mod caseb;
mod derivation;
mod eliminate;
mod instance;
mod replay;
mod step;

pub use caseb::{verify_case_b, CaseB};
pub use derivation::FormalDerivation;
pub use eliminate::{
    eliminate_alpha, Agreement, Elimination, EliminationError, EliminationTrace, Strategy, TraceEntry,
};
pub use instance::{
    overall_status, replay_steps, run_instance, run_with_transcription, A90Check, DerivationReport, EliminantSummary,
    RunOptions, P2_POINTS,
};
pub use replay::{
    eq350_replay, eq350_target, h1_in_ab, replace_ab, verify_e1h, verify_eq346, verify_eq347_348,
    verify_eq350,
};
pub use step::{compare_up_to_scale, ScaledMatch, StepReport, StepStatus};
