//! Perturbs every transcribed coefficient of one instance by +1 and reports
//! which steps newly fail. An empty list would mean the audit is blind to
//! that coefficient.
//!
//!     cargo run --release --example fault_injection -- 5 3 0

use biharm::algebra::{rat, SparsePoly};
use biharm::system::{Curvature, InstanceParams, Transcription};
use biharm::verify::{run_with_transcription, RunOptions};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (n, p, c) = match args.as_slice() {
        [n, p, c] => (*n as u32, *p as u32, *c),
        _ => (5, 3, 0),
    };
    let params = InstanceParams::new(n, p, Curvature::from_int(c)).expect("valid instance");
    let opts = RunOptions { eliminate: false, ..RunOptions::default() };
    let base = Transcription::reconciled(&params);
    let clean = run_with_transcription(&params, &base, &opts);
    let baseline = clean.failed_steps();
    println!("{params} baseline failures: {baseline:?}");
    for (b, i) in base.coefficient_ids() {
        let r = run_with_transcription(&params, &base.perturb(b, i, &rat(1, 1)), &opts);
        let new: Vec<&str> = r.failed_steps().into_iter().filter(|s| !baseline.contains(s)).collect();
        println!("  {b}[{i}] {:<14} -> {new:?}", SparsePoly::term(rat(1, 1), base.entries(b)[i].monomial).to_string());
    }
}
