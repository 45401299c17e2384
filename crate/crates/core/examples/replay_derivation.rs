//! Replays each derivation step of one instance under both transcriptions
//! and prints the step table.
//!
//!     cargo run --example replay_derivation -- 6 4 -1

use biharm::system::{Curvature, EquationSet, InstanceParams, Transcription};
use biharm::verify::replay_steps;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (n, p, c) = match args.as_slice() {
        [n, p, c] => (*n as u32, *p as u32, *c),
        _ => (6, 4, -1),
    };
    let params = InstanceParams::new(n, p, Curvature::from_int(c)).expect("valid instance");
    for t in [Transcription::printed(&params), Transcription::reconciled(&params)] {
        let eq = EquationSet::build(&params, &t);
        println!("{params} [{:?}]", t.kind());
        for s in replay_steps(&eq) {
            let note = s.note.as_deref().unwrap_or("");
            println!("  {:<10} {:<15} {note}", s.name, s.status.as_str());
        }
    }
}
