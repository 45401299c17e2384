//! Runs the full per-instance pipeline over a small grid on several threads
//! and prints the CSV report and its summary.
//!
//!     cargo run --release --example sweep_grid -- 4 7 4

use biharm::report::{to_csv, EmitOptions, SweepSummary};
use biharm::sweep::run_sweep;
use biharm::system::{Curvature, InstanceParams, TranscriptionKind};
use biharm::verify::RunOptions;

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (lo, hi, workers) = match args.as_slice() {
        [lo, hi, w] => (*lo, *hi, *w as usize),
        _ => (4, 6, 4),
    };
    let cs = [Curvature::from_int(1), Curvature::from_int(0), Curvature::from_int(-1)];
    let grid = InstanceParams::grid(lo, hi, &cs).expect("valid range");
    let opts = RunOptions { transcription: TranscriptionKind::Reconciled, ..RunOptions::default() };
    let reports = run_sweep(&grid, &opts, workers, false).expect("thread pool");
    print!("{}", to_csv(&reports, EmitOptions::default()));
    println!("{}", SweepSummary::from_reports(&reports, 0).text());
}
