//! Parallel sweep over the instance grid.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::system::InstanceParams;
use crate::verify::{run_instance, DerivationReport, RunOptions};

/// Runs every instance on a pool of `workers` threads and returns the
/// reports sorted by `(n, p, c)`, independent of completion order.
/// With `heartbeat`, one progress line per finished instance goes to stderr.
pub fn run_sweep(
    grid: &[InstanceParams],
    opts: &RunOptions,
    workers: usize,
    heartbeat: bool,
) -> Result<Vec<DerivationReport>, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build()?;
    let done = AtomicUsize::new(0);
    let total = grid.len();
    let mut reports: Vec<DerivationReport> = pool.install(|| {
        grid.par_iter()
            .map(|p| {
                let r = run_instance(p, opts);
                let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                if heartbeat {
                    eprintln!("[{k}/{total}] {} {}", r.params, r.overall.as_str());
                }
                r
            })
            .collect()
    });
    reports.sort_by(|a, b| a.params.cmp(&b.params));
    Ok(reports)
}
