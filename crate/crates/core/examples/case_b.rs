//! The n - p = 1 chain: the combined relation factors as a constant times
//! (n-2) H (3nH - 2(n-1) alpha)^2, forcing a root that is already excluded.
//!
//!     cargo run --example case_b -- 4 9

use biharm::system::Curvature;
use biharm::verify::verify_case_b;

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (lo, hi) = match args.as_slice() {
        [lo, hi] => (*lo, *hi),
        _ => (4, 9),
    };
    for n in lo..=hi {
        let r = verify_case_b(n, Curvature::Symbolic).expect("n >= 4");
        let k = r.constant.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "n={n:<3} {:<6} constant {k:<6} target {}  forced alpha = {} (excluded: {})",
            r.step.status.as_str(),
            r.target,
            r.forbidden_alpha,
            r.matches_excluded
        );
    }
}
