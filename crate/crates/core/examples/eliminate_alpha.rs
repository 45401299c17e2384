//! Eliminates alpha from the instance's (P1, P2) pair and prints the
//! eliminant summary.
//!
//!     cargo run --release --example eliminate_alpha -- 4 3 1

use std::time::Instant;

use biharm::system::{Curvature, EquationSet, InstanceParams};
use biharm::verify::eliminate_alpha;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (n, p, c) = match args.as_slice() {
        [n, p, c] => (*n as u32, *p as u32, *c),
        _ => (4, 3, 1),
    };
    let params = InstanceParams::new(n, p, Curvature::from_int(c)).expect("valid instance");
    let eq = EquationSet::printed(&params);
    let p2 = eq.p2.as_ref().expect("P2 is nonzero");
    println!("{params}: S convention {}", eq.s_convention);
    println!("P1: total degree {}, alpha-degree {}", eq.p1.total_degree(), eq.p1.degree_in(biharm::algebra::Var::Alpha));
    println!("P2: total degree {}, alpha-degree {}", p2.total_degree(), p2.degree_in(biharm::algebra::Var::Alpha));
    let start = Instant::now();
    let e = eliminate_alpha(&eq.p1, p2, false).expect("elimination");
    println!(
        "eliminant: degree {} in H, {} terms, nonzero {}, routes {:?}, check {:?}, {:.2?}",
        e.degree(),
        e.q.n_terms(),
        e.nonzero(),
        e.agreement,
        e.cross_check,
        start.elapsed()
    );
}
