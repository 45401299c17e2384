//! Classifies hyperspheres and Clifford products in space forms of
//! curvature 1, 0 and -1, and finds the biharmonic radius directly.
//!
//!     cargo run --example classify_hypersurfaces

use biharm::algebra::{format_rational, rat};
use biharm::hypersurface::{check_biharmonic, classification_table, solve_biharmonic_radius, HypersurfaceSpec};

fn main() {
    let one = rat(1, 1);
    println!("biharmonic squared radius in S^(n+1): {}", format_rational(&solve_biharmonic_radius(5, &one).unwrap()));
    for k in [5, 10, 15] {
        let spec = HypersurfaceSpec::hypersphere(5, rat(k, 20));
        let v = check_biharmonic(&spec, &one).unwrap();
        println!("{spec}: proper {} ({})", v.is_proper_biharmonic, v.witness);
    }
    let rows = classification_table(&[rat(1, 1), rat(0, 1), rat(-1, 1)]).unwrap();
    let proper = rows.iter().filter(|r| r.is_proper_biharmonic).count();
    let mismatches = rows.iter().filter(|r| !r.matches).count();
    println!("{} rows, {proper} proper biharmonic, {mismatches} disagree with the expected class", rows.len());
}
