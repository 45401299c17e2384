//! Computes one resultant three ways: subresultant PRS, Sylvester matrix
//! with a Bareiss determinant, and the textbook product of root differences
//! for polynomials given by their roots.
//!
//!     cargo run --example resultant_oracles

use biharm::algebra::{rat, resultant_prs, resultant_sylvester, SparsePoly, Var};

fn from_roots(roots: &[i64]) -> SparsePoly {
    let alpha = SparsePoly::var(Var::Alpha);
    roots.iter().fold(SparsePoly::one(), |acc, &r| acc * (&alpha - SparsePoly::from_int(r)))
}

fn main() {
    let (ra, rb) = ([1, -2, 3], [0, 5]);
    let (a, b) = (from_roots(&ra), from_roots(&rb));
    let by_roots: i64 = ra.iter().flat_map(|x| rb.iter().map(move |y| x - y)).product();
    println!("a = {a}\nb = {b}");
    println!("prs       {}", resultant_prs(&a, &b, Var::Alpha).unwrap());
    println!("sylvester {}", resultant_sylvester(&a, &b, Var::Alpha).unwrap());
    println!("roots     {by_roots}");

    // With a parameter the resultant is a polynomial in it.
    let h = SparsePoly::var(Var::H);
    let alpha = SparsePoly::var(Var::Alpha);
    let p = &alpha * &alpha - &h;
    let q = &alpha - SparsePoly::constant(rat(2, 1));
    let r = resultant_prs(&p, &q, Var::Alpha).unwrap();
    println!("res(alpha^2 - H, alpha - 2) = {r}");
    assert_eq!(r, resultant_sylvester(&p, &q, Var::Alpha).unwrap());
}
