//! Resultants by two independent routes.
//!
//! Sign convention: `res(a, b)` is the determinant of the Sylvester matrix
//! whose first `deg b` rows carry the coefficients of `a` (highest power
//! first) and whose last `deg a` rows carry those of `b`. Both routes
//! return exactly this value, so `res(b, a) = (-1)^(deg a * deg b) res(a, b)`.
//!
//! When one input has degree 0 in the variable, `res(a, b) = a^(deg b)`
//! (resp. `b^(deg a)`), the determinant of the corresponding diagonal
//! matrix; two constants give `1`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gcd::subresultant_sequence;
use super::poly::SparsePoly;
use super::rational::{int, rat, BigRational};
use super::ring::Ring;
use super::univariate::UniPoly;
use super::var::Var;
use super::AlgebraError;

/// Largest degree in the eliminated variable for which both routes are
/// always computed and compared exactly.
pub const EXACT_CHECK_MAX_DEGREE: usize = 8;

/// Number of rational points used for the sampled determinant check.
pub const SAMPLE_POINTS: usize = 3;

const SAMPLE_SEED: u64 = 0x5eed_b1a2;

/// How a returned resultant was confirmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossCheck {
    /// Sylvester determinant computed symbolically and found identical.
    Exact,
    /// Determinant compared at this many sampled points.
    Sampled(usize),
}

/// Checked resultant: PRS result confirmed by the Sylvester determinant.
pub fn resultant(a: &SparsePoly, b: &SparsePoly, v: Var) -> Result<SparsePoly, AlgebraError> {
    resultant_checked(a, b, v).map(|(r, _)| r)
}

pub fn resultant_checked(
    a: &SparsePoly,
    b: &SparsePoly,
    v: Var,
) -> Result<(SparsePoly, CrossCheck), AlgebraError> {
    let prs = resultant_prs(a, b, v)?;
    let (da, db) = (a.degree_in(v) as usize, b.degree_in(v) as usize);
    if da.max(db) <= EXACT_CHECK_MAX_DEGREE {
        let syl = resultant_sylvester(a, b, v)?;
        if syl != prs {
            return Err(AlgebraError::ResultantMismatch(format!(
                "sylvester `{syl}` vs prs `{prs}`"
            )));
        }
        return Ok((prs, CrossCheck::Exact));
    }
    let matrix = sylvester_matrix(a, b, v)?;
    let free: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&w| w != v && (a.contains_var(w) || b.contains_var(w)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    for _ in 0..SAMPLE_POINTS {
        let point: Vec<(Var, BigRational)> = free
            .iter()
            .map(|&w| (w, rat(rng.gen_range(-60..=60), rng.gen_range(1..=9))))
            .collect();
        let numeric: Vec<Vec<SparsePoly>> = matrix
            .iter()
            .map(|row| row.iter().map(|e| e.eval_many(&point)).collect())
            .collect();
        let det = bareiss_determinant(numeric)?;
        let expect = prs.eval_many(&point);
        if det != expect {
            return Err(AlgebraError::ResultantMismatch(format!(
                "sampled determinant `{det}` vs prs `{expect}` at {point:?}"
            )));
        }
    }
    Ok((prs, CrossCheck::Sampled(SAMPLE_POINTS)))
}

fn check_inputs(a: &SparsePoly, b: &SparsePoly) -> Result<(), AlgebraError> {
    if a.is_zero() || b.is_zero() {
        Err(AlgebraError::ZeroResultantInput)
    } else {
        Ok(())
    }
}

/// Square matrix of size `deg a + deg b`; see the module docs for layout.
pub fn sylvester_matrix(
    a: &SparsePoly,
    b: &SparsePoly,
    v: Var,
) -> Result<Vec<Vec<SparsePoly>>, AlgebraError> {
    check_inputs(a, b)?;
    let ca = a.to_univariate(v);
    let cb = b.to_univariate(v);
    let (m, n) = (ca.len() - 1, cb.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (shift, coeffs, deg) in (0..n).map(|i| (i, &ca, m)).chain((0..m).map(|j| (j, &cb, n))) {
        let mut row = vec![SparsePoly::zero(); size];
        for k in 0..=deg {
            row[shift + k] = coeffs[deg - k].clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Fraction-free Gaussian elimination. Every division is exact, by the
/// previous pivot (Sylvester's identity); row swaps flip the sign.
pub fn bareiss_determinant(mut m: Vec<Vec<SparsePoly>>) -> Result<SparsePoly, AlgebraError> {
    let n = m.len();
    if n == 0 {
        return Ok(SparsePoly::one());
    }
    let mut negate = false;
    let mut prev = SparsePoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(SparsePoly::zero());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

pub fn resultant_sylvester(a: &SparsePoly, b: &SparsePoly, v: Var) -> Result<SparsePoly, AlgebraError> {
    bareiss_determinant(sylvester_matrix(a, b, v)?)
}

/// Subresultant PRS resultant with the Sylvester sign convention.
pub fn resultant_prs(a: &SparsePoly, b: &SparsePoly, v: Var) -> Result<SparsePoly, AlgebraError> {
    check_inputs(a, b)?;
    let mut f = UniPoly::from_poly(a, v);
    let mut g = UniPoly::from_poly(b, v);
    let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
    if df == 0 {
        return Ok(f.lc().pow(dg as u32));
    }
    if dg == 0 {
        return Ok(g.lc().pow(df as u32));
    }
    let mut negate = false;
    if df < dg {
        std::mem::swap(&mut f, &mut g);
        negate = df % 2 == 1 && dg % 2 == 1;
    }
    // Rational contents scale the resultant by content^(other degree).
    let (f, fc) = strip_rational_content(&f);
    let (g, gc) = strip_rational_content(&g);
    let scale = super::rational::pow(&fc, g.degree().unwrap() as u32)
        * super::rational::pow(&gc, f.degree().unwrap() as u32);

    let dense = f.dense_var().filter(|&w| g.dense_var() == Some(w));
    let res = match dense.and_then(|w| Some((w, f.to_dense(w)?, g.to_dense(w)?))) {
        Some((w, fd, gd)) => prs_core(fd, gd, negate)?.to_sparse(w),
        None => prs_core(f, g, negate)?,
    };
    Ok(res.scale(&scale))
}

/// Resultant of `f`, `g` (`deg f >= deg g > 0`) from the subresultant
/// sequence; `negate` carries the sign of an initial swap.
pub fn prs_core<R: Ring>(f: UniPoly<R>, g: UniPoly<R>, mut negate: bool) -> Result<R, AlgebraError> {
    let seq = subresultant_sequence(f, g)?;
    let last = seq.last().unwrap();
    if last.degree() != Some(0) {
        return Ok(R::zero());
    }
    // Walk the sequence again to recover h and the sign, as in the
    // textbook loop.
    let mut h = R::one();
    for w in seq.windows(2) {
        let (da, db) = (w[0].degree().unwrap(), w[1].degree().unwrap());
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        if db == 0 {
            // h <- h^(1 - da) * lc^da
            let res = w[1].lc().pow(da as u32).div_exact(&h.pow(da as u32 - 1))?;
            return Ok(if negate { res.neg() } else { res });
        }
        let delta = (da - db) as u32;
        let gl = w[1].lc();
        h = if delta == 0 { h } else { gl.pow(delta).div_exact(&h.pow(delta - 1))? };
    }
    unreachable!("sequence ends in a constant")
}

fn strip_rational_content(p: &UniPoly) -> (UniPoly, BigRational) {
    let mut c = BigRational::zero();
    for coeff in p.coeffs() {
        for (_, x) in coeff.terms() {
            c = super::rational::rational_gcd(&c, x);
        }
    }
    if c.is_zero() || c.is_one() {
        return (p.clone(), int(1));
    }
    let inv = SparsePoly::constant(c.recip());
    (p.scale(&inv), c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SparsePoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        // x is ALPHA here
        let r = resultant(&p("1*ALPHA^2 + -1"), &p("1*ALPHA^1 + -2"), Var::Alpha).unwrap();
        assert_eq!(r, SparsePoly::from_int(3));
        let r = resultant(&p("1*ALPHA^2 + 1*C^1"), &p("1*H^1 + 1*ALPHA^1"), Var::Alpha).unwrap();
        assert_eq!(r, p("1*H^2 + 1*C^1"));
        let a = p("1*ALPHA^2 + -3*ALPHA^1 + 2");
        let b = p("1*ALPHA^2 + -4*ALPHA^1 + 3");
        assert!(resultant(&a, &b, Var::Alpha).unwrap().is_zero());
    }

    #[test]
    fn degree_zero_convention() {
        let a = p("3*H^1");
        let b = p("1*ALPHA^2 + 1");
        assert_eq!(resultant(&a, &b, Var::Alpha).unwrap(), p("9*H^2"));
        assert_eq!(resultant(&b, &a, Var::Alpha).unwrap(), p("9*H^2"));
        assert_eq!(resultant(&a, &a, Var::Alpha).unwrap(), SparsePoly::one());
        assert_eq!(
            resultant(&SparsePoly::zero(), &b, Var::Alpha),
            Err(AlgebraError::ZeroResultantInput)
        );
    }

    #[test]
    fn swap_sign() {
        // deg 1 and deg 3: odd * odd flips the sign
        let a = p("1*ALPHA^3 + 1*H^1");
        let b = p("2*ALPHA^1 + -1");
        let ab = resultant(&a, &b, Var::Alpha).unwrap();
        let ba = resultant(&b, &a, Var::Alpha).unwrap();
        assert_eq!(ab, -ba);
    }

    #[test]
    fn sampled_check_above_threshold() {
        let a = p("1*ALPHA^9 + 1*H^1*ALPHA^4 + -1");
        let b = p("1*ALPHA^3 + 2*H^2 + 1*C^1");
        let (r, how) = resultant_checked(&a, &b, Var::Alpha).unwrap();
        assert_eq!(how, CrossCheck::Sampled(SAMPLE_POINTS));
        assert_eq!(r, resultant_sylvester(&a, &b, Var::Alpha).unwrap());
    }
}
