use crate::algebra::{BigRational, SparsePoly, Var};

use super::InstanceParams;

fn q(num: i128, den: i128) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `lambda1 = -(n/2) H` and `beta = beta_num / beta_den` with
/// `beta_num = (3/2) n H - (p-1) alpha`, `beta_den = n - p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureState {
    pub lambda1: SparsePoly,
    pub beta_num: SparsePoly,
    pub beta_den: BigRational,
}

impl CurvatureState {
    pub fn beta(&self) -> SparsePoly {
        self.beta_num.scale(&self.beta_den.recip())
    }

    /// `(lambda1 + (p-1) alpha - n H) * beta_den + (n-p) * beta_num`,
    /// which is the trace identity with the denominator cleared.
    pub fn trace_residual(&self, params: &InstanceParams) -> SparsePoly {
        let (n, p) = (params.ni(), params.pi());
        let h = SparsePoly::var(Var::H);
        let a = SparsePoly::var(Var::Alpha);
        let lhs = &self.lambda1 + &a.scale(&q(p - 1, 1)) - h.scale(&q(n, 1));
        lhs.scale(&self.beta_den) + self.beta_num.scale(&q(n - p, 1))
    }
}

pub fn make_state(params: &InstanceParams) -> CurvatureState {
    let (n, p) = (params.ni(), params.pi());
    let h = SparsePoly::var(Var::H);
    let a = SparsePoly::var(Var::Alpha);
    CurvatureState {
        lambda1: h.scale(&q(-n, 2)),
        beta_num: h.scale(&q(3 * n, 2)) - a.scale(&q(p - 1, 1)),
        beta_den: q(n - p, 1),
    }
}

/// The three values `alpha` may not take, as multiples of `H`:
/// `-(n/2) H`, `3n/(2(n-1)) H`, `(n^2 - (p-3) n)/(2(p-1)) H`.
pub fn excluded_alphas(params: &InstanceParams) -> [SparsePoly; 3] {
    let (n, p) = (params.ni(), params.pi());
    let h = SparsePoly::var(Var::H);
    [
        h.scale(&q(-n, 2)),
        h.scale(&q(3 * n, 2 * (n - 1))),
        h.scale(&q(n * n - (p - 3) * n, 2 * (p - 1))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::system::Curvature;

    fn params(n: u32, p: u32) -> InstanceParams {
        InstanceParams::new(n, p, Curvature::from_int(1)).unwrap()
    }

    fn beta_at(n: u32, p: u32, h: i64, a: i64) -> BigRational {
        make_state(&params(n, p))
            .beta()
            .eval_point(&[(Var::H, rat(h, 1)), (Var::Alpha, rat(a, 1))])
            .unwrap()
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta_at(4, 3, 1, 1), rat(4, 1));
        assert_eq!(beta_at(4, 3, 0, 0), rat(0, 1));
        assert_eq!(beta_at(6, 4, 2, 0), rat(9, 1));
    }

    #[test]
    fn trace_identity_on_grid() {
        for n in 4..=12 {
            for p in InstanceParams::admissible_p(n) {
                let pr = params(n, p);
                assert!(make_state(&pr).trace_residual(&pr).is_zero(), "{pr}");
            }
        }
    }

    #[test]
    fn excluded_values() {
        let h = |r: BigRational| SparsePoly::var(Var::H).scale(&r);
        assert_eq!(excluded_alphas(&params(4, 3)), [h(rat(-2, 1)), h(rat(2, 1)), h(rat(4, 1))]);
        assert_eq!(excluded_alphas(&params(5, 3)), [h(rat(-5, 2)), h(rat(15, 8)), h(rat(25, 4))]);
    }
}
