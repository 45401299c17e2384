use std::collections::BTreeMap;

use crate::algebra::{BigRational, SparsePoly, Var};
use crate::system::{make_state, InstanceParams};

fn q(num: i128, den: i128) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// The derivation `e_1` on the ring, fixed by its values on the variables.
///
/// `H1` stands for `e_1(H)`. All images are polynomials because the only
/// denominator, `n - p`, is a constant.
#[derive(Debug, Clone)]
pub struct FormalDerivation {
    images: BTreeMap<Var, SparsePoly>,
}

impl FormalDerivation {
    pub fn new(params: &InstanceParams) -> Self {
        let st = make_state(params);
        let al = SparsePoly::var(Var::Alpha);
        let (a, b) = (SparsePoly::var(Var::A), SparsePoly::var(Var::B));
        let h1 = SparsePoly::var(Var::H1);
        let c = params.c().as_poly();
        let l1 = &st.lambda1;
        let beta = st.beta();
        let mut images = BTreeMap::new();
        images.insert(Var::H, h1.clone());
        images.insert(Var::Alpha, &a * &(l1 - &al));
        images.insert(Var::A, -(&a * &a) - l1 * &al - c.clone());
        images.insert(Var::B, -(&b * &b) - l1 * &beta - c.clone());
        images.insert(Var::H1, Self::h1_image(params, &h1));
        FormalDerivation { images }
    }

    /// `e_1(h1) = -[(p-1)A + (n-p)B] h1 + H[lambda1^2 + (p-1)alpha^2 + (n-p)beta^2] - n c H`.
    fn h1_image(params: &InstanceParams, h1: &SparsePoly) -> SparsePoly {
        let (n, p) = (params.ni(), params.pi());
        let st = make_state(params);
        let (h, al) = (SparsePoly::var(Var::H), SparsePoly::var(Var::Alpha));
        let (a, b) = (SparsePoly::var(Var::A), SparsePoly::var(Var::B));
        let beta = st.beta();
        let drift = a.scale(&q(p - 1, 1)) + b.scale(&q(n - p, 1));
        let squares = &st.lambda1 * &st.lambda1
            + (&al * &al).scale(&q(p - 1, 1))
            + (&beta * &beta).scale(&q(n - p, 1));
        let nch = (&h * &params.c().as_poly()).scale(&q(n, 1));
        -(&drift * h1) + &h * &squares - nch
    }

    pub fn image(&self, v: Var) -> SparsePoly {
        self.images.get(&v).cloned().unwrap_or_default()
    }

    /// `e_1(P) = sum_v dP/dv * e_1(v)`.
    pub fn apply(&self, pol: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (v, img) in &self.images {
            if pol.contains_var(*v) {
                out = out + &pol.differentiate(*v) * img;
            }
        }
        out
    }

    /// The biharmonic equation with `e_1 e_1(H)` on the left, written as
    /// `-e_1(h1) - [(p-1)A + (n-p)B] h1 + H[...] - nch`; zero by construction.
    pub fn h1_rule_residual(&self, params: &InstanceParams) -> SparsePoly {
        let (n, p) = (params.ni(), params.pi());
        let st = make_state(params);
        let (h, al) = (SparsePoly::var(Var::H), SparsePoly::var(Var::Alpha));
        let (a, b) = (SparsePoly::var(Var::A), SparsePoly::var(Var::B));
        let h1 = SparsePoly::var(Var::H1);
        let beta = st.beta();
        let lhs = -self.image(Var::H1)
            - &(a.scale(&q(p - 1, 1)) + b.scale(&q(n - p, 1))) * &h1
            + &h * &(&st.lambda1 * &st.lambda1
                + (&al * &al).scale(&q(p - 1, 1))
                + (&beta * &beta).scale(&q(n - p, 1)));
        lhs - (&h * &params.c().as_poly()).scale(&q(n, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::system::Curvature;

    #[test]
    fn leibniz_rule() {
        let pr = InstanceParams::new(6, 4, Curvature::Symbolic).unwrap();
        let d = FormalDerivation::new(&pr);
        let f: SparsePoly = "1*H^2*A^1 + -3*ALPHA^1*C^1".parse().unwrap();
        let g: SparsePoly = "2*B^1*H1^1 + 1*ALPHA^2".parse().unwrap();
        assert_eq!(d.apply(&(&f * &g)), &d.apply(&f) * &g + &f * &d.apply(&g));
        assert!(d.apply(&SparsePoly::var(Var::C)).is_zero());
        assert!(d.h1_rule_residual(&pr).is_zero());
        assert_eq!(d.apply(&SparsePoly::constant(rat(5, 2))), SparsePoly::zero());
    }
}
