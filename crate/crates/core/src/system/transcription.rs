use std::fmt;

use serde::Serialize;

use crate::algebra::{BigRational, Monomial, SparsePoly, Var};

use super::{Curvature, InstanceParams};

/// The four brackets entering the system as transcribed coefficient tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Bracket {
    /// Coefficient of `A` in the reduced derivative identity.
    L,
    /// Coefficient of `-B` in the same identity.
    M,
    /// Right-hand side of the quadratic `A^2`/`B^2` relation.
    N,
    /// `A,B`-free trailing part of the linear `A`/`B` relation.
    G,
}

impl Bracket {
    pub const ALL: [Bracket; 4] = [Bracket::L, Bracket::M, Bracket::N, Bracket::G];
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TranscriptionKind {
    /// Coefficients exactly as displayed.
    Printed,
    /// Printed table with the entries corrected that the replay contradicts.
    Reconciled,
}

impl fmt::Display for TranscriptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TranscriptionKind::Printed => "printed",
            TranscriptionKind::Reconciled => "reconciled",
        })
    }
}

/// One coefficient: a monomial in `H`, `ALPHA`, `C` and its value at `(n, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub monomial: Monomial,
    pub value: BigRational,
}

/// Coefficient tables of `L`, `M`, `N`, `G` evaluated at a concrete `(n, p)`.
///
/// Entries are kept even when a closed form evaluates to zero, so that
/// indices are stable across instances and perturbations can target them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcription {
    kind: TranscriptionKind,
    l: Vec<Entry>,
    m: Vec<Entry>,
    n: Vec<Entry>,
    g: Vec<Entry>,
    perturbed: Option<(Bracket, usize)>,
}

fn q(num: i128, den: i128) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn mono(h: u16, a: u16, c: u16) -> Monomial {
    Monomial::from_pairs(&[(Var::H, h), (Var::Alpha, a), (Var::C, c)])
}

fn table(rows: [(u16, u16, u16, BigRational); 6]) -> Vec<Entry> {
    rows.into_iter()
        .map(|(h, a, c, value)| Entry { monomial: mono(h, a, c), value })
        .collect()
}

impl Transcription {
    pub fn new(kind: TranscriptionKind, params: &InstanceParams) -> Self {
        match kind {
            TranscriptionKind::Printed => Self::printed(params),
            TranscriptionKind::Reconciled => Self::reconciled(params),
        }
    }

    pub fn printed(params: &InstanceParams) -> Self {
        let (n, p) = (params.ni(), params.pi());
        let d = n - p;
        let g = vec![
            Entry { monomial: mono(3, 0, 0), value: q(3 * n * n * (n + 6 - p), 4 * d) },
            Entry { monomial: mono(2, 1, 0), value: q(-3 * n * (n - 2 + 4 * p), 2 * d) },
            Entry { monomial: mono(1, 2, 0), value: q(3 * n * (p - 1), d) },
            Entry { monomial: mono(1, 0, 1), value: q(-3 * (n + 1), 1) },
        ];
        let nn = table([
            (3, 0, 0, q(9 * n.pow(3) * (n + 6 - p), 4 * d)),
            (2, 1, 0, q(3 * n * n * (p - 1) * (2 * p - 2 * n - 15), 2 * d)),
            (1, 2, 0, q(n * (p - 1) * (-2 * p * p + 2 * p * n + 11 * p + n - 12), d)),
            (0, 3, 0, q(-2 * (p - 1).pow(2) * (2 * p - n - 1), d)),
            (1, 0, 1, q(2 * p * p - 5 * p - 2 * n * p - 4 * n, 1)),
            (0, 1, 1, q(2 * (p - 1) * (2 * p - n - 1), 1)),
        ]);
        let l = table([
            (3, 0, 0, q(9 * n.pow(3) * (3 * n - 2 * p + 17), 4)),
            (2, 1, 0, q(-3 * n * n * (-6 * p * p + 11 * n * p + 43 * p - 11 * n - 37), 2)),
            (1, 2, 0, q(n * (p - 1) * (4 * n * p - 4 * n + 26 * p + 1), 1)),
            (0, 3, 0, q(-2 * (p - 1).pow(2) * (2 * n + 7), 1)),
            (1, 0, 1, q(n * d * (-4 * n * p - 14 * n + 7 * p - 10), 1)),
            (0, 1, 1, q(4 * d * (n + 5) * (p - 1), 1)),
        ]);
        let m = table([
            (3, 0, 0, q(9 * (2 * n - 2 * p + 3), 2)),
            (2, 1, 0, q(9 * n * n * (2 * p * p + n * n - 3 * n * p - 7 * p + n - 3), 2)),
            (1, 2, 0, q(-2 * n * (p - 1) * (2 * n * n - 2 * n * p + 4 * n - 13 * p - 18), 1)),
            (0, 3, 0, q(-2 * (p - 1).pow(2) * (2 * n + 7), 1)),
            (1, 0, 1, q(n * d * (-4 * n * n + 4 * n * p - 11 * n + 9 * p + 21), 1)),
            (0, 1, 1, q(-4 * d * (n + 5) * (p - 1), 1)),
        ]);
        Transcription { kind: TranscriptionKind::Printed, l, m, n: nn, g, perturbed: None }
    }

    /// The printed table with the seven entries the replay contradicts
    /// replaced by the replayed values: the `cH` term of `N`, the `H^3`,
    /// `cH`, `c alpha` terms of `M`, and the `cH`, `c alpha` terms of `L`.
    pub fn reconciled(params: &InstanceParams) -> Self {
        let (n, p) = (params.ni(), params.pi());
        let d = n - p;
        let mut t = Self::printed(params);
        t.kind = TranscriptionKind::Reconciled;
        t.set(Bracket::N, mono(1, 0, 1), q(n * (2 * p * p - 5 * p - 2 * n * p - 4 * n), 1));
        t.set(Bracket::L, mono(1, 0, 1), q(n * d * (-5 * n * p - 13 * n + 8 * p - 17), 1));
        t.set(Bracket::L, mono(0, 1, 1), q(2 * d * (n + 17) * (p - 1), 1));
        t.set(Bracket::M, mono(3, 0, 0), q(9 * n.pow(3) * (2 * n - 2 * p + 3), 2));
        t.set(Bracket::M, mono(1, 0, 1), q(n * d * (5 * n * n - 5 * n * p + 7 * n + 8 * p - 42), 1));
        t.set(Bracket::M, mono(0, 1, 1), q(2 * d * (n + 17) * (p - 1), 1));
        t
    }

    fn set(&mut self, b: Bracket, m: Monomial, value: BigRational) {
        let e = self
            .entries_mut(b)
            .iter_mut()
            .find(|e| e.monomial == m)
            .expect("monomial present in table");
        e.value = value;
    }

    fn entries_mut(&mut self, b: Bracket) -> &mut Vec<Entry> {
        match b {
            Bracket::L => &mut self.l,
            Bracket::M => &mut self.m,
            Bracket::N => &mut self.n,
            Bracket::G => &mut self.g,
        }
    }

    pub fn kind(&self) -> TranscriptionKind {
        self.kind
    }

    pub fn entries(&self, b: Bracket) -> &[Entry] {
        match b {
            Bracket::L => &self.l,
            Bracket::M => &self.m,
            Bracket::N => &self.n,
            Bracket::G => &self.g,
        }
    }

    /// Every `(bracket, index)` addressable by [`Transcription::perturb`].
    pub fn coefficient_ids(&self) -> Vec<(Bracket, usize)> {
        Bracket::ALL
            .iter()
            .flat_map(|&b| (0..self.entries(b).len()).map(move |i| (b, i)))
            .collect()
    }

    /// Copy with one coefficient shifted by `delta`.
    pub fn perturb(&self, b: Bracket, index: usize, delta: &BigRational) -> Transcription {
        let mut t = self.clone();
        let e = &mut t.entries_mut(b)[index];
        e.value = &e.value + delta;
        t.perturbed = Some((b, index));
        t
    }

    pub fn perturbed(&self) -> Option<(Bracket, usize)> {
        self.perturbed
    }

    /// The bracket as a polynomial, with `C` replaced by the instance
    /// curvature unless it is symbolic.
    pub fn poly(&self, b: Bracket, c: &Curvature) -> SparsePoly {
        let raw = SparsePoly::from_terms(
            self.entries(b).iter().map(|e| (e.monomial, e.value.clone())),
        );
        match c {
            Curvature::Value(v) => raw.eval(Var::C, v),
            Curvature::Symbolic => raw,
        }
    }

    /// Leading `H^3` coefficient of a bracket.
    pub fn h3(&self, b: Bracket) -> BigRational {
        self.entries(b)
            .iter()
            .find(|e| e.monomial == mono(3, 0, 0))
            .map(|e| e.value.clone())
            .expect("every bracket has an H^3 entry")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn params(n: u32, p: u32) -> InstanceParams {
        InstanceParams::new(n, p, Curvature::Symbolic).unwrap()
    }

    #[test]
    fn printed_leading_coefficients() {
        let t = Transcription::printed(&params(5, 3));
        assert_eq!(t.h3(Bracket::G), rat(75, 1));
        assert_eq!(t.h3(Bracket::L), rat(9 * 125 * 26, 4));
        assert_eq!(t.h3(Bracket::M), rat(9 * 7, 2));
        assert_eq!(t.h3(Bracket::N), rat(9 * 125 * 8, 8));
        let t = Transcription::printed(&params(4, 3));
        assert_eq!(t.entries(Bracket::G)[2].value, rat(24, 1));
    }

    #[test]
    fn from_terms_drops_zero_entries() {
        // n = 5, p = 3: the alpha^3 entry of N carries (2p - n - 1) = 0
        let t = Transcription::printed(&params(5, 3));
        assert_eq!(t.entries(Bracket::N).len(), 6);
        assert_eq!(t.poly(Bracket::N, &Curvature::Symbolic).coeff(&mono(0, 3, 0)), rat(0, 1));
    }

    #[test]
    fn perturb_touches_one_entry() {
        let t = Transcription::reconciled(&params(6, 4));
        let u = t.perturb(Bracket::L, 2, &rat(1, 1));
        assert_eq!(u.perturbed(), Some((Bracket::L, 2)));
        let diff = u.poly(Bracket::L, &Curvature::Symbolic) - t.poly(Bracket::L, &Curvature::Symbolic);
        assert_eq!(diff, SparsePoly::term(rat(1, 1), mono(1, 2, 0)));
        assert_eq!(t.coefficient_ids().len(), 22);
    }
}
