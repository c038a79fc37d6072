use alloc::vec::Vec;
use core::fmt;

use crate::math::{cos, cosh, exp, sin, sinh};

/// Basis function family of a [`Term`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Exp,
    Cos,
    Sin,
    Cosh,
    Sinh,
}

impl Kind {
    /// `f(k·x)` for this family (`Exp` means `e^{k·x}`).
    pub fn basis(self, k: f64, x: f64) -> f64 {
        let t = k * x;
        match self {
            Kind::Exp => exp(t),
            Kind::Cos => cos(t),
            Kind::Sin => sin(t),
            Kind::Cosh => cosh(t),
            Kind::Sinh => sinh(t),
        }
    }

    /// `d/dx f(k·x) = factor · g(k·x)`, returned as `(factor, g)`.
    pub fn derivative(self, k: f64) -> (f64, Kind) {
        match self {
            Kind::Exp => (k, Kind::Exp),
            Kind::Cos => (-k, Kind::Sin),
            Kind::Sin => (k, Kind::Cos),
            Kind::Cosh => (k, Kind::Sinh),
            Kind::Sinh => (k, Kind::Cosh),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Exp => "exp",
            Kind::Cos => "cos",
            Kind::Sin => "sin",
            Kind::Cosh => "cosh",
            Kind::Sinh => "sinh",
        }
    }

    /// Fold a possibly negative or zero rate into canonical form.
    /// Returns the sign to apply to the coefficient, or `None` if the term
    /// vanishes identically.
    pub(crate) fn canonical(self, k: f64) -> Option<(f64, Kind, f64)> {
        match self {
            Kind::Exp => Some((1.0, Kind::Exp, k)),
            Kind::Cos | Kind::Cosh if k == 0.0 => Some((1.0, Kind::Exp, 0.0)),
            Kind::Sin | Kind::Sinh if k == 0.0 => None,
            Kind::Cos | Kind::Cosh => Some((1.0, self, k.abs())),
            Kind::Sin | Kind::Sinh => Some((if k < 0.0 { -1.0 } else { 1.0 }, self, k.abs())),
        }
    }
}

/// `coeff · kind(k·x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coeff: f64,
    pub kind: Kind,
    pub k: f64,
}

impl Term {
    pub fn new(coeff: f64, kind: Kind, k: f64) -> Self {
        Term { coeff, kind, k }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeff * self.kind.basis(self.k, x)
    }
}

/// Relative tolerance under which two rates are the same rate.
pub(crate) const RATE_TOL: f64 = 1e-12;

pub(crate) fn same_rate(a: f64, b: f64) -> bool {
    (a - b).abs() <= RATE_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Finite real combination of basis terms.
///
/// After construction no two terms share `(kind, k)`, rates of the
/// trigonometric and hyperbolic kinds are positive and a zero rate is folded
/// into `Exp` with `k = 0` (a constant).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ClosedForm {
    terms: Vec<Term>,
}

impl ClosedForm {
    pub fn new(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut out: Vec<Term> = Vec::new();
        for t in terms {
            let Some((sign, kind, k)) = t.kind.canonical(t.k) else {
                continue;
            };
            let coeff = sign * t.coeff;
            match out.iter_mut().find(|o| o.kind == kind && same_rate(o.k, k)) {
                Some(o) => o.coeff += coeff,
                None => out.push(Term { coeff, kind, k }),
            }
        }
        out.retain(|t| t.coeff != 0.0);
        out.sort_by(|a, b| (a.kind, a.k).partial_cmp(&(b.kind, b.k)).unwrap());
        ClosedForm { terms: out }
    }

    pub fn zero() -> Self {
        ClosedForm::default()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(x)).sum()
    }

    /// Exact termwise derivative.
    pub fn differentiate(&self) -> ClosedForm {
        ClosedForm::new(self.terms.iter().map(|t| {
            let (factor, kind) = t.kind.derivative(t.k);
            Term::new(t.coeff * factor, kind, t.k)
        }))
    }

    pub fn scale(&self, s: f64) -> ClosedForm {
        ClosedForm::new(self.terms.iter().map(|t| Term {
            coeff: t.coeff * s,
            ..*t
        }))
    }

    pub fn add(&self, other: &ClosedForm) -> ClosedForm {
        ClosedForm::new(self.terms.iter().chain(other.terms.iter()).copied())
    }

    /// `Σ |coeff · basis(x)|`, the magnitude scale of an evaluation.
    pub fn abs_sum(&self, x: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(x).abs()).sum()
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*{}({}*x)", t.coeff, t.kind.name(), t.k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluate_and_differentiate() {
        let k = 2.0;
        let c = ClosedForm::new([Term::new(1.0, Kind::Cosh, k)]);
        assert_eq!(c.eval(0.0), 1.0);
        assert_eq!(
            c.differentiate(),
            ClosedForm::new([Term::new(k, Kind::Sinh, k)])
        );
        let s = ClosedForm::new([Term::new(3.0, Kind::Cos, k)]);
        assert_eq!(
            s.differentiate(),
            ClosedForm::new([Term::new(-6.0, Kind::Sin, k)])
        );
    }

    #[test]
    fn homogeneous_operator_annihilates() {
        let g = ClosedForm::new([
            Term::new(2.0, Kind::Exp, 1.0),
            Term::new(-1.0, Kind::Exp, 2.0),
        ]);
        let d1 = g.differentiate();
        let d2 = d1.differentiate();
        for x in [-1.0, 0.0, 0.3, 1.0, 2.0] {
            let r = d2.eval(x) - 3.0 * d1.eval(x) + 2.0 * g.eval(x);
            assert!(r.abs() < 1e-12, "residual {r} at {x}");
        }
    }

    #[test]
    fn normalization() {
        let c = ClosedForm::new([
            Term::new(1.0, Kind::Sin, -2.0),
            Term::new(1.0, Kind::Sin, 2.0),
            Term::new(4.0, Kind::Cos, 0.0),
            Term::new(1.0, Kind::Exp, 0.0),
            Term::new(7.0, Kind::Sinh, 0.0),
        ]);
        assert_eq!(c.terms(), &[Term::new(5.0, Kind::Exp, 0.0)]);
    }
}
