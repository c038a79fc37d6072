use alloc::vec::Vec;

use num_complex::Complex64;

use super::polynomial::product_of_factors;
use super::roots::roots;
use super::{ClosedForm, Kind, Polynomial, RationalFunction, Term};
use crate::Error;

/// One simple-pole term `residue / (p − pole)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleTerm {
    pub residue: Complex64,
    pub pole: Complex64,
}

/// Parts below this fraction of a root's modulus are treated as zero when
/// classifying roots as real or purely imaginary.
const CLASSIFY_TOL: f64 = 1e-12;

/// `f(p) = Σ residue_i / (p − pole_i)` over the simple roots of the
/// denominator. Residues come from `N(ρ) / D'(ρ)`.
pub fn partial_fractions(f: &RationalFunction) -> Result<Vec<PoleTerm>, Error> {
    let den = f.denominator();
    let dprime = den.derivative();
    Ok(roots(den)?
        .into_iter()
        .map(|pole| PoleTerm {
            residue: f.numerator().eval_complex(pole) / dprime.eval_complex(pole),
            pole,
        })
        .collect())
}

/// Inverse transform into the real closed-form basis.
///
/// Real poles give `e^{ρx}`, except that a pair `±k` is written as
/// `cosh`/`sinh`. A conjugate pair `±ik` gives `cos`/`sin`. Poles with both
/// a real and an imaginary part (damped oscillation) are rejected.
pub fn inverse_laplace(f: &RationalFunction) -> Result<ClosedForm, Error> {
    let terms = partial_fractions(f)?;
    let mut real: Vec<(f64, f64)> = Vec::new();
    let mut imag: Vec<(f64, Complex64)> = Vec::new();
    for t in &terms {
        let scale = t.pole.norm().max(1.0);
        if t.pole.im.abs() <= CLASSIFY_TOL * scale {
            real.push((t.pole.re, t.residue.re));
        } else if t.pole.re.abs() <= CLASSIFY_TOL * scale {
            imag.push((t.pole.im, t.residue));
        } else {
            return Err(Error::Unsupported(
                "complex characteristic roots with nonzero real part",
            ));
        }
    }

    let mut out = Vec::new();
    let mut used = alloc::vec![false; real.len()];
    for i in 0..real.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let (rho, res) = real[i];
        let partner = (0..real.len())
            .find(|&j| !used[j] && rho != 0.0 && super::closed_form::same_rate(real[j].0, -rho));
        match partner {
            Some(j) => {
                used[j] = true;
                let (rho2, res2) = real[j];
                // res·e^{ρx} + res2·e^{−ρx} with ρ > 0 after the swap below
                let (k, plus, minus) = if rho > 0.0 {
                    ((rho - rho2) / 2.0, res, res2)
                } else {
                    ((rho2 - rho) / 2.0, res2, res)
                };
                out.push(Term::new(plus + minus, Kind::Cosh, k));
                out.push(Term::new(plus - minus, Kind::Sinh, k));
            }
            None => out.push(Term::new(res, Kind::Exp, rho)),
        }
    }

    let mut used = alloc::vec![false; imag.len()];
    for i in 0..imag.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let (w, res) = imag[i];
        let j = (0..imag.len())
            .find(|&j| !used[j] && super::closed_form::same_rate(imag[j].0, -w))
            .ok_or(Error::Unsupported("imaginary root without its conjugate"))?;
        used[j] = true;
        let (w2, res2) = imag[j];
        // residue at +ik, averaged with the conjugate of the one at −ik
        let (k, r) = if w > 0.0 {
            ((w - w2) / 2.0, (res + res2.conj()) / 2.0)
        } else {
            ((w2 - w) / 2.0, (res2 + res.conj()) / 2.0)
        };
        out.push(Term::new(2.0 * r.re, Kind::Cos, k));
        out.push(Term::new(-2.0 * r.im, Kind::Sin, k));
    }
    Ok(ClosedForm::new(out))
}

/// Termwise table transform, combined over the least common denominator.
///
/// | term | transform |
/// |------|-----------|
/// | `e^{kx}` | `1/(p−k)` |
/// | `cos kx` | `p/(p²+k²)` |
/// | `sin kx` | `k/(p²+k²)` |
/// | `cosh kx` | `p/(p²−k²)` |
/// | `sinh kx` | `k/(p²−k²)` |
pub fn forward_laplace(g: &ClosedForm) -> RationalFunction {
    let mut poles: Vec<PoleTerm> = Vec::new();
    let mut push = |pole: Complex64, residue: Complex64| {
        let scale = pole.norm().max(1.0);
        match poles
            .iter_mut()
            .find(|t| (t.pole - pole).norm() <= 1e-12 * scale)
        {
            Some(t) => t.residue += residue,
            None => poles.push(PoleTerm { residue, pole }),
        }
    };
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);
    for t in g.terms() {
        let (c, k) = (t.coeff, t.k);
        match t.kind {
            Kind::Exp => push(re(k), re(c)),
            Kind::Cosh => {
                push(re(k), re(c / 2.0));
                push(re(-k), re(c / 2.0));
            }
            Kind::Sinh => {
                push(re(k), re(c / 2.0));
                push(re(-k), re(-c / 2.0));
            }
            Kind::Cos => {
                push(im(k), re(c / 2.0));
                push(im(-k), re(c / 2.0));
            }
            Kind::Sin => {
                push(im(k), im(-c / 2.0));
                push(im(-k), im(c / 2.0));
            }
        }
    }
    let biggest = poles.iter().fold(0.0f64, |m, t| m.max(t.residue.norm()));
    poles.retain(|t| t.residue.norm() > 1e-15 * biggest);

    let all: Vec<Complex64> = poles.iter().map(|t| t.pole).collect();
    let denominator = Polynomial::from_roots(&all);
    let mut numerator = alloc::vec![Complex64::new(0.0, 0.0); all.len().max(1)];
    for (i, t) in poles.iter().enumerate() {
        let others: Vec<Complex64> = all
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &z)| z)
            .collect();
        for (slot, c) in numerator.iter_mut().zip(product_of_factors(&others)) {
            *slot += t.residue * c;
        }
    }
    let numerator = Polynomial::new(numerator.into_iter().map(|c| c.re).collect());
    RationalFunction::new(numerator, denominator).expect("pole expansion is strictly proper")
}
