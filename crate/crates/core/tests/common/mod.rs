//! Shared generators and problem fixtures for the integration tests.
#![allow(dead_code)]

use fbvp_core::fuzzy::FuzzyNumber;
use fbvp_core::laplace::{Polynomial, RationalFunction};
use fbvp_core::solver::{DiffCase, FuzzyBvp, Ode};
use rand::Rng;

/// Schrödinger problem, uncoupled region: `a·u'' − E·u = 0` with a = E = 1.
pub fn schrodinger_free() -> FuzzyBvp {
    FuzzyBvp::new(
        Ode::new(1.0, 0.0, -1.0),
        1.0,
        FuzzyNumber::triangular(1.0, 2.0, 3.0).unwrap(),
        FuzzyNumber::triangular(4.0, 5.0, 6.0).unwrap(),
        DiffCase::Case11,
    )
    .unwrap()
}

/// Schrödinger problem, coupled region: `a·u'' + (V − E)·u = 0` with
/// a = 1, E = 2, V = 1 so that E − V = 1.
pub fn schrodinger_step() -> FuzzyBvp {
    FuzzyBvp::new(
        Ode::new(1.0, 0.0, -2.0),
        1.0,
        FuzzyNumber::triangular(1.0, 2.0, 3.0).unwrap(),
        FuzzyNumber::triangular(4.0, 5.0, 6.0).unwrap(),
        DiffCase::Case12,
    )
    .unwrap()
    .with_potential(1.0)
}

/// `x'' − 3x' + 2x = 0`, `x(0) = (0.5r − 0.5, 1 − r)`, `x(1) = (r − 1, 1 − r)`.
pub fn homogeneous() -> FuzzyBvp {
    FuzzyBvp::new(
        Ode::new(1.0, -3.0, 2.0),
        1.0,
        FuzzyNumber::affine(-0.5, 0.5, 1.0, -1.0).unwrap(),
        FuzzyNumber::affine(-1.0, 1.0, 1.0, -1.0).unwrap(),
        DiffCase::Case11,
    )
    .unwrap()
}

/// Denominator with distinct real or purely imaginary roots, built from
/// one of the shapes the closed-form machinery supports.
pub fn random_supported_denominator<R: Rng>(rng: &mut R) -> Polynomial {
    let k: f64 = rng.gen_range(0.3..2.0);
    let k2: f64 = loop {
        let v = rng.gen_range(0.3..2.0);
        if (v - k).abs() > 0.2 {
            break v;
        }
    };
    let lin = Polynomial::linear_factor;
    match rng.gen_range(0..8) {
        0 => lin(rng.gen_range(-2.0..2.0)),
        1 => &lin(k) * &lin(-k2),
        2 => Polynomial::new(vec![-k * k, 0.0, 1.0]),
        3 => Polynomial::new(vec![k * k, 0.0, 1.0]),
        4 => Polynomial::new(vec![-k.powi(4), 0.0, 0.0, 0.0, 1.0]),
        5 => Polynomial::new(vec![0.0, k * k, 0.0, 1.0]),
        6 => Polynomial::new(vec![0.0, -k * k, 0.0, 1.0]),
        _ => &Polynomial::new(vec![-k * k, 0.0, 1.0]) * &Polynomial::new(vec![k2 * k2, 0.0, 1.0]),
    }
}

pub fn random_numerator<R: Rng>(rng: &mut R, below: usize) -> Polynomial {
    let deg = rng.gen_range(0..below);
    Polynomial::new((0..=deg).map(|_| rng.gen_range(-2.0..2.0)).collect())
}

pub fn random_supported<R: Rng>(rng: &mut R) -> RationalFunction {
    let den = random_supported_denominator(rng);
    let num = random_numerator(rng, den.degree().unwrap());
    RationalFunction::new(num, den).unwrap()
}

pub fn random_fuzzy<R: Rng>(rng: &mut R) -> FuzzyNumber {
    let l0 = rng.gen_range(-10.0..10.0);
    let l1 = rng.gen_range(0.0..5.0);
    let gap = rng.gen_range(0.0..5.0);
    let u1 = rng.gen_range(0.0..5.0);
    let top = l0 + l1 + gap;
    FuzzyNumber::affine(l0, l1, top + u1, -u1).unwrap()
}
