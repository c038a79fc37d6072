//! Closed-form roots of the denominators the solver produces.
//!
//! Only degrees 1 and 2 are solved in general. Cubics and quartics are
//! reduced to those: a zero constant term splits off `p`, and a quartic
//! with only even powers is a quadratic in `p²`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::Polynomial;
use crate::Error;

/// A root and how many times it occurs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

/// Relative distance under which two roots are treated as the same root.
const ROOT_MERGE_TOL: f64 = 1e-9;

/// Roots with multiplicities. Fails only for unsupported shapes.
pub fn root_multiset(d: &Polynomial) -> Result<Vec<Root>, Error> {
    let raw = raw_roots(d)?;
    let scale = raw.iter().fold(1.0f64, |m, z| m.max(z.norm()));
    let mut out: Vec<Root> = Vec::with_capacity(raw.len());
    for z in raw {
        match out
            .iter_mut()
            .find(|root| (root.value - z).norm() <= ROOT_MERGE_TOL * scale)
        {
            Some(root) => root.multiplicity += 1,
            None => out.push(Root {
                value: z,
                multiplicity: 1,
            }),
        }
    }
    Ok(out)
}

/// Simple roots of `d`. Repeated roots are an error.
pub fn roots(d: &Polynomial) -> Result<Vec<Complex64>, Error> {
    let set = root_multiset(d)?;
    if set.iter().any(|r| r.multiplicity > 1) {
        return Err(Error::RepeatedRoot);
    }
    Ok(set.into_iter().map(|r| r.value).collect())
}

fn raw_roots(d: &Polynomial) -> Result<Vec<Complex64>, Error> {
    let deg = match d.degree() {
        None => return Err(Error::ZeroDenominator),
        Some(0) => return Ok(Vec::new()),
        Some(n) => n,
    };
    let lead = d.leading();
    let c = |i: usize| d.coeff(i) / lead;
    let scale = d.max_abs_coeff() / lead.abs();
    let negligible = |v: f64| v.abs() <= 1e-15 * scale;
    match deg {
        1 => Ok(vec![Complex64::new(-c(0), 0.0)]),
        2 => Ok(quadratic(1.0, c(1), c(0)).to_vec()),
        3 if negligible(c(0)) => {
            let mut out = vec![Complex64::new(0.0, 0.0)];
            out.extend(quadratic(1.0, c(2), c(1)));
            Ok(out)
        }
        4 if negligible(c(1)) && negligible(c(3)) => {
            let mut out = Vec::with_capacity(4);
            for q in quadratic(1.0, c(2), c(0)) {
                let s = q.sqrt();
                out.push(s);
                out.push(-s);
            }
            Ok(out)
        }
        4 if negligible(c(0)) => {
            let cubic = Polynomial::new(vec![c(1), c(2), c(3), 1.0]);
            let mut out = vec![Complex64::new(0.0, 0.0)];
            out.extend(raw_roots(&cubic)?);
            Ok(out)
        }
        3 => Err(Error::Unsupported(
            "cubic denominator without a root at p = 0",
        )),
        4 => Err(Error::Unsupported(
            "quartic denominator that is not biquadratic",
        )),
        _ => Err(Error::Unsupported("denominator degree above 4")),
    }
}

/// Roots of `a·p² + b·p + c`, `a ≠ 0`, using the cancellation-free form.
fn quadratic(a: f64, b: f64, c: f64) -> [Complex64; 2] {
    let disc = b * b - 4.0 * a * c;
    if disc >= 0.0 {
        let s = crate::math::sqrt(disc);
        if b == 0.0 {
            let r = s / (2.0 * a);
            return [Complex64::new(r, 0.0), Complex64::new(-r, 0.0)];
        }
        let q = -0.5 * (b + b.signum() * s);
        let r1 = q / a;
        let r2 = if q != 0.0 { c / q } else { 0.0 };
        [Complex64::new(r1, 0.0), Complex64::new(r2, 0.0)]
    } else {
        let re = -b / (2.0 * a);
        let im = crate::math::sqrt(-disc) / (2.0 * a.abs());
        [Complex64::new(re, im), Complex64::new(re, -im)]
    }
}
