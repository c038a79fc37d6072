use super::Polynomial;
use crate::Error;

/// Strictly proper ratio `numerator / denominator` with a monic denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self, Error> {
        let Some(den_deg) = denominator.degree() else {
            return Err(Error::ZeroDenominator);
        };
        if let Some(num_deg) = numerator.degree() {
            if num_deg >= den_deg {
                return Err(Error::NotStrictlyProper {
                    numerator: num_deg,
                    denominator: den_deg,
                });
            }
        }
        let lead = denominator.leading();
        Ok(RationalFunction {
            numerator: numerator.scale(1.0 / lead),
            denominator: denominator.scale(1.0 / lead),
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn eval(&self, p: f64) -> f64 {
        self.numerator.eval(p) / self.denominator.eval(p)
    }

    pub fn scale(&self, s: f64) -> RationalFunction {
        RationalFunction {
            numerator: self.numerator.scale(s),
            denominator: self.denominator.clone(),
        }
    }

    /// Sum over the product denominator, or the shared one when the two
    /// denominators already agree to `1e-14`.
    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        if self.denominator.approx_eq(&other.denominator, 1e-14) {
            return RationalFunction {
                numerator: &self.numerator + &other.numerator,
                denominator: self.denominator.clone(),
            };
        }
        RationalFunction {
            numerator: &(&self.numerator * &other.denominator)
                + &(&other.numerator * &self.denominator),
            denominator: &self.denominator * &other.denominator,
        }
    }

    /// Equality by cross-multiplication, `n1·d2 = n2·d1` coefficientwise.
    /// Works for unreduced representations of the same function.
    pub fn approx_eq(&self, other: &RationalFunction, tol: f64) -> bool {
        let lhs = &self.numerator * &other.denominator;
        let rhs = &other.numerator * &self.denominator;
        lhs.approx_eq(&rhs, tol)
    }
}
