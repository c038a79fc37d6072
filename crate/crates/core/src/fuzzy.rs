//! Parametric fuzzy numbers with affine α-cut branches.
//!
//! A fuzzy number is stored as the pair `(lower(r), upper(r))`, `r ∈ [0, 1]`,
//! where each branch is affine in `r`. Every boundary value and every
//! solution coefficient the solver produces has this form, so all checks
//! below are exact endpoint arithmetic rather than sampling.

use core::ops::{Add, Mul, Neg, Sub};

use crate::math::abs;
use crate::{Error, FUZZY_TOL};

/// The affine map `r ↦ c0 + c1·r` on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RFun {
    pub c0: f64,
    pub c1: f64,
}

impl RFun {
    pub const ZERO: RFun = RFun { c0: 0.0, c1: 0.0 };

    pub const fn new(c0: f64, c1: f64) -> Self {
        RFun { c0, c1 }
    }

    /// An `r`-independent value.
    pub const fn constant(c0: f64) -> Self {
        RFun { c0, c1: 0.0 }
    }

    #[inline]
    pub fn eval(self, r: f64) -> f64 {
        self.c0 + self.c1 * r
    }

    /// Non-decreasing on `[0, 1]`, with `FUZZY_TOL` slack on the slope.
    pub fn is_nondecreasing(self) -> bool {
        self.c1 >= -FUZZY_TOL
    }

    pub fn is_nonincreasing(self) -> bool {
        self.c1 <= FUZZY_TOL
    }

    pub fn is_finite(self) -> bool {
        self.c0.is_finite() && self.c1.is_finite()
    }

    /// Rebuild the affine map from its values at `r = 0` and `r = 1`.
    pub fn from_endpoints(at0: f64, at1: f64) -> Self {
        RFun::new(at0, at1 - at0)
    }
}

impl Add for RFun {
    type Output = RFun;
    fn add(self, rhs: RFun) -> RFun {
        RFun::new(self.c0 + rhs.c0, self.c1 + rhs.c1)
    }
}

impl Sub for RFun {
    type Output = RFun;
    fn sub(self, rhs: RFun) -> RFun {
        RFun::new(self.c0 - rhs.c0, self.c1 - rhs.c1)
    }
}

impl Neg for RFun {
    type Output = RFun;
    fn neg(self) -> RFun {
        RFun::new(-self.c0, -self.c1)
    }
}

impl Mul<f64> for RFun {
    type Output = RFun;
    fn mul(self, k: f64) -> RFun {
        RFun::new(self.c0 * k, self.c1 * k)
    }
}

impl Mul<RFun> for f64 {
    type Output = RFun;
    fn mul(self, f: RFun) -> RFun {
        f * self
    }
}

/// A fuzzy number `(lower(r), upper(r))` in parametric form.
///
/// Invariants, checked on construction with `FUZZY_TOL` slack: `lower` is
/// non-decreasing, `upper` is non-increasing and `lower(1) <= upper(1)`.
/// Together these give `lower(r) <= upper(r)` on all of `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzyNumber {
    lower: RFun,
    upper: RFun,
}

impl FuzzyNumber {
    pub fn new(lower: RFun, upper: RFun) -> Result<Self, Error> {
        check_level_set(lower, upper)?;
        Ok(FuzzyNumber { lower, upper })
    }

    /// `lower(r) = l0 + l1·r`, `upper(r) = u0 + u1·r`.
    pub fn affine(l0: f64, l1: f64, u0: f64, u1: f64) -> Result<Self, Error> {
        FuzzyNumber::new(RFun::new(l0, l1), RFun::new(u0, u1))
    }

    /// Triangular number `(left, center, right)`:
    /// `lower(α) = left + (center − left)·α`, `upper(α) = right − (right − center)·α`.
    pub fn triangular(left: f64, center: f64, right: f64) -> Result<Self, Error> {
        if !(left <= center && center <= right) {
            return Err(Error::TriangularOrder {
                left,
                center,
                right,
            });
        }
        FuzzyNumber::new(
            RFun::new(left, center - left),
            RFun::new(right, -(right - center)),
        )
    }

    pub fn crisp(value: f64) -> Self {
        FuzzyNumber {
            lower: RFun::constant(value),
            upper: RFun::constant(value),
        }
    }

    pub fn lower(&self) -> RFun {
        self.lower
    }

    pub fn upper(&self) -> RFun {
        self.upper
    }

    /// The α-cut `[lower(r), upper(r)]`.
    pub fn at(&self, r: f64) -> (f64, f64) {
        (self.lower.eval(r), self.upper.eval(r))
    }

    pub fn is_crisp(&self) -> bool {
        self.lower == self.upper && self.lower.c1 == 0.0
    }

    /// Scalar multiplication; a negative factor swaps the branches.
    pub fn scale(&self, j: f64) -> Self {
        if j >= 0.0 {
            FuzzyNumber {
                lower: self.lower * j,
                upper: self.upper * j,
            }
        } else {
            FuzzyNumber {
                lower: self.upper * j,
                upper: self.lower * j,
            }
        }
    }

    /// Hukuhara difference `self ⊖ y`: the `z` with `y + z = self`, if it is
    /// a valid fuzzy number.
    pub fn h_difference(&self, y: &FuzzyNumber) -> Option<FuzzyNumber> {
        FuzzyNumber::new(self.lower - y.lower, self.upper - y.upper).ok()
    }

    /// Hausdorff distance
    /// `sup_r max(|Δlower(r)|, |Δupper(r)|)`; attained at `r ∈ {0, 1}`.
    pub fn hausdorff(&self, other: &FuzzyNumber) -> f64 {
        let dl = self.lower - other.lower;
        let du = self.upper - other.upper;
        [dl.eval(0.0), dl.eval(1.0), du.eval(0.0), du.eval(1.0)]
            .into_iter()
            .map(abs)
            .fold(0.0, f64::max)
    }
}

impl Add for FuzzyNumber {
    type Output = FuzzyNumber;
    fn add(self, rhs: FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber {
            lower: self.lower + rhs.lower,
            upper: self.upper + rhs.upper,
        }
    }
}

fn check_level_set(lower: RFun, upper: RFun) -> Result<(), Error> {
    if !lower.is_finite() || !upper.is_finite() {
        return Err(Error::InvalidFuzzyNumber("non-finite coefficient"));
    }
    if !lower.is_nondecreasing() {
        return Err(Error::InvalidFuzzyNumber("lower branch decreases in r"));
    }
    if !upper.is_nonincreasing() {
        return Err(Error::InvalidFuzzyNumber("upper branch increases in r"));
    }
    if lower.eval(1.0) > upper.eval(1.0) + FUZZY_TOL {
        return Err(Error::InvalidFuzzyNumber("lower exceeds upper"));
    }
    Ok(())
}
