//! Fuzzy Laplace transform solution of `a·y'' + b·y' + c·y = 0`,
//! `y(0) = A`, `y(L) = B`, with fuzzy boundary values `A`, `B`.
//!
//! Each branch is transformed with `L[y''] = p²Y − p·y(0) − y'(0)` and
//! `L[y'] = pY − y(0)`. The unknown initial slope `y'(0)` is kept as a
//! symbolic shooting constant, the transform is inverted with the constant
//! still free (the response is affine in it) and the far boundary condition
//! then fixes it as an affine function of `r`.
//!
//! For the cases (1,1) and (2,2) the branches decouple. For (1,2) and (2,1)
//! the second derivative swaps the endpoints, so `a·lower'' = κ·upper` and
//! `a·upper'' = κ·lower` with `κ = −(c + V)/a`. Transforming the pair gives
//! the biquadratic denominator `p⁴ − κ²`, whose inverse is spanned by
//! `cos μx`, `sin μx`, `cosh μx`, `sinh μx`, `μ = √κ`; the two shooting
//! constants come from a 2×2 system at `x = L`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::fuzzy::{FuzzyNumber, RFun};
use crate::laplace::{inverse_laplace, ClosedForm, Kind, Polynomial, RationalFunction, Term};
use crate::math::sqrt;
use crate::validate::{check_level_set, ValidityReport};
use crate::Error;

/// Generalized Hukuhara differentiability of the first and second derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiffCase {
    Case11,
    Case22,
    Case12,
    Case21,
}

impl DiffCase {
    pub const ALL: [DiffCase; 4] = [
        DiffCase::Case11,
        DiffCase::Case22,
        DiffCase::Case12,
        DiffCase::Case21,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            DiffCase::Case11 => "11",
            DiffCase::Case22 => "22",
            DiffCase::Case12 => "12",
            DiffCase::Case21 => "21",
        }
    }

    pub fn from_tag(tag: &str) -> Option<DiffCase> {
        DiffCase::ALL.into_iter().find(|c| c.tag() == tag)
    }

    /// Mixed cases couple the lower and upper branches.
    pub fn is_coupled(self) -> bool {
        matches!(self, DiffCase::Case12 | DiffCase::Case21)
    }

    /// First derivative is (ii)-differentiable: `y' = (upper', lower')`.
    pub fn first_derivative_swapped(self) -> bool {
        matches!(self, DiffCase::Case22 | DiffCase::Case21)
    }
}

impl fmt::Display for DiffCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", &self.tag()[..1], &self.tag()[1..])
    }
}

/// Constant coefficients of `a·y'' + b·y' + c·y = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ode {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Ode {
    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        Ode { a, b, c }
    }

    /// `a·p² + b·p + c`.
    pub fn characteristic(&self) -> Polynomial {
        Polynomial::new(vec![self.c, self.b, self.a])
    }
}

/// A two-point fuzzy boundary value problem on `[0, L]`.
///
/// `potential` is the height of a step potential present only in the
/// coupled cases; it adds to `c` there. This mirrors a Schrödinger problem
/// whose uncoupled region has zero potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzyBvp {
    ode: Ode,
    potential: f64,
    length: f64,
    bc0: FuzzyNumber,
    bcl: FuzzyNumber,
    case: DiffCase,
}

impl FuzzyBvp {
    pub fn new(
        ode: Ode,
        length: f64,
        bc0: FuzzyNumber,
        bcl: FuzzyNumber,
        case: DiffCase,
    ) -> Result<Self, Error> {
        if ode.a == 0.0 || !ode.a.is_finite() {
            return Err(Error::InvalidProblem(
                "coefficient a must be finite and nonzero",
            ));
        }
        if !ode.b.is_finite() || !ode.c.is_finite() {
            return Err(Error::InvalidProblem("coefficients b and c must be finite"));
        }
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::InvalidProblem("domain length L must be positive"));
        }
        Ok(FuzzyBvp {
            ode,
            potential: 0.0,
            length,
            bc0,
            bcl,
            case,
        })
    }

    pub fn with_potential(mut self, height: f64) -> Self {
        self.potential = height;
        self
    }

    pub fn with_case(mut self, case: DiffCase) -> Self {
        self.case = case;
        self
    }

    pub fn ode(&self) -> Ode {
        self.ode
    }

    pub fn potential(&self) -> f64 {
        self.potential
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn bc0(&self) -> FuzzyNumber {
        self.bc0
    }

    pub fn bcl(&self) -> FuzzyNumber {
        self.bcl
    }

    pub fn case(&self) -> DiffCase {
        self.case
    }

    /// Zero-order coefficient seen by the current case.
    pub fn effective_c(&self) -> f64 {
        if self.case.is_coupled() {
            self.ode.c + self.potential
        } else {
            self.ode.c
        }
    }
}

/// Transformed branch equation `D(p)·Y(p) = N(p; r, F)` with
/// `N = value_const + r·value_slope + F·shooting`.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchTransform {
    pub denominator: Polynomial,
    pub value_const: Polynomial,
    pub value_slope: Polynomial,
    pub shooting: Polynomial,
}

impl BranchTransform {
    fn new(ode: Ode, y0: RFun) -> Self {
        // a(p²Y − p·y0 − F) + b(pY − y0) + cY = 0
        let value = Polynomial::new(vec![ode.b, ode.a]);
        BranchTransform {
            denominator: ode.characteristic(),
            value_const: value.scale(y0.c0),
            value_slope: value.scale(y0.c1),
            shooting: Polynomial::constant(ode.a),
        }
    }

    /// Numerator at a given level and shooting constant.
    pub fn numerator(&self, r: f64, shooting: f64) -> Polynomial {
        &(&self.value_const + &self.value_slope.scale(r)) + &self.shooting.scale(shooting)
    }

    /// `Y(p)` for fixed `r` and shooting constant.
    pub fn at(&self, r: f64, shooting: f64) -> Result<RationalFunction, Error> {
        RationalFunction::new(self.numerator(r, shooting), self.denominator.clone())
    }
}

/// Both branch equations of an uncoupled problem. `lower` carries the
/// shooting constant `F₁`, `upper` carries `F₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedBvp {
    pub lower: BranchTransform,
    pub upper: BranchTransform,
}

/// Branchwise transform of the problem with the unknown slopes left symbolic.
pub fn transform_bvp(prob: &FuzzyBvp) -> TransformedBvp {
    let ode = Ode::new(prob.ode.a, prob.ode.b, prob.effective_c());
    TransformedBvp {
        lower: BranchTransform::new(ode, prob.bc0.lower()),
        upper: BranchTransform::new(ode, prob.bc0.upper()),
    }
}

/// Closed-form term whose coefficient is affine in `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RTerm {
    pub kind: Kind,
    pub k: f64,
    pub coeff: RFun,
}

/// A [`ClosedForm`] whose coefficients depend affinely on `r`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RClosedForm {
    terms: Vec<RTerm>,
}

impl RClosedForm {
    /// `constant + r·slope`.
    pub fn from_affine(constant: &ClosedForm, slope: &ClosedForm) -> Self {
        let mut terms: Vec<RTerm> = Vec::new();
        let mut put = |t: &Term, into_slope: bool| {
            let idx = match terms
                .iter()
                .position(|o| o.kind == t.kind && same_rate(o.k, t.k))
            {
                Some(i) => i,
                None => {
                    terms.push(RTerm {
                        kind: t.kind,
                        k: t.k,
                        coeff: RFun::ZERO,
                    });
                    terms.len() - 1
                }
            };
            if into_slope {
                terms[idx].coeff.c1 += t.coeff;
            } else {
                terms[idx].coeff.c0 += t.coeff;
            }
        };
        for t in constant.terms() {
            put(t, false);
        }
        for t in slope.terms() {
            put(t, true);
        }
        terms.sort_by(|a, b| (a.kind, a.k).partial_cmp(&(b.kind, b.k)).unwrap());
        RClosedForm { terms }
    }

    /// `Σ weight_i(r) · form_i`.
    pub fn combine(parts: &[(RFun, &ClosedForm)]) -> Self {
        let constant = parts
            .iter()
            .fold(ClosedForm::zero(), |acc, (w, f)| acc.add(&f.scale(w.c0)));
        let slope = parts
            .iter()
            .fold(ClosedForm::zero(), |acc, (w, f)| acc.add(&f.scale(w.c1)));
        RClosedForm::from_affine(&constant, &slope)
    }

    pub fn terms(&self) -> &[RTerm] {
        &self.terms
    }

    /// The crisp closed form at level `r`.
    pub fn at(&self, r: f64) -> ClosedForm {
        ClosedForm::new(
            self.terms
                .iter()
                .map(|t| Term::new(t.coeff.eval(r), t.kind, t.k)),
        )
    }

    pub fn constant_part(&self) -> ClosedForm {
        self.at(0.0)
    }

    pub fn slope_part(&self) -> ClosedForm {
        ClosedForm::new(
            self.terms
                .iter()
                .map(|t| Term::new(t.coeff.c1, t.kind, t.k)),
        )
    }

    pub fn eval(&self, x: f64, r: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.eval(r) * t.kind.basis(t.k, x))
            .sum()
    }

    /// `∂/∂r` at `x`; constant in `r` because the dependence is affine.
    pub fn slope_in_r(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.c1 * t.kind.basis(t.k, x))
            .sum()
    }

    pub fn differentiate(&self) -> RClosedForm {
        RClosedForm::from_affine(
            &self.constant_part().differentiate(),
            &self.slope_part().differentiate(),
        )
    }
}

fn same_rate(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

/// Lower and upper solution envelopes `(x, r) ↦ (lower, upper)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySolution {
    lower: RClosedForm,
    upper: RClosedForm,
    slopes: (RFun, RFun),
    problem: FuzzyBvp,
}

impl FuzzySolution {
    /// Assemble a solution from explicit envelopes without solving anything.
    /// Nothing is checked; use [`crate::validate`] to inspect the result.
    pub fn from_parts(
        problem: FuzzyBvp,
        lower: RClosedForm,
        upper: RClosedForm,
        slopes: (RFun, RFun),
    ) -> Self {
        FuzzySolution {
            lower,
            upper,
            slopes,
            problem,
        }
    }

    pub fn lower(&self) -> &RClosedForm {
        &self.lower
    }

    pub fn upper(&self) -> &RClosedForm {
        &self.upper
    }

    pub fn case(&self) -> DiffCase {
        self.problem.case
    }

    pub fn problem(&self) -> &FuzzyBvp {
        &self.problem
    }

    pub fn eval(&self, x: f64, r: f64) -> (f64, f64) {
        (self.lower.eval(x, r), self.upper.eval(x, r))
    }

    /// Shooting constants `(lower'(0, r), upper'(0, r))`: `F₁, F₂` for the
    /// uncoupled cases and `H₁, H₂` for the coupled ones.
    pub fn shooting_constants(&self) -> (RFun, RFun) {
        self.slopes
    }

    /// Endpoints of the fuzzy derivative `y'(0)`. Under (ii)-differentiability
    /// of the first derivative the branch slopes trade places.
    pub fn derivative_at_origin(&self) -> (RFun, RFun) {
        let (lo, up) = self.slopes;
        if self.problem.case.first_derivative_swapped() {
            (up, lo)
        } else {
            (lo, up)
        }
    }
}

/// Relative size under which an elimination pivot counts as zero.
const PIVOT_TOL: f64 = 1e-12;

fn coeff_scale(f: &ClosedForm, x: f64) -> f64 {
    f.terms()
        .iter()
        .map(|t| t.coeff.abs() * t.kind.basis(t.k, x).abs().max(1.0))
        .sum()
}

fn invert(num: &Polynomial, den: &Polynomial) -> Result<ClosedForm, Error> {
    inverse_laplace(&RationalFunction::new(num.clone(), den.clone())?)
}

/// Cases (1,1) and (2,2): each branch is solved on its own.
pub fn solve_uncoupled(prob: &FuzzyBvp) -> Result<FuzzySolution, Error> {
    if prob.case.is_coupled() {
        return Err(Error::CaseInapplicable(
            "solve_uncoupled handles only cases (1,1) and (2,2)",
        ));
    }
    let t = transform_bvp(prob);
    let length = prob.length;
    let solve_branch = |bt: &BranchTransform, y_end: RFun| -> Result<(RClosedForm, RFun), Error> {
        let g0 = invert(&bt.value_const, &bt.denominator)?;
        let g1 = invert(&bt.value_slope, &bt.denominator)?;
        let h = invert(&bt.shooting, &bt.denominator)?;
        let pivot = h.eval(length);
        if pivot.abs() <= PIVOT_TOL * coeff_scale(&h, length) {
            return Err(Error::EigenDegenerate);
        }
        let f = RFun::new(
            (y_end.c0 - g0.eval(length)) / pivot,
            (y_end.c1 - g1.eval(length)) / pivot,
        );
        let constant = g0.add(&h.scale(f.c0));
        let slope = g1.add(&h.scale(f.c1));
        Ok((RClosedForm::from_affine(&constant, &slope), f))
    };
    let (lower, f1) = solve_branch(&t.lower, prob.bcl.lower())?;
    let (upper, f2) = solve_branch(&t.upper, prob.bcl.upper())?;
    Ok(FuzzySolution {
        lower,
        upper,
        slopes: (f1, f2),
        problem: *prob,
    })
}

/// Basis responses of the coupled pair. With `D = p⁴ − κ²`:
/// `own_value = L⁻¹[p³/D]`, `own_slope = L⁻¹[p²/D]`,
/// `other_value = L⁻¹[κp/D]`, `other_slope = L⁻¹[κ/D]`, so that
/// `lower = ℓ₀·own_value + H₁·own_slope + u₀·other_value + H₂·other_slope`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoupledBasis {
    pub kappa: f64,
    pub own_value: ClosedForm,
    pub own_slope: ClosedForm,
    pub other_value: ClosedForm,
    pub other_slope: ClosedForm,
}

impl CoupledBasis {
    pub fn new(kappa: f64) -> Result<Self, Error> {
        let den = Polynomial::new(vec![-kappa * kappa, 0.0, 0.0, 0.0, 1.0]);
        Ok(CoupledBasis {
            kappa,
            own_value: invert(&Polynomial::new(vec![0.0, 0.0, 0.0, 1.0]), &den)?,
            own_slope: invert(&Polynomial::new(vec![0.0, 0.0, 1.0]), &den)?,
            other_value: invert(&Polynomial::new(vec![0.0, kappa]), &den)?,
            other_slope: invert(&Polynomial::constant(kappa), &den)?,
        })
    }

    /// Frequency `μ = √κ` of the four basis functions.
    pub fn mu(&self) -> f64 {
        sqrt(self.kappa)
    }
}

/// `κ` of the coupled pair `a·lower'' = κ·a·upper`, or why it does not apply.
pub fn coupled_kappa(prob: &FuzzyBvp) -> Result<f64, Error> {
    if prob.ode.b != 0.0 {
        return Err(Error::CaseInapplicable(
            "coupled cases (1,2)/(2,1) need b = 0; use case (1,1) or (2,2)",
        ));
    }
    let kappa = -(prob.ode.c + prob.potential) / prob.ode.a;
    if kappa.is_nan() || kappa <= 0.0 {
        return Err(Error::CaseInapplicable(
            "coupled cases need kappa = -(c + potential)/a > 0; use case (1,1) or (2,2)",
        ));
    }
    Ok(kappa)
}

/// Cases (1,2) and (2,1): the second derivative swaps the branches.
pub fn solve_coupled(prob: &FuzzyBvp) -> Result<FuzzySolution, Error> {
    if !prob.case.is_coupled() {
        return Err(Error::CaseInapplicable(
            "solve_coupled handles only cases (1,2) and (2,1)",
        ));
    }
    let kappa = coupled_kappa(prob)?;
    let basis = CoupledBasis::new(kappa)?;
    let length = prob.length;
    let (l0, u0) = (prob.bc0.lower(), prob.bc0.upper());
    let (ll, ul) = (prob.bcl.lower(), prob.bcl.upper());

    let a = basis.own_value.eval(length);
    let b = basis.own_slope.eval(length);
    let c = basis.other_value.eval(length);
    let e = basis.other_slope.eval(length);
    // b·H₁ + e·H₂ = P, e·H₁ + b·H₂ = Q
    let p = ll - l0 * a - u0 * c;
    let q = ul - u0 * a - l0 * c;
    let det = b * b - e * e;
    if det.abs() <= PIVOT_TOL * (b * b + e * e) {
        return Err(Error::EigenDegenerate);
    }
    let h1 = (p * b - q * e) * (1.0 / det);
    let h2 = (q * b - p * e) * (1.0 / det);

    let lower = RClosedForm::combine(&[
        (l0, &basis.own_value),
        (h1, &basis.own_slope),
        (u0, &basis.other_value),
        (h2, &basis.other_slope),
    ]);
    let upper = RClosedForm::combine(&[
        (u0, &basis.own_value),
        (h2, &basis.own_slope),
        (l0, &basis.other_value),
        (h1, &basis.other_slope),
    ]);
    Ok(FuzzySolution {
        lower,
        upper,
        slopes: (h1, h2),
        problem: *prob,
    })
}

/// Dispatch on the problem's differentiability case.
pub fn solve(prob: &FuzzyBvp) -> Result<FuzzySolution, Error> {
    if prob.case.is_coupled() {
        solve_coupled(prob)
    } else {
        solve_uncoupled(prob)
    }
}

/// Result of one differentiability case in [`enumerate_cases`].
#[derive(Debug, Clone, PartialEq)]
pub struct CaseOutcome {
    pub case: DiffCase,
    pub solution: Result<FuzzySolution, Error>,
    pub report: Option<ValidityReport>,
}

/// Solve all four cases and attach a validity report to each solution.
/// Failures are returned as values; the order follows [`DiffCase::ALL`].
pub fn enumerate_cases(prob: &FuzzyBvp, x_count: usize, r_count: usize) -> Vec<CaseOutcome> {
    DiffCase::ALL
        .into_iter()
        .map(|case| {
            let solution = solve(&prob.with_case(case));
            let report = solution
                .as_ref()
                .ok()
                .map(|s| check_level_set(s, x_count, r_count));
            CaseOutcome {
                case,
                solution,
                report,
            }
        })
        .collect()
}
