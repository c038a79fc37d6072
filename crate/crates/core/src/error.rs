use core::fmt;

/// Everything that can go wrong while building or solving a problem.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Triangular number with `left <= center <= right` violated.
    TriangularOrder { left: f64, center: f64, right: f64 },
    /// Branches do not form a valid level set.
    InvalidFuzzyNumber(&'static str),
    /// A problem parameter is out of range.
    InvalidProblem(&'static str),
    /// The denominator of a rational function is the zero polynomial.
    ZeroDenominator,
    /// Numerator degree is not below the denominator degree.
    NotStrictlyProper {
        numerator: usize,
        denominator: usize,
    },
    /// A root of multiplicity > 1; the closed-form basis has no `x·e^{kx}` terms.
    RepeatedRoot,
    /// The polynomial or root structure is outside what the closed-form
    /// machinery handles.
    Unsupported(&'static str),
    /// The far boundary condition does not determine the unknown slopes.
    EigenDegenerate,
    /// The requested differentiability case cannot be applied to this ODE.
    CaseInapplicable(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TriangularOrder {
                left,
                center,
                right,
            } => write!(
                f,
                "triangular number needs left <= center <= right, got ({left}, {center}, {right})"
            ),
            Error::InvalidFuzzyNumber(why) => write!(f, "invalid fuzzy number: {why}"),
            Error::InvalidProblem(why) => write!(f, "invalid problem: {why}"),
            Error::ZeroDenominator => f.write_str("denominator is the zero polynomial"),
            Error::NotStrictlyProper {
                numerator,
                denominator,
            } => write!(
                f,
                "rational function is not strictly proper (deg num {numerator} >= deg den {denominator})"
            ),
            Error::RepeatedRoot => f.write_str(
                "unsupported problem: repeated characteristic root (resonant case)",
            ),
            Error::Unsupported(why) => write!(f, "unsupported problem: {why}"),
            Error::EigenDegenerate => f.write_str(
                "eigenvalue degeneracy: boundary conditions do not determine the solution",
            ),
            Error::CaseInapplicable(why) => write!(f, "case inapplicable: {why}"),
        }
    }
}

impl core::error::Error for Error {}
