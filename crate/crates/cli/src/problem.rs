//! The problem file: a small TOML document describing one boundary value
//! problem and how to report on it.
//!
//! ```toml
//! [ode]
//! a = 1
//! b = -3
//! c = 2
//!
//! [domain]
//! L = 1
//!
//! [bc0]
//! lower = "-0.5 0.5"
//! upper = "1 -1"
//!
//! [bcL]
//! triangular = "1 2 3"
//!
//! [solve]
//! case = 11
//! ```

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use fbvp_core::fuzzy::{FuzzyNumber, RFun};
use fbvp_core::solver::{DiffCase, FuzzyBvp, Ode};
use fbvp_core::validate::{DEFAULT_R_LEVELS, DEFAULT_X_SAMPLES};
use serde::Deserialize;
use toml::Spanned;

/// Which differentiability cases to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseSelection {
    Single(DiffCase),
    All,
}

impl CaseSelection {
    pub fn cases(self) -> Vec<DiffCase> {
        match self {
            CaseSelection::Single(c) => vec![c],
            CaseSelection::All => DiffCase::ALL.to_vec(),
        }
    }
}

impl FromStr for CaseSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("all") {
            return Ok(CaseSelection::All);
        }
        DiffCase::from_tag(s)
            .map(CaseSelection::Single)
            .ok_or_else(|| format!("expected one of 11, 22, 12, 21, all; got `{s}`"))
    }
}

impl fmt::Display for CaseSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseSelection::Single(c) => f.write_str(c.tag()),
            CaseSelection::All => f.write_str("all"),
        }
    }
}

/// A parsed problem file.
///
/// With [`CaseSelection::All`] the case stored in `problem` is a
/// placeholder and is overridden per case when solving.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemFile {
    pub problem: FuzzyBvp,
    pub cases: CaseSelection,
    pub r_levels: usize,
    pub x_samples: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    /// Malformed TOML, an unknown section or key, or a value of the wrong type.
    Syntax {
        line: usize,
        message: String,
    },
    MissingSection(&'static str),
    MissingKey {
        section: &'static str,
        key: &'static str,
        line: usize,
    },
    InvalidValue {
        section: &'static str,
        key: &'static str,
        line: usize,
        reason: String,
    },
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::MissingKey { line, .. }
            | ParseError::InvalidValue { line, .. } => Some(*line),
            ParseError::MissingSection(_) => None,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            ParseError::MissingSection(name) => write!(f, "missing section [{name}]"),
            ParseError::MissingKey { section, key, line } => {
                write!(f, "line {line}: missing key `{key}` in section [{section}]")
            }
            ParseError::InvalidValue {
                section,
                key,
                line,
                reason,
            } => write!(f, "line {line}: [{section}] {key}: {reason}"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    ode: Option<Spanned<RawOde>>,
    domain: Option<Spanned<RawDomain>>,
    bc0: Option<Spanned<RawBoundary>>,
    #[serde(rename = "bcL")]
    bcl: Option<Spanned<RawBoundary>>,
    solve: Option<Spanned<RawSolve>>,
    potential: Option<Spanned<RawPotential>>,
    output: Option<Spanned<RawOutput>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOde {
    a: Option<Spanned<f64>>,
    b: Option<Spanned<f64>>,
    c: Option<Spanned<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDomain {
    #[serde(rename = "L")]
    length: Option<Spanned<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBoundary {
    triangular: Option<Spanned<String>>,
    lower: Option<Spanned<String>>,
    upper: Option<Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSolve {
    case: Option<Spanned<toml::Value>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPotential {
    height: Option<Spanned<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    r_levels: Option<Spanned<i64>>,
    x_samples: Option<Spanned<i64>>,
}

/// Maps byte offsets to 1-based line numbers.
struct Lines<'a>(&'a str);

impl Lines<'_> {
    fn of(&self, span: Range<usize>) -> usize {
        let end = span.start.min(self.0.len());
        self.0.as_bytes()[..end]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1
    }
}

struct Ctx<'a> {
    lines: Lines<'a>,
    section: &'static str,
    line: usize,
}

impl Ctx<'_> {
    fn missing(&self, key: &'static str) -> ParseError {
        ParseError::MissingKey {
            section: self.section,
            key,
            line: self.line,
        }
    }

    fn invalid<T>(
        &self,
        key: &'static str,
        at: &Spanned<T>,
        reason: impl Into<String>,
    ) -> ParseError {
        ParseError::InvalidValue {
            section: self.section,
            key,
            line: self.lines.of(at.span()),
            reason: reason.into(),
        }
    }

    fn required<'v, T>(
        &self,
        key: &'static str,
        v: &'v Option<Spanned<T>>,
    ) -> Result<&'v Spanned<T>, ParseError> {
        v.as_ref().ok_or_else(|| self.missing(key))
    }

    fn finite(&self, key: &'static str, v: &Spanned<f64>) -> Result<f64, ParseError> {
        let x = *v.get_ref();
        if x.is_finite() {
            Ok(x)
        } else {
            Err(self.invalid(key, v, "must be finite"))
        }
    }

    fn numbers<const N: usize>(
        &self,
        key: &'static str,
        v: &Spanned<String>,
    ) -> Result<[f64; N], ParseError> {
        let mut out = [0.0; N];
        let mut words = v.get_ref().split_whitespace();
        for slot in out.iter_mut() {
            let word = words
                .next()
                .ok_or_else(|| self.invalid(key, v, format!("expected {N} numbers")))?;
            *slot = word
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| self.invalid(key, v, format!("`{word}` is not a finite number")))?;
        }
        if words.next().is_some() {
            return Err(self.invalid(key, v, format!("expected {N} numbers")));
        }
        Ok(out)
    }

    fn level_count(
        &self,
        key: &'static str,
        v: &Option<Spanned<i64>>,
        default: usize,
    ) -> Result<usize, ParseError> {
        match v {
            None => Ok(default),
            Some(s) if *s.get_ref() >= 2 => Ok(*s.get_ref() as usize),
            Some(s) => Err(self.invalid(key, s, "must be at least 2")),
        }
    }
}

fn section<'a, T>(
    lines: &Lines<'a>,
    name: &'static str,
    raw: &'a Option<Spanned<T>>,
) -> Result<(&'a T, Ctx<'a>), ParseError> {
    let s = raw.as_ref().ok_or(ParseError::MissingSection(name))?;
    Ok((s.get_ref(), optional_ctx(lines, name, s)))
}

fn optional_ctx<'a, T>(lines: &Lines<'a>, name: &'static str, s: &Spanned<T>) -> Ctx<'a> {
    Ctx {
        lines: Lines(lines.0),
        section: name,
        line: lines.of(s.span()),
    }
}

fn boundary(raw: &RawBoundary, cx: &Ctx<'_>) -> Result<FuzzyNumber, ParseError> {
    match (&raw.triangular, &raw.lower, &raw.upper) {
        (Some(t), None, None) => {
            let [l, c, r] = cx.numbers::<3>("triangular", t)?;
            FuzzyNumber::triangular(l, c, r).map_err(|e| cx.invalid("triangular", t, e.to_string()))
        }
        (Some(t), _, _) => Err(cx.invalid(
            "triangular",
            t,
            "give either `triangular` or `lower` and `upper`, not both",
        )),
        (None, Some(lo), Some(up)) => {
            let [l0, l1] = cx.numbers::<2>("lower", lo)?;
            let [u0, u1] = cx.numbers::<2>("upper", up)?;
            FuzzyNumber::new(RFun::new(l0, l1), RFun::new(u0, u1))
                .map_err(|e| cx.invalid("upper", up, e.to_string()))
        }
        (None, Some(_), None) => Err(cx.missing("upper")),
        (None, None, _) => Err(cx.missing("triangular")),
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, ParseError> {
        let lines = Lines(text);
        let raw: RawFile = toml::from_str(text).map_err(|e| ParseError::Syntax {
            line: e.span().map_or(1, |s| lines.of(s)),
            message: e.message().trim().to_string(),
        })?;

        let (ode, cx) = section(&lines, "ode", &raw.ode)?;
        let a_raw = cx.required("a", &ode.a)?;
        let a = cx.finite("a", a_raw)?;
        if a == 0.0 {
            return Err(cx.invalid("a", a_raw, "leading coefficient must be nonzero"));
        }
        let b = cx.finite("b", cx.required("b", &ode.b)?)?;
        let c = cx.finite("c", cx.required("c", &ode.c)?)?;

        let (domain, cx) = section(&lines, "domain", &raw.domain)?;
        let l_raw = cx.required("L", &domain.length)?;
        let length = cx.finite("L", l_raw)?;
        if length <= 0.0 {
            return Err(cx.invalid("L", l_raw, "must be positive"));
        }

        let (bc0, cx) = section(&lines, "bc0", &raw.bc0)?;
        let bc0 = boundary(bc0, &cx)?;
        let (bcl, cx) = section(&lines, "bcL", &raw.bcl)?;
        let bcl = boundary(bcl, &cx)?;

        let cases = match &raw.solve {
            None => CaseSelection::All,
            Some(s) => {
                let cx = optional_ctx(&lines, "solve", s);
                let v = cx.required("case", &s.get_ref().case)?;
                let text = match v.get_ref() {
                    toml::Value::Integer(i) => i.to_string(),
                    toml::Value::String(s) => s.clone(),
                    _ => return Err(cx.invalid("case", v, "expected 11, 22, 12, 21 or all")),
                };
                text.parse::<CaseSelection>()
                    .map_err(|why| cx.invalid("case", v, why))?
            }
        };

        let potential = match &raw.potential {
            None => 0.0,
            Some(s) => {
                let cx = optional_ctx(&lines, "potential", s);
                cx.finite("height", cx.required("height", &s.get_ref().height)?)?
            }
        };

        let (r_levels, x_samples) = match &raw.output {
            None => (DEFAULT_R_LEVELS, DEFAULT_X_SAMPLES),
            Some(s) => {
                let cx = optional_ctx(&lines, "output", s);
                (
                    cx.level_count("r_levels", &s.get_ref().r_levels, DEFAULT_R_LEVELS)?,
                    cx.level_count("x_samples", &s.get_ref().x_samples, DEFAULT_X_SAMPLES)?,
                )
            }
        };

        let case = match cases {
            CaseSelection::Single(c) => c,
            CaseSelection::All => DiffCase::Case11,
        };
        let problem = FuzzyBvp::new(Ode::new(a, b, c), length, bc0, bcl, case)
            .map_err(|e| ParseError::InvalidValue {
                section: "ode",
                key: "a",
                line: 1,
                reason: e.to_string(),
            })?
            .with_potential(potential);

        Ok(ProblemFile {
            problem,
            cases,
            r_levels,
            x_samples,
        })
    }
}

fn write_boundary(f: &mut fmt::Formatter<'_>, name: &str, v: FuzzyNumber) -> fmt::Result {
    let (lo, up) = (v.lower(), v.upper());
    writeln!(f, "[{name}]")?;
    writeln!(f, "lower = \"{:?} {:?}\"", lo.c0, lo.c1)?;
    writeln!(f, "upper = \"{:?} {:?}\"", up.c0, up.c1)
}

/// Renders a file that parses back to the same [`ProblemFile`].
/// Boundary values are always written in `lower`/`upper` form.
impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.problem;
        let ode = p.ode();
        writeln!(f, "[ode]")?;
        writeln!(f, "a = {:?}", ode.a)?;
        writeln!(f, "b = {:?}", ode.b)?;
        writeln!(f, "c = {:?}", ode.c)?;
        writeln!(f)?;
        writeln!(f, "[domain]")?;
        writeln!(f, "L = {:?}", p.length())?;
        writeln!(f)?;
        write_boundary(f, "bc0", p.bc0())?;
        writeln!(f)?;
        write_boundary(f, "bcL", p.bcl())?;
        writeln!(f)?;
        writeln!(f, "[solve]")?;
        writeln!(f, "case = \"{}\"", self.cases)?;
        if p.potential() != 0.0 {
            writeln!(f)?;
            writeln!(f, "[potential]")?;
            writeln!(f, "height = {:?}", p.potential())?;
        }
        writeln!(f)?;
        writeln!(f, "[output]")?;
        writeln!(f, "r_levels = {}", self.r_levels)?;
        writeln!(f, "x_samples = {}", self.x_samples)
    }
}
