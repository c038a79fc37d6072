//! Text renderings of solutions: plot CSV, term tables and report blocks.

use std::fmt::Write as _;

use fbvp_core::solver::{CaseOutcome, FuzzySolution, RClosedForm};
use fbvp_core::validate::grid;
use fbvp_core::Error;

const SUMMARY_LEVELS: [f64; 3] = [0.0, 0.5, 1.0];

/// `x,r,lower,upper` rows, `r` outermost, 17 significant digits.
pub fn csv(sol: &FuzzySolution, x_samples: usize, r_levels: usize) -> String {
    let mut out = String::from("x,r,lower,upper\n");
    let length = sol.problem().length();
    for r in grid(1.0, r_levels) {
        for x in grid(length, x_samples) {
            let (lo, up) = sol.eval(x, r);
            writeln!(out, "{x:.16e},{r:.16e},{lo:.16e},{up:.16e}").unwrap();
        }
    }
    out
}

fn term_table(out: &mut String, name: &str, branch: &RClosedForm) {
    writeln!(out, "{name}(x, r):").unwrap();
    write!(out, "  {:<5} {:>24}", "term", "rate").unwrap();
    for r in SUMMARY_LEVELS {
        write!(out, " {:>24}", format!("coeff at r = {r}")).unwrap();
    }
    out.push('\n');
    if branch.terms().is_empty() {
        out.push_str("  (identically zero)\n");
    }
    for t in branch.terms() {
        write!(out, "  {:<5} {:>24.16e}", t.kind.name(), t.k).unwrap();
        for r in SUMMARY_LEVELS {
            write!(out, " {:>24.16e}", t.coeff.eval(r)).unwrap();
        }
        out.push('\n');
    }
}

/// Closed-form term tables for both branches of one solution.
pub fn summary(sol: &FuzzySolution) -> String {
    let mut out = String::new();
    let case = sol.case();
    writeln!(out, "case {} {case}", case.tag()).unwrap();
    term_table(&mut out, "lower", sol.lower());
    term_table(&mut out, "upper", sol.upper());
    out
}

/// Short machine-readable name of a failure.
pub fn reason(e: &Error) -> &'static str {
    match e {
        Error::TriangularOrder { .. } | Error::InvalidFuzzyNumber(_) => "invalid_fuzzy_number",
        Error::InvalidProblem(_) => "invalid_problem",
        Error::ZeroDenominator | Error::NotStrictlyProper { .. } => "transform_error",
        Error::RepeatedRoot => "repeated_root",
        Error::Unsupported(_) => "unsupported",
        Error::EigenDegenerate => "eigen_degenerate",
        Error::CaseInapplicable(_) => "case_inapplicable",
    }
}

/// One `key = value` block for a case.
pub fn report_block(outcome: &CaseOutcome) -> String {
    let mut out = String::new();
    let case = outcome.case;
    writeln!(out, "case = {}", case.tag()).unwrap();
    writeln!(out, "form = {case}").unwrap();
    match &outcome.solution {
        Err(e) => {
            writeln!(out, "status = failed").unwrap();
            writeln!(out, "reason = {}", reason(e)).unwrap();
            write!(out, "error = {e}").unwrap();
        }
        Ok(sol) => {
            writeln!(out, "status = solved").unwrap();
            let (first, second) = sol.shooting_constants();
            let names = if case.is_coupled() {
                ["h1", "h2"]
            } else {
                ["f1", "f2"]
            };
            for (name, f) in names.into_iter().zip([first, second]) {
                for r in SUMMARY_LEVELS {
                    writeln!(out, "{name}_r{r} = {:.16e}", f.eval(r)).unwrap();
                }
            }
            match &outcome.report {
                Some(rep) => write!(out, "{rep}").unwrap(),
                None => write!(out, "valid_level_set = unchecked").unwrap(),
            }
        }
    }
    out
}

/// All blocks, blank-line separated.
pub fn report(outcomes: &[CaseOutcome]) -> String {
    let mut out = String::new();
    for (i, o) in outcomes.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&report_block(o));
        out.push('\n');
    }
    out
}
