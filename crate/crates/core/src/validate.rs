//! Level-set validity checks, residuals and a finite-difference oracle.
//!
//! A solution is a valid level set at `x` when `lower(x, ·)` is
//! non-decreasing in `r`, `upper(x, ·)` is non-increasing and
//! `lower <= upper`. All checks run on an explicit `x × r` grid.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::solver::{DiffCase, FuzzySolution};
use crate::Error;

/// Slack for the grid monotonicity and ordering tests.
pub const LEVEL_SET_SLACK: f64 = 1e-10;

/// Default number of `r` levels.
pub const DEFAULT_R_LEVELS: usize = 11;

/// Default number of `x` samples.
pub const DEFAULT_X_SAMPLES: usize = 101;

#[derive(Debug, Clone, PartialEq)]
pub struct ValidityReport {
    pub monotone_lower_in_r: bool,
    pub monotone_upper_in_r: bool,
    /// `lower <= upper` everywhere on the grid.
    pub ordered: bool,
    pub max_ode_residual: f64,
    /// Largest `|lower|` or `|upper|` on the grid; residual scale.
    pub max_abs_value: f64,
    pub max_boundary_residual: f64,
    pub oracle_max_gap: Option<f64>,
    pub x_count: usize,
    pub r_count: usize,
}

impl ValidityReport {
    pub fn is_valid_level_set(&self) -> bool {
        self.monotone_lower_in_r && self.monotone_upper_in_r && self.ordered
    }

    /// `max_ode_residual <= rel·(1 + max_abs_value)`.
    pub fn residual_within(&self, rel: f64) -> bool {
        self.max_ode_residual <= rel * (1.0 + self.max_abs_value)
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "valid_level_set = {}", self.is_valid_level_set())?;
        writeln!(f, "monotone_lower_in_r = {}", self.monotone_lower_in_r)?;
        writeln!(f, "monotone_upper_in_r = {}", self.monotone_upper_in_r)?;
        writeln!(f, "ordered = {}", self.ordered)?;
        writeln!(f, "max_ode_residual = {:e}", self.max_ode_residual)?;
        writeln!(f, "max_abs_value = {:e}", self.max_abs_value)?;
        writeln!(
            f,
            "max_boundary_residual = {:e}",
            self.max_boundary_residual
        )?;
        match self.oracle_max_gap {
            Some(g) => writeln!(f, "oracle_max_gap = {g:e}")?,
            None => writeln!(f, "oracle_max_gap = none")?,
        }
        writeln!(f, "grid_x = {}", self.x_count)?;
        write!(f, "grid_r = {}", self.r_count)
    }
}

/// `count` equispaced points on `[0, end]`, both ends included.
pub fn grid(end: f64, count: usize) -> impl Iterator<Item = f64> + Clone {
    let last = (count.max(2) - 1) as f64;
    (0..count).map(move |i| {
        if i as f64 == last {
            end
        } else {
            end * i as f64 / last
        }
    })
}

/// Grid evaluation of every level-set condition plus the residuals.
///
/// Panics if `x_count < 2` or `r_count < 2`.
pub fn check_level_set(sol: &FuzzySolution, x_count: usize, r_count: usize) -> ValidityReport {
    assert!(
        x_count >= 2 && r_count >= 2,
        "grid needs at least 2×2 points"
    );
    let length = sol.problem().length();
    let rs: Vec<f64> = grid(1.0, r_count).collect();
    let mut monotone_lower = true;
    let mut monotone_upper = true;
    let mut ordered = true;
    let mut max_abs = 0.0f64;
    for x in grid(length, x_count) {
        let mut prev: Option<(f64, f64)> = None;
        for &r in &rs {
            let (lo, up) = sol.eval(x, r);
            max_abs = max_abs.max(lo.abs()).max(up.abs());
            if lo > up + LEVEL_SET_SLACK {
                ordered = false;
            }
            if let Some((plo, pup)) = prev {
                if lo < plo - LEVEL_SET_SLACK {
                    monotone_lower = false;
                }
                if up > pup + LEVEL_SET_SLACK {
                    monotone_upper = false;
                }
            }
            prev = Some((lo, up));
        }
    }
    ValidityReport {
        monotone_lower_in_r: monotone_lower,
        monotone_upper_in_r: monotone_upper,
        ordered,
        max_ode_residual: residual_ode(sol, x_count, r_count),
        max_abs_value: max_abs,
        max_boundary_residual: residual_boundary(sol, r_count),
        oracle_max_gap: None,
        x_count,
        r_count,
    }
}

/// [`check_level_set`] plus the finite-difference comparison at
/// `r ∈ {0, 0.5, 1}` with `n` intervals.
pub fn check_level_set_with_oracle(
    sol: &FuzzySolution,
    x_count: usize,
    r_count: usize,
    n: usize,
) -> Result<ValidityReport, Error> {
    let mut report = check_level_set(sol, x_count, r_count);
    report.oracle_max_gap = Some(oracle_gap(sol, &[0.0, 0.5, 1.0], n)?);
    Ok(report)
}

/// Sign test of `∂/∂r` at each grid `x`, read off the affine coefficients.
/// Returns `(lower non-decreasing, upper non-increasing)`.
pub fn symbolic_monotonicity(sol: &FuzzySolution, x_count: usize) -> (bool, bool) {
    let length = sol.problem().length();
    grid(length, x_count).fold((true, true), |(lo_ok, up_ok), x| {
        (
            lo_ok && sol.lower().slope_in_r(x) >= -LEVEL_SET_SLACK,
            up_ok && sol.upper().slope_in_r(x) <= LEVEL_SET_SLACK,
        )
    })
}

/// Max ODE residual over the grid, from exact closed-form derivatives.
///
/// Uncoupled cases use `a·y'' + b·y' + c·y` on each branch. Coupled cases
/// use `a·lower'' + c·upper` and `a·upper'' + c·lower`, with `c` including
/// the potential.
pub fn residual_ode(sol: &FuzzySolution, x_count: usize, r_count: usize) -> f64 {
    let prob = sol.problem();
    let ode = prob.ode();
    let c = prob.effective_c();
    let lo1 = sol.lower().differentiate();
    let lo2 = lo1.differentiate();
    let up1 = sol.upper().differentiate();
    let up2 = up1.differentiate();
    let coupled = prob.case().is_coupled();
    let mut worst = 0.0f64;
    for x in grid(prob.length(), x_count) {
        for r in grid(1.0, r_count) {
            let (lo, up) = sol.eval(x, r);
            let (rl, ru) = if coupled {
                (
                    ode.a * lo2.eval(x, r) + c * up,
                    ode.a * up2.eval(x, r) + c * lo,
                )
            } else {
                (
                    ode.a * lo2.eval(x, r) + ode.b * lo1.eval(x, r) + c * lo,
                    ode.a * up2.eval(x, r) + ode.b * up1.eval(x, r) + c * up,
                )
            };
            worst = worst.max(rl.abs()).max(ru.abs());
        }
    }
    worst
}

/// Max distance from the prescribed boundary values at `x = 0` and `x = L`.
pub fn residual_boundary(sol: &FuzzySolution, r_count: usize) -> f64 {
    let prob = sol.problem();
    let mut worst = 0.0f64;
    for r in grid(1.0, r_count) {
        for (x, bc) in [(0.0, prob.bc0()), (prob.length(), prob.bcl())] {
            let (lo, up) = sol.eval(x, r);
            let (want_lo, want_up) = bc.at(r);
            worst = worst.max((lo - want_lo).abs()).max((up - want_up).abs());
        }
    }
    worst
}

/// Second-order central differences for `a·y'' + b·y' + c·y = 0`,
/// `y(0) = y0`, `y(L) = yl`, on `n` intervals. Returns the `n + 1` grid
/// values; the error is `O((L/n)²)`.
pub fn fd_oracle(
    a: f64,
    b: f64,
    c: f64,
    length: f64,
    y0: f64,
    yl: f64,
    n: usize,
) -> Result<Vec<f64>, Error> {
    check_oracle_args(a, length, n)?;
    let h = length / n as f64;
    let sub = a / (h * h) - b / (2.0 * h);
    let diag = -2.0 * a / (h * h) + c;
    let sup = a / (h * h) + b / (2.0 * h);
    let m = n - 1;
    let mut rhs = vec![0.0; m];
    rhs[0] -= sub * y0;
    rhs[m - 1] -= sup * yl;
    let interior = thomas(sub, diag, sup, &rhs)?;
    let mut out = Vec::with_capacity(n + 1);
    out.push(y0);
    out.extend(interior);
    out.push(yl);
    Ok(out)
}

/// Central differences for the coupled pair `a·lower'' + c·upper = 0`,
/// `a·upper'' + c·lower = 0` on the stacked vector `(lower, upper)`,
/// solved with a 2×2 block tridiagonal sweep.
pub fn fd_oracle_coupled(
    a: f64,
    c: f64,
    length: f64,
    start: (f64, f64),
    end: (f64, f64),
    n: usize,
) -> Result<Vec<(f64, f64)>, Error> {
    check_oracle_args(a, length, n)?;
    let h = length / n as f64;
    let off = a / (h * h);
    let diag = Mat2([[-2.0 * a / (h * h), c], [c, -2.0 * a / (h * h)]]);
    let m = n - 1;
    let mut rhs = vec![[0.0, 0.0]; m];
    rhs[0][0] -= off * start.0;
    rhs[0][1] -= off * start.1;
    rhs[m - 1][0] -= off * end.0;
    rhs[m - 1][1] -= off * end.1;

    // forward sweep with off-diagonal blocks off·I
    let mut pivots: Vec<Mat2> = Vec::with_capacity(m);
    let mut d: Vec<[f64; 2]> = Vec::with_capacity(m);
    for i in 0..m {
        if i == 0 {
            pivots.push(diag);
            d.push(rhs[0]);
        } else {
            let inv = pivots[i - 1].inverse()?;
            let piv = diag.sub(&inv.scale(off * off));
            let carry = inv.apply(d[i - 1]);
            pivots.push(piv);
            d.push([rhs[i][0] - off * carry[0], rhs[i][1] - off * carry[1]]);
        }
    }
    let mut x = vec![[0.0, 0.0]; m];
    x[m - 1] = pivots[m - 1].inverse()?.apply(d[m - 1]);
    for i in (0..m - 1).rev() {
        let v = [d[i][0] - off * x[i + 1][0], d[i][1] - off * x[i + 1][1]];
        x[i] = pivots[i].inverse()?.apply(v);
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(start);
    out.extend(x.into_iter().map(|v| (v[0], v[1])));
    out.push(end);
    Ok(out)
}

fn check_oracle_args(a: f64, length: f64, n: usize) -> Result<(), Error> {
    if n < 16 {
        return Err(Error::InvalidProblem("oracle needs at least 16 intervals"));
    }
    if a == 0.0 {
        return Err(Error::InvalidProblem("coefficient a must be nonzero"));
    }
    if length.is_nan() || length <= 0.0 {
        return Err(Error::InvalidProblem("domain length L must be positive"));
    }
    Ok(())
}

/// Constant-coefficient tridiagonal solve (Thomas algorithm).
fn thomas(sub: f64, diag: f64, sup: f64, rhs: &[f64]) -> Result<Vec<f64>, Error> {
    let m = rhs.len();
    let scale = sub.abs() + diag.abs() + sup.abs();
    let mut c_prime = vec![0.0; m];
    let mut d_prime = vec![0.0; m];
    let mut pivot = diag;
    for i in 0..m {
        if i > 0 {
            pivot = diag - sub * c_prime[i - 1];
        }
        if pivot.abs() <= 1e-14 * scale {
            return Err(Error::EigenDegenerate);
        }
        c_prime[i] = sup / pivot;
        let carried = if i > 0 { sub * d_prime[i - 1] } else { 0.0 };
        d_prime[i] = (rhs[i] - carried) / pivot;
    }
    let mut x = vec![0.0; m];
    x[m - 1] = d_prime[m - 1];
    for i in (0..m - 1).rev() {
        x[i] = d_prime[i] - c_prime[i] * x[i + 1];
    }
    Ok(x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Mat2([[f64; 2]; 2]);

impl Mat2 {
    fn inverse(&self) -> Result<Mat2, Error> {
        let [[a, b], [c, d]] = self.0;
        let det = a * d - b * c;
        let scale = (a.abs() + b.abs()) * (c.abs() + d.abs());
        if det.abs() <= 1e-14 * scale {
            return Err(Error::EigenDegenerate);
        }
        Ok(Mat2([[d / det, -b / det], [-c / det, a / det]]))
    }

    fn scale(&self, s: f64) -> Mat2 {
        let [[a, b], [c, d]] = self.0;
        Mat2([[a * s, b * s], [c * s, d * s]])
    }

    fn sub(&self, o: &Mat2) -> Mat2 {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = o.0;
        Mat2([[a - e, b - f], [c - g, d - h]])
    }

    fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        let [[a, b], [c, d]] = self.0;
        [a * v[0] + b * v[1], c * v[0] + d * v[1]]
    }
}

/// Max `|closed form − oracle|` over the oracle grid for each level in
/// `levels`. Coupled cases use [`fd_oracle_coupled`].
pub fn oracle_gap(sol: &FuzzySolution, levels: &[f64], n: usize) -> Result<f64, Error> {
    let prob = sol.problem();
    let ode = prob.ode();
    let c = prob.effective_c();
    let length = prob.length();
    let xs: Vec<f64> = grid(length, n + 1).collect();
    let mut worst = 0.0f64;
    for &r in levels {
        let (l0, u0) = prob.bc0().at(r);
        let (ll, ul) = prob.bcl().at(r);
        let (lo_fd, up_fd): (Vec<f64>, Vec<f64>) = match prob.case() {
            DiffCase::Case12 | DiffCase::Case21 => {
                fd_oracle_coupled(ode.a, c, length, (l0, u0), (ll, ul), n)?
                    .into_iter()
                    .unzip()
            }
            DiffCase::Case11 | DiffCase::Case22 => (
                fd_oracle(ode.a, ode.b, c, length, l0, ll, n)?,
                fd_oracle(ode.a, ode.b, c, length, u0, ul, n)?,
            ),
        };
        for (i, &x) in xs.iter().enumerate() {
            let (lo, up) = sol.eval(x, r);
            worst = worst.max((lo - lo_fd[i]).abs()).max((up - up_fd[i]).abs());
        }
    }
    Ok(worst)
}
