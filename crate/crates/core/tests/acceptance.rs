//! Acceptance suite. Runs every exit criterion, prints one line per
//! criterion and fails the test target if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use fbvp_core::fuzzy::FuzzyNumber;
use fbvp_core::laplace::{forward_laplace, inverse_laplace};
use fbvp_core::solver::{enumerate_cases, solve, DiffCase, FuzzyBvp, FuzzySolution, Ode};
use fbvp_core::validate::{
    check_level_set, fd_oracle, grid, oracle_gap, residual_boundary, residual_ode,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn max_abs(sol: &FuzzySolution, xs: usize, rs: usize) -> f64 {
    let mut m = 0.0f64;
    for x in grid(sol.problem().length(), xs) {
        for r in grid(1.0, rs) {
            let (lo, up) = sol.eval(x, r);
            m = m.max(lo.abs()).max(up.abs());
        }
    }
    m
}

/// F₁, F₂ in closed form for the uncoupled Schrödinger case with a = 1, E = 1, L = 1.
fn closed_form_f(r: f64) -> (f64, f64) {
    let (a, b, l) = (1.0f64, 1.0f64, 1.0f64);
    let k = (b / a).sqrt();
    let plus = (k * l).exp() + (-k * l).exp();
    let minus = (k * l).exp() - (-k * l).exp();
    let den = 0.5 * (a / b).sqrt() * minus;
    (
        (4.0 + r - (1.0 + r) / 2.0 * plus) / den,
        (6.0 - r - (3.0 - r) / 2.0 * plus) / den,
    )
}

/// H₁, H₂ in closed form for the coupled Schrödinger case, cᵢ at x = L = 1 with
/// a = 1, b − l = 1.
fn closed_form_h(r: f64) -> (f64, f64) {
    let x: f64 = 1.0;
    let c1 = x.cos() + x.cosh();
    let c2 = x.sin() + x.sinh();
    let c3 = x.cos() - x.cosh();
    let c4 = x.sin() - x.sinh();
    let d = c2 * c2 - c4 * c4;
    let p = 4.0 + r - (r + 1.0) / 2.0 * c1 + (3.0 - r) / 2.0 * c3;
    let q = 6.0 - r - (3.0 - r) / 2.0 * c1 + (1.0 + r) / 2.0 * c3;
    (
        2.0 * c2 / d * p + 2.0 * c4 / d * q,
        2.0 * c4 / d * p + 2.0 * c2 / d * q,
    )
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let sol = solve(&common::schrodinger_free()).map_err(|e| e.to_string())?;
    let (f1, f2) = sol.shooting_constants();
    let mut worst = 0.0f64;
    for r in [0.0, 0.5, 1.0] {
        let (w1, w2) = closed_form_f(r);
        worst = worst
            .max(rel_err(f1.eval(r), w1))
            .max(rel_err(f2.eval(r), w2));
    }
    let elapsed = start.elapsed();
    ensure(worst <= 1e-9, format!("F rel err {worst:e} > 1e-9"))?;
    ensure(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("max rel err {worst:.2e}, {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let sol = solve(&common::schrodinger_free()).map_err(|e| e.to_string())?;
    let bnd = residual_boundary(&sol, 11);
    let res = residual_ode(&sol, 101, 11);
    let bound = 1e-8 * (1.0 + max_abs(&sol, 101, 11));
    ensure(bnd <= 1e-9, format!("boundary residual {bnd:e}"))?;
    ensure(res <= bound, format!("ode residual {res:e} > {bound:e}"))?;
    Ok(format!("boundary {bnd:.2e}, ode {res:.2e}"))
}

fn criterion_3() -> Outcome {
    let sol = solve(&common::schrodinger_step()).map_err(|e| e.to_string())?;
    let (h1, h2) = sol.shooting_constants();
    let mut worst = 0.0f64;
    for r in [0.0, 0.5, 1.0] {
        let (w1, w2) = closed_form_h(r);
        worst = worst
            .max(rel_err(h1.eval(r), w1))
            .max(rel_err(h2.eval(r), w2));
    }
    ensure(worst <= 1e-9, format!("H rel err {worst:e}"))?;
    let res = residual_ode(&sol, 101, 11);
    let bound = 1e-8 * (1.0 + max_abs(&sol, 101, 11));
    ensure(
        res <= bound,
        format!("coupled residual {res:e} > {bound:e}"),
    )?;
    let core = grid(1.0, 101)
        .map(|x| {
            let (lo, up) = sol.eval(x, 1.0);
            (lo - up).abs()
        })
        .fold(0.0, f64::max);
    ensure(core <= 1e-9, format!("crisp core gap {core:e}"))?;
    Ok(format!(
        "H rel err {worst:.2e}, residual {res:.2e}, core gap {core:.2e}"
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let sol = solve(&common::homogeneous()).map_err(|e| e.to_string())?;
    let bnd = residual_boundary(&sol, 11);
    let res = residual_ode(&sol, 101, 11);
    let gap = oracle_gap(&sol, &[0.0, 0.5, 1.0], 10_000).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(bnd <= 1e-9, format!("boundary residual {bnd:e}"))?;
    ensure(res <= 1e-8, format!("ode residual {res:e}"))?;
    ensure(gap <= 1e-5, format!("oracle gap {gap:e}"))?;
    ensure(
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "boundary {bnd:.2e}, ode {res:.2e}, oracle gap {gap:.2e}, {elapsed:?}"
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for i in 0..200 {
        let f = common::random_supported(&mut rng);
        let g = inverse_laplace(&f).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(
            forward_laplace(&g).approx_eq(&f, 1e-12),
            format!("instance {i}: round trip mismatch for {f:?}"),
        )?;
    }
    Ok("200/200 round trips within 1e-12".into())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let u = common::random_fuzzy(&mut rng);
        let v = common::random_fuzzy(&mut rng);
        let w = common::random_fuzzy(&mut rng);
        let e = common::random_fuzzy(&mut rng);
        let k: f64 = rand::Rng::gen_range(&mut rng, -5.0..5.0);
        let p1 = ((u + w).hausdorff(&(v + w)) - u.hausdorff(&v)).abs();
        let p2 = (u.scale(k).hausdorff(&v.scale(k)) - k.abs() * u.hausdorff(&v)).abs();
        let p3 = ((u + v).hausdorff(&(w + e)) - u.hausdorff(&w) - v.hausdorff(&e)).max(0.0);
        let m = p1.max(p2).max(p3);
        worst = worst.max(m);
        ensure(m <= 1e-12, format!("sample {i}: violation {m:e}"))?;
    }
    Ok(format!("1000 samples, worst violation {worst:.2e}"))
}

fn criterion_7() -> Outcome {
    let sol = solve(&common::schrodinger_free()).map_err(|e| e.to_string())?;
    let swapped = FuzzySolution::from_parts(
        *sol.problem(),
        sol.upper().clone(),
        sol.lower().clone(),
        sol.shooting_constants(),
    );
    ensure(
        !check_level_set(&swapped, 101, 11).ordered,
        "swapped envelopes reported as ordered",
    )?;

    let crisp = FuzzyBvp::new(
        Ode::new(1.0, 0.0, -1.0),
        1.0,
        FuzzyNumber::crisp(1.0),
        FuzzyNumber::crisp(2.0),
        DiffCase::Case11,
    )
    .map_err(|e| e.to_string())?;
    let crisp_rep = check_level_set(&solve(&crisp).map_err(|e| e.to_string())?, 101, 11);
    ensure(crisp_rep.is_valid_level_set(), "crisp control not all-true")?;

    let outcomes = enumerate_cases(&common::schrodinger_step(), 101, 11);
    ensure(outcomes.len() == 4, "expected four outcomes")?;
    let reports = outcomes.iter().filter(|o| o.report.is_some()).count();
    ensure(reports == 4, format!("only {reports} reports"))?;
    let valid: Vec<String> = outcomes
        .iter()
        .map(|o| {
            format!(
                "{}:{}",
                o.case.tag(),
                o.report.as_ref().is_some_and(|r| r.is_valid_level_set())
            )
        })
        .collect();
    Ok(format!(
        "negative/crisp controls ok, valid level set {}",
        valid.join(" ")
    ))
}

fn criterion_8() -> Outcome {
    let gaps: Vec<f64> = (6..=12)
        .map(|p| {
            let n = 1usize << p;
            let y = fd_oracle(1.0, 0.0, -1.0, 1.0, 1.0, 1.0f64.cosh(), n).unwrap();
            grid(1.0, n + 1)
                .zip(y)
                .map(|(x, v)| (v - x.cosh()).abs())
                .fold(0.0, f64::max)
        })
        .collect();
    let ratios: Vec<f64> = gaps.windows(2).map(|w| w[0] / w[1]).collect();
    for (i, r) in ratios.iter().enumerate() {
        ensure(
            (3.6..=4.4).contains(r),
            format!("ratio {r} at n = 2^{}", 7 + i),
        )?;
    }
    let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.3}")).collect();
    Ok(format!("ratios [{}]", shown.join(", ")))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("uncoupled Schrödinger F1/F2 reproduction", criterion_1),
        ("uncoupled Schrödinger boundary and residual", criterion_2),
        (
            "coupled Schrödinger H1/H2, residual, crisp core",
            criterion_3,
        ),
        ("homogeneous BVP contract and FD oracle", criterion_4),
        ("Laplace round trip on 200 random instances", criterion_5),
        ("Hausdorff metric properties on 1000 samples", criterion_6),
        ("level-set gatekeeping and case enumeration", criterion_7),
        ("FD oracle second-order convergence", criterion_8),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why})", i + 1);
            }
        }
    }
    let total = start.elapsed();
    if total >= Duration::from_secs(60) {
        failed += 1;
        println!("FAIL total runtime {total:?} >= 60 s");
    } else {
        println!("total runtime {total:?}");
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
