//! Problem files, CSV and report output, and the driver behind the `fbvp`
//! binary.

use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use fbvp_core::solver::{enumerate_cases, solve, CaseOutcome, DiffCase};
use fbvp_core::validate::{check_level_set, oracle_gap};

pub mod output;
pub mod problem;

pub use problem::{CaseSelection, ParseError, ProblemFile};

/// Finite-difference intervals used by `--oracle`.
pub const ORACLE_INTERVALS: usize = 10_000;

/// Command-line overrides of the problem file.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub case: Option<CaseSelection>,
    pub r_levels: Option<usize>,
    pub x_samples: Option<usize>,
    pub oracle: bool,
}

#[derive(Debug)]
pub enum CliError {
    Read { path: PathBuf, source: io::Error },
    Parse { path: PathBuf, source: ParseError },
    Write { path: PathBuf, source: io::Error },
    BadFlag(&'static str),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Read { path, source } => {
                write!(f, "cannot read {}: {source}", path.display())
            }
            CliError::Parse { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Write { path, source } => {
                write!(f, "cannot write {}: {source}", path.display())
            }
            CliError::BadFlag(why) => f.write_str(why),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Read { source, .. } | CliError::Write { source, .. } => Some(source),
            CliError::Parse { source, .. } => Some(source),
            CliError::BadFlag(_) => None,
        }
    }
}

/// Everything produced for one problem file.
#[derive(Debug, Clone)]
pub struct Run {
    pub outcomes: Vec<CaseOutcome>,
    pub summary: String,
    pub report: String,
    pub csv: Vec<(DiffCase, String)>,
}

impl Run {
    /// 0 if any requested case was solved, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.outcomes.iter().any(|o| o.solution.is_ok()) {
            0
        } else {
            1
        }
    }

    /// `(case, reason)` for every failed case.
    pub fn failures(&self) -> Vec<(DiffCase, &'static str)> {
        self.outcomes
            .iter()
            .filter_map(|o| {
                o.solution
                    .as_ref()
                    .err()
                    .map(|e| (o.case, output::reason(e)))
            })
            .collect()
    }

    /// Writes `summary.txt`, `report.txt` and one `solution_<case>.csv` per
    /// solved case into `dir`, creating it if needed.
    pub fn write_to(&self, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
        let write = |name: String, body: &str| {
            let path = dir.join(name);
            fs::write(&path, body)
                .map(|_| path.clone())
                .map_err(|source| CliError::Write { path, source })
        };
        fs::create_dir_all(dir).map_err(|source| CliError::Write {
            path: dir.to_path_buf(),
            source,
        })?;
        let mut written = vec![
            write("summary.txt".into(), &self.summary)?,
            write("report.txt".into(), &self.report)?,
        ];
        for (case, body) in &self.csv {
            written.push(write(format!("solution_{}.csv", case.tag()), body)?);
        }
        Ok(written)
    }
}

/// Solves and reports on a parsed file. Flags in `opts` override the file.
pub fn execute(file: &ProblemFile, opts: &Options) -> Result<Run, CliError> {
    let r_levels = opts.r_levels.unwrap_or(file.r_levels);
    let x_samples = opts.x_samples.unwrap_or(file.x_samples);
    if r_levels < 2 {
        return Err(CliError::BadFlag("--r-levels must be at least 2"));
    }
    if x_samples < 2 {
        return Err(CliError::BadFlag("--x-samples must be at least 2"));
    }

    let mut outcomes = match opts.case.unwrap_or(file.cases) {
        CaseSelection::All => enumerate_cases(&file.problem, x_samples, r_levels),
        CaseSelection::Single(case) => {
            let solution = solve(&file.problem.with_case(case));
            let report = solution
                .as_ref()
                .ok()
                .map(|s| check_level_set(s, x_samples, r_levels));
            vec![CaseOutcome {
                case,
                solution,
                report,
            }]
        }
    };
    if opts.oracle {
        for o in &mut outcomes {
            if let (Ok(sol), Some(rep)) = (&o.solution, &mut o.report) {
                rep.oracle_max_gap = oracle_gap(sol, &[0.0, 0.5, 1.0], ORACLE_INTERVALS).ok();
            }
        }
    }

    let solved = || outcomes.iter().filter_map(|o| o.solution.as_ref().ok());
    let summary = solved().map(output::summary).collect::<Vec<_>>().join("\n");
    let csv = solved()
        .map(|s| (s.case(), output::csv(s, x_samples, r_levels)))
        .collect();
    let report = output::report(&outcomes);
    Ok(Run {
        outcomes,
        summary,
        report,
        csv,
    })
}

/// Reads, parses and solves `path`, then writes the outputs into `out_dir`.
pub fn run(path: &Path, opts: &Options, out_dir: &Path) -> Result<Run, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let file = ProblemFile::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    let run = execute(&file, opts)?;
    run.write_to(out_dir)?;
    Ok(run)
}
