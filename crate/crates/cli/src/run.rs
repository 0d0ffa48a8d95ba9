use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use mixhom::dgcat::{validate_presentation, DgPresentation};
use mixhom::exactlin::{HomologyError, HomologyReport, RingSpec};
use mixhom::hochschild::{build_mixed_complex_with, BuildOptions, HochschildError, MixedComplexData};
use mixhom::resolution::{shukla_mixed_complex, ResolveError, ShuklaCaps, ShuklaPath};
use mixhom::scheme::{Mode, SchemeError};

use crate::format::{parse_dgc, InputError};
use crate::job::{Command, HomologyArgs, InputArgs, JobSpec, ModeArg};
use crate::report::{factors, Report, Table};

/// Exit status and text of one job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JobError {
    /// Unreadable input or unusable parameters.
    #[error("{0}")]
    Input(String),
    /// The mathematical content failed validation.
    #[error("{0}")]
    Invalid(String),
}

impl JobError {
    pub fn code(&self) -> i32 {
        match self {
            JobError::Invalid(_) => 1,
            JobError::Input(_) => 2,
        }
    }
}

impl From<InputError> for JobError {
    fn from(e: InputError) -> Self {
        JobError::Input(e.to_string())
    }
}

impl From<HomologyError> for JobError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::WindowTooSmall { .. } => JobError::Input(e.to_string()),
            _ => JobError::Invalid(e.to_string()),
        }
    }
}

impl From<HochschildError> for JobError {
    fn from(e: HochschildError) -> Self {
        use HochschildError::*;
        match e {
            WeightWindowInsufficient { .. } | DegreeCapInsufficient { .. } | WindowTooSmall { .. } | NegativeWindow(_) | BadCap(_) | BadOrder(_) => {
                JobError::Input(e.to_string())
            }
            Homology(h) => h.into(),
            _ => JobError::Invalid(e.to_string()),
        }
    }
}

impl From<ResolveError> for JobError {
    fn from(e: ResolveError) -> Self {
        use ResolveError::*;
        match e {
            BadDegreeCap(_) | WindowNotCovered { .. } | DegreeCapTooSmall { .. } | NoSuchStage { .. } | CheckWindow { .. } | TestComplexNotAcyclic(_) => {
                JobError::Input(e.to_string())
            }
            Hochschild(h) => h.into(),
            Homology(h) => h.into(),
            _ => JobError::Invalid(e.to_string()),
        }
    }
}

impl From<SchemeError> for JobError {
    fn from(e: SchemeError) -> Self {
        use SchemeError::*;
        match e {
            WindowTooSmall { .. } | WeightWindowInsufficient { .. } | BadCover(_) | Unsupported(_) => JobError::Input(e.to_string()),
            Hochschild(h) => h.into(),
            Homology(h) => h.into(),
            _ => JobError::Invalid(e.to_string()),
        }
    }
}

pub(crate) fn read_presentation(path: &Path, ring: Option<RingSpec>) -> Result<DgPresentation, JobError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io(format!("{}: {e}", path.display())))?;
    let p = parse_dgc(&text, ring)?;
    let v = validate_presentation(&p);
    if !v.is_valid() {
        let lines: Vec<String> = v.violations.iter().map(|x| format!("  {x}")).collect();
        return Err(JobError::Invalid(format!("{} is not a valid presentation:\n{}", path.display(), lines.join("\n"))));
    }
    Ok(p)
}

pub(crate) fn weight_set(p: &DgPresentation, w: Option<(i64, i64)>) -> BTreeSet<i64> {
    let (lo, hi) = w.unwrap_or_else(|| p.weight_window());
    (lo..=hi).collect()
}

pub(crate) fn range_text((a, b): (i64, i64)) -> String {
    format!("{a}..{b}")
}

pub(crate) fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Hh => Mode::Hh,
        ModeArg::Hc => Mode::Hc,
    }
}

/// The mixed complex of the input, through a resolution when `stages` is given.
pub(crate) fn mixed_complex(
    p: DgPresentation,
    cap: i64,
    weights: &BTreeSet<i64>,
    unreduced: bool,
    stages: Option<usize>,
    report: &mut Report,
) -> Result<MixedComplexData, JobError> {
    match stages {
        None => Ok(build_mixed_complex_with(&p, cap, weights, BuildOptions { reduced: !unreduced })?),
        Some(stage_cap) => {
            if unreduced {
                return Err(JobError::Input("--unreduced cannot be combined with --stages".into()));
            }
            let caps = ShuklaCaps { max_degree: cap, weights: weights.clone(), stage_cap };
            let s = shukla_mixed_complex(Arc::new(p), &caps)?;
            report.meta(
                "path",
                match s.path {
                    ShuklaPath::Bypass => "bypass",
                    ShuklaPath::Resolved => "resolved",
                },
            );
            if let Some(t) = &s.tower {
                report.meta("stages_built", t.stages.len());
            }
            Ok(s.complex)
        }
    }
}

pub(crate) fn homology_table(name: &str, r: &HomologyReport) -> Table {
    let mut t = Table::new(name, &["degree", "free rank", "invariant factors"]);
    for (d, h) in &r.degrees {
        t.row(vec![d.to_string(), h.free_rank.to_string(), factors(h)]);
    }
    t
}

pub(crate) fn input_meta(report: &mut Report, path: &Path, p: &DgPresentation) {
    report.meta("input", path.display());
    report.meta("ring", p.ring());
}

/// Reads the input of a homology command and builds its mixed complex up to `cap`
/// (the top of the degree window when `None`).
pub(crate) fn homology_setup(a: &HomologyArgs, cmd: &str, cap: Option<i64>) -> Result<(Report, MixedComplexData), JobError> {
    let InputArgs { input, ring } = &a.input;
    let p = read_presentation(input, ring.clone())?;
    let mut report = Report::new(cmd);
    input_meta(&mut report, input, &p);
    let weights = weight_set(&p, a.weights);
    report.meta("degrees", range_text(a.degrees));
    report.meta("weights", range_text(a.weights.unwrap_or_else(|| p.weight_window())));
    if a.degrees.0 < 0 {
        return Err(JobError::Input(format!("degrees must be non-negative, got {}", range_text(a.degrees))));
    }
    let m = mixed_complex(p, cap.unwrap_or(a.degrees.1), &weights, a.unreduced, a.stages, &mut report)?;
    Ok((report, m))
}

pub fn run_job(spec: &JobSpec) -> Outcome {
    let result = match &spec.command {
        Command::Validate(a) => crate::commands::validate(a),
        Command::Hh(a) => crate::commands::hh(a),
        Command::Hc(a) => crate::commands::hc(a),
        Command::Hp(a) => crate::commands::hp(a),
        Command::Resolve(a) => crate::commands::resolve(a),
        Command::ProbeFlat(a) => crate::commands::probe_flat(a),
        Command::Cech(a) => crate::commands::cech(a),
        Command::Mv(a) => crate::commands::mv(a),
        Command::Keller(a) => crate::commands::keller(a),
    };
    match result {
        Ok(r) => Outcome { code: 0, stdout: r.render(spec.format), stderr: String::new() },
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
