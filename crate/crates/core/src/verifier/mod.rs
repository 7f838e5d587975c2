//! Suite runner: configuration, check reports and their JSON/text forms.

mod config;
mod sampling;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use config::*;
pub use sampling::*;
pub use suites::suite_checks;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown configuration key `{0}`")]
    UnknownKey(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("invalid value for {key}: {reason}")]
    InvalidValue { key: String, reason: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Help(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Suite {
    RacahAbstract,
    BiAbstract,
    EmbeddingAbstract,
    RacahStandard,
    BiStandard,
    EmbeddingStandard,
    Bispectral,
    Su11,
    Osp12,
    RacahProblem,
    BiProblem,
    EmbeddingDunkl,
    All,
}

impl Suite {
    pub const ALL_MEMBERS: [Suite; 12] = [
        Suite::RacahAbstract,
        Suite::BiAbstract,
        Suite::EmbeddingAbstract,
        Suite::RacahStandard,
        Suite::BiStandard,
        Suite::EmbeddingStandard,
        Suite::Bispectral,
        Suite::Su11,
        Suite::Osp12,
        Suite::RacahProblem,
        Suite::BiProblem,
        Suite::EmbeddingDunkl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RacahAbstract => "racah-abstract",
            Suite::BiAbstract => "bi-abstract",
            Suite::EmbeddingAbstract => "embedding-abstract",
            Suite::RacahStandard => "racah-standard",
            Suite::BiStandard => "bi-standard",
            Suite::EmbeddingStandard => "embedding-standard",
            Suite::Bispectral => "bispectral",
            Suite::Su11 => "su11",
            Suite::Osp12 => "osp12",
            Suite::RacahProblem => "racah-problem",
            Suite::BiProblem => "bi-problem",
            Suite::EmbeddingDunkl => "embedding-dunkl",
            Suite::All => "all",
        }
    }

    /// The concrete suites this one runs.
    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL_MEMBERS.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifierError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL_MEMBERS
            .iter()
            .chain(std::iter::once(&Suite::All))
            .copied()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| VerifierError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

/// Parameter values as reported: `p/q` strings or `symbolic`.
pub type ReportParams = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub statement: String,
    pub paper_anchor: String,
    pub params: ReportParams,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// What a check produced, before timing and identification are attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub residual: Option<String>,
    pub value: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            residual: None,
            value: None,
        }
    }

    pub fn fail(residual: impl fmt::Display) -> Self {
        Outcome {
            status: Status::Fail,
            residual: Some(residual.to_string()),
            value: None,
        }
    }

    pub fn error(message: impl fmt::Display) -> Self {
        Outcome {
            status: Status::Error,
            residual: Some(message.to_string()),
            value: None,
        }
    }

    /// Pass when `zero`, otherwise fail with the residual text.
    pub fn zero_residual(zero: bool, residual: impl fmt::Display) -> Self {
        if zero {
            Outcome::pass()
        } else {
            Outcome::fail(residual)
        }
    }

    pub fn with_value(mut self, v: impl fmt::Display) -> Self {
        self.value = Some(v.to_string());
        self
    }
}

/// Identification shared by every report a check produces.
#[derive(Clone, Debug)]
pub struct CheckMeta {
    pub id: String,
    pub statement: String,
    pub anchor: String,
    pub params: ReportParams,
}

impl CheckMeta {
    pub fn new(id: &str, statement: &str, anchor: &str, params: &ReportParams) -> Self {
        CheckMeta {
            id: id.to_string(),
            statement: statement.to_string(),
            anchor: anchor.to_string(),
            params: params.clone(),
        }
    }

    pub fn report(self, outcome: Outcome, elapsed_ms: u64) -> CheckReport {
        CheckReport {
            check_id: self.id,
            statement: self.statement,
            paper_anchor: self.anchor,
            params: self.params,
            status: outcome.status,
            residual: outcome.residual,
            elapsed_ms,
            value: outcome.value,
        }
    }
}

/// A unit of work; groups share expensive setup and emit several reports.
pub type Job = Box<dyn FnOnce() -> Vec<(CheckMeta, Outcome)> + Send>;

/// Run every check of the configured suite in parallel and return the
/// reports sorted by `check_id`.
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckReport> {
    let jobs: Vec<Job> = config
        .suite
        .members()
        .into_iter()
        .flat_map(|s| suite_checks(s, config))
        .collect();
    let mut reports: Vec<CheckReport> = jobs
        .into_par_iter()
        .flat_map_iter(|job| {
            let start = Instant::now();
            let out = job();
            let ms = start.elapsed().as_millis() as u64;
            out.into_iter().map(move |(meta, outcome)| meta.report(outcome, ms))
        })
        .collect();
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    reports
}

/// `0` when every report passes, `1` otherwise.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(CheckReport::passed) {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct Document {
    version: &'static str,
    suite: String,
    seed: u64,
    reports: Vec<CheckReport>,
}

/// Render reports. JSON timings are zeroed unless `timings` is set so that
/// identical configurations give identical bytes.
pub fn render_report(reports: &[CheckReport], config: &SuiteConfig) -> String {
    match config.format {
        Format::Text => reports
            .iter()
            .map(|r| format!("{} {} {}ms\n", r.check_id, r.status, r.elapsed_ms))
            .collect(),
        Format::Json => {
            let reports = reports
                .iter()
                .cloned()
                .map(|mut r| {
                    if !config.timings {
                        r.elapsed_ms = 0;
                    }
                    r
                })
                .collect();
            let doc = Document {
                version: "1",
                suite: config.suite.name().to_string(),
                seed: config.seed,
                reports,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

/// Write the rendered reports to `path`, or to stdout when `path` is `None`.
pub fn emit_report(reports: &[CheckReport], config: &SuiteConfig, path: Option<&Path>) -> Result<(), VerifierError> {
    let text = render_report(reports, config);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| VerifierError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| VerifierError::Io {
                path: "<stdout>".to_string(),
                message: e.to_string(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(status: Status) -> CheckReport {
        let meta = CheckMeta::new("x.y.z", "1 = 1", "tag", &ReportParams::from([("ρ1".into(), "symbolic".into())]));
        let outcome = match status {
            Status::Pass => Outcome::pass(),
            Status::Fail => Outcome::fail("2*ωX"),
            Status::Error => Outcome::error("boom"),
        };
        meta.report(outcome, 7)
    }

    #[test]
    fn empty_json_document() {
        let cfg = SuiteConfig {
            format: Format::Json,
            suite: Suite::Su11,
            ..SuiteConfig::default()
        };
        let v: serde_json::Value = serde_json::from_str(&render_report(&[], &cfg)).unwrap();
        assert_eq!(v, serde_json::json!({"version": "1", "suite": "su11", "seed": 0, "reports": []}));
    }

    #[test]
    fn failing_check_carries_residual() {
        let cfg = SuiteConfig {
            format: Format::Json,
            ..SuiteConfig::default()
        };
        let v: serde_json::Value = serde_json::from_str(&render_report(&[sample(Status::Fail)], &cfg)).unwrap();
        let r = &v["reports"][0];
        assert_eq!(r["status"], "fail");
        assert_eq!(r["residual"], "2*ωX");
        assert_eq!(r["elapsed_ms"], 0);
        assert!(sample(Status::Pass).passed());
        assert_eq!(exit_code(&[sample(Status::Pass), sample(Status::Error)]), 1);
        assert_eq!(exit_code(&[sample(Status::Pass)]), 0);
    }

    #[test]
    fn text_lines() {
        let cfg = SuiteConfig::default();
        assert_eq!(render_report(&[sample(Status::Pass)], &cfg), "x.y.z pass 7ms\n");
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL_MEMBERS.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("x".parse::<Suite>(), Err(VerifierError::UnknownSuite(_))));
    }
}
