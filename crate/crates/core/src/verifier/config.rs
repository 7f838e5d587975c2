use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

use crate::kernel::{Scalar, Symbol};
use crate::shift::ParamOverrides;

use super::{Suite, VerifierError};

pub const DEFAULT_DEGREE: usize = 6;
pub const DEFAULT_TRIALS: usize = 50;
pub const DEFAULT_SEED: u64 = 0;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = VerifierError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(VerifierError::InvalidValue {
                key: "format".into(),
                reason: format!("expected json or text, got `{other}`"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Numeric values; parameters not listed stay symbolic.
    pub params: ParamOverrides,
    /// Basis size `M` for the matrix checks.
    pub degree: usize,
    pub seed: u64,
    pub trials: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
    /// Keep measured timings in JSON output.
    pub timings: bool,
    /// Directory for CSV matrix dumps of the bispectral suite.
    pub dump: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            params: ParamOverrides::new(),
            degree: DEFAULT_DEGREE,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            out: None,
            format: Format::Text,
            timings: false,
            dump: None,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "racah-bi-verify", about = "Run exact verification suites and emit certificates")]
struct Cli {
    /// Suite to run (`all` runs every suite).
    #[arg(long)]
    suite: Option<String>,
    /// Comma-separated `name=value` pairs; value is `p/q` or `symbolic`.
    #[arg(long)]
    params: Option<String>,
    /// Basis size M for the matrix checks.
    #[arg(long, allow_negative_numbers = true)]
    degree: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// Random samples for associativity and matrix checks.
    #[arg(long, allow_negative_numbers = true)]
    trials: Option<String>,
    /// Report path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// `json` or `text`.
    #[arg(long)]
    format: Option<String>,
    /// Plain `key=value` file; flags given on the command line win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Directory for CSV matrix dumps.
    #[arg(long)]
    dump: Option<PathBuf>,
    /// Keep measured timings in JSON output.
    #[arg(long)]
    timings: bool,
}

/// Parse `name=value[,name=value...]` into `overrides`. `symbolic` removes a
/// numeric value set earlier.
pub fn parse_params(spec: &str, overrides: &mut ParamOverrides) -> Result<(), VerifierError> {
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| VerifierError::Usage(format!("expected name=value, got `{item}`")))?;
        let sym: Symbol = k
            .trim()
            .parse()
            .map_err(|_| VerifierError::UnknownParameter(k.trim().to_string()))?;
        let v = v.trim();
        if v == "symbolic" {
            overrides.remove(&sym);
        } else {
            let value: Scalar = v
                .parse()
                .map_err(|_| VerifierError::MalformedRational(v.to_string()))?;
            overrides.insert(sym, value);
        }
    }
    Ok(())
}

fn parse_count(key: &str, v: &str, min: i64) -> Result<usize, VerifierError> {
    let n: i64 = v.trim().parse().map_err(|_| VerifierError::InvalidValue {
        key: key.into(),
        reason: format!("`{v}` is not an integer"),
    })?;
    if n < min {
        return Err(VerifierError::InvalidValue {
            key: key.into(),
            reason: format!("must be at least {min}, got {n}"),
        });
    }
    Ok(n as usize)
}

fn parse_seed(v: &str) -> Result<u64, VerifierError> {
    v.trim().parse().map_err(|_| VerifierError::InvalidValue {
        key: "seed".into(),
        reason: format!("`{v}` is not an unsigned 64-bit integer"),
    })
}

fn apply(config: &mut SuiteConfig, key: &str, value: &str) -> Result<(), VerifierError> {
    match key {
        "suite" => config.suite = value.parse()?,
        "params" => parse_params(value, &mut config.params)?,
        "degree" => config.degree = parse_count("degree", value, 0)?,
        "seed" => config.seed = parse_seed(value)?,
        "trials" => config.trials = parse_count("trials", value, 1)?,
        "out" => config.out = Some(PathBuf::from(value)),
        "format" => config.format = value.parse()?,
        "dump" => config.dump = Some(PathBuf::from(value)),
        "timings" => {
            config.timings = match value {
                "true" | "1" | "yes" => true,
                "false" | "0" | "no" => false,
                _ => {
                    return Err(VerifierError::InvalidValue {
                        key: "timings".into(),
                        reason: format!("expected true or false, got `{value}`"),
                    })
                }
            }
        }
        other => return Err(VerifierError::UnknownKey(other.to_string())),
    }
    Ok(())
}

/// Apply a `key=value` file (blank lines and `#` comments ignored).
pub fn apply_config_text(config: &mut SuiteConfig, text: &str) -> Result<(), VerifierError> {
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| VerifierError::Usage(format!("expected key=value, got `{line}`")))?;
        apply(config, k.trim(), v.trim())?;
    }
    Ok(())
}

/// Parse command-line arguments (including the program name). A `--config`
/// file is read first; `file` supplies its contents directly instead.
pub fn parse_config<I, T>(args: I, file: Option<&str>) -> Result<SuiteConfig, VerifierError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => VerifierError::Help(e.to_string()),
        _ => VerifierError::Usage(e.to_string()),
    })?;
    let mut config = SuiteConfig::default();
    let from_disk;
    let text = match (file, &cli.config) {
        (Some(t), _) => Some(t),
        (None, Some(path)) => {
            from_disk = std::fs::read_to_string(path).map_err(|e| VerifierError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            Some(from_disk.as_str())
        }
        (None, None) => None,
    };
    if let Some(text) = text {
        apply_config_text(&mut config, text)?;
    }
    let flags = [
        ("suite", cli.suite),
        ("params", cli.params),
        ("degree", cli.degree),
        ("seed", cli.seed),
        ("trials", cli.trials),
        ("format", cli.format),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            apply(&mut config, k, &v)?;
        }
    }
    if let Some(out) = cli.out {
        config.out = Some(out);
    }
    if let Some(dump) = cli.dump {
        config.dump = Some(dump);
    }
    if cli.timings {
        config.timings = true;
    }
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<SuiteConfig, VerifierError> {
        parse_config(std::iter::once("verify").chain(args.iter().copied()), None)
    }

    #[test]
    fn defaults() {
        let c = parse(&[]).unwrap();
        assert_eq!(c, SuiteConfig::default());
        assert_eq!((c.suite, c.degree, c.trials, c.format), (Suite::All, 6, 50, Format::Text));
    }

    #[test]
    fn partial_overrides_leave_the_rest_symbolic() {
        let c = parse(&["--suite", "bi-standard", "--params", "ρ1=1,ρ2=3/2"]).unwrap();
        assert_eq!(c.suite, Suite::BiStandard);
        assert_eq!(c.params.len(), 2);
        assert_eq!(c.params[&Symbol::RHO2], Scalar::ratio(3, 2));
        assert!(!c.params.contains_key(&Symbol::R1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse(&["--degree", "-1"]), Err(VerifierError::InvalidValue { .. })));
        assert!(matches!(parse(&["--trials", "0"]), Err(VerifierError::InvalidValue { .. })));
        assert!(matches!(parse(&["--suite", "nope"]), Err(VerifierError::UnknownSuite(_))));
        assert!(matches!(parse(&["--params", "ρ1=1/0"]), Err(VerifierError::MalformedRational(_))));
        assert!(matches!(parse(&["--params", "q=1"]), Err(VerifierError::UnknownParameter(_))));
        assert!(matches!(
            parse_config(["verify"], Some("colour=blue")),
            Err(VerifierError::UnknownKey(_))
        ));
    }

    #[test]
    fn flags_override_file() {
        let file = "# sample\nsuite=racah-standard\ndegree=3\nparams=alpha=1,beta=2\n";
        let c = parse_config(["verify", "--degree", "8", "--params", "beta=symbolic"], Some(file)).unwrap();
        assert_eq!(c.suite, Suite::RacahStandard);
        assert_eq!(c.degree, 8);
        assert_eq!(c.params.keys().copied().collect::<Vec<_>>(), vec![Symbol::ALPHA]);
    }
}
