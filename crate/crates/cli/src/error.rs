use std::fmt;
use std::path::Path;

/// A failure with a process exit code attached.
///
/// The code tells scripts what went wrong: 2 for configuration problems,
/// 3 for unreadable or malformed files, 4 when threshold calibration finds
/// no qualifying grid value, 5 when loaded data breaks a pipeline contract
/// (bad seed coverage, annotation mismatches, and so on).
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Parse(String),
    Calibration(String),
    Contract(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Calibration(_) => 4,
            CliError::Contract(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Parse(msg) => write!(f, "input error: {msg}"),
            CliError::Calibration(msg) => write!(f, "calibration error: {msg}"),
            CliError::Contract(msg) => write!(f, "contract error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

pub type Result<T> = std::result::Result<T, CliError>;

/// Wraps a core error raised while computing (not while reading files).
pub fn contract(err: lexshift_core::Error) -> CliError {
    match err {
        lexshift_core::Error::CalibrationFailed { .. } => CliError::Calibration(err.to_string()),
        other => CliError::Contract(other.to_string()),
    }
}

/// Wraps a problem with the content of a file.
pub fn parse(path: &Path, detail: impl fmt::Display) -> CliError {
    CliError::Parse(format!("{}: {detail}", path.display()))
}

/// Wraps a problem with the content of a specific line of a file.
pub fn parse_line(path: &Path, line: usize, detail: impl fmt::Display) -> CliError {
    CliError::Parse(format!("{}:{line}: {detail}", path.display()))
}
