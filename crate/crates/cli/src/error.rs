use std::io;
use std::path::PathBuf;

use fourierkit::FourierError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported WAV input: {0}")]
    WavFormat(String),
    #[error("WAV read failed: {0}")]
    Wav(#[from] hound::Error),
    #[error("CSV read failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Fourier(#[from] FourierError),
}

impl CliError {
    /// 2 for invocation problems, 1 for everything that fails at run time.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
