//! Optional `key = value` settings file.
//!
//! Looked up from `--config`, then the `FOURIERKIT_CONFIG` environment
//! variable. Blank lines and lines starting with `#` are skipped. Command
//! line flags override anything set here.

use std::fs;
use std::path::Path;

use fourierkit::transforms::{FftStrategy, DEFAULT_MAX_SUBDIVISIONS, DEFAULT_QUAD_TOLERANCE};

use crate::error::{CliError, CliResult};

pub const CONFIG_ENV: &str = "FOURIERKIT_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub quad_tolerance: f64,
    pub max_subdivisions: usize,
    pub fft_strategy: FftStrategy,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            quad_tolerance: DEFAULT_QUAD_TOLERANCE,
            max_subdivisions: DEFAULT_MAX_SUBDIVISIONS,
            fft_strategy: FftStrategy::Auto,
        }
    }
}

pub fn parse_strategy(s: &str) -> CliResult<FftStrategy> {
    match s.trim().to_ascii_lowercase().as_str() {
        "auto" => Ok(FftStrategy::Auto),
        "bluestein" => Ok(FftStrategy::Bluestein),
        "naive" => Ok(FftStrategy::Naive),
        other => Err(CliError::Config(format!(
            "unknown fft_strategy '{other}' (expected auto, bluestein or naive)"
        ))),
    }
}

impl Settings {
    pub fn parse(text: &str) -> CliResult<Settings> {
        let mut s = Settings::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", i + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad =
                |what: &str| CliError::Config(format!("line {}: invalid {what} '{value}'", i + 1));
            match key {
                "quad_tolerance" => {
                    s.quad_tolerance = value.parse().map_err(|_| bad(key))?;
                    if s.quad_tolerance.is_nan() || s.quad_tolerance <= 0.0 {
                        return Err(bad(key));
                    }
                }
                "max_subdivisions" => {
                    s.max_subdivisions = value.parse().map_err(|_| bad(key))?;
                }
                "fft_strategy" => s.fft_strategy = parse_strategy(value)?,
                other => {
                    return Err(CliError::Config(format!(
                        "line {}: unknown key '{other}'",
                        i + 1
                    )))
                }
            }
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> CliResult<Settings> {
        if !path.exists() {
            return Err(CliError::FileNotFound(path.to_path_buf()));
        }
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Settings::parse(&text)
    }

    /// Settings from an explicit path, else the environment variable, else
    /// the defaults.
    pub fn resolve(explicit: Option<&Path>) -> CliResult<Settings> {
        if let Some(p) = explicit {
            return Settings::load(p);
        }
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Settings::load(Path::new(&p)),
            _ => Ok(Settings::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let s = Settings::parse(
            "# overrides\nquad_tolerance = 1e-8\n\nmax_subdivisions=5000\nfft_strategy = Naive\n",
        )
        .unwrap();
        assert_eq!(s.quad_tolerance, 1e-8);
        assert_eq!(s.max_subdivisions, 5000);
        assert_eq!(s.fft_strategy, FftStrategy::Naive);
    }

    #[test]
    fn empty_file_gives_defaults() {
        assert_eq!(Settings::parse("").unwrap(), Settings::default());
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(Settings::parse("colour = red").is_err());
        assert!(Settings::parse("quad_tolerance = -1").is_err());
        assert!(Settings::parse("fft_strategy = quick").is_err());
        assert!(Settings::parse("no equals sign").is_err());
    }
}
