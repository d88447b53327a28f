//! Whitespace-delimited series files.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use eapdtw_core::Series;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: token {index} ({token:?}) is not a number")]
    Parse {
        path: PathBuf,
        index: usize,
        token: String,
    },
    #[error("{path}: token {index} ({token:?}) is not finite")]
    NonFinite {
        path: PathBuf,
        index: usize,
        token: String,
    },
    #[error("{path}: no samples")]
    Empty { path: PathBuf },
}

impl LoadError {
    /// 1-based position of the offending token, for parse failures.
    pub fn token_index(&self) -> Option<usize> {
        match self {
            LoadError::Parse { index, .. } | LoadError::NonFinite { index, .. } => Some(*index),
            _ => None,
        }
    }
}

/// Parses ASCII reals separated by any whitespace. Token indices in errors
/// count from 1.
pub fn parse_series(text: &str, path: &Path) -> Result<Series, LoadError> {
    let mut values = Vec::new();
    for (i, token) in text.split_whitespace().enumerate() {
        let index = i + 1;
        let v: f64 = token.parse().map_err(|_| LoadError::Parse {
            path: path.to_path_buf(),
            index,
            token: token.to_string(),
        })?;
        if !v.is_finite() {
            return Err(LoadError::NonFinite {
                path: path.to_path_buf(),
                index,
                token: token.to_string(),
            });
        }
        values.push(v);
    }
    if values.is_empty() {
        return Err(LoadError::Empty {
            path: path.to_path_buf(),
        });
    }
    Ok(Series::new(values).expect("validated above"))
}

pub fn load_series(path: impl AsRef<Path>) -> Result<Series, LoadError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_series(&text, path)
}

/// One sample per line, printed with round-trip precision.
pub fn format_series(series: &[f64]) -> String {
    let mut out = String::with_capacity(series.len() * 20);
    for v in series {
        writeln!(out, "{v}").unwrap();
    }
    out
}

pub fn write_series(path: impl AsRef<Path>, series: &[f64]) -> std::io::Result<()> {
    fs::write(path, format_series(series))
}
