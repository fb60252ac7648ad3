use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qds_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{failures} of {cases} cases failed")]
    VerifyFailed { cases: u64, failures: u64 },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed { .. } => 2,
            CliError::Core(qds_core::Error::Budget { .. }) => 3,
            _ => 1,
        }
    }
}

pub type CliResult<T = ExitCode> = Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Writes every file or none: contents land in temporaries next to their
/// targets and are renamed only once all of them are written.
fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

pub fn write_all(files: &[(&Path, &str)]) -> CliResult<()> {
    let mut staged = Vec::with_capacity(files.len());
    for &(path, content) in files {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err(path))?;
        tmp.write_all(content.as_bytes()).map_err(io_err(path))?;
        staged.push((path, tmp));
    }
    for (path, tmp) in staged {
        tmp.persist(path).map_err(|e| CliError::Io { path: path.to_path_buf(), source: e.error })?;
    }
    Ok(())
}

/// Writes to `path`, or to stdout when absent.
pub fn emit(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => write_all(&[(p, content)]),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// `<path>.meta.json`, the sidecar for formats without a metadata slot.
pub fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

/// Resolved run configuration with tool version.
pub fn config(command: &str, params: Value) -> Value {
    json!({
        "tool": "bchqds",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "params": params,
    })
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serializes") + "\n"
}
