use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::Value;
use thiserror::Error;

use tcbound_core::complex::io::ComplexFile;
use tcbound_core::SimplicialComplex;

#[derive(Debug, Error)]
pub enum CliError {
    /// Exit code 1.
    #[error("error: {0}")]
    Input(String),
    /// Exit code 2.
    #[error("internal invariant violated: {invariant}: {detail}")]
    Invariant {
        invariant: &'static str,
        detail: String,
    },
}

impl CliError {
    pub fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }

    pub fn invariant(invariant: &'static str, detail: impl std::fmt::Display) -> Self {
        CliError::Invariant { invariant, detail: detail.to_string() }
    }

    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Invariant { .. } => 2,
        }
    }
}

/// A command result in both output formats.
pub struct Doc {
    pub value: Value,
    pub text: String,
}

impl Doc {
    pub fn json(&self) -> String {
        tcbound_core::json::to_string(&self.value).expect("values serialize")
    }
}

pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_complex(path: &Path) -> Result<(ComplexFile, SimplicialComplex), CliError> {
    let file: ComplexFile = read(path)?;
    let k = file
        .to_complex()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((file, k))
}

pub fn display_name(file: &ComplexFile, path: &Path) -> String {
    file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    })
}
