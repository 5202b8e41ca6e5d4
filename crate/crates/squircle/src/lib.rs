//! Command-line and file-format companion to `squircle-core`.
//!
//! Adds the multi-threaded sampling drivers, OBJ/STL/SVG/CSV writers, the
//! `squircle` CLI, and the verification suites it runs.

pub mod cli;
pub mod export;
pub mod parallel;
pub mod recipes;
pub mod verify;

use std::io;
use std::path::PathBuf;

use squircle_core::{GridError, OracleError, ShapeError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl Error {
    /// 1 for bad invocations, 2 for numeric failures, 3 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Shape(_) => 1,
            Error::Grid(GridError::NonFinite { .. }) | Error::Oracle(_) => 2,
            Error::Grid(_) => 1,
            Error::Io { .. } => 3,
        }
    }
}
