//! Reports and subcommands behind the `monodromy` binary.
//!
//! Every command returns a [`Report`] or a [`CliError`] whose exit code is
//! part of the interface: 1 for unparseable input, 2 for input that parses
//! but is not valid data, 3 for a failed internal consistency check.

pub mod commands;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use monodromy_core::cover::CoverError;
use monodromy_core::group::GroupError;
use monodromy_core::simplicial::{SimplicialError, SnfError};

pub use commands::{
    cmd_homology, cmd_invariants, cmd_suspend, cmd_sweep, cmd_theorem1, cmd_tower_search,
    SWEEP_DEGREE_BUDGET,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Refuted,
    Inconclusive,
}

/// One checked claim and the numbers that decided it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub witness: Value,
}

impl Verdict {
    pub fn new(claim: &str, holds: bool, witness: Value) -> Self {
        Verdict {
            claim: claim.to_string(),
            status: if holds { Status::Verified } else { Status::Refuted },
            witness,
        }
    }

    pub fn inconclusive(claim: &str, witness: Value) -> Self {
        Verdict {
            claim: claim.to_string(),
            status: Status::Inconclusive,
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub results: Value,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn verdict(&self, claim: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.claim == claim)
    }

    pub fn all_verified(&self) -> bool {
        self.verdicts.iter().all(|v| v.status == Status::Verified)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports hold plain JSON values")
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::Parse(_) | CoverError::Group(GroupError::Perm(_)) => CliError::Parse(e.to_string()),
            _ if e.is_internal() => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<SimplicialError> for CliError {
    fn from(e: SimplicialError) -> Self {
        match e {
            SimplicialError::Cover(c) => c.into(),
            SimplicialError::Snf(_) | SimplicialError::CheckFailed(_) => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<SnfError> for CliError {
    fn from(e: SnfError) -> Self {
        SimplicialError::Snf(e).into()
    }
}
