use thiserror::Error;

use crate::eja::EjaKind;
use crate::opt::SystemSpec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("kind mismatch: {left} vs {right}")]
    KindMismatch { left: EjaKind, right: EjaKind },

    #[error("system mismatch: ({left}) vs ({right})")]
    SystemMismatch { left: SystemSpec, right: SystemSpec },

    #[error("invalid kind: {0}")]
    InvalidKind(String),

    #[error("{0} carries classification metadata only; no arithmetic is available")]
    NoArithmetic(EjaKind),

    #[error("{0} has rank one and is trivially complex")]
    RankOne(EjaKind),

    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("invalid pure state: {0}")]
    InvalidPureState(String),

    #[error("element lies outside the cone (min eigenvalue {0:e})")]
    NotInCone(f64),

    #[error("state is not completely mixed (min eigenvalue {0:e})")]
    NotCompletelyMixed(f64),

    #[error("map is not completely positive (min Choi eigenvalue {0:e})")]
    NotCompletelyPositive(f64),

    #[error("process is not feasible (trace increasing by {0:e})")]
    NotFeasible(f64),

    #[error("filter with c = 0 has no inverse")]
    IrreversibleFilter,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
