//! Simple EJA kinds and their (rank, dim) table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One row of the classification of simple Euclidean Jordan algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EjaKind {
    /// Real symmetric `n × n` matrices.
    RealSym(usize),
    /// Complex Hermitian `n × n` matrices.
    ComplexHerm(usize),
    /// Quaternionic Hermitian `n × n` matrices.
    QuatHerm(usize),
    /// Spin factor of dimension `s`, realised as `R ⊕ R^{s−1}`.
    Spin(usize),
    /// The exceptional Albert algebra. Metadata only.
    OctHerm3,
}

impl EjaKind {
    pub fn validate(self) -> Result<Self> {
        match self {
            EjaKind::RealSym(0) | EjaKind::ComplexHerm(0) | EjaKind::QuatHerm(0) => {
                Err(Error::InvalidKind(format!("{self}: matrix order must be at least 1")))
            }
            EjaKind::Spin(s) if s < 5 => Err(Error::InvalidKind(format!(
                "{self}: spin factors start at dimension 5"
            ))),
            k => Ok(k),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            EjaKind::RealSym(n) | EjaKind::ComplexHerm(n) | EjaKind::QuatHerm(n) => n,
            EjaKind::Spin(_) => 2,
            EjaKind::OctHerm3 => 3,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            EjaKind::RealSym(n) => n * (n + 1) / 2,
            EjaKind::ComplexHerm(n) => n * n,
            EjaKind::QuatHerm(n) => n * (2 * n).saturating_sub(1),
            EjaKind::Spin(s) => s,
            EjaKind::OctHerm3 => 27,
        }
    }

    pub fn rank_dim(self) -> (usize, usize) {
        (self.rank(), self.dim())
    }

    /// Whether elements of this kind can be built and multiplied.
    pub fn has_arithmetic(self) -> bool {
        !matches!(self, EjaKind::OctHerm3)
    }
}

impl fmt::Display for EjaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EjaKind::RealSym(n) => write!(f, "RealSym({n})"),
            EjaKind::ComplexHerm(n) => write!(f, "ComplexHerm({n})"),
            EjaKind::QuatHerm(n) => write!(f, "QuatHerm({n})"),
            EjaKind::Spin(s) => write!(f, "Spin({s})"),
            EjaKind::OctHerm3 => write!(f, "OctHerm3"),
        }
    }
}

impl FromStr for EjaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("OctHerm3") {
            return Ok(EjaKind::OctHerm3);
        }
        let bad = || Error::InvalidKind(format!("cannot parse kind {s:?}"));
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let n: usize = inner.trim().parse().map_err(|_| bad())?;
        let kind = match s[..open].trim() {
            "RealSym" => EjaKind::RealSym(n),
            "ComplexHerm" => EjaKind::ComplexHerm(n),
            "QuatHerm" => EjaKind::QuatHerm(n),
            "Spin" => EjaKind::Spin(n),
            _ => return Err(bad()),
        };
        kind.validate()
    }
}

/// Looks up the simple EJA with the given rank and dimension.
///
/// Isomorphic rows are collapsed onto one representative: rank one is
/// always `ComplexHerm(1)`, and `(2, 6)` is `QuatHerm(2)` rather than
/// `Spin(6)`. `(2, 3)` and `(2, 4)` resolve to the matrix algebras.
pub fn classify_simple(rank: usize, dim: usize) -> Option<EjaKind> {
    if rank == 0 || dim == 0 {
        return None;
    }
    if rank == 1 {
        return (dim == 1).then_some(EjaKind::ComplexHerm(1));
    }
    let n = rank;
    if dim == n * (n + 1) / 2 {
        return Some(EjaKind::RealSym(n));
    }
    if dim == n * n {
        return Some(EjaKind::ComplexHerm(n));
    }
    if dim == n * (2 * n - 1) {
        return Some(EjaKind::QuatHerm(n));
    }
    if rank == 2 && dim >= 5 {
        return Some(EjaKind::Spin(dim));
    }
    if rank == 3 && dim == 27 {
        return Some(EjaKind::OctHerm3);
    }
    None
}

/// Canonical representative of `kind` under the overlaps resolved by
/// [`classify_simple`].
pub fn canonical(kind: EjaKind) -> EjaKind {
    let (r, d) = kind.rank_dim();
    classify_simple(r, d).unwrap_or(kind)
}

/// Every simple kind with matrix order `n ≤ max_n` and spin dimension
/// `5 ≤ s ≤ max_s`, plus the exceptional row.
pub fn table_rows(max_n: usize, max_s: usize) -> Vec<EjaKind> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        rows.push(EjaKind::RealSym(n));
        rows.push(EjaKind::ComplexHerm(n));
        rows.push(EjaKind::QuatHerm(n));
    }
    rows.extend((5..=max_s).map(EjaKind::Spin));
    rows.push(EjaKind::OctHerm3);
    rows
}

/// Result of testing whether `kind ⊗ kind` can itself be a simple EJA.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionReport {
    pub kind: EjaKind,
    /// `rank(kind)²`
    pub tensor_rank: usize,
    /// `dim(kind)²`
    pub tensor_dim: usize,
    /// Table lookup of `(tensor_rank, tensor_dim)`.
    pub matched: Option<EjaKind>,
}

impl ExclusionReport {
    pub fn ruled_out(&self) -> bool {
        self.matched.is_none()
    }
}

/// Integer form of the self-tensor argument: a simple factor of rank `n ≥ 2`
/// survives only if `(n², dim²)` is again a row of the table.
pub fn exclusion_check(kind: EjaKind) -> Result<ExclusionReport> {
    let kind = kind.validate()?;
    if kind.rank() < 2 {
        return Err(Error::RankOne(kind));
    }
    let tensor_rank = kind.rank() * kind.rank();
    let tensor_dim = kind.dim() * kind.dim();
    Ok(ExclusionReport {
        kind,
        tensor_rank,
        tensor_dim,
        matched: classify_simple(tensor_rank, tensor_dim),
    })
}
