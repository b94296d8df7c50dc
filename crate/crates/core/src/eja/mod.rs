//! Euclidean Jordan algebras.

mod direct_sum;
mod element;
mod kind;
pub mod quaternion;
mod spectral;

pub use direct_sum::DirectSumSpace;
pub use element::EjaElement;
pub use kind::{canonical, classify_simple, exclusion_check, table_rows, EjaKind, ExclusionReport};
pub use spectral::{cone_membership, is_jordan_frame, min_eigenvalue, spectral_decompose, SpectralResult};
