//! Operational probabilistic theories with superselection rules, realised
//! as direct sums of complex Hermitian blocks over Euclidean Jordan algebras.
//!
//! Everything numerical is generic over [`Real`] (`f32` or `f64`); the
//! aliases at the crate root fix the scalar for convenience.

pub mod composite;
pub mod eja;
pub mod error;
pub mod linalg;
pub mod opt;
pub mod process;
pub mod sampling;
pub mod scalar;
pub mod verifier;

pub use error::{Error, Result};
pub use scalar::{CMatrix, CVector, Complex, Real};

pub use composite::{
    composite_mpds, cup, eta_epsilon_check, local_tomography_span, snake_check, tensor_element, tensor_pure,
    tensor_system, CompositeIndexMap, CupCap, EtaEpsilon,
};
pub use eja::{
    classify_simple, cone_membership, exclusion_check, is_jordan_frame, spectral_decompose, DirectSumSpace, EjaElement,
    EjaKind, ExclusionReport, SpectralResult,
};
pub use opt::{
    complementary_pds, dagger, discard, face_kernel_membership, filter_inverse, homogeneity_map, is_feasible_effect,
    is_measurement, make_filter, pds_status, probability, projection_process, spectral_peel, spectral_state,
    spectral_vec, BlockHermitian, Direction, FaceKernel, Filter, Pds, PdsStatus, PureState, SpectralState, SystemSpec,
};
pub use process::{
    choi_from_kraus, classify_process, complete_to_test, compose_parallel, compose_sequential, kraus_from_choi,
    locally_equal, processes_equal, KrausFamily, ProcessChoi, ProcessClass,
};
pub use verifier::{classify_theory, Postulate, TheoryClass, Tolerances, VerificationReport};

pub type EjaElementF64 = EjaElement<f64>;
pub type EjaElementF32 = EjaElement<f32>;
pub type SpectralResultF64 = SpectralResult<f64>;
pub type BlockHermitianF64 = BlockHermitian<f64>;
pub type BlockHermitianF32 = BlockHermitian<f32>;
pub type PureStateF64 = PureState<f64>;
pub type PureStateF32 = PureState<f32>;
pub type PdsF64 = Pds<f64>;
pub type FilterF64 = Filter<f64>;
pub type ProcessChoiF64 = ProcessChoi<f64>;
pub type ProcessChoiF32 = ProcessChoi<f32>;
pub type KrausFamilyF64 = KrausFamily<f64>;
