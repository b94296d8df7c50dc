//! Single-system operational layer.

mod block;
mod filter;
mod pds;
mod spectral;
mod system;

pub use block::{
    dagger, discard, gamma_signs, hermitian_basis, is_feasible_effect, is_measurement, probability, BlockHermitian,
    Direction, PureState,
};
pub use filter::{
    filter_inverse, kernel_spanning_set, make_filter, make_scaling, projection_by_filters, projection_process, Filter,
};
pub use pds::{complementary_pds, face_kernel_membership, pds_status, FaceKernel, Pds, PdsStatus};
pub use spectral::{homogeneity_map, spectral_peel, spectral_state, spectral_vec, HomogeneityMap, SpectralState};
pub use system::SystemSpec;
