//! Spectral decompositions of states and extended vectors over MPDSs, and
//! the homogeneity construction built from filters.

use crate::error::{Error, Result};
use crate::linalg;
use crate::process::{compose_sequential, ProcessChoi};
use crate::scalar::{CMatrix, CVector, Real};

use super::block::{BlockHermitian, PureState};
use super::filter::make_scaling;
use super::pds::{complementary_pds, Pds};

/// Weights with a matching MPDS, `ρ = Σ pᵢ φᵢ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralState<T: Real = f64> {
    pub weights: Vec<T>,
    pub frame: Pds<T>,
}

impl<T: Real> SpectralState<T> {
    pub fn reconstruct(&self) -> BlockHermitian<T> {
        self.frame
            .members()
            .iter()
            .zip(&self.weights)
            .fold(BlockHermitian::zero(self.frame.system()), |acc, (m, &w)| {
                acc.add(&m.projector().scale(w)).expect("same system")
            })
    }

    /// Weights sorted descending.
    pub fn sorted_weights(&self) -> Vec<T> {
        let mut w = self.weights.clone();
        w.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        w
    }
}

/// Decomposition of any extended vector; weights may be negative. Blocks in
/// order, eigenvalues descending within each block.
pub fn spectral_vec<T: Real>(x: &BlockHermitian<T>) -> SpectralState<T> {
    let system = x.system();
    let mut weights = Vec::with_capacity(system.rank());
    let mut members = Vec::with_capacity(system.rank());
    for (l, block) in x.blocks().iter().enumerate() {
        let (values, vectors) = linalg::herm_eigen(block);
        for (i, v) in values.into_iter().enumerate() {
            weights.push(v);
            let col: CVector<T> = vectors.column(i).into_owned();
            members.push(PureState::normalized(system, l, col).expect("eigenvectors are nonzero"));
        }
    }
    let frame = Pds::new(system, members, T::lit(1e-6).max(T::default_tol())).expect("eigenbasis is orthonormal");
    SpectralState { weights, frame }
}

fn check_cone<T: Real>(rho: &BlockHermitian<T>, tol: T) -> Result<()> {
    let m = rho.min_eigenvalue();
    if m < -tol {
        return Err(Error::NotInCone(m.as_f64()));
    }
    Ok(())
}

/// Decomposition of a state; fails outside the cone.
pub fn spectral_state<T: Real>(rho: &BlockHermitian<T>, tol: T) -> Result<SpectralState<T>> {
    check_cone(rho, tol)?;
    Ok(spectral_vec(rho))
}

/// The constructive peel: at each step take `p`, the largest `p′` with
/// `ρₖ ≥ p′ χ_Ψ` for the current complement `Ψ`, and remove `pφ` for a pure
/// `φ` in the face of `Ψ` attaining it. Runs exactly `N` steps; the smallest
/// weight comes out first.
pub fn spectral_peel<T: Real>(rho: &BlockHermitian<T>, tol: T) -> Result<SpectralState<T>> {
    check_cone(rho, tol)?;
    let system = rho.system().clone();
    let mut residual = rho.clone();
    let mut phi = Pds::empty(&system);
    let mut weights = Vec::with_capacity(system.rank());
    let frame_tol = T::lit(1e-6).max(T::default_tol());
    for _ in 0..system.rank() {
        let psi = complementary_pds(&phi);
        let mut best: Option<(T, usize, CVector<T>)> = None;
        for l in 0..system.num_blocks() {
            let cols: Vec<CVector<T>> =
                psi.members().iter().filter(|m| m.block() == l).map(|m| m.vector().clone()).collect();
            if cols.is_empty() {
                continue;
            }
            let v = CMatrix::from_columns(&cols);
            let compressed = linalg::hermitian_part(&(v.adjoint() * residual.block(l) * &v));
            let (values, vectors) = linalg::herm_eigen(&compressed);
            let last = values.len() - 1;
            let p = values[last];
            if best.as_ref().is_none_or(|(q, _, _)| p < *q) {
                best = Some((p, l, &v * vectors.column(last)));
            }
        }
        let (p, l, vec) = best.expect("complement is nonempty before N steps");
        if p < -tol {
            return Err(Error::NotInCone(p.as_f64()));
        }
        let state = PureState::normalized(&system, l, vec).expect("eigenvector is nonzero");
        residual = residual.sub(&state.projector().scale(p))?;
        weights.push(p);
        phi = phi.with(state, frame_tol)?;
    }
    Ok(SpectralState { weights, frame: phi })
}

/// A reversible map with `f(χ) = ρ` and its inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneityMap<T: Real = f64> {
    pub forward: ProcessChoi<T>,
    pub inverse: ProcessChoi<T>,
}

/// `f = F^{p_N}_{φ_N} ∘ ⋯ ∘ F^{p₁}_{φ₁}` along a spectral MPDS of `ρ`.
/// Weights above one use the trace-increasing scaling.
pub fn homogeneity_map<T: Real>(rho: &BlockHermitian<T>, tol: T) -> Result<HomogeneityMap<T>> {
    let m = rho.min_eigenvalue();
    if m <= tol {
        return Err(Error::NotCompletelyMixed(m.as_f64()));
    }
    let spec = spectral_vec(rho);
    let system = rho.system();
    let mut forward = ProcessChoi::identity(system);
    let mut inverse = ProcessChoi::identity(system);
    for (phi, &p) in spec.frame.members().iter().zip(&spec.weights) {
        let f = make_scaling(phi, p)?;
        let g = make_scaling(phi, T::one() / p)?;
        forward = compose_sequential(&f.process(), &forward)?;
        inverse = compose_sequential(&inverse, &g.process())?;
    }
    Ok(HomogeneityMap { forward, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opt::{pds_status, PdsStatus, SystemSpec};

    fn sys(s: &str) -> SystemSpec {
        s.parse().unwrap()
    }

    #[test]
    fn diagonal_examples() {
        let s = sys("2");
        let rho: BlockHermitian = BlockHermitian::from_diagonal(&s, &[0.7, 0.3]).unwrap();
        let sp = spectral_state(&rho, 1e-9).unwrap();
        assert_eq!(sp.weights.len(), 2);
        assert!((sp.weights[0] - 0.7).abs() < 1e-15 && (sp.weights[1] - 0.3).abs() < 1e-15);
        assert!(sp.reconstruct().distance(&rho).unwrap() < 1e-14);
        let x = BlockHermitian::from_diagonal(&s, &[1.0, -1.0]).unwrap();
        assert!(spectral_state(&x, 1e-9).is_err());
        let sv = spectral_vec(&x);
        assert_eq!(sv.sorted_weights(), vec![1.0, -1.0]);
    }

    #[test]
    fn peel_takes_minimum_first() {
        let s = sys("2");
        let rho: BlockHermitian = BlockHermitian::from_diagonal(&s, &[0.7, 0.3]).unwrap();
        let peel = spectral_peel(&rho, 1e-9).unwrap();
        assert!((peel.weights[0] - 0.3).abs() < 1e-15);
        assert!(peel.reconstruct().distance(&rho).unwrap() < 1e-14);
        let chi = BlockHermitian::<f64>::chi(&sys("1,2")).scale(0.4);
        let peel = spectral_peel(&chi, 1e-9).unwrap();
        assert!(peel.weights.iter().all(|w| (w - 0.4).abs() < 1e-15));
        let members: Vec<_> = peel.frame.members().to_vec();
        assert_eq!(pds_status(&members, 1e-9).unwrap(), PdsStatus::Mpds);
    }

    #[test]
    fn peel_handles_rank_deficiency() {
        let s = sys("1,2");
        let rho = BlockHermitian::from_diagonal(&s, &[0.0, 0.5, 0.0]).unwrap();
        let peel = spectral_peel(&rho, 1e-9).unwrap();
        assert_eq!(peel.weights.len(), 3);
        assert!(peel.reconstruct().distance(&rho).unwrap() < 1e-14);
    }

    #[test]
    fn homogeneity_examples() {
        let s = sys("2");
        let chi = BlockHermitian::<f64>::chi(&s);
        let h = homogeneity_map(&chi, 1e-9).unwrap();
        assert!(h.forward.choi_distance(&ProcessChoi::identity(&s)).unwrap() < 1e-14);
        let rho = BlockHermitian::from_diagonal(&s, &[0.5, 2.0]).unwrap();
        let h = homogeneity_map(&rho, 1e-9).unwrap();
        assert!(h.forward.apply(&chi).unwrap().distance(&rho).unwrap() < 1e-13);
        let back = compose_sequential(&h.inverse, &h.forward).unwrap();
        assert!(back.choi_distance(&ProcessChoi::identity(&s)).unwrap() < 1e-12);
        let singular = BlockHermitian::from_diagonal(&s, &[1.0, 0.0]).unwrap();
        assert!(matches!(homogeneity_map(&singular, 1e-9), Err(Error::NotCompletelyMixed(_))));
    }
}
