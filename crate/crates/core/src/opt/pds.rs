//! Perfectly distinguishable sets of pure states and their idempotents `χ_Φ`.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{CVector, Real};

use super::block::{probability, BlockHermitian, PureState};
use super::system::SystemSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdsStatus {
    NotPds,
    Pds,
    /// Maximal: a PDS with exactly `N` members.
    Mpds,
}

/// Classifies a list of pure states by pairwise orthogonality.
pub fn pds_status<T: Real>(states: &[PureState<T>], tol: T) -> Result<PdsStatus> {
    if let Some(first) = states.first() {
        if let Some(bad) = states.iter().find(|s| s.system() != first.system()) {
            return Err(Error::SystemMismatch { left: first.system().clone(), right: bad.system().clone() });
        }
    }
    for (i, a) in states.iter().enumerate() {
        for b in &states[i + 1..] {
            if a.overlap(b) > tol {
                return Ok(PdsStatus::NotPds);
            }
        }
    }
    match states.first() {
        Some(s) if states.len() == s.system().rank() => Ok(PdsStatus::Mpds),
        _ => Ok(PdsStatus::Pds),
    }
}

/// An ordered PDS together with `χ_Φ = Σ φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pds<T: Real = f64> {
    system: SystemSpec,
    members: Vec<PureState<T>>,
    chi: BlockHermitian<T>,
}

impl<T: Real> Pds<T> {
    pub fn new(system: &SystemSpec, members: Vec<PureState<T>>, tol: T) -> Result<Self> {
        if let Some(bad) = members.iter().find(|m| m.system() != system) {
            return Err(Error::SystemMismatch { left: system.clone(), right: bad.system().clone() });
        }
        if pds_status(&members, tol)? == PdsStatus::NotPds {
            return Err(Error::InvalidPureState("members are not pairwise orthogonal".into()));
        }
        let mut chi = BlockHermitian::zero(system);
        for m in &members {
            chi = chi.add(&m.projector())?;
        }
        Ok(Self { system: system.clone(), members, chi })
    }

    pub fn empty(system: &SystemSpec) -> Self {
        Self { system: system.clone(), members: Vec::new(), chi: BlockHermitian::zero(system) }
    }

    /// The computational basis of every block, in block order.
    pub fn standard(system: &SystemSpec) -> Self {
        let members = system
            .blocks()
            .iter()
            .enumerate()
            .flat_map(|(l, &n)| (0..n).map(move |i| (l, i)))
            .map(|(l, i)| PureState::basis(system, l, i).expect("indices in range"))
            .collect();
        Self::new(system, members, T::default_tol()).expect("standard basis is orthonormal")
    }

    pub fn system(&self) -> &SystemSpec {
        &self.system
    }

    pub fn members(&self) -> &[PureState<T>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.members.len() == self.system.rank()
    }

    /// `χ_Φ`, the projector onto the span of the members.
    pub fn chi(&self) -> &BlockHermitian<T> {
        &self.chi
    }

    /// `Φ ∪ {φ}`; fails if `φ` is not orthogonal to every member.
    pub fn with(&self, phi: PureState<T>, tol: T) -> Result<Self> {
        let mut members = self.members.clone();
        members.push(phi);
        Self::new(&self.system, members, tol)
    }
}

/// The complement `Ψ` with `χ_Φ + χ_Ψ = χ`, built from an eigenbasis of
/// `χ − χ_Φ` block by block.
pub fn complementary_pds<T: Real>(phi: &Pds<T>) -> Pds<T> {
    let system = phi.system();
    let mut members = Vec::with_capacity(system.rank() - phi.len());
    for (l, &n) in system.blocks().iter().enumerate() {
        let rest = linalg::identity::<T>(n) - phi.chi().block(l);
        let basis = linalg::range_basis(&linalg::hermitian_part(&rest));
        for c in 0..basis.ncols() {
            let v: CVector<T> = basis.column(c).into_owned();
            members.push(PureState::normalized(system, l, v).expect("eigenvectors are nonzero"));
        }
    }
    // eigenvectors of distinct eigenspaces are orthogonal to Φ by construction
    Pds::new(system, members, T::lit(1e-6).max(T::default_tol())).expect("complement is orthonormal")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKernel {
    InFace,
    InKernel,
    Neither,
    /// Only the zero state lies in both.
    Both,
}

/// Locates `ρ` relative to the face `F_Φ` (`Tr χ_Φ ρ = Tr ρ`) and the
/// kernel `ker_Φ` (`Tr χ_Φ ρ = 0`).
pub fn face_kernel_membership<T: Real>(rho: &BlockHermitian<T>, phi: &Pds<T>, tol: T) -> Result<FaceKernel> {
    let on_phi = probability(phi.chi(), rho)?;
    let total = rho.trace();
    let in_face = (on_phi - total).abs() <= tol;
    let in_kernel = on_phi.abs() <= tol;
    Ok(match (in_face, in_kernel) {
        (true, true) => FaceKernel::Both,
        (true, false) => FaceKernel::InFace,
        (false, true) => FaceKernel::InKernel,
        (false, false) => FaceKernel::Neither,
    })
}
