//! Block-Hermitian elements of a single system.

use nalgebra::ComplexField;
use crate::eja::EjaElement;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{cr, cx, CMatrix, CVector, Complex, Real};

use super::system::SystemSpec;

/// One Hermitian matrix per block of a system.
///
/// Used for states and effects alike, including non-positive extended
/// vectors; cone conditions are predicates, not invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockHermitian<T: Real = f64> {
    system: SystemSpec,
    blocks: Vec<CMatrix<T>>,
}

impl<T: Real> BlockHermitian<T> {
    pub fn new(system: SystemSpec, blocks: Vec<CMatrix<T>>) -> Result<Self> {
        if blocks.len() != system.num_blocks() {
            return Err(Error::DimensionMismatch { expected: system.num_blocks(), got: blocks.len() });
        }
        for (b, &n) in blocks.iter().zip(system.blocks()) {
            if b.shape() != (n, n) {
                return Err(Error::DimensionMismatch { expected: n, got: b.nrows().max(b.ncols()) });
            }
            let scale = b.iter().fold(T::one(), |a, z| a.max(z.modulus()));
            let defect = linalg::hermiticity_defect(b);
            if defect > T::default_tol() * scale {
                return Err(Error::NotHermitian(defect.as_f64()));
            }
        }
        let blocks = blocks.iter().map(linalg::hermitian_part).collect();
        Ok(Self { system, blocks })
    }

    /// Builds without checks; callers guarantee shapes and Hermiticity.
    pub(crate) fn from_blocks_unchecked(system: SystemSpec, blocks: Vec<CMatrix<T>>) -> Self {
        debug_assert_eq!(blocks.len(), system.num_blocks());
        Self { system, blocks }
    }

    pub fn zero(system: &SystemSpec) -> Self {
        let blocks = system.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
        Self { system: system.clone(), blocks }
    }

    /// The invariant state `χ`: the identity in every block.
    pub fn chi(system: &SystemSpec) -> Self {
        let blocks = system.blocks().iter().map(|&n| linalg::identity(n)).collect();
        Self { system: system.clone(), blocks }
    }

    /// Block-diagonal matrix with real diagonal entries, listed across blocks.
    pub fn from_diagonal(system: &SystemSpec, diag: &[T]) -> Result<Self> {
        if diag.len() != system.rank() {
            return Err(Error::DimensionMismatch { expected: system.rank(), got: diag.len() });
        }
        let mut offset = 0;
        let blocks = system
            .blocks()
            .iter()
            .map(|&n| {
                let m = CMatrix::from_fn(n, n, |r, c| if r == c { cr(diag[offset + r]) } else { cr(T::zero()) });
                offset += n;
                m
            })
            .collect();
        Ok(Self { system: system.clone(), blocks })
    }

    pub fn system(&self) -> &SystemSpec {
        &self.system
    }

    pub fn blocks(&self) -> &[CMatrix<T>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &CMatrix<T> {
        &self.blocks[i]
    }

    pub fn into_blocks(self) -> Vec<CMatrix<T>> {
        self.blocks
    }

    pub(crate) fn check_same_system(&self, other: &Self) -> Result<()> {
        if self.system == other.system {
            Ok(())
        } else {
            Err(Error::SystemMismatch { left: self.system.clone(), right: other.system.clone() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_system(other)?;
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a + b).collect();
        Ok(Self { system: self.system.clone(), blocks })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_system(other)?;
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a - b).collect();
        Ok(Self { system: self.system.clone(), blocks })
    }

    pub fn scale(&self, s: T) -> Self {
        let blocks = self.blocks.iter().map(|b| linalg::scale(b, s)).collect();
        Self { system: self.system.clone(), blocks }
    }

    /// `U ρ U†` with one unitary per block.
    pub fn conjugate(&self, unitaries: &[CMatrix<T>]) -> Result<Self> {
        if unitaries.len() != self.blocks.len() {
            return Err(Error::DimensionMismatch { expected: self.blocks.len(), got: unitaries.len() });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(unitaries)
            .map(|(b, u)| linalg::hermitian_part(&(u * b * u.adjoint())))
            .collect();
        Ok(Self { system: self.system.clone(), blocks })
    }

    /// `Σ Tr ρᵢ`.
    pub fn trace(&self) -> T {
        self.blocks.iter().fold(T::zero(), |acc, b| acc + linalg::real_trace(b))
    }

    /// Frobenius norm, equal to the norm of the trace inner product.
    pub fn norm(&self) -> T {
        self.blocks.iter().fold(T::zero(), |acc, b| acc + b.norm_squared()).sqrt()
    }

    pub fn distance(&self, other: &Self) -> Result<T> {
        Ok(self.sub(other)?.norm())
    }

    pub fn min_eigenvalue(&self) -> T {
        self.blocks
            .iter()
            .map(linalg::min_eigenvalue)
            .fold(T::max_value().unwrap_or_else(T::one), |a, b| if a.is_nan() || b.is_nan() { a + b } else { a.min(b) })
    }

    /// All eigenvalues `≥ −tol`; false for non-finite entries.
    pub fn in_cone(&self, tol: T) -> bool {
        self.min_eigenvalue() >= -tol
    }

    /// `Tr ρ ≤ 1`, the feasibility condition for states.
    pub fn is_feasible_state(&self, tol: T) -> bool {
        self.in_cone(tol) && self.trace() <= T::one() + tol
    }

    /// Each block as an element of the complex Hermitian EJA.
    pub fn to_eja(&self) -> Vec<EjaElement<T>> {
        self.blocks.iter().map(|b| EjaElement::ComplexHerm(b.clone())).collect()
    }

    /// Coordinates in the orthonormal basis returned by [`hermitian_basis`].
    pub fn basis_coords(&self) -> Vec<T> {
        let s = T::lit(std::f64::consts::SQRT_2);
        let mut out = Vec::with_capacity(self.system.dim());
        for b in &self.blocks {
            let n = b.nrows();
            for r in 0..n {
                for c in 0..n {
                    let v = match r.cmp(&c) {
                        std::cmp::Ordering::Equal => b[(r, r)].re,
                        std::cmp::Ordering::Less => b[(r, c)].re * s,
                        std::cmp::Ordering::Greater => b[(r, c)].im * s,
                    };
                    out.push(v);
                }
            }
        }
        out
    }
}

/// The orthonormal basis `w̄_{l;s,t}` of a system's real vector space,
/// enumerated by `μ(l, s, t)`: block by block, then `s`, then `t`.
///
/// Diagonal entries are `|s⟩⟨s|`; `s < t` gives `(|s⟩⟨t| + |t⟩⟨s|)/√2`;
/// `s > t` gives `i(|s⟩⟨t| − |t⟩⟨s|)/√2`.
pub fn hermitian_basis<T: Real>(system: &SystemSpec) -> Vec<BlockHermitian<T>> {
    let inv = T::one() / T::lit(std::f64::consts::SQRT_2);
    let mut out = Vec::with_capacity(system.dim());
    for (l, &n) in system.blocks().iter().enumerate() {
        for s in 0..n {
            for t in 0..n {
                let mut m = CMatrix::zeros(n, n);
                match s.cmp(&t) {
                    std::cmp::Ordering::Equal => m[(s, s)] = cr(T::one()),
                    std::cmp::Ordering::Less => {
                        m[(s, t)] = cr(inv);
                        m[(t, s)] = cr(inv);
                    }
                    std::cmp::Ordering::Greater => {
                        m[(s, t)] = cx(T::zero(), inv);
                        m[(t, s)] = cx(T::zero(), -inv);
                    }
                }
                let mut x = BlockHermitian::zero(system);
                x.blocks[l] = m;
                out.push(x);
            }
        }
    }
    out
}

/// Sign `γ_{s,t}`: `+1` for `s ≤ t`, `−1` otherwise, in `μ` order.
pub fn gamma_signs(system: &SystemSpec) -> Vec<i8> {
    let mut out = Vec::with_capacity(system.dim());
    for &n in system.blocks() {
        for s in 0..n {
            for t in 0..n {
                out.push(if s <= t { 1 } else { -1 });
            }
        }
    }
    out
}

/// A normalized pure state `|φ⟩⟨φ|` confined to one block.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T: Real = f64> {
    system: SystemSpec,
    block: usize,
    vector: CVector<T>,
}

impl<T: Real> PureState<T> {
    /// Accepts a vector of unit norm (within `1e−12` relative slack, scaled
    /// by the field's tolerance for `f32`).
    pub fn new(system: &SystemSpec, block: usize, vector: CVector<T>) -> Result<Self> {
        Self::check_block(system, block, vector.len())?;
        let slack = T::lit(1e-12).max(T::default_tol() * T::lit(1e-3));
        let norm = vector.norm();
        if (norm - T::one()).abs() > slack {
            return Err(Error::InvalidPureState(format!("vector norm {} is not 1", norm.as_f64())));
        }
        Ok(Self { system: system.clone(), block, vector })
    }

    /// Normalizes `vector`; fails for the zero vector.
    pub fn normalized(system: &SystemSpec, block: usize, vector: CVector<T>) -> Result<Self> {
        Self::check_block(system, block, vector.len())?;
        let norm = vector.norm();
        if norm <= T::zero() {
            return Err(Error::InvalidPureState("zero vector".into()));
        }
        Ok(Self { system: system.clone(), block, vector: vector.map(|z| z / cr(norm)) })
    }

    /// Computational basis vector `index` (0-based) of `block`.
    pub fn basis(system: &SystemSpec, block: usize, index: usize) -> Result<Self> {
        let n = *system
            .blocks()
            .get(block)
            .ok_or_else(|| Error::InvalidPureState(format!("no block {block} in ({system})")))?;
        if index >= n {
            return Err(Error::InvalidPureState(format!("index {index} outside block of size {n}")));
        }
        let mut v = CVector::zeros(n);
        v[index] = cr(T::one());
        Ok(Self { system: system.clone(), block, vector: v })
    }

    fn check_block(system: &SystemSpec, block: usize, len: usize) -> Result<()> {
        let n = *system
            .blocks()
            .get(block)
            .ok_or_else(|| Error::InvalidPureState(format!("no block {block} in ({system})")))?;
        if n != len {
            return Err(Error::DimensionMismatch { expected: n, got: len });
        }
        Ok(())
    }

    pub fn system(&self) -> &SystemSpec {
        &self.system
    }

    pub fn block(&self) -> usize {
        self.block
    }

    pub fn vector(&self) -> &CVector<T> {
        &self.vector
    }

    /// `|φ⟩⟨φ|` within its block, zero elsewhere.
    pub fn projector(&self) -> BlockHermitian<T> {
        let mut x = BlockHermitian::zero(&self.system);
        x.blocks[self.block] = linalg::outer(&self.vector);
        x
    }

    /// `⟨φ|ψ⟩`, zero across different blocks.
    pub fn amplitude(&self, other: &Self) -> Complex<T> {
        if self.block != other.block || self.system != other.system {
            return cr(T::zero());
        }
        self.vector.dotc(&other.vector)
    }

    /// `|⟨φ|ψ⟩|²`.
    pub fn overlap(&self, other: &Self) -> T {
        self.amplitude(other).norm_sqr()
    }
}

/// `⟨e|ρ⟩ = Σ Tr(eᵢ ρᵢ)`.
pub fn probability<T: Real>(e: &BlockHermitian<T>, rho: &BlockHermitian<T>) -> Result<T> {
    e.check_same_system(rho)?;
    Ok(e.blocks
        .iter()
        .zip(&rho.blocks)
        .fold(T::zero(), |acc, (a, b)| acc + linalg::trace_product(a, b)))
}

/// The deterministic effect: identity in every block.
pub fn discard<T: Real>(system: &SystemSpec) -> BlockHermitian<T> {
    BlockHermitian::chi(system)
}

/// `0 ≤ e ≤ discard` up to `tol`.
pub fn is_feasible_effect<T: Real>(e: &BlockHermitian<T>, tol: T) -> bool {
    let complement = discard(e.system()).sub(e).expect("same system");
    complement.in_cone(tol)
}

/// Whether the effects sum to the deterministic effect.
pub fn is_measurement<T: Real>(effects: &[BlockHermitian<T>], tol: T) -> Result<bool> {
    let Some(first) = effects.first() else {
        return Ok(false);
    };
    let mut sum = BlockHermitian::zero(first.system());
    for e in effects {
        sum = sum.add(e)?;
    }
    Ok(sum.distance(&discard(first.system()))? <= tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    StateToEffect,
    EffectToState,
}

/// The dagger between states and effects.
///
/// In the block-Hermitian picture a state and its dagger effect are the
/// same matrix; the direction only records which side of the pairing the
/// result is meant for.
pub fn dagger<T: Real>(x: &BlockHermitian<T>, _direction: Direction) -> BlockHermitian<T> {
    x.clone()
}
