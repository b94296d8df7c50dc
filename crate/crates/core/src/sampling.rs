//! Seeded random sampling.
//!
//! Every sampler takes an explicit RNG. [`trial_rng`] gives each trial its
//! own stream.

use nalgebra::ComplexField;
use nalgebra::{DMatrix, DVector};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::eja::quaternion::{QuatMatrix, Quaternion};
use crate::eja::{EjaElement, EjaKind};
use crate::error::{Error, Result};
use crate::linalg;
use crate::opt::{BlockHermitian, PureState, SystemSpec};
use crate::process::KrausFamily;
use crate::scalar::{cx, CMatrix, CVector, Real};

pub type SampleRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// RNG for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn gauss<T: Real, R: Rng + ?Sized>(rng: &mut R) -> T {
    T::lit(rng.sample::<f64, _>(StandardNormal))
}

fn gauss_matrix<T: Real, R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix<T> {
    CMatrix::from_fn(rows, cols, |_, _| cx(gauss(rng), gauss(rng)))
}

fn gauss_vector<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> CVector<T> {
    loop {
        let v = CVector::from_fn(n, |_, _| cx(gauss(rng), gauss(rng)));
        if v.norm() > T::lit(1e-6) {
            return v;
        }
    }
}

/// A block index drawn with probability proportional to the block size.
pub fn random_block<R: Rng + ?Sized>(system: &SystemSpec, rng: &mut R) -> usize {
    WeightedIndex::new(system.blocks()).expect("block sizes are positive").sample(rng)
}

pub fn random_pure_in_block<T: Real, R: Rng + ?Sized>(system: &SystemSpec, block: usize, rng: &mut R) -> PureState<T> {
    let v = gauss_vector(system.block(block), rng);
    PureState::normalized(system, block, v).expect("nonzero vector")
}

/// Normalized complex Gaussian vector in a randomly chosen block.
pub fn random_pure<T: Real, R: Rng + ?Sized>(system: &SystemSpec, rng: &mut R) -> PureState<T> {
    let block = random_block(system, rng);
    random_pure_in_block(system, block, rng)
}

/// A normalized state `GG†/Tr(GG†)` with `G` of the given column count per
/// block; `rank = None` gives full rank.
pub fn random_state_with_rank<T: Real, R: Rng + ?Sized>(
    system: &SystemSpec,
    rank: Option<usize>,
    rng: &mut R,
) -> BlockHermitian<T> {
    let blocks: Vec<CMatrix<T>> = system
        .blocks()
        .iter()
        .map(|&n| {
            let g = gauss_matrix::<T, _>(n, rank.unwrap_or(n).min(n), rng);
            linalg::hermitian_part(&(&g * g.adjoint()))
        })
        .collect();
    let x = BlockHermitian::new(system.clone(), blocks).expect("Gram matrices are Hermitian");
    let t = x.trace();
    x.scale(T::one() / t)
}

/// A full-rank normalized Wishart-style state.
pub fn random_state<T: Real, R: Rng + ?Sized>(system: &SystemSpec, rng: &mut R) -> BlockHermitian<T> {
    random_state_with_rank(system, None, rng)
}

/// A state with at least one zero eigenvalue: a random block is dropped to
/// rank `n − 1` (or zeroed when `n = 1`).
pub fn random_deficient_state<T: Real, R: Rng + ?Sized>(system: &SystemSpec, rng: &mut R) -> BlockHermitian<T> {
    let target = rng.random_range(0..system.num_blocks());
    let blocks: Vec<CMatrix<T>> = system
        .blocks()
        .iter()
        .enumerate()
        .map(|(l, &n)| {
            let cols = if l == target { n - 1 } else { n };
            let g = gauss_matrix::<T, _>(n, cols, rng);
            linalg::hermitian_part(&(&g * g.adjoint()))
        })
        .collect();
    let x = BlockHermitian::new(system.clone(), blocks).expect("Gram matrices are Hermitian");
    let t = x.trace();
    if t > T::zero() {
        x.scale(T::one() / t)
    } else {
        x
    }
}

/// An extended vector with Gaussian Hermitian blocks, unit Frobenius norm.
pub fn random_hermitian<T: Real, R: Rng + ?Sized>(system: &SystemSpec, rng: &mut R) -> BlockHermitian<T> {
    let blocks: Vec<CMatrix<T>> = system
        .blocks()
        .iter()
        .map(|&n| linalg::hermitian_part(&gauss_matrix::<T, _>(n, n, rng)))
        .collect();
    let x = BlockHermitian::new(system.clone(), blocks).expect("Hermitian by construction");
    let norm = x.norm();
    x.scale(T::one() / norm)
}

/// Haar-ish unitary from the QR factorization of a Gaussian matrix.
pub fn random_unitary<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix<T> {
    let qr = gauss_matrix::<T, _>(n, n, rng).qr();
    let (q, r) = (qr.q(), qr.r());
    let phases = DVector::from_fn(n, |i, _| {
        let d = r[(i, i)];
        let m = d.modulus();
        if m > T::zero() {
            d / cx(m, T::zero())
        } else {
            cx(T::one(), T::zero())
        }
    });
    q * CMatrix::from_diagonal(&phases)
}

/// Unnormalized CP map with `kraus_per_pair` Gaussian Kraus operators on
/// every block pair.
pub fn random_cp_map<T: Real, R: Rng + ?Sized>(
    input: &SystemSpec,
    output: &SystemSpec,
    kraus_per_pair: usize,
    rng: &mut R,
) -> KrausFamily<T> {
    let mut fam = KrausFamily::empty(input, output);
    let scale = T::one() / T::from_usize_lossy(input.rank() * output.rank()).sqrt();
    for (i, &m) in input.blocks().iter().enumerate() {
        for (j, &n) in output.blocks().iter().enumerate() {
            for _ in 0..kraus_per_pair {
                let k = linalg::scale(&gauss_matrix::<T, _>(n, m, rng), scale);
                fam.push(i, j, k).expect("shape matches");
            }
        }
    }
    fam
}

/// Random element with Gaussian coordinates, unit norm.
pub fn random_eja_element<T: Real, R: Rng + ?Sized>(kind: EjaKind, rng: &mut R) -> Result<EjaElement<T>> {
    let el = match kind {
        EjaKind::RealSym(n) => {
            let g = DMatrix::from_fn(n, n, |_, _| gauss::<T, _>(rng));
            EjaElement::real_sym((&g + g.transpose()) * T::lit(0.5))?
        }
        EjaKind::ComplexHerm(n) => EjaElement::complex_herm(linalg::hermitian_part(&gauss_matrix(n, n, rng)))?,
        EjaKind::QuatHerm(n) => {
            let g = QuatMatrix::from_fn(n, |_, _| Quaternion::new(gauss(rng), gauss(rng), gauss(rng), gauss(rng)));
            EjaElement::quat_herm(g.hermitian_part())?
        }
        EjaKind::Spin(s) => {
            kind.validate()?;
            EjaElement::spin(gauss(rng), DVector::from_fn(s - 1, |_, _| gauss::<T, _>(rng)))?
        }
        EjaKind::OctHerm3 => return Err(Error::NoArithmetic(kind)),
    };
    let norm = el.norm();
    Ok(el.scale(T::one() / norm))
}

/// A system with `1..=max_blocks` blocks of size `1..=max_dim`.
pub fn random_system<R: Rng + ?Sized>(max_blocks: usize, max_dim: usize, rng: &mut R) -> SystemSpec {
    let k = rng.random_range(1..=max_blocks);
    SystemSpec::new((0..k).map(|_| rng.random_range(1..=max_dim)).collect()).expect("positive blocks")
}
