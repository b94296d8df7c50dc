//! Composite systems and their cup/cap structure.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::opt::{gamma_signs, hermitian_basis, BlockHermitian, Pds, PureState, SystemSpec};
use crate::scalar::{cr, CMatrix, CVector, Real};

/// Row-major pairing of blocks: `(i, j) ↦ i·k_B + j` with dimension `mᵢ·nⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeIndexMap {
    pub left: SystemSpec,
    pub right: SystemSpec,
    pub composite: SystemSpec,
}

impl CompositeIndexMap {
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.right.num_blocks() + j
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        (k / self.right.num_blocks(), k % self.right.num_blocks())
    }

    /// All `(i, j, k)` triples in composite order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.composite.num_blocks()).map(|k| {
            let (i, j) = self.pair(k);
            (i, j, k)
        })
    }
}

pub fn tensor_system(a: &SystemSpec, b: &SystemSpec) -> (SystemSpec, CompositeIndexMap) {
    let blocks = a
        .blocks()
        .iter()
        .flat_map(|&m| b.blocks().iter().map(move |&n| m * n))
        .collect();
    let composite = SystemSpec::new(blocks).expect("products of positive dims");
    let map = CompositeIndexMap { left: a.clone(), right: b.clone(), composite: composite.clone() };
    (composite, map)
}

/// Block `(i, j)` of `x ⊗ y` is `xᵢ ⊗ yⱼ`.
pub fn tensor_element<T: Real>(x: &BlockHermitian<T>, y: &BlockHermitian<T>) -> BlockHermitian<T> {
    let (composite, map) = tensor_system(x.system(), y.system());
    let blocks = map.pairs().map(|(i, j, _)| x.block(i).kronecker(y.block(j))).collect();
    BlockHermitian::from_blocks_unchecked(composite, blocks)
}

/// `φ ⊗ ψ` as a pure state of the composite.
pub fn tensor_pure<T: Real>(phi: &PureState<T>, psi: &PureState<T>) -> PureState<T> {
    let (composite, map) = tensor_system(phi.system(), psi.system());
    let v = phi.vector().kronecker(psi.vector());
    PureState::normalized(&composite, map.index(phi.block(), psi.block()), v).expect("product of unit vectors")
}

/// `Σ_l |Γ_l⟩⟨Γ_l|` on the diagonal blocks `(l, l)` of `A ⊗ A`, with
/// `|Γ⟩ = Σ |i⟩|i⟩`. The cap is the same matrix read as an effect.
#[derive(Debug, Clone, PartialEq)]
pub struct CupCap<T: Real = f64> {
    pub system: SystemSpec,
    pub cup: BlockHermitian<T>,
    pub cap: BlockHermitian<T>,
}

pub fn gamma_vector<T: Real>(n: usize) -> CVector<T> {
    CVector::from_fn(n * n, |idx, _| if idx / n == idx % n { cr(T::one()) } else { cr(T::zero()) })
}

pub fn cup<T: Real>(system: &SystemSpec) -> CupCap<T> {
    let (composite, map) = tensor_system(system, system);
    let blocks = map
        .pairs()
        .map(|(i, j, _)| {
            let (m, n) = (system.block(i), system.block(j));
            if i == j {
                linalg::outer(&gamma_vector::<T>(m))
            } else {
                CMatrix::zeros(m * n, m * n)
            }
        })
        .collect();
    let cup = BlockHermitian::from_blocks_unchecked(composite, blocks);
    CupCap { system: system.clone(), cap: cup.clone(), cup }
}

/// `Σ_i γᵢ w̄ᵢ ⊗ w̄ᵢ` over the orthonormal basis; equals the cup.
pub fn cup_from_basis<T: Real>(system: &SystemSpec) -> BlockHermitian<T> {
    let (composite, _) = tensor_system(system, system);
    let mut acc = BlockHermitian::zero(&composite);
    for (w, g) in hermitian_basis::<T>(system).iter().zip(gamma_signs(system)) {
        let term = tensor_element(w, w).scale(T::lit(g as f64));
        acc = acc.add(&term).expect("same composite");
    }
    acc
}

fn factor_check<T: Real>(x: &BlockHermitian<T>, left: &SystemSpec, right: &SystemSpec) -> Result<CompositeIndexMap> {
    let (composite, map) = tensor_system(left, right);
    if x.system() != &composite {
        return Err(Error::SystemMismatch { left: composite, right: x.system().clone() });
    }
    Ok(map)
}

/// `(e ⊗ id)(x)`: pairs an effect on the left factor of `left ⊗ right`.
pub fn pair_left<T: Real>(e: &BlockHermitian<T>, x: &BlockHermitian<T>, right: &SystemSpec) -> Result<BlockHermitian<T>> {
    let map = factor_check(x, e.system(), right)?;
    let mut out: Vec<CMatrix<T>> = right.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
    for (i, j, k) in map.pairs() {
        let (m, n) = (e.system().block(i), right.block(j));
        let lifted = e.block(i).kronecker(&linalg::identity::<T>(n));
        out[j] += linalg::trace_first(&(lifted * x.block(k)), m, n);
    }
    Ok(BlockHermitian::from_blocks_unchecked(right.clone(), out.iter().map(linalg::hermitian_part).collect()))
}

/// `(id ⊗ e)(x)`: pairs an effect on the right factor of `left ⊗ right`.
pub fn pair_right<T: Real>(e: &BlockHermitian<T>, x: &BlockHermitian<T>, left: &SystemSpec) -> Result<BlockHermitian<T>> {
    let map = factor_check(x, left, e.system())?;
    let mut out: Vec<CMatrix<T>> = left.blocks().iter().map(|&m| CMatrix::zeros(m, m)).collect();
    for (i, j, k) in map.pairs() {
        let (m, n) = (left.block(i), e.system().block(j));
        let lifted = linalg::identity::<T>(m).kronecker(e.block(j));
        out[i] += linalg::trace_second(&(lifted * x.block(k)), m, n);
    }
    Ok(BlockHermitian::from_blocks_unchecked(left.clone(), out.iter().map(linalg::hermitian_part).collect()))
}

/// Largest deviation of the two zig-zag compositions
/// `(cap ⊗ id)(id ⊗ cup)` and `(id ⊗ cap)(cup ⊗ id)` from the identity on
/// the orthonormal basis.
pub fn snake_check<T: Real>(system: &SystemSpec) -> T {
    let cc = cup::<T>(system);
    zigzag_deviation(system, &cc.cup, &cc.cap)
}

fn zigzag_deviation<T: Real>(
    system: &SystemSpec,
    state: &BlockHermitian<T>,
    effect: &BlockHermitian<T>,
) -> T {
    let mut worst = T::zero();
    for w in hermitian_basis::<T>(system) {
        // A ⊗ (A ⊗ A) and (A ⊗ A) ⊗ A share one block layout
        let first = pair_left(effect, &tensor_element(&w, state), system).expect("shapes agree");
        let second = pair_right(effect, &tensor_element(state, &w), system).expect("shapes agree");
        worst = worst.max(first.distance(&w).expect("same system"));
        worst = worst.max(second.distance(&w).expect("same system"));
    }
    worst
}

#[derive(Debug, Clone, PartialEq)]
pub struct EtaEpsilon<T: Real = f64> {
    /// `η̄ = Σ w̄ᵢ ⊗ w̄ᵢ`.
    pub eta: BlockHermitian<T>,
    /// `ε̄ = Σ v̄ᵢ ⊗ v̄ᵢ` with `v̄ᵢ` the dual basis (the same matrices).
    pub epsilon: BlockHermitian<T>,
    /// Largest deviation of the extended zig-zag identity on the basis.
    pub deviation: T,
    pub eta_in_cone: bool,
}

pub fn eta_epsilon_check<T: Real>(system: &SystemSpec, tol: T) -> EtaEpsilon<T> {
    let (pair_sys, _) = tensor_system(system, system);
    let basis = hermitian_basis::<T>(system);
    let mut eta = BlockHermitian::zero(&pair_sys);
    for w in &basis {
        eta = eta.add(&tensor_element(w, w)).expect("same composite");
    }
    let epsilon = eta.clone();
    let deviation = zigzag_deviation(system, &eta, &epsilon);
    let eta_in_cone = eta.in_cone(tol);
    EtaEpsilon { eta, epsilon, deviation, eta_in_cone }
}

/// Pure states whose projectors span the real space of a system:
/// `|s⟩`, `(|s⟩+|t⟩)/√2` and `(|s⟩+i|t⟩)/√2` in every block.
pub fn spanning_states<T: Real>(system: &SystemSpec) -> Vec<PureState<T>> {
    let mut out = Vec::with_capacity(system.dim());
    for (l, &n) in system.blocks().iter().enumerate() {
        for s in 0..n {
            out.push(PureState::basis(system, l, s).expect("in range"));
            for t in s + 1..n {
                for phase in [cr(T::one()), crate::scalar::cx(T::zero(), T::one())] {
                    let mut v = CVector::zeros(n);
                    v[s] = cr(T::one());
                    v[t] = phase;
                    out.push(PureState::normalized(system, l, v).expect("nonzero"));
                }
            }
        }
    }
    out
}

/// Numerical rank of the Gram matrix of `elements` under the trace inner
/// product, counting eigenvalues above `threshold` (relative to the largest).
pub fn span_rank<T: Real>(elements: &[BlockHermitian<T>], threshold: T) -> usize {
    if elements.is_empty() {
        return 0;
    }
    let coords: Vec<Vec<T>> = elements.iter().map(|e| e.basis_coords()).collect();
    let k = coords.len();
    let gram = nalgebra::DMatrix::from_fn(k, k, |r, c| {
        coords[r].iter().zip(&coords[c]).fold(T::zero(), |acc, (a, b)| acc + *a * *b)
    });
    let (values, _) = linalg::sym_eigen(&gram);
    let top = values.first().copied().unwrap_or_else(T::zero).max(T::zero());
    if top <= T::zero() {
        return 0;
    }
    values.iter().filter(|&&v| v > threshold * top).count()
}

/// Whether products of spanning states of `a` and `b` span `A ⊗ B`, which
/// witnesses `D_{A⊗B} = D_A·D_B`.
pub fn local_tomography_span<T: Real>(a: &SystemSpec, b: &SystemSpec) -> bool {
    let (composite, _) = tensor_system(a, b);
    let sa = spanning_states::<T>(a);
    let sb = spanning_states::<T>(b);
    let products: Vec<BlockHermitian<T>> = sa
        .iter()
        .flat_map(|x| sb.iter().map(move |y| tensor_element(&x.projector(), &y.projector())))
        .collect();
    span_rank(&products, T::lit(1e-8)) == composite.dim()
}

/// `{φᵢ ⊗ ψⱼ}` in row-major order.
pub fn composite_mpds<T: Real>(phi_a: &Pds<T>, phi_b: &Pds<T>, tol: T) -> Result<Pds<T>> {
    let (composite, _) = tensor_system(phi_a.system(), phi_b.system());
    let members = phi_a
        .members()
        .iter()
        .flat_map(|x| phi_b.members().iter().map(move |y| tensor_pure(x, y)))
        .collect();
    Pds::new(&composite, members, tol)
}
