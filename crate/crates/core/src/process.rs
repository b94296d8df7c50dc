//! Processes as completely positive maps, stored as block Choi matrices.

use nalgebra::ComplexField;
use serde::{Deserialize, Serialize};

use crate::composite::{cup, spanning_states, tensor_system, CompositeIndexMap};
use crate::error::{Error, Result};
use crate::linalg;
use crate::opt::{BlockHermitian, SystemSpec};
use crate::scalar::{cr, CMatrix, Real};

/// A process `input → output` as its Choi matrix on `input ⊗ output`.
///
/// Block `(i, j)` is `Σ_{ab} |a⟩⟨b| ⊗ L(|a⟩⟨b|)ⱼ` over the basis of input
/// block `i`, so the identity process has the cup as its Choi matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessChoi<T: Real = f64> {
    input: SystemSpec,
    output: SystemSpec,
    choi: BlockHermitian<T>,
}

/// Kraus operators grouped by `(input block, output block)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausFamily<T: Real = f64> {
    pub input: SystemSpec,
    pub output: SystemSpec,
    /// `ops[i][j]` holds `nⱼ × mᵢ` matrices.
    pub ops: Vec<Vec<Vec<CMatrix<T>>>>,
}

impl<T: Real> KrausFamily<T> {
    pub fn empty(input: &SystemSpec, output: &SystemSpec) -> Self {
        let ops = (0..input.num_blocks()).map(|_| vec![Vec::new(); output.num_blocks()]).collect();
        Self { input: input.clone(), output: output.clone(), ops }
    }

    /// One operator per block acting within that block, as for `ρ ↦ EρE†`
    /// with block-diagonal `E`.
    pub fn block_diagonal(system: &SystemSpec, ops: Vec<CMatrix<T>>) -> Result<Self> {
        if ops.len() != system.num_blocks() {
            return Err(Error::DimensionMismatch { expected: system.num_blocks(), got: ops.len() });
        }
        let mut fam = Self::empty(system, system);
        for (i, op) in ops.into_iter().enumerate() {
            fam.ops[i][i].push(op);
        }
        fam.check_shapes()?;
        Ok(fam)
    }

    pub fn push(&mut self, i: usize, j: usize, op: CMatrix<T>) -> Result<()> {
        let (m, n) = (self.input.block(i), self.output.block(j));
        if op.shape() != (n, m) {
            return Err(Error::DimensionMismatch { expected: n * m, got: op.nrows() * op.ncols() });
        }
        self.ops[i][j].push(op);
        Ok(())
    }

    fn check_shapes(&self) -> Result<()> {
        for (i, row) in self.ops.iter().enumerate() {
            for (j, list) in row.iter().enumerate() {
                let want = (self.output.block(j), self.input.block(i));
                if let Some(bad) = list.iter().find(|k| k.shape() != want) {
                    return Err(Error::DimensionMismatch { expected: want.0 * want.1, got: bad.nrows() * bad.ncols() });
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ops.iter().flatten().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Σ_k K ρᵢ K†` routed from input block `i` to output block `j`.
    pub fn apply(&self, rho: &BlockHermitian<T>) -> Result<BlockHermitian<T>> {
        if rho.system() != &self.input {
            return Err(Error::SystemMismatch { left: self.input.clone(), right: rho.system().clone() });
        }
        let mut out: Vec<CMatrix<T>> = self.output.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
        for (i, row) in self.ops.iter().enumerate() {
            for (j, list) in row.iter().enumerate() {
                for k in list {
                    out[j] += k * rho.block(i) * k.adjoint();
                }
            }
        }
        Ok(BlockHermitian::from_blocks_unchecked(
            self.output.clone(),
            out.iter().map(linalg::hermitian_part).collect(),
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProcessClass {
    #[serde(rename = "NotCP")]
    NotCp,
    /// Feasible: CP and trace non-increasing.
    #[serde(rename = "CP_TraceNonIncreasing")]
    CpTraceNonIncreasing,
    /// Deterministic: CP and trace preserving.
    #[serde(rename = "CP_TP")]
    CpTp,
    #[serde(rename = "CP_TraceIncreasing")]
    CpTraceIncreasing,
}

impl<T: Real> ProcessChoi<T> {
    pub fn new(input: SystemSpec, output: SystemSpec, choi: BlockHermitian<T>) -> Result<Self> {
        let (composite, _) = tensor_system(&input, &output);
        if choi.system() != &composite {
            return Err(Error::SystemMismatch { left: composite, right: choi.system().clone() });
        }
        Ok(Self { input, output, choi })
    }

    pub fn input(&self) -> &SystemSpec {
        &self.input
    }

    pub fn output(&self) -> &SystemSpec {
        &self.output
    }

    pub fn choi(&self) -> &BlockHermitian<T> {
        &self.choi
    }

    pub fn index_map(&self) -> CompositeIndexMap {
        tensor_system(&self.input, &self.output).1
    }

    pub fn identity(system: &SystemSpec) -> Self {
        Self { input: system.clone(), output: system.clone(), choi: cup::<T>(system).cup }
    }

    pub fn zero(input: &SystemSpec, output: &SystemSpec) -> Self {
        let (composite, _) = tensor_system(input, output);
        Self { input: input.clone(), output: output.clone(), choi: BlockHermitian::zero(&composite) }
    }

    /// Choi matrix of a linear map given on raw (possibly non-Hermitian)
    /// block matrices.
    pub fn from_linear_map<F>(input: &SystemSpec, output: &SystemSpec, map: F) -> Self
    where
        F: Fn(&[CMatrix<T>]) -> Vec<CMatrix<T>>,
    {
        let (composite, cmap) = tensor_system(input, output);
        let mut blocks: Vec<CMatrix<T>> = composite.blocks().iter().map(|&d| CMatrix::zeros(d, d)).collect();
        for (i, &m) in input.blocks().iter().enumerate() {
            for a in 0..m {
                for b in 0..m {
                    let mut basis: Vec<CMatrix<T>> = input.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
                    basis[i][(a, b)] = cr(T::one());
                    let image = map(&basis);
                    for (j, img) in image.iter().enumerate() {
                        let mut unit = CMatrix::zeros(m, m);
                        unit[(a, b)] = cr(T::one());
                        blocks[cmap.index(i, j)] += unit.kronecker(img);
                    }
                }
            }
        }
        let blocks = blocks.iter().map(linalg::hermitian_part).collect();
        Self {
            input: input.clone(),
            output: output.clone(),
            choi: BlockHermitian::from_blocks_unchecked(composite, blocks),
        }
    }

    /// `L(x)ⱼ = Σᵢ Tr_in[(xᵢᵀ ⊗ I) C_{ij}]` on raw block matrices.
    pub fn apply_raw(&self, x: &[CMatrix<T>]) -> Vec<CMatrix<T>> {
        let map = self.index_map();
        let mut out: Vec<CMatrix<T>> = self.output.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
        for (i, j, k) in map.pairs() {
            let (m, n) = (self.input.block(i), self.output.block(j));
            let c = self.choi.block(k);
            let o = &mut out[j];
            // out[s,t] = Σ_ab x[b,a] C[(b,s),(a,t)]
            for b in 0..m {
                for a in 0..m {
                    let w = x[i][(b, a)];
                    if w.re == T::zero() && w.im == T::zero() {
                        continue;
                    }
                    for s in 0..n {
                        for t in 0..n {
                            o[(s, t)] += w * c[(b * n + s, a * n + t)];
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, rho: &BlockHermitian<T>) -> Result<BlockHermitian<T>> {
        if rho.system() != &self.input {
            return Err(Error::SystemMismatch { left: self.input.clone(), right: rho.system().clone() });
        }
        let out = self.apply_raw(rho.blocks());
        Ok(BlockHermitian::from_blocks_unchecked(
            self.output.clone(),
            out.iter().map(linalg::hermitian_part).collect(),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_type(other)?;
        Ok(Self { input: self.input.clone(), output: self.output.clone(), choi: self.choi.add(&other.choi)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_type(other)?;
        Ok(Self { input: self.input.clone(), output: self.output.clone(), choi: self.choi.sub(&other.choi)? })
    }

    pub fn scale(&self, s: T) -> Self {
        Self { input: self.input.clone(), output: self.output.clone(), choi: self.choi.scale(s) }
    }

    fn check_same_type(&self, other: &Self) -> Result<()> {
        if self.input != other.input {
            return Err(Error::SystemMismatch { left: self.input.clone(), right: other.input.clone() });
        }
        if self.output != other.output {
            return Err(Error::SystemMismatch { left: self.output.clone(), right: other.output.clone() });
        }
        Ok(())
    }

    /// Frobenius distance between Choi matrices.
    pub fn choi_distance(&self, other: &Self) -> Result<T> {
        self.check_same_type(other)?;
        self.choi.distance(&other.choi)
    }

    /// `Tᵢ = Σⱼ Tr_out C_{ij}`; the map is trace preserving iff every
    /// `Tᵢ = I`.
    pub fn trace_map(&self) -> Vec<CMatrix<T>> {
        let mut out: Vec<CMatrix<T>> = self.input.blocks().iter().map(|&m| CMatrix::zeros(m, m)).collect();
        for (i, j, k) in self.index_map().pairs() {
            out[i] += linalg::trace_second(self.choi.block(k), self.input.block(i), self.output.block(j));
        }
        out
    }

    pub fn is_cp(&self, tol: T) -> bool {
        self.choi.in_cone(tol)
    }
}

pub fn choi_from_kraus<T: Real>(k: &KrausFamily<T>) -> ProcessChoi<T> {
    let (composite, map) = tensor_system(&k.input, &k.output);
    let blocks = map
        .pairs()
        .map(|(i, j, _)| {
            let d = k.input.block(i) * k.output.block(j);
            k.ops[i][j]
                .iter()
                .fold(CMatrix::zeros(d, d), |acc, op| acc + linalg::outer(&linalg::vec_columns(op)))
        })
        .collect();
    ProcessChoi {
        input: k.input.clone(),
        output: k.output.clone(),
        choi: BlockHermitian::from_blocks_unchecked(composite, blocks),
    }
}

/// Kraus operators from the eigen-decomposition of each Choi block.
/// Eigenvalues in `[−tol, tol]` are dropped; anything below `−tol` means the
/// map is not CP.
pub fn kraus_from_choi<T: Real>(f: &ProcessChoi<T>, tol: T) -> Result<KrausFamily<T>> {
    let mut fam = KrausFamily::empty(&f.input, &f.output);
    for (i, j, k) in f.index_map().pairs() {
        let (m, n) = (f.input.block(i), f.output.block(j));
        let (values, vectors) = linalg::herm_eigen(f.choi.block(k));
        for (idx, &v) in values.iter().enumerate() {
            if v < -tol {
                return Err(Error::NotCompletelyPositive(v.as_f64()));
            }
            if v > tol {
                let col = vectors.column(idx).map(|z| z * v.sqrt());
                fam.ops[i][j].push(linalg::unvec_columns(&col, n, m));
            }
        }
    }
    Ok(fam)
}

pub fn classify_process<T: Real>(f: &ProcessChoi<T>, tol: T) -> ProcessClass {
    if !f.is_cp(tol) {
        return ProcessClass::NotCp;
    }
    let traces = f.trace_map();
    let tp = traces
        .iter()
        .all(|t| (t - linalg::identity::<T>(t.nrows())).iter().all(|z| z.modulus() <= tol));
    if tp {
        return ProcessClass::CpTp;
    }
    let non_increasing = traces
        .iter()
        .all(|t| linalg::min_eigenvalue(&(linalg::identity::<T>(t.nrows()) - t)) >= -tol);
    if non_increasing {
        ProcessClass::CpTraceNonIncreasing
    } else {
        ProcessClass::CpTraceIncreasing
    }
}

/// A process `g` such that `f + g` is deterministic: the trace defect
/// `Dᵢ = I − Tᵢᵀ` is measured and the maximally mixed output state is
/// prepared, `g(ρ) = Σᵢ Tr(Dᵢ ρᵢ) · χ_B / N_B`.
pub fn complete_to_test<T: Real>(f: &ProcessChoi<T>, tol: T) -> Result<ProcessChoi<T>> {
    match classify_process(f, tol) {
        ProcessClass::CpTp | ProcessClass::CpTraceNonIncreasing => {}
        ProcessClass::NotCp => return Err(Error::NotCompletelyPositive(f.choi.min_eigenvalue().as_f64())),
        ProcessClass::CpTraceIncreasing => {
            let excess = f
                .trace_map()
                .iter()
                .map(|t| -linalg::min_eigenvalue(&(linalg::identity::<T>(t.nrows()) - t)))
                .fold(T::zero(), |a, b| a.max(b));
            return Err(Error::NotFeasible(excess.as_f64()));
        }
    }
    let (composite, map) = tensor_system(&f.input, &f.output);
    let mixed = T::one() / T::from_usize_lossy(f.output.rank());
    let defects: Vec<CMatrix<T>> = f
        .trace_map()
        .iter()
        .map(|t| {
            let d = linalg::identity::<T>(t.nrows()) - t;
            // clip tiny negative eigenvalues of the defect so g stays CP
            let (vals, vecs) = linalg::herm_eigen(&linalg::hermitian_part(&d));
            let clipped = nalgebra::DVector::from_iterator(vals.len(), vals.iter().map(|v| cr(v.max(T::zero()))));
            &vecs * CMatrix::from_diagonal(&clipped) * vecs.adjoint()
        })
        .collect();
    let blocks = map
        .pairs()
        .map(|(i, j, _)| {
            let sigma = linalg::scale(&linalg::identity::<T>(f.output.block(j)), mixed);
            defects[i].kronecker(&sigma)
        })
        .collect();
    Ok(ProcessChoi {
        input: f.input.clone(),
        output: f.output.clone(),
        choi: BlockHermitian::from_blocks_unchecked(composite, blocks),
    })
}

/// `g ∘ f`.
pub fn compose_sequential<T: Real>(g: &ProcessChoi<T>, f: &ProcessChoi<T>) -> Result<ProcessChoi<T>> {
    if f.output != g.input {
        return Err(Error::SystemMismatch { left: f.output.clone(), right: g.input.clone() });
    }
    Ok(ProcessChoi::from_linear_map(&f.input, &g.output, |x| g.apply_raw(&f.apply_raw(x))))
}

/// `f ⊗ h : A ⊗ C → B ⊗ D`.
pub fn compose_parallel<T: Real>(f: &ProcessChoi<T>, h: &ProcessChoi<T>) -> ProcessChoi<T> {
    let (input, in_map) = tensor_system(&f.input, &h.input);
    let (output, out_map) = tensor_system(&f.output, &h.output);
    ProcessChoi::from_linear_map(&input, &output, |x| {
        let mut out: Vec<CMatrix<T>> = output.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
        for (i, k, idx) in in_map.pairs() {
            let block = &x[idx];
            if block.iter().all(|z| z.modulus() == T::zero()) {
                continue;
            }
            let (m, p) = (f.input.block(i), h.input.block(k));
            // expand the composite block over product basis units
            for r in 0..m * p {
                for c in 0..m * p {
                    let coeff = block[(r, c)];
                    if coeff.modulus() == T::zero() {
                        continue;
                    }
                    let mut left: Vec<CMatrix<T>> = f.input.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
                    let mut right: Vec<CMatrix<T>> = h.input.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
                    left[i][(r / p, c / p)] = cr(T::one());
                    right[k][(r % p, c % p)] = cr(T::one());
                    let fl = f.apply_raw(&left);
                    let hr = h.apply_raw(&right);
                    for (j, l, o) in out_map.pairs() {
                        out[o] += fl[j].kronecker(&hr[l]) * coeff;
                    }
                }
            }
        }
        out
    })
}

/// The swap `A ⊗ B → B ⊗ A`: block `(i, j)` goes to `(j, i)` with the
/// Kronecker factors exchanged.
pub fn swap<T: Real>(a: &SystemSpec, b: &SystemSpec) -> ProcessChoi<T> {
    let (ab, ab_map) = tensor_system(a, b);
    let (_, ba_map) = tensor_system(b, a);
    let ba = ba_map.composite.clone();
    ProcessChoi::from_linear_map(&ab, &ba, |x| {
        let mut out: Vec<CMatrix<T>> = ba.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
        for (i, j, k) in ab_map.pairs() {
            let (m, n) = (a.block(i), b.block(j));
            let dst = ba_map.index(j, i);
            for r in 0..m * n {
                for c in 0..m * n {
                    let (r1, r2, c1, c2) = (r / n, r % n, c / n, c % n);
                    out[dst][(r2 * m + r1, c2 * m + c1)] = x[k][(r, c)];
                }
            }
        }
        out
    })
}

/// Choi distance within `tol`.
pub fn processes_equal<T: Real>(f: &ProcessChoi<T>, g: &ProcessChoi<T>, tol: T) -> Result<bool> {
    Ok(f.choi_distance(g)? <= tol)
}

/// Largest output distance over a spanning set of input states.
pub fn local_distance<T: Real>(f: &ProcessChoi<T>, g: &ProcessChoi<T>) -> Result<T> {
    f.check_same_type(g)?;
    let mut worst = T::zero();
    for s in spanning_states::<T>(&f.input) {
        let rho = s.projector();
        worst = worst.max(f.apply(&rho)?.distance(&g.apply(&rho)?)?);
    }
    Ok(worst)
}

/// Agreement of `f` and `g` on every state of a spanning set.
pub fn locally_equal<T: Real>(f: &ProcessChoi<T>, g: &ProcessChoi<T>, tol: T) -> Result<bool> {
    Ok(local_distance(f, g)? <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composite::tensor_element;
    use crate::scalar::cr;

    fn sys(s: &str) -> SystemSpec {
        s.parse().unwrap()
    }

    fn diag(s: &SystemSpec, d: &[f64]) -> BlockHermitian {
        BlockHermitian::from_diagonal(s, d).unwrap()
    }

    #[test]
    fn non_finite_choi_is_not_cp() {
        let s = sys("2");
        let mut blocks = ProcessChoi::<f64>::identity(&s).choi().clone().into_blocks();
        blocks[0][(0, 0)] = cr(f64::NAN);
        let f = ProcessChoi { input: s.clone(), output: s.clone(), choi: BlockHermitian::from_blocks_unchecked(sys("4"), blocks) };
        assert!(!f.is_cp(1e-9));
        assert_eq!(classify_process(&f, 1e-9), ProcessClass::NotCp);
    }

    #[test]
    fn identity_applies_as_identity() {
        let s = sys("1,2");
        let id = ProcessChoi::<f64>::identity(&s);
        let rho = diag(&s, &[0.2, 0.5, 0.3]);
        assert!(id.apply(&rho).unwrap().distance(&rho).unwrap() < 1e-15);
        assert_eq!(classify_process(&id, 1e-9), ProcessClass::CpTp);
    }

    #[test]
    fn filter_like_kraus() {
        let s = sys("2");
        let c: f64 = 0.25;
        let e = CMatrix::from_row_slice(2, 2, &[cr(c.sqrt()), cr(0.0), cr(0.0), cr(1.0)]);
        let f = choi_from_kraus(&KrausFamily::block_diagonal(&s, vec![e]).unwrap());
        let out = f.apply(&diag(&s, &[0.4, 0.6])).unwrap();
        assert!(out.distance(&diag(&s, &[0.1, 0.6])).unwrap() < 1e-15);
        assert_eq!(classify_process(&f, 1e-9), ProcessClass::CpTraceNonIncreasing);
    }

    #[test]
    fn discard_and_prepare() {
        let s = sys("2");
        let sigma = diag(&s, &[0.7, 0.3]);
        // Choi = I ⊗ σ
        let choi = tensor_element(&BlockHermitian::chi(&s), &sigma);
        let f = ProcessChoi::new(s.clone(), s.clone(), choi).unwrap();
        let rho = diag(&s, &[2.0, 1.0]);
        assert!(f.apply(&rho).unwrap().distance(&sigma.scale(3.0)).unwrap() < 1e-14);
    }

    #[test]
    fn kraus_choi_examples() {
        let s = sys("2");
        let id = choi_from_kraus(&KrausFamily::block_diagonal(&s, vec![CMatrix::<f64>::identity(2, 2)]).unwrap());
        assert_eq!(id.choi(), &cup::<f64>(&s).cup);
        let mut deph = KrausFamily::<f64>::empty(&s, &s);
        deph.push(0, 0, CMatrix::from_row_slice(2, 2, &[cr(1.0), cr(0.0), cr(0.0), cr(0.0)])).unwrap();
        deph.push(0, 0, CMatrix::from_row_slice(2, 2, &[cr(0.0), cr(0.0), cr(0.0), cr(1.0)])).unwrap();
        let d = choi_from_kraus(&deph);
        let expected = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![cr(1.0), cr(0.0), cr(0.0), cr(1.0)]));
        assert_eq!(d.choi().block(0), &expected);
        assert!(deph.push(0, 0, CMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn non_cp_rejected() {
        let s = sys("2");
        let f = ProcessChoi::<f64>::identity(&s).scale(-1.0);
        assert!(matches!(kraus_from_choi(&f, 1e-9), Err(Error::NotCompletelyPositive(_))));
        assert_eq!(classify_process(&f, 1e-9), ProcessClass::NotCp);
        assert!(complete_to_test(&f, 1e-9).is_err());
    }

    #[test]
    fn classification_examples() {
        let s = sys("1,2");
        let id = ProcessChoi::<f64>::identity(&s);
        assert_eq!(classify_process(&id.scale(2.0), 1e-9), ProcessClass::CpTraceIncreasing);
        assert!(matches!(complete_to_test(&id.scale(2.0), 1e-9), Err(Error::NotFeasible(_))));
        let g = complete_to_test(&id, 1e-9).unwrap();
        assert!(g.choi().norm() < 1e-12);
        let half = id.scale(0.5);
        let g = complete_to_test(&half, 1e-9).unwrap();
        assert_eq!(classify_process(&half.add(&g).unwrap(), 1e-9), ProcessClass::CpTp);
    }

    #[test]
    fn sequential_identities() {
        let s = sys("1,2");
        let id = ProcessChoi::<f64>::identity(&s);
        let mut k = KrausFamily::empty(&s, &s);
        k.push(1, 0, CMatrix::from_row_slice(1, 2, &[cr(0.6), cr(0.0)])).unwrap();
        k.push(1, 1, CMatrix::from_row_slice(2, 2, &[cr(0.0), cr(0.8), cr(0.5), cr(0.0)])).unwrap();
        k.push(0, 1, CMatrix::from_row_slice(2, 1, &[cr(0.3), cr(0.1)])).unwrap();
        let f = choi_from_kraus(&k);
        assert!(compose_sequential(&id, &f).unwrap().choi_distance(&f).unwrap() < 1e-14);
        assert!(compose_sequential(&f, &id).unwrap().choi_distance(&f).unwrap() < 1e-14);
        assert!(compose_sequential(&f, &ProcessChoi::identity(&sys("2"))).is_err());
    }

    #[test]
    fn swap_exchanges_factors() {
        let (a, b) = (sys("1,2"), sys("3"));
        let x = BlockHermitian::from_diagonal(&a, &[0.1, 0.2, 0.7]).unwrap();
        let y = BlockHermitian::from_diagonal(&b, &[0.5, 0.25, 0.25]).unwrap();
        let sw = swap::<f64>(&a, &b);
        let out = sw.apply(&tensor_element(&x, &y)).unwrap();
        assert!(out.distance(&tensor_element(&y, &x)).unwrap() < 1e-15);
        let back = compose_sequential(&swap(&b, &a), &sw).unwrap();
        let (ab, _) = tensor_system(&a, &b);
        assert!(back.choi_distance(&ProcessChoi::identity(&ab)).unwrap() < 1e-14);
        assert_eq!(classify_process(&sw, 1e-9), ProcessClass::CpTp);
    }

    #[test]
    fn equality_examples() {
        let s = sys("2");
        let id = ProcessChoi::<f64>::identity(&s);
        assert!(processes_equal(&id, &id, 1e-9).unwrap());
        let half = id.scale(0.5);
        assert!(!processes_equal(&id, &half, 1e-9).unwrap());
        assert!(!locally_equal(&id, &half, 1e-9).unwrap());
        assert!(processes_equal(&id, &ProcessChoi::identity(&sys("3")), 1e-9).is_err());
    }
}
