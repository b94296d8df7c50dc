//! Dense Hermitian helpers shared by the EJA and block-Hermitian layers.

use nalgebra::ComplexField;
use nalgebra::{DMatrix, SymmetricEigen};

use crate::scalar::{cr, CMatrix, CVector, Complex, Real};

/// Eigen-decomposition of a complex Hermitian matrix, eigenvalues descending.
///
/// Columns of the returned matrix are the matching orthonormal eigenvectors.
/// Ties keep the order produced by the solver.
pub fn herm_eigen<T: Real>(m: &CMatrix<T>) -> (Vec<T>, CMatrix<T>) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    let eig = SymmetricEigen::new(hermitian_part(m));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

/// Eigen-decomposition of a real symmetric matrix, eigenvalues descending.
pub fn sym_eigen<T: Real>(m: &DMatrix<T>) -> (Vec<T>, DMatrix<T>) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), DMatrix::zeros(0, 0));
    }
    let half = T::lit(0.5);
    let sym = (m + m.transpose()) * half;
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

/// Smallest eigenvalue of a Hermitian matrix; `+inf` for an empty matrix.
pub fn min_eigenvalue<T: Real>(m: &CMatrix<T>) -> T {
    if m.nrows() == 0 {
        return T::max_value().unwrap_or_else(T::one);
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return T::zero() / T::zero();
    }
    let eig = SymmetricEigen::new(hermitian_part(m));
    eig.eigenvalues.iter().copied().fold(eig.eigenvalues[0], |a, b| a.min(b))
}

/// `(M + M†)/2`.
pub fn hermitian_part<T: Real>(m: &CMatrix<T>) -> CMatrix<T> {
    (m + m.adjoint()) * cr(T::lit(0.5))
}

/// Largest entrywise modulus of `M − M†`.
pub fn hermiticity_defect<T: Real>(m: &CMatrix<T>) -> T {
    let d = m - m.adjoint();
    d.iter().map(|z| z.modulus()).fold(T::zero(), |a, b| a.max(b))
}

pub fn identity<T: Real>(n: usize) -> CMatrix<T> {
    CMatrix::identity(n, n)
}

/// `Re Tr(A B)`.
pub fn trace_product<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> T {
    let n = a.nrows();
    let mut acc = T::zero();
    for i in 0..n {
        for k in 0..n {
            acc += (a[(i, k)] * b[(k, i)]).re;
        }
    }
    acc
}

pub fn real_trace<T: Real>(m: &CMatrix<T>) -> T {
    (0..m.nrows()).fold(T::zero(), |acc, i| acc + m[(i, i)].re)
}

pub fn scale<T: Real>(m: &CMatrix<T>, s: T) -> CMatrix<T> {
    m.map(|z| z * s)
}

/// `|v⟩⟨v|`.
pub fn outer<T: Real>(v: &CVector<T>) -> CMatrix<T> {
    v * v.adjoint()
}

/// Partial trace over the first factor of `C^a ⊗ C^b`.
pub fn trace_first<T: Real>(m: &CMatrix<T>, a: usize, b: usize) -> CMatrix<T> {
    let mut out = CMatrix::zeros(b, b);
    for i in 0..a {
        for r in 0..b {
            for c in 0..b {
                out[(r, c)] += m[(i * b + r, i * b + c)];
            }
        }
    }
    out
}

/// Partial trace over the second factor of `C^a ⊗ C^b`.
pub fn trace_second<T: Real>(m: &CMatrix<T>, a: usize, b: usize) -> CMatrix<T> {
    let mut out = CMatrix::zeros(a, a);
    for r in 0..a {
        for c in 0..a {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..b {
                acc += m[(r * b + j, c * b + j)];
            }
            out[(r, c)] = acc;
        }
    }
    out
}

/// Column-stacking vectorisation: entry `K[b, a]` lands at index `a * rows + b`,
/// so that `(I ⊗ K)|Γ⟩ = vec(K)` with `|Γ⟩ = Σ|i⟩|i⟩`.
pub fn vec_columns<T: Real>(k: &CMatrix<T>) -> CVector<T> {
    let (rows, cols) = k.shape();
    CVector::from_fn(rows * cols, |idx, _| k[(idx % rows, idx / rows)])
}

/// Inverse of [`vec_columns`].
pub fn unvec_columns<T: Real>(v: &CVector<T>, rows: usize, cols: usize) -> CMatrix<T> {
    CMatrix::from_fn(rows, cols, |r, c| v[c * rows + r])
}

/// Orthonormal basis (as columns) of the range of a Hermitian projector-like
/// matrix: eigenvectors with eigenvalue above one half.
pub fn range_basis<T: Real>(p: &CMatrix<T>) -> CMatrix<T> {
    let (values, vectors) = herm_eigen(p);
    let keep: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v > T::lit(0.5))
        .map(|(i, _)| i)
        .collect();
    let mut out = CMatrix::zeros(p.nrows(), keep.len());
    for (dst, &src) in keep.iter().enumerate() {
        out.set_column(dst, &vectors.column(src));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    #[test]
    fn eigenvalues_descending_and_reconstruct() {
        let m = CMatrix::<f64>::from_row_slice(
            3,
            3,
            &[
                cr(2.0), cx(0.0, 1.0), cr(0.5),
                cx(0.0, -1.0), cr(-1.0), cr(0.0),
                cr(0.5), cr(0.0), cr(0.3),
            ],
        );
        let (vals, vecs) = herm_eigen(&m);
        assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        let d = CMatrix::from_diagonal(&CVector::from_iterator(3, vals.iter().map(|&v| cr(v))));
        let rebuilt = &vecs * d * vecs.adjoint();
        assert!((rebuilt - m).norm() < 1e-12);
    }

    #[test]
    fn vec_matches_gamma_convention() {
        // (I ⊗ K)|Γ⟩ has component (a, b) = K[b, a]
        let k = CMatrix::<f64>::from_fn(2, 3, |r, c| cr((r * 3 + c) as f64));
        let v = vec_columns(&k);
        for a in 0..3 {
            for b in 0..2 {
                assert_eq!(v[a * 2 + b], k[(b, a)]);
            }
        }
        assert_eq!(unvec_columns(&v, 2, 3), k);
    }

    #[test]
    fn partial_traces_of_kron() {
        let a = CMatrix::<f64>::from_fn(2, 2, |r, c| cx((r + c) as f64, r as f64 - c as f64));
        let b = CMatrix::<f64>::from_fn(3, 3, |r, c| cr(if r == c { 1.0 + r as f64 } else { 0.25 }));
        let ab = a.kronecker(&b);
        let ta = trace_second(&ab, 2, 3);
        let tb = trace_first(&ab, 2, 3);
        assert!((ta - scale(&a, real_trace(&b))).norm() < 1e-12);
        let tra = a.trace();
        assert!((tb - b.map(|z| z * tra)).norm() < 1e-12);
    }
}
