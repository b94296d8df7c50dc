//! Spectral decompositions and the cone of squares.

use nalgebra::DVector;

use super::element::EjaElement;
use super::quaternion::QuatMatrix;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{CMatrix, CVector, Real};

/// `a = Σ eigenvalues[i] · frame[i]` with eigenvalues descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult<T: Real = f64> {
    pub eigenvalues: Vec<T>,
    pub frame: Vec<EjaElement<T>>,
}

impl<T: Real> SpectralResult<T> {
    pub fn reconstruct(&self) -> EjaElement<T> {
        let mut acc = self.frame[0].scale(T::zero());
        for (c, p) in self.eigenvalues.iter().zip(&self.frame) {
            acc = acc.add(&p.scale(*c)).expect("frame elements share a kind");
        }
        acc
    }
}

pub fn spectral_decompose<T: Real>(a: &EjaElement<T>) -> SpectralResult<T> {
    match a {
        EjaElement::RealSym(m) => {
            let (values, vectors) = linalg::sym_eigen(m);
            let frame = (0..values.len())
                .map(|i| {
                    let v = vectors.column(i);
                    EjaElement::RealSym(v * v.transpose())
                })
                .collect();
            SpectralResult { eigenvalues: values, frame }
        }
        EjaElement::ComplexHerm(m) => {
            let (values, vectors) = linalg::herm_eigen(m);
            let frame = (0..values.len())
                .map(|i| EjaElement::ComplexHerm(linalg::outer(&vectors.column(i).into_owned())))
                .collect();
            SpectralResult { eigenvalues: values, frame }
        }
        EjaElement::QuatHerm(m) => quat_spectral(m),
        EjaElement::Spin { t, x } => {
            let r = x.norm();
            let dir = if r > T::zero() {
                x / r
            } else {
                // degenerate: first coordinate axis
                let mut e = DVector::zeros(x.len());
                e[0] = T::one();
                e
            };
            let half = T::lit(0.5);
            let up = EjaElement::Spin { t: half, x: &dir * half };
            let down = EjaElement::Spin { t: half, x: &dir * (-half) };
            SpectralResult { eigenvalues: vec![*t + r, *t - r], frame: vec![up, down] }
        }
    }
}

// Quaternionic eigenvectors come from the complex image: each eigenvector v
// has a partner Jv with the same eigenvalue, and the pair spans one
// quaternionic line.
fn quat_spectral<T: Real>(m: &QuatMatrix<T>) -> SpectralResult<T> {
    let n = m.order();
    let image = m.to_complex();
    let (_, vectors) = linalg::herm_eigen(&image);
    let mut accepted: Vec<CVector<T>> = Vec::with_capacity(2 * n);
    let mut eigenvalues = Vec::with_capacity(n);
    let mut frame = Vec::with_capacity(n);
    for col in 0..2 * n {
        if frame.len() == n {
            break;
        }
        let mut v: CVector<T> = vectors.column(col).into_owned();
        for _ in 0..2 {
            for u in &accepted {
                let overlap = u.dotc(&v);
                v -= u * overlap;
            }
        }
        let norm = v.norm();
        if norm < T::lit(0.5) {
            continue;
        }
        v /= crate::scalar::cr(norm);
        let partner = j_partner(&v);
        let lambda = v.dotc(&(&image * &v)).re;
        let proj: CMatrix<T> = linalg::outer(&v) + linalg::outer(&partner);
        accepted.push(v);
        accepted.push(partner);
        eigenvalues.push(lambda);
        frame.push(EjaElement::QuatHerm(QuatMatrix::from_complex(&proj).hermitian_part()));
    }
    SpectralResult { eigenvalues, frame }
}

// (u; w) ↦ (−w̄; ū)
fn j_partner<T: Real>(v: &CVector<T>) -> CVector<T> {
    let n = v.len() / 2;
    CVector::from_fn(2 * n, |i, _| if i < n { -v[n + i].conj() } else { v[i - n].conj() })
}

/// Whether `elems` are orthogonal idempotents of unit trace summing to the
/// unit.
pub fn is_jordan_frame<T: Real>(elems: &[EjaElement<T>], tol: T) -> Result<bool> {
    let Some(first) = elems.first() else {
        return Ok(false);
    };
    let kind = first.kind();
    if let Some(bad) = elems.iter().find(|e| e.kind() != kind) {
        return Err(Error::KindMismatch { left: kind, right: bad.kind() });
    }
    for p in elems {
        let sq = p.jordan_product(p)?;
        if sq.distance(p)? > tol || (p.trace() - T::one()).abs() > tol {
            return Ok(false);
        }
    }
    for (i, p) in elems.iter().enumerate() {
        for q in &elems[i + 1..] {
            if p.inner_product(q)?.abs() > tol {
                return Ok(false);
            }
        }
    }
    let mut sum = EjaElement::zero(kind)?;
    for p in elems {
        sum = sum.add(p)?;
    }
    Ok(sum.distance(&EjaElement::identity(kind)?)? <= tol)
}

/// Membership in the cone of squares: every eigenvalue is at least `−tol`.
pub fn cone_membership<T: Real>(a: &EjaElement<T>, tol: T) -> bool {
    min_eigenvalue(a) >= -tol
}

pub fn min_eigenvalue<T: Real>(a: &EjaElement<T>) -> T {
    match a {
        EjaElement::ComplexHerm(m) => linalg::min_eigenvalue(m),
        EjaElement::Spin { t, x } => *t - x.norm(),
        other => {
            let s = spectral_decompose(other);
            s.eigenvalues.iter().copied().fold(s.eigenvalues[0], |a, b| a.min(b))
        }
    }
}
