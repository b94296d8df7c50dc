//! Reference computations that do not go through the library's eigensolvers.
#![allow(dead_code)]

use jordanopt::eja::quaternion::QuatMatrix;
use jordanopt::{CMatrix, SystemSpec};
use nalgebra::DMatrix;

pub fn sys(s: &str) -> SystemSpec {
    s.parse().expect("valid system")
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted descending.
pub fn jacobi_eigenvalues(a: &DMatrix<f64>) -> Vec<f64> {
    let n = a.nrows();
    let mut m = a.clone();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).filter(|(p, q)| p != q).map(|(p, q)| m[(p, q)].powi(2)).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[(k, p)], m[(k, q)]);
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[(p, k)], m[(q, k)]);
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut v: Vec<f64> = (0..n).map(|i| m[(i, i)]).collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// `[[A, −B], [B, A]]` for `M = A + iB`.
pub fn complex_to_real(m: &CMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = m[(r % n, c % n)];
        match (r < n, c < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    })
}

/// Every `k`-th entry of a descending list in which each value repeats `k` times.
pub fn every(values: Vec<f64>, k: usize) -> Vec<f64> {
    values.into_iter().step_by(k).collect()
}

pub fn hermitian_eigenvalues(m: &CMatrix<f64>) -> Vec<f64> {
    every(jacobi_eigenvalues(&complex_to_real(m)), 2)
}

/// Left-multiplication embedding `H^{n×n} → R^{4n×4n}`.
pub fn quat_to_real(q: &QuatMatrix<f64>) -> DMatrix<f64> {
    let n = q.order();
    DMatrix::from_fn(4 * n, 4 * n, |r, c| {
        let e = q.get(r / 4, c / 4);
        let l = [
            [e.w, -e.x, -e.y, -e.z],
            [e.x, e.w, -e.z, e.y],
            [e.y, e.z, e.w, -e.x],
            [e.z, -e.y, e.x, e.w],
        ];
        l[r % 4][c % 4]
    })
}

/// Unit vector approximately minimizing `⟨ψ|X|ψ⟩`, found by repeated
/// squaring of `cI − X`.
pub fn min_pairing_vector(x: &CMatrix<f64>) -> nalgebra::DVector<nalgebra::Complex<f64>> {
    let n = x.nrows();
    let c = x.norm() + 1.0;
    let mut b = CMatrix::<f64>::identity(n, n) * nalgebra::Complex::new(c, 0.0) - x;
    for _ in 0..80 {
        b = &b * &b;
        let s = b.norm();
        b /= nalgebra::Complex::new(s, 0.0);
    }
    let col = (0..n).max_by(|&i, &j| b.column(i).norm().partial_cmp(&b.column(j).norm()).unwrap()).unwrap();
    b.column(col).normalize()
}

/// Smallest `⟨ψ|X|ψ⟩` found by [`min_pairing_vector`]; the value is attained
/// by an explicit unit vector, so a negative result is a genuine separating
/// witness.
pub fn min_pairing_witness(x: &CMatrix<f64>) -> f64 {
    let psi = min_pairing_vector(x);
    (psi.adjoint() * x * &psi)[(0, 0)].re
}
