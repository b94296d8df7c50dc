//! Quaternions stored as four real components, and square quaternionic
//! matrices built on them.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{cx, CMatrix, Real};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Self { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn real(w: T) -> Self {
        Self::new(w, T::zero(), T::zero(), T::zero())
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> T {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn scale(self, s: T) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl<T: Real> Add for Quaternion<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> Sub for Quaternion<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Real> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul for Quaternion<T> {
    type Output = Self;
    // Hamilton product, i² = j² = k² = ijk = −1
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

/// Square quaternionic matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct QuatMatrix<T> {
    n: usize,
    data: Vec<Quaternion<T>>,
}

impl<T: Real> QuatMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Quaternion::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Quaternion::real(T::one()));
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Quaternion<T>) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        Self { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> Quaternion<T> {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, q: Quaternion<T>) {
        self.data[r * self.n + c] = q;
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(c, r).conj())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.n;
        Self::from_fn(n, |r, c| {
            (0..n).fold(Quaternion::zero(), |acc, k| acc + self.get(r, k) * other.get(k, c))
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn scale(&self, s: T) -> Self {
        Self::from_fn(self.n, |r, c| self.get(r, c).scale(s))
    }

    /// Sum of the real parts of the diagonal.
    pub fn real_trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i).w)
    }

    pub fn frobenius_sqr(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, q| acc + q.norm_sqr())
    }

    /// Largest component of `A − A*`.
    pub fn hermiticity_defect(&self) -> T {
        let d = self.sub(&self.conj_transpose());
        d.data.iter().fold(T::zero(), |acc, q| acc.max(q.norm_sqr().sqrt()))
    }

    pub fn hermitian_part(&self) -> Self {
        self.add(&self.conj_transpose()).scale(T::lit(0.5))
    }

    /// Complex `2n × 2n` image under `a + b·j ↦ [[a, b], [−b̄, ā]]`,
    /// where `a = w + x·i`, `b = y + z·i`. The map is a ring homomorphism.
    pub fn to_complex(&self) -> CMatrix<T> {
        let n = self.n;
        let mut out = CMatrix::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                let q = self.get(r, c);
                let a = cx(q.w, q.x);
                let b = cx(q.y, q.z);
                out[(r, c)] = a;
                out[(r, n + c)] = b;
                out[(n + r, c)] = -b.conj();
                out[(n + r, n + c)] = a.conj();
            }
        }
        out
    }

    /// Reads a quaternionic matrix back from the top half of its complex image.
    pub fn from_complex(m: &CMatrix<T>) -> Self {
        let n = m.nrows() / 2;
        Self::from_fn(n, |r, c| {
            let a = m[(r, c)];
            let b = m[(r, n + c)];
            Quaternion::new(a.re, a.im, b.re, b.im)
        })
    }
}
