//! Elements of the concrete simple EJAs and their Jordan arithmetic.

use nalgebra::ComplexField;
use nalgebra::{DMatrix, DVector};

use super::kind::EjaKind;
use super::quaternion::{QuatMatrix, Quaternion};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{cr, cx, CMatrix, Real};

/// An element of one simple Euclidean Jordan algebra.
///
/// Matrix kinds hold a Hermitian matrix over their base ring. The spin
/// factor `Spin(s)` holds `(t, x)` with `x ∈ R^{s−1}`.
#[derive(Debug, Clone, PartialEq)]
pub enum EjaElement<T: Real = f64> {
    RealSym(DMatrix<T>),
    ComplexHerm(CMatrix<T>),
    QuatHerm(QuatMatrix<T>),
    Spin { t: T, x: DVector<T> },
}

fn hermitian_tol<T: Real>(scale: T) -> T {
    T::default_tol() * scale.max(T::one())
}

impl<T: Real> EjaElement<T> {
    pub fn real_sym(m: DMatrix<T>) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::InvalidKind(format!("RealSym needs a square matrix, got {:?}", m.shape())));
        }
        let defect = (&m - m.transpose()).amax();
        if defect > hermitian_tol(m.amax()) {
            return Err(Error::NotHermitian(defect.as_f64()));
        }
        let half = T::lit(0.5);
        Ok(EjaElement::RealSym((&m + m.transpose()) * half))
    }

    pub fn complex_herm(m: CMatrix<T>) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::InvalidKind(format!("ComplexHerm needs a square matrix, got {:?}", m.shape())));
        }
        let defect = linalg::hermiticity_defect(&m);
        let scale = m.iter().fold(T::zero(), |a, z| a.max(z.modulus()));
        if defect > hermitian_tol(scale) {
            return Err(Error::NotHermitian(defect.as_f64()));
        }
        Ok(EjaElement::ComplexHerm(linalg::hermitian_part(&m)))
    }

    pub fn quat_herm(m: QuatMatrix<T>) -> Result<Self> {
        if m.order() == 0 {
            return Err(Error::InvalidKind("QuatHerm needs order at least 1".into()));
        }
        let defect = m.hermiticity_defect();
        if defect > hermitian_tol(m.frobenius_sqr().sqrt()) {
            return Err(Error::NotHermitian(defect.as_f64()));
        }
        Ok(EjaElement::QuatHerm(m.hermitian_part()))
    }

    pub fn spin(t: T, x: DVector<T>) -> Result<Self> {
        EjaKind::Spin(x.len() + 1).validate()?;
        Ok(EjaElement::Spin { t, x })
    }

    pub fn kind(&self) -> EjaKind {
        match self {
            EjaElement::RealSym(m) => EjaKind::RealSym(m.nrows()),
            EjaElement::ComplexHerm(m) => EjaKind::ComplexHerm(m.nrows()),
            EjaElement::QuatHerm(m) => EjaKind::QuatHerm(m.order()),
            EjaElement::Spin { x, .. } => EjaKind::Spin(x.len() + 1),
        }
    }

    pub fn zero(kind: EjaKind) -> Result<Self> {
        Ok(match kind.validate()? {
            EjaKind::RealSym(n) => EjaElement::RealSym(DMatrix::zeros(n, n)),
            EjaKind::ComplexHerm(n) => EjaElement::ComplexHerm(CMatrix::zeros(n, n)),
            EjaKind::QuatHerm(n) => EjaElement::QuatHerm(QuatMatrix::zeros(n)),
            EjaKind::Spin(s) => EjaElement::Spin { t: T::zero(), x: DVector::zeros(s - 1) },
            k @ EjaKind::OctHerm3 => return Err(Error::NoArithmetic(k)),
        })
    }

    /// The unit of the Jordan product.
    pub fn identity(kind: EjaKind) -> Result<Self> {
        Ok(match kind.validate()? {
            EjaKind::RealSym(n) => EjaElement::RealSym(DMatrix::identity(n, n)),
            EjaKind::ComplexHerm(n) => EjaElement::ComplexHerm(CMatrix::identity(n, n)),
            EjaKind::QuatHerm(n) => EjaElement::QuatHerm(QuatMatrix::identity(n)),
            EjaKind::Spin(s) => EjaElement::Spin { t: T::one(), x: DVector::zeros(s - 1) },
            k @ EjaKind::OctHerm3 => return Err(Error::NoArithmetic(k)),
        })
    }

    fn same_kind(&self, other: &Self) -> Result<()> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(Error::KindMismatch { left: self.kind(), right: other.kind() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        Ok(self.zip(other, T::one()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        Ok(self.zip(other, -T::one()))
    }

    // self + sign * other, kinds already checked
    fn zip(&self, other: &Self, sign: T) -> Self {
        match (self, other) {
            (EjaElement::RealSym(a), EjaElement::RealSym(b)) => EjaElement::RealSym(a + b * sign),
            (EjaElement::ComplexHerm(a), EjaElement::ComplexHerm(b)) => {
                EjaElement::ComplexHerm(a + linalg::scale(b, sign))
            }
            (EjaElement::QuatHerm(a), EjaElement::QuatHerm(b)) => EjaElement::QuatHerm(a.add(&b.scale(sign))),
            (EjaElement::Spin { t, x }, EjaElement::Spin { t: u, x: y }) => {
                EjaElement::Spin { t: *t + *u * sign, x: x + y * sign }
            }
            _ => unreachable!("kinds checked by caller"),
        }
    }

    pub fn scale(&self, s: T) -> Self {
        match self {
            EjaElement::RealSym(a) => EjaElement::RealSym(a * s),
            EjaElement::ComplexHerm(a) => EjaElement::ComplexHerm(linalg::scale(a, s)),
            EjaElement::QuatHerm(a) => EjaElement::QuatHerm(a.scale(s)),
            EjaElement::Spin { t, x } => EjaElement::Spin { t: *t * s, x: x * s },
        }
    }

    /// Trace: the sum of the eigenvalues.
    pub fn trace(&self) -> T {
        match self {
            EjaElement::RealSym(a) => a.trace(),
            EjaElement::ComplexHerm(a) => linalg::real_trace(a),
            EjaElement::QuatHerm(a) => a.real_trace(),
            EjaElement::Spin { t, .. } => *t + *t,
        }
    }

    /// Jordan product `a ∘ b`.
    pub fn jordan_product(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        let half = T::lit(0.5);
        Ok(match (self, other) {
            (EjaElement::RealSym(a), EjaElement::RealSym(b)) => {
                let p = a * b;
                EjaElement::RealSym((&p + p.transpose()) * half)
            }
            (EjaElement::ComplexHerm(a), EjaElement::ComplexHerm(b)) => {
                EjaElement::ComplexHerm(linalg::hermitian_part(&(a * b)))
            }
            (EjaElement::QuatHerm(a), EjaElement::QuatHerm(b)) => {
                EjaElement::QuatHerm(a.matmul(b).hermitian_part())
            }
            (EjaElement::Spin { t, x }, EjaElement::Spin { t: u, x: y }) => EjaElement::Spin {
                t: *t * *u + x.dot(y),
                x: y * *t + x * *u,
            },
            _ => unreachable!("kinds checked above"),
        })
    }

    /// `⟨a, b⟩ = tr(a ∘ b)`.
    pub fn inner_product(&self, other: &Self) -> Result<T> {
        self.same_kind(other)?;
        Ok(match (self, other) {
            (EjaElement::RealSym(a), EjaElement::RealSym(b)) => a.dot(b),
            (EjaElement::ComplexHerm(a), EjaElement::ComplexHerm(b)) => linalg::trace_product(a, b),
            (EjaElement::QuatHerm(a), EjaElement::QuatHerm(b)) => a.matmul(b).real_trace(),
            (EjaElement::Spin { t, x }, EjaElement::Spin { t: u, x: y }) => {
                let two = T::lit(2.0);
                two * (*t * *u + x.dot(y))
            }
            _ => unreachable!("kinds checked above"),
        })
    }

    /// Norm induced by the trace inner product.
    pub fn norm(&self) -> T {
        self.inner_product(self).map(|v| v.max(T::zero()).sqrt()).unwrap_or_else(|_| T::zero())
    }

    /// `‖a − b‖` in the trace norm.
    pub fn distance(&self, other: &Self) -> Result<T> {
        Ok(self.sub(other)?.norm())
    }

    /// Real coordinates: diagonal first, then the components of each
    /// strictly upper entry in row-major order. Spin factors list `t` then `x`.
    pub fn to_coords(&self) -> Vec<T> {
        match self {
            EjaElement::RealSym(a) => {
                let n = a.nrows();
                let mut v: Vec<T> = (0..n).map(|i| a[(i, i)]).collect();
                for r in 0..n {
                    for c in r + 1..n {
                        v.push(a[(r, c)]);
                    }
                }
                v
            }
            EjaElement::ComplexHerm(a) => {
                let n = a.nrows();
                let mut v: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
                for r in 0..n {
                    for c in r + 1..n {
                        v.push(a[(r, c)].re);
                        v.push(a[(r, c)].im);
                    }
                }
                v
            }
            EjaElement::QuatHerm(a) => {
                let n = a.order();
                let mut v: Vec<T> = (0..n).map(|i| a.get(i, i).w).collect();
                for r in 0..n {
                    for c in r + 1..n {
                        let q = a.get(r, c);
                        v.extend([q.w, q.x, q.y, q.z]);
                    }
                }
                v
            }
            EjaElement::Spin { t, x } => std::iter::once(*t).chain(x.iter().copied()).collect(),
        }
    }

    /// Inverse of [`EjaElement::to_coords`].
    pub fn from_coords(kind: EjaKind, coords: &[T]) -> Result<Self> {
        let kind = kind.validate()?;
        if !kind.has_arithmetic() {
            return Err(Error::NoArithmetic(kind));
        }
        if coords.len() != kind.dim() {
            return Err(Error::DimensionMismatch { expected: kind.dim(), got: coords.len() });
        }
        let mut it = coords.iter().copied();
        let mut next = || it.next().expect("length checked");
        Ok(match kind {
            EjaKind::RealSym(n) => {
                let mut m = DMatrix::zeros(n, n);
                for i in 0..n {
                    m[(i, i)] = next();
                }
                for r in 0..n {
                    for c in r + 1..n {
                        let v = next();
                        m[(r, c)] = v;
                        m[(c, r)] = v;
                    }
                }
                EjaElement::RealSym(m)
            }
            EjaKind::ComplexHerm(n) => {
                let mut m = CMatrix::zeros(n, n);
                for i in 0..n {
                    m[(i, i)] = cr(next());
                }
                for r in 0..n {
                    for c in r + 1..n {
                        let z = cx(next(), next());
                        m[(r, c)] = z;
                        m[(c, r)] = z.conj();
                    }
                }
                EjaElement::ComplexHerm(m)
            }
            EjaKind::QuatHerm(n) => {
                let mut m = QuatMatrix::zeros(n);
                for i in 0..n {
                    m.set(i, i, Quaternion::real(next()));
                }
                for r in 0..n {
                    for c in r + 1..n {
                        let q = Quaternion::new(next(), next(), next(), next());
                        m.set(r, c, q);
                        m.set(c, r, q.conj());
                    }
                }
                EjaElement::QuatHerm(m)
            }
            EjaKind::Spin(s) => {
                let t = next();
                let x = DVector::from_iterator(s - 1, std::iter::from_fn(|| Some(next())).take(s - 1));
                EjaElement::Spin { t, x }
            }
            EjaKind::OctHerm3 => unreachable!("rejected above"),
        })
    }
}
