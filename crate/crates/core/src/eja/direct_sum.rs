use serde::{Deserialize, Serialize};

use super::element::EjaElement;
use super::kind::EjaKind;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// A non-simple EJA written as an ordered direct sum of simple kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSumSpace {
    pub summands: Vec<EjaKind>,
}

impl DirectSumSpace {
    pub fn new(summands: Vec<EjaKind>) -> Result<Self> {
        for k in &summands {
            k.validate()?;
            if !k.has_arithmetic() {
                return Err(Error::NoArithmetic(*k));
            }
        }
        Ok(Self { summands })
    }

    pub fn rank(&self) -> usize {
        self.summands.iter().map(|k| k.rank()).sum()
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|k| k.dim()).sum()
    }

    /// Splits concatenated coordinates into one element per summand.
    pub fn split<T: Real>(&self, coords: &[T]) -> Result<Vec<EjaElement<T>>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: coords.len() });
        }
        let mut offset = 0;
        self.summands
            .iter()
            .map(|&k| {
                let part = &coords[offset..offset + k.dim()];
                offset += k.dim();
                EjaElement::from_coords(k, part)
            })
            .collect()
    }

    /// Concatenates per-summand coordinates.
    pub fn join<T: Real>(&self, parts: &[EjaElement<T>]) -> Result<Vec<T>> {
        if parts.len() != self.summands.len() {
            return Err(Error::DimensionMismatch { expected: self.summands.len(), got: parts.len() });
        }
        let mut out = Vec::with_capacity(self.dim());
        for (k, p) in self.summands.iter().zip(parts) {
            if p.kind() != *k {
                return Err(Error::KindMismatch { left: *k, right: p.kind() });
            }
            out.extend(p.to_coords());
        }
        Ok(out)
    }

    /// Coordinates of the unit, i.e. the sum of the summand units.
    pub fn identity<T: Real>(&self) -> Vec<T> {
        self.summands
            .iter()
            .flat_map(|&k| EjaElement::<T>::identity(k).expect("validated on construction").to_coords())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cr, CMatrix};

    #[test]
    fn scalar_summands() {
        let space = DirectSumSpace::new(vec![EjaKind::ComplexHerm(1), EjaKind::ComplexHerm(1)]).unwrap();
        let parts = space.split(&[0.3, 0.7]).unwrap();
        assert_eq!(parts[0], EjaElement::ComplexHerm(CMatrix::from_element(1, 1, cr(0.3))));
        assert_eq!(parts[1], EjaElement::ComplexHerm(CMatrix::from_element(1, 1, cr(0.7))));
    }

    #[test]
    fn identity_splits_into_units() {
        let space = DirectSumSpace::new(vec![EjaKind::ComplexHerm(2), EjaKind::ComplexHerm(1)]).unwrap();
        assert_eq!((space.rank(), space.dim()), (3, 5));
        let parts = space.split(&space.identity::<f64>()).unwrap();
        assert_eq!(parts[0], EjaElement::identity(EjaKind::ComplexHerm(2)).unwrap());
        assert_eq!(parts[1], EjaElement::identity(EjaKind::ComplexHerm(1)).unwrap());
    }

    #[test]
    fn length_mismatch() {
        let space = DirectSumSpace::new(vec![EjaKind::Spin(5)]).unwrap();
        assert!(matches!(space.split(&[1.0; 4]), Err(Error::DimensionMismatch { .. })));
        assert!(DirectSumSpace::new(vec![EjaKind::OctHerm3]).is_err());
    }
}
