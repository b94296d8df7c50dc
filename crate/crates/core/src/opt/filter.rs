//! Filters `F^c_φ` and projection processes.

use crate::error::{Error, Result};
use crate::linalg;
use crate::process::{choi_from_kraus, compose_sequential, KrausFamily, ProcessChoi};
use crate::scalar::{cr, CMatrix, CVector, Real};

use super::block::{BlockHermitian, PureState};
use super::pds::{complementary_pds, Pds};

/// The conjugation `ρ ↦ EρE†` with `E = √c |φ⟩⟨φ| + Υ′`, where `Υ′` projects
/// onto everything orthogonal to `φ` (identity outside the target block).
#[derive(Debug, Clone, PartialEq)]
pub struct Filter<T: Real = f64> {
    target: PureState<T>,
    c: T,
    kraus: Vec<CMatrix<T>>,
}

fn scaling_operator<T: Real>(phi: &PureState<T>, a: T, b: T) -> Vec<CMatrix<T>> {
    phi.system()
        .blocks()
        .iter()
        .enumerate()
        .map(|(l, &n)| {
            if l == phi.block() {
                let p = linalg::outer(phi.vector());
                linalg::scale(&p, a) + linalg::scale(&(linalg::identity::<T>(n) - p), b)
            } else {
                linalg::scale(&linalg::identity::<T>(n), b)
            }
        })
        .collect()
}

/// A feasible filter; `c` must lie in `[0, 1]`.
pub fn make_filter<T: Real>(phi: &PureState<T>, c: T) -> Result<Filter<T>> {
    if !(c >= T::zero() && c <= T::one()) {
        return Err(Error::OutOfRange { what: "filter strength c", value: c.as_f64() });
    }
    make_scaling(phi, c)
}

/// Like [`make_filter`] but allowing any `c ≥ 0`. For `c > 1` the map is CP
/// but trace increasing, so it is not a physical process on its own.
pub fn make_scaling<T: Real>(phi: &PureState<T>, c: T) -> Result<Filter<T>> {
    if !c.is_finite() || c < T::zero() {
        return Err(Error::OutOfRange { what: "scaling factor c", value: c.as_f64() });
    }
    let kraus = scaling_operator(phi, c.sqrt(), T::one());
    Ok(Filter { target: phi.clone(), c, kraus })
}

impl<T: Real> Filter<T> {
    pub fn target(&self) -> &PureState<T> {
        &self.target
    }

    pub fn c(&self) -> T {
        self.c
    }

    /// `E`, one matrix per block.
    pub fn kraus(&self) -> &[CMatrix<T>] {
        &self.kraus
    }

    pub fn apply(&self, rho: &BlockHermitian<T>) -> Result<BlockHermitian<T>> {
        rho.conjugate(&self.kraus)
    }

    pub fn process(&self) -> ProcessChoi<T> {
        let fam = KrausFamily::block_diagonal(self.target.system(), self.kraus.clone()).expect("shapes match");
        choi_from_kraus(&fam)
    }

    /// `max(‖F(φ) − cφ‖, max_ρ ‖F(ρ) − ρ‖)` over a spanning set of `ker_φ`.
    pub fn axiom_deviation(&self) -> T {
        let phi = self.target.projector();
        let mut worst = self.apply(&phi).expect("same system").distance(&phi.scale(self.c)).expect("same system");
        let single = Pds::new(self.target.system(), vec![self.target.clone()], T::lit(1e-6)).expect("one state");
        for rho in kernel_spanning_set(&single) {
            let d = self.apply(&rho).expect("same system").distance(&rho).expect("same system");
            worst = worst.max(d);
        }
        worst
    }
}

/// `c⁻¹F̃` with `Ẽ = |φ⟩⟨φ| + √c Υ′`, the inverse of a filter with `c > 0`.
pub fn filter_inverse<T: Real>(f: &Filter<T>) -> Result<ProcessChoi<T>> {
    if f.c <= T::zero() {
        return Err(Error::IrreversibleFilter);
    }
    let kraus = scaling_operator(&f.target, T::one() / f.c.sqrt(), T::one());
    let fam = KrausFamily::block_diagonal(f.target.system(), kraus)?;
    Ok(choi_from_kraus(&fam))
}

/// Projectors spanning the states perfectly distinguishable from every
/// member of `phi`.
pub fn kernel_spanning_set<T: Real>(phi: &Pds<T>) -> Vec<BlockHermitian<T>> {
    let psi = complementary_pds(phi);
    let members = psi.members();
    let mut out = Vec::new();
    for (a, x) in members.iter().enumerate() {
        out.push(x.projector());
        for y in members[a + 1..].iter().filter(|y| y.block() == x.block()) {
            for phase in [cr(T::one()), crate::scalar::cx(T::zero(), T::one())] {
                let v: CVector<T> = x.vector() + y.vector() * phase;
                let s = PureState::normalized(x.system(), x.block(), v).expect("orthogonal sum is nonzero");
                out.push(s.projector());
            }
        }
    }
    out
}

/// `ρ ↦ χ_Φ ρ χ_Φ`.
pub fn projection_process<T: Real>(phi: &Pds<T>) -> ProcessChoi<T> {
    let fam = KrausFamily::block_diagonal(phi.system(), phi.chi().blocks().to_vec()).expect("shapes match");
    choi_from_kraus(&fam)
}

/// The projection onto `F_Φ` as a composition of `c = 0` filters over a
/// complement of `Φ`.
pub fn projection_by_filters<T: Real>(phi: &Pds<T>) -> ProcessChoi<T> {
    let system = phi.system();
    let mut acc = ProcessChoi::identity(system);
    for psi in complementary_pds(phi).members() {
        let f = make_filter(psi, T::zero()).expect("c = 0 is in range");
        acc = compose_sequential(&f.process(), &acc).expect("same system");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opt::SystemSpec;
    use crate::process::{classify_process, ProcessClass};

    fn sys(s: &str) -> SystemSpec {
        s.parse().unwrap()
    }

    #[test]
    fn filter_on_second_basis_vector() {
        let s = sys("2");
        let one = PureState::<f64>::basis(&s, 0, 1).unwrap();
        let f = make_filter(&one, 0.25).unwrap();
        let e = &f.kraus()[0];
        assert!((e[(0, 0)].re - 1.0).abs() < 1e-15 && (e[(1, 1)].re - 0.5).abs() < 1e-15);
        let out = f.apply(&one.projector()).unwrap();
        assert!(out.distance(&one.projector().scale(0.25)).unwrap() < 1e-15);
        let rho = BlockHermitian::from_diagonal(&s, &[0.4, 0.6]).unwrap();
        let via_choi = f.process().apply(&rho).unwrap();
        assert!(via_choi.distance(&BlockHermitian::from_diagonal(&s, &[0.4, 0.15]).unwrap()).unwrap() < 1e-15);
        assert_eq!(classify_process(&f.process(), 1e-9), ProcessClass::CpTraceNonIncreasing);
    }

    #[test]
    fn classical_filter() {
        let s = sys("1,1");
        let phi = PureState::<f64>::basis(&s, 1, 0).unwrap();
        let f = make_filter(&phi, 0.3).unwrap();
        let rho = BlockHermitian::from_diagonal(&s, &[0.5, 0.5]).unwrap();
        let out = f.apply(&rho).unwrap();
        assert!(out.distance(&BlockHermitian::from_diagonal(&s, &[0.5, 0.15]).unwrap()).unwrap() < 1e-15);
    }

    #[test]
    fn range_and_inverse_errors() {
        let s = sys("2");
        let phi = PureState::<f64>::basis(&s, 0, 0).unwrap();
        assert!(make_filter(&phi, 1.5).is_err());
        assert!(make_filter(&phi, -0.1).is_err());
        assert!(make_filter(&phi, f64::NAN).is_err());
        assert_eq!(filter_inverse(&make_filter(&phi, 0.0).unwrap()), Err(Error::IrreversibleFilter));
    }

    #[test]
    fn unit_filter_is_identity_and_inverse_undoes() {
        let s = sys("1,2");
        let v = CVector::from_vec(vec![cr(0.6), crate::scalar::cx(0.0, 0.8)]);
        let phi = PureState::new(&s, 1, v).unwrap();
        let id = ProcessChoi::identity(&s);
        assert!(make_filter(&phi, 1.0).unwrap().process().choi_distance(&id).unwrap() < 1e-14);
        for c in [0.1, 0.5, 0.9] {
            let f = make_filter(&phi, c).unwrap();
            assert!(f.axiom_deviation() < 1e-14);
            let back = compose_sequential(&filter_inverse(&f).unwrap(), &f.process()).unwrap();
            assert!(back.choi_distance(&id).unwrap() < 1e-12);
        }
    }

    #[test]
    fn projection_two_ways() {
        let s = sys("2");
        let zero = PureState::<f64>::basis(&s, 0, 0).unwrap();
        let phi = Pds::new(&s, vec![zero], 1e-9).unwrap();
        let p = projection_process(&phi);
        let rho = BlockHermitian::new(
            s.clone(),
            vec![CMatrix::from_row_slice(2, 2, &[cr(0.7), cr(0.2), cr(0.2), cr(0.3)])],
        )
        .unwrap();
        let out = p.apply(&rho).unwrap();
        assert!(out.distance(&BlockHermitian::from_diagonal(&s, &[0.7, 0.0]).unwrap()).unwrap() < 1e-15);
        assert!(p.choi_distance(&projection_by_filters(&phi)).unwrap() < 1e-12);
        let full = Pds::<f64>::standard(&s);
        assert!(projection_process(&full).choi_distance(&ProcessChoi::identity(&s)).unwrap() < 1e-15);
        assert!(projection_process(&Pds::<f64>::empty(&s)).choi().norm() < 1e-15);
    }
}
