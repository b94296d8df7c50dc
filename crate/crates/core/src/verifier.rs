//! Executable checks of the postulates on block-Hermitian systems, and the
//! classical / fully quantum / hybrid classification.

use nalgebra::ComplexField;
use std::fmt;

use nalgebra::Complex;
use serde::{Deserialize, Serialize};

use crate::composite::{local_tomography_span, spanning_states, tensor_element, tensor_system};
use crate::linalg;
use crate::opt::{
    complementary_pds, dagger, filter_inverse, make_filter, probability, projection_process, BlockHermitian,
    Direction, Pds, PureState, SystemSpec,
};
use crate::process::{choi_from_kraus, compose_sequential, processes_equal, ProcessChoi};
use crate::sampling::{random_cp_map, random_deficient_state, random_pure, random_pure_in_block, random_state, trial_rng};
use crate::scalar::{CVector, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Postulate {
    SymmetricSharpness,
    CompleteMixing,
    Filtering,
    LocalEquality,
    PerfectDistinguishability,
    Indistinguishability,
}

impl Postulate {
    /// The four postulates every block-Hermitian system satisfies.
    pub const CORE: [Postulate; 4] =
        [Postulate::SymmetricSharpness, Postulate::CompleteMixing, Postulate::Filtering, Postulate::LocalEquality];
}

impl fmt::Display for Postulate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of one verifier run. `passed` holds iff no witness was recorded
/// and `max_deviation` is within the loosest threshold of the run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub postulate: Postulate,
    pub system: SystemSpec,
    pub trials: usize,
    pub max_deviation: f64,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

/// Thresholds: `strict` for exact identities, `standard` for composed maps,
/// `loose` for the uniqueness of maximal effects.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T: Real = f64> {
    pub strict: T,
    pub standard: T,
    pub loose: T,
}

impl<T: Real> Tolerances<T> {
    pub fn from_base(tol: T) -> Self {
        Self { strict: tol * T::lit(0.1), standard: tol, loose: tol * T::lit(1e3) }
    }
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self::from_base(T::default_tol())
    }
}

struct Tally<T: Real> {
    postulate: Postulate,
    system: SystemSpec,
    trials: usize,
    max_deviation: T,
    witnesses: Vec<String>,
    limit: T,
}

impl<T: Real> Tally<T> {
    fn new(postulate: Postulate, system: &SystemSpec, trials: usize, limit: T) -> Self {
        Self { postulate, system: system.clone(), trials, max_deviation: T::zero(), witnesses: Vec::new(), limit }
    }

    /// Records a deviation and a witness when it exceeds `threshold`.
    fn check(&mut self, deviation: T, threshold: T, what: impl FnOnce() -> String) {
        if deviation.is_nan() || deviation > threshold {
            self.witnesses.push(format!("{}: deviation {:.3e} > {:.1e}", what(), deviation.as_f64(), threshold.as_f64()));
        }
        if !deviation.is_nan() {
            self.max_deviation = self.max_deviation.max(deviation);
        }
    }

    fn fail(&mut self, what: String) {
        self.witnesses.push(what);
    }

    fn finish(self) -> VerificationReport {
        let passed = self.witnesses.is_empty() && self.max_deviation <= self.limit;
        VerificationReport {
            postulate: self.postulate,
            system: self.system,
            trials: self.trials,
            max_deviation: self.max_deviation.as_f64(),
            passed,
            witnesses: self.witnesses,
        }
    }
}

/// A feasible rank-one projector supported in a single block.
pub fn is_maximal_effect<T: Real>(e: &BlockHermitian<T>, tol: T) -> bool {
    let support: Vec<usize> = (0..e.system().num_blocks())
        .filter(|&l| e.block(l).iter().any(|z| z.modulus() > tol))
        .collect();
    let [l] = support[..] else {
        return false;
    };
    let (values, _) = linalg::herm_eigen(e.block(l));
    (values[0] - T::one()).abs() <= tol && values[1..].iter().all(|v| v.abs() <= tol)
}

fn perturbed<T: Real>(phi: &PureState<T>, size: T, rng: &mut crate::sampling::SampleRng) -> PureState<T> {
    let g = random_pure_in_block::<T, _>(phi.system(), phi.block(), rng);
    let v: CVector<T> = phi.vector() + g.vector() * Complex::new(size, T::zero());
    PureState::normalized(phi.system(), phi.block(), v).expect("small perturbation stays nonzero")
}

/// Unit probability of `φ†` on `φ`, symmetry of the pairing on pure pairs,
/// and uniqueness of the maximal effect that is certain on `φ`.
pub fn verify_symmetric_sharpness<T: Real>(
    system: &SystemSpec,
    trials: usize,
    seed: u64,
    tol: &Tolerances<T>,
) -> VerificationReport {
    let mut tally = Tally::new(Postulate::SymmetricSharpness, system, trials, tol.loose);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let phi: PureState<T> = random_pure(system, &mut rng);
        let psi: PureState<T> = random_pure(system, &mut rng);
        let (rp, rq) = (phi.projector(), psi.projector());
        let ep = dagger(&rp, Direction::StateToEffect);
        let eq = dagger(&rq, Direction::StateToEffect);
        let unit = (probability(&ep, &rp).expect("same system") - T::one()).abs();
        tally.check(unit, tol.strict, || format!("trial {t}: <phi^dag|phi> != 1"));
        let sym = (probability(&eq, &rp).expect("same system") - probability(&ep, &rq).expect("same system")).abs();
        tally.check(sym, tol.strict, || format!("trial {t}: pairing not symmetric"));

        let near = perturbed(&phi, T::lit(1e-7), &mut rng).projector();
        let other = random_pure::<T, _>(system, &mut rng).projector();
        let mixture = ep.add(&other).expect("same system").scale(T::lit(0.5));
        for (label, e) in [("dagger", ep.clone()), ("perturbed", near), ("random", other), ("mixture", mixture)] {
            if !is_maximal_effect(&e, tol.standard) {
                continue;
            }
            if probability(&e, &rp).expect("same system") >= T::one() - tol.strict {
                let d = e.distance(&ep).expect("same system");
                tally.check(d, tol.loose, || format!("trial {t}: second maximal effect ({label}) certain on phi"));
            }
        }
    }
    tally.finish()
}

/// Equivalence of "no maximal effect has zero probability" and full rank,
/// on full-rank and rank-deficient samples plus fixed corner cases.
pub fn verify_complete_mixing<T: Real>(
    system: &SystemSpec,
    trials: usize,
    seed: u64,
    tol: &Tolerances<T>,
) -> VerificationReport {
    let mut tally = Tally::new(Postulate::CompleteMixing, system, trials, tol.loose);
    let mut states: Vec<BlockHermitian<T>> = vec![
        BlockHermitian::chi(system),
        PureState::basis(system, 0, 0).expect("block 0 exists").projector(),
    ];
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        states.push(if t % 2 == 0 { random_state(system, &mut rng) } else { random_deficient_state(system, &mut rng) });
    }
    for (idx, rho) in states.iter().enumerate() {
        let mut min_prob = T::max_value().expect("bounded field");
        let mut exact = T::max_value().expect("bounded field");
        for (l, block) in rho.blocks().iter().enumerate() {
            let (values, vectors) = linalg::herm_eigen(block);
            let last = values.len() - 1;
            let v: CVector<T> = vectors.column(last).into_owned();
            let e = PureState::normalized(system, l, v).expect("eigenvector").projector();
            min_prob = min_prob.min(probability(&e, rho).expect("same system"));
            exact = exact.min(values[last]);
        }
        tally.check((min_prob - exact).abs(), tol.strict, || format!("state {idx}: minimizing effect is not exact"));
        let by_effects = min_prob > tol.standard;
        let by_rank = rho
            .blocks()
            .iter()
            .all(|b| b.clone().svd(false, false).rank(tol.standard) == b.nrows());
        if by_effects != by_rank {
            tally.fail(format!(
                "state {idx}: min maximal-effect probability {:.3e} disagrees with full rank = {by_rank}",
                min_prob.as_f64()
            ));
        }
    }
    tally.finish()
}

/// c values cycled through by [`verify_filtering`].
pub const FILTER_GRID: [f64; 5] = [0.0, 0.1, 0.5, 0.9, 1.0];

/// Filter axioms for sampled `(φ, c)`, reversibility for `c ≥ 0.1`, and
/// agreement of `c = 0` with the projection onto the complement of `φ`.
pub fn verify_filtering<T: Real>(system: &SystemSpec, trials: usize, seed: u64, tol: &Tolerances<T>) -> VerificationReport {
    let mut tally = Tally::new(Postulate::Filtering, system, trials, tol.standard);
    let id = ProcessChoi::<T>::identity(system);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let phi: PureState<T> = random_pure(system, &mut rng);
        let c = T::lit(FILTER_GRID[t % FILTER_GRID.len()]);
        let f = match make_filter(&phi, c) {
            Ok(f) => f,
            Err(e) => {
                tally.fail(format!("trial {t}: make_filter failed: {e}"));
                continue;
            }
        };
        tally.check(f.axiom_deviation(), tol.strict, || format!("trial {t}: filter axioms (c = {})", c.as_f64()));
        let process = f.process();
        if c >= T::lit(0.1) {
            let inv = filter_inverse(&f).expect("c > 0");
            let back = compose_sequential(&inv, &process).expect("same system");
            let d = back.choi_distance(&id).expect("same system");
            tally.check(d, tol.standard, || format!("trial {t}: inverse filter (c = {})", c.as_f64()));
        }
        if c == T::zero() {
            let single = Pds::new(system, vec![phi.clone()], tol.standard).expect("one state");
            let proj = projection_process(&complementary_pds(&single));
            let d = process.choi_distance(&proj).expect("same system");
            tally.check(d, tol.standard, || format!("trial {t}: c = 0 filter vs projection"));
        }
    }
    tally.finish()
}

fn product_states<T: Real>(a: &SystemSpec, b: &SystemSpec) -> Vec<BlockHermitian<T>> {
    let sb = spanning_states::<T>(b);
    spanning_states::<T>(a)
        .iter()
        .flat_map(|x| sb.iter().map(move |y| tensor_element(&x.projector(), &y.projector())))
        .collect()
}

fn product_distance<T: Real>(f: &ProcessChoi<T>, g: &ProcessChoi<T>, products: &[BlockHermitian<T>]) -> T {
    let diff = f.sub(g).expect("same type");
    products
        .iter()
        .map(|rho| diff.apply(rho).expect("composite input").norm())
        .fold(T::zero(), |a, b| a.max(b))
}

/// Output of the random processes compared by [`verify_local_equality`].
fn test_output() -> SystemSpec {
    SystemSpec::new(vec![1, 1]).expect("valid")
}

/// `D_{A⊗B} = D_A·D_B`, the product-state span, and agreement of Choi
/// equality with equality on product inputs for random process pairs on
/// `A⊗B`. The report's system is `A⊗B`.
pub fn verify_local_equality<T: Real>(
    a: &SystemSpec,
    b: &SystemSpec,
    trials: usize,
    seed: u64,
    tol: &Tolerances<T>,
) -> VerificationReport {
    let (ab, _) = tensor_system(a, b);
    let mut tally = Tally::new(Postulate::LocalEquality, &ab, trials, tol.standard);
    if ab.dim() != a.dim() * b.dim() {
        tally.fail(format!("D({ab}) = {} != {}·{}", ab.dim(), a.dim(), b.dim()));
    }
    if !local_tomography_span::<T>(a, b) {
        tally.fail(format!("product states of ({a}) and ({b}) do not span ({ab})"));
    }
    let out = test_output();
    let products = product_states::<T>(a, b);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let f = choi_from_kraus(&random_cp_map::<T, _>(&ab, &out, 2, &mut rng));
        let g = match t % 3 {
            0 => f.clone(),
            k => {
                let h = choi_from_kraus(&random_cp_map::<T, _>(&ab, &out, 1, &mut rng));
                f.add(&h.scale(T::lit(1e-3 * k as f64))).expect("same type")
            }
        };
        let choi_equal = processes_equal(&f, &g, tol.standard).expect("same type");
        let local = product_distance(&f, &g, &products);
        let locally_equal = local <= tol.standard;
        if choi_equal {
            tally.check(local, tol.standard, || format!("trial {t}: equal processes differ locally"));
        }
        if choi_equal != locally_equal {
            tally.fail(format!(
                "trial {t}: Choi equality {choi_equal} but local equality {locally_equal} (local distance {:.3e})",
                local.as_f64()
            ));
        }
    }
    tally.finish()
}

fn distinct<T: Real>(x: &PureState<T>, y: &PureState<T>, tol: T) -> bool {
    x.projector().distance(&y.projector()).expect("same system") > tol
}

/// Sampled pure pairs plus deterministic corner pairs: basis states across
/// every pair of blocks, and a random pair inside every block of size ≥ 2.
fn pure_pairs<T: Real>(system: &SystemSpec, trials: usize, seed: u64) -> Vec<(PureState<T>, PureState<T>)> {
    let mut pairs = Vec::new();
    let k = system.num_blocks();
    for l in 0..k {
        for m in l + 1..k {
            pairs.push((PureState::basis(system, l, 0).expect("in range"), PureState::basis(system, m, 0).expect("in range")));
        }
        if system.block(l) >= 2 {
            let mut rng = trial_rng(seed ^ 0x5eed, l as u64);
            pairs.push((random_pure_in_block(system, l, &mut rng), random_pure_in_block(system, l, &mut rng)));
        }
    }
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        pairs.push((random_pure(system, &mut rng), random_pure(system, &mut rng)));
    }
    pairs
}

/// Every distinct pure pair is perfectly distinguishable.
pub fn verify_perfect_distinguishability<T: Real>(
    system: &SystemSpec,
    trials: usize,
    seed: u64,
    tol: &Tolerances<T>,
) -> VerificationReport {
    let mut tally = Tally::new(Postulate::PerfectDistinguishability, system, trials, tol.standard);
    for (idx, (x, y)) in pure_pairs::<T>(system, trials, seed).iter().enumerate() {
        if !distinct(x, y, tol.standard) {
            continue;
        }
        let o = x.overlap(y);
        if o > tol.standard {
            tally.fail(format!("pair {idx}: distinct pure states in block {} overlap {:.3e}", x.block() + 1, o.as_f64()));
        }
    }
    tally.finish()
}

/// For every pure pair some pure state is non-orthogonal to both.
pub fn verify_indistinguishability<T: Real>(
    system: &SystemSpec,
    trials: usize,
    seed: u64,
    tol: &Tolerances<T>,
) -> VerificationReport {
    let mut tally = Tally::new(Postulate::Indistinguishability, system, trials, tol.standard);
    for (idx, (x, y)) in pure_pairs::<T>(system, trials, seed).iter().enumerate() {
        if x.block() != y.block() {
            tally.fail(format!("pair {idx}: pure states in blocks {} and {} share no block", x.block() + 1, y.block() + 1));
            continue;
        }
        let amp = y.amplitude(x);
        let phase = if amp.modulus() > tol.standard { amp / Complex::new(amp.modulus(), T::zero()) } else { Complex::new(T::one(), T::zero()) };
        let v: CVector<T> = x.vector() + y.vector() * phase;
        let Ok(phi) = PureState::normalized(system, x.block(), v) else {
            tally.fail(format!("pair {idx}: no bridging state"));
            continue;
        };
        let worst = phi.overlap(x).min(phi.overlap(y));
        if worst <= tol.standard {
            tally.fail(format!("pair {idx}: bridging state orthogonal to one of the pair"));
        }
    }
    tally.finish()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoryClass {
    Classical,
    FullyQuantum,
    Hybrid,
    TrivialBoth,
}

impl fmt::Display for TheoryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Structural classification from the block sizes.
pub fn classify_theory(system: &SystemSpec) -> TheoryClass {
    if system.rank() == 1 {
        TheoryClass::TrivialBoth
    } else if system.is_classical() {
        TheoryClass::Classical
    } else if system.is_fully_quantum() {
        TheoryClass::FullyQuantum
    } else {
        TheoryClass::Hybrid
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoryReport {
    pub system: SystemSpec,
    pub class: TheoryClass,
    pub perfect_distinguishability: VerificationReport,
    pub indistinguishability: VerificationReport,
    /// Whether the operational tests imply the same class.
    pub consistent: bool,
}

/// [`classify_theory`] together with the operational witness tests.
pub fn theory_report<T: Real>(system: &SystemSpec, trials: usize, seed: u64, tol: &Tolerances<T>) -> TheoryReport {
    let pd = verify_perfect_distinguishability(system, trials, seed, tol);
    let ind = verify_indistinguishability(system, trials, seed, tol);
    let class = classify_theory(system);
    let operational = match (pd.passed, ind.passed) {
        (true, true) => TheoryClass::TrivialBoth,
        (true, false) => TheoryClass::Classical,
        (false, true) => TheoryClass::FullyQuantum,
        (false, false) => TheoryClass::Hybrid,
    };
    TheoryReport {
        system: system.clone(),
        class,
        perfect_distinguishability: pd,
        indistinguishability: ind,
        consistent: operational == class,
    }
}

/// Runs one postulate; `LocalEquality` uses `A = B = system`.
pub fn verify<T: Real>(
    postulate: Postulate,
    system: &SystemSpec,
    trials: usize,
    seed: u64,
    tol: &Tolerances<T>,
) -> VerificationReport {
    match postulate {
        Postulate::SymmetricSharpness => verify_symmetric_sharpness(system, trials, seed, tol),
        Postulate::CompleteMixing => verify_complete_mixing(system, trials, seed, tol),
        Postulate::Filtering => verify_filtering(system, trials, seed, tol),
        Postulate::LocalEquality => verify_local_equality(system, system, trials, seed, tol),
        Postulate::PerfectDistinguishability => verify_perfect_distinguishability(system, trials, seed, tol),
        Postulate::Indistinguishability => verify_indistinguishability(system, trials, seed, tol),
    }
}
