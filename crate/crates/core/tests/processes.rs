mod common;

use common::sys;
use jordanopt::process::swap;
use jordanopt::sampling::{random_cp_map, random_hermitian, random_state, seeded_rng, SampleRng};
use jordanopt::{
    choi_from_kraus, classify_process, complete_to_test, compose_parallel, compose_sequential, kraus_from_choi,
    locally_equal, processes_equal, tensor_element, BlockHermitian, CMatrix, KrausFamily, ProcessChoi, ProcessClass,
    SystemSpec,
};
use rand::Rng;

/// `Σ K ρᵢ K†` written out from the Kraus operators.
fn kraus_oracle(k: &KrausFamily, rho: &BlockHermitian) -> Vec<CMatrix<f64>> {
    let mut out: Vec<CMatrix<f64>> = k.output.blocks().iter().map(|&n| CMatrix::zeros(n, n)).collect();
    for (i, row) in k.ops.iter().enumerate() {
        for (j, ops) in row.iter().enumerate() {
            for op in ops {
                out[j] += op * rho.block(i) * op.adjoint();
            }
        }
    }
    out
}

/// Largest deviation of `Σⱼ Σ K†K` from the identity over input blocks.
fn tp_defect(k: &KrausFamily) -> f64 {
    k.ops
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let m = k.input.block(i);
            let sum = row.iter().flatten().fold(CMatrix::zeros(m, m), |acc, op| acc + op.adjoint() * op);
            (sum - CMatrix::identity(m, m)).norm()
        })
        .fold(0.0, f64::max)
}

/// Rescales a family so that its largest `Σ K†K` eigenvalue is `target`.
fn normalize(k: &KrausFamily, target: f64) -> KrausFamily {
    let mut worst: f64 = 0.0;
    for (i, row) in k.ops.iter().enumerate() {
        let m = k.input.block(i);
        let sum = row.iter().flatten().fold(CMatrix::zeros(m, m), |acc, op| acc + op.adjoint() * op);
        worst = worst.max(sum.symmetric_eigenvalues().max());
    }
    let s = (target / worst).sqrt();
    let mut out = k.clone();
    out.ops.iter_mut().flatten().flatten().for_each(|op| *op *= jordanopt::Complex::new(s, 0.0));
    out
}

fn cp(a: &SystemSpec, b: &SystemSpec, n: usize, rng: &mut SampleRng) -> ProcessChoi {
    choi_from_kraus(&random_cp_map(a, b, n, rng))
}

const PAIRS: [(&str, &str); 5] = [("2", "2"), ("1,2", "3"), ("1,1", "2,1"), ("3", "1,1"), ("2,2", "1,2")];

fn random_pair(rng: &mut SampleRng) -> (SystemSpec, SystemSpec) {
    let (a, b) = PAIRS[rng.random_range(0..PAIRS.len())];
    (sys(a), sys(b))
}

#[test]
fn choi_and_kraus_round_trip() {
    let mut rng = seeded_rng(40);
    for _ in 0..40 {
        let (a, b) = random_pair(&mut rng);
        let k: KrausFamily = random_cp_map(&a, &b, 2, &mut rng);
        let f = choi_from_kraus(&k);
        assert!(f.is_cp(1e-12));
        let back = choi_from_kraus(&kraus_from_choi(&f, 1e-12).unwrap());
        assert!(back.choi_distance(&f).unwrap() < 1e-9);
        let rho: BlockHermitian = random_state(&a, &mut rng);
        let via_choi = f.apply(&rho).unwrap();
        for (x, y) in via_choi.blocks().iter().zip(kraus_oracle(&k, &rho)) {
            assert!((x - y).norm() < 1e-12);
        }
        assert!(k.apply(&rho).unwrap().distance(&via_choi).unwrap() < 1e-12);
    }
}

#[test]
fn classification_matches_kraus_sums() {
    let mut rng = seeded_rng(41);
    for n in 0..60 {
        let (a, b) = random_pair(&mut rng);
        let raw: KrausFamily = random_cp_map(&a, &b, 2, &mut rng);
        let target = [1.0, 0.6, 1.7][n % 3];
        let k = normalize(&raw, target);
        let class = classify_process(&choi_from_kraus(&k), 1e-9);
        let tp = tp_defect(&k) < 1e-9;
        assert_eq!(class == ProcessClass::CpTp, tp);
        match n % 3 {
            1 => assert!(matches!(class, ProcessClass::CpTraceNonIncreasing | ProcessClass::CpTp)),
            2 => assert_eq!(class, ProcessClass::CpTraceIncreasing),
            _ => {}
        }
    }
}

#[test]
fn unitary_channels_are_deterministic() {
    let mut rng = seeded_rng(42);
    let s = sys("1,3");
    let us: Vec<CMatrix<f64>> = s.blocks().iter().map(|&n| jordanopt::sampling::random_unitary(n, &mut rng)).collect();
    let k = KrausFamily::block_diagonal(&s, us).unwrap();
    assert!(tp_defect(&k) < 1e-12);
    assert_eq!(classify_process(&choi_from_kraus(&k), 1e-9), ProcessClass::CpTp);
    let mut bad = ProcessChoi::<f64>::identity(&s).choi().clone();
    bad = bad.scale(-1.0);
    let not_cp = ProcessChoi::new(s.clone(), s.clone(), bad).unwrap();
    assert_eq!(classify_process(&not_cp, 1e-9), ProcessClass::NotCp);
}

#[test]
fn completion_to_a_test() {
    let mut rng = seeded_rng(43);
    for _ in 0..30 {
        let (a, b) = random_pair(&mut rng);
        let k = normalize(&random_cp_map(&a, &b, 1, &mut rng), 0.8);
        let f = choi_from_kraus(&k);
        let g = complete_to_test(&f, 1e-9).unwrap();
        assert!(g.is_cp(1e-10));
        assert_eq!(classify_process(&f.add(&g).unwrap(), 1e-9), ProcessClass::CpTp);
    }
    let big = choi_from_kraus(&normalize(&random_cp_map(&sys("2"), &sys("2"), 1, &mut rng), 2.0));
    assert!(complete_to_test(&big, 1e-9).is_err());
}

#[test]
fn interchange_law() {
    let mut rng = seeded_rng(44);
    let (a, b, c) = (sys("1,1"), sys("2"), sys("1,2"));
    let (d, e, g) = (sys("2"), sys("1,1"), sys("1"));
    for _ in 0..5 {
        let f1 = cp(&a, &b, 2, &mut rng);
        let f2 = cp(&b, &c, 2, &mut rng);
        let h1 = cp(&d, &e, 2, &mut rng);
        let h2 = cp(&e, &g, 2, &mut rng);
        let lhs = compose_sequential(&compose_parallel(&f2, &h2), &compose_parallel(&f1, &h1)).unwrap();
        let rhs = compose_parallel(&compose_sequential(&f2, &f1).unwrap(), &compose_sequential(&h2, &h1).unwrap());
        assert!(lhs.choi_distance(&rhs).unwrap() < 1e-10);
    }
}

#[test]
fn parallel_composition_acts_on_products() {
    let mut rng = seeded_rng(45);
    let (a, b, c, d) = (sys("1,2"), sys("2"), sys("2"), sys("1,1"));
    let f = cp(&a, &b, 2, &mut rng);
    let h = cp(&c, &d, 2, &mut rng);
    let fh = compose_parallel(&f, &h);
    for _ in 0..10 {
        let x: BlockHermitian = random_hermitian(&a, &mut rng);
        let y: BlockHermitian = random_hermitian(&c, &mut rng);
        let lhs = fh.apply(&tensor_element(&x, &y)).unwrap();
        let rhs = tensor_element(&f.apply(&x).unwrap(), &h.apply(&y).unwrap());
        assert!(lhs.distance(&rhs).unwrap() < 1e-12);
    }
}

#[test]
fn swap_coherence() {
    let mut rng = seeded_rng(46);
    let (a, b) = (sys("1,2"), sys("3,1"));
    let there = swap::<f64>(&a, &b);
    let back = swap::<f64>(&b, &a);
    let round = compose_sequential(&back, &there).unwrap();
    assert!(round.choi_distance(&ProcessChoi::identity(there.input())).unwrap() < 1e-14);
    for _ in 0..10 {
        let x: BlockHermitian = random_hermitian(&a, &mut rng);
        let y: BlockHermitian = random_hermitian(&b, &mut rng);
        let out = there.apply(&tensor_element(&x, &y)).unwrap();
        assert!(out.distance(&tensor_element(&y, &x)).unwrap() < 1e-13);
    }
    let f = cp(&a, &a, 1, &mut rng);
    let g = cp(&b, &b, 1, &mut rng);
    let lhs = compose_sequential(&swap(&a, &b), &compose_parallel(&f, &g)).unwrap();
    let rhs = compose_sequential(&compose_parallel(&g, &f), &swap(&a, &b)).unwrap();
    assert!(lhs.choi_distance(&rhs).unwrap() < 1e-12);
}

#[test]
fn choi_equality_agrees_with_local_equality() {
    let mut rng = seeded_rng(47);
    for _ in 0..20 {
        let (a, b) = random_pair(&mut rng);
        let f = cp(&a, &b, 2, &mut rng);
        let rebuilt = choi_from_kraus(&kraus_from_choi(&f, 1e-12).unwrap());
        assert!(processes_equal(&f, &rebuilt, 1e-9).unwrap());
        assert!(locally_equal(&f, &rebuilt, 1e-9).unwrap());
        let g = cp(&a, &b, 2, &mut rng);
        assert!(!processes_equal(&f, &g, 1e-9).unwrap());
        assert!(!locally_equal(&f, &g, 1e-9).unwrap());
    }
    let f = ProcessChoi::<f64>::identity(&sys("2"));
    let g = ProcessChoi::<f64>::identity(&sys("1,1"));
    assert!(processes_equal(&f, &g, 1e-9).is_err());
}

#[test]
fn single_precision_round_trip() {
    let mut rng = seeded_rng(48);
    let k: KrausFamily<f32> = random_cp_map(&sys("1,2"), &sys("2"), 2, &mut rng);
    let f = choi_from_kraus(&k);
    let back = choi_from_kraus(&kraus_from_choi(&f, 1e-6).unwrap());
    assert!(back.choi_distance(&f).unwrap() < 1e-4);
}
