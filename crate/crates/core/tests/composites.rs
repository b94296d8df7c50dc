mod common;

use common::sys;
use jordanopt::composite::{cup_from_basis, pair_left, pair_right, span_rank, spanning_states};
use jordanopt::opt::PdsStatus;
use jordanopt::sampling::{random_hermitian, random_pure, random_state, seeded_rng};
use jordanopt::{
    composite_mpds, cup, eta_epsilon_check, local_tomography_span, pds_status, probability, snake_check, tensor_element,
    tensor_pure, tensor_system, BlockHermitian, CMatrix, Complex, Pds, SystemSpec,
};

fn row_offset(s: &SystemSpec, l: usize) -> usize {
    s.blocks()[..l].iter().sum()
}

/// Dense block-diagonal embedding.
fn dense(x: &BlockHermitian) -> CMatrix<f64> {
    let n = x.system().rank();
    let mut out = CMatrix::zeros(n, n);
    for (l, b) in x.blocks().iter().enumerate() {
        let o = row_offset(x.system(), l);
        out.view_mut((o, o), b.shape()).copy_from(b);
    }
    out
}

/// Block `(i, j)` of the composite read off the dense Kronecker product.
fn dense_block(big: &CMatrix<f64>, a: &SystemSpec, b: &SystemSpec, i: usize, j: usize) -> CMatrix<f64> {
    let nb = b.rank();
    let idx: Vec<usize> = (0..a.block(i))
        .flat_map(|p| (0..b.block(j)).map(move |q| (row_offset(a, i) + p) * nb + row_offset(b, j) + q))
        .collect();
    CMatrix::from_fn(idx.len(), idx.len(), |r, c| big[(idx[r], idx[c])])
}

#[test]
fn tensor_matches_dense_kronecker() {
    let mut rng = seeded_rng(30);
    for (a, b) in [("1,2", "2"), ("2", "1,1"), ("1,2", "1,3"), ("2,2", "1,1,2")] {
        let (a, b) = (sys(a), sys(b));
        let (composite, map) = tensor_system(&a, &b);
        assert_eq!(composite.rank(), a.rank() * b.rank());
        assert_eq!(composite.num_blocks(), a.num_blocks() * b.num_blocks());
        for _ in 0..5 {
            let x: BlockHermitian = random_hermitian(&a, &mut rng);
            let y: BlockHermitian = random_hermitian(&b, &mut rng);
            let big = dense(&x).kronecker(&dense(&y));
            let xy = tensor_element(&x, &y);
            for (i, j, k) in map.pairs() {
                assert!((xy.block(k) - dense_block(&big, &a, &b, i, j)).norm() < 1e-14);
            }
        }
    }
}

#[test]
fn probabilities_and_traces_multiply() {
    let mut rng = seeded_rng(31);
    let (a, b) = (sys("1,2"), sys("3"));
    for _ in 0..20 {
        let (x, e): (BlockHermitian, BlockHermitian) = (random_state(&a, &mut rng), random_state(&a, &mut rng));
        let (y, f): (BlockHermitian, BlockHermitian) = (random_state(&b, &mut rng), random_state(&b, &mut rng));
        let joint = probability(&tensor_element(&e, &f), &tensor_element(&x, &y)).unwrap();
        let split = probability(&e, &x).unwrap() * probability(&f, &y).unwrap();
        assert!((joint - split).abs() < 1e-13);
        assert!((tensor_element(&x, &y).trace() - x.trace() * y.trace()).abs() < 1e-13);
    }
}

#[test]
fn tensor_is_associative_and_commutes_with_dagger() {
    let mut rng = seeded_rng(32);
    let (a, b, c) = (sys("1,2"), sys("2"), sys("1,1"));
    for _ in 0..5 {
        let x: BlockHermitian = random_hermitian(&a, &mut rng);
        let y: BlockHermitian = random_hermitian(&b, &mut rng);
        let z: BlockHermitian = random_hermitian(&c, &mut rng);
        let left = tensor_element(&tensor_element(&x, &y), &z);
        let right = tensor_element(&x, &tensor_element(&y, &z));
        assert_eq!(left.system(), right.system());
        assert!(left.distance(&right).unwrap() < 1e-14);
        let dag = |m: &BlockHermitian| jordanopt::dagger(m, jordanopt::Direction::StateToEffect);
        assert_eq!(dag(&tensor_element(&x, &y)), tensor_element(&dag(&x), &dag(&y)));
    }
}

#[test]
fn pure_products_stay_pure() {
    let mut rng = seeded_rng(33);
    let (a, b) = (sys("1,3"), sys("2,1"));
    for _ in 0..10 {
        let (phi, psi) = (random_pure(&a, &mut rng), random_pure(&b, &mut rng));
        let prod = tensor_pure::<f64>(&phi, &psi);
        let expect = tensor_element(&phi.projector(), &psi.projector());
        assert!(prod.projector().distance(&expect).unwrap() < 1e-14);
    }
    let joint = composite_mpds(&Pds::<f64>::standard(&a), &Pds::standard(&b), 1e-9).unwrap();
    assert_eq!(joint.len(), a.rank() * b.rank());
    assert_eq!(pds_status(joint.members(), 1e-9).unwrap(), PdsStatus::Mpds);
    assert!(joint.chi().distance(&BlockHermitian::chi(&tensor_system(&a, &b).0)).unwrap() < 1e-14);
}

fn c(re: f64) -> Complex<f64> {
    Complex::new(re, 0.0)
}

#[test]
fn cup_matrices() {
    let classical = cup::<f64>(&sys("1,1")).cup;
    let diag: Vec<f64> = classical.blocks().iter().map(|b| b[(0, 0)].re).collect();
    assert_eq!(diag, vec![1.0, 0.0, 0.0, 1.0]);
    let quantum = cup::<f64>(&sys("2")).cup;
    let z = c(0.0);
    let o = c(1.0);
    let expect = CMatrix::from_row_slice(4, 4, &[o, z, z, o, z, z, z, z, z, z, z, z, o, z, z, o]);
    assert_eq!(quantum.block(0), &expect);
    let swap = CMatrix::from_row_slice(4, 4, &[o, z, z, z, z, z, o, z, z, o, z, z, z, z, z, o]);
    let eta = eta_epsilon_check::<f64>(&sys("2"), 1e-9);
    assert!((eta.eta.block(0) - swap).norm() < 1e-14);
    assert!(!eta.eta_in_cone);
}

#[test]
fn cups_are_states_and_agree_with_basis_form() {
    for s in ["1", "2", "3", "1,1", "1,2", "2,3"] {
        let s = sys(s);
        let cc = cup::<f64>(&s);
        assert!(cc.cup.in_cone(1e-12));
        assert!((cc.cup.trace() - s.rank() as f64).abs() < 1e-14);
        assert!(cc.cup.distance(&cup_from_basis(&s)).unwrap() < 1e-13);
        let eta = eta_epsilon_check::<f64>(&s, 1e-9);
        assert!(eta.deviation < 1e-10);
        assert_eq!(eta.eta_in_cone, s.is_classical());
        if s.is_classical() {
            assert!(eta.eta.distance(&cc.cup).unwrap() < 1e-14);
        }
    }
}

#[test]
fn snake_identities() {
    for s in ["1", "2", "3", "4", "1,1", "1,2", "2,2", "1,4", "3,4"] {
        assert!(snake_check::<f64>(&sys(s)) < 1e-10, "{s}");
    }
}

#[test]
fn snake_on_random_inputs() {
    let mut rng = seeded_rng(34);
    let s = sys("1,3");
    let cc = cup::<f64>(&s);
    for _ in 0..20 {
        let x: BlockHermitian = random_hermitian(&s, &mut rng);
        let a = pair_left(&cc.cap, &tensor_element(&x, &cc.cup), &s).unwrap();
        let b = pair_right(&cc.cap, &tensor_element(&cc.cup, &x), &s).unwrap();
        assert!(a.distance(&x).unwrap() < 1e-12 && b.distance(&x).unwrap() < 1e-12);
    }
}

#[test]
fn local_tomography() {
    for (a, b) in [("1", "2"), ("2", "2"), ("1,2", "1,1"), ("2,1", "3")] {
        let (a, b) = (sys(a), sys(b));
        assert!(local_tomography_span::<f64>(&a, &b));
        assert_eq!(tensor_system(&a, &b).0.dim(), a.dim() * b.dim());
    }
    let s = sys("1,2");
    assert_eq!(span_rank(&spanning_states::<f64>(&s).iter().map(|p| p.projector()).collect::<Vec<_>>(), 1e-10), s.dim());
}

#[test]
fn span_rank_of_degenerate_sets() {
    let s = sys("2");
    let mut rng = seeded_rng(35);
    let x: BlockHermitian = random_hermitian(&s, &mut rng);
    let y: BlockHermitian = random_hermitian(&s, &mut rng);
    let set = vec![x.clone(), y.clone(), x.add(&y).unwrap(), x.scale(-2.0)];
    assert_eq!(span_rank(&set, 1e-10), 2);
    assert_eq!(span_rank::<f64>(&[], 1e-10), 0);
    assert_eq!(span_rank(&[BlockHermitian::<f64>::zero(&s)], 1e-10), 0);
}
