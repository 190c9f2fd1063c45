use std::sync::Arc;

use nichols_core::lie::{infinite_witness, bracket_formula_checks, lie_dims};
use nichols_core::nichols::{decide_finiteness, pbw_series, Caps, DimVerdict, Height, NicholsAlgebra};
use nichols_core::{ArithmeticVerdict, Bicharacter, BracketKind, CycloContext, LatticeVector, Scalar};

/// Entries z^k (constant context) or q^k (one parameter).
fn build(ctx: &Arc<CycloContext>, exps: &[[i64; 2]; 2]) -> Bicharacter {
    let base = if ctx.params().is_empty() {
        Scalar::zeta(ctx)
    } else {
        Scalar::param(ctx, 0)
    };
    let rows = exps
        .iter()
        .map(|row| row.iter().map(|&k| base.pow(k).unwrap()).collect())
        .collect();
    Bicharacter::new(ctx, rows).unwrap()
}

fn generic() -> Arc<CycloContext> {
    CycloContext::new(1, vec!["q".to_string()]).unwrap()
}

fn cyclo(n: u32) -> Arc<CycloContext> {
    CycloContext::new(n, vec![]).unwrap()
}

fn caps(d: usize) -> Caps {
    Caps {
        max_degree: d,
        cap_states: 10_000,
    }
}

#[test]
fn a2_at_third_root() {
    let b = build(&cyclo(3), &[[1, 2], [0, 1]]);
    let r = decide_finiteness(&b, caps(8)).unwrap();
    let ArithmeticVerdict::Yes(rs) = &r.arithmetic else { panic!("arithmetic") };
    let roots: Vec<LatticeVector> = r.roots.iter().map(|d| d.root.clone()).collect();
    assert_eq!(rs.positive_sorted(), roots);
    assert!(r.roots.iter().all(|d| d.height == Height::Finite(3)));
    assert_eq!(r.dim_b, DimVerdict::Finite(Some(27)));
    assert_eq!(r.hilbert.coefficients, vec![1, 2, 4, 4, 5, 4, 4, 2, 1]);
    assert_eq!(r.pbw.as_ref(), Some(&r.hilbert));
    assert!(matches!(r.dim_l, DimVerdict::Finite(Some(_))));
    assert!(matches!(r.dim_l_minus, DimVerdict::Finite(Some(_))));
    assert!(r.witness.is_none());
}

#[test]
fn a2_generic() {
    let b = build(&generic(), &[[1, -1], [0, 1]]);
    let r = decide_finiteness(&b, caps(8)).unwrap();
    let ArithmeticVerdict::Yes(rs) = &r.arithmetic else { panic!("arithmetic") };
    assert_eq!(rs.roots.len(), 6);
    assert!(!r.orders_finite);
    assert_eq!((r.dim_b, r.dim_l, r.dim_l_minus), (DimVerdict::Infinite, DimVerdict::Infinite, DimVerdict::Infinite));
    assert!(r.witness.is_some());
    assert!((1..=8).all(|d| r.lie_minus.dim(d) > 0));
}

#[test]
fn trivial_self_braiding_is_not_arithmetic() {
    let c = cyclo(1);
    let one = Scalar::one(&c);
    let m1 = Scalar::from_int(&c, -1);
    let b = Bicharacter::new(&c, vec![vec![one.clone(), m1.clone()], vec![one, m1]]).unwrap();
    let r = decide_finiteness(&b, caps(8)).unwrap();
    assert_eq!(r.arithmetic, ArithmeticVerdict::No);
    assert!(!r.groupoid.full);
    assert_eq!(r.dim_b, DimVerdict::Infinite);
    assert_eq!(r.dim_l_minus, DimVerdict::Infinite);
    let w = r.witness.expect("witness");
    assert_eq!((w.i, w.j), (0, 1));
    assert!((1..=8).all(|d| r.lie_minus.dim(d) > 0));
}

#[test]
fn b2_generic_roots() {
    let b = build(&generic(), &[[1, -2], [0, 2]]);
    let r = decide_finiteness(&b, caps(5)).unwrap();
    let ArithmeticVerdict::Yes(rs) = &r.arithmetic else { panic!("arithmetic") };
    assert_eq!(rs.positive.len(), 4);
    assert_eq!(r.roots.len(), 4);
    assert_eq!(r.dim_b, DimVerdict::Infinite);
}

#[test]
fn b2_at_third_root_is_consistent() {
    let b = build(&cyclo(3), &[[1, 1], [0, 2]]);
    let mut alg = NicholsAlgebra::new(&b);
    let roots = alg.hard_super_letters(9).unwrap();
    let roots = alg.check_heights(&roots, 9).unwrap();
    assert_eq!(roots.len(), 4);
    assert!(roots.iter().all(|d| d.height == Height::Finite(3)));
    assert_eq!(pbw_series(&roots, 9).unwrap(), alg.hilbert(9));
    let r = decide_finiteness(&b, caps(6)).unwrap();
    assert_eq!(r.groupoid_dim, Some(81));
    // Certifying every height needs degree 9.
    assert_eq!(r.dim_b, DimVerdict::Finite(None));
}

#[test]
fn a2_at_fourth_root_pbw_agrees_below_cap() {
    let b = build(&cyclo(4), &[[1, 3], [0, 1]]);
    let mut alg = NicholsAlgebra::new(&b);
    let roots = alg.hard_super_letters(8).unwrap();
    let roots = alg.check_heights(&roots, 8).unwrap();
    assert_eq!(pbw_series(&roots, 8).unwrap(), alg.hilbert(8));
}

#[test]
fn rank_one_routes() {
    for k in [2u32, 3, 5] {
        let c = cyclo(k);
        let b = Bicharacter::new(&c, vec![vec![Scalar::zeta(&c)]]).unwrap();
        let r = decide_finiteness(&b, caps(8)).unwrap();
        assert_eq!(r.dim_b, DimVerdict::Finite(Some(k as u64)));
        assert_eq!(r.dim_l_minus, DimVerdict::Finite(Some(1)));
        assert_eq!(r.dim_l, DimVerdict::Finite(Some(k as u64 - 1)));
    }
    let c = cyclo(1);
    let b = Bicharacter::new(&c, vec![vec![Scalar::one(&c)]]).unwrap();
    let r = decide_finiteness(&b, caps(8)).unwrap();
    assert_eq!((r.dim_b, r.dim_l, r.dim_l_minus), (DimVerdict::Infinite, DimVerdict::Finite(Some(1)), DimVerdict::Finite(Some(1))));
    assert_eq!(r.lie.total(), 1);
    let g = generic();
    let b = Bicharacter::new(&g, vec![vec![Scalar::param(&g, 0)]]).unwrap();
    let r = decide_finiteness(&b, caps(6)).unwrap();
    assert_eq!((r.dim_b, r.dim_l, r.dim_l_minus), (DimVerdict::Infinite, DimVerdict::Infinite, DimVerdict::Finite(Some(1))));
    assert!((1..=6).all(|d| r.lie.dim(d) == 1));
    assert_eq!(r.lie_minus.total(), 1);
}

#[test]
fn bracket_formulas_on_fixtures() {
    for b in [build(&cyclo(5), &[[2, 3], [1, 4]]), build(&generic(), &[[1, -1], [3, 2]])] {
        for (i, j) in [(0, 1), (1, 0)] {
            assert!(bracket_formula_checks(&b, i, j, 4).unwrap().iter().all(|r| r.passed()));
        }
    }
}

#[test]
fn witness_matches_closure_growth() {
    let b = build(&generic(), &[[1, 2], [0, 3]]);
    assert!(infinite_witness(&b).unwrap().is_some());
    let mut alg = NicholsAlgebra::new(&b);
    let s = lie_dims(&mut alg, BracketKind::Minus, 6).unwrap();
    assert!((1..=6).all(|d| s.dim(d) > 0));
}
