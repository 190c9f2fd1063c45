use std::sync::Arc;

use nichols_core::balgebra::{bracket_of_word, derive, jacobi_sides, product_rule_sides};
use nichols_core::nichols::NicholsAlgebra;
use nichols_core::weyl::{generate_groupoid, reflect, GroupoidState};
use nichols_core::words::{lyndon_enum, words_of_multidegree};
use nichols_core::{Bicharacter, CycloContext, Element, LatticeVector, Scalar, Word};
use proptest::prelude::*;

fn cyclo_ctx(n: u32) -> Arc<CycloContext> {
    CycloContext::new(n, vec![]).unwrap()
}

fn generic_ctx() -> Arc<CycloContext> {
    CycloContext::new(1, vec!["q".to_string()]).unwrap()
}

/// z^k in ℚ(ζ_N), or q^k when the context has a parameter.
fn unit(ctx: &Arc<CycloContext>, k: i64) -> Scalar {
    if ctx.params().is_empty() {
        Scalar::zeta(ctx).pow(k).unwrap()
    } else {
        Scalar::param(ctx, 0).pow(k).unwrap()
    }
}

fn bichar(ctx: &Arc<CycloContext>, exps: &[i64], n: usize) -> Bicharacter {
    let q = (0..n)
        .map(|i| (0..n).map(|j| unit(ctx, exps[i * n + j])).collect())
        .collect();
    Bicharacter::new(ctx, q).unwrap()
}

fn scalar_strategy() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (-3i64..4, -3i64..4, -3i64..4, 1i64..4)
}

/// a + b·z^e over ℚ(ζ_12) and a + b·q^e over ℚ(q), divided by d.
fn build(ctx: &Arc<CycloContext>, (a, b, e, d): (i64, i64, i64, i64)) -> Scalar {
    let x = Scalar::from_int(ctx, a).add_ref(&Scalar::from_int(ctx, b).mul_ref(&unit(ctx, e)));
    x.checked_div(&Scalar::from_int(ctx, d)).unwrap()
}

fn contexts() -> Vec<Arc<CycloContext>> {
    vec![cyclo_ctx(12), generic_ctx()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in scalar_strategy(), y in scalar_strategy(), w in scalar_strategy()) {
        for ctx in contexts() {
            let (x, y, w) = (build(&ctx, x), build(&ctx, y), build(&ctx, w));
            prop_assert_eq!(x.add_ref(&y).add_ref(&w), x.add_ref(&y.add_ref(&w)));
            prop_assert_eq!(x.mul_ref(&y), y.mul_ref(&x));
            prop_assert_eq!(x.mul_ref(&y.add_ref(&w)), x.mul_ref(&y).add_ref(&x.mul_ref(&w)));
            prop_assert!(x.sub_ref(&x).is_zero());
            if !x.is_zero() {
                prop_assert!(x.mul_ref(&x.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn chi_is_biadditive(exps in prop::collection::vec(-4i64..5, 9),
                         a in prop::collection::vec(-2i64..3, 3),
                         b in prop::collection::vec(-2i64..3, 3),
                         c in prop::collection::vec(-2i64..3, 3)) {
        let ctx = cyclo_ctx(5);
        let bi = bichar(&ctx, &exps, 3);
        let (a, b, c) = (LatticeVector(a), LatticeVector(b), LatticeVector(c));
        let lhs = bi.chi(&(&a + &b), &c).unwrap();
        let rhs = bi.chi(&a, &c).unwrap().mul_ref(&bi.chi(&b, &c).unwrap());
        prop_assert_eq!(lhs, rhs);
        let lhs = bi.chi(&a, &(&b + &c)).unwrap();
        let rhs = bi.chi(&a, &b).unwrap().mul_ref(&bi.chi(&a, &c).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lyndon_iff_smaller_than_proper_suffixes(letters in prop::collection::vec(0u8..3, 1..8)) {
        let w = Word(letters);
        let by_suffix = (1..w.len()).all(|k| w.0[..] < w.0[k..]);
        prop_assert_eq!(w.is_lyndon(), by_suffix);
    }

    #[test]
    fn lyndon_factorization_is_unique_and_nonincreasing(letters in prop::collection::vec(0u8..3, 1..10)) {
        let w = Word(letters);
        let f = w.lyndon_factorization();
        prop_assert!(f.iter().all(Word::is_lyndon));
        prop_assert!(f.windows(2).all(|p| p[0] >= p[1]));
        let joined: Vec<u8> = f.iter().flat_map(|x| x.0.clone()).collect();
        prop_assert_eq!(&joined, &w.0);
    }

    #[test]
    fn shirshov_split_is_lyndon(letters in prop::collection::vec(0u8..3, 2..8)) {
        let w = Word(letters);
        if w.is_lyndon() {
            let (v, x) = w.shirshov().unwrap();
            prop_assert!(v.is_lyndon() && x.is_lyndon());
            prop_assert_eq!(v.concat(&x), w);
        }
    }

    #[test]
    fn reflections_are_involutions(n_idx in 0usize..4, exps in prop::collection::vec(0i64..12, 4)) {
        let n = [3u32, 4, 5, 12][n_idx];
        let ctx = cyclo_ctx(n);
        let bi = bichar(&ctx, &exps, 2);
        let g = generate_groupoid(&bi, &GroupoidState::standard(2), 200).unwrap();
        for s in &g.states {
            prop_assert_eq!(s.determinant().abs(), 1);
            for k in 0..2 {
                // States far out in an infinite closure may leave the i64 range.
                if let Ok(Some(t)) = reflect(&bi, s, k) {
                    if let Ok(back) = reflect(&bi, &t, k) {
                        prop_assert_eq!(back.as_ref(), Some(s));
                    }
                }
            }
        }
    }

    #[test]
    fn braided_identities(n_idx in 0usize..5,
                          exps in prop::collection::vec(-6i64..7, 4),
                          lens in (1usize..3, 1usize..3, 1usize..2),
                          seeds in prop::collection::vec(0u8..2, 6)) {
        let ctx = if n_idx == 4 { generic_ctx() } else { cyclo_ctx([3u32, 4, 5, 12][n_idx]) };
        let bi = bichar(&ctx, &exps, 2);
        let word = |start: usize, len: usize| Word(seeds[start..start + len].to_vec());
        let u = Element::from_word(&bi, word(0, lens.0));
        let v = Element::from_word(&bi, word(2, lens.1)).add(&Element::from_word(&bi, word(2, lens.1).reversed()));
        let w = Element::from_word(&bi, word(4, lens.2));
        let (l, r) = jacobi_sides(&bi, &u, &v, &w).unwrap();
        prop_assert_eq!(l, r);
        let (l, r) = product_rule_sides(&bi, &u, &v, &w).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn derive_lowers_degree(letters in prop::collection::vec(0u8..3, 0..6), exps in prop::collection::vec(-3i64..4, 9)) {
        let ctx = generic_ctx();
        let bi = bichar(&ctx, &exps, 3);
        let u = Element::from_word(&bi, Word(letters.clone()));
        for i in 0..3 {
            let d = derive(&bi, i, &u);
            prop_assert!(d.terms().all(|(w, _)| w.len() + 1 == letters.len()));
            prop_assert_eq!(d.is_zero(), !letters.contains(&(i as u8)));
        }
    }
}

/// Independent parameters in every entry make the free algebra relations visible.
fn free_params(n: usize) -> Bicharacter {
    let names: Vec<String> = (0..n * n).map(|k| format!("p{}", k)).collect();
    let ctx = CycloContext::new(1, names).unwrap();
    let q = (0..n)
        .map(|i| (0..n).map(|j| Scalar::param(&ctx, i * n + j)).collect())
        .collect();
    Bicharacter::new(&ctx, q).unwrap()
}

#[test]
fn leading_word_property() {
    for n in [2, 3] {
        let bi = free_params(n);
        let max = if n == 2 { 5 } else { 4 };
        for l in lyndon_enum(n, max) {
            let e = bracket_of_word(&bi, &l);
            let (least, coeff) = e.terms().next().expect("super-letter is nonzero");
            assert_eq!(least, &l, "least word of [{}]", l);
            assert!(!coeff.is_zero());
        }
    }
}

fn a2_zeta3() -> Bicharacter {
    let ctx = cyclo_ctx(3);
    bichar(&ctx, &[1, 2, 0, 1], 2)
}

#[test]
fn standard_words_match_rank_and_are_factor_closed() {
    for bi in [a2_zeta3(), bichar(&cyclo_ctx(4), &[2, 1, 1, 1], 2), bichar(&generic_ctx(), &[1, -1, 0, 1], 2)] {
        let mut alg = NicholsAlgebra::new(&bi);
        for a in 0..=4i64 {
            for b in 0..=4 - a {
                let mu = LatticeVector(vec![a, b]);
                let c = alg.graded_component(&mu).unwrap();
                assert_eq!(c.standard.len(), c.rank);
                for w in &c.standard {
                    for i in 0..w.len() {
                        for j in i + 1..=w.len() {
                            let f = Word(w.0[i..j].to_vec());
                            assert!(alg.is_standard(&f).unwrap(), "factor {} of {}", f, w);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn rank_does_not_depend_on_row_words() {
    let bi = bichar(&cyclo_ctx(5), &[1, 3, 0, 2], 2);
    let mut alg = NicholsAlgebra::new(&bi);
    let mu = LatticeVector(vec![2, 2]);
    let c = alg.graded_component(&mu).unwrap();
    // Rows in the natural (unreversed) order.
    let rows: Vec<Vec<Scalar>> = words_of_multidegree(&mu)
        .iter()
        .map(|y| {
            c.words
                .iter()
                .map(|x| {
                    let e = nichols_core::balgebra::pairing(&bi, y, &Element::from_word(&bi, x.clone()));
                    e.constant_term().cloned().unwrap_or_else(|| bi.zero())
                })
                .collect()
        })
        .collect();
    assert_eq!(nichols_core::linalg::rank_of(&rows), c.rank);
    assert_eq!(nichols_core::linalg::rank_of(&c.gram), c.rank);
}

#[test]
fn zero_tests_agree() {
    let bi = bichar(&cyclo_ctx(3), &[1, 2, 0, 1], 2);
    let mut alg = NicholsAlgebra::new(&bi);
    for l in lyndon_enum(2, 4) {
        let e = bracket_of_word(&bi, &l);
        let a = alg.is_zero(&e).unwrap();
        let b = nichols_core::balgebra::is_zero_nichols(&bi, &e).unwrap();
        assert_eq!(a, b, "{}", l);
    }
}
