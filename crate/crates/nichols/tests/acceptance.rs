//! Acceptance checks. Each test prints one `criterion N: PASS|FAIL` line
//! (visible with `--nocapture`). All comparisons are exact; the only
//! tolerances are the wall-clock budgets below.

use std::path::Path;
use std::time::{Duration, Instant};

use nichols::parser::parse_instance;
use nichols::suites::{identity_suite, bracket_formula_suite, SuiteOutcome, DEFAULT_SEED};
use nichols_core::balgebra::pairing;
use nichols_core::lie::{infinite_witness, lie_dims};
use nichols_core::linalg::rank_of;
use nichols_core::nichols::{
    decide_finiteness, hard_super_letters_by_reduction, Caps, DimVerdict, Height, NicholsAlgebra,
};
use nichols_core::weyl::{generate_groupoid, reflect, verdict_of, GroupoidState};
use nichols_core::words::{lyndon_enum, multidegrees_of_total, words_of_multidegree};
use nichols_core::{ArithmeticVerdict, Bicharacter, BracketKind, Element, LatticeVector, Order, Word};

/// Wall-clock budgets per criterion.
const BUDGET_IDENTITIES: Duration = Duration::from_secs(60);
const BUDGET_FORMULAS: Duration = Duration::from_secs(120);
const BUDGET_ORACLE: Duration = Duration::from_secs(600);
const BUDGET_A2: Duration = Duration::from_secs(300);
const BUDGET_RANK_ONE: Duration = Duration::from_secs(30);
const BUDGET_BATTERY: Duration = Duration::from_secs(600);
const BUDGET_GROUPOID: Duration = Duration::from_secs(30);
const BUDGET_HEIGHTS: Duration = Duration::from_secs(300);

/// Suite sizes.
const IDENTITY_TRIPLES: usize = 240;
const FORMULA_BICHARACTERS: usize = 60;

fn caps(d: usize) -> Caps {
    Caps {
        max_degree: d,
        cap_states: 10_000,
    }
}

fn fixture(name: &str) -> Bicharacter {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    let text = std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {}", p.display(), e));
    parse_instance(&text).unwrap().bicharacter()
}

fn inline(text: &str) -> Bicharacter {
    parse_instance(text).unwrap().bicharacter()
}

fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector(v.to_vec())
}

/// Prints the criterion line, then fails the test if needed.
fn conclude(n: u32, ok: bool, elapsed: Duration, budget: Duration, detail: String) {
    let in_time = elapsed <= budget;
    let verdict = if ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "criterion {}: {} ({:.1}s of {}s) {}",
        n,
        verdict,
        elapsed.as_secs_f64(),
        budget.as_secs(),
        detail
    );
    assert!(ok, "criterion {} failed: {}", n, detail);
    assert!(in_time, "criterion {} over budget", n);
}

fn suite_detail(s: &SuiteOutcome) -> String {
    let parts: Vec<String> = s
        .tallies
        .iter()
        .map(|t| format!("{} {}/{}", t.name, t.cases - t.failures.len(), t.cases))
        .collect();
    let mut out = parts.join(", ");
    if let Some(f) = s.tallies.iter().flat_map(|t| t.failures.iter()).next() {
        out.push_str(&format!("; first failure: {}", f));
    }
    out
}

#[test]
fn criterion_1_braided_identities() {
    let t = Instant::now();
    let s = identity_suite(DEFAULT_SEED, IDENTITY_TRIPLES).unwrap();
    let covered = ["braided_jacobi", "braided_product_rule"]
        .iter()
        .all(|n| s.tally(n).is_some_and(|t| t.cases >= 200));
    conclude(1, covered && s.passed(), t.elapsed(), BUDGET_IDENTITIES, suite_detail(&s));
}

#[test]
fn criterion_2_iterated_bracket_formulas() {
    let t = Instant::now();
    let s = bracket_formula_suite(DEFAULT_SEED, FORMULA_BICHARACTERS).unwrap();
    // Formula checks run on both ordered pairs of each bicharacter, m = 1..4.
    let formulas = ["top_derivative", "full_pairing"]
        .iter()
        .all(|n| s.tally(n).is_some_and(|t| t.cases == FORMULA_BICHARACTERS * 2 * 4));
    let exercised = [
        "zero_when_b_and_c_are_one",
        "nonzero_when_a_is_one",
        "nonzero_when_ord_a_exceeds_m",
    ]
    .iter()
    .all(|n| s.tally(n).is_some_and(|t| t.cases > 0));
    conclude(2, formulas && exercised && s.passed(), t.elapsed(), BUDGET_FORMULAS, suite_detail(&s));
}

/// Rank-2 and rank-3 instances for the standard-word oracle.
fn oracle_fixtures() -> Vec<(&'static str, Bicharacter)> {
    vec![
        ("A2 z3", fixture("a2_zeta3.inst")),
        ("A2 generic", fixture("a2_generic.inst")),
        ("B2 generic", fixture("b2_generic.inst")),
        ("B2 z3", fixture("b2_zeta3.inst")),
        ("p11 = 1", fixture("p11_one.inst")),
        ("A2 z4", inline("rank 2; conductor 4; q 1 1 = z; q 1 2 = z^3; q 2 1 = 1; q 2 2 = z")),
        ("G2 generic", inline("rank 2; params q; q 1 1 = q; q 1 2 = q^-3; q 2 1 = 1; q 2 2 = q^3")),
        ("super A2", inline("rank 2; conductor 3; q 1 1 = -1; q 1 2 = z^2; q 2 1 = 1; q 2 2 = z")),
        ("random z5", inline("rank 2; conductor 5; q 1 1 = z^2; q 1 2 = z^3; q 2 1 = z; q 2 2 = z^4")),
        ("random z12", inline("rank 2; conductor 12; q 1 1 = z^4; q 1 2 = -z; q 2 1 = z^7; q 2 2 = -1")),
        (
            "A3 z3",
            inline("rank 3; conductor 3; q 1 1 = z; q 1 2 = z^2; q 1 3 = 1; q 2 1 = 1; q 2 2 = z; q 2 3 = z^2; q 3 1 = 1; q 3 2 = 1; q 3 3 = z"),
        ),
        (
            "A3 generic",
            inline("rank 3; params q; q 1 1 = q; q 1 2 = q^-1; q 1 3 = 1; q 2 1 = 1; q 2 2 = q; q 2 3 = q^-1; q 3 1 = 1; q 3 2 = 1; q 3 3 = q"),
        ),
    ]
}

#[test]
fn criterion_3_standard_words_match_reducibility_oracle() {
    const D: usize = 5;
    let t = Instant::now();
    let mut mismatches = Vec::new();
    let fixtures = oracle_fixtures();
    for (name, b) in &fixtures {
        let mut alg = NicholsAlgebra::new(b);
        let standard: Vec<Word> = lyndon_enum(b.rank(), D)
            .into_iter()
            .filter(|w| alg.is_standard(w).unwrap())
            .collect();
        let mut hard = hard_super_letters_by_reduction(b, D);
        let mut standard_sorted = standard.clone();
        standard_sorted.sort();
        hard.sort();
        if standard_sorted != hard {
            mismatches.push(name.to_string());
        }
    }
    let enough = fixtures.len() >= 10 && fixtures.iter().all(|(_, b)| (2..=3).contains(&b.rank()));
    let detail = format!("{} instances at D = {}; mismatches: {:?}", fixtures.len(), D, mismatches);
    conclude(3, enough && mismatches.is_empty(), t.elapsed(), BUDGET_ORACLE, detail);
}

/// Coefficients of (1+t+t²)²(1+t²+t⁴).
fn a2_expected_series() -> Vec<u64> {
    let mul = |a: &[u64], b: &[u64]| {
        let mut c = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        c
    };
    let p = [1, 1, 1];
    mul(&mul(&p, &p), &[1, 0, 1, 0, 1])
}

/// Graded dimensions from full Gram matrices built with the raw pairing.
fn brute_force_hilbert(b: &Bicharacter, d: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    for total in 1..=d {
        let mut sum = 0u64;
        for mu in multidegrees_of_total(b.rank(), total) {
            let words = words_of_multidegree(&mu);
            let gram: Vec<Vec<_>> = words
                .iter()
                .map(|y| {
                    words
                        .iter()
                        .map(|x| {
                            let e = pairing(b, y, &Element::from_word(b, x.clone()));
                            e.constant_term().cloned().unwrap_or_else(|| b.zero())
                        })
                        .collect()
                })
                .collect();
            sum += rank_of(&gram) as u64;
        }
        out.push(sum);
    }
    out
}

#[test]
fn criterion_4_a2_at_third_root() {
    let t = Instant::now();
    let b = fixture("a2_zeta3.inst");
    let r = decide_finiteness(&b, caps(8)).unwrap();
    let positive = match &r.arithmetic {
        ArithmeticVerdict::Yes(rs) => rs.positive_sorted(),
        _ => vec![],
    };
    let roots_ok = positive == vec![lv(&[1, 0]), lv(&[0, 1]), lv(&[1, 1])]
        && r.roots.iter().map(|x| x.root.clone()).collect::<Vec<_>>() == positive;
    let heights_ok = r.roots.iter().all(|x| x.height == Height::Finite(3) && x.ord_puu == Order::Finite(3));
    let expected = a2_expected_series();
    let brute = brute_force_hilbert(&b, 8);
    let series_ok = r.hilbert.coefficients == expected && brute == expected && expected.iter().sum::<u64>() == 27;
    let dim_ok = r.dim_b == DimVerdict::Finite(Some(27)) && r.groupoid_dim == Some(27);
    let detail = format!(
        "roots {:?}, hilbert {:?}, brute force {:?}, dim_B {:?}",
        positive.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        r.hilbert.coefficients,
        brute,
        r.dim_b
    );
    conclude(4, roots_ok && heights_ok && series_ok && dim_ok, t.elapsed(), BUDGET_A2, detail);
}

#[test]
fn criterion_5_rank_one() {
    let t = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for k in [2u64, 3, 5] {
        let r = decide_finiteness(&fixture(&format!("rank1_ord{}.inst", k)), caps(8)).unwrap();
        ok &= r.dim_b == DimVerdict::Finite(Some(k));
        detail.push(format!("ord {}: dim_B {:?}", k, r.dim_b));
    }
    let r = decide_finiteness(&fixture("rank1_ord1.inst"), caps(8)).unwrap();
    ok &= r.dim_b == DimVerdict::Infinite
        && r.dim_l_minus == DimVerdict::Finite(Some(1))
        && r.dim_l == DimVerdict::Finite(Some(1));
    detail.push(format!("ord 1: {:?} {:?} {:?}", r.dim_b, r.dim_l, r.dim_l_minus));
    let r = decide_finiteness(&fixture("rank1_generic.inst"), caps(8)).unwrap();
    ok &= r.dim_b == DimVerdict::Infinite && r.dim_l_minus == DimVerdict::Finite(Some(1));
    detail.push(format!("ord inf: {:?} {:?} {:?}", r.dim_b, r.dim_l, r.dim_l_minus));
    conclude(5, ok, t.elapsed(), BUDGET_RANK_ONE, detail.join("; "));
}

fn class(v: &DimVerdict) -> Option<bool> {
    match v {
        DimVerdict::Finite(_) => Some(true),
        DimVerdict::Infinite => Some(false),
        DimVerdict::Unknown => None,
    }
}

#[test]
fn criterion_6_three_verdicts_agree() {
    const D: usize = 8;
    let t = Instant::now();
    let battery = [
        ("A2 z3", fixture("a2_zeta3.inst"), true),
        ("A2 generic", fixture("a2_generic.inst"), false),
        ("p11 = 1", fixture("p11_one.inst"), false),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, b, finite) in &battery {
        let r = decide_finiteness(b, caps(D)).unwrap();
        let classes = [class(&r.dim_b), class(&r.dim_l), class(&r.dim_l_minus)];
        let agree = classes.iter().all(|c| *c == Some(*finite));
        let witness = infinite_witness(b).unwrap();
        let witness_ok = witness.is_some() == !finite;
        let growth_ok = if *finite {
            // Past the top degree nothing new appears, and the total is stable.
            let mut alg = NicholsAlgebra::new(b);
            let wide = lie_dims(&mut alg, BracketKind::Minus, D + 2).unwrap();
            let wide_braided = lie_dims(&mut alg, BracketKind::Braided, D + 2).unwrap();
            wide.dim(D + 1) == 0
                && wide.dim(D + 2) == 0
                && wide_braided.dim(D + 1) == 0
                && wide_braided.dim(D + 2) == 0
                && wide.total() == r.lie_minus.total()
                && wide_braided.total() == r.lie.total()
        } else {
            (1..=D).all(|d| r.lie_minus.dim(d) > 0)
        };
        ok &= agree && witness_ok && growth_ok;
        detail.push(format!(
            "{}: {:?}/{:?}/{:?} witness {} lie_minus {:?}",
            name,
            r.dim_b,
            r.dim_l,
            r.dim_l_minus,
            witness.is_some(),
            r.lie_minus.dims
        ));
    }
    conclude(6, ok, t.elapsed(), BUDGET_BATTERY, detail.join("; "));
}

#[test]
fn criterion_7_weyl_groupoid() {
    let t = Instant::now();
    let generic = fixture("a2_generic.inst");
    let g = generate_groupoid(&generic, &GroupoidState::standard(2), 10_000).unwrap();
    let a2_ok = g.full
        && g.finite
        && matches!(verdict_of(&g), ArithmeticVerdict::Yes(ref rs) if rs.roots.len() == 6);
    let undefined = fixture("p11_one.inst");
    let g2 = generate_groupoid(&undefined, &GroupoidState::standard(2), 10_000).unwrap();
    let undefined_ok = !g2.full && verdict_of(&g2) == ArithmeticVerdict::No;
    let mut involution_ok = true;
    let mut states = 0;
    for name in [
        "a2_zeta3.inst",
        "a2_generic.inst",
        "b2_generic.inst",
        "b2_zeta3.inst",
        "p11_one.inst",
        "disconnected.inst",
        "rank1_ord1.inst",
        "rank1_ord2.inst",
        "rank1_ord3.inst",
        "rank1_ord5.inst",
        "rank1_generic.inst",
    ] {
        let b = fixture(name);
        let g = generate_groupoid(&b, &GroupoidState::standard(b.rank()), 10_000).unwrap();
        for s in &g.states {
            states += 1;
            for k in 0..b.rank() {
                if let Some(next) = reflect(&b, s, k).unwrap() {
                    involution_ok &= reflect(&b, &next, k).unwrap().as_ref() == Some(s);
                }
            }
        }
    }
    let detail = format!(
        "A2 generic |roots| = {}, full = {}; undefined reflection full = {}; involution on {} states",
        g.root_set().roots.len(),
        g.full,
        g2.full,
        states
    );
    conclude(7, a2_ok && undefined_ok && involution_ok, t.elapsed(), BUDGET_GROUPOID, detail);
}

#[test]
fn criterion_8_heights_on_arithmetic_fixtures() {
    let t = Instant::now();
    let fixtures = [
        ("A2 z3", fixture("a2_zeta3.inst"), 8),
        ("A2 generic", fixture("a2_generic.inst"), 6),
        ("B2 generic", fixture("b2_generic.inst"), 5),
        ("B2 z3", fixture("b2_zeta3.inst"), 9),
        ("A2 z4", inline("rank 2; conductor 4; q 1 1 = z; q 1 2 = z^3; q 2 1 = 1; q 2 2 = z"), 8),
        ("super A2", inline("rank 2; conductor 3; q 1 1 = -1; q 1 2 = z^2; q 2 1 = 1; q 2 2 = z"), 8),
        ("rank 1 ord 5", fixture("rank1_ord5.inst"), 8),
        ("rank 1 generic", fixture("rank1_generic.inst"), 6),
    ];
    let mut ok = true;
    let mut certified = 0;
    let mut arithmetic = 0;
    let mut detail = Vec::new();
    for (name, b, d) in &fixtures {
        let g = generate_groupoid(b, &GroupoidState::standard(b.rank()), 10_000).unwrap();
        if !matches!(verdict_of(&g), ArithmeticVerdict::Yes(_)) {
            detail.push(format!("{}: not arithmetic", name));
            continue;
        }
        arithmetic += 1;
        let mut alg = NicholsAlgebra::new(b);
        let roots = alg.hard_super_letters(*d).unwrap();
        let roots = alg.check_heights(&roots, *d).unwrap();
        for r in &roots {
            let consistent = match (r.height, r.ord_puu) {
                (Height::Finite(h), Order::Finite(m)) => h == m,
                (Height::Infinite, Order::Infinite) => true,
                (Height::Unchecked, _) => continue,
                _ => false,
            };
            certified += 1;
            if r.p_uu.is_one() || !consistent {
                ok = false;
                detail.push(format!("{}: [{}] p_uu = {} height {:?}", name, r.lyndon, r.p_uu, r.height));
            }
        }
    }
    ok &= arithmetic >= 6;
    let summary = format!("{} arithmetic fixtures, {} certified heights", arithmetic, certified);
    detail.insert(0, summary);
    conclude(8, ok, t.elapsed(), BUDGET_HEIGHTS, detail.join("; "));
}
