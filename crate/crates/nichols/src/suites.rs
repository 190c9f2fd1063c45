//! Seeded randomized checks: the braided Jacobi identity and product rule on
//! homogeneous triples, and the derivative formulas and zero tests for the
//! iterated brackets l̄_i^m[j]⁻.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nichols_core::balgebra::{is_zero_nichols, jacobi_sides, product_rule_sides};
use nichols_core::lie::{iterated_bracket, bracket_formula_checks};
use nichols_core::{Bicharacter, CycloContext, Element, Error, Order, Scalar, Word};

use crate::report::{Doc, Field};

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Where random braiding entries live.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// ±z^k with z a primitive N-th root of unity.
    Cyclotomic(u32),
    /// ±q^k for one transcendental q.
    Generic,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Cyclotomic(3),
        Family::Cyclotomic(4),
        Family::Cyclotomic(5),
        Family::Cyclotomic(12),
        Family::Generic,
    ];

    pub fn context(self) -> Arc<CycloContext> {
        match self {
            Family::Cyclotomic(n) => CycloContext::new(n, vec![]).expect("valid conductor"),
            Family::Generic => CycloContext::new(1, vec!["q".to_string()]).expect("valid name"),
        }
    }

    pub fn label(self) -> String {
        match self {
            Family::Cyclotomic(n) => format!("cyclotomic N={}", n),
            Family::Generic => "generic".to_string(),
        }
    }

    fn random_entry(self, ctx: &Arc<CycloContext>, rng: &mut ChaCha8Rng) -> Scalar {
        let (base, k) = match self {
            Family::Cyclotomic(n) => (Scalar::zeta(ctx), rng.gen_range(0..n as i64)),
            Family::Generic => (Scalar::param(ctx, 0), rng.gen_range(-3..=3)),
        };
        let v = base.pow(k).expect("nonzero base");
        if rng.gen_bool(0.25) {
            v.neg_ref()
        } else {
            v
        }
    }
}

pub fn random_bicharacter(rng: &mut ChaCha8Rng, family: Family, n: usize) -> Bicharacter {
    let ctx = family.context();
    let q = (0..n)
        .map(|_| (0..n).map(|_| family.random_entry(&ctx, rng)).collect())
        .collect();
    Bicharacter::new(&ctx, q).expect("entries are units")
}

/// A homogeneous element: a small integer combination of rearrangements of
/// one random word.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, b: &Bicharacter, len: usize) -> Element {
    let n = b.rank();
    let base: Vec<u8> = (0..len).map(|_| rng.gen_range(0..n) as u8).collect();
    let ctx = b.context();
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut w = base.clone();
        w.shuffle(rng);
        let c = *[-2i64, -1, 1, 2, 3].choose(rng).expect("nonempty");
        e = e.add(&Element::from_term(Word(w), Scalar::from_int(ctx, c)));
    }
    if e.is_zero() {
        Element::from_word(b, Word(base))
    } else {
        e
    }
}

/// Pass/fail counts for one named check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub name: String,
    pub cases: usize,
    /// Descriptions of failing cases.
    pub failures: Vec<String>,
}

impl Tally {
    pub fn new(name: &str) -> Self {
        Tally {
            name: name.to_string(),
            ..Tally::default()
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub tallies: Vec<Tally>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.tallies.iter().all(Tally::passed)
    }

    pub fn tally(&self, name: &str) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.name == name)
    }

    pub fn merge(&mut self, other: SuiteOutcome) {
        for t in other.tallies {
            match self.tallies.iter_mut().find(|s| s.name == t.name) {
                Some(s) => {
                    s.cases += t.cases;
                    s.failures.extend(t.failures);
                }
                None => self.tallies.push(t),
            }
        }
    }

    pub fn to_doc(&self) -> Doc {
        let records = self
            .tallies
            .iter()
            .map(|t| {
                let mut d = Doc::new();
                d.push("check", Field::Str(t.name.clone()))
                    .push("cases", Field::Int(t.cases as u64))
                    .push("failed", Field::Int(t.failures.len() as u64))
                    .push("result", Field::Str(if t.passed() { "pass" } else { "fail" }.to_string()));
                d
            })
            .collect();
        let mut d = Doc::new();
        d.push("checks", Field::Records(records));
        let failures: Vec<String> = self
            .tallies
            .iter()
            .flat_map(|t| t.failures.iter().map(move |f| format!("{}: {}", t.name, f)))
            .collect();
        d.push("failures", Field::Strs(failures));
        d.push("all_passed", Field::Bool(self.passed()));
        d
    }
}

/// Splits `total` into three positive parts.
fn split3(rng: &mut ChaCha8Rng, total: usize) -> [usize; 3] {
    let a = rng.gen_range(1..=total - 2);
    let b = rng.gen_range(1..=total - 1 - a);
    [a, b, total - a - b]
}

fn identity_triples(rng: &mut ChaCha8Rng, b: &Bicharacter, count: usize, label: &str) -> Result<SuiteOutcome, Error> {
    let mut jac = Tally::new("braided_jacobi");
    let mut prod = Tally::new("braided_product_rule");
    for _ in 0..count {
        let total = rng.gen_range(3..=5);
        let [l1, l2, l3] = split3(rng, total);
        let u = random_homogeneous(rng, b, l1);
        let v = random_homogeneous(rng, b, l2);
        let w = random_homogeneous(rng, b, l3);
        let describe = || format!("{} u={} v={} w={}", label, u, v, w);
        let (l, r) = jacobi_sides(b, &u, &v, &w)?;
        jac.record(l == r, describe);
        let (l, r) = product_rule_sides(b, &u, &v, &w)?;
        prod.record(l == r, describe);
    }
    Ok(SuiteOutcome {
        tallies: vec![jac, prod],
    })
}

/// `count` random triples over random bicharacters of rank 1 to 3, cycling
/// through all scalar families.
pub fn identity_suite(seed: u64, count: usize) -> Result<SuiteOutcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteOutcome::default();
    for k in 0..count {
        let family = Family::ALL[k % Family::ALL.len()];
        let n = [2, 3, 1, 2, 3][rng.gen_range(0..5)];
        let b = random_bicharacter(&mut rng, family, n);
        let label = format!("[{} rank {}]", family.label(), n);
        out.merge(identity_triples(&mut rng, &b, 1, &label)?);
    }
    Ok(out)
}

/// The derivative formulas for l̄_i^m[j]⁻ (m ≤ `m_max`) on the pair (i, j),
/// plus the nonvanishing tests whose hypotheses hold.
fn bracket_checks(b: &Bicharacter, i: usize, j: usize, m_max: usize, label: &str, out: &mut SuiteOutcome) -> Result<(), Error> {
    let mut top = Tally::new("top_derivative");
    let mut full = Tally::new("full_pairing");
    let mut rec = Tally::new("derivative_recursion");
    let mut nz_a1 = Tally::new("nonzero_when_a_is_one");
    let mut nz_ord = Tally::new("nonzero_when_ord_a_exceeds_m");
    let here = |m: usize| format!("{} (i,j)=({},{}) m={}", label, i + 1, j + 1, m);
    for row in bracket_formula_checks(b, i, j, m_max)? {
        top.record(row.top_derivative, || here(row.m));
        full.record(row.full_pairing, || here(row.m));
        rec.record(row.recursion.iter().all(|&(_, ok)| ok), || here(row.m));
    }
    let a = b.entry_inv(i, i);
    let off_diagonal = !b.entry_inv(i, j).is_one() || !b.entry_inv(j, i).is_one();
    if off_diagonal {
        let ord_a = a.order()?;
        for m in 1..=m_max {
            let exceeds = match ord_a {
                Order::Infinite => true,
                Order::Finite(k) => k > m as u64,
            };
            if !a.is_one() && !exceeds {
                continue;
            }
            let nonzero = !is_zero_nichols(b, &iterated_bracket(b, i, j, m)?)?;
            if a.is_one() {
                nz_a1.record(nonzero, || here(m));
            } else {
                nz_ord.record(nonzero, || here(m));
            }
        }
    }
    out.merge(SuiteOutcome {
        tallies: vec![top, full, rec, nz_a1, nz_ord],
    });
    Ok(())
}

/// Sets p_ij = p_ji = 1 for the two off-diagonal entries of a rank-2 matrix.
fn with_trivial_off_diagonal(b: &Bicharacter) -> Bicharacter {
    let ctx = b.context();
    let q = (0..2)
        .map(|i| (0..2).map(|j| if i == j { b.entry(i, j).clone() } else { Scalar::one(ctx) }).collect())
        .collect();
    Bicharacter::new(ctx, q).expect("entries are units")
}

/// Derivative formulas (m ≤ 4) and zero tests over `count` random rank-2
/// bicharacters. A quarter of them get p_11 = 1 so that the a = 1 case is
/// exercised; each also yields a copy with p_12 = p_21 = 1 for the vanishing
/// test (m ≤ 3).
pub fn bracket_formula_suite(seed: u64, count: usize) -> Result<SuiteOutcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteOutcome::default();
    let mut zero = Tally::new("zero_when_b_and_c_are_one");
    for k in 0..count {
        let family = Family::ALL[k % Family::ALL.len()];
        let mut b = random_bicharacter(&mut rng, family, 2);
        if k % 4 == 3 {
            let ctx = b.context().clone();
            let q = (0..2)
                .map(|i| (0..2).map(|j| if i == 0 && j == 0 { Scalar::one(&ctx) } else { b.entry(i, j).clone() }).collect())
                .collect();
            b = Bicharacter::new(&ctx, q).expect("entries are units");
        }
        let label = format!("[{} #{}]", family.label(), k);
        bracket_checks(&b, 0, 1, 4, &label, &mut out)?;
        bracket_checks(&b, 1, 0, 4, &label, &mut out)?;
        let t = with_trivial_off_diagonal(&b);
        for (i, j) in [(0, 1), (1, 0)] {
            for m in 1..=3 {
                let z = is_zero_nichols(&t, &iterated_bracket(&t, i, j, m)?)?;
                zero.record(z, || format!("{} (i,j)=({},{}) m={}", label, i + 1, j + 1, m));
            }
        }
    }
    out.merge(SuiteOutcome { tallies: vec![zero] });
    Ok(out)
}

/// Checks on one instance: `triples` random homogeneous triples, and the
/// derivative formulas and applicable nonvanishing tests for every ordered
/// pair of distinct indices.
pub fn verify_instance(b: &Bicharacter, seed: u64, triples: usize) -> Result<SuiteOutcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = identity_triples(&mut rng, b, triples, "[instance]")?;
    let n = b.rank();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                bracket_checks(b, i, j, 4, "[instance]", &mut out)?;
            }
        }
    }
    let trivial = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| {
        i != j && b.entry(i, j).is_one() && b.entry(j, i).is_one()
    });
    let mut zero = Tally::new("zero_when_b_and_c_are_one");
    for (i, j) in trivial {
        for m in 1..=3 {
            let z = is_zero_nichols(b, &iterated_bracket(b, i, j, m)?)?;
            zero.record(z, || format!("[instance] (i,j)=({},{}) m={}", i + 1, j + 1, m));
        }
    }
    out.merge(SuiteOutcome { tallies: vec![zero] });
    Ok(out)
}
