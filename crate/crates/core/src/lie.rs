//! The braided Lie algebra 𝔏(V) and the Lie algebra 𝔏⁻(V) generated by V
//! inside 𝔅(V), and the iterated brackets l̄_i^m[j]⁻.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::balgebra::{bracket, derive, BracketKind, Element};
use crate::error::Error;
use crate::lattice::{Bicharacter, LatticeVector};
use crate::linalg::Echelon;
use crate::nichols::NicholsAlgebra;
use crate::scalars::{Order, Scalar};

/// l̄_i^0[j]⁻ = x_j and l̄_i^m[j]⁻ = x_i·l̄_i^{m−1}[j]⁻ − l̄_i^{m−1}[j]⁻·x_i.
pub fn iterated_bracket(b: &Bicharacter, i: usize, j: usize, m: usize) -> Result<Element, Error> {
    if i == j {
        return Err(Error::SameIndex);
    }
    let xi = Element::letter(b, i);
    let mut cur = Element::letter(b, j);
    for _ in 0..m {
        cur = bracket(b, BracketKind::Minus, &cur, &xi)?;
    }
    Ok(cur)
}

fn derive_pow(b: &Bicharacter, i: usize, k: usize, u: &Element) -> Element {
    let mut cur = u.clone();
    for _ in 0..k {
        cur = derive(b, i, &cur);
    }
    cur
}

/// Outcome of the exact checks on l̄_i^m[j]⁻ for one m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketFormulaRow {
    pub m: usize,
    /// ⟨y_i^m, l̄^m⟩ = (1−b)^m (m)_a! x_j.
    pub top_derivative: bool,
    /// ⟨y_j y_i^m, l̄^m⟩ = (1−b)^m (m)_a!.
    pub full_pairing: bool,
    /// The one-step recursion for ⟨y_i^k, l̄^m⟩, for k = 1..=m.
    pub recursion: Vec<(usize, bool)>,
}

impl BracketFormulaRow {
    pub fn passed(&self) -> bool {
        self.top_derivative && self.full_pairing && self.recursion.iter().all(|&(_, ok)| ok)
    }
}

/// Evaluates both sides of the derivative formulas for l̄_i^m[j]⁻ with
/// a = p_ii^{-1}, b = p_ij^{-1}, for 1 ≤ m ≤ `m_max`.
pub fn bracket_formula_checks(b: &Bicharacter, i: usize, j: usize, m_max: usize) -> Result<Vec<BracketFormulaRow>, Error> {
    if i == j {
        return Err(Error::SameIndex);
    }
    let a = b.entry_inv(i, i).clone();
    let bb = b.entry_inv(i, j).clone();
    let one = b.one();
    let one_minus_b = one.sub_ref(&bb);
    let xi = Element::letter(b, i);
    let xj = Element::letter(b, j);
    let mut rows = Vec::new();
    let mut prev = xj.clone();
    for m in 1..=m_max {
        let cur = iterated_bracket(b, i, j, m)?;
        let coeff = one_minus_b.pow(m as i64)?.mul_ref(&Scalar::q_factorial(m as u32, &a));
        let top = derive_pow(b, i, m, &cur);
        let top_derivative = top == xj.scale(&coeff);
        let full = derive(b, j, &top);
        let full_pairing = full == Element::scalar(coeff.clone()) || (coeff.is_zero() && full.is_zero());
        let mut recursion = Vec::new();
        for k in 1..=m {
            let lhs = derive_pow(b, i, k, &cur);
            let mut s = b.zero();
            for l in 0..k {
                let t = a.pow(l as i64)?.sub_ref(&a.pow((m - 1 - l) as i64)?.mul_ref(&bb));
                s = s.add_ref(&t);
            }
            let dk1 = derive_pow(b, i, k - 1, &prev);
            let dk = derive_pow(b, i, k, &prev);
            let rhs = dk1
                .scale(&s)
                .add(&xi.mul(&dk).scale(&a.pow(k as i64)?))
                .sub(&dk.mul(&xi));
            recursion.push((k, lhs == rhs));
        }
        rows.push(BracketFormulaRow {
            m,
            top_derivative,
            full_pairing,
            recursion,
        });
        prev = cur;
    }
    Ok(rows)
}

/// A pair (i, j) certifying dim 𝔏⁻(V) = ∞: i ≠ j, p_ij ≠ 1 or p_ji ≠ 1, and
/// ord(p_ii^{-1}) ∈ {1, ∞}. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub ord_a: Order,
}

impl Witness {
    pub fn reason(&self) -> &'static str {
        match self.ord_a {
            Order::Finite(_) => "p_ii = 1 while p_ij or p_ji is not 1, so l_i^m[j] is nonzero for every m",
            Order::Infinite => "p_ii has infinite order while p_ij or p_ji is not 1, so l_i^m[j] is nonzero for every m",
        }
    }
}

pub fn infinite_witness(b: &Bicharacter) -> Result<Option<Witness>, Error> {
    let n = b.rank();
    for i in 0..n {
        let ord_a = b.entry_inv(i, i).order()?;
        if !matches!(ord_a, Order::Finite(1) | Order::Infinite) {
            continue;
        }
        for j in 0..n {
            if j != i && (!b.entry_inv(i, j).is_one() || !b.entry_inv(j, i).is_one()) {
                return Ok(Some(Witness { i, j, ord_a }));
            }
        }
    }
    Ok(None)
}

/// Truncated span of 𝔏(V) or 𝔏⁻(V).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSpan {
    pub kind: BracketKind,
    pub max_degree: usize,
    /// A basis of each graded piece, by total degree.
    pub by_degree: BTreeMap<usize, Vec<Element>>,
    pub dims: BTreeMap<usize, usize>,
}

impl LieSpan {
    pub fn dim(&self, d: usize) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

/// Closure of {x_1, …, x_n} under the bracket, restricted to total degree ≤ D.
/// Each pair of basis elements is bracketed once in each order.
pub fn lie_dims(alg: &mut NicholsAlgebra, kind: BracketKind, max_degree: usize) -> Result<LieSpan, Error> {
    let b = alg.bicharacter().clone();
    let n = b.rank();
    let mut basis: Vec<(LatticeVector, Element)> = Vec::new();
    let mut spans: BTreeMap<LatticeVector, Echelon> = BTreeMap::new();
    let mut try_add = |alg: &mut NicholsAlgebra,
                       basis: &mut Vec<(LatticeVector, Element)>,
                       mu: LatticeVector,
                       e: Element|
     -> Result<(), Error> {
        if e.is_zero() {
            return Ok(());
        }
        let v = alg.coordinates(&mu, &e)?;
        if spans.entry(mu.clone()).or_default().insert(v) {
            basis.push((mu, e));
        }
        Ok(())
    };
    if max_degree >= 1 {
        for i in 0..n {
            try_add(alg, &mut basis, LatticeVector::unit(n, i), Element::letter(&b, i))?;
        }
    }
    let mut k = 0;
    while k < basis.len() {
        for j in 0..=k {
            let (dk, ek) = basis[k].clone();
            let (dj, ej) = basis[j].clone();
            let mu = &dk + &dj;
            if mu.total() as usize > max_degree {
                continue;
            }
            try_add(alg, &mut basis, mu.clone(), bracket(&b, kind, &ek, &ej)?)?;
            if j != k {
                try_add(alg, &mut basis, mu, bracket(&b, kind, &ej, &ek)?)?;
            }
        }
        k += 1;
    }
    let mut by_degree: BTreeMap<usize, Vec<Element>> = BTreeMap::new();
    for (mu, e) in basis {
        by_degree.entry(mu.total() as usize).or_default().push(e);
    }
    let dims = by_degree.iter().map(|(&d, v)| (d, v.len())).collect();
    Ok(LieSpan {
        kind,
        max_degree,
        by_degree,
        dims,
    })
}
