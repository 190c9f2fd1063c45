//! The braided tensor algebra on x_1..x_n with diagonal braiding.
//!
//! Elements are finite combinations of words. The skew derivations
//! ⟨y_i, −⟩ are the pairing with the dual generators and satisfy
//!
//! ```text
//! ⟨y_i, uv⟩ = ⟨y_i, u⟩v + g_i^{-1}.u ⟨y_i, v⟩,     g_i^{-1}.x_j = p_ij^{-1} x_j,
//! ```
//!
//! and an element of positive degree vanishes in the Nichols algebra exactly
//! when every ⟨y_i, u⟩ vanishes there.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::lattice::{Bicharacter, LatticeVector};
use crate::scalars::Scalar;
use crate::words::Word;

/// Finite Scalar-weighted combination of words; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

/// The two bracket operations: `[x, y] = yx − p_{yx} xy` and `[x, y]⁻ = yx − xy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BracketKind {
    Braided,
    Minus,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn from_term(w: Word, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_word(b: &Bicharacter, w: Word) -> Self {
        Self::from_term(w, b.one())
    }

    pub fn letter(b: &Bicharacter, i: usize) -> Self {
        Self::from_word(b, Word::letter(i))
    }

    /// The unit (empty word).
    pub fn unit(b: &Bicharacter) -> Self {
        Self::from_word(b, Word::empty())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::from_term(Word::empty(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let s = x.add_ref(&c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul_ref(c))).collect(),
        }
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.mul_ref(b));
            }
        }
        out
    }

    pub fn pow(&self, b: &Bicharacter, k: usize) -> Element {
        let mut acc = Element::unit(b);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The common multidegree of all words, if there is one.
    pub fn multidegree(&self, n: usize) -> Option<LatticeVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.multidegree(n);
        it.all(|w| w.multidegree(n) == first).then_some(first)
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.is_zero() || self.multidegree(n).is_some()
    }

    /// Splits into multidegree components.
    pub fn components(&self, n: usize) -> BTreeMap<LatticeVector, Element> {
        let mut out: BTreeMap<LatticeVector, Element> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.multidegree(n)).or_default().add_term(w.clone(), c.clone());
        }
        out
    }

    /// Greatest and least words present.
    pub fn max_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn min_word(&self) -> Option<&Word> {
        self.terms.keys().next()
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> Option<&Scalar> {
        self.terms.get(&Word::empty())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}", w)?;
            } else if w.is_empty() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*{}", c, w)?;
            }
        }
        Ok(())
    }
}

/// χ(e_i, deg w)^{-1}, the scalar by which g_i^{-1} acts on the word `w`.
fn grouplike_factor(b: &Bicharacter, i: usize, w: &[u8]) -> Scalar {
    let mut acc = b.one();
    for &l in w {
        acc = acc.mul_ref(b.entry_inv(i, l as usize));
    }
    acc
}

/// g_i^{-1}.u: each word w is scaled by χ(e_i, deg w)^{-1}.
pub fn grouplike_act_inv(b: &Bicharacter, i: usize, u: &Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in u.terms() {
        out.add_term(w.clone(), c.mul_ref(&grouplike_factor(b, i, &w.0)));
    }
    out
}

/// ⟨y_i, w⟩ for a single word: the sum over occurrences of x_i, each
/// weighted by g_i^{-1} acting on the prefix before it.
pub fn derive_word(b: &Bicharacter, i: usize, w: &Word) -> Element {
    let mut out = Element::zero();
    let mut prefix_factor = b.one();
    for (p, &l) in w.0.iter().enumerate() {
        if l as usize == i {
            let mut rest = w.0.clone();
            rest.remove(p);
            out.add_term(Word(rest), prefix_factor.clone());
        }
        prefix_factor = prefix_factor.mul_ref(b.entry_inv(i, l as usize));
    }
    out
}

/// The skew derivation ⟨y_i, −⟩, lowering total degree by one.
pub fn derive(b: &Bicharacter, i: usize, u: &Element) -> Element {
    let mut out = Element::zero();
    for (w, c) in u.terms() {
        for (v, d) in derive_word(b, i, w).terms() {
            out.add_term(v.clone(), d.mul_ref(c));
        }
    }
    out
}

/// ⟨y_{i₁}…y_{i_k}, u⟩ = ⟨y_{i₁}, ⟨y_{i₂}, … ⟨y_{i_k}, u⟩…⟩⟩: the rightmost
/// letter acts innermost.
pub fn pairing(b: &Bicharacter, y_word: &Word, u: &Element) -> Element {
    let mut cur = u.clone();
    for &l in y_word.0.iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = derive(b, l as usize, &cur);
    }
    cur
}

/// Decides u = 0 in the Nichols algebra by recursing on the derivations
/// down to degree zero.
pub fn is_zero_nichols(b: &Bicharacter, u: &Element) -> Result<bool, Error> {
    if u.constant_term().is_some() {
        return Err(Error::DegreeZeroComponent);
    }
    let mut known_zero: BTreeSet<Element> = BTreeSet::new();
    Ok(zero_rec(b, u, &mut known_zero))
}

fn zero_rec(b: &Bicharacter, u: &Element, known_zero: &mut BTreeSet<Element>) -> bool {
    if u.is_zero() || known_zero.contains(u) {
        return true;
    }
    for i in 0..b.rank() {
        let d = derive(b, i, u);
        if d.constant_term().is_some() {
            return false;
        }
        if !zero_rec(b, &d, known_zero) {
            return false;
        }
    }
    known_zero.insert(u.clone());
    true
}

/// `[x, y] = yx − p_{yx} xy` (braided) or `[x, y]⁻ = yx − xy` (minus).
pub fn bracket(b: &Bicharacter, kind: BracketKind, x: &Element, y: &Element) -> Result<Element, Error> {
    if x.is_zero() || y.is_zero() {
        return Ok(Element::zero());
    }
    let yx = y.mul(x);
    let xy = x.mul(y);
    match kind {
        BracketKind::Minus => Ok(yx.sub(&xy)),
        BracketKind::Braided => {
            let n = b.rank();
            let dx = x.multidegree(n).ok_or(Error::NotHomogeneous)?;
            let dy = y.multidegree(n).ok_or(Error::NotHomogeneous)?;
            let p = b.chi(&dy, &dx)?;
            Ok(yx.sub(&xy.scale(&p)))
        }
    }
}

/// The non-associative word [u]: letters are themselves, a Lyndon word
/// u = vw (Shirshov split) maps to [w][v] − p_{wv}[v][w], and any other word
/// to the left-nested braided bracket of its Lyndon factors.
pub fn bracket_of_word(b: &Bicharacter, u: &Word) -> Element {
    let mut memo = BTreeMap::new();
    bracket_of_word_memo(b, u, &mut memo)
}

pub(crate) fn bracket_of_word_memo(b: &Bicharacter, u: &Word, memo: &mut BTreeMap<Word, Element>) -> Element {
    if let Some(e) = memo.get(u) {
        return e.clone();
    }
    let out = if u.len() <= 1 {
        Element::from_word(b, u.clone())
    } else if u.is_lyndon() {
        let (v, w) = u.shirshov().expect("Lyndon word of length ≥ 2");
        let bv = bracket_of_word_memo(b, &v, memo);
        let bw = bracket_of_word_memo(b, &w, memo);
        bracket(b, BracketKind::Braided, &bv, &bw).expect("super-letters are homogeneous")
    } else {
        let factors = u.lyndon_factorization();
        let mut acc = bracket_of_word_memo(b, &factors[0], memo);
        for l in &factors[1..] {
            let bl = bracket_of_word_memo(b, l, memo);
            acc = bracket(b, BracketKind::Braided, &acc, &bl).expect("homogeneous");
        }
        acc
    };
    memo.insert(u.clone(), out.clone());
    out
}

/// Both sides of the braided Jacobi identity
/// `[[u,v],w] = [u,[v,w]] + p_vw^{-1}[[u,w],v] + (p_wv − p_vw^{-1})·v·[u,w]`.
pub fn jacobi_sides(b: &Bicharacter, u: &Element, v: &Element, w: &Element) -> Result<(Element, Element), Error> {
    use BracketKind::Braided;
    let n = b.rank();
    let (Some(dv), Some(dw)) = (v.multidegree(n), w.multidegree(n)) else {
        return Err(Error::NotHomogeneous);
    };
    let p_vw_inv = b.chi(&dv, &dw)?.inv()?;
    let p_wv = b.chi(&dw, &dv)?;
    let lhs = bracket(b, Braided, &bracket(b, Braided, u, v)?, w)?;
    let uw = bracket(b, Braided, u, w)?;
    let rhs = bracket(b, Braided, u, &bracket(b, Braided, v, w)?)?
        .add(&bracket(b, Braided, &uw, v)?.scale(&p_vw_inv))
        .add(&v.mul(&uw).scale(&p_wv.sub_ref(&p_vw_inv)));
    Ok((lhs, rhs))
}

/// Both sides of the product rule `[u, v·w] = p_wu [u,v]·w + v·[u,w]`.
pub fn product_rule_sides(b: &Bicharacter, u: &Element, v: &Element, w: &Element) -> Result<(Element, Element), Error> {
    use BracketKind::Braided;
    let n = b.rank();
    let (Some(du), Some(dw)) = (u.multidegree(n), w.multidegree(n)) else {
        return Err(Error::NotHomogeneous);
    };
    let p_wu = b.chi(&dw, &du)?;
    let lhs = bracket(b, Braided, u, &v.mul(w))?;
    let rhs = bracket(b, Braided, u, v)?
        .mul(w)
        .scale(&p_wu)
        .add(&v.mul(&bracket(b, Braided, u, w)?));
    Ok((lhs, rhs))
}

/// Builds an element from `(coefficient, word)` pairs.
pub fn element_from_terms<I>(terms: I) -> Element
where
    I: IntoIterator<Item = (Scalar, Word)>,
{
    let mut e = Element::zero();
    for (c, w) in terms {
        e.add_term(w, c);
    }
    e
}

/// Words of `u` in increasing order with their coefficients.
pub fn sorted_terms(u: &Element) -> Vec<(Word, Scalar)> {
    u.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}
