//! The Nichols algebra truncated at a total degree D.
//!
//! Each multidegree component is described by the pairing matrix between
//! x-words and y-words. Its rank is the dimension of 𝔅(V) in that
//! multidegree, and a word is standard exactly when its column is
//! independent of the columns of all greater words.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::balgebra::{bracket_of_word_memo, Element};
use crate::error::Error;
use crate::lattice::{Bicharacter, LatticeVector};
use crate::lie::{infinite_witness, lie_dims, LieSpan, Witness};
use crate::linalg::Echelon;
use crate::scalars::{Order, Scalar};
use crate::weyl::{generate_groupoid, verdict_of, ArithmeticVerdict, GroupoidState};
use crate::balgebra::BracketKind;
use crate::words::{lyndon_enum, multidegrees_of_total, words_of_multidegree, Word};

/// Pairing data for one multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponent {
    pub multidegree: LatticeVector,
    /// All words of this multidegree, descending.
    pub words: Vec<Word>,
    /// `gram[r][c] = ⟨y-word_r, words[c]⟩`, where y-word_r is the reversal of `words[r]`.
    pub gram: Vec<Vec<Scalar>>,
    pub rank: usize,
    /// Standard words, descending.
    pub standard: Vec<Word>,
}

#[derive(Clone, Debug)]
struct ComponentData {
    words: Vec<Word>,
    index: BTreeMap<Word, usize>,
    /// `cols[c][r] = ⟨y_{words[r]}, words[c]⟩`.
    cols: Vec<Vec<Scalar>>,
    standard: Vec<bool>,
    /// Row indices on which the standard columns are independent.
    rows: Vec<usize>,
}

impl ComponentData {
    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Lazily computed components of 𝔅(V), shared by every query on one braiding.
#[derive(Clone, Debug)]
pub struct NicholsAlgebra {
    b: Bicharacter,
    comps: BTreeMap<LatticeVector, ComponentData>,
}

impl NicholsAlgebra {
    pub fn new(b: &Bicharacter) -> Self {
        NicholsAlgebra {
            b: b.clone(),
            comps: BTreeMap::new(),
        }
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.b
    }

    fn ensure(&mut self, mu: &LatticeVector) -> &ComponentData {
        if !self.comps.contains_key(mu) {
            for i in 0..mu.rank() {
                if mu.0[i] > 0 {
                    let lower = mu - &LatticeVector::unit(mu.rank(), i);
                    self.ensure(&lower);
                }
            }
            let data = self.compute(mu);
            self.comps.insert(mu.clone(), data);
        }
        &self.comps[mu]
    }

    fn compute(&self, mu: &LatticeVector) -> ComponentData {
        let n = self.b.rank();
        let words = words_of_multidegree(mu);
        let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let one = self.b.one();
        let zero = self.b.zero();
        let cols: Vec<Vec<Scalar>> = if mu.is_zero() {
            vec![vec![one]]
        } else {
            let lower: Vec<Option<(LatticeVector, &ComponentData)>> = (0..n)
                .map(|i| {
                    (mu.0[i] > 0).then(|| {
                        let l = mu - &LatticeVector::unit(n, i);
                        let d = &self.comps[&l];
                        (l, d)
                    })
                })
                .collect();
            // Row r is the y-word words[r] = r'·i; the letter i acts first.
            let row_split: Vec<(usize, usize)> = words
                .iter()
                .map(|y| {
                    let i = *y.0.last().expect("positive degree") as usize;
                    let r = Word(y.0[..y.len() - 1].to_vec());
                    let (_, d) = lower[i].as_ref().expect("letter present");
                    (i, d.index[&r])
                })
                .collect();
            words
                .iter()
                .map(|w| {
                    // ⟨y_i, w⟩ expanded as (coefficient, index in the lower component).
                    let mut expansions: Vec<Vec<(Scalar, usize)>> = vec![Vec::new(); n];
                    for (i, exp) in expansions.iter_mut().enumerate() {
                        let Some((_, d)) = lower[i].as_ref() else { continue };
                        let mut f = self.b.one();
                        for (p, &l) in w.0.iter().enumerate() {
                            if l as usize == i {
                                let mut rest = w.0.clone();
                                rest.remove(p);
                                exp.push((f.clone(), d.index[&Word(rest)]));
                            }
                            f = f.mul_ref(self.b.entry_inv(i, l as usize));
                        }
                    }
                    row_split
                        .iter()
                        .map(|&(i, r)| {
                            let d = lower[i].as_ref().expect("letter present").1;
                            let mut acc = zero.clone();
                            for (f, c) in &expansions[i] {
                                let x = &d.cols[*c][r];
                                if !x.is_zero() {
                                    acc = acc.add_ref(&f.mul_ref(x));
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect()
        };
        let mut ech = Echelon::new();
        let standard: Vec<bool> = cols.iter().map(|c| ech.insert(c.clone())).collect();
        let rank = ech.rank();
        let std_idx: Vec<usize> = (0..words.len()).filter(|&c| standard[c]).collect();
        let mut row_ech = Echelon::new();
        let mut rows = Vec::with_capacity(rank);
        for r in 0..words.len() {
            if rows.len() == rank {
                break;
            }
            let v: Vec<Scalar> = std_idx.iter().map(|&c| cols[c][r].clone()).collect();
            if row_ech.insert(v) {
                rows.push(r);
            }
        }
        ComponentData {
            words,
            index,
            cols,
            standard,
            rows,
        }
    }

    pub fn graded_component(&mut self, mu: &LatticeVector) -> Result<GradedComponent, Error> {
        self.check(mu)?;
        let d = self.ensure(mu);
        let gram = d
            .words
            .iter()
            .map(|w| {
                let r = d.index[&w.reversed()];
                d.cols.iter().map(|col| col[r].clone()).collect()
            })
            .collect();
        Ok(GradedComponent {
            multidegree: mu.clone(),
            words: d.words.clone(),
            gram,
            rank: d.rank(),
            standard: d.words.iter().zip(&d.standard).filter(|(_, &s)| s).map(|(w, _)| w.clone()).collect(),
        })
    }

    fn check(&self, mu: &LatticeVector) -> Result<(), Error> {
        if mu.rank() != self.b.rank() {
            return Err(Error::RankMismatch {
                expected: self.b.rank(),
                found: mu.rank(),
            });
        }
        if !mu.is_nonnegative() {
            return Err(Error::NotHomogeneous);
        }
        Ok(())
    }

    /// dim 𝔅(V)_μ.
    pub fn dimension(&mut self, mu: &LatticeVector) -> Result<usize, Error> {
        self.check(mu)?;
        Ok(self.ensure(mu).rank())
    }

    pub fn is_standard(&mut self, w: &Word) -> Result<bool, Error> {
        w.check_alphabet(self.b.rank())?;
        let mu = w.multidegree(self.b.rank());
        let d = self.ensure(&mu);
        Ok(d.standard[d.index[w]])
    }

    /// Coordinates of a homogeneous element of multidegree μ: its pairings
    /// with a fixed set of y-words on which the pairing is nondegenerate.
    pub fn coordinates(&mut self, mu: &LatticeVector, u: &Element) -> Result<Vec<Scalar>, Error> {
        self.check(mu)?;
        let n = self.b.rank();
        let zero = self.b.zero();
        let d = self.ensure(mu);
        let mut v = vec![zero; d.rows.len()];
        for (w, c) in u.terms() {
            if w.multidegree(n) != *mu {
                return Err(Error::NotHomogeneous);
            }
            let col = &d.cols[d.index[w]];
            for (k, &r) in d.rows.iter().enumerate() {
                if !col[r].is_zero() {
                    v[k] = v[k].add_ref(&c.mul_ref(&col[r]));
                }
            }
        }
        Ok(v)
    }

    /// u = 0 in 𝔅(V), for u without degree-0 part.
    pub fn is_zero(&mut self, u: &Element) -> Result<bool, Error> {
        if u.constant_term().is_some() {
            return Err(Error::DegreeZeroComponent);
        }
        for (mu, part) in u.components(self.b.rank()) {
            if self.coordinates(&mu, &part)?.iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Standard Lyndon words of length ≤ `max_degree`, one datum each, ordered
    /// by total degree and then by word. Heights are left unchecked.
    pub fn hard_super_letters(&mut self, max_degree: usize) -> Result<Vec<RootDatum>, Error> {
        let n = self.b.rank();
        let mut out = Vec::new();
        for d in 1..=max_degree {
            let mut level = Vec::new();
            for mu in multidegrees_of_total(n, d) {
                let comp = self.ensure(&mu);
                let found: Vec<Word> = comp
                    .words
                    .iter()
                    .zip(&comp.standard)
                    .filter(|(w, &s)| s && w.is_lyndon())
                    .map(|(w, _)| w.clone())
                    .collect();
                for w in found {
                    let p_uu = self.b.chi(&mu, &mu)?;
                    let ord_puu = p_uu.order()?;
                    level.push(RootDatum {
                        root: mu.clone(),
                        lyndon: w,
                        p_uu,
                        ord_puu,
                        height: Height::Unchecked,
                    });
                }
            }
            level.sort_by(|a, b| a.lyndon.cmp(&b.lyndon));
            out.extend(level);
        }
        Ok(out)
    }

    /// Whether `target` (homogeneous of multidegree μ) is a combination of
    /// super-words of multidegree μ in super-letters [v] with v > `u`.
    pub fn reduces_to_greater(&mut self, target: &Element, mu: &LatticeVector, u: &Word) -> Result<bool, Error> {
        let t = self.coordinates(mu, target)?;
        if t.iter().all(Scalar::is_zero) {
            return Ok(true);
        }
        let mut ech = Echelon::new();
        for sw in super_words_above(&self.b, u, mu) {
            ech.insert(self.coordinates(mu, &sw)?);
            if ech.rank() == t.len() {
                return Ok(true);
            }
        }
        Ok(ech.contains(&t))
    }

    /// Certifies heights: for ord(p_uu) = t ≥ 2 and |u|·t ≤ D, the height is t
    /// when [u]^t reduces to greater super-words and infinite otherwise.
    pub fn check_heights(&mut self, roots: &[RootDatum], max_degree: usize) -> Result<Vec<RootDatum>, Error> {
        let mut memo = BTreeMap::new();
        let mut out = Vec::with_capacity(roots.len());
        for r in roots {
            let mut r = r.clone();
            r.height = match r.ord_puu {
                Order::Infinite | Order::Finite(1) => Height::Infinite,
                Order::Finite(t) => {
                    if r.lyndon.len() * t as usize > max_degree {
                        Height::Unchecked
                    } else {
                        let su = bracket_of_word_memo(&self.b, &r.lyndon, &mut memo);
                        let power = su.pow(&self.b, t as usize);
                        let mu = r.root.scaled(t as i64);
                        if self.reduces_to_greater(&power, &mu, &r.lyndon)? {
                            Height::Finite(t)
                        } else {
                            Height::Infinite
                        }
                    }
                }
            };
            out.push(r);
        }
        Ok(out)
    }

    /// coefficient(d) = dim 𝔅(V)_{(d)} for d ≤ D.
    pub fn hilbert(&mut self, max_degree: usize) -> HilbertSeries {
        let n = self.b.rank();
        let coefficients = (0..=max_degree)
            .map(|d| {
                multidegrees_of_total(n, d)
                    .iter()
                    .map(|mu| self.ensure(mu).rank() as u64)
                    .sum()
            })
            .collect();
        HilbertSeries { coefficients }
    }
}

/// Every product [v₁]⋯[v_k] (any order) of super-letters v_i > `u` with
/// total multidegree μ.
pub fn super_words_above(b: &Bicharacter, u: &Word, mu: &LatticeVector) -> Vec<Element> {
    let n = b.rank();
    let letters: Vec<(Word, LatticeVector)> = lyndon_enum(n, mu.total().max(0) as usize)
        .into_iter()
        .filter(|v| v > u)
        .map(|v| {
            let d = v.multidegree(n);
            (v, d)
        })
        .filter(|(_, d)| d.fits_in(mu))
        .collect();
    let mut memo = BTreeMap::new();
    let brackets: Vec<Element> = letters.iter().map(|(v, _)| bracket_of_word_memo(b, v, &mut memo)).collect();
    let mut out = Vec::new();
    fn rec(
        rem: &LatticeVector,
        acc: &Element,
        letters: &[(Word, LatticeVector)],
        brackets: &[Element],
        out: &mut Vec<Element>,
    ) {
        if rem.is_zero() {
            out.push(acc.clone());
            return;
        }
        for (k, (_, d)) in letters.iter().enumerate() {
            if d.fits_in(rem) {
                rec(&(rem - d), &acc.mul(&brackets[k]), letters, brackets, out);
            }
        }
    }
    if !mu.is_zero() {
        rec(mu, &Element::unit(b), &letters, &brackets, &mut out);
    }
    out
}

/// Hard super-letters of length ≤ D found directly from the definition:
/// [u] is hard when it is not a combination of same-degree super-words in
/// greater super-letters. Linear algebra uses the full pairing against all
/// y-words, independent of the standard-word machinery.
pub fn hard_super_letters_by_reduction(b: &Bicharacter, max_degree: usize) -> Vec<Word> {
    let n = b.rank();
    let mut memo = BTreeMap::new();
    let mut out = Vec::new();
    for u in lyndon_enum(n, max_degree) {
        let mu = u.multidegree(n);
        let ys = words_of_multidegree(&mu);
        let target = pairing_vector(b, &bracket_of_word_memo(b, &u, &mut memo), &ys);
        if target.iter().all(Scalar::is_zero) {
            continue;
        }
        let mut ech = Echelon::new();
        for sw in super_words_above(b, &u, &mu) {
            ech.insert(pairing_vector(b, &sw, &ys));
        }
        if !ech.contains(&target) {
            out.push(u);
        }
    }
    out
}

/// ⟨y, u⟩ for each y-word in `ys` (all of the same length as `u`'s words).
pub fn pairing_vector(b: &Bicharacter, u: &Element, ys: &[Word]) -> Vec<Scalar> {
    let mut memo: BTreeMap<Vec<u8>, Element> = BTreeMap::new();
    fn suffix(b: &Bicharacter, u: &Element, s: &[u8], memo: &mut BTreeMap<Vec<u8>, Element>) -> Element {
        if s.is_empty() {
            return u.clone();
        }
        if let Some(e) = memo.get(s) {
            return e.clone();
        }
        let inner = suffix(b, u, &s[1..], memo);
        let e = crate::balgebra::derive(b, s[0] as usize, &inner);
        memo.insert(s.to_vec(), e.clone());
        e
    }
    ys.iter()
        .map(|y| {
            let e = suffix(b, u, &y.0, &mut memo);
            e.constant_term().cloned().unwrap_or_else(|| b.zero())
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Height {
    Finite(u64),
    Infinite,
    /// The degree cap is too small to certify.
    Unchecked,
}

/// A hard super-letter [u] and its root deg(u).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub root: LatticeVector,
    pub lyndon: Word,
    pub p_uu: Scalar,
    pub ord_puu: Order,
    pub height: Height,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Indexed by total degree 0..=D.
    pub coefficients: Vec<u64>,
}

impl HilbertSeries {
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn coefficient(&self, d: usize) -> u64 {
        self.coefficients.get(d).copied().unwrap_or(0)
    }
}

/// Expansion of ∏_u (1 + t^{|u|} + … + t^{(h_u−1)|u|}) through degree D;
/// `None` if some height is unchecked.
pub fn pbw_series(roots: &[RootDatum], max_degree: usize) -> Option<HilbertSeries> {
    let mut c = vec![0u64; max_degree + 1];
    c[0] = 1;
    for r in roots {
        let d = r.lyndon.len();
        let h = match r.height {
            Height::Finite(h) => h as usize,
            Height::Infinite => usize::MAX,
            Height::Unchecked => return None,
        };
        let mut next = vec![0u64; max_degree + 1];
        for (i, &x) in c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let mut k = 0usize;
            while k < h && i + k * d <= max_degree {
                next[i + k * d] += x;
                k += 1;
            }
        }
        c = next;
    }
    Some(HilbertSeries { coefficients: c })
}

/// Hard super-letters violating the conclusion that no m-infinity elements
/// exist and p_uu ≠ 1: `(p_uu = 1, m-infinity)`.
pub fn height_violations(roots: &[RootDatum]) -> (Vec<Word>, Vec<Word>) {
    let trivial = roots
        .iter()
        .filter(|r| r.p_uu.is_one())
        .map(|r| r.lyndon.clone())
        .collect();
    let m_inf = roots
        .iter()
        .filter(|r| matches!(r.ord_puu, Order::Finite(m) if m > 1) && r.height == Height::Infinite)
        .map(|r| r.lyndon.clone())
        .collect();
    (trivial, m_inf)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_degree: usize,
    pub cap_states: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_degree: 8,
            cap_states: crate::weyl::DEFAULT_CAP_STATES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimVerdict {
    /// Finite; the dimension when the caps allow computing it.
    Finite(Option<u64>),
    Infinite,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidStats {
    pub states: usize,
    pub arrows: usize,
    pub full: bool,
    pub finite: bool,
    pub truncated: bool,
}

#[derive(Clone, Debug)]
pub struct FinitenessReport {
    pub rank: usize,
    pub caps: Caps,
    pub groupoid: GroupoidStats,
    pub arithmetic: ArithmeticVerdict,
    /// ord(p_ii) and ord(p_ij p_ji) are all finite.
    pub orders_finite: bool,
    /// Hard super-letters through degree D, with certified heights.
    pub roots: Vec<RootDatum>,
    pub hilbert: HilbertSeries,
    pub pbw: Option<HilbertSeries>,
    /// ∏ ord χ(α, α) over the positive roots of the groupoid, when all finite.
    pub groupoid_dim: Option<u64>,
    pub dim_b: DimVerdict,
    pub dim_l: DimVerdict,
    pub dim_l_minus: DimVerdict,
    pub witness: Option<Witness>,
    pub trivial_self_braiding: Vec<Word>,
    pub m_infinity: Vec<Word>,
    pub lie: LieSpan,
    pub lie_minus: LieSpan,
}

/// Runs connectedness, the Weyl groupoid, roots, heights and the order
/// criteria, and combines them into verdicts for 𝔅(V), 𝔏(V) and 𝔏⁻(V).
pub fn decide_finiteness(b: &Bicharacter, caps: Caps) -> Result<FinitenessReport, Error> {
    if caps.max_degree == 0 || caps.cap_states == 0 {
        return Err(Error::InvalidCap);
    }
    let comps = b.components();
    if comps.len() > 1 {
        return Err(Error::Disconnected { components: comps });
    }
    let n = b.rank();
    let d_cap = caps.max_degree;
    let graph = generate_groupoid(b, &GroupoidState::standard(n), caps.cap_states)?;
    let groupoid = GroupoidStats {
        states: graph.states.len(),
        arrows: graph.arrows.len(),
        full: graph.full,
        finite: graph.finite,
        truncated: graph.truncated,
    };
    let arithmetic = verdict_of(&graph);

    let mut orders_finite = true;
    for i in 0..n {
        if !b.entry(i, i).order()?.is_finite() {
            orders_finite = false;
        }
        for j in i + 1..n {
            if !b.entry(i, j).mul_ref(b.entry(j, i)).order()?.is_finite() {
                orders_finite = false;
            }
        }
    }

    let mut alg = NicholsAlgebra::new(b);
    let roots = alg.hard_super_letters(d_cap)?;
    let roots = alg.check_heights(&roots, d_cap)?;
    let hilbert = alg.hilbert(d_cap);
    let pbw = pbw_series(&roots, d_cap);
    let (trivial_self_braiding, m_infinity) = height_violations(&roots);

    let groupoid_dim = match &arithmetic {
        ArithmeticVerdict::Yes(rs) => {
            let mut prod: Option<u64> = Some(1);
            for a in &rs.positive {
                prod = match (prod, b.chi(a, a)?.order()?) {
                    (Some(p), Order::Finite(k)) => p.checked_mul(k),
                    _ => None,
                };
            }
            prod
        }
        _ => None,
    };

    let lie = lie_dims(&mut alg, BracketKind::Braided, d_cap)?;
    let lie_minus = lie_dims(&mut alg, BracketKind::Minus, d_cap)?;
    let witness = if n >= 2 { infinite_witness(b)? } else { None };

    // dim 𝔅(V) = ∏ h_u, complete when the hard super-letters cover Δ⁺ within the cap.
    let certified_dim = |rs: Option<&crate::weyl::RootSet>| -> Option<(u64, usize)> {
        let found: Vec<&LatticeVector> = roots.iter().map(|r| &r.root).collect();
        if let Some(rs) = rs {
            if rs.positive.iter().any(|a| a.total() as usize > d_cap) {
                return None;
            }
            let mut fs: Vec<&LatticeVector> = found.clone();
            fs.sort();
            fs.dedup();
            if fs.len() != found.len() || fs.into_iter().cloned().collect::<alloc::collections::BTreeSet<_>>() != rs.positive {
                return None;
            }
        }
        let mut dim = 1u64;
        let mut top = 0usize;
        for r in &roots {
            let Height::Finite(h) = r.height else { return None };
            dim = dim.checked_mul(h)?;
            top += (h as usize - 1) * r.lyndon.len();
        }
        Some((dim, top))
    };
    let lie_total = |s: &LieSpan| s.dims.values().map(|&x| x as u64).sum::<u64>();

    let (dim_b, dim_l, dim_l_minus) = if n == 1 {
        match b.entry(0, 0).order()? {
            Order::Finite(1) => (DimVerdict::Infinite, DimVerdict::Finite(Some(1)), DimVerdict::Finite(Some(1))),
            Order::Infinite => (DimVerdict::Infinite, DimVerdict::Infinite, DimVerdict::Finite(Some(1))),
            Order::Finite(_) => match certified_dim(None) {
                Some((dim, top)) if top <= d_cap => (
                    DimVerdict::Finite(Some(dim)),
                    DimVerdict::Finite(Some(lie_total(&lie))),
                    DimVerdict::Finite(Some(lie_total(&lie_minus))),
                ),
                Some((dim, _)) => (DimVerdict::Finite(Some(dim)), DimVerdict::Finite(None), DimVerdict::Finite(Some(1))),
                None => (DimVerdict::Finite(None), DimVerdict::Finite(None), DimVerdict::Finite(Some(1))),
            },
        }
    } else {
        match &arithmetic {
            ArithmeticVerdict::No => (DimVerdict::Infinite, DimVerdict::Infinite, DimVerdict::Infinite),
            ArithmeticVerdict::Unknown => (DimVerdict::Unknown, DimVerdict::Unknown, DimVerdict::Unknown),
            ArithmeticVerdict::Yes(_) if !orders_finite => {
                (DimVerdict::Infinite, DimVerdict::Infinite, DimVerdict::Infinite)
            }
            ArithmeticVerdict::Yes(rs) => match certified_dim(Some(rs)) {
                Some((dim, top)) if top <= d_cap => (
                    DimVerdict::Finite(Some(dim)),
                    DimVerdict::Finite(Some(lie_total(&lie))),
                    DimVerdict::Finite(Some(lie_total(&lie_minus))),
                ),
                Some((dim, _)) => (DimVerdict::Finite(Some(dim)), DimVerdict::Finite(None), DimVerdict::Finite(None)),
                None => (DimVerdict::Finite(None), DimVerdict::Finite(None), DimVerdict::Finite(None)),
            },
        }
    };

    Ok(FinitenessReport {
        rank: n,
        caps,
        groupoid,
        arithmetic,
        orders_finite,
        roots,
        hilbert,
        pbw,
        groupoid_dim,
        dim_b,
        dim_l,
        dim_l_minus,
        witness,
        trivial_self_braiding,
        m_infinity,
        lie,
        lie_minus,
    })
}
