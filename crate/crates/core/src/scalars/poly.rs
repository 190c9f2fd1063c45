//! Sparse multivariate Laurent polynomials with cyclotomic coefficients,
//! plus the gcd machinery that keeps rational functions in lowest terms.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::cyclo::Cyclo;

pub(crate) type Exponents = Vec<i32>;

/// Terms sorted by exponent vector, greatest (lex) first; no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct Poly {
    pub(crate) terms: Vec<(Exponents, Cyclo)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Cyclo, nvars: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: vec![(vec![0; nvars], c)],
        }
    }

    pub fn monomial(exp: Exponents, c: Cyclo) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: vec![(exp, c)] }
    }

    fn from_map(map: BTreeMap<Exponents, Cyclo>) -> Self {
        Poly {
            terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant (possibly zero) polynomial.
    pub fn as_constant(&self) -> Option<Cyclo> {
        match self.terms.as_slice() {
            [] => Some(Cyclo::zero()),
            [(e, c)] if e.iter().all(|&x| x == 0) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn leading(&self) -> Option<&(Exponents, Cyclo)> {
        self.terms.first()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                core::cmp::Ordering::Greater => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                core::cmp::Ordering::Less => {
                    out.push((eb.clone(), cb.clone()));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let s = ca.add(cb);
                    if !s.is_zero() {
                        out.push((ea.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Cyclo, phi: &[BigInt]) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.mul(c, phi)))
                .collect(),
        }
    }

    pub fn shift(&self, by: &[i32]) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self, phi: &[BigInt]) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.shift(e).scale(c, phi);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.shift(e).scale(c, phi);
        }
        let mut map: BTreeMap<Exponents, Cyclo> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let p = ca.mul(cb, phi);
                match map.get_mut(&e) {
                    Some(v) => *v = v.add(&p),
                    None => {
                        map.insert(e, p);
                    }
                }
            }
        }
        Self::from_map(map)
    }

    pub fn pow(&self, e: u64, phi: &[BigInt]) -> Self {
        let mut base = self.clone();
        let mut acc: Option<Poly> = None;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base, phi),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, phi);
            }
        }
        acc.unwrap_or_else(|| {
            let nv = self.terms.first().map_or(0, |t| t.0.len());
            Poly::constant(Cyclo::one(), nv)
        })
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Vec::new();
        };
        let mut m = first.clone();
        for (e, _) in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    /// Splits `self = x^m · p0` with `p0` an ordinary polynomial having no
    /// monomial factor.
    pub fn split_monomial(&self) -> (Exponents, Poly) {
        let m = self.min_exponents();
        let neg: Vec<i32> = m.iter().map(|x| -x).collect();
        (m, self.shift(&neg))
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| x as i64).sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> i32 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self, phi: &[BigInt]) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => {
                let inv = c.inv(phi).expect("nonzero leading coefficient");
                self.scale(&inv, phi)
            }
        }
    }

    /// Exact division of ordinary polynomials; `None` if `b` does not divide
    /// `self`.
    pub fn div_exact(&self, b: &Self, phi: &[BigInt]) -> Option<Self> {
        let (eb, cb) = b.leading()?;
        if b.terms.len() == 1 {
            let inv = cb.inv(phi)?;
            let neg: Vec<i32> = eb.iter().map(|x| -x).collect();
            let q = self.shift(&neg).scale(&inv, phi);
            if q.terms.iter().any(|(e, _)| e.iter().any(|&x| x < 0)) {
                return None;
            }
            return Some(q);
        }
        let inv_cb = cb.inv(phi)?;
        let mut q_terms: Vec<(Exponents, Cyclo)> = Vec::new();
        let mut r = self.clone();
        while let Some((er, cr)) = r.leading() {
            if er.iter().zip(eb).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponents = er.iter().zip(eb).map(|(a, b)| a - b).collect();
            let c = cr.mul(&inv_cb, phi);
            let t = Poly::monomial(e.clone(), c.clone());
            r = r.sub(&t.mul(b, phi));
            q_terms.push((e, c));
        }
        Some(Poly { terms: q_terms })
    }

    /// Monic gcd of two ordinary polynomials (nonnegative exponents).
    pub fn gcd(&self, other: &Self, phi: &[BigInt]) -> Self {
        let nv = self
            .terms
            .first()
            .or(other.terms.first())
            .map_or(0, |t| t.0.len());
        gcd_rec(self, other, nv, phi)
    }
}

fn one(nv: usize) -> Poly {
    Poly::constant(Cyclo::one(), nv)
}

fn main_variable(a: &Poly, b: &Poly) -> Option<usize> {
    let nv = a.terms.first().or(b.terms.first())?.0.len();
    (0..nv).find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
}

/// Coefficients of `p` viewed as a polynomial in `var`, lowest degree first.
fn to_univariate(p: &Poly, var: usize) -> Vec<Poly> {
    let deg = p.degree_in(var).max(0) as usize;
    let mut maps: Vec<BTreeMap<Exponents, Cyclo>> = vec![BTreeMap::new(); deg + 1];
    for (e, c) in &p.terms {
        let k = e[var] as usize;
        let mut e2 = e.clone();
        e2[var] = 0;
        maps[k].insert(e2, c.clone());
    }
    maps.into_iter().map(Poly::from_map).collect()
}

fn from_univariate(coeffs: &[Poly], var: usize, nv: usize) -> Poly {
    let mut acc = Poly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut shift = vec![0; nv];
        shift[var] = k as i32;
        acc = acc.add(&c.shift(&shift));
    }
    acc
}

fn trim_uni(u: &mut Vec<Poly>) {
    while u.last().is_some_and(Poly::is_zero) {
        u.pop();
    }
}

fn content(u: &[Poly], nv: usize, phi: &[BigInt]) -> Poly {
    let mut g = Poly::zero();
    for c in u {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, c, nv, phi);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part, normalized so the leading coefficient's leading term is 1.
fn primitive_part(u: &[Poly], nv: usize, phi: &[BigInt]) -> Vec<Poly> {
    let c = content(u, nv, phi);
    let mut out: Vec<Poly> = u
        .iter()
        .map(|x| x.div_exact(&c, phi).expect("content divides coefficients"))
        .collect();
    trim_uni(&mut out);
    if let Some(lc) = out.last().and_then(|p| p.leading()).map(|t| t.1.clone()) {
        if !lc.is_one() {
            let inv = lc.inv(phi).expect("nonzero");
            for x in &mut out {
                *x = x.scale(&inv, phi);
            }
        }
    }
    out
}

/// Sparse pseudo-remainder of `a` by `b` over the coefficient ring.
fn pseudo_rem(a: &[Poly], b: &[Poly], phi: &[BigInt]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    trim_uni(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let d = dr - db;
        for x in r.iter_mut() {
            *x = x.mul(lb, phi);
        }
        for (j, bj) in b.iter().enumerate() {
            let t = lr.mul(bj, phi);
            r[d + j] = r[d + j].sub(&t);
        }
        debug_assert!(r[dr].is_zero());
        trim_uni(&mut r);
    }
    r
}

fn gcd_rec(a: &Poly, b: &Poly, nv: usize, phi: &[BigInt]) -> Poly {
    if a.is_zero() {
        return b.monic(phi);
    }
    if b.is_zero() {
        return a.monic(phi);
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return one(nv);
    }
    let Some(var) = main_variable(a, b) else {
        return one(nv);
    };
    let ua = to_univariate(a, var);
    let ub = to_univariate(b, var);
    if ua.len() == 1 {
        // `a` does not involve `var`.
        return gcd_rec(a, &content(&ub, nv, phi), nv, phi);
    }
    if ub.len() == 1 {
        return gcd_rec(&content(&ua, nv, phi), b, nv, phi);
    }
    let ca = content(&ua, nv, phi);
    let cb = content(&ub, nv, phi);
    let c = gcd_rec(&ca, &cb, nv, phi);
    let mut p = primitive_part(&ua, nv, phi);
    let mut q = primitive_part(&ub, nv, phi);
    if p.len() < q.len() {
        core::mem::swap(&mut p, &mut q);
    }
    while !q.is_empty() {
        let r = pseudo_rem(&p, &q, phi);
        p = q;
        q = if r.is_empty() { r } else { primitive_part(&r, nv, phi) };
    }
    let g = from_univariate(&primitive_part(&p, nv, phi), var, nv);
    g.mul(&c, phi).monic(phi)
}

impl Poly {
    pub(crate) fn fmt_with(&self, names: &[alloc::string::String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            if is_const {
                write!(f, "{}", c)?;
                continue;
            }
            let mut first = true;
            if !c.is_one() {
                write!(f, "{}", c)?;
                first = false;
            }
            for (v, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if x == 1 {
                    write!(f, "{}", names[v])?;
                } else {
                    write!(f, "{}^{}", names[v], x)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::cyclo::cyclotomic_polynomial;
    use super::*;

    fn mono(e: &[i32], c: i64) -> Poly {
        Poly::monomial(e.to_vec(), Cyclo::from_int(c))
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        let phi = cyclotomic_polynomial(1);
        // (x + y)(x - 1) and (x + y)(y + 2)
        let xy = mono(&[1, 0], 1).add(&mono(&[0, 1], 1));
        let a = xy.mul(&mono(&[1, 0], 1).add(&mono(&[0, 0], -1)), &phi);
        let b = xy.mul(&mono(&[0, 1], 1).add(&mono(&[0, 0], 2)), &phi);
        let g = a.gcd(&b, &phi);
        assert_eq!(g, xy);
    }

    #[test]
    fn exact_division_roundtrip() {
        let phi = cyclotomic_polynomial(3);
        let a = mono(&[2], 1).add(&mono(&[0], -1));
        let b = mono(&[1], 1).add(&mono(&[0], 1));
        let q = a.div_exact(&b, &phi).unwrap();
        assert_eq!(q, mono(&[1], 1).add(&mono(&[0], -1)));
        assert!(b.div_exact(&a, &phi).is_none());
    }
}
