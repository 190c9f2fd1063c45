//! Elements of the cyclotomic field ℚ(ζ_N), stored as reduced polynomials
//! in `z` modulo the N-th cyclotomic polynomial.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer coefficients of Φ_N, lowest degree first.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // Φ_N = (z^N - 1) / ∏_{d | N, d < N} Φ_d
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            p = div_monic_exact(&p, &phi_d);
        }
    }
    p
}

fn div_monic_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r: Vec<BigInt> = a.to_vec();
    let dq = a.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = r[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

/// Element of ℚ[z]/Φ_N. Coefficients lowest degree first, trailing zeros
/// trimmed, so the zero element has no coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cyclo {
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut c = Cyclo { coeffs: vec![r] };
        c.trim();
        c
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Builds `Σ c_k z^k` and reduces it modulo `phi`.
    pub(crate) fn from_coeffs(coeffs: Vec<BigRational>, phi: &[BigInt]) -> Self {
        let mut c = Cyclo { coeffs };
        c.reduce(phi);
        c
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the element lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    fn reduce(&mut self, phi: &[BigInt]) {
        let d = phi.len() - 1;
        while self.coeffs.len() > d {
            let top = self.coeffs.len() - 1;
            let c = self.coeffs.pop().unwrap();
            if !c.is_zero() {
                let shift = top - d;
                for (j, pj) in phi.iter().enumerate().take(d) {
                    if !pj.is_zero() {
                        self.coeffs[shift + j] -= &c * pj;
                    }
                }
            }
        }
        self.trim();
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        let mut c = Cyclo { coeffs: out };
        c.trim();
        c
    }

    pub fn neg(&self) -> Self {
        Cyclo {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclo {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Self, phi: &[BigInt]) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out, phi)
    }

    /// Multiplicative inverse; `None` for zero.
    pub(crate) fn inv(&self, phi: &[BigInt]) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.coeffs.len() == 1 {
            return Some(Cyclo {
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        // Extended Euclid in ℚ[z]: s·a + t·Φ = 1.
        let phi_q: Vec<BigRational> = phi.iter().cloned().map(BigRational::from_integer).collect();
        let (g, s) = ext_gcd(&self.coeffs, &phi_q);
        debug_assert!(g.len() == 1);
        let inv_g = g[0].recip();
        let s: Vec<BigRational> = s.iter().map(|c| c * &inv_g).collect();
        Some(Self::from_coeffs(s, phi))
    }

    pub(crate) fn pow(&self, mut e: u64, phi: &[BigInt]) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, phi);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, phi);
            }
        }
        acc
    }

    /// Norm down to ℚ: the determinant of multiplication by `self` on the
    /// power basis of ℚ[z]/Φ_N.
    pub(crate) fn norm(&self, phi: &[BigInt]) -> BigRational {
        let d = phi.len() - 1;
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        let mut basis = Cyclo::one();
        let z = Cyclo::from_coeffs(vec![BigRational::zero(), BigRational::one()], phi);
        for _ in 0..d {
            let img = self.mul(&basis, phi);
            let mut row = img.coeffs.clone();
            row.resize(d, BigRational::zero());
            rows.push(row);
            basis = basis.mul(&z, phi);
        }
        determinant(rows)
    }
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

fn trim_q(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim_q(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lb;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[k + j] -= t;
        }
        q[k] = c;
        r.pop();
        trim_q(&mut r);
    }
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_q(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim_q(&mut out);
    out
}

/// Returns `(g, s)` with `s·a ≡ g (mod b)`.
fn ext_gcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim_q(&mut r0);
    trim_q(&mut r1);
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclo {
    /// Parseable text such as `3`, `-1/2*z^2`, `(1 + 2*z)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let nonzero: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let wrap = nonzero.len() > 1;
        if wrap {
            write!(f, "(")?;
        }
        for (idx, (k, c)) in nonzero.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -(*c).clone()) } else { ("+", (*c).clone()) };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            match *k {
                0 => fmt_rational(&mag, f)?,
                _ => {
                    if !mag.is_one() {
                        fmt_rational(&mag, f)?;
                        write!(f, "*")?;
                    }
                    if *k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{}", k)?;
                    }
                }
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Divisors of `n` in increasing order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}
