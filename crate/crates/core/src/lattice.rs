//! The lattice ℤⁿ, the bicharacter χ fixed by a diagonal braiding matrix,
//! and the reflection coefficients m(e′, e″).

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::scalars::{CycloContext, Order, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![0; n])
    }

    /// The standard basis vector e_{i+1}.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticeVector(self.0.iter().map(|x| x * k).collect())
    }

    /// `self + k·other`, or `None` on overflow.
    pub fn checked_add_scaled(&self, k: i64, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| b.checked_mul(k).and_then(|x| a.checked_add(x)))
            .collect::<Option<Vec<i64>>>()
            .map(LatticeVector)
    }

    /// Componentwise `self ≤ other`.
    pub fn fits_in(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, rhs: &LatticeVector) -> LatticeVector {
        rhs.scaled(self)
    }
}

/// Value of m(e′, e″).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MValue {
    /// e′ = e″; the reflection sends e′ to −e′.
    SelfReflection,
    Finite(u64),
    Undefined,
}

impl MValue {
    /// The coefficient in s(e″) = e″ + m·e′, with m(e′,e′) = −2.
    pub fn coefficient(self) -> Option<i64> {
        match self {
            MValue::SelfReflection => Some(-2),
            MValue::Finite(m) => Some(m as i64),
            MValue::Undefined => None,
        }
    }
}

/// Largest exponent of an infinite-order entry that χ will expand.
pub const MAX_PARAMETER_EXPONENT: u64 = 1 << 12;

/// χ on ℤⁿ × ℤⁿ, determined by q_ij = χ(e_i, e_j).
#[derive(Clone, Debug)]
pub struct Bicharacter {
    ctx: Arc<CycloContext>,
    q: Vec<Vec<Scalar>>,
    q_inv: Vec<Vec<Scalar>>,
    /// Multiplicative order of each entry, used to reduce exponents.
    ord: Vec<Vec<Order>>,
}

impl Bicharacter {
    pub fn new(ctx: &Arc<CycloContext>, q: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let n = q.len();
        for row in &q {
            if row.len() != n {
                return Err(Error::Shape {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        let mut q_inv = Vec::with_capacity(n);
        let mut ord = Vec::with_capacity(n);
        for (i, row) in q.iter().enumerate() {
            let mut inv_row = Vec::with_capacity(n);
            let mut ord_row = Vec::with_capacity(n);
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    return Err(Error::ZeroEntry { row: i, col: j });
                }
                inv_row.push(x.inv()?);
                ord_row.push(x.order()?);
            }
            q_inv.push(inv_row);
            ord.push(ord_row);
        }
        Ok(Bicharacter {
            ctx: ctx.clone(),
            q,
            q_inv,
            ord,
        })
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn context(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    /// q_ij with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.q[i][j]
    }

    pub fn entry_inv(&self, i: usize, j: usize) -> &Scalar {
        &self.q_inv[i][j]
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(&self.ctx)
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(&self.ctx)
    }

    fn check_rank(&self, v: &LatticeVector) -> Result<(), Error> {
        if v.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: v.rank(),
            });
        }
        Ok(())
    }

    /// χ(α, β) = ∏ q_ij^{α_i β_j}.
    pub fn chi(&self, alpha: &LatticeVector, beta: &LatticeVector) -> Result<Scalar, Error> {
        self.check_rank(alpha)?;
        self.check_rank(beta)?;
        let mut acc = self.one();
        for (i, &a) in alpha.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in beta.0.iter().enumerate() {
                let e = a.checked_mul(b).ok_or(Error::Overflow)?;
                let e = match self.ord[i][j] {
                    Order::Finite(d) => e.rem_euclid(d as i64),
                    Order::Infinite if e.unsigned_abs() > MAX_PARAMETER_EXPONENT => return Err(Error::Overflow),
                    Order::Infinite => e,
                };
                match e {
                    0 => {}
                    1 => acc = acc.mul_ref(&self.q[i][j]),
                    -1 => acc = acc.mul_ref(&self.q_inv[i][j]),
                    e if e > 0 => acc = acc.mul_ref(&self.q[i][j].pow(e)?),
                    e => acc = acc.mul_ref(&self.q_inv[i][j].pow(-e)?),
                }
            }
        }
        Ok(acc)
    }

    /// p̃(α, β) = χ(α, β)·χ(β, α).
    pub fn p_tilde(&self, alpha: &LatticeVector, beta: &LatticeVector) -> Result<Scalar, Error> {
        Ok(self.chi(alpha, beta)?.mul_ref(&self.chi(beta, alpha)?))
    }

    /// m(e′, e″): least m ≥ 0 with χ(e′,e′)^m·p̃(e′,e″) = 1, or with
    /// χ(e′,e′)^{m+1} = 1 when χ(e′,e′) ≠ 1.
    pub fn m_value(&self, e1: &LatticeVector, e2: &LatticeVector) -> Result<MValue, Error> {
        if e1 == e2 {
            return Ok(MValue::SelfReflection);
        }
        let c = self.chi(e1, e1)?;
        let pt = self.p_tilde(e1, e2)?;
        match c.order()? {
            Order::Finite(d) => {
                let c_is_one = c.is_one();
                let mut cm = self.one();
                for m in 0..=d {
                    let cm1 = cm.mul_ref(&c);
                    if cm.mul_ref(&pt).is_one() || (!c_is_one && cm1.is_one()) {
                        return Ok(MValue::Finite(m));
                    }
                    cm = cm1;
                }
                Ok(MValue::Undefined)
            }
            Order::Infinite => {
                // χ(e′,e′)^{m+1} = 1 is impossible; solve χ(e′,e′)^m = p̃^{-1}.
                let target = pt.inv()?;
                Ok(match c.solve_power(&target)? {
                    Some(m) => MValue::Finite(m),
                    None => MValue::Undefined,
                })
            }
        }
    }

    /// Indices grouped into connected components of the graph with an edge
    /// i — j whenever p̃_ij ≠ 1.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while c[r] != r {
                r = c[r];
            }
            c[x] = r;
            r
        }
        for i in 0..n {
            for j in i + 1..n {
                let pt = self.q[i][j].mul_ref(&self.q[j][i]);
                if !pt.is_one() {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    if a != b {
                        comp[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let r = find(&mut comp, i);
            match root_of[r] {
                Some(g) => groups[g].push(i),
                None => {
                    root_of[r] = Some(groups.len());
                    groups.push(vec![i]);
                }
            }
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn generic(n_params: &[&str]) -> Arc<CycloContext> {
        CycloContext::new(1, n_params.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn e(n: usize, i: usize) -> LatticeVector {
        LatticeVector::unit(n, i)
    }

    /// q11 = q22 = q, q12 = q^-1, q21 = 1.
    fn a2_generic() -> Bicharacter {
        let c = generic(&["q"]);
        let q = Scalar::param(&c, 0);
        let qi = q.inv().unwrap();
        let one = Scalar::one(&c);
        Bicharacter::new(&c, vec![vec![q.clone(), qi], vec![one, q]]).unwrap()
    }

    #[test]
    fn chi_on_basis_and_sums() {
        let c = generic(&["q"]);
        let q = Scalar::param(&c, 0);
        let one = Scalar::one(&c);
        let b = Bicharacter::new(&c, vec![vec![q.clone(), one.clone()], vec![one, q.clone()]]).unwrap();
        assert_eq!(b.chi(&e(2, 0), &e(2, 1)).unwrap(), *b.entry(0, 1));
        let s = &e(2, 0) + &e(2, 1);
        assert_eq!(b.chi(&s, &e(2, 0)).unwrap(), q);
        assert_eq!(b.chi(&-&e(2, 0), &e(2, 0)).unwrap(), q.inv().unwrap());
    }

    #[test]
    fn p_tilde_a2() {
        let b = a2_generic();
        let q = b.entry(0, 0).clone();
        assert_eq!(b.p_tilde(&e(2, 0), &e(2, 1)).unwrap(), q.inv().unwrap());
        let x = LatticeVector(vec![2, -1]);
        assert_eq!(b.p_tilde(&x, &x).unwrap(), b.chi(&x, &x).unwrap().pow(2).unwrap());
    }

    #[test]
    fn m_values() {
        let b = a2_generic();
        assert_eq!(b.m_value(&e(2, 0), &e(2, 0)).unwrap(), MValue::SelfReflection);
        assert_eq!(b.m_value(&e(2, 0), &e(2, 1)).unwrap(), MValue::Finite(1));
        let c = generic(&["q"]);
        let q = Scalar::param(&c, 0);
        let one = Scalar::one(&c);
        let bad = Bicharacter::new(&c, vec![vec![q.clone(), q.clone()], vec![one, q]]).unwrap();
        assert_eq!(bad.m_value(&e(2, 0), &e(2, 1)).unwrap(), MValue::Undefined);
    }

    #[test]
    fn zero_entry_rejected() {
        let c = generic(&[]);
        let one = Scalar::one(&c);
        let zero = Scalar::zero(&c);
        let err = Bicharacter::new(&c, vec![vec![one.clone(), zero], vec![one.clone(), one]]).unwrap_err();
        assert_eq!(err, Error::ZeroEntry { row: 0, col: 1 });
    }
}
