//! The coefficient field: rational functions in independent parameters over
//! the cyclotomic field ℚ(ζ_N).
//!
//! Every [`Scalar`] is kept in a canonical form, so structural equality is
//! field equality and the zero test is decidable. Values that do not involve
//! any parameter are stored directly as cyclotomic numbers; everything else
//! is a reduced fraction `num / den` where `num` is a Laurent polynomial and
//! `den` an ordinary polynomial without monomial factors whose leading
//! coefficient is 1.

mod cyclo;
mod poly;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use cyclo::Cyclo;
use poly::Poly;

use crate::error::ScalarError;

/// Conductor and parameter names shared by every scalar of one problem.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloContext {
    conductor: u32,
    params: Vec<String>,
    phi: Vec<BigInt>,
}

impl CycloContext {
    pub fn new(conductor: u32, params: Vec<String>) -> Result<Arc<Self>, ScalarError> {
        if conductor == 0 {
            return Err(ScalarError::InvalidConductor);
        }
        for (i, p) in params.iter().enumerate() {
            let valid = !p.is_empty()
                && p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                && p.chars().next().is_some_and(|c| c.is_ascii_alphabetic());
            if !valid || p == "z" {
                return Err(ScalarError::InvalidParameter(p.clone()));
            }
            if params[..i].contains(p) {
                return Err(ScalarError::DuplicateParameter(p.clone()));
            }
        }
        Ok(Arc::new(CycloContext {
            conductor,
            params,
            phi: cyclo::cyclotomic_polynomial(conductor),
        }))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p == name)
    }

    /// Degree of ℚ(ζ_N) over ℚ.
    pub fn field_degree(&self) -> usize {
        self.phi.len() - 1
    }
}

/// Multiplicative order of a nonzero scalar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{}", k),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr {
    Const(Cyclo),
    Frac { num: Poly, den: Poly },
}

/// Exact element of K = ℚ(ζ_N)(params).
#[derive(Clone)]
pub struct Scalar {
    ctx: Arc<CycloContext>,
    repr: Repr,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx);
        self.repr == other.repr
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order on canonical forms; carries no algebraic meaning.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.cmp(&other.repr)
    }
}

impl core::hash::Hash for Scalar {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl Scalar {
    pub fn zero(ctx: &Arc<CycloContext>) -> Self {
        Self::from_cyclo(ctx, Cyclo::zero())
    }

    pub fn one(ctx: &Arc<CycloContext>) -> Self {
        Self::from_cyclo(ctx, Cyclo::one())
    }

    pub fn from_int(ctx: &Arc<CycloContext>, v: i64) -> Self {
        Self::from_cyclo(ctx, Cyclo::from_int(v))
    }

    pub fn from_bigint(ctx: &Arc<CycloContext>, v: BigInt) -> Self {
        Self::from_cyclo(ctx, Cyclo::from_rational(BigRational::from_integer(v)))
    }

    pub fn from_rational(ctx: &Arc<CycloContext>, num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        Ok(Self::from_cyclo(ctx, Cyclo::from_rational(r)))
    }

    pub fn from_cyclo(ctx: &Arc<CycloContext>, c: Cyclo) -> Self {
        Scalar {
            ctx: ctx.clone(),
            repr: Repr::Const(c),
        }
    }

    /// The fixed primitive N-th root of unity `z`.
    pub fn zeta(ctx: &Arc<CycloContext>) -> Self {
        let c = Cyclo::from_coeffs(vec![BigRational::zero(), BigRational::one()], &ctx.phi);
        Self::from_cyclo(ctx, c)
    }

    /// The parameter with the given index, as a transcendental.
    pub fn param(ctx: &Arc<CycloContext>, index: usize) -> Self {
        assert!(index < ctx.params.len(), "parameter index out of range");
        let mut e = vec![0; ctx.params.len()];
        e[index] = 1;
        Scalar {
            ctx: ctx.clone(),
            repr: Repr::Frac {
                num: Poly::monomial(e, Cyclo::one()),
                den: Poly::constant(Cyclo::one(), ctx.params.len()),
            },
        }
    }

    pub fn context(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.repr, Repr::Const(c) if c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.repr, Repr::Const(c) if c.is_one())
    }

    /// True when no parameter occurs.
    pub fn is_constant(&self) -> bool {
        matches!(self.repr, Repr::Const(_))
    }

    pub fn as_cyclo(&self) -> Option<&Cyclo> {
        match &self.repr {
            Repr::Const(c) => Some(c),
            Repr::Frac { .. } => None,
        }
    }

    fn phi(&self) -> &[BigInt] {
        &self.ctx.phi
    }

    fn nvars(&self) -> usize {
        self.ctx.params.len()
    }

    /// Numerator and denominator as polynomials.
    fn parts(&self) -> (Poly, Poly) {
        match &self.repr {
            Repr::Const(c) => (
                Poly::constant(c.clone(), self.nvars()),
                Poly::constant(Cyclo::one(), self.nvars()),
            ),
            Repr::Frac { num, den } => (num.clone(), den.clone()),
        }
    }

    fn with_repr(&self, repr: Repr) -> Self {
        Scalar {
            ctx: self.ctx.clone(),
            repr,
        }
    }

    /// Canonical form of `num / den` for Laurent polynomials, `den ≠ 0`.
    fn normalize(&self, num: Poly, den: Poly) -> Self {
        let phi = self.phi();
        if num.is_zero() {
            return Self::zero(&self.ctx);
        }
        if let Some(d) = den.as_constant() {
            let inv = d.inv(phi).expect("nonzero denominator");
            let num = num.scale(&inv, phi);
            return self.lift_poly(num);
        }
        let (mn, n0) = num.split_monomial();
        let (md, d0) = den.split_monomial();
        let g = n0.gcd(&d0, phi);
        let (n1, d1) = if g.is_one() {
            (n0, d0)
        } else {
            (
                n0.div_exact(&g, phi).expect("gcd divides numerator"),
                d0.div_exact(&g, phi).expect("gcd divides denominator"),
            )
        };
        let lc = d1.leading().expect("nonzero").1.clone();
        let inv = lc.inv(phi).expect("nonzero");
        let shift: Vec<i32> = mn.iter().zip(&md).map(|(a, b)| a - b).collect();
        let num = n1.scale(&inv, phi).shift(&shift);
        let den = d1.scale(&inv, phi);
        if den.is_one() {
            return self.lift_poly(num);
        }
        self.with_repr(Repr::Frac { num, den })
    }

    fn lift_poly(&self, num: Poly) -> Self {
        match num.as_constant() {
            Some(c) => self.with_repr(Repr::Const(c)),
            None => self.with_repr(Repr::Frac {
                num,
                den: Poly::constant(Cyclo::one(), self.nvars()),
            }),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        match (&self.repr, &other.repr) {
            (Repr::Const(a), Repr::Const(b)) => self.with_repr(Repr::Const(a.add(b))),
            _ => {
                let (n1, d1) = self.parts();
                let (n2, d2) = other.parts();
                if d1 == d2 {
                    if d1.is_one() {
                        return self.lift_poly(n1.add(&n2));
                    }
                    return self.normalize(n1.add(&n2), d1);
                }
                let phi = self.phi();
                let num = n1.mul(&d2, phi).add(&n2.mul(&d1, phi));
                self.normalize(num, d1.mul(&d2, phi))
            }
        }
    }

    pub fn neg_ref(&self) -> Self {
        match &self.repr {
            Repr::Const(a) => self.with_repr(Repr::Const(a.neg())),
            Repr::Frac { num, den } => self.with_repr(Repr::Frac {
                num: num.neg(),
                den: den.clone(),
            }),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let phi = self.phi();
        match (&self.repr, &other.repr) {
            (Repr::Const(a), Repr::Const(b)) => self.with_repr(Repr::Const(a.mul(b, phi))),
            (Repr::Const(a), Repr::Frac { num, den }) | (Repr::Frac { num, den }, Repr::Const(a)) => {
                if a.is_zero() {
                    return Self::zero(&self.ctx);
                }
                self.with_repr(Repr::Frac {
                    num: num.scale(a, phi),
                    den: den.clone(),
                })
            }
            (Repr::Frac { num: n1, den: d1 }, Repr::Frac { num: n2, den: d2 }) => {
                if d1.is_one() && d2.is_one() {
                    return self.lift_poly(n1.mul(n2, phi));
                }
                self.normalize(n1.mul(n2, phi), d1.mul(d2, phi))
            }
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        match &self.repr {
            Repr::Const(c) => c
                .inv(self.phi())
                .map(|i| self.with_repr(Repr::Const(i)))
                .ok_or(ScalarError::DivisionByZero),
            Repr::Frac { num, den } => {
                if num.terms.len() == 1 && den.is_one() {
                    let (e, c) = &num.terms[0];
                    let inv = c.inv(self.phi()).ok_or(ScalarError::DivisionByZero)?;
                    let e: Vec<i32> = e.iter().map(|x| -x).collect();
                    return Ok(self.lift_poly(Poly::monomial(e, inv)));
                }
                Ok(self.normalize(den.clone(), num.clone()))
            }
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u64;
        if e == 0 {
            return Ok(Self::one(&self.ctx));
        }
        let phi = self.phi();
        Ok(match &self.repr {
            Repr::Const(c) => self.with_repr(Repr::Const(c.pow(e, phi))),
            // Powers of a reduced fraction stay reduced.
            Repr::Frac { num, den } => {
                let num = num.pow(e, phi);
                let den = den.pow(e, phi);
                if den.is_one() {
                    self.lift_poly(num)
                } else {
                    self.with_repr(Repr::Frac { num, den })
                }
            }
        })
    }

    /// Rescales a vector by a nonzero element of K so that its entries are
    /// small: Laurent-polynomial vectors are divided by the gcd of their
    /// entries, and the entry at `pivot` is given leading coefficient 1.
    /// Other vectors are divided by their `pivot` entry.
    pub fn remove_content(values: &mut [Scalar], pivot: usize) {
        let Some(first) = values.get(pivot).filter(|x| !x.is_zero()).cloned() else {
            return;
        };
        let all_poly = values.iter().all(|x| match &x.repr {
            Repr::Const(_) => true,
            Repr::Frac { den, .. } => den.is_one(),
        });
        if !all_poly || first.is_constant() {
            let inv = first.inv().expect("nonzero pivot");
            for x in values.iter_mut() {
                if !x.is_zero() {
                    *x = x.mul_ref(&inv);
                }
            }
            return;
        }
        let phi = first.phi();
        let nv = first.nvars();
        let parts: Vec<Option<(Vec<i32>, Poly)>> = values
            .iter()
            .map(|x| match &x.repr {
                Repr::Const(c) if c.is_zero() => None,
                Repr::Const(c) => Some((alloc::vec![0; nv], Poly::constant(c.clone(), nv))),
                Repr::Frac { num, .. } => Some(num.split_monomial()),
            })
            .collect();
        let mut low: Option<Vec<i32>> = None;
        let mut g: Option<Poly> = None;
        for (m, p0) in parts.iter().flatten() {
            low = Some(match low {
                None => m.clone(),
                Some(l) => l.iter().zip(m).map(|(a, b)| *a.min(b)).collect(),
            });
            g = Some(match g {
                None => p0.monic(phi),
                Some(g) if g.as_constant().is_some() => g,
                Some(g) => g.gcd(p0, phi),
            });
        }
        let (Some(low), Some(g)) = (low, g) else { return };
        let neg: Vec<i32> = low.iter().map(|x| -x).collect();
        let pivot_lc = {
            let (_, p0) = parts[pivot].as_ref().expect("nonzero pivot");
            let q = p0.div_exact(&g, phi).expect("content divides");
            q.leading().expect("nonzero").1.inv(phi).expect("nonzero")
        };
        for (x, part) in values.iter_mut().zip(parts) {
            let Some((m, p0)) = part else { continue };
            let q = p0.div_exact(&g, phi).expect("content divides");
            let shift: Vec<i32> = m.iter().zip(&neg).map(|(a, b)| a + b).collect();
            *x = first.lift_poly(q.shift(&shift).scale(&pivot_lc, phi));
        }
    }

    /// Multiplicative order. Parameters are transcendental, so only
    /// constants can have finite order; a constant root of unity in ℚ(ζ_N)
    /// has order dividing 2N.
    pub fn order(&self) -> Result<Order, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::OrderOfZero);
        }
        let Repr::Const(c) = &self.repr else {
            return Ok(Order::Infinite);
        };
        let phi = self.phi();
        for d in cyclo::divisors(2 * self.ctx.conductor as u64) {
            if c.pow(d, phi).is_one() {
                return Ok(Order::Finite(d));
            }
        }
        Ok(Order::Infinite)
    }

    /// The q-factorial (m)_a! = ∏_{k=1}^{m} (1 + a + … + a^{k-1}).
    pub fn q_factorial(m: u32, a: &Scalar) -> Scalar {
        let one = Scalar::one(&a.ctx);
        let mut acc = one.clone();
        let mut qnum = Scalar::zero(&a.ctx);
        let mut apow = one;
        for _ in 0..m {
            qnum = qnum.add_ref(&apow);
            apow = apow.mul_ref(a);
            acc = acc.mul_ref(&qnum);
        }
        acc
    }

    /// Signature used to solve `self^m = target`: `(monomial shift, total
    /// degree of the monomial-free numerator, total degree of the
    /// denominator)`. Each entry scales linearly with `m`.
    fn growth_signature(&self) -> Option<(Vec<i32>, i64, i64)> {
        match &self.repr {
            Repr::Const(_) => None,
            Repr::Frac { num, den } => {
                let (m, n0) = num.split_monomial();
                Some((m, n0.total_degree(), den.total_degree()))
            }
        }
    }

    /// Least `m ≥ 0` with `self^m = target`, when `self` has infinite order.
    /// `None` if no such exponent exists.
    pub fn solve_power(&self, target: &Scalar) -> Result<Option<u64>, ScalarError> {
        if target.is_one() {
            return Ok(Some(0));
        }
        if target.is_zero() || self.is_zero() {
            return Ok(None);
        }
        let candidate = match (self.growth_signature(), target.growth_signature()) {
            (Some((ms, ns, ds)), Some((mt, nt, dt))) => {
                let pairs = ms
                    .iter()
                    .map(|&x| x as i64)
                    .zip(mt.iter().map(|&x| x as i64))
                    .chain([(ns, nt), (ds, dt)]);
                let mut cand: Option<i64> = None;
                for (s, t) in pairs {
                    if s == 0 {
                        if t != 0 {
                            return Ok(None);
                        }
                        continue;
                    }
                    if t % s != 0 {
                        return Ok(None);
                    }
                    let m = t / s;
                    match cand {
                        None => cand = Some(m),
                        Some(c) if c != m => return Ok(None),
                        _ => {}
                    }
                }
                match cand {
                    Some(m) if m >= 1 => m as u64,
                    _ => return Ok(None),
                }
            }
            (Some(_), None) | (None, Some(_)) => return Ok(None),
            (None, None) => return self.solve_constant_power(target),
        };
        Ok((self.pow(candidate as i64)? == *target).then_some(candidate))
    }

    fn solve_constant_power(&self, target: &Scalar) -> Result<Option<u64>, ScalarError> {
        let phi = self.phi();
        let (Repr::Const(c), Repr::Const(t)) = (&self.repr, &target.repr) else {
            unreachable!()
        };
        let nc = c.norm(phi).abs();
        let nt = t.norm(phi).abs();
        if !nc.is_one() {
            // |N(c)|^m = |N(t)| pins m down.
            let mut acc = BigRational::one();
            let mut m = 0u64;
            let growing = nc > BigRational::one();
            loop {
                if acc == nt {
                    return Ok((self.pow(m as i64)? == *target).then_some(m));
                }
                if (growing && acc > nt) || (!growing && acc < nt) {
                    return Ok(None);
                }
                acc *= &nc;
                m += 1;
            }
        }
        if !nt.is_one() {
            return Ok(None);
        }
        // Unit norm but not a root of unity: bounded search.
        let mut acc = self.clone();
        for m in 1..=CONSTANT_POWER_SEARCH_LIMIT {
            if acc == *target {
                return Ok(Some(m));
            }
            acc = acc.mul_ref(self);
        }
        Ok(None)
    }

    /// Rational value, if this scalar lies in ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.repr {
            Repr::Const(c) if c.is_rational() => {
                Some(c.coeffs().first().cloned().unwrap_or_else(BigRational::zero))
            }
            _ => None,
        }
    }

    /// Small-integer value, if this scalar is one.
    pub fn to_i64(&self) -> Option<i64> {
        let r = self.to_rational()?;
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }
}

/// Search bound for constants of unit norm that are not roots of unity.
pub const CONSTANT_POWER_SEARCH_LIMIT: u64 = 256;

impl fmt::Display for Scalar {
    /// Text accepted back by the instance parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Const(c) => write!(f, "{}", c),
            Repr::Frac { num, den } => {
                let names = &self.ctx.params;
                if den.is_one() {
                    num.fmt_with(names, f)
                } else {
                    write!(f, "(")?;
                    num.fmt_with(names, f)?;
                    write!(f, ")/(")?;
                    den.fmt_with(names, f)?;
                    write!(f, ")")
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
