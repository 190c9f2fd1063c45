//! The Weyl groupoid W_{χ,E}: breadth-first closure of a basis of ℤⁿ under
//! the reflections s_{f,F}(f″) = f″ + m(f, f″)·f.
//!
//! Only the objects (id, F) are materialized. The groupoid is full when every
//! reflection of every reached basis is defined, and (χ, E) gives an
//! arithmetic root system when it is full and finite; Δ is then the union of
//! all reached bases.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::Error;
use crate::lattice::{Bicharacter, LatticeVector};

pub const DEFAULT_CAP_STATES: usize = 10_000;

/// An ordered basis F of ℤⁿ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupoidState {
    pub basis: Vec<LatticeVector>,
}

impl GroupoidState {
    /// The standard basis E = (e_1, …, e_n).
    pub fn standard(n: usize) -> Self {
        GroupoidState {
            basis: (0..n).map(|i| LatticeVector::unit(n, i)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Determinant of the matrix whose rows are the basis vectors.
    pub fn determinant(&self) -> i64 {
        let n = self.rank();
        let mut m: Vec<Vec<i128>> = self
            .basis
            .iter()
            .map(|v| v.0.iter().map(|&x| x as i128).collect())
            .collect();
        // Fraction-free (Bareiss) elimination.
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                    return 0;
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        if n == 0 {
            return 1;
        }
        (sign * m[n - 1][n - 1]) as i64
    }
}

/// s_{f_k, F}; `None` when some m(f_k, f″) is undefined.
pub fn reflect(b: &Bicharacter, f: &GroupoidState, k: usize) -> Result<Option<GroupoidState>, Error> {
    let fk = &f.basis[k];
    let mut out = Vec::with_capacity(f.rank());
    for (idx, v) in f.basis.iter().enumerate() {
        let m = if idx == k {
            Some(-2)
        } else {
            b.m_value(fk, v)?.coefficient()
        };
        let Some(m) = m else {
            return Ok(None);
        };
        out.push(v.checked_add_scaled(m, fk).ok_or(Error::Overflow)?);
    }
    Ok(Some(GroupoidState { basis: out }))
}

#[derive(Clone, Debug)]
pub struct GroupoidGraph {
    /// States in discovery order; index 0 is the start basis.
    pub states: Vec<GroupoidState>,
    /// `(from, k, to)`: reflecting state `from` at basis position `k` (0-based) gives `to`.
    pub arrows: Vec<(usize, usize, usize)>,
    /// Every reflection of every reached state is defined.
    pub full: bool,
    /// The closure completed within the cap.
    pub finite: bool,
    /// The state cap was hit before the closure completed.
    pub truncated: bool,
}

impl GroupoidGraph {
    /// Plain-text adjacency list, one arrow per line: `from k to`, with 1-based `k`.
    pub fn to_adjacency_list(&self) -> String {
        let mut s = String::new();
        for &(from, k, to) in &self.arrows {
            let _ = writeln!(s, "{} {} {}", from, k + 1, to);
        }
        s
    }

    pub fn root_set(&self) -> RootSet {
        let roots: BTreeSet<LatticeVector> = self.states.iter().flat_map(|s| s.basis.iter().cloned()).collect();
        RootSet::new(roots)
    }
}

/// Breadth-first closure of `{start}` under all defined reflections.
pub fn generate_groupoid(b: &Bicharacter, start: &GroupoidState, cap_states: usize) -> Result<GroupoidGraph, Error> {
    if cap_states == 0 {
        return Err(Error::InvalidCap);
    }
    let n = start.rank();
    let mut index: BTreeMap<GroupoidState, usize> = BTreeMap::new();
    let mut states = Vec::new();
    let mut arrows = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(start.clone(), 0);
    states.push(start.clone());
    queue.push_back(0usize);
    let mut full = true;
    let mut truncated = false;
    while let Some(cur) = queue.pop_front() {
        for k in 0..n {
            let next = match reflect(b, &states[cur], k) {
                Ok(Some(next)) => next,
                Ok(None) => {
                    full = false;
                    continue;
                }
                // Coordinates this large only arise in an infinite closure.
                Err(Error::Overflow) => {
                    truncated = true;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let to = match index.get(&next) {
                Some(&i) => i,
                None => {
                    if states.len() >= cap_states {
                        truncated = true;
                        continue;
                    }
                    let i = states.len();
                    index.insert(next.clone(), i);
                    states.push(next);
                    queue.push_back(i);
                    i
                }
            };
            arrows.push((cur, k, to));
        }
    }
    Ok(GroupoidGraph {
        states,
        arrows,
        full,
        finite: !truncated,
        truncated,
    })
}

/// Δ and its positive part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    pub roots: BTreeSet<LatticeVector>,
    pub positive: BTreeSet<LatticeVector>,
}

impl RootSet {
    fn new(roots: BTreeSet<LatticeVector>) -> Self {
        let positive = roots.iter().filter(|r| r.is_nonnegative()).cloned().collect();
        RootSet { roots, positive }
    }

    /// Positive roots ordered by total degree, then descending coordinates.
    pub fn positive_sorted(&self) -> Vec<LatticeVector> {
        let mut v: Vec<LatticeVector> = self.positive.iter().cloned().collect();
        v.sort_by(|a, b| a.total().cmp(&b.total()).then(b.cmp(a)));
        v
    }

    pub fn is_symmetric(&self) -> bool {
        self.roots.iter().all(|r| self.roots.contains(&-r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithmeticVerdict {
    Yes(RootSet),
    /// Some reflection is undefined.
    No,
    /// The state cap was exhausted while the closure was still growing.
    Unknown,
}

pub fn is_arithmetic_root_system(b: &Bicharacter, start: &GroupoidState, cap: usize) -> Result<ArithmeticVerdict, Error> {
    let g = generate_groupoid(b, start, cap)?;
    Ok(verdict_of(&g))
}

pub fn verdict_of(g: &GroupoidGraph) -> ArithmeticVerdict {
    if !g.full {
        ArithmeticVerdict::No
    } else if g.truncated {
        ArithmeticVerdict::Unknown
    } else {
        ArithmeticVerdict::Yes(g.root_set())
    }
}
