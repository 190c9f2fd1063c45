//! Incremental row echelon form over the scalar field.

use alloc::vec::Vec;

use crate::scalars::Scalar;

/// Stored rows vanish at every earlier row's pivot, so reducing against them
/// in insertion order is exact. Reduction is fraction-free
/// (v ← r_p·v − v_p·r), which keeps Laurent-polynomial entries polynomial;
/// each stored row has its content removed once.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` in place against the stored rows.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            let piv = &row[*p];
            for (x, r) in v.iter_mut().zip(row) {
                if !piv.is_one() && !x.is_zero() {
                    *x = x.mul_ref(piv);
                }
                if !r.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        Scalar::remove_content(&mut v, p);
        self.rows.push((p, v));
        true
    }
}

/// Rank of a list of vectors.
pub fn rank_of(vectors: &[Vec<Scalar>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v.clone());
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::CycloContext;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn rank_and_membership() {
        let c = CycloContext::new(1, vec!["q".to_string()]).unwrap();
        let q = Scalar::param(&c, 0);
        let one = Scalar::one(&c);
        let zero = Scalar::zero(&c);
        let v1 = vec![one.clone(), q.clone(), zero.clone()];
        let v2 = vec![q.clone(), q.mul_ref(&q), zero.clone()];
        let v3 = vec![zero.clone(), one.clone(), one.clone()];
        let mut e = Echelon::new();
        assert!(e.insert(v1.clone()));
        assert!(!e.insert(v2.clone()));
        assert!(e.insert(v3.clone()));
        assert_eq!(e.rank(), 2);
        let sum: Vec<Scalar> = v1.iter().zip(&v3).map(|(a, b)| a.add_ref(b)).collect();
        assert!(e.contains(&sum));
        assert!(!e.contains(&[zero.clone(), zero, one]));
        assert_eq!(rank_of(&[v1, v2, v3]), 2);
    }
}
