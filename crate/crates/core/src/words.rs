//! Words over the alphabet x_1 < x_2 < … < x_n, Lyndon words and their
//! standard factorizations.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;
use crate::lattice::LatticeVector;

/// A word in the letters x_1..x_n. Letters are stored 0-based; the derived
/// `Ord` is the lexicographic order in which a proper prefix is smaller.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    /// Builds a word from 1-based letter indices, as written on paper.
    pub fn from_indices(indices: &[usize]) -> Self {
        Word(indices.iter().map(|&i| (i - 1) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Occurrence count of each letter.
    pub fn multidegree(&self, n: usize) -> LatticeVector {
        let mut v = vec![0i64; n];
        for &l in &self.0 {
            v[l as usize] += 1;
        }
        LatticeVector(v)
    }

    pub fn check_alphabet(&self, n: usize) -> Result<(), Error> {
        match self.0.iter().find(|&&l| l as usize >= n) {
            Some(&l) => Err(Error::LetterOutOfRange {
                letter: l as usize,
                rank: n,
            }),
            None => Ok(()),
        }
    }

    /// Lyndon test straight from the definition: u < u₂u₁ for every split
    /// u = u₁u₂ into nonempty parts.
    pub fn is_lyndon(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        (1..n).all(|k| {
            let rotated: Vec<u8> = self.0[k..].iter().chain(&self.0[..k]).copied().collect();
            self.0 < rotated
        })
    }

    /// Shirshov decomposition u = vw with v, w Lyndon and v shortest.
    pub fn shirshov(&self) -> Result<(Word, Word), Error> {
        if self.len() < 2 || !self.is_lyndon() {
            return Err(Error::NotLyndon);
        }
        for k in 1..self.len() {
            let v = Word(self.0[..k].to_vec());
            let w = Word(self.0[k..].to_vec());
            if v.is_lyndon() && w.is_lyndon() {
                return Ok((v, w));
            }
        }
        unreachable!("every Lyndon word of length ≥ 2 has a Shirshov split")
    }

    /// The unique non-increasing factorization into Lyndon words (Duval).
    pub fn lyndon_factorization(&self) -> Vec<Word> {
        let s = &self.0;
        let n = s.len();
        let mut out = Vec::new();
        let mut i = 0;
        while i < n {
            let mut j = i + 1;
            let mut k = i;
            while j < n && s[k] <= s[j] {
                if s[k] < s[j] {
                    k = i;
                } else {
                    k += 1;
                }
                j += 1;
            }
            while i <= k {
                out.push(Word(s[i..i + j - k].to_vec()));
                i += j - k;
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &l in &self.0 {
            write!(f, "x{}", l as usize + 1)?;
        }
        Ok(())
    }
}

pub fn compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// All words of length 1..=max_len over `n` letters.
pub fn all_words(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * n);
        for w in &layer {
            for l in 0..n {
                let mut v = w.0.clone();
                v.push(l as u8);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Lyndon words of length ≤ `max_len` over `n` letters, in lexicographic
/// order. Brute force: generate and filter.
pub fn lyndon_enum(n: usize, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = all_words(n, max_len).into_iter().filter(Word::is_lyndon).collect();
    out.sort();
    out
}

/// Every word with the given letter counts, in descending order.
pub fn words_of_multidegree(mu: &LatticeVector) -> Vec<Word> {
    let mut counts: Vec<usize> = mu.0.iter().map(|&x| x.max(0) as usize).collect();
    let total: usize = counts.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(total);
    fn rec(counts: &mut [usize], cur: &mut Vec<u8>, total: usize, out: &mut Vec<Word>) {
        if cur.len() == total {
            out.push(Word(cur.clone()));
            return;
        }
        for l in (0..counts.len()).rev() {
            if counts[l] > 0 {
                counts[l] -= 1;
                cur.push(l as u8);
                rec(counts, cur, total, out);
                cur.pop();
                counts[l] += 1;
            }
        }
    }
    rec(&mut counts, &mut cur, total, &mut out);
    out
}

/// Multidegrees in ℕ₀ⁿ with total degree exactly `d`, in descending lex order.
pub fn multidegrees_of_total(n: usize, d: usize) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, left: usize, cur: &mut Vec<i64>, out: &mut Vec<LatticeVector>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = left as i64;
            out.push(LatticeVector(cur.clone()));
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k as i64;
            rec(i + 1, left - k, cur, out);
        }
    }
    if n > 0 {
        rec(0, d, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[usize]) -> Word {
        Word::from_indices(s)
    }

    #[test]
    fn comparisons() {
        assert_eq!(compare(&w(&[1, 2]), &w(&[2, 1])), Ordering::Less);
        assert_eq!(compare(&w(&[1]), &w(&[1, 2])), Ordering::Less);
        assert_eq!(compare(&w(&[2, 1]), &w(&[2, 1])), Ordering::Equal);
        assert_eq!(compare(&Word::empty(), &w(&[1])), Ordering::Less);
    }

    #[test]
    fn lyndon_examples() {
        assert!(w(&[1, 1, 2]).is_lyndon());
        assert!(!w(&[2, 1]).is_lyndon());
        assert!(!w(&[1, 2, 1, 2]).is_lyndon());
        assert!(w(&[3]).is_lyndon());
    }

    #[test]
    fn shirshov_examples() {
        assert_eq!(w(&[1, 1, 2]).shirshov().unwrap(), (w(&[1]), w(&[1, 2])));
        assert_eq!(w(&[1, 2]).shirshov().unwrap(), (w(&[1]), w(&[2])));
        assert_eq!(w(&[1, 2, 2]).shirshov().unwrap(), (w(&[1, 2]), w(&[2])));
        assert_eq!(w(&[1]).shirshov(), Err(Error::NotLyndon));
        assert_eq!(w(&[2, 1]).shirshov(), Err(Error::NotLyndon));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(lyndon_enum(2, 2), vec![w(&[1]), w(&[1, 2]), w(&[2])]);
        assert_eq!(lyndon_enum(1, 3), vec![w(&[1])]);
        let l3 = lyndon_enum(2, 3);
        assert!(l3.contains(&w(&[1, 1, 2])));
        assert!(l3.contains(&w(&[1, 2, 2])));
        assert_eq!(l3.len(), 5);
    }

    #[test]
    fn words_of_degree_descending() {
        let ws = words_of_multidegree(&LatticeVector(vec![1, 1]));
        assert_eq!(ws, vec![w(&[2, 1]), w(&[1, 2])]);
        assert_eq!(words_of_multidegree(&LatticeVector(vec![2, 2])).len(), 6);
    }

    #[test]
    fn factorization_of_non_lyndon() {
        assert_eq!(w(&[2, 1]).lyndon_factorization(), vec![w(&[2]), w(&[1])]);
        assert_eq!(
            w(&[1, 2, 1, 2]).lyndon_factorization(),
            vec![w(&[1, 2]), w(&[1, 2])]
        );
    }
}
