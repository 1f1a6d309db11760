//! Words and permutations: standardization, descents and peaks, restriction
//! to intervals, shuffles, digit shifting and inversion.

use crate::combinat::{DescentSet, PeakSet};
use crate::error::{Error, Result};
use crate::DEFAULT_DEGREE_CAP;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A word over the positive integers; repeats allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

/// A permutation in one-line notation: a bijective word on `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.iter().any(|&x| x == 0) {
            return Err(Error::Invalid {
                kind: "word",
                reason: "letters must be positive".into(),
            });
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `st(w)`: the permutation order-isomorphic to `w`, ties broken
    /// left-to-right.
    pub fn standardize(&self) -> Permutation {
        let n = self.0.len();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| (self.0[i], i));
        let mut out = vec![0; n];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank + 1;
        }
        Permutation(out)
    }

    /// Each letter increased by `p`.
    pub fn shift(&self, p: usize) -> Word {
        Word(self.0.iter().map(|&x| x + p).collect())
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Invalid {
                    kind: "permutation",
                    reason: format!("not a bijective word on [{n}]"),
                });
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x - 1] = i + 1;
        }
        Permutation(out)
    }

    /// `Des(w) = {i : w_i > w_{i+1}}`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.0.len();
        DescentSet {
            n,
            elems: (1..n).filter(|&i| self.0[i - 1] > self.0[i]).collect(),
        }
    }

    pub fn peak_set(&self) -> PeakSet {
        self.descent_set().peak_set()
    }

    /// Descent composition `c(w)`.
    pub fn descent_composition(&self) -> crate::combinat::Composition {
        self.descent_set().to_composition()
    }

    /// The subword keeping only the digits in `[lo, hi]`, order preserved.
    /// An empty interval is encoded by `lo > hi`.
    pub fn restrict(&self, lo: usize, hi: usize) -> Word {
        Word(self.0.iter().copied().filter(|&x| lo <= x && x <= hi).collect())
    }

    /// Swap of the first two letters; identity on shorter permutations.
    pub fn swap_first_two(&self) -> Permutation {
        let mut v = self.0.clone();
        if v.len() >= 2 {
            v.swap(0, 1);
        }
        Permutation(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        if self.0.len() <= 9 {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(
                f,
                "{}",
                self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
            )
        }
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Accepts compact one-line notation like `612543` (single digits) or
    /// space/comma separated entries like `10 2 3 ...`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Vec<usize> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

/// All interleavings of `u` and `v` preserving their internal orders,
/// with multiplicity: `C(p+q, p)` words in total.
pub fn shuffle(u: &Word, v: &Word) -> Vec<Word> {
    fn rec(u: &[usize], v: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
        if u.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(v);
            out.push(Word(w));
            return;
        }
        if v.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            out.push(Word(w));
            return;
        }
        prefix.push(u[0]);
        rec(&u[1..], v, prefix, out);
        prefix.pop();
        prefix.push(v[0]);
        rec(u, &v[1..], prefix, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    rec(&u.0, &v.0, &mut Vec::new(), &mut out);
    out
}

/// Streaming enumeration of S_n in lexicographic order.
pub struct SymmetricGroup {
    next: Option<Vec<usize>>,
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        self.next = next_lex(&current);
        Some(Permutation(current))
    }
}

fn next_lex(v: &[usize]) -> Option<Vec<usize>> {
    let mut v = v.to_vec();
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

/// Iterate over S_n in lexicographic order; refuses `n > cap`.
pub fn enumerate_permutations(n: usize, cap: usize) -> Result<SymmetricGroup> {
    if n > cap {
        return Err(Error::DegreeCap { n, cap });
    }
    Ok(SymmetricGroup {
        next: Some((1..=n).collect()),
    })
}

/// [`enumerate_permutations`] at the default cap.
pub fn symmetric_group(n: usize) -> Result<SymmetricGroup> {
    enumerate_permutations(n, DEFAULT_DEGREE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word(letters: &[usize]) -> Word {
        Word::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(word(&[2, 1]).standardize(), perm("21"));
        assert_eq!(word(&[1, 1, 2, 3]).standardize(), perm("1234"));
        // v = st(w|_[3,7]) for w = 2457163
        let w = perm("2457163");
        assert_eq!(w.restrict(3, 7).standardize(), perm("23541"));
    }

    #[test]
    fn descents_and_peaks() {
        let w = perm("612543");
        assert_eq!(w.descent_set().elems, vec![1, 4, 5]);
        assert_eq!(w.peak_set().elems, vec![4]);
        let wi = perm("236541");
        assert_eq!(wi.descent_set().elems, vec![3, 4, 5]);
        assert_eq!(wi.peak_set().elems, vec![3]);
        assert_eq!(Permutation::identity(5).descent_set().elems, Vec::<usize>::new());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm("612543").inverse(), perm("236541"));
        assert_eq!(perm("5172364").inverse(), perm("2457163"));
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
    }

    #[test]
    fn restriction() {
        let w = perm("2457163");
        assert_eq!(w.restrict(1, 2), word(&[2, 1]));
        assert_eq!(w.restrict(1, 7), w.as_word());
        assert_eq!(w.restrict(5, 4), Word::empty());
    }

    #[test]
    fn shuffles() {
        let s = shuffle(&word(&[1]), &word(&[2]));
        assert_eq!(s, vec![word(&[1, 2]), word(&[2, 1])]);
        assert_eq!(shuffle(&word(&[1, 2]), &word(&[3, 4, 5])).len(), 10);
        let s = shuffle(&word(&[1, 2]), &word(&[3, 4]));
        assert_eq!(s.iter().filter(|w| w.letters() == [1, 3, 2, 4]).count(), 1);
    }

    #[test]
    fn shifting() {
        assert_eq!(word(&[1, 2, 3]).shift(2), word(&[3, 4, 5]));
        assert_eq!(word(&[1, 2]).shift(0), word(&[1, 2]));
    }

    #[test]
    fn sn_enumeration() {
        assert_eq!(symmetric_group(3).unwrap().count(), 6);
        let only: Vec<_> = symmetric_group(0).unwrap().collect();
        assert_eq!(only, vec![Permutation::empty()]);
        assert_eq!(symmetric_group(8).unwrap().count(), 40320);
        assert!(enumerate_permutations(10, 9).is_err());
    }

    #[test]
    fn standardize_commutes_with_first_two_swap() {
        // brute force over words on [4] of length ≤ 5; the identity needs the
        // first two letters distinct (ties standardize in reading order)
        for len in 2..=5usize {
            let mut stack = vec![Vec::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == len {
                    if prefix[0] == prefix[1] {
                        continue;
                    }
                    let w = Word(prefix.clone());
                    let swapped = {
                        let mut v = prefix.clone();
                        v.swap(0, 1);
                        Word(v)
                    };
                    assert_eq!(swapped.standardize(), w.standardize().swap_first_two());
                    continue;
                }
                for x in 1..=4 {
                    let mut next = prefix.clone();
                    next.push(x);
                    stack.push(next);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn standardize_idempotent_on_permutations(n in 0usize..7, seed in 0u64..1000) {
            let perms: Vec<_> = symmetric_group(n).unwrap().collect();
            let w = &perms[(seed as usize) % perms.len().max(1)];
            prop_assert_eq!(&w.as_word().standardize(), w);
        }

        #[test]
        fn shuffle_multiplicity(p in 0usize..5, q in 0usize..5) {
            let u = Word((1..=p).collect::<Vec<_>>());
            let v = Word((1..=q).collect::<Vec<_>>());
            let total = shuffle(&u, &v).len();
            let binom = (1..=q).fold(1usize, |acc, i| acc * (p + i) / i);
            prop_assert_eq!(total, binom);
        }
    }
}
