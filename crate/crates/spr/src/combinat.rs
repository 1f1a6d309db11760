//! Compositions, partitions, descent sets and peak sets, together with the
//! bijections and orders among them.
//!
//! A composition of `n` corresponds bijectively to a subset of `[1, n-1]`
//! via its partial sums; the refining order on compositions is reverse
//! containment of those subsets. Peak sets are the subsets of `[2, n-1]`
//! without consecutive elements.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A composition: an ordered tuple of positive parts.
///
/// The empty composition is the unique composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

/// An ordered tuple of nonnegative parts. Length counts positive parts only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<usize>);

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

/// Strictly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrictPartition(Vec<usize>);

/// A subset of `[1, n-1]` attached to its degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DescentSet {
    pub n: usize,
    /// Sorted, duplicate-free.
    pub elems: Vec<usize>,
}

/// A subset of `[2, n-1]` without consecutive elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PeakSet {
    pub n: usize,
    /// Sorted, duplicate-free, no two consecutive, no element equal to 1.
    pub elems: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid {
                kind: "composition",
                reason: "parts must be positive".into(),
            });
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The descent set `{a_1, a_1+a_2, ...}` of the composition.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.degree();
        let mut elems = Vec::with_capacity(self.0.len().saturating_sub(1));
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            elems.push(acc);
        }
        DescentSet { n, elems }
    }

    /// `self` refines `other`: true iff `D(other) ⊆ D(self)`.
    pub fn refines(&self, other: &Composition) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(other.descent_set().is_subset_of(&self.descent_set()))
    }

    pub fn peak_set(&self) -> PeakSet {
        self.descent_set().peak_set()
    }

    /// Concatenation of parts.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// The partition obtained by sorting the parts decreasingly.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of strictly positive parts.
    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.degree() == 0
    }

    /// Drops zero parts, keeping the order of the positive ones.
    pub fn to_composition(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// `self ⪯ β` in the sense of refinement of weak compositions: the
    /// positive parts of `self` refine `β`.
    pub fn refines(&self, beta: &Composition) -> Result<bool> {
        self.to_composition().refines(beta)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid {
                kind: "partition",
                reason: "parts must be positive and weakly decreasing".into(),
            });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Invalid {
                kind: "strict partition",
                reason: "parts must be positive and strictly decreasing".into(),
            });
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `mu ⊆ lambda` as shifted shapes (rowwise containment).
    pub fn contains(&self, mu: &StrictPartition) -> bool {
        mu.0.len() <= self.0.len() && mu.0.iter().zip(&self.0).all(|(&m, &l)| m <= l)
    }
}

impl DescentSet {
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        if let Some(&e) = elems.iter().find(|&&e| e == 0 || e >= n.max(1)) {
            return Err(Error::OutOfRange {
                elem: e,
                max: n.saturating_sub(1),
            });
        }
        Ok(DescentSet { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        DescentSet { n, elems: Vec::new() }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &DescentSet) -> bool {
        self.elems.iter().all(|&e| other.contains(e))
    }

    /// Inverse of [`Composition::descent_set`].
    pub fn to_composition(&self) -> Composition {
        if self.n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(self.elems.len() + 1);
        let mut prev = 0;
        for &e in &self.elems {
            parts.push(e - prev);
            prev = e;
        }
        parts.push(self.n - prev);
        Composition(parts)
    }

    /// `Peak(D) = {i ∈ D \ {1} : i-1 ∉ D}`.
    pub fn peak_set(&self) -> PeakSet {
        let elems = self
            .elems
            .iter()
            .copied()
            .filter(|&i| i > 1 && !self.contains(i - 1))
            .collect();
        PeakSet { n: self.n, elems }
    }

    /// `D △ (D+1) = D\(D+1) ∪ (D+1)\D`, a subset of `[1, n]`.
    pub fn triangle(&self) -> Vec<usize> {
        let shifted: Vec<usize> = self.elems.iter().map(|&e| e + 1).collect();
        let mut out: Vec<usize> = self
            .elems
            .iter()
            .copied()
            .filter(|e| !shifted.contains(e))
            .chain(shifted.iter().copied().filter(|e| !self.contains(*e)))
            .collect();
        out.sort_unstable();
        out
    }

    /// `D ∪ (D+1)`, a subset of `[1, n]`.
    pub fn union_shift(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .elems
            .iter()
            .flat_map(|&e| [e, e + 1])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl PeakSet {
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        for (k, &e) in elems.iter().enumerate() {
            if e < 2 || e >= n.max(1) {
                return Err(Error::OutOfRange {
                    elem: e,
                    max: n.saturating_sub(1),
                });
            }
            if k > 0 && elems[k - 1] + 1 == e {
                return Err(Error::Invalid {
                    kind: "peak set",
                    reason: format!("consecutive elements {} and {e}", e - 1),
                });
            }
        }
        Ok(PeakSet { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        PeakSet { n, elems: Vec::new() }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn is_subset_of_slice(&self, set: &[usize]) -> bool {
        self.elems.iter().all(|e| set.contains(e))
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

impl AsRef<[usize]> for Composition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl AsRef<[usize]> for Partition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl AsRef<[usize]> for StrictPartition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Display for PeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}@{}",
            self.elems.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
            self.n
        )
    }
}

/// All compositions of `n`, in lexicographic order of descent-set bitmasks.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u64..(1 << (n - 1)) {
        let elems: Vec<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        out.push(DescentSet { n, elems }.to_composition());
    }
    out
}

/// All subsets of `[1, n-1]` as descent sets, in bitmask order.
pub fn enumerate_descent_sets(n: usize) -> Vec<DescentSet> {
    if n == 0 {
        return vec![DescentSet::empty(0)];
    }
    (0u64..(1 << (n - 1)))
        .map(|mask| DescentSet {
            n,
            elems: (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect(),
        })
        .collect()
}

/// All peak sets in `[n-1]`: subsets of `[2, n-1]` without consecutive
/// elements, in bitmask order.
pub fn enumerate_peak_sets(n: usize) -> Vec<PeakSet> {
    if n < 3 {
        return vec![PeakSet::empty(n)];
    }
    let bits = n - 2; // candidates 2..=n-1
    (0u64..(1 << bits))
        .filter(|mask| mask & (mask >> 1) == 0)
        .map(|mask| PeakSet {
            n,
            elems: (2..n).filter(|&i| mask >> (i - 2) & 1 == 1).collect(),
        })
        .collect()
}

fn partitions_rec(n: usize, max: usize, strict: bool, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    let top = n.min(max);
    for p in (1..=top).rev() {
        prefix.push(p);
        let next_max = if strict { p.saturating_sub(1) } else { p };
        partitions_rec(n - p, next_max, strict, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut raw = Vec::new();
    partitions_rec(n, n, false, &mut Vec::new(), &mut raw);
    raw.into_iter().map(Partition).collect()
}

/// All strict partitions of `n` in reverse-lexicographic order.
pub fn enumerate_strict_partitions(n: usize) -> Vec<StrictPartition> {
    let mut raw = Vec::new();
    partitions_rec(n, n, true, &mut Vec::new(), &mut raw);
    raw.into_iter().map(StrictPartition).collect()
}

/// Strict partitions of `n` whose shifted shape contains `mu`.
pub fn enumerate_strict_partitions_containing(n: usize, mu: &StrictPartition) -> Vec<StrictPartition> {
    enumerate_strict_partitions(n)
        .into_iter()
        .filter(|l| l.contains(mu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn descent_set_of_composition() {
        assert_eq!(comp(&[1, 3, 2]).descent_set(), DescentSet::new(6, vec![1, 4]).unwrap());
        assert_eq!(comp(&[6]).descent_set(), DescentSet::empty(6));
        // descent data of w = 612543
        assert_eq!(
            comp(&[1, 3, 1, 1]).descent_set(),
            DescentSet::new(6, vec![1, 4, 5]).unwrap()
        );
    }

    #[test]
    fn composition_of_subset() {
        assert_eq!(
            DescentSet::new(6, vec![1, 4, 5]).unwrap().to_composition(),
            comp(&[1, 3, 1, 1])
        );
        assert_eq!(DescentSet::empty(5).to_composition(), comp(&[5]));
        assert_eq!(
            DescentSet::new(4, vec![1, 2, 3]).unwrap().to_composition(),
            comp(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn roundtrip_composition_descent_set() {
        for n in 0..=10 {
            for alpha in enumerate_compositions(n) {
                assert_eq!(alpha.descent_set().to_composition(), alpha);
            }
            for d in enumerate_descent_sets(n) {
                assert_eq!(d.to_composition().descent_set(), d);
            }
        }
    }

    #[test]
    fn refinement() {
        assert!(comp(&[1, 1, 1]).refines(&comp(&[3])).unwrap());
        assert!(!comp(&[2, 1]).refines(&comp(&[1, 2])).unwrap());
        assert!(comp(&[1, 2, 3]).refines(&comp(&[3, 3])).unwrap());
        assert!(comp(&[1, 1]).refines(&comp(&[3])).is_err());
    }

    #[test]
    fn peak_sets() {
        assert_eq!(
            DescentSet::new(6, vec![1, 4, 5]).unwrap().peak_set(),
            PeakSet::new(6, vec![4]).unwrap()
        );
        assert_eq!(DescentSet::empty(6).peak_set(), PeakSet::empty(6));
        assert_eq!(
            DescentSet::new(9, vec![2, 3, 5, 8]).unwrap().peak_set(),
            PeakSet::new(9, vec![2, 5, 8]).unwrap()
        );
    }

    #[test]
    fn triangle_sets() {
        let d = DescentSet::new(9, vec![2, 3, 5, 8]).unwrap();
        assert_eq!(d.triangle(), vec![2, 4, 5, 6, 8, 9]);
        assert_eq!(DescentSet::empty(4).triangle(), Vec::<usize>::new());
        assert_eq!(DescentSet::new(3, vec![1]).unwrap().triangle(), vec![1, 2]);
        // the λ=(4,3,2) descent example: Peak(T) = {2,4,6,8} ⊆ D△(D+1)
        let peak = PeakSet::new(9, vec![2, 4, 6, 8]).unwrap();
        assert!(peak.is_subset_of_slice(&d.triangle()));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_compositions(4).len(), 8);
        assert_eq!(
            enumerate_strict_partitions(5),
            vec![
                StrictPartition::new(vec![5]).unwrap(),
                StrictPartition::new(vec![4, 1]).unwrap(),
                StrictPartition::new(vec![3, 2]).unwrap(),
            ]
        );
        let p5 = enumerate_peak_sets(5);
        assert_eq!(p5.len(), 5);
        assert!(p5.contains(&PeakSet::new(5, vec![2, 4]).unwrap()));
        for n in 1..=10 {
            assert_eq!(enumerate_compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn peak_sets_brute_force() {
        // peak sets are exactly the valid subsets, and each is attained by
        // some composition
        for n in 1..=9 {
            let mut attained: Vec<PeakSet> = enumerate_compositions(n)
                .iter()
                .map(|a| a.peak_set())
                .collect();
            attained.sort();
            attained.dedup();
            let mut listed = enumerate_peak_sets(n);
            listed.sort();
            assert_eq!(attained, listed);
        }
    }

    #[test]
    fn degree_zero_conventions() {
        assert_eq!(enumerate_compositions(0), vec![Composition::empty()]);
        assert_eq!(Composition::empty().descent_set(), DescentSet::empty(0));
    }
}
