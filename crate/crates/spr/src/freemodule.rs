//! Free ℤ-modules on an ordered basis, with the linear-extension and tensor
//! helpers the product and coproduct maps need.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An integer linear combination of basis elements of type `K`, stored
/// sparsely with zero coefficients pruned.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModuleElement<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for ModuleElement<K> {
    fn default() -> Self {
        ModuleElement { terms: BTreeMap::new() }
    }
}

impl<K: Ord> ModuleElement<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `k` with coefficient one.
    pub fn basis(k: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, 1);
        ModuleElement { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (K, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, i64)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Adds `c` to the coefficient of `k`, pruning zeros.
    pub fn add_term(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let next = o.get() + c;
                if next == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = next;
                }
            }
        }
    }

    pub fn scaled(mut self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
        self
    }

    /// Linear extension of a basis map `K -> Module(L)`.
    pub fn map_terms<L: Ord>(&self, f: impl Fn(&K) -> ModuleElement<L>) -> ModuleElement<L> {
        let mut out = ModuleElement::zero();
        for (k, c) in self.terms() {
            for (l, d) in f(k).into_terms() {
                out.add_term(l, c * d);
            }
        }
        out
    }

    /// Linear extension of a basis relabelling `K -> L`.
    pub fn map_basis<L: Ord>(&self, f: impl Fn(&K) -> L) -> ModuleElement<L> {
        let mut out = ModuleElement::zero();
        for (k, c) in self.terms() {
            out.add_term(f(k), c);
        }
        out
    }

    /// Keeps the terms whose basis element satisfies the predicate.
    pub fn filter(&self, keep: impl Fn(&K) -> bool) -> Self
    where
        K: Clone,
    {
        ModuleElement {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> ModuleElement<K> {
    /// Sum over an iterator of elements.
    pub fn sum(it: impl IntoIterator<Item = ModuleElement<K>>) -> Self {
        let mut out = Self::zero();
        for x in it {
            out += x;
        }
        out
    }
}

/// Bilinear pairing with orthonormal bases: `⟨k, l⟩ = δ_{k,l}`.
pub fn delta_pairing<K: Ord>(a: &ModuleElement<K>, b: &ModuleElement<K>) -> i64 {
    a.terms().map(|(k, c)| c * b.coeff(k)).sum()
}

/// Tensor product of two elements, with basis the pairs of bases.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(
    a: &ModuleElement<A>,
    b: &ModuleElement<B>,
) -> ModuleElement<(A, B)> {
    let mut out = ModuleElement::zero();
    for (k, c) in a.terms() {
        for (l, d) in b.terms() {
            out.add_term((k.clone(), l.clone()), c * d);
        }
    }
    out
}

/// Applies `f ⊗ g` to a tensor element.
pub fn tensor_map<A: Ord, B: Ord, C: Ord + Clone, D: Ord + Clone>(
    x: &ModuleElement<(A, B)>,
    f: impl Fn(&A) -> ModuleElement<C>,
    g: impl Fn(&B) -> ModuleElement<D>,
) -> ModuleElement<(C, D)> {
    x.map_terms(|(a, b)| tensor(&f(a), &g(b)))
}

impl<K: Ord> AddAssign for ModuleElement<K> {
    fn add_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord> SubAssign for ModuleElement<K> {
    fn sub_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
    }
}

impl<K: Ord> Add for ModuleElement<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<K: Ord> Sub for ModuleElement<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<K: Ord> Neg for ModuleElement<K> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(-1)
    }
}

impl<K: Ord> Mul<i64> for ModuleElement<K> {
    type Output = Self;
    fn mul(self, c: i64) -> Self {
        self.scaled(c)
    }
}

impl<K: Ord + fmt::Display> fmt::Display for ModuleElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = ModuleElement<&'static str>;

    #[test]
    fn arithmetic() {
        let a = E::basis("x") + E::basis("y").scaled(2);
        let b = E::basis("x").scaled(-1) + E::basis("z");
        let s = a.clone() + b.clone();
        assert_eq!(s.coeff(&"x"), 0);
        // the cancelled x term is pruned
        assert_eq!(s.support_len(), 2);
        assert!((a.clone() - a.clone()).is_zero());
        assert_eq!((b.clone() * 3).coeff(&"z"), 3);
        assert_eq!((-a.clone()).coeff(&"y"), -2);
        assert_eq!(E::sum([a.clone(), b]).coeff(&"y"), 2);
        assert_eq!(a.to_string(), "x + 2*y");
        assert_eq!(E::zero().to_string(), "0");
        assert_eq!((E::basis("q").scaled(-1)).to_string(), "-q");
    }

    #[test]
    fn linear_maps() {
        let a = E::basis("x") + E::basis("y").scaled(3);
        let doubled = a.map_terms(|k| E::basis(*k).scaled(2));
        assert_eq!(doubled, a.clone().scaled(2));
        let merged = a.map_basis(|_| "w");
        assert_eq!(merged.coeff(&"w"), 4);
        assert_eq!(a.filter(|k| *k == "y").support_len(), 1);
    }

    #[test]
    fn tensors_and_pairing() {
        let a = E::basis("x") + E::basis("y");
        let b = E::basis("u").scaled(2);
        let t = tensor(&a, &b);
        assert_eq!(t.coeff(&("x", "u")), 2);
        assert_eq!(t.support_len(), 2);
        let swapped = tensor_map(&t, |k| E::basis(*k), |k| E::basis(*k));
        assert_eq!(swapped, t);
        assert_eq!(delta_pairing(&a, &a), 2);
        assert_eq!(delta_pairing(&a, &b.map_basis(|_| "x")), 2);
        assert_eq!(delta_pairing(&a, &E::zero()), 0);
    }
}
