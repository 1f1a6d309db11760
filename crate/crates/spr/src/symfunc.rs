//! Quasisymmetric and noncommutative symmetric functions, the peak
//! subalgebra, Schur-type families, the maps between them, and exact
//! decompositions against the tableau-defined bases.
//!
//! Coordinate conventions:
//!
//! * a `Qsym` is a `ModuleElement<Composition>` in the fundamental (`F`)
//!   basis; the monomial (`M`) basis appears only through [`m_to_f`] and
//!   [`f_to_m`];
//! * an `Nsym` is a `ModuleElement<Composition>` in the ribbon (`R`) basis;
//!   the complete (`H`) basis goes through [`h_to_r`] and [`r_to_h`];
//! * the peak algebra lives on `ModuleElement<PeakSet>`;
//! * the symmetric subring is handled in Schur coordinates
//!   (`ModuleElement<Partition>`) and its shifted analog in P-function
//!   coordinates (`ModuleElement<StrictPartition>`); both embed into `Qsym`
//!   by expanding each basis element.

use crate::combinat::{
    enumerate_peak_sets, Composition, DescentSet, Partition, PeakSet, StrictPartition,
};
use crate::error::{Error, Result};
use crate::freemodule::ModuleElement;
use crate::hopf::PermElement;
use crate::insertion::rectify;
use crate::tableaux::{
    enumerate_shsyt, enumerate_skew_shsyt, enumerate_shsyt_pm, enumerate_syt, enumerate_syt_pm,
    primings_of_shifted, ShiftedTableau, YoungTableau,
};
use crate::words::{shuffle, Permutation};
use itertools::Itertools;
use num::{BigRational, One, Zero};
use std::collections::BTreeMap;

pub type Qsym = ModuleElement<Composition>;
pub type Nsym = ModuleElement<Composition>;
pub type PeakElement = ModuleElement<PeakSet>;

/// The common degree of the index compositions, if homogeneous.
pub fn qsym_degree(x: &Qsym) -> Option<usize> {
    let mut it = x.support().map(Composition::degree);
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}

/// Subsets of `universe`, each returned sorted.
fn subsets(universe: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << universe.len());
    for mask in 0u64..(1 << universe.len()) {
        out.push(
            universe
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &x)| x)
                .collect(),
        );
    }
    out
}

fn comp_of_set(n: usize, elems: Vec<usize>) -> Composition {
    DescentSet::new(n, elems).expect("subset of [n-1]").to_composition()
}

/// All elements of `[1, n-1]` missing from `d`.
fn complement_pool(n: usize, d: &[usize]) -> Vec<usize> {
    (1..n).filter(|i| !d.contains(i)).collect()
}

/// Basis change into the fundamental basis: each `M_α` expands by
/// inclusion-exclusion over descent supersets.
pub fn m_to_f(x: &Qsym) -> Qsym {
    x.map_terms(|alpha| {
        let n = alpha.degree();
        let d = alpha.descent_set().elems;
        let mut out = Qsym::zero();
        for extra in subsets(&complement_pool(n, &d)) {
            let sign = if extra.len() % 2 == 0 { 1 } else { -1 };
            let mut e = d.clone();
            e.extend(extra);
            e.sort_unstable();
            out.add_term(comp_of_set(n, e), sign);
        }
        out
    })
}

/// Basis change into the monomial basis: `F_α = Σ_{D(β) ⊇ D(α)} M_β`.
pub fn f_to_m(x: &Qsym) -> Qsym {
    x.map_terms(|alpha| {
        let n = alpha.degree();
        let d = alpha.descent_set().elems;
        let mut out = Qsym::zero();
        for extra in subsets(&complement_pool(n, &d)) {
            let mut e = d.clone();
            e.extend(extra);
            e.sort_unstable();
            out.add_term(comp_of_set(n, e), 1);
        }
        out
    })
}

/// A permutation with descent composition exactly `alpha`: blocks are filled
/// with increasing runs, later blocks receiving smaller values.
pub fn descent_representative(alpha: &Composition) -> Permutation {
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(alpha.len());
    let mut next = 1;
    for &len in alpha.parts().iter().rev() {
        blocks.push((next..next + len).collect());
        next += len;
    }
    blocks.reverse();
    Permutation::new(blocks.concat()).expect("block filling is bijective")
}

/// Product in the fundamental basis:
/// `F_{c(u)} F_{c(v)} = Σ_{w ∈ u ⧢ shift(v)} F_{c(w)}`.
pub fn qsym_product(x: &Qsym, y: &Qsym) -> Qsym {
    let mut out = Qsym::zero();
    for (alpha, c) in x.terms() {
        for (beta, d) in y.terms() {
            let u = descent_representative(alpha);
            let v = descent_representative(beta).as_word().shift(alpha.degree());
            for w in shuffle(&u.as_word(), &v) {
                let w = Permutation::new(w.letters().to_vec()).expect("disjoint shuffle");
                out.add_term(w.descent_composition(), c * d);
            }
        }
    }
    out
}

/// `π': ℤ𝔖 → QSym`, `w ↦ F_{c(w)}`.
pub fn pi_prime(a: &PermElement) -> Qsym {
    a.map_basis(Permutation::descent_composition)
}

/// The quotient-level counterpart on Knuth classes: `[U] ↦ F_{c(U)}`.
pub fn pi_pr(x: &ModuleElement<YoungTableau>) -> Qsym {
    x.map_basis(YoungTableau::descent_composition)
}

/// Product in the complete basis: `H_α H_β = H_{α·β}`.
pub fn nsym_product_h(x: &Nsym, y: &Nsym) -> Nsym {
    let mut out = Nsym::zero();
    for (alpha, c) in x.terms() {
        for (beta, d) in y.terms() {
            out.add_term(alpha.concat(beta), c * d);
        }
    }
    out
}

/// Coproduct in the complete basis: `Δ(H_n) = Σ_k H_k ⊗ H_{n-k}`, extended
/// multiplicatively over the parts.
pub fn nsym_coproduct_h(x: &Nsym) -> ModuleElement<(Composition, Composition)> {
    x.map_terms(|alpha| {
        let mut acc: ModuleElement<(Composition, Composition)> =
            ModuleElement::basis((Composition::empty(), Composition::empty()));
        for &part in alpha.parts() {
            let mut next = ModuleElement::zero();
            for ((l, r), c) in acc.terms() {
                for k in 0..=part {
                    let mut lp = l.parts().to_vec();
                    if k > 0 {
                        lp.push(k);
                    }
                    let mut rp = r.parts().to_vec();
                    if part - k > 0 {
                        rp.push(part - k);
                    }
                    next.add_term(
                        (
                            Composition::new(lp).expect("positive parts"),
                            Composition::new(rp).expect("positive parts"),
                        ),
                        c,
                    );
                }
            }
            acc = next;
        }
        acc
    })
}

/// `H_α = Σ_{D(β) ⊆ D(α)} R_β`.
pub fn h_to_r(x: &Nsym) -> Nsym {
    x.map_terms(|alpha| {
        let n = alpha.degree();
        let mut out = Nsym::zero();
        for e in subsets(&alpha.descent_set().elems) {
            out.add_term(comp_of_set(n, e), 1);
        }
        out
    })
}

/// `R_α = Σ_{D(β) ⊆ D(α)} (-1)^{|D(α)| - |D(β)|} H_β`.
pub fn r_to_h(x: &Nsym) -> Nsym {
    x.map_terms(|alpha| {
        let n = alpha.degree();
        let d = alpha.descent_set().elems;
        let mut out = Nsym::zero();
        for e in subsets(&d) {
            let sign = if (d.len() - e.len()) % 2 == 0 { 1 } else { -1 };
            out.add_term(comp_of_set(n, e), sign);
        }
        out
    })
}

/// Peak function `K_P` in the fundamental basis:
/// `2^{|P|+1} Σ_{P ⊆ D(α) △ (D(α)+1)} F_α`.
pub fn peak_k(p: &PeakSet) -> Qsym {
    let n = p.n;
    if n == 0 {
        // degree zero: the unit, with no doubling
        return Qsym::basis(Composition::empty());
    }
    let coeff = 1i64 << (p.len() + 1);
    let mut out = Qsym::zero();
    for e in subsets(&(1..n).collect::<Vec<_>>()) {
        let d = DescentSet::new(n, e).expect("subset of [n-1]");
        if p.is_subset_of_slice(&d.triangle()) {
            out.add_term(d.to_composition(), coeff);
        }
    }
    debug_assert_eq!(m_to_f(&peak_k_m_form(p)), out);
    out
}

/// The same peak function in the monomial basis:
/// `Σ_{P ⊆ D(α) ∪ (D(α)+1)} 2^{ℓ(α)} M_α`.
pub fn peak_k_m_form(p: &PeakSet) -> Qsym {
    let n = p.n;
    let mut out = Qsym::zero();
    for e in subsets(&(1..n).collect::<Vec<_>>()) {
        let d = DescentSet::new(n, e).expect("subset of [n-1]");
        if p.is_subset_of_slice(&d.union_shift()) {
            let alpha = d.to_composition();
            out.add_term(alpha.clone(), 1i64 << alpha.len());
        }
    }
    out
}

/// `s_λ = Σ_{T ∈ SYT(λ)} F_{c(T)}`.
pub fn schur(lam: &Partition) -> Qsym {
    Qsym::sum(
        enumerate_syt(lam)
            .iter()
            .map(|t| Qsym::basis(t.descent_composition())),
    )
}

/// `P_λ = Σ_{S ∈ ShSYT^±(λ)} F_{c(S)}` over marked-standard shifted tableaux
/// with unprimed diagonal.
pub fn schur_p(lam: &StrictPartition) -> Qsym {
    Qsym::sum(
        enumerate_shsyt_pm(lam)
            .iter()
            .map(|s| Qsym::basis(s.descent_composition())),
    )
}

/// `Q_λ = 2^{ℓ(λ)} P_λ`.
pub fn schur_q(lam: &StrictPartition) -> Qsym {
    schur_p(lam).scaled(1 << lam.len())
}

/// `q_n = Q_{(n)}`.
pub fn q_n(n: usize) -> Qsym {
    if n == 0 {
        return Qsym::basis(Composition::empty());
    }
    schur_q(&StrictPartition::new(vec![n]).expect("single part"))
}

/// Modified Schur function `S_λ = Σ_{T ∈ SYT^±(λ)} F_{c(T)}` over marked
/// standard unshifted tableaux.
pub fn modified_schur(lam: &Partition) -> Qsym {
    Qsym::sum(
        enumerate_syt_pm(lam)
            .iter()
            .map(|s| Qsym::basis(s.descent_composition())),
    )
}

/// Embedding of the symmetric subring in Schur coordinates.
pub fn sym_to_qsym(x: &ModuleElement<Partition>) -> Qsym {
    x.map_terms(schur)
}

/// Embedding of the shifted subring in P-function coordinates.
pub fn omega_to_qsym(x: &ModuleElement<StrictPartition>) -> Qsym {
    x.map_terms(schur_p)
}

/// `θ: Λ → Ω` in coordinates: `s_λ ↦ S_λ` (equivalently `h_n ↦ q_n`).
pub fn theta_map(x: &ModuleElement<Partition>) -> Qsym {
    x.map_terms(modified_schur)
}

/// The descent-to-peak map `ϑ: F_α ↦ K_{Peak(α)}`.
pub fn vartheta_map(x: &Qsym) -> Qsym {
    x.map_terms(|alpha| peak_k(&alpha.peak_set()))
}

/// `Θ(H_α) = 2^{ℓ(α)} Σ_{P ⊆ D(α) ∪ (D(α)+1)} Π_P` over peak sets `P`.
pub fn theta_cap_h(alpha: &Composition) -> PeakElement {
    let n = alpha.degree();
    let pool = alpha.descent_set().union_shift();
    let coeff = 1i64 << alpha.len();
    let mut out = PeakElement::zero();
    for p in enumerate_peak_sets(n) {
        if p.is_subset_of_slice(&pool) {
            out.add_term(p, coeff);
        }
    }
    out
}

/// `Θ(R_α) = Σ_{P ⊆ D(α) △ (D(α)+1)} 2^{|P|+1} Π_P` over peak sets `P`.
pub fn theta_cap_r(alpha: &Composition) -> PeakElement {
    let n = alpha.degree();
    let pool = alpha.descent_set().triangle();
    let mut out = PeakElement::zero();
    for p in enumerate_peak_sets(n) {
        if p.is_subset_of_slice(&pool) {
            out.add_term(p.clone(), 1i64 << (p.len() + 1));
        }
    }
    out
}

/// `φ(Π_P) = Σ_λ #{T ∈ ShSYT(λ) : Peak(T) = P} · P_λ` in P coordinates.
pub fn phi_peak(p: &PeakSet) -> ModuleElement<StrictPartition> {
    let mut out = ModuleElement::zero();
    for lam in crate::combinat::enumerate_strict_partitions(p.n) {
        let count = enumerate_shsyt(&lam)
            .iter()
            .filter(|t| t.peak_set() == *p)
            .count() as i64;
        out.add_term(lam, count);
    }
    out
}

/// Exact rational decomposition of a `Qsym` against a spanning family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<K: Ord> {
    pub coefficients: BTreeMap<K, BigRational>,
    pub residual: BTreeMap<Composition, BigRational>,
}

impl<K: Ord> Decomposition<K> {
    /// The coefficients as integers, provided the residual vanishes and no
    /// coefficient is fractional.
    pub fn exact_integers(&self) -> Option<ModuleElement<K>>
    where
        K: Clone,
    {
        if !self.residual.is_empty() {
            return None;
        }
        let mut out = ModuleElement::zero();
        for (k, q) in &self.coefficients {
            if !q.is_integer() {
                return None;
            }
            let c: i64 = q.to_integer().try_into().ok()?;
            out.add_term(k.clone(), c);
        }
        Some(out)
    }

    pub fn is_exact(&self) -> bool {
        self.residual.is_empty()
    }
}

type RatVec = BTreeMap<Composition, BigRational>;

fn to_rational(x: &Qsym) -> RatVec {
    x.terms()
        .map(|(k, c)| (k.clone(), BigRational::from_integer(c.into())))
        .collect()
}

fn axpy(target: &mut RatVec, coeff: &BigRational, source: &RatVec) {
    for (k, v) in source {
        let entry = target.entry(k.clone()).or_insert_with(BigRational::zero);
        *entry += coeff * v;
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

/// Solves `x = Σ c_k · basis_k + residual` by Gauss-Jordan elimination over
/// the rationals; dependent basis members simply contribute nothing.
pub fn decompose_in<K: Ord + Clone>(x: &Qsym, basis: &[(K, Qsym)]) -> Decomposition<K> {
    // rows kept in reduced form: pivot -> (vector, expression in the basis)
    let mut rows: BTreeMap<Composition, (RatVec, BTreeMap<K, BigRational>)> = BTreeMap::new();
    for (key, b) in basis {
        let mut v = to_rational(b);
        let mut combo: BTreeMap<K, BigRational> = BTreeMap::new();
        combo.insert(key.clone(), BigRational::one());
        for (pivot, (rv, rc)) in &rows {
            if let Some(c) = v.get(pivot).cloned() {
                let neg = -c;
                axpy(&mut v, &neg, rv);
                for (k, q) in rc {
                    let entry = combo.entry(k.clone()).or_insert_with(BigRational::zero);
                    *entry += &neg * q;
                }
            }
        }
        let Some(pivot) = v.keys().next_back().cloned() else {
            continue; // linearly dependent on earlier members
        };
        let lead = v[&pivot].clone();
        for q in v.values_mut() {
            *q /= &lead;
        }
        for q in combo.values_mut() {
            *q /= &lead;
        }
        // eliminate the new pivot from the existing rows
        for (rv, rc) in rows.values_mut() {
            if let Some(c) = rv.get(&pivot).cloned() {
                let neg = -c;
                axpy(rv, &neg, &v);
                for (k, q) in &combo {
                    let entry = rc.entry(k.clone()).or_insert_with(BigRational::zero);
                    *entry += &neg * q;
                }
            }
        }
        rows.insert(pivot, (v, combo));
    }
    let mut residual = to_rational(x);
    let mut coefficients: BTreeMap<K, BigRational> = BTreeMap::new();
    for (pivot, (rv, rc)) in &rows {
        if let Some(c) = residual.get(pivot).cloned() {
            let neg = -c.clone();
            axpy(&mut residual, &neg, rv);
            for (k, q) in rc {
                let entry = coefficients.entry(k.clone()).or_insert_with(BigRational::zero);
                *entry += &c * q;
            }
        }
    }
    coefficients.retain(|_, q| !q.is_zero());
    Decomposition { coefficients, residual }
}

/// Decomposition against `{s_λ : λ ⊢ n}`.
pub fn decompose_schur(x: &Qsym, n: usize) -> Decomposition<Partition> {
    let basis: Vec<_> = crate::combinat::enumerate_partitions(n)
        .into_iter()
        .map(|lam| {
            let f = schur(&lam);
            (lam, f)
        })
        .collect();
    decompose_in(x, &basis)
}

/// Decomposition against `{P_λ : λ ⊢ n strict}`.
pub fn decompose_schur_p(x: &Qsym, n: usize) -> Decomposition<StrictPartition> {
    let basis: Vec<_> = crate::combinat::enumerate_strict_partitions(n)
        .into_iter()
        .map(|lam| {
            let f = schur_p(&lam);
            (lam, f)
        })
        .collect();
    decompose_in(x, &basis)
}

/// Decomposition against `{Q_λ : λ ⊢ n strict}`.
pub fn decompose_schur_q(x: &Qsym, n: usize) -> Decomposition<StrictPartition> {
    let basis: Vec<_> = crate::combinat::enumerate_strict_partitions(n)
        .into_iter()
        .map(|lam| {
            let f = schur_q(&lam);
            (lam, f)
        })
        .collect();
    decompose_in(x, &basis)
}

/// Decomposition against the peak functions `{K_P}` of degree `n`.
pub fn decompose_k(x: &Qsym, n: usize) -> Decomposition<PeakSet> {
    let basis: Vec<_> = enumerate_peak_sets(n)
        .into_iter()
        .map(|p| {
            let f = peak_k(&p);
            (p, f)
        })
        .collect();
    decompose_in(x, &basis)
}

/// Shifted Littlewood-Richardson coefficients: `b^ν_{λμ}` counts standard
/// skew fillings of `ν/λ` rectifying to a fixed standard tableau of shape
/// `μ` (the count is independent of that choice).
pub fn shifted_lr(
    lam: &StrictPartition,
    mu: &StrictPartition,
    cap: usize,
) -> Result<ModuleElement<StrictPartition>> {
    let n = lam.degree() + mu.degree();
    if n > cap {
        return Err(Error::DegreeCap { n, cap });
    }
    let target = enumerate_shsyt(mu)
        .into_iter()
        .next()
        .unwrap_or_else(ShiftedTableau::empty);
    let mut out = ModuleElement::zero();
    for nu in crate::combinat::enumerate_strict_partitions_containing(n, lam) {
        let count = enumerate_skew_shsyt(&nu, lam)?
            .iter()
            .filter(|s| rectify(s) == target)
            .count() as i64;
        out.add_term(nu, count);
    }
    Ok(out)
}

/// `2^{ℓ(λ)} Σ_{S ∈ ShSYT^±(λ), |S| = T} F_{c(S)}`; equals `K_{Peak(T)}`.
pub fn kf1_expand(t: &ShiftedTableau) -> Qsym {
    let lam = t.shape().expect("standard tableau key");
    Qsym::sum(
        primings_of_shifted(t)
            .iter()
            .map(|s| Qsym::basis(s.descent_composition())),
    )
    .scaled(1 << lam.len())
}

/// Count of primings of a standard shifted tableau with a prescribed descent
/// set, together with whether the peak-containment hypothesis held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkedDescentCount {
    pub count: usize,
    pub hypothesis_holds: bool,
}

/// `#{S ∈ ShSYT^±(λ) : Des(S) = D, |S| = T}`; under the hypothesis
/// `Peak(T) ⊆ D △ (D+1)` this equals `2^{|Peak(T)|+1-ℓ(λ)}`.
pub fn count_marked_with_descents(t: &ShiftedTableau, d: &DescentSet) -> MarkedDescentCount {
    let hypothesis_holds = t.peak_set().is_subset_of_slice(&d.triangle());
    let count = primings_of_shifted(t)
        .iter()
        .filter(|s| s.descent_set() == *d)
        .count();
    MarkedDescentCount { count, hypothesis_holds }
}

/// Canonical pairing `⟨R_α, F_β⟩ = δ` on homogeneous elements of one degree.
pub fn pairing_qsym_nsym(a: &Nsym, f: &Qsym) -> Result<i64> {
    match (qsym_degree(a), qsym_degree(f)) {
        (Some(p), Some(q)) if p != q => Err(Error::DegreeMismatch { left: p, right: q }),
        _ => Ok(crate::freemodule::delta_pairing(a, f)),
    }
}

/// Pairing `[Π_P, K_Q] = δ`: decomposes `f` in the peak basis first and
/// reports non-membership.
pub fn pairing_peak(a: &PeakElement, f: &Qsym) -> Result<i64> {
    let n = match (a.support().next().map(|p| p.n), qsym_degree(f)) {
        (Some(p), Some(q)) if p != q => return Err(Error::DegreeMismatch { left: p, right: q }),
        (_, Some(q)) => q,
        (Some(p), None) => p,
        (None, None) => return Ok(0),
    };
    let dec = decompose_k(f, n);
    let k_coeffs = dec.exact_integers().ok_or_else(|| Error::Invalid {
        kind: "peak pairing",
        reason: "argument is not an integer combination of peak functions".into(),
    })?;
    Ok(crate::freemodule::delta_pairing(a, &k_coeffs))
}

/// Monomial expansion truncated to `vars` variables; keys are exponent
/// vectors of length `vars`. Truncations at `vars ≥ degree` are faithful.
pub fn monomial_expansion(x: &Qsym, vars: usize) -> ModuleElement<Vec<usize>> {
    f_to_m(x).map_terms(|alpha| {
        let parts = alpha.parts();
        let mut out = ModuleElement::zero();
        if parts.len() > vars {
            return out;
        }
        for positions in (0..vars).combinations(parts.len()) {
            let mut exps = vec![0usize; vars];
            for (slot, &i) in positions.iter().enumerate() {
                exps[i] = parts[slot];
            }
            out.add_term(exps, 1);
        }
        out
    })
}
