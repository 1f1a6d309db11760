//! Orchestrated verification suites: each suite bundles the identities,
//! counting facts, worked examples, and counterexamples that the rest of the
//! library claims, re-checks them at configurable degree caps, and reports
//! per-check pass/fail with the first counterexample found.

use crate::combinat::{
    enumerate_compositions, enumerate_descent_sets, enumerate_partitions, enumerate_peak_sets,
    enumerate_strict_partitions, enumerate_strict_partitions_containing, DescentSet, Partition,
    PeakSet, StrictPartition,
};
use crate::error::{Error, Result};
use crate::freemodule::{delta_pairing, ModuleElement};
use crate::hopf::{
    self, eta, iota_h, iota_r, j_map, mr_coproduct, mr_prime_coproduct, mr_prime_product,
    mr_product, peak_embedding, pr_class, project_to_spr, reading_permutation_syt, spr_class,
    xi_map, PermElement, PrElement, SprElement,
};
use crate::insertion::{
    p_schensted, p_sw, q_sw, rectify, sagan_worley, sagan_worley_prefixes, shifted_knuth_neighbors,
};
use crate::render::render_shifted;
use crate::symfunc::{
    count_marked_with_descents, decompose_k, decompose_schur_p, h_to_r, kf1_expand, m_to_f,
    modified_schur, pairing_qsym_nsym, peak_k, peak_k_m_form, pi_prime, qsym_product, schur_p,
    schur_q, shifted_lr, vartheta_map, Nsym, Qsym,
};
use crate::tableaux::{
    enumerate_shsyt, enumerate_skew_shsyt, enumerate_syt, primings_of_young, ShiftedTableau,
    SkewShiftedTableau, YoungTableau,
};
use crate::words::{symmetric_group, Permutation};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

/// Degree budgets and run parameters for the verification suites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Cap for pure counting/enumeration sweeps (default 9).
    pub cap_count: usize,
    /// Cap for class-level and fiber identities (default 7).
    pub cap_class: usize,
    /// Cap for product/coproduct axiom sweeps (default 5).
    pub cap_hopf: usize,
    /// Worker threads for parallel sweeps; 0 uses the global default.
    pub workers: usize,
    /// Seed for the sampled spot checks beyond the exhaustive caps.
    pub seed: u64,
    /// Number of sampled spot checks per sampled check.
    pub samples: usize,
}

/// Environment variable overriding the default counting cap.
pub const CAP_ENV: &str = "SPR_DEGREE_CAP";

impl Default for Config {
    fn default() -> Self {
        Config { cap_count: 9, cap_class: 7, cap_hopf: 5, workers: 0, seed: 0, samples: 100 }
    }
}

impl Config {
    /// Defaults, with the counting cap optionally overridden by the
    /// `SPR_DEGREE_CAP` environment variable (class/axiom caps are clamped
    /// below it).
    pub fn from_env() -> Result<Self> {
        let mut cfg = Config::default();
        if let Ok(raw) = std::env::var(CAP_ENV) {
            let cap: usize = raw
                .parse()
                .map_err(|_| Error::Parse(format!("bad {CAP_ENV} value: {raw:?}")))?;
            cfg = cfg.with_cap(cap)?;
        }
        Ok(cfg)
    }

    /// Sets the counting cap and clamps the finer caps below it.
    pub fn with_cap(mut self, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::Invalid { kind: "config", reason: "caps must be >= 1".into() });
        }
        self.cap_count = cap;
        self.cap_class = self.cap_class.min(cap);
        self.cap_hopf = self.cap_hopf.min(cap);
        Ok(self)
    }
}

/// One verified statement inside a suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// `"pass"` or `"fail"`.
    pub status: String,
    /// Number of individual comparisons performed.
    pub count: u64,
    /// The first counterexample, rendered term by term.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Outcome of one suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Plain-text rendering, one line per check.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "suite {}: {} ({} checks, {} ms)\n",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.checks.len(),
            self.elapsed_ms
        );
        for c in &self.checks {
            out.push_str(&format!("  [{}] {} ({} comparisons)\n", c.status, c.name, c.count));
            if let Some(ce) = &c.counterexample {
                for line in ce.lines() {
                    out.push_str(&format!("      {line}\n"));
                }
            }
        }
        out
    }
}

/// The available suite names, in canonical order.
pub const SUITES: &[&str] = &[
    "lemma-des",
    "sw-bijection",
    "sk-fibers",
    "right-ideal",
    "left-ideal-counterexample",
    "structure-maps",
    "pf-pro",
    "qk-kf-kf1",
    "dp-counts",
    "lr-shifted",
    "diagrams",
    "j-xi",
    "examples",
];

/// Accumulates comparisons and remembers the first failure.
pub(crate) struct Tally {
    count: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { count: 0, failure: None }
    }

    fn item(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    fn into_check(self, name: &str) -> Check {
        Check {
            name: name.to_string(),
            status: if self.failure.is_none() { "pass" } else { "fail" }.to_string(),
            count: self.count,
            counterexample: self.failure,
        }
    }
}

fn sn(n: usize) -> Vec<Permutation> {
    symmetric_group(n).expect("small degree").collect()
}

fn project_pair(
    x: &ModuleElement<(Permutation, Permutation)>,
) -> ModuleElement<(ShiftedTableau, ShiftedTableau)> {
    x.map_basis(|(a, b)| (p_sw(a), p_sw(b)))
}

fn shifted(rows: Vec<Vec<usize>>) -> ShiftedTableau {
    ShiftedTableau::from_values(rows).expect("literal tableau")
}

fn marked(rows: Vec<Vec<(usize, bool)>>) -> ShiftedTableau {
    ShiftedTableau::from_entries(rows).expect("literal tableau")
}

/// Runs one suite by name.
pub fn run_suite(name: &str, cfg: &Config) -> Result<VerificationReport> {
    if cfg.workers > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::Invalid { kind: "config", reason: e.to_string() })?;
        let mut serial = cfg.clone();
        serial.workers = 0;
        return pool.install(|| run_suite(name, &serial));
    }
    let start = Instant::now();
    let checks = match name {
        "lemma-des" => suite_lemma_des(cfg),
        "sw-bijection" => suite_sw_bijection(cfg),
        "sk-fibers" => suite_sk_fibers(cfg),
        "right-ideal" => suite_right_ideal(cfg),
        "left-ideal-counterexample" => suite_left_ideal(cfg),
        "structure-maps" => suite_structure_maps(cfg),
        "pf-pro" => suite_pf_pro(cfg),
        "qk-kf-kf1" => suite_qk_kf_kf1(cfg),
        "dp-counts" => suite_dp_counts(cfg),
        "lr-shifted" => suite_lr_shifted(cfg)?,
        "diagrams" => suite_diagrams(cfg)?,
        "j-xi" => suite_j_xi(cfg)?,
        "examples" => suite_examples(cfg)?,
        other => {
            return Err(Error::Invalid {
                kind: "suite",
                reason: format!("unknown suite {other:?}; expected one of {SUITES:?}"),
            })
        }
    };
    Ok(VerificationReport {
        suite: name.to_string(),
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Runs every suite in canonical order.
pub fn run_all(cfg: &Config) -> Result<Vec<VerificationReport>> {
    SUITES.iter().map(|s| run_suite(s, cfg)).collect()
}

// --- lemma-des -------------------------------------------------------------

fn suite_lemma_des(cfg: &Config) -> Vec<Check> {
    let max_n = cfg.cap_count.min(8);
    let mut des = Tally::new();
    let mut peak = Tally::new();
    for n in 0..=max_n {
        let results: Vec<(Permutation, bool, bool)> = sn(n)
            .into_par_iter()
            .map(|w| {
                let des_ok = q_sw(&w).descent_set() == w.descent_set();
                let peak_ok = p_sw(&w.inverse()).peak_set() == w.peak_set();
                (w, des_ok, peak_ok)
            })
            .collect();
        for (w, des_ok, peak_ok) in results {
            des.item(des_ok, || {
                format!("w = {w}: Des(Q) = {:?} but Des(w) = {:?}",
                    q_sw(&w).descent_set().elems, w.descent_set().elems)
            });
            peak.item(peak_ok, || {
                format!("w = {w}: Peak(P(w^-1)) = {:?} but Peak(w) = {:?}",
                    p_sw(&w.inverse()).peak_set().elems, w.peak_set().elems)
            });
        }
    }
    vec![
        des.into_check("recording-tableau-descents-match-word"),
        peak.into_check("inverse-insertion-peaks-match-word"),
    ]
}

// --- sw-bijection ----------------------------------------------------------

fn suite_sw_bijection(cfg: &Config) -> Vec<Check> {
    let mut counting = Tally::new();
    for n in 0..=cfg.cap_count.min(9) {
        let mut total: u64 = 0;
        for lam in enumerate_strict_partitions(n) {
            let g = enumerate_shsyt(&lam).len() as u64;
            total += g * g * (1u64 << (n - lam.len()));
        }
        let factorial: u64 = (1..=n as u64).product();
        counting.item(total == factorial, || {
            format!("n = {n}: sum over strict shapes gives {total}, expected {factorial}")
        });
    }
    let mut injective = Tally::new();
    for n in 0..=cfg.cap_count.min(8) {
        let mut seen = BTreeSet::new();
        let mut count = 0u64;
        for w in sn(n) {
            let res = sagan_worley(&w);
            seen.insert((res.p, res.q));
            count += 1;
        }
        injective.item(seen.len() as u64 == count, || {
            format!("n = {n}: only {} distinct (P, Q) pairs from {count} permutations", seen.len())
        });
    }
    vec![
        counting.into_check("squared-tableau-counts-sum-to-factorial"),
        injective.into_check("insertion-injective-on-permutations"),
    ]
}

// --- sk-fibers -------------------------------------------------------------

fn suite_sk_fibers(cfg: &Config) -> Vec<Check> {
    let mut closed = Tally::new();
    let mut connected = Tally::new();
    for n in 1..=cfg.cap_class {
        let mut fibers: BTreeMap<ShiftedTableau, BTreeSet<Permutation>> = BTreeMap::new();
        for w in sn(n) {
            fibers.entry(p_sw(&w)).or_default().insert(w);
        }
        for (t, fiber) in &fibers {
            for w in fiber {
                for v in shifted_knuth_neighbors(w) {
                    closed.item(fiber.contains(&v), || {
                        format!("n = {n}: move {w} -> {v} leaves the fiber of\n{}", render_shifted(t))
                    });
                }
            }
            // breadth-first search within the fiber from one representative
            let rep = fiber.iter().next().expect("nonempty fiber").clone();
            let mut reached = BTreeSet::from([rep.clone()]);
            let mut frontier = vec![rep];
            while let Some(w) = frontier.pop() {
                for v in shifted_knuth_neighbors(&w) {
                    if fiber.contains(&v) && reached.insert(v.clone()) {
                        frontier.push(v);
                    }
                }
            }
            connected.item(reached.len() == fiber.len(), || {
                format!(
                    "n = {n}: fiber of\n{}\nhas {} members but only {} reachable by moves",
                    render_shifted(t), fiber.len(), reached.len()
                )
            });
        }
    }
    vec![
        closed.into_check("knuth-moves-preserve-insertion-tableau"),
        connected.into_check("fibers-connected-under-knuth-moves"),
    ]
}

// --- right-ideal -----------------------------------------------------------

fn suite_right_ideal(cfg: &Config) -> Vec<Check> {
    let mut product = Tally::new();
    for p in 1..cfg.cap_class {
        for q in 1..=cfg.cap_class - p {
            let right = sn(q);
            for u in sn(p) {
                let rep = hopf::reading_permutation(&p_sw(&u));
                if rep == u {
                    continue;
                }
                for w in &right {
                    let a = project_to_spr(&mr_product(
                        &PermElement::basis(u.clone()),
                        &PermElement::basis(w.clone()),
                    ));
                    let b = project_to_spr(&mr_product(
                        &PermElement::basis(rep.clone()),
                        &PermElement::basis(w.clone()),
                    ));
                    product.item(a == b, || {
                        format!("u = {u}, rep = {rep}, w' = {w}: projected products differ:\n{}",
                            diff_terms(&a, &b))
                    });
                }
            }
        }
    }
    let mut coproduct = Tally::new();
    for n in 2..=cfg.cap_class {
        for u in sn(n) {
            let rep = hopf::reading_permutation(&p_sw(&u));
            if rep == u {
                continue;
            }
            let a = project_pair(&mr_coproduct(&PermElement::basis(u.clone())));
            let b = project_pair(&mr_coproduct(&PermElement::basis(rep.clone())));
            coproduct.item(a == b, || {
                format!("u = {u}, rep = {rep}: projected coproducts differ:\n{}", diff_terms(&a, &b))
            });
        }
    }
    // seeded spot checks one degree past the exhaustive sweep
    let mut sampled = Tally::new();
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let total = cfg.cap_class + 1;
    for _ in 0..cfg.samples {
        if total < 3 {
            break;
        }
        let p = rng.gen_range(2..total);
        let q = total - p;
        let mut u: Vec<usize> = (1..=p).collect();
        u.shuffle(&mut rng);
        let u = Permutation::new(u).expect("shuffled identity");
        let neighbors = shifted_knuth_neighbors(&u);
        let v = neighbors.choose(&mut rng).expect("every n >= 2 word has a move").clone();
        let mut w: Vec<usize> = (1..=q).collect();
        w.shuffle(&mut rng);
        let w = Permutation::new(w).expect("shuffled identity");
        let a = project_to_spr(&mr_product(&PermElement::basis(u.clone()), &PermElement::basis(w.clone())));
        let b = project_to_spr(&mr_product(&PermElement::basis(v.clone()), &PermElement::basis(w.clone())));
        sampled.item(a == b, || {
            format!("u = {u}, v = {v}, w' = {w}: projected products differ:\n{}", diff_terms(&a, &b))
        });
    }
    vec![
        product.into_check("projected-product-depends-only-on-class"),
        coproduct.into_check("projected-coproduct-depends-only-on-class"),
        sampled.into_check("sampled-products-one-degree-past-cap"),
    ]
}

// --- left-ideal-counterexample ---------------------------------------------

fn left_projections() -> (SprElement, SprElement) {
    let two: Permutation = "12".parse().expect("literal");
    let left = |s: &str| {
        project_to_spr(&mr_product(
            &PermElement::basis(two.clone()),
            &PermElement::basis(s.parse().expect("literal")),
        ))
    };
    (left("123"), left("213"))
}

fn suite_left_ideal(_cfg: &Config) -> Vec<Check> {
    let (a, b) = left_projections();
    let mut t = Tally::new();
    t.item(a != b, || "the two projected products coincide".to_string());
    t.item(a.terms().map(|(_, c)| c).sum::<i64>() == 10, || {
        format!("first product has total mass {}", a.terms().map(|(_, c)| c).sum::<i64>())
    });
    t.item(b.terms().map(|(_, c)| c).sum::<i64>() == 10, || {
        format!("second product has total mass {}", b.terms().map(|(_, c)| c).sum::<i64>())
    });
    vec![t.into_check("left-multiplication-escapes-the-ideal")]
}

// --- structure-maps --------------------------------------------------------

fn suite_structure_maps(cfg: &Config) -> Vec<Check> {
    let cap = cfg.cap_hopf;
    let mut iota = Tally::new();
    for n in 0..=cap {
        let group = sn(n);
        for alpha in enumerate_compositions(n) {
            let r = iota_r(&alpha, cap).expect("within cap");
            let expected_r = PermElement::from_terms(
                group.iter().filter(|w| w.descent_composition() == alpha).map(|w| (w.clone(), 1)),
            );
            iota.item(r == expected_r, || format!("ribbon image at {alpha} is wrong"));
            let h = iota_h(&alpha, cap).expect("within cap");
            let d = alpha.descent_set();
            let expected_h = PermElement::from_terms(
                group
                    .iter()
                    .filter(|w| w.descent_set().is_subset_of(&d))
                    .map(|w| (w.clone(), 1)),
            );
            iota.item(h == expected_h, || format!("complete image at {alpha} is wrong"));
        }
    }
    let mut invol = Tally::new();
    for n in 0..=cap + 1 {
        for w in sn(n) {
            invol.item(w.inverse().inverse() == w, || format!("inversion not involutive at {w}"));
        }
    }
    let mut class_sums = Tally::new();
    for n in 1..=cap {
        for alpha in enumerate_compositions(n) {
            let lhs = eta(&iota_r(&alpha, cap).expect("within cap"));
            let mut rhs = PermElement::zero();
            for mu in enumerate_partitions(n) {
                for u in enumerate_syt(&mu) {
                    if u.descent_composition() == alpha {
                        rhs += pr_class(&u, cap).expect("within cap");
                    }
                }
            }
            class_sums.item(lhs == rhs, || {
                format!("inverted ribbon sum at {alpha} is not the matching class sums")
            });
        }
    }
    // product/coproduct duality between the two structures on permutations
    let mut duality = Tally::new();
    for total in 0..=cap {
        for p in 0..=total {
            let q = total - p;
            let whole = sn(total);
            let cops: Vec<_> = whole
                .iter()
                .map(|c| {
                    (
                        mr_prime_coproduct(&PermElement::basis(c.clone())),
                        mr_coproduct(&PermElement::basis(c.clone())),
                    )
                })
                .collect();
            for a in sn(p) {
                for b in sn(q) {
                    let prod = mr_product(&PermElement::basis(a.clone()), &PermElement::basis(b.clone()));
                    let prodp =
                        mr_prime_product(&PermElement::basis(a.clone()), &PermElement::basis(b.clone()));
                    for (c, (copp, cop)) in whole.iter().zip(&cops) {
                        let key = (a.clone(), b.clone());
                        duality.item(prod.coeff(c) == copp.coeff(&key), || {
                            format!("splitting product vs shifted-shuffle coproduct at a={a}, b={b}, c={c}")
                        });
                        duality.item(prodp.coeff(c) == cop.coeff(&key), || {
                            format!("shifted-shuffle product vs splitting coproduct at a={a}, b={b}, c={c}")
                        });
                    }
                }
            }
        }
    }
    let mut adjunctions = adjunction_checks(cap);
    let mut out = vec![
        iota.into_check("descent-sum-embeddings"),
        invol.into_check("inversion-is-an-involution"),
        class_sums.into_check("inverted-ribbon-sums-are-class-sums"),
        duality.into_check("product-coproduct-duality-on-permutations"),
    ];
    out.append(&mut adjunctions);
    out
}

/// The monomial symmetric function indexed by `lam`, in F-coordinates.
fn monomial_sym(lam: &Partition) -> Qsym {
    let mut m = Qsym::zero();
    for alpha in enumerate_compositions(lam.degree()) {
        if alpha.sort_to_partition() == *lam {
            m.add_term(alpha, 1);
        }
    }
    m_to_f(&m)
}

/// The peak-algebra basis element as a ribbon sum inside the R-coordinates.
fn peak_in_nsym(p: &PeakSet) -> Nsym {
    let mut out = Nsym::zero();
    for alpha in enumerate_compositions(p.n) {
        if alpha.peak_set() == *p {
            out.add_term(alpha, 1);
        }
    }
    out
}

/// The five adjunction identities tying the symmetric, quasisymmetric, and
/// peak levels together, swept exhaustively at degree `cap`.
fn adjunction_checks(cap: usize) -> Vec<Check> {
    // 1. forgetting a complete word to the symmetric level is adjoint to
    //    inclusion: <h_sort(alpha), m_lam> = <H_alpha, m_lam>
    let mut first = Tally::new();
    for n in 1..=cap {
        for alpha in enumerate_compositions(n) {
            let h = h_to_r(&Nsym::basis(alpha.clone()));
            for lam in enumerate_partitions(n) {
                let lhs = i64::from(alpha.sort_to_partition() == lam);
                let rhs = pairing_qsym_nsym(&h, &monomial_sym(&lam)).expect("same degree");
                first.item(lhs == rhs, || format!("alpha = {alpha}, lambda = {lam}: {lhs} vs {rhs}"));
            }
        }
    }
    // 2. the peak-to-shifted projection is self-adjoint on Q-functions:
    //    its matrix entries against Q_mu equal the direct peak pairing
    let mut second = Tally::new();
    for n in 1..=cap.min(6) {
        for p in enumerate_peak_sets(n) {
            let phi = crate::symfunc::phi_peak(&p);
            for mu in enumerate_strict_partitions(n) {
                // [phi(Pi_P), Q_mu] with [P_lam, Q_mu] = delta
                let lhs = phi.coeff(&mu);
                let rhs = crate::symfunc::pairing_peak(
                    &ModuleElement::basis(p.clone()),
                    &schur_q(&mu),
                )
                .expect("Q-functions lie in the peak span");
                second.item(lhs == rhs, || format!("P = {p}, mu = {mu}: {lhs} vs {rhs}"));
            }
        }
    }
    // 3. <R_alpha, K_P> = [Theta(R_alpha), K_P]
    let mut third = Tally::new();
    for n in 1..=cap {
        for alpha in enumerate_compositions(n) {
            let theta = crate::symfunc::theta_cap_r(&alpha);
            for p in enumerate_peak_sets(n) {
                let k = peak_k(&p);
                let lhs = pairing_qsym_nsym(&Nsym::basis(alpha.clone()), &k).expect("same degree");
                let rhs = crate::symfunc::pairing_peak(&theta, &k).expect("peak function");
                third.item(lhs == rhs, || format!("alpha = {alpha}, P = {p}: {lhs} vs {rhs}"));
            }
        }
    }
    // 4. <Pi_P, F_beta> = [Pi_P, vartheta(F_beta)]
    let mut fourth = Tally::new();
    for n in 1..=cap {
        for p in enumerate_peak_sets(n) {
            let ribbon_sum = peak_in_nsym(&p);
            for beta in enumerate_compositions(n) {
                let lhs = pairing_qsym_nsym(&ribbon_sum, &Qsym::basis(beta.clone()))
                    .expect("same degree");
                let rhs = crate::symfunc::pairing_peak(
                    &ModuleElement::basis(p.clone()),
                    &vartheta_map(&Qsym::basis(beta.clone())),
                )
                .expect("peak function");
                fourth.item(lhs == rhs, || format!("P = {p}, beta = {beta}: {lhs} vs {rhs}"));
            }
        }
    }
    // 5. <Theta(H_alpha), F_beta> = <H_alpha, vartheta(F_beta)>
    let mut fifth = Tally::new();
    for n in 1..=cap {
        for alpha in enumerate_compositions(n) {
            let theta = crate::symfunc::theta_cap_h(&alpha);
            let theta_ribbons = Nsym::sum(
                theta.terms().map(|(p, c)| peak_in_nsym(p).scaled(c)),
            );
            let h = h_to_r(&Nsym::basis(alpha.clone()));
            for beta in enumerate_compositions(n) {
                let lhs = pairing_qsym_nsym(&theta_ribbons, &Qsym::basis(beta.clone()))
                    .expect("same degree");
                let rhs = pairing_qsym_nsym(&h, &vartheta_map(&Qsym::basis(beta.clone())))
                    .expect("same degree");
                fifth.item(lhs == rhs, || format!("alpha = {alpha}, beta = {beta}: {lhs} vs {rhs}"));
            }
        }
    }
    vec![
        first.into_check("adjunction-complete-vs-monomial"),
        second.into_check("adjunction-peak-projection-on-q-functions"),
        third.into_check("adjunction-ribbon-vs-peak-functions"),
        fourth.into_check("adjunction-peak-sums-vs-descent-to-peak"),
        fifth.into_check("adjunction-theta-vs-vartheta"),
    ]
}

// --- pf-pro ----------------------------------------------------------------

fn suite_pf_pro(cfg: &Config) -> Vec<Check> {
    let mut class_sums = Tally::new();
    for n in 1..=cfg.cap_class {
        for lam in enumerate_strict_partitions(n) {
            let p = schur_p(&lam);
            for t in enumerate_shsyt(&lam) {
                let img = pi_prime(&spr_class(&t, cfg.cap_class).expect("within cap"));
                class_sums.item(img == p, || {
                    format!("class sum of\n{}\nexpands to\n{img}\nnot P_{lam}", render_shifted(&t))
                });
            }
        }
    }
    let mut monomials = Tally::new();
    for n in 1..=cfg.cap_class {
        for lam in enumerate_strict_partitions(n) {
            let truncated = crate::symfunc::monomial_expansion(&schur_p(&lam), 4);
            let mut oracle = ModuleElement::zero();
            for t in crate::tableaux::enumerate_shssyt_pm(&lam, 4) {
                let mut exps = t.weight().parts().to_vec();
                exps.resize(4, 0);
                oracle.add_term(exps, 1);
            }
            monomials.item(truncated == oracle, || {
                format!("4-variable truncation mismatch at lambda = {lam}")
            });
        }
    }
    vec![
        class_sums.into_check("fiber-sums-expand-to-p-functions"),
        monomials.into_check("p-functions-match-semistandard-generating-sums"),
    ]
}

// --- qk-kf-kf1 -------------------------------------------------------------

fn suite_qk_kf_kf1(cfg: &Config) -> Vec<Check> {
    let mut forms = Tally::new();
    for n in 0..=cfg.cap_count.min(8) {
        for p in enumerate_peak_sets(n) {
            forms.item(m_to_f(&peak_k_m_form(&p)) == peak_k(&p), || {
                format!("monomial and fundamental forms differ at P = {p}")
            });
        }
    }
    let mut priming = Tally::new();
    for n in 1..=cfg.cap_class {
        for lam in enumerate_strict_partitions(n) {
            for t in enumerate_shsyt(&lam) {
                priming.item(kf1_expand(&t) == peak_k(&t.peak_set()), || {
                    format!("priming sum of\n{}\nis not the matching peak function", render_shifted(&t))
                });
            }
        }
    }
    let mut expansion = Tally::new();
    for n in 1..=cfg.cap_class {
        for lam in enumerate_strict_partitions(n) {
            let dec = decompose_k(&schur_q(&lam), n).exact_integers();
            match dec {
                None => expansion.item(false, || {
                    format!("Q_{lam} is not an integer combination of peak functions")
                }),
                Some(dec) => {
                    for p in enumerate_peak_sets(n) {
                        let count = enumerate_shsyt(&lam)
                            .iter()
                            .filter(|t| t.peak_set() == p)
                            .count() as i64;
                        expansion.item(dec.coeff(&p) == count, || {
                            format!(
                                "coefficient of K at P = {p} in Q_{lam} is {}, expected {count}",
                                dec.coeff(&p)
                            )
                        });
                    }
                }
            }
        }
    }
    vec![
        forms.into_check("peak-function-forms-agree"),
        priming.into_check("standard-priming-sums-are-peak-functions"),
        expansion.into_check("q-function-peak-expansion-counts-tableaux"),
    ]
}

// --- dp-counts -------------------------------------------------------------

fn shifted_count_check(cap: usize) -> Check {
    let mut t = Tally::new();
    for n in 1..=cap {
        for lam in enumerate_strict_partitions(n) {
            for tab in enumerate_shsyt(&lam) {
                let expected = 1usize << (tab.peak_set().len() + 1 - lam.len());
                for d in enumerate_descent_sets(n) {
                    let res = count_marked_with_descents(&tab, &d);
                    if res.hypothesis_holds {
                        t.item(res.count == expected, || {
                            format!(
                                "T =\n{}\nD = {:?}: found {} markings, expected {expected}",
                                render_shifted(&tab), d.elems, res.count
                            )
                        });
                    }
                }
            }
        }
    }
    t.into_check("shifted-marking-counts-match-power-of-two")
}

/// The four explicitly displayed markings for the three-row example.
pub(crate) fn marked_descent_display() -> (ShiftedTableau, DescentSet, Vec<ShiftedTableau>) {
    let base = vec![vec![1usize, 2, 4, 6], vec![3, 5, 8], vec![7, 9]];
    let d = DescentSet::new(9, vec![2, 3, 5, 8]).expect("valid descent set");
    let primed_sets: [&[usize]; 4] = [&[4, 6], &[4, 5, 6], &[4, 6, 9], &[4, 5, 6, 9]];
    let expected = primed_sets
        .iter()
        .map(|set| {
            marked(
                base.iter()
                    .map(|row| row.iter().map(|&v| (v, set.contains(&v))).collect())
                    .collect(),
            )
        })
        .collect();
    (marked(base.iter().map(|r| r.iter().map(|&v| (v, false)).collect()).collect()), d, expected)
}

fn named_marking_check() -> Check {
    let (t, d, expected) = marked_descent_display();
    let mut tally = Tally::new();
    tally.item(t.peak_set().elems == vec![2, 4, 6, 8], || {
        format!("peak set of the display is {:?}", t.peak_set().elems)
    });
    let found: Vec<ShiftedTableau> = crate::tableaux::primings_of_shifted(&t)
        .into_iter()
        .filter(|s| s.descent_set() == d)
        .collect();
    tally.item(found == expected, || {
        format!(
            "markings with the prescribed descents:\n{}",
            found.iter().map(render_shifted).collect::<Vec<_>>().join("\n--\n")
        )
    });
    tally.into_check("three-row-display-markings-reproduced")
}

fn unshifted_count_check(cap: usize) -> Check {
    let mut t = Tally::new();
    for n in 1..=cap.min(6) {
        for lam in enumerate_partitions(n) {
            for tab in enumerate_syt(&lam) {
                let peak = tab.peak_set();
                let expected = 1usize << (peak.len() + 1);
                for d in enumerate_descent_sets(n) {
                    if !peak.is_subset_of_slice(&d.triangle()) {
                        continue;
                    }
                    let count = primings_of_young(&tab)
                        .iter()
                        .filter(|s| s.descent_set() == d)
                        .count();
                    t.item(count == expected, || {
                        format!("unshifted count {count} != {expected} at D = {:?}", d.elems)
                    });
                }
            }
        }
    }
    t.into_check("unshifted-marking-counts-match-power-of-two")
}

fn suite_dp_counts(cfg: &Config) -> Vec<Check> {
    vec![
        shifted_count_check(cfg.cap_class),
        named_marking_check(),
        unshifted_count_check(cfg.cap_class),
    ]
}

// --- lr-shifted ------------------------------------------------------------

fn suite_lr_shifted(cfg: &Config) -> Result<Vec<Check>> {
    let cap = cfg.cap_class;
    let sp = |parts: &[usize]| StrictPartition::new(parts.to_vec()).expect("strict");
    let mut named = Tally::new();
    let lr11 = shifted_lr(&sp(&[1]), &sp(&[1]), cap)?;
    named.item(lr11 == ModuleElement::basis(sp(&[2])), || format!("P1*P1 gave {lr11:?}"));
    let lr21 = shifted_lr(&sp(&[2]), &sp(&[1]), cap)?;
    named.item(
        lr21 == ModuleElement::basis(sp(&[3])) + ModuleElement::basis(sp(&[2, 1])),
        || format!("P2*P1 gave {lr21:?}"),
    );
    let mut oracle = Tally::new();
    let mut independent = Tally::new();
    for p in 1..cap {
        for q in 1..=cap - p {
            for lam in enumerate_strict_partitions(p) {
                for mu in enumerate_strict_partitions(q) {
                    let rule = shifted_lr(&lam, &mu, cap)?;
                    let prod = qsym_product(&schur_p(&lam), &schur_p(&mu));
                    match decompose_schur_p(&prod, p + q).exact_integers() {
                        None => oracle.item(false, || {
                            format!("P_{lam} P_{mu} is not an integer P-combination")
                        }),
                        Some(dec) => oracle.item(dec == rule, || {
                            format!("P_{lam} P_{mu}: rule {rule:?} but product {dec:?}")
                        }),
                    }
                    // independence of the fixed rectification target
                    let mut per_target = Vec::new();
                    for target in enumerate_shsyt(&mu) {
                        let mut out: ModuleElement<StrictPartition> = ModuleElement::zero();
                        for nu in enumerate_strict_partitions_containing(p + q, &lam) {
                            let count = enumerate_skew_shsyt(&nu, &lam)?
                                .iter()
                                .filter(|s| rectify(s) == target)
                                .count() as i64;
                            out.add_term(nu, count);
                        }
                        per_target.push(out);
                    }
                    independent.item(per_target.windows(2).all(|w| w[0] == w[1]), || {
                        format!("coefficients vary with the target at ({lam}, {mu})")
                    });
                }
            }
        }
    }
    Ok(vec![
        named.into_check("two-named-products"),
        oracle.into_check("rule-matches-function-products"),
        independent.into_check("coefficients-independent-of-rectification-target"),
    ])
}

// --- diagrams --------------------------------------------------------------

fn suite_diagrams(cfg: &Config) -> Result<Vec<Check>> {
    let cap = cfg.cap_class;
    // top square: inverted descent sums of peak classes expand to the
    // P-function image of the peak basis
    let mut phi_square = Tally::new();
    for n in 1..=cap.min(6) {
        for p in enumerate_peak_sets(n) {
            let emb = peak_embedding(&p, cap)?;
            let perms =
                PermElement::sum(emb.terms().map(|(t, c)| Ok(spr_class(t, cap)?.scaled(c))).collect::<Result<Vec<_>>>()?);
            let lhs = pi_prime(&perms);
            let rhs = crate::symfunc::omega_to_qsym(&crate::symfunc::phi_peak(&p));
            phi_square.item(lhs == rhs, || format!("routes differ at P = {p}"));
        }
    }
    // i then p is the identity: summed peak functions recover Q
    let mut ip = Tally::new();
    for n in 1..=cap.min(6) {
        for lam in enumerate_strict_partitions(n) {
            let via_k = Qsym::sum(enumerate_shsyt(&lam).iter().map(|t| peak_k(&t.peak_set())));
            ip.item(via_k == schur_q(&lam), || format!("p ∘ i misses Q at {lam}"));
        }
    }
    // right square of the candidate embedding: QSym image of j
    let mut j_square = Tally::new();
    for n in 1..=cfg.cap_hopf {
        for lam in enumerate_strict_partitions(n) {
            for t in enumerate_shsyt(&lam) {
                let img = crate::symfunc::pi_pr(&j_map(&SprElement::basis(t.clone()), cap)?);
                j_square.item(img == peak_k(&t.peak_set()), || {
                    format!("QSym image of j at\n{}\nis not the peak function", render_shifted(&t))
                });
            }
        }
    }
    // left square for the adjoint: class-sum route equality
    let mut xi_square = Tally::new();
    for n in 1..=cfg.cap_hopf {
        for alpha in enumerate_compositions(n) {
            let mut input = PrElement::zero();
            for mu in enumerate_partitions(n) {
                for u in enumerate_syt(&mu) {
                    if u.descent_composition() == alpha {
                        input.add_term(u, 1);
                    }
                }
            }
            let lhs = xi_map(&input, cap)?;
            let pool = alpha.descent_set().triangle();
            let mut rhs = SprElement::zero();
            for lam in enumerate_strict_partitions(n) {
                for t in enumerate_shsyt(&lam) {
                    let peak = t.peak_set();
                    if peak.is_subset_of_slice(&pool) {
                        rhs.add_term(t, 1i64 << (peak.len() + 1));
                    }
                }
            }
            xi_square.item(lhs == rhs, || format!("routes differ at alpha = {alpha}"));
        }
    }
    // adjointness of the two candidate maps under the delta pairings
    let mut adjoint = Tally::new();
    for n in 1..=cfg.cap_hopf {
        let mut tableaux = Vec::new();
        for lam in enumerate_strict_partitions(n) {
            tableaux.extend(enumerate_shsyt(&lam));
        }
        let mut standards = Vec::new();
        for mu in enumerate_partitions(n) {
            standards.extend(enumerate_syt(&mu));
        }
        for t in &tableaux {
            let jt = j_map(&SprElement::basis(t.clone()), cap)?;
            for u in &standards {
                let xi = xi_map(&PrElement::basis(u.clone()), cap)?;
                let lhs = delta_pairing(&SprElement::basis(t.clone()), &xi);
                let rhs = delta_pairing(&jt, &PrElement::basis(u.clone()));
                adjoint.item(lhs == rhs, || {
                    format!("pairings differ at T =\n{}\nU = {u:?}", render_shifted(t))
                });
            }
        }
    }
    // modified Schur expansion coefficients independent of the recording
    // tableau, and matching the direct marked sum
    let mut sq = Tally::new();
    for n in 1..=cap.min(6) {
        for lam in enumerate_partitions(n) {
            let direct = modified_schur(&lam);
            for u in enumerate_syt(&lam) {
                let mut via_q = Qsym::zero();
                for mu in enumerate_strict_partitions(n) {
                    let t_mu = ShiftedTableau::row_filled(&mu);
                    let count = hopf::frak_s(&t_mu, &u, cap)?.len() as i64;
                    via_q += schur_q(&mu).scaled(count);
                }
                sq.item(via_q == direct, || {
                    format!("Q-expansion with recording tableau {u:?} differs at {lam}")
                });
            }
        }
    }
    // Schur expansion of P-functions counts standard fillings whose reading
    // words insert to a fixed tableau, independently of which one is fixed
    let mut ps = Tally::new();
    for n in 1..=cap.min(6) {
        for lam in enumerate_strict_partitions(n) {
            match crate::symfunc::decompose_schur(&schur_p(&lam), n).exact_integers() {
                None => ps.item(false, || {
                    format!("P_{lam} is not an integer combination of Schur functions")
                }),
                Some(dec) => {
                    for t in enumerate_shsyt(&lam) {
                        for mu in enumerate_partitions(n) {
                            let count = enumerate_syt(&mu)
                                .iter()
                                .filter(|u| p_sw(&reading_permutation_syt(u)) == t)
                                .count() as i64;
                            ps.item(dec.coeff(&mu) == count, || {
                                format!(
                                    "coefficient of s_{mu} in P_{lam} is {} but {count} fillings \
                                     insert to\n{}",
                                    dec.coeff(&mu),
                                    render_shifted(&t)
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    // the direct marked-filling sum agrees with the peak-function sum over
    // standard fillings of the unshifted shape
    let mut sk = Tally::new();
    for n in 1..=cap.min(6) {
        for lam in enumerate_partitions(n) {
            let direct = modified_schur(&lam);
            let via_k = Qsym::sum(enumerate_syt(&lam).iter().map(|u| peak_k(&u.peak_set())));
            sk.item(via_k == direct, || format!("the two routes to S_{lam} differ"));
        }
    }
    Ok(vec![
        phi_square.into_check("peak-embedding-route-equals-phi-route"),
        ip.into_check("embed-then-project-is-identity-on-q-functions"),
        ps.into_check("schur-expansion-counts-inserting-fillings"),
        sk.into_check("modified-schur-peak-sum-route"),
        j_square.into_check("j-image-in-qsym-is-peak-function"),
        xi_square.into_check("xi-route-equality-on-descent-sums"),
        adjoint.into_check("j-and-xi-are-adjoint"),
        sq.into_check("modified-schur-expansion-independent-of-recording-tableau"),
    ])
}

// --- j-xi ------------------------------------------------------------------

fn suite_j_xi(cfg: &Config) -> Result<Vec<Check>> {
    // the counterexample lives at degree 7, whatever the configured caps
    let cap = cfg.cap_class.max(7);
    let t = shifted(vec![vec![1, 2, 3, 6], vec![4, 5], vec![7]]);
    let mut artifacts = Tally::new();
    // the witness permutation and its insertion pair
    let witness: Permutation = "5172364".parse().expect("literal");
    artifacts.item(
        p_sw(&witness) == shifted(vec![vec![1, 2, 3, 4], vec![5, 6], vec![7]]),
        || format!("insertion tableau of 5172364 is\n{}", render_shifted(&p_sw(&witness))),
    );
    artifacts.item(
        q_sw(&witness)
            == marked(vec![
                vec![(1, false), (2, true), (3, false), (6, false)],
                vec![(4, false), (5, false)],
                vec![(7, false)],
            ]),
        || format!("recording tableau of 5172364 is\n{}", render_shifted(&q_sw(&witness))),
    );
    let w = witness.inverse();
    artifacts.item(w.one_line() == [2, 4, 5, 7, 1, 6, 3], || format!("witness inverse is {w}"));
    artifacts.item(
        hopf::frak_s_of(&t, cap)?.contains(&w),
        || "the witness inverse misses the fiber set".to_string(),
    );
    // split at 2: restriction and standardized complement
    let u = w.restrict(1, 2);
    let vp = w.restrict(3, 7).standardize();
    artifacts.item(u.letters() == [2, 1], || format!("left part is {:?}", u.letters()));
    artifacts.item(vp.one_line() == [2, 3, 5, 4, 1], || format!("right part is {vp}"));
    artifacts.item(
        p_schensted(&vp)
            == YoungTableau::from_values(vec![vec![1, 3, 4], vec![2], vec![5]]).expect("literal"),
        || "classical insertion tableau of 23541 is wrong".to_string(),
    );
    // the tableau-level split at the same position
    let (prefix, skew) = t.decompose_prefix(2);
    artifacts.item(prefix == shifted(vec![vec![1, 2]]), || "prefix of the split is wrong".into());
    let t2 = rectify(&skew);
    artifacts.item(t2 == shifted(vec![vec![1, 2, 3, 4], vec![5]]), || {
        format!("rectified remainder is\n{}", render_shifted(&t2))
    });
    // the fiber set of the rectified remainder
    let expected: BTreeSet<Permutation> =
        ["12354", "21354", "31254", "32154", "41253", "42153", "43152", "43251"]
            .iter()
            .map(|s| s.parse().expect("literal"))
            .collect();
    let fiber = hopf::frak_s_of(&t2, cap)?;
    artifacts.item(fiber == expected, || format!("fiber set is {fiber:?}"));
    artifacts.item(fiber.len() == 8, || format!("fiber set has {} members", fiber.len()));
    // the missing classical tableau
    let images: BTreeSet<YoungTableau> = fiber.iter().map(p_schensted).collect();
    artifacts.item(!images.contains(&p_schensted(&vp)), || {
        "the classical tableau of the right part appears in the fiber images".to_string()
    });
    // the failure itself
    let mut failure = Tally::new();
    let lhs = crate::hopf::pr_coproduct(&j_map(&SprElement::basis(t.clone()), cap)?);
    let once = crate::hopf::spr_coproduct(&SprElement::basis(t.clone()));
    let mut rhs = ModuleElement::zero();
    for ((a, b), c) in once.terms() {
        let ja = j_map(&SprElement::basis(a.clone()), cap)?;
        let jb = j_map(&SprElement::basis(b.clone()), cap)?;
        rhs += crate::freemodule::tensor(&ja, &jb).scaled(c);
    }
    failure.item(lhs != rhs, || "the two coproduct routes agree unexpectedly".to_string());
    Ok(vec![
        artifacts.into_check("counterexample-intermediates-reproduced"),
        failure.into_check("j-is-not-a-coalgebra-morphism"),
    ])
}

// --- examples --------------------------------------------------------------

/// The expected six-step insertion states for the worked six-letter example.
fn trace_612543() -> Vec<(ShiftedTableau, ShiftedTableau)> {
    vec![
        (shifted(vec![vec![6]]), marked(vec![vec![(1, false)]])),
        (shifted(vec![vec![1, 6]]), marked(vec![vec![(1, false), (2, true)]])),
        (
            shifted(vec![vec![1, 2], vec![6]]),
            marked(vec![vec![(1, false), (2, true)], vec![(3, false)]]),
        ),
        (
            shifted(vec![vec![1, 2, 5], vec![6]]),
            marked(vec![vec![(1, false), (2, true), (4, false)], vec![(3, false)]]),
        ),
        (
            shifted(vec![vec![1, 2, 4], vec![5, 6]]),
            marked(vec![vec![(1, false), (2, true), (4, false)], vec![(3, false), (5, true)]]),
        ),
        (
            shifted(vec![vec![1, 2, 3, 6], vec![4, 5]]),
            marked(vec![
                vec![(1, false), (2, true), (4, false), (6, true)],
                vec![(3, false), (5, true)],
            ]),
        ),
    ]
}

/// The expected six-step insertion states for the inverse word.
fn trace_236541() -> Vec<(ShiftedTableau, ShiftedTableau)> {
    vec![
        (shifted(vec![vec![2]]), marked(vec![vec![(1, false)]])),
        (shifted(vec![vec![2, 3]]), marked(vec![vec![(1, false), (2, false)]])),
        (shifted(vec![vec![2, 3, 6]]), marked(vec![vec![(1, false), (2, false), (3, false)]])),
        (
            shifted(vec![vec![2, 3, 5], vec![6]]),
            marked(vec![vec![(1, false), (2, false), (3, false)], vec![(4, false)]]),
        ),
        (
            shifted(vec![vec![2, 3, 4], vec![5, 6]]),
            marked(vec![vec![(1, false), (2, false), (3, false)], vec![(4, false), (5, true)]]),
        ),
        (
            shifted(vec![vec![1, 2, 3, 4], vec![5, 6]]),
            marked(vec![
                vec![(1, false), (2, false), (3, false), (6, true)],
                vec![(4, false), (5, true)],
            ]),
        ),
    ]
}

fn trace_check(word: &str, expected: &[(ShiftedTableau, ShiftedTableau)]) -> Tally {
    let mut t = Tally::new();
    let w: Permutation = word.parse().expect("literal");
    let states = sagan_worley_prefixes(&w);
    t.item(states.len() == expected.len(), || {
        format!("{word}: trace has {} steps", states.len())
    });
    for (i, (state, exp)) in states.iter().zip(expected).enumerate() {
        t.item(state == exp, || {
            format!(
                "{word}: step {} gives\n{}\n{}\nexpected\n{}\n{}",
                i + 1,
                render_shifted(&state.0),
                render_shifted(&state.1),
                render_shifted(&exp.0),
                render_shifted(&exp.1)
            )
        });
    }
    t
}

/// The twenty insertion tableaux of the published product table.
pub(crate) fn product_table() -> [(Vec<&'static str>, Vec<ShiftedTableau>); 2] {
    let row = |rows: Vec<Vec<usize>>| shifted(rows);
    [
        (
            vec![
                "12345", "13245", "14235", "15234", "23145", "24135", "25134", "34125", "35124",
                "45123",
            ],
            vec![
                row(vec![vec![1, 2, 3, 4, 5]]),
                row(vec![vec![1, 2, 4, 5], vec![3]]),
                row(vec![vec![1, 2, 3, 5], vec![4]]),
                row(vec![vec![1, 2, 3, 4], vec![5]]),
                row(vec![vec![1, 2, 3, 4, 5]]),
                row(vec![vec![1, 2, 3, 5], vec![4]]),
                row(vec![vec![1, 2, 3, 4], vec![5]]),
                row(vec![vec![1, 2, 4, 5], vec![3]]),
                row(vec![vec![1, 2, 4], vec![3, 5]]),
                row(vec![vec![1, 2, 3], vec![4, 5]]),
            ],
        ),
        (
            vec![
                "12435", "13425", "14325", "15324", "23415", "24315", "25314", "34215", "35214",
                "45213",
            ],
            vec![
                row(vec![vec![1, 2, 3, 5], vec![4]]),
                row(vec![vec![1, 2, 4, 5], vec![3]]),
                row(vec![vec![1, 2, 4, 5], vec![3]]),
                row(vec![vec![1, 2, 4], vec![3, 5]]),
                row(vec![vec![1, 2, 3, 4, 5]]),
                row(vec![vec![1, 2, 3, 5], vec![4]]),
                row(vec![vec![1, 2, 3, 4], vec![5]]),
                row(vec![vec![1, 2, 3, 4, 5]]),
                row(vec![vec![1, 2, 3, 4], vec![5]]),
                row(vec![vec![1, 2, 3, 5], vec![4]]),
            ],
        ),
    ]
}

pub(crate) fn product_table_tally(table: &[(Vec<&'static str>, Vec<ShiftedTableau>)]) -> Tally {
    let mut t = Tally::new();
    for (perms, tableaux) in table {
        // the listed permutations are exactly the terms of the product
        let factor: Permutation = perms[0].parse().expect("literal");
        let second = factor.restrict(3, 5).standardize();
        let prod = mr_product(
            &PermElement::basis("12".parse().expect("literal")),
            &PermElement::basis(second),
        );
        let listed = PermElement::from_terms(
            perms.iter().map(|s| (s.parse::<Permutation>().expect("literal"), 1)),
        );
        t.item(prod == listed, || format!("product terms are not the listed row: {prod}"));
        for (s, expected) in perms.iter().zip(tableaux) {
            let w: Permutation = s.parse().expect("literal");
            t.item(p_sw(&w) == *expected, || {
                format!("insertion of {s} gives\n{}\nexpected\n{}",
                    render_shifted(&p_sw(&w)), render_shifted(expected))
            });
        }
    }
    t
}

fn suite_examples(cfg: &Config) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    // the six-step traces and their descent/peak data
    let mut trace = trace_check("612543", &trace_612543());
    let mut inverse_trace = trace_check("236541", &trace_236541());
    let w: Permutation = "612543".parse().expect("literal");
    trace.item(w.descent_set().elems == vec![1, 4, 5], || "descents of the word".into());
    trace.item(w.peak_set().elems == vec![4], || "peaks of the word".into());
    inverse_trace.item(w.inverse().descent_set().elems == vec![3, 4, 5], || {
        "descents of the inverse".into()
    });
    inverse_trace.item(w.inverse().peak_set().elems == vec![3], || "peaks of the inverse".into());
    checks.push(trace.into_check("six-step-insertion-trace"));
    checks.push(inverse_trace.into_check("six-step-inverse-insertion-trace"));
    // the published two-row product table, cell for cell
    let mut table = product_table_tally(&product_table());
    let (a, b) = left_projections();
    table.item(a != b, || "projected products of the two rows agree".into());
    checks.push(table.into_check("product-table-reproduced"));
    // the skew extension display
    let mut skew = Tally::new();
    let t = shifted(vec![vec![1, 2, 4], vec![3]]);
    let s = SkewShiftedTableau::new(
        StrictPartition::new(vec![3, 1]).expect("strict"),
        vec![vec![2], vec![1, 4], vec![3]],
    )?;
    let glued = t.concat_after_shift(&s)?;
    skew.item(
        glued == shifted(vec![vec![1, 2, 4, 6], vec![3, 5, 8], vec![7]]),
        || format!("extension gives\n{}", render_shifted(&glued)),
    );
    checks.push(skew.into_check("skew-extension-display-reproduced"));
    // the three-row marking display
    checks.push(named_marking_check());
    // the coalgebra failure
    let mut jfail = suite_j_xi(cfg)?;
    checks.push(jfail.pop().expect("failure check present"));
    Ok(checks)
}


/// Term-by-term diff of two elements, for counterexample payloads.
fn diff_terms<K: Ord + Clone + std::fmt::Debug>(
    a: &ModuleElement<K>,
    b: &ModuleElement<K>,
) -> String {
    let keys: BTreeSet<&K> = a.support().chain(b.support()).collect();
    let mut out = String::new();
    for k in keys {
        let (ca, cb) = (a.coeff(k), b.coeff(k));
        if ca != cb {
            out.push_str(&format!("{k:?}: {ca} vs {cb}\n"));
        }
    }
    out
}
