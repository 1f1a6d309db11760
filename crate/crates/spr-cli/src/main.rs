//! Command-line front end: shifted/classical insertion, equivalence classes,
//! the tableau-algebra products and coproducts, symmetric function
//! expansions, pairings, the verification suites, and tableau rendering.
//!
//! Exit codes: 0 success, 1 failed check or inexact decomposition, 2 usage
//! or input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use spr::combinat::{Composition, Partition, StrictPartition};
use spr::freemodule::ModuleElement;
use spr::hopf::{
    mr_coproduct, mr_prime_coproduct, mr_prime_product, mr_product, pr_coproduct, pr_product,
    spr_coproduct, spr_module_action, sprp_coproduct, sprp_product, PermElement, PrElement,
    SprElement,
};
use spr::insertion::{mixed, p_schensted, p_sw, sagan_worley, schensted, shifted_knuth_class};
use spr::render::{element_json, render_shifted, render_young, ElementJson, TableauJson};
use spr::symfunc::{
    decompose_k, decompose_schur, decompose_schur_p, decompose_schur_q, f_to_m, h_to_r,
    m_to_f, modified_schur, pairing_qsym_nsym, schur, schur_p, schur_q, shifted_lr, Nsym, Qsym,
};
use spr::words::Permutation;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "spr", version, about = "Shifted insertion and tableau algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a permutation and print the resulting (P, Q) tableau pair.
    Insert {
        /// One-line permutation, e.g. 612543.
        word: String,
        /// Shifted row insertion with column bumps off the diagonal (default).
        #[arg(long, conflicts_with_all = ["classical", "mixed"])]
        shifted: bool,
        /// Classical row insertion into an unshifted tableau.
        #[arg(long, conflicts_with = "mixed")]
        classical: bool,
        /// Shifted insertion of the inverse: records primes on Q of the inverse word.
        #[arg(long)]
        mixed: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List the equivalence class of a permutation under the shifted moves.
    Class {
        word: String,
        /// Degree cap guarding the class enumeration.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Products and coproducts of the four algebra structures.
    Hopf {
        #[command(subcommand)]
        op: HopfOp,
    },
    /// Expand a symmetric function family member into a chosen basis.
    Expand {
        /// Family: schur, schur-p, schur-q, or modified.
        family: Family,
        /// Comma-separated partition parts, e.g. 3,2.
        parts: String,
        /// Target basis.
        #[arg(long, value_enum, default_value_t = Basis::F)]
        basis: Basis,
        #[command(flatten)]
        common: Common,
    },
    /// Multiplication-rule coefficients for a product of two shapes.
    Lr {
        /// First partition, comma-separated.
        lam: String,
        /// Second partition, comma-separated.
        mu: String,
        /// Strict shapes with the shifted skew rule (default is unshifted Schur).
        #[arg(long)]
        shifted: bool,
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Pairing of a noncommutative word basis element with a quasisymmetric one.
    Pairing {
        /// Composition for the left side, comma-separated.
        alpha: String,
        /// Composition for the right side, comma-separated.
        beta: String,
        /// Left basis: complete (h) or ribbon (r).
        #[arg(long, value_enum, default_value_t = LeftBasis::R)]
        left: LeftBasis,
        /// Right basis: fundamental (f) or monomial (m).
        #[arg(long, value_enum, default_value_t = RightBasis::F)]
        right: RightBasis,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        /// Suite names, or "all".
        #[arg(required = true)]
        suites: Vec<String>,
        /// Override the counting degree cap (finer caps clamp below it).
        #[arg(long)]
        cap: Option<usize>,
        /// Seed for sampled spot checks.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of sampled spot checks.
        #[arg(long)]
        samples: Option<usize>,
        /// Worker threads (0 = library default).
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Pretty-print a tableau given as JSON.
    Render {
        /// Tableau JSON: {"shape":[...],"rows":[[{"v":3,"p":true},...],...]}.
        #[arg(long)]
        tableau: String,
        /// Interpret as an unshifted tableau.
        #[arg(long)]
        young: bool,
    },
}

#[derive(Subcommand)]
enum HopfOp {
    /// Multiply two elements given by representative permutations.
    Mul {
        #[arg(long, value_enum)]
        algebra: Algebra,
        left: String,
        right: String,
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Coproduct of one element given by a representative permutation.
    Comul {
        #[arg(long, value_enum)]
        algebra: Algebra,
        word: String,
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Algebra {
    /// Permutation algebra: shifted-shuffle product, splitting coproduct.
    Mr,
    /// Permutation algebra: splitting product, shifted-shuffle coproduct.
    MrPrime,
    /// Classical tableau classes.
    Pr,
    /// Shifted tableau classes: right action by classical classes, splitting coproduct.
    Spr,
    /// Shifted tableau classes: skew-extension product, class-level coproduct.
    SprPrime,
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    Schur,
    #[value(alias = "schurP")]
    SchurP,
    #[value(alias = "schurQ")]
    SchurQ,
    /// Marked unshifted filling sum (the doubled Schur variant).
    Modified,
}

#[derive(Copy, Clone, ValueEnum)]
enum Basis {
    F,
    M,
    Schur,
    #[value(alias = "schurP")]
    SchurP,
    #[value(alias = "schurQ")]
    SchurQ,
    K,
}

#[derive(Copy, Clone, ValueEnum)]
enum LeftBasis {
    H,
    R,
}

#[derive(Copy, Clone, ValueEnum)]
enum RightBasis {
    F,
    M,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e| format!("bad permutation {s:?}: {e}"))
}

fn parse_parts(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse().map_err(|e| format!("bad part {p:?}: {e}")))
        .collect()
}

fn parse_strict(s: &str) -> Result<StrictPartition, String> {
    StrictPartition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    Composition::new(parse_parts(s)?).map_err(|e| e.to_string())
}

fn default_cap(flag: Option<usize>) -> Result<usize, String> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(spr::verify::CAP_ENV) {
        Ok(raw) => raw.parse().map_err(|_| format!("bad {} value {raw:?}", spr::verify::CAP_ENV)),
        Err(_) => Ok(spr::DEFAULT_DEGREE_CAP),
    }
}

/// Key encodings for JSON element output.
fn perm_key(w: &Permutation) -> Value {
    Value::String(w.to_string())
}

fn perm_pair_key(k: &(Permutation, Permutation)) -> Value {
    json!([k.0.to_string(), k.1.to_string()])
}

fn shifted_key(t: &spr::tableaux::ShiftedTableau) -> Value {
    serde_json::to_value(TableauJson::from_shifted(t)).expect("tableau serializes")
}

fn young_key(t: &spr::tableaux::YoungTableau) -> Value {
    serde_json::to_value(TableauJson::from_young(t)).expect("tableau serializes")
}

fn parts_key<P: AsRef<[usize]>>(p: &P) -> Value {
    json!(p.as_ref())
}

fn emit(js: ElementJson, json_mode: bool, text: String) {
    if json_mode {
        println!("{}", serde_json::to_string(&js).expect("report serializes"));
    } else {
        println!("{text}");
    }
}

/// Text rendering for elements keyed by tableaux: coefficient header, then
/// the rendered block, blank-line separated.
fn blocks<K: Ord>(x: &ModuleElement<K>, render: impl Fn(&K) -> String) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.terms()
        .map(|(k, c)| format!("{c} x\n{}", render(k)))
        .collect::<Vec<_>>()
        .join("\n\n")
}

fn pair_blocks<A: Ord, B: Ord>(
    x: &ModuleElement<(A, B)>,
    left: impl Fn(&A) -> String,
    right: impl Fn(&B) -> String,
) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.terms()
        .map(|((a, b), c)| format!("{c} x\n{}\n(x)\n{}", left(a), right(b)))
        .collect::<Vec<_>>()
        .join("\n\n")
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Insert { word, classical, mixed: use_mixed, common, .. } => {
            let w = parse_perm(&word)?;
            if classical {
                let (p, q) = schensted(&w);
                if common.json {
                    println!(
                        "{}",
                        json!({"p": TableauJson::from_young(&p), "q": TableauJson::from_young(&q)})
                    );
                } else {
                    println!("P:\n{}\n\nQ:\n{}", render_young(&p), render_young(&q));
                }
            } else {
                let (p, q) = if use_mixed {
                    mixed(&w)
                } else {
                    let res = sagan_worley(&w);
                    (res.p, res.q)
                };
                if common.json {
                    println!(
                        "{}",
                        json!({"p": TableauJson::from_shifted(&p), "q": TableauJson::from_shifted(&q)})
                    );
                } else {
                    println!("P:\n{}\n\nQ:\n{}", render_shifted(&p), render_shifted(&q));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Class { word, cap, common } => {
            let w = parse_perm(&word)?;
            let cap = default_cap(cap)?;
            let class = shifted_knuth_class(&w, cap).map_err(|e| e.to_string())?;
            let p = p_sw(&w);
            if common.json {
                println!(
                    "{}",
                    json!({
                        "tableau": TableauJson::from_shifted(&p),
                        "members": class.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("P:\n{}\n\nclass ({} members):", render_shifted(&p), class.len());
                for v in &class {
                    println!("  {v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hopf { op } => run_hopf(op),
        Command::Expand { family, parts, basis, common } => {
            let (f, degree) = match family {
                Family::Schur => {
                    let lam = parse_partition(&parts)?;
                    (schur(&lam), lam.degree())
                }
                Family::SchurP => {
                    let lam = parse_strict(&parts)?;
                    (schur_p(&lam), lam.degree())
                }
                Family::SchurQ => {
                    let lam = parse_strict(&parts)?;
                    (schur_q(&lam), lam.degree())
                }
                Family::Modified => {
                    let lam = parse_partition(&parts)?;
                    (modified_schur(&lam), lam.degree())
                }
            };
            expand_into(&f, degree, basis, common.json)
        }
        Command::Lr { lam, mu, shifted, cap, common } => {
            let cap = default_cap(cap)?;
            if shifted {
                let lam = parse_strict(&lam)?;
                let mu = parse_strict(&mu)?;
                let x = shifted_lr(&lam, &mu, cap).map_err(|e| e.to_string())?;
                let js =
                    element_json("schur-p", Some(lam.degree() + mu.degree()), &x, parts_key);
                emit(js, common.json, display_parts(&x));
            } else {
                let lam = parse_partition(&lam)?;
                let mu = parse_partition(&mu)?;
                let n = lam.degree() + mu.degree();
                let prod = spr::symfunc::qsym_product(&schur(&lam), &schur(&mu));
                let x = decompose_schur(&prod, n)
                    .exact_integers()
                    .ok_or("product is not an integer combination of Schur functions")?;
                let js = element_json("schur", Some(n), &x, parts_key);
                emit(js, common.json, display_parts(&x));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pairing { alpha, beta, left, right, common } => {
            let alpha = parse_composition(&alpha)?;
            let beta = parse_composition(&beta)?;
            let a: Nsym = match left {
                LeftBasis::H => h_to_r(&ModuleElement::basis(alpha.clone())),
                LeftBasis::R => ModuleElement::basis(alpha.clone()),
            };
            let f: Qsym = match right {
                RightBasis::F => ModuleElement::basis(beta.clone()),
                RightBasis::M => m_to_f(&ModuleElement::basis(beta.clone())),
            };
            let value = pairing_qsym_nsym(&a, &f).map_err(|e| e.to_string())?;
            if common.json {
                println!("{}", json!({"value": value}));
            } else {
                println!("{value}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suites, cap, seed, samples, workers, common } => {
            let mut cfg = spr::verify::Config::from_env().map_err(|e| e.to_string())?;
            if let Some(cap) = cap {
                cfg = cfg.with_cap(cap).map_err(|e| e.to_string())?;
            }
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            if let Some(samples) = samples {
                cfg.samples = samples;
            }
            if let Some(workers) = workers {
                cfg.workers = workers;
            }
            let names: Vec<&str> = if suites.iter().any(|s| s == "all") {
                spr::verify::SUITES.to_vec()
            } else {
                suites.iter().map(String::as_str).collect()
            };
            let mut all_pass = true;
            let mut reports = Vec::new();
            for name in names {
                let report = spr::verify::run_suite(name, &cfg).map_err(|e| e.to_string())?;
                all_pass &= report.passed();
                if !common.json {
                    print!("{}", report.render_text());
                }
                reports.push(report);
            }
            if common.json {
                println!("{}", serde_json::to_string(&reports).expect("report serializes"));
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Render { tableau, young } => {
            let js: TableauJson =
                serde_json::from_str(&tableau).map_err(|e| format!("bad tableau JSON: {e}"))?;
            if young {
                let t = js.into_young().map_err(|e| e.to_string())?;
                println!("{}", render_young(&t));
            } else {
                let t = js.into_shifted().map_err(|e| e.to_string())?;
                println!("{}", render_shifted(&t));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn display_parts<P: AsRef<[usize]> + Ord>(x: &ModuleElement<P>) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.terms()
        .map(|(k, c)| {
            let parts =
                k.as_ref().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            if c == 1 {
                format!("({parts})")
            } else {
                format!("{c}*({parts})")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn run_hopf(op: HopfOp) -> Result<ExitCode, String> {
    match op {
        HopfOp::Mul { algebra, left, right, cap, common } => {
            let u = parse_perm(&left)?;
            let v = parse_perm(&right)?;
            match algebra {
                Algebra::Mr | Algebra::MrPrime => {
                    let (a, b) = (PermElement::basis(u), PermElement::basis(v));
                    let x = match algebra {
                        Algebra::Mr => mr_product(&a, &b),
                        _ => mr_prime_product(&a, &b),
                    };
                    let js = element_json("perm", spr::hopf::homogeneous_degree(&x), &x, perm_key);
                    emit(js, common.json, format!("{x}"));
                }
                Algebra::Pr => {
                    let x = pr_product(
                        &PrElement::basis(p_schensted(&u)),
                        &PrElement::basis(p_schensted(&v)),
                    );
                    let js = element_json("young-class", None, &x, young_key);
                    emit(js, common.json, blocks(&x, |t| render_young(t)));
                }
                Algebra::Spr => {
                    // right action of the classical class of v on the shifted class of u
                    let x = spr_module_action(
                        &SprElement::basis(p_sw(&u)),
                        &PrElement::basis(p_schensted(&v)),
                    );
                    let js = element_json("shifted-class", None, &x, shifted_key);
                    emit(js, common.json, blocks(&x, |t| render_shifted(t)));
                }
                Algebra::SprPrime => {
                    let x = sprp_product(
                        &SprElement::basis(p_sw(&u)),
                        &SprElement::basis(p_sw(&v)),
                    );
                    let js = element_json("shifted-class", None, &x, shifted_key);
                    emit(js, common.json, blocks(&x, |t| render_shifted(t)));
                }
            }
            let _ = cap;
            Ok(ExitCode::SUCCESS)
        }
        HopfOp::Comul { algebra, word, cap, common } => {
            let w = parse_perm(&word)?;
            let cap = default_cap(cap)?;
            match algebra {
                Algebra::Mr | Algebra::MrPrime => {
                    let a = PermElement::basis(w);
                    let x = match algebra {
                        Algebra::Mr => mr_coproduct(&a),
                        _ => mr_prime_coproduct(&a),
                    };
                    let js = element_json("perm-pair", None, &x, perm_pair_key);
                    let text = x
                        .terms()
                        .map(|((a, b), c)| format!("{c}*({a} (x) {b})"))
                        .collect::<Vec<_>>()
                        .join(" + ");
                    emit(js, common.json, if text.is_empty() { "0".into() } else { text });
                }
                Algebra::Pr => {
                    let x = pr_coproduct(&PrElement::basis(p_schensted(&w)));
                    let js = element_json("young-class-pair", None, &x, |k| {
                        json!([young_key(&k.0), young_key(&k.1)])
                    });
                    emit(js, common.json, pair_blocks(&x, |t| render_young(t), |t| render_young(t)));
                }
                Algebra::Spr => {
                    let x = spr_coproduct(&SprElement::basis(p_sw(&w)));
                    let js = element_json("shifted-class-pair", None, &x, |k| {
                        json!([shifted_key(&k.0), shifted_key(&k.1)])
                    });
                    emit(
                        js,
                        common.json,
                        pair_blocks(&x, |t| render_shifted(t), |t| render_shifted(t)),
                    );
                }
                Algebra::SprPrime => {
                    let x = sprp_coproduct(&SprElement::basis(p_sw(&w)), cap)
                        .map_err(|e| e.to_string())?;
                    let js = element_json("shifted-young-pair", None, &x, |k| {
                        json!([shifted_key(&k.0), young_key(&k.1)])
                    });
                    emit(
                        js,
                        common.json,
                        pair_blocks(&x, |t| render_shifted(t), |t| render_young(t)),
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn expand_into(f: &Qsym, degree: usize, basis: Basis, json_mode: bool) -> Result<ExitCode, String> {
    match basis {
        Basis::F => {
            let js = element_json("fundamental", Some(degree), f, parts_key_comp);
            emit(js, json_mode, display_parts_comp(f, "F"));
            Ok(ExitCode::SUCCESS)
        }
        Basis::M => {
            let m = f_to_m(f);
            let js = element_json("monomial", Some(degree), &m, parts_key_comp);
            emit(js, json_mode, display_parts_comp(&m, "M"));
            Ok(ExitCode::SUCCESS)
        }
        Basis::Schur => finish_decomposition(decompose_schur(f, degree), degree, "schur", json_mode),
        Basis::SchurP => {
            finish_decomposition(decompose_schur_p(f, degree), degree, "schur-p", json_mode)
        }
        Basis::SchurQ => {
            finish_decomposition(decompose_schur_q(f, degree), degree, "schur-q", json_mode)
        }
        Basis::K => {
            let dec = decompose_k(f, degree);
            match dec.exact_integers() {
                Some(x) => {
                    let js = element_json("peak", Some(degree), &x, |p| json!(p.elems));
                    let text = x
                        .terms()
                        .map(|(p, c)| format!("{c}*K{:?}", p.elems))
                        .collect::<Vec<_>>()
                        .join(" + ");
                    emit(js, json_mode, if text.is_empty() { "0".into() } else { text });
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!("{}", inexact_message(dec.residual.len()));
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn inexact_message(residual_terms: usize) -> String {
    if residual_terms == 0 {
        "lies in the span but with non-integer coefficients".to_string()
    } else {
        format!("not in the span of the requested basis; residual has {residual_terms} terms")
    }
}

fn finish_decomposition<K: Ord + Clone + AsRef<[usize]>>(
    dec: spr::symfunc::Decomposition<K>,
    degree: usize,
    basis: &str,
    json_mode: bool,
) -> Result<ExitCode, String> {
    match dec.exact_integers() {
        Some(x) => {
            let js = element_json(basis, Some(degree), &x, parts_key);
            emit(js, json_mode, display_parts(&x));
            Ok(ExitCode::SUCCESS)
        }
        None => {
            eprintln!("{}", inexact_message(dec.residual.len()));
            Ok(ExitCode::from(1))
        }
    }
}

fn parts_key_comp(alpha: &Composition) -> Value {
    json!(alpha.parts())
}

fn display_parts_comp(x: &Qsym, label: &str) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.terms()
        .map(|(alpha, c)| {
            let parts =
                alpha.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            if c == 1 {
                format!("{label}({parts})")
            } else {
                format!("{c}*{label}({parts})")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
