//! Exact-arithmetic combinatorics of shifted tableaux and the Hopf-algebraic
//! structures built on top of them.
//!
//! The crate is organized bottom-up:
//!
//! * [`combinat`] — compositions, partitions, descent sets and peak sets;
//! * [`words`] — words and permutations: standardization, shuffles, descents;
//! * [`tableaux`] — shifted and unshifted (marked) tableaux, skew shapes,
//!   reading words, weights and enumeration;
//! * [`insertion`] — Schensted and Sagan-Worley insertion, Knuth and shifted
//!   Knuth classes, rectification;
//! * [`freemodule`] — finitely supported integer combinations over ordered keys;
//! * [`hopf`] — the two product/coproduct structures on permutations and the
//!   tableau-class quotients and substructures they induce, classical and
//!   shifted;
//! * [`symfunc`] — QSym, NSym, peak functions, Schur and Schur P/Q-functions,
//!   and the maps relating them;
//! * [`verify`] — named verification suites that sweep every identity at
//!   desk scale, backing the `spr verify` command.
//!
//! Every value is immutable after construction and every operation is pure,
//! so all types are safe to share across threads.

pub mod combinat;
pub mod error;
pub mod freemodule;
pub mod hopf;
pub mod insertion;
pub mod render;
pub mod symfunc;
pub mod tableaux;
pub mod verify;
pub mod words;

pub mod book;

pub use error::Error;

/// Default bound on the degree of exhaustive symmetric-group sweeps.
///
/// Enumerating all of S_n grows as n!, so operations quantified over S_n
/// refuse degrees above the configured cap instead of hanging.
pub const DEFAULT_DEGREE_CAP: usize = 9;
