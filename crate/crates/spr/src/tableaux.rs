//! Shifted shapes and (marked) shifted tableaux, their unshifted relatives,
//! skew standard tableaux, and the enumerations the basis expansions need.
//!
//! A shifted tableau of strict shape `λ` puts row `i` (0-indexed) in columns
//! `i ..= i+λ_i-1`; the main diagonal is `column == row`. Entries come from
//! the marked alphabet `1' < 1 < 2' < 2 < ...` subject to:
//!
//! * rows and columns weakly increasing;
//! * each unprimed `k` at most once per column;
//! * each primed `k'` at most once per row.
//!
//! [`ShiftedTableau::validate`] checks exactly these. The stricter convention
//! that also keeps the main diagonal unprimed is checked by
//! [`ShiftedTableau::validate_unprimed_diagonal`]; the enumerations feeding
//! the P-function expansions (`enumerate_shsyt_pm`, `enumerate_shssyt_pm`)
//! produce only such fillings. Unshifted marked tableaux never carry a
//! diagonal restriction.

use crate::combinat::{DescentSet, Partition, PeakSet, StrictPartition, WeakComposition};
use crate::error::{Error, Result};
use crate::words::Word;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A letter `k` or `k'` from the marked alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedLetter {
    #[serde(rename = "v")]
    pub value: usize,
    #[serde(rename = "p", default, skip_serializing_if = "std::ops::Not::not")]
    pub primed: bool,
}

impl MarkedLetter {
    pub fn plain(value: usize) -> Self {
        MarkedLetter { value, primed: false }
    }

    pub fn primed(value: usize) -> Self {
        MarkedLetter { value, primed: true }
    }

    /// Branch-free comparison key realizing `1' < 1 < 2' < 2 < ...`.
    pub fn order_key(&self) -> usize {
        2 * self.value - usize::from(self.primed)
    }
}

impl PartialOrd for MarkedLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MarkedLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for MarkedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

/// Diagnostics for the first violated tableau rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleViolation {
    pub rule: &'static str,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for RuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at cell ({}, {})", self.rule, self.row, self.col)
    }
}

/// A filling of a shifted shape with marked letters.
///
/// Standard and marked-standard tableaux are the special cases in which the
/// values are exactly `1..=n`; see [`ShiftedTableau::is_standard`] and
/// [`ShiftedTableau::is_marked_standard`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ShiftedTableau {
    /// `rows[i][j]` sits at (row `i`, column `i + j`).
    rows: Vec<Vec<MarkedLetter>>,
}

/// A filling of an ordinary partition shape with marked letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct YoungTableau {
    /// `rows[i][j]` sits at (row `i`, column `j`).
    rows: Vec<Vec<MarkedLetter>>,
}

/// A standard filling of a skew shifted shape `λ/μ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewShiftedTableau {
    pub inner: StrictPartition,
    /// `rows[i][j]` sits at (row `i`, column `i + inner_i + j`), unprimed.
    rows: Vec<Vec<usize>>,
}

impl ShiftedTableau {
    pub fn from_rows(rows: Vec<Vec<MarkedLetter>>) -> Result<Self> {
        let t = ShiftedTableau { rows };
        t.shape()?;
        Ok(t)
    }

    /// Convenience constructor from `(value, primed)` pairs.
    pub fn from_entries(rows: Vec<Vec<(usize, bool)>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|(value, primed)| MarkedLetter { value, primed }).collect())
                .collect(),
        )
    }

    /// Unmarked constructor.
    pub fn from_values(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(MarkedLetter::plain).collect())
                .collect(),
        )
    }

    pub fn empty() -> Self {
        ShiftedTableau { rows: Vec::new() }
    }

    /// The row-filled tableau of shape `λ`: row `i` holds the next `λ_i`
    /// consecutive entries.
    pub fn row_filled(shape: &StrictPartition) -> Self {
        let mut rows = Vec::with_capacity(shape.len());
        let mut next = 1;
        for &len in shape.parts() {
            rows.push((next..next + len).map(MarkedLetter::plain).collect());
            next += len;
        }
        ShiftedTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<MarkedLetter>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Result<StrictPartition> {
        StrictPartition::new(self.rows.iter().map(Vec::len).collect()).map_err(|_| {
            Error::ShapeMismatch("row lengths are not strictly decreasing".into())
        })
    }

    /// First violated marked-shifted-tableau rule, if any.
    pub fn validate(&self) -> std::result::Result<(), RuleViolation> {
        if self.shape().is_err() {
            return Err(RuleViolation { rule: "shape is not a strict partition", row: 0, col: 0 });
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let col = i + j;
                if j > 0 {
                    let left = row[j - 1];
                    if x < left {
                        return Err(RuleViolation { rule: "rows must be weakly increasing", row: i, col });
                    }
                    if x.primed && left == x {
                        return Err(RuleViolation { rule: "each primed letter at most once per row", row: i, col });
                    }
                }
                if let Some(above) = self.at(i.wrapping_sub(1), col) {
                    if i > 0 {
                        if x < above {
                            return Err(RuleViolation { rule: "columns must be weakly increasing", row: i, col });
                        }
                        if !x.primed && above == x {
                            return Err(RuleViolation { rule: "each unprimed letter at most once per column", row: i, col });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// [`ShiftedTableau::validate`] plus the stricter rule keeping the main
    /// diagonal unprimed.
    pub fn validate_unprimed_diagonal(&self) -> std::result::Result<(), RuleViolation> {
        self.validate()?;
        for (i, row) in self.rows.iter().enumerate() {
            if row.first().is_some_and(|x| x.primed) {
                return Err(RuleViolation { rule: "no primed entries on the main diagonal", row: i, col: i });
            }
        }
        Ok(())
    }

    /// True iff no diagonal cell is primed.
    pub fn diagonal_unprimed(&self) -> bool {
        self.rows.iter().all(|r| !r.first().is_some_and(|x| x.primed))
    }

    /// Entry at (row, absolute column), if present.
    pub fn at(&self, row: usize, col: usize) -> Option<MarkedLetter> {
        self.rows.get(row).and_then(|r| {
            if col < row {
                None
            } else {
                r.get(col - row).copied()
            }
        })
    }

    /// True iff entries are an unprimed permutation of `1..=n` and the
    /// tableau rules hold.
    pub fn is_standard(&self) -> bool {
        self.is_marked_standard() && self.rows.iter().flatten().all(|x| !x.primed)
    }

    /// True iff entries are `1..=n` up to priming and the tableau rules hold.
    pub fn is_marked_standard(&self) -> bool {
        if self.validate().is_err() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for x in self.rows.iter().flatten() {
            if x.value == 0 || x.value > n || seen[x.value] {
                return false;
            }
            seen[x.value] = true;
        }
        true
    }

    /// Row by row from the bottom to the top, left to right in each row.
    pub fn reading_letters(&self) -> Vec<MarkedLetter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Reading word with the primes removed.
    pub fn reading_word(&self) -> Word {
        Word::new(self.reading_letters().iter().map(|x| x.value).collect()).expect("positive letters")
    }

    /// `wt(T)_i` counts both `i` and `i'`.
    pub fn weight(&self) -> WeakComposition {
        let max = self.rows.iter().flatten().map(|x| x.value).max().unwrap_or(0);
        let mut counts = vec![0usize; max];
        for x in self.rows.iter().flatten() {
            counts[x.value - 1] += 1;
        }
        WeakComposition::new(counts)
    }

    /// Removes all primes.
    pub fn unmark(&self) -> ShiftedTableau {
        ShiftedTableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| MarkedLetter::plain(x.value)).collect())
                .collect(),
        }
    }

    /// Positions `(row, col)` of each value in a (marked-)standard tableau,
    /// indexed by value; also returns the primed flags.
    fn positions(&self) -> Option<(Vec<(usize, usize)>, Vec<bool>)> {
        let n = self.size();
        let mut pos = vec![(usize::MAX, usize::MAX); n + 1];
        let mut primed = vec![false; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x.value == 0 || x.value > n || pos[x.value].0 != usize::MAX {
                    return None;
                }
                pos[x.value] = (i, i + j);
                primed[x.value] = x.primed;
            }
        }
        Some((pos, primed))
    }

    /// Standardization of a marked semistandard tableau: entries renumbered
    /// `1..=n` in the marked-alphabet order, unprimed ties left to right,
    /// primed ties top to bottom; primes are kept.
    pub fn standardize(&self) -> ShiftedTableau {
        ShiftedTableau { rows: standardize_rows(&self.rows, |i, j| i + j) }
    }

    /// `Des(T)` for a (marked-)standard shifted tableau: `i` is a descent iff
    /// `i` is unprimed and strictly upper than `i+1` (primed or not), or
    /// `i+1` is primed and weakly upper than `i`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.size();
        let (pos, primed) = self.positions().expect("descent set requires standard entries");
        let elems = (1..n)
            .filter(|&i| {
                let (ri, _) = pos[i];
                let (rj, _) = pos[i + 1];
                (!primed[i] && ri < rj) || (primed[i + 1] && rj <= ri)
            })
            .collect();
        DescentSet { n, elems }
    }

    pub fn peak_set(&self) -> PeakSet {
        self.descent_set().peak_set()
    }

    pub fn descent_composition(&self) -> crate::combinat::Composition {
        self.descent_set().to_composition()
    }

    /// The concatenation `(T)_S`: entries of the skew tableau `S` are shifted
    /// by `|T|` and overlaid outside `T`.
    pub fn concat_after_shift(&self, skew: &SkewShiftedTableau) -> Result<ShiftedTableau> {
        let shape = self.shape()?;
        if skew.inner != shape {
            return Err(Error::ShapeMismatch(format!(
                "inner shape {} of the skew part differs from {}",
                skew.inner, shape
            )));
        }
        let n = self.size();
        let nrows = self.rows.len().max(skew.rows.len());
        let mut rows = Vec::with_capacity(nrows);
        for i in 0..nrows {
            let mut row: Vec<MarkedLetter> = self.rows.get(i).cloned().unwrap_or_default();
            if let Some(extra) = skew.rows.get(i) {
                row.extend(extra.iter().map(|&e| MarkedLetter::plain(e + n)));
            }
            rows.push(row);
        }
        ShiftedTableau::from_rows(rows)
    }

    /// Splits a standard tableau at `k`: entries `≤ k` form the prefix
    /// tableau, the rest becomes a skew tableau with entries lowered by `k`.
    /// Entries `≤ k` of a standard shifted tableau always form a shifted
    /// shape, so every `0 ≤ k ≤ n` is admissible.
    pub fn decompose_prefix(&self, k: usize) -> (ShiftedTableau, SkewShiftedTableau) {
        let mut prefix_rows = Vec::new();
        let mut skew_rows = Vec::new();
        for row in &self.rows {
            let cut = row.iter().take_while(|x| x.value <= k).count();
            if cut > 0 {
                prefix_rows.push(row[..cut].to_vec());
            }
            skew_rows.push(row[cut..].iter().map(|x| x.value - k).collect::<Vec<_>>());
        }
        while skew_rows.last().is_some_and(Vec::is_empty) {
            skew_rows.pop();
        }
        let prefix = ShiftedTableau { rows: prefix_rows };
        let inner = prefix.shape().expect("prefix of a standard tableau is a shifted shape");
        (prefix, SkewShiftedTableau { inner, rows: skew_rows })
    }
}

impl YoungTableau {
    pub fn from_rows(rows: Vec<Vec<MarkedLetter>>) -> Result<Self> {
        let t = YoungTableau { rows };
        t.shape()?;
        Ok(t)
    }

    pub fn from_values(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(MarkedLetter::plain).collect())
                .collect(),
        )
    }

    pub fn from_entries(rows: Vec<Vec<(usize, bool)>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|(value, primed)| MarkedLetter { value, primed }).collect())
                .collect(),
        )
    }

    pub fn empty() -> Self {
        YoungTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<MarkedLetter>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Result<Partition> {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::ShapeMismatch("row lengths are not weakly decreasing".into()))
    }

    /// First violated rule among the three marking rules (no diagonal rule).
    pub fn validate(&self) -> std::result::Result<(), RuleViolation> {
        if self.shape().is_err() {
            return Err(RuleViolation { rule: "shape is not a partition", row: 0, col: 0 });
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if j > 0 {
                    let left = row[j - 1];
                    if x < left {
                        return Err(RuleViolation { rule: "rows must be weakly increasing", row: i, col: j });
                    }
                    if x.primed && left == x {
                        return Err(RuleViolation { rule: "each primed letter at most once per row", row: i, col: j });
                    }
                }
                if i > 0 {
                    if let Some(&above) = self.rows[i - 1].get(j) {
                        if x < above {
                            return Err(RuleViolation { rule: "columns must be weakly increasing", row: i, col: j });
                        }
                        if !x.primed && above == x {
                            return Err(RuleViolation { rule: "each unprimed letter at most once per column", row: i, col: j });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_standard(&self) -> bool {
        self.is_marked_standard() && self.rows.iter().flatten().all(|x| !x.primed)
    }

    pub fn is_marked_standard(&self) -> bool {
        if self.validate().is_err() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for x in self.rows.iter().flatten() {
            if x.value == 0 || x.value > n || seen[x.value] {
                return false;
            }
            seen[x.value] = true;
        }
        true
    }

    pub fn reading_letters(&self) -> Vec<MarkedLetter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn reading_word(&self) -> Word {
        Word::new(self.reading_letters().iter().map(|x| x.value).collect()).expect("positive letters")
    }

    pub fn weight(&self) -> WeakComposition {
        let max = self.rows.iter().flatten().map(|x| x.value).max().unwrap_or(0);
        let mut counts = vec![0usize; max];
        for x in self.rows.iter().flatten() {
            counts[x.value - 1] += 1;
        }
        WeakComposition::new(counts)
    }

    pub fn unmark(&self) -> YoungTableau {
        YoungTableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| MarkedLetter::plain(x.value)).collect())
                .collect(),
        }
    }

    fn positions(&self) -> Option<(Vec<(usize, usize)>, Vec<bool>)> {
        let n = self.size();
        let mut pos = vec![(usize::MAX, usize::MAX); n + 1];
        let mut primed = vec![false; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x.value == 0 || x.value > n || pos[x.value].0 != usize::MAX {
                    return None;
                }
                pos[x.value] = (i, j);
                primed[x.value] = x.primed;
            }
        }
        Some((pos, primed))
    }

    /// Same two-case descent rule as for shifted tableaux.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.size();
        let (pos, primed) = self.positions().expect("descent set requires standard entries");
        let elems = (1..n)
            .filter(|&i| {
                let (ri, _) = pos[i];
                let (rj, _) = pos[i + 1];
                (!primed[i] && ri < rj) || (primed[i + 1] && rj <= ri)
            })
            .collect();
        DescentSet { n, elems }
    }

    pub fn peak_set(&self) -> PeakSet {
        self.descent_set().peak_set()
    }

    pub fn descent_composition(&self) -> crate::combinat::Composition {
        self.descent_set().to_composition()
    }
}

impl SkewShiftedTableau {
    pub fn new(inner: StrictPartition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let s = SkewShiftedTableau { inner, rows };
        s.outer()?;
        Ok(s)
    }

    pub fn empty_on(inner: StrictPartition) -> Self {
        SkewShiftedTableau { inner, rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn outer(&self) -> Result<StrictPartition> {
        let nrows = self.rows.len().max(self.inner.len());
        let mut parts = Vec::with_capacity(nrows);
        for i in 0..nrows {
            let inner_i = self.inner.parts().get(i).copied().unwrap_or(0);
            let extra = self.rows.get(i).map_or(0, Vec::len);
            parts.push(inner_i + extra);
        }
        StrictPartition::new(parts)
            .map_err(|_| Error::ShapeMismatch("outer shape is not a strict partition".into()))
    }

    /// Reading word, bottom row to top row.
    pub fn reading_word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect()).expect("positive letters")
    }
}

/// Renumber entries `1..=n` in marked-alphabet order: unprimed ties left to
/// right (column order), primed ties top to bottom (row order). `col` maps
/// row-local coordinates to the absolute column of the geometry in use.
fn standardize_rows(rows: &[Vec<MarkedLetter>], col: fn(usize, usize) -> usize) -> Vec<Vec<MarkedLetter>> {
    let mut cells: Vec<(usize, usize, MarkedLetter)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            cells.push((i, j, x));
        }
    }
    cells.sort_by_key(|&(i, j, x)| {
        let tie = if x.primed { (i, col(i, j)) } else { (col(i, j), i) };
        (x.order_key(), tie)
    });
    let mut out: Vec<Vec<MarkedLetter>> = rows.iter().map(|r| vec![MarkedLetter::plain(0); r.len()]).collect();
    for (rank, &(i, j, x)) in cells.iter().enumerate() {
        out[i][j] = MarkedLetter { value: rank + 1, primed: x.primed };
    }
    out
}

impl YoungTableau {
    /// Standardization with the same tie rules as in the shifted case.
    pub fn standardize(&self) -> YoungTableau {
        YoungTableau { rows: standardize_rows(&self.rows, |_, j| j) }
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Standard shifted tableaux of shape `λ`, in a deterministic order.
pub fn enumerate_shsyt(shape: &StrictPartition) -> Vec<ShiftedTableau> {
    fn rec(shape: &mut Vec<usize>, n: usize, filled: &mut Vec<Vec<usize>>, out: &mut Vec<ShiftedTableau>) {
        if n == 0 {
            out.push(
                ShiftedTableau::from_values(filled.iter().filter(|r| !r.is_empty()).cloned().collect())
                    .expect("generated shape is strict"),
            );
            return;
        }
        for i in 0..shape.len() {
            let len = shape[i];
            if len == 0 {
                continue;
            }
            let below = shape.get(i + 1).copied().unwrap_or(0);
            // removable corner: still strictly decreasing after removal
            if len - 1 > below || (len - 1 == 0 && below == 0) {
                shape[i] -= 1;
                filled[i][len - 1] = n;
                rec(shape, n - 1, filled, out);
                shape[i] += 1;
            }
        }
    }
    let n = shape.degree();
    let mut cur = shape.parts().to_vec();
    let mut filled: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    rec(&mut cur, n, &mut filled, &mut out);
    out.sort();
    out
}

/// All of `ShSYT^±(λ)`: standard fillings with any subset of off-diagonal
/// entries primed; `2^{n-ℓ(λ)}` primings per standard tableau.
pub fn enumerate_shsyt_pm(shape: &StrictPartition) -> Vec<ShiftedTableau> {
    let mut out = Vec::new();
    for t in enumerate_shsyt(shape) {
        out.extend(primings_of_shifted(&t));
    }
    out
}

/// All primings of one standard shifted tableau (diagonal stays unprimed).
pub fn primings_of_shifted(t: &ShiftedTableau) -> Vec<ShiftedTableau> {
    let off_diag: Vec<(usize, usize)> = t
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| (1..row.len()).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::with_capacity(1 << off_diag.len());
    for mask in 0u64..(1 << off_diag.len()) {
        let mut rows = t.rows.clone();
        for (b, &(i, j)) in off_diag.iter().enumerate() {
            rows[i][j].primed = mask >> b & 1 == 1;
        }
        out.push(ShiftedTableau { rows });
    }
    out
}

/// Marked semistandard shifted tableaux of shape `λ` with values `≤ max_value`.
pub fn enumerate_shssyt_pm(shape: &StrictPartition, max_value: usize) -> Vec<ShiftedTableau> {
    fn rec(
        shape: &[usize],
        max_value: usize,
        cells: &[(usize, usize)],
        k: usize,
        rows: &mut Vec<Vec<MarkedLetter>>,
        out: &mut Vec<ShiftedTableau>,
    ) {
        if k == cells.len() {
            out.push(ShiftedTableau { rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        for value in 1..=max_value {
            for primed in [true, false] {
                let x = MarkedLetter { value, primed };
                if primed && j == 0 {
                    continue; // diagonal
                }
                if j > 0 {
                    let left = rows[i][j - 1];
                    if x < left || (primed && left == x) {
                        continue;
                    }
                }
                if i > 0 {
                    // cell above (i-1, col i+j) is entry j+1 of row i-1
                    if j + 1 < shape[i - 1] + 1 {
                        if let Some(&above) = rows[i - 1].get(j + 1) {
                            if x < above || (!primed && above == x) {
                                continue;
                            }
                        }
                    }
                }
                rows[i].push(x);
                rec(shape, max_value, cells, k + 1, rows, out);
                rows[i].pop();
            }
        }
    }
    let parts = shape.parts();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<MarkedLetter>> = parts.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    rec(parts, max_value, &cells, 0, &mut rows, &mut out);
    out
}

/// Standard Young tableaux of shape `λ`.
pub fn enumerate_syt(shape: &Partition) -> Vec<YoungTableau> {
    fn rec(shape: &mut Vec<usize>, n: usize, filled: &mut Vec<Vec<usize>>, out: &mut Vec<YoungTableau>) {
        if n == 0 {
            out.push(
                YoungTableau::from_values(filled.iter().filter(|r| !r.is_empty()).cloned().collect())
                    .expect("generated shape is a partition"),
            );
            return;
        }
        for i in 0..shape.len() {
            let len = shape[i];
            if len == 0 {
                continue;
            }
            let below = shape.get(i + 1).copied().unwrap_or(0);
            if len > below {
                shape[i] -= 1;
                filled[i][len - 1] = n;
                rec(shape, n - 1, filled, out);
                shape[i] += 1;
            }
        }
    }
    let n = shape.degree();
    let mut cur = shape.parts().to_vec();
    let mut filled: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    rec(&mut cur, n, &mut filled, &mut out);
    out.sort();
    out
}

/// All of `SYT^±(λ)`: standard Young tableaux with any subset of entries
/// primed (no diagonal restriction unshifted).
pub fn enumerate_syt_pm(shape: &Partition) -> Vec<YoungTableau> {
    let mut out = Vec::new();
    for t in enumerate_syt(shape) {
        out.extend(primings_of_young(&t));
    }
    out
}

/// All `2^n` primings of one standard Young tableau.
pub fn primings_of_young(t: &YoungTableau) -> Vec<YoungTableau> {
    let cells: Vec<(usize, usize)> = t
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| (0..row.len()).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::with_capacity(1 << cells.len());
    for mask in 0u64..(1 << cells.len()) {
        let mut rows = t.rows.clone();
        for (b, &(i, j)) in cells.iter().enumerate() {
            rows[i][j].primed = mask >> b & 1 == 1;
        }
        out.push(YoungTableau { rows });
    }
    out
}

/// Unmarked semistandard Young tableaux of shape `λ` with values `≤ max_value`:
/// rows weakly increasing, columns strictly increasing.
pub fn enumerate_ssyt(shape: &Partition, max_value: usize) -> Vec<YoungTableau> {
    fn rec(
        cells: &[(usize, usize)],
        max_value: usize,
        k: usize,
        rows: &mut Vec<Vec<MarkedLetter>>,
        out: &mut Vec<YoungTableau>,
    ) {
        if k == cells.len() {
            out.push(YoungTableau { rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        let lo = {
            let left = if j > 0 { rows[i][j - 1].value } else { 1 };
            let above = if i > 0 { rows[i - 1][j].value + 1 } else { 1 };
            left.max(above)
        };
        for value in lo..=max_value {
            rows[i].push(MarkedLetter::plain(value));
            rec(cells, max_value, k + 1, rows, out);
            rows[i].pop();
        }
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<MarkedLetter>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    rec(&cells, max_value, 0, &mut rows, &mut out);
    out
}

/// Marked semistandard unshifted tableaux of shape `λ` with values
/// `≤ max_value`, subject to the three marking rules only.
pub fn enumerate_ssyt_pm(shape: &Partition, max_value: usize) -> Vec<YoungTableau> {
    fn rec(
        cells: &[(usize, usize)],
        max_value: usize,
        k: usize,
        rows: &mut Vec<Vec<MarkedLetter>>,
        out: &mut Vec<YoungTableau>,
    ) {
        if k == cells.len() {
            out.push(YoungTableau { rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        for value in 1..=max_value {
            for primed in [true, false] {
                let x = MarkedLetter { value, primed };
                if j > 0 {
                    let left = rows[i][j - 1];
                    if x < left || (primed && left == x) {
                        continue;
                    }
                }
                if i > 0 {
                    let above = rows[i - 1][j];
                    if x < above || (!primed && above == x) {
                        continue;
                    }
                }
                rows[i].push(x);
                rec(cells, max_value, k + 1, rows, out);
                rows[i].pop();
            }
        }
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<MarkedLetter>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    rec(&cells, max_value, 0, &mut rows, &mut out);
    out
}

/// Standard fillings of the skew shifted shape `λ/μ`.
pub fn enumerate_skew_shsyt(outer: &StrictPartition, inner: &StrictPartition) -> Result<Vec<SkewShiftedTableau>> {
    if !outer.contains(inner) {
        return Err(Error::ShapeMismatch(format!("{inner} is not contained in {outer}")));
    }
    let n = outer.degree() - inner.degree();
    fn rec(
        cur: &mut Vec<usize>,
        outer: &[usize],
        inner: &[usize],
        next: usize,
        n: usize,
        entries: &mut Vec<Vec<usize>>,
        out: &mut Vec<SkewShiftedTableau>,
        inner_sp: &StrictPartition,
    ) {
        if next > n {
            out.push(SkewShiftedTableau {
                inner: inner_sp.clone(),
                rows: {
                    let mut rows = entries.clone();
                    while rows.last().is_some_and(Vec::is_empty) {
                        rows.pop();
                    }
                    rows
                },
            });
            return;
        }
        for i in 0..outer.len() {
            if cur[i] >= outer[i] {
                continue;
            }
            // adding a box to row i must keep the shape strictly decreasing
            let above = if i == 0 { usize::MAX } else { cur[i - 1] };
            if above > cur[i] + 1 {
                cur[i] += 1;
                entries[i].push(next);
                rec(cur, outer, inner, next + 1, n, entries, out, inner_sp);
                entries[i].pop();
                cur[i] -= 1;
            }
        }
    }
    let mut cur: Vec<usize> = (0..outer.len())
        .map(|i| inner.parts().get(i).copied().unwrap_or(0))
        .collect();
    let mut entries: Vec<Vec<usize>> = vec![Vec::new(); outer.len()];
    let mut out = Vec::new();
    rec(&mut cur, outer.parts(), inner.parts(), 1, n, &mut entries, &mut out, inner);
    out.sort();
    out.dedup();
    Ok(out)
}
