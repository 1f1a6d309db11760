//! Schensted row insertion, Sagan-Worley shifted insertion, mixed insertion
//! via duality, (shifted) Knuth equivalence, and rectification of skew
//! shifted standard tableaux.

use crate::error::{Error, Result};
use crate::tableaux::{MarkedLetter, ShiftedTableau, SkewShiftedTableau, YoungTableau};
use crate::words::Permutation;
use std::collections::BTreeSet;

/// One insertion step: the box added and whether the chain of column
/// insertions (the non-Schensted move) fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InsertionStep {
    pub row: usize,
    pub col: usize,
    pub non_schensted: bool,
}

/// The outcome of Sagan-Worley insertion: insertion tableau `P`, recording
/// tableau `Q` (entry `i` primed iff step `i` used a non-Schensted move), and
/// the per-step trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionResult {
    pub p: ShiftedTableau,
    pub q: ShiftedTableau,
    pub trace: Vec<InsertionStep>,
}

/// Working representation: `rows[i][j]` at (row `i`, column `i + j`).
#[derive(Debug, Clone, Default)]
struct ShiftedRows(Vec<Vec<usize>>);

impl ShiftedRows {
    fn column_height(&self, col: usize) -> usize {
        (0..self.0.len())
            .take_while(|&i| col >= i && col - i < self.0[i].len())
            .count()
    }

    /// Insert `x` into `row`, continuing per the two Sagan-Worley rules.
    /// Returns the new box and whether a non-Schensted move happened.
    fn row_insert(&mut self, mut x: usize, mut row: usize) -> (usize, usize, bool) {
        loop {
            if row == self.0.len() {
                self.0.push(vec![x]);
                return (row, row, false);
            }
            let r = &mut self.0[row];
            match r.iter().position(|&y| y > x) {
                None => {
                    r.push(x);
                    return (row, row + r.len() - 1, false);
                }
                Some(j) => {
                    let bumped = std::mem::replace(&mut r[j], x);
                    if j == 0 {
                        // bumped off the main diagonal: chain of column insertions
                        let (br, bc) = self.column_insert(bumped, row + 1);
                        return (br, bc, true);
                    }
                    x = bumped;
                    row += 1;
                }
            }
        }
    }

    /// Column-insert `x` into `col`, chaining rightwards until a letter lands
    /// at the bottom of a column without bumping.
    fn column_insert(&mut self, mut x: usize, mut col: usize) -> (usize, usize) {
        loop {
            let height = self.column_height(col);
            let mut bumped = None;
            for i in 0..height {
                let j = col - i;
                if self.0[i][j] > x {
                    bumped = Some((i, std::mem::replace(&mut self.0[i][j], x)));
                    break;
                }
            }
            match bumped {
                None => {
                    // append at the end of the column
                    let row = height;
                    if row == self.0.len() {
                        debug_assert_eq!(col, row);
                        self.0.push(vec![x]);
                    } else {
                        debug_assert_eq!(self.0[row].len(), col - row);
                        self.0[row].push(x);
                    }
                    return (row, col);
                }
                Some((_, y)) => {
                    x = y;
                    col += 1;
                }
            }
        }
    }
}

/// Sagan-Worley shifted insertion of a permutation.
pub fn sagan_worley(w: &Permutation) -> InsertionResult {
    let mut p = ShiftedRows::default();
    let mut q: Vec<Vec<MarkedLetter>> = Vec::new();
    let mut trace = Vec::with_capacity(w.len());
    for (i, &x) in w.one_line().iter().enumerate() {
        let (row, col, non_schensted) = p.row_insert(x, 0);
        if row == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(q[row].len(), col - row);
        q[row].push(MarkedLetter { value: i + 1, primed: non_schensted });
        trace.push(InsertionStep { row, col, non_schensted });
    }
    InsertionResult {
        p: ShiftedTableau::from_values(p.0).expect("insertion preserves shifted shape"),
        q: ShiftedTableau::from_rows(q).expect("recording tableau is marked standard"),
        trace,
    }
}

/// The intermediate `(P, Q)` states after inserting each prefix of `w`.
pub fn sagan_worley_prefixes(w: &Permutation) -> Vec<(ShiftedTableau, ShiftedTableau)> {
    let mut p = ShiftedRows::default();
    let mut q: Vec<Vec<MarkedLetter>> = Vec::new();
    let mut states = Vec::with_capacity(w.len());
    for (i, &x) in w.one_line().iter().enumerate() {
        let (row, col, non_schensted) = p.row_insert(x, 0);
        if row == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(q[row].len(), col - row);
        q[row].push(MarkedLetter { value: i + 1, primed: non_schensted });
        states.push((
            ShiftedTableau::from_values(p.0.clone()).expect("insertion preserves shifted shape"),
            ShiftedTableau::from_rows(q.clone()).expect("recording tableau is marked standard"),
        ));
    }
    states
}

/// Insertion tableau `P_SW(w)` only.
pub fn p_sw(w: &Permutation) -> ShiftedTableau {
    sagan_worley(w).p
}

/// Recording tableau `Q_SW(w)` only.
pub fn q_sw(w: &Permutation) -> ShiftedTableau {
    sagan_worley(w).q
}

/// Classical Schensted row insertion; returns `(P, Q)`.
pub fn schensted(w: &Permutation) -> (YoungTableau, YoungTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x0) in w.one_line().iter().enumerate() {
        let mut x = x0;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                if row == q.len() {
                    q.push(Vec::new());
                }
                q[row].push(step + 1);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
                Some(j) => {
                    x = std::mem::replace(&mut p[row][j], x);
                    row += 1;
                }
            }
        }
    }
    (
        YoungTableau::from_values(p).expect("insertion preserves partition shape"),
        YoungTableau::from_values(q).expect("recording tableau is standard"),
    )
}

/// Schensted insertion tableau `P(w)` only.
pub fn p_schensted(w: &Permutation) -> YoungTableau {
    schensted(w).0
}

/// Haiman's mixed insertion, computed through its duality with Sagan-Worley:
/// `P_mix(w) = Q_SW(w^{-1})` and `Q_mix(w) = P_SW(w^{-1})`.
pub fn mixed(w: &Permutation) -> (ShiftedTableau, ShiftedTableau) {
    let res = sagan_worley(&w.inverse());
    (res.q, res.p)
}

/// All permutations reachable from `w` by one Knuth transformation
/// `xzy ~ zxy` or `yxz ~ yzx` (with `x < y < z`), in either direction.
pub fn knuth_neighbors(w: &Permutation) -> Vec<Permutation> {
    let v = w.one_line();
    let mut out = BTreeSet::new();
    for i in 0..v.len().saturating_sub(2) {
        let (a, b, c) = (v[i], v[i + 1], v[i + 2]);
        // xzy <-> zxy with x < y < z: windows of pattern a<c<b or b<c<a
        let push_swap01 = (a < c && c < b) || (b < c && c < a);
        // yxz <-> yzx with x < y < z: windows of pattern b<a<c or c<a<b
        let push_swap12 = (b < a && a < c) || (c < a && a < b);
        if push_swap01 {
            let mut u = v.to_vec();
            u.swap(i, i + 1);
            out.insert(Permutation::new(u).expect("swap keeps bijectivity"));
        }
        if push_swap12 {
            let mut u = v.to_vec();
            u.swap(i + 1, i + 2);
            out.insert(Permutation::new(u).expect("swap keeps bijectivity"));
        }
    }
    out.into_iter().collect()
}

/// Knuth neighbors plus the swap of the first two letters (the third shifted
/// Knuth transformation).
pub fn shifted_knuth_neighbors(w: &Permutation) -> Vec<Permutation> {
    let mut out: BTreeSet<Permutation> = knuth_neighbors(w).into_iter().collect();
    if w.len() >= 2 {
        out.insert(w.swap_first_two());
    }
    out.into_iter().collect()
}

fn bfs_class(
    w: &Permutation,
    neighbors: fn(&Permutation) -> Vec<Permutation>,
    cap: usize,
) -> Result<BTreeSet<Permutation>> {
    if w.len() > cap {
        return Err(Error::DegreeCap { n: w.len(), cap });
    }
    let mut seen = BTreeSet::new();
    let mut frontier = vec![w.clone()];
    seen.insert(w.clone());
    while let Some(u) = frontier.pop() {
        for v in neighbors(&u) {
            if seen.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    Ok(seen)
}

/// The Knuth equivalence class of `w` (closure under K1/K2).
pub fn knuth_class(w: &Permutation, cap: usize) -> Result<BTreeSet<Permutation>> {
    bfs_class(w, knuth_neighbors, cap)
}

/// The shifted Knuth equivalence class of `w` (closure under SK1-SK3);
/// equals the fiber `{v : P_SW(v) = P_SW(w)}`.
pub fn shifted_knuth_class(w: &Permutation, cap: usize) -> Result<BTreeSet<Permutation>> {
    bfs_class(w, shifted_knuth_neighbors, cap)
}

/// Rectification of a skew shifted standard tableau, realized as
/// `P_SW(w(S))`: the reading word of a rectified tableau is shifted-Knuth
/// equivalent to the reading word of `S`, and fibers of `P_SW` are exactly
/// the shifted Knuth classes.
pub fn rectify(s: &SkewShiftedTableau) -> ShiftedTableau {
    let word = s.reading_word();
    p_sw(&word.standardize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{enumerate_strict_partitions, StrictPartition};
    use crate::tableaux::enumerate_shsyt;
    use crate::words::symmetric_group;
    use std::collections::{BTreeMap, BTreeSet};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn shifted(rows: Vec<Vec<usize>>) -> ShiftedTableau {
        ShiftedTableau::from_values(rows).unwrap()
    }

    fn marked(rows: Vec<Vec<(usize, bool)>>) -> ShiftedTableau {
        ShiftedTableau::from_entries(rows).unwrap()
    }

    #[test]
    fn sagan_worley_full_trace_612543() {
        // the six intermediate (P_i, Q_i) pairs
        let expected_p = [
            shifted(vec![vec![6]]),
            shifted(vec![vec![1, 6]]),
            shifted(vec![vec![1, 2], vec![6]]),
            shifted(vec![vec![1, 2, 5], vec![6]]),
            shifted(vec![vec![1, 2, 4], vec![5, 6]]),
            shifted(vec![vec![1, 2, 3, 6], vec![4, 5]]),
        ];
        let expected_q = [
            marked(vec![vec![(1, false)]]),
            marked(vec![vec![(1, false), (2, true)]]),
            marked(vec![vec![(1, false), (2, true)], vec![(3, false)]]),
            marked(vec![vec![(1, false), (2, true), (4, false)], vec![(3, false)]]),
            marked(vec![vec![(1, false), (2, true), (4, false)], vec![(3, false), (5, true)]]),
            marked(vec![
                vec![(1, false), (2, true), (4, false), (6, true)],
                vec![(3, false), (5, true)],
            ]),
        ];
        let w = perm("612543");
        let res = sagan_worley(&w);
        assert_eq!(res.p, expected_p[5]);
        assert_eq!(res.q, expected_q[5]);
        // intermediate states: re-run on each prefix of the word
        for i in 1..=6 {
            let sub = &w.one_line()[..i];
            let mut rows = ShiftedRows::default();
            let mut q: Vec<Vec<MarkedLetter>> = Vec::new();
            for (k, &x) in sub.iter().enumerate() {
                let (row, col, ns) = rows.row_insert(x, 0);
                if row == q.len() {
                    q.push(Vec::new());
                }
                let _ = col;
                q[row].push(MarkedLetter { value: k + 1, primed: ns });
            }
            assert_eq!(ShiftedTableau::from_values(rows.0).unwrap(), expected_p[i - 1], "P_{i}");
            assert_eq!(ShiftedTableau::from_rows(q).unwrap(), expected_q[i - 1], "Q_{i}");
        }
    }

    #[test]
    fn sagan_worley_236541() {
        let res = sagan_worley(&perm("236541"));
        assert_eq!(res.p, shifted(vec![vec![1, 2, 3, 4], vec![5, 6]]));
        assert_eq!(
            res.q,
            marked(vec![
                vec![(1, false), (2, false), (3, false), (6, true)],
                vec![(4, false), (5, true)],
            ])
        );
    }

    #[test]
    fn sagan_worley_identity() {
        let res = sagan_worley(&Permutation::identity(5));
        assert_eq!(res.p, shifted(vec![vec![1, 2, 3, 4, 5]]));
        assert_eq!(res.q, shifted(vec![vec![1, 2, 3, 4, 5]]));
        assert!(res.trace.iter().all(|s| !s.non_schensted));
    }

    #[test]
    fn schensted_examples() {
        assert_eq!(
            p_schensted(&perm("12435")),
            YoungTableau::from_values(vec![vec![1, 2, 3, 5], vec![4]]).unwrap()
        );
        assert_eq!(
            p_schensted(&perm("23541")),
            YoungTableau::from_values(vec![vec![1, 3, 4], vec![2], vec![5]]).unwrap()
        );
        let (p, q) = schensted(&Permutation::identity(4));
        assert_eq!(p, YoungTableau::from_values(vec![vec![1, 2, 3, 4]]).unwrap());
        assert_eq!(p, q);
    }

    #[test]
    fn schensted_symmetry() {
        for n in 0..=7 {
            for w in symmetric_group(n).unwrap() {
                assert_eq!(schensted(&w).0, schensted(&w.inverse()).1);
            }
        }
    }

    #[test]
    fn mixed_duality() {
        let w = perm("612543");
        let (p_mix, q_mix) = mixed(&w);
        assert_eq!(p_mix, q_sw(&perm("236541")));
        assert_eq!(q_mix, p_sw(&perm("236541")));
        assert_eq!(
            p_mix,
            marked(vec![
                vec![(1, false), (2, false), (3, false), (6, true)],
                vec![(4, false), (5, true)],
            ])
        );
        // evaluate the duality on the 5172364 example
        let w = perm("5172364");
        let (p_mix, q_mix) = mixed(&w);
        assert_eq!(p_mix, q_sw(&perm("2457163")));
        assert_eq!(q_mix, p_sw(&perm("2457163")));
    }

    #[test]
    fn shifted_plactic_refines_plactic() {
        // P_mix(w) = P_mix(w') implies P(w) = P(w'), n ≤ 6
        for n in 0..=6 {
            let mut by_pmix: BTreeMap<ShiftedTableau, YoungTableau> = BTreeMap::new();
            for w in symmetric_group(n).unwrap() {
                let key = mixed(&w).0;
                let p = p_schensted(&w);
                match by_pmix.get(&key) {
                    None => {
                        by_pmix.insert(key, p);
                    }
                    Some(prev) => assert_eq!(prev, &p, "w = {w}"),
                }
            }
        }
    }

    #[test]
    fn neighbors_small() {
        assert_eq!(shifted_knuth_neighbors(&perm("1")), Vec::<Permutation>::new());
        assert_eq!(shifted_knuth_neighbors(&perm("12")), vec![perm("21")]);
        let n132 = shifted_knuth_neighbors(&perm("132"));
        // 132 = (x z y) with x=1,y=2,z=3 → 312; SK3 gives 312? no: swap first two → 312
        assert!(n132.contains(&perm("312")));
        // symmetry of the neighbor relation
        for w in symmetric_group(4).unwrap() {
            for v in shifted_knuth_neighbors(&w) {
                assert!(shifted_knuth_neighbors(&v).contains(&w), "{w} -> {v}");
            }
        }
    }

    #[test]
    fn classes_match_fibers() {
        let class = shifted_knuth_class(&perm("12"), 9).unwrap();
        assert_eq!(class, BTreeSet::from([perm("12"), perm("21")]));
        assert_eq!(p_sw(&perm("12")), p_sw(&perm("21")));
        assert_eq!(
            knuth_class(&Permutation::identity(4), 9).unwrap(),
            BTreeSet::from([Permutation::identity(4)])
        );
        // exhaustive: BFS class = P_SW fiber over S_5
        let mut fibers: BTreeMap<ShiftedTableau, BTreeSet<Permutation>> = BTreeMap::new();
        for w in symmetric_group(5).unwrap() {
            fibers.entry(p_sw(&w)).or_default().insert(w);
        }
        let total: usize = fibers.values().map(BTreeSet::len).sum();
        assert_eq!(total, 120);
        for fiber in fibers.values() {
            let rep = fiber.iter().next().unwrap();
            assert_eq!(&shifted_knuth_class(rep, 9).unwrap(), fiber);
        }
        assert!(shifted_knuth_class(&Permutation::identity(9), 8).is_err());
    }

    #[test]
    fn rectification() {
        // the skew part of the j-counterexample
        let t = shifted(vec![vec![1, 2, 3, 6], vec![4, 5], vec![7]]);
        let (prefix, s) = t.decompose_prefix(2);
        assert_eq!(prefix, shifted(vec![vec![1, 2]]));
        assert_eq!(rectify(&s), shifted(vec![vec![1, 2, 3, 4], vec![5]]));
        // non-skew input: already rectified
        for lam in enumerate_strict_partitions(5) {
            for t in enumerate_shsyt(&lam) {
                let (_, s) = t.decompose_prefix(0);
                assert_eq!(rectify(&s), t);
            }
        }
        // one-box skew
        let one = SkewShiftedTableau::new(StrictPartition::new(vec![2]).unwrap(), vec![vec![1]]).unwrap();
        assert_eq!(rectify(&one), shifted(vec![vec![1]]));
    }

    #[test]
    fn q_primes_match_trace() {
        for w in symmetric_group(6).unwrap() {
            let res = sagan_worley(&w);
            assert!(res.q.is_marked_standard());
            assert_eq!(res.p.shape().unwrap(), res.q.shape().unwrap());
            for (i, step) in res.trace.iter().enumerate() {
                let q_entry = res.q.at(step.row, step.col).unwrap();
                assert_eq!(q_entry.value, i + 1);
                assert_eq!(q_entry.primed, step.non_schensted);
            }
        }
    }
}
