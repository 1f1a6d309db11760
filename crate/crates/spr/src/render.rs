//! Text and JSON rendering for tableaux and module elements.
//!
//! Text output writes each cell as `3` or `3'`, pads cells to a common
//! width, and indents row `i` of a shifted shape by `i` cells so the main
//! diagonal lines up visually.  The JSON tableau format is
//! `{"shape": [...], "rows": [[{"v": 3, "p": true}, ...], ...]}` and the
//! JSON element format is
//! `{"basis": ..., "degree": ..., "terms": [{"key": ..., "coeff": ...}]}`.

use crate::error::{Error, Result};
use crate::freemodule::ModuleElement;
use crate::tableaux::{MarkedLetter, ShiftedTableau, SkewShiftedTableau, YoungTableau};
use serde::{Deserialize, Serialize};

fn cell_width(rows: &[Vec<MarkedLetter>]) -> usize {
    rows.iter()
        .flatten()
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(1)
}

fn render_grid(rows: &[Vec<(usize, Option<MarkedLetter>)>], width: usize) -> String {
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let mut line = String::new();
        for &(col, cell) in row {
            let start = col * (width + 1);
            while line.len() < start {
                line.push(' ');
            }
            match cell {
                Some(c) => {
                    let s = c.to_string();
                    line.push_str(&s);
                    line.extend(std::iter::repeat(' ').take(width - s.len()));
                }
                None => line.extend(std::iter::repeat(' ').take(width)),
            }
        }
        out.push_str(line.trim_end());
    }
    out
}

/// Renders a shifted tableau with row `i` indented `i` cells.
pub fn render_shifted(t: &ShiftedTableau) -> String {
    let width = cell_width(t.rows());
    let grid: Vec<Vec<_>> = t
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &c)| (i + j, Some(c)))
                .collect()
        })
        .collect();
    render_grid(&grid, width)
}

/// Renders an unshifted tableau flush left.
pub fn render_young(t: &YoungTableau) -> String {
    let width = cell_width(t.rows());
    let grid: Vec<Vec<_>> = t
        .rows()
        .iter()
        .map(|row| row.iter().enumerate().map(|(j, &c)| (j, Some(c))).collect())
        .collect();
    render_grid(&grid, width)
}

/// Renders a skew shifted tableau, marking removed inner cells with dots.
pub fn render_skew(s: &SkewShiftedTableau) -> String {
    let width = s
        .rows()
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let inner = s.inner.parts();
    let mut grid: Vec<Vec<(usize, Option<MarkedLetter>)>> = Vec::new();
    for (i, row) in s.rows().iter().enumerate() {
        let pad = inner.get(i).copied().unwrap_or(0);
        let mut cells: Vec<(usize, Option<MarkedLetter>)> =
            (0..pad).map(|j| (i + j, None)).collect();
        cells.extend(
            row.iter()
                .enumerate()
                .map(|(j, &v)| (i + pad + j, Some(MarkedLetter::plain(v)))),
        );
        grid.push(cells);
    }
    // dots for the inner cells so the skew shape is visible
    let rendered = render_grid(&grid, width);
    let mut out = String::new();
    for (line_no, line) in rendered.lines().enumerate() {
        if line_no > 0 {
            out.push('\n');
        }
        let pad = inner.get(line_no).copied().unwrap_or(0);
        let mut chars: Vec<char> = line.chars().collect();
        for j in 0..pad {
            let pos = (line_no + j) * (width + 1);
            if pos < chars.len() && chars[pos] == ' ' {
                chars[pos] = '.';
            } else if pos >= chars.len() {
                while chars.len() < pos {
                    chars.push(' ');
                }
                chars.push('.');
            }
        }
        out.extend(chars);
    }
    out
}

/// The interchange format for tableaux: explicit shape plus marked cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<MarkedLetter>>,
}

impl TableauJson {
    pub fn from_shifted(t: &ShiftedTableau) -> Self {
        TableauJson {
            shape: t.rows().iter().map(Vec::len).collect(),
            rows: t.rows().to_vec(),
        }
    }

    pub fn from_young(t: &YoungTableau) -> Self {
        TableauJson {
            shape: t.rows().iter().map(Vec::len).collect(),
            rows: t.rows().to_vec(),
        }
    }

    fn check_shape(&self) -> Result<()> {
        let actual: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        if actual == self.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "declared shape {:?} but rows have lengths {actual:?}",
                self.shape
            )))
        }
    }

    pub fn into_shifted(self) -> Result<ShiftedTableau> {
        self.check_shape()?;
        ShiftedTableau::from_rows(self.rows)
    }

    pub fn into_young(self) -> Result<YoungTableau> {
        self.check_shape()?;
        YoungTableau::from_rows(self.rows)
    }
}

/// One term of a serialized module element.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub key: serde_json::Value,
    pub coeff: i64,
}

/// A serialized module element: basis label, degree (when homogeneous), and
/// the sorted nonzero terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub terms: Vec<TermJson>,
}

/// Serializes an element with a caller-provided key encoding.
pub fn element_json<K: Ord>(
    basis: &str,
    degree: Option<usize>,
    x: &ModuleElement<K>,
    key: impl Fn(&K) -> serde_json::Value,
) -> ElementJson {
    ElementJson {
        basis: basis.to_string(),
        degree,
        terms: x
            .terms()
            .map(|(k, coeff)| TermJson { key: key(k), coeff })
            .collect(),
    }
}

/// The default key encoding via `serde`.
pub fn serde_key<K: Serialize>(k: &K) -> serde_json::Value {
    serde_json::to_value(k).expect("keys serialize infallibly")
}
