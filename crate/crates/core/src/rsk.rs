//! Schensted row insertion and the RSK correspondence for permutations.
//!
//! Tableaux are stored top row first (English convention).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A tableau with distinct entries, rows strictly increasing left to right
/// and columns strictly increasing top to bottom. Insertion tableaux built
/// midway through RSK hold arbitrary distinct values; the finished `P` and
/// `Q` are standard (entries exactly `1..=n`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        Tableau::new(r.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { rows: t.rows }
    }
}

/// 1-based `(row, column)` of a tableau cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedTableau(m));
        if rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths must weakly decrease".into());
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return bad("rows must strictly increase".into());
        }
        for pair in rows.windows(2) {
            if pair[1]
                .iter()
                .zip(&pair[0])
                .any(|(below, above)| below <= above)
            {
                return bad("columns must strictly increase downwards".into());
            }
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return bad("entries must be distinct".into());
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row lengths, a partition of the entry count.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.rows.iter().any(|r| r.binary_search(&v).is_ok())
    }

    pub fn is_standard(&self) -> bool {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Row-inserts `v` in place, returning the cell the insertion created.
    pub fn insert(&mut self, v: usize) -> Result<Cell> {
        if self.contains(v) {
            return Err(Error::DuplicateEntry(v));
        }
        let mut carry = v;
        for (r, row) in self.rows.iter_mut().enumerate() {
            let pos = row.partition_point(|&x| x < carry);
            if pos == row.len() {
                row.push(carry);
                return Ok(Cell {
                    row: r + 1,
                    col: pos + 1,
                });
            }
            carry = std::mem::replace(&mut row[pos], carry);
        }
        self.rows.push(vec![carry]);
        Ok(Cell {
            row: self.rows.len(),
            col: 1,
        })
    }

    /// Places `v` at `cell`, which must be an outer corner of the shape.
    fn place(&mut self, cell: Cell, v: usize) {
        if cell.row > self.rows.len() {
            self.rows.push(Vec::new());
        }
        debug_assert_eq!(self.rows[cell.row - 1].len() + 1, cell.col);
        self.rows[cell.row - 1].push(v);
    }
}

pub fn schensted_insert(t: &Tableau, v: usize) -> Result<(Tableau, Cell)> {
    let mut out = t.clone();
    let cell = out.insert(v)?;
    Ok((out, cell))
}

/// Insertion tableau `P` and recording tableau `Q` of `p`.
pub fn rsk(p: &Permutation) -> (Tableau, Tableau) {
    let mut ins = Tableau::default();
    let mut rec = Tableau::default();
    for (i, &v) in p.as_slice().iter().enumerate() {
        let cell = ins.insert(v).expect("permutation values are distinct");
        rec.place(cell, i + 1);
    }
    (ins, rec)
}
