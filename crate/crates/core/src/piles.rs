//! Pile configurations and Extended Patience Sorting.
//!
//! A pile is stored bottom→top, so every column is a strictly decreasing
//! sequence: `[6, 4, 1]` is the pile with 6 at the bottom and 1 on top.
//! Rows are indexed French-style, row 1 being the bottom cards.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Column heights, left to right. A composition of `n`, not a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Shape(pub Vec<usize>);

impl Shape {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PileConfigRepr", into = "PileConfigRepr")]
pub struct PileConfig {
    columns: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PileConfigRepr {
    columns: Vec<Vec<usize>>,
}

impl TryFrom<PileConfigRepr> for PileConfig {
    type Error = Error;

    fn try_from(r: PileConfigRepr) -> Result<Self> {
        PileConfig::new(r.columns)
    }
}

impl From<PileConfig> for PileConfigRepr {
    fn from(p: PileConfig) -> Self {
        PileConfigRepr { columns: p.columns }
    }
}

impl PileConfig {
    /// Checks structure only: nonempty, strictly decreasing columns whose
    /// entries are exactly `1..=n`. Use [`PileConfig::is_legal`] for
    /// membership in the image of patience sorting.
    pub fn new(columns: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = columns.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (j, col) in columns.iter().enumerate() {
            if col.is_empty() {
                return Err(Error::MalformedPiles(format!("column {} is empty", j + 1)));
            }
            if col.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::MalformedPiles(format!(
                    "column {} is not strictly decreasing bottom to top: {col:?}",
                    j + 1
                )));
            }
            for &v in col {
                if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::MalformedPiles(format!(
                        "entries are not exactly 1..={n} (offending value {v})"
                    )));
                }
            }
        }
        Ok(PileConfig { columns })
    }

    pub fn empty() -> Self {
        PileConfig {
            columns: Vec::new(),
        }
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.columns.iter().map(Vec::len).collect())
    }

    /// Top card of each pile, left to right.
    pub fn tops(&self) -> Vec<usize> {
        self.columns
            .iter()
            .filter_map(|c| c.last().copied())
            .collect()
    }

    /// Entries of 1-based row `r` (row 1 = bottom), left to right, skipping
    /// columns too short to reach it.
    pub fn row(&self, r: usize) -> Vec<usize> {
        self.columns
            .iter()
            .filter_map(|c| c.get(r.wrapping_sub(1)).copied())
            .collect()
    }

    pub fn height(&self) -> usize {
        self.shape().height()
    }

    pub fn is_legal(&self) -> bool {
        is_legal(self)
    }
}

/// Plain Patience Sorting: each card goes atop the leftmost pile whose top is
/// larger, otherwise starts a new pile on the right.
pub fn ps_piles(p: &Permutation) -> PileConfig {
    xps(p).0
}

/// Extended Patience Sorting: insertion piles `R` and recording piles `S`.
///
/// Time `i` is put at the bottom of the recording pile matching the pile that
/// received card `c_i`, so a recording column lists play times latest first.
pub fn xps(p: &Permutation) -> (PileConfig, PileConfig) {
    let mut insertion: Vec<Vec<usize>> = Vec::new();
    let mut times: Vec<Vec<usize>> = Vec::new();
    for (i, &card) in p.as_slice().iter().enumerate() {
        // tops increase left to right
        let j = insertion.partition_point(|pile| *pile.last().unwrap() < card);
        if j == insertion.len() {
            insertion.push(vec![card]);
            times.push(vec![i + 1]);
        } else {
            insertion[j].push(card);
            times[j].push(i + 1);
        }
    }
    for col in &mut times {
        col.reverse();
    }
    (
        PileConfig { columns: insertion },
        PileConfig { columns: times },
    )
}

/// Reverse patience word: columns left to right, each bottom card first.
pub fn rpw(r: &PileConfig) -> Permutation {
    Permutation::new(r.columns.iter().flatten().copied().collect())
        .expect("pile configuration holds each of 1..=n once")
}

pub fn is_legal(r: &PileConfig) -> bool {
    ps_piles(&rpw(r)) == *r
}

/// Recovers the unique `p` with `xps(p) == (r, s)`.
///
/// The card at height `h` of column `j` in `r` was played at the time found
/// at height `len - 1 - h` of column `j` in `s`; the candidate built this way
/// is accepted only if replaying it reproduces both piles.
pub fn xps_inverse(r: &PileConfig, s: &PileConfig) -> Result<Permutation> {
    let (rs, ss) = (r.shape(), s.shape());
    if rs != ss {
        return Err(Error::ShapeMismatch {
            insertion: rs.0,
            recording: ss.0,
        });
    }
    let n = r.len();
    let mut word = vec![0; n];
    for (cards, times) in r.columns.iter().zip(&s.columns) {
        for (&card, &time) in cards.iter().zip(times.iter().rev()) {
            word[time - 1] = card;
        }
    }
    let candidate = Permutation::new(word).map_err(|_| Error::NoPreimage)?;
    let (r2, s2) = xps(&candidate);
    if r2 == *r && s2 == *s {
        Ok(candidate)
    } else {
        Err(Error::NoPreimage)
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (0usize..40)
            .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|w| Permutation::new(w).unwrap())
    }

    proptest! {
        #[test]
        fn round_trip(p in arb_perm()) {
            let (r, s) = xps(&p);
            prop_assert_eq!(r.shape(), s.shape());
            prop_assert!(r.is_legal());
            prop_assert!(s.is_legal());
            prop_assert_eq!(xps_inverse(&r, &s).unwrap(), p);
        }

        #[test]
        fn json_round_trip(p in arb_perm()) {
            let (r, _) = xps(&p);
            let text = serde_json::to_string(&r).unwrap();
            prop_assert_eq!(serde_json::from_str::<PileConfig>(&text).unwrap(), r);
        }
    }
}
