//! Permutations in one-line notation, their lattice diagrams, and the
//! dashed-pattern queries used to characterize reverse patience words.
//!
//! All public indices are 1-based: position `i` of a permutation holds the
//! value `σ_i`, and the diagram point of that position is `(i, σ_i)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

/// A point of the integer lattice, `x` the abscissa and `y` the ordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: usize,
    pub y: usize,
}

impl LatticePoint {
    pub const fn new(x: usize, y: usize) -> Self {
        LatticePoint { x, y }
    }
}

impl From<(usize, usize)> for LatticePoint {
    fn from((x, y): (usize, usize)) -> Self {
        LatticePoint { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[usize; 2]>::deserialize(d)?;
        Ok(LatticePoint { x, y })
    }
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `σ_i` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// The points `(i, σ_i)` in increasing `x` order.
    pub fn diagram(&self) -> Vec<LatticePoint> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &v)| LatticePoint::new(i + 1, v))
            .collect()
    }

    /// Digit-string form, available for `n <= 9`.
    pub fn compact(&self) -> Option<String> {
        (self.len() <= 9).then(|| self.0.iter().map(|v| v.to_string()).collect())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Accepts `"6 4 5 1 8 7 2 3"`, `"6,4,5,1,8,7,2,3"`, or the compact
/// `"64518723"` (single token, only when `n <= 9`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let word = match tokens.as_slice() {
            [] => Vec::new(),
            [single] if single.len() > 1 => {
                if single.len() > 9 {
                    return Err(Error::Parse(format!(
                        "compact form '{single}' is only accepted for n <= 9"
                    )));
                }
                single
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("unexpected character '{c}'")))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            _ => tokens
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("'{t}' is not a positive integer")))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Permutation::new(word)
    }
}

/// Advances `word` to its lexicographic successor. Returns `false` (leaving
/// `word` untouched) when it is already the last permutation.
pub fn next_lex(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation of lexicographic rank `rank` (0-based) in `S_n`.
pub fn unrank(n: usize, mut rank: u64) -> Permutation {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut word = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f = factorial(k);
        let idx = (rank / f) as usize;
        rank %= f;
        word.push(pool.remove(idx));
    }
    Permutation(word)
}

/// Iterates `S_n` in lexicographic order.
pub struct Permutations {
    current: Option<Vec<usize>>,
    remaining: u64,
}

impl Permutations {
    pub fn all(n: usize) -> Self {
        Self::range(n, 0, factorial(n))
    }

    /// `count` permutations starting at lexicographic rank `start`.
    pub fn range(n: usize, start: u64, count: u64) -> Self {
        let count = count.min(factorial(n).saturating_sub(start));
        Permutations {
            current: (count > 0).then(|| unrank(n, start).0),
            remaining: count,
        }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let word = self.current.as_mut()?;
        let out = Permutation(word.clone());
        if self.remaining > 0 {
            next_lex(word);
        }
        Some(out)
    }
}

/// A classical pattern with some consecutive letters required to sit at
/// adjacent positions of the text, written `2-31`: letters inside one
/// dash-free block are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DashedPattern {
    letters: Vec<usize>,
    /// 1-based `j` means letters `j` and `j + 1` must be adjacent.
    adjacency: BTreeSet<usize>,
}

impl DashedPattern {
    pub fn new(letters: Vec<usize>, adjacency: BTreeSet<usize>) -> Result<Self> {
        let k = letters.len();
        Permutation::new(letters.clone())
            .map_err(|e| Error::MalformedPattern(format!("letters: {e}")))?;
        if let Some(&bad) = adjacency.iter().find(|&&j| j == 0 || j >= k) {
            return Err(Error::MalformedPattern(format!(
                "adjacency position {bad} outside 1..{}",
                k.saturating_sub(1)
            )));
        }
        Ok(DashedPattern { letters, adjacency })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn adjacency(&self) -> &BTreeSet<usize> {
        &self.adjacency
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `2-31`
    pub fn two_dash_thirty_one() -> Self {
        "2-31".parse().expect("valid pattern")
    }

    /// `3-1-42`
    pub fn three_one_forty_two() -> Self {
        "3-1-42".parse().expect("valid pattern")
    }

    /// Every tuple of 1-based positions `i_1 < … < i_k` of `p` whose values
    /// are order-isomorphic to the pattern and honour the adjacencies.
    pub fn occurrences(&self, p: &Permutation) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(self.len());
        self.extend(p.as_slice(), 0, &mut chosen, &mut out);
        out
    }

    pub fn is_contained_in(&self, p: &Permutation) -> bool {
        !self.occurrences(p).is_empty()
    }

    fn extend(
        &self,
        text: &[usize],
        from: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let j = chosen.len();
        if j == self.len() {
            out.push(chosen.iter().map(|&i| i + 1).collect());
            return;
        }
        let candidates = if j > 0 && self.adjacency.contains(&j) {
            from..(from + 1).min(text.len())
        } else {
            from..text.len()
        };
        for pos in candidates {
            let consistent = chosen.iter().enumerate().all(|(prev, &at)| {
                (self.letters[prev] < self.letters[j]) == (text[at] < text[pos])
            });
            if consistent {
                chosen.push(pos);
                self.extend(text, pos + 1, chosen, out);
                chosen.pop();
            }
        }
    }
}

impl FromStr for DashedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut adjacency = BTreeSet::new();
        for block in s.split('-') {
            if block.is_empty() {
                return Err(Error::MalformedPattern(format!("empty block in '{s}'")));
            }
            for (offset, c) in block.chars().enumerate() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::MalformedPattern(format!("bad letter '{c}'")))?;
                if offset > 0 {
                    adjacency.insert(letters.len());
                }
                letters.push(d as usize);
            }
        }
        DashedPattern::new(letters, adjacency)
    }
}

impl fmt::Display for DashedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 && !self.adjacency.contains(&i) {
                f.write_str("-")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn occurrences_dashed(p: &Permutation, pat: &DashedPattern) -> Vec<Vec<usize>> {
    pat.occurrences(p)
}

/// True iff every occurrence `(i, j, j+1)` of `2-31` in `p` extends to an
/// occurrence `(i, k, j, j+1)` of `3-1-42`, i.e. some `k` strictly between
/// `i` and `j` has `σ_k < σ_{j+1}`.
pub fn avoids_barred_3bar142(p: &Permutation) -> bool {
    let w = p.as_slice();
    for j in 1..w.len().saturating_sub(1) {
        let (high, low) = (w[j], w[j + 1]);
        if high < low {
            continue;
        }
        // scan i leftwards from j-1, tracking min of w over (i, j)
        let mut between_min = usize::MAX;
        for i in (0..j).rev() {
            if low < w[i] && w[i] < high && between_min > low {
                return false;
            }
            between_min = between_min.min(w[i]);
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parses_all_text_forms() {
        let expected = Permutation::new(vec![6, 4, 5, 1, 8, 7, 2, 3]).unwrap();
        assert_eq!(perm("6 4 5 1 8 7 2 3"), expected);
        assert_eq!(perm("6,4,5,1,8,7,2,3"), expected);
        assert_eq!(perm(" 6, 4 5,1 8 7 2 3 "), expected);
        assert_eq!(perm("64518723"), expected);
        assert_eq!(perm("1"), Permutation::identity(1));
        assert_eq!(perm(""), Permutation::identity(0));
        assert_eq!(perm("10 9 8 7 6 5 4 3 2 1").len(), 10);
    }

    #[test]
    fn rejects_malformed_text() {
        assert!(matches!(
            "1 2 2".parse::<Permutation>(),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(matches!(
            "0 1".parse::<Permutation>(),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(matches!("1 x".parse::<Permutation>(), Err(Error::Parse(_))));
        assert!(matches!("12a".parse::<Permutation>(), Err(Error::Parse(_))));
        assert!(matches!(
            "1234567890".parse::<Permutation>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "13".parse::<Permutation>(),
            Err(Error::NotAPermutation { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm("123").inverse(), perm("123"));
        assert_eq!(perm("231").inverse(), perm("312"));
        assert_eq!(perm("64518723").inverse(), perm("47823165"));
        assert_eq!(Permutation::identity(0).inverse(), Permutation::identity(0));
    }

    #[test]
    fn inverse_is_involution_through_s8() {
        for n in 0..=8 {
            for p in Permutations::all(n) {
                assert_eq!(p.inverse().inverse(), p);
            }
        }
    }

    #[test]
    fn diagram_examples() {
        assert!(Permutation::identity(0).diagram().is_empty());
        let pts: Vec<_> = perm("231").diagram().iter().map(|q| (q.x, q.y)).collect();
        assert_eq!(pts, vec![(1, 2), (2, 3), (3, 1)]);
        let pts: Vec<_> = perm("64518723")
            .diagram()
            .iter()
            .map(|q| (q.x, q.y))
            .collect();
        assert_eq!(
            pts,
            vec![
                (1, 6),
                (2, 4),
                (3, 5),
                (4, 1),
                (5, 8),
                (6, 7),
                (7, 2),
                (8, 3)
            ]
        );
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<_> = Permutations::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (rank, p) in all.iter().enumerate() {
            assert_eq!(&unrank(4, rank as u64), p);
        }
        let tail: Vec<_> = Permutations::range(4, 22, 10).collect();
        assert_eq!(tail, all[22..].to_vec());
        assert_eq!(Permutations::all(0).count(), 1);
    }

    #[test]
    fn pattern_parsing() {
        let p = DashedPattern::two_dash_thirty_one();
        assert_eq!(p.letters(), &[2, 3, 1]);
        assert_eq!(p.adjacency().iter().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(p.to_string(), "2-31");
        let q = DashedPattern::three_one_forty_two();
        assert_eq!(q.letters(), &[3, 1, 4, 2]);
        assert_eq!(q.adjacency().iter().copied().collect::<Vec<_>>(), vec![3]);
        assert!("2-2".parse::<DashedPattern>().is_err());
        assert!("2--31".parse::<DashedPattern>().is_err());
        assert!(DashedPattern::new(vec![1, 2], [2].into()).is_err());
    }

    #[test]
    fn dashed_occurrence_examples() {
        let pat = DashedPattern::two_dash_thirty_one();
        assert_eq!(occurrences_dashed(&perm("231"), &pat), vec![vec![1, 2, 3]]);
        assert!(occurrences_dashed(&perm("123"), &pat).is_empty());
        let occ = occurrences_dashed(&perm("64152873"), &pat);
        assert!(occ.contains(&vec![2, 4, 5]));
        assert!(occurrences_dashed(&Permutation::identity(0), &pat).is_empty());
    }

    /// Naive filter: every increasing k-subset of positions.
    fn naive_occurrences(p: &Permutation, pat: &DashedPattern) -> Vec<Vec<usize>> {
        let n = p.len();
        let k = pat.len();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let pos: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).collect();
            let adjacent_ok = pat.adjacency().iter().all(|&j| pos[j] == pos[j - 1] + 1);
            let order_ok = (0..k).all(|a| {
                (0..k).all(|b| {
                    (pat.letters()[a] < pat.letters()[b])
                        == (p.as_slice()[pos[a]] < p.as_slice()[pos[b]])
                })
            });
            if adjacent_ok && order_ok {
                out.push(pos.iter().map(|i| i + 1).collect());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn dashed_occurrences_match_naive_filter_through_s6() {
        for pat in [
            DashedPattern::two_dash_thirty_one(),
            DashedPattern::three_one_forty_two(),
        ] {
            for n in 0..=6 {
                for p in Permutations::all(n) {
                    let mut fast = occurrences_dashed(&p, &pat);
                    fast.sort();
                    assert_eq!(fast, naive_occurrences(&p, &pat), "{pat} in {p}");
                }
            }
        }
    }

    /// Direct reading of the barred pattern through the two dashed matchers.
    fn barred_by_extension(p: &Permutation) -> bool {
        let outer = DashedPattern::three_one_forty_two().occurrences(p);
        DashedPattern::two_dash_thirty_one()
            .occurrences(p)
            .iter()
            .all(|o| {
                outer
                    .iter()
                    .any(|big| big[0] == o[0] && big[2] == o[1] && big[3] == o[2])
            })
    }

    #[test]
    fn barred_examples() {
        assert!(avoids_barred_3bar142(&perm("64152873")));
        assert!(!avoids_barred_3bar142(&perm("231")));
        assert!(avoids_barred_3bar142(&perm("123")));
        assert!(avoids_barred_3bar142(&Permutation::identity(0)));
        assert!(avoids_barred_3bar142(&Permutation::identity(1)));
    }

    #[test]
    fn barred_check_matches_role_extension_through_s7() {
        for n in 0..=7 {
            for p in Permutations::all(n) {
                assert_eq!(avoids_barred_3bar142(&p), barred_by_extension(&p), "{p}");
            }
        }
    }

    #[test]
    fn json_rejects_non_permutations() {
        let p: Permutation = serde_json::from_str("[2,3,1]").unwrap();
        assert_eq!(p, perm("231"));
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
    }
}
