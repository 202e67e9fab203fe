//! Intersections between shadowlines of the same SW iterate.
//!
//! Within an iterate the line formed later is the *upper* one. A crossing is
//! horizontal when it involves a horizontal segment of the upper line and
//! vertical when it involves a vertical one. A pair showing both kinds in the
//! same iterate is a polygonal crossing.

use serde::{Deserialize, Serialize};

use crate::perm::{LatticePoint, Permutation};
use crate::piles::PileConfig;
use crate::shadow::{sw_iterates, Meet, ShadowDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CrossingKind {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

/// Where two lines meet: a single point, or a collinear stretch (never
/// produced by permutation diagrams; reported with `overlap` set).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Locus {
    Point(LatticePoint),
    Segment(LatticePoint, Option<LatticePoint>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CrossingRepr", into = "CrossingRepr")]
pub struct Crossing {
    pub iterate: usize,
    /// 1-based index of the earlier-formed line.
    pub lower: usize,
    /// 1-based index of the later-formed line.
    pub upper: usize,
    pub at: Locus,
    pub kind: CrossingKind,
}

impl Crossing {
    pub fn is_overlap(&self) -> bool {
        matches!(self.at, Locus::Segment(..))
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.lower, self.upper)
    }
}

#[derive(Serialize, Deserialize)]
struct CrossingRepr {
    iterate: usize,
    pair: [usize; 2],
    kind: CrossingKind,
    at: Locus,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    overlap: bool,
}

impl TryFrom<CrossingRepr> for Crossing {
    type Error = String;

    fn try_from(r: CrossingRepr) -> Result<Self, String> {
        let [lower, upper] = r.pair;
        if lower == 0 || lower >= upper {
            return Err(format!(
                "pair {:?} must be 1-based with lower < upper",
                r.pair
            ));
        }
        if r.overlap != matches!(r.at, Locus::Segment(..)) {
            return Err("overlap flag disagrees with location".into());
        }
        Ok(Crossing {
            iterate: r.iterate,
            lower,
            upper,
            at: r.at,
            kind: r.kind,
        })
    }
}

impl From<Crossing> for CrossingRepr {
    fn from(c: Crossing) -> Self {
        CrossingRepr {
            iterate: c.iterate,
            pair: [c.lower, c.upper],
            kind: c.kind,
            overlap: c.is_overlap(),
            at: c.at,
        }
    }
}

/// All crossings between distinct lines of `d`, grouped by pair `(i, j)` in
/// lexicographic order and, within a pair, along the upper line's path.
pub fn detect_crossings(d: &ShadowDiagram) -> Vec<Crossing> {
    let lines = d.lines();
    let mut out = Vec::new();
    for (i, lower) in lines.iter().enumerate() {
        for (j, upper) in lines.iter().enumerate().skip(i + 1) {
            let segs = upper.segments();
            let mut pair: Vec<Crossing> = Vec::new();
            for (a, _, meet) in upper.meets(lower) {
                let kind = if segs[a].is_horizontal() {
                    CrossingKind::Horizontal
                } else {
                    CrossingKind::Vertical
                };
                let at = match meet {
                    Meet::Point(p) => Locus::Point(p),
                    Meet::Overlap { from, to } => Locus::Segment(from, to),
                };
                let c = Crossing {
                    iterate: d.iterate(),
                    lower: i + 1,
                    upper: j + 1,
                    at,
                    kind,
                };
                if !pair.contains(&c) {
                    pair.push(c);
                }
            }
            out.extend(pair);
        }
    }
    out
}

/// True iff the crossings (all from one pair in one iterate) include both a
/// horizontal and a vertical one.
pub fn is_polygonal(crossings: &[Crossing]) -> bool {
    let has = |k| crossings.iter().any(|c| c.kind == k);
    has(CrossingKind::Horizontal) && has(CrossingKind::Vertical)
}

/// `(iterate, lower, upper)` of every pair in `crossings` that is polygonal.
pub fn polygonal_pairs(crossings: &[Crossing]) -> Vec<(usize, usize, usize)> {
    let mut keys: Vec<(usize, usize, usize)> = crossings
        .iter()
        .map(|c| (c.iterate, c.lower, c.upper))
        .collect();
    keys.dedup();
    keys.into_iter()
        .filter(|&(m, i, j)| {
            let sub: Vec<Crossing> = crossings
                .iter()
                .filter(|c| (c.iterate, c.lower, c.upper) == (m, i, j))
                .cloned()
                .collect();
            is_polygonal(&sub)
        })
        .collect()
}

/// Crossings of every SW iterate of `p`, iterate by iterate.
pub fn crossings_by_iterate(p: &Permutation) -> Vec<Vec<Crossing>> {
    sw_iterates(p)
        .iterates()
        .iter()
        .map(detect_crossings)
        .collect()
}

pub fn crossing_free_all_iterates(p: &Permutation) -> bool {
    crossing_free_from(p, 0)
}

/// Every SW iterate `i >= m` of `p` is free from crossings.
pub fn crossing_free_from(p: &Permutation, m: usize) -> bool {
    sw_iterates(p)
        .iterates()
        .iter()
        .skip(m)
        .all(|d| detect_crossings(d).is_empty())
}

/// Every row `r >= from_row` (French, row 1 at the bottom) of both `r` and
/// `s` strictly increases left to right.
pub fn rows_monotone(r: &PileConfig, s: &PileConfig, from_row: usize) -> bool {
    let increasing = |piles: &PileConfig| {
        (from_row.max(1)..=piles.height()).all(|k| piles.row(k).windows(2).all(|w| w[0] < w[1]))
    };
    increasing(r) && increasing(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutations;
    use crate::piles::xps;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn kinds(cs: &[Crossing]) -> Vec<CrossingKind> {
        cs.iter().map(|c| c.kind).collect()
    }

    use CrossingKind::{Horizontal as H, Vertical as V};

    #[test]
    fn smallest_crossing_examples() {
        let c = &crossings_by_iterate(&perm("312"))[0];
        assert_eq!(kinds(c), vec![H]);
        assert_eq!(c[0].pair(), (1, 2));
        assert_eq!(c[0].at, Locus::Point(LatticePoint::new(1, 2)));
        assert!(!is_polygonal(c));

        let c = &crossings_by_iterate(&perm("231"))[0];
        assert_eq!(kinds(c), vec![V]);
        assert_eq!(c[0].pair(), (1, 2));
    }

    #[test]
    fn polygonal_examples() {
        let by = crossings_by_iterate(&perm("4231"));
        assert_eq!(kinds(&by[0]), vec![H, V]);
        assert!(is_polygonal(&by[0]));
        assert!(by[1..].iter().all(Vec::is_empty));

        let by = crossings_by_iterate(&perm("45312"));
        assert_eq!(kinds(&by[0]), vec![V, H]);
        assert!(is_polygonal(&by[0]));
        assert_eq!(kinds(&by[1]), vec![H, V]);
        assert!(is_polygonal(&by[1]));
        assert_eq!(polygonal_pairs(&by.concat()), vec![(0, 1, 2), (1, 1, 2)]);
    }

    #[test]
    fn only_312_and_231_cross_in_s3() {
        let crossing: Vec<String> = Permutations::all(3)
            .filter(|p| !crossing_free_all_iterates(p))
            .map(|p| p.compact().unwrap())
            .collect();
        assert_eq!(crossing, vec!["231", "312"]);
        assert!(!crossing_free_all_iterates(&perm("64518723")));
        assert!(crossing_free_all_iterates(&Permutation::identity(6)));
    }

    #[test]
    fn rows_monotone_examples() {
        let (r, s) = xps(&perm("45312"));
        assert!(!rows_monotone(&r, &s, 1));
        assert!(!rows_monotone(&r, &s, 2));
        assert!(rows_monotone(&r, &s, 3));
        let (r, s) = xps(&perm("64518723"));
        assert!(!rows_monotone(&r, &s, 1));
        assert!(rows_monotone(&r, &s, 3));
    }

    #[test]
    fn crossings_are_well_formed_through_s6() {
        for n in 0..=6 {
            for p in Permutations::all(n) {
                for d in sw_iterates(&p).iterates() {
                    for c in detect_crossings(d) {
                        assert!(c.lower < c.upper);
                        assert!(!c.is_overlap(), "{p}");
                        let Locus::Point(at) = c.at else {
                            unreachable!()
                        };
                        let (lo, up) = (&d.lines()[c.lower - 1], &d.lines()[c.upper - 1]);
                        assert!(lo.contains(at) && up.contains(at));
                        let upper_seg_kind = up
                            .segments()
                            .iter()
                            .filter(|s| s.contains(at))
                            .map(|s| if s.is_horizontal() { H } else { V })
                            .collect::<Vec<_>>();
                        assert!(upper_seg_kind.contains(&c.kind));
                    }
                }
            }
        }
    }

    /// Permutations of size `<= max_n` (lexicographic) for which `holds` fails.
    fn exceptions(max_n: usize, holds: impl Fn(&Permutation) -> bool) -> Vec<String> {
        (0..=max_n)
            .flat_map(Permutations::all)
            .filter(|p| !holds(p))
            .map(|p| p.compact().unwrap())
            .collect()
    }

    // The crossing characterization is not exact. 5764132 has R = S =
    // [5,4,1],[7,6,3,2], every row increasing, yet in iterate 0 the upper line
    // dips into the lower one and back out: V at (3,4), H at (4,3).
    #[test]
    fn crossing_characterization_exceptions_through_s7() {
        let found = exceptions(7, |p| {
            let (r, s) = xps(p);
            crossing_free_all_iterates(p) == rows_monotone(&r, &s, 1)
        });
        assert_eq!(found, vec!["5764132"]);
        let by = crossings_by_iterate(&perm("5764132"));
        assert_eq!(kinds(&by[0]), vec![V, H]);
        assert_eq!(
            by[0].iter().map(|c| c.at).collect::<Vec<_>>(),
            vec![
                Locus::Point(LatticePoint::new(3, 4)),
                Locus::Point(LatticePoint::new(4, 3))
            ]
        );
        assert!(by[1..].iter().all(Vec::is_empty));
    }

    // 564312 has row 2 = 4,2 in both R and S, but in iterate 1 the upper line
    // {(2,2)} sits strictly inside the lower line's shadow and touches nothing.
    #[test]
    fn suffix_characterization_exceptions_through_s6() {
        let found = exceptions(6, |p| {
            let (r, s) = xps(p);
            (0..=r.height()).all(|m| crossing_free_from(p, m) == rows_monotone(&r, &s, m + 1))
        });
        assert_eq!(found, vec!["564312"]);
        let p = perm("564312");
        let (r, s) = xps(&p);
        assert!(crossing_free_from(&p, 1));
        assert!(!rows_monotone(&r, &s, 2));
        assert!(!crossing_free_from(&p, 0));
    }

    fn has_descent(piles: &PileConfig, row: usize) -> bool {
        piles.row(row).windows(2).any(|w| w[0] > w[1])
    }

    fn descent_direction_holds(p: &Permutation) -> bool {
        let (r, s) = xps(p);
        if r.columns().len() != 2 {
            return true;
        }
        let Some(top) = (1..=r.height())
            .rev()
            .find(|&k| has_descent(&r, k) || has_descent(&s, k))
        else {
            return true;
        };
        let found = kinds(&crossings_by_iterate(p)[top - 1]);
        (!has_descent(&r, top) || found.contains(&H))
            && (!has_descent(&s, top) || found.contains(&V))
    }

    #[test]
    fn descent_direction_on_two_columns_through_s6() {
        assert_eq!(exceptions(6, descent_direction_holds), vec!["564312"]);
        assert!(descent_direction_holds(&perm("312")));
        assert!(descent_direction_holds(&perm("231")));
        assert!(descent_direction_holds(&perm("45312")));
    }

    #[test]
    fn crossing_json_shape() {
        let c = crossings_by_iterate(&perm("312"))[0][0].clone();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"iterate":0,"pair":[1,2],"kind":"H","at":[1,2]}"#);
        assert_eq!(serde_json::from_str::<Crossing>(&text).unwrap(), c);
        assert!(serde_json::from_str::<Crossing>(
            r#"{"iterate":0,"pair":[2,1],"kind":"H","at":[1,2]}"#
        )
        .is_err());
        let seg = Crossing {
            iterate: 1,
            lower: 1,
            upper: 3,
            at: Locus::Segment(LatticePoint::new(1, 2), Some(LatticePoint::new(4, 2))),
            kind: H,
        };
        let text = serde_json::to_string(&seg).unwrap();
        assert_eq!(
            text,
            r#"{"iterate":1,"pair":[1,3],"kind":"H","at":[[1,2],[4,2]],"overlap":true}"#
        );
        assert_eq!(serde_json::from_str::<Crossing>(&text).unwrap(), seg);
    }

    // Counts from an independent floating-point polyline intersection oracle.
    #[test]
    fn crossing_counts_through_s6() {
        let frozen = [
            (1, 0, 0, 1),
            (2, 0, 0, 2),
            (3, 2, 2, 4),
            (4, 13, 13, 11),
            (5, 88, 84, 32),
            (6, 596, 575, 124),
        ];
        for (n, any, first, free) in frozen {
            let (mut a, mut f0, mut fr) = (0, 0, 0);
            for p in Permutations::all(n) {
                let by = crossings_by_iterate(&p);
                a += by.iter().any(|c| !c.is_empty()) as usize;
                f0 += !by[0].is_empty() as usize;
                fr += crossing_free_all_iterates(&p) as usize;
            }
            assert_eq!((a, f0, fr), (any, first, free), "n = {n}");
        }
    }
}
