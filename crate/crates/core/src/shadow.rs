//! Shadows, shadowlines and iterated shadow diagrams.
//!
//! The northeast (NE) construction peels off, at each step, the points not
//! lying in the NE shadow of any other remaining point; its salient points
//! are the NE corners of each staircase, and the next iterate is the NE
//! diagram of *all* those corners. Reading the smallest ordinates and
//! abscissae per iterate gives the rows of the RSK tableaux.
//!
//! The southwest (SW) construction peels off the points whose SW shadow
//! holds no other remaining point. Its salient points are the SW corners,
//! but the next iterate only joins corners coming from the same parent
//! line. Largest ordinates and abscissae per iterate give the rows of the
//! insertion and recording piles, and each line remembers its parent so rows
//! can be stacked into columns.
//!
//! SW lines are realized as polylines clipped at the axes, running from
//! `(0, y_1)` to `(x_k, 0)`. NE lines keep their two unbounded rays.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{LatticePoint, Permutation};
use crate::piles::PileConfig;
use crate::rsk::Tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "NE")]
    NorthEast,
    #[serde(rename = "SW")]
    SouthWest,
}

impl Orientation {
    pub fn label(self) -> &'static str {
        match self {
            Orientation::NorthEast => "NE",
            Orientation::SouthWest => "SW",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `q` lies in the closed SW quarter-plane of `p`.
pub fn in_sw_shadow(q: LatticePoint, p: LatticePoint) -> bool {
    q.x <= p.x && q.y <= p.y
}

/// `q` lies in the closed NE quarter-plane of `p`.
pub fn in_ne_shadow(q: LatticePoint, p: LatticePoint) -> bool {
    q.x >= p.x && q.y >= p.y
}

/// An axis-parallel piece of a polyline. Ranges are closed; `None` as the
/// upper end stands for an unbounded ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Horizontal {
        y: usize,
        x0: usize,
        x1: Option<usize>,
    },
    Vertical {
        x: usize,
        y0: usize,
        y1: Option<usize>,
    },
}

fn within(v: usize, lo: usize, hi: Option<usize>) -> bool {
    v >= lo && hi.is_none_or(|h| v <= h)
}

/// Overlap of two closed ranges, if any.
fn overlap(
    (a0, a1): (usize, Option<usize>),
    (b0, b1): (usize, Option<usize>),
) -> Option<(usize, Option<usize>)> {
    let lo = a0.max(b0);
    let hi = match (a1, b1) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    };
    within(lo, lo, hi).then_some((lo, hi))
}

/// Where two segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Meet {
    Point(LatticePoint),
    /// Collinear overlap from `from` to `to` (`None` when unbounded).
    Overlap {
        from: LatticePoint,
        to: Option<LatticePoint>,
    },
}

impl Segment {
    pub fn is_horizontal(&self) -> bool {
        matches!(self, Segment::Horizontal { .. })
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        match *self {
            Segment::Horizontal { y, x0, x1 } => p.y == y && within(p.x, x0, x1),
            Segment::Vertical { x, y0, y1 } => p.x == x && within(p.y, y0, y1),
        }
    }

    /// Exact intersection of two axis-parallel segments.
    pub fn meet(&self, other: &Segment) -> Option<Meet> {
        use Segment::*;
        match (*self, *other) {
            (Horizontal { y, x0, x1 }, Vertical { x, y0, y1 })
            | (Vertical { x, y0, y1 }, Horizontal { y, x0, x1 }) => (within(x, x0, x1)
                && within(y, y0, y1))
            .then_some(Meet::Point(LatticePoint::new(x, y))),
            (
                Horizontal { y, x0, x1 },
                Horizontal {
                    y: yb,
                    x0: b0,
                    x1: b1,
                },
            ) if y == yb => overlap((x0, x1), (b0, b1)).map(|(lo, hi)| {
                collinear(
                    LatticePoint::new(lo, y),
                    hi.map(|h| LatticePoint::new(h, y)),
                )
            }),
            (
                Vertical { x, y0, y1 },
                Vertical {
                    x: xb,
                    y0: b0,
                    y1: b1,
                },
            ) if x == xb => overlap((y0, y1), (b0, b1)).map(|(lo, hi)| {
                collinear(
                    LatticePoint::new(x, lo),
                    hi.map(|h| LatticePoint::new(x, h)),
                )
            }),
            _ => None,
        }
    }
}

fn collinear(from: LatticePoint, to: Option<LatticePoint>) -> Meet {
    if to == Some(from) {
        Meet::Point(from)
    } else {
        Meet::Overlap { from, to }
    }
}

/// A staircase through its defining points, listed by increasing `x` (and
/// so strictly decreasing `y`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shadowline {
    orientation: Orientation,
    points: Vec<LatticePoint>,
    /// 1-based index of the parent line in the previous SW iterate.
    group: Option<usize>,
}

fn sorted_antichain(
    orientation: Orientation,
    mut points: Vec<LatticePoint>,
) -> Result<Vec<LatticePoint>> {
    let fail = |detail: String| Error::NotAntichain {
        orientation: orientation.label(),
        detail,
    };
    if points.is_empty() {
        return Err(fail("no points".into()));
    }
    points.sort();
    for w in points.windows(2) {
        if w[0].x == w[1].x || w[0].y <= w[1].y {
            return Err(fail(format!("{} and {} are comparable", w[0], w[1])));
        }
    }
    Ok(points)
}

pub fn sw_shadowline(points: Vec<LatticePoint>) -> Result<Shadowline> {
    Shadowline::new(Orientation::SouthWest, points, None)
}

pub fn ne_shadowline(points: Vec<LatticePoint>) -> Result<Shadowline> {
    Shadowline::new(Orientation::NorthEast, points, None)
}

impl Shadowline {
    pub fn new(
        orientation: Orientation,
        points: Vec<LatticePoint>,
        group: Option<usize>,
    ) -> Result<Self> {
        let points = sorted_antichain(orientation, points)?;
        Ok(Shadowline {
            orientation,
            points,
            group,
        })
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn group(&self) -> Option<usize> {
        self.group
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_x(&self) -> usize {
        self.points.last().unwrap().x
    }

    pub fn max_y(&self) -> usize {
        self.points[0].y
    }

    pub fn min_x(&self) -> usize {
        self.points[0].x
    }

    pub fn min_y(&self) -> usize {
        self.points.last().unwrap().y
    }

    /// NE corners `(x_{i+1}, y_i)` or SW corners `(x_i, y_{i+1})` between
    /// consecutive defining points.
    pub fn salient_points(&self) -> Vec<LatticePoint> {
        self.points
            .windows(2)
            .map(|w| match self.orientation {
                Orientation::NorthEast => LatticePoint::new(w[1].x, w[0].y),
                Orientation::SouthWest => LatticePoint::new(w[0].x, w[1].y),
            })
            .collect()
    }

    /// The line as segments in path order: SW lines from the `y` axis down
    /// to the `x` axis, NE lines from the upward ray down to the rightward
    /// ray.
    pub fn segments(&self) -> Vec<Segment> {
        let pts = &self.points;
        let mut segs = Vec::with_capacity(2 * pts.len());
        match self.orientation {
            Orientation::SouthWest => {
                let mut left = 0;
                for (i, p) in pts.iter().enumerate() {
                    segs.push(Segment::Horizontal {
                        y: p.y,
                        x0: left,
                        x1: Some(p.x),
                    });
                    let below = pts.get(i + 1).map_or(0, |q| q.y);
                    segs.push(Segment::Vertical {
                        x: p.x,
                        y0: below,
                        y1: Some(p.y),
                    });
                    left = p.x;
                }
            }
            Orientation::NorthEast => {
                let mut above = None;
                for (i, p) in pts.iter().enumerate() {
                    segs.push(Segment::Vertical {
                        x: p.x,
                        y0: p.y,
                        y1: above,
                    });
                    let right = pts.get(i + 1).map(|q| q.x);
                    segs.push(Segment::Horizontal {
                        y: p.y,
                        x0: p.x,
                        x1: right,
                    });
                    above = Some(p.y);
                }
            }
        }
        segs
    }

    /// Polyline vertices. SW lines end on the axes; NE rays are cut at
    /// `bound` in both directions.
    pub fn vertices(&self, bound: usize) -> Vec<LatticePoint> {
        let pts = &self.points;
        let mut out = Vec::with_capacity(2 * pts.len() + 1);
        match self.orientation {
            Orientation::SouthWest => {
                out.push(LatticePoint::new(0, pts[0].y));
                for (i, p) in pts.iter().enumerate() {
                    out.push(*p);
                    let below = pts.get(i + 1).map_or(0, |q| q.y);
                    out.push(LatticePoint::new(p.x, below));
                }
            }
            Orientation::NorthEast => {
                out.push(LatticePoint::new(pts[0].x, bound));
                for (i, p) in pts.iter().enumerate() {
                    out.push(*p);
                    let right = pts.get(i + 1).map_or(bound, |q| q.x);
                    out.push(LatticePoint::new(right, p.y));
                }
            }
        }
        out
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.segments().iter().any(|s| s.contains(p))
    }

    /// Every meeting of the two polylines, as `(own segment, other segment,
    /// meet)` with segment indices into [`Shadowline::segments`].
    pub fn meets(&self, other: &Shadowline) -> Vec<(usize, usize, Meet)> {
        let (mine, theirs) = (self.segments(), other.segments());
        let mut out = Vec::new();
        for (a, sa) in mine.iter().enumerate() {
            for (b, sb) in theirs.iter().enumerate() {
                if let Some(m) = sa.meet(sb) {
                    out.push((a, b, m));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShadowDiagram {
    orientation: Orientation,
    iterate: usize,
    lines: Vec<Shadowline>,
}

impl ShadowDiagram {
    pub fn new(orientation: Orientation, iterate: usize, lines: Vec<Shadowline>) -> Result<Self> {
        if let Some(l) = lines.iter().find(|l| l.orientation != orientation) {
            return Err(Error::NotAntichain {
                orientation: orientation.label(),
                detail: format!("line through {} has the wrong orientation", l.points[0]),
            });
        }
        Ok(ShadowDiagram {
            orientation,
            iterate,
            lines,
        })
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn iterate(&self) -> usize {
        self.iterate
    }

    pub fn lines(&self) -> &[Shadowline] {
        &self.lines
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        self.lines
            .iter()
            .flat_map(|l| l.points.iter().copied())
            .collect()
    }

    pub fn salient_points(&self) -> Vec<LatticePoint> {
        self.lines
            .iter()
            .flat_map(Shadowline::salient_points)
            .collect()
    }

    /// Largest coordinate in use; rendering bounds derive from it.
    pub fn extent(&self) -> usize {
        self.lines
            .iter()
            .map(|l| l.max_x().max(l.max_y()))
            .max()
            .unwrap_or(0)
    }
}

/// Peels SW layers: each line is defined by the remaining points whose SW
/// shadow contains no other remaining point.
pub fn sw_diagram(points: &[LatticePoint]) -> ShadowDiagram {
    let lines = peel(points, |p, rest| {
        !rest.iter().any(|&q| q != p && in_sw_shadow(q, p))
    })
    .into_iter()
    .map(|layer| {
        Shadowline::new(Orientation::SouthWest, layer, None).expect("layer is an antichain")
    })
    .collect();
    ShadowDiagram {
        orientation: Orientation::SouthWest,
        iterate: 0,
        lines,
    }
}

/// Peels NE layers: each line is the NE shadowline of all remaining points,
/// defined by those not inside another remaining point's NE shadow.
pub fn ne_diagram(points: &[LatticePoint]) -> ShadowDiagram {
    let lines = peel(points, |p, rest| {
        !rest.iter().any(|&q| q != p && in_ne_shadow(p, q))
    })
    .into_iter()
    .map(|layer| {
        Shadowline::new(Orientation::NorthEast, layer, None).expect("layer is an antichain")
    })
    .collect();
    ShadowDiagram {
        orientation: Orientation::NorthEast,
        iterate: 0,
        lines,
    }
}

fn peel(
    points: &[LatticePoint],
    on_boundary: impl Fn(LatticePoint, &[LatticePoint]) -> bool,
) -> Vec<Vec<LatticePoint>> {
    let mut rest = points.to_vec();
    let mut layers = Vec::new();
    while !rest.is_empty() {
        let (layer, others): (Vec<_>, Vec<_>) = rest.iter().partition(|&&p| on_boundary(p, &rest));
        debug_assert!(!layer.is_empty());
        layers.push(layer);
        rest = others;
    }
    layers
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowDiagramSequence {
    orientation: Orientation,
    iterates: Vec<ShadowDiagram>,
}

impl ShadowDiagramSequence {
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn iterates(&self) -> &[ShadowDiagram] {
        &self.iterates
    }

    pub fn len(&self) -> usize {
        self.iterates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.iterates.is_empty()
    }

    pub fn get(&self, m: usize) -> Option<&ShadowDiagram> {
        self.iterates.get(m)
    }

    /// For every line of every iterate, the 0-based index of the iterate-0
    /// line its parent chain starts from.
    pub fn roots(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::with_capacity(self.iterates.len());
        for d in &self.iterates {
            let row = d
                .lines
                .iter()
                .enumerate()
                .map(|(i, l)| match (l.group, out.last()) {
                    (Some(g), Some(prev)) => prev[g - 1],
                    _ => i,
                })
                .collect();
            out.push(row);
        }
        out
    }
}

/// Viennot iterates: each next diagram is the NE diagram of all salient
/// points of the previous one.
pub fn ne_iterates(p: &Permutation) -> ShadowDiagramSequence {
    let mut iterates = Vec::new();
    let mut points = p.diagram();
    while !points.is_empty() {
        let mut d = ne_diagram(&points);
        d.iterate = iterates.len();
        points = d.salient_points();
        iterates.push(d);
    }
    ShadowDiagramSequence {
        orientation: Orientation::NorthEast,
        iterates,
    }
}

/// SW iterates: the salient points of each multi-point line define exactly
/// one line of the next iterate, kept in parent order.
pub fn sw_iterates(p: &Permutation) -> ShadowDiagramSequence {
    let mut iterates = Vec::new();
    let points = p.diagram();
    if !points.is_empty() {
        let mut d = sw_diagram(&points);
        loop {
            let next: Vec<Shadowline> = d
                .lines
                .iter()
                .enumerate()
                .filter(|(_, l)| l.len() > 1)
                .map(|(i, l)| {
                    Shadowline::new(Orientation::SouthWest, l.salient_points(), Some(i + 1))
                        .expect("SW corners of one line form an antichain")
                })
                .collect();
            let m = d.iterate;
            iterates.push(d);
            if next.is_empty() {
                break;
            }
            d = ShadowDiagram {
                orientation: Orientation::SouthWest,
                iterate: m + 1,
                lines: next,
            };
        }
    }
    ShadowDiagramSequence {
        orientation: Orientation::SouthWest,
        iterates,
    }
}

/// Row `k + 1` of `P` (resp. `Q`) is the sorted smallest ordinates (resp.
/// abscissae) of the lines of NE iterate `k`.
pub fn geometric_rsk(p: &Permutation) -> (Tableau, Tableau) {
    let seq = ne_iterates(p);
    let read = |f: fn(&Shadowline) -> usize| {
        let rows = seq
            .iterates
            .iter()
            .map(|d| {
                let mut row: Vec<usize> = d.lines.iter().map(f).collect();
                row.sort_unstable();
                row
            })
            .collect();
        Tableau::new(rows).expect("geometric rows form a tableau")
    };
    (read(Shadowline::min_y), read(Shadowline::min_x))
}

/// Row `m + 1` of `R` (resp. `S`) holds the largest ordinates (resp.
/// abscissae) of the lines of SW iterate `m`; each entry is stacked on the
/// column its line descends from.
pub fn geometric_ps(p: &Permutation) -> (PileConfig, PileConfig) {
    let seq = sw_iterates(p);
    let width = seq.iterates.first().map_or(0, |d| d.lines.len());
    let mut ins = vec![Vec::new(); width];
    let mut rec = vec![Vec::new(); width];
    for (d, roots) in seq.iterates.iter().zip(seq.roots()) {
        for (line, col) in d.lines.iter().zip(roots) {
            debug_assert_eq!(ins[col].len(), d.iterate);
            ins[col].push(line.max_y());
            rec[col].push(line.max_x());
        }
    }
    (
        PileConfig::new(ins).expect("ordinates stack into decreasing columns"),
        PileConfig::new(rec).expect("abscissae stack into decreasing columns"),
    )
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    iterate: usize,
    orientation: Orientation,
    lines: Vec<LineRepr>,
}

/// `group` 0 marks a line without parent; parents are 1-based otherwise.
#[derive(Serialize, Deserialize)]
struct LineRepr {
    points: Vec<LatticePoint>,
    group: usize,
}

impl Serialize for ShadowDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr {
            iterate: self.iterate,
            orientation: self.orientation,
            lines: self
                .lines
                .iter()
                .map(|l| LineRepr {
                    points: l.points.clone(),
                    group: l.group.unwrap_or(0),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShadowDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DiagramRepr::deserialize(d)?;
        let lines = repr
            .lines
            .into_iter()
            .map(|l| Shadowline::new(repr.orientation, l.points, (l.group > 0).then_some(l.group)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        ShadowDiagram::new(repr.orientation, repr.iterate, lines).map_err(serde::de::Error::custom)
    }
}
