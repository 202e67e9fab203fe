//! ASCII and SVG drawings of shadow diagrams.
//!
//! ASCII format (frozen, used by golden tests): an `(n+1) × (n+1)` grid of
//! characters, top row first, one character per lattice point and no
//! separators. SW diagrams cover `0..=n` on both axes, NE diagrams cover
//! `1..=n+1` with the rays cut at `n+1`.
//!
//! * `*` defining point of a line
//! * `+` lattice point where a horizontal and a vertical segment meet that is
//!   not a defining point: salient corners and crossings
//! * `-` / `|` horizontal / vertical segment
//! * `.` empty
//!
//! SVG uses one user unit per lattice step with the origin at the bottom left
//! and `y` growing upwards. Permutation points are dots, salient points are
//! circled, and each iterate gets its own stroke shade; iterates after the
//! first are dashed.

use std::fmt::Write as _;

use crate::perm::LatticePoint;
use crate::shadow::{Orientation, Segment, ShadowDiagram};

/// Lattice window of a diagram over `n` points, inclusive.
fn window(orientation: Orientation, n: usize) -> (usize, usize) {
    match orientation {
        Orientation::SouthWest => (0, n),
        Orientation::NorthEast => (1, n + 1),
    }
}

pub fn ascii(d: &ShadowDiagram, n: usize) -> String {
    let (lo, hi) = window(d.orientation(), n);
    let side = hi - lo + 1;
    // bit 0: horizontal, bit 1: vertical, bit 2: defining point
    let mut cells = vec![vec![0u8; side]; side];
    let mut mark = |x: usize, y: usize, bit: u8| {
        if (lo..=hi).contains(&x) && (lo..=hi).contains(&y) {
            cells[y - lo][x - lo] |= bit;
        }
    };
    for line in d.lines() {
        for seg in line.segments() {
            match seg {
                Segment::Horizontal { y, x0, x1 } => {
                    for x in x0..=x1.unwrap_or(hi).min(hi) {
                        mark(x, y, 1);
                    }
                }
                Segment::Vertical { x, y0, y1 } => {
                    for y in y0..=y1.unwrap_or(hi).min(hi) {
                        mark(x, y, 2);
                    }
                }
            }
        }
        for p in line.points() {
            mark(p.x, p.y, 4);
        }
    }
    let mut out = String::with_capacity(side * (side + 1));
    for row in cells.iter().rev() {
        for &c in row {
            out.push(match c {
                c if c & 4 != 0 => '*',
                3 => '+',
                1 => '-',
                2 => '|',
                _ => '.',
            });
        }
        out.push('\n');
    }
    out
}

const SHADES: [&str; 4] = ["#222222", "#666666", "#999999", "#bbbbbb"];

/// Overlays the given iterates in one picture.
pub fn svg(iterates: &[&ShadowDiagram], n: usize) -> String {
    let orientation = iterates
        .first()
        .map_or(Orientation::SouthWest, |d| d.orientation());
    let (lo, hi) = window(orientation, n);
    let (min, max) = (lo as f64 - 0.5, hi as f64 + 0.5);
    let span = max - min;
    let px = 40.0 * span;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{px}" height="{px}" viewBox="{min} {} {span} {span}">"#,
        -max
    );
    s.push_str("<g transform=\"scale(1,-1)\">\n");
    let _ = writeln!(
        s,
        r##"<path d="M {lo} {lo} H {hi} M {lo} {lo} V {hi}" stroke="#cccccc" stroke-width="0.03" fill="none"/>"##
    );
    for d in iterates {
        let shade = SHADES[d.iterate().min(SHADES.len() - 1)];
        let dash = if d.iterate() > 0 {
            r#" stroke-dasharray="0.15 0.1""#
        } else {
            ""
        };
        let _ = writeln!(
            s,
            r#"<g class="iterate" data-iterate="{}" stroke="{shade}" stroke-width="0.06" fill="none"{dash}>"#,
            d.iterate()
        );
        for line in d.lines() {
            let pts: Vec<String> = line
                .vertices(hi)
                .iter()
                .map(|p| format!("{},{}", p.x, p.y))
                .collect();
            let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
        }
        s.push_str("</g>\n");
    }
    let dot = |s: &mut String, p: LatticePoint, r: f64, fill: &str| {
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="{r}" fill="{fill}" stroke="black" stroke-width="0.04"/>"#,
            p.x, p.y
        );
    };
    if let Some(base) = iterates.first() {
        for p in base.points() {
            dot(&mut s, p, 0.12, "black");
        }
    }
    for d in iterates {
        for p in d.salient_points() {
            dot(&mut s, p, 0.22, "none");
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::shadow::{ne_iterates, sw_iterates};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn sw_ascii_of_321() {
        let seq = sw_iterates(&perm("321"));
        let art = ascii(seq.get(0).unwrap(), 3);
        assert_eq!(art, "-*..\n.+*.\n..+*\n...|\n");
    }

    #[test]
    fn sw_ascii_of_312_shows_crossing() {
        let seq = sw_iterates(&perm("312"));
        // line 1 through (1,3),(2,1), line 2 through (3,2); they cross at (1,2)
        let art = ascii(seq.get(0).unwrap(), 3);
        assert_eq!(art, "-*..\n-+-*\n.+*|\n..||\n");
    }

    #[test]
    fn ne_ascii_of_identity() {
        let seq = ne_iterates(&perm("12"));
        let art = ascii(seq.get(0).unwrap(), 2);
        assert_eq!(art, "||.\n|*-\n*--\n");
    }

    #[test]
    fn ascii_grid_is_square() {
        let seq = sw_iterates(&perm("64518723"));
        for d in seq.iterates() {
            let art = ascii(d, 8);
            assert_eq!(art.lines().count(), 9);
            assert!(art.lines().all(|l| l.chars().count() == 9));
        }
    }

    #[test]
    fn svg_marks_points_and_salient_points() {
        let seq = sw_iterates(&perm("64518723"));
        let all: Vec<&ShadowDiagram> = seq.iterates().iter().collect();
        let out = svg(&all, 8);
        assert!(out.starts_with("<svg"));
        assert!(out.contains(r#"<polyline points="0,6 1,6 1,4 2,4 2,1 4,1 4,0"/>"#));
        assert_eq!(out.matches(r#"r="0.12""#).count(), 8);
        // 5 + 2 salient points, none in the last iterate
        assert_eq!(out.matches(r#"r="0.22""#).count(), 7);
        assert_eq!(out.matches("stroke-dasharray").count(), 2);
    }
}
