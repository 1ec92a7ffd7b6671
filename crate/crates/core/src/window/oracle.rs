//! Exact intersection counts for straight representatives, computed on the
//! branched double cover.
//!
//! The pillowcase is the torus `R^2 / 2Z^2` modulo `x -> -x`, branched at
//! the four corners. A straight seam lifts to the closed geodesic through
//! its two corners, met twice by every interior point, so interior
//! intersections of seams are half the non-corner torus intersections of
//! their lifts. A wave is drawn as the frontier of a thin neighbourhood of
//! its seam plus the far corner; its crossings with anything else are read
//! off from how the other arc meets that neighbourhood.
//!
//! These are the counts of one explicit drawing, so zero certifies
//! disjointness; the rule table records only the zero/nonzero outcome.

use super::{partner, ArcClass, WindowArc, WindowKind};
use crate::farey::Slope;

fn corner(id: u8) -> (i64, i64) {
    ((id >> 1) as i64, (id & 1) as i64)
}

/// Torus intersection points of the lines `c1 + t v1` and `c2 + u v2`
/// modulo `period * Z^2`, as `(t, u)` numerators over a common `|D|`, for
/// `t, u` in `[0, period)`. Parallel lines yield nothing.
fn torus_points(c1: (i64, i64), v1: (i64, i64), c2: (i64, i64), v2: (i64, i64), period: i64) -> Vec<(i64, i64, i64)> {
    // t v1 - u v2 = c2 - c1 + period * lambda
    let det = v1.0 * (-v2.1) - v1.1 * (-v2.0);
    if det == 0 {
        return Vec::new();
    }
    let bx = v1.0.abs() + v2.0.abs() + 1;
    let by = v1.1.abs() + v2.1.abs() + 1;
    let mut out = Vec::new();
    for lx in -bx..=bx {
        for ly in -by..=by {
            let d = (c2.0 - c1.0 + period * lx, c2.1 - c1.1 + period * ly);
            let mut t = d.0 * (-v2.1) - d.1 * (-v2.0);
            let mut u = v1.0 * d.1 - v1.1 * d.0;
            let mut den = det;
            if den < 0 {
                t = -t;
                u = -u;
                den = -den;
            }
            let top = period * den;
            if (0..top).contains(&t) && (0..top).contains(&u) {
                out.push((t, u, den));
            }
        }
    }
    out
}

fn dir(s: Slope) -> (i64, i64) {
    (s.p(), s.q())
}

/// Interior intersection points of two distinct straight seams.
pub fn seam_interior_points(c1: u8, s1: Slope, c2: u8, s2: Slope) -> i64 {
    let pts = torus_points(corner(c1), dir(s1), corner(c2), dir(s2), 2);
    let off_corner = pts.iter().filter(|&&(t, _, den)| t % den != 0).count() as i64;
    debug_assert!(off_corner % 2 == 0);
    off_corner / 2
}

struct Seam {
    a: u8,
    b: u8,
    slope: Slope,
}

impl Seam {
    fn same(&self, o: &Seam) -> bool {
        self.slope == o.slope && (self.a == o.a || self.a == o.b)
    }

    fn touches(&self, c: u8) -> bool {
        self.a == c || self.b == c
    }

    fn interior(&self, o: &Seam) -> i64 {
        if self.same(o) {
            0
        } else {
            seam_interior_points(self.a, self.slope, o.a, o.slope)
        }
    }
}

fn seam_of(arc: &WindowArc) -> (Seam, Option<(u8, u8)>) {
    match arc.class {
        ArcClass::Seam { slope, endpoints } => (Seam { a: endpoints[0], b: endpoints[1], slope }, None),
        ArcClass::Wave { base, companion_slope } => {
            let far = partner(base, companion_slope);
            (Seam { a: base, b: far, slope: companion_slope }, Some((base, far)))
        }
    }
}

/// Crossings between the drawn representatives of two arcs.
pub fn drawn_crossings(x: &WindowArc, y: &WindowArc) -> i64 {
    if x.window == WindowKind::OncePuncturedTorus {
        if x == y {
            return 0;
        }
        // straight lines through the one puncture of R^2 / Z^2
        let pts = torus_points((0, 0), dir(x.slope()), (0, 0), dir(y.slope()), 1);
        return pts.iter().filter(|&&(t, _, _)| t != 0).count() as i64;
    }
    if x == y {
        return 0;
    }
    let (sx, wx) = seam_of(x);
    let (sy, wy) = seam_of(y);
    match (wx, wy) {
        (None, None) => sx.interior(&sy),
        (Some(w), None) => wave_seam(&sx, w, &sy),
        (None, Some(w)) => wave_seam(&sy, w, &sx),
        (Some((c1, f1)), Some((c2, f2))) => {
            let mut n = 4 * sx.interior(&sy);
            // an end of one wave inside the other's neighbourhood
            if c2 == f1 {
                n += 2;
            }
            if c1 == f2 {
                n += 2;
            }
            // both encircle the same corner; the thinner one's strands exit
            if f1 == f2 && !sx.same(&sy) {
                n += 2;
            }
            n
        }
    }
}

fn wave_seam(core: &Seam, (_, far): (u8, u8), beta: &Seam) -> i64 {
    if core.same(beta) {
        return 0;
    }
    2 * core.interior(beta) + i64::from(beta.touches(far))
}
