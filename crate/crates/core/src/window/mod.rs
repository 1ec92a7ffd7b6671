//! The two complexity-one windows: the once-punctured torus and the
//! four-holed sphere.
//!
//! The four-holed sphere is the pillowcase `R^2 / (2Z^2 ⋊ ±1)`. Its corners
//! are the images of `{0,1}^2`; corner `(x, y)` has id `2x + y`. The curve
//! of slope `p/q` is a straight closed geodesic of direction `(p, q)`, and
//! the seam of slope `p/q` through corner `c` is the straight segment from
//! `c` to `c + (p, q) mod 2`. So the parity class of the slope picks the
//! corner pairing: `(0,1)` pairs `{0,1}, {2,3}`; `(1,0)` pairs `{0,2},
//! {1,3}`; `(1,1)` pairs `{0,3}, {1,2}`. The curve of slope `p/q` separates
//! the two pairs, and it is the frontier of a neighbourhood of either seam
//! of that slope together with its two corners.
//!
//! A wave based at `c` is the frontier of a neighbourhood of a seam `σ`
//! from `c` to `c'` together with the corner `c'`; it projects to the curve
//! of the seam's slope. The torus window has a single puncture and every
//! arc is a wave through it.

pub mod oracle;
pub mod rules;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::farey::{self, Slope};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WindowError {
    #[error("arguments live in different windows")]
    Mismatch,
    #[error("slope bound must be positive")]
    ZeroBound,
    #[error("boundary id {0} out of range")]
    BadBoundary(u8),
    #[error("seam endpoints {0:?} do not match slope {1}")]
    BadSeam([u8; 2], Slope),
}

pub type Result<T> = std::result::Result<T, WindowError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WindowKind {
    OncePuncturedTorus,
    FourPuncturedSphere,
}

impl WindowKind {
    /// `i(γ, γ')` for Farey neighbours.
    pub fn unit(self) -> i64 {
        match self {
            WindowKind::OncePuncturedTorus => 1,
            WindowKind::FourPuncturedSphere => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WindowCurve {
    pub window: WindowKind,
    pub slope: Slope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArcClass {
    /// Endpoints sorted ascending.
    Seam { slope: Slope, endpoints: [u8; 2] },
    Wave { base: u8, companion_slope: Slope },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WindowArc {
    pub window: WindowKind,
    pub class: ArcClass,
}

/// `(p mod 2, q mod 2)` packed like a corner id.
pub fn parity(s: Slope) -> u8 {
    ((s.p().rem_euclid(2) as u8) << 1) | (s.q().rem_euclid(2) as u8)
}

/// The corner reached from `c` along a straight line of slope `s`.
pub fn partner(c: u8, s: Slope) -> u8 {
    c ^ parity(s)
}

impl WindowArc {
    pub fn seam(slope: Slope, a: u8, b: u8) -> Result<WindowArc> {
        for x in [a, b] {
            if x > 3 {
                return Err(WindowError::BadBoundary(x));
            }
        }
        if partner(a, slope) != b {
            return Err(WindowError::BadSeam([a, b], slope));
        }
        Ok(WindowArc {
            window: WindowKind::FourPuncturedSphere,
            class: ArcClass::Seam { slope, endpoints: [a.min(b), a.max(b)] },
        })
    }

    pub fn wave(window: WindowKind, base: u8, companion_slope: Slope) -> Result<WindowArc> {
        let limit = match window {
            WindowKind::OncePuncturedTorus => 0,
            WindowKind::FourPuncturedSphere => 3,
        };
        if base > limit {
            return Err(WindowError::BadBoundary(base));
        }
        Ok(WindowArc { window, class: ArcClass::Wave { base, companion_slope } })
    }

    pub fn slope(&self) -> Slope {
        match self.class {
            ArcClass::Seam { slope, .. } => slope,
            ArcClass::Wave { companion_slope, .. } => companion_slope,
        }
    }

    pub fn is_seam(&self) -> bool {
        matches!(self.class, ArcClass::Seam { .. })
    }

    /// Boundary components the arc touches.
    pub fn ends(&self) -> Vec<u8> {
        match self.class {
            ArcClass::Seam { endpoints, .. } => endpoints.to_vec(),
            ArcClass::Wave { base, .. } => vec![base],
        }
    }

    /// For a sphere wave, the straight seam it runs along and the corner it
    /// encircles.
    pub fn core(&self) -> Option<(u8, u8, Slope)> {
        match (self.window, self.class) {
            (WindowKind::FourPuncturedSphere, ArcClass::Wave { base, companion_slope }) => {
                Some((base, partner(base, companion_slope), companion_slope))
            }
            _ => None,
        }
    }
}

pub fn window_intersection(a: &WindowCurve, b: &WindowCurve) -> Result<i64> {
    if a.window != b.window {
        return Err(WindowError::Mismatch);
    }
    Ok(a.window.unit() * a.slope.det(b.slope).abs())
}

pub fn project_arc(a: &WindowArc) -> WindowCurve {
    WindowCurve { window: a.window, slope: a.slope() }
}

pub fn arcs_disjoint(a: &WindowArc, b: &WindowArc) -> Result<bool> {
    if a.window != b.window {
        return Err(WindowError::Mismatch);
    }
    // patterns never seen during generation go to the oracle
    Ok(rules::table()
        .get(&rules::pattern(a, b))
        .unwrap_or_else(|| oracle::drawn_crossings(a, b) == 0))
}

/// Farey distance between projections.
pub fn projection_distance(a: &WindowArc, b: &WindowArc) -> u32 {
    farey::distance(a.slope(), b.slope())
}

pub fn enumerate_arcs(window: WindowKind, slope_bound: i64) -> Result<Vec<WindowArc>> {
    let slopes = farey::slopes_up_to(slope_bound).map_err(|_| WindowError::ZeroBound)?;
    let mut out = Vec::new();
    for s in slopes {
        match window {
            WindowKind::OncePuncturedTorus => out.push(WindowArc::wave(window, 0, s)?),
            WindowKind::FourPuncturedSphere => {
                for c in 0..4u8 {
                    let d = partner(c, s);
                    if c < d {
                        out.push(WindowArc::seam(s, c, d)?);
                    }
                }
                for c in 0..4u8 {
                    out.push(WindowArc::wave(window, c, s)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
