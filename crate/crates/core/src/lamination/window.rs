//! Four-holed sphere windows cut out by round curves, with a fixed slope
//! frame.
//!
//! A window is the region bounded by three consecutive puncture blocks
//! `B1 = [a..b]`, `B2 = [b+1..c]`, `B3 = [c+1..d]` (each a single puncture
//! or a round curve) and an outer boundary, which is the round curve around
//! `[a..d]` or the disk boundary when `[a..d]` is everything. The axes are
//! `u = round(B1 ∪ B2)` at slope `0/1`, `v = round(B2 ∪ B3)` at `1/0`, and
//! the curve `w` around `B1 ∪ B3` passing over `B2`, at `1/1`. A curve of
//! slope `p/q` meets them `2|p|`, `2|q|` and `2|p - q|` times.

use serde::{Deserialize, Serialize};

use super::{
    CrossingWord, CurveCoords, Generator, LaminationError, MCGWord,
    NormalForm, Result, SurfaceSpec,
};
use crate::farey::{Slope, INFINITY, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Blocks {
    pub surface: SurfaceSpec,
    /// `(lo, hi)` disk puncture ranges, consecutive.
    pub blocks: [(usize, usize); 3],
}

impl Blocks {
    pub fn new(surface: SurfaceSpec, a: usize, b: usize, c: usize, d: usize) -> Result<Blocks> {
        let m = surface.disk_punctures();
        if !(1 <= a && a <= b && b < c && c < d && d <= m) {
            return Err(LaminationError::BadWindow(a, b, c, d));
        }
        Ok(Blocks { surface, blocks: [(a, b), (b + 1, c), (c + 1, d)] })
    }

    pub fn span(&self) -> (usize, usize) {
        (self.blocks[0].0, self.blocks[2].1)
    }

    /// Boundary curves that are essential (block rounds and the outer
    /// round), as `(lo, hi)` ranges.
    pub fn boundary_rounds(&self) -> Vec<(usize, usize)> {
        let n = self.surface.punctures();
        let mut out: Vec<(usize, usize)> = self.blocks.iter().copied().filter(|(lo, hi)| hi > lo).collect();
        let (lo, hi) = self.span();
        let k = hi - lo + 1;
        if k + 2 <= n {
            out.push((lo, hi));
        }
        out
    }
}

/// A window with its three axis curves prepared for repeated evaluation.
#[derive(Clone, Debug)]
pub struct StandardWindow {
    pub blocks: Blocks,
    pub u: CurveCoords,
    pub v: CurveCoords,
    pub w: CurveCoords,
    forms: [NormalForm; 3],
    walls: Vec<NormalForm>,
    // sign of the slope shear induced by the positive twists
    shear: [i64; 2],
}

impl StandardWindow {
    pub fn new(blocks: Blocks) -> Result<StandardWindow> {
        let s = blocks.surface;
        let [(a, b), (_, c), (_, d)] = blocks.blocks;
        let u = CurveCoords::round(s, a, c)?;
        let v = CurveCoords::round(s, b + 1, d)?;
        let w = CurveCoords::from_word(s, &CrossingWord::from_letters(
            vec![(a - 1) as u8, d as u8, c as u8, b as u8],
            true,
        ))?;
        let forms = [NormalForm::of(&u)?, NormalForm::of(&v)?, NormalForm::of(&w)?];
        let walls = blocks
            .boundary_rounds()
            .into_iter()
            .map(|(lo, hi)| NormalForm::of(&CurveCoords::round(s, lo, hi)?))
            .collect::<Result<Vec<_>>>()?;
        let mut win = StandardWindow { blocks, u, v, w, forms, walls, shear: [1, 1] };
        let t12 = win.twist(0, true).apply(&win.v)?;
        let t23 = win.twist(1, true).apply(&win.u)?;
        win.shear = [win.slope_unchecked(&t12)?.p().signum(), win.slope_unchecked(&t23)?.p().signum()];
        Ok(win)
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.blocks.surface
    }

    /// Dehn twist about the round curve around blocks `k` and `k + 1`,
    /// made of two block exchanges so every puncture returns to its block.
    pub fn twist(&self, k: usize, positive: bool) -> MCGWord {
        let lo = self.blocks.blocks[k].0;
        let r = self.blocks.blocks[k].1 - lo + 1;
        let s = self.blocks.blocks[k + 1].1 - self.blocks.blocks[k + 1].0 + 1;
        let mut letters = exchange(lo, r, s);
        letters.extend(exchange(lo, s, r));
        let word = MCGWord::new(letters);
        if positive {
            word
        } else {
            word.inverse()
        }
    }

    pub fn contains(&self, c: &CurveCoords) -> Result<bool> {
        if c.surface() != self.surface() {
            return Err(LaminationError::SurfaceMismatch);
        }
        let m = self.surface().disk_punctures();
        let inside = c.word()?.enclosed(m);
        let full: Vec<usize> = self
            .blocks
            .blocks
            .iter()
            .filter(|(lo, hi)| (*lo..=*hi).all(|j| inside.contains(&j)))
            .map(|(lo, hi)| hi - lo + 1)
            .collect();
        if full.len() != 2 || full.iter().sum::<usize>() != inside.len() {
            return Ok(false);
        }
        Ok(self.walls.iter().all(|f| f.intersect(c) == 0))
    }

    fn slope_unchecked(&self, c: &CurveCoords) -> Result<Slope> {
        let [iu, iv, iw] = [0, 1, 2].map(|k| self.forms[k].intersect(c) / 2);
        let (p, q) = (iu, iv);
        let s = if q == 0 {
            INFINITY
        } else if p == 0 {
            ZERO
        } else if iw == (p - q).abs() {
            Slope::new(p, q).expect("q > 0")
        } else if iw == p + q {
            Slope::new(-p, q).expect("q > 0")
        } else {
            return Err(LaminationError::NotInWindow);
        };
        Ok(s)
    }

    /// Slope of a curve contained in the window.
    pub fn slope(&self, c: &CurveCoords) -> Result<Slope> {
        if !self.contains(c)? {
            return Err(LaminationError::NotInWindow);
        }
        self.slope_unchecked(c)
    }

    /// The curve of slope `s`, built from `u`, `v` or `w` by twists. The
    /// twists act on slopes as the level-two shears, whose orbits are the
    /// three parity classes.
    pub fn curve(&self, s: Slope) -> Result<CurveCoords> {
        let mut steps: Vec<(usize, bool)> = Vec::new();
        let (mut p, mut q) = (s.p(), s.q());
        while !(p == 0 || q == 0 || p == q) {
            let mut best: Option<(i64, i64, usize, bool)> = None;
            for (k, positive) in [(0, true), (0, false), (1, true), (1, false)] {
                let e = 2 * self.shear[k] * if positive { 1 } else { -1 };
                // undo the shear of twist (k, positive)
                let (np, nq) = if k == 0 { (p, q - e * p) } else { (p - e * q, q) };
                let (np, nq) = if nq < 0 || (nq == 0 && np < 0) { (-np, -nq) } else { (np, nq) };
                let better = best.is_none_or(|(bp, bq, _, _)| np.abs() + nq < bp.abs() + bq);
                // -1/1 has the same height as 1/1, its base
                if better && (np.abs() + nq < p.abs() + q || (p == -q && np == nq)) {
                    best = Some((np, nq, k, positive));
                }
            }
            let (np, nq, k, positive) = best.expect("a shear lowers the height");
            steps.push((k, positive));
            p = np;
            q = nq;
        }
        let mut c = if q == 0 {
            self.v.clone()
        } else if p == 0 {
            self.u.clone()
        } else {
            self.w.clone()
        };
        for &(k, positive) in steps.iter().rev() {
            c = self.twist(k, positive).apply(&c)?;
        }
        Ok(c)
    }
}

// Carry the block of `r` punctures starting at `lo` rightwards past the
// next `s` punctures.
fn exchange(lo: usize, r: usize, s: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in (lo..lo + r).rev() {
        for j in i..i + s {
            out.push(Generator(j as i32));
        }
    }
    out
}

pub fn window_slope(c: &CurveCoords, window: &StandardWindow) -> Result<Slope> {
    window.slope(c)
}
