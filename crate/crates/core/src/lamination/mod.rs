//! Integer coordinates for simple closed multicurves on the sphere with `n`
//! punctures, seen as a disk with `m = n - 1` punctures on the real axis.
//!
//! For each interior puncture `P_j` (`2 <= j <= m - 1`) the coordinate pair
//! is
//!
//! ```text
//! a_j = (down_j - up_j) / 2,    b_j = (beta_{j-1} - beta_j) / 2
//! ```
//!
//! where `up_j`/`down_j` count minimal intersections with the vertical rays
//! from `P_j` to the top/bottom of the disk and `beta_j` with the vertical
//! chord between `P_j` and `P_{j+1}`. The vector `(a_2, b_2, .., a_{m-1},
//! b_{m-1})` is a complete invariant of multicurves without peripheral
//! components, and every nonzero integer vector occurs.
//!
//! Generators act on the crossing-word form of each component (see
//! [`word`]), which is exact; coordinates are re-read from the image words.

pub mod diagram;
pub mod oracle;
pub mod window;
pub mod word;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use window::{window_slope, Blocks, StandardWindow};
pub use word::{ArcCounts, CrossingWord, Generator};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaminationError {
    #[error("surface must have between 4 and {max} punctures, got {0}", max = MAX_PUNCTURES)]
    BadSurface(usize),
    #[error("expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("the zero vector is not a multicurve")]
    Zero,
    #[error("generator {0} out of range for {1} disk punctures")]
    BadGenerator(i32, usize),
    #[error("expected a single curve, found {0} components")]
    NotSingle(usize),
    #[error("curve is not essential")]
    NotEssential,
    #[error("curves live on different surfaces")]
    SurfaceMismatch,
    #[error("blocks {0}..{1}, ..{2}, ..{3} do not form a window")]
    BadWindow(usize, usize, usize, usize),
    #[error("curve is not contained in the window")]
    NotInWindow,
    #[error("norm descent stalled at crossing number {0}")]
    DescentStalled(usize),
}

pub type Result<T> = std::result::Result<T, LaminationError>;

/// Largest sphere puncture count the engine accepts. Words are stored as
/// bytes, and the pants-graph audits stop well before this.
pub const MAX_PUNCTURES: usize = 32;

/// The sphere `Σ_{0,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceSpec {
    punctures: usize,
}

impl SurfaceSpec {
    pub fn new(punctures: usize) -> Result<SurfaceSpec> {
        if !(4..=MAX_PUNCTURES).contains(&punctures) {
            return Err(LaminationError::BadSurface(punctures));
        }
        Ok(SurfaceSpec { punctures })
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    pub fn genus(&self) -> usize {
        0
    }

    /// Complexity `ξ = n - 3`.
    pub fn complexity(&self) -> usize {
        self.punctures - 3
    }

    /// Punctures of the disk model (the boundary plays the last one).
    pub fn disk_punctures(&self) -> usize {
        self.punctures - 1
    }

    pub fn coord_len(&self) -> usize {
        2 * self.punctures - 6
    }

    pub fn check_generator(&self, g: Generator) -> Result<()> {
        let i = g.index();
        if i == 0 || i >= self.disk_punctures() {
            return Err(LaminationError::BadGenerator(g.0, self.disk_punctures()));
        }
        Ok(())
    }
}

/// Coordinates of a multicurve.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveCoords {
    surface: SurfaceSpec,
    vector: Vec<i64>,
}

impl fmt::Debug for CurveCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vector)
    }
}

impl fmt::Display for CurveCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vector.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl CurveCoords {
    pub fn new(surface: SurfaceSpec, vector: Vec<i64>) -> Result<CurveCoords> {
        if vector.len() != surface.coord_len() {
            return Err(LaminationError::WrongLength { expected: surface.coord_len(), got: vector.len() });
        }
        if vector.iter().all(|&x| x == 0) {
            return Err(LaminationError::Zero);
        }
        Ok(CurveCoords { surface, vector })
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.surface
    }

    pub fn vector(&self) -> &[i64] {
        &self.vector
    }

    /// Largest absolute coordinate.
    pub fn max_norm(&self) -> i64 {
        self.vector.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// Coordinates of a union of pairwise disjoint curves given as words.
    pub fn from_words(surface: SurfaceSpec, words: &[CrossingWord]) -> Result<CurveCoords> {
        let m = surface.disk_punctures();
        let mut total = ArcCounts::zero(m);
        for w in words {
            total.add(&w.counts(m));
        }
        CurveCoords::new(surface, encode(&total, m))
    }

    pub fn from_word(surface: SurfaceSpec, word: &CrossingWord) -> Result<CurveCoords> {
        CurveCoords::from_words(surface, std::slice::from_ref(word))
    }

    /// The round curve around the consecutive disk punctures `lo ..= hi`.
    pub fn round(surface: SurfaceSpec, lo: usize, hi: usize) -> Result<CurveCoords> {
        CurveCoords::from_word(surface, &CrossingWord::round(lo, hi))
    }

    pub fn diagram(&self) -> diagram::Diagram {
        let m = self.surface.disk_punctures();
        let mut a = vec![0i64; m + 1];
        let mut b = vec![0i64; m + 1];
        for j in 2..m {
            a[j] = self.vector[2 * (j - 2)];
            b[j] = self.vector[2 * (j - 2) + 1];
        }
        diagram::build(m, &a, &b)
    }

    /// Component words traced from the reconstructed diagram.
    pub fn words(&self) -> Vec<CrossingWord> {
        self.diagram().trace()
    }

    /// Crossing word of a single curve.
    pub fn word(&self) -> Result<CrossingWord> {
        let mut ws = self.words();
        if ws.len() != 1 {
            return Err(LaminationError::NotSingle(ws.len()));
        }
        Ok(ws.pop().unwrap())
    }

    /// Number of crossings with the real axis. This is the norm that
    /// normalization descends along.
    pub fn axis_crossings(&self) -> usize {
        self.words().iter().map(|w| w.len()).sum()
    }
}

/// Coordinate vector from minimal arc counts.
pub fn encode(c: &ArcCounts, punctures: usize) -> Vec<i64> {
    let m = punctures;
    let mut v = Vec::with_capacity(2 * m.saturating_sub(2));
    for j in 2..m {
        v.push((c.down[j] - c.up[j]) / 2);
        v.push((c.beta[j - 1] - c.beta[j]) / 2);
    }
    v
}

/// A word in the half-twist generators, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MCGWord {
    pub letters: Vec<Generator>,
}

impl MCGWord {
    pub fn new(letters: Vec<Generator>) -> MCGWord {
        MCGWord { letters }
    }

    pub fn from_indices(ix: &[i32]) -> MCGWord {
        MCGWord { letters: ix.iter().map(|&i| Generator(i)).collect() }
    }

    pub fn inverse(&self) -> MCGWord {
        MCGWord { letters: self.letters.iter().rev().map(|g| g.inverse()).collect() }
    }

    pub fn check(&self, surface: SurfaceSpec) -> Result<()> {
        self.letters.iter().try_for_each(|&g| surface.check_generator(g))
    }

    pub fn apply(&self, c: &CurveCoords) -> Result<CurveCoords> {
        self.check(c.surface)?;
        let words: Vec<CrossingWord> = c.words().iter().map(|w| w.apply_all(&self.letters)).collect();
        CurveCoords::from_words(c.surface, &words)
    }
}

/// Image of a multicurve under one half twist, through the crossing words.
pub fn apply_generator(c: &CurveCoords, g: Generator) -> Result<CurveCoords> {
    c.surface.check_generator(g)?;
    let words: Vec<CrossingWord> = c.words().iter().map(|w| w.apply(g)).collect();
    CurveCoords::from_words(c.surface, &words)
}

/// Components with the number of disk punctures each one encloses.
pub fn components(c: &CurveCoords) -> Vec<(CurveCoords, usize)> {
    let m = c.surface.disk_punctures();
    c.words()
        .into_iter()
        .map(|w| {
            let k = w.enclosed(m).len();
            let cc = CurveCoords::from_word(c.surface, &w).expect("traced components are nonzero");
            (cc, k)
        })
        .collect()
}

pub fn is_essential(c: &CurveCoords, surface: SurfaceSpec) -> Result<bool> {
    if c.surface != surface {
        return Err(LaminationError::SurfaceMismatch);
    }
    let comps = components(c);
    if comps.len() != 1 {
        return Err(LaminationError::NotSingle(comps.len()));
    }
    let k = comps[0].1;
    Ok(k >= 2 && k + 2 <= surface.punctures())
}

/// Whether `c` consists of several distinct curves (any parallel copies
/// mean it is not a multicurve in the reduced sense).
pub fn is_reduced_multicurve(c: &CurveCoords) -> bool {
    let mut ws = c.words();
    let n = ws.len();
    ws.sort_by(|a, b| a.letters().cmp(b.letters()));
    ws.dedup();
    ws.len() == n
}

mod normal;
pub use normal::{intersection_number, NormalForm};

#[cfg(test)]
mod tests;
