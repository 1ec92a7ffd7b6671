//! Pants decompositions of `Σ_{0,n}`, elementary moves, multicurves `Q`
//! and their complementary windows, over a finite curve catalog.

pub mod audit;
pub mod catalog;
pub mod graph;
pub mod projection;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lamination::{
    components, intersection_number, Blocks, CurveCoords, LaminationError, StandardWindow, SurfaceSpec,
};

pub use catalog::CurveCatalog;
pub use graph::{
    all_min_paths, catalog_distance, commute_adjacent_moves, is_elementary_edge, neighbors_in_catalog,
    path_support, PantsGraph, PathSupport,
};
pub use projection::{dq_distance, subsurface_distance, Projector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PantsError {
    #[error(transparent)]
    Lamination(#[from] LaminationError),
    #[error("catalog bound must be positive")]
    ZeroBound,
    #[error("catalogs are supported for 4 to 7 punctures, not {0}")]
    UnsupportedSurface(usize),
    #[error("not a pants decomposition: {0}")]
    NotPants(String),
    #[error("curve {0} is not in the catalog")]
    NotInCatalog(String),
    #[error("round curves {0:?} are not a standard multicurve: {1}")]
    NotStandard(Vec<(usize, usize)>, String),
    #[error("multicurve is not (n x 1): a complementary piece has complexity {0}")]
    NotNx1(usize),
    #[error("pants decomposition does not contain Q")]
    QNotContained,
    #[error("a projection to a window is empty")]
    EmptyProjection,
    #[error("position {0} is not an interior vertex of a path of length {1}")]
    BadPosition(usize, usize),
    #[error("path enumeration cap must be positive")]
    ZeroCap,
    #[error("no pairs to audit")]
    EmptySample,
    #[error("catalog cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, PantsError>;

/// A pants decomposition, with its curves sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PantsVertex {
    pub surface: SurfaceSpec,
    pub curves: Vec<CurveCoords>,
}

impl PantsVertex {
    /// Checks count, essentiality and pairwise disjointness.
    pub fn new(surface: SurfaceSpec, mut curves: Vec<CurveCoords>) -> Result<PantsVertex> {
        curves.sort();
        curves.dedup();
        if curves.len() != surface.complexity() {
            return Err(PantsError::NotPants(format!("{} distinct curves, need {}", curves.len(), surface.complexity())));
        }
        for c in &curves {
            if !crate::lamination::is_essential(c, surface)? {
                return Err(PantsError::NotPants(format!("{c} is not essential")));
            }
        }
        for (i, a) in curves.iter().enumerate() {
            for b in &curves[i + 1..] {
                if intersection_number(a, b)? != 0 {
                    return Err(PantsError::NotPants(format!("{a} meets {b}")));
                }
            }
        }
        Ok(PantsVertex { surface, curves })
    }

    pub fn contains(&self, c: &CurveCoords) -> bool {
        self.curves.binary_search(c).is_ok()
    }

    pub fn contains_all(&self, q: &MulticurveQ) -> bool {
        q.curves.iter().all(|c| self.contains(c))
    }

    pub fn shared(&self, other: &PantsVertex) -> Vec<CurveCoords> {
        self.curves.iter().filter(|c| other.contains(c)).cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryMoveEdge {
    pub from: PantsVertex,
    pub to: PantsVertex,
    pub removed: CurveCoords,
    pub added: CurveCoords,
}

impl ElementaryMoveEdge {
    pub fn between(from: &PantsVertex, to: &PantsVertex) -> Result<Option<ElementaryMoveEdge>> {
        if !is_elementary_edge(from, to)? {
            return Ok(None);
        }
        let removed = from.curves.iter().find(|c| !to.contains(c)).unwrap().clone();
        let added = to.curves.iter().find(|c| !from.contains(c)).unwrap().clone();
        Ok(Some(ElementaryMoveEdge { from: from.clone(), to: to.clone(), removed, added }))
    }
}

/// A complementary piece of a multicurve on the disk model. `outer` is the
/// curve around it, or `None` for the piece containing the disk boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub outer: Option<usize>,
    pub children: Vec<usize>,
    pub punctures: Vec<usize>,
}

impl Region {
    /// Boundary components, counting the disk boundary as a puncture.
    pub fn boundary_count(&self) -> usize {
        1 + self.children.len() + self.punctures.len()
    }

    pub fn complexity(&self) -> usize {
        self.boundary_count() - 3
    }
}

/// Pieces of the complement of pairwise disjoint curves with the given
/// enclosed puncture sets (each a subset of `1..=m`, on the side away
/// from the disk boundary).
pub fn regions(m: usize, sets: &[Vec<usize>]) -> std::result::Result<Vec<Region>, String> {
    let as_set: Vec<BTreeSet<usize>> = sets.iter().map(|s| s.iter().copied().collect()).collect();
    for (i, a) in as_set.iter().enumerate() {
        for b in &as_set[i + 1..] {
            let nested = a.is_subset(b) || b.is_subset(a) || a.is_disjoint(b);
            if !nested || a == b {
                return Err(format!("{a:?} and {b:?} cross or coincide"));
            }
        }
    }
    let parent: Vec<Option<usize>> = (0..sets.len())
        .map(|i| {
            (0..sets.len())
                .filter(|&j| j != i && as_set[i].is_subset(&as_set[j]))
                .min_by_key(|&j| as_set[j].len())
        })
        .collect();
    let mut out = Vec::with_capacity(sets.len() + 1);
    for outer in std::iter::once(None).chain((0..sets.len()).map(Some)) {
        let children: Vec<usize> = (0..sets.len()).filter(|&j| parent[j] == outer).collect();
        let inside: BTreeSet<usize> = match outer {
            None => (1..=m).collect(),
            Some(i) => as_set[i].clone(),
        };
        let punctures = inside
            .into_iter()
            .filter(|p| children.iter().all(|&c| !as_set[c].contains(p)))
            .collect();
        out.push(Region { outer, children, punctures });
    }
    Ok(out)
}

/// A multicurve of round curves, with a standard window for each
/// complementary piece of complexity one.
#[derive(Clone, Debug)]
pub struct MulticurveQ {
    pub surface: SurfaceSpec,
    pub rounds: Vec<(usize, usize)>,
    pub curves: Vec<CurveCoords>,
    pub regions: Vec<Region>,
    pub windows: Vec<StandardWindow>,
}

impl MulticurveQ {
    /// Round curves around `lo ..= hi`, which must be pairwise nested or
    /// disjoint essential intervals, leaving only pants and complexity
    /// one pieces.
    pub fn standard(surface: SurfaceSpec, rounds: &[(usize, usize)]) -> Result<MulticurveQ> {
        let m = surface.disk_punctures();
        let bad = |why: &str| PantsError::NotStandard(rounds.to_vec(), why.to_string());
        let mut rounds = rounds.to_vec();
        rounds.sort();
        for &(lo, hi) in &rounds {
            if lo < 1 || hi > m || hi <= lo || hi - lo + 1 > m - 1 {
                return Err(bad("interval out of range or not essential"));
            }
        }
        let sets: Vec<Vec<usize>> = rounds.iter().map(|&(lo, hi)| (lo..=hi).collect()).collect();
        let regions = regions(m, &sets).map_err(|e| bad(&e))?;
        let mut windows = Vec::new();
        for r in &regions {
            match r.complexity() {
                0 => {}
                1 => {
                    // three consecutive items, each a child interval or a puncture
                    let mut items: Vec<(usize, usize)> = r.children.iter().map(|&c| rounds[c]).collect();
                    items.extend(r.punctures.iter().map(|&p| (p, p)));
                    items.sort();
                    let blocks = Blocks::new(surface, items[0].0, items[0].1, items[1].1, items[2].1)?;
                    windows.push(StandardWindow::new(blocks)?);
                }
                k => return Err(PantsError::NotNx1(k)),
            }
        }
        let curves = rounds.iter().map(|&(lo, hi)| CurveCoords::round(surface, lo, hi)).collect::<std::result::Result<_, _>>()?;
        Ok(MulticurveQ { surface, rounds, curves, regions, windows })
    }

    /// `χ̄` of the complementary subsurface: two per `Σ_{0,4}` window.
    pub fn chi_bar_y(&self) -> usize {
        2 * self.windows.len()
    }

    /// Which window a curve of a pants decomposition containing `Q` lies in.
    pub fn window_of(&self, c: &CurveCoords) -> Result<Option<usize>> {
        for (i, w) in self.windows.iter().enumerate() {
            if w.contains(c)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// Enclosed disk punctures of a single curve.
pub fn enclosed_set(c: &CurveCoords) -> Result<Vec<usize>> {
    let comps = components(c);
    if comps.len() != 1 {
        return Err(LaminationError::NotSingle(comps.len()).into());
    }
    Ok(c.word()?.enclosed(c.surface().disk_punctures()))
}
