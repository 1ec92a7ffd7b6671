//! Euler characteristic bookkeeping for cornered subsurfaces.
//!
//! `X` is given as a finite 2-complex whose faces are labelled inside or
//! outside `Y`; the frontier `Fr_X(Y) = X ∩ ∂Y` is a set of edges. The
//! pieces `Z_i` are the closures of the components of `X` cut along the
//! frontier, and each contributes
//!
//! ```text
//! chi_X(Z) = chibar(Z) - chibar(Fr_X Z) / 2
//! ```
//!
//! Frontier cells lie in exactly two pieces, so the contributions add up
//! to `chibar(X)`.

pub mod build;
pub mod library;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorneredError {
    #[error("edge {0} has an endpoint outside the vertex range")]
    BadVertex(usize),
    #[error("face {0} does not close up as a walk")]
    OpenFace(usize),
    #[error("edge {0} borders {1} face sides")]
    Overfull(usize, usize),
    #[error("frontier edge {0} does not separate an inside face from an outside face")]
    FrontierSides(usize),
    #[error("frontier branches at vertex {0}")]
    FrontierBranch(usize),
    #[error("vertex {0} meets no edge")]
    Isolated(usize),
    #[error("piece boundary pinches at vertex {0}")]
    Pinched(usize),
    #[error("piece contributions sum to {got}, expected {expected}")]
    Additivity { got: Rational64, expected: Rational64 },
    #[error("library line {0}: {1}")]
    Parse(usize, String),
}

pub type Result<T> = std::result::Result<T, CorneredError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    InY,
    OutY,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub ends: [usize; 2],
    pub frontier: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// Edge ids around the face, cyclically.
    pub boundary: Vec<usize>,
    pub side: Side,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorneredComplex {
    pub vertices: usize,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PieceKind {
    Rectangle,
    Hexagon,
    /// A disk whose boundary alternates `n` frontier arcs with `n` other
    /// arcs, for `n = 1` or `n >= 4`.
    Gon(usize),
    RectangularAnnulus,
    RectangularPants,
    CurveBounded { genus: usize, curves: usize, polygons: Vec<usize> },
}

impl PieceKind {
    /// `chi_X` determined by the kind alone.
    pub fn chi_x(&self) -> Rational64 {
        let (genus, curves, polygons): (i64, usize, Vec<usize>) = match self {
            PieceKind::Rectangle => (0, 0, vec![2]),
            PieceKind::Hexagon => (0, 0, vec![3]),
            PieceKind::Gon(n) => (0, 0, vec![*n]),
            PieceKind::RectangularAnnulus => (0, 1, vec![2]),
            PieceKind::RectangularPants => (0, 2, vec![2]),
            PieceKind::CurveBounded { genus, curves, polygons } => (*genus as i64, *curves, polygons.clone()),
        };
        let b = (curves + polygons.len()) as i64;
        let arcs: usize = polygons.iter().sum();
        Rational64::from_integer(2 * genus - 2 + b) + Rational64::new(arcs as i64, 2)
    }

    /// Number of frontier arcs on the boundary.
    pub fn frontier_arcs(&self) -> usize {
        match self {
            PieceKind::Rectangle | PieceKind::RectangularAnnulus | PieceKind::RectangularPants => 2,
            PieceKind::Hexagon => 3,
            PieceKind::Gon(n) => *n,
            PieceKind::CurveBounded { polygons, .. } => polygons.iter().sum(),
        }
    }
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PieceKind::Rectangle => write!(f, "rectangle"),
            PieceKind::Hexagon => write!(f, "hexagon"),
            PieceKind::Gon(n) => write!(f, "{}-gon", 2 * n),
            PieceKind::RectangularAnnulus => write!(f, "rect_annulus"),
            PieceKind::RectangularPants => write!(f, "rect_pants"),
            PieceKind::CurveBounded { genus, curves, polygons } => {
                let list: Vec<String> = polygons.iter().map(|n| n.to_string()).collect();
                write!(f, "surface:{genus}:{curves}:{}", list.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub faces: Vec<usize>,
    pub side: Side,
    pub kind: PieceKind,
    pub chi_bar: Rational64,
    pub chi_x: Rational64,
    /// Boundary components of `X` the piece touches.
    pub holes: BTreeSet<usize>,
    /// Those met by a polygonal boundary component of the piece.
    pub corner_holes: BTreeSet<usize>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

fn chibar(v: usize, e: usize, f: usize) -> Rational64 {
    Rational64::from_integer(e as i64 - v as i64 - f as i64)
}

impl CorneredComplex {
    pub fn validate(&self) -> Result<()> {
        let mut used = vec![false; self.vertices];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in &e.ends {
                if v >= self.vertices {
                    return Err(CorneredError::BadVertex(i));
                }
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(CorneredError::Isolated(v));
        }
        for (i, f) in self.faces.iter().enumerate() {
            if !self.closes(&f.boundary) {
                return Err(CorneredError::OpenFace(i));
            }
        }
        let sides = self.sides();
        for (i, s) in sides.iter().enumerate() {
            if s.len() > 2 {
                return Err(CorneredError::Overfull(i, s.len()));
            }
            if self.edges[i].frontier {
                let ok = s.len() == 2 && self.faces[s[0]].side != self.faces[s[1]].side;
                if !ok {
                    return Err(CorneredError::FrontierSides(i));
                }
            }
        }
        let mut deg = vec![0usize; self.vertices];
        for e in self.edges.iter().filter(|e| e.frontier) {
            deg[e.ends[0]] += 1;
            deg[e.ends[1]] += 1;
        }
        if let Some(v) = deg.iter().position(|&d| d > 2) {
            return Err(CorneredError::FrontierBranch(v));
        }
        Ok(())
    }

    fn closes(&self, walk: &[usize]) -> bool {
        if walk.is_empty() || walk.iter().any(|&e| e >= self.edges.len()) {
            return false;
        }
        let first = self.edges[walk[0]].ends;
        'start: for start in [first[0], first[1]] {
            let mut at = start;
            for &e in walk {
                let [a, b] = self.edges[e].ends;
                at = if a == at {
                    b
                } else if b == at {
                    a
                } else {
                    continue 'start;
                };
            }
            if at == start {
                return true;
            }
        }
        false
    }

    /// For each edge, the faces on its sides (a face twice if it borders
    /// the edge on both sides).
    pub fn sides(&self) -> Vec<Vec<usize>> {
        let mut s = vec![Vec::new(); self.edges.len()];
        for (i, f) in self.faces.iter().enumerate() {
            for &e in &f.boundary {
                s[e].push(i);
            }
        }
        s
    }

    pub fn chi_bar(&self) -> Rational64 {
        chibar(self.vertices, self.edges.len(), self.faces.len())
    }

    fn closure(&self, faces: &[usize]) -> (BTreeSet<usize>, BTreeSet<usize>) {
        let edges: BTreeSet<usize> = faces.iter().flat_map(|&f| self.faces[f].boundary.iter().copied()).collect();
        let verts: BTreeSet<usize> = edges.iter().flat_map(|&e| self.edges[e].ends).collect();
        (edges, verts)
    }

    /// `chibar(Z) - chibar(Fr Z) / 2` for the subcomplex spanned by `faces`.
    pub fn chi_x_of(&self, faces: &[usize]) -> Rational64 {
        let (edges, verts) = self.closure(faces);
        let fr: Vec<usize> = edges.iter().copied().filter(|&e| self.edges[e].frontier).collect();
        let fv: BTreeSet<usize> = fr.iter().flat_map(|&e| self.edges[e].ends).collect();
        chibar(verts.len(), edges.len(), faces.len()) - chibar(fv.len(), fr.len(), 0) / 2
    }

    /// `chi_X(Y)`: the contribution of all inside faces.
    pub fn chi_cornered(&self) -> Rational64 {
        let inside: Vec<usize> = (0..self.faces.len()).filter(|&f| self.faces[f].side == Side::InY).collect();
        if inside.is_empty() {
            return Rational64::from_integer(0);
        }
        self.chi_x_of(&inside)
    }

    /// Boundary components of `X`, as a hole id for each boundary edge.
    pub fn holes(&self) -> BTreeMap<usize, usize> {
        let sides = self.sides();
        let boundary: Vec<usize> = (0..self.edges.len()).filter(|&e| sides[e].len() == 1).collect();
        let mut dsu = Dsu::new(self.vertices);
        for &e in &boundary {
            dsu.union(self.edges[e].ends[0], self.edges[e].ends[1]);
        }
        let mut ids = BTreeMap::new();
        let mut out = BTreeMap::new();
        for &e in &boundary {
            let root = dsu.find(self.edges[e].ends[0]);
            let next = ids.len();
            let id = *ids.entry(root).or_insert(next);
            out.insert(e, id);
        }
        out
    }

    pub fn pieces(&self) -> Result<Vec<Piece>> {
        self.validate()?;
        let sides = self.sides();
        let mut dsu = Dsu::new(self.faces.len());
        for (e, s) in sides.iter().enumerate() {
            if !self.edges[e].frontier && s.len() == 2 {
                dsu.union(s[0], s[1]);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for f in 0..self.faces.len() {
            groups.entry(dsu.find(f)).or_default().push(f);
        }
        let holes = self.holes();
        let mut out = Vec::new();
        for faces in groups.into_values() {
            let (edges, verts) = self.closure(&faces);
            let chi_bar = chibar(verts.len(), edges.len(), faces.len());
            let chi_x = self.chi_x_of(&faces);
            let (kind, cornered) = self.classify(&faces, &edges, chi_bar)?;
            let touched = edges.iter().filter_map(|e| holes.get(e).copied()).collect();
            let corner_holes = cornered.iter().filter_map(|e| holes.get(e).copied()).collect();
            out.push(Piece { side: self.faces[faces[0]].side, faces, kind, chi_bar, chi_x, holes: touched, corner_holes });
        }
        Ok(out)
    }

    // the kind, and the boundary edges lying on polygonal components
    fn classify(&self, faces: &[usize], edges: &BTreeSet<usize>, chi_bar: Rational64) -> Result<(PieceKind, Vec<usize>)> {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for &f in faces {
            for &e in &self.faces[f].boundary {
                *count.entry(e).or_default() += 1;
            }
        }
        let bd: Vec<usize> = edges.iter().copied().filter(|e| count[e] == 1).collect();
        let mut at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &e in &bd {
            for v in self.edges[e].ends {
                at.entry(v).or_default().push(e);
            }
        }
        if let Some((&v, _)) = at.iter().find(|(_, es)| es.len() != 2) {
            return Err(CorneredError::Pinched(v));
        }
        // walk each boundary cycle, counting runs of frontier edges
        let mut seen = BTreeSet::new();
        let (mut curves, mut polygons, mut cornered) = (0usize, Vec::new(), Vec::new());
        for &e0 in &bd {
            if seen.contains(&e0) {
                continue;
            }
            let mut cycle = vec![e0];
            seen.insert(e0);
            let mut v = self.edges[e0].ends[1];
            let mut e = e0;
            loop {
                let es = &at[&v];
                let next = if es[0] == e { es[1] } else { es[0] };
                if next == e0 {
                    break;
                }
                seen.insert(next);
                cycle.push(next);
                let [a, b] = self.edges[next].ends;
                v = if a == v { b } else { a };
                e = next;
            }
            let fr: Vec<bool> = cycle.iter().map(|&e| self.edges[e].frontier).collect();
            let runs = (0..fr.len()).filter(|&i| fr[i] && !fr[(i + 1) % fr.len()]).count();
            if runs == 0 {
                curves += 1;
            } else {
                polygons.push(runs);
                cornered.extend(cycle);
            }
        }
        let b = (curves + polygons.len()) as i64;
        let chi = -*chi_bar.numer();
        let genus = ((2 - chi - b) / 2) as usize;
        polygons.sort_unstable();
        let kind = match (genus, curves, polygons.as_slice()) {
            (0, 0, [2]) => PieceKind::Rectangle,
            (0, 0, [3]) => PieceKind::Hexagon,
            (0, 0, [n]) => PieceKind::Gon(*n),
            (0, 1, [2]) => PieceKind::RectangularAnnulus,
            (0, 2, [2]) => PieceKind::RectangularPants,
            _ => PieceKind::CurveBounded { genus, curves, polygons },
        };
        Ok((kind, cornered))
    }

    /// Per-piece contributions, checked to add up to `chibar(X)`.
    pub fn split_and_verify(&self) -> Result<(Vec<Piece>, Rational64)> {
        let pieces = self.pieces()?;
        let total: Rational64 = pieces.iter().map(|p| p.chi_x).sum();
        let expected = self.chi_bar();
        if total != expected {
            return Err(CorneredError::Additivity { got: total, expected });
        }
        Ok((pieces, total))
    }
}

pub fn chi_bar(c: &CorneredComplex) -> Result<Rational64> {
    c.validate()?;
    Ok(c.chi_bar())
}

pub fn chi_cornered(c: &CorneredComplex) -> Result<Rational64> {
    c.validate()?;
    Ok(c.chi_cornered())
}

pub fn split_and_verify(c: &CorneredComplex) -> Result<(Vec<(PieceKind, Rational64)>, Rational64)> {
    let (pieces, total) = c.split_and_verify()?;
    Ok((pieces.into_iter().map(|p| (p.kind, p.chi_x)).collect(), total))
}

#[cfg(test)]
mod tests;
