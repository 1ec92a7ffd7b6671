//! All essential curves crossing the real axis at most `2 * bound` times,
//! with their exact intersection matrix.
//!
//! The norm is the crossing number halved, so bound 1 is exactly the round
//! curves. A curve with `L` crossings has `|a_j| <= L / 4` and
//! `|b_j| <= L / 2`, which bounds the coordinate box searched.
//!
//! Cache format, one item per line:
//!
//! ```text
//! pants-catalog v1
//! surface N
//! bound B
//! engine VERSION
//! curves K
//! c1 c2 ... c_{2N-6}          (K lines, in id order)
//! pairs M
//! i j value                   (M lines, i < j, nonzero entries only)
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::{enclosed_set, PantsError, PantsVertex, Result};
use crate::lamination::{components, CrossingWord, CurveCoords, NormalForm, SurfaceSpec};

pub const CACHE_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const MAX_CATALOG_PUNCTURES: usize = 7;

#[derive(Clone, Debug)]
pub struct CurveCatalog {
    pub surface: SurfaceSpec,
    pub bound: usize,
    curves: Vec<CurveCoords>,
    words: Vec<CrossingWord>,
    forms: Vec<NormalForm>,
    enclosed: Vec<Vec<usize>>,
    index: HashMap<CurveCoords, usize>,
    matrix: Vec<u16>,
    zero: Vec<Vec<usize>>,
    two: Vec<Vec<usize>>,
}

fn check_surface(surface: SurfaceSpec, bound: usize) -> Result<()> {
    if bound == 0 {
        return Err(PantsError::ZeroBound);
    }
    if surface.punctures() > MAX_CATALOG_PUNCTURES {
        return Err(PantsError::UnsupportedSurface(surface.punctures()));
    }
    Ok(())
}

fn enumerate(surface: SurfaceSpec, bound: usize) -> Vec<CurveCoords> {
    let m = surface.disk_punctures();
    let n = surface.punctures();
    let ranges: Vec<i64> = (0..surface.coord_len()).map(|k| if k % 2 == 0 { bound as i64 / 2 } else { bound as i64 }).collect();
    let mut v: Vec<i64> = ranges.iter().map(|r| -r).collect();
    let mut out = Vec::new();
    'odometer: loop {
        if let Ok(c) = CurveCoords::new(surface, v.clone()) {
            let ws = c.words();
            if ws.len() == 1 && ws[0].len() <= 2 * bound {
                let k = ws[0].enclosed(m).len();
                if k >= 2 && k + 2 <= n {
                    out.push(c);
                }
            }
        }
        for k in 0..v.len() {
            if v[k] < ranges[k] {
                v[k] += 1;
                continue 'odometer;
            }
            v[k] = -ranges[k];
        }
        break;
    }
    out
}

impl CurveCatalog {
    pub fn build(surface: SurfaceSpec, bound: usize) -> Result<CurveCatalog> {
        Self::build_with(surface, bound, &[])
    }

    /// The norm ball plus `extra` essential curves of any norm.
    pub fn build_with(surface: SurfaceSpec, bound: usize, extra: &[CurveCoords]) -> Result<CurveCatalog> {
        check_surface(surface, bound)?;
        let mut curves = enumerate(surface, bound);
        for c in extra {
            if c.surface() != surface || !crate::lamination::is_essential(c, surface)? || components(c).len() != 1 {
                return Err(PantsError::NotInCatalog(format!("{c} is not an essential curve of the surface")));
            }
        }
        curves.extend(extra.iter().cloned());
        curves.sort_by_cached_key(|c| (c.axis_crossings(), c.clone()));
        curves.dedup();
        let forms = curves.iter().map(NormalForm::of).collect::<std::result::Result<Vec<_>, _>>()?;
        let words: Vec<CrossingWord> = curves.iter().map(|c| c.word()).collect::<std::result::Result<_, _>>()?;
        let k = curves.len();
        let m = surface.disk_punctures();
        let mut matrix = vec![0u16; k * k];
        for i in 0..k {
            for j in i + 1..k {
                let x = forms[i].intersect_words(std::slice::from_ref(&words[j]), m) as u16;
                matrix[i * k + j] = x;
                matrix[j * k + i] = x;
            }
        }
        Self::assemble(surface, bound, curves, forms, words, matrix)
    }

    fn assemble(
        surface: SurfaceSpec,
        bound: usize,
        curves: Vec<CurveCoords>,
        forms: Vec<NormalForm>,
        words: Vec<CrossingWord>,
        matrix: Vec<u16>,
    ) -> Result<CurveCatalog> {
        let k = curves.len();
        let enclosed = curves.iter().map(enclosed_set).collect::<Result<Vec<_>>>()?;
        let index = curves.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let pick = |v: u16| -> Vec<Vec<usize>> {
            (0..k).map(|i| (0..k).filter(|&j| j != i && matrix[i * k + j] == v).collect()).collect()
        };
        let (zero, two) = (pick(0), pick(2));
        Ok(CurveCatalog { surface, bound, curves, words, forms, enclosed, index, matrix, zero, two })
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn curves(&self) -> &[CurveCoords] {
        &self.curves
    }

    pub fn curve(&self, id: usize) -> &CurveCoords {
        &self.curves[id]
    }

    pub fn word(&self, id: usize) -> &CrossingWord {
        &self.words[id]
    }

    pub fn form(&self, id: usize) -> &NormalForm {
        &self.forms[id]
    }

    pub fn enclosed(&self, id: usize) -> &[usize] {
        &self.enclosed[id]
    }

    pub fn id(&self, c: &CurveCoords) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn require(&self, c: &CurveCoords) -> Result<usize> {
        self.id(c).ok_or_else(|| PantsError::NotInCatalog(c.to_string()))
    }

    pub fn intersection(&self, a: usize, b: usize) -> i64 {
        self.matrix[a * self.curves.len() + b] as i64
    }

    /// Curves disjoint from `id`, other than itself.
    pub fn disjoint_from(&self, id: usize) -> &[usize] {
        &self.zero[id]
    }

    /// Curves meeting `id` exactly twice.
    pub fn meeting_twice(&self, id: usize) -> &[usize] {
        &self.two[id]
    }

    /// Sorted curve ids of a vertex whose curves all lie in the catalog.
    pub fn vertex_ids(&self, v: &PantsVertex) -> Result<Vec<usize>> {
        let mut ids = v.curves.iter().map(|c| self.require(c)).collect::<Result<Vec<_>>>()?;
        ids.sort_unstable();
        Ok(ids)
    }

    pub fn vertex(&self, ids: &[usize]) -> PantsVertex {
        let mut curves: Vec<CurveCoords> = ids.iter().map(|&i| self.curves[i].clone()).collect();
        curves.sort();
        PantsVertex { surface: self.surface, curves }
    }

    pub fn render(&self) -> String {
        let k = self.curves.len();
        let mut s = String::new();
        let _ = writeln!(s, "pants-catalog v{CACHE_VERSION}");
        let _ = writeln!(s, "surface {}", self.surface.punctures());
        let _ = writeln!(s, "bound {}", self.bound);
        let _ = writeln!(s, "engine {ENGINE_VERSION}");
        let _ = writeln!(s, "curves {k}");
        for c in &self.curves {
            let parts: Vec<String> = c.vector().iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", parts.join(" "));
        }
        let pairs: Vec<(usize, usize, u16)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.matrix[i * k + j]))
            .filter(|t| t.2 != 0)
            .collect();
        let _ = writeln!(s, "pairs {}", pairs.len());
        for (i, j, x) in pairs {
            let _ = writeln!(s, "{i} {j} {x}");
        }
        s
    }

    /// Reads a rendered catalog. Normal forms are recomputed; the matrix is
    /// taken from the file.
    pub fn parse(text: &str) -> Result<CurveCatalog> {
        let bad = |what: &str| PantsError::Cache(what.to_string());
        let mut lines = text.lines();
        let mut field = |name: &str| -> Result<String> {
            let line = lines.next().ok_or_else(|| bad("truncated header"))?;
            let rest = line.strip_prefix(name).ok_or_else(|| bad(&format!("expected `{name}`")))?;
            Ok(rest.trim().to_string())
        };
        if field("pants-catalog")? != format!("v{CACHE_VERSION}") {
            return Err(bad("unsupported cache version"));
        }
        let n: usize = field("surface")?.parse().map_err(|_| bad("surface"))?;
        let bound: usize = field("bound")?.parse().map_err(|_| bad("bound"))?;
        if field("engine")? != ENGINE_VERSION {
            return Err(bad("written by another engine version"));
        }
        let k: usize = field("curves")?.parse().map_err(|_| bad("curve count"))?;
        let surface = SurfaceSpec::new(n)?;
        check_surface(surface, bound)?;
        let mut curves = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines.next().ok_or_else(|| bad("truncated curve list"))?;
            let v = line.split_whitespace().map(|x| x.parse::<i64>()).collect::<std::result::Result<Vec<_>, _>>().map_err(|_| bad("curve"))?;
            curves.push(CurveCoords::new(surface, v)?);
        }
        let header = lines.next().ok_or_else(|| bad("missing pairs"))?;
        let count: usize = header.strip_prefix("pairs ").and_then(|x| x.parse().ok()).ok_or_else(|| bad("pairs header"))?;
        let mut matrix = vec![0u16; k * k];
        for _ in 0..count {
            let line = lines.next().ok_or_else(|| bad("truncated pairs"))?;
            let t: Vec<usize> = line.split_whitespace().map(|x| x.parse()).collect::<std::result::Result<_, _>>().map_err(|_| bad("pair"))?;
            match t[..] {
                [i, j, x] if i < j && j < k => {
                    matrix[i * k + j] = x as u16;
                    matrix[j * k + i] = x as u16;
                }
                _ => return Err(bad("pair out of range")),
            }
        }
        let forms = curves.iter().map(NormalForm::of).collect::<std::result::Result<Vec<_>, _>>()?;
        let words = curves.iter().map(|c| c.word()).collect::<std::result::Result<Vec<_>, _>>()?;
        Self::assemble(surface, bound, curves, forms, words, matrix)
    }

    pub fn cache_path(dir: &Path, surface: SurfaceSpec, bound: usize) -> PathBuf {
        dir.join(format!("catalog-n{}-b{}-v{}.txt", surface.punctures(), bound, CACHE_VERSION))
    }

    /// Loads from `dir` when a matching cache exists, otherwise builds and
    /// writes one.
    pub fn load_or_build(dir: &Path, surface: SurfaceSpec, bound: usize) -> Result<CurveCatalog> {
        let path = Self::cache_path(dir, surface, bound);
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(cat) = Self::parse(&text) {
                if cat.surface == surface && cat.bound == bound {
                    return Ok(cat);
                }
            }
        }
        let cat = Self::build(surface, bound)?;
        std::fs::create_dir_all(dir).map_err(|e| PantsError::Cache(e.to_string()))?;
        std::fs::write(&path, cat.render()).map_err(|e| PantsError::Cache(e.to_string()))?;
        Ok(cat)
    }
}

/// Real-axis crossings halved.
pub fn curve_norm(c: &CurveCoords) -> usize {
    c.axis_crossings() / 2
}

pub fn build_catalog(surface: SurfaceSpec, norm_bound: usize) -> Result<CurveCatalog> {
    CurveCatalog::build(surface, norm_bound)
}
