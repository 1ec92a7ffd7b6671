//! The pants graph induced on a catalog. Distances here are upper bounds
//! for distances in the full pants graph.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{enclosed_set, regions, CurveCatalog, PantsError, PantsVertex, Region, Result};
use crate::lamination::{intersection_number, CurveCoords};

pub const UNREACHED: u32 = u32::MAX;

/// Every pants decomposition with all curves in the catalog, and the
/// elementary moves between them.
#[derive(Clone, Debug)]
pub struct PantsGraph<'a> {
    pub catalog: &'a CurveCatalog,
    vertices: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, u32>,
    adj: Vec<Vec<u32>>,
}

impl<'a> PantsGraph<'a> {
    pub fn new(catalog: &'a CurveCatalog) -> PantsGraph<'a> {
        let xi = catalog.surface.complexity();
        let mut vertices = Vec::new();
        let mut chosen = Vec::with_capacity(xi);
        cliques(catalog, xi, 0, &mut chosen, &mut vertices);
        let index: HashMap<Vec<usize>, u32> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i as u32)).collect();
        let adj = vertices
            .iter()
            .map(|v| {
                let mut out: Vec<u32> = Vec::new();
                for k in 0..v.len() {
                    for &c in catalog.meeting_twice(v[k]) {
                        let others_ok = v.iter().enumerate().all(|(j, &x)| j == k || catalog.intersection(c, x) == 0);
                        if !others_ok {
                            continue;
                        }
                        let mut w = v.clone();
                        w[k] = c;
                        w.sort_unstable();
                        out.push(index[&w]);
                    }
                }
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        PantsGraph { catalog, vertices, index, adj }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn id(&self, v: &PantsVertex) -> Result<u32> {
        let ids = self.catalog.vertex_ids(v)?;
        self.index
            .get(&ids)
            .copied()
            .ok_or_else(|| PantsError::NotPants(format!("{:?} is not a catalog pants decomposition", v.curves)))
    }

    pub fn id_of_curves(&self, ids: &[usize]) -> Option<u32> {
        let mut ids = ids.to_vec();
        ids.sort_unstable();
        self.index.get(&ids).copied()
    }

    pub fn curves_of(&self, v: u32) -> &[usize] {
        &self.vertices[v as usize]
    }

    pub fn vertex(&self, v: u32) -> PantsVertex {
        self.catalog.vertex(&self.vertices[v as usize])
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// Breadth-first distances from `src`, up to `depth` when given.
    pub fn bfs(&self, src: u32, depth: Option<u32>) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.vertices.len()];
        dist[src as usize] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x as usize];
            if depth.is_some_and(|cap| d >= cap) {
                continue;
            }
            for &y in &self.adj[x as usize] {
                if dist[y as usize] == UNREACHED {
                    dist[y as usize] = d + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: u32, b: u32) -> Option<u32> {
        if a == b {
            return Some(0);
        }
        let mut dist = vec![UNREACHED; self.vertices.len()];
        dist[a as usize] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x as usize] {
                if dist[y as usize] == UNREACHED {
                    dist[y as usize] = dist[x as usize] + 1;
                    if y == b {
                        return Some(dist[y as usize]);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Minimal paths from `a` to `b` as vertex id lists, at most `cap`;
    /// the flag is true when the list is complete.
    pub fn min_paths(&self, a: u32, b: u32, cap: usize) -> Option<(Vec<Vec<u32>>, bool)> {
        let d = self.distance(a, b)?;
        let from_b = self.bfs(b, Some(d));
        let mut out = Vec::new();
        let mut path = vec![a];
        let complete = self.extend(&mut path, b, d, &from_b, cap, &mut out);
        Some((out, complete))
    }

    fn extend(&self, path: &mut Vec<u32>, b: u32, d: u32, from_b: &[u32], cap: usize, out: &mut Vec<Vec<u32>>) -> bool {
        let x = *path.last().unwrap();
        if x == b {
            if out.len() == cap {
                return false;
            }
            out.push(path.clone());
            return true;
        }
        let left = d - (path.len() as u32 - 1);
        for &y in &self.adj[x as usize] {
            if from_b[y as usize] == left - 1 {
                path.push(y);
                let ok = self.extend(path, b, d, from_b, cap, out);
                path.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// The commutation of the moves at `path[i - 1] -> path[i] -> path[i + 1]`.
    pub fn commute(&self, a: u32, mid: u32, b: u32) -> Option<u32> {
        let (x, y, z) = (self.curves_of(a), self.curves_of(mid), self.curves_of(b));
        let mut w: Vec<usize> = x.iter().filter(|c| z.contains(c)).copied().collect();
        w.extend(z.iter().filter(|c| !y.contains(c)));
        w.extend(x.iter().filter(|c| !y.contains(c)));
        w.sort_unstable();
        w.dedup();
        let id = self.id_of_curves(&w)?;
        (self.adjacent(a, id) && self.adjacent(id, b)).then_some(id)
    }
}

fn cliques(cat: &CurveCatalog, size: usize, from: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if chosen.len() == size {
        out.push(chosen.clone());
        return;
    }
    let candidates: Vec<usize> = match chosen.first() {
        None => (from..cat.len()).collect(),
        Some(&c0) => cat.disjoint_from(c0).iter().copied().filter(|&c| c >= from).collect(),
    };
    for c in candidates {
        if chosen.iter().all(|&x| cat.intersection(x, c) == 0) {
            chosen.push(c);
            cliques(cat, size, c + 1, chosen, out);
            chosen.pop();
        }
    }
}

pub fn is_elementary_edge(u: &PantsVertex, v: &PantsVertex) -> Result<bool> {
    if u.surface != v.surface {
        return Ok(false);
    }
    let xi = u.surface.complexity();
    if u.shared(v).len() + 1 != xi {
        return Ok(false);
    }
    let a = u.curves.iter().find(|c| !v.contains(c)).unwrap();
    let b = v.curves.iter().find(|c| !u.contains(c)).unwrap();
    Ok(intersection_number(a, b)? == 2)
}

pub fn neighbors_in_catalog(u: &PantsVertex, graph: &PantsGraph) -> Result<Vec<PantsVertex>> {
    let id = graph.id(u)?;
    Ok(graph.neighbors(id).iter().map(|&w| graph.vertex(w)).collect())
}

pub fn catalog_distance(u: &PantsVertex, v: &PantsVertex, graph: &PantsGraph) -> Result<Option<u32>> {
    Ok(graph.distance(graph.id(u)?, graph.id(v)?))
}

pub fn all_min_paths(u: &PantsVertex, v: &PantsVertex, graph: &PantsGraph, cap: usize) -> Result<(Vec<Vec<PantsVertex>>, bool)> {
    if cap == 0 {
        return Err(PantsError::ZeroCap);
    }
    let (a, b) = (graph.id(u)?, graph.id(v)?);
    let (paths, complete) = graph
        .min_paths(a, b, cap)
        .ok_or_else(|| PantsError::NotPants("endpoints are not connected in the catalog".into()))?;
    Ok((paths.into_iter().map(|p| p.into_iter().map(|x| graph.vertex(x)).collect()).collect(), complete))
}

/// `ν₁′ = (ν₀ ∩ ν₂) ∪ (ν₂ \ ν₁) ∪ (ν₀ \ ν₁)` in place of `ν₁ = path[i]`;
/// `None` when either new edge fails to be an elementary move.
pub fn commute_adjacent_moves(path: &[PantsVertex], i: usize) -> Result<Option<Vec<PantsVertex>>> {
    if i == 0 || i + 1 >= path.len() {
        return Err(PantsError::BadPosition(i, path.len().saturating_sub(1)));
    }
    let (x, y, z) = (&path[i - 1], &path[i], &path[i + 1]);
    let mut curves: Vec<CurveCoords> = x.shared(z);
    curves.extend(z.curves.iter().filter(|c| !y.contains(c)).cloned());
    curves.extend(x.curves.iter().filter(|c| !y.contains(c)).cloned());
    curves.sort();
    curves.dedup();
    if curves.len() != x.surface.complexity() {
        return Ok(None);
    }
    let mid = PantsVertex { surface: x.surface, curves };
    if !is_elementary_edge(x, &mid)? || !is_elementary_edge(&mid, z)? {
        return Ok(None);
    }
    let mut out = path.to_vec();
    out[i] = mid;
    Ok(Some(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSupport {
    /// `ν₀ ∩ ν_p`, the curves the path never moves.
    pub fixed: Vec<CurveCoords>,
    /// Pieces of the complement of `fixed`.
    pub regions: Vec<Region>,
}

impl PathSupport {
    /// Complexities of the pieces that are not pants.
    pub fn windows(&self) -> Vec<usize> {
        self.regions.iter().map(|r| r.complexity()).filter(|&c| c > 0).collect()
    }

    /// Index of the region a curve disjoint from `fixed` lies in.
    pub fn region_of(&self, c: &CurveCoords) -> Result<Option<usize>> {
        let s = enclosed_set(c)?;
        let sets = self.fixed.iter().map(enclosed_set).collect::<Result<Vec<_>>>()?;
        for (i, r) in self.regions.iter().enumerate() {
            let mut items: Vec<Vec<usize>> = r.children.iter().map(|&k| sets[k].clone()).collect();
            items.extend(r.punctures.iter().map(|&p| vec![p]));
            let covered: Vec<&Vec<usize>> = items.iter().filter(|it| it.iter().all(|p| s.contains(p))).collect();
            let total: usize = covered.iter().map(|it| it.len()).sum();
            if total == s.len() && covered.len() >= 2 && covered.len() < items.len() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

pub fn path_support(path: &[PantsVertex]) -> Result<PathSupport> {
    let first = path.first().ok_or(PantsError::EmptySample)?;
    let last = path.last().unwrap();
    let fixed = first.shared(last);
    let sets = fixed.iter().map(enclosed_set).collect::<Result<Vec<_>>>()?;
    let regions = regions(first.surface.disk_punctures(), &sets).map_err(PantsError::NotPants)?;
    Ok(PathSupport { fixed, regions })
}
