//! Falsification audits over a catalog graph.
//!
//! Catalog distances bound true distances from above only. A catalog path
//! shorter than `d_Q`, or a minimal one leaving `P_Q`, refutes; agreement
//! is reported as corroboration, qualified by whether enumeration was
//! complete.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::graph::UNREACHED;
use super::catalog::{curve_norm, ENGINE_VERSION};
use super::{CurveCatalog, MulticurveQ, PantsError, PantsGraph, PantsVertex, Projector, Result};
use crate::farey::{self, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CorroboratedComplete,
    CorroboratedCapped,
    Incomplete,
    Refuted,
}

impl Verdict {
    pub fn is_corroborated(self) -> bool {
        matches!(self, Verdict::CorroboratedComplete | Verdict::CorroboratedCapped)
    }

    /// Worst of a set: refuted, then incomplete, then capped.
    pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().max().unwrap_or(Verdict::CorroboratedComplete)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub endpoints: [Vec<Vec<i64>>; 2],
    #[serde(rename = "d_Q")]
    pub d_q: u32,
    pub catalog_distance: Option<u32>,
    pub paths_enumerated: usize,
    pub complete: bool,
    #[serde(rename = "all_in_PQ")]
    pub all_in_pq: Option<bool>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LipschitzRecord {
    pub start: Vec<Vec<i64>>,
    /// Paths examined at each length `1..=max_len`, after pruning.
    pub paths_by_length: Vec<usize>,
    /// Unresolved paths of length at least `χ̄(Y)`.
    pub refutations: Vec<Vec<Vec<Vec<i64>>>>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub audit: String,
    pub engine: String,
    pub surface: usize,
    pub catalog_bound: usize,
    pub q: Vec<(usize, usize)>,
    pub parameters: BTreeMap<String, String>,
    pub pairs: Vec<PairRecord>,
    pub paths: Vec<LipschitzRecord>,
    pub counts: BTreeMap<String, usize>,
    pub verdict: Verdict,
}

impl AuditReport {
    fn new(audit: &str, graph: &PantsGraph, q: &MulticurveQ, parameters: BTreeMap<String, String>) -> AuditReport {
        AuditReport {
            audit: audit.to_string(),
            engine: ENGINE_VERSION.to_string(),
            surface: graph.catalog.surface.punctures(),
            catalog_bound: graph.catalog.bound,
            q: q.rounds.clone(),
            parameters,
            pairs: Vec::new(),
            paths: Vec::new(),
            counts: BTreeMap::new(),
            verdict: Verdict::CorroboratedComplete,
        }
    }

    fn finish(mut self) -> AuditReport {
        let verdicts: Vec<Verdict> = self.pairs.iter().map(|r| r.verdict).chain(self.paths.iter().map(|r| r.verdict)).collect();
        for v in &verdicts {
            let key = serde_json::to_value(v).unwrap().as_str().unwrap().to_string();
            *self.counts.entry(key).or_insert(0) += 1;
        }
        self.verdict = Verdict::combine(verdicts);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per record, tab separated, with a header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        if !self.pairs.is_empty() {
            out.push_str("index\td_Q\tcatalog_distance\tpaths_enumerated\tcomplete\tall_in_PQ\tverdict\n");
            for (i, r) in self.pairs.iter().enumerate() {
                let dist = r.catalog_distance.map_or("unreachable".to_string(), |d| d.to_string());
                let inside = r.all_in_pq.map_or("-".to_string(), |b| b.to_string());
                let verdict = serde_json::to_value(r.verdict).unwrap();
                out.push_str(&format!(
                    "{i}\t{}\t{dist}\t{}\t{}\t{inside}\t{}\n",
                    r.d_q,
                    r.paths_enumerated,
                    r.complete,
                    verdict.as_str().unwrap()
                ));
            }
        }
        if !self.paths.is_empty() {
            out.push_str("index\tpaths_by_length\trefutations\tverdict\n");
            for (i, r) in self.paths.iter().enumerate() {
                let lens: Vec<String> = r.paths_by_length.iter().map(|x| x.to_string()).collect();
                let verdict = serde_json::to_value(r.verdict).unwrap();
                out.push_str(&format!("{i}\t{}\t{}\t{}\n", lens.join(","), r.refutations.len(), verdict.as_str().unwrap()));
            }
        }
        out
    }
}

fn coords(v: &PantsVertex) -> Vec<Vec<i64>> {
    v.curves.iter().map(|c| c.vector().to_vec()).collect()
}

/// Window slopes of a vertex containing `Q`, in window order.
struct SlopeTable<'q> {
    q: &'q MulticurveQ,
    by_curve: HashMap<usize, Option<(usize, Slope)>>,
    farey: HashMap<(Slope, Slope), u32>,
}

impl<'q> SlopeTable<'q> {
    fn new(q: &'q MulticurveQ) -> SlopeTable<'q> {
        SlopeTable { q, by_curve: HashMap::new(), farey: HashMap::new() }
    }

    fn slopes(&mut self, graph: &PantsGraph, v: u32) -> Result<Vec<Slope>> {
        let mut out = vec![None; self.q.windows.len()];
        for &c in graph.curves_of(v) {
            let entry = match self.by_curve.get(&c) {
                Some(e) => *e,
                None => {
                    let curve = graph.catalog.curve(c);
                    let e = if self.q.curves.contains(curve) {
                        None
                    } else {
                        let w = self.q.window_of(curve)?.ok_or_else(|| PantsError::NotPants("curve outside every window".into()))?;
                        Some((w, self.q.windows[w].slope(curve)?))
                    };
                    self.by_curve.insert(c, e);
                    e
                }
            };
            if let Some((w, s)) = entry {
                out[w] = Some(s);
            }
        }
        out.into_iter().map(|s| s.ok_or_else(|| PantsError::NotPants("a window has no curve".into()))).collect()
    }

    fn dq(&mut self, a: &[Slope], b: &[Slope]) -> u32 {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| {
                let key = if x <= y { (x, y) } else { (y, x) };
                *self.farey.entry(key).or_insert_with(|| farey::distance(x, y))
            })
            .sum()
    }
}

fn q_ids(graph: &PantsGraph, q: &MulticurveQ) -> Result<Vec<usize>> {
    q.curves.iter().map(|c| graph.catalog.require(c)).collect()
}

/// Catalog vertices containing `Q`.
pub fn pq_vertices(graph: &PantsGraph, q: &MulticurveQ) -> Result<Vec<u32>> {
    let ids = q_ids(graph, q)?;
    Ok((0..graph.len() as u32).filter(|&v| ids.iter().all(|c| graph.curves_of(v).contains(c))).collect())
}

#[derive(Clone, Debug)]
pub struct ConvexityConfig {
    pub max_dq: u32,
    /// Pairs kept per `d_Q` stratum; `None` keeps every pair.
    pub per_stratum: Option<usize>,
    pub path_cap: usize,
    pub seed: u64,
}

fn record(graph: &PantsGraph, qids: &[usize], a: u32, b: u32, d_q: u32, dist: u32, cap: usize) -> PairRecord {
    let catalog_distance = (dist != UNREACHED).then_some(dist);
    let mut rec = PairRecord {
        endpoints: [coords(&graph.vertex(a)), coords(&graph.vertex(b))],
        d_q,
        catalog_distance,
        paths_enumerated: 0,
        complete: false,
        all_in_pq: None,
        verdict: Verdict::Incomplete,
    };
    match catalog_distance {
        Some(d) if d < d_q => rec.verdict = Verdict::Refuted,
        Some(d) if d == d_q => {
            let (paths, complete) = graph.min_paths(a, b, cap).expect("reachable");
            let inside = paths.iter().all(|p| p.iter().all(|&x| qids.iter().all(|c| graph.curves_of(x).contains(c))));
            rec.paths_enumerated = paths.len();
            rec.complete = complete;
            rec.all_in_pq = Some(inside);
            rec.verdict = match (inside, complete) {
                (false, _) => Verdict::Refuted,
                (true, true) => Verdict::CorroboratedComplete,
                (true, false) => Verdict::CorroboratedCapped,
            };
        }
        _ => {}
    }
    rec
}

/// Checks `catalog_distance = d_Q` and that minimal catalog paths stay in
/// `P_Q`, over pairs of `P_Q` vertices with `0 < d_Q <= max_dq`.
pub fn convexity_audit(graph: &PantsGraph, q: &MulticurveQ, cfg: &ConvexityConfig) -> Result<AuditReport> {
    if cfg.path_cap == 0 {
        return Err(PantsError::ZeroCap);
    }
    let qids = q_ids(graph, q)?;
    let verts = pq_vertices(graph, q)?;
    let mut table = SlopeTable::new(q);
    let slopes = verts.iter().map(|&v| table.slopes(graph, v)).collect::<Result<Vec<_>>>()?;
    let mut strata: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let d = table.dq(&slopes[i], &slopes[j]);
            if d <= cfg.max_dq {
                strata.entry(d).or_default().push((i, j));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut chosen: Vec<(u32, usize, usize)> = Vec::new();
    for (&d, pairs) in &mut strata {
        if let Some(k) = cfg.per_stratum {
            if pairs.len() > k {
                pairs.shuffle(&mut rng);
                pairs.truncate(k);
                pairs.sort_unstable();
            }
        }
        chosen.extend(pairs.iter().map(|&(i, j)| (d, i, j)));
    }
    if chosen.is_empty() {
        return Err(PantsError::EmptySample);
    }
    let mut params = BTreeMap::new();
    params.insert("max_dq".to_string(), cfg.max_dq.to_string());
    params.insert("per_stratum".to_string(), cfg.per_stratum.map_or("all".to_string(), |k| k.to_string()));
    params.insert("path_cap".to_string(), cfg.path_cap.to_string());
    params.insert("seed".to_string(), cfg.seed.to_string());
    let mut report = AuditReport::new("convexity", graph, q, params);
    // one search per source vertex
    chosen.sort_by_key(|&(d, i, j)| (i, d, j));
    let mut current: Option<(usize, Vec<u32>)> = None;
    let mut records = Vec::with_capacity(chosen.len());
    for &(d, i, j) in &chosen {
        if current.as_ref().map(|c| c.0) != Some(i) {
            current = Some((i, graph.bfs(verts[i], Some(cfg.max_dq))));
        }
        let dist = current.as_ref().unwrap().1[verts[j] as usize];
        records.push(((d, i, j), record(graph, &qids, verts[i], verts[j], d, dist, cfg.path_cap)));
    }
    records.sort_by_key(|r| r.0);
    report.pairs = records.into_iter().map(|r| r.1).collect();
    Ok(report.finish())
}

/// A Farey geodesic of `len` slopes, `d(s_i, s_j) = |i - j|`, minimizing
/// the largest `|p| + q`, found in a fixed search order.
pub fn farey_geodesic(len: usize) -> Vec<Slope> {
    let mut cache = HashMap::new();
    for k in 1.. {
        let slopes: Vec<Slope> = farey::slopes_up_to(k).expect("positive bound").into_iter().filter(|s| s.p().abs() + s.q() <= k).collect();
        for &s in &slopes {
            let mut path = vec![s];
            if geodesic_from(&slopes, len, &mut path, &mut cache) {
                return path;
            }
        }
    }
    unreachable!()
}

fn geodesic_from(slopes: &[Slope], len: usize, path: &mut Vec<Slope>, cache: &mut HashMap<(Slope, Slope), u32>) -> bool {
    if path.len() == len {
        return true;
    }
    let k = path.len();
    for &s in slopes {
        if !farey::is_adjacent(path[k - 1], s) {
            continue;
        }
        let fits = path.iter().enumerate().all(|(i, &t)| *cache.entry((t, s)).or_insert_with(|| farey::distance(t, s)) as usize == k - i);
        if fits {
            path.push(s);
            if geodesic_from(slopes, len, path, cache) {
                return true;
            }
            path.pop();
        }
    }
    false
}

/// `ι(x, y)` on `{-N..N}²` for a `Q` with two windows: the curves of `Q`
/// plus the `x`th and `y`th slopes of a fixed geodesic in each window.
pub fn flat_grid(q: &MulticurveQ, radius: usize) -> Result<Vec<((i64, i64), PantsVertex)>> {
    if q.windows.len() != 2 {
        return Err(PantsError::NotNx1(q.windows.len()));
    }
    let geo = farey_geodesic(2 * radius + 1);
    let mut curves = [Vec::new(), Vec::new()];
    for (w, list) in curves.iter_mut().enumerate() {
        for &s in &geo {
            list.push(q.windows[w].curve(s)?);
        }
    }
    let r = radius as i64;
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            let mut cs = q.curves.clone();
            cs.push(curves[0][(x + r) as usize].clone());
            cs.push(curves[1][(y + r) as usize].clone());
            out.push(((x, y), PantsVertex::new(q.surface, cs)?));
        }
    }
    Ok(out)
}

/// Largest curve norm on the grid.
pub fn flat_bound(q: &MulticurveQ, radius: usize) -> Result<usize> {
    let grid = flat_grid(q, radius)?;
    Ok(grid.iter().flat_map(|(_, v)| v.curves.iter().map(curve_norm)).max().unwrap_or(1))
}

/// The norm-`bound` ball together with every window curve of `Q` up to
/// the grid's norm, so that all of `P_Q` at that norm is present.
pub fn flat_catalog(q: &MulticurveQ, radius: usize, bound: usize) -> Result<CurveCatalog> {
    let top = flat_bound(q, radius)?;
    let mut extra = Vec::new();
    for w in &q.windows {
        for s in farey::slopes_up_to(top as i64).expect("positive bound") {
            let c = w.curve(s)?;
            if curve_norm(&c) <= top {
                extra.push(c);
            }
        }
    }
    CurveCatalog::build_with(q.surface, bound, &extra)
}

/// Checks `catalog_distance(ι(x), ι(y)) = ‖x − y‖₁` over the grid.
pub fn flat_audit(graph: &PantsGraph, q: &MulticurveQ, radius: usize) -> Result<AuditReport> {
    let grid = flat_grid(q, radius)?;
    let ids = grid.iter().map(|(_, v)| graph.id(v)).collect::<Result<Vec<_>>>()?;
    let mut params = BTreeMap::new();
    params.insert("radius".to_string(), radius.to_string());
    let geo: Vec<String> = farey_geodesic(2 * radius + 1).iter().map(|s| s.to_string()).collect();
    params.insert("geodesic".to_string(), geo.join(" "));
    let mut report = AuditReport::new("flat", graph, q, params);
    for (i, ((x0, y0), u)) in grid.iter().enumerate() {
        let dist = graph.bfs(ids[i], Some(4 * radius as u32 + 1));
        for (j, ((x1, y1), v)) in grid.iter().enumerate().skip(i + 1) {
            let l1 = ((x0 - x1).abs() + (y0 - y1).abs()) as u32;
            let d = dist[ids[j] as usize];
            let catalog_distance = (d != UNREACHED).then_some(d);
            let verdict = match catalog_distance {
                Some(d) if d < l1 => Verdict::Refuted,
                Some(d) if d == l1 => Verdict::CorroboratedComplete,
                _ => Verdict::Incomplete,
            };
            report.pairs.push(PairRecord {
                endpoints: [coords(u), coords(v)],
                d_q: l1,
                catalog_distance,
                paths_enumerated: 0,
                complete: true,
                all_in_pq: None,
                verdict,
            });
        }
    }
    Ok(report.finish())
}

#[derive(Clone, Debug)]
pub struct LipschitzConfig {
    pub starts: usize,
    pub max_len: usize,
    pub seed: u64,
}

/// All paths reachable from `path` by commutations of edges.
pub fn commutation_closure(graph: &PantsGraph, path: &[u32]) -> Vec<Vec<u32>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::from([path.to_vec()]);
    let mut stack = vec![path.to_vec()];
    while let Some(p) = stack.pop() {
        for i in 1..p.len().saturating_sub(1) {
            if let Some(mid) = graph.commute(p[i - 1], p[i], p[i + 1]) {
                if mid == p[i] {
                    continue;
                }
                let mut r = p.clone();
                r[i] = mid;
                if seen.insert(r.clone()) {
                    stack.push(r);
                }
            }
        }
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort();
    out
}

struct Walker<'g, 'q> {
    graph: &'g PantsGraph<'g>,
    proj: Projector<'q>,
    from_start: HashMap<u32, u32>,
    chi: usize,
    max_len: usize,
    counts: Vec<usize>,
    refutations: Vec<Vec<u32>>,
}

impl Walker<'_, '_> {
    fn dy(&mut self, start: u32, v: u32) -> Result<u32> {
        if let Some(&d) = self.from_start.get(&v) {
            return Ok(d);
        }
        let d = self.proj.distance(&self.graph.vertex(start), &self.graph.vertex(v))?;
        self.from_start.insert(v, d);
        Ok(d)
    }

    fn resolved(&mut self, path: &[u32]) -> Result<bool> {
        for p in commutation_closure(self.graph, path) {
            for q in 1..p.len() {
                if self.dy(p[0], p[q])? <= q as u32 {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    // A witness for a path is one for each extension, so only unresolved
    // paths are extended.
    fn walk(&mut self, path: &mut Vec<u32>) -> Result<()> {
        let p = path.len() - 1;
        if p > 0 {
            self.counts[p - 1] += 1;
            if self.resolved(path)? {
                return Ok(());
            }
            if p >= self.chi {
                self.refutations.push(path.clone());
            }
        }
        if p == self.max_len {
            return Ok(());
        }
        let next = self.graph.neighbors(*path.last().unwrap()).to_vec();
        for y in next {
            path.push(y);
            self.walk(path)?;
            path.pop();
        }
        Ok(())
    }
}

/// For catalog paths of length up to `max_len` from sampled starts, looks
/// for a commutation and `0 < q <= p` with `d_Y(ν₀, ν_q) <= q` whenever
/// `p >= χ̄(Y)`.
pub fn lipschitz_audit(graph: &PantsGraph, q: &MulticurveQ, cfg: &LipschitzConfig) -> Result<AuditReport> {
    if graph.is_empty() || cfg.starts == 0 {
        return Err(PantsError::EmptySample);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut all: Vec<u32> = (0..graph.len() as u32).collect();
    all.shuffle(&mut rng);
    all.truncate(cfg.starts);
    all.sort_unstable();
    let mut params = BTreeMap::new();
    params.insert("starts".to_string(), cfg.starts.to_string());
    params.insert("max_len".to_string(), cfg.max_len.to_string());
    params.insert("seed".to_string(), cfg.seed.to_string());
    params.insert("chi_bar_y".to_string(), q.chi_bar_y().to_string());
    let mut report = AuditReport::new("lipschitz", graph, q, params);
    let mut proj = Projector::new(q, Some(graph.catalog));
    for start in all {
        let mut w = Walker {
            graph,
            proj,
            from_start: HashMap::new(),
            chi: q.chi_bar_y(),
            max_len: cfg.max_len,
            counts: vec![0; cfg.max_len],
            refutations: Vec::new(),
        };
        w.walk(&mut vec![start])?;
        let verdict = if w.refutations.is_empty() { Verdict::CorroboratedComplete } else { Verdict::Refuted };
        report.paths.push(LipschitzRecord {
            start: coords(&graph.vertex(start)),
            paths_by_length: w.counts.clone(),
            refutations: w.refutations.iter().map(|p| p.iter().map(|&x| coords(&graph.vertex(x))).collect()).collect(),
            verdict,
        });
        proj = w.proj;
    }
    Ok(report.finish())
}
