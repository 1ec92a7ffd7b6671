//! The Farey graph: reduced slopes `p/q` (with `1/0` standing for infinity),
//! joined by an edge whenever `|ps - qr| = 1`.
//!
//! Distances are computed by breadth-first search inside a finite box of
//! slopes. The box is exact, not heuristic: every Farey edge whose endpoints
//! separate `a` from `b` has both endpoints of height at most
//! `max(height(a), height(b))` (a fraction strictly between two Farey
//! neighbours `r/s < t/u` has denominator at least `s + u`, and the
//! symmetry `p/q -> q/p` transfers the bound to numerators). Every geodesic
//! from `a` to `b` only visits endpoints of separating edges, so BFS inside
//! [`slopes_up_to`] of that height sees all of them.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FareyError {
    #[error("0/0 is not a slope")]
    ZeroSlope,
    #[error("cap must be positive")]
    ZeroCap,
    #[error("bound must be positive")]
    ZeroBound,
    #[error("cannot parse slope `{0}`")]
    Parse(String),
}

/// A reduced slope. Invariants: `gcd(|p|, q) = 1`, `q >= 0`, and `q = 0`
/// only for `1/0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    p: i64,
    q: i64,
}

pub const INFINITY: Slope = Slope { p: 1, q: 0 };
pub const ZERO: Slope = Slope { p: 0, q: 1 };
pub const ONE: Slope = Slope { p: 1, q: 1 };

impl Slope {
    /// Reduce `p/q`. Rejects `0/0`.
    pub fn new(p: i64, q: i64) -> Result<Self, FareyError> {
        if p == 0 && q == 0 {
            return Err(FareyError::ZeroSlope);
        }
        if q == 0 {
            return Ok(INFINITY);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn is_infinity(self) -> bool {
        self.q == 0
    }

    /// `max(|p|, q)`: the box size needed to contain this slope.
    pub fn height(self) -> i64 {
        self.p.abs().max(self.q)
    }

    /// `p*s - q*r` for `self = p/q`, `other = r/s`.
    pub fn det(self, other: Slope) -> i64 {
        self.p * other.q - self.q * other.p
    }

    /// Apply the integer matrix `[[a, b], [c, d]]` to the column `(p, q)`.
    pub fn transform(self, m: [[i64; 2]; 2]) -> Slope {
        let p = m[0][0] * self.p + m[0][1] * self.q;
        let q = m[1][0] * self.p + m[1][1] * self.q;
        Slope::new(p, q).expect("invertible matrix maps slopes to slopes")
    }

    fn sort_key(self) -> (i64, i64) {
        (self.q, self.p)
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FareyError::Parse(s.to_string());
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(INFINITY);
        }
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        Slope::new(p, q).map_err(|_| bad())
    }
}

pub fn reduce_slope(p: i64, q: i64) -> Result<Slope, FareyError> {
    Slope::new(p, q)
}

pub fn is_adjacent(a: Slope, b: Slope) -> bool {
    a.det(b).abs() == 1
}

/// All slopes with `q <= bound` and `|p| <= bound`, plus `1/0`, sorted by
/// `(q, p)`.
pub fn slopes_up_to(bound: i64) -> Result<Vec<Slope>, FareyError> {
    if bound < 1 {
        return Err(FareyError::ZeroBound);
    }
    let mut out = vec![INFINITY];
    for q in 1..=bound {
        for p in -bound..=bound {
            if p.gcd(&q) == 1 {
                out.push(Slope { p, q });
            }
        }
    }
    Ok(out)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.signum() * a, a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Farey neighbours of `s` inside the box of height `bound`.
pub fn neighbors_within(s: Slope, bound: i64) -> Vec<Slope> {
    let (p, q) = (s.p, s.q);
    // p*y - q*x = 1  <=>  p*y + q*(-x) = 1
    let (_, y0, mx0) = ext_gcd(p, q);
    let (x0, y0) = (-mx0, y0);
    debug_assert_eq!(p * y0 - q * x0, 1);
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let (bx, by) = (sign * x0, sign * y0);
        // (x, y) = (bx + k p, by + k q)
        let (klo, khi) = if q > 0 {
            (ceil_div(-by, q), (bound - by).div_euclid(q))
        } else {
            // s = 1/0, so y = by is fixed and x = bx + k
            (-bound - bx, bound - bx)
        };
        for k in klo..=khi {
            let (x, y) = (bx + k * p, by + k * q);
            if x.abs() > bound || y < 0 || y > bound {
                continue;
            }
            if y > 0 || (y == 0 && x == 1) {
                out.push(Slope { p: x, q: y });
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn envelope(a: Slope, b: Slope) -> i64 {
    a.height().max(b.height()).max(1)
}

fn bfs_layers(a: Slope, bound: i64, stop: Option<Slope>) -> HashMap<Slope, u32> {
    let mut dist = HashMap::new();
    dist.insert(a, 0u32);
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if Some(x) == stop {
            break;
        }
        for y in neighbors_within(x, bound) {
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(y) {
                e.insert(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn distance(a: Slope, b: Slope) -> u32 {
    if a == b {
        return 0;
    }
    if is_adjacent(a, b) {
        return 1;
    }
    ladder_distance(a, b)
}

/// Reference distance: plain BFS inside the height box of the endpoints.
pub fn box_distance(a: Slope, b: Slope) -> u32 {
    bfs_layers(a, envelope(a, b), Some(b))[&b]
}

// Send a to 1/0 and walk the Stern-Brocot descent towards b. Every Farey
// edge crossed by the hyperbolic geodesic separates the endpoints, so a graph
// geodesic only visits vertices of the triangles along that descent.
fn ladder_distance(a: Slope, b: Slope) -> u32 {
    let (_, y, mx) = ext_gcd(a.p, a.q);
    // a.p * y - a.q * (-mx) = 1
    let m = [[y, mx], [-a.q, a.p]];
    let x = b.transform(m);
    debug_assert_eq!(a.transform(m), INFINITY);
    let n = x.p.div_euclid(x.q);
    let mut ids: HashMap<Slope, usize> = HashMap::new();
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let node = |s: Slope, ids: &mut HashMap<Slope, usize>, adj: &mut Vec<Vec<usize>>| {
        *ids.entry(s).or_insert_with(|| {
            adj.push(Vec::new());
            adj.len() - 1
        })
    };
    let edge = |u: usize, v: usize, adj: &mut Vec<Vec<usize>>| {
        adj[u].push(v);
        adj[v].push(u);
    };
    let inf = node(INFINITY, &mut ids, &mut adj);
    let (mut l, mut r) = (Slope { p: n, q: 1 }, Slope { p: n + 1, q: 1 });
    let (il, ir) = (node(l, &mut ids, &mut adj), node(r, &mut ids, &mut adj));
    edge(inf, il, &mut adj);
    edge(inf, ir, &mut adj);
    edge(il, ir, &mut adj);
    let target = loop {
        let mid = Slope { p: l.p + r.p, q: l.q + r.q };
        let (il, ir, im) = (ids[&l], ids[&r], node(mid, &mut ids, &mut adj));
        edge(il, im, &mut adj);
        edge(ir, im, &mut adj);
        // x < mid  <=>  x.p * mid.q < mid.p * x.q
        match (x.p as i128 * mid.q as i128).cmp(&(mid.p as i128 * x.q as i128)) {
            std::cmp::Ordering::Equal => break im,
            std::cmp::Ordering::Less => r = mid,
            std::cmp::Ordering::Greater => l = mid,
        }
    };
    let mut dist = vec![u32::MAX; adj.len()];
    dist[inf] = 0;
    let mut queue = VecDeque::from([inf]);
    while let Some(u) = queue.pop_front() {
        if u == target {
            break;
        }
        for &v in &adj[u] {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist[target]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FareyPath {
    pub vertices: Vec<Slope>,
}

impl FareyPath {
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// All geodesics from `a` to `b`, at most `cap` of them. The flag is true
/// when the list is the complete set.
pub fn all_geodesics(a: Slope, b: Slope, cap: usize) -> Result<(Vec<FareyPath>, bool), FareyError> {
    if cap == 0 {
        return Err(FareyError::ZeroCap);
    }
    let bound = envelope(a, b);
    let dist = bfs_layers(a, bound, None);
    let mut paths = Vec::new();
    let mut stack = vec![b];
    let complete = backtrack(&dist, bound, &mut stack, &mut paths, cap);
    Ok((paths, complete))
}

fn backtrack(
    dist: &HashMap<Slope, u32>,
    bound: i64,
    stack: &mut Vec<Slope>,
    out: &mut Vec<FareyPath>,
    cap: usize,
) -> bool {
    let here = *stack.last().unwrap();
    let d = dist[&here];
    if d == 0 {
        if out.len() == cap {
            return false;
        }
        let mut vertices = stack.clone();
        vertices.reverse();
        out.push(FareyPath { vertices });
        return true;
    }
    for prev in neighbors_within(here, bound) {
        if dist.get(&prev) == Some(&(d - 1)) {
            stack.push(prev);
            let ok = backtrack(dist, bound, stack, out, cap);
            stack.pop();
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(s(2, 4), s(1, 2));
        assert_eq!((s(1, 2).p(), s(1, 2).q()), (1, 2));
        assert_eq!(s(-3, 0), INFINITY);
        assert_eq!((s(6, -4).p(), s(6, -4).q()), (-3, 2));
        assert_eq!(Slope::new(0, 0), Err(FareyError::ZeroSlope));
        assert_eq!(Slope::new(0, -7).unwrap(), ZERO);
    }

    #[test]
    fn adjacency() {
        assert!(is_adjacent(ZERO, INFINITY));
        assert!(is_adjacent(ZERO, ONE));
        assert!(!is_adjacent(ZERO, s(2, 1)));
        assert!(is_adjacent(s(-1, 1), ZERO));
    }

    #[test]
    fn small_distances() {
        assert_eq!(distance(ZERO, ZERO), 0);
        assert_eq!(distance(ZERO, INFINITY), 1);
        assert_eq!(distance(ZERO, s(3, 5)), 2);
        assert_eq!(distance(INFINITY, s(3, 5)), 3);
        assert_eq!(distance(INFINITY, s(2, 5)), 3);
    }

    #[test]
    fn neighbours_of_infinity_are_integers() {
        let n = neighbors_within(INFINITY, 3);
        let want: Vec<_> = (-3..=3).map(|k| s(k, 1)).collect();
        assert_eq!(n, want);
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(slopes_up_to(1).unwrap(), vec![INFINITY, s(-1, 1), ZERO, ONE]);
        let two = slopes_up_to(2).unwrap();
        for x in [s(1, 2), s(-1, 2), s(2, 1), s(-2, 1)] {
            assert!(two.contains(&x));
        }
        assert_eq!(slopes_up_to(0), Err(FareyError::ZeroBound));
    }

    #[test]
    fn geodesic_examples() {
        let (p, c) = all_geodesics(ZERO, ONE, 10).unwrap();
        assert!(c);
        assert_eq!(p, vec![FareyPath { vertices: vec![ZERO, ONE] }]);
        let (p, c) = all_geodesics(ZERO, ZERO, 10).unwrap();
        assert!(c);
        assert_eq!(p, vec![FareyPath { vertices: vec![ZERO] }]);
        assert_eq!(all_geodesics(ZERO, ONE, 0), Err(FareyError::ZeroCap));
    }

    #[test]
    fn geodesic_cap_is_reported() {
        // 0/1 and 2/1 have the two common neighbours 1/0 and 1/1.
        let (p, c) = all_geodesics(ZERO, s(2, 1), 1).unwrap();
        assert_eq!(p.len(), 1);
        assert!(!c);
        let (p, c) = all_geodesics(ZERO, s(2, 1), 2).unwrap();
        assert_eq!(p.len(), 2);
        assert!(c);
    }

    #[test]
    fn ladder_matches_box_search() {
        let all = slopes_up_to(9).unwrap();
        for &a in &all {
            for &b in &all {
                assert_eq!(distance(a, b), box_distance(a, b), "{a} {b}");
            }
        }
        assert_eq!(distance(ZERO, s(144, 233)), box_distance(ZERO, s(144, 233)));
        assert_eq!(distance(s(-1, 1), s(1, 1_000_000)), 2);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/5".parse::<Slope>().unwrap(), s(3, 5));
        assert_eq!("-2".parse::<Slope>().unwrap(), s(-2, 1));
        assert_eq!("1/0".parse::<Slope>().unwrap(), INFINITY);
        assert!("0/0".parse::<Slope>().is_err());
        assert_eq!(s(-3, 2).to_string(), "-3/2");
    }
}
