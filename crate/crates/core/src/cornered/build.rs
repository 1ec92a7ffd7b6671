//! Complexes from polygons glued along sides and cut by chords.
//!
//! Each polygon lists its sides counter-clockwise; side `k` runs from
//! corner `k` to corner `k + 1` and carries `points[k]` marked points in
//! that order. Sides with the same glue id are identified reversing
//! direction. Chords join marked points inside one polygon, must not
//! cross, and become frontier edges. Every marked point ends exactly one
//! chord, so arcs continue across glued sides.

use std::collections::{BTreeMap, VecDeque};

use rand::Rng;

use super::{CorneredComplex, Dsu, Edge, Face, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideKind {
    Boundary,
    Glued(usize),
}

#[derive(Clone, Debug)]
pub struct Polygon {
    pub sides: Vec<SideKind>,
    pub points: Vec<usize>,
    /// `((side, index), (side, index))`.
    pub chords: Vec<((usize, usize), (usize, usize))>,
}

impl Polygon {
    pub fn new(sides: Vec<SideKind>) -> Polygon {
        let n = sides.len();
        Polygon { sides, points: vec![0; n], chords: Vec::new() }
    }

    fn stations(&self) -> Vec<Station> {
        let mut out = Vec::new();
        for k in 0..self.sides.len() {
            out.push(Station::Corner(k));
            for i in 0..self.points[k] {
                out.push(Station::Point(k, i));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Station {
    Corner(usize),
    Point(usize, usize),
}

/// Glue the polygons, cut along the chords and 2-colour the pieces so that
/// every chord separates inside from outside. The piece containing face 0
/// is inside iff `first_inside`. `None` if no such colouring exists.
pub fn assemble(polys: &[Polygon], first_inside: bool) -> Option<CorneredComplex> {
    // global vertex slots: (polygon, station)
    let mut slot: BTreeMap<(usize, Station), usize> = BTreeMap::new();
    for (p, poly) in polys.iter().enumerate() {
        for st in poly.stations() {
            let n = slot.len();
            slot.insert((p, st), n);
        }
    }
    let mut dsu = Dsu::new(slot.len());
    let mut partner: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut first: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (p, poly) in polys.iter().enumerate() {
        for (k, s) in poly.sides.iter().enumerate() {
            if let SideKind::Glued(g) = *s {
                if let Some(&(q, j)) = first.get(&g) {
                    partner.insert(g, (p, k));
                    let (a, b) = (&polys[q], poly);
                    assert_eq!(a.points[j], b.points[k], "glued sides carry equal points");
                    let c = a.points[j];
                    let na = a.sides.len();
                    let nb = b.sides.len();
                    dsu.union(slot[&(q, Station::Corner(j))], slot[&(p, Station::Corner((k + 1) % nb))]);
                    dsu.union(slot[&(q, Station::Corner((j + 1) % na))], slot[&(p, Station::Corner(k))]);
                    for i in 0..c {
                        dsu.union(slot[&(q, Station::Point(j, i))], slot[&(p, Station::Point(k, c - 1 - i))]);
                    }
                } else {
                    first.insert(g, (p, k));
                }
            }
        }
    }
    let mut vid: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertex_of = |s: usize, dsu: &mut Dsu| {
        let r = dsu.find(s);
        let n = vid.len();
        *vid.entry(r).or_insert(n)
    };

    let mut edges: Vec<Edge> = Vec::new();
    // boundary segment j of side k: from station j to j+1 along that side
    let mut seg: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (p, poly) in polys.iter().enumerate() {
        let n = poly.sides.len();
        for k in 0..n {
            let c = poly.points[k];
            let along: Vec<Station> = std::iter::once(Station::Corner(k))
                .chain((0..c).map(|i| Station::Point(k, i)))
                .chain(std::iter::once(Station::Corner((k + 1) % n)))
                .collect();
            let mirror = match poly.sides[k] {
                SideKind::Glued(g) if partner.get(&g) == Some(&(p, k)) => Some(first[&g]),
                _ => None,
            };
            for j in 0..=c {
                if let Some((q, m)) = mirror {
                    let id = seg[&(q, m, c - j)];
                    seg.insert((p, k, j), id);
                    continue;
                }
                let a = vertex_of(slot[&(p, along[j])], &mut dsu);
                let b = vertex_of(slot[&(p, along[j + 1])], &mut dsu);
                seg.insert((p, k, j), edges.len());
                edges.push(Edge { ends: [a, b], frontier: false });
            }
        }
    }

    let mut faces: Vec<Vec<usize>> = Vec::new();
    for (p, poly) in polys.iter().enumerate() {
        let st = poly.stations();
        let pos: BTreeMap<Station, usize> = st.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut chord_at: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for &((s1, i1), (s2, i2)) in &poly.chords {
            let a = vertex_of(slot[&(p, Station::Point(s1, i1))], &mut dsu);
            let b = vertex_of(slot[&(p, Station::Point(s2, i2))], &mut dsu);
            let id = edges.len();
            edges.push(Edge { ends: [a, b], frontier: true });
            let (x, y) = (pos[&Station::Point(s1, i1)], pos[&Station::Point(s2, i2)]);
            chord_at.insert(x, (y, id));
            chord_at.insert(y, (x, id));
        }
        // segment starting at station t, as an edge id
        let seg_from = |t: usize| -> usize {
            let (k, j) = match st[t] {
                Station::Corner(k) => (k, 0),
                Station::Point(k, i) => (k, i + 1),
            };
            seg[&(p, k, j)]
        };
        let total = st.len();
        let mut used = vec![false; total];
        for start in 0..total {
            if used[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut t = start;
            loop {
                used[t] = true;
                walk.push(seg_from(t));
                let next = (t + 1) % total;
                t = match chord_at.get(&next) {
                    Some(&(other, id)) => {
                        walk.push(id);
                        other
                    }
                    None => next,
                };
                if t == start {
                    break;
                }
            }
            faces.push(walk);
        }
    }

    let mut cx = CorneredComplex {
        vertices: vid.len(),
        edges,
        faces: faces.into_iter().map(|b| Face { boundary: b, side: Side::InY }).collect(),
    };
    colour(&mut cx, first_inside).then_some(cx)
}

fn colour(cx: &mut CorneredComplex, first_inside: bool) -> bool {
    let sides = cx.sides();
    let nf = cx.faces.len();
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nf];
    for (e, s) in sides.iter().enumerate() {
        if s.len() == 2 {
            adj[s[0]].push((s[1], cx.edges[e].frontier));
            adj[s[1]].push((s[0], cx.edges[e].frontier));
        }
    }
    let mut col: Vec<Option<bool>> = vec![None; nf];
    for root in 0..nf {
        if col[root].is_some() {
            continue;
        }
        col[root] = Some(if root == 0 { first_inside } else { true });
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let c = col[f].unwrap();
            for &(g, flip) in &adj[f] {
                let want = c ^ flip;
                match col[g] {
                    None => {
                        col[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(x) if x != want => return false,
                    _ => {}
                }
            }
        }
    }
    for (f, c) in cx.faces.iter_mut().zip(col) {
        f.side = if c.unwrap() { Side::InY } else { Side::OutY };
    }
    true
}

/// A disk whose boundary has `n` sides, with a chord cutting off each
/// corner. The middle piece is a `2n`-gon with `n` frontier arcs.
pub fn corner_cut_disk(n: usize) -> CorneredComplex {
    assert!(n >= 2);
    let mut p = Polygon::new(vec![SideKind::Boundary; n]);
    p.points = vec![2; n];
    for k in 0..n {
        p.chords.push(((k, 1), ((k + 1) % n, 0)));
    }
    let mut cx = assemble(&[p], true).expect("a disk is always colourable");
    // make the middle piece the inside one
    if let Some(mid) = cx.faces.iter().position(|f| f.boundary.iter().filter(|&&e| cx.edges[e].frontier).count() == n) {
        if cx.faces[mid].side != Side::InY {
            for f in cx.faces.iter_mut() {
                f.side = if f.side == Side::InY { Side::OutY } else { Side::InY };
            }
        }
    }
    cx
}

/// An annulus cut by `k` arcs running across it.
pub fn annulus(k: usize, first_inside: bool) -> Option<CorneredComplex> {
    let mut p = Polygon::new(vec![SideKind::Boundary, SideKind::Glued(0), SideKind::Boundary, SideKind::Glued(0)]);
    p.points = vec![k, 0, k, 0];
    for i in 0..k {
        p.chords.push(((0, i), (2, k - 1 - i)));
    }
    assemble(&[p], first_inside)
}

/// The pair of pants as two hexagons, cut by the unique arc system with
/// `n[i]` endpoints on boundary `i`. Requires an even total; boundaries are
/// reordered so that the largest weight is first.
pub fn pants(n: [usize; 3], first_inside: bool) -> Option<CorneredComplex> {
    assert!(n.iter().sum::<usize>() % 2 == 0);
    let mut w = n;
    w.sort_unstable_by(|a, b| b.cmp(a));
    let [n1, n2, n3] = w;
    use SideKind::*;
    // F: B1 E12 B2 E23 B3 E31; K: B1 E31 B3 E23 B2 E12
    let mut f = Polygon::new(vec![Boundary, Glued(12), Boundary, Glued(23), Boundary, Glued(31)]);
    let mut k = Polygon::new(vec![Boundary, Glued(31), Boundary, Glued(23), Boundary, Glued(12)]);
    if n1 <= n2 + n3 {
        let m12 = (n1 + n2 - n3) / 2;
        let m23 = (n2 + n3 - n1) / 2;
        let m31 = (n3 + n1 - n2) / 2;
        f.points = vec![m31 + m12, 0, m12 + m23, 0, m23 + m31, 0];
        for j in 0..m12 {
            f.chords.push(((0, m31 + m12 - 1 - j), (2, j)));
        }
        for j in 0..m23 {
            f.chords.push(((2, m12 + m23 - 1 - j), (4, j)));
        }
        for j in 0..m31 {
            f.chords.push(((4, m23 + m31 - 1 - j), (0, j)));
        }
    } else {
        let waves = (n1 - n2 - n3) / 2;
        f.points = vec![n3 + waves + n2, 0, n2, waves, n3, 0];
        for j in 0..n2 {
            f.chords.push(((0, n3 + waves + n2 - 1 - j), (2, j)));
        }
        for j in 0..waves {
            f.chords.push(((0, n3 + waves - 1 - j), (3, j)));
        }
        for j in 0..n3 {
            f.chords.push(((4, n3 - 1 - j), (0, j)));
        }
        k.points = vec![waves, 0, 0, waves, 0, 0];
        for y in 0..waves {
            k.chords.push(((3, y), (0, waves - 1 - y)));
        }
    }
    assemble(&[f, k], first_inside)
}

/// A disk with `sides` boundary sides cut by a random non-crossing family
/// of `chords` chords.
pub fn random_disk<R: Rng>(rng: &mut R, sides: usize, chords: usize) -> CorneredComplex {
    let total = 2 * chords;
    let mut p = Polygon::new(vec![SideKind::Boundary; sides]);
    let mut where_: Vec<usize> = (0..total).map(|_| rng.gen_range(0..sides)).collect();
    where_.sort_unstable();
    for &s in &where_ {
        p.points[s] += 1;
    }
    let mut idx = vec![0usize; sides];
    let labels: Vec<(usize, usize)> = where_
        .iter()
        .map(|&s| {
            let i = idx[s];
            idx[s] += 1;
            (s, i)
        })
        .collect();
    // random non-crossing matching by a random bracket sequence
    let mut stack = Vec::new();
    let mut opens_left = chords;
    for (t, &lab) in labels.iter().enumerate() {
        let remaining = total - t;
        let must_close = stack.len() == remaining;
        let can_close = !stack.is_empty();
        let open = !must_close && opens_left > 0 && (!can_close || rng.gen_bool(0.5));
        if open {
            stack.push(lab);
            opens_left -= 1;
        } else {
            let a = stack.pop().expect("balanced");
            p.chords.push((a, lab));
        }
    }
    assemble(&[p], rng.gen_bool(0.5)).expect("chords in a disk always separate")
}
