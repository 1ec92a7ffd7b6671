//! Hand-built instances, stored as text.
//!
//! ```text
//! version 1
//! instance NAME
//!   edge NAME U V [frontier]
//!   face NAME in|out EDGE EDGE ...
//!   expect chi_bar R
//!   expect chi_y R
//!   expect piece FACE KIND R
//!   arc boundary|curve seam P/Q A B
//!   arc boundary|curve wave BASE P/Q
//! end
//! ```
//!
//! Vertices are named by the edge lines; faces list their edges in walk
//! order. `piece FACE` refers to the piece containing that face. `arc`
//! lines place the arcs of `∂X ∩ Y` and of a curve `c ∩ Y` in the pillowcase
//! window model, for the distance hypotheses of the containment lemmas.

use std::collections::BTreeMap;

use num_rational::Rational64;

use super::{CorneredComplex, CorneredError, Edge, Face, PieceKind, Result, Side};
use crate::window::{WindowArc, WindowKind};

pub const LIBRARY_VERSION: u32 = 1;
pub const BUILTIN: &str = include_str!("../../data/cornered_library.txt");

#[derive(Clone, Debug, PartialEq)]
pub enum Expect {
    ChiBar(Rational64),
    ChiY(Rational64),
    Piece { face: usize, kind: PieceKind, chi_x: Rational64 },
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub complex: CorneredComplex,
    pub face_names: Vec<String>,
    pub expects: Vec<Expect>,
    pub boundary_arcs: Vec<WindowArc>,
    pub curve_arcs: Vec<WindowArc>,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(CorneredError::Parse(line, msg.into()))
}

fn rational(line: usize, s: &str) -> Result<Rational64> {
    let parsed = match s.split_once('/') {
        Some((a, b)) => a.parse().ok().zip(b.parse().ok()).filter(|(_, d): &(i64, i64)| *d != 0).map(|(n, d)| Rational64::new(n, d)),
        None => s.parse().ok().map(Rational64::from_integer),
    };
    parsed.map_or_else(|| err(line, format!("bad number {s}")), Ok)
}

pub fn parse_kind(s: &str) -> Option<PieceKind> {
    Some(match s {
        "rectangle" => PieceKind::Rectangle,
        "hexagon" => PieceKind::Hexagon,
        "rect_annulus" => PieceKind::RectangularAnnulus,
        "rect_pants" => PieceKind::RectangularPants,
        _ => {
            if let Some(k) = s.strip_suffix("-gon") {
                let sides: usize = k.parse().ok()?;
                return sides.is_multiple_of(2).then_some(PieceKind::Gon(sides / 2));
            }
            // surface:GENUS:CURVES:N,N,..
            let rest = s.strip_prefix("surface:")?;
            let mut it = rest.split(':');
            let genus = it.next()?.parse().ok()?;
            let curves = it.next()?.parse().ok()?;
            let polygons = match it.next() {
                Some("") | None => Vec::new(),
                Some(p) => p.split(',').map(|x| x.parse().ok()).collect::<Option<Vec<usize>>>()?,
            };
            PieceKind::CurveBounded { genus, curves, polygons }
        }
    })
}

fn arc(line: usize, words: &[&str]) -> Result<WindowArc> {
    let slope = |s: &str| s.parse().map_err(|_| CorneredError::Parse(line, format!("bad slope {s}")));
    let corner = |s: &str| s.parse::<u8>().map_err(|_| CorneredError::Parse(line, format!("bad corner {s}")));
    let made = match words {
        ["seam", s, a, b] => WindowArc::seam(slope(s)?, corner(a)?, corner(b)?),
        ["wave", c, s] => WindowArc::wave(WindowKind::FourPuncturedSphere, corner(c)?, slope(s)?),
        _ => return err(line, "arc needs `seam P/Q A B` or `wave BASE P/Q`"),
    };
    made.map_err(|e| CorneredError::Parse(line, e.to_string()))
}

#[derive(Default)]
struct Draft {
    name: String,
    verts: BTreeMap<String, usize>,
    edges: BTreeMap<String, usize>,
    cx: CorneredComplex,
    faces: BTreeMap<String, usize>,
    face_names: Vec<String>,
    expects: Vec<Expect>,
    boundary_arcs: Vec<WindowArc>,
    curve_arcs: Vec<WindowArc>,
}

impl Draft {
    fn vertex(&mut self, name: &str) -> usize {
        let n = self.verts.len();
        *self.verts.entry(name.to_string()).or_insert(n)
    }
}

pub fn parse(text: &str) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let mut version = None;
    let mut cur: Option<Draft> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let words: Vec<&str> = body.split_whitespace().collect();
        match (words[0], cur.as_mut()) {
            ("version", None) => {
                version = words.get(1).and_then(|v| v.parse::<u32>().ok());
                if version != Some(LIBRARY_VERSION) {
                    return err(line, format!("unsupported library version {:?}", words.get(1)));
                }
            }
            ("instance", None) => {
                if version.is_none() {
                    return err(line, "missing version header");
                }
                let name = words.get(1).map_or_else(|| err(line, "instance needs a name"), |s| Ok(s.to_string()))?;
                cur = Some(Draft { name, ..Draft::default() });
            }
            ("edge", Some(d)) => {
                let (name, u, v) = match words[1..] {
                    [n, u, v] | [n, u, v, "frontier"] => (n, u, v),
                    _ => return err(line, "edge NAME U V [frontier]"),
                };
                let ends = [d.vertex(u), d.vertex(v)];
                let frontier = words.len() == 5;
                if d.edges.insert(name.to_string(), d.cx.edges.len()).is_some() {
                    return err(line, format!("duplicate edge {name}"));
                }
                d.cx.edges.push(Edge { ends, frontier });
            }
            ("face", Some(d)) => {
                if words.len() < 4 {
                    return err(line, "face NAME in|out EDGES..");
                }
                let side = match words[2] {
                    "in" => Side::InY,
                    "out" => Side::OutY,
                    s => return err(line, format!("side must be in or out, not {s}")),
                };
                let mut boundary = Vec::new();
                for w in &words[3..] {
                    match d.edges.get(*w) {
                        Some(&e) => boundary.push(e),
                        None => return err(line, format!("unknown edge {w}")),
                    }
                }
                d.faces.insert(words[1].to_string(), d.cx.faces.len());
                d.face_names.push(words[1].to_string());
                d.cx.faces.push(Face { boundary, side });
            }
            ("expect", Some(d)) => match words[1..] {
                ["chi_bar", r] => d.expects.push(Expect::ChiBar(rational(line, r)?)),
                ["chi_y", r] => d.expects.push(Expect::ChiY(rational(line, r)?)),
                ["piece", f, k, r] => {
                    let face = *d.faces.get(f).ok_or_else(|| CorneredError::Parse(line, format!("unknown face {f}")))?;
                    let kind = parse_kind(k).ok_or_else(|| CorneredError::Parse(line, format!("unknown kind {k}")))?;
                    d.expects.push(Expect::Piece { face, kind, chi_x: rational(line, r)? });
                }
                _ => return err(line, "unknown expectation"),
            },
            ("arc", Some(d)) => {
                let a = arc(line, &words[2..])?;
                match words.get(1) {
                    Some(&"boundary") => d.boundary_arcs.push(a),
                    Some(&"curve") => d.curve_arcs.push(a),
                    _ => return err(line, "arc boundary|curve .."),
                }
            }
            ("end", Some(_)) => {
                let mut d = cur.take().unwrap();
                d.cx.vertices = d.verts.len();
                d.cx.validate().map_err(|e| CorneredError::Parse(line, format!("{}: {e}", d.name)))?;
                out.push(Instance {
                    name: d.name,
                    complex: d.cx,
                    face_names: d.face_names,
                    expects: d.expects,
                    boundary_arcs: d.boundary_arcs,
                    curve_arcs: d.curve_arcs,
                });
            }
            (w, _) => return err(line, format!("unexpected `{w}`")),
        }
    }
    if cur.is_some() {
        return err(text.lines().count(), "unterminated instance");
    }
    Ok(out)
}

pub fn builtin() -> Vec<Instance> {
    parse(BUILTIN).expect("the bundled library parses")
}
