use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::build::{annulus, assemble, corner_cut_disk, pants, random_disk, Polygon, SideKind};
use super::library::{self, Expect};
use super::*;
use crate::window::{arcs_disjoint, projection_distance};

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn check(cx: &CorneredComplex) -> Vec<Piece> {
    let (pieces, total) = cx.split_and_verify().unwrap();
    assert_eq!(total, cx.chi_bar());
    for p in &pieces {
        assert_eq!(p.chi_x, p.kind.chi_x(), "{:?}", p.kind);
    }
    pieces
}

#[test]
fn plain_surfaces() {
    let disk = assemble(&[Polygon::new(vec![SideKind::Boundary; 4])], true).unwrap();
    assert_eq!(chi_bar(&disk).unwrap(), r(-1, 1));
    let ann = annulus(0, true).unwrap();
    assert_eq!(chi_bar(&ann).unwrap(), r(0, 1));
    let p = pants([0, 0, 0], true).unwrap();
    assert_eq!(chi_bar(&p).unwrap(), r(1, 1));
    // no frontier: one piece carrying everything
    for cx in [&disk, &ann, &p] {
        let pieces = check(cx);
        assert_eq!(pieces.len(), 1);
        assert_eq!(chi_cornered(cx).unwrap(), cx.chi_bar());
    }
}

#[test]
fn gon_values() {
    for n in 2..9 {
        let pieces = check(&corner_cut_disk(n));
        let mid: Vec<&Piece> = pieces.iter().filter(|p| p.side == Side::InY).collect();
        assert_eq!(mid.len(), 1);
        assert_eq!(mid[0].chi_x, r(n as i64, 2) - 1);
        let want = match n {
            2 => PieceKind::Rectangle,
            3 => PieceKind::Hexagon,
            _ => PieceKind::Gon(n),
        };
        assert_eq!(mid[0].kind, want);
        assert!(pieces.iter().filter(|p| p.side == Side::OutY).all(|p| p.kind == PieceKind::Gon(1)));
    }
    assert_eq!(PieceKind::Rectangle.chi_x(), r(0, 1));
    assert_eq!(PieceKind::Hexagon.chi_x(), r(1, 2));
    assert_eq!(PieceKind::Gon(4).chi_x(), r(1, 1));
    assert_eq!(PieceKind::RectangularAnnulus.chi_x(), r(1, 1));
    assert_eq!(PieceKind::RectangularPants.chi_x(), r(2, 1));
}

#[test]
fn kind_names_round_trip() {
    let kinds = [
        PieceKind::Rectangle,
        PieceKind::Hexagon,
        PieceKind::Gon(1),
        PieceKind::Gon(5),
        PieceKind::RectangularAnnulus,
        PieceKind::RectangularPants,
        PieceKind::CurveBounded { genus: 1, curves: 2, polygons: vec![1, 3] },
        PieceKind::CurveBounded { genus: 0, curves: 3, polygons: vec![] },
    ];
    for k in kinds {
        assert_eq!(library::parse_kind(&k.to_string()), Some(k.clone()), "{k}");
    }
}

#[test]
fn library_expectations() {
    let lib = library::builtin();
    assert!(lib.len() >= 4);
    for inst in &lib {
        let pieces = check(&inst.complex);
        for e in &inst.expects {
            match e {
                Expect::ChiBar(v) => assert_eq!(inst.complex.chi_bar(), *v, "{}", inst.name),
                Expect::ChiY(v) => assert_eq!(inst.complex.chi_cornered(), *v, "{}", inst.name),
                Expect::Piece { face, kind, chi_x } => {
                    let p = pieces.iter().find(|p| p.faces.contains(face)).unwrap();
                    assert_eq!((&p.kind, p.chi_x), (kind, *chi_x), "{} {}", inst.name, inst.face_names[*face]);
                }
            }
        }
    }
}

#[test]
fn mixed_figure_sums_inside_pieces() {
    let lib = library::builtin();
    let fig = lib.iter().find(|i| i.name == "annulus_two_hexagons").unwrap();
    let pieces = check(&fig.complex);
    let inside: Rational64 = pieces.iter().filter(|p| p.side == Side::InY).map(|p| p.chi_x).sum();
    assert_eq!(inside, fig.complex.chi_bar());
    assert_eq!(pieces.iter().filter(|p| p.side == Side::InY).count(), 3);
}

#[test]
fn library_rejects_bad_input() {
    let bad = [
        "instance x\nend\n",
        "version 2\n",
        "version 1\ninstance x\n edge e a b frontier\n face F in e\nend\n",
        "version 1\ninstance x\n edge e a b\n edge f b c\n face F in e f\nend\n",
        "version 1\ninstance x\n edge e a a\n face F in e\n expect piece G rectangle 0\nend\n",
        "version 1\ninstance x\n edge e a a\n face F in e\n",
    ];
    for text in bad {
        assert!(matches!(library::parse(text), Err(CorneredError::Parse(..))), "{text}");
    }
}

pub(crate) fn random_instances(count: usize, seed: u64) -> Vec<CorneredComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let cx = match rng.gen_range(0..3) {
            0 => annulus(2 * rng.gen_range(0..5), rng.gen_bool(0.5)),
            1 => {
                let mut n = [rng.gen_range(0..7), rng.gen_range(0..7), rng.gen_range(0..7)];
                if n.iter().sum::<usize>() % 2 == 1 {
                    n[0] ^= 1;
                }
                pants(n, rng.gen_bool(0.5))
            }
            _ => {
                let sides = rng.gen_range(1..7);
                let chords = rng.gen_range(0..8);
                Some(random_disk(&mut rng, sides, chords))
            }
        };
        out.extend(cx);
    }
    out
}

#[test]
fn additivity_on_random_decompositions() {
    for cx in random_instances(1000, 7) {
        check(&cx);
    }
}

#[test]
fn annuli_cut_into_rectangles() {
    for k in [2, 4, 6, 8] {
        let cx = annulus(k, true).unwrap();
        let pieces = check(&cx);
        assert_eq!(pieces.len(), k);
        assert!(pieces.iter().all(|p| p.kind == PieceKind::Rectangle));
        assert_eq!(cx.chi_bar(), r(0, 1));
    }
    // an odd number of cuts cannot be two-coloured
    assert!(annulus(3, true).is_none());
}

#[test]
fn corner_inequality() {
    let mut equal = (0, 0);
    let mut all = random_instances(600, 11);
    all.extend(library::builtin().into_iter().map(|i| i.complex));
    for cx in &all {
        let pieces = check(cx);
        if pieces.iter().any(|p| p.chi_x < r(0, 1)) {
            continue;
        }
        let chi_y = cx.chi_cornered();
        assert!(chi_y <= cx.chi_bar());
        let outside: Rational64 = pieces.iter().filter(|p| p.side == Side::OutY).map(|p| p.chi_x).sum();
        assert_eq!(chi_y == cx.chi_bar(), outside == r(0, 1));
        if chi_y == cx.chi_bar() {
            equal.0 += 1;
        } else {
            equal.1 += 1;
        }
    }
    assert!(equal.0 > 0 && equal.1 > 0, "{equal:?}");
}

#[test]
fn pieces_in_pants_meet_boundaries() {
    let (mut octagons, mut annuli) = (0, 0);
    for a in 0..=6usize {
        for b in 0..=6usize {
            for c in 0..=6usize {
                if (a + b + c) % 2 == 1 {
                    continue;
                }
                for inside in [true, false] {
                    let Some(cx) = pants([a, b, c], inside) else { continue };
                    for p in check(&cx) {
                        match p.kind {
                            PieceKind::Gon(4) => {
                                octagons += 1;
                                assert_eq!(p.corner_holes.len(), 3, "{a} {b} {c}");
                            }
                            PieceKind::RectangularAnnulus => {
                                annuli += 1;
                                assert_eq!(p.corner_holes.len(), 2, "{a} {b} {c}");
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    assert!(octagons > 0 && annuli > 0, "{octagons} {annuli}");
}

// max over arcs of c of the min over arcs of the boundary
fn window_distance(inst: &library::Instance) -> Option<u32> {
    inst.curve_arcs
        .iter()
        .map(|a| inst.boundary_arcs.iter().map(|b| projection_distance(a, b)).min())
        .max()
        .flatten()
}

#[test]
fn containment_on_library() {
    let mut seen = [false; 2];
    for inst in library::builtin() {
        let Some(d) = window_distance(&inst) else { continue };
        for a in &inst.curve_arcs {
            for b in &inst.boundary_arcs {
                assert!(arcs_disjoint(a, b).unwrap(), "{}", inst.name);
            }
        }
        let pieces = check(&inst.complex);
        let inside = || pieces.iter().filter(|p| p.side == Side::InY);
        match d {
            1 => {
                seen[0] = true;
                assert!(inside().any(|p| p.chi_x >= r(1, 1)), "{}", inst.name);
            }
            2 => {
                seen[1] = true;
                assert!(inside().any(|p| p.kind == PieceKind::RectangularPants), "{}", inst.name);
            }
            _ => {}
        }
    }
    assert_eq!(seen, [true, true]);
}
