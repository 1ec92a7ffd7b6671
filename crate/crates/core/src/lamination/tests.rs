use super::*;

fn sp(n: usize) -> SurfaceSpec {
    SurfaceSpec::new(n).unwrap()
}

fn round(n: usize, lo: usize, hi: usize) -> CurveCoords {
    CurveCoords::round(sp(n), lo, hi).unwrap()
}

fn lcg(seed: &mut u64) -> u64 {
    *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    *seed >> 33
}

fn random_curve(n: usize, steps: usize, seed: &mut u64) -> CurveCoords {
    let m = n - 1;
    let mut c = round(n, 1, 2);
    for _ in 0..steps {
        let i = 1 + (lcg(seed) % (m as u64 - 1)) as i32;
        let g = if lcg(seed).is_multiple_of(2) { i } else { -i };
        c = apply_generator(&c, Generator(g)).unwrap();
    }
    c
}

#[test]
fn surface_bounds() {
    assert!(SurfaceSpec::new(3).is_err());
    assert_eq!(sp(6).coord_len(), 6);
    assert_eq!(sp(6).complexity(), 3);
}

#[test]
fn zero_and_wrong_length_rejected() {
    assert_eq!(CurveCoords::new(sp(5), vec![0; 4]), Err(LaminationError::Zero));
    assert!(matches!(CurveCoords::new(sp(5), vec![1; 3]), Err(LaminationError::WrongLength { .. })));
}

#[test]
fn round_curve_examples() {
    let c = round(5, 1, 2);
    assert_eq!(apply_generator(&c, Generator(1)).unwrap(), c);
    let moved = apply_generator(&round(5, 2, 3), Generator(1)).unwrap();
    let expect = CurveCoords::from_word(sp(5), &CrossingWord::round(2, 3).apply(Generator(1))).unwrap();
    assert_eq!(moved, expect);
    assert_eq!(components(&moved)[0].1, 2);
    assert!(apply_generator(&c, Generator(4)).is_err());
    assert!(apply_generator(&c, Generator(0)).is_err());
}

#[test]
fn components_of_disjoint_union() {
    let s = sp(7);
    let u = CurveCoords::from_words(s, &[CrossingWord::round(1, 2), CrossingWord::round(3, 4)]).unwrap();
    let comps = components(&u);
    assert_eq!(comps.len(), 2);
    let mut got: Vec<_> = comps.iter().map(|(c, k)| (c.clone(), *k)).collect();
    got.sort();
    let mut want = vec![(round(7, 1, 2), 2), (round(7, 3, 4), 2)];
    want.sort();
    assert_eq!(got, want);
    assert!(is_reduced_multicurve(&u));
}

#[test]
fn essential_counts() {
    assert!(is_essential(&round(5, 1, 2), sp(5)).unwrap());
    assert!(is_essential(&round(5, 1, 3), sp(5)).unwrap());
    assert!(is_essential(&round(5, 2, 4), sp(5)).unwrap());
    // the round curve around all disk punctures is boundary parallel
    assert_eq!(CurveCoords::round(sp(5), 1, 4), Err(LaminationError::Zero));
}

#[test]
fn braid_relations_hold() {
    let mut seed = 11;
    for n in [5, 6, 7] {
        let m = n - 1;
        for _ in 0..40 {
            let c = random_curve(n, 5, &mut seed);
            for i in 1..m as i32 - 1 {
                let l = MCGWord::from_indices(&[i, i + 1, i]).apply(&c).unwrap();
                let r = MCGWord::from_indices(&[i + 1, i, i + 1]).apply(&c).unwrap();
                assert_eq!(l, r);
            }
            for i in 1..m as i32 {
                for j in i + 2..m as i32 {
                    let l = MCGWord::from_indices(&[i, j]).apply(&c).unwrap();
                    let r = MCGWord::from_indices(&[j, i]).apply(&c).unwrap();
                    assert_eq!(l, r);
                }
            }
            // the full twist is the boundary twist, trivial on curves
            let mut full = Vec::new();
            for _ in 0..m {
                full.extend(1..m as i32);
            }
            assert_eq!(MCGWord::from_indices(&full).apply(&c).unwrap(), c);
        }
    }
}

#[test]
fn inverse_law() {
    let mut seed = 3;
    for n in [4, 5, 6, 7] {
        for _ in 0..50 {
            let c = random_curve(n, 6, &mut seed);
            for i in 1..n as i32 - 1 {
                for g in [Generator(i), Generator(-i)] {
                    let there = apply_generator(&c, g).unwrap();
                    assert_eq!(apply_generator(&there, g.inverse()).unwrap(), c);
                }
            }
        }
    }
}

#[test]
fn trace_round_trip() {
    let mut seed = 17;
    for n in [4, 5, 6, 7] {
        for _ in 0..100 {
            let c = random_curve(n, 8, &mut seed);
            let w = c.word().unwrap();
            assert_eq!(CurveCoords::from_word(c.surface(), &w).unwrap(), c);
        }
    }
}

#[test]
fn intersection_examples() {
    let a = round(5, 1, 2);
    assert_eq!(intersection_number(&a, &a).unwrap(), 0);
    assert_eq!(intersection_number(&round(7, 1, 2), &round(7, 3, 4)).unwrap(), 0);
    assert_eq!(intersection_number(&a, &round(5, 2, 3)).unwrap(), 2);
    assert_eq!(intersection_number(&round(5, 1, 3), &round(5, 2, 4)).unwrap(), 2);
    assert_eq!(intersection_number(&round(5, 2, 3), &round(5, 1, 3)).unwrap(), 0);
}

#[test]
fn intersection_matches_oracle() {
    let mut seed = 23;
    for n in [5, 6] {
        let m = n - 1;
        let mut curves: Vec<CurveCoords> = (0..150).map(|_| random_curve(n, 4, &mut seed)).collect();
        curves.retain(|c| c.axis_crossings() <= 6);
        curves.sort();
        curves.dedup();
        for a in &curves {
            for b in &curves {
                let o = oracle::brute_intersection(&a.word().unwrap(), &b.word().unwrap(), m, 500_000);
                let Some(o) = o else { continue };
                assert_eq!(intersection_number(a, b).unwrap(), o, "{a} {b}");
            }
        }
    }
}

#[test]
fn intersection_symmetric() {
    let mut seed = 29;
    for n in [5, 6, 7] {
        let curves: Vec<CurveCoords> = (0..25).map(|_| random_curve(n, 7, &mut seed)).collect();
        for a in &curves {
            for b in &curves {
                let x = intersection_number(a, b).unwrap();
                assert_eq!(x, intersection_number(b, a).unwrap());
                assert!(x >= 0 && x % 2 == 0);
            }
        }
    }
}

#[test]
fn descent_shortens_every_block() {
    let mut seed = 31;
    for _ in 0..50 {
        let c = random_curve(6, 9, &mut seed);
        let nf = NormalForm::of(&c).unwrap();
        let image = nf.word.apply(&c).unwrap();
        assert_eq!(image, round(6, 1, nf.split));
    }
}

mod windows {
    use super::*;
    use crate::farey::{self, Slope};
    use crate::lamination::{Blocks, StandardWindow};
    use crate::window::partner;

    fn win(n: usize, cuts: [usize; 4]) -> StandardWindow {
        let [a, b, c, d] = cuts;
        StandardWindow::new(Blocks::new(sp(n), a, b, c, d).unwrap()).unwrap()
    }

    fn sl(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn axes_have_frame_slopes() {
        let w = win(5, [1, 1, 2, 3]);
        assert_eq!(w.slope(&w.u).unwrap(), sl(0, 1));
        assert_eq!(w.slope(&w.v).unwrap(), sl(1, 0));
        assert_eq!(w.slope(&w.w).unwrap(), sl(1, 1));
        let t = w.twist(0, true).apply(&w.u).unwrap();
        assert_eq!(t, w.u);
        let t = w.twist(1, true).apply(&w.u).unwrap();
        assert_eq!(farey::distance(w.slope(&t).unwrap(), sl(0, 1)), 2);
        // a half twist exchanging the single punctures of B2 and B3
        let h = apply_generator(&w.u, Generator(2)).unwrap();
        assert_eq!(farey::distance(w.slope(&h).unwrap(), sl(0, 1)), 1);
    }

    fn windows() -> Vec<StandardWindow> {
        vec![
            win(5, [1, 1, 2, 3]),
            win(5, [1, 2, 3, 4]),
            win(6, [1, 2, 3, 4]),
            win(6, [2, 2, 3, 4]),
            win(6, [1, 3, 4, 5]),
            win(7, [2, 3, 5, 6]),
        ]
    }

    #[test]
    fn slope_round_trip_and_parity_dictionary() {
        let slopes = farey::slopes_up_to(3).unwrap();
        for w in windows() {
            let m = w.surface().disk_punctures();
            let [b1, b2, b3] = w.blocks.blocks;
            // block ids in the pillowcase: B1 = 0, B2 = 1, B3 = 3, outer = 2
            let id_of = |j: usize| {
                if (b1.0..=b1.1).contains(&j) {
                    0u8
                } else if (b2.0..=b2.1).contains(&j) {
                    1
                } else if (b3.0..=b3.1).contains(&j) {
                    3
                } else {
                    2
                }
            };
            for &s in &slopes {
                let c = w.curve(s).unwrap();
                assert_eq!(w.slope(&c).unwrap(), s, "{:?}", w.blocks);
                let inside = c.word().unwrap().enclosed(m);
                let mut ids: Vec<u8> = inside.iter().map(|&j| id_of(j)).collect();
                ids.dedup();
                assert_eq!(ids.len(), 2);
                assert_eq!(partner(ids[0], s), ids[1], "{s}");
            }
        }
    }

    #[test]
    fn intersection_is_twice_det_in_windows() {
        let slopes = farey::slopes_up_to(2).unwrap();
        for w in windows().into_iter().take(4) {
            let curves: Vec<CurveCoords> = slopes.iter().map(|&s| w.curve(s).unwrap()).collect();
            for (i, a) in curves.iter().enumerate() {
                for (j, b) in curves.iter().enumerate() {
                    let expect = 2 * slopes[i].det(slopes[j]).abs();
                    assert_eq!(intersection_number(a, b).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn curves_outside_rejected() {
        let w = win(6, [1, 2, 3, 4]);
        let out = round(6, 3, 5);
        assert!(!w.contains(&out).unwrap());
        assert_eq!(w.slope(&out), Err(LaminationError::NotInWindow));
        // crosses the block round around 1, 2
        let cross = round(6, 2, 3);
        assert!(!w.contains(&cross).unwrap());
    }
}
