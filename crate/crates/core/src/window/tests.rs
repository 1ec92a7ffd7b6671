use super::oracle::drawn_crossings;
use super::rules::RuleTable;
use super::*;

const SPHERE: WindowKind = WindowKind::FourPuncturedSphere;
const TORUS: WindowKind = WindowKind::OncePuncturedTorus;

fn sl(p: i64, q: i64) -> Slope {
    Slope::new(p, q).unwrap()
}

fn shared(a: &[u8], b: &[u8]) -> usize {
    a.iter().filter(|c| b.contains(c)).count()
}

#[test]
fn frozen_rules_match_regeneration() {
    let fresh = RuleTable::generate(4);
    if std::env::var_os("REGENERATE_WINDOW_RULES").is_some() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/window_rules.txt");
        std::fs::write(path, fresh.render()).unwrap();
    }
    assert_eq!(fresh.render(), rules::table().render());
}

#[test]
fn rules_agree_with_oracle_on_larger_slopes() {
    let arcs = enumerate_arcs(SPHERE, 6).unwrap();
    for (i, a) in arcs.iter().enumerate().step_by(3) {
        for b in &arcs[i..] {
            assert_eq!(arcs_disjoint(a, b).unwrap(), drawn_crossings(a, b) == 0, "{a:?} {b:?}");
        }
    }
}

#[test]
fn seam_counts_match_lifted_line_count() {
    let arcs: Vec<WindowArc> = enumerate_arcs(SPHERE, 5).unwrap().into_iter().filter(|a| a.is_seam()).collect();
    for a in &arcs {
        for b in &arcs {
            if a.slope() == b.slope() {
                continue;
            }
            let det = a.slope().det(b.slope()).abs();
            let k = shared(&a.ends(), &b.ends()) as i64;
            assert_eq!(2 * drawn_crossings(a, b), det - k, "{a:?} {b:?}");
        }
    }
}

#[test]
fn torus_waves_meet_det_minus_one_times() {
    for a in enumerate_arcs(TORUS, 5).unwrap() {
        for b in enumerate_arcs(TORUS, 5).unwrap() {
            if a != b {
                assert_eq!(drawn_crossings(&a, &b), a.slope().det(b.slope()).abs() - 1);
            }
        }
    }
}

#[test]
fn curve_intersection_is_twice_det_on_sphere() {
    let a = WindowCurve { window: SPHERE, slope: sl(1, 0) };
    let b = WindowCurve { window: SPHERE, slope: sl(3, 2) };
    assert_eq!(window_intersection(&a, &b).unwrap(), 4);
    let t = WindowCurve { window: TORUS, slope: sl(2, 3) };
    assert_eq!(window_intersection(&a, &t), Err(WindowError::Mismatch));
}

#[test]
fn parity_pairs() {
    assert_eq!(partner(0, sl(1, 0)), 2);
    assert_eq!(partner(0, sl(0, 1)), 1);
    assert_eq!(partner(1, sl(1, 1)), 2);
    assert!(WindowArc::seam(sl(0, 1), 0, 2).is_err());
}

#[test]
fn nonisotopic_seams_with_shared_ends() {
    // same endpoints, disjoint, projections two apart
    let a = WindowArc::seam(sl(0, 1), 0, 1).unwrap();
    let b = WindowArc::seam(sl(2, 1), 0, 1).unwrap();
    assert!(arcs_disjoint(&a, &b).unwrap());
    let (pa, pb) = (project_arc(&a), project_arc(&b));
    assert_eq!(window_intersection(&pa, &pb).unwrap(), 4);
    assert_eq!(projection_distance(&a, &b), 2);
}

/// Disjoint arcs project within distance two, with equality only for
/// nonisotopic seams sharing both endpoints.
pub(crate) fn check_diameter(window: WindowKind, bound: i64) -> (usize, usize) {
    let arcs = enumerate_arcs(window, bound).unwrap();
    let (mut pairs, mut twos) = (0, 0);
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            if !arcs_disjoint(a, b).unwrap() {
                continue;
            }
            pairs += 1;
            let d = projection_distance(a, b);
            let exceptional = a.is_seam()
                && b.is_seam()
                && a.ends() == b.ends()
                && a.slope() != b.slope();
            match window {
                TORUS => assert!(d <= 1, "{a:?} {b:?}"),
                SPHERE => {
                    assert!(d <= 2, "{a:?} {b:?}");
                    assert_eq!(d == 2, exceptional, "{a:?} {b:?}");
                }
            }
            if d == 2 {
                twos += 1;
                let i = window_intersection(&project_arc(a), &project_arc(b)).unwrap();
                assert_eq!(i, 4);
            }
        }
    }
    (pairs, twos)
}

#[test]
fn disjoint_arcs_project_close() {
    let (pairs, twos) = check_diameter(SPHERE, 6);
    assert!(pairs > 0 && twos > 0);
    check_diameter(TORUS, 6);
}

fn small_seams() -> Vec<WindowArc> {
    enumerate_arcs(SPHERE, 2).unwrap().into_iter().filter(|a| a.is_seam()).collect()
}

#[test]
fn rectangular_annulus_arcs() {
    let arcs = enumerate_arcs(SPHERE, 8).unwrap();
    let seams = small_seams();
    let mut checked = 0;
    for alpha in &seams {
        for beta in &seams {
            if alpha >= beta || alpha.ends() != beta.ends() || !arcs_disjoint(alpha, beta).unwrap() {
                continue;
            }
            checked += 1;
            let ends = alpha.ends();
            let free: Vec<&WindowArc> = arcs
                .iter()
                .filter(|d| *d != alpha && *d != beta)
                .filter(|d| arcs_disjoint(d, alpha).unwrap() && arcs_disjoint(d, beta).unwrap())
                .collect();
            // two seams and two waves on each side of the loop alpha + beta
            assert_eq!(free.len(), 8, "{alpha:?} {beta:?}: {free:?}");
            for side in (0..4u8).filter(|c| !ends.contains(c)) {
                let mine: Vec<&&WindowArc> = free
                    .iter()
                    .filter(|d| match d.class {
                        ArcClass::Seam { endpoints, .. } => endpoints.contains(&side),
                        ArcClass::Wave { .. } => d.core().unwrap().1 == side,
                    })
                    .collect();
                assert_eq!(mine.len(), 4);
                assert_eq!(mine.iter().filter(|d| d.is_seam()).count(), 2);
                let mut class = vec![*alpha, *beta];
                class.extend(mine.iter().map(|d| ***d));
                for d in &class {
                    for e in &class {
                        assert!(projection_distance(d, e) <= 2);
                    }
                    if d != alpha && d != beta {
                        assert!(projection_distance(d, alpha) <= 1);
                        assert!(projection_distance(d, beta) <= 1);
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn rectangular_pants_arcs() {
    let arcs = enumerate_arcs(SPHERE, 8).unwrap();
    let waves: Vec<&WindowArc> = arcs.iter().filter(|a| !a.is_seam()).collect();
    for alpha in small_seams() {
        let ends = alpha.ends();
        let inside: Vec<&WindowArc> = arcs
            .iter()
            .filter(|d| **d != alpha && d.ends().iter().all(|c| ends.contains(c)))
            .filter(|d| arcs_disjoint(d, &alpha).unwrap())
            .collect();
        let seams: Vec<&&WindowArc> = inside.iter().filter(|d| d.is_seam()).collect();
        assert!(!seams.is_empty());
        for dp in &seams {
            // arcs of pants decompositions one elementary move apart meet at
            // most twice
            for d in inside.iter().filter(|d| drawn_crossings(d, dp) <= 2) {
                assert!(projection_distance(d, dp) <= 2, "{alpha:?} {d:?} {dp:?}");
                if !arcs_disjoint(d, dp).unwrap() {
                    let witness = waves
                        .iter()
                        .any(|e| arcs_disjoint(e, d).unwrap() && arcs_disjoint(e, dp).unwrap());
                    assert!(witness, "{alpha:?} {d:?} {dp:?}");
                }
            }
        }
    }
}
