use std::path::PathBuf;

use pants_core::lamination::SurfaceSpec;
use pants_core::pants::audit::{self, LipschitzConfig, Verdict};
use pants_core::pants::{CurveCatalog, MulticurveQ, PantsGraph};

fn cache_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("catalogs")
}

// With two windows a single move can shift the projection by two, so
// paths are resolved only after several steps.
#[test]
fn lipschitz_on_six_punctures() {
    let s = SurfaceSpec::new(6).unwrap();
    let cat = CurveCatalog::load_or_build(&cache_dir(), s, 3).unwrap();
    let g = PantsGraph::new(&cat);
    let q = MulticurveQ::standard(s, &[(1, 3)]).unwrap();
    let cfg = LipschitzConfig { starts: 60, max_len: 5, seed: 7 };
    let report = audit::lipschitz_audit(&g, &q, &cfg).unwrap();
    let deeper: usize = report.paths.iter().map(|r| r.paths_by_length[1..].iter().sum::<usize>()).sum();
    eprintln!("{:?} deeper={deeper}", report.counts);
    assert!(deeper > 0);
    assert_eq!(report.verdict, Verdict::CorroboratedComplete);
}

#[test]
fn flat_audit_small_radius() {
    let q = MulticurveQ::standard(SurfaceSpec::new(6).unwrap(), &[(1, 3)]).unwrap();
    let cat = audit::flat_catalog(&q, 1, 3).unwrap();
    let g = PantsGraph::new(&cat);
    let report = audit::flat_audit(&g, &q, 1).unwrap();
    assert_eq!(report.pairs.len(), 36);
    assert_eq!(report.verdict, Verdict::CorroboratedComplete);
}

#[test]
fn flat_grid_must_fit_the_catalog() {
    let q = MulticurveQ::standard(SurfaceSpec::new(6).unwrap(), &[(1, 3)]).unwrap();
    let cat = CurveCatalog::load_or_build(&cache_dir(), q.surface, 3).unwrap();
    let g = PantsGraph::new(&cat);
    assert!(audit::flat_audit(&g, &q, 3).is_err());
}
