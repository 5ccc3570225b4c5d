use std::path::{Path, PathBuf};

use ruled4::check::{check_scene, Verdict};
use ruled4::scene::{Mode, SceneConfig, SceneError};
use ruled4::{load_scene, sample_grid};
use ruled4_core::dual::DualNorm;

fn scene(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenes").join(name)
}

fn verdict(report: &ruled4::CheckReport, name: &str) -> Verdict {
    report.claim(name).unwrap_or_else(|| panic!("no claim {name}")).verdict
}

#[test]
fn example1_fixture_loads_with_defaults() {
    let cfg = SceneConfig::load(&scene("example1.json")).unwrap();
    assert_eq!(cfg.mode, Mode::Type1);
    assert_eq!(cfg.curves["alpha"], ["3*t+7", "-5*t+1", "t", "-4*t-1"].map(String::from));
    assert_eq!(cfg.options.i, [0.0, 0.0, 0.0, 1.0]);
    assert_eq!(cfg.options.dual_norm, DualNorm::Lorentz);
    assert!(cfg.options.strict);
}

#[test]
fn every_shipped_scene_loads() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenes");
    let mut n = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        load_scene(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        n += 1;
    }
    assert!(n >= 6);
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(load_scene(&scene("nope.json")), Err(SceneError::Io { .. })));
}

#[test]
fn example1_passes_every_claim() {
    let report = check_scene(&load_scene(&scene("example1.json")).unwrap());
    assert!(report.ok());
    for c in &report.claims {
        assert_eq!(c.verdict, Verdict::Pass, "{}", c.name);
    }
    assert_eq!(report.claim("minimality").unwrap().computed, "minimal");
    assert_eq!(report.claim("laplace-zero").unwrap().computed, "zero");
    assert!(report.ledger.discrepancies().next().is_none());
}

#[test]
fn example_e1_is_flat_but_not_minimal() {
    let report = check_scene(&load_scene(&scene("exampleE1.json")).unwrap());
    assert!(report.ok());
    assert_eq!(verdict(&report, "flatness"), Verdict::Pass);
    assert_eq!(verdict(&report, "h11-reference"), Verdict::Pass);
    assert_eq!(verdict(&report, "minimality"), Verdict::Discrepancy);
    assert_eq!(verdict(&report, "laplace-zero"), Verdict::Discrepancy);
    assert_eq!(verdict(&report, "director-constraint"), Verdict::Discrepancy);
    for id in ["minimality-claim", "laplace-zero-claim", "director-constraint", "laplace-closed-form-factor"] {
        assert!(report.ledger.get(id).is_some(), "{id}");
    }
}

#[test]
fn perturbed_scene_records_not_minimal_without_failing() {
    let report = check_scene(&load_scene(&scene("perturbed_example1.json")).unwrap());
    assert!(report.ok());
    let m = report.claim("minimality").unwrap();
    assert_eq!(m.verdict, Verdict::Pass);
    assert_eq!(m.paper_claim, "none");
    assert_eq!(m.computed, "not-minimal");
}

#[test]
fn equal_directors_flag_every_vertex() {
    let s = load_scene(&scene("equal_directors.json")).unwrap();
    let mesh = sample_grid(&s.surface, &s.config.axes());
    assert_eq!(mesh.len(), 27);
    for v in &mesh.vertices {
        assert!(v.flags.contains(&"degenerate-normal".to_string()));
        assert!(v.k.is_nan() && v.h.is_nan() && v.lb_norm.is_nan());
    }
    let report = check_scene(&s);
    assert_eq!(report.claim("minimality").unwrap().computed, "undetermined");
}

#[test]
fn hyperplane_is_flat_minimal_and_harmonic() {
    let s = load_scene(&scene("hyperplane.json")).unwrap();
    let mesh = sample_grid(&s.surface, &s.config.axes());
    for v in &mesh.vertices {
        assert_eq!((v.k, v.h, v.lb_norm), (0.0, 0.0, 0.0));
        assert_eq!(v.position[3], 0.0);
    }
    assert!(check_scene(&s).ok());
}

#[test]
fn ex3_findings() {
    let report = check_scene(&load_scene(&scene("ex3.json")).unwrap());
    assert!(report.ok());
    assert_eq!(verdict(&report, "hypotheses"), Verdict::Discrepancy);
    assert_eq!(verdict(&report, "ruling-components"), Verdict::Discrepancy);
    assert_eq!(verdict(&report, "base-curve-i-probe"), Verdict::Discrepancy);
    let probe = &report.ledger.get("base-curve-i-probe").unwrap().detail;
    assert_eq!(probe["candidates"].as_array().unwrap().len(), 8);
    assert!(probe["matched"].is_null());
}

#[test]
fn mesh_vertex_count_is_the_product_of_resolutions() {
    let mut cfg = SceneConfig::load(&scene("example1.json")).unwrap();
    for (k, n) in [2, 3, 4].into_iter().enumerate() {
        cfg.grid[k].samples = n;
    }
    let s = cfg.build().unwrap();
    let mesh = sample_grid(&s.surface, &s.config.axes());
    assert_eq!(mesh.len(), 24);
    assert_eq!(mesh.dims, [2, 3, 4]);
    assert_eq!(mesh.vertices[0].params, [-1.0, -1.0, -1.0]);
    assert_eq!(mesh.vertices[23].params, [1.0, 1.0, 1.0]);
    // first parameter slowest
    assert_eq!(mesh.vertices[12].params[0], 1.0);
    assert_eq!(mesh.vertices[11].params[0], -1.0);
}
