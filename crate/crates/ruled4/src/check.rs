//! Claim checks over a sampled scene.
//!
//! Internal checks (`flatness`, `gauss-map-consistency`, `mean-curvature-paths`,
//! `laplace-closed-form`, `metric-closed-forms`, `h11-reference`) can fail and
//! make the run exit non-zero. Findings about published claims are reported as
//! `discrepancy` and recorded in the ledger instead.

use ruled4_core::construct::probe_i;
use ruled4_core::discrepancy::{Ledger, Status};
use ruled4_core::dsl::{parse_expr, Curve, CurveSpec};
use ruled4_core::linalg::{det3, matmul3, max_abs_diff3, IDENTITY3};
use ruled4_core::lorentz::gram;
use ruled4_core::surface::{
    compare_printed_gauss_components, inverse_metric, second_form, ComponentVerdict, SurfaceKind,
};
use ruled4_core::{tolerance, Vec4};
use serde::Serialize;
use serde_json::json;

use crate::mesh::{sample_grid, Mesh};
use crate::scene::{Mode, Scene};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Discrepancy,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub name: String,
    pub paper_claim: String,
    pub computed: String,
    pub verdict: Verdict,
    pub detail: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub scene: String,
    pub claims: Vec<Claim>,
    pub ledger: Ledger,
}

impl CheckReport {
    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    /// True when no internal check failed.
    pub fn ok(&self) -> bool {
        self.claims.iter().all(|c| c.verdict != Verdict::Fail)
    }
}

/// Absolute tolerance for ΔΦ = 0.
pub const LAPLACE_ZERO: f64 = 1e-10;
/// Closed forms against the general path, relative to max(1, |value|).
pub const CLOSED_FORM: f64 = 1e-8;
pub const H11_REFERENCE: f64 = 1e-10;
/// Ruling components against a reference, relative to max(1, |value|).
pub const RULING: f64 = 1e-12;

fn claim(
    name: &str,
    paper_claim: impl Into<String>,
    computed: impl Into<String>,
    verdict: Verdict,
    detail: serde_json::Value,
) -> Claim {
    Claim {
        name: name.into(),
        paper_claim: paper_claim.into(),
        computed: computed.into(),
        verdict,
        detail,
    }
}

fn pass_or(ok: bool, otherwise: Verdict) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        otherwise
    }
}

fn scaled(diff: f64, value: f64) -> f64 {
    diff / value.abs().max(1.0)
}

struct Worst {
    value: f64,
    at: Option<[f64; 3]>,
}

impl Worst {
    fn new() -> Self {
        Worst { value: 0.0, at: None }
    }

    fn see(&mut self, v: f64, at: [f64; 3]) {
        if v > self.value || self.at.is_none() || v.is_nan() {
            self.value = v;
            self.at = Some(at);
        }
    }

    fn json(&self) -> serde_json::Value {
        json!({"max": self.value, "at": self.at})
    }
}

pub fn check_scene(scene: &Scene) -> CheckReport {
    let mesh = sample_grid(&scene.surface, &scene.config.axes());
    check_mesh(scene, &mesh)
}

pub fn check_mesh(scene: &Scene, mesh: &Mesh) -> CheckReport {
    let cfg = &scene.config;
    let h = &scene.surface;
    let mut claims = Vec::new();
    let mut ledger = Ledger::new();
    let evaluated = mesh.reports().count();
    let skipped = mesh.len() - evaluated;

    // flatness
    let mut k_worst = Worst::new();
    let mut h_rank_ok = true;
    for r in mesh.reports() {
        k_worst.see(r.k.abs(), r.point);
        h_rank_ok &= r.h[1][1] == 0.0 && r.h[1][2] == 0.0 && r.h[2][2] == 0.0;
    }
    let flat = k_worst.value <= tolerance::FLAT && h_rank_ok;
    claims.push(claim(
        "flatness",
        match cfg.claims.flat {
            Some(false) => "not flat",
            _ => "K = 0",
        },
        format!("max |K| = {:e} over {evaluated} points", k_worst.value),
        pass_or(flat, Verdict::Fail),
        json!({"k": k_worst.json(), "h_rank_two": h_rank_ok, "degenerate_points": skipped}),
    ));

    // Gauss map and metric consistency need the tangent frame again
    let mut orth = Worst::new();
    let mut lagrange = Worst::new();
    let mut det_closed = Worst::new();
    let mut inverse = Worst::new();
    let mut frames = Vec::new();
    for r in mesh.reports() {
        let [x, y, z] = r.point;
        let Ok(f) = h.frame(x, y, z) else { continue };
        let g = &r.gauss;
        let scale = f.tangents().iter().map(|t| t.euclid_norm()).fold(1.0, f64::max);
        for t in f.tangents() {
            orth.see(g.g.dot(&t).abs() / scale, r.point);
        }
        let gl = det3(&gram(&f.phi_x, &f.beta(), &f.gamma()));
        let nn = g.n_raw.quad();
        lagrange.see((nn + gl).abs() / nn.abs().max(gl.abs()).max(1e-300), r.point);
        if let Some(closed) = r.metric.detg_closed {
            let d = (closed - r.metric.detg).abs() / r.metric.detg.abs().max(1e-300);
            det_closed.see(d, r.point);
        }
        if let Ok(inv) = inverse_metric(&r.metric, h.kind) {
            inverse.see(max_abs_diff3(&matmul3(&inv, &r.metric.g), &IDENTITY3), r.point);
        }
        frames.push((f.phi_x, f.beta(), f.gamma()));
    }
    let tol = tolerance::CONSISTENCY_RELATIVE;
    claims.push(claim(
        "gauss-map-consistency",
        "<G, phi_i> = 0 and <N,N> = -det Gram",
        format!("orthogonality {:e}, Lagrange {:e}", orth.value, lagrange.value),
        pass_or(orth.value <= tol && lagrange.value <= tol, Verdict::Fail),
        json!({"orthogonality": orth.json(), "lagrange_relative": lagrange.json()}),
    ));
    claims.push(claim(
        "metric-closed-forms",
        "closed det g and g^-1 match direct computation",
        format!("det {:e}, inverse {:e}", det_closed.value, inverse.value),
        pass_or(det_closed.value <= tol && inverse.value <= tol, Verdict::Fail),
        json!({"determinant_relative": det_closed.json(), "inverse_times_g": inverse.json()}),
    ));

    // printed Gauss map components
    if !frames.is_empty() {
        let cmp = compare_printed_gauss_components(&frames);
        let all_match = cmp.iter().all(|c| c.verdict == ComponentVerdict::Match);
        let summary: Vec<String> = cmp.iter().map(|c| format!("G{}: {:?}", c.component, c.verdict)).collect();
        ledger.push(
            "gauss-component-signs",
            if all_match { Status::Confirmed } else { Status::Discrepancy },
            &cfg.name,
            "closed-form normal components G1..G4",
            summary.join(", "),
            serde_json::to_value(&cmp).expect("serializable"),
        );
    }

    // mean curvature by shape-operator trace and by the minimality residual
    let mut h_paths = Worst::new();
    for r in mesh.reports() {
        h_paths.see(
            scaled((r.mean_curvature - r.mean_curvature_residual).abs(), r.mean_curvature),
            r.point,
        );
    }
    claims.push(claim(
        "mean-curvature-paths",
        "trace(S)/3 = R/(3 det g D)",
        format!("max deviation {:e}", h_paths.value),
        pass_or(h_paths.value <= CLOSED_FORM, Verdict::Fail),
        h_paths.json(),
    ));

    // Laplace-Beltrami closed forms
    let mut corrected = Worst::new();
    let mut printed = Worst::new();
    let mut printed_seen = 0usize;
    let mut closed_seen = 0usize;
    for r in mesh.reports() {
        let general = r.lb.general;
        if let Some(c) = r.lb.closed_form {
            closed_seen += 1;
            corrected.see(scaled((c - general).max_abs(), general.max_abs()), r.point);
        }
        if let Some(p) = r.lb.closed_form_as_printed {
            printed_seen += 1;
            printed.see(scaled((p - general).max_abs(), general.max_abs()), r.point);
        }
    }
    if closed_seen > 0 {
        claims.push(claim(
            "laplace-closed-form",
            "orthogonal-director closed form equals the general operator",
            format!("max deviation {:e} over {closed_seen} points", corrected.value),
            pass_or(corrected.value <= CLOSED_FORM, Verdict::Fail),
            corrected.json(),
        ));
    }
    if printed_seen > 0 {
        let agrees = printed.value <= CLOSED_FORM;
        ledger.push(
            "laplace-closed-form-factor",
            if agrees { Status::Confirmed } else { Status::Discrepancy },
            &cfg.name,
            "closed form with full P_k derivative term and Q^(3/2)*sqrt(Q) denominator",
            format!("max deviation from the general operator {:e}", printed.value),
            json!({"as_printed": printed.json(), "corrected": corrected.json(), "points": printed_seen}),
        );
    }

    // h11 against a hand-derived value
    let mut h11_detail = serde_json::Value::Null;
    if let Some(reference) = &cfg.reference.h11 {
        let [x, y, z] = reference.at;
        let expected = parse_expr(&reference.value)
            .expect("validated at load")
            .eval::<f64>(0.0)
            .unwrap_or(f64::NAN);
        let (computed, verdict) = match second_form(h, x, y, z) {
            Ok(s) => (s[0][0], pass_or((s[0][0] - expected).abs() <= H11_REFERENCE, Verdict::Fail)),
            Err(_) => (f64::NAN, Verdict::Fail),
        };
        h11_detail = json!({"at": reference.at, "computed": computed, "reference": expected,
            "reference_expr": reference.value});
        claims.push(claim(
            "h11-reference",
            format!("h11 = {}", reference.value),
            format!("h11 = {computed:?}"),
            verdict,
            h11_detail.clone(),
        ));
    }

    // director constraints
    if h.kind != SurfaceKind::Unconstrained {
        let space = match h.kind {
            SurfaceKind::Type1 => "beta, gamma in de Sitter space",
            _ => "beta, gamma in hyperbolic space",
        };
        let ok = h.warnings.is_empty();
        let detail = serde_json::to_value(&h.director_reports).expect("serializable");
        if !ok {
            ledger.push(
                "director-constraint",
                Status::Discrepancy,
                &cfg.name,
                space,
                h.warnings.join("; "),
                detail.clone(),
            );
        }
        claims.push(claim(
            "director-constraint",
            space,
            if ok { "satisfied".to_string() } else { h.warnings.join("; ") },
            pass_or(ok, Verdict::Discrepancy),
            detail,
        ));
    }

    // minimality
    let mut min_worst = Worst::new();
    for r in mesh.reports() {
        min_worst.see(r.minimality.normalized, r.point);
    }
    let minimal = evaluated > 0 && min_worst.value <= tolerance::MINIMAL;
    let computed = match (evaluated, minimal) {
        (0, _) => "undetermined",
        (_, true) => "minimal",
        _ => "not-minimal",
    };
    let detail = json!({"normalized_residual": min_worst.json(), "h11": h11_detail});
    let (claimed, verdict) = match cfg.claims.minimal {
        None => ("none".to_string(), Verdict::Pass),
        Some(c) => (
            if c { "minimal" } else { "not-minimal" }.to_string(),
            pass_or(c == minimal, Verdict::Discrepancy),
        ),
    };
    if verdict == Verdict::Discrepancy {
        ledger.push("minimality-claim", Status::Discrepancy, &cfg.name, &claimed, computed, detail.clone());
    }
    claims.push(claim("minimality", claimed, computed, verdict, detail));

    // Laplace-Beltrami zero
    let mut lb_worst = Worst::new();
    for r in mesh.reports() {
        lb_worst.see(r.lb.general.max_abs(), r.point);
    }
    let lb_zero = evaluated > 0 && lb_worst.value <= LAPLACE_ZERO;
    let computed = match (evaluated, lb_zero) {
        (0, _) => "undetermined",
        (_, true) => "zero",
        _ => "nonzero",
    };
    let (claimed, verdict) = match cfg.claims.laplace_zero {
        None => ("none".to_string(), Verdict::Pass),
        Some(c) => (
            if c { "zero" } else { "nonzero" }.to_string(),
            pass_or(c == lb_zero, Verdict::Discrepancy),
        ),
    };
    if verdict == Verdict::Discrepancy {
        ledger.push("laplace-zero-claim", Status::Discrepancy, &cfg.name, &claimed, computed, lb_worst.json());
    }
    claims.push(claim("laplace-zero", claimed, computed, verdict, lb_worst.json()));

    if matches!(cfg.mode, Mode::Octonion | Mode::DualOctonion) {
        construction_claims(scene, &mut claims, &mut ledger);
    }

    CheckReport {
        scene: cfg.name.clone(),
        claims,
        ledger,
    }
}

fn construction_claims(scene: &Scene, claims: &mut Vec<Claim>, ledger: &mut Ledger) {
    let cfg = &scene.config;
    let h = &scene.surface;

    if let Some(report) = &scene.hypotheses {
        let names = match cfg.mode {
            Mode::Octonion => ["w", "v"],
            _ => ["a", "b"],
        };
        let warnings = report.warnings(names);
        let ok = warnings.is_empty();
        let detail = serde_json::to_value(report).expect("serializable");
        let claimed = "unit directors orthogonal to the base data";
        if !ok {
            ledger.push("hypotheses", Status::Discrepancy, &cfg.name, claimed, warnings.join("; "), detail.clone());
        }
        claims.push(claim(
            "hypotheses",
            claimed,
            if ok { "satisfied".to_string() } else { warnings.join("; ") },
            pass_or(ok, Verdict::Discrepancy),
            detail,
        ));
    }

    let axes = cfg.axes();
    if let (Some(rs), Some(rr)) = (
        cfg.reference_curve(&cfg.reference.ruling_s),
        cfg.reference_curve(&cfg.reference.ruling_r),
    ) {
        let mut worst = [0.0_f64; 4];
        let mut at: [Option<[f64; 3]>; 4] = [None; 4];
        for &t in &axes[0] {
            let (Ok(b), Ok(c), Ok(cs), Ok(cr)) = (h.beta.jet(t), h.gamma.jet(t), rs.value(t), rr.value(t))
            else {
                continue;
            };
            for &s in &axes[1] {
                for &r in &axes[2] {
                    let ruling = s * b.p + r * c.p;
                    let expected = s * cs + r * cr;
                    for k in 0..4 {
                        let d = scaled((ruling[k] - expected[k]).abs(), expected[k]);
                        if d > worst[k] || at[k].is_none() {
                            worst[k] = d;
                            at[k] = Some([t, s, r]);
                        }
                    }
                }
            }
        }
        let bad: Vec<usize> = (0..4).filter(|&k| worst[k].is_nan() || worst[k] > RULING).collect();
        let computed = if bad.is_empty() {
            "all components match".to_string()
        } else {
            format!("components {bad:?} differ (0-based)")
        };
        let detail = json!({"max_deviation": worst, "at": at, "mismatched": bad});
        let claimed = "s*beta + r*gamma = s*ruling_s + r*ruling_r";
        if !bad.is_empty() {
            ledger.push("ruling-components", Status::Discrepancy, &cfg.name, claimed, &computed, detail.clone());
        }
        claims.push(claim("ruling-components", claimed, computed, pass_or(bad.is_empty(), Verdict::Discrepancy), detail));
    }

    if let Some(reference) = cfg.reference_curve(&cfg.reference.alpha) {
        let terms: Vec<(CurveSpec, CurveSpec)> = match cfg.mode {
            Mode::Octonion => vec![(cfg.curve("u"), cfg.curve("v")), (cfg.curve("u"), cfg.curve("w"))],
            _ => vec![(cfg.curve("a"), cfg.curve("a_star")), (cfg.curve("b"), cfg.curve("b_star"))],
        };
        let claimed = "base curve as printed";
        match probe_i(&terms, &reference, &axes[0]) {
            Ok(probe) => {
                let detail = serde_json::to_value(&probe).expect("serializable");
                let computed = match probe.matched {
                    Some(i) => format!("reproduced with I = {:?}", i.0),
                    None => format!(
                        "no signed basis I reproduces it; least-squares I = {:?} leaves residual {:e}",
                        probe.least_squares.0, probe.least_squares_residual
                    ),
                };
                let found = probe.matched.is_some();
                let scene_i = Vec4(cfg.options.i);
                let uses_scene_i = probe.matched == Some(scene_i);
                ledger.push(
                    "base-curve-i-probe",
                    if found { Status::Confirmed } else { Status::Discrepancy },
                    &cfg.name,
                    claimed,
                    &computed,
                    detail.clone(),
                );
                claims.push(claim(
                    "base-curve-i-probe",
                    claimed,
                    computed,
                    pass_or(found, Verdict::Discrepancy),
                    json!({"probe": detail, "matches_scene_i": uses_scene_i}),
                ));
            }
            Err(e) => claims.push(claim(
                "base-curve-i-probe",
                claimed,
                e.to_string(),
                Verdict::Discrepancy,
                serde_json::Value::Null,
            )),
        }
    }
}
