//! Random instance generators and brute-force oracles shared by the test
//! suites. Nothing here is used by the analytic pipeline.

use rand::Rng;

use crate::dsl::CurveSpec;
use crate::lorentz::Vec4;
use crate::surface::{make_ruled, Interval, RuledHypersurface, SurfaceKind};

pub const UNIT_BOX: [Interval; 3] = [
    Interval::new(-1.0, 1.0),
    Interval::new(-1.0, 1.0),
    Interval::new(-1.0, 1.0),
];

fn coef(rng: &mut impl Rng, scale: f64) -> String {
    format!("{:?}", (rng.gen_range(-scale..scale) * 1000.0).round() / 1000.0)
}

/// c₀ + c₁t + c₂t² + c₃·sin(kt) or cos(kt), small integer k.
pub fn random_scalar(rng: &mut impl Rng, scale: f64) -> String {
    let f = if rng.gen_bool(0.5) { "sin" } else { "cos" };
    let k = rng.gen_range(1..=3);
    format!(
        "({}) + ({})*t + ({})*t^2 + ({})*{f}({k}*t)",
        coef(rng, scale),
        coef(rng, scale),
        coef(rng, scale),
        coef(rng, scale)
    )
}

/// Bounded oscillation a·sin(kt + p), |a| < amp.
fn wobble(rng: &mut impl Rng, amp: f64) -> String {
    format!(
        "({})*sin({}*t + ({}))",
        coef(rng, amp),
        rng.gen_range(1..=2),
        coef(rng, 3.0)
    )
}

pub fn random_curve(rng: &mut impl Rng, scale: f64) -> CurveSpec {
    let c: [String; 4] = std::array::from_fn(|_| random_scalar(rng, scale));
    CurveSpec::parse(&c).expect("generated curve parses")
}

/// v / sqrt(|⟨v,v⟩|) written out component by component.
fn normalized(v: [String; 4], timelike: bool) -> CurveSpec {
    let q = format!(
        "-({0})^2 + ({1})^2 + ({2})^2 + ({3})^2",
        v[0], v[1], v[2], v[3]
    );
    let q = if timelike { format!("-({q})") } else { q };
    let c: [String; 4] = std::array::from_fn(|k| format!("({}) / sqrt({q})", v[k]));
    CurveSpec::parse(&c).expect("generated director parses")
}

/// Unit spacelike director: |v₀| ≤ 0.5 while the spatial part has norm ≥ 0.7.
pub fn random_spacelike_director(rng: &mut impl Rng) -> CurveSpec {
    let lead = rng.gen_range(1..4);
    let v: [String; 4] = std::array::from_fn(|k| {
        if k == 0 {
            wobble(rng, 0.5)
        } else if k == lead {
            format!("1 + {}", wobble(rng, 0.3))
        } else {
            wobble(rng, 1.0)
        }
    });
    normalized(v, false)
}

/// Future-pointing unit timelike director: v₀ ≥ 1.5, spatial norm < 0.9.
pub fn random_timelike_director(rng: &mut impl Rng) -> CurveSpec {
    let v: [String; 4] = std::array::from_fn(|k| {
        if k == 0 {
            format!("2 + {}", wobble(rng, 0.5))
        } else {
            wobble(rng, 0.5)
        }
    });
    normalized(v, true)
}

/// A strict type-1 or type-2 hypersurface on the unit box.
pub fn random_strict(rng: &mut impl Rng, kind: SurfaceKind) -> RuledHypersurface {
    loop {
        let alpha = random_curve(rng, 1.0);
        let (beta, gamma) = match kind {
            SurfaceKind::Type2 => (random_timelike_director(rng), random_timelike_director(rng)),
            _ => (random_spacelike_director(rng), random_spacelike_director(rng)),
        };
        if let Ok(h) = make_ruled(alpha, beta, gamma, kind, UNIT_BOX, true) {
            return h;
        }
    }
}

/// Strict type-1 with ⟨β,γ⟩ ≡ 0: β = (0, cos q, sin q, 0), γ = (sinh p, 0, 0, cosh p).
pub fn random_orthogonal_type1(rng: &mut impl Rng) -> RuledHypersurface {
    let q = random_scalar(rng, 0.8);
    let p = random_scalar(rng, 0.5);
    let beta = CurveSpec::parse(&["0".into(), format!("cos({q})"), format!("sin({q})"), "0".into()])
        .expect("parses");
    let gamma = CurveSpec::parse(&[format!("sinh({p})"), "0".into(), "0".into(), format!("cosh({p})")])
        .expect("parses");
    make_ruled(random_curve(rng, 1.0), beta, gamma, SurfaceKind::Type1, UNIT_BOX, true)
        .expect("orthogonal unit spacelike directors")
}

/// Type-2 tagged instance with orthogonal directors of constant norm.
///
/// Two unit timelike vectors are never orthogonal, so the directors here are
/// the unit spacelike pair of [`random_orthogonal_type1`] and the instance is
/// built in lax mode; it exercises the type-2 closed-form algebra against the
/// general path on the same (nominal) metric.
pub fn random_orthogonal_type2_lax(rng: &mut impl Rng) -> RuledHypersurface {
    let h = random_orthogonal_type1(rng);
    make_ruled(h.alpha, h.beta, h.gamma, SurfaceKind::Type2, UNIT_BOX, false)
        .expect("lax construction")
}

pub fn random_vec4(rng: &mut impl Rng, scale: f64) -> Vec4 {
    Vec4(std::array::from_fn(|_| rng.gen_range(-scale..scale)))
}

/// A vector Lorentz-orthogonal to `u`: random w minus its projection on u
/// (u must not be lightlike).
pub fn orthogonal_to(rng: &mut impl Rng, u: &Vec4) -> Vec4 {
    let w = random_vec4(rng, 1.0);
    w - (w.dot(u) / u.quad()) * *u
}

/// N = φx × φy × φz written as explicit 3×3 minors of the tangent matrix.
pub fn normal_by_minors(px: &Vec4, b: &Vec4, c: &Vec4) -> Vec4 {
    let m = |i: usize, j: usize, k: usize| {
        px[i] * (b[j] * c[k] - b[k] * c[j]) - px[j] * (b[i] * c[k] - b[k] * c[i])
            + px[k] * (b[i] * c[j] - b[j] * c[i])
    };
    Vec4::new(-m(1, 2, 3), -m(0, 2, 3), m(0, 1, 3), -m(0, 1, 2))
}

/// First partials of φ by central differences of positions.
fn fd_tangents(h: &RuledHypersurface, p: [f64; 3], step: f64) -> [Vec4; 3] {
    std::array::from_fn(|k| {
        let (mut hi, mut lo) = (p, p);
        hi[k] += step;
        lo[k] -= step;
        let f = |q: [f64; 3]| h.eval_point(q[0], q[1], q[2]).expect("in domain");
        (f(hi) - f(lo)) / (2.0 * step)
    })
}

/// Laplace–Beltrami operator from positions only: every derivative in
///
/// ```text
/// Δφ = |G|^{-1/2} Σᵢ ∂ᵢ( |G|^{1/2} gᶦʲ ∂ⱼφ )
/// ```
///
/// is a central difference with step `step`. Constrained kinds use the same
/// nominal g₂₂ = g₃₃ as the analytic pipeline.
pub fn fd_laplace_beltrami(h: &RuledHypersurface, p: [f64; 3], step: f64) -> Vec4 {
    use crate::linalg::{adjugate3, det3};
    let flux = |q: [f64; 3], i: usize| -> (Vec4, f64) {
        let t = fd_tangents(h, q, step);
        let mut g = [[0.0; 3]; 3];
        for a in 0..3 {
            for b in 0..3 {
                g[a][b] = t[a].dot(&t[b]);
            }
        }
        if let Some(s) = h.kind.director_square() {
            g[1][1] = s;
            g[2][2] = s;
        }
        let det = det3(&g);
        let adj = adjugate3(&g);
        let root = det.abs().sqrt();
        let mut v = Vec4::ZERO;
        for j in 0..3 {
            v += (root * adj[i][j] / det) * t[j];
        }
        (v, root)
    };
    let (_, root) = flux(p, 0);
    let mut out = Vec4::ZERO;
    for i in 0..3 {
        let (mut hi, mut lo) = (p, p);
        hi[i] += step;
        lo[i] -= step;
        out += (flux(hi, i).0 - flux(lo, i).0) / (2.0 * step);
    }
    out / root
}

/// [`fd_laplace_beltrami`] at steps h and h/2 combined to cancel the O(h²)
/// truncation term: (4·Δ(h/2) − Δ(h)) / 3.
pub fn fd_laplace_beltrami_extrapolated(h: &RuledHypersurface, p: [f64; 3], step: f64) -> Vec4 {
    (4.0 * fd_laplace_beltrami(h, p, step / 2.0) - fd_laplace_beltrami(h, p, step)) / 3.0
}

/// Ternary product through the 4×4 determinant pairing: slot k of c is
/// det[w; x; y; z] with w the k-th basis vector, raised with the metric.
pub fn cross_by_pairing(x: &Vec4, y: &Vec4, z: &Vec4) -> Vec4 {
    use crate::linalg::det4;
    let mut c = [0.0; 4];
    for (k, slot) in c.iter_mut().enumerate() {
        let w = Vec4::basis(k);
        let d = det4(&[w.0, x.0, y.0, z.0]);
        *slot = if k == 0 { -d } else { d };
    }
    Vec4(c)
}
