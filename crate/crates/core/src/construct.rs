//! Hypersurfaces built from particular octonions.
//!
//! Given curves u, v, w and a unit vector I,
//!
//! ```text
//! φ(t,s,r) = α(t) + s·w(t) + r·v(t),   α = u×v×I + u×w×I
//! ```
//!
//! and from two dual curves a + εa*, b + εb* on the unit dual sphere,
//!
//! ```text
//! φ(t,s,r) = α(t) + s·a(t) + r·b(t),   α = a×a*×I + b×b*×I.
//! ```
//!
//! α has no closed form in the expression language, so it is a
//! [`CrossSumCurve`] whose jets come from the Leibniz rule on the ternary
//! product.

use serde::Serialize;

use crate::dsl::{linspace, Curve, CurveJet, CurveSpec};
use crate::dual::{DualNorm, DualVec4};
use crate::error::{DomainError, GeometryError};
use crate::lorentz::{cross4, Vec4};
use crate::octonion::{check_unit_i, particular_product, ParticularOctonion};
use crate::surface::{make_ruled, Interval, RuledHypersurface, SurfaceKind, DIRECTOR_SAMPLES};
use crate::tolerance;

/// Σ p_k(t) × q_k(t) × I.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossSumCurve {
    pub terms: Vec<(CurveSpec, CurveSpec)>,
    pub i: Vec4,
}

impl Curve for CrossSumCurve {
    fn jet(&self, t: f64) -> Result<CurveJet, DomainError> {
        let i = &self.i;
        let mut out = CurveJet::default();
        for (p, q) in &self.terms {
            let (p, q) = (p.jet(t)?, q.jet(t)?);
            out.p += cross4(&p.p, &q.p, i);
            out.d1 += cross4(&p.d1, &q.p, i) + cross4(&p.p, &q.d1, i);
            out.d2 += cross4(&p.d2, &q.p, i)
                + 2.0 * cross4(&p.d1, &q.d1, i)
                + cross4(&p.p, &q.d2, i);
        }
        Ok(out)
    }
}

/// Worst hypothesis violations over the t-samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypothesisReport {
    pub norm: DualNorm,
    /// max |(|x|² − 1)| for each director.
    pub unit_violation: [f64; 2],
    /// max |⟨x, u⟩| (octonion form) or max |⟨a, a*⟩| (dual form).
    pub orthogonality_violation: [f64; 2],
    pub directors_equal: bool,
}

impl HypothesisReport {
    pub fn warnings(&self, names: [&str; 2]) -> Vec<String> {
        let tol = tolerance::MEMBERSHIP;
        let mut out = Vec::new();
        for k in 0..2 {
            if self.unit_violation[k] > tol {
                out.push(format!(
                    "{} is not unit ({:?} norm): max violation {:.6e}",
                    names[k], self.norm, self.unit_violation[k]
                ));
            }
            if self.orthogonality_violation[k] > tol {
                out.push(format!(
                    "{} fails the orthogonality hypothesis: max violation {:.6e}",
                    names[k], self.orthogonality_violation[k]
                ));
            }
        }
        if self.directors_equal {
            out.push("directors coincide: degenerate ruling".to_string());
        }
        out
    }
}

fn octonion_hypotheses(
    u: &CurveSpec,
    v: &CurveSpec,
    w: &CurveSpec,
    ts: &[f64],
    norm: DualNorm,
) -> Result<HypothesisReport, DomainError> {
    let mut r = HypothesisReport {
        norm,
        unit_violation: [0.0; 2],
        orthogonality_violation: [0.0; 2],
        directors_equal: true,
    };
    for &t in ts {
        let (uu, vv, ww) = (u.value(t)?, v.value(t)?, w.value(t)?);
        for (k, d) in [ww, vv].iter().enumerate() {
            r.unit_violation[k] = r.unit_violation[k].max((norm.square(d) - 1.0).abs());
            r.orthogonality_violation[k] =
                r.orthogonality_violation[k].max(norm.dot(d, &uu).abs());
        }
        r.directors_equal &= (vv - ww).max_abs() <= tolerance::CONSTRUCTION;
    }
    Ok(r)
}

/// φ(t,s,r) = u×v×I + u×w×I + s·w + r·v on the (t, s, r) domain.
/// Directors: w along s, v along r. Hypothesis failures become warnings.
pub fn construct_from_octonions(
    u: &CurveSpec,
    v: &CurveSpec,
    w: &CurveSpec,
    i: Vec4,
    domain: [Interval; 3],
    norm: DualNorm,
) -> Result<(RuledHypersurface, HypothesisReport), GeometryError> {
    check_unit_i(&i)?;
    let ts = linspace(domain[0].min, domain[0].max, DIRECTOR_SAMPLES);
    let report = octonion_hypotheses(u, v, w, &ts, norm)?;
    let alpha = CrossSumCurve {
        terms: vec![(u.clone(), v.clone()), (u.clone(), w.clone())],
        i,
    };
    let mut h = make_ruled(
        crate::surface::CurveSource::CrossSum(alpha),
        w.clone(),
        v.clone(),
        SurfaceKind::Unconstrained,
        domain,
        false,
    )?;
    h.warnings.extend(report.warnings(["w", "v"]));
    Ok((h, report))
}

/// φ(t,s,r) = a×a*×I + b×b*×I + s·a + r·b. Dual-sphere failures become
/// warnings.
pub fn construct_from_dual_curves(
    g1: (&CurveSpec, &CurveSpec),
    g2: (&CurveSpec, &CurveSpec),
    i: Vec4,
    domain: [Interval; 3],
    norm: DualNorm,
) -> Result<(RuledHypersurface, HypothesisReport), GeometryError> {
    check_unit_i(&i)?;
    let mut r = HypothesisReport {
        norm,
        unit_violation: [0.0; 2],
        orthogonality_violation: [0.0; 2],
        directors_equal: true,
    };
    for t in linspace(domain[0].min, domain[0].max, DIRECTOR_SAMPLES) {
        let pairs = [(g1.0.value(t)?, g1.1.value(t)?), (g2.0.value(t)?, g2.1.value(t)?)];
        for (k, (re, eps)) in pairs.iter().enumerate() {
            let n = DualVec4::new(*re, *eps).norm(norm);
            r.unit_violation[k] = r.unit_violation[k].max((n.re - 1.0).abs());
            r.orthogonality_violation[k] = r.orthogonality_violation[k].max((0.5 * n.eps).abs());
        }
        r.directors_equal &= (pairs[0].0 - pairs[1].0).max_abs() <= tolerance::CONSTRUCTION;
    }
    let alpha = CrossSumCurve {
        terms: vec![(g1.0.clone(), g1.1.clone()), (g2.0.clone(), g2.1.clone())],
        i,
    };
    let mut h = make_ruled(
        crate::surface::CurveSource::CrossSum(alpha),
        g1.0.clone(),
        g2.0.clone(),
        SurfaceKind::Unconstrained,
        domain,
        false,
    )?;
    h.warnings.extend(r.warnings(["a", "b"]));
    Ok((h, r))
}

/// (s + u) ⋆ w ⋆ I + (r + u) ⋆ v ⋆ I at one parameter point.
///
/// The vector part equals φ(t,s,r) for any u, v, w; the scalar part is
/// −⟨u,w⟩ − ⟨u,v⟩ and vanishes under the orthogonality hypotheses.
pub fn star_product_point(
    u: &Vec4,
    v: &Vec4,
    w: &Vec4,
    i: &Vec4,
    s: f64,
    r: f64,
) -> Result<ParticularOctonion, GeometryError> {
    let q = ParticularOctonion::new(s, *u);
    let p = ParticularOctonion::new(r, *u);
    let a = particular_product(&q, &ParticularOctonion::pure(*w), i)?;
    let b = particular_product(&p, &ParticularOctonion::pure(*v), i)?;
    Ok(ParticularOctonion::new(a.scalar + b.scalar, a.vector + b.vector))
}

/// Outcome of fitting I to a reference base curve α_ref.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IProbe {
    /// (candidate I, max |α − α_ref|) for ±e₁…±e₄.
    pub candidates: Vec<(Vec4, f64)>,
    /// Unconstrained least-squares I (α is linear in I).
    pub least_squares: Vec4,
    pub least_squares_residual: f64,
    /// First candidate reproducing α_ref within the construction tolerance.
    pub matched: Option<Vec4>,
    pub samples: usize,
}

/// Tries each signed basis vector as I in α = Σ p×q×I, and a least-squares
/// fit of I, against `reference` on the sample points.
pub fn probe_i(
    terms: &[(CurveSpec, CurveSpec)],
    reference: &dyn Curve,
    ts: &[f64],
) -> Result<IProbe, DomainError> {
    // α(t) = L(t)·I with column j of L(t) equal to Σ p×q×e_j
    let mut rows: Vec<([f64; 4], f64)> = Vec::with_capacity(4 * ts.len());
    let mut columns = Vec::with_capacity(ts.len());
    for &t in ts {
        let mut l = [Vec4::ZERO; 4];
        for (p, q) in terms {
            let (p, q) = (p.value(t)?, q.value(t)?);
            for (j, col) in l.iter_mut().enumerate() {
                *col += cross4(&p, &q, &Vec4::basis(j));
            }
        }
        let target = reference.jet(t)?.p;
        for k in 0..4 {
            rows.push(([l[0][k], l[1][k], l[2][k], l[3][k]], target[k]));
        }
        columns.push((l, target));
    }

    let deviation = |i: &Vec4| {
        columns
            .iter()
            .map(|(l, target)| {
                let alpha = i[0] * l[0] + i[1] * l[1] + i[2] * l[2] + i[3] * l[3];
                (alpha - *target).max_abs()
            })
            .fold(0.0_f64, f64::max)
    };

    let mut candidates = Vec::new();
    for j in 0..4 {
        for sign in [1.0, -1.0] {
            let i = sign * Vec4::basis(j);
            candidates.push((i, deviation(&i)));
        }
    }
    let matched = candidates
        .iter()
        .find(|(_, d)| *d <= tolerance::CONSTRUCTION)
        .map(|(i, _)| *i);
    let least_squares = least_squares4(&rows);
    Ok(IProbe {
        least_squares_residual: deviation(&least_squares),
        candidates,
        least_squares,
        matched,
        samples: ts.len(),
    })
}

/// Solves the 4×4 normal equations by Gaussian elimination with partial
/// pivoting; a rank-deficient system leaves the free unknowns at zero.
fn least_squares4(rows: &[([f64; 4], f64)]) -> Vec4 {
    let mut m = [[0.0; 5]; 4];
    for (a, b) in rows {
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] += a[i] * a[j];
            }
            m[i][4] += a[i] * b;
        }
    }
    let scale = m.iter().map(|r| r[..4].iter().fold(0.0_f64, |s, v| s.max(v.abs()))).fold(0.0, f64::max);
    let mut pivots = [None; 4];
    let mut row = 0;
    for col in 0..4 {
        let best = (row..4).max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()));
        let Some(p) = best else { break };
        if m[p][col].abs() <= 1e-12 * scale.max(1.0) {
            continue;
        }
        m.swap(row, p);
        for r in 0..4 {
            if r != row {
                let f = m[r][col] / m[row][col];
                for c in col..5 {
                    m[r][c] -= f * m[row][c];
                }
            }
        }
        pivots[col] = Some(row);
        row += 1;
    }
    let mut x = Vec4::ZERO;
    for (col, p) in pivots.iter().enumerate() {
        if let Some(r) = p {
            x[col] = m[*r][4] / m[*r][col];
        }
    }
    x
}
