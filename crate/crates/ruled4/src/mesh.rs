use rayon::prelude::*;
use ruled4_core::surface::{curvature_report, CurvatureReport, RuledHypersurface};
use ruled4_core::{CausalCharacter, GeometryError, Vec4};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Vertex {
    /// Grid index (i, j, k).
    pub index: [usize; 3],
    /// Parameter point (x, y, z) or (t, s, r).
    pub params: [f64; 3],
    /// φ at the point; NaN components on a domain error.
    pub position: Vec4,
    pub k: f64,
    pub h: f64,
    pub lb_norm: f64,
    pub normal_character: Option<CausalCharacter>,
    pub flags: Vec<String>,
    /// Absent at degenerate vertices.
    pub report: Option<CurvatureReport>,
}

/// Vertices in row-major grid order with the first parameter slowest.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mesh {
    pub dims: [usize; 3],
    pub vertices: Vec<Vertex>,
}

impl Mesh {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn linear_index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    /// Vertices that produced a full curvature report.
    pub fn reports(&self) -> impl Iterator<Item = &CurvatureReport> {
        self.vertices.iter().filter_map(|v| v.report.as_ref())
    }
}

fn error_flag(e: &GeometryError) -> &'static str {
    match e {
        GeometryError::Domain(_) => "domain-error",
        GeometryError::DegenerateNormal { .. } => "degenerate-normal",
        GeometryError::SingularMetric { .. } => "singular-metric",
        GeometryError::NonFinite => "non-finite",
        GeometryError::DirectorConstraintViolated(_) => "director-constraint",
        GeometryError::NonUnitI(_) => "non-unit-i",
    }
}

fn vertex(h: &RuledHypersurface, index: [usize; 3], params: [f64; 3]) -> Vertex {
    let [x, y, z] = params;
    match curvature_report(h, x, y, z) {
        Ok(r) => Vertex {
            index,
            params,
            position: r.position,
            k: r.k,
            h: r.mean_curvature,
            lb_norm: r.lb_norm(),
            normal_character: Some(r.gauss.normal_character),
            flags: r.flags.clone(),
            report: Some(r),
        },
        Err(e) => {
            let mut flags = vec![error_flag(&e).to_string()];
            if !h.warnings.is_empty() {
                flags.push("director-constraint".to_string());
            }
            Vertex {
                index,
                params,
                position: h.eval_point(x, y, z).unwrap_or(Vec4([f64::NAN; 4])),
                k: f64::NAN,
                h: f64::NAN,
                lb_norm: f64::NAN,
                normal_character: None,
                flags,
                report: None,
            }
        }
    }
}

/// Evaluates every grid point in parallel; the result order does not depend
/// on the number of worker threads.
pub fn sample_grid(h: &RuledHypersurface, axes: &[Vec<f64>; 3]) -> Mesh {
    let dims = [axes[0].len(), axes[1].len(), axes[2].len()];
    let n = dims[0] * dims[1] * dims[2];
    let vertices = (0..n)
        .into_par_iter()
        .map(|idx| {
            let i = idx / (dims[1] * dims[2]);
            let j = (idx / dims[2]) % dims[1];
            let k = idx % dims[2];
            vertex(h, [i, j, k], [axes[0][i], axes[1][j], axes[2][k]])
        })
        .collect();
    Mesh { dims, vertices }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ruled4_core::dsl::{linspace, CurveSpec};
    use ruled4_core::surface::{make_ruled, SurfaceKind};
    use ruled4_core::testkit::UNIT_BOX;

    fn spec(c: [&str; 4]) -> CurveSpec {
        CurveSpec::parse(&c).unwrap()
    }

    #[test]
    fn two_by_two_by_two() {
        let h = make_ruled(
            spec(["t", "0", "0", "0"]),
            spec(["0", "1", "0", "0"]),
            spec(["0", "0", "1", "0"]),
            SurfaceKind::Type1,
            UNIT_BOX,
            true,
        )
        .unwrap();
        let axes = [linspace(-1.0, 1.0, 2), linspace(-1.0, 1.0, 2), linspace(-1.0, 1.0, 2)];
        let m = sample_grid(&h, &axes);
        assert_eq!(m.len(), 8);
        assert_eq!(m.vertices[1].params, [-1.0, -1.0, 1.0]);
        assert_eq!(m.vertices[2].params, [-1.0, 1.0, -1.0]);
        assert_eq!(m.vertices[4].params, [1.0, -1.0, -1.0]);
        assert_eq!(m.linear_index(1, 1, 1), 7);
        assert!(m.vertices.iter().all(|v| v.k == 0.0 && v.flags.is_empty()));
    }

    #[test]
    fn equal_directors_flag_every_vertex() {
        let d = ["0", "cos(t)", "sin(t)", "0"];
        let h = make_ruled(spec(["t", "t^2", "0", "1"]), spec(d), spec(d), SurfaceKind::Type1, UNIT_BOX, true)
            .unwrap();
        let axes = [linspace(-1.0, 1.0, 3), linspace(-1.0, 1.0, 2), linspace(-1.0, 1.0, 2)];
        let m = sample_grid(&h, &axes);
        for v in &m.vertices {
            assert_eq!(v.flags, vec!["degenerate-normal".to_string()]);
            assert!(v.k.is_nan() && v.report.is_none());
            assert!(v.position.is_finite());
        }
    }

    #[test]
    fn domain_errors_do_not_abort_the_grid() {
        let h = make_ruled(
            spec(["log(t)", "0", "0", "0"]),
            spec(["0", "1", "0", "0"]),
            spec(["0", "0", "1", "0"]),
            SurfaceKind::Type1,
            UNIT_BOX,
            false,
        )
        .unwrap();
        let axes = [linspace(-1.0, 1.0, 3), linspace(0.0, 1.0, 2), linspace(0.0, 1.0, 2)];
        let m = sample_grid(&h, &axes);
        assert_eq!(m.len(), 12);
        assert!(m.vertices[0].flags.contains(&"domain-error".to_string()));
        assert!(m.vertices[0].position[0].is_nan());
        assert!(m.vertices[11].report.is_some());
    }
}
