//! JSON scene files.
//!
//! ```json
//! {
//!   "name": "example1",
//!   "mode": "type1",
//!   "curves": { "alpha": ["3*t+7", "-5*t+1", "t", "-4*t-1"], "beta": [...], "gamma": [...] },
//!   "grid": [{"min": -1, "max": 1, "samples": 3}, ...],
//!   "options": {"strict": true, "dual_norm": "lorentz", "i": [0, 0, 0, 1], "projection": 0},
//!   "claims": {"flat": true, "minimal": true, "laplace_zero": true},
//!   "reference": {...}
//! }
//! ```
//!
//! Curve names by mode: `alpha`, `beta`, `gamma` (type1, type2); `u`, `v`, `w`
//! (octonion); `a`, `a_star`, `b`, `b_star` (dual-octonion). The grid axes are
//! (x, y, z) or (t, s, r).

use std::collections::BTreeMap;
use std::path::Path;

use ruled4_core::construct::{construct_from_dual_curves, construct_from_octonions, HypothesisReport};
use ruled4_core::dsl::{linspace, parse_expr, CurveParseError, CurveSpec};
use ruled4_core::dual::DualNorm;
use ruled4_core::surface::{make_ruled, Interval, RuledHypersurface, SurfaceKind};
use ruled4_core::{GeometryError, Vec4};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },

    #[error("syntax error in {pointer} at offset {offset}: {message}")]
    Syntax {
        pointer: String,
        offset: usize,
        message: String,
    },

    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Type1,
    Type2,
    Octonion,
    DualOctonion,
}

impl Mode {
    pub fn curve_names(self) -> &'static [&'static str] {
        match self {
            Mode::Type1 | Mode::Type2 => &["alpha", "beta", "gamma"],
            Mode::Octonion => &["u", "v", "w"],
            Mode::DualOctonion => &["a", "a_star", "b", "b_star"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Options {
    pub strict: bool,
    pub dual_norm: DualNorm,
    pub i: [f64; 4],
    /// Axis dropped by OBJ export when the CLI does not override it.
    pub projection: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            strict: false,
            dual_norm: DualNorm::Lorentz,
            i: [0.0, 0.0, 0.0, 1.0],
            projection: 0,
        }
    }
}

/// Published claims about the scene, checked by `ruled4 check`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Claims {
    pub flat: Option<bool>,
    pub minimal: Option<bool>,
    pub laplace_zero: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointValue {
    pub at: [f64; 3],
    /// Constant expression for the expected value.
    pub value: String,
}

/// Published closed forms to compare against.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Reference {
    /// Base curve α(t).
    pub alpha: Option<[String; 4]>,
    /// Coefficients of s and r in φ − α.
    pub ruling_s: Option<[String; 4]>,
    pub ruling_r: Option<[String; 4]>,
    /// Hand-derived second fundamental form entry h₁₁.
    pub h11: Option<PointValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneConfig {
    pub name: String,
    pub mode: Mode,
    pub curves: BTreeMap<String, [String; 4]>,
    pub grid: [Axis; 3],
    #[serde(default)]
    pub options: Options,
    #[serde(default)]
    pub claims: Claims,
    #[serde(default)]
    pub reference: Reference,
}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> SceneError {
    SceneError::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

fn parse_curve(pointer: &str, c: &[String; 4]) -> Result<CurveSpec, SceneError> {
    CurveSpec::parse(c).map_err(|CurveParseError { component, error }| SceneError::Syntax {
        pointer: format!("{pointer}/{component}"),
        offset: error.offset(),
        message: error.to_string(),
    })
}

impl SceneConfig {
    pub fn from_json(text: &str) -> Result<Self, SceneError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let cfg: SceneConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let pointer = pointer_of(e.path());
            let pointer = if pointer.is_empty() { "/".to_string() } else { pointer };
            schema(pointer, e.into_inner().to_string())
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, SceneError> {
        let text = std::fs::read_to_string(path).map_err(|source| SceneError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    fn validate(&self) -> Result<(), SceneError> {
        for (k, axis) in self.grid.iter().enumerate() {
            if axis.samples < 2 {
                return Err(schema(format!("/grid/{k}/samples"), "at least 2 samples per axis"));
            }
            if !(axis.min.is_finite() && axis.max.is_finite() && axis.min < axis.max) {
                return Err(schema(format!("/grid/{k}"), "need finite min < max"));
            }
        }
        if self.options.projection > 3 {
            return Err(schema("/options/projection", "drop-axis index must be 0..3"));
        }
        let names = self.mode.curve_names();
        for name in names {
            if !self.curves.contains_key(*name) {
                return Err(schema("/curves", format!("missing curve `{name}`")));
            }
        }
        for (name, c) in &self.curves {
            if !names.contains(&name.as_str()) {
                return Err(schema(format!("/curves/{name}"), "curve not used by this mode"));
            }
            parse_curve(&format!("/curves/{name}"), c)?;
        }
        let r = &self.reference;
        for (key, c) in [("alpha", &r.alpha), ("ruling_s", &r.ruling_s), ("ruling_r", &r.ruling_r)] {
            if let Some(c) = c {
                parse_curve(&format!("/reference/{key}"), c)?;
            }
        }
        if let Some(h) = &r.h11 {
            parse_expr(&h.value).map_err(|e| SceneError::Syntax {
                pointer: "/reference/h11/value".into(),
                offset: e.offset(),
                message: e.to_string(),
            })?;
        }
        Ok(())
    }

    pub fn curve(&self, name: &str) -> CurveSpec {
        parse_curve("", &self.curves[name]).expect("validated at load")
    }

    pub fn domain(&self) -> [Interval; 3] {
        self.grid.map(|a| Interval::new(a.min, a.max))
    }

    pub fn axes(&self) -> [Vec<f64>; 3] {
        self.grid.map(|a| linspace(a.min, a.max, a.samples))
    }

    pub fn vertex_count(&self) -> usize {
        self.grid.iter().map(|a| a.samples).product()
    }

    pub fn kind(&self) -> SurfaceKind {
        match self.mode {
            Mode::Type1 => SurfaceKind::Type1,
            Mode::Type2 => SurfaceKind::Type2,
            Mode::Octonion | Mode::DualOctonion => SurfaceKind::Unconstrained,
        }
    }

    pub fn reference_curve(&self, c: &Option<[String; 4]>) -> Option<CurveSpec> {
        c.as_ref().map(|c| parse_curve("", c).expect("validated at load"))
    }

    pub fn build(&self) -> Result<Scene, SceneError> {
        let domain = self.domain();
        let i = Vec4(self.options.i);
        let norm = self.options.dual_norm;
        let (surface, hypotheses) = match self.mode {
            Mode::Type1 | Mode::Type2 => (
                make_ruled(
                    self.curve("alpha"),
                    self.curve("beta"),
                    self.curve("gamma"),
                    self.kind(),
                    domain,
                    self.options.strict,
                )?,
                None,
            ),
            Mode::Octonion => {
                let (h, r) = construct_from_octonions(
                    &self.curve("u"),
                    &self.curve("v"),
                    &self.curve("w"),
                    i,
                    domain,
                    norm,
                )?;
                (h, Some(r))
            }
            Mode::DualOctonion => {
                let (h, r) = construct_from_dual_curves(
                    (&self.curve("a"), &self.curve("a_star")),
                    (&self.curve("b"), &self.curve("b_star")),
                    i,
                    domain,
                    norm,
                )?;
                (h, Some(r))
            }
        };
        Ok(Scene {
            config: self.clone(),
            surface,
            hypotheses,
        })
    }
}

/// A loaded scene with its constructed hypersurface.
#[derive(Debug, Clone)]
pub struct Scene {
    pub config: SceneConfig,
    pub surface: RuledHypersurface,
    pub hypotheses: Option<HypothesisReport>,
}

pub fn load_scene(path: &Path) -> Result<Scene, SceneError> {
    SceneConfig::load(path)?.build()
}
