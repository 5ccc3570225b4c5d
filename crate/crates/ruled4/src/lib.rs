//! Scene files, grid sampling, claim checking and file export for 2-ruled
//! hypersurfaces.
//!
//! - [`scene`]: JSON scene schema and construction of the hypersurface
//! - [`mesh`]: parallel evaluation of curvature reports over the parameter grid
//! - [`check`]: theorem and claim checks with the discrepancy ledger
//! - [`export`]: OBJ, CSV and JSON writers

pub mod check;
pub mod export;
pub mod mesh;
pub mod scene;

pub use check::{check_scene, CheckReport, Claim, Verdict};
pub use export::{export, ExportError, Format};
pub use mesh::{sample_grid, Mesh, Vertex};
pub use scene::{load_scene, Mode, Scene, SceneConfig, SceneError};
