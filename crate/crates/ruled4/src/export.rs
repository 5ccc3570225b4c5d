use std::fmt::Write as _;
use std::path::Path;

use ruled4_core::discrepancy::Ledger;
use serde::Serialize;
use thiserror::Error;

use crate::mesh::{Mesh, Vertex};

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("mesh is empty")]
    EmptyMesh,

    #[error("projection drops axis {0}; expected 0..3")]
    BadProjection(usize),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Obj,
    Csv,
    Json,
}

/// `%.17g`: 17 significant digits, trailing zeros removed, `-0` printed as `0`.
pub fn fmt_g17(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        strip_zeros(format!("{v:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa.to_string()), exp.abs())
    }
}

fn strip_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn obj_string(mesh: &Mesh, drop_axis: usize) -> Result<String, ExportError> {
    if mesh.is_empty() {
        return Err(ExportError::EmptyMesh);
    }
    if drop_axis > 3 {
        return Err(ExportError::BadProjection(drop_axis));
    }
    let mut out = String::new();
    for v in &mesh.vertices {
        out.push('v');
        for (k, c) in v.position.0.iter().enumerate() {
            if k != drop_axis {
                out.push(' ');
                out.push_str(&fmt_g17(*c));
            }
        }
        out.push('\n');
    }
    // quads in the plane of the first two parameters, one layer per k
    let [nx, ny, nz] = mesh.dims;
    for k in 0..nz {
        for i in 0..nx.saturating_sub(1) {
            for j in 0..ny.saturating_sub(1) {
                let q = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
                    .map(|(a, b)| mesh.linear_index(a, b, k) + 1);
                writeln!(out, "f {} {} {} {}", q[0], q[1], q[2], q[3]).expect("string write");
            }
        }
    }
    Ok(out)
}

pub const CSV_HEADER: &str = "x,y,z,c0,c1,c2,c3,K,H,lb_norm,flags";

fn csv_row(v: &Vertex) -> String {
    let mut fields: Vec<String> = v.params.iter().map(|x| fmt_g17(*x)).collect();
    fields.extend(v.position.0.iter().map(|x| fmt_g17(*x)));
    fields.extend([v.k, v.h, v.lb_norm].iter().map(|x| fmt_g17(*x)));
    fields.push(v.flags.join(";"));
    fields.join(",")
}

pub fn csv_string(mesh: &Mesh) -> Result<String, ExportError> {
    if mesh.is_empty() {
        return Err(ExportError::EmptyMesh);
    }
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for v in &mesh.vertices {
        out.push_str(&csv_row(v));
        out.push('\n');
    }
    Ok(out)
}

#[derive(Serialize)]
struct JsonReport<'a> {
    scene: &'a str,
    dims: [usize; 3],
    vertices: &'a [Vertex],
    ledger: &'a Ledger,
}

/// Full per-vertex reports plus the ledger; NaN becomes `null`.
pub fn json_string(scene: &str, mesh: &Mesh, ledger: &Ledger) -> Result<String, ExportError> {
    if mesh.is_empty() {
        return Err(ExportError::EmptyMesh);
    }
    let mut s = serde_json::to_string_pretty(&JsonReport {
        scene,
        dims: mesh.dims,
        vertices: &mesh.vertices,
        ledger,
    })?;
    s.push('\n');
    Ok(s)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), ExportError> {
    std::fs::write(path, contents).map_err(|source| ExportError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Renders first and writes only on success, so a failed export leaves no file.
pub fn export(
    scene: &str,
    mesh: &Mesh,
    ledger: &Ledger,
    format: Format,
    drop_axis: usize,
    path: &Path,
) -> Result<(), ExportError> {
    let text = match format {
        Format::Obj => obj_string(mesh, drop_axis)?,
        Format::Csv => csv_string(mesh)?,
        Format::Json => json_string(scene, mesh, ledger)?,
    };
    write_file(path, &text)
}
