//! Fixed-size 3×3 helpers for metric and shape-operator algebra.

pub type Mat3 = [[f64; 3]; 3];

pub const IDENTITY3: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

pub fn det3(m: &Mat3) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Classical adjugate (transpose of the cofactor matrix), so that
/// `adj · m = det(m) · I`.
pub fn adjugate3(m: &Mat3) -> Mat3 {
    let mut adj = [[0.0; 3]; 3];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            // cofactor C_ji lands at (i, j)
            let (r0, r1) = others(j);
            let (c0, c1) = others(i);
            let minor = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            *cell = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    adj
}

/// Directional derivative of [`adjugate3`] along `dm`.
pub fn adjugate3_derivative(m: &Mat3, dm: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let (r0, r1) = others(j);
            let (c0, c1) = others(i);
            let d = dm[r0][c0] * m[r1][c1] + m[r0][c0] * dm[r1][c1]
                - dm[r0][c1] * m[r1][c0]
                - m[r0][c1] * dm[r1][c0];
            *cell = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    out
}

fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

pub fn matmul3(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn scale3(m: &Mat3, s: f64) -> Mat3 {
    m.map(|row| row.map(|v| v * s))
}

pub fn trace3(m: &Mat3) -> f64 {
    m[0][0] + m[1][1] + m[2][2]
}

/// Largest absolute entry of `a − b`.
pub fn max_abs_diff3(a: &Mat3, b: &Mat3) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            worst = worst.max((a[i][j] - b[i][j]).abs());
        }
    }
    worst
}

/// Determinant of a 4×4 matrix by cofactor expansion along the first row.
pub fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let mut total = 0.0;
    for col in 0..4 {
        let mut minor = [[0.0; 3]; 3];
        for (r, row) in m[1..].iter().enumerate() {
            let mut c = 0;
            for (k, v) in row.iter().enumerate() {
                if k != col {
                    minor[r][c] = *v;
                    c += 1;
                }
            }
        }
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * m[0][col] * det3(&minor);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjugate_times_matrix_is_det_identity() {
        let m = [[2.0, -1.0, 0.5], [3.0, 4.0, 1.0], [-2.0, 0.25, 5.0]];
        let prod = matmul3(&adjugate3(&m), &m);
        let expected = scale3(&IDENTITY3, det3(&m));
        assert!(max_abs_diff3(&prod, &expected) < 1e-12);
    }

    #[test]
    fn adjugate_derivative_matches_difference_quotient() {
        let m = [[2.0, -1.0, 0.5], [-1.0, 4.0, 1.0], [0.5, 1.0, 5.0]];
        let dm = [[0.3, 0.1, -0.2], [0.1, -0.5, 0.7], [-0.2, 0.7, 0.05]];
        let h = 1e-6;
        let shifted = |s: f64| {
            let mut p = m;
            for i in 0..3 {
                for j in 0..3 {
                    p[i][j] += s * dm[i][j];
                }
            }
            adjugate3(&p)
        };
        let (hi, lo) = (shifted(h), shifted(-h));
        let d = adjugate3_derivative(&m, &dm);
        for i in 0..3 {
            for j in 0..3 {
                assert!(((hi[i][j] - lo[i][j]) / (2.0 * h) - d[i][j]).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn det4_of_permutation() {
        // swaps rows 0 and 1 of the identity
        let m = [
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        assert_eq!(det4(&m), -1.0);
    }
}
