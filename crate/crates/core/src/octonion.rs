//! Octonions generated from four index rules, and particular octonions.
//!
//! The imaginary units e₁…e₇ satisfy eᵢ² = −1, anticommute pairwise, and
//! their products are closed under index cycling (i → i+1) and index doubling
//! (i → 2i), indices taken in Z₇ with 7 ≡ 0. A single seed product such as
//! e₁e₂ = e₄ generates the whole table.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GeometryError;
use crate::lorentz::{cross4, Vec4};
use crate::tolerance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("seed ({0}, {1}, {2}) must be three distinct indices in 1..=7")]
    InvalidSeed(usize, usize, usize),
    #[error("inconsistent seed: e{i}e{j} assigned both {first} and {second}")]
    InconsistentSeed {
        i: usize,
        j: usize,
        first: String,
        second: String,
    },
    #[error("seed closure leaves e{0}e{1} undefined")]
    Incomplete(usize, usize),
}

/// Signed unit: `sign · e_index`, index 0 meaning the real unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedUnit {
    pub sign: i8,
    pub index: usize,
}

impl SignedUnit {
    fn label(self) -> String {
        let s = if self.sign < 0 { "-" } else { "" };
        if self.index == 0 {
            format!("{s}1")
        } else {
            format!("{s}e{}", self.index)
        }
    }
}

/// Products eᵢeⱼ for 1 ≤ i, j ≤ 7.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTable {
    // entries[i-1][j-1]
    entries: [[SignedUnit; 7]; 7],
    seed: (usize, usize, usize),
}

fn wrap(i: usize) -> usize {
    // keep indices in 1..=7
    let r = i % 7;
    if r == 0 {
        7
    } else {
        r
    }
}

impl MulTable {
    /// Closure of `e_i e_j = e_k` under cycling, doubling, anticommutation and
    /// cyclic rotation of the quaternionic triple (i, j, k).
    pub fn build(seed: (usize, usize, usize)) -> Result<Self, TableError> {
        let (i, j, k) = seed;
        let valid = |x: usize| (1..=7).contains(&x);
        if !(valid(i) && valid(j) && valid(k)) || i == j || j == k || i == k {
            return Err(TableError::InvalidSeed(i, j, k));
        }

        let mut slots: [[Option<SignedUnit>; 7]; 7] = [[None; 7]; 7];
        for d in 1..=7 {
            slots[d - 1][d - 1] = Some(SignedUnit { sign: -1, index: 0 });
        }

        let mut work = vec![(i, j, k, 1_i8)];
        while let Some((a, b, c, s)) = work.pop() {
            let unit = SignedUnit { sign: s, index: c };
            match slots[a - 1][b - 1] {
                Some(existing) if existing == unit => continue,
                Some(existing) => {
                    return Err(TableError::InconsistentSeed {
                        i: a,
                        j: b,
                        first: existing.label(),
                        second: unit.label(),
                    })
                }
                None => slots[a - 1][b - 1] = Some(unit),
            }
            work.push((b, a, c, -s));
            // quaternionic triple: e_i e_j = e_k ⇒ e_j e_k = e_i
            work.push((b, c, a, s));
            work.push((wrap(a + 1), wrap(b + 1), wrap(c + 1), s));
            work.push((wrap(2 * a), wrap(2 * b), wrap(2 * c), s));
        }

        let mut entries = [[SignedUnit { sign: 1, index: 0 }; 7]; 7];
        for a in 0..7 {
            for b in 0..7 {
                entries[a][b] = slots[a][b].ok_or(TableError::Incomplete(a + 1, b + 1))?;
            }
        }
        Ok(MulTable { entries, seed })
    }

    /// Table generated by e₁e₂ = e₄, shared process-wide.
    pub fn standard() -> &'static MulTable {
        static TABLE: OnceLock<MulTable> = OnceLock::new();
        TABLE.get_or_init(|| MulTable::build((1, 2, 4)).expect("standard seed is consistent"))
    }

    pub fn seed(&self) -> (usize, usize, usize) {
        self.seed
    }

    /// eᵢeⱼ for 1 ≤ i, j ≤ 7.
    pub fn get(&self, i: usize, j: usize) -> SignedUnit {
        self.entries[i - 1][j - 1]
    }

    /// Product of basis units with index 0 as the real unit.
    pub fn basis_product(&self, i: usize, j: usize) -> SignedUnit {
        match (i, j) {
            (0, j) => SignedUnit { sign: 1, index: j },
            (i, 0) => SignedUnit { sign: 1, index: i },
            (i, j) => self.get(i, j),
        }
    }

    pub fn mul(&self, p: &Octonion, q: &Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for i in 0..8 {
            if p.0[i] == 0.0 {
                continue;
            }
            for j in 0..8 {
                let u = self.basis_product(i, j);
                out[u.index] += f64::from(u.sign) * p.0[i] * q.0[j];
            }
        }
        Octonion(out)
    }

    /// The 7×7 signed table as CSV: header row of column units, then one row
    /// per eᵢ with cells `±k` meaning ±e_k (and `-0` for −1).
    pub fn to_csv(&self) -> String {
        let mut s = String::from("row");
        for j in 1..=7 {
            s.push_str(&format!(",e{j}"));
        }
        s.push('\n');
        for i in 1..=7 {
            s.push_str(&format!("e{i}"));
            for j in 1..=7 {
                let u = self.get(i, j);
                let sign = if u.sign < 0 { '-' } else { '+' };
                s.push_str(&format!(",{sign}{}", u.index));
            }
            s.push('\n');
        }
        s
    }
}

/// a₀ + a₁e₁ + … + a₇e₇.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    pub fn unit(k: usize) -> Self {
        let mut a = [0.0; 8];
        a[k] = 1.0;
        Octonion(a)
    }

    pub fn conj(&self) -> Self {
        let mut a = self.0.map(|v| -v);
        a[0] = self.0[0];
        Octonion(a)
    }

    /// Euclidean norm over all eight coefficients.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        MulTable::standard().mul(&self, &rhs)
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(self.0.map(|v| -v))
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, s: f64) -> Octonion {
        Octonion(self.0.map(|v| v * s))
    }
}

/// Q = S(Q) + V(Q) with V(Q) the e₁…e₄ part, stored in slots 0…3 of R⁴₁.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ParticularOctonion {
    pub scalar: f64,
    pub vector: Vec4,
}

impl ParticularOctonion {
    pub fn new(scalar: f64, vector: Vec4) -> Self {
        Self { scalar, vector }
    }

    pub fn pure(vector: Vec4) -> Self {
        Self { scalar: 0.0, vector }
    }

    pub fn to_octonion(&self) -> Octonion {
        let v = self.vector.0;
        Octonion([self.scalar, v[0], v[1], v[2], v[3], 0.0, 0.0, 0.0])
    }

    /// `None` unless the e₅, e₆, e₇ coefficients are exactly zero.
    pub fn from_octonion(q: &Octonion) -> Option<Self> {
        let a = q.0;
        (a[5] == 0.0 && a[6] == 0.0 && a[7] == 0.0)
            .then(|| Self::new(a[0], Vec4::new(a[1], a[2], a[3], a[4])))
    }
}

/// Checks |⟨I,I⟩| = 1.
pub fn check_unit_i(i: &Vec4) -> Result<(), GeometryError> {
    let q = i.quad();
    if (q.abs() - 1.0).abs() <= tolerance::MEMBERSHIP {
        Ok(())
    } else {
        Err(GeometryError::NonUnitI(q))
    }
}

/// Q ⋆ P ⋆ I = S(Q)S(P) − ⟨V(Q),V(P)⟩ + S(Q)V(P) + S(P)V(Q) + V(Q)×V(P)×I.
pub fn particular_product(
    q: &ParticularOctonion,
    p: &ParticularOctonion,
    i: &Vec4,
) -> Result<ParticularOctonion, GeometryError> {
    check_unit_i(i)?;
    Ok(ParticularOctonion {
        scalar: q.scalar * p.scalar - q.vector.dot(&p.vector),
        vector: q.scalar * p.vector + p.scalar * q.vector + cross4(&q.vector, &p.vector, i),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: usize) -> Octonion {
        Octonion::unit(k)
    }

    #[test]
    fn seed_and_derived_products() {
        let t = MulTable::build((1, 2, 4)).unwrap();
        assert_eq!(t.get(1, 2), SignedUnit { sign: 1, index: 4 });
        assert_eq!(t.get(2, 3), SignedUnit { sign: 1, index: 5 });
        assert_eq!(t.get(2, 4), SignedUnit { sign: 1, index: 1 });
    }

    #[test]
    fn basis_products() {
        assert_eq!(e(1) * e(1), -Octonion::ONE);
        assert_eq!(e(2) * e(1), -e(4));
        assert_eq!((e(1) * e(2)) * e(3), -e(6));
        assert_eq!(e(1) * (e(2) * e(3)), e(6));
    }

    #[test]
    fn bad_seeds_are_rejected() {
        assert!(matches!(
            MulTable::build((1, 1, 4)),
            Err(TableError::InvalidSeed(..))
        ));
        assert!(matches!(
            MulTable::build((1, 2, 3)),
            Err(TableError::InconsistentSeed { .. })
        ));
    }

    #[test]
    fn csv_shape() {
        let csv = MulTable::standard().to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "row,e1,e2,e3,e4,e5,e6,e7");
        assert!(lines[1].starts_with("e1,-0,+4,"));
    }

    #[test]
    fn star_product_with_scalar_identity() {
        let i = Vec4::basis(3);
        let one = ParticularOctonion::new(1.0, Vec4::ZERO);
        let p = ParticularOctonion::new(0.5, Vec4::new(1.0, -2.0, 0.3, 4.0));
        assert_eq!(particular_product(&one, &p, &i).unwrap(), p);
    }

    #[test]
    fn star_product_of_pure_octonions() {
        let i = Vec4::basis(3);
        let u = Vec4::new(0.2, 1.0, -0.5, 0.1);
        let v = Vec4::new(1.5, 0.0, 2.0, -1.0);
        let r = particular_product(&ParticularOctonion::pure(u), &ParticularOctonion::pure(v), &i)
            .unwrap();
        assert_eq!(r.scalar, -u.dot(&v));
        assert_eq!(r.vector, cross4(&u, &v, &i));
    }

    #[test]
    fn star_product_rejects_non_unit_i() {
        let q = ParticularOctonion::new(1.0, Vec4::ZERO);
        let err = particular_product(&q, &q, &Vec4::new(0.0, 0.0, 0.0, 2.0)).unwrap_err();
        assert_eq!(err, GeometryError::NonUnitI(4.0));
    }

    #[test]
    fn particular_round_trip() {
        let q = ParticularOctonion::new(2.0, Vec4::new(1.0, 2.0, 3.0, 4.0));
        assert_eq!(ParticularOctonion::from_octonion(&q.to_octonion()), Some(q));
        assert_eq!(ParticularOctonion::from_octonion(&e(6)), None);
    }
}
