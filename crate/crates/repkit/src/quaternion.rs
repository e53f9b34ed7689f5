//! Unit quaternions on a fixed-precision grid.
//!
//! Group elements are realized as unit quaternions. Coordinates are kept at
//! full f64 precision, but identity of elements is decided on a canonical
//! grid: each coordinate rounded to 12 decimal digits. All catalog groups
//! have coordinates separated by far more than the grid pitch, so equality
//! after canonicalization is exact.

use crate::error::{Error, Result};

/// Grid pitch for canonical equality: 12 decimal digits.
const KEY_SCALE: f64 = 1e12;
/// Coarser pitch used by the closure resolver; tolerant of the ~1e-12
/// drift different multiplication paths can accumulate.
const BUCKET_SCALE: f64 = 1e9;
/// Unit-norm tolerance on construction.
const NORM_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

fn grid(v: f64, scale: f64) -> i64 {
    let r = (v * scale).round();
    if r == 0.0 {
        0 // normalizes -0.0
    } else {
        r as i64
    }
}

impl Quaternion {
    pub const IDENTITY: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const MINUS_IDENTITY: Quaternion = Quaternion { w: -1.0, x: 0.0, y: 0.0, z: 0.0 };

    /// Checked constructor: rejects non-unit inputs.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Quaternion> {
        let n2 = w * w + x * x + y * y + z * z;
        if (n2 - 1.0).abs() > 3.0 * NORM_TOL {
            return Err(Error::InvalidSpec(format!(
                "quaternion ({w}, {x}, {y}, {z}) is not unit norm"
            )));
        }
        Ok(Quaternion { w, x, y, z })
    }

    /// Rotation by `angle` radians about the z axis, as the SU(2) element
    /// with half-angle phase.
    pub fn rotation_z(angle: f64) -> Quaternion {
        let h = angle / 2.0;
        Quaternion { w: h.cos(), x: 0.0, y: 0.0, z: h.sin() }
    }

    pub fn mul(&self, o: &Quaternion) -> Quaternion {
        Quaternion {
            w: self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            x: self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            y: self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            z: self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        }
    }

    pub fn conjugate(&self) -> Quaternion {
        Quaternion { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    pub fn negated(&self) -> Quaternion {
        Quaternion { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// Canonical grid key; equality and hashing go through this.
    pub fn canonical_key(&self) -> [i64; 4] {
        [
            grid(self.w, KEY_SCALE),
            grid(self.x, KEY_SCALE),
            grid(self.y, KEY_SCALE),
            grid(self.z, KEY_SCALE),
        ]
    }

    pub(crate) fn bucket_key(&self) -> [i64; 4] {
        [
            grid(self.w, BUCKET_SCALE),
            grid(self.x, BUCKET_SCALE),
            grid(self.y, BUCKET_SCALE),
            grid(self.z, BUCKET_SCALE),
        ]
    }

    /// Representative of the pair {q, -q}: first nonzero coordinate (on the
    /// coarse grid) is made positive. Used when elements are SO(3) rotations.
    pub fn canonical_sign(&self) -> Quaternion {
        for v in [self.w, self.x, self.y, self.z] {
            let g = grid(v, BUCKET_SCALE);
            if g > 0 {
                return *self;
            }
            if g < 0 {
                return self.negated();
            }
        }
        *self
    }

    /// SU(2) rotation angle in [0, 2pi]: cos(theta/2) = w.
    pub fn rotation_angle_su2(&self) -> f64 {
        2.0 * self.w.clamp(-1.0, 1.0).acos()
    }

    /// SO(3) rotation angle in [0, pi] of the rotation represented by +-q.
    pub fn rotation_angle_so3(&self) -> f64 {
        2.0 * self.w.abs().clamp(0.0, 1.0).acos()
    }
}

impl PartialEq for Quaternion {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}

impl Eq for Quaternion {}

impl std::hash::Hash for Quaternion {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.canonical_key().hash(state);
    }
}

impl std::fmt::Display for Quaternion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:.12}, {:.12}, {:.12}, {:.12})", self.w, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_unit() {
        assert!(Quaternion::new(1.0, 1.0, 0.0, 0.0).is_err());
        assert!(Quaternion::new(0.5, 0.5, 0.5, 0.5).is_ok());
    }

    #[test]
    fn grid_equality_is_exact() {
        let a = Quaternion::new(0.5, 0.5, 0.5, 0.5).unwrap();
        let b = Quaternion::new(0.5 + 1e-14, 0.5, 0.5 - 1e-14, 0.5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.canonical_key(), b.canonical_key());
    }

    #[test]
    fn hamilton_relations() {
        let i = Quaternion::new(0.0, 1.0, 0.0, 0.0).unwrap();
        let j = Quaternion::new(0.0, 0.0, 1.0, 0.0).unwrap();
        let k = Quaternion::new(0.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.negated());
        assert_eq!(i.mul(&i), Quaternion::MINUS_IDENTITY);
    }

    #[test]
    fn angles() {
        let q = Quaternion::rotation_z(std::f64::consts::PI / 2.0);
        assert!((q.rotation_angle_su2() - std::f64::consts::PI / 2.0).abs() < 1e-12);
        let m = Quaternion::MINUS_IDENTITY;
        assert!((m.rotation_angle_su2() - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        assert!(m.rotation_angle_so3().abs() < 1e-12);
        // -q represents the same rotation
        let q = Quaternion::new(0.5, 0.5, 0.5, 0.5).unwrap();
        assert!((q.rotation_angle_so3() - q.negated().rotation_angle_so3()).abs() < 1e-12);
    }

    #[test]
    fn canonical_sign_picks_one_representative() {
        let q = Quaternion::new(0.0, -1.0, 0.0, 0.0).unwrap();
        let c = q.canonical_sign();
        assert_eq!(c, Quaternion::new(0.0, 1.0, 0.0, 0.0).unwrap());
        assert_eq!(q.negated().canonical_sign(), c);
    }
}
