//! Canned surface patches.

use crate::dual::Dual2;
use crate::geometry::SurfacePatch;
use crate::scalar::Real;
use crate::vec3::Vec3;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Round sphere `R (sin s cos t, sin s sin t, cos s)`.
#[derive(Clone, Copy, Debug)]
pub struct SpherePatch<T> {
    pub radius: T,
}

impl<T: Real> SurfacePatch<T> for SpherePatch<T> {
    fn eval(&self, s: Dual2<T>, t: Dual2<T>) -> [Dual2<T>; 3] {
        let r = self.radius;
        [s.sin() * t.cos() * r, s.sin() * t.sin() * r, s.cos() * r]
    }
}

/// Circular cylinder of radius `r` around a coordinate axis; `s` runs along
/// the axis and `t` around the circle.
#[derive(Clone, Copy, Debug)]
pub struct CylinderPatch<T> {
    pub radius: T,
    pub axis: Axis,
}

impl<T: Real> SurfacePatch<T> for CylinderPatch<T> {
    fn eval(&self, s: Dual2<T>, t: Dual2<T>) -> [Dual2<T>; 3] {
        let r = self.radius;
        let c = t.cos() * r;
        let sn = t.sin() * r;
        match self.axis {
            Axis::Z => [c, sn, s],
            Axis::X => [s, c, sn],
            Axis::Y => [sn, s, c],
        }
    }
}

/// Horizontal plane `(s, t, 0) + offset`.
#[derive(Clone, Copy, Debug)]
pub struct PlanePatch<T> {
    pub offset: Vec3<T>,
}

impl<T: Real> SurfacePatch<T> for PlanePatch<T> {
    fn eval(&self, s: Dual2<T>, t: Dual2<T>) -> [Dual2<T>; 3] {
        [
            s + self.offset.x,
            t + self.offset.y,
            Dual2::constant(self.offset.z),
        ]
    }
}
