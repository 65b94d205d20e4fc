//! The classical self-shrinkers in closed form, and revolution of sampled
//! profiles into surface patches.

use super::SolutionsError;
use super::curve::{CurveKind, SampledCurve};
use super::spline::CubicSpline;
use crate::dual::Dual2;
use crate::geometry::SurfacePatch;
use crate::patches::{Axis, CylinderPatch, PlanePatch, SpherePatch};
use crate::scalar::Real;
use crate::vec3::Vec3;
use serde::{Deserialize, Serialize};

/// The classical shrinker families.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum CanonicalKind<T> {
    Sphere {
        radius: T,
    },
    Cylinder {
        radius: T,
        axis: Axis,
    },
    /// plane through the origin: minimal, residual vanishes for every lambda
    Plane,
}

/// A canonical patch together with its shrinker parameter.
#[derive(Clone, Copy, Debug)]
pub enum CanonicalSurface<T> {
    Sphere(SpherePatch<T>),
    Cylinder(CylinderPatch<T>),
    Plane(PlanePatch<T>),
}

impl<T: Real> SurfacePatch<T> for CanonicalSurface<T> {
    fn eval(&self, s: Dual2<T>, t: Dual2<T>) -> [Dual2<T>; 3] {
        match self {
            CanonicalSurface::Sphere(p) => p.eval(s, t),
            CanonicalSurface::Cylinder(p) => p.eval(s, t),
            CanonicalSurface::Plane(p) => p.eval(s, t),
        }
    }
}

/// The explicit chart and the unique shrinker parameter: `1 / R^2` for the
/// sphere of radius `R`, `1 / (2 r^2)` for the cylinder of radius `r`, and
/// `0` for the plane through the origin (minimal; its residual vanishes for
/// every lambda).
pub fn canonical_shrinker<T: Real>(
    kind: CanonicalKind<T>,
) -> Result<(CanonicalSurface<T>, T), SolutionsError<T>> {
    match kind {
        CanonicalKind::Sphere { radius } => {
            if !(radius > T::zero()) {
                return Err(SolutionsError::InvalidArgument {
                    reason: "radius must be positive",
                });
            }
            Ok((
                CanonicalSurface::Sphere(SpherePatch { radius }),
                (radius * radius).recip(),
            ))
        }
        CanonicalKind::Cylinder { radius, axis } => {
            if !(radius > T::zero()) {
                return Err(SolutionsError::InvalidArgument {
                    reason: "radius must be positive",
                });
            }
            Ok((
                CanonicalSurface::Cylinder(CylinderPatch { radius, axis }),
                (T::of(2.0) * radius * radius).recip(),
            ))
        }
        CanonicalKind::Plane => Ok((
            CanonicalSurface::Plane(PlanePatch {
                offset: Vec3::zero(),
            }),
            T::zero(),
        )),
    }
}

/// Surface of revolution `(r(s) cos t, r(s) sin t, z(s))` over a sampled
/// profile, with jets from spline-interpolated profile derivatives (cubic;
/// periodic for closed profiles, natural otherwise).
#[derive(Clone, Debug)]
pub struct RevolvedPatch<T> {
    r_spline: CubicSpline<T>,
    z_spline: CubicSpline<T>,
    /// arclength period (closed) or parameter range (open)
    pub length: T,
}

impl<T: Real> SurfacePatch<T> for RevolvedPatch<T> {
    fn eval(&self, s: Dual2<T>, t: Dual2<T>) -> [Dual2<T>; 3] {
        let r = self.r_spline.eval_jet(s);
        let z = self.z_spline.eval_jet(s);
        [r * t.cos(), r * t.sin(), z]
    }
}

/// Revolve a profile curve `(r, z)` around the z-axis. Profiles touching the
/// axis are refused.
///
/// Knot parameters are corrected from cumulative chord length to the spline's
/// own arclength (one fixed-point pass with Gauss-Legendre segment
/// quadrature), so the patch is arclength-parametrized to spline order
/// rather than to the O(h^2) chord bias.
pub fn revolve_profile<T: Real>(
    profile: &SampledCurve<T>,
) -> Result<RevolvedPatch<T>, SolutionsError<T>> {
    if profile.kind != CurveKind::Profile {
        return Err(SolutionsError::InvalidArgument {
            reason: "expected a profile curve (r, z)",
        });
    }
    if profile.points.len() < 4 {
        return Err(SolutionsError::InvalidCurve {
            reason: "too few points",
        });
    }
    if profile.points.iter().any(|p| !(p[0] > T::of(1e-9))) {
        return Err(SolutionsError::AxisDegenerate);
    }
    let rs: Vec<T> = profile.points.iter().map(|p| p[0]).collect();
    let zs: Vec<T> = profile.points.iter().map(|p| p[1]).collect();
    let build = |params: Vec<T>, total: T| -> (CubicSpline<T>, CubicSpline<T>) {
        if profile.closed {
            (
                CubicSpline::periodic(params.clone(), rs.clone(), total),
                CubicSpline::periodic(params, zs.clone(), total),
            )
        } else {
            (
                CubicSpline::natural(params.clone(), rs.clone()),
                CubicSpline::natural(params, zs.clone()),
            )
        }
    };
    let mut params = profile.params();
    let mut total = profile.total_length();
    for _ in 0..2 {
        let (r_spline, z_spline) = build(params.clone(), total);
        let n = params.len();
        let mut corrected = Vec::with_capacity(n);
        let mut acc = T::zero();
        corrected.push(acc);
        for i in 0..if profile.closed { n } else { n - 1 } {
            let a = params[i];
            let b = if i + 1 < n { params[i + 1] } else { total };
            acc += gauss5_arclength(&r_spline, &z_spline, a, b);
            if i + 1 < n {
                corrected.push(acc);
            }
        }
        total = if profile.closed {
            acc
        } else {
            *corrected.last().unwrap()
        };
        params = corrected;
    }
    let (r_spline, z_spline) = build(params, total);
    Ok(RevolvedPatch {
        r_spline,
        z_spline,
        length: total,
    })
}

/// 5-point Gauss-Legendre quadrature of the spline speed over `[a, b]`.
fn gauss5_arclength<T: Real>(rx: &CubicSpline<T>, rz: &CubicSpline<T>, a: T, b: T) -> T {
    const NODES: [f64; 5] = [
        -0.906_179_845_938_664,
        -0.538_469_310_105_683,
        0.0,
        0.538_469_310_105_683,
        0.906_179_845_938_664,
    ];
    const WEIGHTS: [f64; 5] = [
        0.236_926_885_056_189,
        0.478_628_670_499_366,
        0.568_888_888_888_889,
        0.478_628_670_499_366,
        0.236_926_885_056_189,
    ];
    let half = T::of(0.5);
    let mid = half * (a + b);
    let scale = half * (b - a);
    let mut acc = T::zero();
    for (node, weight) in NODES.iter().zip(WEIGHTS) {
        let u = mid + scale * T::of(*node);
        let dr = rx.eval_d1(u);
        let dz = rz.eval_d1(u);
        acc += T::of(weight) * (dr * dr + dz * dz).sqrt();
    }
    acc * scale
}
