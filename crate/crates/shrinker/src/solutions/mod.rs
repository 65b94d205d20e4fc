//! Construction of the self-similar surfaces the classification permits --
//! spheres, planes, cylinders over closed planar shrinking curves, and the
//! shrinking torus of revolution -- plus dynamic verification by
//! curve-shortening flow.
//!
//! All shooting normalizes nothing away: the ODEs carry the shrinker
//! parameter explicitly, so the homothety covariance of the equation
//! (`X -> c X`, `lambda -> lambda / c^2`) is verified numerically rather
//! than being true by construction.

mod canonical;
mod curve;
mod flow;
mod shoot;
mod spline;

pub use canonical::{
    CanonicalKind, CanonicalSurface, RevolvedPatch, canonical_shrinker, revolve_profile,
};
pub use curve::{CurveKind, SampledCurve, hausdorff_distance};
pub use flow::{csf_evolve, self_similarity_check};
pub use shoot::{
    ShootResult, abresch_langer_closed, abresch_langer_half_period_angle, abresch_langer_shoot,
    abresch_langer_shoot_periods, angenent_profile_shoot,
};
pub use spline::CubicSpline;

use crate::scalar::Real;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolutionsError<T: Real> {
    #[error("invalid argument: {reason}")]
    InvalidArgument { reason: &'static str },
    #[error("invalid curve: {reason}")]
    InvalidCurve { reason: &'static str },
    #[error("profile touches the rotation axis")]
    AxisDegenerate,
    #[error("bracket failure: {reason}")]
    Bracket { reason: &'static str },
    #[error("curvature blow-up stopped the flow at t = {time_reached}")]
    FlowBlowup { time_reached: T },
}
