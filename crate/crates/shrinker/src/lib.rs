//! Self-similar surfaces of mean curvature flow in Euclidean 3-space.
//!
//! A surface shrinking homothetically under mean curvature flow satisfies a
//! pointwise residual equation in its first and second fundamental forms.
//! This crate evaluates that residual on arbitrary surface patches, expands
//! it into trigonometric polynomials for circle-foliated (cyclic) surfaces
//! and into cubics for ruled surfaces, verifies the coefficient identities
//! behind the classification of those families, and constructs the surviving
//! solutions (spheres, cylinders, closed planar shrinking curves, and the
//! shrinking torus of revolution) by ODE shooting, with dynamic validation by
//! curve-shortening flow.
//!
//! All numerics are generic over the scalar type via [`scalar::Real`]
//! (`f32` or `f64`); the crate root exports `f64` aliases for the common
//! types, which is what the CLI and the verification suites use.

// `!(x > 0)` is used on purpose in validation: unlike `x <= 0` it also
// rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cyclic;
pub mod dual;
pub mod fourier;
pub mod geometry;
pub mod ode;
pub mod patches;
pub mod root;
pub mod ruled;
pub mod scalar;
pub mod solutions;
pub mod trigpoly;
pub mod vec3;

pub use scalar::Real;

/// Default concrete scalar used by the CLI and the acceptance suites.
pub type Scalar = f64;
pub type Vec3f = vec3::Vec3<Scalar>;
pub type Dual2f = dual::Dual2<Scalar>;
pub type TrigPolyf = trigpoly::TrigPoly<Scalar>;
pub type ImmersionJet2f = geometry::ImmersionJet2<Scalar>;
pub type FormDataf = geometry::FormData<Scalar>;
pub type CyclicJetf = cyclic::CyclicJet<Scalar>;
pub type ParallelCircleJetf = cyclic::ParallelCircleJet<Scalar>;
pub type RuledJetf = ruled::RuledJet<Scalar>;
pub type SampledCurvef = solutions::SampledCurve<Scalar>;
