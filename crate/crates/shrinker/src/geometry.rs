//! Fundamental forms, mean curvature, support function, and the self-shrinker
//! residual for surface patches in Euclidean 3-space.
//!
//! A surface `X(s, t)` moving by mean curvature shrinks homothetically with
//! parameter `lambda` exactly when
//!
//! ```text
//! ebar G + gbar E - 2 fbar F + 2 lambda (E G - F^2) det(X, X_s, X_t) = 0
//! ```
//!
//! at every point, where `E, F, G` is the first fundamental form and
//! `ebar = <X_ss, X_s x X_t>` etc. are the cross-product-weighted second-form
//! coefficients. Everything here works pointwise on second-order jets; the
//! jets themselves come from [`eval_jet2`] (forward-mode differentiation of a
//! patch expression) or from the closed-form jet builders in the circle- and
//! ruling-foliated modules.

use crate::dual::Dual2;
use crate::scalar::Real;
use crate::vec3::Vec3;
use thiserror::Error;

/// Relative threshold on `W = EG - F^2` below which a jet is treated as
/// degenerate: `W > REGULARITY_EPS * scale^4` with `scale` the largest
/// first-derivative coordinate.
pub const REGULARITY_EPS: f64 = 1e-12;

/// Points with `|det(X, X_s, X_t)| <= DET_EPS * scale^3` are excluded when
/// inverting the residual for lambda.
pub const DET_EPS: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum GeometryError<T: Real> {
    #[error("degenerate patch: W = {w} at scale {scale}")]
    DegeneratePatch { w: T, scale: T },
    #[error("jet evaluation left the patch domain (non-finite derivative data)")]
    DomainError,
    #[error(
        "lambda is indeterminate: |det(X, X_s, X_t)| below threshold on every sample (minimal candidate)"
    )]
    IndeterminateLambda,
}

/// Position and all first/second parameter derivatives of a patch at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImmersionJet2<T> {
    pub x: Vec3<T>,
    pub x_s: Vec3<T>,
    pub x_t: Vec3<T>,
    pub x_ss: Vec3<T>,
    pub x_st: Vec3<T>,
    pub x_tt: Vec3<T>,
}

impl<T: Real> ImmersionJet2<T> {
    /// Homothety `X -> c X` (every derivative vector scales with `c`).
    pub fn scaled(&self, c: T) -> Self {
        ImmersionJet2 {
            x: self.x * c,
            x_s: self.x_s * c,
            x_t: self.x_t * c,
            x_ss: self.x_ss * c,
            x_st: self.x_st * c,
            x_tt: self.x_tt * c,
        }
    }

    /// The jet of the same surface with the roles of `s` and `t` swapped.
    pub fn swapped_params(&self) -> Self {
        ImmersionJet2 {
            x: self.x,
            x_s: self.x_t,
            x_t: self.x_s,
            x_ss: self.x_tt,
            x_st: self.x_st,
            x_tt: self.x_ss,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite()
            && self.x_s.is_finite()
            && self.x_t.is_finite()
            && self.x_ss.is_finite()
            && self.x_st.is_finite()
            && self.x_tt.is_finite()
    }

    /// Largest first-derivative coordinate; sets the regularity scale.
    pub fn derivative_scale(&self) -> T {
        self.x_s.max_abs().max(self.x_t.max_abs())
    }

    /// Largest coordinate over position and first derivatives; sets the
    /// scale for det-based thresholds.
    pub fn position_scale(&self) -> T {
        self.x.max_abs().max(self.derivative_scale())
    }
}

/// First form, weighted second form, `det(X, X_s, X_t)` and `W = EG - F^2`.
#[derive(Clone, Copy, Debug)]
pub struct FormData<T> {
    /// E = |X_s|^2
    pub e: T,
    /// F = <X_s, X_t>
    pub f: T,
    /// G = |X_t|^2
    pub g: T,
    /// ebar = <X_ss, X_s x X_t>
    pub ebar: T,
    /// fbar = <X_st, X_s x X_t>
    pub fbar: T,
    /// gbar = <X_tt, X_s x X_t>
    pub gbar: T,
    /// det(X, X_s, X_t)
    pub det_x: T,
    /// W = E G - F^2
    pub w: T,
    /// X_s x X_t (unnormalized normal)
    pub cross: Vec3<T>,
}

impl<T: Real> FormData<T> {
    /// Classical second-form coefficient e = ebar / sqrt(W).
    pub fn second_e(&self) -> T {
        self.ebar / self.w.sqrt()
    }

    pub fn second_f(&self) -> T {
        self.fbar / self.w.sqrt()
    }

    pub fn second_g(&self) -> T {
        self.gbar / self.w.sqrt()
    }

    /// Unit normal `X_s x X_t / |X_s x X_t|`.
    pub fn unit_normal(&self) -> Vec3<T> {
        self.cross.scale(self.w.sqrt().recip())
    }
}

/// Homothety parameter: positive shrinks, negative expands, zero is minimal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShrinkerParam<T> {
    pub lambda: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Shrinker,
    Expander,
    Minimal,
}

impl<T: Real> ShrinkerParam<T> {
    pub fn regime(&self) -> Regime {
        if self.lambda > T::zero() {
            Regime::Shrinker
        } else if self.lambda < T::zero() {
            Regime::Expander
        } else {
            Regime::Minimal
        }
    }
}

/// All form data from a jet, with no regularity gate. The fields are
/// polynomial in the jet entries, so this is well-defined even where the
/// immersion degenerates; the gated consumers check `w` themselves.
pub fn fundamental_data_raw<T: Real>(jet: &ImmersionJet2<T>) -> FormData<T> {
    let cross = jet.x_s.cross(jet.x_t);
    let e = jet.x_s.norm_sq();
    let f = jet.x_s.dot(jet.x_t);
    let g = jet.x_t.norm_sq();
    FormData {
        e,
        f,
        g,
        ebar: jet.x_ss.dot(cross),
        fbar: jet.x_st.dot(cross),
        gbar: jet.x_tt.dot(cross),
        det_x: jet.x.dot(cross),
        w: e * g - f * f,
        cross,
    }
}

/// Form data for a regular jet; degenerate patches (`W` below the relative
/// threshold) are refused rather than returning noise.
pub fn fundamental_data<T: Real>(jet: &ImmersionJet2<T>) -> Result<FormData<T>, GeometryError<T>> {
    let fd = fundamental_data_raw(jet);
    let scale = jet.derivative_scale();
    let floor = T::of(REGULARITY_EPS) * scale.powi(4);
    if !(fd.w > floor) || !fd.w.is_finite() {
        return Err(GeometryError::DegeneratePatch { w: fd.w, scale });
    }
    Ok(fd)
}

/// Mean curvature `H = (ebar G + gbar E - 2 fbar F) / (2 W^{3/2})` and
/// support function `<X, N> = det(X, X_s, X_t) / sqrt(W)`.
pub fn mean_curvature_and_support<T: Real>(fd: &FormData<T>) -> Result<(T, T), GeometryError<T>> {
    if !(fd.w > T::zero()) {
        return Err(GeometryError::DegeneratePatch {
            w: fd.w,
            scale: T::one(),
        });
    }
    let sqrt_w = fd.w.sqrt();
    let h = residual_lhs(fd) / (T::of(2.0) * fd.w * sqrt_w);
    let support = fd.det_x / sqrt_w;
    Ok((h, support))
}

/// `ebar G + gbar E - 2 fbar F`, grouped so that swapping the parameter roles
/// negates the result exactly in floating point.
#[inline]
pub fn residual_lhs<T: Real>(fd: &FormData<T>) -> T {
    (fd.ebar * fd.g + fd.gbar * fd.e) - T::of(2.0) * (fd.fbar * fd.f)
}

/// The self-shrinker residual evaluated on raw form data.
#[inline]
pub fn shrinker_residual_form<T: Real>(fd: &FormData<T>, lambda: T) -> T {
    residual_lhs(fd) + (T::of(2.0) * lambda) * (fd.w * fd.det_x)
}

/// Left side of the self-shrinker equation at a jet; zero at every point of a
/// patch exactly when the surface is self-similar with parameter `lambda`.
/// No regularity gate: the expression is polynomial in the jet.
pub fn shrinker_residual_raw<T: Real>(jet: &ImmersionJet2<T>, lambda: T) -> T {
    shrinker_residual_form(&fundamental_data_raw(jet), lambda)
}

/// Gated variant of [`shrinker_residual_raw`]: errors on degenerate jets.
pub fn shrinker_residual<T: Real>(
    jet: &ImmersionJet2<T>,
    lambda: T,
) -> Result<T, GeometryError<T>> {
    let fd = fundamental_data(jet)?;
    Ok(shrinker_residual_form(&fd, lambda))
}

/// A parametrized surface patch, evaluated on second-order jets.
///
/// Implemented for any closure `Fn(Dual2<T>, Dual2<T>) -> [Dual2<T>; 3]`, so
/// patches are written as plain coordinate expressions.
pub trait SurfacePatch<T: Real> {
    fn eval(&self, s: Dual2<T>, t: Dual2<T>) -> [Dual2<T>; 3];
}

impl<T: Real, F> SurfacePatch<T> for F
where
    F: Fn(Dual2<T>, Dual2<T>) -> [Dual2<T>; 3],
{
    fn eval(&self, s: Dual2<T>, t: Dual2<T>) -> [Dual2<T>; 3] {
        self(s, t)
    }
}

/// Position and all five derivative vectors of a patch at `(s, t)`, exact to
/// rounding. Non-finite results (evaluation outside the patch domain) are a
/// domain error.
pub fn eval_jet2<T: Real, P: SurfacePatch<T> + ?Sized>(
    patch: &P,
    s: T,
    t: T,
) -> Result<ImmersionJet2<T>, GeometryError<T>> {
    let [x, y, z] = patch.eval(Dual2::var_s(s), Dual2::var_t(t));
    let jet = ImmersionJet2 {
        x: Vec3::new(x.v, y.v, z.v),
        x_s: Vec3::new(x.ds, y.ds, z.ds),
        x_t: Vec3::new(x.dt, y.dt, z.dt),
        x_ss: Vec3::new(x.dss, y.dss, z.dss),
        x_st: Vec3::new(x.dst, y.dst, z.dst),
        x_tt: Vec3::new(x.dtt, y.dtt, z.dtt),
    };
    if !jet.is_finite() {
        return Err(GeometryError::DomainError);
    }
    Ok(jet)
}

/// Cell-centered `(s, t)` sample grid.
pub fn grid_samples<T: Real>(
    s_range: (T, T),
    t_range: (T, T),
    ns: usize,
    nt: usize,
) -> Vec<(T, T)> {
    let mut out = Vec::with_capacity(ns * nt);
    let half = T::of(0.5);
    let ds = (s_range.1 - s_range.0) / T::of(ns as f64);
    let dt = (t_range.1 - t_range.0) / T::of(nt as f64);
    for i in 0..ns {
        let s = s_range.0 + (T::of(i as f64) + half) * ds;
        for j in 0..nt {
            let t = t_range.0 + (T::of(j as f64) + half) * dt;
            out.push((s, t));
        }
    }
    out
}

/// Invert the residual for `lambda` pointwise and average over the grid,
/// skipping points where `det(X, X_s, X_t)` is too small to divide by.
/// Returns `(lambda, spread)`; a spread near zero certifies self-similarity.
pub fn fit_lambda<T: Real, P: SurfacePatch<T> + ?Sized>(
    patch: &P,
    samples: &[(T, T)],
) -> Result<(T, T), GeometryError<T>> {
    let mut values = Vec::new();
    for &(s, t) in samples {
        let jet = eval_jet2(patch, s, t)?;
        let fd = fundamental_data_raw(&jet);
        let scale = jet.position_scale();
        if fd.det_x.abs() <= T::of(DET_EPS) * scale.powi(3) {
            continue;
        }
        values.push(-residual_lhs(&fd) / (T::of(2.0) * fd.w * fd.det_x));
    }
    if values.is_empty() {
        return Err(GeometryError::IndeterminateLambda);
    }
    let n = T::of(values.len() as f64);
    let mean = values.iter().fold(T::zero(), |acc, &v| acc + v) / n;
    let spread = values
        .iter()
        .map(|&v| (v - mean).abs())
        .fold(T::zero(), T::max);
    Ok((mean, spread))
}
