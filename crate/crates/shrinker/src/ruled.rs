//! Ruled surfaces `X(s, t) = gamma(s) t + p(s)` with a spherical directrix.
//!
//! When the rulings are not parallel, `gamma` is a unit-speed curve on the
//! unit sphere and `(e1, e2, e3) = (gamma, gamma', e3)` is an orthonormal
//! ruling frame with `e1' = e2`, `e2' = k e3 - e1`, `e3' = -k e2`, where `k`
//! is the curvature of `gamma` in the sphere with respect to `e3`. The frame
//! here takes `e3 = gamma' x gamma`, the orientation under which the residual
//! cubic has leading ruling coefficients `c3 = 2 lambda b` and, for constant
//! `a` with `b = 0`, `c1 = a k'`. Writing `p = a e2 + b e3`, the shrinker
//! residual of the immersion is an exact cubic in the ruling parameter `t`
//! whose four coefficients drive the classification: a self-similar ruled
//! surface is a cylinder over a planar self-similar curve, or a piece of a
//! plane.
//!
//! An independent oracle (the residual of the explicitly embedded immersion
//! evaluated at four ruling parameters and interpolated) validates the
//! coefficient formulas; it lives in the tests and the acceptance suite.

use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RuledError<T: Real> {
    #[error("invalid jet: {reason}")]
    InvalidJet { reason: &'static str },
    #[error("jet stream inconsistent with a vanishing residual at stage '{stage}' (value {value})")]
    Contradiction { stage: &'static str, value: T },
}

/// Pointwise jet of a ruled surface: spherical curvature of the directrix
/// and the ruling-frame coordinates of `p` with derivatives.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuledJet<T> {
    pub k: T,
    pub kp: T,
    pub a: T,
    pub ap: T,
    pub app: T,
    pub b: T,
    pub bp: T,
    pub bpp: T,
}

impl<T: Real> RuledJet<T> {
    /// `sigma = a' - k b`, the e2-component of `p'`.
    pub fn sigma(&self) -> T {
        self.ap - self.k * self.b
    }

    /// `mu = b' + k a`, the e3-component of `p'`.
    pub fn mu(&self) -> T {
        self.bp + self.k * self.a
    }

    /// Frame components of `p''`.
    pub fn p_second(&self) -> [T; 3] {
        let two = T::of(2.0);
        [
            -two * self.ap + self.k * self.b,
            self.app
                - self.a * (T::one() + self.k * self.k)
                - self.kp * self.b
                - two * self.k * self.bp,
            self.bpp + self.kp * self.a + two * self.k * self.ap - self.k * self.k * self.b,
        ]
    }

    /// Constant part of `det(X, X_s, X_t) = b t + (b sigma - a mu)`.
    pub fn det_const(&self) -> T {
        self.b * self.sigma() - self.a * self.mu()
    }

    pub fn magnitude(&self) -> T {
        [
            self.k, self.kp, self.a, self.ap, self.app, self.b, self.bp, self.bpp,
        ]
        .into_iter()
        .fold(T::one(), |m, v| m.max(v.abs()))
    }
}

/// A real cubic `c0 + c1 t + c2 t^2 + c3 t^3`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyInT<T> {
    pub c0: T,
    pub c1: T,
    pub c2: T,
    pub c3: T,
}

impl<T: Real> PolyInT<T> {
    pub fn eval(&self, t: T) -> T {
        ((self.c3 * t + self.c2) * t + self.c1) * t + self.c0
    }

    pub fn coeffs(&self) -> [T; 4] {
        [self.c0, self.c1, self.c2, self.c3]
    }

    /// The cubic through four `(t, value)` points (Lagrange interpolation).
    pub fn interpolate(points: &[(T, T); 4]) -> Self {
        let mut c = [T::zero(); 4];
        for i in 0..4 {
            // basis polynomial for node i
            let mut num = [T::one(), T::zero(), T::zero(), T::zero()];
            let mut denom = T::one();
            for j in 0..4 {
                if i == j {
                    continue;
                }
                // multiply num by (t - t_j)
                let tj = points[j].0;
                let mut next = [T::zero(); 4];
                for (d, &cd) in num.iter().enumerate() {
                    next[d] -= cd * tj;
                    if d + 1 < 4 {
                        next[d + 1] += cd;
                    }
                }
                num = next;
                denom *= points[i].0 - tj;
            }
            let w = points[i].1 / denom;
            for d in 0..4 {
                c[d] += w * num[d];
            }
        }
        PolyInT {
            c0: c[0],
            c1: c[1],
            c2: c[2],
            c3: c[3],
        }
    }
}

/// Exact coefficients of the shrinker residual of `X = gamma t + p` as a
/// cubic in the ruling parameter, from the frame formulas
/// `E G - F^2 = (t + sigma)^2 + mu^2`, `fbar = -mu`, `gbar = 0`,
/// `det(X, X_s, X_t) = b t + (b sigma - a mu)` and
/// `ebar = k t^2 + (k sigma + P3) t + (sigma P3 - mu P2)`.
pub fn ruled_residual_poly<T: Real>(rj: &RuledJet<T>, lambda: T) -> PolyInT<T> {
    let two = T::of(2.0);
    let sigma = rj.sigma();
    let mu = rj.mu();
    let [_, p2, p3] = rj.p_second();
    let d0 = rj.det_const();
    let w0 = sigma * sigma + mu * mu;
    PolyInT {
        c3: two * lambda * rj.b,
        c2: rj.k + two * lambda * (d0 + two * sigma * rj.b),
        c1: rj.k * sigma + p3 + two * lambda * (two * sigma * d0 + w0 * rj.b),
        c0: sigma * p3 - mu * p2 - two * rj.a * mu + two * lambda * w0 * d0,
    }
}

/// For constant `a` and `b = 0`: checks the determinant identities
/// `det(p'', gamma', gamma) = a k'` and `det(p'', p', gamma) = a^2 k (1 + k^2)`
/// in the ruling frame. Returns the two defects (both should be ~0).
pub fn ruled_identity_check<T: Real>(rj: &RuledJet<T>) -> Result<(T, T), RuledError<T>> {
    let eps = T::of(1e-13) * rj.magnitude();
    if rj.b.abs() > eps || rj.bp.abs() > eps || rj.bpp.abs() > eps {
        return Err(RuledError::InvalidJet {
            reason: "requires b = b' = b'' = 0",
        });
    }
    if rj.ap.abs() > eps || rj.app.abs() > eps {
        return Err(RuledError::InvalidJet {
            reason: "requires constant a (a' = a'' = 0)",
        });
    }
    let sigma = rj.sigma();
    let mu = rj.mu();
    let [_, p2, p3] = rj.p_second();
    let det1 = p3; // det(p'', gamma', gamma)
    let det2 = sigma * p3 - mu * p2; // det(p'', p', gamma)
    let d1 = det1 - rj.a * rj.kp;
    let d2 = det2 - rj.a * rj.a * rj.k * (T::one() + rj.k * rj.k);
    Ok((d1, d2))
}

/// Residual cubic of the explicitly embedded immersion, interpolated through
/// four ruling parameters: an independent cross-check of
/// [`ruled_residual_poly`] that goes through the general-surface machinery
/// instead of the frame formulas. The ruling frame is embedded at the
/// identity with `e3 = gamma' x gamma` mapped to `-z`.
pub fn embedded_residual_oracle<T: Real>(rj: &RuledJet<T>, lambda: T) -> PolyInT<T> {
    use crate::dual::Dual2;
    use crate::geometry::{eval_jet2, shrinker_residual_raw};
    let (k, kp) = (rj.k, rj.kp);
    let one = T::one();
    let e = |c1: T, c2: T, c3: T| [c1, c2, -c3];
    // value, first and second derivative of each frame field at s = 0
    let e1 = [
        e(one, T::zero(), T::zero()),
        e(T::zero(), one, T::zero()),
        e(-one, T::zero(), k),
    ];
    let e2 = [
        e(T::zero(), one, T::zero()),
        e(-one, T::zero(), k),
        e(T::zero(), -(one + k * k), kp),
    ];
    let e3 = [
        e(T::zero(), T::zero(), one),
        e(T::zero(), -k, T::zero()),
        e(k, -kp, -k * k),
    ];
    let half = T::of(0.5);
    let quad = move |v: [[T; 3]; 3], s: Dual2<T>, i: usize| {
        s * s * (half * v[2][i]) + s * v[1][i] + v[0][i]
    };
    let (a0, ap, app) = (rj.a, rj.ap, rj.app);
    let (b0, bp, bpp) = (rj.b, rj.bp, rj.bpp);
    let patch = move |s: Dual2<T>, t: Dual2<T>| {
        let a = s * s * (half * app) + s * ap + a0;
        let b = s * s * (half * bpp) + s * bp + b0;
        [
            quad(e1, s, 0) * t + a * quad(e2, s, 0) + b * quad(e3, s, 0),
            quad(e1, s, 1) * t + a * quad(e2, s, 1) + b * quad(e3, s, 1),
            quad(e1, s, 2) * t + a * quad(e2, s, 2) + b * quad(e3, s, 2),
        ]
    };
    let ts = [T::of(-1.5), T::of(-0.5), T::of(0.5), T::of(1.5)];
    let mut pts = [(T::zero(), T::zero()); 4];
    for (i, &t) in ts.iter().enumerate() {
        let jet = eval_jet2(&patch, T::zero(), t).expect("polynomial patch is finite");
        pts[i] = (t, shrinker_residual_raw(&jet, lambda));
    }
    PolyInT::interpolate(&pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuledClassification {
    /// Parallel rulings: the surface is a cylinder over a planar curve that
    /// must itself be self-similar (checked by the solutions module).
    CylinderOverPlanarShrinker,
    /// The non-parallel chain forces the directrix curvature to vanish: the
    /// surface is a piece of a plane.
    Plane,
}

/// The deduction chain of the ruled classification on a stream of jets
/// claimed to satisfy a vanishing residual:
/// `c3 = 2 lambda b = 0` forces `b = 0`; then `c2 = k (1 - 2 lambda a^2) = 0`
/// forces `k = 0` (plane) or constant `a` with `2 lambda a^2 = 1`; then
/// `c1 = a k'` forces constant `k`, and the constant term `-a^2 k` closes the
/// chain: the curvature must vanish and the surface is a piece of a plane.
pub fn classify_ruled_jets<T: Real>(
    rulings_parallel: bool,
    jets: &[RuledJet<T>],
    lambda: T,
    tol: T,
) -> Result<RuledClassification, RuledError<T>> {
    if rulings_parallel {
        return Ok(RuledClassification::CylinderOverPlanarShrinker);
    }
    let mag = jets.iter().map(RuledJet::magnitude).fold(T::one(), T::max);
    let thr = tol * mag;
    for rj in jets {
        if rj.b.abs() > thr {
            return Err(RuledError::Contradiction {
                stage: "cubic coefficient 2 lambda b",
                value: rj.b,
            });
        }
    }
    if jets.iter().all(|rj| rj.k.abs() <= thr) {
        return Ok(RuledClassification::Plane);
    }
    // k does not vanish: c2 = k (1 - 2 lambda a^2) = 0 needs 2 lambda a^2 = 1
    if lambda <= T::zero() {
        return Err(RuledError::Contradiction {
            stage: "quadratic coefficient admits no a for lambda <= 0",
            value: lambda,
        });
    }
    let a_sq = (T::of(2.0) * lambda).recip();
    for rj in jets {
        if rj.k.abs() <= thr {
            continue;
        }
        if (rj.a * rj.a - a_sq).abs() > thr || rj.ap.abs() > thr {
            return Err(RuledError::Contradiction {
                stage: "quadratic coefficient needs constant a with 2 lambda a^2 = 1",
                value: rj.a,
            });
        }
        if rj.kp.abs() > thr {
            return Err(RuledError::Contradiction {
                stage: "linear coefficient a k' needs constant k",
                value: rj.kp,
            });
        }
    }
    // constant term reduces to -a^2 k, which forces k = 0: a piece of a plane
    Ok(RuledClassification::Plane)
}
