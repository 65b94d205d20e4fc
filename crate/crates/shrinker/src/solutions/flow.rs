//! Curve-shortening flow for closed planar curves.
//!
//! Explicit stepping of the discrete curvature vector with periodic
//! spline remeshing back to uniform spacing. The discrete curvature
//! `2 (e+ / |e+| - e- / |e-|) / (|e+| + |e-|)` is exact on circles, so the
//! circle law `R(t) = sqrt(R0^2 - 2t)` is reproduced to the time-stepping
//! error.

use super::SolutionsError;
use super::curve::{SampledCurve, hausdorff_distance};
use crate::scalar::Real;

fn curvature_vectors<T: Real>(points: &[[T; 2]]) -> (Vec<[T; 2]>, T, T) {
    let n = points.len();
    let mut kn = vec![[T::zero(); 2]; n];
    let mut min_len = T::infinity();
    let mut max_kappa = T::zero();
    for i in 0..n {
        let prev = points[(i + n - 1) % n];
        let here = points[i];
        let next = points[(i + 1) % n];
        let em = [here[0] - prev[0], here[1] - prev[1]];
        let ep = [next[0] - here[0], next[1] - here[1]];
        let lm = (em[0] * em[0] + em[1] * em[1]).sqrt();
        let lp = (ep[0] * ep[0] + ep[1] * ep[1]).sqrt();
        min_len = min_len.min(lm.min(lp));
        let two = T::of(2.0);
        let denom = lm + lp;
        let v = [
            two * (ep[0] / lp - em[0] / lm) / denom,
            two * (ep[1] / lp - em[1] / lm) / denom,
        ];
        kn[i] = v;
        max_kappa = max_kappa.max((v[0] * v[0] + v[1] * v[1]).sqrt());
    }
    (kn, min_len, max_kappa)
}

/// Evolve a closed curve by curvature for time `t_final`, stepping at most
/// `dt` (further capped at `0.25 h_min^2` for stability) and remeshing to
/// uniform spacing every 20 steps. Curvature beyond `4 / h_min` stops the
/// flow early.
pub fn csf_evolve<T: Real>(
    curve: &SampledCurve<T>,
    dt: T,
    t_final: T,
) -> Result<SampledCurve<T>, SolutionsError<T>> {
    if !curve.closed {
        return Err(SolutionsError::InvalidCurve {
            reason: "flow needs a closed curve",
        });
    }
    if !(dt > T::zero()) || t_final < T::zero() {
        return Err(SolutionsError::InvalidArgument {
            reason: "need dt > 0 and t >= 0",
        });
    }
    let n = curve.points.len();
    let mut current = curve.clone();
    let mut t = T::zero();
    let mut steps_since_remesh = 0usize;
    while t < t_final {
        let (kn, h_min, kappa_max) = curvature_vectors(&current.points);
        if kappa_max > T::of(4.0) / h_min {
            return Err(SolutionsError::FlowBlowup { time_reached: t });
        }
        let cap = T::of(0.25) * h_min * h_min;
        let step = dt.min(cap).min(t_final - t);
        // a vanishing stable step means the curve is collapsing to a point
        // before t_final: stop with the time reached
        if step < T::of(1e-13) * t_final.max(T::one()) {
            return Err(SolutionsError::FlowBlowup { time_reached: t });
        }
        for (p, v) in current.points.iter_mut().zip(&kn) {
            p[0] += step * v[0];
            p[1] += step * v[1];
        }
        t += step;
        steps_since_remesh += 1;
        if steps_since_remesh >= 20 {
            current = current.resample_spline(n);
            steps_since_remesh = 0;
        }
    }
    Ok(current)
}

/// Symmetric Hausdorff distance between the evolved curve and the initial
/// curve rescaled by the self-similar law `sqrt(1 - 2 lambda T)`, both
/// densely resampled. Small exactly when the initial curve shrinks
/// homothetically with parameter `lambda`.
pub fn self_similarity_check<T: Real>(
    initial: &SampledCurve<T>,
    evolved: &SampledCurve<T>,
    lambda: T,
    t_final: T,
) -> Result<T, SolutionsError<T>> {
    let two = T::of(2.0);
    if !(t_final >= T::zero()) || two * lambda * t_final >= T::one() {
        return Err(SolutionsError::InvalidArgument {
            reason: "need 0 <= T < 1 / (2 lambda)",
        });
    }
    let factor = (T::one() - two * lambda * t_final).sqrt();
    let n = 512.max(initial.points.len()).max(evolved.points.len());
    let reference = initial.scaled(factor).resample_spline(n);
    let evolved = evolved.resample_spline(n);
    Ok(hausdorff_distance(&reference, &evolved))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_time_is_identity() {
        let c = SampledCurve::circle(1.0_f64, 128);
        let e = csf_evolve(&c, 1e-4, 0.0).unwrap();
        assert_eq!(c.points, e.points);
    }

    #[test]
    fn circle_follows_the_radius_law() {
        let c = SampledCurve::circle(1.0_f64, 512);
        let e = csf_evolve(&c, 1e-3, 0.1).unwrap();
        let expect = (1.0f64 - 2.0 * 0.1).sqrt();
        for p in &e.points {
            let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
            assert!((r - expect).abs() < 1e-4, "r = {r}, expect {expect}");
        }
        let d = self_similarity_check(&c, &e, 1.0, 0.1).unwrap();
        assert!(d < 1e-4, "distance {d}");
    }

    #[test]
    fn square_is_not_self_similar() {
        let c = SampledCurve::square(1.0_f64, 192);
        let e = csf_evolve(&c, 1e-4, 0.05).unwrap();
        let d = self_similarity_check(&c, &e, 1.0, 0.05).unwrap();
        assert!(d > 1e-2, "distance {d}");
    }

    #[test]
    fn invalid_time_horizon_is_rejected() {
        let c = SampledCurve::circle(1.0_f64, 64);
        assert!(matches!(
            self_similarity_check(&c, &c, 1.0, 0.5),
            Err(SolutionsError::InvalidArgument { .. })
        ));
    }

    #[test]
    fn extinction_before_the_horizon_stops_early() {
        // the unit circle vanishes at t = 1/2
        let c = SampledCurve::circle(1.0_f64, 128);
        match csf_evolve(&c, 1e-3, 0.6) {
            Err(SolutionsError::FlowBlowup { time_reached }) => {
                assert!(
                    time_reached > 0.45 && time_reached < 0.51,
                    "stopped at {time_reached}"
                );
            }
            other => panic!("expected an early stop, got {other:?}"),
        }
    }
}
