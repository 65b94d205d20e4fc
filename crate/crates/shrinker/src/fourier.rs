//! Fourier coefficient extraction by uniform sampling.
//!
//! On a trigonometric polynomial of order `n` the discrete transform with at
//! least `2n + 1` equispaced samples recovers every coefficient exactly (up
//! to rounding). The default sample count is `4 (n + 2)`, a safety margin
//! over that bound.

use crate::scalar::Real;
use crate::trigpoly::TrigPoly;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FourierError {
    #[error("need at least {needed} samples for order {order}, got {got}")]
    TooFewSamples {
        order: usize,
        needed: usize,
        got: usize,
    },
    #[error("non-finite sample at t = {t}")]
    NonFiniteSample { t: f64 },
}

/// Coefficients of a 2pi-periodic function, sampled at `4 (order + 2)`
/// uniform points. Exact on band-limited input of order <= `order`.
pub fn fourier_extract<T: Real, F: Fn(T) -> T>(
    f: F,
    order: usize,
) -> Result<TrigPoly<T>, FourierError> {
    fourier_extract_with_samples(f, order, 4 * (order + 2))
}

/// Same with an explicit sample count (must be at least `2 order + 3`).
pub fn fourier_extract_with_samples<T: Real, F: Fn(T) -> T>(
    f: F,
    order: usize,
    n_samples: usize,
) -> Result<TrigPoly<T>, FourierError> {
    let needed = 2 * order + 3;
    if n_samples < needed {
        return Err(FourierError::TooFewSamples {
            order,
            needed,
            got: n_samples,
        });
    }
    let n = T::of(n_samples as f64);
    let step = T::TAU() / n;
    let mut samples = Vec::with_capacity(n_samples);
    let mut scale = T::one();
    for i in 0..n_samples {
        let t = T::of(i as f64) * step;
        let v = f(t);
        if !v.is_finite() {
            return Err(FourierError::NonFiniteSample {
                t: t.to_f64().unwrap_or(f64::NAN),
            });
        }
        scale = scale.max(v.abs());
        samples.push((t, v));
    }

    let two = T::of(2.0);
    let mut a = vec![T::zero(); order + 1];
    let mut b = vec![T::zero(); order];
    for &(_, v) in &samples {
        a[0] += v;
    }
    a[0] /= n;
    for j in 1..=order {
        let jf = T::of(j as f64);
        let (mut ca, mut cb) = (T::zero(), T::zero());
        for &(t, v) in &samples {
            let jt = jf * t;
            ca += v * jt.cos();
            cb += v * jt.sin();
        }
        a[j] = two * ca / n;
        b[j - 1] = two * cb / n;
    }
    let mut poly = TrigPoly::from_coeffs(a, b);
    poly.set_scale(scale);
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn cos_squared_has_a0_and_a2_one_half() {
        let p = fourier_extract(|t: f64| t.cos() * t.cos(), 2).unwrap();
        assert!((p.cos_coeff(0) - 0.5).abs() < 1e-14);
        assert!((p.cos_coeff(2) - 0.5).abs() < 1e-14);
        assert!(p.cos_coeff(1).abs() < 1e-14);
        assert!(p.sin_coeff(1).abs() < 1e-14 && p.sin_coeff(2).abs() < 1e-14);
    }

    #[test]
    fn sin_cos_is_half_sin2() {
        let p = fourier_extract(|t: f64| t.sin() * t.cos(), 2).unwrap();
        assert!((p.sin_coeff(2) - 0.5).abs() < 1e-14);
        assert!(p.cos_coeff(0).abs() < 1e-14);
        assert!(p.cos_coeff(1).abs() < 1e-14);
        assert!(p.cos_coeff(2).abs() < 1e-14);
        assert!(p.sin_coeff(1).abs() < 1e-14);
    }

    #[test]
    fn cos3t_with_nine_samples_is_exact() {
        let p = fourier_extract_with_samples(|t: f64| (3.0 * t).cos(), 3, 9).unwrap();
        assert!((p.cos_coeff(3) - 1.0).abs() < 1e-14);
        for j in 0..3 {
            assert!(p.cos_coeff(j).abs() < 1e-14);
        }
    }

    #[test]
    fn too_few_samples_is_an_error() {
        assert_eq!(
            fourier_extract_with_samples(|t: f64| t.cos(), 3, 8),
            Err(FourierError::TooFewSamples {
                order: 3,
                needed: 9,
                got: 8
            })
        );
    }

    #[test]
    fn non_finite_sample_is_an_error() {
        let r = fourier_extract(|t: f64| (t - PI).abs().ln(), 2);
        assert!(matches!(r, Err(FourierError::NonFiniteSample { .. })));
    }

    #[test]
    fn extraction_inverts_evaluation_on_random_polynomials() {
        use rand::{RngExt as _, SeedableRng as _};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.random_range(1..=8usize);
            let a: Vec<f64> = (0..=n).map(|_| rng.random_range(-3.0..3.0)).collect();
            let b: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
            let p = TrigPoly::from_coeffs(a, b);
            let q = fourier_extract(|t| p.eval(t), n).unwrap();
            for j in 0..=n {
                assert!((p.cos_coeff(j) - q.cos_coeff(j)).abs() < 1e-12);
                assert!((p.sin_coeff(j) - q.sin_coeff(j)).abs() < 1e-12);
            }
        }
    }
}
