//! Finite Fourier series in the circle variable `t`.
//!
//! A [`TrigPoly`] of order `n` represents
//! `a_0 + sum_{j=1..n} (a_j cos jt + b_j sin jt)` with dense coefficient
//! storage. Products are formed exactly through the product-to-sum
//! identities, so coefficient identities can be checked to rounding
//! precision. Every polynomial carries a `scale`, the largest input
//! magnitude seen when it was produced; [`TrigPoly::is_zero`] measures
//! coefficients relative to that scale so structured-but-tiny residuals are
//! not mistaken for zero.

use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum TrigPolyError {
    #[error("coefficient index {j} out of range for order {order} ({kind:?})")]
    IndexOutOfRange {
        j: usize,
        order: usize,
        kind: CoeffKind,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    Cos,
    Sin,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrigPoly<T> {
    /// cosine coefficients a_0 .. a_n
    a: Vec<T>,
    /// sine coefficients b_1 .. b_n
    b: Vec<T>,
    /// natural magnitude of the data this polynomial came from (>= 1)
    scale: T,
}

impl<T: Real> TrigPoly<T> {
    pub fn zero(order: usize) -> Self {
        TrigPoly {
            a: vec![T::zero(); order + 1],
            b: vec![T::zero(); order],
            scale: T::one(),
        }
    }

    /// Build from explicit coefficients; `a` has length n+1, `b` length n.
    pub fn from_coeffs(a: Vec<T>, b: Vec<T>) -> Self {
        assert_eq!(
            a.len(),
            b.len() + 1,
            "a must hold a_0..a_n and b must hold b_1..b_n"
        );
        let mut p = TrigPoly {
            a,
            b,
            scale: T::one(),
        };
        p.scale = T::one().max(p.max_abs_coeff());
        p
    }

    /// Pure cosine harmonic `cos(j t)`.
    pub fn harmonic_cos(j: usize) -> Self {
        let mut p = TrigPoly::zero(j.max(1));
        p.a[j] = T::one();
        p
    }

    /// Pure sine harmonic `sin(j t)`, j >= 1.
    pub fn harmonic_sin(j: usize) -> Self {
        assert!(j >= 1);
        let mut p = TrigPoly::zero(j);
        p.b[j - 1] = T::one();
        p
    }

    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    pub fn scale(&self) -> T {
        self.scale
    }

    pub(crate) fn set_scale(&mut self, scale: T) {
        self.scale = T::one().max(scale);
    }

    pub fn cos_coeff(&self, j: usize) -> T {
        self.a.get(j).copied().unwrap_or_else(T::zero)
    }

    pub fn sin_coeff(&self, j: usize) -> T {
        if j == 0 {
            T::zero()
        } else {
            self.b.get(j - 1).copied().unwrap_or_else(T::zero)
        }
    }

    /// The named coefficient; errors outside `0..=order` (sin needs j >= 1).
    pub fn coeff(&self, j: usize, kind: CoeffKind) -> Result<T, TrigPolyError> {
        let bad = match kind {
            CoeffKind::Cos => j > self.order(),
            CoeffKind::Sin => j == 0 || j > self.order(),
        };
        if bad {
            return Err(TrigPolyError::IndexOutOfRange {
                j,
                order: self.order(),
                kind,
            });
        }
        Ok(match kind {
            CoeffKind::Cos => self.cos_coeff(j),
            CoeffKind::Sin => self.sin_coeff(j),
        })
    }

    pub fn eval(&self, t: T) -> T {
        let mut acc = self.a[0];
        for j in 1..=self.order() {
            let jt = T::of(j as f64) * t;
            acc += self.a[j] * jt.cos();
            if j >= 1 {
                acc += self.b[j - 1] * jt.sin();
            }
        }
        acc
    }

    pub fn max_abs_coeff(&self) -> T {
        let mut m = T::zero();
        for &c in self.a.iter().chain(self.b.iter()) {
            m = m.max(c.abs());
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.a.iter().chain(self.b.iter()).all(|c| c.is_finite())
    }

    /// True when every coefficient is below `tol` times the natural scale.
    pub fn is_zero(&self, tol: T) -> bool {
        self.max_abs_coeff() <= tol * self.scale
    }

    /// Drop harmonics above `order`, keeping the scale.
    pub fn truncated(&self, order: usize) -> Self {
        let n = order.min(self.order());
        let mut p = TrigPoly::zero(order);
        p.a[..=n].copy_from_slice(&self.a[..=n]);
        p.b[..n].copy_from_slice(&self.b[..n]);
        p.scale = self.scale;
        p
    }

    /// Exact product via product-to-sum identities; order is the sum of the
    /// operand orders.
    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order() + o.order();
        let mut out = TrigPoly::zero(n);
        let half = T::of(0.5);

        // accumulate w * cos(m t) / w * sin(m t), m possibly negative
        let add_cos = |out: &mut TrigPoly<T>, m: i64, w: T| {
            out.a[m.unsigned_abs() as usize] += w;
        };
        let add_sin = |out: &mut TrigPoly<T>, m: i64, w: T| {
            if m > 0 {
                out.b[(m - 1) as usize] += w;
            } else if m < 0 {
                out.b[(-m - 1) as usize] -= w;
            }
        };

        for j in 0..=self.order() {
            let aj = self.a[j];
            if aj != T::zero() {
                for k in 0..=o.order() {
                    let w = aj * o.a[k] * half;
                    if w != T::zero() {
                        // cos j cos k = (cos(j-k) + cos(j+k)) / 2
                        add_cos(&mut out, (j as i64) - (k as i64), w);
                        add_cos(&mut out, (j + k) as i64, w);
                    }
                }
                for k in 1..=o.order() {
                    let w = aj * o.b[k - 1] * half;
                    if w != T::zero() {
                        // cos j sin k = (sin(j+k) - sin(j-k)) / 2
                        add_sin(&mut out, (j + k) as i64, w);
                        add_sin(&mut out, (j as i64) - (k as i64), -w);
                    }
                }
            }
        }
        for j in 1..=self.order() {
            let bj = self.b[j - 1];
            if bj == T::zero() {
                continue;
            }
            for k in 0..=o.order() {
                let w = bj * o.a[k] * half;
                if w != T::zero() {
                    // sin j cos k = (sin(j+k) + sin(j-k)) / 2
                    add_sin(&mut out, (j + k) as i64, w);
                    add_sin(&mut out, (j as i64) - (k as i64), w);
                }
            }
            for k in 1..=o.order() {
                let w = bj * o.b[k - 1] * half;
                if w != T::zero() {
                    // sin j sin k = (cos(j-k) - cos(j+k)) / 2
                    add_cos(&mut out, (j as i64) - (k as i64), w);
                    add_cos(&mut out, (j + k) as i64, -w);
                }
            }
        }

        out.scale = T::one().max(self.max_abs_coeff()).max(o.max_abs_coeff());
        out
    }

    /// Coefficient rows `(j, a_j, b_j)` for tabular output.
    pub fn rows(&self) -> Vec<(usize, T, T)> {
        (0..=self.order())
            .map(|j| (j, self.cos_coeff(j), self.sin_coeff(j)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = TrigPoly<f64>;

    #[test]
    fn cos1_times_cos2_is_half_cos1_plus_half_cos3() {
        let p = P::harmonic_cos(1).mul(&P::harmonic_cos(2));
        assert_eq!(p.order(), 3);
        assert!((p.cos_coeff(1) - 0.5).abs() < 1e-15);
        assert!((p.cos_coeff(3) - 0.5).abs() < 1e-15);
        assert!(p.cos_coeff(0).abs() < 1e-15);
        assert!(p.cos_coeff(2).abs() < 1e-15);
        assert!(p.sin_coeff(1).abs() < 1e-15 && p.sin_coeff(3).abs() < 1e-15);
    }

    #[test]
    fn sin_squared_is_half_minus_half_cos2() {
        let p = P::harmonic_sin(1).mul(&P::harmonic_sin(1));
        assert!((p.cos_coeff(0) - 0.5).abs() < 1e-15);
        assert!((p.cos_coeff(2) + 0.5).abs() < 1e-15);
        assert!(p.sin_coeff(2).abs() < 1e-15);
    }

    #[test]
    fn coeff_of_product_example() {
        // coeff(cos2t * cos t, 3, cos) = 1/2
        let p = P::harmonic_cos(2).mul(&P::harmonic_cos(1));
        assert_eq!(p.coeff(3, CoeffKind::Cos).unwrap(), 0.5);
        // constant 5 has a_0 = 5
        let c = P::from_coeffs(vec![5.0], vec![]);
        assert_eq!(c.coeff(0, CoeffKind::Cos).unwrap(), 5.0);
        assert!(c.coeff(1, CoeffKind::Cos).is_err());
        assert!(c.coeff(0, CoeffKind::Sin).is_err());
    }

    #[test]
    fn is_zero_respects_scale() {
        assert!(P::zero(3).is_zero(1e-9));
        assert!(!P::harmonic_cos(1).is_zero(1e-9));
        // tiny coefficients from large inputs count as zero
        let mut p = P::from_coeffs(vec![0.0, 1e-12], vec![0.0]);
        p.set_scale(1.0);
        assert!(p.is_zero(1e-9));
    }

    #[test]
    fn eval_matches_coefficients() {
        let p = P::from_coeffs(vec![1.0, -0.5, 0.25], vec![2.0, 0.75]);
        let t = 0.4_f64;
        let direct =
            1.0 - 0.5 * t.cos() + 0.25 * (2.0 * t).cos() + 2.0 * t.sin() + 0.75 * (2.0 * t).sin();
        assert!((p.eval(t) - direct).abs() < 1e-14);
    }

    #[test]
    fn mul_commutes_and_associates_on_random_inputs() {
        use rand::{RngExt as _, SeedableRng as _};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let coeffs = |rng: &mut rand::rngs::StdRng, n: usize| {
                let a: Vec<f64> = (0..=n).map(|_| rng.random_range(-2.0..2.0)).collect();
                let b: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
                P::from_coeffs(a, b)
            };
            let p = coeffs(&mut rng, 3);
            let q = coeffs(&mut rng, 4);
            let r = coeffs(&mut rng, 2);
            let pq = p.mul(&q);
            let qp = q.mul(&p);
            for j in 0..=pq.order() {
                assert!((pq.cos_coeff(j) - qp.cos_coeff(j)).abs() < 1e-13);
                assert!((pq.sin_coeff(j) - qp.sin_coeff(j)).abs() < 1e-13);
            }
            let left = pq.mul(&r);
            let right = p.mul(&q.mul(&r));
            for j in 0..=left.order() {
                assert!((left.cos_coeff(j) - right.cos_coeff(j)).abs() < 1e-13);
                assert!((left.sin_coeff(j) - right.sin_coeff(j)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn product_matches_fourier_extraction_of_the_pointwise_product() {
        use crate::fourier::fourier_extract;
        use rand::{RngExt as _, SeedableRng as _};
        let mut rng = rand::rngs::StdRng::seed_from_u64(8);
        for _ in 0..30 {
            let coeffs = |rng: &mut rand::rngs::StdRng, n: usize| {
                let a: Vec<f64> = (0..=n).map(|_| rng.random_range(-2.0..2.0)).collect();
                let b: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
                P::from_coeffs(a, b)
            };
            let p = coeffs(&mut rng, 2);
            let q = coeffs(&mut rng, 1);
            let exact = p.mul(&q);
            let sampled = fourier_extract(|t| p.eval(t) * q.eval(t), exact.order()).unwrap();
            for j in 0..=exact.order() {
                assert!((exact.cos_coeff(j) - sampled.cos_coeff(j)).abs() < 1e-12);
                assert!((exact.sin_coeff(j) - sampled.sin_coeff(j)).abs() < 1e-12);
            }
        }
    }
}
