//! Bracketed scalar root finding by bisection.

use crate::scalar::Real;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RootError<T: Real> {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {flo}, f(hi) = {fhi}")]
    NoSignChange { lo: T, hi: T, flo: T, fhi: T },
    #[error("invalid bracket [{lo}, {hi}]")]
    InvalidBracket { lo: T, hi: T },
}

/// Bisect `f` on `[lo, hi]` until the bracket is narrower than `tol`.
/// Requires a sign change; an exact zero at the midpoint returns immediately,
/// and when both subintervals qualify the one toward `lo` is kept.
pub fn bracket_root<T: Real, F: Fn(T) -> T>(f: F, lo: T, hi: T, tol: T) -> Result<T, RootError<T>> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(RootError::InvalidBracket { lo, hi });
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let fb = f(b);
    if fa == T::zero() {
        return Ok(a);
    }
    if fb == T::zero() {
        return Ok(b);
    }
    if fa * fb > T::zero() || !fa.is_finite() || !fb.is_finite() {
        return Err(RootError::NoSignChange {
            lo,
            hi,
            flo: fa,
            fhi: fb,
        });
    }
    let half = T::of(0.5);
    for _ in 0..4096 {
        let mid = half * (a + b);
        if b - a < tol || mid <= a || mid >= b {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == T::zero() {
            return Ok(mid);
        }
        if fa * fm < T::zero() {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    Ok(half * (a + b))
}
