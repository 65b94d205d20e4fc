//! Cubic spline interpolation, natural or periodic, with jet evaluation.

use crate::dual::Dual2;
use crate::scalar::Real;

/// Cubic spline through `(xs[i], ys[i])`. Periodic splines treat the data as
/// one period of length `period` starting at `xs[0]` (the closing value
/// `ys[0]` is not duplicated); natural splines have zero second derivative at
/// the ends.
#[derive(Clone, Debug)]
pub struct CubicSpline<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    /// second derivatives at the knots
    m: Vec<T>,
    periodic: bool,
    period: T,
}

fn solve_tridiagonal<T: Real>(sub: &[T], diag: &[T], sup: &[T], rhs: &mut [T]) {
    let n = diag.len();
    let mut diag = diag.to_vec();
    for i in 1..n {
        let w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for i in (0..n - 1).rev() {
        rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
    }
}

impl<T: Real> CubicSpline<T> {
    /// Natural cubic spline; `xs` strictly increasing, at least two points.
    pub fn natural(xs: Vec<T>, ys: Vec<T>) -> Self {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        assert!(n >= 2, "spline needs at least two points");
        let mut m = vec![T::zero(); n];
        if n > 2 {
            let k = n - 2; // interior unknowns
            let mut sub = vec![T::zero(); k];
            let mut diag = vec![T::zero(); k];
            let mut sup = vec![T::zero(); k];
            let mut rhs = vec![T::zero(); k];
            for i in 1..=k {
                let h0 = xs[i] - xs[i - 1];
                let h1 = xs[i + 1] - xs[i];
                sub[i - 1] = h0;
                diag[i - 1] = T::of(2.0) * (h0 + h1);
                sup[i - 1] = h1;
                rhs[i - 1] = T::of(6.0) * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0);
            }
            solve_tridiagonal(&sub, &diag, &sup, &mut rhs);
            m[1..=k].copy_from_slice(&rhs);
        }
        CubicSpline {
            xs,
            ys,
            m,
            periodic: false,
            period: T::zero(),
        }
    }

    /// Periodic cubic spline over one period; `xs` strictly increasing inside
    /// `[xs[0], xs[0] + period)`. Solved by Sherman-Morrison on the cyclic
    /// tridiagonal system.
    pub fn periodic(xs: Vec<T>, ys: Vec<T>, period: T) -> Self {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        assert!(n >= 3, "periodic spline needs at least three points");
        let h = |i: usize| -> T {
            if i + 1 < n {
                xs[i + 1] - xs[i]
            } else {
                xs[0] + period - xs[n - 1]
            }
        };
        let y = |i: usize| ys[i % n];
        // cyclic system: h[i-1] m[i-1] + 2(h[i-1]+h[i]) m[i] + h[i] m[i+1] = rhs[i]
        let mut diag = vec![T::zero(); n];
        let mut sub = vec![T::zero(); n];
        let mut sup = vec![T::zero(); n];
        let mut rhs = vec![T::zero(); n];
        for i in 0..n {
            let hm = h((i + n - 1) % n);
            let hi = h(i);
            sub[i] = hm;
            diag[i] = T::of(2.0) * (hm + hi);
            sup[i] = hi;
            rhs[i] = T::of(6.0) * ((y(i + 1) - y(i)) / hi - (y(i) - y(i + n - 1)) / hm);
        }
        // Sherman-Morrison: corner entries sub[0] (to m[n-1]) and sup[n-1] (to m[0])
        let alpha = sub[0];
        let beta = sup[n - 1];
        let gamma = -diag[0];
        let mut diag_mod = diag.clone();
        diag_mod[0] = diag[0] - gamma;
        diag_mod[n - 1] = diag[n - 1] - alpha * beta / gamma;
        let mut u = vec![T::zero(); n];
        u[0] = gamma;
        u[n - 1] = beta;
        let mut x1 = rhs.clone();
        solve_tridiagonal(&sub, &diag_mod, &sup, &mut x1);
        let mut x2 = u;
        solve_tridiagonal(&sub, &diag_mod, &sup, &mut x2);
        let factor =
            (x1[0] + alpha * x1[n - 1] / gamma) / (T::one() + x2[0] + alpha * x2[n - 1] / gamma);
        let m: Vec<T> = x1.iter().zip(&x2).map(|(&a, &b)| a - factor * b).collect();
        CubicSpline {
            xs,
            ys,
            m,
            periodic: true,
            period,
        }
    }

    pub fn is_periodic(&self) -> bool {
        self.periodic
    }

    fn segment(&self, x: T) -> (usize, usize, T, T, T) {
        let n = self.xs.len();
        let (x, seg_count) = if self.periodic {
            let start = self.xs[0];
            let mut xx = (x - start) % self.period;
            if xx < T::zero() {
                xx += self.period;
            }
            (start + xx, n)
        } else {
            (x.max(self.xs[0]).min(self.xs[n - 1]), n - 1)
        };
        // binary search for the segment
        let mut lo = 0usize;
        let mut hi = seg_count;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if mid < n && self.xs[mid] <= x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let i = lo;
        let j = (i + 1) % n;
        let xi = self.xs[i];
        let xj = if i + 1 < n {
            self.xs[i + 1]
        } else {
            self.xs[0] + self.period
        };
        (i, j, xi, xj, x)
    }

    pub fn eval(&self, x: T) -> T {
        let (i, j, xi, xj, x) = self.segment(x);
        let h = xj - xi;
        let a = (xj - x) / h;
        let b = (x - xi) / h;
        let sixth = T::of(1.0 / 6.0);
        a * self.ys[i]
            + b * self.ys[j]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[j]) * h * h * sixth
    }

    pub fn eval_d1(&self, x: T) -> T {
        let (i, j, xi, xj, x) = self.segment(x);
        let h = xj - xi;
        let a = (xj - x) / h;
        let b = (x - xi) / h;
        let three = T::of(3.0);
        let sixth = T::of(1.0 / 6.0);
        (self.ys[j] - self.ys[i]) / h
            + ((three * b * b - T::one()) * self.m[j] - (three * a * a - T::one()) * self.m[i])
                * h
                * sixth
    }

    pub fn eval_d2(&self, x: T) -> T {
        let (i, j, xi, xj, x) = self.segment(x);
        let h = xj - xi;
        let a = (xj - x) / h;
        let b = (x - xi) / h;
        a * self.m[i] + b * self.m[j]
    }

    /// Evaluate the spline on a second-order jet of the parameter (the
    /// piecewise cubic is polynomial inside a segment, so the jet is exact).
    pub fn eval_jet(&self, x: Dual2<T>) -> Dual2<T> {
        let (i, j, xi, xj, xv) = self.segment(x.v);
        // keep the jet's derivative seeds, move the value into the period
        let shift = xv - x.v;
        let x = x + shift;
        let h = xj - xi;
        let a = (Dual2::constant(xj) - x) * h.recip();
        let b = (x - xi) * h.recip();
        let sixth = T::of(1.0 / 6.0);
        a * self.ys[i]
            + b * self.ys[j]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[j]) * (h * h * sixth)
    }
}
