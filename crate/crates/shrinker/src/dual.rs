//! Second-order forward-mode jets in two variables.
//!
//! A [`Dual2`] carries a value together with its first and second partial
//! derivatives with respect to two parameters `s` and `t`. Arithmetic
//! propagates derivatives through the product and chain rules, so seeding
//! `s` with [`Dual2::var_s`] and `t` with [`Dual2::var_t`] and evaluating any
//! composite expression yields the exact 2-jet of that expression at the
//! point, up to rounding. Finite differences are used only as a test oracle.

use crate::scalar::Real;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Value plus first/second partials with respect to parameters `s`, `t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual2<T> {
    /// value
    pub v: T,
    /// d/ds
    pub ds: T,
    /// d/dt
    pub dt: T,
    /// d2/ds2
    pub dss: T,
    /// d2/dsdt
    pub dst: T,
    /// d2/dt2
    pub dtt: T,
}

impl<T: Real> Dual2<T> {
    #[inline]
    pub fn new(v: T, ds: T, dt: T, dss: T, dst: T, dtt: T) -> Self {
        Dual2 {
            v,
            ds,
            dt,
            dss,
            dst,
            dtt,
        }
    }

    /// A constant (all derivatives zero).
    #[inline]
    pub fn constant(v: T) -> Self {
        Dual2::new(v, T::zero(), T::zero(), T::zero(), T::zero(), T::zero())
    }

    /// Seed for the first parameter: value `v`, ds = 1.
    #[inline]
    pub fn var_s(v: T) -> Self {
        Dual2::new(v, T::one(), T::zero(), T::zero(), T::zero(), T::zero())
    }

    /// Seed for the second parameter: value `v`, dt = 1.
    #[inline]
    pub fn var_t(v: T) -> Self {
        Dual2::new(v, T::zero(), T::one(), T::zero(), T::zero(), T::zero())
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.v.is_finite()
            && self.ds.is_finite()
            && self.dt.is_finite()
            && self.dss.is_finite()
            && self.dst.is_finite()
            && self.dtt.is_finite()
    }

    /// Chain rule for a scalar function with value `f0`, derivative `f1` and
    /// second derivative `f2` at `self.v`.
    #[inline]
    fn chain(self, f0: T, f1: T, f2: T) -> Self {
        Dual2 {
            v: f0,
            ds: f1 * self.ds,
            dt: f1 * self.dt,
            dss: f2 * self.ds * self.ds + f1 * self.dss,
            dst: f2 * self.ds * self.dt + f1 * self.dst,
            dtt: f2 * self.dt * self.dt + f1 * self.dtt,
        }
    }

    #[inline]
    pub fn sin(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        self.chain(s, c, -s)
    }

    #[inline]
    pub fn cos(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        self.chain(c, -s, -c)
    }

    #[inline]
    pub fn exp(self) -> Self {
        let e = self.v.exp();
        self.chain(e, e, e)
    }

    #[inline]
    pub fn ln(self) -> Self {
        let inv = self.v.recip();
        self.chain(self.v.ln(), inv, -inv * inv)
    }

    /// Square root; NaN derivatives outside the domain surface as a domain
    /// error in jet evaluation.
    #[inline]
    pub fn sqrt(self) -> Self {
        let r = self.v.sqrt();
        let half = T::of(0.5);
        let d1 = half / r;
        let d2 = -half * half / (r * self.v);
        self.chain(r, d1, d2)
    }

    #[inline]
    pub fn recip(self) -> Self {
        let inv = self.v.recip();
        let inv2 = inv * inv;
        self.chain(inv, -inv2, T::of(2.0) * inv2 * inv)
    }

    /// Integer power by repeated multiplication (exact product rule).
    pub fn powi(self, n: i32) -> Self {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut acc = Dual2::constant(T::one());
        let mut base = self;
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Real power via the chain rule; requires a positive base.
    #[inline]
    pub fn powf(self, p: T) -> Self {
        let f0 = self.v.powf(p);
        let f1 = p * self.v.powf(p - T::one());
        let f2 = p * (p - T::one()) * self.v.powf(p - T::of(2.0));
        self.chain(f0, f1, f2)
    }
}

impl<T: Real> Add for Dual2<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Dual2::new(
            self.v + o.v,
            self.ds + o.ds,
            self.dt + o.dt,
            self.dss + o.dss,
            self.dst + o.dst,
            self.dtt + o.dtt,
        )
    }
}

impl<T: Real> Sub for Dual2<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Dual2::new(
            self.v - o.v,
            self.ds - o.ds,
            self.dt - o.dt,
            self.dss - o.dss,
            self.dst - o.dst,
            self.dtt - o.dtt,
        )
    }
}

impl<T: Real> Neg for Dual2<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Dual2::new(-self.v, -self.ds, -self.dt, -self.dss, -self.dst, -self.dtt)
    }
}

impl<T: Real> Mul for Dual2<T> {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        let two = T::of(2.0);
        Dual2 {
            v: self.v * o.v,
            ds: self.ds * o.v + self.v * o.ds,
            dt: self.dt * o.v + self.v * o.dt,
            dss: self.dss * o.v + two * self.ds * o.ds + self.v * o.dss,
            dst: self.dst * o.v + self.ds * o.dt + self.dt * o.ds + self.v * o.dst,
            dtt: self.dtt * o.v + two * self.dt * o.dt + self.v * o.dtt,
        }
    }
}

impl<T: Real> Div for Dual2<T> {
    type Output = Self;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)] // division via the chain rule of the reciprocal
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl<T: Real> Add<T> for Dual2<T> {
    type Output = Self;
    #[inline]
    fn add(self, c: T) -> Self {
        let mut out = self;
        out.v += c;
        out
    }
}

impl<T: Real> Sub<T> for Dual2<T> {
    type Output = Self;
    #[inline]
    fn sub(self, c: T) -> Self {
        let mut out = self;
        out.v -= c;
        out
    }
}

impl<T: Real> Mul<T> for Dual2<T> {
    type Output = Self;
    #[inline]
    fn mul(self, c: T) -> Self {
        Dual2::new(
            self.v * c,
            self.ds * c,
            self.dt * c,
            self.dss * c,
            self.dst * c,
            self.dtt * c,
        )
    }
}
