//! Initial-value ODE integration.
//!
//! Classical fixed-step fourth-order Runge-Kutta with at least 10^4 steps
//! over the requested span, plus a Richardson check: the step count doubles
//! until two consecutive runs agree at the endpoint to the requested
//! tolerance. Deterministic for fixed inputs; no adaptivity beyond the
//! doubling.

use crate::scalar::Real;
use thiserror::Error;

/// Time series produced by the integrator.
#[derive(Clone, Debug)]
pub struct Trajectory<T> {
    pub times: Vec<T>,
    pub states: Vec<Vec<T>>,
}

impl<T: Real> Trajectory<T> {
    pub fn last_state(&self) -> &[T] {
        self.states.last().expect("trajectory is never empty")
    }

    pub fn dim(&self) -> usize {
        self.states.first().map_or(0, Vec::len)
    }
}

#[derive(Debug, Error)]
pub enum OdeError<T: Real> {
    #[error("state became non-finite at t = {at}")]
    NonFiniteState {
        at: T,
        /// everything integrated before the failure
        last_good: Trajectory<T>,
    },
    #[error("endpoint difference {achieved} above tolerance {requested} at the step cap")]
    ToleranceNotMet { achieved: T, requested: T },
}

/// One classical RK4 step; `field(t, y, dy)` writes the derivative.
pub fn rk4_step<T: Real, F: Fn(T, &[T], &mut [T])>(field: &F, t: T, y: &mut [T], h: T) {
    let dim = y.len();
    let half = T::of(0.5);
    let sixth = T::of(1.0 / 6.0);
    let two = T::of(2.0);
    let mut k1 = vec![T::zero(); dim];
    let mut k2 = vec![T::zero(); dim];
    let mut k3 = vec![T::zero(); dim];
    let mut k4 = vec![T::zero(); dim];
    let mut tmp = vec![T::zero(); dim];

    field(t, y, &mut k1);
    for i in 0..dim {
        tmp[i] = y[i] + half * h * k1[i];
    }
    field(t + half * h, &tmp, &mut k2);
    for i in 0..dim {
        tmp[i] = y[i] + half * h * k2[i];
    }
    field(t + half * h, &tmp, &mut k3);
    for i in 0..dim {
        tmp[i] = y[i] + h * k3[i];
    }
    field(t + h, &tmp, &mut k4);
    for i in 0..dim {
        y[i] += h * sixth * (k1[i] + two * k2[i] + two * k3[i] + k4[i]);
    }
}

fn run_fixed<T: Real, F: Fn(T, &[T], &mut [T])>(
    field: &F,
    y0: &[T],
    span: [T; 2],
    steps: usize,
    record: bool,
) -> Result<Trajectory<T>, OdeError<T>> {
    let h = (span[1] - span[0]) / T::of(steps as f64);
    let mut y = y0.to_vec();
    let mut traj = Trajectory {
        times: Vec::with_capacity(if record { steps + 1 } else { 2 }),
        states: Vec::with_capacity(if record { steps + 1 } else { 2 }),
    };
    traj.times.push(span[0]);
    traj.states.push(y.clone());
    for i in 0..steps {
        let t = span[0] + T::of(i as f64) * h;
        rk4_step(field, t, &mut y, h);
        if !y.iter().all(|v| v.is_finite()) {
            return Err(OdeError::NonFiniteState {
                at: t + h,
                last_good: traj,
            });
        }
        if record || i + 1 == steps {
            traj.times.push(t + h);
            traj.states.push(y.clone());
        }
    }
    Ok(traj)
}

/// Integrate `y' = field(t, y)` over `span`. The local error is controlled by
/// doubling the step count until the endpoint moves by less than `tol`.
/// A reversed span integrates backwards (the recorded times then decrease).
pub fn integrate_ivp<T: Real, F: Fn(T, &[T], &mut [T])>(
    field: F,
    y0: &[T],
    span: [T; 2],
    tol: T,
) -> Result<Trajectory<T>, OdeError<T>> {
    assert!(tol > T::zero(), "tolerance must be positive");
    let mut steps = 10_000usize;
    let max_steps = 2_560_000usize;
    let mut coarse = run_fixed(&field, y0, span, steps, false)?;
    loop {
        let fine_steps = steps * 2;
        let fine = run_fixed(&field, y0, span, fine_steps, false)?;
        let diff = coarse
            .last_state()
            .iter()
            .zip(fine.last_state())
            .map(|(&a, &b)| (a - b).abs())
            .fold(T::zero(), T::max);
        if diff <= tol {
            // re-run the accepted resolution, recording every step
            return run_fixed(&field, y0, span, fine_steps, true);
        }
        if fine_steps >= max_steps {
            return Err(OdeError::ToleranceNotMet {
                achieved: diff,
                requested: tol,
            });
        }
        steps = fine_steps;
        coarse = fine;
    }
}
