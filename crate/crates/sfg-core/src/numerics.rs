//! Small deterministic numerical helpers shared across modules.

use crate::error::{Error, Result};

/// Bisection root finding on a bracketing interval.
///
/// Runs a fixed number of halvings, so identical inputs give bit-identical
/// results. Returns an error carrying the bracket and endpoint values when
/// the interval does not straddle a sign change.
pub fn bisect(f: impl Fn(f64) -> f64, lo: f64, hi: f64, iterations: u32) -> Result<f64> {
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::BracketWithoutRoot { lo, hi, f_lo, f_hi });
    }
    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = f_lo;
    for _ in 0..iterations {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Trapezoidal integral of samples `ys` on the uniform grid spacing `step`.
pub fn trapezoid_uniform(ys: &[f64], step: f64) -> f64 {
    if ys.len() < 2 {
        return 0.0;
    }
    let interior: f64 = ys[1..ys.len() - 1].iter().sum();
    step * (0.5 * (ys[0] + ys[ys.len() - 1]) + interior)
}

/// Uniform grid from `start` to `start + (n-1)*step` inclusive.
pub fn uniform_grid(start: f64, step: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| start + step * i as f64).collect()
}
