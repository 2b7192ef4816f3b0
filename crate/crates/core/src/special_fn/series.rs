//! Ascending power series for `J_ν`, summed with compensation.
//!
//! This route is independent of the continued-fraction engine and is used to
//! cross-check it (and for negative fractional orders) on moderate arguments.

use super::gamma::gamma_real;
use crate::error::{Error, Result};

/// Largest argument accepted by the series. Terms peak near `e^x / (πx)`, and
/// their rounding is not recovered by compensation: at x = 15 the absolute
/// error is still below 1e-11, at x = 20 it is already ~3e-10.
pub const SERIES_MAX_X: f64 = 15.0;

/// Neumaier's compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// `J_ν(x) = Σ (−1)^m (x/2)^(2m+ν) / (m! Γ(m+ν+1))` for `ν ∈ [−1, 32]`,
/// `0 < x ≤ 25`.
pub fn bessel_j_series(nu: f64, x: f64) -> Result<f64> {
    if !nu.is_finite() || !(-1.0..=32.0).contains(&nu) {
        return Err(Error::domain("nu", nu, "-1 <= nu <= 32"));
    }
    if !x.is_finite() || x <= 0.0 || x > SERIES_MAX_X {
        return Err(Error::domain("x", x, "0 < x <= 25"));
    }
    // J_{-n} = (-1)^n J_n.
    if nu < 0.0 && nu.fract() == 0.0 {
        let n = -nu;
        let v = bessel_j_series(n, x)?;
        return Ok(if n as i64 % 2 == 0 { v } else { -v });
    }
    let half = 0.5 * x;
    let q = -half * half;
    let mut term = half.powf(nu) / gamma_real(nu + 1.0)?;
    let mut acc = CompensatedSum::default();
    acc.add(term);
    let mut m = 0.0_f64;
    loop {
        m += 1.0;
        term *= q / (m * (m + nu));
        acc.add(term);
        if m > half && term.abs() <= 1e-17 * acc.value().abs().max(f64::MIN_POSITIVE) {
            break;
        }
        if m > 500.0 {
            break;
        }
    }
    Ok(acc.value())
}
