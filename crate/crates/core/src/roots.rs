//! Bracketed Newton iteration with a bisection fallback.

use crate::error::{Error, Result};

pub(crate) const MAX_STEPS: usize = 80;

/// Refines a simple root of `f` inside `[lo, hi]`, where `f(lo)` and `f(hi)`
/// have opposite signs. `f` returns `(value, slope)`.
///
/// Every iterate stays inside the current bracket: a Newton step that would
/// leave it, or that does not shrink fast enough, is replaced by bisection.
/// Iteration stops once the step is below `rel_tol · max(1, |x|)`.
pub(crate) fn newton_bisect<F>(mut f: F, lo: f64, hi: f64, f_lo: f64, rel_tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    debug_assert!(lo < hi);
    // Orient so that the function is negative at `neg` and positive at `pos`.
    let (mut neg, mut pos) = if f_lo < 0.0 { (lo, hi) } else { (hi, lo) };
    let mut x = 0.5 * (lo + hi);
    let mut dx_old = (hi - lo).abs();
    let mut dx = dx_old;
    let (mut fx, mut dfx) = f(x)?;
    for _ in 0..MAX_STEPS {
        if fx == 0.0 {
            return Ok(x);
        }
        let out_of_bracket = ((x - pos) * dfx - fx) * ((x - neg) * dfx - fx) > 0.0;
        let too_slow = (2.0 * fx).abs() > (dx_old * dfx).abs();
        if out_of_bracket || too_slow || !dfx.is_finite() || dfx == 0.0 {
            dx_old = dx;
            dx = 0.5 * (pos - neg);
            x = neg + dx;
        } else {
            dx_old = dx;
            dx = fx / dfx;
            x -= dx;
        }
        if dx.abs() <= rel_tol * x.abs().max(1.0) {
            return Ok(x);
        }
        (fx, dfx) = f(x)?;
        if fx < 0.0 {
            neg = x;
        } else {
            pos = x;
        }
    }
    Err(Error::NoConvergence {
        near: x,
        iterations: MAX_STEPS,
    })
}

/// Plain bisection on a sign change; used to locate extrema (zeros of the
/// slope) when checking for hidden root pairs.
pub(crate) fn bisect<F>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    abs_tol: f64,
) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= abs_tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = newton_bisect(|x| Ok((x * x - 2.0, 2.0 * x)), 0.0, 2.0, -2.0, 1e-12).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn survives_bad_newton_geometry() {
        // atan has Newton steps that overshoot far from the root.
        let r = newton_bisect(
            |x: f64| Ok((x.atan(), 1.0 / (1.0 + x * x))),
            -1.0,
            30.0,
            (-1f64).atan(),
            1e-12,
        )
        .unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn bisect_locates_sign_change() {
        let r = bisect(|x| Ok(x - 0.3), 0.0, 1.0, -0.3, 1e-14).unwrap();
        assert!((r - 0.3).abs() < 1e-13);
    }
}
