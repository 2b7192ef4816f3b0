//! Large-argument forms: the leading cosine term and Hankel's expansion.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{Error, Result};

/// Hankel's asymptotic expansion of `(J_ν(x), Y_ν(x))` together with a bound
/// on the truncation error (the first omitted term, scaled like the sum).
///
/// The series is summed until its terms stop decreasing, so the attainable
/// accuracy is roughly `exp(−2x)`; callers should stay above
/// `x ≈ 30·max(1, √ν)` for double precision.
pub fn hankel_expansion(nu: f64, x: f64) -> Result<(f64, f64, f64)> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::domain("nu", nu, "nu >= 0"));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("x", x, "x > 0"));
    }
    let m4 = 4.0 * nu * nu;
    let inv8x = 1.0 / (8.0 * x);
    // a_k(ν)/x^k = Π_{i=1..k} (4ν² − (2i−1)²) / (i · 8x)
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut last = f64::INFINITY;
    let mut omitted = 0.0;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = term * (m4 - odd * odd) * inv8x / k as f64;
        if next.abs() >= last {
            omitted = next.abs();
            break;
        }
        last = next.abs();
        term = next;
        // Signs: P = a0 − a2 + a4 − …, Q = a1 − a3 + …
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 * p.abs().max(q.abs()) {
            // The remainder is bounded by the last term kept.
            omitted = term.abs();
            break;
        }
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    let (s, c) = chi.sin_cos();
    let amp = (2.0 / (PI * x)).sqrt();
    let j = amp * (p * c - q * s);
    let y = amp * (p * s + q * c);
    Ok((j, y, amp * omitted))
}

/// Leading-order phase `x − νπ/2 − π/4`.
pub(crate) fn leading_phase(nu: f64, x: f64) -> f64 {
    x - nu * FRAC_PI_2 - FRAC_PI_4
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_order_expansion_is_exact() {
        // 4ν² − 1 = 0 kills every correction term.
        let (j, y, err) = hankel_expansion(0.5, 3.0).unwrap();
        let amp = (2.0 / (PI * 3.0)).sqrt();
        assert!((j - amp * 3.0_f64.sin()).abs() < 1e-15);
        assert!((y + amp * 3.0_f64.cos()).abs() < 1e-15);
        assert!(err <= 1e-17);
    }

    #[test]
    fn error_bound_shrinks_with_x() {
        let (_, _, e1) = hankel_expansion(3.0, 20.0).unwrap();
        let (_, _, e2) = hankel_expansion(3.0, 60.0).unwrap();
        assert!(e2 < e1);
        assert!(e2 > 0.0 && e2 < 1e-17);
    }
}
