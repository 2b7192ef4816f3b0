//! Brute-force reference values in arbitrary precision.
//!
//! `J_ν` is summed from its power series, `Y_ν` from the reflection formula
//! (or the logarithmic series at integer order), with enough bits to absorb
//! all cancellation up to x = 400. Zeros are bracketed on a fine grid and
//! bisected down to adjacent doubles. Slow, simple, and independent of the
//! library under test.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

/// Which combination `cos δ · J − sin δ · Y` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Angle {
    /// δ = 0 exactly.
    J,
    /// δ = π/2 exactly, i.e. `−Y`.
    Y,
    /// An arbitrary δ given as a double.
    Radians(f64),
}

fn prec_for(nu: f64, x: f64) -> u32 {
    // Peak series term ~ e^x; add headroom for the result and for large ν.
    128 + (1.5 * x) as u32 + (4.0 * nu.abs()) as u32
}

fn fl(prec: u32, v: f64) -> Float {
    Float::with_val(prec, v)
}

/// Power series of `J_a(x)` for real `a` with `a + k + 1` never a
/// non-positive integer.
fn j_series(a: &Float, x: &Float, prec: u32) -> Float {
    let half = Float::with_val(prec, x / 2u32);
    let q = Float::with_val(prec, -(half.clone().square()));
    let a1 = Float::with_val(prec, a + 1u32);
    let mut term = Float::with_val(prec, (&half).pow(a)) / a1.gamma();
    let mut sum = term.clone();
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32)));
    let kmin = (x.to_f64() / 2.0 + a.to_f64().abs()) as u32 + 2;
    let mut k = 1u32;
    loop {
        let denom = Float::with_val(prec, a + k) * k;
        term = term * &q / denom;
        sum += &term;
        if k > kmin
            && Float::with_val(prec, term.clone().abs())
                <= Float::with_val(prec, sum.clone().abs() * &eps)
        {
            break;
        }
        k += 1;
    }
    sum
}

fn j_mp(nu: f64, x: f64, prec: u32) -> Float {
    j_series(&fl(prec, nu), &fl(prec, x), prec)
}

/// `Y_n(x)` for integer `n ≥ 0` from the logarithmic series.
fn y_integer(n: u32, x: f64, prec: u32) -> Float {
    let xf = fl(prec, x);
    let half = Float::with_val(prec, &xf / 2u32);
    let pi = Float::with_val(prec, Constant::Pi);
    let jn = j_series(&fl(prec, n as f64), &xf, prec);
    let log_part = Float::with_val(prec, half.clone().ln()) * jn * 2u32 / &pi;

    // (1/π) Σ_{k<n} (n−k−1)!/k! (x/2)^{2k−n}
    let mut finite = Float::with_val(prec, 0);
    for k in 0..n {
        let num = Float::with_val(prec, (n - k) as f64).gamma();
        let den = Float::with_val(prec, (k + 1) as f64).gamma();
        let p = Float::with_val(prec, (&half).pow(2 * k as i32 - n as i32));
        finite += num / den * p;
    }

    // (1/π) Σ_k (−1)^k [ψ(k+1) + ψ(n+k+1)] (x/2)^{2k+n} / (k! (n+k)!)
    let q = Float::with_val(prec, -(half.clone().square()));
    let mut base =
        Float::with_val(prec, (&half).pow(n)) / Float::with_val(prec, (n + 1) as f64).gamma();
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32)));
    let mut tail = Float::with_val(prec, 0);
    let kmin = (x / 2.0) as u32 + n + 2;
    let mut k = 0u32;
    loop {
        if k > 0 {
            base = base * &q / (Float::with_val(prec, k) * (n + k));
        }
        let psi = Float::with_val(prec, (k + 1) as f64).digamma()
            + Float::with_val(prec, (n + k + 1) as f64).digamma();
        let t = Float::with_val(prec, &base * &psi);
        tail += &t;
        if k > kmin
            && Float::with_val(prec, t.abs()) <= Float::with_val(prec, tail.clone().abs() * &eps)
        {
            break;
        }
        k += 1;
    }
    log_part - (finite + tail) / pi
}

fn y_mp(nu: f64, x: f64, prec: u32) -> Float {
    if nu.fract() == 0.0 && nu >= 0.0 {
        return y_integer(nu as u32, x, prec);
    }
    let pi = Float::with_val(prec, Constant::Pi);
    let arg = Float::with_val(prec, &pi * nu);
    let (s, c) = (
        Float::with_val(prec, arg.clone().sin()),
        Float::with_val(prec, arg.cos()),
    );
    let jp = j_mp(nu, x, prec);
    let jm = j_mp(-nu, x, prec);
    (jp * c - jm) / s
}

fn cyl_mp(nu: f64, angle: Angle, x: f64, prec: u32) -> Float {
    match angle {
        Angle::J => j_mp(nu, x, prec),
        Angle::Y => -y_mp(nu, x, prec),
        Angle::Radians(d) => {
            let d = fl(prec, d);
            let c = Float::with_val(prec, d.clone().cos());
            let s = Float::with_val(prec, d.sin());
            j_mp(nu, x, prec) * c - y_mp(nu, x, prec) * s
        }
    }
}

fn cyl_prime_mp(nu: f64, angle: Angle, x: f64, prec: u32) -> Float {
    // C′_ν = −C_{ν+1} + (ν/x) C_ν
    let c0 = cyl_mp(nu, angle, x, prec);
    let c1 = cyl_mp(nu + 1.0, angle, x, prec);
    c0 * nu / x - c1
}

/// `J_ν(x)` for real `ν` (negative integer orders excluded), `x > 0`.
pub fn bessel_j(nu: f64, x: f64) -> f64 {
    j_mp(nu, x, prec_for(nu, x)).to_f64()
}

/// `Y_ν(x)` for `ν ≥ 0`, `x > 0`.
pub fn bessel_y(nu: f64, x: f64) -> f64 {
    y_mp(nu, x, prec_for(nu, x)).to_f64()
}

/// `C_ν(x; δ)`.
pub fn cylinder(nu: f64, angle: Angle, x: f64) -> f64 {
    cyl_mp(nu, angle, x, prec_for(nu + 1.0, x)).to_f64()
}

/// `C′_ν(x; δ)`.
pub fn cylinder_prime(nu: f64, angle: Angle, x: f64) -> f64 {
    cyl_prime_mp(nu, angle, x, prec_for(nu + 1.0, x)).to_f64()
}

/// `Γ(a)` for real `a` off the poles.
pub fn gamma(a: f64) -> f64 {
    Float::with_val(256, a).gamma().to_f64()
}

fn sign(nu: f64, angle: Angle, derivative: bool, x: f64) -> i32 {
    let prec = prec_for(nu + 1.0, x);
    let v = if derivative {
        cyl_prime_mp(nu, angle, x, prec)
    } else {
        cyl_mp(nu, angle, x, prec)
    };
    if v.is_zero() {
        0
    } else if v.is_sign_positive() {
        1
    } else {
        -1
    }
}

/// Bisects a sign change in `[lo, hi]` down to adjacent doubles.
fn bisect(nu: f64, angle: Angle, derivative: bool, mut lo: f64, mut hi: f64) -> f64 {
    let s_lo = sign(nu, angle, derivative, lo);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        let s = sign(nu, angle, derivative, mid);
        if s == 0 {
            return mid;
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// First `n` zeros in `[start, ∞)` found on a grid of step `π/32`.
///
/// The grid is much finer than the zero spacing of any cylinder function of
/// moderate order, so no pair of zeros hides between two grid points.
pub fn zeros(nu: f64, angle: Angle, derivative: bool, start: f64, n: usize) -> Vec<f64> {
    let step = std::f64::consts::PI / 32.0;
    let mut out = Vec::with_capacity(n);
    let mut a = start;
    let mut sa = sign(nu, angle, derivative, a);
    while out.len() < n {
        let b = a + step;
        let sb = sign(nu, angle, derivative, b);
        if sb == 0 {
            out.push(b);
        } else if sa != 0 && sa != sb {
            out.push(bisect(nu, angle, derivative, a, b));
        }
        a = b;
        sa = sb;
    }
    out
}
