//! Continued-fraction Bessel engine for real order `ν ≥ 0` and `x > 0`.
//!
//! The ratio `J′/J` at the top order comes from the first continued fraction
//! (modified Lentz), and `J` is recurred downward to a low order `μ`. At `μ`
//! the pair `(J_μ, Y_μ)` is fixed either by Temme's series (`x < 2`, `|μ| ≤ 1/2`)
//! or by Steed's complex continued fraction for `(J′+iY′)/(J+iY)` (`x ≥ 2`),
//! both pinned by the Wronskian `J Y′ − J′ Y = 2/(πx)`. `Y` is then recurred
//! upward, which is its stable direction.

use std::f64::consts::PI;

use super::gamma::temme_gammas;
use crate::error::{Error, Result};

const MAX_ITER: usize = 100_000;
const CF_TOL: f64 = 2.0 * f64::EPSILON;
const TINY: f64 = 1e-300;
const RESCALE_ABOVE: f64 = 1e250;
const TEMME_CUTOFF: f64 = 2.0;

/// `J` and `Y` at orders `ν` and `ν + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct JyPair {
    pub j: f64,
    pub j_next: f64,
    pub y: f64,
    pub y_next: f64,
}

pub(crate) fn jy_pair(nu: f64, x: f64) -> Result<JyPair> {
    debug_assert!(nu >= 0.0 && x > 0.0);
    let top = nu + 1.0;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;

    let steps = if x < TEMME_CUTOFF {
        (top + 0.5).floor() as usize
    } else {
        ((top - x + 1.5).floor().max(1.0)) as usize
    };
    let mu = top - steps as f64;

    // J'_top / J_top.
    let mut sign = 1.0;
    let mut h = (top * xi).max(TINY);
    let mut b = xi2 * top;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        b += xi2;
        d = b - d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b - 1.0 / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            sign = -sign;
        }
        if (del - 1.0).abs() <= CF_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::ContinuedFraction { nu, x });
    }

    // Downward recurrence, unnormalized. `j_top` and `j_nu` are the values at
    // the two orders we report; they are rescaled together with the running
    // pair whenever it grows too large.
    let mut jl = sign;
    let mut jpl = h * jl;
    let mut j_top = jl;
    let mut j_nu = 0.0;
    let mut fact = top * xi;
    for l in (1..=steps).rev() {
        let jtemp = fact * jl + jpl;
        fact -= xi;
        jpl = fact * jtemp - jl;
        jl = jtemp;
        if l == steps {
            j_nu = jl;
        }
        if jl.abs() > RESCALE_ABOVE {
            let s = 1.0 / RESCALE_ABOVE;
            jl *= s;
            jpl *= s;
            j_top *= s;
            j_nu *= s;
        }
    }
    if jl == 0.0 {
        jl = f64::EPSILON;
    }
    let f = jpl / jl;
    let w = xi2 / PI;

    let (j_mu, mut y_mu, mut y_mu1) = if x < TEMME_CUTOFF {
        temme_low_order(mu, x, f, w)
    } else {
        steed_low_order(mu, x, f, w, jl).ok_or(Error::ContinuedFraction { nu, x })?
    };

    let scale = j_mu / jl;
    let j = j_nu * scale;
    let j_next = j_top * scale;

    for i in 1..steps {
        let ytemp = (mu + i as f64) * xi2 * y_mu1 - y_mu;
        y_mu = y_mu1;
        y_mu1 = ytemp;
    }

    Ok(JyPair {
        j,
        j_next,
        y: y_mu,
        y_next: y_mu1,
    })
}

/// Temme's series for `Y_μ`, `Y_{μ+1}` with `|μ| ≤ 1/2`; `J_μ` follows from
/// the Wronskian and `f = J′_μ/J_μ`.
fn temme_low_order(mu: f64, x: f64, f: f64, w: f64) -> (f64, f64, f64) {
    let xi = 1.0 / x;
    let x2 = 0.5 * x;
    let mu2 = mu * mu;
    let pimu = PI * mu;
    let fact = if pimu.abs() < f64::EPSILON {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < f64::EPSILON {
        1.0
    } else {
        e.sinh() / e
    };
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let e = e.exp();
    let mut p = e / (gampl * PI);
    let mut q = 1.0 / (e * PI * gammi);
    let pimu2 = 0.5 * pimu;
    let fact3 = if pimu2.abs() < f64::EPSILON {
        1.0
    } else {
        pimu2.sin() / pimu2
    };
    let r = PI * pimu2 * fact3 * fact3;
    let mut c = 1.0;
    let dd = -x2 * x2;
    let mut sum = ff + r * q;
    let mut sum1 = p;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * (ff + r * q);
        sum += del;
        let del1 = c * p - fi * del;
        sum1 += del1;
        if del.abs() < (1.0 + sum.abs()) * f64::EPSILON {
            break;
        }
    }
    let y_mu = -sum;
    let y_mu1 = -sum1 * 2.0 * xi;
    let y_mup = mu * xi * y_mu - y_mu1;
    let j_mu = w / (y_mup - f * y_mu);
    (j_mu, y_mu, y_mu1)
}

/// Steed's method: `p + iq = (J′ + iY′)/(J + iY)` by continued fraction.
fn steed_low_order(mu: f64, x: f64, f: f64, w: f64, jl: f64) -> Option<(f64, f64, f64)> {
    let xi = 1.0 / x;
    let mut a = 0.25 - mu * mu;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fact = a * xi / (p * p + q * q);
    let mut cr = br + q * fact;
    let mut ci = bi + p * fact;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut converged = false;
    for i in 2..MAX_ITER {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < TINY {
            dr = TINY;
        }
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if cr.abs() + ci.abs() < TINY {
            cr = TINY;
        }
        den = dr * dr + di * di;
        dr /= den;
        di = -di / den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        let temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() <= CF_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    let gam = (p - f) / q;
    let j_mu = (w / ((p - f) * gam + q)).sqrt().copysign(jl);
    let y_mu = j_mu * gam;
    let y_mup = y_mu * p + j_mu * q;
    let y_mu1 = mu * xi * y_mu - y_mup;
    Some((j_mu, y_mu, y_mu1))
}
