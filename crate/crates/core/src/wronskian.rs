//! The Wronskian `W(x) = ξ_ν ξ̄′_μ − ξ′_ν ξ̄_μ` of `ξ_ν = √x C_ν` and
//! `ξ̄_μ = √x C̄_μ`.
//!
//! Since `W′ = (μ² − ν²)/x² · ξ_ν ξ̄_μ`, the local extrema of `W` sit exactly at
//! the merged zeros of the two cylinder functions and `W` is monotone between
//! them. Its sign structure is therefore read off from the extremum values,
//! which have closed forms in terms of one function and the other's
//! derivative.

use std::f64::consts::{FRAC_2_PI, PI};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::interlace::{check_interlaced, common_upper, InterlaceReport, Side, COINCIDENCE_TOL};
use crate::report::VerificationReport;
use crate::special_fn::{cylinder_values, CylinderSpec, EvalKind, MAX_X};
use crate::zeros::{find_zeros, ZeroSequence};

/// `W(√x C_a, √x C_b)(x)`.
///
/// Written as `x (C_a C′_b − C′_a C_b)`: the `C_a C_b / 2` terms coming from
/// differentiating `√x` cancel identically.
pub fn wronskian_value(a: CylinderSpec, b: CylinderSpec, x: f64) -> Result<f64> {
    wronskian_of(a, b, EvalKind::Function, x)
}

/// Wronskian of `√x f_a` and `√x f_b` where `f` is `C` or `C′` per `kind`.
pub fn wronskian_of(a: CylinderSpec, b: CylinderSpec, kind: EvalKind, x: f64) -> Result<f64> {
    let (fa, sa) = values(a, kind, x)?;
    let (fb, sb) = values(b, kind, x)?;
    Ok(x * (fa * sb - sa * fb))
}

fn values(spec: CylinderSpec, kind: EvalKind, x: f64) -> Result<(f64, f64)> {
    let v = cylinder_values(spec, x)?;
    Ok(match kind {
        EvalKind::Function => (v.value, v.derivative),
        EvalKind::Derivative => (v.derivative, v.second_derivative(spec.nu(), x)),
    })
}

/// Limit of `W` as `x → ∞`: `(2/π) sin((μ − ν)π/2 + δ − δ̄)`.
pub fn wronskian_asymptote(a: CylinderSpec, b: CylinderSpec) -> f64 {
    let phase =
        0.5 * (b.nu() - a.nu()) * PI + a.angle.effective_radians() - b.angle.effective_radians();
    FRAC_2_PI * phase.sin()
}

/// Both sides of `W′ = (μ² − ν²)/x² · ξ_ν ξ̄_μ` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivativeIdentity {
    /// Five-point centered difference of `W` with step `h`.
    pub numeric: f64,
    pub analytic: f64,
    /// `|numeric − analytic| / max(1, |analytic|)`.
    pub residual: f64,
}

pub fn check_derivative_identity(
    a: CylinderSpec,
    b: CylinderSpec,
    x: f64,
    h: f64,
) -> Result<DerivativeIdentity> {
    if h.is_nan() || h <= 0.0 || x - 2.0 * h <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "need h > 0 and x - 2h > 0 (x = {x}, h = {h})"
        )));
    }
    let w = |t: f64| wronskian_value(a, b, t);
    let numeric =
        (w(x - 2.0 * h)? - 8.0 * w(x - h)? + 8.0 * w(x + h)? - w(x + 2.0 * h)?) / (12.0 * h);
    let ca = cylinder_values(a, x)?.value;
    let cb = cylinder_values(b, x)?.value;
    let (nu, mu) = (a.nu(), b.nu());
    // ξ_ν ξ̄_μ / x² = C_ν C̄_μ / x
    let analytic = (mu * mu - nu * nu) / x * ca * cb;
    Ok(DerivativeIdentity {
        numeric,
        analytic,
        residual: (numeric - analytic).abs() / analytic.abs().max(1.0),
    })
}

/// A local extremum of `W`, located at a zero of one of the two functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extremum {
    pub position: f64,
    pub value: f64,
    pub source: Side,
    /// A zero of the other function coincides with this one; `value` is 0.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WronskianProfile {
    pub spec_a: CylinderSpec,
    pub spec_b: CylinderSpec,
    pub kind: EvalKind,
    pub extrema: Vec<Extremum>,
    /// Strict sign alternations along the non-degenerate extremum values.
    pub sign_changes: usize,
    pub degenerate: usize,
    pub asymptote: f64,
    /// `(first merged zero, last judged zero)`.
    pub window: (f64, f64),
    /// `W` evaluated at `window.1 + 10π` (capped at the box edge).
    pub tail_value: f64,
    /// The last extremum and the asymptote have opposite signs, so `W` has a
    /// root beyond the window. `None` when the asymptote vanishes.
    pub tail_crossing: Option<bool>,
}

impl WronskianProfile {
    /// No root of `W` inside the window.
    pub fn root_free(&self) -> bool {
        self.sign_changes == 0 && self.degenerate == 0
    }
}

/// Builds the extremum profile from precomputed zero sequences of the two
/// functions (both of the same kind).
pub fn profile_from_zeros(za: &ZeroSequence, zb: &ZeroSequence) -> Result<WronskianProfile> {
    if za.kind != zb.kind {
        return Err(Error::InvalidArgument(
            "zero sequences must be of the same kind".into(),
        ));
    }
    let (a, b, kind) = (za.spec, zb.spec, za.kind);
    if a.same_function(&b) {
        return Err(Error::IdenticalSpecs);
    }
    let hi = common_upper(za, zb)?;
    let mut merged: Vec<(f64, Side)> = za
        .up_to(hi)
        .iter()
        .map(|&z| (z, Side::A))
        .chain(zb.up_to(hi).iter().map(|&z| (z, Side::B)))
        .filter(|&(z, _)| z > 0.0)
        .collect();
    merged.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut extrema = Vec::with_capacity(merged.len());
    for (i, &(x, source)) in merged.iter().enumerate() {
        let close = |j: usize| {
            let (z, s) = merged[j];
            s != source && (z - x).abs() <= COINCIDENCE_TOL * x.max(1.0)
        };
        let degenerate = (i > 0 && close(i - 1)) || (i + 1 < merged.len() && close(i + 1));
        let value = if degenerate {
            0.0
        } else {
            let (fa, sa) = values(a, kind, x)?;
            let (fb, sb) = values(b, kind, x)?;
            match source {
                // at a zero of f_a: W = −x f′_a f_b
                Side::A => -x * sa * fb,
                // at a zero of f_b: W = x f_a f′_b
                Side::B => x * fa * sb,
            }
        };
        extrema.push(Extremum {
            position: x,
            value,
            source,
            degenerate,
        });
    }

    let signs: Vec<f64> = extrema
        .iter()
        .filter(|e| !e.degenerate && e.value != 0.0)
        .map(|e| e.value.signum())
        .collect();
    let sign_changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
    let degenerate = extrema.iter().filter(|e| e.degenerate).count();
    let asymptote = wronskian_asymptote(a, b);
    let tail_x = (hi + 10.0 * PI).min(MAX_X);
    let tail_value = wronskian_of(a, b, kind, tail_x)?;
    let tail_crossing = match signs.last() {
        Some(&last) if asymptote.abs() > 1e-12 => Some(last != asymptote.signum()),
        _ => None,
    };
    let window = (merged.first().map_or(hi, |m| m.0), hi);
    Ok(WronskianProfile {
        spec_a: a,
        spec_b: b,
        kind,
        extrema,
        sign_changes,
        degenerate,
        asymptote,
        window,
        tail_value,
        tail_crossing,
    })
}

/// Extremum profile of `W(√x C_a, √x C_b)` over the first `n` zeros of each.
pub fn wronskian_profile(a: CylinderSpec, b: CylinderSpec, n: usize) -> Result<WronskianProfile> {
    wronskian_profile_of(a, b, EvalKind::Function, n)
}

/// As [`wronskian_profile`]; with `Derivative` the profile is that of
/// `W(√x C′_a, √x C′_b)` taken at the merged zeros of the derivatives.
pub fn wronskian_profile_of(
    a: CylinderSpec,
    b: CylinderSpec,
    kind: EvalKind,
    n: usize,
) -> Result<WronskianProfile> {
    if a.same_function(&b) {
        return Err(Error::IdenticalSpecs);
    }
    let za = find_zeros(a, kind, n)?;
    let zb = find_zeros(b, kind, n)?;
    profile_from_zeros(&za, &zb)
}

/// Counts gaps between consecutive extrema where sampled `W` is not monotone
/// in the direction fixed by `sign((μ² − ν²) C_ν C̄_μ)`.
pub fn monotonicity_violations(
    profile: &WronskianProfile,
    samples_per_gap: usize,
) -> Result<usize> {
    let (a, b) = (profile.spec_a, profile.spec_b);
    let dmu2 = b.nu() * b.nu() - a.nu() * a.nu();
    let mut bad = 0;
    for w in profile.extrema.windows(2) {
        let (lo, hi) = (w[0].position, w[1].position);
        if hi - lo <= COINCIDENCE_TOL * hi.max(1.0) {
            continue;
        }
        let mid = 0.5 * (lo + hi);
        let dir = (dmu2 * cylinder_values(a, mid)?.value * cylinder_values(b, mid)?.value).signum();
        let mut prev = wronskian_value(a, b, lo)?;
        let mut ok = true;
        for k in 1..=samples_per_gap + 1 {
            let x = lo + (hi - lo) * k as f64 / (samples_per_gap + 1) as f64;
            let cur = wronskian_value(a, b, x)?;
            let tol = 1e-12 * cur.abs().max(1.0);
            if (cur - prev) * dir < -tol {
                ok = false;
            }
            prev = cur;
        }
        if !ok {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Both sides of the Wronskian/interlacing equivalence for two zero
/// sequences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Equivalence {
    pub interlace: InterlaceReport,
    pub profile: WronskianProfile,
    pub report: VerificationReport,
}

pub fn equivalence_from_zeros(za: &ZeroSequence, zb: &ZeroSequence) -> Result<Equivalence> {
    let interlace = check_interlaced(za, zb)?;
    let profile = profile_from_zeros(za, zb)?;
    let agree = profile.root_free() == interlace.interlaced;
    let counterexample = (!agree).then(|| {
        json!({
            "nu": za.spec.nu(),
            "mu": zb.spec.nu(),
            "interlaced": interlace.interlaced,
            "sign_changes": profile.sign_changes,
            "degenerate": profile.degenerate,
            "first_violation": interlace.first_violation,
        })
    });
    let worst = profile
        .extrema
        .iter()
        .map(|e| e.value.abs())
        .fold(f64::INFINITY, f64::min);
    let report = VerificationReport::new(
        format!(
            "lemma5(nu={}, delta={}, mu={}, delta_bar={}, {}; interlaced={}, root_free={})",
            za.spec.nu(),
            za.spec.angle,
            zb.spec.nu(),
            zb.spec.angle,
            za.kind,
            interlace.interlaced,
            profile.root_free()
        ),
        profile.extrema.len() as u64,
        worst,
        counterexample,
    );
    Ok(Equivalence {
        interlace,
        profile,
        report,
    })
}

/// `W` root-free on the window ⇔ the zeros interlace, over the first `n`
/// zeros of each function.
pub fn interlace_wronskian_equivalence(
    a: CylinderSpec,
    b: CylinderSpec,
    n: usize,
) -> Result<VerificationReport> {
    if a.same_function(&b) {
        return Err(Error::IdenticalSpecs);
    }
    let za = find_zeros(a, EvalKind::Function, n)?;
    let zb = find_zeros(b, EvalKind::Function, n)?;
    Ok(equivalence_from_zeros(&za, &zb)?.report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn spec(nu: f64, d: f64) -> CylinderSpec {
        CylinderSpec::new(nu, d).unwrap()
    }

    #[test]
    fn self_wronskian_vanishes() {
        let s = spec(2.3, 0.7);
        for &x in &[0.5, 5.0, 80.0] {
            assert_eq!(wronskian_value(s, s, x).unwrap(), 0.0);
        }
    }

    #[test]
    fn j_against_minus_y_is_constant() {
        for &nu in &[0.5, 1.0, 4.2] {
            for &x in &[1.0, 10.0, 100.0] {
                let w = wronskian_value(spec(nu, 0.0), spec(nu, FRAC_PI_2), x).unwrap();
                assert!((w + FRAC_2_PI).abs() < 1e-12, "nu={nu} x={x} w={w}");
            }
        }
    }

    #[test]
    fn antisymmetric() {
        let (a, b) = (spec(1.2, 0.3), spec(3.4, 2.0));
        for &x in &[0.7, 9.0, 150.0] {
            let w1 = wronskian_value(a, b, x).unwrap();
            let w2 = wronskian_value(b, a, x).unwrap();
            assert_eq!(w1, -w2);
        }
    }

    #[test]
    fn identical_specs_rejected() {
        let s = spec(1.0, 0.0);
        assert_eq!(wronskian_profile(s, s, 5), Err(Error::IdenticalSpecs));
        let flipped = spec(1.0, PI);
        assert_eq!(wronskian_profile(s, flipped, 5), Err(Error::IdenticalSpecs));
    }

    #[test]
    fn asymptote_formula() {
        let w = wronskian_asymptote(spec(1.0, 0.0), spec(4.0, 0.0));
        assert!((w + FRAC_2_PI).abs() < 1e-15);
        let w = wronskian_asymptote(spec(2.0, 0.0), spec(2.0, FRAC_PI_2));
        assert!((w + FRAC_2_PI).abs() < 1e-15);
    }

    #[test]
    fn derivative_identity_needs_room() {
        let s = spec(1.0, 0.0);
        assert!(check_derivative_identity(s, s, 1e-5, 1e-4).is_err());
        assert!(check_derivative_identity(s, s, 1.0, 0.0).is_err());
    }
}
