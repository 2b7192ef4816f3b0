//! Evaluation of Γ, `J_ν`, `Y_ν`, the cylinder function `C_ν(x; δ)` and its
//! derivative, on the box `0 ≤ ν ≤ 30`, `0 < x ≤ 400`.
//!
//! All public evaluators go through one continued-fraction engine that
//! returns `J` and `Y` at two consecutive orders, so `C_ν` and `C_{ν+1}`
//! (hence `C′_ν`) come from a single consistent computation.

mod asymptotic;
mod gamma;
mod series;
mod steed;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use asymptotic::hankel_expansion;
pub use gamma::gamma_real;
pub use series::{bessel_j_series, SERIES_MAX_X};

/// Largest order accepted by [`Order`].
pub const MAX_ORDER: f64 = 30.0;
/// Largest raw order accepted by [`bessel_j`] / [`bessel_y`]; leaves room
/// for `C_{ν+2}` at the top of the supported range.
pub const MAX_RAW_ORDER: f64 = 32.0;
/// Upper end of the evaluation box in `x`.
pub const MAX_X: f64 = 400.0;

/// Order ν of a cylinder function, `0 ≤ ν ≤ 30`.
///
/// ν = 0 is admitted as the boundary case needed for `J_0`, `Y_0` and the
/// `J′_0` zero convention; operations that need a strictly positive order
/// check for it themselves.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || !(0.0..=MAX_ORDER).contains(&nu) {
            return Err(Error::domain("nu", nu, "0 <= nu <= 30"));
        }
        Ok(Order(nu))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0.0
    }
}

impl TryFrom<f64> for Order {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        Order::new(v)
    }
}

impl From<Order> for f64 {
    fn from(o: Order) -> f64 {
        o.0
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Mixing angle δ, stored normalized into `[0, π)`.
///
/// `C(·; δ + π) = −C(·; δ)`, so normalization changes at most the overall
/// sign. That sign is remembered (`flipped`) so that evaluation still returns
/// `cos δ · J − sin δ · Y` for the angle the caller passed in; zeros never
/// depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixingAngle {
    radians: f64,
    flipped: bool,
}

impl MixingAngle {
    pub fn new(delta: f64) -> Result<Self> {
        if !delta.is_finite() {
            return Err(Error::domain("delta", delta, "finite"));
        }
        let turns = (delta / PI).floor();
        let mut radians = delta - turns * PI;
        // Guard the upper end against rounding.
        let mut turns = turns;
        if radians >= PI {
            radians -= PI;
            turns += 1.0;
        }
        if radians < 0.0 {
            radians = 0.0;
        }
        let flipped = turns.rem_euclid(2.0) == 1.0;
        Ok(MixingAngle { radians, flipped })
    }

    /// δ = 0: the function is `J_ν`.
    pub const J: MixingAngle = MixingAngle {
        radians: 0.0,
        flipped: false,
    };

    /// δ = π/2: the function is `−Y_ν`.
    pub const Y: MixingAngle = MixingAngle {
        radians: FRAC_PI_2,
        flipped: false,
    };

    /// Normalized angle in `[0, π)`.
    pub fn radians(self) -> f64 {
        self.radians
    }

    /// Whether normalization absorbed a sign flip.
    pub fn flipped(self) -> bool {
        self.flipped
    }

    /// The angle as originally oriented, modulo 2π.
    pub fn effective_radians(self) -> f64 {
        if self.flipped {
            self.radians + PI
        } else {
            self.radians
        }
    }

    /// `(cos δ, sin δ)` for the effective angle, exact at 0 and π/2.
    pub fn cos_sin(self) -> (f64, f64) {
        let (c, s) = if self.radians == 0.0 {
            (1.0, 0.0)
        } else if (self.radians - FRAC_PI_2).abs() <= 4.0 * f64::EPSILON {
            (0.0, 1.0)
        } else {
            (self.radians.cos(), self.radians.sin())
        };
        if self.flipped {
            (-c, -s)
        } else {
            (c, s)
        }
    }

    /// Same function up to sign.
    pub fn same_function(self, other: MixingAngle) -> bool {
        (self.radians - other.radians).abs() <= 4.0 * f64::EPSILON
    }
}

impl fmt::Display for MixingAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.effective_radians())
    }
}

/// Identifies `C_ν(·; δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CylinderSpec {
    pub order: Order,
    pub angle: MixingAngle,
}

impl CylinderSpec {
    pub fn new(nu: f64, delta: f64) -> Result<Self> {
        Ok(CylinderSpec {
            order: Order::new(nu)?,
            angle: MixingAngle::new(delta)?,
        })
    }

    pub fn from_parts(order: Order, angle: MixingAngle) -> Self {
        CylinderSpec { order, angle }
    }

    pub fn nu(&self) -> f64 {
        self.order.value()
    }

    /// Same function up to an overall sign (hence the same zeros).
    pub fn same_function(&self, other: &CylinderSpec) -> bool {
        self.order == other.order && self.angle.same_function(other.angle)
    }

    /// The spec with the same angle at a shifted order.
    pub fn with_order(&self, nu: f64) -> Result<Self> {
        Ok(CylinderSpec {
            order: Order::new(nu)?,
            angle: self.angle,
        })
    }
}

/// Function or first derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalKind {
    Function,
    Derivative,
}

impl fmt::Display for EvalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalKind::Function => "function",
            EvalKind::Derivative => "derivative",
        })
    }
}

fn check_x(x: f64) -> Result<()> {
    if !x.is_finite() || x <= 0.0 || x > MAX_X {
        return Err(Error::domain("x", x, "0 < x <= 400"));
    }
    Ok(())
}

/// `sin(πa)` and `cos(πa)`, exact at integers and half-integers.
fn sin_cos_pi(a: f64) -> (f64, f64) {
    let r = a.rem_euclid(2.0);
    let twice = 2.0 * r;
    if twice.fract() == 0.0 {
        return match twice as u8 {
            0 => (0.0, 1.0),
            1 => (1.0, 0.0),
            2 => (0.0, -1.0),
            _ => (-1.0, 0.0),
        };
    }
    (PI * r).sin_cos()
}

/// `J_ν(x)` for `−1 ≤ ν ≤ 32`, `0 < x ≤ 400`.
///
/// Negative orders use `J_{−a} = cos(aπ) J_a − sin(aπ) Y_a`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !nu.is_finite() || !(-1.0..=MAX_RAW_ORDER).contains(&nu) {
        return Err(Error::domain("nu", nu, "-1 <= nu <= 32"));
    }
    check_x(x)?;
    if nu >= 0.0 {
        return Ok(steed::jy_pair(nu, x)?.j);
    }
    let a = -nu;
    let p = steed::jy_pair(a, x)?;
    let (s, c) = sin_cos_pi(a);
    if s == 0.0 {
        return Ok(c * p.j);
    }
    Ok(c * p.j - s * p.y)
}

/// `Y_ν(x)` for `0 ≤ ν ≤ 32`, `0 < x ≤ 400`.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    if !nu.is_finite() || !(0.0..=MAX_RAW_ORDER).contains(&nu) {
        return Err(Error::domain("nu", nu, "0 <= nu <= 32"));
    }
    check_x(x)?;
    Ok(steed::jy_pair(nu, x)?.y)
}

/// `(C_ν(x), C′_ν(x), C_{ν+1}(x))` for one spec from one engine call.
///
/// The derivative is `C′_ν = −C_{ν+1} + (ν/x) C_ν`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderValues {
    pub value: f64,
    pub derivative: f64,
    pub next: f64,
}

impl CylinderValues {
    /// `C″_ν` from Bessel's equation.
    pub fn second_derivative(&self, nu: f64, x: f64) -> f64 {
        -self.derivative / x - (1.0 - nu * nu / (x * x)) * self.value
    }
}

pub fn cylinder_values(spec: CylinderSpec, x: f64) -> Result<CylinderValues> {
    check_x(x)?;
    let nu = spec.nu();
    let p = steed::jy_pair(nu, x)?;
    let (c, s) = spec.angle.cos_sin();
    let value = c * p.j - s * p.y;
    let next = c * p.j_next - s * p.y_next;
    Ok(CylinderValues {
        value,
        derivative: -next + nu / x * value,
        next,
    })
}

/// As [`cylinder_values`] for a raw order `0 ≤ ν ≤ 32`, used where a
/// relation reaches past the order box (`C_{ν+2}` at ν = 30).
pub(crate) fn raw_values(nu: f64, angle: MixingAngle, x: f64) -> Result<CylinderValues> {
    if !nu.is_finite() || !(0.0..=MAX_RAW_ORDER).contains(&nu) {
        return Err(Error::domain("nu", nu, "0 <= nu <= 32"));
    }
    check_x(x)?;
    let p = steed::jy_pair(nu, x)?;
    let (c, s) = angle.cos_sin();
    let value = c * p.j - s * p.y;
    let next = c * p.j_next - s * p.y_next;
    Ok(CylinderValues {
        value,
        derivative: -next + nu / x * value,
        next,
    })
}

/// `C_ν(x; δ) = cos δ · J_ν(x) − sin δ · Y_ν(x)`.
pub fn cylinder(spec: CylinderSpec, x: f64) -> Result<f64> {
    Ok(cylinder_values(spec, x)?.value)
}

/// `C′_ν(x; δ) = −C_{ν+1}(x) + (ν/x) C_ν(x)`.
pub fn cylinder_prime(spec: CylinderSpec, x: f64) -> Result<f64> {
    Ok(cylinder_values(spec, x)?.derivative)
}

/// Value of `C_ν` or `C′_ν` together with its own derivative.
pub fn eval_with_slope(spec: CylinderSpec, kind: EvalKind, x: f64) -> Result<(f64, f64)> {
    let v = cylinder_values(spec, x)?;
    Ok(match kind {
        EvalKind::Function => (v.value, v.derivative),
        EvalKind::Derivative => (v.derivative, v.second_derivative(spec.nu(), x)),
    })
}

/// Sign of `C_ν(0+)`: `sgn sin δ` when `sin δ ≠ 0`, otherwise the sign of
/// the leading series term of `J_ν`.
pub fn sign_at_origin(spec: CylinderSpec) -> i8 {
    let (c, s) = spec.angle.cos_sin();
    if s > 0.0 {
        1
    } else if s < 0.0 {
        -1
    } else if c > 0.0 {
        1
    } else {
        -1
    }
}

/// Leading large-x form `√(2/(πx)) · cos(x − νπ/2 − π/4 + δ)`.
///
/// Requires `x ≥ 10 · max(1, ν)`.
pub fn asymptotic_cylinder(spec: CylinderSpec, x: f64) -> Result<f64> {
    let nu = spec.nu();
    if !x.is_finite() || x < 10.0 * nu.max(1.0) {
        return Err(Error::domain("x", x, "x >= 10 * max(1, nu)"));
    }
    let (c, s) = spec.angle.cos_sin();
    let (ps, pc) = asymptotic::leading_phase(nu, x).sin_cos();
    // cos(θ + δ) = cos θ cos δ − sin θ sin δ
    Ok((2.0 / (PI * x)).sqrt() * (pc * c - ps * s))
}
