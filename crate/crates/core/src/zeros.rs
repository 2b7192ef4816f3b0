//! Enumeration of the positive zeros of `C_ν` and `C′_ν`.
//!
//! Zeros are found by a forward scan with step π/8 from `x = 1e-6`. Each
//! step checks for a sign change and, failing that, for an interior extremum
//! that dips across the axis (a hidden pair of zeros). Zeros below the scan
//! start are detected from the known sign of the function at `0+` and located
//! by a geometric search. Every bracketed zero is refined by safeguarded
//! Newton iteration.

use std::collections::VecDeque;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{bisect, newton_bisect};
use crate::special_fn::{
    eval_with_slope, sign_at_origin, CylinderSpec, EvalKind, MixingAngle, Order, MAX_X,
};

/// Scan step; consecutive zeros in the supported box are more than π/2 apart.
pub const SCAN_STEP: f64 = PI / 8.0;
/// First scan abscissa.
pub const SCAN_START: f64 = 1e-6;
/// Relative step size at which Newton refinement stops.
pub const REFINE_TOL: f64 = 1e-12;
/// Smallest abscissa probed when a zero hides below [`SCAN_START`].
const ORIGIN_FLOOR: f64 = 1e-290;

/// The first zeros of `C_ν` or `C′_ν`, strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroSequence {
    pub spec: CylinderSpec,
    pub kind: EvalKind,
    pub zeros: Vec<f64>,
    pub refined_to: f64,
}

impl ZeroSequence {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// The `s`-th zero, counting from 1.
    pub fn nth(&self, s: usize) -> Option<f64> {
        s.checked_sub(1).and_then(|i| self.zeros.get(i).copied())
    }

    pub fn last(&self) -> Option<f64> {
        self.zeros.last().copied()
    }

    /// Zeros not exceeding `x`.
    pub fn up_to(&self, x: f64) -> &[f64] {
        let k = self.zeros.partition_point(|&z| z <= x);
        &self.zeros[..k]
    }
}

/// `J′_0` has its first zero at the origin by convention.
fn origin_is_zero(spec: CylinderSpec, kind: EvalKind) -> bool {
    kind == EvalKind::Derivative && spec.nu() == 0.0 && spec.angle.radians() == 0.0
}

/// Sign of the target function at `0+`, when it is determined.
fn sign_near_origin(spec: CylinderSpec, kind: EvalKind) -> Option<f64> {
    match kind {
        EvalKind::Function => Some(sign_at_origin(spec) as f64),
        EvalKind::Derivative => {
            let (c, s) = spec.angle.cos_sin();
            if s != 0.0 {
                // C ~ sin δ · K x^(−ν) (or a logarithm at ν = 0) falls off.
                Some(-s.signum())
            } else if spec.nu() > 0.0 {
                Some(c.signum())
            } else {
                None
            }
        }
    }
}

struct Scanner {
    spec: CylinderSpec,
    kind: EvalKind,
    a: f64,
    fa: f64,
    sa: f64,
    limit: f64,
    pending: VecDeque<f64>,
}

impl Scanner {
    fn new(spec: CylinderSpec, kind: EvalKind, limit: f64) -> Result<Self> {
        let mut pending = VecDeque::new();
        if origin_is_zero(spec, kind) {
            pending.push_back(0.0);
        }
        let (fa, sa) = eval_with_slope(spec, kind, SCAN_START)?;
        let mut scanner = Scanner {
            spec,
            kind,
            a: SCAN_START,
            fa,
            sa,
            limit,
            pending,
        };
        if let Some(expected) = sign_near_origin(spec, kind) {
            if fa != 0.0 && fa.signum() != expected {
                let z = scanner.zero_below_start()?;
                scanner.pending.push_back(z);
            }
        }
        Ok(scanner)
    }

    fn eval(&self, x: f64) -> Result<(f64, f64)> {
        eval_with_slope(self.spec, self.kind, x)
    }

    fn refine(&self, lo: f64, hi: f64, f_lo: f64) -> Result<f64> {
        newton_bisect(|x| self.eval(x), lo, hi, f_lo, REFINE_TOL)
    }

    /// An odd number of zeros lies in `(0, SCAN_START)`; the function is
    /// simple there, so geometric descent finds a bracket for the one zero.
    fn zero_below_start(&self) -> Result<f64> {
        let mut hi = SCAN_START;
        let mut f_hi = self.fa;
        let mut lo = hi * 1e-3;
        while lo >= ORIGIN_FLOOR {
            let (f_lo, _) = self.eval(lo)?;
            if f_lo == 0.0 {
                return Ok(lo);
            }
            if f_lo.signum() != f_hi.signum() {
                // Locate in log space first; Newton in x is poorly scaled here.
                let t = bisect(
                    |t: f64| Ok(self.eval(t.exp())?.0),
                    lo.ln(),
                    hi.ln(),
                    f_lo,
                    1e-15,
                )?;
                return Ok(t.exp());
            }
            hi = lo;
            f_hi = f_lo;
            lo *= 1e-3;
        }
        Err(Error::domain(
            "first zero",
            0.0,
            "zero lies below the evaluation floor 1e-290",
        ))
    }

    fn next_zero(&mut self) -> Result<Option<f64>> {
        loop {
            if let Some(z) = self.pending.pop_front() {
                return Ok(Some(z));
            }
            if self.a >= self.limit {
                return Ok(None);
            }
            let b = (self.a + SCAN_STEP).min(self.limit);
            let (mut fb, mut sb) = self.eval(b)?;
            let mut next_a = b;
            if fb == 0.0 {
                self.pending.push_back(b);
                next_a = b + 1e-9 * b.max(1.0);
                if next_a > self.limit {
                    self.a = self.limit;
                    continue;
                }
                (fb, sb) = self.eval(next_a)?;
            } else if self.fa.signum() != fb.signum() {
                let z = self.refine(self.a, b, self.fa)?;
                self.pending.push_back(z);
            } else if self.sa.signum() != sb.signum() && self.fa.signum() != self.sa.signum() {
                // Heading towards the axis at `a`, away from it at `b`:
                // check whether the extremum in between crosses.
                let m = bisect(|x| Ok(self.eval(x)?.1), self.a, b, self.sa, 1e-13 * b)?;
                let (fm, _) = self.eval(m)?;
                if fm.signum() != self.fa.signum() {
                    let z1 = self.refine(self.a, m, self.fa)?;
                    let z2 = self.refine(m, b, fm)?;
                    self.pending.push_back(z1);
                    self.pending.push_back(z2);
                }
            }
            self.a = next_a;
            self.fa = fb;
            self.sa = sb;
        }
    }
}

/// Largest `n` that [`find_zeros`] accepts at order `nu`.
pub fn max_zero_count(nu: f64) -> usize {
    ((MAX_X - 20.0 - nu) / PI).floor().max(0.0) as usize
}

fn check_count(spec: CylinderSpec, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "zero count must be at least 1".into(),
        ));
    }
    let reach = n as f64 * PI + spec.nu() + 20.0;
    if n > max_zero_count(spec.nu()) || reach > MAX_X {
        return Err(Error::domain(
            "n * pi + nu + 20",
            reach,
            "must stay within x <= 400",
        ));
    }
    Ok(())
}

/// The first `n` positive zeros of `C_ν` (`Function`) or `C′_ν`
/// (`Derivative`), in increasing order.
///
/// For `ν = 0, δ = 0, Derivative` the origin is counted as the first zero.
pub fn find_zeros(spec: CylinderSpec, kind: EvalKind, n: usize) -> Result<ZeroSequence> {
    check_count(spec, n)?;
    let mut scanner = Scanner::new(spec, kind, MAX_X)?;
    let mut zeros = Vec::with_capacity(n);
    while zeros.len() < n {
        match scanner.next_zero()? {
            Some(z) => zeros.push(z),
            None => {
                return Err(Error::domain(
                    "n",
                    n as f64,
                    "requested zeros extend beyond x = 400",
                ))
            }
        }
    }
    Ok(ZeroSequence {
        spec,
        kind,
        zeros,
        refined_to: REFINE_TOL,
    })
}

/// Every positive zero not exceeding `x_max`.
pub fn zeros_below(spec: CylinderSpec, kind: EvalKind, x_max: f64) -> Result<ZeroSequence> {
    if !x_max.is_finite() || x_max <= SCAN_START || x_max > MAX_X {
        return Err(Error::domain("x_max", x_max, "1e-6 < x_max <= 400"));
    }
    let mut scanner = Scanner::new(spec, kind, x_max)?;
    let mut zeros = Vec::new();
    while let Some(z) = scanner.next_zero()? {
        if z > x_max {
            break;
        }
        zeros.push(z);
    }
    Ok(ZeroSequence {
        spec,
        kind,
        zeros,
        refined_to: REFINE_TOL,
    })
}

/// The `s`-th zero followed across a grid of orders.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub s: usize,
    pub kind: EvalKind,
    pub angle: MixingAngle,
    /// `(ν, c_{ν,s})` pairs in grid order.
    pub samples: Vec<(f64, f64)>,
    /// Largest observed `|Δc / Δν|` between neighbouring samples.
    pub max_slope: f64,
}

impl Trajectory {
    /// Index of the first sample that does not exceed its predecessor.
    pub fn first_non_increase(&self) -> Option<usize> {
        self.samples
            .windows(2)
            .position(|w| w[1].1 <= w[0].1)
            .map(|i| i + 1)
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.first_non_increase().is_none()
    }
}

/// Follows `c_{ν,s}` (or `c′_{ν,s}`) over a strictly increasing grid of
/// orders. Grid points are independent and evaluated in parallel.
pub fn zero_trajectory(
    angle: MixingAngle,
    kind: EvalKind,
    s: usize,
    nu_grid: &[f64],
) -> Result<Trajectory> {
    if s == 0 {
        return Err(Error::InvalidArgument("zero index counts from 1".into()));
    }
    if nu_grid.is_empty() {
        return Err(Error::InvalidArgument("empty order grid".into()));
    }
    if nu_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(
            "order grid must be strictly increasing".into(),
        ));
    }
    let samples = nu_grid
        .par_iter()
        .map(|&nu| {
            let spec = CylinderSpec::from_parts(Order::new(nu)?, angle);
            let seq = find_zeros(spec, kind, s)?;
            Ok((nu, seq.zeros[s - 1]))
        })
        .collect::<Result<Vec<_>>>()?;
    let max_slope = samples
        .windows(2)
        .map(|w| ((w[1].1 - w[0].1) / (w[1].0 - w[0].0)).abs())
        .fold(0.0, f64::max);
    Ok(Trajectory {
        s,
        kind,
        angle,
        samples,
        max_slope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        let spec = CylinderSpec::new(0.5, 0.0).unwrap();
        let z = find_zeros(spec, EvalKind::Function, 5).unwrap();
        for (s, &x) in z.zeros.iter().enumerate() {
            assert!((x - (s + 1) as f64 * PI).abs() < 1e-10);
        }
        let spec = CylinderSpec::new(0.5, FRAC_PI_2).unwrap();
        let z = find_zeros(spec, EvalKind::Function, 3).unwrap();
        for (s, &x) in z.zeros.iter().enumerate() {
            assert!((x - (s as f64 + 0.5) * PI).abs() < 1e-10);
        }
    }

    #[test]
    fn j_prime_zero_convention() {
        let spec = CylinderSpec::new(0.0, 0.0).unwrap();
        let z = find_zeros(spec, EvalKind::Derivative, 3).unwrap();
        assert_eq!(z.zeros[0], 0.0);
        // J'_0 = −J_1.
        let j1 = find_zeros(CylinderSpec::new(1.0, 0.0).unwrap(), EvalKind::Function, 2).unwrap();
        assert!((z.zeros[1] - j1.zeros[0]).abs() < 1e-12);
        assert!((z.zeros[2] - j1.zeros[1]).abs() < 1e-12);
        // Not for other angles.
        let y = find_zeros(
            CylinderSpec::new(0.0, FRAC_PI_2).unwrap(),
            EvalKind::Derivative,
            1,
        )
        .unwrap();
        assert!(y.zeros[0] > 1.0);
    }

    #[test]
    fn count_precondition() {
        let spec = CylinderSpec::new(1.0, 0.0).unwrap();
        assert!(find_zeros(spec, EvalKind::Function, 0).is_err());
        assert!(find_zeros(spec, EvalKind::Function, 125).is_err());
        assert!(find_zeros(spec, EvalKind::Function, 120).is_ok());
        assert!(find_zeros(spec, EvalKind::Function, 100).is_ok());
        let m = max_zero_count(1.0);
        assert!(find_zeros(spec, EvalKind::Function, m).is_ok());
        assert!(find_zeros(spec, EvalKind::Function, m + 1).is_err());
    }

    #[test]
    fn zero_close_to_origin_is_found() {
        // δ just below π: C ≈ −J + ε·(−Y)… crosses very near the origin.
        let spec = CylinderSpec::new(0.25, PI - 1e-9).unwrap();
        let z = find_zeros(spec, EvalKind::Function, 2).unwrap();
        assert!(z.zeros[0] < 1e-6, "first zero {}", z.zeros[0]);
        let v = crate::special_fn::cylinder(spec, z.zeros[0]).unwrap();
        let scale = crate::special_fn::bessel_j(0.25, z.zeros[0]).unwrap();
        assert!(v.abs() < 1e-8 * scale);
        assert!(z.zeros[1] > 1.0);
    }

    #[test]
    fn zeros_below_matches_find_zeros() {
        let spec = CylinderSpec::new(2.5, 1.0).unwrap();
        let all = zeros_below(spec, EvalKind::Function, 40.0).unwrap();
        let first = find_zeros(spec, EvalKind::Function, all.len()).unwrap();
        assert_eq!(all.len(), first.len());
        for (a, b) in all.zeros.iter().zip(&first.zeros) {
            assert!((a - b).abs() <= 1e-12 * a, "{a} vs {b}");
        }
        assert!(all.last().unwrap() <= 40.0);
        assert_eq!(
            all.up_to(10.0).len(),
            first.zeros.iter().filter(|&&z| z <= 10.0).count()
        );
    }

    #[test]
    fn trajectory_rejects_bad_grids() {
        let a = MixingAngle::J;
        assert!(zero_trajectory(a, EvalKind::Function, 0, &[1.0]).is_err());
        assert!(zero_trajectory(a, EvalKind::Function, 1, &[]).is_err());
        assert!(zero_trajectory(a, EvalKind::Function, 1, &[2.0, 1.0]).is_err());
        let t = zero_trajectory(a, EvalKind::Function, 1, &[3.0]).unwrap();
        assert_eq!(t.samples.len(), 1);
        assert!(t.is_strictly_increasing());
    }
}
