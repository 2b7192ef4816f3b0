//! Verification suites for the interlacing results and breakdown atlases.
//!
//! Every suite returns a [`VerificationReport`]; finite scans can only show
//! that no violation occurs among the first `n` zeros, never certify
//! interlacing on the whole half line.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::interlace::{check_interlaced, common_upper, interlaced_on, verify_chain, Violation};
use crate::report::VerificationReport;
use crate::special_fn::{raw_values, CylinderSpec, EvalKind, MixingAngle, Order, MAX_X};
use crate::wronskian::equivalence_from_zeros;
use crate::zeros::{find_zeros, zeros_below, ZeroSequence};

/// Zeros per verdict when the caller does not choose.
pub const DEFAULT_ZEROS: usize = 40;

/// Relative residual accepted for the recurrence identities.
pub const RECURRENCE_TOL: f64 = 1e-9;

/// Which pair of functions a breakdown cell compares at orders `(ν, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `C_ν(·; δ)` against `C_μ(·; δ)`.
    Cylinder(MixingAngle),
    /// `J′_ν` against `J′_μ`.
    Jprime,
    /// `Y′_ν` against `Y′_μ`.
    Yprime,
    /// `J_ν` against `Y_μ`.
    JvsY,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cylinder(_) => "cylinder",
            Family::Jprime => "jprime",
            Family::Yprime => "yprime",
            Family::JvsY => "jvsy",
        }
    }

    /// `(δ, δ̄)` of the two functions.
    pub fn angles(&self) -> (MixingAngle, MixingAngle) {
        match *self {
            Family::Cylinder(d) => (d, d),
            Family::Jprime => (MixingAngle::J, MixingAngle::J),
            Family::Yprime => (MixingAngle::Y, MixingAngle::Y),
            Family::JvsY => (MixingAngle::J, MixingAngle::Y),
        }
    }

    pub fn kind(&self) -> EvalKind {
        match self {
            Family::Jprime | Family::Yprime => EvalKind::Derivative,
            _ => EvalKind::Function,
        }
    }

    pub fn specs(&self, nu: Order, mu: Order) -> (CylinderSpec, CylinderSpec) {
        let (d, db) = self.angles();
        (
            CylinderSpec::from_parts(nu, d),
            CylinderSpec::from_parts(mu, db),
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cylinder(d) => write!(f, "cylinder({d})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Relative residual of a relation: `|Σ terms| / max |term|`.
fn relative(terms: &[f64]) -> f64 {
    let sum: f64 = terms.iter().sum();
    let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    if scale == 0.0 {
        sum.abs()
    } else {
        sum.abs() / scale
    }
}

/// Names of the identities checked by [`verify_recurrences`], in order.
pub const RECURRENCE_NAMES: [&str; 6] = [
    "C_nu - 2(nu+1)/x C_(nu+1) + C_(nu+2) = 0",
    "2 C'_(nu+1) = C_nu - C_(nu+2)",
    "C'_(nu+1) = C_nu - (nu+1)/x C_(nu+1)",
    "C'_(nu+2) = C_(nu+1) - (nu+2)/x C_(nu+2)",
    "[x^2-(nu+1)(nu+2)] C'_nu + [x^2-nu(nu+1)] C'_(nu+2) = 2(nu+1)/x [x^2-nu(nu+2)] C'_(nu+1)",
    "x^2 C''_(nu+1) + x C'_(nu+1) + (x^2-(nu+1)^2) C_(nu+1) = 0",
];

/// Relative residuals of the six identities at one point.
///
/// `C_ν`, `C_{ν+1}` and `C_{ν+2}` and their derivatives come from three
/// independent engine calls, so every identity compares separately computed
/// quantities. The second derivative in the last identity is obtained by
/// differentiating the third one, not from Bessel's equation.
pub fn recurrence_residuals(nu: Order, delta: MixingAngle, x: f64) -> Result<[f64; 6]> {
    let v = nu.value();
    let p0 = raw_values(v, delta, x)?;
    let p1 = raw_values(v + 1.0, delta, x)?;
    let p2 = raw_values(v + 2.0, delta, x)?;
    let (c0, c1, c2) = (p0.value, p1.value, p2.value);
    let (d0, d1, d2) = (p0.derivative, p1.derivative, p2.derivative);
    let x2 = x * x;
    let n1 = v + 1.0;
    let second = d0 + n1 / x2 * c1 - n1 / x * d1;
    Ok([
        relative(&[c0, -2.0 * n1 / x * c1, c2]),
        relative(&[2.0 * d1, -c0, c2]),
        relative(&[d1, -c0, n1 / x * c1]),
        relative(&[d2, -c1, (v + 2.0) / x * c2]),
        relative(&[
            (x2 - n1 * (v + 2.0)) * d0,
            (x2 - v * n1) * d2,
            -2.0 * n1 / x * (x2 - v * (v + 2.0)) * d1,
        ]),
        relative(&[x2 * second, x * d1, (x2 - n1 * n1) * c1]),
    ])
}

/// Checks the six recurrence identities for `C_ν(·; δ)` on `x_grid`.
pub fn verify_recurrences(
    nu: Order,
    delta: MixingAngle,
    x_grid: &[f64],
) -> Result<VerificationReport> {
    let mut worst = 0.0f64;
    let mut counterexample = None;
    for &x in x_grid {
        let res = recurrence_residuals(nu, delta, x)?;
        for (i, &r) in res.iter().enumerate() {
            worst = worst.max(r);
            if (r.is_nan() || r > RECURRENCE_TOL) && counterexample.is_none() {
                counterexample = Some(json!({
                    "identity": RECURRENCE_NAMES[i],
                    "nu": nu.value(),
                    "delta": delta.effective_radians(),
                    "x": x,
                    "residual": r,
                }));
            }
        }
    }
    Ok(VerificationReport::new(
        format!("recurrences(nu={nu}, delta={delta})"),
        6 * x_grid.len() as u64,
        worst,
        counterexample,
    ))
}

/// Smallest gap between consecutive merged zeros up to `hi`.
fn min_separation(a: &[f64], b: &[f64], lo: f64, hi: f64) -> f64 {
    let mut merged: Vec<f64> = a
        .iter()
        .chain(b)
        .copied()
        .filter(|&z| z >= lo && z <= hi)
        .collect();
    merged.sort_by(f64::total_cmp);
    merged
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min)
}

fn violation_json(v: &Option<Violation>) -> serde_json::Value {
    serde_json::to_value(v).unwrap_or(serde_json::Value::Null)
}

/// Interlacing of the first `n` zeros of two specs as a report whose
/// residual is the smallest separation between merged zeros.
fn interlace_part(
    a: CylinderSpec,
    b: CylinderSpec,
    kind: EvalKind,
    n: usize,
) -> Result<VerificationReport> {
    let za = find_zeros(a, kind, n)?;
    let zb = find_zeros(b, kind, n)?;
    let rep = check_interlaced(&za, &zb)?;
    let hi = common_upper(&za, &zb)?;
    let counterexample = (!rep.interlaced).then(|| {
        json!({
            "nu": a.nu(),
            "mu": b.nu(),
            "delta": a.angle.effective_radians(),
            "kind": kind,
            "violation": violation_json(&rep.first_violation),
        })
    });
    Ok(VerificationReport::new(
        format!(
            "interlace(nu={}, mu={}, delta={}, {kind})",
            a.nu(),
            b.nu(),
            a.angle
        ),
        rep.pairs_checked as u64,
        min_separation(&za.zeros, &zb.zeros, 0.0, hi),
        counterexample,
    ))
}

/// Part (a): `C_ν`/`C_{ν+a}` for δ ∈ {0, π/4, π/2}, `J′_ν`/`J′_{ν+b}` and
/// `Y′_ν`/`Y′_{ν+b}`; part (b): the zero chain with shift `c`.
///
/// `worst_residual` is the smallest margin found anywhere.
pub fn verify_theorem1(nu: Order, a: f64, b: f64, c: f64, n: usize) -> Result<VerificationReport> {
    if !(a > 0.0 && a <= 2.0) {
        return Err(Error::domain("a", a, "0 < a <= 2"));
    }
    if !(b > 0.0 && b <= 1.0) {
        return Err(Error::domain("b", b, "0 < b <= 1"));
    }
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::domain("c", c, "0 < c <= 1"));
    }
    let v = nu.value();
    let na = Order::new(v + a)?;
    let nb = Order::new(v + b)?;
    let mut parts = Vec::with_capacity(6);
    for d in [0.0, FRAC_PI_4, FRAC_PI_2] {
        let angle = MixingAngle::new(d)?;
        parts.push(interlace_part(
            CylinderSpec::from_parts(nu, angle),
            CylinderSpec::from_parts(na, angle),
            EvalKind::Function,
            n,
        )?);
    }
    for angle in [MixingAngle::J, MixingAngle::Y] {
        parts.push(interlace_part(
            CylinderSpec::from_parts(nu, angle),
            CylinderSpec::from_parts(nb, angle),
            EvalKind::Derivative,
            n,
        )?);
    }
    parts.push(verify_chain(nu, c, n)?);
    Ok(VerificationReport::combine_with(
        format!("theorem1(nu={nu}, a={a}, b={b}, c={c}, n={n})"),
        &parts,
        f64::min,
    ))
}

/// Verdict for one `(ν, μ, family)` cell of the order-gap criterion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Theorem3Cell {
    pub nu: f64,
    pub mu: f64,
    pub family: Family,
    pub n: usize,
    /// `None` for an excluded cell (both specs name the same function).
    pub interlaced: Option<bool>,
    pub predicate: bool,
    pub first_violation: Option<Violation>,
    pub min_separation: f64,
}

impl Theorem3Cell {
    pub fn excluded(&self) -> bool {
        self.interlaced.is_none()
    }

    pub fn agree(&self) -> bool {
        !matches!(self.interlaced, Some(i) if i != self.predicate)
    }

    pub fn summary(&self) -> String {
        match self.interlaced {
            None => "excluded: identical functions".into(),
            Some(i) => format!(
                "{}; predicate {}; {}",
                if i { "interlaced" } else { "not interlaced" },
                self.predicate,
                if self.agree() { "agree" } else { "disagree" }
            ),
        }
    }
}

fn gap_predicate(nu: f64, mu: f64) -> bool {
    (nu - mu).abs() <= 2.0 + 1e-12
}

pub fn theorem3_cell(nu: Order, mu: Order, family: Family, n: usize) -> Result<Theorem3Cell> {
    if !nu.is_positive() {
        return Err(Error::domain("nu", nu.value(), "nu > 0"));
    }
    if !mu.is_positive() {
        return Err(Error::domain("mu", mu.value(), "mu > 0"));
    }
    if family == Family::JvsY {
        return Err(Error::InvalidArgument(
            "the order-gap criterion compares functions of one family; jvsy has none".into(),
        ));
    }
    let (a, b) = family.specs(nu, mu);
    let predicate = gap_predicate(nu.value(), mu.value());
    let mut cell = Theorem3Cell {
        nu: nu.value(),
        mu: mu.value(),
        family,
        n,
        interlaced: None,
        predicate,
        first_violation: None,
        min_separation: 0.0,
    };
    if a.same_function(&b) {
        return Ok(cell);
    }
    let kind = family.kind();
    let za = find_zeros(a, kind, n)?;
    let zb = find_zeros(b, kind, n)?;
    let rep = check_interlaced(&za, &zb)?;
    cell.interlaced = Some(rep.interlaced);
    cell.first_violation = rep.first_violation;
    cell.min_separation = min_separation(&za.zeros, &zb.zeros, 0.0, common_upper(&za, &zb)?);
    Ok(cell)
}

fn theorem3_report(cell: &Theorem3Cell) -> VerificationReport {
    let counterexample = (!cell.agree()).then(|| {
        json!({
            "nu": cell.nu,
            "mu": cell.mu,
            "family": cell.family.to_string(),
            "interlaced": cell.interlaced,
            "predicate": cell.predicate,
            "first_violation": violation_json(&cell.first_violation),
        })
    });
    let name = format!(
        "theorem3(nu={}, mu={}, {}, n={}): {}",
        cell.nu,
        cell.mu,
        cell.family,
        cell.n,
        cell.summary()
    );
    let checks = if cell.excluded() { 0 } else { 1 };
    VerificationReport::new(name, checks, cell.min_separation, counterexample)
}

/// Compares the interlacing verdict over the first `n` zeros with the
/// predicate `|ν − μ| ≤ 2`. Identical specs give an excluded cell with no
/// checks rather than a verdict.
pub fn verify_theorem3(
    nu: Order,
    mu: Order,
    family: Family,
    n: usize,
) -> Result<VerificationReport> {
    Ok(theorem3_report(&theorem3_cell(nu, mu, family, n)?))
}

/// Coefficients `(a, b, c)` with `a f + b g + c h = 0` for the consecutive
/// triple starting at order `ν`.
fn triple_coefficients(nu: f64, kind: EvalKind, x: f64) -> [f64; 3] {
    let n1 = nu + 1.0;
    match kind {
        EvalKind::Function => [1.0, -2.0 * n1 / x, 1.0],
        EvalKind::Derivative => {
            let x2 = x * x;
            [
                x2 - n1 * (nu + 2.0),
                -2.0 * n1 / x * (x2 - nu * (nu + 2.0)),
                x2 - nu * n1,
            ]
        }
    }
}

/// Positive roots of the coefficients, where sign constancy can fail.
fn coefficient_roots(nu: f64, kind: EvalKind) -> Vec<(&'static str, f64)> {
    match kind {
        EvalKind::Function => Vec::new(),
        EvalKind::Derivative => vec![
            ("a", ((nu + 1.0) * (nu + 2.0)).sqrt()),
            ("b", (nu * (nu + 2.0)).sqrt()),
            ("c", (nu * (nu + 1.0)).sqrt()),
        ],
    }
}

/// Samples per probe interval for the relation and sign checks.
const PROBE_SAMPLES: usize = 512;

/// Checks the transitivity argument on `(lo, hi)` for a consecutive-order
/// triple `f = C_ν`, `g = C_{ν+1}`, `h = C_{ν+2}` (or their derivatives).
///
/// Premises (the three-term relation, sign-constant coefficients, f–g and
/// g–h interlaced) are confirmed first; if one fails the result is
/// `Err(PremiseFailed)` and no conclusion is asserted. A failed conclusion is
/// a failed report. `worst_residual` is the largest relative residual of the
/// relation over the probe samples.
pub fn verify_transitivity(
    triple: [CylinderSpec; 3],
    kind: EvalKind,
    probe: (f64, f64),
) -> Result<VerificationReport> {
    let [f, g, h] = triple;
    let nu = f.nu();
    if (g.nu() - nu - 1.0).abs() > 1e-12
        || (h.nu() - nu - 2.0).abs() > 1e-12
        || !f.angle.same_function(g.angle)
        || !f.angle.same_function(h.angle)
    {
        return Err(Error::InvalidArgument(
            "triple must be C_nu, C_(nu+1), C_(nu+2) with one mixing angle".into(),
        ));
    }
    let (lo, hi) = probe;
    if !(lo > 0.0 && lo < hi && hi <= MAX_X) {
        return Err(Error::InvalidArgument(format!(
            "probe interval ({lo}, {hi}) must satisfy 0 < lo < hi <= 400"
        )));
    }

    for (coef, r) in coefficient_roots(nu, kind) {
        if r > lo && r < hi {
            return Err(Error::PremiseFailed(format!(
                "coefficient {coef} vanishes at x = {r} inside ({lo}, {hi})"
            )));
        }
    }
    let mut worst = 0.0f64;
    let signs0 = triple_coefficients(nu, kind, lo).map(f64::signum);
    for k in 0..=PROBE_SAMPLES {
        let x = lo + (hi - lo) * k as f64 / PROBE_SAMPLES as f64;
        let coef = triple_coefficients(nu, kind, x);
        if coef
            .iter()
            .zip(&signs0)
            .any(|(c, s)| c.signum() != *s || *c == 0.0)
        {
            return Err(Error::PremiseFailed(format!(
                "coefficient signs change near x = {x}"
            )));
        }
        let vals = [f, g, h].map(|s| raw_values(s.nu(), f.angle, x));
        let mut fx = [0.0; 3];
        for (slot, v) in fx.iter_mut().zip(vals) {
            let v = v?;
            *slot = match kind {
                EvalKind::Function => v.value,
                EvalKind::Derivative => v.derivative,
            };
        }
        worst = worst.max(relative(&[
            coef[0] * fx[0],
            coef[1] * fx[1],
            coef[2] * fx[2],
        ]));
    }
    if worst > RECURRENCE_TOL {
        return Err(Error::PremiseFailed(format!(
            "three-term relation residual {worst:e} exceeds {RECURRENCE_TOL:e}"
        )));
    }

    let zf = zeros_below(f, kind, hi)?;
    let zg = zeros_below(g, kind, hi)?;
    let zh = zeros_below(h, kind, hi)?;
    for (name, x, y) in [("f-g", &zf, &zg), ("g-h", &zg, &zh)] {
        match interlaced_on(&x.zeros, &y.zeros, lo, hi) {
            Ok(r) if r.interlaced => {}
            Ok(r) => {
                return Err(Error::PremiseFailed(format!(
                    "{name} not interlaced on ({lo}, {hi}): {:?}",
                    r.first_violation
                )))
            }
            Err(e) => return Err(Error::PremiseFailed(format!("{name}: {e}"))),
        }
    }
    let concl = interlaced_on(&zf.zeros, &zh.zeros, lo, hi)?;
    let counterexample = (!concl.interlaced).then(|| {
        json!({
            "nu": nu,
            "delta": f.angle.effective_radians(),
            "kind": kind,
            "lo": lo,
            "hi": hi,
            "violation": violation_json(&concl.first_violation),
        })
    });
    Ok(VerificationReport::new(
        format!(
            "transitivity(nu={nu}, delta={}, {kind}, probe=({lo}, {hi}))",
            f.angle
        ),
        concl.pairs_checked as u64,
        worst,
        counterexample,
    ))
}

/// One `(ν, μ)` cell of a breakdown atlas.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BreakdownCell {
    pub nu: f64,
    pub mu: f64,
    pub interlaced: bool,
    pub first_violation: Option<Violation>,
    pub sign_changes: usize,
    pub degenerate: usize,
    /// `y_{μ,1} < j_{ν,1}`, recorded for the J-versus-Y family only.
    pub proviso: Option<bool>,
    /// The Wronskian is root-free exactly when the zeros interlace.
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BreakdownMap {
    pub family: Family,
    pub n: usize,
    pub cells: Vec<BreakdownCell>,
}

impl BreakdownMap {
    pub fn disagreements(&self) -> usize {
        self.cells.iter().filter(|c| !c.consistent).count()
    }
}

fn breakdown_cell(family: Family, nu: Order, mu: Order, n: usize) -> Result<BreakdownCell> {
    let (a, b) = family.specs(nu, mu);
    if a.same_function(&b) {
        return Err(Error::IdenticalSpecs);
    }
    let kind = family.kind();
    let za = find_zeros(a, kind, n)?;
    let zb = find_zeros(b, kind, n)?;
    cell_from_zeros(family, &za, &zb)
}

fn cell_from_zeros(family: Family, za: &ZeroSequence, zb: &ZeroSequence) -> Result<BreakdownCell> {
    let eq = equivalence_from_zeros(za, zb)?;
    let proviso = (family == Family::JvsY).then(|| zb.zeros[0] < za.zeros[0]);
    Ok(BreakdownCell {
        nu: za.spec.nu(),
        mu: zb.spec.nu(),
        interlaced: eq.interlace.interlaced,
        first_violation: eq.interlace.first_violation,
        sign_changes: eq.profile.sign_changes,
        degenerate: eq.profile.degenerate,
        proviso,
        consistent: eq.profile.root_free() == eq.interlace.interlaced,
    })
}

/// Interlacing verdicts and Wronskian sign structure for `μ = ν + Δ` over
/// `gap_grid`. Cells run in parallel; the map keeps grid order.
pub fn breakdown_scan(
    family: Family,
    nu: Order,
    gap_grid: &[f64],
    n: usize,
) -> Result<BreakdownMap> {
    let mus = gap_grid
        .iter()
        .map(|&d| Order::new(nu.value() + d))
        .collect::<Result<Vec<_>>>()?;
    let cells = mus
        .par_iter()
        .map(|&mu| breakdown_cell(family, nu, mu, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(BreakdownMap { family, n, cells })
}

/// Orders, gaps and families of the order-gap grid.
pub const GRID_ORDERS: [f64; 4] = [0.3, 1.0, 2.5, 7.1];
pub const GRID_GAPS: [f64; 6] = [0.5, 1.0, 2.0, 2.1, 3.0, 5.0];

pub fn grid_families() -> [Family; 5] {
    [
        Family::Cylinder(MixingAngle::J),
        Family::Cylinder(MixingAngle::new(FRAC_PI_4).expect("finite")),
        Family::Cylinder(MixingAngle::Y),
        Family::Jprime,
        Family::Yprime,
    ]
}

/// Order-gap verdicts over the full grid, in (family, ν, Δ) order.
pub fn theorem3_grid(n: usize) -> Result<Vec<Theorem3Cell>> {
    let mut jobs = Vec::new();
    for family in grid_families() {
        for nu in GRID_ORDERS {
            for gap in GRID_GAPS {
                jobs.push((family, nu, nu + gap));
            }
        }
    }
    jobs.par_iter()
        .map(|&(family, nu, mu)| theorem3_cell(Order::new(nu)?, Order::new(mu)?, family, n))
        .collect()
}

/// Orders and gaps of the J-versus-Y cells.
pub const JVSY_ORDERS: [f64; 6] = [1.0, 2.0, 2.5, 3.7, 5.0, 7.1];
pub const JVSY_GAPS: [f64; 2] = [0.8, 1.5];

/// J-versus-Y cells with gap 1.5 whose proviso holds must be broken; gap 0.8
/// cells must be interlaced.
pub fn jvsy_report(maps: &[BreakdownMap]) -> VerificationReport {
    let mut checks = 0;
    let mut counterexample = None;
    for cell in maps.iter().flat_map(|m| &m.cells) {
        let gap = cell.mu - cell.nu;
        let expect = if (gap - 0.8).abs() < 1e-12 {
            Some(true)
        } else if (gap - 1.5).abs() < 1e-12 && cell.proviso == Some(true) {
            Some(false)
        } else {
            None
        };
        if let Some(expect) = expect {
            checks += 1;
            if cell.interlaced != expect && counterexample.is_none() {
                counterexample = serde_json::to_value(cell).ok();
            }
        }
    }
    VerificationReport::new("lemma_bd_b(jvsy)", checks, 0.0, counterexample)
}

/// Wronskian/interlacing agreement over every cell of the given maps.
pub fn lemma5_report(name: &str, maps: &[BreakdownMap]) -> VerificationReport {
    let cells: Vec<(&BreakdownMap, &BreakdownCell)> = maps
        .iter()
        .flat_map(|m| m.cells.iter().map(move |c| (m, c)))
        .collect();
    let counterexample = cells.iter().find(|(_, c)| !c.consistent).map(|(m, c)| {
        json!({
            "family": m.family.to_string(),
            "cell": serde_json::to_value(c).unwrap_or(serde_json::Value::Null),
        })
    });
    VerificationReport::new(name, cells.len() as u64, 0.0, counterexample)
}

/// Everything the `verify all` suite runs, in a fixed order.
///
/// The zero chain at `ν = 0, c = 1` is left out: there `J′_0 = −J_1` and
/// `Y′_0 = −Y_1`, so two links are equalities and strict inequality cannot
/// hold.
pub fn verify_all(n: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();

    let xs = [0.5, 1.0, 5.0, 20.0, 100.0];
    let mut rec = Vec::new();
    for nu in [0.5, 1.0, 2.5, 7.0] {
        for d in [0.0, FRAC_PI_3, FRAC_PI_2] {
            rec.push(verify_recurrences(
                Order::new(nu)?,
                MixingAngle::new(d)?,
                &xs,
            )?);
        }
    }
    out.push(VerificationReport::combine("recurrences", &rec));

    let t1 = [
        (0.0, 0.5, 0.5, 0.5),
        (0.3, 0.5, 0.5, 0.5),
        (0.3, 2.0, 1.0, 1.0),
        (1.0, 2.0, 1.0, 1.0),
        (1.0, 0.5, 0.5, 0.5),
        (3.7, 2.0, 1.0, 1.0),
        (3.7, 0.5, 0.5, 0.5),
    ];
    let t1 = t1
        .par_iter()
        .map(|&(nu, a, b, c)| verify_theorem1(Order::new(nu)?, a, b, c, 15))
        .collect::<Result<Vec<_>>>()?;
    out.push(VerificationReport::combine_with("theorem1", &t1, f64::min));

    let cells = theorem3_grid(n)?;
    let t3: Vec<_> = cells.iter().map(theorem3_report).collect();
    out.push(VerificationReport::combine_with("theorem3", &t3, f64::min));

    let mut tr = Vec::new();
    for (nu, d) in [(1.0, 0.0), (2.5, FRAC_PI_2)] {
        let f = CylinderSpec::new(nu, d)?;
        let triple = [f, f.with_order(nu + 1.0)?, f.with_order(nu + 2.0)?];
        tr.push(verify_transitivity(
            triple,
            EvalKind::Function,
            (0.1, 60.0),
        )?);
        if d == 0.0 {
            let lo = ((nu + 1.0) * (nu + 2.0)).sqrt() + 0.1;
            tr.push(verify_transitivity(
                triple,
                EvalKind::Derivative,
                (lo, 60.0),
            )?);
        }
    }
    out.push(VerificationReport::combine("transitivity", &tr));

    let mut jobs = Vec::new();
    for family in grid_families() {
        for nu in GRID_ORDERS {
            jobs.push((family, nu, &GRID_GAPS[..]));
        }
    }
    for nu in JVSY_ORDERS {
        jobs.push((Family::JvsY, nu, &JVSY_GAPS[..]));
    }
    let maps = jobs
        .iter()
        .map(|&(family, nu, gaps)| breakdown_scan(family, Order::new(nu)?, gaps, n))
        .collect::<Result<Vec<_>>>()?;
    out.push(lemma5_report("lemma5", &maps));
    let jvsy: Vec<BreakdownMap> = maps
        .into_iter()
        .filter(|m| m.family == Family::JvsY)
        .collect();
    out.push(jvsy_report(&jvsy));

    Ok(out)
}
