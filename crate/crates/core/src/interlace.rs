//! Interlacing of two zero sequences.
//!
//! Two functions interlace when each open interval between consecutive zeros
//! of one contains exactly one zero of the other. Sequences are finite, so an
//! interval is judged only where both sequences are known to be complete.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::special_fn::{CylinderSpec, EvalKind, MixingAngle, Order};
use crate::zeros::{find_zeros, ZeroSequence};

/// Zeros closer than this (relative to `max(1, x)`) are treated as coincident.
pub const COINCIDENCE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

/// An interval between consecutive zeros that does not contain exactly one
/// zero of the other sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    /// Sequence whose consecutive zeros bound the interval.
    pub side: Side,
    /// 1-based index `s` of the interval `(z_s, z_{s+1})`.
    pub index: usize,
    /// Zeros of the other sequence strictly inside.
    pub count: usize,
    /// An endpoint coincides with a zero of the other sequence.
    pub coincident: bool,
    /// Left endpoint, for ordering violations across sides.
    pub at: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterlaceReport {
    pub interlaced: bool,
    pub first_violation: Option<Violation>,
    pub pairs_checked: usize,
}

fn coincide(a: f64, b: f64) -> bool {
    (a - b).abs() <= COINCIDENCE_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Judges interlacing of `a` and `b` on `[lo, hi]`, where both slices are
/// sorted and hold every zero of their function inside that window.
pub fn interlaced_on(a: &[f64], b: &[f64], lo: f64, hi: f64) -> Result<InterlaceReport> {
    let mut violations = Vec::new();
    let mut judged = 0;
    for (side, own, other) in [(Side::A, a, b), (Side::B, b, a)] {
        let inside: Vec<(usize, f64)> = own
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, z)| z >= lo && z <= hi)
            .collect();
        for w in inside.windows(2) {
            let (i, left) = w[0];
            let right = w[1].1;
            judged += 1;
            let start = other.partition_point(|&z| z <= left);
            let end = other.partition_point(|&z| z < right);
            let count = end.saturating_sub(start);
            let coincident = other
                .iter()
                .any(|&z| coincide(z, left) || coincide(z, right));
            if count != 1 || coincident {
                violations.push(Violation {
                    side,
                    index: i + 1,
                    count,
                    coincident,
                    at: left,
                });
            }
        }
    }
    if judged == 0 {
        return Err(Error::EmptyOverlap);
    }
    let first_violation = violations.into_iter().min_by(|x, y| {
        x.at.total_cmp(&y.at)
            .then((x.side as u8).cmp(&(y.side as u8)))
    });
    Ok(InterlaceReport {
        interlaced: first_violation.is_none(),
        first_violation,
        pairs_checked: judged,
    })
}

/// Upper end of the range where both sequences are complete.
pub fn common_upper(a: &ZeroSequence, b: &ZeroSequence) -> Result<f64> {
    match (a.last(), b.last()) {
        (Some(x), Some(y)) => Ok(x.min(y)),
        _ => Err(Error::EmptyOverlap),
    }
}

/// Interlacing verdict for two sequences of first zeros.
///
/// Both sequences start at the origin, so only the upper end is truncated:
/// intervals are judged up to the smaller of the two last zeros.
pub fn check_interlaced(a: &ZeroSequence, b: &ZeroSequence) -> Result<InterlaceReport> {
    let hi = common_upper(a, b)?;
    interlaced_on(&a.zeros, &b.zeros, 0.0, hi)
}

/// Offset `d ≠ 0` for which `B_s` falls in `(A_{s+d}, A_{s+d+1})` over a
/// trailing window, relative to the ordinary alignment of the two sequences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftReport {
    pub shift_d: Option<i32>,
    /// 1-based inclusive range of `B` indices where the shifted pattern holds.
    pub window: Option<(usize, usize)>,
}

/// Longest run of B-indices, ending at the last judgeable one, with
/// `A_{s+d} < B_s < A_{s+d+1}`.
fn shifted_suffix(a: &[f64], b: &[f64], d: i64) -> Option<(usize, usize)> {
    let holds = |s: usize| -> Option<bool> {
        let k = s as i64 + d;
        if k < 1 || (k + 1) as usize > a.len() {
            return None;
        }
        let lo = a[k as usize - 1];
        let hi = a[k as usize];
        let z = b[s - 1];
        Some(z > lo && z < hi && !coincide(z, lo) && !coincide(z, hi))
    };
    let last = (1..=b.len()).rev().find(|&s| holds(s).is_some())?;
    if holds(last) != Some(true) {
        return None;
    }
    let mut first = last;
    while first > 1 && holds(first - 1) == Some(true) {
        first -= 1;
    }
    Some((first, last))
}

/// Searches `|d| ≤ 3` (smallest first, positive before negative) for
/// shifted interlacing on a trailing window. Interlaced inputs report no
/// shift.
pub fn detect_shifted(a: &ZeroSequence, b: &ZeroSequence) -> Result<ShiftReport> {
    detect_shifted_slices(&a.zeros, &b.zeros)
}

pub fn detect_shifted_slices(a: &[f64], b: &[f64]) -> Result<ShiftReport> {
    let (Some(&a_last), Some(&b_last)) = (a.last(), b.last()) else {
        return Err(Error::EmptyOverlap);
    };
    if interlaced_on(a, b, 0.0, a_last.min(b_last))?.interlaced {
        return Ok(ShiftReport {
            shift_d: None,
            window: None,
        });
    }
    // Ordinary alignment: B_s ∈ (A_s, A_{s+1}) when A leads, (A_{s−1}, A_s)
    // when B leads.
    let base: i64 = if a[0] < b[0] { 0 } else { -1 };
    for d in [1i64, -1, 2, -2, 3, -3] {
        if let Some(window) = shifted_suffix(a, b, base + d) {
            return Ok(ShiftReport {
                shift_d: Some(d as i32),
                window: Some(window),
            });
        }
    }
    Ok(ShiftReport {
        shift_d: None,
        window: None,
    })
}

/// One strict inequality `lower < upper` of the zero chain.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainLink {
    pub s: usize,
    pub link: String,
    pub lower: f64,
    pub upper: f64,
}

impl ChainLink {
    pub fn margin(&self) -> f64 {
        self.upper - self.lower
    }

    /// Strict, and resolvable at the zero-refinement precision.
    pub fn holds(&self) -> bool {
        self.upper > self.lower && !coincide(self.upper, self.lower)
    }
}

/// All links of
/// `j′_{ν,s} < y_{ν,s} < y_{ν+c,s} < y′_{ν,s} < j_{ν,s} < j_{ν+c,s} < j′_{ν,s+1}`
/// for `s = 1..=n`, plus `ν ≤ j′_{ν,1}` reported as `s = 0`.
pub fn chain_links(nu: Order, c: f64, n: usize) -> Result<Vec<ChainLink>> {
    if !(c > 0.0 && c <= 2.0) {
        return Err(Error::domain("c", c, "0 < c <= 2"));
    }
    let v = nu.value();
    let shifted = Order::new(v + c)?;
    let j = |o: Order| CylinderSpec::from_parts(o, MixingAngle::J);
    let y = |o: Order| CylinderSpec::from_parts(o, MixingAngle::Y);
    let jp = find_zeros(j(nu), EvalKind::Derivative, n + 1)?;
    let yv = find_zeros(y(nu), EvalKind::Function, n)?;
    let yc = find_zeros(y(shifted), EvalKind::Function, n)?;
    let ypv = find_zeros(y(nu), EvalKind::Derivative, n)?;
    let jv = find_zeros(j(nu), EvalKind::Function, n)?;
    let jc = find_zeros(j(shifted), EvalKind::Function, n)?;

    let mut links = Vec::with_capacity(6 * n + 1);
    links.push(ChainLink {
        s: 0,
        link: "nu <= j'_1".into(),
        lower: v,
        upper: jp.zeros[0],
    });
    for s in 0..n {
        let seq = [
            ("j'_s", jp.zeros[s]),
            ("y_s", yv.zeros[s]),
            ("y_(nu+c),s", yc.zeros[s]),
            ("y'_s", ypv.zeros[s]),
            ("j_s", jv.zeros[s]),
            ("j_(nu+c),s", jc.zeros[s]),
            ("j'_(s+1)", jp.zeros[s + 1]),
        ];
        for w in seq.windows(2) {
            links.push(ChainLink {
                s: s + 1,
                link: format!("{} < {}", w[0].0, w[1].0),
                lower: w[0].1,
                upper: w[1].1,
            });
        }
    }
    Ok(links)
}

/// Checks the zero chain for `s ≤ n` and the bound `ν ≤ j′_{ν,1}`.
///
/// `worst_residual` is the smallest margin `upper − lower` over all links.
/// For `c > 1` the chain is not expected to hold; the report then names the
/// first link that breaks.
pub fn verify_chain(nu: Order, c: f64, n: usize) -> Result<VerificationReport> {
    let links = chain_links(nu, c, n)?;
    let mut worst = f64::INFINITY;
    let mut failure: Option<&ChainLink> = None;
    for l in &links {
        // The first bound is non-strict.
        let ok = if l.s == 0 {
            l.lower <= l.upper
        } else {
            l.holds()
        };
        worst = worst.min(l.margin());
        if !ok && failure.is_none() {
            failure = Some(l);
        }
    }
    let counterexample = failure.map(|l| {
        json!({
            "nu": nu.value(),
            "c": c,
            "s": l.s,
            "link": l.link,
            "lower": l.lower,
            "upper": l.upper,
        })
    });
    Ok(VerificationReport::new(
        format!("chain(nu={}, c={c}, n={n})", nu.value()),
        links.len() as u64,
        worst,
        counterexample,
    ))
}
