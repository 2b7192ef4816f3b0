//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};
use std::panic;
use std::time::{Duration, Instant};

use cylinder_core::interlace::Side;
use cylinder_core::theorems::{
    breakdown_scan, grid_families, theorem3_grid, verify_recurrences, GRID_GAPS, GRID_ORDERS,
    JVSY_GAPS, JVSY_ORDERS,
};
use cylinder_core::wronskian::{check_derivative_identity, wronskian_asymptote};
use cylinder_core::{
    cylinder, cylinder_prime, find_zeros, verify_chain, wronskian_profile, wronskian_value,
    zero_trajectory, BreakdownMap, CylinderSpec, EvalKind, Family, MixingAngle, Order,
};
use cylinder_oracle::{self as oracle, Angle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Zeros per verdict in the order-gap and breakdown criteria.
const N: usize = 30;

type Outcome = Result<String, String>;

fn spec(nu: f64, delta: f64) -> CylinderSpec {
    CylinderSpec::new(nu, delta).unwrap()
}

fn order(v: f64) -> Order {
    Order::new(v).unwrap()
}

fn fail_if(problems: Vec<String>, ok: String) -> Outcome {
    if problems.is_empty() {
        Ok(ok)
    } else {
        let more = problems.len().saturating_sub(3);
        let mut msg = problems.into_iter().take(3).collect::<Vec<_>>().join("; ");
        if more > 0 {
            msg.push_str(&format!("; and {more} more"));
        }
        Err(msg)
    }
}

fn c1_zero_anchors() -> Outcome {
    let frozen: [f64; 3] = [2.404825557695773, 5.5200781102863115, 8.653727912911013];
    let mut bad = Vec::new();
    let reference = oracle::zeros(0.0, Angle::J, false, 0.1, 3);
    for (r, f) in reference.iter().zip(frozen) {
        if r.to_bits() != f.to_bits() {
            bad.push(format!("oracle gives {r}, frozen {f}"));
        }
    }
    let z = find_zeros(spec(0.0, 0.0), EvalKind::Function, 3).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for (a, b) in z.zeros.iter().zip(frozen) {
        worst = worst.max((a - b).abs());
        if (a - b).abs() > 1e-9 {
            bad.push(format!("j_0 zero {a} vs {b}"));
        }
    }
    let h = find_zeros(spec(0.5, 0.0), EvalKind::Function, 20).map_err(|e| e.to_string())?;
    let mut worst_half = 0.0f64;
    for (s, x) in h.zeros.iter().enumerate() {
        let e = (x - (s + 1) as f64 * PI).abs();
        worst_half = worst_half.max(e);
        if e > 1e-10 {
            bad.push(format!("j_(1/2),{} = {x}", s + 1));
        }
    }
    fail_if(
        bad,
        format!("max |err| J_0 {worst:.1e}, J_1/2 {worst_half:.1e}"),
    )
}

fn c2_theorem1_chain() -> Outcome {
    let mut bad = Vec::new();
    let mut cells = 0;
    for nu in [0.0, 0.3, 1.0, 3.7] {
        for c in [0.5, 1.0] {
            cells += 1;
            let r = verify_chain(order(nu), c, 15).map_err(|e| e.to_string())?;
            if !r.passed {
                let ce = r.counterexample.unwrap_or_default();
                bad.push(format!(
                    "nu={nu} c={c}: {} fails at s={}",
                    ce["link"], ce["s"]
                ));
            }
        }
    }
    fail_if(bad, format!("{cells} chains strict for s <= 15"))
}

fn c3_theorem3_grid() -> Outcome {
    let cells = theorem3_grid(N).map_err(|e| e.to_string())?;
    let mut bad = Vec::new();
    for c in &cells {
        if !c.agree() {
            bad.push(format!(
                "nu={} mu={} {}: {}",
                c.nu,
                c.mu,
                c.family,
                c.summary()
            ));
        }
        let gap = c.mu - c.nu;
        if (gap - 2.0).abs() < 1e-12 && c.interlaced != Some(true) {
            bad.push(format!(
                "boundary nu={} {}: gap 2 not interlaced",
                c.nu, c.family
            ));
        }
        if (gap - 2.1).abs() < 1e-12 && c.interlaced != Some(false) {
            bad.push(format!(
                "boundary nu={} {}: gap 2.1 not broken within n={N}",
                c.nu, c.family
            ));
        }
    }
    fail_if(
        bad,
        format!("{} cells agree with |nu - mu| <= 2", cells.len()),
    )
}

fn c4_wronskian_identity() -> Outcome {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let a = spec(rng.random_range(0.0..8.0), rng.random_range(0.0..PI));
        let b = spec(rng.random_range(0.0..8.0), rng.random_range(0.0..PI));
        let x = rng.random_range(0.5..60.0);
        let r = check_derivative_identity(a, b, x, 1e-3).map_err(|e| e.to_string())?;
        worst = worst.max(r.residual);
        if r.residual > 1e-6 {
            bad.push(format!(
                "derW at nu={} mu={} x={x}: {:.2e}",
                a.nu(),
                b.nu(),
                r.residual
            ));
        }
    }
    let pairs = [
        (spec(1.0, 0.0), spec(2.0, 0.0)),
        (spec(1.0, 0.0), spec(4.5, 0.0)),
        (spec(0.5, FRAC_PI_4), spec(2.0, FRAC_PI_4)),
        (spec(2.0, 0.0), spec(3.5, FRAC_PI_2)),
        (spec(3.3, 1.0), spec(7.0, 2.0)),
    ];
    let mut worst_ext = 0.0f64;
    let mut points = 0;
    for (a, b) in pairs {
        let p = wronskian_profile(a, b, 20).map_err(|e| e.to_string())?;
        for e in &p.extrema {
            let x = e.position;
            let direct = wronskian_value(a, b, x).map_err(|e| e.to_string())?;
            let closed = match e.source {
                Side::A => -x * cylinder_prime(a, x).unwrap() * cylinder(b, x).unwrap(),
                Side::B => x * cylinder(a, x).unwrap() * cylinder_prime(b, x).unwrap(),
            };
            let d = (direct - closed).abs();
            worst_ext = worst_ext.max(d);
            points += 1;
            if d > 1e-8 {
                bad.push(format!("extrW at x={x}: {d:.2e}"));
            }
        }
    }
    fail_if(
        bad,
        format!(
            "derW worst {worst:.1e} on 50 samples; extrW worst {worst_ext:.1e} at {points} zeros"
        ),
    )
}

fn lemma5_maps() -> Result<Vec<BreakdownMap>, String> {
    let mut maps = Vec::new();
    for family in grid_families() {
        for nu in GRID_ORDERS {
            maps.push(breakdown_scan(family, order(nu), &GRID_GAPS, N).map_err(|e| e.to_string())?);
        }
    }
    for nu in JVSY_ORDERS {
        maps.push(
            breakdown_scan(Family::JvsY, order(nu), &JVSY_GAPS, N).map_err(|e| e.to_string())?,
        );
    }
    Ok(maps)
}

fn c5_lemma5() -> Outcome {
    let maps = lemma5_maps()?;
    let mut bad = Vec::new();
    let mut cells = 0;
    for m in &maps {
        for c in &m.cells {
            cells += 1;
            let root_free = c.sign_changes == 0 && c.degenerate == 0;
            if root_free != c.interlaced || !c.consistent {
                bad.push(format!("{} nu={} mu={}", m.family, c.nu, c.mu));
            }
        }
    }
    fail_if(
        bad,
        format!("{cells} cells in {} scans, zero disagreements", maps.len()),
    )
}

fn c6_asymptote() -> Outcome {
    // The O(1/x) correction has amplitude about |μ² − ν²|/(πx), so 1e-2 at
    // x = 300 is guaranteed only for |μ² − ν²| <= 3π; (1, 4) is the one
    // documented pair beyond that.
    let pairs = [
        (spec(1.0, 0.0), spec(4.0, 0.0)),
        (spec(0.0, 0.0), spec(1.0, 0.0)),
        (spec(2.0, FRAC_PI_4), spec(3.0, FRAC_PI_4)),
        (spec(0.5, 0.0), spec(2.5, FRAC_PI_2)),
        (spec(1.5, 1.0), spec(1.5, 2.5)),
        (spec(3.0, 0.3), spec(3.5, 1.2)),
        (spec(0.0, FRAC_PI_2), spec(2.0, 0.0)),
        (spec(2.2, 2.0), spec(0.7, 0.5)),
        (spec(4.0, FRAC_PI_3), spec(4.5, FRAC_PI_6)),
        (spec(1.0, 0.0), spec(2.5, FRAC_PI_2)),
    ];
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for (a, b) in pairs {
        let w = wronskian_value(a, b, 300.0).map_err(|e| e.to_string())?;
        let (nu, mu) = (a.nu(), b.nu());
        let (d, db) = (a.angle.effective_radians(), b.angle.effective_radians());
        let formula = FRAC_2_PI * ((mu - nu) * FRAC_PI_2 + d - db).sin();
        if (formula - wronskian_asymptote(a, b)).abs() > 1e-14 {
            bad.push(format!("asymptote helper disagrees at nu={nu} mu={mu}"));
        }
        let e = (w - formula).abs();
        worst = worst.max(e);
        if e > 1e-2 {
            bad.push(format!("nu={nu} mu={mu}: |W(300) - limit| = {e:.2e}"));
        }
    }
    let mut worst_const = 0.0f64;
    for nu in [0.0, 2.5, 7.0] {
        for x in [1.0, 10.0, 100.0] {
            let w = wronskian_value(spec(nu, 0.0), spec(nu, FRAC_PI_2), x)
                .map_err(|e| e.to_string())?;
            let e = (w + FRAC_2_PI).abs();
            worst_const = worst_const.max(e);
            if e > 1e-10 {
                bad.push(format!("J vs -Y at nu={nu} x={x}: {w}"));
            }
        }
    }
    fail_if(
        bad,
        format!("worst at x=300 {worst:.1e}; J vs -Y constant to {worst_const:.1e}"),
    )
}

fn c7_recurrences() -> Outcome {
    let xs = [0.5, 1.0, 5.0, 20.0, 100.0];
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    let mut checks = 0;
    for nu in [0.5, 1.0, 2.5, 7.0] {
        for d in [0.0, FRAC_PI_3, FRAC_PI_2] {
            let r = verify_recurrences(order(nu), MixingAngle::new(d).unwrap(), &xs)
                .map_err(|e| e.to_string())?;
            worst = worst.max(r.worst_residual);
            checks += r.checks;
            if !r.passed {
                bad.push(format!(
                    "nu={nu} delta={d}: {}",
                    r.counterexample.unwrap_or_default()
                ));
            }
        }
    }
    fail_if(
        bad,
        format!("{checks} identity checks, worst relative residual {worst:.1e}"),
    )
}

fn c8_monotonicity() -> Outcome {
    let grid: Vec<f64> = (1..=100).map(|k| k as f64 / 10.0).collect();
    let mut bad = Vec::new();
    for angle in [MixingAngle::J, MixingAngle::Y] {
        for s in [1, 5] {
            let t =
                zero_trajectory(angle, EvalKind::Function, s, &grid).map_err(|e| e.to_string())?;
            if let Some(i) = t.first_non_increase() {
                bad.push(format!(
                    "delta={} s={s}: not increasing at nu={}",
                    angle.radians(),
                    t.samples[i].0
                ));
            }
        }
    }
    fail_if(
        bad,
        format!(
            "4 trajectories strictly increasing over {} orders",
            grid.len()
        ),
    )
}

fn c9_jvsy() -> Outcome {
    let mut bad = Vec::new();
    let (mut broken, mut interlaced) = (0, 0);
    for nu in JVSY_ORDERS {
        let m =
            breakdown_scan(Family::JvsY, order(nu), &JVSY_GAPS, N).map_err(|e| e.to_string())?;
        for c in &m.cells {
            let gap = c.mu - c.nu;
            if (gap - 1.5).abs() < 1e-12 && c.proviso == Some(true) {
                broken += 1;
                if c.interlaced {
                    bad.push(format!("nu={nu} gap 1.5 with proviso still interlaced"));
                }
            }
            if (gap - 0.8).abs() < 1e-12 {
                interlaced += 1;
                if !c.interlaced {
                    bad.push(format!("nu={nu} gap 0.8 broken"));
                }
            }
        }
    }
    if broken == 0 {
        bad.push("no gap-1.5 cell satisfies the proviso".into());
    }
    fail_if(
        bad,
        format!("{broken} proviso cells broken at gap 1.5, {interlaced} interlaced at gap 0.8"),
    )
}

fn c10_determinism() -> Outcome {
    let run = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cylinder_cli::run(["cylinder", "verify", "all"], &mut out, &mut err);
        (code, out)
    };
    let ((ca, a), (cb, b)) = (run(), run());
    let mut bad = Vec::new();
    if a.is_empty() || !matches!(ca, 0 | 3) {
        bad.push(format!("verify all: exit {ca}, {} bytes", a.len()));
    }
    if a != b || ca != cb {
        bad.push("outputs differ".into());
    }
    fail_if(bad, format!("{} identical bytes, exit {ca}", a.len()))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            title: "zero anchors",
            limit: Some(Duration::from_secs(5)),
            run: c1_zero_anchors,
        },
        Criterion {
            id: 2,
            title: "theorem 1 chain",
            limit: Some(Duration::from_secs(30)),
            run: c2_theorem1_chain,
        },
        Criterion {
            id: 3,
            title: "theorem 3 iff-grid",
            limit: Some(Duration::from_secs(180)),
            run: c3_theorem3_grid,
        },
        Criterion {
            id: 4,
            title: "wronskian identity",
            limit: None,
            run: c4_wronskian_identity,
        },
        Criterion {
            id: 5,
            title: "lemma 5 equivalence",
            limit: None,
            run: c5_lemma5,
        },
        Criterion {
            id: 6,
            title: "wronskian asymptote",
            limit: None,
            run: c6_asymptote,
        },
        Criterion {
            id: 7,
            title: "recurrence residuals",
            limit: None,
            run: c7_recurrences,
        },
        Criterion {
            id: 8,
            title: "theorem 2 monotonicity",
            limit: None,
            run: c8_monotonicity,
        },
        Criterion {
            id: 9,
            title: "lemma BD(b)",
            limit: Some(Duration::from_secs(60)),
            run: c9_jvsy,
        },
        Criterion {
            id: 10,
            title: "determinism",
            limit: None,
            run: c10_determinism,
        },
    ];
    // Only "filter" style arguments are meaningful for a custom harness.
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    let mut ran = 0;
    for c in &criteria {
        let key = format!("criterion_{:02}", c.id);
        if filter.as_ref().is_some_and(|f| !key.contains(f.as_str())) {
            continue;
        }
        ran += 1;
        let t = Instant::now();
        let outcome = panic::catch_unwind(c.run).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(format!("panic: {msg}"))
        });
        let took = t.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(l)) if took > l => Err(format!(
                "took {:.1} s, limit {} s",
                took.as_secs_f64(),
                l.as_secs()
            )),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!(
            "{key} {:<24} {tag} ({:.2} s) {detail}",
            c.title,
            took.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
