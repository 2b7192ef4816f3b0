use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

use cylinder_core::theorems::{
    breakdown_scan, recurrence_residuals, theorem3_cell, verify_recurrences, verify_theorem1,
    verify_theorem3, verify_transitivity, DEFAULT_ZEROS,
};
use cylinder_core::{CylinderSpec, Error, EvalKind, Family, MixingAngle, Order};

fn order(v: f64) -> Order {
    Order::new(v).unwrap()
}

fn angle(d: f64) -> MixingAngle {
    MixingAngle::new(d).unwrap()
}

#[test]
fn recurrence_examples() {
    for (nu, d) in [(1.0, 0.0), (2.5, FRAC_PI_3)] {
        let r = verify_recurrences(order(nu), angle(d), &[1.0, 5.0, 20.0]).unwrap();
        assert!(r.passed && r.worst_residual <= 1e-9, "{r:?}");
        assert_eq!(r.checks, 18);
    }
    for nu in [0.5, 2.0, 6.0] {
        let x = (nu * (nu + 2.0f64)).sqrt();
        let r = recurrence_residuals(order(nu), angle(0.4), x).unwrap();
        assert!(r.iter().all(|&v| v <= 1e-9), "{r:?}");
    }
}

#[test]
fn recurrences_at_the_top_of_the_order_box() {
    let r = verify_recurrences(order(30.0), angle(FRAC_PI_2), &[5.0, 40.0, 399.0]).unwrap();
    assert!(r.passed, "{r:?}");
}

#[test]
fn theorem1_examples() {
    for (nu, a, b, c) in [
        (1.0, 2.0, 1.0, 1.0),
        (0.3, 0.5, 0.5, 0.5),
        (2.0, 2.0, 0.5, 0.25),
    ] {
        let r = verify_theorem1(order(nu), a, b, c, 15).unwrap();
        assert!(r.passed, "{:?}", r.counterexample);
        assert!(r.worst_residual > 0.0);
    }
    assert!(verify_theorem1(order(1.0), 1.0, 1.5, 1.0, 5).is_err());
    assert!(verify_theorem1(order(1.0), 1.0, 1.0, 0.0, 5).is_err());
}

#[test]
fn theorem3_examples() {
    let c = theorem3_cell(
        order(1.0),
        order(3.0),
        Family::Cylinder(angle(FRAC_PI_4)),
        20,
    )
    .unwrap();
    assert_eq!(c.summary(), "interlaced; predicate true; agree");
    let c = theorem3_cell(order(1.0), order(3.2), Family::Jprime, 30).unwrap();
    assert_eq!(c.summary(), "not interlaced; predicate false; agree");
    let r = verify_theorem3(order(1.0), order(5.0), Family::Cylinder(MixingAngle::J), 30).unwrap();
    assert!(r.passed);
    assert!(r.name.ends_with("not interlaced; predicate false; agree"));
    for family in [Family::Cylinder(angle(0.9)), Family::Jprime, Family::Yprime] {
        let r = verify_theorem3(order(2.0), order(2.0), family, 10).unwrap();
        assert!(r.passed && r.checks == 0 && r.name.contains("excluded"));
    }
}

#[test]
fn theorem3_boundary_gap() {
    for family in [Family::Cylinder(MixingAngle::J), Family::Yprime] {
        let c = theorem3_cell(order(1.0), order(3.0), family, DEFAULT_ZEROS).unwrap();
        assert_eq!(c.interlaced, Some(true));
        let c = theorem3_cell(order(1.0), order(3.1), family, DEFAULT_ZEROS).unwrap();
        assert_eq!(c.interlaced, Some(false));
    }
}

#[test]
fn late_breakdown_needs_more_than_thirty_zeros() {
    // Δ = 2.1 at ν = 7.1 first violates at the 31st zero.
    let f = Family::Cylinder(MixingAngle::J);
    let c = theorem3_cell(order(7.1), order(9.2), f, 30).unwrap();
    assert_eq!(c.interlaced, Some(true));
    let c = theorem3_cell(order(7.1), order(9.2), f, 40).unwrap();
    assert_eq!(c.interlaced, Some(false));
    assert!(c.agree());
}

#[test]
fn transitivity_examples() {
    let f = CylinderSpec::new(1.0, 0.0).unwrap();
    let t = [f, f.with_order(2.0).unwrap(), f.with_order(3.0).unwrap()];
    assert!(
        verify_transitivity(t, EvalKind::Function, (0.1, 60.0))
            .unwrap()
            .passed
    );
    let lo = 6f64.sqrt() + 0.1;
    assert!(
        verify_transitivity(t, EvalKind::Derivative, (lo, 60.0))
            .unwrap()
            .passed
    );
    let root = 3f64.sqrt();
    let e = verify_transitivity(t, EvalKind::Derivative, (root - 0.5, 60.0));
    assert!(matches!(e, Err(Error::PremiseFailed(_))), "{e:?}");
}

#[test]
fn breakdown_examples() {
    let gaps = [0.5, 1.0, 2.0, 2.1, 3.0, 5.0];
    let m = breakdown_scan(Family::Cylinder(MixingAngle::J), order(1.0), &gaps, 30).unwrap();
    let v: Vec<bool> = m.cells.iter().map(|c| c.interlaced).collect();
    assert_eq!(v, [true, true, true, false, false, false]);
    assert_eq!(m.disagreements(), 0);
    for c in &m.cells {
        assert_eq!(c.sign_changes == 0 && c.degenerate == 0, c.interlaced);
    }
    let m = breakdown_scan(Family::JvsY, order(3.7), &[0.8, 1.5], 30).unwrap();
    assert!(m.cells[0].interlaced);
    assert_eq!(m.cells[1].proviso, Some(true));
    assert!(!m.cells[1].interlaced);
}

#[test]
fn jvsy_without_proviso() {
    let m = breakdown_scan(Family::JvsY, order(1.0), &[1.5], 30).unwrap();
    assert_eq!(m.cells[0].proviso, Some(false));
    assert!(m.cells[0].interlaced);
}

#[test]
fn breakdown_is_not_recovered_by_raising_the_lower_order() {
    // Once broken at (ν, μ), raising ν toward μ − 2 keeps it broken until the
    // gap closes to 2.
    let mu = 6.0;
    let f = Family::Cylinder(MixingAngle::J);
    let mut nu = 0.5;
    while mu - nu > 2.05 {
        let c = theorem3_cell(order(nu), order(mu), f, DEFAULT_ZEROS).unwrap();
        assert_eq!(c.interlaced, Some(false), "nu={nu}");
        nu += 0.25;
    }
}

#[test]
fn scan_rejects_identical_cells_and_out_of_box_orders() {
    let f = Family::Cylinder(MixingAngle::J);
    assert_eq!(
        breakdown_scan(f, order(1.0), &[0.0], 10),
        Err(Error::IdenticalSpecs)
    );
    assert!(breakdown_scan(f, order(29.0), &[2.0], 10).is_err());
}

#[test]
fn family_serializes_by_name() {
    let s = serde_json::to_string(&Family::Jprime).unwrap();
    assert_eq!(s, "\"jprime\"");
    let f: Family =
        serde_json::from_str(&serde_json::to_string(&Family::Cylinder(angle(0.5))).unwrap())
            .unwrap();
    assert_eq!(f, Family::Cylinder(angle(0.5)));
}
