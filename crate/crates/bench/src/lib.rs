//! Inputs shared by the benchmarks.

/// `(ν, x)` points covering each evaluation route: small x, the transition
/// region, the oscillatory regime and the top of the box.
pub const EVAL_POINTS: [(f64, f64); 8] = [
    (0.0, 0.3),
    (2.3, 0.7),
    (0.5, 1.9),
    (7.7, 2.1),
    (1.0, 12.0),
    (30.0, 5.0),
    (7.7, 150.0),
    (0.0, 399.5),
];

/// Orders for zero enumeration.
pub const ZERO_ORDERS: [f64; 4] = [0.0, 2.5, 10.0, 25.0];
