//! Real gamma function and the reciprocal-gamma helpers used by the
//! small-argument branch of the Bessel engine.

// Coefficients are kept exactly as published.
#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

/// Γ(a) for real `a > 0`.
///
/// Integer arguments up to 170 are returned as exact factorial products;
/// everything else goes through the Lanczos sum, with the reflection formula
/// below `a = 1/2`.
pub fn gamma_real(a: f64) -> Result<f64> {
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::domain("a", a, "a > 0 and finite"));
    }
    if a.fract() == 0.0 && a <= 171.0 {
        let mut p = 1.0;
        let mut k = 2.0;
        while k < a {
            p *= k;
            k += 1.0;
        }
        return Ok(p);
    }
    Ok(gamma_unchecked(a))
}

fn gamma_unchecked(a: f64) -> f64 {
    if a < 0.5 {
        return PI / ((PI * a).sin() * gamma_unchecked(1.0 - a));
    }
    let z = a - 1.0;
    let mut sum = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    SQRT_2PI * t.powf(z + 0.5) * (-t).exp() * sum
}

/// Taylor coefficients of 1/Γ(z) about z = 0, starting at z¹.
const RGAMMA_TAYLOR: [f64; 28] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
];

/// Reciprocal-gamma quantities for `|mu| <= 1/2`:
/// `(Γ₁(μ), Γ₂(μ), 1/Γ(1+μ), 1/Γ(1−μ))` with
/// `Γ₁ = (1/Γ(1−μ) − 1/Γ(1+μ)) / 2μ` and `Γ₂ = (1/Γ(1−μ) + 1/Γ(1+μ)) / 2`.
///
/// Both are summed from the even/odd parts of the 1/Γ Taylor series, so Γ₁
/// carries no cancellation as μ → 0.
pub(crate) fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    debug_assert!(mu.abs() <= 0.5 + 1e-12);
    let mu2 = mu * mu;
    // 1/Γ(1+z) = Σ a_k z^(k-1); a_k = RGAMMA_TAYLOR[k-1].
    let mut odd = 0.0; // Σ over k odd: a_k μ^(k-1)
    let mut even = 0.0; // Σ over k even: a_k μ^(k-2)
    for k in (1..=RGAMMA_TAYLOR.len()).rev() {
        let a = RGAMMA_TAYLOR[k - 1];
        if k % 2 == 1 {
            odd = odd * mu2 + a;
        } else {
            even = even * mu2 + a;
        }
    }
    let gam1 = -even;
    let gam2 = odd;
    let gampl = gam2 - mu * gam1;
    let gammi = gam2 + mu * gam1;
    (gam1, gam2, gampl, gammi)
}
