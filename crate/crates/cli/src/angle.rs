//! Angles as plain radians or rational multiples of π.

use std::f64::consts::PI;

/// Parses `0.7`, `pi`, `-pi/2`, `3pi/4`, `2*pi/3` or `pi/4`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = t.to_ascii_lowercase();
    let Some(at) = lower.find("pi") else {
        return t
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("not an angle: {s:?}"));
    };
    let bad = || format!("not an angle: {s:?}");
    let head = lower[..at].trim_end_matches('*');
    let tail = &lower[at + 2..];
    let num: i64 = match head {
        "" | "+" => 1,
        "-" => -1,
        h => h.parse().map_err(|_| bad())?,
    };
    let den: i64 = match tail {
        "" => 1,
        t => t
            .strip_prefix('/')
            .and_then(|d| d.parse().ok())
            .ok_or_else(bad)?,
    };
    if den <= 0 {
        return Err(bad());
    }
    Ok(pi_fraction(num as f64, den as f64))
}

/// `num·π/den` rounded once, using π as a double-double.
fn pi_fraction(num: f64, den: f64) -> f64 {
    const PI_LO: f64 = 1.2246467991473532e-16;
    let hi = num * PI;
    let lo = num.mul_add(PI, -hi) + num * PI_LO;
    let q = hi / den;
    let r = (-q).mul_add(den, hi) + lo;
    q + r / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    #[test]
    fn fractions_of_pi() {
        assert_eq!(parse_angle("pi/4"), Ok(FRAC_PI_4));
        assert_eq!(parse_angle("pi/2"), Ok(FRAC_PI_2));
        assert_eq!(parse_angle("PI/3"), Ok(FRAC_PI_3));
        assert_eq!(parse_angle("pi"), Ok(PI));
        assert_eq!(parse_angle("-pi/2"), Ok(-FRAC_PI_2));
        // Correctly rounded values, from a 200-bit evaluation.
        assert_eq!(parse_angle("3pi/4"), Ok(2.356194490192345));
        assert_eq!(parse_angle("2*pi/3"), Ok(2.0943951023931957));
        assert_eq!(parse_angle("5pi/7"), Ok(2.243994752564138));
        assert_eq!(parse_angle("pi/6"), Ok(std::f64::consts::FRAC_PI_6));
        assert_eq!(parse_angle("pi/8"), Ok(std::f64::consts::FRAC_PI_8));
    }

    #[test]
    fn plain_radians() {
        assert_eq!(parse_angle("0"), Ok(0.0));
        assert_eq!(parse_angle("0.7"), Ok(0.7));
        assert_eq!(parse_angle("-1e-3"), Ok(-1e-3));
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "", "pie", "pi/0", "pi/-2", "x", "pi/4/2", "inf", "NaN", "1.5pi",
        ] {
            assert!(parse_angle(s).is_err(), "{s}");
        }
    }
}
