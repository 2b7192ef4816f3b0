//! Cylinder functions `C_ν(x; δ) = cos δ · J_ν(x) − sin δ · Y_ν(x)` of real
//! non-negative order, their positive zeros, and an executable harness for the
//! interlacing properties of those zeros.
//!
//! The crate is layered bottom-up:
//!
//! * [`special_fn`] evaluates Γ, `J_ν`, `Y_ν`, `C_ν` and `C′_ν`.
//! * [`zeros`] enumerates zeros of `C_ν` or `C′_ν` without missing any.
//! * [`interlace`] decides (shifted) interlacing of two zero sequences.
//! * [`wronskian`] evaluates `W(√x C_ν, √x C̄_μ)` and its extremum structure.
//! * [`theorems`] runs the verification suites and breakdown scans.
//!
//! ```
//! use cylinder_core::{find_zeros, CylinderSpec, EvalKind};
//!
//! let j0 = CylinderSpec::new(0.0, 0.0).unwrap();
//! let zeros = find_zeros(j0, EvalKind::Function, 3).unwrap();
//! assert!((zeros.zeros[0] - 2.404825557695773).abs() < 1e-12);
//! ```

pub mod error;
pub mod interlace;
pub mod report;
mod roots;
pub mod special_fn;
pub mod theorems;
pub mod wronskian;
pub mod zeros;

pub use error::{Error, Result};
pub use interlace::{check_interlaced, detect_shifted, verify_chain, InterlaceReport, ShiftReport};
pub use report::VerificationReport;
pub use special_fn::{
    asymptotic_cylinder, bessel_j, bessel_y, cylinder, cylinder_prime, gamma_real, sign_at_origin,
    CylinderSpec, EvalKind, MixingAngle, Order,
};
pub use theorems::{BreakdownMap, Family};
pub use wronskian::{wronskian_profile, wronskian_value, WronskianProfile};
pub use zeros::{find_zeros, zero_trajectory, Trajectory, ZeroSequence};
