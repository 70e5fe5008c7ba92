//! Legendre elliptic integrals of the first and second kind.
//!
//! Everything here uses the *parameter* convention `m = k²`:
//!
//! ```text
//! F(φ, m) = ∫₀^φ dτ / √(1 − m sin²τ)
//! E(φ, m) = ∫₀^φ √(1 − m sin²τ) dτ
//! K(m)    = F(π/2, m)
//! L(m)    = E(π/2, m)
//! ```
//!
//! The incomplete integrals are assembled from Carlson's symmetric forms
//! `R_F` and `R_D`, evaluated with the duplication theorem:
//!
//! ```text
//! F(φ, m) = sin φ · R_F(cos²φ, 1 − m sin²φ, 1)
//! E(φ, m) = F(φ, m) − (m/3) sin³φ · R_D(cos²φ, 1 − m sin²φ, 1)
//! ```
//!
//! Only the first quadrant `0 ≤ φ ≤ π/2` and `0 ≤ m ≤ 1` are supported.
//! At `m = 1` the closed forms `F(φ, 1) = atanh(sin φ)` and `E(φ, 1) = sin φ`
//! are used directly.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Default relative tolerance of the duplication loops.
pub const CARLSON_TOLERANCE: f64 = 1e-15;

/// Hard cap on duplication steps; hitting it is reported as an error.
pub const CARLSON_MAX_ITERATIONS: usize = 100;

/// Validated `(φ, m)` pair for the incomplete integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticArgs {
    phi: f64,
    m: f64,
}

impl EllipticArgs {
    pub fn new(phi: f64, m: f64) -> Result<Self> {
        if !phi.is_finite() || !(0.0..=FRAC_PI_2).contains(&phi) {
            return Err(Error::Domain(format!(
                "amplitude φ = {phi} outside [0, π/2]"
            )));
        }
        check_parameter(m)?;
        Ok(Self { phi, m })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn m(&self) -> f64 {
        self.m
    }
}

fn check_parameter(m: f64) -> Result<()> {
    if !m.is_finite() || !(0.0..=1.0).contains(&m) {
        return Err(Error::Domain(format!("parameter m = {m} outside [0, 1]")));
    }
    Ok(())
}

fn check_carlson_args(name: &'static str, args: &[f64], tol: f64) -> Result<()> {
    for &v in args {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Domain(format!(
                "{name} argument {v} must be finite and non-negative"
            )));
        }
    }
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::Domain(format!(
            "{name} tolerance {tol} outside (0, 1)"
        )));
    }
    Ok(())
}

/// Carlson's symmetric integral of the first kind,
/// `R_F(x, y, z) = ½ ∫₀^∞ dt / √((t+x)(t+y)(t+z))`.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64> {
    carlson_rf_with_tolerance(x, y, z, CARLSON_TOLERANCE)
}

/// [`carlson_rf`] with an explicit relative tolerance for the duplication loop.
pub fn carlson_rf_with_tolerance(x: f64, y: f64, z: f64, tol: f64) -> Result<f64> {
    check_carlson_args("R_F", &[x, y, z], tol)?;
    if [x, y, z].iter().filter(|&&v| v == 0.0).count() > 1 {
        return Err(Error::Domain(
            "R_F needs at most one zero argument".to_string(),
        ));
    }

    let (mut x, mut y, mut z) = (x, y, z);
    let mut a = (x + y + z) / 3.0;
    let q = (3.0 * tol).powf(-1.0 / 6.0) * (a - x).abs().max((a - y).abs()).max((a - z).abs());
    let mut scale = 1.0; // 4^-n

    let mut n = 0;
    while scale * q >= a.abs() {
        if n == CARLSON_MAX_ITERATIONS {
            return Err(Error::NoConvergence {
                function: "carlson_rf",
                iterations: n,
            });
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        scale *= 0.25;
        n += 1;
    }

    // A_n − x_n = 4⁻ⁿ (A_0 − x_0), so these are the usual X, Y, Z.
    let dx = (a - x) / a;
    let dy = (a - y) / a;
    let dz = -(dx + dy);
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    Ok((1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt())
}

/// Carlson's degenerate integral of the second kind,
/// `R_D(x, y, z) = (3/2) ∫₀^∞ dt / ((t+z) √((t+x)(t+y)(t+z)))`.
pub fn carlson_rd(x: f64, y: f64, z: f64) -> Result<f64> {
    carlson_rd_with_tolerance(x, y, z, CARLSON_TOLERANCE)
}

/// [`carlson_rd`] with an explicit relative tolerance for the duplication loop.
pub fn carlson_rd_with_tolerance(x: f64, y: f64, z: f64, tol: f64) -> Result<f64> {
    check_carlson_args("R_D", &[x, y, z], tol)?;
    if z == 0.0 {
        return Err(Error::Domain("R_D needs z > 0".to_string()));
    }
    if x == 0.0 && y == 0.0 {
        return Err(Error::Domain(
            "R_D needs at most one of x, y to be zero".to_string(),
        ));
    }

    let (mut x, mut y, mut z) = (x, y, z);
    let mut a = (x + y + 3.0 * z) / 5.0;
    let q = (0.25 * tol).powf(-1.0 / 6.0) * (a - x).abs().max((a - y).abs()).max((a - z).abs());
    let mut scale = 1.0;
    let mut tail = 0.0;

    let mut n = 0;
    while scale * q >= a.abs() {
        if n == CARLSON_MAX_ITERATIONS {
            return Err(Error::NoConvergence {
                function: "carlson_rd",
                iterations: n,
            });
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        tail += scale / (sz * (z + lambda));
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        scale *= 0.25;
        n += 1;
    }

    let dx = (a - x) / a;
    let dy = (a - y) / a;
    let dz = -(dx + dy) / 3.0;
    let xy = dx * dy;
    let z2 = dz * dz;
    let e2 = xy - 6.0 * z2;
    let e3 = (3.0 * xy - 8.0 * z2) * dz;
    let e4 = 3.0 * (xy - z2) * z2;
    let e5 = xy * z2 * dz;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    Ok(scale * series / (a * a.sqrt()) + 3.0 * tail)
}

/// Incomplete integral of the first kind `F(φ, m)`.
///
/// `F(π/2, 1)` diverges and is rejected.
pub fn ellint_f(phi: f64, m: f64) -> Result<f64> {
    let args = EllipticArgs::new(phi, m)?;
    let (s, c) = args.phi.sin_cos();
    if m == 1.0 {
        if args.phi == FRAC_PI_2 {
            return Err(Error::Divergent("F(π/2, 1)"));
        }
        return Ok(atanh_from_sin_cos(s, c));
    }
    Ok(s * carlson_rf(c * c, 1.0 - m * s * s, 1.0)?)
}

/// Incomplete integral of the second kind `E(φ, m)`.
pub fn ellint_e(phi: f64, m: f64) -> Result<f64> {
    let args = EllipticArgs::new(phi, m)?;
    let (s, c) = args.phi.sin_cos();
    if m == 1.0 {
        return Ok(s);
    }
    let (_, e) = incomplete_pair(s, c, 1.0 - m * s * s, m)?;
    Ok(e)
}

/// Complete integral of the first kind `K(m)`, `0 ≤ m < 1`.
pub fn ellint_k(m: f64) -> Result<f64> {
    check_parameter(m)?;
    if m == 1.0 {
        return Err(Error::Divergent("K(1)"));
    }
    carlson_rf(0.0, 1.0 - m, 1.0)
}

/// Complete integral of the second kind `L(m) = E(π/2, m)`, `0 ≤ m ≤ 1`.
pub fn ellint_l(m: f64) -> Result<f64> {
    check_parameter(m)?;
    if m == 1.0 {
        return Ok(1.0);
    }
    let mc = 1.0 - m;
    Ok(carlson_rf(0.0, mc, 1.0)? - m / 3.0 * carlson_rd(0.0, mc, 1.0)?)
}

/// `atanh(s)` for `s = sin φ`, written as `ln((1 + s) / cos φ)` so that the
/// cosine carries the precision near φ = π/2.
pub(crate) fn atanh_from_sin_cos(s: f64, c: f64) -> f64 {
    if s < 0.5 {
        s.atanh()
    } else {
        ((1.0 + s) / c).ln()
    }
}

/// `(F(φ, m), E(φ, m))` from `sin φ`, `cos φ` and `Δ² = 1 − m sin²φ`.
///
/// Callers that know `Δ²` in closed form (the area formula does) pass it in
/// to avoid the cancellation in `1 − m sin²φ`. Requires `Δ² > 0` unless
/// `cos φ > 0`; the `m = 1` closed forms are applied here as well.
pub(crate) fn incomplete_pair(
    sin_phi: f64,
    cos_phi: f64,
    delta2: f64,
    m: f64,
) -> Result<(f64, f64)> {
    if m == 1.0 {
        if cos_phi == 0.0 {
            return Err(Error::Divergent("F(π/2, 1)"));
        }
        return Ok((atanh_from_sin_cos(sin_phi, cos_phi), sin_phi));
    }
    let x = cos_phi * cos_phi;
    let rf = carlson_rf(x, delta2, 1.0)?;
    let f = sin_phi * rf;
    if m == 0.0 || sin_phi == 0.0 {
        return Ok((f, f));
    }
    let rd = carlson_rd(x, delta2, 1.0)?;
    let e = f - m / 3.0 * sin_phi * sin_phi * sin_phi * rd;
    Ok((f, e))
}
