//! Quadrature evaluations of the surface-area integrals and the mean-value
//! identities, used as ground truth for the closed forms.
//!
//! The two-dimensional integrands are even in `cos θ` and in `sin φ`, so by
//! default only the octant `[0, π/2]²` is integrated and the result is
//! multiplied by 8. Clear [`QuadratureSpec::octant_symmetry`] to integrate
//! over the full chart instead.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use super::adaptive::{integrate_1d, integrate_2d, OracleResult, QuadratureSpec};
use crate::ellipsoid::Ellipsoid;
use crate::error::{Error, Result};

fn integrate_sphere_chart<F>(f: F, spec: &QuadratureSpec) -> Result<OracleResult>
where
    F: Fn(f64, f64) -> f64,
{
    if spec.octant_symmetry {
        Ok(integrate_2d(f, (0.0, FRAC_PI_2), (0.0, FRAC_PI_2), spec)?.scaled(8.0))
    } else {
        integrate_2d(f, (0.0, PI), (0.0, TAU), spec)
    }
}

/// Area from the eccentric-anomaly surface integral
/// `∬ √(b²c²cos²θ + c²a²sin²θcos²φ + a²b²sin²θsin²φ) sin θ dθ dφ`.
///
/// The integrand stays finite for degenerate shapes, so discs and bars are accepted.
pub fn area_by_eq_s(e: &Ellipsoid, spec: &QuadratureSpec) -> Result<OracleResult> {
    let e = *e;
    integrate_sphere_chart(
        move |t, p| {
            let (st, ct) = t.sin_cos();
            let (sp, cp) = p.sin_cos();
            e.inverse_form(ct, st, cp, sp).sqrt() * st
        },
        spec,
    )
}

/// Area from the central-angle surface integral
/// `a²b²c² ∬ √(b⁴c⁴cos²Θ + c⁴a⁴sin²Θcos²Φ + a⁴b⁴sin²Θsin²Φ) / [b²c²cos²Θ + …]² sin Θ dΘ dΦ`.
pub fn area_by_eq_ss(e: &Ellipsoid, spec: &QuadratureSpec) -> Result<OracleResult> {
    e.require_solid()?;
    let e = *e;
    let abc2 = (e.a() * e.b() * e.c()).powi(2);
    integrate_sphere_chart(
        move |t, p| {
            let (st, ct) = t.sin_cos();
            let (sp, cp) = p.sin_cos();
            let q = e.inverse_form(ct, st, cp, sp);
            let q4 = e.inverse_form_squared_coeffs(ct, st, cp, sp);
            abc2 * q4.sqrt() / (q * q) * st
        },
        spec,
    )
}

/// Area from the single-integral form
///
/// ```text
/// S = 2πbc + 2bc ∫_{a²/b²}^{a²/c²} η atan√(η−1) / (√(η−1) √(a²/c² − η) √(η − a²/b²)) dη
/// ```
///
/// The inverse-square-root endpoint singularities are removed with
/// `η = a²/c² − (a²/c² − a²/b²) sin²τ`, which turns the integral into
/// `2 ∫₀^{π/2} g(η(τ)) dτ` with `g(η) = η atan√(η−1) / √(η−1)`.
///
/// Requires `a > b > c > 0`.
pub fn area_by_eq_seta(e: &Ellipsoid, spec: &QuadratureSpec) -> Result<OracleResult> {
    let (a, b, c) = e.axes();
    if !(a > b && b > c && c > 0.0) {
        return Err(Error::DegenerateShape(
            "single-integral area form needs a > b > c > 0",
        ));
    }
    // η − 1 = (a² − c²)/c² − span · sin²τ, kept as a difference of positives.
    let top = (a - c) * (a + c) / (c * c);
    let span = (a / b).powi(2) * (b - c) * (b + c) / (c * c);
    let integrand = move |tau: f64| {
        let s = tau.sin();
        let eta_minus_one = top - span * s * s;
        let root = eta_minus_one.max(0.0).sqrt();
        let ratio = if root == 0.0 { 1.0 } else { root.atan() / root };
        (1.0 + eta_minus_one) * ratio
    };
    let r = integrate_1d(integrand, 0.0, FRAC_PI_2, spec)?;
    Ok(r.scaled(4.0 * b * c).shifted(2.0 * PI * b * c))
}

/// Area from the solid-angle mean of the inverse radius,
/// `S = 3Υ · ⟨1/R⟩ = abc ∬ sin Θ / R(Θ, Φ) dΘ dΦ`.
pub fn mean_inverse_radius_identity(e: &Ellipsoid, spec: &QuadratureSpec) -> Result<OracleResult> {
    e.require_solid()?;
    let e = *e;
    let abc = e.a() * e.b() * e.c();
    integrate_sphere_chart(
        move |t, p| {
            let (st, ct) = t.sin_cos();
            let (sp, cp) = p.sin_cos();
            let radius = abc / e.inverse_form(ct, st, cp, sp).sqrt();
            abc * st / radius
        },
        spec,
    )
}

/// Area from `S = ∬ R³(Θ, Φ) / H(Θ, Φ) sin Θ dΘ dΦ`.
pub fn r3_over_h_identity(e: &Ellipsoid, spec: &QuadratureSpec) -> Result<OracleResult> {
    e.require_solid()?;
    let e = *e;
    let abc = e.a() * e.b() * e.c();
    integrate_sphere_chart(
        move |t, p| {
            let (st, ct) = t.sin_cos();
            let (sp, cp) = p.sin_cos();
            let q = e.inverse_form(ct, st, cp, sp);
            let q4 = e.inverse_form_squared_coeffs(ct, st, cp, sp);
            let radius = abc / q.sqrt();
            let height = abc * q.sqrt() / q4.sqrt();
            radius.powi(3) / height * st
        },
        spec,
    )
}

/// Ellipse perimeter from the planar analogue `Λ = A · 2⟨1/R⟩ = ab ∫₀^{2π} dΦ / R(Φ)`,
/// with `R(Φ)` the central radius of the ellipse. Requires `a ≥ b > 0`.
pub fn ellipse_ratio_identity(a: f64, b: f64, spec: &QuadratureSpec) -> Result<OracleResult> {
    if !(a.is_finite() && b > 0.0 && a >= b) {
        return Err(Error::Domain(format!(
            "ellipse semi-axes must satisfy a ≥ b > 0, got ({a}, {b})"
        )));
    }
    let ab = a * b;
    let f = move |p: f64| {
        let (s, c) = p.sin_cos();
        let radius = ab / (b * b * c * c + a * a * s * s).sqrt();
        ab / radius
    };
    if spec.octant_symmetry {
        Ok(integrate_1d(f, 0.0, FRAC_PI_2, spec)?.scaled(4.0))
    } else {
        integrate_1d(f, 0.0, TAU, spec)
    }
}
