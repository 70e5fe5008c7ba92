//! Closed-form surface area.
//!
//! [`surface_area`] dispatches on [`classify`]: the degenerate shapes get
//! their exact values, the two shapes of revolution their elementary
//! formulas, and every strictly triaxial shape the elliptic-integral formula
//!
//! ```text
//! S = 2π [ c² + b c² / √(a² − c²) · F(asin e, m) + b √(a² − c²) · E(asin e, m) ]
//! ```
//!
//! with `e = √(1 − c²/a²)` and `m = a²(b² − c²) / (b²(a² − c²))`.
//!
//! The production path works from the semi-axes directly: `1 − m e² = c²/b²`
//! and `cos(asin e) = c/a` are passed to the Carlson forms in closed form, so
//! nothing cancels even for axis ratios near 10⁻³ or below.

use std::f64::consts::PI;

use crate::ellipsoid::{
    classify, eccentricity, parameter_m, Ellipsoid, ShapeClass, DEFAULT_REL_TOL,
};
use crate::elliptic::{atanh_from_sin_cos, ellint_e, ellint_f, ellint_l, incomplete_pair};
use crate::error::{Error, Result};

/// Surface area of any valid ellipsoid, including the degenerate ones.
pub fn surface_area(e: &Ellipsoid) -> f64 {
    let (a, b, c) = e.axes();
    match classify(e, DEFAULT_REL_TOL) {
        ShapeClass::Point | ShapeClass::Bar => 0.0,
        ShapeClass::Sphere => 4.0 * PI * a * a,
        ShapeClass::EllipticDisc | ShapeClass::CircularDisc => 2.0 * PI * a * b,
        ShapeClass::ProlateOfRevolution => prolate_area_from_axes(a, c),
        ShapeClass::OblateOfRevolution => oblate_area_from_axes(a, c),
        ShapeClass::GeneralProlate | ShapeClass::GeneralSpheroid | ShapeClass::GeneralOblate => {
            // a > c > 0 holds for these classes, so the general formula cannot fail.
            general_surface_area(e).expect("strictly triaxial shape")
        }
    }
}

/// The elliptic-integral formula without any dispatch.
///
/// Valid for every `a > c > 0`, including the shapes of revolution (where it
/// reduces to the elementary formulas). Errors on `c = 0` and on `a = c`.
pub fn general_surface_area(e: &Ellipsoid) -> Result<f64> {
    let (a, b, c) = e.axes();
    if c <= 0.0 {
        return Err(Error::DegenerateShape("general area formula needs c > 0"));
    }
    if a == c {
        return Err(Error::DegenerateShape("general area formula needs a > c"));
    }
    let s = ((a - c) * (a + c)).sqrt();
    let sin_phi = s / a;
    let cos_phi = c / a;
    let delta2 = (c / b).powi(2);
    let m = parameter_m(a, b, c);
    let (f, ee) = incomplete_pair(sin_phi, cos_phi, delta2, m)?;
    Ok(2.0 * PI * (c * c + b * c * c / s * f + b * s * ee))
}

/// Prolate spheroid (`b = c`) area from `a` and `e`:
/// `2πa²√(1−e²)[√(1−e²) + asin(e)/e]`.
pub fn prolate_revolution_area(a: f64, e: f64) -> f64 {
    let k = (1.0 - e * e).sqrt();
    2.0 * PI * a * a * k * (k + asin_over(e))
}

/// Oblate spheroid (`a = b`) area from `a` and `e`:
/// `2πa²[1 + (1−e²) atanh(e)/e]`.
pub fn oblate_revolution_area(a: f64, e: f64) -> f64 {
    let k2 = 1.0 - e * e;
    2.0 * PI * a * a * (1.0 + k2 * atanh_over(e, k2.sqrt()))
}

fn asin_over(e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        e.asin() / e
    }
}

fn atanh_over(e: f64, k: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        atanh_from_sin_cos(e, k) / e
    }
}

fn prolate_area_from_axes(a: f64, c: f64) -> f64 {
    let k = c / a;
    let e = eccentricity(a, c);
    let ratio = if e == 0.0 { 1.0 } else { e.atan2(k) / e };
    2.0 * PI * a * a * k * (k + ratio)
}

fn oblate_area_from_axes(a: f64, c: f64) -> f64 {
    let k = c / a;
    let e = eccentricity(a, c);
    2.0 * PI * a * a * (1.0 + k * k * atanh_over(e, k))
}

/// Area as a function of `(a, e, m)` alone:
///
/// ```text
/// S = 2πa² √(1−e²)/√(1−me²) · [ √(1−e²)√(1−me²) + (1−e²) F(asin e, m)/e + e E(asin e, m) ]
/// ```
///
/// The prefactor is indeterminate at `e = 1`, which is rejected; use the
/// disc or bar values there.
pub fn surface_area_newsurf(a: f64, e: f64, m: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("a = {a} must be positive")));
    }
    if !(0.0..1.0).contains(&e) {
        return Err(Error::Domain(format!("e = {e} outside [0, 1)")));
    }
    if !(0.0..=1.0).contains(&m) {
        return Err(Error::Domain(format!("m = {m} outside [0, 1]")));
    }
    if e == 0.0 {
        return Ok(4.0 * PI * a * a);
    }
    let phi = e.asin();
    let k = (1.0 - e * e).sqrt();
    let d = (1.0 - m * e * e).sqrt();
    let f = ellint_f(phi, m)?;
    let ee = ellint_e(phi, m)?;
    Ok(2.0 * PI * a * a * k / d * (k * d + k * k * f / e + e * ee))
}

/// Perimeter of the ellipse with semi-axes `a ≥ b ≥ 0`: `4a L(1 − b²/a²)`.
///
/// Arguments in the other order are swapped.
pub fn ellipse_perimeter(a: f64, b: f64) -> Result<f64> {
    for v in [a, b] {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::Domain(format!(
                "semi-axis {v} must be finite and non-negative"
            )));
        }
    }
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    if a == 0.0 {
        return Ok(0.0);
    }
    let m = ((a - b) * (a + b) / (a * a)).clamp(0.0, 1.0);
    Ok(4.0 * a * ellint_l(m)?)
}
