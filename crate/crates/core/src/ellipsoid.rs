//! The ellipsoid value type and its point functions.
//!
//! Semi-axes are kept in canonical order `a ≥ b ≥ c ≥ 0`; `a` is the polar
//! axis and `(b, c)` span the equatorial plane. Surface points are addressed
//! either by eccentric anomalies `(θ, φ)`,
//!
//! ```text
//! (X, Y, Z) = (a cos θ, b sin θ cos φ, c sin θ sin φ)
//! ```
//!
//! or by central (spherical) angles `(Θ, Φ)` of the ray from the centre.
//! Both co-latitudes run over `[0, π]` from the `a` axis and both longitudes
//! over `[0, 2π)` from the `b` axis.

use std::f64::consts::{PI, TAU};
use std::fmt;

use nalgebra::Vector3;

use crate::error::{Error, Result};

/// Default relative tolerance for axis-equality tests in [`classify`].
pub const DEFAULT_REL_TOL: f64 = 1e-12;

/// Largest tolerance [`classify`] accepts.
pub const MAX_REL_TOL: f64 = 1e-6;

/// A triaxial ellipsoid with semi-axes sorted so that `a ≥ b ≥ c ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipsoid {
    a: f64,
    b: f64,
    c: f64,
    order: [usize; 3],
}

impl Ellipsoid {
    /// Builds an ellipsoid from semi-axes given in any order.
    ///
    /// The axes are sorted descending; [`Ellipsoid::permutation`] tells which
    /// input position each canonical axis came from.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let input = [a, b, c];
        for (i, v) in input.iter().enumerate() {
            if !v.is_finite() || *v < 0.0 {
                return Err(Error::Domain(format!(
                    "semi-axis #{} = {v} must be finite and non-negative",
                    i + 1
                )));
            }
        }
        let mut order = [0usize, 1, 2];
        // Stable, so equal axes keep their input order.
        order.sort_by(|&i, &j| input[j].total_cmp(&input[i]));
        Ok(Self {
            a: input[order[0]],
            b: input[order[1]],
            c: input[order[2]],
            order,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn axes(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    /// `permutation()[i]` is the input index of canonical axis `i` (0 = a).
    pub fn permutation(&self) -> [usize; 3] {
        self.order
    }

    /// Uniformly scaled copy; the recorded permutation is kept.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        let mut scaled = Self::new(t * self.a, t * self.b, t * self.c)?;
        scaled.order = self.order;
        Ok(scaled)
    }

    /// True when all three semi-axes are strictly positive.
    pub fn is_solid(&self) -> bool {
        self.c > 0.0
    }

    pub(crate) fn require_solid(&self) -> Result<()> {
        if self.is_solid() {
            Ok(())
        } else {
            Err(Error::DegenerateShape(
                "all semi-axes must be strictly positive",
            ))
        }
    }

    /// Cartesian point at eccentric anomalies `(θ, φ)`.
    pub fn point_at(&self, p: SurfacePoint) -> Vector3<f64> {
        let (st, ct) = p.theta.sin_cos();
        let (sp, cp) = p.phi.sin_cos();
        Vector3::new(self.a * ct, self.b * st * cp, self.c * st * sp)
    }

    /// `X²/a² + Y²/b² + Z²/c² − 1`.
    pub fn surface_residual(&self, x: &Vector3<f64>) -> f64 {
        (x.x / self.a).powi(2) + (x.y / self.b).powi(2) + (x.z / self.c).powi(2) - 1.0
    }

    /// The quadratic form `b²c²cos²θ + c²a²sin²θcos²φ + a²b²sin²θsin²φ`.
    ///
    /// Its square root is `abc / H` in the eccentric chart and `abc / R` in
    /// the central chart.
    #[inline]
    pub(crate) fn inverse_form(&self, cos_t: f64, sin_t: f64, cos_p: f64, sin_p: f64) -> f64 {
        let (a, b, c) = (self.a, self.b, self.c);
        let (bc, ca, ab) = (b * c, c * a, a * b);
        bc * bc * cos_t * cos_t
            + sin_t * sin_t * (ca * ca * cos_p * cos_p + ab * ab * sin_p * sin_p)
    }

    /// The same form with every coefficient squared,
    /// `b⁴c⁴cos²Θ + c⁴a⁴sin²Θcos²Φ + a⁴b⁴sin²Θsin²Φ`.
    #[inline]
    pub(crate) fn inverse_form_squared_coeffs(
        &self,
        cos_t: f64,
        sin_t: f64,
        cos_p: f64,
        sin_p: f64,
    ) -> f64 {
        let (a, b, c) = (self.a, self.b, self.c);
        let (bc, ca, ab) = ((b * c).powi(2), (c * a).powi(2), (a * b).powi(2));
        bc * bc * cos_t * cos_t
            + sin_t * sin_t * (ca * ca * cos_p * cos_p + ab * ab * sin_p * sin_p)
    }
}

/// Free-function spelling of [`Ellipsoid::new`].
pub fn make_ellipsoid(a: f64, b: f64, c: f64) -> Result<Ellipsoid> {
    Ellipsoid::new(a, b, c)
}

/// A surface point in eccentric anomalies, `θ ∈ [0, π]`, `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub theta: f64,
    pub phi: f64,
}

impl SurfacePoint {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain(format!("θ = {theta} outside [0, π]")));
        }
        if !phi.is_finite() || !(0.0..TAU).contains(&phi) {
            return Err(Error::Domain(format!("φ = {phi} outside [0, 2π)")));
        }
        Ok(Self { theta, phi })
    }

    /// Eccentric anomalies of a cartesian point lying on `e`.
    pub fn from_cartesian(e: &Ellipsoid, x: &Vector3<f64>) -> Self {
        let rho = ((x.y / e.b).powi(2) + (x.z / e.c).powi(2)).sqrt();
        let theta = rho.atan2(x.x / e.a);
        let phi = wrap_longitude((x.z / e.c).atan2(x.y / e.b));
        Self { theta, phi }
    }
}

/// Central angles `(Θ, Φ)` of the direction of a cartesian point.
pub fn central_angles(x: &Vector3<f64>) -> (f64, f64) {
    let theta = x.y.hypot(x.z).atan2(x.x);
    let phi = wrap_longitude(x.z.atan2(x.y));
    (theta, phi)
}

fn wrap_longitude(phi: f64) -> f64 {
    let wrapped = if phi < 0.0 { phi + TAU } else { phi };
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// Distance from the centre to the surface point at eccentric anomalies `p`.
pub fn radius_eccentric(e: &Ellipsoid, p: SurfacePoint) -> f64 {
    let (st, ct) = p.theta.sin_cos();
    let (sp, cp) = p.phi.sin_cos();
    let (a, b, c) = e.axes();
    (a * a * ct * ct + st * st * (b * b * cp * cp + c * c * sp * sp)).sqrt()
}

/// Distance from the centre to the surface along the central direction `(Θ, Φ)`.
pub fn radius_central(e: &Ellipsoid, theta: f64, phi: f64) -> Result<f64> {
    e.require_solid()?;
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    Ok(e.a * e.b * e.c / e.inverse_form(ct, st, cp, sp).sqrt())
}

/// Distance `H` from the centre to the tangent plane at eccentric anomalies `p`.
pub fn support_height_eccentric(e: &Ellipsoid, p: SurfacePoint) -> Result<f64> {
    e.require_solid()?;
    let (st, ct) = p.theta.sin_cos();
    let (sp, cp) = p.phi.sin_cos();
    Ok(e.a * e.b * e.c / e.inverse_form(ct, st, cp, sp).sqrt())
}

/// Distance `H` to the tangent plane at the point seen in central direction `(Θ, Φ)`.
pub fn support_height_central(e: &Ellipsoid, theta: f64, phi: f64) -> Result<f64> {
    e.require_solid()?;
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let q = e.inverse_form(ct, st, cp, sp);
    let q4 = e.inverse_form_squared_coeffs(ct, st, cp, sp);
    Ok(e.a * e.b * e.c * q.sqrt() / q4.sqrt())
}

/// Enclosed volume `4πabc/3`.
pub fn volume(e: &Ellipsoid) -> f64 {
    4.0 * PI * e.a * e.b * e.c / 3.0
}

/// The elliptic parameter `m`, which is undefined for spheres and bars.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EllipticParameter {
    Value(f64),
    Indeterminate,
}

impl EllipticParameter {
    pub fn value(self) -> Option<f64> {
        match self {
            Self::Value(m) => Some(m),
            Self::Indeterminate => None,
        }
    }
}

/// Derived shape parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeParams {
    /// Largest eccentricity of any plane section, `√(1 − c²/a²)`.
    pub e: f64,
    /// `a²(b² − c²) / (b²(a² − c²))`.
    pub m: EllipticParameter,
    /// Intermediate axis of the spheroid with the same `a` and `c`, `√((a² + c²)/2)`.
    pub b_star: f64,
    /// Parameter of that spheroid, `a² / (a² + c²)`.
    pub m_star: f64,
    /// Tilt of the circular-section planes against the `(b, c)` plane, `asin √m`.
    pub gamma: Option<f64>,
}

/// Computes `e`, `m`, `b*`, `m*` and `γ`.
///
/// `m` is reported as indeterminate for spheres and bars and snapped to
/// exactly 0 or 1 for the shapes of revolution and the discs.
pub fn shape_params(e: &Ellipsoid) -> Result<ShapeParams> {
    let class = classify(e, DEFAULT_REL_TOL);
    if class == ShapeClass::Point {
        return Err(Error::PointShape);
    }
    let (a, b, c) = e.axes();
    let ecc = if class == ShapeClass::Sphere {
        0.0
    } else {
        eccentricity(a, c)
    };
    let m = match class {
        ShapeClass::Sphere | ShapeClass::Bar => EllipticParameter::Indeterminate,
        ShapeClass::ProlateOfRevolution => EllipticParameter::Value(0.0),
        ShapeClass::OblateOfRevolution | ShapeClass::EllipticDisc | ShapeClass::CircularDisc => {
            EllipticParameter::Value(1.0)
        }
        _ => EllipticParameter::Value(parameter_m(a, b, c)),
    };
    Ok(ShapeParams {
        e: ecc,
        m,
        b_star: ((a * a + c * c) / 2.0).sqrt(),
        m_star: a * a / (a * a + c * c),
        gamma: m.value().map(|m| m.sqrt().asin()),
    })
}

/// `√(1 − c²/a²)` without forming `1 − c²/a²`.
pub(crate) fn eccentricity(a: f64, c: f64) -> f64 {
    ((a - c) * (a + c)).sqrt() / a
}

/// `a²(b² − c²) / (b²(a² − c²))`, clamped to `[0, 1]`. Requires `a > c`.
pub(crate) fn parameter_m(a: f64, b: f64, c: f64) -> f64 {
    let m = (a / b).powi(2) * ((b - c) * (b + c)) / ((a - c) * (a + c));
    m.clamp(0.0, 1.0)
}

/// The ten kinds of ellipsoid distinguished by their semi-axis relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    ProlateOfRevolution,
    GeneralProlate,
    GeneralSpheroid,
    GeneralOblate,
    OblateOfRevolution,
    EllipticDisc,
    CircularDisc,
    Bar,
    Sphere,
    Point,
}

impl ShapeClass {
    pub const ALL: [ShapeClass; 10] = [
        Self::ProlateOfRevolution,
        Self::GeneralProlate,
        Self::GeneralSpheroid,
        Self::GeneralOblate,
        Self::OblateOfRevolution,
        Self::EllipticDisc,
        Self::CircularDisc,
        Self::Bar,
        Self::Sphere,
        Self::Point,
    ];

    /// Human-readable name, e.g. `"elliptic disc"`.
    pub fn label(self) -> &'static str {
        match self {
            Self::ProlateOfRevolution => "prolate of revolution",
            Self::GeneralProlate => "general prolate",
            Self::GeneralSpheroid => "general spheroid",
            Self::GeneralOblate => "general oblate",
            Self::OblateOfRevolution => "oblate of revolution",
            Self::EllipticDisc => "elliptic disc",
            Self::CircularDisc => "circular disc",
            Self::Bar => "bar",
            Self::Sphere => "sphere",
            Self::Point => "point",
        }
    }

    /// Machine-readable name, e.g. `"elliptic_disc"`.
    pub fn key(self) -> &'static str {
        match self {
            Self::ProlateOfRevolution => "prolate_of_revolution",
            Self::GeneralProlate => "general_prolate",
            Self::GeneralSpheroid => "general_spheroid",
            Self::GeneralOblate => "general_oblate",
            Self::OblateOfRevolution => "oblate_of_revolution",
            Self::EllipticDisc => "elliptic_disc",
            Self::CircularDisc => "circular_disc",
            Self::Bar => "bar",
            Self::Sphere => "sphere",
            Self::Point => "point",
        }
    }

    /// Whether `m` has a definite value for this class.
    pub fn has_definite_m(self) -> bool {
        !matches!(self, Self::Bar | Self::Sphere | Self::Point)
    }

    /// Strictly triaxial, non-degenerate classes served by the general area formula.
    pub fn is_general(self) -> bool {
        matches!(
            self,
            Self::GeneralProlate | Self::GeneralSpheroid | Self::GeneralOblate
        )
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Assigns exactly one [`ShapeClass`].
///
/// Axis equalities are tested as `|x − y| ≤ rel_tol · a`, so the result does
/// not depend on the overall scale. Zero axes are tested exactly. For the
/// strictly triaxial shapes, `b` against `b* = √((a² + c²)/2)` decides between
/// prolate, spheroid and oblate character (equivalently `m` against `m*`).
/// `rel_tol` is clamped to `[0, MAX_REL_TOL]`.
pub fn classify(e: &Ellipsoid, rel_tol: f64) -> ShapeClass {
    let tol = rel_tol.clamp(0.0, MAX_REL_TOL) * e.a;
    let close = |x: f64, y: f64| (x - y).abs() <= tol;
    let (a, b, c) = e.axes();

    if a == 0.0 {
        return ShapeClass::Point;
    }
    if c == 0.0 {
        return if b == 0.0 {
            ShapeClass::Bar
        } else if close(a, b) {
            ShapeClass::CircularDisc
        } else {
            ShapeClass::EllipticDisc
        };
    }
    if close(a, c) {
        return ShapeClass::Sphere;
    }
    if close(b, c) {
        return ShapeClass::ProlateOfRevolution;
    }
    if close(a, b) {
        return ShapeClass::OblateOfRevolution;
    }
    let b_star = ((a * a + c * c) / 2.0).sqrt();
    if close(b, b_star) {
        ShapeClass::GeneralSpheroid
    } else if b < b_star {
        ShapeClass::GeneralProlate
    } else {
        ShapeClass::GeneralOblate
    }
}

/// One row of the classification table, with a representative ellipsoid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub class: ShapeClass,
    /// Representative semi-axes `(a, b, c)`.
    pub axes: (f64, f64, f64),
    pub semi_axes: &'static str,
    pub e_range: &'static str,
    pub m_range: &'static str,
    pub area_formula: &'static str,
}

/// The ten-row classification table with one representative ellipsoid per row.
pub fn classification_table() -> [TableRow; 10] {
    let spheroid_b = 5.0f64.sqrt();
    [
        TableRow {
            class: ShapeClass::ProlateOfRevolution,
            axes: (2.0, 1.0, 1.0),
            semi_axes: "0<c=b<a",
            e_range: "0<e<1",
            m_range: "m=0",
            area_formula: "2πa²√(1−e²)[√(1−e²)+asin(e)/e]",
        },
        TableRow {
            class: ShapeClass::GeneralProlate,
            axes: (3.0, 1.5, 1.0),
            semi_axes: "0<c<b<b*<a",
            e_range: "0<e<1",
            m_range: "0<m<m*",
            area_formula: "general",
        },
        TableRow {
            class: ShapeClass::GeneralSpheroid,
            axes: (3.0, spheroid_b, 1.0),
            semi_axes: "0<c<b=b*<a",
            e_range: "0<e<1",
            m_range: "m=m*",
            area_formula: "general",
        },
        TableRow {
            class: ShapeClass::GeneralOblate,
            axes: (3.0, 2.5, 1.0),
            semi_axes: "0<c<b*<b<a",
            e_range: "0<e<1",
            m_range: "m*<m<1",
            area_formula: "general",
        },
        TableRow {
            class: ShapeClass::OblateOfRevolution,
            axes: (2.0, 2.0, 1.0),
            semi_axes: "0<c<b=a",
            e_range: "0<e<1",
            m_range: "m=1",
            area_formula: "2πa²[1+(1−e²)atanh(e)/e]",
        },
        TableRow {
            class: ShapeClass::EllipticDisc,
            axes: (2.0, 1.0, 0.0),
            semi_axes: "0=c<b<a",
            e_range: "e=1",
            m_range: "m=1",
            area_formula: "2πab",
        },
        TableRow {
            class: ShapeClass::CircularDisc,
            axes: (2.0, 2.0, 0.0),
            semi_axes: "0=c<b=a",
            e_range: "e=1",
            m_range: "m=1",
            area_formula: "2πa²",
        },
        TableRow {
            class: ShapeClass::Bar,
            axes: (1.0, 0.0, 0.0),
            semi_axes: "0=c=b<a",
            e_range: "e=1",
            m_range: "0≤m≤1",
            area_formula: "0",
        },
        TableRow {
            class: ShapeClass::Sphere,
            axes: (1.0, 1.0, 1.0),
            semi_axes: "0<c=b=a",
            e_range: "e=0",
            m_range: "0≤m≤1",
            area_formula: "4πa²",
        },
        TableRow {
            class: ShapeClass::Point,
            axes: (0.0, 0.0, 0.0),
            semi_axes: "0=c=b=a",
            e_range: "0≤e≤1",
            m_range: "0≤m≤1",
            area_formula: "0",
        },
    ]
}
