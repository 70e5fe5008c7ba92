//! Fundamental forms, principal curvatures and umbilics.
//!
//! In the eccentric-anomaly chart `(θ, φ)` the first fundamental form is
//!
//! ```text
//! U = a²sin²θ + cos²θ (b²cos²φ + c²sin²φ)
//! V = sin²θ (b²sin²φ + c²cos²φ)
//! W = −(b² − c²) sin θ cos θ sin φ cos φ
//! ```
//!
//! and the second, built from `R_u · n_v` with the outward unit normal, is
//! diagonal: `ϰ = H`, `λ = ϰ sin²θ`, `μ = 0`. Curvatures are therefore
//! positive everywhere on the ellipsoid.
//!
//! The chart is singular at the poles `θ ∈ {0, π}` (the endpoints of the
//! `a` axis). There the curvatures come from the chart-free sum and product
//!
//! ```text
//! χ₁ + χ₂ = H³ (a² + b² + c² − R²) / (a²b²c²)
//! χ₁ χ₂   = H⁴ / (a²b²c²)
//! ```
//!
//! The product `χ₁χ₂` is what this crate calls the Gaussian curvature.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix3, Vector3};

use crate::ellipsoid::{classify, Ellipsoid, SurfacePoint, DEFAULT_REL_TOL};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_2d, OracleResult, QuadratureSpec};

/// `|sin θ|` below which a point is treated as a chart pole.
pub const POLE_SIN_THRESHOLD: f64 = 1e-12;

/// Relative gap `|χ₁ − χ₂| / χ₁` at or below which a point counts as umbilic.
pub const UMBILIC_REL_GAP: f64 = 1e-9;

/// First (`u`, `v`, `w`) and second (`kappa`, `lambda`, `mu`) fundamental
/// form coefficients at one point of the `(θ, φ)` chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub kappa: f64,
    pub lambda: f64,
    pub mu: f64,
    /// `‖R_θ × R_φ‖ = √(UV − W²)`, evaluated without cancellation.
    pub area_element: f64,
}

impl FundamentalForms {
    /// `UV − W²`.
    pub fn metric_determinant(&self) -> f64 {
        self.area_element * self.area_element
    }
}

/// Curvature summary at a surface point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureReport {
    /// Larger principal curvature.
    pub chi1: f64,
    /// Smaller principal curvature.
    pub chi2: f64,
    /// `(χ₁ + χ₂) / 2`.
    pub mean: f64,
    /// `χ₁ χ₂`.
    pub gaussian: f64,
    /// Unit tangent along which the curvature is `chi1`.
    pub dir1: Vector3<f64>,
    /// Unit tangent along which the curvature is `chi2`; equals `normal × dir1`.
    pub dir2: Vector3<f64>,
    /// Outward unit normal.
    pub normal: Vector3<f64>,
    /// The two curvatures agree to [`UMBILIC_REL_GAP`]; `dir1`, `dir2` are
    /// then just some orthonormal tangent pair.
    pub umbilic: bool,
}

/// The four umbilics of a strictly triaxial ellipsoid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UmbilicSet {
    /// `(±a√((a²−b²)/(a²−c²)), 0, ±c√((b²−c²)/(a²−c²)))`.
    pub points: [Vector3<f64>; 4],
    /// The same points in eccentric anomalies.
    pub anomalies: [SurfacePoint; 4],
    /// Common radius `√(a² + c² − b²)`.
    pub radius: f64,
    /// Common support height `ac / b`.
    pub height: f64,
    /// Common curvature `ac / b³`.
    pub curvature: f64,
}

struct Trig {
    st: f64,
    ct: f64,
    sp: f64,
    cp: f64,
}

impl Trig {
    fn at(p: SurfacePoint) -> Self {
        let (st, ct) = p.theta.sin_cos();
        let (sp, cp) = p.phi.sin_cos();
        Self { st, ct, sp, cp }
    }
}

/// `∂R/∂θ` and `∂R/∂φ` at `p`.
pub fn tangent_vectors(e: &Ellipsoid, p: SurfacePoint) -> (Vector3<f64>, Vector3<f64>) {
    let (a, b, c) = e.axes();
    let Trig { st, ct, sp, cp } = Trig::at(p);
    (
        Vector3::new(-a * st, b * ct * cp, c * ct * sp),
        Vector3::new(0.0, -b * st * sp, c * st * cp),
    )
}

/// Outward unit normal, parallel to the gradient `(X/a², Y/b², Z/c²)`.
pub fn unit_normal(e: &Ellipsoid, p: SurfacePoint) -> Result<Vector3<f64>> {
    e.require_solid()?;
    Ok(gradient(e, &Trig::at(p)).normalize())
}

fn gradient(e: &Ellipsoid, t: &Trig) -> Vector3<f64> {
    let (a, b, c) = e.axes();
    Vector3::new(t.ct / a, t.st * t.cp / b, t.st * t.sp / c)
}

/// First and second fundamental forms at `p`.
pub fn fundamental_forms(e: &Ellipsoid, p: SurfacePoint) -> Result<FundamentalForms> {
    e.require_solid()?;
    let (a, b, c) = e.axes();
    let t = Trig::at(p);
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let q = e.inverse_form(t.ct, t.st, t.cp, t.sp);
    let kappa = a * b * c / q.sqrt();
    Ok(FundamentalForms {
        u: a2 * t.st * t.st + t.ct * t.ct * (b2 * t.cp * t.cp + c2 * t.sp * t.sp),
        v: t.st * t.st * (b2 * t.sp * t.sp + c2 * t.cp * t.cp),
        w: -(b2 - c2) * t.st * t.ct * t.sp * t.cp,
        kappa,
        lambda: kappa * t.st * t.st,
        mu: 0.0,
        area_element: t.st.abs() * q.sqrt(),
    })
}

/// `H³ (a² + b² + c² − R²) / (a²b²c²)`, twice the mean curvature.
///
/// Needs `a, b, c > 0` and `(R, H)` taken at the same surface point.
pub fn curvature_sum(e: &Ellipsoid, radius: f64, height: f64) -> f64 {
    let (a, b, c) = e.axes();
    let abc2 = (a * b * c).powi(2);
    height.powi(3) * (a * a + b * b + c * c - radius * radius) / abc2
}

/// [`curvature_sum`] at an eccentric-anomaly point, with `a² − R²` expanded
/// as `sin²θ ((a² − b²)cos²φ + (a² − c²)sin²φ)` so that no digits cancel.
pub fn curvature_sum_at(e: &Ellipsoid, p: SurfacePoint) -> Result<f64> {
    e.require_solid()?;
    let (a, b, c) = e.axes();
    let t = Trig::at(p);
    let height = a * b * c / e.inverse_form(t.ct, t.st, t.cp, t.sp).sqrt();
    let a2_minus_r2 =
        t.st * t.st * ((a - b) * (a + b) * t.cp * t.cp + (a - c) * (a + c) * t.sp * t.sp);
    Ok(height.powi(3) * (b * b + c * c + a2_minus_r2) / (a * b * c).powi(2))
}

/// `H⁴ / (a²b²c²)`, the Gaussian curvature `χ₁χ₂`.
pub fn curvature_product(e: &Ellipsoid, height: f64) -> f64 {
    let (a, b, c) = e.axes();
    height.powi(4) / (a * b * c).powi(2)
}

/// Principal curvatures and directions at a non-pole point.
///
/// Solves `det(II − χ·I) = 0` for the first form `I` and second form `II`.
/// Rescaling `dφ` by
/// `sin θ` turns the second form into `ϰ·Id`, so the curvatures are `ϰ / ν`
/// with `ν` the eigenvalues of the rescaled metric
/// `[[U, W/sin θ], [W/sin θ, V/sin²θ]]`, whose determinant is the
/// cancellation-free `Q = (abc/H)²`.
pub fn principal_curvatures(e: &Ellipsoid, p: SurfacePoint) -> Result<CurvatureReport> {
    e.require_solid()?;
    let t = Trig::at(p);
    if t.st.abs() < POLE_SIN_THRESHOLD {
        return Err(Error::PoleChart { theta: p.theta });
    }
    let (a, b, c) = e.axes();
    let (b2, c2) = (b * b, c * c);
    let u = a * a * t.st * t.st + t.ct * t.ct * (b2 * t.cp * t.cp + c2 * t.sp * t.sp);
    let v = b2 * t.sp * t.sp + c2 * t.cp * t.cp;
    let w = -(b - c) * (b + c) * t.ct * t.sp * t.cp;
    let q = e.inverse_form(t.ct, t.st, t.cp, t.sp);
    let kappa = a * b * c / q.sqrt();

    let gap = (u - v).hypot(2.0 * w);
    let nu_max = 0.5 * (u + v + gap);
    let chi1 = kappa * nu_max / q;
    let chi2 = kappa / nu_max;

    // Eigenvector of the rescaled metric for the smaller eigenvalue, mapped
    // through (R_θ, R_φ / sin θ).
    let alpha = 0.5 * (2.0 * w).atan2(u - v);
    let (sa, ca) = alpha.sin_cos();
    let r_theta = Vector3::new(-a * t.st, b * t.ct * t.cp, c * t.ct * t.sp);
    let r_phi_scaled = Vector3::new(0.0, -b * t.sp, c * t.cp);
    let normal = gradient(e, &t).normalize();

    let umbilic = chi1 - chi2 <= UMBILIC_REL_GAP * chi1;
    let raw = if umbilic {
        r_phi_scaled
    } else {
        r_phi_scaled * ca - r_theta * sa
    };
    let dir1 = (raw - normal * normal.dot(&raw)).normalize();
    let dir2 = normal.cross(&dir1);

    Ok(CurvatureReport {
        chi1,
        chi2,
        mean: 0.5 * (chi1 + chi2),
        gaussian: chi1 * chi2,
        dir1,
        dir2,
        normal,
        umbilic,
    })
}

/// Curvatures at the polar point `(±a, 0, 0)` from the chart-free sum and product.
///
/// `north` selects `θ = 0`; otherwise `θ = π`. The curvature `a/c²` lies
/// along the `c` axis and `a/b²` along the `b` axis.
pub fn axis_endpoint_curvatures(e: &Ellipsoid, north: bool) -> Result<CurvatureReport> {
    e.require_solid()?;
    let a = e.a();
    let sum = curvature_sum(e, a, a);
    let product = curvature_product(e, a);
    let (chi1, chi2) = quadratic_roots(sum, product);
    let normal = if north { Vector3::x() } else { -Vector3::x() };
    let dir1 = Vector3::z();
    Ok(CurvatureReport {
        chi1,
        chi2,
        mean: 0.5 * sum,
        gaussian: product,
        dir1,
        dir2: normal.cross(&dir1),
        normal,
        umbilic: chi1 - chi2 <= UMBILIC_REL_GAP * chi1,
    })
}

/// Roots `x₁ ≥ x₂` of `x² − s x + p = 0` for `s > 0`, `p > 0`, `s² ≥ 4p`.
fn quadratic_roots(sum: f64, product: f64) -> (f64, f64) {
    let disc = (sum * sum - 4.0 * product).max(0.0);
    let big = 0.5 * (sum + disc.sqrt());
    (big, product / big)
}

/// Principal curvatures anywhere: the chart computation off the poles and
/// [`axis_endpoint_curvatures`] on them. The flag is true for the pole path.
pub fn curvature_at(e: &Ellipsoid, p: SurfacePoint) -> Result<(CurvatureReport, bool)> {
    match principal_curvatures(e, p) {
        Ok(r) => Ok((r, false)),
        Err(Error::PoleChart { .. }) => {
            Ok((axis_endpoint_curvatures(e, p.theta < FRAC_PI_2)?, true))
        }
        Err(other) => Err(other),
    }
}

/// Normal curvature `II(d, d) / I(d, d)` along the chart direction `(dθ, dφ)`.
pub fn directional_curvature(
    e: &Ellipsoid,
    p: SurfacePoint,
    dtheta: f64,
    dphi: f64,
) -> Result<f64> {
    let f = fundamental_forms(e, p)?;
    let num = f.kappa * dtheta * dtheta + 2.0 * f.mu * dtheta * dphi + f.lambda * dphi * dphi;
    let den = f.u * dtheta * dtheta + 2.0 * f.w * dtheta * dphi + f.v * dphi * dphi;
    if !(den > 0.0) || !den.is_finite() {
        return Err(Error::ZeroDirection);
    }
    Ok(num / den)
}

/// `∂n/∂θ` and `∂n/∂φ` for the outward unit normal.
pub fn normal_derivatives(e: &Ellipsoid, p: SurfacePoint) -> Result<(Vector3<f64>, Vector3<f64>)> {
    e.require_solid()?;
    let (a, b, c) = e.axes();
    let t = Trig::at(p);
    let g = gradient(e, &t);
    let norm = g.norm();
    let n = g / norm;
    let g_theta = Vector3::new(-t.st / a, t.ct * t.cp / b, t.ct * t.sp / c);
    let g_phi = Vector3::new(0.0, -t.st * t.sp / b, t.st * t.cp / c);
    let project = |d: Vector3<f64>| (d - n * n.dot(&d)) / norm;
    Ok((project(g_theta), project(g_phi)))
}

/// The curvature tensor `χ = [n_θ n_φ] G⁻¹ [R_θ; R_φ]` as a 3×3 matrix,
/// so that `dn = χ · dR` for tangent displacements.
pub fn curvature_tensor(e: &Ellipsoid, p: SurfacePoint) -> Result<Matrix3<f64>> {
    let f = fundamental_forms(e, p)?;
    if p.theta.sin().abs() < POLE_SIN_THRESHOLD {
        return Err(Error::PoleChart { theta: p.theta });
    }
    let (r_theta, r_phi) = tangent_vectors(e, p);
    let (n_theta, n_phi) = normal_derivatives(e, p)?;
    let det = f.metric_determinant();
    let (g11, g12, g22) = (f.v / det, -f.w / det, f.u / det);
    Ok(n_theta * (g11 * r_theta + g12 * r_phi).transpose()
        + n_phi * (g12 * r_theta + g22 * r_phi).transpose())
}

/// The four umbilics. Errors unless `a > b > c > 0` (shapes of revolution
/// have their umbilics at the poles, degenerate shapes have none).
pub fn umbilics(e: &Ellipsoid) -> Result<UmbilicSet> {
    if !classify(e, DEFAULT_REL_TOL).is_general() {
        return Err(Error::NotTriaxial);
    }
    let (a, b, c) = e.axes();
    let span = (a - c) * (a + c);
    let cos_t = ((a - b) * (a + b) / span).sqrt();
    let sin_t = ((b - c) * (b + c) / span).sqrt();
    let (x, z) = (a * cos_t, c * sin_t);
    let theta = sin_t.atan2(cos_t);
    let half_pi = FRAC_PI_2;
    let three_half_pi = 3.0 * FRAC_PI_2;
    Ok(UmbilicSet {
        points: [
            Vector3::new(x, 0.0, z),
            Vector3::new(x, 0.0, -z),
            Vector3::new(-x, 0.0, z),
            Vector3::new(-x, 0.0, -z),
        ],
        anomalies: [
            SurfacePoint {
                theta,
                phi: half_pi,
            },
            SurfacePoint {
                theta,
                phi: three_half_pi,
            },
            SurfacePoint {
                theta: PI - theta,
                phi: half_pi,
            },
            SurfacePoint {
                theta: PI - theta,
                phi: three_half_pi,
            },
        ],
        radius: ((a - b) * (a + b) + c * c).sqrt(),
        height: a * c / b,
        curvature: a * c / (b * b * b),
    })
}

/// `∬ χ₁χ₂ dA` over the whole surface, which must equal `4π`.
pub fn gauss_bonnet_total(e: &Ellipsoid, spec: &QuadratureSpec) -> Result<OracleResult> {
    e.require_solid()?;
    let e = *e;
    let abc = e.a() * e.b() * e.c();
    let integrand = move |theta: f64, phi: f64| {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        let q = e.inverse_form(ct, st, cp, sp);
        let height = abc / q.sqrt();
        curvature_product(&e, height) * st * q.sqrt()
    };
    if spec.octant_symmetry {
        Ok(integrate_2d(integrand, (0.0, FRAC_PI_2), (0.0, FRAC_PI_2), spec)?.scaled(8.0))
    } else {
        integrate_2d(integrand, (0.0, PI), (0.0, 2.0 * PI), spec)
    }
}
