//! Fundamental forms, principal curvatures, umbilics and total curvature.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use approx::assert_relative_eq;
use ellipsoid_geom::curvature::{
    axis_endpoint_curvatures, curvature_at, curvature_product, curvature_sum, curvature_tensor,
    directional_curvature, fundamental_forms, gauss_bonnet_total, principal_curvatures,
    tangent_vectors, umbilics, unit_normal,
};
use ellipsoid_geom::ellipsoid::{
    radius_eccentric, support_height_eccentric, Ellipsoid, SurfacePoint,
};
use ellipsoid_geom::quadrature::QuadratureSpec;
use ellipsoid_geom::Error;
use proptest::prelude::*;

fn ell(a: f64, b: f64, c: f64) -> Ellipsoid {
    Ellipsoid::new(a, b, c).unwrap()
}

fn pt(theta: f64, phi: f64) -> SurfacePoint {
    SurfacePoint::new(theta, phi).unwrap()
}

#[test]
fn sphere_forms_and_curvatures() {
    let r = 2.5;
    let e = ell(r, r, r);
    for (theta, phi) in [(0.3, 0.0), (FRAC_PI_2, 1.0), (2.9, 5.0)] {
        let f = fundamental_forms(&e, pt(theta, phi)).unwrap();
        let s2 = theta.sin().powi(2);
        assert_relative_eq!(f.u, r * r, max_relative = 1e-15);
        assert_relative_eq!(f.v, r * r * s2, max_relative = 1e-15);
        assert_eq!(f.w, 0.0);
        assert_relative_eq!(f.kappa, r, max_relative = 1e-15);
        assert_relative_eq!(f.lambda, r * s2, max_relative = 1e-15);
        let c = principal_curvatures(&e, pt(theta, phi)).unwrap();
        assert_relative_eq!(c.chi1, 1.0 / r, max_relative = 1e-15);
        assert_relative_eq!(c.chi2, 1.0 / r, max_relative = 1e-15);
        assert!(c.umbilic);
        assert_relative_eq!(
            directional_curvature(&e, pt(theta, phi), 0.4, -1.3).unwrap(),
            1.0 / r,
            max_relative = 1e-14
        );
    }
    assert_relative_eq!(curvature_sum(&e, r, r), 2.0 / r, max_relative = 1e-15);
    assert_relative_eq!(
        curvature_product(&e, r),
        1.0 / (r * r),
        max_relative = 1e-15
    );
}

#[test]
fn forms_on_the_equator() {
    let f = fundamental_forms(&ell(3.0, 2.0, 1.0), pt(FRAC_PI_2, 0.0)).unwrap();
    assert_relative_eq!(f.u, 9.0, max_relative = 1e-15);
    assert_relative_eq!(f.v, 1.0, max_relative = 1e-15);
    assert!(f.w.abs() < 1e-15);
    assert_relative_eq!(f.kappa, 2.0, max_relative = 1e-15);
    assert_eq!(f.mu, 0.0);
}

#[test]
fn no_shear_for_prolate_spheroid() {
    let e = ell(3.0, 1.0, 1.0);
    for (theta, phi) in [(0.4, 0.7), (1.2, 2.2), (2.5, 4.0)] {
        assert_eq!(fundamental_forms(&e, pt(theta, phi)).unwrap().w, 0.0);
    }
}

#[test]
fn axis_endpoints() {
    let e = ell(3.0, 2.0, 1.0);
    for north in [true, false] {
        let r = axis_endpoint_curvatures(&e, north).unwrap();
        assert_relative_eq!(r.chi1, 3.0, max_relative = 1e-15);
        assert_relative_eq!(r.chi2, 0.75, max_relative = 1e-15);
        assert_relative_eq!(r.dir1.dot(&r.dir2), 0.0);
        assert_relative_eq!(r.normal.x.abs(), 1.0);
    }
    assert_relative_eq!(
        curvature_sum(&e, 3.0, 3.0),
        15.0 / 4.0,
        max_relative = 1e-15
    );
    assert_relative_eq!(curvature_product(&e, 3.0), 9.0 / 4.0, max_relative = 1e-15);

    assert!(matches!(
        principal_curvatures(&e, pt(0.0, 0.3)),
        Err(Error::PoleChart { .. })
    ));
    assert!(matches!(
        principal_curvatures(&e, pt(PI, 0.3)),
        Err(Error::PoleChart { .. })
    ));
    let (report, pole) = curvature_at(&e, pt(PI, 1.0)).unwrap();
    assert!(pole);
    assert_relative_eq!(report.normal.x, -1.0);
    assert_relative_eq!(report.chi1, 3.0, max_relative = 1e-15);
}

#[test]
fn pole_of_prolate_spheroid_is_umbilic() {
    let r = axis_endpoint_curvatures(&ell(2.0, 1.0, 1.0), true).unwrap();
    assert!(r.umbilic);
    assert_relative_eq!(r.chi1, 2.0, max_relative = 1e-15);
}

#[test]
fn umbilics_of_321() {
    let e = ell(3.0, 2.0, 1.0);
    let set = umbilics(&e).unwrap();
    let x = 3.0 * (5.0f64 / 8.0).sqrt();
    let z = (3.0f64 / 8.0).sqrt();
    let mut seen: Vec<(f64, f64)> = set.points.iter().map(|p| (p.x, p.z)).collect();
    seen.sort_by(|l, r| l.partial_cmp(r).unwrap());
    let expected = [(-x, -z), (-x, z), (x, -z), (x, z)];
    for ((sx, sz), (ex, ez)) in seen.iter().zip(expected) {
        assert_relative_eq!(*sx, ex, max_relative = 1e-15);
        assert_relative_eq!(*sz, ez, max_relative = 1e-15);
    }
    assert!(set.points.iter().all(|p| p.y == 0.0));
    assert_relative_eq!(set.radius, 6.0f64.sqrt(), max_relative = 1e-15);
    assert_relative_eq!(set.height, 1.5, max_relative = 1e-15);
    assert_relative_eq!(set.curvature, 0.375, max_relative = 1e-15);
    assert_relative_eq!(
        curvature_sum(&e, set.radius, set.height),
        0.75,
        max_relative = 1e-14
    );
    assert_relative_eq!(
        curvature_product(&e, set.height),
        9.0 / 64.0,
        max_relative = 1e-14
    );

    for (x, p) in set.points.iter().zip(&set.anomalies) {
        assert!((e.point_at(*p) - x).norm() < 1e-15);
        assert!(e.surface_residual(x).abs() < 1e-14);
        let c = principal_curvatures(&e, *p).unwrap();
        assert!(c.umbilic);
        assert_relative_eq!(c.chi1, 0.375, max_relative = 1e-10);
        assert_relative_eq!(c.chi2, 0.375, max_relative = 1e-10);
    }
}

#[test]
fn umbilics_need_three_distinct_axes() {
    for (a, b, c) in [
        (2.0, 2.0, 1.0),
        (2.0, 1.0, 1.0),
        (1.0, 1.0, 1.0),
        (2.0, 1.0, 0.0),
    ] {
        assert_eq!(
            umbilics(&ell(a, b, c)),
            Err(Error::NotTriaxial),
            "({a}, {b}, {c})"
        );
    }
    let set = umbilics(&ell(2.0, 1.5, 1.0)).unwrap();
    for x in &set.points {
        assert!(ell(2.0, 1.5, 1.0).surface_residual(x).abs() < 1e-14);
    }
}

#[test]
fn directional_curvature_examples() {
    let e = ell(3.0, 2.0, 1.0);
    let p = pt(FRAC_PI_4, FRAC_PI_4);
    let f = fundamental_forms(&e, p).unwrap();
    assert_relative_eq!(
        directional_curvature(&e, p, 1.0, 0.0).unwrap(),
        f.kappa / f.u,
        max_relative = 1e-15
    );
    assert_relative_eq!(
        directional_curvature(&e, p, 0.0, 1.0).unwrap(),
        f.lambda / f.v,
        max_relative = 1e-15
    );
    let c = principal_curvatures(&e, p).unwrap();
    let k = directional_curvature(&e, p, 1.0, 1.0).unwrap();
    assert!(c.chi2 <= k && k <= c.chi1);
    assert_eq!(
        directional_curvature(&e, p, 0.0, 0.0),
        Err(Error::ZeroDirection)
    );
}

#[test]
fn gauss_bonnet_examples() {
    let spec = QuadratureSpec::default();
    for (a, b, c) in [(1.0, 1.0, 1.0), (3.0, 2.0, 1.0), (1.0, 0.9, 0.2)] {
        let total = gauss_bonnet_total(&ell(a, b, c), &spec).unwrap();
        assert_relative_eq!(total.value, 4.0 * PI, max_relative = 1e-9);
    }
    let full = gauss_bonnet_total(&ell(3.0, 2.0, 1.0), &spec.full_domain()).unwrap();
    assert_relative_eq!(full.value, 4.0 * PI, max_relative = 1e-9);
    assert!(gauss_bonnet_total(&ell(2.0, 1.0, 0.0), &spec).is_err());
}

#[test]
fn degenerate_shapes_rejected() {
    let disc = ell(2.0, 1.0, 0.0);
    assert!(fundamental_forms(&disc, pt(1.0, 1.0)).is_err());
    assert!(principal_curvatures(&disc, pt(1.0, 1.0)).is_err());
}

/// `dn − χ·dR` along a chart displacement of size `h`.
fn first_order_residual(e: &Ellipsoid, p: SurfacePoint, dir: (f64, f64), h: f64) -> f64 {
    let q = SurfacePoint {
        theta: p.theta + h * dir.0,
        phi: p.phi + h * dir.1,
    };
    let dn = unit_normal(e, q).unwrap() - unit_normal(e, p).unwrap();
    let dr = e.point_at(q) - e.point_at(p);
    (dn - curvature_tensor(e, p).unwrap() * dr).norm()
}

#[test]
fn normal_change_is_second_order_accurate() {
    let e = ell(3.0, 2.0, 1.0);
    for (theta, phi, dir) in [
        (0.7, 0.4, (1.0, 0.3)),
        (2.0, 3.5, (-0.2, 1.0)),
        (1.4, 5.9, (0.6, -0.8)),
    ] {
        let p = pt(theta, phi);
        let coarse = first_order_residual(&e, p, dir, 1e-2);
        let fine = first_order_residual(&e, p, dir, 5e-3);
        let ratio = coarse / fine;
        assert!(
            (3.5..4.5).contains(&ratio),
            "halving ratio {ratio} at ({theta}, {phi})"
        );
    }
}

fn ellipsoid_strategy() -> impl Strategy<Value = Ellipsoid> {
    (-3.0..0.0f64, -3.0..0.0f64).prop_map(|(p, q)| ell(1.0, 10f64.powf(p), 10f64.powf(q)))
}

fn point_strategy() -> impl Strategy<Value = SurfacePoint> {
    (1e-3..PI - 1e-3, 0.0..2.0 * PI).prop_map(|(t, p)| pt(t, p))
}

proptest! {
    #[test]
    fn kappa_is_support_height(e in ellipsoid_strategy(), p in point_strategy()) {
        let f = fundamental_forms(&e, p).unwrap();
        let h = support_height_eccentric(&e, p).unwrap();
        prop_assert!((f.kappa - h).abs() <= 1e-14 * h);
        prop_assert_eq!(f.mu, 0.0);
        prop_assert!((f.lambda - f.kappa * p.theta.sin().powi(2)).abs() <= 1e-15 * f.kappa);
        prop_assert!(f.u > 0.0 && f.v >= 0.0);
    }

    #[test]
    fn normal_parallel_to_tangent_cross_product(e in ellipsoid_strategy(), p in point_strategy()) {
        let (rt, rp) = tangent_vectors(&e, p);
        let cross = rt.cross(&rp).normalize();
        let n = unit_normal(&e, p).unwrap();
        prop_assert!(n.cross(&cross).norm() <= 1e-12);
        prop_assert!(n.dot(&cross) > 0.0);
    }

    #[test]
    fn principal_frame_is_orthonormal(e in ellipsoid_strategy(), p in point_strategy()) {
        let c = principal_curvatures(&e, p).unwrap();
        prop_assert!(c.chi1 >= c.chi2 && c.chi2 > 0.0);
        for v in [c.dir1, c.dir2, c.normal] {
            prop_assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
        prop_assert!(c.dir1.dot(&c.dir2).abs() <= 1e-12);
        prop_assert!(c.dir1.dot(&c.normal).abs() <= 1e-12);
        prop_assert!(c.dir2.dot(&c.normal).abs() <= 1e-12);
        prop_assert_eq!(c.mean, 0.5 * (c.chi1 + c.chi2));
        prop_assert_eq!(c.gaussian, c.chi1 * c.chi2);
    }

    #[test]
    fn tensor_agrees_with_principal_frame(p in point_strategy(), r1 in 0.2..1.0f64, r2 in 0.2..1.0f64) {
        let e = ell(1.0, r1, r2);
        let c = principal_curvatures(&e, p).unwrap();
        let m = curvature_tensor(&e, p).unwrap();
        let scale = c.chi1;
        prop_assert!((m - m.transpose()).norm() <= 1e-12 * scale);
        prop_assert!((m * c.normal).norm() <= 1e-12 * scale);
        prop_assert!((c.dir1.dot(&(m * c.dir1)) - c.chi1).abs() <= 1e-12 * scale);
        prop_assert!((c.dir2.dot(&(m * c.dir2)) - c.chi2).abs() <= 1e-12 * scale);
        if !c.umbilic {
            prop_assert!(c.dir1.dot(&(m * c.dir2)).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn euler_bound(e in ellipsoid_strategy(), p in point_strategy(), dt in -1.0..1.0f64, dp in -1.0..1.0f64) {
        prop_assume!(dt.abs() + dp.abs() > 1e-6);
        let c = principal_curvatures(&e, p).unwrap();
        let k = directional_curvature(&e, p, dt, dp).unwrap();
        prop_assert!(k >= c.chi2 * (1.0 - 1e-12) && k <= c.chi1 * (1.0 + 1e-12));
    }

    #[test]
    fn product_matches_height(e in ellipsoid_strategy(), p in point_strategy()) {
        let c = principal_curvatures(&e, p).unwrap();
        let h = support_height_eccentric(&e, p).unwrap();
        prop_assert!((c.gaussian - curvature_product(&e, h)).abs() <= 1e-12 * c.gaussian);
        let r = radius_eccentric(&e, p);
        prop_assert!(h <= r * (1.0 + 1e-15));
    }
}
