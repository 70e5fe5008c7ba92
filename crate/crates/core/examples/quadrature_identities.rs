//! Every integral identity for the area, evaluated by adaptive quadrature on one ellipsoid.

use std::f64::consts::PI;

use ellipsoid_geom::curvature::gauss_bonnet_total;
use ellipsoid_geom::quadrature::{
    area_by_eq_s, area_by_eq_seta, area_by_eq_ss, ellipse_ratio_identity,
    mean_inverse_radius_identity, r3_over_h_identity, QuadratureSpec,
};
use ellipsoid_geom::{ellipse_perimeter, surface_area, Ellipsoid, OracleResult};

fn report(name: &str, r: &OracleResult, reference: f64) {
    println!(
        "{name:<28} {:.15}  estimate ±{:.1e}  deviation {:.1e}  ({} evaluations)",
        r.value,
        r.error_estimate,
        (r.value - reference).abs() / reference,
        r.evaluations
    );
}

fn main() -> Result<(), ellipsoid_geom::Error> {
    let e = Ellipsoid::new(1.0, 0.3, 0.01)?;
    let spec = QuadratureSpec::default();
    let s = surface_area(&e);
    println!("closed form                  {s:.15}");
    report("eccentric-anomaly integral", &area_by_eq_s(&e, &spec)?, s);
    report("central-angle integral", &area_by_eq_ss(&e, &spec)?, s);
    report("single integral", &area_by_eq_seta(&e, &spec)?, s);
    report("3V·mean(1/R)", &mean_inverse_radius_identity(&e, &spec)?, s);
    report("∫R³/H dΨ", &r3_over_h_identity(&e, &spec)?, s);
    let (a, b, _) = e.axes();
    report(
        "ellipse 2A·mean(1/R)",
        &ellipse_ratio_identity(a, b, &spec)?,
        ellipse_perimeter(a, b)?,
    );
    report(
        "total curvature (4π)",
        &gauss_bonnet_total(&e, &spec)?,
        4.0 * PI,
    );
    Ok(())
}
