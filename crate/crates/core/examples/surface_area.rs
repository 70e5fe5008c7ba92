//! Closed-form surface area of a few ellipsoids, checked against quadrature.
//!
//! ```text
//! cargo run --example surface_area -- 3 2 1
//! ```

use ellipsoid_geom::ellipsoid::{shape_params, volume};
use ellipsoid_geom::quadrature::{area_by_eq_s, QuadratureSpec};
use ellipsoid_geom::{classify, surface_area, Ellipsoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let shapes = match args.as_slice() {
        [a, b, c] => vec![(*a, *b, *c)],
        _ => vec![
            (3.0, 2.0, 1.0),
            (2.0, 2.0, 1.0),
            (2.0, 1.0, 1.0),
            (1.0, 1.0, 1.0),
            (2.0, 1.0, 0.0),
        ],
    };
    let spec = QuadratureSpec::default();
    for (a, b, c) in shapes {
        let e = Ellipsoid::new(a, b, c)?;
        let s = surface_area(&e);
        let oracle = area_by_eq_s(&e, &spec)?;
        let m = shape_params(&e)?
            .m
            .value()
            .map_or("indet.".to_owned(), |m| format!("{m:.6}"));
        println!(
            "({a}, {b}, {c}) {:<22} S = {s:.12}  V = {:.6}  m = {m}  |S − quadrature|/S = {:.1e}",
            classify(&e, 1e-12).label(),
            volume(&e),
            (s - oracle.value).abs() / s.max(f64::MIN_POSITIVE),
        );
    }
    Ok(())
}
