//! Principal curvatures and directions around a meridian of the (3, 2, 1) ellipsoid.

use std::f64::consts::{FRAC_PI_4, PI};

use ellipsoid_geom::curvature::{curvature_at, curvature_sum_at};
use ellipsoid_geom::{Ellipsoid, SurfacePoint};

fn main() -> Result<(), ellipsoid_geom::Error> {
    let e = Ellipsoid::new(3.0, 2.0, 1.0)?;
    println!(
        "{:>6} {:>10} {:>10} {:>12}  dir1",
        "θ/π", "χ₁", "χ₂", "2·mean"
    );
    for i in 0..=8 {
        let p = SurfacePoint::new(PI * i as f64 / 8.0, FRAC_PI_4)?;
        let (r, pole) = curvature_at(&e, p)?;
        let sum = if pole {
            r.chi1 + r.chi2
        } else {
            curvature_sum_at(&e, p)?
        };
        println!(
            "{:>6.3} {:>10.6} {:>10.6} {:>12.6}  ({:+.3}, {:+.3}, {:+.3}){}",
            p.theta / PI,
            r.chi1,
            r.chi2,
            sum,
            r.dir1.x,
            r.dir1.y,
            r.dir1.z,
            if pole { "  pole" } else { "" },
        );
    }
    Ok(())
}
