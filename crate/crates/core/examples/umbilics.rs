//! The four umbilics of a triaxial ellipsoid and the curvature there.

use ellipsoid_geom::{principal_curvatures, umbilics, Ellipsoid};

fn main() -> Result<(), ellipsoid_geom::Error> {
    let e = Ellipsoid::new(3.0, 2.0, 1.0)?;
    let set = umbilics(&e)?;
    println!(
        "R = {:.12}, H = {:.12}, χ = ac/b³ = {:.12}",
        set.radius, set.height, set.curvature
    );
    for (x, p) in set.points.iter().zip(&set.anomalies) {
        let c = principal_curvatures(&e, *p)?;
        println!(
            "({:+.9}, {:+.9}, {:+.9})  χ₁ = {:.12}  χ₂ = {:.12}  umbilic: {}",
            x.x, x.y, x.z, c.chi1, c.chi2, c.umbilic
        );
    }
    match umbilics(&Ellipsoid::new(2.0, 2.0, 1.0)?) {
        Ok(_) => println!("unexpected umbilics on a spheroid"),
        Err(err) => println!("(2, 2, 1): {err}"),
    }
    Ok(())
}
