//! The ten shape classes with their parameter ranges and a representative area.

use ellipsoid_geom::ellipsoid::classification_table;
use ellipsoid_geom::{classify, surface_area, Ellipsoid};

fn main() {
    println!(
        "{:<22} {:<12} {:<8} {:<8} {:>12}",
        "class", "axes", "e", "m", "area"
    );
    for row in classification_table() {
        let (a, b, c) = row.axes;
        let e = Ellipsoid::new(a, b, c).expect("fixture axes are valid");
        assert_eq!(classify(&e, 1e-12), row.class);
        println!(
            "{:<22} {:<12} {:<8} {:<8} {:>12.6}",
            row.class.label(),
            row.semi_axes,
            row.e_range,
            row.m_range,
            surface_area(&e)
        );
    }
}
