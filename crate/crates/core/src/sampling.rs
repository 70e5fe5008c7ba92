//! Seeded random ellipsoids and surface points for verification runs.

use std::f64::consts::{PI, TAU};

use rand::Rng;

use crate::ellipsoid::{Ellipsoid, SurfacePoint};

/// Smallest axis ratio drawn by [`log_uniform_ellipsoid`] in the verification runs.
pub const DEFAULT_MIN_RATIO: f64 = 1e-3;

/// An ellipsoid with `a = 1` and `b/a`, `c/a` drawn log-uniformly from `[min_ratio, 1]`.
pub fn log_uniform_ellipsoid<R: Rng + ?Sized>(rng: &mut R, min_ratio: f64) -> Ellipsoid {
    let span = min_ratio.ln();
    let mut ratio = || (span * rng.random::<f64>()).exp();
    let (p, q) = (ratio(), ratio());
    Ellipsoid::new(1.0, p, q).expect("ratios are positive and finite")
}

/// Like [`log_uniform_ellipsoid`], redrawn until `a > b > c` holds with
/// relative gaps of at least `min_gap`.
pub fn strictly_triaxial<R: Rng + ?Sized>(rng: &mut R, min_ratio: f64, min_gap: f64) -> Ellipsoid {
    loop {
        let e = log_uniform_ellipsoid(rng, min_ratio);
        let (a, b, c) = e.axes();
        if a - b > min_gap * a && b - c > min_gap * b {
            return e;
        }
    }
}

/// A chart point with `θ` uniform in `(0, π)` and `φ` uniform in `[0, 2π)`.
pub fn chart_point<R: Rng + ?Sized>(rng: &mut R) -> SurfacePoint {
    let theta = loop {
        let t = PI * rng.random::<f64>();
        if t > 0.0 {
            break t;
        }
    };
    SurfacePoint {
        theta,
        phi: TAU * rng.random::<f64>(),
    }
}
