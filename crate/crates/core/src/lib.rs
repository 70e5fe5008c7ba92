//! Surface area and curvature of the general ellipsoid.
//!
//! Closed-form area via Carlson-form elliptic integrals with dispatch over
//! every degenerate shape, fundamental forms and principal curvatures in the
//! eccentric-anomaly chart, and adaptive-quadrature oracles that recompute
//! each closed form from its defining integral.
//!
//! ```
//! use ellipsoid_geom::{surface_area, Ellipsoid};
//!
//! let e = Ellipsoid::new(3.0, 2.0, 1.0).unwrap();
//! assert!((surface_area(&e) - 48.88214630258206).abs() < 1e-12);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected along with the bound.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod area;
pub mod cli;
pub mod curvature;
pub mod ellipsoid;
pub mod elliptic;
pub mod error;
pub mod quadrature;
pub mod sampling;

pub use area::{ellipse_perimeter, general_surface_area, surface_area};
pub use curvature::{
    curvature_at, fundamental_forms, principal_curvatures, umbilics, CurvatureReport,
    FundamentalForms, UmbilicSet,
};
pub use ellipsoid::{classify, shape_params, Ellipsoid, ShapeClass, ShapeParams, SurfacePoint};
pub use error::{Error, Result};
pub use quadrature::{OracleResult, QuadratureSpec};
