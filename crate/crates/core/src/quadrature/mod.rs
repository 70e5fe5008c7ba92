//! Adaptive quadrature and the integral identities it evaluates.

mod adaptive;
mod identities;
mod rule;

pub use adaptive::{integrate_1d, integrate_2d, OracleResult, QuadratureSpec};
pub use identities::{
    area_by_eq_s, area_by_eq_seta, area_by_eq_ss, ellipse_ratio_identity,
    mean_inverse_radius_identity, r3_over_h_identity,
};
