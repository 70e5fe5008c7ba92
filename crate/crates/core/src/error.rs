use thiserror::Error;

/// Errors produced by the geometry, special-function and quadrature routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested integral diverges (the complete first-kind integral at m = 1).
    #[error("divergent integral: {0}")]
    Divergent(&'static str),

    /// A Carlson duplication loop hit its iteration cap without converging.
    #[error("{function} did not converge within {iterations} iterations")]
    NoConvergence {
        function: &'static str,
        iterations: usize,
    },

    /// The operation needs strictly positive semi-axes.
    #[error("degenerate shape: {0}")]
    DegenerateShape(&'static str),

    /// Shape parameters are undefined for the point ellipsoid a = b = c = 0.
    #[error("shape parameters are undefined for a point")]
    PointShape,

    /// The eccentric-anomaly chart is singular at θ ∈ {0, π}.
    #[error("θ = {theta} is a pole of the (θ, φ) chart; use the axis-endpoint evaluation")]
    PoleChart { theta: f64 },

    /// Umbilics are only isolated on strictly triaxial ellipsoids.
    #[error("no isolated umbilics for shapes of revolution or degenerate shapes")]
    NotTriaxial,

    /// A tangent direction of zero length was supplied.
    #[error("direction (dθ, dφ) has zero length on the surface")]
    ZeroDirection,

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature tolerance not met: estimate {value} with error {error_estimate} after {evaluations} evaluations")]
    ToleranceNotMet {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
