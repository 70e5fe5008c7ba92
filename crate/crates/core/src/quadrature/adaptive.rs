//! Globally adaptive Gauss–Kronrod integration on intervals and rectangles.
//!
//! Each region carries a Kronrod estimate and an error estimate from the
//! embedded Gauss rule. The region with the largest error is bisected until
//! the summed error meets `max(abs_tol, rel_tol · |value|)`. The 2-D rule is
//! the tensor product of the 1-D pair; a rectangle is split along the axis
//! whose Gauss/Kronrod disagreement is larger.
//!
//! Evaluation order is fixed, so results are bit-for-bit reproducible.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::rule::{self, NODES};
use crate::error::{Error, Result};

/// Upper bound on live regions in one integration.
const MAX_REGIONS: usize = 100_000;

/// Tolerances and refinement limits for the adaptive integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Target relative error of the total.
    pub rel_tol: f64,
    /// Absolute error floor.
    pub abs_tol: f64,
    /// Maximum number of bisections of any region along one axis.
    pub max_subdivisions: u32,
    /// Integrate the ellipsoid oracles over one octant and multiply by 8.
    /// Ignored by [`integrate_1d`] and [`integrate_2d`] themselves.
    pub octant_symmetry: bool,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 20,
            octant_symmetry: true,
        }
    }
}

impl QuadratureSpec {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn full_domain(mut self) -> Self {
        self.octant_symmetry = false;
        self
    }

    /// Rejects non-positive or non-finite tolerances and a zero subdivision depth.
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !self.rel_tol.is_finite() {
            return Err(Error::Domain(format!(
                "rel_tol = {} must be positive",
                self.rel_tol
            )));
        }
        if !(self.abs_tol >= 0.0) || !self.abs_tol.is_finite() {
            return Err(Error::Domain(format!(
                "abs_tol = {} must be non-negative",
                self.abs_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain(
                "max_subdivisions must be at least 1".to_string(),
            ));
        }
        Ok(())
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Value, error estimate and cost of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

impl OracleResult {
    /// Multiplies value and error estimate by `k` (used for symmetry factors).
    pub fn scaled(self, k: f64) -> Self {
        Self {
            value: self.value * k,
            error_estimate: self.error_estimate * k.abs(),
            evaluations: self.evaluations,
        }
    }

    /// Adds a constant with no error of its own.
    pub fn shifted(self, c: f64) -> Self {
        Self {
            value: self.value + c,
            ..self
        }
    }

    pub fn relative_error_estimate(&self) -> f64 {
        self.error_estimate / self.value.abs()
    }
}

#[derive(Debug, Clone, Copy)]
struct Region<const D: usize> {
    id: usize,
    lo: [f64; D],
    hi: [f64; D],
    depth: [u32; D],
    value: f64,
    error: f64,
    /// Per-axis share of the error, used to pick the split axis.
    axis_error: [f64; D],
}

impl<const D: usize> PartialEq for Region<D> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<const D: usize> Eq for Region<D> {}

impl<const D: usize> PartialOrd for Region<D> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const D: usize> Ord for Region<D> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.id.cmp(&self.id))
    }
}

fn roundoff_floor(abs_integral: f64) -> f64 {
    50.0 * f64::EPSILON * abs_integral
}

fn check_finite(v: f64, at: &[f64]) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("integrand is not finite at {at:?}")))
    }
}

fn rule_1d<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<(f64, f64, [f64; 1])> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let (mut k, mut g, mut abs) = (0.0, 0.0, 0.0);
    for (x, wk, wg) in rule::nodes() {
        let t = center + half * x;
        let v = check_finite(f(t), &[t])?;
        k += wk * v;
        g += wg * v;
        abs += wk * v.abs();
    }
    let err = ((k - g).abs() * half).max(roundoff_floor(abs * half));
    Ok((k * half, err, [err]))
}

fn rule_2d<F: Fn(f64, f64) -> f64>(
    f: &F,
    lo: [f64; 2],
    hi: [f64; 2],
) -> Result<(f64, f64, [f64; 2])> {
    let nodes = rule::nodes();
    let (cx, hx) = (0.5 * (lo[0] + hi[0]), 0.5 * (hi[0] - lo[0]));
    let (cy, hy) = (0.5 * (lo[1] + hi[1]), 0.5 * (hi[1] - lo[1]));
    let ys: [f64; NODES] = std::array::from_fn(|j| cy + hy * nodes[j].0);

    let (mut kk, mut gk, mut kg, mut abs) = (0.0, 0.0, 0.0, 0.0);
    for &(xi, wki, wgi) in nodes.iter() {
        let x = cx + hx * xi;
        let (mut row_k, mut row_g, mut row_abs) = (0.0, 0.0, 0.0);
        for (j, &(_, wkj, wgj)) in nodes.iter().enumerate() {
            let v = check_finite(f(x, ys[j]), &[x, ys[j]])?;
            row_k += wkj * v;
            row_g += wgj * v;
            row_abs += wkj * v.abs();
        }
        kk += wki * row_k;
        gk += wgi * row_k;
        kg += wki * row_g;
        abs += wki * row_abs;
    }
    let area = hx * hy;
    let err_x = (kk - gk).abs() * area;
    let err_y = (kk - kg).abs() * area;
    let err = (err_x + err_y).max(roundoff_floor(abs * area));
    Ok((kk * area, err, [err_x, err_y]))
}

fn neumaier_sum(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn adapt<const D: usize, R>(
    lo: [f64; D],
    hi: [f64; D],
    spec: &QuadratureSpec,
    evals_per_region: usize,
    rule: R,
) -> Result<OracleResult>
where
    R: Fn([f64; D], [f64; D]) -> Result<(f64, f64, [f64; D])>,
{
    spec.validate()?;
    for d in 0..D {
        if !(lo[d].is_finite() && hi[d].is_finite()) {
            return Err(Error::Domain(
                "integration limits must be finite".to_string(),
            ));
        }
    }

    let mut next_id = 0;
    let mut make = |lo: [f64; D], hi: [f64; D], depth: [u32; D]| -> Result<Region<D>> {
        let (value, error, axis_error) = rule(lo, hi)?;
        let id = next_id;
        next_id += 1;
        Ok(Region {
            id,
            lo,
            hi,
            depth,
            value,
            error,
            axis_error,
        })
    };

    let root = make(lo, hi, [0; D])?;
    let mut total = root.value;
    let mut total_error = root.error;
    let mut heap = BinaryHeap::from([root]);
    let mut exhausted: Vec<Region<D>> = Vec::new();

    loop {
        if total_error <= spec.target(total) {
            // Re-sum exactly to shed drift from the running updates.
            total = neumaier_sum(heap.iter().chain(&exhausted).map(|r| r.value));
            total_error = heap.iter().chain(&exhausted).map(|r| r.error).sum();
            if total_error <= spec.target(total) {
                break;
            }
        }
        if heap.len() + exhausted.len() >= MAX_REGIONS {
            break;
        }
        let Some(worst) = heap.pop() else { break };

        // Split along the axis with the largest error that may still be bisected.
        let axis = (0..D)
            .filter(|&d| worst.depth[d] < spec.max_subdivisions)
            .max_by(|&i, &j| {
                worst.axis_error[i]
                    .total_cmp(&worst.axis_error[j])
                    .then(j.cmp(&i))
            });
        let Some(axis) = axis else {
            exhausted.push(worst);
            continue;
        };

        let mid = 0.5 * (worst.lo[axis] + worst.hi[axis]);
        let mut depth = worst.depth;
        depth[axis] += 1;
        let mut left_hi = worst.hi;
        left_hi[axis] = mid;
        let mut right_lo = worst.lo;
        right_lo[axis] = mid;
        let left = make(worst.lo, left_hi, depth)?;
        let right = make(right_lo, worst.hi, depth)?;

        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    let mut regions: Vec<_> = heap.into_iter().chain(exhausted).collect();
    regions.sort_by_key(|r| r.id);
    let value = neumaier_sum(regions.iter().map(|r| r.value));
    let error_estimate: f64 = regions.iter().map(|r| r.error).sum();
    let result = OracleResult {
        value,
        error_estimate,
        evaluations: next_id * evals_per_region,
    };
    if error_estimate <= spec.target(value) {
        Ok(result)
    } else {
        Err(Error::ToleranceNotMet {
            value,
            error_estimate,
            evaluations: result.evaluations,
        })
    }
}

/// Integrates `f` over `[lo, hi]`.
pub fn integrate_1d<F>(f: F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<OracleResult>
where
    F: Fn(f64) -> f64,
{
    adapt([lo], [hi], spec, NODES, |l, h| rule_1d(&f, l[0], h[0]))
}

/// Integrates `f(x, y)` over the rectangle `x_range × y_range`.
pub fn integrate_2d<F>(
    f: F,
    x_range: (f64, f64),
    y_range: (f64, f64),
    spec: &QuadratureSpec,
) -> Result<OracleResult>
where
    F: Fn(f64, f64) -> f64,
{
    adapt(
        [x_range.0, y_range.0],
        [x_range.1, y_range.1],
        spec,
        NODES * NODES,
        |l, h| rule_2d(&f, l, h),
    )
}
