//! The `verify` subcommand: every quadrature identity on random ellipsoids.

use std::f64::consts::PI;
use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::output::{render, Format, Layout, Record};
use super::{with_pool, Failure};
use crate::area::{ellipse_perimeter, surface_area};
use crate::curvature::gauss_bonnet_total;
use crate::ellipsoid::{classify, Ellipsoid, DEFAULT_REL_TOL};
use crate::error::Result;
use crate::quadrature::{
    area_by_eq_s, area_by_eq_seta, area_by_eq_ss, ellipse_ratio_identity,
    mean_inverse_radius_identity, r3_over_h_identity, QuadratureSpec,
};
use crate::sampling::{log_uniform_ellipsoid, DEFAULT_MIN_RATIO};

/// Identity names in report order.
pub(crate) const IDENTITIES: [&str; 7] = [
    "eq_s",
    "eq_ss",
    "eq_seta",
    "mean_inverse_radius",
    "r3_over_h",
    "ellipse_ratio",
    "gauss_bonnet",
];

/// Outcome of one identity on one ellipsoid: `None` when not applicable.
type Check = Option<Result<f64>>;

fn deviation(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs()
}

fn check_case(e: &Ellipsoid, spec: &QuadratureSpec) -> [Check; 7] {
    let s = surface_area(e);
    let (a, b, _) = e.axes();
    let vs_area = |r: Result<crate::OracleResult>| Some(r.map(|o| deviation(o.value, s)));
    let general = classify(e, DEFAULT_REL_TOL).is_general();
    [
        vs_area(area_by_eq_s(e, spec)),
        vs_area(area_by_eq_ss(e, spec)),
        general.then(|| area_by_eq_seta(e, spec).map(|o| deviation(o.value, s))),
        vs_area(mean_inverse_radius_identity(e, spec)),
        vs_area(r3_over_h_identity(e, spec)),
        Some(
            ellipse_ratio_identity(a, b, spec)
                .and_then(|o| Ok(deviation(o.value, ellipse_perimeter(a, b)?))),
        ),
        Some(gauss_bonnet_total(e, spec).map(|o| deviation(o.value, 4.0 * PI))),
    ]
}

pub(crate) fn run(
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: Format,
    seed: u64,
    cases: usize,
    tol: f64,
    quad_tol: f64,
) -> std::result::Result<(), Failure> {
    if !(tol >= 0.0) {
        return Err(Failure::Usage(format!(
            "--tol must be non-negative, got {tol}"
        )));
    }
    let spec = QuadratureSpec::default().with_rel_tol(quad_tol);
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ellipsoids: Vec<Ellipsoid> = (0..cases)
        .map(|_| log_uniform_ellipsoid(&mut rng, DEFAULT_MIN_RATIO))
        .collect();
    let results = with_pool(|| {
        ellipsoids
            .par_iter()
            .map(|e| check_case(e, &spec))
            .collect::<Vec<_>>()
    })?;

    let mut records = Vec::with_capacity(IDENTITIES.len());
    let mut failures = Vec::new();
    for (k, name) in IDENTITIES.iter().enumerate() {
        let mut checked = 0usize;
        let mut failed = 0usize;
        let mut worst: Option<(f64, &Ellipsoid)> = None;
        for (e, row) in ellipsoids.iter().zip(&results) {
            let Some(outcome) = &row[k] else { continue };
            checked += 1;
            let (a, b, c) = e.axes();
            match outcome {
                Ok(d) => {
                    if worst.is_none_or(|(w, _)| *d > w) {
                        worst = Some((*d, e));
                    }
                    if !(*d <= tol) {
                        failed += 1;
                        failures.push(format!("{name}: ({a:e}, {b:e}, {c:e}) deviates by {d:e}"));
                    }
                }
                Err(error) => {
                    failed += 1;
                    failures.push(format!("{name}: ({a:e}, {b:e}, {c:e}) {error}"));
                }
            }
        }
        let mut r = Record::new();
        r.push("identity", *name)
            .push("cases", checked)
            .push("failures", failed)
            .push("max_deviation", worst.map(|(d, _)| d))
            .push("worst_a", worst.map(|(_, e)| e.a()))
            .push("worst_b", worst.map(|(_, e)| e.b()))
            .push("worst_c", worst.map(|(_, e)| e.c()))
            .push("pass", failed == 0);
        records.push(r);
    }
    render(out, &records, format, Layout::Table)?;
    if failures.is_empty() {
        return Ok(());
    }
    for f in &failures {
        writeln!(err, "{f}")?;
    }
    Err(Failure::Verification(format!(
        "{} check(s) exceeded the tolerance {tol:e}",
        failures.len()
    )))
}
