//! Single-shot and batch subcommands.

use std::f64::consts::{PI, TAU};
use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;

use super::output::{render, Format, Layout, Record};
use super::{with_pool, Failure};
use crate::area::surface_area;
use crate::curvature::{
    curvature_at, curvature_product, curvature_sum, fundamental_forms, umbilics as find_umbilics,
};
use crate::ellipsoid::{
    classification_table, classify, radius_eccentric, shape_params, support_height_eccentric,
    volume, Ellipsoid, ShapeClass, SurfacePoint, DEFAULT_REL_TOL,
};
use crate::error::Error;
use crate::quadrature::{area_by_eq_s, QuadratureSpec};

/// Parses a real number or a rational multiple of `pi`, e.g. `0.3`, `pi`,
/// `-pi/2`, `3pi/4`, `2*pi`.
pub(crate) fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    let bad = || format!("cannot read {s:?} as an angle");
    let Some((coef, rest)) = t.split_once("pi") else {
        return t.parse::<f64>().map_err(|_| bad());
    };
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let divisor = match rest {
        "" => 1.0,
        r => r
            .strip_prefix('/')
            .and_then(|d| d.parse::<f64>().ok())
            .filter(|d| *d != 0.0)
            .ok_or_else(bad)?,
    };
    Ok(coef * PI / divisor)
}

fn permutation_text(e: &Ellipsoid) -> String {
    let [i, j, k] = e.permutation();
    format!("{i} {j} {k}")
}

fn push_axes(r: &mut Record, e: &Ellipsoid) {
    r.push("a", e.a())
        .push("b", e.b())
        .push("c", e.c())
        .push("permutation", permutation_text(e));
}

fn relative_deviation(value: f64, reference: f64) -> f64 {
    if value == reference {
        0.0
    } else {
        (value - reference).abs() / reference.abs()
    }
}

pub(crate) fn area(
    out: &mut dyn Write,
    format: Format,
    (a, b, c): (f64, f64, f64),
    verify: Option<(f64, f64)>,
) -> Result<(), Failure> {
    let e = Ellipsoid::new(a, b, c)?;
    let s = surface_area(&e);
    let vol = volume(&e);
    let params = shape_params(&e).ok();
    let mut r = Record::new();
    push_axes(&mut r, &e);
    r.push("class", classify(&e, DEFAULT_REL_TOL).key())
        .push("surface_area", s)
        .push("volume", vol)
        .push("area_to_volume", (vol > 0.0).then(|| s / vol))
        .push("e", params.map(|p| p.e))
        .push("m", params.and_then(|p| p.m.value()));

    let mut failure = None;
    if let Some((tol, quad_tol)) = verify {
        let spec = QuadratureSpec::default().with_rel_tol(quad_tol);
        spec.validate()?;
        let oracle = area_by_eq_s(&e, &spec)?;
        let deviation = relative_deviation(oracle.value, s);
        let ok = deviation <= tol;
        r.push("oracle_area", oracle.value)
            .push("oracle_error_estimate", oracle.error_estimate)
            .push("relative_deviation", deviation)
            .push("verified", ok);
        if !ok {
            failure = Some(format!(
                "closed form {s:e} and quadrature {:e} differ by {deviation:e} > {tol:e}",
                oracle.value
            ));
        }
    }
    render(out, &[r], format, Layout::Block)?;
    failure.map_or(Ok(()), |msg| Err(Failure::Verification(msg)))
}

pub(crate) fn curvature(
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: Format,
    (a, b, c): (f64, f64, f64),
    theta: f64,
    phi: f64,
) -> Result<(), Failure> {
    let e = Ellipsoid::new(a, b, c)?;
    e.require_solid()?;
    let phi = phi.rem_euclid(TAU);
    let p = SurfacePoint::new(theta, if phi >= TAU { 0.0 } else { phi })?;
    let forms = fundamental_forms(&e, p)?;
    let radius = radius_eccentric(&e, p);
    let height = support_height_eccentric(&e, p)?;
    let (report, pole) = curvature_at(&e, p)?;
    if pole {
        writeln!(
            err,
            "note: θ is a pole of the chart; curvatures come from the axis-endpoint sum and product"
        )?;
    }
    let x = e.point_at(p);
    let mut r = Record::new();
    push_axes(&mut r, &e);
    r.push("theta", p.theta)
        .push("phi", p.phi)
        .push("x", x.x)
        .push("y", x.y)
        .push("z", x.z)
        .push("radius", radius)
        .push("height", height)
        .push("u", forms.u)
        .push("v", forms.v)
        .push("w", forms.w)
        .push("kappa", forms.kappa)
        .push("lambda", forms.lambda)
        .push("mu", forms.mu)
        .push("chi1", report.chi1)
        .push("chi2", report.chi2)
        .push("mean", report.mean)
        .push("gaussian", report.gaussian)
        .push("sum_check", curvature_sum(&e, radius, height))
        .push("product_check", curvature_product(&e, height))
        .push("dir1_x", report.dir1.x)
        .push("dir1_y", report.dir1.y)
        .push("dir1_z", report.dir1.z)
        .push("dir2_x", report.dir2.x)
        .push("dir2_y", report.dir2.y)
        .push("dir2_z", report.dir2.z)
        .push("normal_x", report.normal.x)
        .push("normal_y", report.normal.y)
        .push("normal_z", report.normal.z)
        .push("umbilic", report.umbilic)
        .push("pole", pole);
    render(out, &[r], format, Layout::Block)?;
    Ok(())
}

pub(crate) fn umbilics(
    out: &mut dyn Write,
    format: Format,
    (a, b, c): (f64, f64, f64),
) -> Result<(), Failure> {
    let e = Ellipsoid::new(a, b, c)?;
    let set = find_umbilics(&e).map_err(|err| match err {
        Error::NotTriaxial => {
            let class = classify(&e, DEFAULT_REL_TOL);
            let reason = match class {
                ShapeClass::ProlateOfRevolution
                | ShapeClass::OblateOfRevolution
                | ShapeClass::Sphere => "no isolated umbilics for shapes of revolution",
                _ => "no umbilics for degenerate shapes",
            };
            Failure::Usage(format!("{reason} ({})", class.label()))
        }
        other => other.into(),
    })?;
    let records: Vec<Record> = set
        .points
        .iter()
        .zip(&set.anomalies)
        .map(|(x, p)| {
            let mut r = Record::new();
            r.push("x", x.x)
                .push("y", x.y)
                .push("z", x.z)
                .push("theta", p.theta)
                .push("phi", p.phi)
                .push("radius", set.radius)
                .push("height", set.height)
                .push("curvature", set.curvature);
            r
        })
        .collect();
    render(out, &records, format, Layout::Table)?;
    Ok(())
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    }
    Ok(text)
}

/// Parses the batch format: three whitespace-separated numbers per line,
/// `#` starting a comment, blank lines skipped.
pub(crate) fn parse_batch(text: &str) -> Result<Vec<(usize, Ellipsoid)>, Failure> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let numbers: Option<Vec<f64>> = fields.iter().map(|f| f.parse().ok()).collect();
        let (a, b, c) = match numbers.as_deref() {
            Some(&[a, b, c]) => (a, b, c),
            _ => {
                return Err(Failure::Usage(format!(
                    "line {line_no}: expected three semi-axes, got {content:?}"
                )))
            }
        };
        let e =
            Ellipsoid::new(a, b, c).map_err(|e| Failure::Usage(format!("line {line_no}: {e}")))?;
        rows.push((line_no, e));
    }
    Ok(rows)
}

fn classify_row(line: usize, e: &Ellipsoid) -> Record {
    let params = shape_params(e).ok();
    let mut r = Record::new();
    r.push("line", line);
    push_axes(&mut r, e);
    r.push("class", classify(e, DEFAULT_REL_TOL).key())
        .push("e", params.map(|p| p.e))
        .push("m", params.and_then(|p| p.m.value()))
        .push("b_star", params.map(|p| p.b_star))
        .push("m_star", params.map(|p| p.m_star))
        .push("gamma", params.and_then(|p| p.gamma))
        .push("surface_area", surface_area(e));
    r
}

pub(crate) fn classify_batch(
    out: &mut dyn Write,
    format: Format,
    text: &str,
) -> Result<(), Failure> {
    let rows = parse_batch(text)?;
    let records = with_pool(|| {
        rows.par_iter()
            .map(|(line, e)| classify_row(*line, e))
            .collect::<Vec<_>>()
    })?;
    render(out, &records, format, Layout::Table)?;
    Ok(())
}

pub(crate) fn classify_file(
    out: &mut dyn Write,
    format: Format,
    path: &Path,
) -> Result<(), Failure> {
    let text = read_input(path)?;
    classify_batch(out, format, &text)
}

pub(crate) fn table(out: &mut dyn Write, format: Format) -> Result<(), Failure> {
    let records: Vec<Record> = classification_table()
        .iter()
        .map(|row| {
            let (a, b, c) = row.axes;
            let e = Ellipsoid::new(a, b, c).expect("fixture axes are valid");
            let mut r = Record::new();
            r.push("class", row.class.key())
                .push("semi_axes", row.semi_axes)
                .push("e_range", row.e_range)
                .push("m_range", row.m_range)
                .push("area_formula", row.area_formula)
                .push("a", a)
                .push("b", b)
                .push("c", c)
                .push("surface_area", surface_area(&e));
            r
        })
        .collect();
    render(out, &records, format, Layout::Table)?;
    Ok(())
}
