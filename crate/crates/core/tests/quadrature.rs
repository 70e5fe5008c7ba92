//! Error-estimate honesty and determinism of the adaptive integrators.

use std::f64::consts::PI;

use ellipsoid_geom::quadrature::{integrate_1d, integrate_2d, QuadratureSpec};
use ellipsoid_geom::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A one-dimensional factor with a closed-form integral.
#[derive(Debug, Clone, Copy)]
enum Factor {
    /// `sin^2(k x + s)`
    SinSquared { k: f64, s: f64 },
    /// `exp(α x)`
    Exp { alpha: f64 },
    /// `1 / (1 + β (x − x0)²)`
    Lorentz { beta: f64, x0: f64 },
}

impl Factor {
    fn random<R: Rng>(rng: &mut R) -> Self {
        match rng.random_range(0..3) {
            0 => Factor::SinSquared {
                k: rng.random_range(0.5..6.0),
                s: rng.random_range(0.0..PI),
            },
            1 => Factor::Exp {
                alpha: rng.random_range(-3.0..3.0),
            },
            _ => Factor::Lorentz {
                beta: 10f64.powf(rng.random_range(0.0..3.0)),
                x0: rng.random_range(0.0..1.5),
            },
        }
    }

    fn eval(self, x: f64) -> f64 {
        match self {
            Factor::SinSquared { k, s } => (k * x + s).sin().powi(2),
            Factor::Exp { alpha } => (alpha * x).exp(),
            Factor::Lorentz { beta, x0 } => 1.0 / (1.0 + beta * (x - x0).powi(2)),
        }
    }

    fn integral(self, lo: f64, hi: f64) -> f64 {
        match self {
            Factor::SinSquared { k, s } => {
                let anti = |x: f64| 0.5 * x - (2.0 * (k * x + s)).sin() / (4.0 * k);
                anti(hi) - anti(lo)
            }
            Factor::Exp { alpha } => {
                if alpha == 0.0 {
                    hi - lo
                } else {
                    ((alpha * hi).exp() - (alpha * lo).exp()) / alpha
                }
            }
            Factor::Lorentz { beta, x0 } => {
                let r = beta.sqrt();
                ((r * (hi - x0)).atan() - (r * (lo - x0)).atan()) / r
            }
        }
    }
}

#[test]
fn two_dimensional_error_estimates_are_conservative() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let trials = 1000;
    let mut honest = 0;
    for _ in 0..trials {
        let (fx, fy) = (Factor::random(&mut rng), Factor::random(&mut rng));
        let x = (0.0, rng.random_range(0.5..PI));
        let y = (0.0, rng.random_range(0.5..2.0 * PI));
        let rel_tol = 10f64.powf(rng.random_range(-12.0..-4.0));
        let spec = QuadratureSpec {
            rel_tol,
            ..QuadratureSpec::default()
        };
        let exact = fx.integral(x.0, x.1) * fy.integral(y.0, y.1);
        let r = integrate_2d(|s, t| fx.eval(s) * fy.eval(t), x, y, &spec).unwrap();
        if (r.value - exact).abs() <= r.error_estimate {
            honest += 1;
        }
    }
    assert!(
        honest * 100 >= 95 * trials,
        "only {honest} of {trials} estimates bound the true error"
    );
}

#[test]
fn one_dimensional_error_estimates_are_conservative() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let trials = 1000;
    let mut honest = 0;
    for _ in 0..trials {
        let f = Factor::random(&mut rng);
        let hi = rng.random_range(0.5..2.0 * PI);
        let rel_tol = 10f64.powf(rng.random_range(-13.0..-4.0));
        let spec = QuadratureSpec {
            rel_tol,
            ..QuadratureSpec::default()
        };
        let r = integrate_1d(|x| f.eval(x), 0.0, hi, &spec).unwrap();
        if (r.value - f.integral(0.0, hi)).abs() <= r.error_estimate {
            honest += 1;
        }
    }
    assert!(
        honest * 100 >= 95 * trials,
        "only {honest} of {trials} estimates bound the true error"
    );
}

#[test]
fn reference_integrals() {
    let spec = QuadratureSpec::default();
    let full = ((0.0, PI), (0.0, 2.0 * PI));
    let one = integrate_2d(|_, _| 1.0, full.0, full.1, &spec).unwrap();
    assert!((one.value - 2.0 * PI * PI).abs() <= 1e-13 * one.value);
    let solid = integrate_2d(|t: f64, _| t.sin(), full.0, full.1, &spec).unwrap();
    assert!((solid.value - 4.0 * PI).abs() <= 1e-13 * solid.value);
    let mixed = integrate_2d(
        |t: f64, p: f64| (t.sin() * p.cos()).powi(2),
        full.0,
        full.1,
        &spec,
    )
    .unwrap();
    assert!((mixed.value - PI * PI / 2.0).abs() <= 1e-13 * mixed.value);
}

#[test]
fn tolerance_failures_carry_best_estimate() {
    let spec = QuadratureSpec {
        rel_tol: 1e-15,
        max_subdivisions: 2,
        ..QuadratureSpec::default()
    };
    match integrate_1d(|x: f64| x.sqrt(), 0.0, 1.0, &spec) {
        Err(Error::ToleranceNotMet {
            value,
            error_estimate,
            evaluations,
        }) => {
            assert!((value - 2.0 / 3.0).abs() < 1e-3);
            assert!(error_estimate > 0.0);
            assert!(evaluations > 0);
        }
        other => panic!("expected a tolerance failure, got {other:?}"),
    }
}

#[test]
fn results_repeat_bit_for_bit_across_threads() {
    let f = |t: f64, p: f64| (t.sin() * (3.0 * p).cos()).exp();
    let spec = QuadratureSpec::default();
    let reference = integrate_2d(f, (0.0, PI), (0.0, 2.0 * PI), &spec).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            std::thread::spawn(move || integrate_2d(f, (0.0, PI), (0.0, 2.0 * PI), &spec).unwrap())
        })
        .collect();
    for h in handles {
        let r = h.join().unwrap();
        assert_eq!(r.value.to_bits(), reference.value.to_bits());
        assert_eq!(
            r.error_estimate.to_bits(),
            reference.error_estimate.to_bits()
        );
        assert_eq!(r.evaluations, reference.evaluations);
    }
}

#[test]
fn area_oracles_agree_within_their_estimates() {
    use ellipsoid_geom::quadrature::{
        area_by_eq_s, area_by_eq_seta, area_by_eq_ss, mean_inverse_radius_identity, r3_over_h_identity,
    };
    use ellipsoid_geom::sampling::strictly_triaxial;

    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let spec = QuadratureSpec::default();
    for _ in 0..50 {
        let e = strictly_triaxial(&mut rng, 1e-3, 1e-3);
        let results = [
            area_by_eq_s(&e, &spec).unwrap(),
            area_by_eq_ss(&e, &spec).unwrap(),
            area_by_eq_seta(&e, &spec).unwrap(),
            mean_inverse_radius_identity(&e, &spec).unwrap(),
            r3_over_h_identity(&e, &spec).unwrap(),
        ];
        for (i, x) in results.iter().enumerate() {
            for y in &results[i + 1..] {
                assert!(
                    (x.value - y.value).abs() <= x.error_estimate + y.error_estimate,
                    "{:?}: {x:?} against {y:?}",
                    e.axes()
                );
            }
        }
    }
}
