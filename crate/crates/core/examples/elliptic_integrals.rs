//! Incomplete and complete elliptic integrals in the parameter convention `m = k²`.

use std::f64::consts::{FRAC_PI_2, PI};

use ellipsoid_geom::elliptic::{ellint_e, ellint_f, ellint_k, ellint_l};

fn main() -> Result<(), ellipsoid_geom::Error> {
    println!(
        "{:>5} {:>18} {:>18} {:>18} {:>18} {:>10}",
        "m", "F(π/3, m)", "E(π/3, m)", "K(m)", "L(m)", "Legendre"
    );
    for i in 0..=10 {
        let m = i as f64 / 10.0;
        let f = ellint_f(PI / 3.0, m)?;
        let e = ellint_e(PI / 3.0, m)?;
        let l = ellint_l(m)?;
        let (k, legendre) = match (ellint_k(m), ellint_k(1.0 - m)) {
            (Ok(k), Ok(kc)) => {
                let residual = l * kc + ellint_l(1.0 - m)? * k - k * kc - FRAC_PI_2;
                (format!("{k:.15}"), format!("{residual:.1e}"))
            }
            (Ok(k), Err(_)) => (format!("{k:.15}"), "-".to_owned()),
            (Err(_), _) => ("diverges".to_owned(), "-".to_owned()),
        };
        println!("{m:>5.1} {f:>18.15} {e:>18.15} {k:>18} {l:>18.15} {legendre:>10}");
    }
    Ok(())
}
