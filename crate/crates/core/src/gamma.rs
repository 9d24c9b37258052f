//! Complex log-gamma and the barrier penetration factor.
//!
//! The penetration factor
//! `N(z) = sqrt(2 pi) / Gamma(1/2 + z) * exp(z log(z/e))`
//! interpolates between `sqrt 2` at the barrier top (`z = 0`) and `1` in the
//! deep-tunneling regime (`|z| -> infinity` inside `|arg z| < pi`). It is
//! evaluated through the log-gamma function so that the huge cancelling
//! exponentials at large imaginary argument never materialize.
//!
//! `ln_gamma` uses the Stirling series with argument shifts, plus the
//! reflection formula for `Re z < 1/2`. On the strip actually used
//! (`Re z` in (0, 2], `|Im z| <= 1e4`) it is accurate to a few ulps.

use num_complex::Complex64;

use crate::{Error, Result};

/// Stirling series coefficients `B_{2n} / (2n (2n-1))`.
const STIRLING: [f64; 9] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
];

/// Modulus above which the Stirling series is applied directly.
const STIRLING_RADIUS: f64 = 12.0;

/// Principal-branch complex log-gamma.
///
/// Analytic on the plane cut along the negative real axis; poles at the
/// nonpositive integers return infinities.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        return ln_gamma(z.conj()).conj();
    }
    if z.re < 0.5 {
        // Reflection: ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z).
        let pi = std::f64::consts::PI;
        return Complex64::new(pi.ln(), 0.0) - ln_sin_pi(z) - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    // Shift until the Stirling series applies, accumulating ln(z + j).
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < STIRLING_RADIUS {
        shift += w.ln();
        w += 1.0;
    }
    stirling_ln_gamma(w) - shift
}

/// Stirling asymptotic series, valid for `Re z > 0`, `|z| >= STIRLING_RADIUS`.
fn stirling_ln_gamma(z: Complex64) -> Complex64 {
    let half_ln_two_pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    let mut series = Complex64::new(0.0, 0.0);
    let z2 = z * z;
    let mut zpow = z;
    for &c in &STIRLING {
        series += c / zpow;
        zpow *= z2;
    }
    (z - 0.5) * z.ln() - z + half_ln_two_pi + series
}

/// `ln sin(pi z)` for `Im z >= 0`, factored so that the exponentially large
/// part is extracted analytically.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let pi = std::f64::consts::PI;
    if z.im == 0.0 {
        return Complex64::new((pi * z.re).sin(), 0.0).ln();
    }
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}); |e^{2 i pi z}| < 1 here.
    let i = Complex64::new(0.0, 1.0);
    let log_i_half = Complex64::new(-(2.0f64.ln()), 0.5 * pi);
    -i * pi * z + log_i_half + (Complex64::new(1.0, 0.0) - (2.0 * i * pi * z).exp()).ln()
}

/// Barrier penetration factor on the principal branch.
///
/// `N(0) = sqrt 2` exactly (the barrier-top limit); elsewhere the sector
/// `|arg z| < pi` is required and the negative real axis is rejected as the
/// branch cut.
pub fn penetration_factor(z: Complex64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(Complex64::new(std::f64::consts::SQRT_2, 0.0));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::BranchCut);
    }
    let half_ln_two_pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    let exponent = Complex64::new(half_ln_two_pi, 0.0) + z * (z.ln() - 1.0)
        - ln_gamma(Complex64::new(0.5, 0.0) + z);
    Ok(exponent.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(got: Complex64, want: Complex64, rel: f64) {
        let scale = want.norm().max(1.0);
        assert!(
            (got - want).norm() <= rel * scale,
            "got {got}, want {want} (rel {:.3e})",
            (got - want).norm() / scale
        );
    }

    #[test]
    fn ln_gamma_reference_values() {
        // Reference values computed with mpmath at 40 digits.
        let cases = [
            (c(0.5, 0.0), c(0.57236494292470008707, 0.0)),
            (c(0.5, 1.0), c(-0.65279064420437291527, -0.95500772434256910956)),
            (c(0.5, -3.7), c(-4.8930078759764934114, -1.1521418573403952707)),
            (c(0.5, 100.0), c(-156.16069414628498918, 360.51743526790643592)),
            (c(0.5, 1.0e4), c(-15707.04432941576152, 82103.40372392849403)),
            (c(1.5, 0.0), c(-0.12078223763524522235, 0.0)),
            (c(2.0, 0.5), c(-0.079373723529674486449, 0.21958931009537835355)),
            (c(0.1, 0.2), c(1.4196225566088014808, -1.1894584561916535074)),
            (c(1.0, -50.0), c(-75.66486630382608519, -146.38488174591332191)),
            (c(0.25, 0.0), c(1.2880225246980774574, 0.0)),
            (c(0.5, 1.0e-3), c(0.57236247552765851618, -0.0019635072212284117484)),
            (c(2.5, 1.0e3), c(-1556.0618764537289536, 5910.8949133035626077)),
        ];
        for (z, want) in cases {
            assert_close(ln_gamma(z), want, 1e-12);
        }
    }

    #[test]
    fn ln_gamma_conjugate_symmetry() {
        for z in [c(0.5, 2.3), c(1.7, -40.0), c(0.2, 0.9)] {
            let a = ln_gamma(z.conj());
            let b = ln_gamma(z).conj();
            assert_close(a, b, 1e-14);
        }
    }

    #[test]
    fn penetration_factor_barrier_top_limit_exact() {
        let n0 = penetration_factor(c(0.0, 0.0)).unwrap();
        assert_eq!(n0.re, std::f64::consts::SQRT_2);
        assert_eq!(n0.im, 0.0);
    }

    #[test]
    fn penetration_factor_reference_values() {
        // mpmath, 40 digits.
        let cases = [
            (c(1.0, 0.0), c(1.0405201900457777927, 0.0)),
            (c(0.0, 1.0), c(0.99992035968255536846, -0.045019074002216984903)),
            (c(0.0, -1.0), c(0.99992035968255536846, 0.045019074002216984903)),
            (c(0.3, 0.4), c(1.0579041463206289025, -0.058123295899095476806)),
            (c(2.0, -5.0), c(1.0028661260219790882, 0.0072110589592837816498)),
        ];
        for (z, want) in cases {
            assert_close(penetration_factor(z).unwrap(), want, 1e-11);
        }
        // N(1) = 2 sqrt(2) / e.
        let n1 = penetration_factor(c(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(
            n1.re,
            2.0 * std::f64::consts::SQRT_2 / std::f64::consts::E,
            epsilon = 1e-10
        );
    }

    #[test]
    fn penetration_factor_deep_tunneling_modulus() {
        // |N(iy)| -> 1; at |y| = 1e3 the deviation is below 1e-3 (in fact
        // it is e^{-2 pi y} / 2, numerically zero).
        for y in [1.0e3, -1.0e3] {
            let n = penetration_factor(c(0.0, y)).unwrap();
            assert!((n.norm() - 1.0).abs() < 1e-3);
        }
        // Modulus identity |N(iy)|^2 = 1 + e^{-2 pi y} at moderate y.
        for y in [0.3, 1.0, 2.5] {
            let n = penetration_factor(c(0.0, y)).unwrap();
            let want = (1.0 + (-2.0 * std::f64::consts::PI * y).exp()).sqrt();
            assert_abs_diff_eq!(n.norm(), want, epsilon = 1e-12);
        }
    }

    #[test]
    fn penetration_factor_reflection_symmetry() {
        for z in [c(0.4, 1.3), c(0.0, 7.0), c(1.2, -0.4)] {
            let a = penetration_factor(z.conj()).unwrap();
            let b = penetration_factor(z).unwrap().conj();
            assert_close(a, b, 1e-13);
        }
    }

    #[test]
    fn penetration_factor_branch_cut_rejected() {
        assert!(matches!(
            penetration_factor(c(-1.0, 0.0)),
            Err(Error::BranchCut)
        ));
    }
}
