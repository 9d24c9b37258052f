//! Adaptive Gauss-Legendre quadrature with turning-point substitutions.
//!
//! Action and Agmon integrals carry integrands that behave like
//! `sqrt(x - a)` (or have square-root derivative singularities) at interval
//! endpoints where the potential crosses the energy. The substitution
//! `x = a + t^2` converts those to smooth integrands and restores spectral
//! accuracy; [`integrate_endpoints`] applies it per endpoint.

use crate::{Error, Result};

/// Fixed-order Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussRule {
    /// Computes nodes and weights by Newton iteration on the Legendre
    /// polynomial; `n` up to a few hundred is fine.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Tricomi initial guess.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            weights[i] = w;
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            let (_, d) = legendre(n, 0.0);
            weights[n / 2] = 2.0 / (d * d);
        }
        Self { nodes, weights }
    }

    /// Integral of `f` over `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: &F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

/// Legendre polynomial value and derivative at `x`.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

const BASE_ORDER: usize = 24;
const MAX_DEPTH: usize = 48;

fn adaptive_panel<F: Fn(f64) -> f64>(
    rule: &GaussRule,
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    let whole = rule.integrate(a, b, f);
    let mid = 0.5 * (a + b);
    let halves = rule.integrate(a, mid, f) + rule.integrate(mid, b, f);
    let err = (whole - halves).abs();
    if err <= tol || (b - a).abs() < 1e-15 * (a.abs() + b.abs() + 1.0) {
        return Ok(halves);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::QuadratureFailure(err));
    }
    let left = adaptive_panel(rule, f, a, mid, 0.5 * tol, depth + 1)?;
    let right = adaptive_panel(rule, f, mid, b, 0.5 * tol, depth + 1)?;
    Ok(left + right)
}

/// Adaptive integral of a smooth `f` over `[a, b]` to absolute accuracy
/// `tol` (panels are bisected until the two-half refinement stabilizes).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let rule = GaussRule::new(BASE_ORDER);
    if a < b {
        adaptive_panel(&rule, &f, a, b, tol, 0)
    } else {
        Ok(-adaptive_panel(&rule, &f, b, a, tol, 0)?)
    }
}

/// Endpoint behavior of the integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    /// Smooth up to the endpoint.
    Regular,
    /// Square-root behavior at the endpoint (turning point): substitute
    /// `x = end +- t^2`.
    SqrtSingular,
}

/// Integral over `[a, b]` with prescribed endpoint behavior. Splits at the
/// midpoint and substitutes `x = a + t^2` / `x = b - t^2` on the flagged
/// sides.
pub fn integrate_endpoints<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    left: Endpoint,
    right: Endpoint,
    tol: f64,
) -> Result<f64> {
    assert!(a <= b, "integrate_endpoints expects an ordered interval");
    if a == b {
        return Ok(0.0);
    }
    let mid = 0.5 * (a + b);
    let left_part = match left {
        Endpoint::Regular => integrate(&f, a, mid, 0.5 * tol)?,
        Endpoint::SqrtSingular => {
            let tmax = (mid - a).sqrt();
            integrate(|t| 2.0 * t * f(a + t * t), 0.0, tmax, 0.5 * tol)?
        }
    };
    let right_part = match right {
        Endpoint::Regular => integrate(&f, mid, b, 0.5 * tol)?,
        Endpoint::SqrtSingular => {
            let tmax = (b - mid).sqrt();
            integrate(|t| 2.0 * t * f(b - t * t), 0.0, tmax, 0.5 * tol)?
        }
    };
    Ok(left_part + right_part)
}

/// Integral over the right tail `[a, +inf)` of a decaying integrand, via the
/// rational map `x = a + t / (1 - t)`.
pub fn integrate_tail_right<F: Fn(f64) -> f64>(f: F, a: f64, tol: f64) -> Result<f64> {
    integrate(
        |t| {
            let um = 1.0 - t;
            f(a + t / um) / (um * um)
        },
        0.0,
        1.0 - 1e-12,
        tol,
    )
}

/// Integral over the left tail `(-inf, b]` of a decaying integrand.
pub fn integrate_tail_left<F: Fn(f64) -> f64>(f: F, b: f64, tol: f64) -> Result<f64> {
    integrate_tail_right(|u| f(2.0 * b - u), b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gauss_rule_exact_for_polynomials() {
        let rule = GaussRule::new(8);
        // degree 15 is integrated exactly by an 8-point rule
        let exact = 2.0 / 15.0 + 2.0 / 9.0; // int_{-1}^{1} x^14 + x^8
        let got = rule.integrate(-1.0, 1.0, &|x: f64| x.powi(14) + x.powi(8));
        assert_abs_diff_eq!(got, exact, epsilon = 1e-14);
    }

    #[test]
    fn adaptive_matches_analytic() {
        let got = integrate(|x: f64| x.sin(), 0.0, 20.0, 1e-12).unwrap();
        assert_abs_diff_eq!(got, 1.0 - 20.0f64.cos(), epsilon = 1e-11);
        // reversed orientation flips the sign
        let rev = integrate(|x: f64| x.sin(), 20.0, 0.0, 1e-12).unwrap();
        assert_abs_diff_eq!(rev, -(1.0 - 20.0f64.cos()), epsilon = 1e-11);
    }

    #[test]
    fn sqrt_endpoint_substitution() {
        // int_0^1 sqrt(x) dx = 2/3, integrand vanishing like sqrt at the left end
        let got = integrate_endpoints(
            |x: f64| x.sqrt(),
            0.0,
            1.0,
            Endpoint::SqrtSingular,
            Endpoint::Regular,
            1e-12,
        )
        .unwrap();
        assert_abs_diff_eq!(got, 2.0 / 3.0, epsilon = 1e-12);

        // semicircle: int_{-1}^{1} sqrt(1 - x^2) dx = pi/2, both ends singular
        let got = integrate_endpoints(
            |x: f64| (1.0 - x * x).max(0.0).sqrt(),
            -1.0,
            1.0,
            Endpoint::SqrtSingular,
            Endpoint::SqrtSingular,
            1e-12,
        )
        .unwrap();
        assert_abs_diff_eq!(got, std::f64::consts::FRAC_PI_2, epsilon = 1e-12);
    }

    #[test]
    fn constant_action_segment() {
        // sqrt(lambda) d for V = 0 over a length-d segment
        let lambda: f64 = 2.3;
        let d = 1.7;
        let got = integrate(|_| lambda.sqrt(), 0.0, d, 1e-12).unwrap();
        assert_abs_diff_eq!(got, lambda.sqrt() * d, epsilon = 1e-12);
    }

    #[test]
    fn tail_integrals() {
        // int_0^inf e^{-x^2} = sqrt(pi)/2
        let got = integrate_tail_right(|x: f64| (-x * x).exp(), 0.0, 1e-12).unwrap();
        assert_abs_diff_eq!(got, std::f64::consts::PI.sqrt() / 2.0, epsilon = 1e-11);
        // int_{-inf}^{-1} e^{2x} = e^{-2}/2
        let got = integrate_tail_left(|x: f64| (2.0 * x).exp(), -1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(got, (-2.0f64).exp() / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn tolerance_refinement_is_consistent() {
        let f = |x: f64| (x * x).sin() * (-0.3 * x).exp();
        let coarse = integrate(f, 0.0, 8.0, 1e-8).unwrap();
        let fine = integrate(f, 0.0, 8.0, 1e-13).unwrap();
        assert!((coarse - fine).abs() < 1e-8);
    }
}
