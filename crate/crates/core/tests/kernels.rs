use std::f64::consts::{FRAC_PI_2, PI};

use hyperpi::elliptic::*;
use hyperpi::lauricella::{fd_series, LauricellaCall};
use hyperpi::quadrature::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn defining(phi: f64, k: f64, second_kind: bool) -> f64 {
    let d = IntegrationDomain::finite(0.0, phi).unwrap();
    integrate_fn(
        |t: f64| {
            let s = k * t.sin();
            let w = ((1.0 - s) * (1.0 + s)).sqrt();
            if second_kind { w } else { 1.0 / w }
        },
        &d,
        1e-14,
    )
    .unwrap()
    .value
    .re
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn linearity(alpha in -3.0..3.0f64, beta in -3.0..3.0f64, s in 0.5..3.0f64) {
        let d = IntegrationDomain::finite(0.0, 1.0).unwrap().with_singular_right();
        let f = |p: Abscissa| 1.0 / p.to_right.sqrt();
        let g = |p: Abscissa| (s * p.x).cos();
        let tol = 1e-11;
        let lhs = integrate(|p| alpha * f(p) + beta * g(p), &d, tol).unwrap().value;
        let rf = integrate(f, &d, tol).unwrap().value;
        let rg = integrate(g, &d, tol).unwrap().value;
        let rhs = rf * alpha + rg * beta;
        prop_assert!((lhs - rhs).norm() < 10.0 * tol * (1.0 + rhs.norm()));
    }

    #[test]
    fn complete_integrals_match_defining_integral(k in 0.0..0.97f64) {
        prop_assert!((ell_k(k).unwrap() - defining(FRAC_PI_2, k, false)).abs() < 1e-11);
        prop_assert!((ell_e(k).unwrap() - defining(FRAC_PI_2, k, true)).abs() < 1e-11);
    }

    #[test]
    fn incomplete_integrals_match_defining_integral(phi in 0.0..FRAC_PI_2, k in 0.0..0.97f64) {
        prop_assert!((ell_f(phi, k).unwrap() - defining(phi, k, false)).abs() < 1e-11);
        prop_assert!((ell_e_inc(phi, k).unwrap() - defining(phi, k, true)).abs() < 1e-11);
    }

    /// `∫_α^∞ dx/√((x²−α²)(x²−β²)) = K(β/α)/α` for `0 < β < α`.
    #[test]
    fn half_line_quartic(alpha in 0.3..4.0f64, ratio in 0.0..0.95f64) {
        let beta = ratio * alpha;
        let d = IntegrationDomain::semi_infinite(alpha).unwrap().with_singular_left();
        let v = integrate(
            |p: Abscissa| 1.0 / (p.from_left * (p.x + alpha) * (p.x * p.x - beta * beta)).sqrt(),
            &d,
            1e-12,
        )
        .unwrap()
        .value
        .re;
        let expect = ell_k(ratio).unwrap() / alpha;
        prop_assert!((v - expect).abs() < 1e-11 * (1.0 + expect), "{v} vs {expect}");
    }
}

#[test]
fn tighter_tolerance_never_moves_away_from_reference() {
    let cases: [(Box<dyn Fn(Abscissa) -> f64>, IntegrationDomain, f64); 3] = [
        (
            Box::new(|p: Abscissa| 1.0 / (p.to_right * (1.0 + p.x)).sqrt()),
            IntegrationDomain::finite(0.0, 1.0).unwrap().with_singular_right(),
            FRAC_PI_2,
        ),
        (
            Box::new(|p: Abscissa| 1.0 / (4.0 * 1f64.sin().powi(2) + p.x * p.x)),
            IntegrationDomain::semi_infinite(0.0).unwrap(),
            PI / (4.0 * 1f64.sin()),
        ),
        (Box::new(|p: Abscissa| p.x.exp()), IntegrationDomain::finite(0.0, 1.0).unwrap(), 1f64.exp() - 1.0),
    ];
    for (f, d, reference) in &cases {
        let mut previous = f64::INFINITY;
        for tol in [1e-4, 5e-5, 2.5e-5, 1e-6, 1e-8, 1e-10, 1e-12] {
            let err = (integrate(f, d, tol).unwrap().value.re - reference).abs();
            // equal errors at machine precision count as "not increasing"
            assert!(err <= previous.max(4.0 * f64::EPSILON * reference.abs()), "tol={tol}: {err} > {previous}");
            previous = err;
        }
    }
}

#[test]
fn beta_kernel_matches_series() {
    let factors = [
        (Complex64::new(0.25, 0.0), 0.5),
        (Complex64::new(0.1, 0.0), 0.5),
        (Complex64::new(0.04, 0.0), 0.5),
    ];
    let raw = integrate_complex_kernel(0.5, 1.0, &factors, 1e-12).unwrap().value;
    let series = fd_series(&LauricellaCall::real(0.5, &[0.5; 3], 1.0, &[0.25, 0.1, 0.04]).unwrap(), 1e-14)
        .unwrap()
        .value;
    // Γ(1)/(Γ(1/2)Γ(1/2)) = 1/π
    assert!((raw / PI - series).norm() < 1e-13);
}

#[test]
fn complex_kernel_matches_doubled_direct_quadrature() {
    let z = Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, 1.4);
    let factors = [(z, 0.5), (z.conj(), 0.5)];
    let v = integrate_complex_kernel(0.5, 2.0, &factors, 1e-12).unwrap().value;
    let d = IntegrationDomain::finite(0.0, 1.0).unwrap().with_singular_left();
    let direct = integrate(
        |p: Abscissa| {
            let u = p.x;
            let w = (Complex64::new(1.0, 0.0) - z * u).powf(-0.5) * (Complex64::new(1.0, 0.0) - z.conj() * u).powf(-0.5);
            w * (p.to_right.sqrt() / p.from_left.sqrt())
        },
        &d,
        1e-13,
    )
    .unwrap()
    .value;
    assert!((v - direct).norm() < 1e-11, "{v} vs {direct}");
    assert!(v.im.abs() < 1e-12);
}

#[test]
fn frozen_elliptic_values() {
    // arbitrary-precision references
    assert!((ell_k(0.5).unwrap() - 1.6857503548125960428712036578).abs() < 4.0 * f64::EPSILON * 1.7);
    assert!((ell_k(0.8).unwrap() - 1.99530277766472938768621133937).abs() < 4.0 * f64::EPSILON * 2.0);
    assert!((ell_e(0.8).unwrap() - 1.27634994316990642330893310025).abs() < 4.0 * f64::EPSILON * 1.3);
}
