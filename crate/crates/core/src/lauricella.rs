//! Lauricella `F_D^{(n)}` and Appell `F_1` with complex arguments.
//!
//! ```text
//! F_D(a; b₁…bₙ; c | x₁…xₙ) = Σ (a)_{|m|} (b₁)_{m₁}⋯(bₙ)_{mₙ} / ((c)_{|m|} m₁!⋯mₙ!) x₁^{m₁}⋯xₙ^{mₙ}
//! ```
//!
//! Two routes are provided. The series is summed shell by shell in the
//! total degree `|m|`; the coefficient of a shell is the degree-`|m|` Taylor
//! coefficient of `∏ (1 − xᵢt)^{−bᵢ}`, built by repeated convolution of the
//! single-variable Pochhammer sequences. Outside the polydisc the Euler
//! integral is used:
//!
//! ```text
//! F_D = Γ(c)/(Γ(a)Γ(c−a)) ∫₀¹ u^{a−1}(1−u)^{c−a−1} ∏ (1 − xᵢu)^{−bᵢ} du,   c > a > 0,
//! ```
//!
//! valid on all of ℂⁿ except where some `xᵢ` is real and `≥ 1`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::beta_normaliser;
use crate::quadrature::integrate_complex_kernel;

/// Largest `max |xᵢ|` the series route accepts.
pub const SERIES_RADIUS: f64 = 0.95;
/// Upper bound on the number of degree shells summed.
pub const SHELL_CAP: usize = 10_000;
/// Consecutive negligible shells required before the series stops.
const QUIET_SHELLS: usize = 3;
pub const MAX_VARIABLES: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct LauricellaCall {
    pub a: f64,
    pub b: Vec<f64>,
    pub c: f64,
    pub x: Vec<Complex64>,
}

impl LauricellaCall {
    pub fn new(a: f64, b: Vec<f64>, c: f64, x: Vec<Complex64>) -> Result<Self> {
        if b.len() != x.len() {
            return Err(Error::domain(format!(
                "{} parameters b for {} arguments x",
                b.len(),
                x.len()
            )));
        }
        if b.is_empty() || b.len() > MAX_VARIABLES {
            return Err(Error::domain(format!(
                "F_D supports 1 to {MAX_VARIABLES} variables, got {}",
                b.len()
            )));
        }
        let finite = [a, c].iter().chain(b.iter()).all(|v| v.is_finite())
            && x.iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite {
            return Err(Error::domain("non-finite Lauricella parameter"));
        }
        Ok(Self { a, b, c, x })
    }

    /// Real-argument convenience constructor.
    pub fn real(a: f64, b: &[f64], c: f64, x: &[f64]) -> Result<Self> {
        Self::new(a, b.to_vec(), c, x.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn variables(&self) -> usize {
        self.b.len()
    }

    fn max_abs_x(&self) -> f64 {
        self.x.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Series,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperValue {
    pub value: Complex64,
    pub route: Route,
    pub error_estimate: f64,
}

/// Sums the power series by total degree.
pub fn fd_series(call: &LauricellaCall, tol: f64) -> Result<HyperValue> {
    let radius = call.max_abs_x();
    if radius > SERIES_RADIUS {
        return Err(Error::domain(format!(
            "series route needs max|x| <= {SERIES_RADIUS}, got {radius}"
        )));
    }
    if call.c <= 0.0 && call.c.fract() == 0.0 {
        return Err(Error::domain(format!("c = {} is a non-positive integer", call.c)));
    }

    let n = call.variables();
    // singles[i][k] = (bᵢ)_k xᵢ^k / k!
    // partial[j][m] = degree-m coefficient of ∏_{i ≤ j} (1 − xᵢt)^{−bᵢ}
    let mut singles: Vec<Vec<Complex64>> = vec![vec![Complex64::new(1.0, 0.0)]; n];
    let mut partial: Vec<Vec<Complex64>> = vec![vec![Complex64::new(1.0, 0.0)]; n];
    let mut ratio = 1.0; // (a)_m / (c)_m
    let mut sum = Complex64::new(1.0, 0.0);
    let mut magnitude = 1.0;
    let mut quiet = 0usize;
    let mut recent = [0.0f64; QUIET_SHELLS];

    for m in 1..=SHELL_CAP {
        let k = (m - 1) as f64;
        ratio *= (call.a + k) / (call.c + k);
        for i in 0..n {
            let prev = singles[i][m - 1];
            singles[i].push(prev * (call.b[i] + k) * call.x[i] / m as f64);
        }
        partial[0].push(singles[0][m]);
        for j in 1..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for d in 0..=m {
                acc += partial[j - 1][m - d] * singles[j][d];
            }
            partial[j].push(acc);
        }
        let shell = partial[n - 1][m] * ratio;
        sum += shell;
        magnitude += shell.norm();
        recent[m % QUIET_SHELLS] = shell.norm();

        if shell.norm() <= tol * sum.norm() {
            quiet += 1;
            if quiet >= QUIET_SHELLS {
                let tail: f64 = recent.iter().sum();
                return Ok(HyperValue {
                    value: sum,
                    route: Route::Series,
                    error_estimate: tail + 8.0 * f64::EPSILON * magnitude,
                });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::SlowConvergence { shells: SHELL_CAP })
}

/// Evaluates through the Euler integral.
pub fn fd_integral(call: &LauricellaCall, tol: f64) -> Result<HyperValue> {
    if !(call.a > 0.0 && call.c > call.a) {
        return Err(Error::domain(format!(
            "integral route needs c > a > 0, got a={}, c={}",
            call.a, call.c
        )));
    }
    let factors: Vec<(Complex64, f64)> = call.x.iter().copied().zip(call.b.iter().copied()).collect();
    let raw = integrate_complex_kernel(call.a, call.c, &factors, tol)?;
    let norm = beta_normaliser(call.a, call.c);
    Ok(HyperValue {
        value: raw.value * norm,
        route: Route::Integral,
        error_estimate: raw.error_estimate * norm.abs(),
    })
}

/// Series inside the polydisc, integral representation elsewhere or when
/// the series stalls.
pub fn fd(call: &LauricellaCall, tol: f64) -> Result<HyperValue> {
    if call.max_abs_x() <= SERIES_RADIUS {
        match fd_series(call, tol) {
            Ok(v) => return Ok(v),
            Err(Error::SlowConvergence { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    fd_integral(call, tol)
}

/// Appell `F_1(a; b₁, b₂; c | x, y)`.
pub fn appell_f1(
    a: f64,
    b1: f64,
    b2: f64,
    c: f64,
    x: Complex64,
    y: Complex64,
    tol: f64,
) -> Result<HyperValue> {
    fd(&LauricellaCall::new(a, vec![b1, b2], c, vec![x, y])?, tol)
}

/// Closed form of `F_1(3/2; 1, 1; 2 | x, y)`:
/// `2(√(1−y) − √(1−x)) / ((x − y)√((1−x)(1−y)))`, principal roots.
pub fn appell_f1_three_halves(x: Complex64, y: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let (sx, sy) = ((one - x).sqrt(), (one - y).sqrt());
    (sy - sx) * 2.0 / ((x - y) * sx * sy)
}

/// `2/(√(−e^{−2ia}) + √(−e^{2ia})) − 1/sin a`, which vanishes for
/// `a ∈ (0, π)` with principal square roots.
pub fn euler_identity_check(a: f64) -> Complex64 {
    let minus = |theta: f64| -Complex64::from_polar(1.0, theta);
    let lhs = Complex64::new(2.0, 0.0) / (minus(-2.0 * a).sqrt() + minus(2.0 * a).sqrt());
    lhs - 1.0 / a.sin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::ell_k;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_arguments_give_one() {
        let call = LauricellaCall::real(0.5, &[0.5, 0.5, 0.5], 1.0, &[0.0, 0.0, 0.0]).unwrap();
        let v = fd_series(&call, 1e-14).unwrap();
        assert_eq!(v.value, c(1.0, 0.0));
        let f1 = appell_f1(0.7, 0.2, 1.3, 2.1, c(0.0, 0.0), c(0.0, 0.0), 1e-12).unwrap();
        assert_eq!(f1.value, c(1.0, 0.0));
    }

    #[test]
    fn series_and_integral_agree_inside_polydisc() {
        let call = LauricellaCall::real(0.5, &[0.5, 0.5, 0.5], 1.0, &[0.25, 0.1, 0.04]).unwrap();
        let s = fd_series(&call, 1e-14).unwrap();
        let i = fd_integral(&call, 1e-12).unwrap();
        assert!((s.value - i.value).norm() < 1e-12, "{} vs {}", s.value, i.value);
    }

    #[test]
    fn single_variable_collapse_is_complete_k() {
        for x in [0.1, 0.5, 0.9, 0.99] {
            let call = LauricellaCall::real(0.5, &[0.5, 0.5, 0.5], 1.0, &[x, 0.0, 0.0]).unwrap();
            let v = fd_integral(&call, 1e-12).unwrap().value.re;
            let expect = 2.0 / PI * ell_k(f64::sqrt(x)).unwrap();
            assert!((v - expect).abs() < 1e-12, "x={x}: {v} vs {expect}");
        }
    }

    #[test]
    fn three_halves_closed_form() {
        let (x, y) = (c(0.3, 0.0), c(0.1, 0.0));
        let v = appell_f1(1.5, 1.0, 1.0, 2.0, x, y, 1e-13).unwrap();
        assert!((v.value - appell_f1_three_halves(x, y)).norm() < 1e-12);
    }

    #[test]
    fn euler_identity() {
        assert!(euler_identity_check(FRAC_PI_2).norm() < 1e-15);
        assert!(euler_identity_check(0.3).norm() < 1e-13);
        assert!(euler_identity_check(1.0).norm() < 1e-13);
    }

    #[test]
    fn route_selection() {
        let inside = LauricellaCall::real(0.5, &[0.5, 0.5], 1.0, &[0.9, -0.5]).unwrap();
        assert_eq!(fd(&inside, 1e-12).unwrap().route, Route::Series);
        let outside = LauricellaCall::real(0.5, &[0.5, 0.5], 1.0, &[-3.0, 0.2]).unwrap();
        assert_eq!(fd(&outside, 1e-12).unwrap().route, Route::Integral);
    }

    #[test]
    fn series_rejects_arguments_outside_guard_band() {
        let call = LauricellaCall::real(0.5, &[0.5], 1.0, &[0.96]).unwrap();
        assert!(matches!(fd_series(&call, 1e-12), Err(Error::Domain(_))));
    }

    #[test]
    fn integral_validates_parameters() {
        let bad = LauricellaCall::real(1.0, &[0.5], 1.0, &[0.2]).unwrap();
        assert!(matches!(fd_integral(&bad, 1e-12), Err(Error::Domain(_))));
        let cut = LauricellaCall::real(0.5, &[0.5, 0.5], 1.0, &[1.5, 0.2]).unwrap();
        assert!(matches!(fd_integral(&cut, 1e-12), Err(Error::BranchCut { .. })));
        assert!(matches!(fd(&cut, 1e-12), Err(Error::BranchCut { .. })));
    }

    #[test]
    fn mismatched_lengths() {
        assert!(LauricellaCall::new(0.5, vec![0.5, 0.5], 1.0, vec![c(0.1, 0.0)]).is_err());
        assert!(LauricellaCall::new(0.5, vec![], 1.0, vec![]).is_err());
    }

    #[test]
    fn coincidence_of_three_halves_and_one_half() {
        let (a, b) = (1.2f64, 0.4f64);
        let z = |t: f64| Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, t);
        let x = vec![z(2.0 * a), z(-2.0 * a), z(2.0 * b), z(-2.0 * b)];
        let hi = fd(&LauricellaCall::new(1.5, vec![0.5; 4], 2.0, x.clone()).unwrap(), 1e-12).unwrap();
        let lo = fd(&LauricellaCall::new(0.5, vec![0.5; 4], 2.0, x).unwrap(), 1e-12).unwrap();
        assert!((hi.value - lo.value).norm() < 1e-10);
        assert!(hi.value.im.abs() < 1e-12);
    }

    #[test]
    fn near_boundary_series_is_capped_or_converges() {
        let call = LauricellaCall::real(0.5, &[0.5, 0.5, 0.5, 0.5], 1.0, &[0.95, 0.95, -0.95, 0.9]).unwrap();
        let s = fd_series(&call, 1e-13).unwrap();
        let i = fd_integral(&call, 1e-12).unwrap();
        assert!((s.value - i.value).norm() < 1e-10);
    }
}
