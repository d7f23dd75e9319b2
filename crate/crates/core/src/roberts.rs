//! Hyperelliptic integrals over the reciprocal octic
//!
//! ```text
//! P(x) = x⁸ − p x⁶ + q x⁴ − p x² + 1,      R_n = ∫ xⁿ / √P(x) dx,   n ∈ {0, 2, 4}
//! ```
//!
//! `P` is palindromic, so its roots come in quadruples `±r, ±1/r`. Three
//! root configurations are modelled, each fixed by two generators:
//!
//! * [`RootConfig::EightReal`]: roots `±a, ±1/a, ±b, ±1/b` with `1 < a < b`;
//! * [`RootConfig::MixedRoots`]: `±b, ±1/b` and `±e^{±iα}`;
//! * [`RootConfig::AllComplex`]: `±e^{±iα}, ±e^{±iβ}`.
//!
//! Each admissible `(n, interval)` pair is evaluated three independent ways:
//! direct quadrature, the elliptic closed form reached through the
//! substitution `u = x + 1/x`, and the Lauricella closed form obtained by
//! mapping the interval onto `[0, 1]`.

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

use crate::elliptic::{ell_e, ell_k};
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::lauricella::{fd, LauricellaCall};
use crate::quadrature::{integrate, Abscissa, IntegrationDomain, DEFAULT_TOL};

/// Generators closer than this to a degeneracy set `reduced_accuracy`.
pub const DEGENERACY_MARGIN: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootConfig {
    EightReal { a: f64, b: f64 },
    MixedRoots { alpha: f64, b: f64 },
    AllComplex { alpha: f64, beta: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalTag {
    ZeroToInvB,
    InvAToA,
    BToInf,
    ZeroToInf,
}

impl IntervalTag {
    pub const ALL: [IntervalTag; 4] = [
        IntervalTag::ZeroToInvB,
        IntervalTag::InvAToA,
        IntervalTag::BToInf,
        IntervalTag::ZeroToInf,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IntervalTag::ZeroToInvB => "[0,1/b]",
            IntervalTag::InvAToA => "[1/a,a]",
            IntervalTag::BToInf => "[b,inf)",
            IntervalTag::ZeroToInf => "[0,inf)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionRoute {
    Quadrature,
    Elliptic,
    Lauricella,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionResult {
    pub value: f64,
    pub route: ReductionRoute,
    /// Elliptic route: additive terms. Lauricella route: `prefactor` and
    /// `F_D` (real part), multiplied. Quadrature: the integral itself.
    pub parts: Vec<(&'static str, f64)>,
    pub error_estimate: f64,
    pub reduced_accuracy: bool,
}

impl ReductionResult {
    /// Rebuilds the value from `parts` according to the route.
    pub fn recombined(&self) -> f64 {
        match self.route {
            ReductionRoute::Elliptic => self.parts.iter().map(|(_, v)| v).sum(),
            ReductionRoute::Lauricella => self
                .parts
                .iter()
                .filter(|(name, _)| *name != "F_D.im")
                .map(|(_, v)| v)
                .product(),
            ReductionRoute::Quadrature => self.parts[0].1,
        }
    }
}

/// A validated octic with its coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OcticSpec {
    config: RootConfig,
    p: f64,
    q: f64,
}

pub fn build_octic(config: RootConfig) -> Result<OcticSpec> {
    let finite = |v: &[f64]| v.iter().all(|x| x.is_finite());
    let (p, q) = match config {
        RootConfig::EightReal { a, b } => {
            if !finite(&[a, b]) || !(1.0 < a && a < b) {
                return Err(Error::domain(format!("eight real roots need 1 < a < b, got a={a}, b={b}")));
            }
            let (a2, b2) = (a * a, b * b);
            let p = (a2 + b2) * (1.0 + a2 * b2) / (a2 * b2);
            let q = (1.0 + a2 * a2 * b2 * b2 + (a2 + b2) * (a2 + b2)) / (a2 * b2);
            (p, q)
        }
        RootConfig::MixedRoots { alpha, b } => {
            if !finite(&[alpha, b]) || !(b > 1.0) {
                return Err(Error::domain(format!("mixed roots need b > 1, got b={b}")));
            }
            if alpha.sin() == 0.0 {
                return Err(Error::domain("mixed roots need e^{iα} off the real axis"));
            }
            let s = b * b + 1.0 / (b * b);
            let c2 = (2.0 * alpha).cos();
            (2.0 * c2 + s, 2.0 + 2.0 * c2 * s)
        }
        RootConfig::AllComplex { alpha, beta } => {
            if !finite(&[alpha, beta]) {
                return Err(Error::domain("non-finite angle"));
            }
            if alpha.sin() == 0.0 || beta.sin() == 0.0 {
                return Err(Error::domain("complex roots need both angles off multiples of π"));
            }
            let (ca, cb) = ((2.0 * alpha).cos(), (2.0 * beta).cos());
            (2.0 * (ca + cb), 2.0 + 4.0 * ca * cb)
        }
    };
    Ok(OcticSpec { config, p, q })
}

impl OcticSpec {
    pub fn config(&self) -> RootConfig {
        self.config
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Coefficients in ascending powers, `x⁰ … x⁸`.
    pub fn coefficients(&self) -> [f64; 9] {
        [1.0, 0.0, -self.p, 0.0, self.q, 0.0, -self.p, 0.0, 1.0]
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coefficients()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    /// Coefficients `(c₂, c₀)` of the auxiliary quartic `u⁴ − c₂u² + c₀`
    /// satisfied by `u = x + 1/x`.
    pub fn auxiliary_quartic(&self) -> (f64, f64) {
        (self.p + 4.0, 2.0 * self.p + self.q + 2.0)
    }

    /// All eight roots, recovered from the auxiliary quartic and `u = x + 1/x`.
    pub fn roots(&self) -> Vec<Complex64> {
        let (c2, c0) = self.auxiliary_quartic();
        let disc = Complex64::new(c2 * c2 - 4.0 * c0, 0.0).sqrt();
        let mut out = Vec::with_capacity(8);
        for big_u in [(c2 + disc) / 2.0, (c2 - disc) / 2.0] {
            for u in [big_u.sqrt(), -big_u.sqrt()] {
                let r = (u * u - 4.0).sqrt();
                out.push((u + r) / 2.0);
                out.push((u - r) / 2.0);
            }
        }
        out
    }

    fn positive_real_roots(&self) -> Vec<f64> {
        match self.config {
            RootConfig::EightReal { a, b } => vec![1.0 / b, 1.0 / a, a, b],
            RootConfig::MixedRoots { b, .. } => vec![1.0 / b, b],
            RootConfig::AllComplex { .. } => vec![],
        }
    }

    /// Angles θ of the unit-circle quadratic factors `x⁴ − 2cos2θ x² + 1`.
    fn circle_angles(&self) -> Vec<f64> {
        match self.config {
            RootConfig::EightReal { .. } => vec![],
            RootConfig::MixedRoots { alpha, .. } => vec![alpha],
            RootConfig::AllComplex { alpha, beta } => vec![alpha, beta],
        }
    }

    fn near_degenerate(&self) -> bool {
        match self.config {
            RootConfig::EightReal { a, b } => a - 1.0 < DEGENERACY_MARGIN || b - a < DEGENERACY_MARGIN,
            RootConfig::MixedRoots { alpha, b } => {
                b - 1.0 < DEGENERACY_MARGIN || alpha.sin().abs() < DEGENERACY_MARGIN
            }
            RootConfig::AllComplex { alpha, beta } => {
                let (sa, sb) = (alpha.sin().abs(), beta.sin().abs());
                (sa - sb).abs() < DEGENERACY_MARGIN || sa.min(sb) < DEGENERACY_MARGIN
            }
        }
    }

    /// Every `(n, interval)` pair with a finite integral for this configuration.
    pub fn admissible(&self) -> Vec<(u32, IntervalTag)> {
        let mut out = Vec::new();
        for n in [0, 2, 4] {
            for tag in IntervalTag::ALL {
                if bounds(self, n, tag).is_ok() {
                    out.push((n, tag));
                }
            }
        }
        out
    }
}

/// Integration limits `(left, right)`, `right = None` for `∞`.
fn bounds(spec: &OcticSpec, n: u32, interval: IntervalTag) -> Result<(f64, Option<f64>)> {
    if !matches!(n, 0 | 2 | 4) {
        return Err(Error::UnsupportedCombination(format!("power n = {n}")));
    }
    let limits = match (spec.config, interval) {
        (RootConfig::EightReal { b, .. }, IntervalTag::ZeroToInvB) => (0.0, Some(1.0 / b)),
        (RootConfig::EightReal { a, .. }, IntervalTag::InvAToA) => (1.0 / a, Some(a)),
        (RootConfig::EightReal { b, .. }, IntervalTag::BToInf) => (b, None),
        (RootConfig::MixedRoots { b, .. }, IntervalTag::ZeroToInvB) => (0.0, Some(1.0 / b)),
        (RootConfig::MixedRoots { b, .. }, IntervalTag::BToInf) => (b, None),
        (RootConfig::AllComplex { .. }, IntervalTag::ZeroToInf) => (0.0, None),
        (config, tag) => {
            return Err(Error::UnsupportedCombination(format!(
                "interval {} for {config:?}",
                tag.label()
            )))
        }
    };
    if n == 4 && limits.1.is_none() {
        return Err(Error::DivergentIntegral(format!(
            "x^4/sqrt(P) is not integrable on {}",
            interval.label()
        )));
    }
    Ok(limits)
}

/// Direct double-exponential integration of `xⁿ/√P(x)`.
pub fn rn_quadrature(spec: &OcticSpec, n: u32, interval: IntervalTag, tol: f64) -> Result<ReductionResult> {
    let (left, right) = bounds(spec, n, interval)?;
    let roots = spec.positive_real_roots();
    let angles: Vec<(f64, f64)> = spec
        .circle_angles()
        .iter()
        .map(|t| ((2.0 * t).cos(), (2.0 * t).sin()))
        .collect();

    let mut domain = match right {
        Some(r) => IntegrationDomain::finite(left, r)?.with_singular_right(),
        None => IntegrationDomain::semi_infinite(left)?,
    };
    if left > 0.0 {
        domain = domain.with_singular_left();
    }

    let integrand = |p: Abscissa| {
        let x = p.x;
        let mut abs_p = 1.0;
        for &r in &roots {
            let gap = if r == left {
                p.from_left
            } else if Some(r) == right {
                p.to_right
            } else {
                (x - r).abs()
            };
            abs_p *= gap * (x + r);
        }
        for &(c2, s2) in &angles {
            let y = x * x - c2;
            abs_p *= y * y + s2 * s2;
        }
        x.powi(n as i32) / abs_p.sqrt()
    };
    let r = integrate(integrand, &domain, tol)?;
    Ok(finish(
        spec,
        r.value.re,
        ReductionRoute::Quadrature,
        vec![("integral", r.value.re)],
        r.error_estimate,
    ))
}

fn finish(
    spec: &OcticSpec,
    value: f64,
    route: ReductionRoute,
    parts: Vec<(&'static str, f64)>,
    error_estimate: f64,
) -> ReductionResult {
    let reduced_accuracy = spec.near_degenerate();
    let error_estimate = if reduced_accuracy {
        error_estimate.max(f64::EPSILON.sqrt() * value.abs())
    } else {
        error_estimate
    };
    ReductionResult { value, route, parts, error_estimate, reduced_accuracy }
}

fn checked_modulus(k: f64, context: &'static str) -> Result<f64> {
    if (0.0..1.0).contains(&k) {
        Ok(k)
    } else {
        Err(Error::ModulusOutOfRange { k, context })
    }
}

type Terms = Vec<(&'static str, f64)>;

/// One elliptic closed form: which integral it evaluates and how.
struct ClosedForm {
    config: ConfigKind,
    n: u32,
    interval: IntervalTag,
    eval: fn(&RootConfig) -> Result<Terms>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ConfigKind {
    EightReal,
    MixedRoots,
    AllComplex,
}

impl From<RootConfig> for ConfigKind {
    fn from(c: RootConfig) -> Self {
        match c {
            RootConfig::EightReal { .. } => ConfigKind::EightReal,
            RootConfig::MixedRoots { .. } => ConfigKind::MixedRoots,
            RootConfig::AllComplex { .. } => ConfigKind::AllComplex,
        }
    }
}

/// Moduli `k₁ = b(a²−1)/(a(b²−1))` and `k₂ = b(a²+1)/(a(b²+1))`.
pub fn eight_real_moduli(a: f64, b: f64) -> Result<(f64, f64)> {
    let k1 = b * (a * a - 1.0) / (a * (b * b - 1.0));
    let k2 = b * (a * a + 1.0) / (a * (b * b + 1.0));
    Ok((checked_modulus(k1, "k1 = b(a²−1)/(a(b²−1))")?, checked_modulus(k2, "k2 = b(a²+1)/(a(b²+1))")?))
}

/// `(D, k_c, k_s)` with `D = √(1 − 2b²cos2α + b⁴)`, `k_c = 2b|cos α|/(1+b²)`,
/// `k_s = 2b|sin α|/D`.
pub fn mixed_moduli(alpha: f64, b: f64) -> Result<(f64, f64, f64)> {
    let d = (1.0 - 2.0 * b * b * (2.0 * alpha).cos() + b.powi(4)).sqrt();
    let kc = 2.0 * b * alpha.cos().abs() / (1.0 + b * b);
    let ks = 2.0 * b * alpha.sin().abs() / d;
    Ok((d, checked_modulus(kc, "2b cos α/(1+b²)")?, checked_modulus(ks, "2b sin α/D")?))
}

/// `(sin α, k)` for the all-complex case, with the larger |sine| first:
/// `k = √(sin²α − sin²β)/sin α`.
pub fn all_complex_modulus(alpha: f64, beta: f64) -> Result<(f64, f64)> {
    let (x, y) = (alpha.sin().abs(), beta.sin().abs());
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    let k = ((hi - lo) * (hi + lo)).sqrt() / hi;
    Ok((hi, checked_modulus(k, "√(sin²α − sin²β)/sin α")?))
}

fn eight_real_generators(c: &RootConfig) -> (f64, f64) {
    match *c {
        RootConfig::EightReal { a, b } => (a, b),
        _ => unreachable!("closed form dispatched on the wrong configuration"),
    }
}

fn mixed_generators(c: &RootConfig) -> (f64, f64) {
    match *c {
        RootConfig::MixedRoots { alpha, b } => (alpha, b),
        _ => unreachable!("closed form dispatched on the wrong configuration"),
    }
}

fn all_complex_r0(c: &RootConfig) -> Result<Terms> {
    let (alpha, beta) = match *c {
        RootConfig::AllComplex { alpha, beta } => (alpha, beta),
        _ => unreachable!("closed form dispatched on the wrong configuration"),
    };
    let (s, k) = all_complex_modulus(alpha, beta)?;
    Ok(vec![("K/(2 sin a)", ell_k(k)? / (2.0 * s))])
}

fn eight_zero_inv_b_r0(c: &RootConfig) -> Result<Terms> {
    let (a, b) = eight_real_generators(c);
    let (k1, k2) = eight_real_moduli(a, b)?;
    let b2 = b * b;
    Ok(vec![
        ("b/(2(b²+1)) K(k2)", 0.5 * b / (b2 + 1.0) * ell_k(k2)?),
        ("b/(2(b²−1)) K(k1)", 0.5 * b / (b2 - 1.0) * ell_k(k1)?),
    ])
}

fn eight_inv_a_a_r0(c: &RootConfig) -> Result<Terms> {
    let (a, b) = eight_real_generators(c);
    let (k1, _) = eight_real_moduli(a, b)?;
    Ok(vec![("b/(b²−1) K(k1)", b / (b * b - 1.0) * ell_k(k1)?)])
}

fn eight_b_inf_r0(c: &RootConfig) -> Result<Terms> {
    let (a, b) = eight_real_generators(c);
    let (k1, k2) = eight_real_moduli(a, b)?;
    let b2 = b * b;
    Ok(vec![
        ("b/(2(b²−1)) K(k1)", 0.5 * b / (b2 - 1.0) * ell_k(k1)?),
        ("−b/(2(b²+1)) K(k2)", -0.5 * b / (b2 + 1.0) * ell_k(k2)?),
    ])
}

// x ↦ 1/x swaps R₂ on [0,1/b] with R₀ on [b,∞).
fn eight_zero_inv_b_r2(c: &RootConfig) -> Result<Terms> {
    eight_b_inf_r0(c)
}

fn eight_b_inf_r2(c: &RootConfig) -> Result<Terms> {
    let (a, b) = eight_real_generators(c);
    let (k1, k2) = eight_real_moduli(a, b)?;
    let b2 = b * b;
    Ok(vec![
        ("b/(2(b²−1)) K(k1)", 0.5 * b / (b2 - 1.0) * ell_k(k1)?),
        ("b/(2(b²+1)) K(k2)", 0.5 * b / (b2 + 1.0) * ell_k(k2)?),
    ])
}

/// The `𝕂 + 𝔼` combination divided by `2b`.
fn eight_zero_inv_b_r4(c: &RootConfig) -> Result<Terms> {
    let (a, b) = eight_real_generators(c);
    let (k1, k2) = eight_real_moduli(a, b)?;
    let (b2, b4) = (b * b, b.powi(4));
    let scale = 0.5 / b;
    Ok(vec![
        ("(b⁴−b²+1)/(b²−1) K(k1)/(2b)", scale * (b4 - b2 + 1.0) / (b2 - 1.0) * ell_k(k1)?),
        ("−(b⁴+b²+1)/(b²+1) K(k2)/(2b)", -scale * (b4 + b2 + 1.0) / (b2 + 1.0) * ell_k(k2)?),
        ("(1−b²) E(k1)/(2b)", scale * (1.0 - b2) * ell_e(k1)?),
        ("(1+b²) E(k2)/(2b)", scale * (1.0 + b2) * ell_e(k2)?),
    ])
}

fn eight_inv_a_a_r4(c: &RootConfig) -> Result<Terms> {
    let (a, b) = eight_real_generators(c);
    let (k1, _) = eight_real_moduli(a, b)?;
    let b2 = b * b;
    let scale = 1.0 / (b * (b2 - 1.0));
    Ok(vec![
        ("(1−b²+b⁴) K(k1)/(b(b²−1))", scale * (1.0 - b2 + b2 * b2) * ell_k(k1)?),
        ("−(b²−1)² E(k1)/(b(b²−1))", -scale * (b2 - 1.0).powi(2) * ell_e(k1)?),
    ])
}

fn mixed_terms(c: &RootConfig, sign_c: f64, sign_s: f64) -> Result<Terms> {
    let (alpha, b) = mixed_generators(c);
    let (d, kc, ks) = mixed_moduli(alpha, b)?;
    Ok(vec![
        ("±b/(2(1+b²)) K(kc)", sign_c * 0.5 * b / (1.0 + b * b) * ell_k(kc)?),
        ("±b/(2D) K(ks)", sign_s * 0.5 * b / d * ell_k(ks)?),
    ])
}

fn mixed_zero_inv_b_r0(c: &RootConfig) -> Result<Terms> {
    mixed_terms(c, 1.0, 1.0)
}

fn mixed_b_inf_r0(c: &RootConfig) -> Result<Terms> {
    mixed_terms(c, -1.0, 1.0)
}

fn mixed_zero_inv_b_r2(c: &RootConfig) -> Result<Terms> {
    mixed_terms(c, -1.0, 1.0)
}

fn mixed_b_inf_r2(c: &RootConfig) -> Result<Terms> {
    mixed_terms(c, 1.0, 1.0)
}

fn mixed_zero_inv_b_r4(c: &RootConfig) -> Result<Terms> {
    let (alpha, b) = mixed_generators(c);
    let (d, kc, ks) = mixed_moduli(alpha, b)?;
    let (b2, b4) = (b * b, b.powi(4));
    let scale = 0.5 / b;
    Ok(vec![
        ("(1+b²) E1/(2b)", scale * (1.0 + b2) * ell_e(kc)?),
        ("−(b⁴+b²+1)/(1+b²) K1/(2b)", -scale * (b4 + b2 + 1.0) / (1.0 + b2) * ell_k(kc)?),
        ("(b⁴−b²+1)/D K2/(2b)", scale * (b4 - b2 + 1.0) / d * ell_k(ks)?),
        ("−D E2/(2b)", -scale * d * ell_e(ks)?),
    ])
}

/// One entry per closed form; lookups are by `(configuration, n, interval)`.
static CLOSED_FORMS: &[ClosedForm] = &[
    ClosedForm { config: ConfigKind::EightReal, n: 0, interval: IntervalTag::ZeroToInvB, eval: eight_zero_inv_b_r0 },
    ClosedForm { config: ConfigKind::EightReal, n: 0, interval: IntervalTag::InvAToA, eval: eight_inv_a_a_r0 },
    ClosedForm { config: ConfigKind::EightReal, n: 0, interval: IntervalTag::BToInf, eval: eight_b_inf_r0 },
    ClosedForm { config: ConfigKind::EightReal, n: 2, interval: IntervalTag::ZeroToInvB, eval: eight_zero_inv_b_r2 },
    // R₂ and R₀ coincide on [1/a, a].
    ClosedForm { config: ConfigKind::EightReal, n: 2, interval: IntervalTag::InvAToA, eval: eight_inv_a_a_r0 },
    ClosedForm { config: ConfigKind::EightReal, n: 2, interval: IntervalTag::BToInf, eval: eight_b_inf_r2 },
    ClosedForm { config: ConfigKind::EightReal, n: 4, interval: IntervalTag::ZeroToInvB, eval: eight_zero_inv_b_r4 },
    ClosedForm { config: ConfigKind::EightReal, n: 4, interval: IntervalTag::InvAToA, eval: eight_inv_a_a_r4 },
    ClosedForm { config: ConfigKind::MixedRoots, n: 0, interval: IntervalTag::ZeroToInvB, eval: mixed_zero_inv_b_r0 },
    ClosedForm { config: ConfigKind::MixedRoots, n: 0, interval: IntervalTag::BToInf, eval: mixed_b_inf_r0 },
    ClosedForm { config: ConfigKind::MixedRoots, n: 2, interval: IntervalTag::ZeroToInvB, eval: mixed_zero_inv_b_r2 },
    ClosedForm { config: ConfigKind::MixedRoots, n: 2, interval: IntervalTag::BToInf, eval: mixed_b_inf_r2 },
    ClosedForm { config: ConfigKind::MixedRoots, n: 4, interval: IntervalTag::ZeroToInvB, eval: mixed_zero_inv_b_r4 },
    ClosedForm { config: ConfigKind::AllComplex, n: 0, interval: IntervalTag::ZeroToInf, eval: all_complex_r0 },
    // R₂ = R₀ on [0, ∞) by x ↦ 1/x.
    ClosedForm { config: ConfigKind::AllComplex, n: 2, interval: IntervalTag::ZeroToInf, eval: all_complex_r0 },
];

/// Evaluates the elliptic closed form for `(n, interval)`.
pub fn rn_elliptic(spec: &OcticSpec, n: u32, interval: IntervalTag) -> Result<ReductionResult> {
    bounds(spec, n, interval)?;
    let kind = ConfigKind::from(spec.config);
    let form = CLOSED_FORMS
        .iter()
        .find(|f| f.config == kind && f.n == n && f.interval == interval)
        .ok_or_else(|| {
            Error::UnsupportedCombination(format!("R_{n} on {} for {:?}", interval.label(), kind))
        })?;
    let parts = (form.eval)(&spec.config)?;
    let value: f64 = parts.iter().map(|(_, v)| v).sum();
    let magnitude: f64 = parts.iter().map(|(_, v)| v.abs()).sum();
    Ok(finish(spec, value, ReductionRoute::Elliptic, parts, 8.0 * f64::EPSILON * magnitude))
}

/// `√π Γ(p)/Γ(q)`
fn sqrt_pi_gamma_ratio(p: f64, q: f64) -> f64 {
    PI.sqrt() * gamma(p) / gamma(q)
}

/// `∫₀^{r₁} xˢ/√∏(x²−rᵢ²)` for real `0 < r₁ < r₂ < r₃ < r₄` (substitution `x = r₁√u`).
fn real_left(r: [f64; 4], s: f64) -> Result<(f64, LauricellaCall)> {
    let pre = r[0].powf(s) / (2.0 * r[1] * r[2] * r[3]) * sqrt_pi_gamma_ratio((s + 1.0) / 2.0, (s + 2.0) / 2.0);
    let x = [r[0] / r[1], r[0] / r[2], r[0] / r[3]].map(|t| t * t);
    Ok((pre, LauricellaCall::real((1.0 + s) / 2.0, &[0.5; 3], (s + 2.0) / 2.0, &x)?))
}

/// `∫_{r₂}^{r₃}` (substitution `x² = r₂² + (r₃²−r₂²)u`).
fn real_middle(r: [f64; 4], s: f64) -> Result<(f64, LauricellaCall)> {
    let [r1, r2, r3, r4] = r.map(|t| t * t);
    let pre = PI * r[1].powf(s - 1.0) / (2.0 * ((r2 - r1) * (r4 - r2)).sqrt());
    let w = r3 - r2;
    let x = [-w / r2, -w / (r2 - r1), w / (r4 - r2)];
    Ok((pre, LauricellaCall::real(0.5, &[(1.0 - s) / 2.0, 0.5, 0.5], 1.0, &x)?))
}

/// `∫_{r₄}^∞` (substitution `x = r₄/√(1−u)`).
fn real_right(r: [f64; 4], s: f64) -> Result<(f64, LauricellaCall)> {
    let [r1, r2, r3, r4] = r.map(|t| t * t);
    let pre = r[3].powf(s) / (2.0 * ((r4 - r1) * (r4 - r2) * (r4 - r3)).sqrt())
        * sqrt_pi_gamma_ratio((3.0 - s) / 2.0, 2.0 - s / 2.0);
    let x = [r1 / (r1 - r4), r2 / (r2 - r4), r3 / (r3 - r4)];
    Ok((pre, LauricellaCall::real(0.5, &[0.5; 3], (4.0 - s) / 2.0, &x)?))
}

/// `∫₀^{r₁} xˢ/√((x²−r₁²)(x²−r₂²)(x²−z²)(x²−z̄²))`, `0 < r₁ < r₂`, `z ∉ ℝ`.
fn mixed_left(r1: f64, r2: f64, z: Complex64, s: f64) -> Result<(f64, LauricellaCall)> {
    let pre = r1.powf(s) / (2.0 * r2 * z.norm_sqr()) * sqrt_pi_gamma_ratio((s + 1.0) / 2.0, (s + 2.0) / 2.0);
    let (z2, r1s) = (z * z, Complex64::new(r1 * r1, 0.0));
    let x = vec![Complex64::new((r1 / r2).powi(2), 0.0), r1s / z2, r1s / z2.conj()];
    Ok((pre, LauricellaCall::new((s + 1.0) / 2.0, vec![0.5; 3], (s + 2.0) / 2.0, x)?))
}

/// `∫_{r₂}^∞` of the same integrand.
fn mixed_right(r1: f64, r2: f64, z: Complex64, s: f64) -> Result<(f64, LauricellaCall)> {
    let (r1s, r2s) = (r1 * r1, r2 * r2);
    let z2 = z * z;
    let gap = Complex64::new(r2s, 0.0) - z2;
    let pre = r2.powf(s) / (2.0 * ((r2s - r1s) * gap.norm_sqr()).sqrt())
        * sqrt_pi_gamma_ratio(1.5 - s / 2.0, 2.0 - s / 2.0);
    let x = vec![Complex64::new(-r1s / (r2s - r1s), 0.0), -z2 / gap, -z2.conj() / gap.conj()];
    Ok((pre, LauricellaCall::new(0.5, vec![0.5; 3], (4.0 - s) / 2.0, x)?))
}

/// `∫₀^∞ xˢ/√((x²−z₁²)(x²−z̄₁²)(x²−z₂²)(x²−z̄₂²))` (substitution `x² = (1−u)/u`).
fn complex_half_line(z1: Complex64, z2: Complex64, s: f64) -> Result<(f64, LauricellaCall)> {
    let a = (3.0 - s) / 2.0;
    let pre = 0.5 * gamma(a) * gamma(2.0 - a) / gamma(2.0);
    let one = Complex64::new(1.0, 0.0);
    let x = vec![one + z1 * z1, one + (z1 * z1).conj(), one + z2 * z2, one + (z2 * z2).conj()];
    Ok((pre, LauricellaCall::new(a, vec![0.5; 4], 2.0, x)?))
}

/// Maps `(n, interval)` onto the matching Lauricella representation.
pub fn lauricella_representation(spec: &OcticSpec, n: u32, interval: IntervalTag) -> Result<(f64, LauricellaCall)> {
    bounds(spec, n, interval)?;
    let s = n as f64;
    match (spec.config, interval) {
        (RootConfig::EightReal { a, b }, tag) => {
            let roots = [1.0 / b, 1.0 / a, a, b];
            match tag {
                IntervalTag::ZeroToInvB => real_left(roots, s),
                IntervalTag::InvAToA => real_middle(roots, s),
                IntervalTag::BToInf => real_right(roots, s),
                IntervalTag::ZeroToInf => unreachable!("rejected by bounds"),
            }
        }
        (RootConfig::MixedRoots { alpha, b }, tag) => {
            let z = Complex64::from_polar(1.0, alpha);
            match tag {
                IntervalTag::ZeroToInvB => mixed_left(1.0 / b, b, z, s),
                IntervalTag::BToInf => mixed_right(1.0 / b, b, z, s),
                _ => unreachable!("rejected by bounds"),
            }
        }
        (RootConfig::AllComplex { alpha, beta }, _) => {
            complex_half_line(Complex64::from_polar(1.0, alpha), Complex64::from_polar(1.0, beta), s)
        }
    }
}

/// Evaluates `(n, interval)` through its Lauricella representation.
pub fn rn_lauricella(spec: &OcticSpec, n: u32, interval: IntervalTag, tol: f64) -> Result<ReductionResult> {
    let (prefactor, call) = lauricella_representation(spec, n, interval)?;
    let f = fd(&call, tol)?;
    let value = prefactor * f.value.re;
    let error = prefactor.abs() * (f.error_estimate + f.value.im.abs());
    Ok(finish(
        spec,
        value,
        ReductionRoute::Lauricella,
        vec![("prefactor", prefactor), ("F_D", f.value.re), ("F_D.im", f.value.im)],
        error,
    ))
}

/// [`rn_lauricella`] at the default tolerance.
pub fn rn_lauricella_default(spec: &OcticSpec, n: u32, interval: IntervalTag) -> Result<ReductionResult> {
    rn_lauricella(spec, n, interval, DEFAULT_TOL)
}
