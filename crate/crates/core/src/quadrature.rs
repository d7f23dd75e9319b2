//! Double-exponential quadrature.
//!
//! Finite intervals use the tanh-sinh map, half-lines `[a, ∞)` the exp-sinh
//! map. Each node hands the integrand an [`Abscissa`] carrying the distances
//! to both endpoints, computed directly from the transform rather than by
//! subtracting from a rounded `x`. An integrand such as `1/√(1 − x²)` written
//! as `1/√(to_right · (1 + x))` is then accurate all the way into the
//! endpoint, which is what lets inverse-square-root singularities converge
//! to full double precision without any change of variable.
//!
//! Levels halve the step size starting from `h = 1`; only the new odd nodes
//! are evaluated at each level. The estimate of a level is accepted once it
//! differs from the previous one by less than `tol` relative to its
//! magnitude (or by less than the rounding floor of the sum).

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-11;
pub const MAX_LEVELS: usize = 12;
pub const MIN_TOL: f64 = 1e-14;
pub const MAX_TOL: f64 = 1e-3;

/// Levels below this are never accepted; coarse sums can agree by accident.
const MIN_LEVEL: usize = 3;
/// Truncation of the tanh-sinh parameter; node distances reach ~1e-61·(b−a).
const TANH_SINH_TMAX: f64 = 4.5;
/// Truncation of the exp-sinh parameter; x spans roughly a + [1e-51, 1e50].
const EXP_SINH_TMAX: f64 = 5.0;

/// A quadrature node as seen by the integrand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Abscissa {
    pub x: f64,
    /// `x − a`, accurate even when it is far below the spacing of doubles at `a`.
    pub from_left: f64,
    /// `b − x`; infinite on a half-line.
    pub to_right: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainKind {
    Finite { a: f64, b: f64 },
    SemiInfinite { a: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationDomain {
    pub kind: DomainKind,
    /// The integrand may be unbounded at the left endpoint.
    pub singular_left: bool,
    /// The integrand may be unbounded at the right endpoint (finite only).
    pub singular_right: bool,
}

impl IntegrationDomain {
    pub fn finite(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || !(a < b) {
            return Err(Error::domain(format!("finite domain needs a < b, got [{a}, {b}]")));
        }
        Ok(Self {
            kind: DomainKind::Finite { a, b },
            singular_left: false,
            singular_right: false,
        })
    }

    pub fn semi_infinite(a: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::domain(format!("half-line needs a finite start, got {a}")));
        }
        Ok(Self {
            kind: DomainKind::SemiInfinite { a },
            singular_left: false,
            singular_right: false,
        })
    }

    pub fn with_singular_left(mut self) -> Self {
        self.singular_left = true;
        self
    }

    pub fn with_singular_right(mut self) -> Self {
        if matches!(self.kind, DomainKind::Finite { .. }) {
            self.singular_right = true;
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// One node of the transformed rule: abscissa, weight dx/dt, and which side
/// of the domain it leans towards (`-1` left, `1` right, `0` centre).
struct Node {
    at: Abscissa,
    weight: f64,
    side: i8,
}

fn tanh_sinh_node(a: f64, b: f64, t: f64) -> Node {
    let half = 0.5 * (b - a);
    let s = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * s.abs()).exp();
    let near = half * 2.0 * e / (1.0 + e);
    let far = half * 2.0 / (1.0 + e);
    let weight = half * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
    let (at, side) = if t > 0.0 {
        (
            Abscissa { x: b - near, from_left: far, to_right: near },
            1,
        )
    } else if t < 0.0 {
        (
            Abscissa { x: a + near, from_left: near, to_right: far },
            -1,
        )
    } else {
        (
            Abscissa { x: a + half, from_left: half, to_right: half },
            0,
        )
    };
    Node { at, weight, side }
}

fn exp_sinh_node(a: f64, t: f64) -> Node {
    let d = (FRAC_PI_2 * t.sinh()).exp();
    Node {
        at: Abscissa { x: a + d, from_left: d, to_right: f64::INFINITY },
        weight: FRAC_PI_2 * t.cosh() * d,
        side: if t < 0.0 { -1 } else { 1 },
    }
}

/// Integrates `f` over `domain` to relative tolerance `tol`.
pub fn integrate<F, T>(f: F, domain: &IntegrationDomain, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(Abscissa) -> T,
    T: Into<Complex64>,
{
    if !(MIN_TOL..=MAX_TOL).contains(&tol) {
        return Err(Error::domain(format!(
            "tolerance {tol:e} outside [{MIN_TOL:e}, {MAX_TOL:e}]"
        )));
    }
    let (tmax, node_at): (f64, Box<dyn Fn(f64) -> Node>) = match domain.kind {
        DomainKind::Finite { a, b } => (TANH_SINH_TMAX, Box::new(move |t| tanh_sinh_node(a, b, t))),
        DomainKind::SemiInfinite { a } => (EXP_SINH_TMAX, Box::new(move |t| exp_sinh_node(a, t))),
    };

    let mut sum = Complex64::new(0.0, 0.0);
    let mut l1 = 0.0;
    let mut evaluations = 0usize;
    let mut previous: Option<Complex64> = None;
    let mut last_difference = f64::INFINITY;

    for level in 0..=MAX_LEVELS {
        let h = 0.5f64.powi(level as i32);
        let kmax = (tmax / h).floor() as i64;
        let (first, stride) = if level == 0 { (0, 1) } else { (1, 2) };
        let mut k = first;
        while k <= kmax {
            let signs: &[f64] = if k == 0 { &[1.0] } else { &[1.0, -1.0] };
            for &sign in signs {
                let node = node_at(sign * k as f64 * h);
                if node.weight == 0.0 || !node.weight.is_finite() {
                    continue;
                }
                let value: Complex64 = f(node.at).into();
                evaluations += 1;
                if !(value.re.is_finite() && value.im.is_finite()) {
                    let tolerated = (node.side < 0 && domain.singular_left)
                        || (node.side > 0 && domain.singular_right);
                    if tolerated {
                        continue;
                    }
                    return Err(Error::domain(format!(
                        "integrand not finite at x = {} on a non-singular part of the domain",
                        node.at.x
                    )));
                }
                let term = value * node.weight;
                sum += term;
                l1 += term.norm();
            }
            k += stride;
        }

        let estimate = sum * h;
        let rounding_floor = 16.0 * f64::EPSILON * l1 * h;
        if let Some(prev) = previous {
            last_difference = (estimate - prev).norm();
            if level >= MIN_LEVEL
                && (last_difference <= tol * estimate.norm() || last_difference <= rounding_floor)
            {
                return Ok(QuadratureResult {
                    value: estimate,
                    error_estimate: last_difference.max(rounding_floor),
                    evaluations,
                });
            }
        }
        previous = Some(estimate);
    }
    Err(Error::NonConvergence { levels: MAX_LEVELS, last_difference })
}

/// [`integrate`] for integrands that only need the abscissa.
pub fn integrate_fn<F, T>(f: F, domain: &IntegrationDomain, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> T,
    T: Into<Complex64>,
{
    integrate(|p: Abscissa| f(p.x), domain, tol)
}

/// Rejects a Lauricella argument `x` for which `1 − x·u` meets the closed
/// negative real axis for some `u` in `[0, 1]`.
///
/// The image of `[0, 1]` is the segment from `1` to `1 − x`. Off the real
/// axis it touches the real line only at `u = 0`, so only real `x ≥ 1` is
/// excluded.
pub fn check_branch(x: Complex64) -> Result<()> {
    if !(x.re.is_finite() && x.im.is_finite()) {
        return Err(Error::domain(format!("non-finite argument {x}")));
    }
    if x.im == 0.0 && x.re >= 1.0 {
        return Err(Error::BranchCut { re: x.re, im: x.im });
    }
    Ok(())
}

/// `1 − x·u`, evaluated from whichever end of `[0, 1]` is closer so that
/// arguments near 1 keep their relative accuracy as `u → 1`.
#[inline]
pub(crate) fn one_minus_xu(x: Complex64, u: f64, one_minus_u: f64) -> Complex64 {
    if u <= 0.5 {
        Complex64::new(1.0, 0.0) - x * u
    } else {
        (Complex64::new(1.0, 0.0) - x) + x * one_minus_u
    }
}

/// `∫₀¹ u^{a−1} (1−u)^{c−a−1} ∏ (1 − x_i u)^{−b_i} du`, without the Gamma
/// normalisation.
pub fn integrate_complex_kernel(
    a: f64,
    c: f64,
    factors: &[(Complex64, f64)],
    tol: f64,
) -> Result<QuadratureResult> {
    if !(a > 0.0 && c > a) {
        return Err(Error::domain(format!("kernel needs c > a > 0, got a={a}, c={c}")));
    }
    for &(x, _) in factors {
        check_branch(x)?;
    }
    let mut domain = IntegrationDomain::finite(0.0, 1.0)?;
    if a < 1.0 {
        domain = domain.with_singular_left();
    }
    if c - a < 1.0 {
        domain = domain.with_singular_right();
    }
    integrate(
        |p: Abscissa| {
            let u = p.from_left;
            let v = p.to_right;
            let mut value = Complex64::new(u.powf(a - 1.0) * v.powf(c - a - 1.0), 0.0);
            for &(x, b) in factors {
                value *= one_minus_xu(x, u, v).powf(-b);
            }
            value
        },
        &domain,
        tol,
    )
}
