//! Gamma function.
//!
//! Lanczos approximation (g = 7, nine coefficients) with reflection below
//! one half. Positive integers and half-integers, which are the only
//! arguments the Lauricella prefactors ever see, are computed exactly by
//! the recurrence from Γ(1) = 1 and Γ(1/2) = √π.

use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest doubled argument handled by the exact half-integer recurrence.
const MAX_EXACT_TWICE: u32 = 340;

pub fn gamma(x: f64) -> f64 {
    if let Some(v) = gamma_half_integer(x) {
        return v;
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

/// Exact Γ(m/2) for positive integers m up to 340, `None` otherwise.
pub fn gamma_half_integer(x: f64) -> Option<f64> {
    let twice = 2.0 * x;
    if !(twice >= 1.0) || twice.fract() != 0.0 || twice > MAX_EXACT_TWICE as f64 {
        return None;
    }
    let twice = twice as u32;
    let (mut value, mut arg) = if twice % 2 == 0 {
        (1.0, 1.0)
    } else {
        (PI.sqrt(), 0.5)
    };
    while arg < x {
        value *= arg;
        arg += 1.0;
    }
    Some(value)
}

/// Γ(c) / (Γ(a) Γ(c − a)), the Euler-integral normalisation.
pub fn beta_normaliser(a: f64, c: f64) -> f64 {
    gamma(c) / (gamma(a) * gamma(c - a))
}
