//! Legendre elliptic integrals in the modulus convention.
//!
//! Every function here takes the modulus `k`, not the parameter `m = k²`:
//!
//! ```text
//! K(k) = ∫₀^{π/2} dθ / √(1 − k² sin²θ)
//! E(k) = ∫₀^{π/2} √(1 − k² sin²θ) dθ
//! ```
//!
//! Complete integrals come from the arithmetic-geometric mean; incomplete
//! ones from Carlson's duplication algorithm for R_F and R_D.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Elliptic modulus, `0 ≤ k < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Modulus(f64);

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        if (0.0..1.0).contains(&k) {
            Ok(Self(k))
        } else {
            Err(Error::domain(format!("modulus must lie in [0, 1), got {k}")))
        }
    }

    pub fn k(self) -> f64 {
        self.0
    }

    /// Complementary modulus `√(1 − k²)`, formed as `√((1 − k)(1 + k))`.
    pub fn complement(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }
}

/// Amplitude `φ ∈ [0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Amplitude(f64);

impl Amplitude {
    pub fn new(phi: f64) -> Result<Self> {
        if (0.0..=FRAC_PI_2).contains(&phi) {
            Ok(Self(phi))
        } else {
            Err(Error::domain(format!("amplitude must lie in [0, π/2], got {phi}")))
        }
    }

    pub fn phi(self) -> f64 {
        self.0
    }
}

const AGM_MAX_ITER: usize = 40;

/// Runs the AGM from `(1, k′)`, returning the mean and `Σ 2^{n−1} c_n²`.
fn agm(k: f64, k_prime: f64) -> (f64, f64) {
    let mut a = 1.0;
    let mut b = k_prime;
    let mut c = k;
    let mut weight = 0.5;
    let mut sum = weight * c * c;
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let next_a = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = (a * b).sqrt();
        a = next_a;
        weight *= 2.0;
        sum += weight * c * c;
    }
    (a, sum)
}

/// Complete integral of the first kind.
pub fn ell_k(k: f64) -> Result<f64> {
    let m = Modulus::new(k)?;
    let (mean, _) = agm(m.k(), m.complement());
    Ok(FRAC_PI_2 / mean)
}

/// Complete integral of the second kind; `k = 1` is allowed and gives 1.
pub fn ell_e(k: f64) -> Result<f64> {
    if k == 1.0 {
        return Ok(1.0);
    }
    let m = Modulus::new(k)?;
    let (mean, sum) = agm(m.k(), m.complement());
    Ok(FRAC_PI_2 / mean * (1.0 - sum))
}

/// Incomplete integral of the first kind `F(φ, k)`.
pub fn ell_f(phi: f64, k: f64) -> Result<f64> {
    let phi = Amplitude::new(phi)?;
    let m = Modulus::new(k)?;
    if phi.phi() == FRAC_PI_2 {
        return ell_k(k);
    }
    let (s, c) = phi.phi().sin_cos();
    let ks = m.k() * s;
    carlson_rf(c * c, (1.0 - ks) * (1.0 + ks), 1.0).map(|rf| s * rf)
}

/// Incomplete integral of the second kind `E(φ, k)`.
pub fn ell_e_inc(phi: f64, k: f64) -> Result<f64> {
    let phi = Amplitude::new(phi)?;
    let m = Modulus::new(k)?;
    if phi.phi() == FRAC_PI_2 {
        return ell_e(k);
    }
    let (s, c) = phi.phi().sin_cos();
    let ks = m.k() * s;
    let y = (1.0 - ks) * (1.0 + ks);
    let rf = carlson_rf(c * c, y, 1.0)?;
    let rd = carlson_rd(c * c, y, 1.0)?;
    Ok(s * rf - ks * ks * s / 3.0 * rd)
}

const CARLSON_MAX_ITER: usize = 64;

/// Carlson's symmetric `R_F(x, y, z)`; at most one argument may be zero.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64> {
    if x < 0.0 || y < 0.0 || z < 0.0 || [x + y, y + z, x + z].iter().any(|&s| s == 0.0) {
        return Err(Error::domain(format!("R_F({x}, {y}, {z}) undefined")));
    }
    let (mut x, mut y, mut z) = (x, y, z);
    for _ in 0..CARLSON_MAX_ITER {
        let mean = (x + y + z) / 3.0;
        let dx = 1.0 - x / mean;
        let dy = 1.0 - y / mean;
        let dz = 1.0 - z / mean;
        if dx.abs().max(dy.abs()).max(dz.abs()) < 1e-4 {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
            return Ok(series / mean.sqrt());
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    Err(Error::domain("R_F duplication did not settle"))
}

/// Carlson's `R_D(x, y, z)`; `z > 0` and `x + y > 0`.
pub fn carlson_rd(x: f64, y: f64, z: f64) -> Result<f64> {
    if x < 0.0 || y < 0.0 || !(z > 0.0) || x + y == 0.0 {
        return Err(Error::domain(format!("R_D({x}, {y}, {z}) undefined")));
    }
    let (mut x, mut y, mut z) = (x, y, z);
    let mut sum = 0.0;
    let mut scale = 1.0;
    for _ in 0..CARLSON_MAX_ITER {
        let mean = (x + y + 3.0 * z) / 5.0;
        let dx = 1.0 - x / mean;
        let dy = 1.0 - y / mean;
        let dz = 1.0 - z / mean;
        if dx.abs().max(dy.abs()).max(dz.abs()) < 1e-4 {
            let ea = dx * dy;
            let eb = dz * dz;
            let ec = ea - eb;
            let ed = ea - 6.0 * eb;
            let ee = ed + ec + ec;
            let series = 1.0
                + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * dz * ee)
                + dz * (ee / 6.0 + dz * (-9.0 / 22.0 * ec + dz * 3.0 / 26.0 * ea));
            return Ok(3.0 * sum + scale * series / (mean * mean.sqrt()));
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        sum += scale / (sz * (z + lambda));
        scale *= 0.25;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    Err(Error::domain("R_D duplication did not settle"))
}
