//! Catalog of π identities.
//!
//! Each entry writes π as a combination of complete elliptic integrals
//! divided by a Lauricella `F_D` (two-parameter entries) or by an affine
//! expression in an Appell `F_1` (one-parameter entries, the `a → 1` limits).
//! Evaluating an entry returns the computed π, its residual against
//! [`std::f64::consts::PI`] and every intermediate value.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

use crate::elliptic::{ell_e, ell_k};
use crate::error::{Error, Result};
use crate::lauricella::{fd, LauricellaCall};
use crate::roberts::{all_complex_modulus, eight_real_moduli, mixed_moduli, DEGENERACY_MARGIN};

/// Residual bound every identity is held to at the default tolerance.
pub const IDENTITY_TOLERANCE: f64 = 1e-8;

/// Parameter family of an identity; fixes arity, domain and default grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `1 < a < b`, eight real roots.
    EightReal,
    /// `a` an angle with `sin a ≠ 0`, `b > 1`.
    MixedRoots,
    /// Angles with `sin a > |sin b| > 0`.
    AllComplex,
    /// `b > 1` only.
    OneParameter,
}

impl Family {
    pub fn arity(self) -> usize {
        match self {
            Family::OneParameter => 1,
            _ => 2,
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::OneParameter => &["b"],
            _ => &["a", "b"],
        }
    }

    pub fn domain_text(self) -> &'static str {
        match self {
            Family::EightReal => "1 < a < b",
            Family::MixedRoots => "b > 1, sin a != 0",
            Family::AllComplex => "sin a > |sin b| > 0",
            Family::OneParameter => "b > 1",
        }
    }

    fn check(self, p: &Params) -> std::result::Result<(), String> {
        let finite = p.b.is_finite() && p.a.map_or(true, f64::is_finite);
        if !finite {
            return Err("parameters must be finite".into());
        }
        let ok = match (self, p.a) {
            (Family::OneParameter, None) => p.b > 1.0,
            (Family::OneParameter, Some(_)) => return Err("takes only b".into()),
            (_, None) => return Err("needs both a and b".into()),
            (Family::EightReal, Some(a)) => 1.0 < a && a < p.b,
            (Family::MixedRoots, Some(a)) => p.b > 1.0 && a.sin() != 0.0,
            (Family::AllComplex, Some(a)) => {
                let sb = p.b.sin().abs();
                a.sin() > sb && sb > 0.0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(format!("requires {}", self.domain_text()))
        }
    }

    fn near_degenerate(self, p: &Params) -> bool {
        let b = p.b;
        match (self, p.a) {
            (Family::EightReal, Some(a)) => a - 1.0 < DEGENERACY_MARGIN || b - a < DEGENERACY_MARGIN,
            (Family::MixedRoots, Some(a)) => b - 1.0 < DEGENERACY_MARGIN || a.sin().abs() < DEGENERACY_MARGIN,
            (Family::AllComplex, Some(a)) => {
                a.sin() - b.sin().abs() < DEGENERACY_MARGIN || b.sin().abs() < DEGENERACY_MARGIN
            }
            (Family::OneParameter, _) => b - 1.0 < DEGENERACY_MARGIN,
            _ => false,
        }
    }

    /// Default `(a values, b values)`; `a` is empty for one-parameter entries.
    pub fn default_axes(self) -> (Vec<f64>, Vec<f64>) {
        match self {
            Family::EightReal => (vec![1.2, 1.5, 2.0], vec![2.5, 3.0, 4.0]),
            Family::MixedRoots => (vec![0.3, 0.7, 1.2], vec![1.5, 2.0, 3.0]),
            Family::AllComplex => (vec![1.0, 1.2, 1.4], vec![0.2, 0.4, 0.6]),
            Family::OneParameter => (vec![], vec![1.2, 1.5, 2.0, 3.0, 5.0]),
        }
    }
}

/// A parameter point. `a` is absent for one-parameter identities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params {
    pub a: Option<f64>,
    pub b: f64,
}

impl Params {
    pub fn two(a: f64, b: f64) -> Self {
        Self { a: Some(a), b }
    }

    pub fn one(b: f64) -> Self {
        Self { a: None, b }
    }
}

/// Value of π assembled from named intermediate quantities.
struct Evaluation {
    numerator: f64,
    denominator: f64,
    parts: Vec<(&'static str, f64)>,
}

type EvalFn = fn(&Params, f64) -> Result<Evaluation>;

pub struct PiIdentity {
    pub id: &'static str,
    pub anchor: &'static str,
    pub family: Family,
    eval: EvalFn,
}

impl PiIdentity {
    pub fn arity(&self) -> usize {
        self.family.arity()
    }

    pub fn domain_text(&self) -> &'static str {
        self.family.domain_text()
    }

    pub fn in_domain(&self, p: &Params) -> bool {
        self.family.check(p).is_ok()
    }

    pub fn default_grid(&self) -> Vec<Params> {
        let (a, b) = self.family.default_axes();
        grid(self.family, &a, &b)
    }
}

impl std::fmt::Debug for PiIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PiIdentity")
            .field("id", &self.id)
            .field("family", &self.family)
            .finish()
    }
}

/// Cartesian product in `a`-major order; `a` is ignored for one-parameter families.
pub fn grid(family: Family, a: &[f64], b: &[f64]) -> Vec<Params> {
    if family.arity() == 1 {
        return b.iter().map(|&b| Params::one(b)).collect();
    }
    a.iter()
        .flat_map(|&a| b.iter().map(move |&b| Params::two(a, b)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Ok,
    ReducedAccuracy,
    OutOfDomain,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::Ok => "ok",
            Flag::ReducedAccuracy => "reduced_accuracy",
            Flag::OutOfDomain => "out_of_domain",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "ok" => Some(Flag::Ok),
            "reduced_accuracy" => Some(Flag::ReducedAccuracy),
            "out_of_domain" => Some(Flag::OutOfDomain),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub id: String,
    pub params: Params,
    pub pi_computed: f64,
    pub residual: f64,
    pub route_values: Vec<(String, f64)>,
    pub flag: Flag,
    pub note: String,
}

impl VerificationRecord {
    fn out_of_domain(id: &str, params: Params, note: String) -> Self {
        Self {
            id: id.to_string(),
            params,
            pi_computed: f64::NAN,
            residual: f64::NAN,
            route_values: Vec::new(),
            flag: Flag::OutOfDomain,
            note,
        }
    }
}

/// Residual bound at sub-tolerance `tol`: the identity tolerance, widened
/// when the caller asks for a looser `tol`.
pub fn residual_bound(tol: f64) -> f64 {
    IDENTITY_TOLERANCE.max(1e3 * tol)
}

pub fn find(id: &str) -> Result<&'static PiIdentity> {
    CATALOG
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// All entries in catalog order.
pub fn list_identities() -> &'static [PiIdentity] {
    CATALOG
}

/// Evaluates one identity. Parameters outside the domain are an
/// [`Error::OutOfDomain`]; a modulus leaving `[0, 1)` or an argument on a
/// branch cut yields an `out_of_domain` record instead.
pub fn evaluate_identity(id: &str, params: &Params, tol: f64) -> Result<VerificationRecord> {
    let entry = find(id)?;
    entry.family.check(params).map_err(|reason| Error::OutOfDomain { id: id.to_string(), reason })?;
    let bound = residual_bound(tol);
    let record = match (entry.eval)(params, tol) {
        Ok(ev) => {
            let pi_computed = ev.numerator / ev.denominator;
            let residual = (pi_computed - PI).abs();
            let mut route_values: Vec<(String, f64)> =
                ev.parts.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            route_values.push(("numerator".into(), ev.numerator));
            route_values.push(("denominator".into(), ev.denominator));
            let (flag, note) = if residual < bound {
                (Flag::Ok, String::new())
            } else if entry.family.near_degenerate(params) {
                (Flag::ReducedAccuracy, "near-degenerate parameters".to_string())
            } else {
                (Flag::ReducedAccuracy, format!("residual above {bound:e}"))
            };
            VerificationRecord {
                id: id.to_string(),
                params: *params,
                pi_computed,
                residual,
                route_values,
                flag,
                note,
            }
        }
        Err(e @ (Error::ModulusOutOfRange { .. } | Error::BranchCut { .. })) => {
            VerificationRecord::out_of_domain(id, *params, e.to_string())
        }
        Err(e) => VerificationRecord {
            id: id.to_string(),
            params: *params,
            pi_computed: f64::NAN,
            residual: f64::INFINITY,
            route_values: Vec::new(),
            flag: Flag::ReducedAccuracy,
            note: e.to_string(),
        },
    };
    Ok(record)
}

/// Like [`evaluate_identity`], but out-of-domain parameters produce a record.
pub fn verify_point(id: &str, params: &Params, tol: f64) -> Result<VerificationRecord> {
    match evaluate_identity(id, params, tol) {
        Err(Error::OutOfDomain { reason, .. }) => Ok(VerificationRecord::out_of_domain(id, *params, reason)),
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub ok: usize,
    pub reduced_accuracy: usize,
    pub out_of_domain: usize,
    /// Largest residual over in-domain points; `0` when there are none.
    pub max_residual: f64,
}

impl SweepSummary {
    pub fn from_records(records: &[VerificationRecord]) -> Self {
        let count = |f: Flag| records.iter().filter(|r| r.flag == f).count();
        let max_residual = records
            .iter()
            .filter(|r| r.flag != Flag::OutOfDomain)
            .map(|r| if r.residual.is_nan() { f64::INFINITY } else { r.residual })
            .fold(0.0, f64::max);
        Self {
            total: records.len(),
            ok: count(Flag::Ok),
            reduced_accuracy: count(Flag::ReducedAccuracy),
            out_of_domain: count(Flag::OutOfDomain),
            max_residual,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.reduced_accuracy == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sweep {
    pub records: Vec<VerificationRecord>,
    pub summary: SweepSummary,
}

/// Evaluates `id` at every point, in parallel; records keep the order of `points`.
pub fn sweep(id: &str, points: &[Params], tol: f64) -> Result<Sweep> {
    find(id)?;
    let records = points
        .par_iter()
        .map(|p| verify_point(id, p, tol))
        .collect::<Result<Vec<_>>>()?;
    let summary = SweepSummary::from_records(&records);
    Ok(Sweep { records, summary })
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn lauricella(a: f64, b: &[f64], cc: f64, x: Vec<Complex64>, tol: f64) -> Result<Complex64> {
    Ok(fd(&LauricellaCall::new(a, b.to_vec(), cc, x)?, tol)?.value)
}

/// `F_1(a; 1, ½; c | x, y)`, real arguments.
fn f1(a: f64, cc: f64, x: f64, y: f64, tol: f64) -> Result<f64> {
    Ok(lauricella(a, &[1.0, 0.5], cc, vec![c(x), c(y)], tol)?.re)
}

const HALF3: [f64; 3] = [0.5; 3];

fn ab(p: &Params) -> (f64, f64) {
    (p.a.expect("two-parameter identity"), p.b)
}

struct EightReal {
    a: f64,
    b: f64,
    k1: f64,
    k2: f64,
}

impl EightReal {
    fn new(p: &Params) -> Result<Self> {
        let (a, b) = ab(p);
        let (k1, k2) = eight_real_moduli(a, b)?;
        Ok(Self { a, b, k1, k2 })
    }

    /// `(a²/b², 1/(a²b²), 1/b⁴)`
    fn x_left(&self) -> Vec<Complex64> {
        let (a2, b2) = (self.a * self.a, self.b * self.b);
        vec![c(a2 / b2), c(1.0 / (a2 * b2)), c(1.0 / (b2 * b2))]
    }

    /// `(1−a⁴, (a⁴−1)b²/(a²−b²), (a⁴−1)/(a²b²−1))`
    fn x_middle(&self) -> Vec<Complex64> {
        let (a2, b2) = (self.a * self.a, self.b * self.b);
        let a4m1 = a2 * a2 - 1.0;
        vec![c(-a4m1), c(a4m1 * b2 / (a2 - b2)), c(a4m1 / (a2 * b2 - 1.0))]
    }

    /// `(1/(1−b⁴), 1/(1−a²b²), a²/(a²−b²))`
    fn x_right(&self) -> Vec<Complex64> {
        let (a2, b2) = (self.a * self.a, self.b * self.b);
        vec![c(1.0 / (1.0 - b2 * b2)), c(1.0 / (1.0 - a2 * b2)), c(a2 / (a2 - b2))]
    }

    /// `√((b²−a²)(a²b²−1))`
    fn root_gap(&self) -> f64 {
        let (a2, b2) = (self.a * self.a, self.b * self.b);
        ((b2 - a2) * (a2 * b2 - 1.0)).sqrt()
    }
}

fn hyper_parts(parts: &mut Vec<(&'static str, f64)>, v: Complex64) {
    parts.push(("FD_re", v.re));
    parts.push(("FD_im", v.im));
}

fn tesi_a(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = EightReal::new(p)?;
    let b2 = s.b * s.b;
    let (k1, k2) = (ell_k(s.k1)?, ell_k(s.k2)?);
    let h = lauricella(0.5, &HALF3, 1.0, s.x_left(), tol)?;
    let mut parts = vec![("K1", k1), ("K2", k2)];
    hyper_parts(&mut parts, h);
    Ok(Evaluation { numerator: b2 / (b2 + 1.0) * k2 + b2 / (b2 - 1.0) * k1, denominator: h.re, parts })
}

fn pibis(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = EightReal::new(p)?;
    let k1 = ell_k(s.k1)?;
    let h = lauricella(0.5, &HALF3, 1.0, s.x_middle(), tol)?;
    let mut parts = vec![("K1", k1)];
    hyper_parts(&mut parts, h);
    let numerator = 2.0 * s.root_gap() / (s.a.powi(3) * (s.b * s.b - 1.0)) * k1;
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

fn piter(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = EightReal::new(p)?;
    let (a2, b2) = (s.a * s.a, s.b * s.b);
    let (k1, k2) = (ell_k(s.k1)?, ell_k(s.k2)?);
    let h = lauricella(0.5, &HALF3, 2.0, s.x_right(), tol)?;
    let mut parts = vec![("K1", k1), ("K2", k2)];
    hyper_parts(&mut parts, h);
    let scale = 2.0 / s.a * ((b2 - a2) * (1.0 - a2 * b2) / (1.0 - b2 * b2)).sqrt();
    let numerator = scale * ((1.0 + b2) * k1 + (1.0 - b2) * k2);
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

fn eleven_uno(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = EightReal::new(p)?;
    let b2 = s.b * s.b;
    let (k1, k2) = (ell_k(s.k1)?, ell_k(s.k2)?);
    let h = lauricella(1.5, &HALF3, 2.0, s.x_left(), tol)?;
    let mut parts = vec![("K1", k1), ("K2", k2)];
    hyper_parts(&mut parts, h);
    let numerator = 2.0 * b2 * b2 * (k1 / (b2 - 1.0) - k2 / (b2 + 1.0));
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

fn twenty_two_due(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = EightReal::new(p)?;
    let k1 = ell_k(s.k1)?;
    let h = lauricella(0.5, &[-0.5, 0.5, 0.5], 1.0, s.x_middle(), tol)?;
    let mut parts = vec![("K1", k1)];
    hyper_parts(&mut parts, h);
    let numerator = 2.0 * s.root_gap() / (s.a * (s.b * s.b - 1.0)) * k1;
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

fn thirty_three_tre(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = EightReal::new(p)?;
    let b2 = s.b * s.b;
    let (k1, k2) = (ell_k(s.k1)?, ell_k(s.k2)?);
    let h = lauricella(0.5, &HALF3, 1.0, s.x_right(), tol)?;
    let mut parts = vec![("K1", k1), ("K2", k2)];
    hyper_parts(&mut parts, h);
    let scale = s.root_gap() / (s.a * b2 * (b2 * b2 - 1.0).sqrt());
    let numerator = scale * ((b2 + 1.0) * k1 + (b2 - 1.0) * k2);
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

fn forty_two(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = EightReal::new(p)?;
    let (b2, b4) = (s.b * s.b, s.b.powi(4));
    let (k1, k2, e1, e2) = (ell_k(s.k1)?, ell_k(s.k2)?, ell_e(s.k1)?, ell_e(s.k2)?);
    let kk = (b4 - b2 + 1.0) / (b2 - 1.0) * k1 - (b4 + b2 + 1.0) / (1.0 + b2) * k2;
    let ee = (1.0 - b2) * e1 + (1.0 + b2) * e2;
    let h = lauricella(2.5, &HALF3, 3.0, s.x_left(), tol)?;
    let mut parts = vec![("K1", k1), ("K2", k2), ("E1", e1), ("E2", e2), ("KK", kk), ("EE", ee)];
    hyper_parts(&mut parts, h);
    Ok(Evaluation { numerator: 8.0 / 3.0 * b4 * (kk + ee), denominator: h.re, parts })
}

fn quacinen(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = EightReal::new(p)?;
    let b2 = s.b * s.b;
    let (k1, e1) = (ell_k(s.k1)?, ell_e(s.k1)?);
    let h = lauricella(0.5, &[-1.5, 0.5, 0.5], 1.0, s.x_middle(), tol)?;
    let mut parts = vec![("K1", k1), ("E1", e1)];
    hyper_parts(&mut parts, h);
    let scale = 2.0 * s.a * s.root_gap() / (b2 * (b2 - 1.0));
    let numerator = scale * ((1.0 - b2 + b2 * b2) * k1 - (b2 - 1.0).powi(2) * e1);
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

struct Mixed {
    b: f64,
    alpha: f64,
    d: f64,
    kc: f64,
    ks: f64,
}

impl Mixed {
    fn new(p: &Params) -> Result<Self> {
        let (alpha, b) = ab(p);
        let (d, kc, ks) = mixed_moduli(alpha, b)?;
        Ok(Self { b, alpha, d, kc, ks })
    }

    /// `(1/b⁴, e^{−2ia}/b², e^{2ia}/b²)`
    fn x_inner(&self) -> Vec<Complex64> {
        let b2 = self.b * self.b;
        let z = Complex64::from_polar(1.0 / b2, 2.0 * self.alpha);
        vec![c(1.0 / (b2 * b2)), z.conj(), z]
    }

    /// `(1/(1−b⁴), 1/(1−b²e^{−2ia}), 1/(1−b²e^{2ia}))`
    fn x_outer(&self) -> Vec<Complex64> {
        let b2 = self.b * self.b;
        let w = (c(1.0) - Complex64::from_polar(b2, 2.0 * self.alpha)).inv();
        vec![c(1.0 / (1.0 - b2 * b2)), w.conj(), w]
    }

    fn complete(&self) -> Result<(f64, f64)> {
        Ok((ell_k(self.kc)?, ell_k(self.ks)?))
    }
}

fn ipcom_uno(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = Mixed::new(p)?;
    let b2 = s.b * s.b;
    let (kc, ks) = s.complete()?;
    let h = lauricella(0.5, &HALF3, 1.0, s.x_inner(), tol)?;
    let mut parts = vec![("Kc", kc), ("Ks", ks)];
    hyper_parts(&mut parts, h);
    Ok(Evaluation { numerator: b2 * (kc / (1.0 + b2) + ks / s.d), denominator: h.re, parts })
}

fn ipcom_due(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = Mixed::new(p)?;
    let b2 = s.b * s.b;
    let (kc, ks) = s.complete()?;
    let h = lauricella(0.5, &HALF3, 2.0, s.x_outer(), tol)?;
    let mut parts = vec![("Kc", kc), ("Ks", ks)];
    hyper_parts(&mut parts, h);
    let numerator = 2.0 * (b2 * b2 - 1.0).sqrt() * s.d * (ks / s.d - kc / (1.0 + b2));
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

fn unobbhyy(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = Mixed::new(p)?;
    let b2 = s.b * s.b;
    let (kc, ks) = s.complete()?;
    let h = lauricella(1.5, &HALF3, 2.0, s.x_inner(), tol)?;
    let mut parts = vec![("Kc", kc), ("Ks", ks)];
    hyper_parts(&mut parts, h);
    let numerator = 2.0 * b2 * b2 * ((1.0 + b2) * ks - s.d * kc) / ((1.0 + b2) * s.d);
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

fn ipcom_due_x(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = Mixed::new(p)?;
    let b2 = s.b * s.b;
    let (kc, ks) = s.complete()?;
    let h = lauricella(0.5, &HALF3, 1.0, s.x_outer(), tol)?;
    let mut parts = vec![("Kc", kc), ("Ks", ks)];
    hyper_parts(&mut parts, h);
    let numerator = (b2 * b2 - 1.0).sqrt() * s.d / b2 * (ks / s.d + kc / (1.0 + b2));
    Ok(Evaluation { numerator, denominator: h.re, parts })
}

fn th46(p: &Params, tol: f64) -> Result<Evaluation> {
    let s = Mixed::new(p)?;
    let (b2, b4) = (s.b * s.b, s.b.powi(4));
    let (kc, ks) = s.complete()?;
    let (ec, es) = (ell_e(s.kc)?, ell_e(s.ks)?);
    let bracket = (1.0 + b2) * ec - (b4 + b2 + 1.0) / (1.0 + b2) * kc + (b4 - b2 + 1.0) / s.d * ks - s.d * es;
    let h = lauricella(2.5, &HALF3, 3.0, s.x_inner(), tol)?;
    let mut parts = vec![("Kc", kc), ("Ks", ks), ("Ec", ec), ("Es", es)];
    hyper_parts(&mut parts, h);
    Ok(Evaluation { numerator: 8.0 * b4 / 3.0 * bracket, denominator: h.re, parts })
}

/// `(1+e^{2ia}, 1+e^{−2ia}, 1+e^{2ib}, 1+e^{−2ib})`
fn circle_arguments(a: f64, b: f64) -> Vec<Complex64> {
    let za = c(1.0) + Complex64::from_polar(1.0, 2.0 * a);
    let zb = c(1.0) + Complex64::from_polar(1.0, 2.0 * b);
    vec![za, za.conj(), zb, zb.conj()]
}

fn all_complex(p: &Params, tol: f64, upper: f64) -> Result<Evaluation> {
    let (a, b) = ab(p);
    let (sin_a, k) = all_complex_modulus(a, b)?;
    let kk = ell_k(k)?;
    let h = lauricella(upper, &[0.5; 4], 2.0, circle_arguments(a, b), tol)?;
    let mut parts = vec![("K", kk)];
    hyper_parts(&mut parts, h);
    Ok(Evaluation { numerator: 2.0 * kk / sin_a, denominator: h.re, parts })
}

fn picomcomeq(p: &Params, tol: f64) -> Result<Evaluation> {
    all_complex(p, tol, 1.5)
}

fn picomcomeqb(p: &Params, tol: f64) -> Result<Evaluation> {
    all_complex(p, tol, 0.5)
}

/// `K`, `E` at the `a = 1` modulus `2b/(1+b²)`.
fn limit_modulus(b: f64) -> Result<(f64, f64)> {
    let k = 2.0 * b / (1.0 + b * b);
    Ok((ell_k(k)?, ell_e(k)?))
}

fn cor_uno(p: &Params, tol: f64) -> Result<Evaluation> {
    let b = p.b;
    let b2 = b * b;
    let (k, _) = limit_modulus(b)?;
    let f = f1(0.5, 1.0, 1.0 / b2, 1.0 / (b2 * b2), tol)?;
    Ok(Evaluation {
        numerator: 2.0 * b2 * (b2 - 1.0) * k / (1.0 + b2),
        denominator: 2.0 * (b2 - 1.0) * f - b2,
        parts: vec![("K", k), ("F1_re", f)],
    })
}

fn koro3(p: &Params, tol: f64) -> Result<Evaluation> {
    let b = p.b;
    let b2 = b * b;
    let root = (b2 * b2 - 1.0).sqrt();
    let (k, _) = limit_modulus(b)?;
    let f = f1(0.5, 2.0, 1.0 / (1.0 - b2), 1.0 / (1.0 - b2 * b2), tol)?;
    Ok(Evaluation {
        numerator: 2.0 * (b2 - 1.0).powi(2) / root * k,
        denominator: root - f,
        parts: vec![("K", k), ("F1_re", f)],
    })
}

fn cor_eleven(p: &Params, tol: f64) -> Result<Evaluation> {
    let b = p.b;
    let (b2, b4) = (b * b, b.powi(4));
    let (k, _) = limit_modulus(b)?;
    let f = f1(1.5, 2.0, 1.0 / b2, 1.0 / b4, tol)?;
    Ok(Evaluation {
        numerator: 2.0 * b4 * (b2 - 1.0) / (1.0 + b2) * k,
        denominator: b4 + (1.0 - b2) * f,
        parts: vec![("K", k), ("F1_re", f)],
    })
}

fn cor_thirty_three(p: &Params, tol: f64) -> Result<Evaluation> {
    let b = p.b;
    let (b2, b4) = (b * b, b.powi(4));
    let (k, _) = limit_modulus(b)?;
    let f = f1(0.5, 1.0, 1.0 / (1.0 - b2), 1.0 / (1.0 - b4), tol)?;
    Ok(Evaluation {
        numerator: 2.0 * (b2 - 1.0).powi(2) * k,
        denominator: 1.0 - b4 + 2.0 * b2 * (b4 - 1.0).sqrt() * f,
        parts: vec![("K", k), ("F1_re", f)],
    })
}

fn cor_forty_two(p: &Params, tol: f64) -> Result<Evaluation> {
    let b = p.b;
    let (b2, b4) = (b * b, b.powi(4));
    let (k, e) = limit_modulus(b)?;
    let f = f1(2.5, 3.0, 1.0 / b2, 1.0 / b4, tol)?;
    let bracket = (b4 * b2 - 1.0) * k + (1.0 - b2) * (1.0 + b2).powi(2) * e;
    Ok(Evaluation {
        numerator: 8.0 * b4 / (1.0 + b2) * bracket,
        denominator: 4.0 * b4 * b2 + 3.0 * (1.0 - b2) * f,
        parts: vec![("K", k), ("E", e), ("F1_re", f)],
    })
}

macro_rules! entry {
    ($id:literal, $family:ident, $anchor:literal, $eval:path) => {
        PiIdentity { id: $id, anchor: $anchor, family: Family::$family, eval: $eval }
    };
}

static CATALOG: &[PiIdentity] = &[
    entry!("tesiA", EightReal, "R0 on [0,1/b]: K(k1), K(k2) over F_D(1/2;1/2,1/2,1/2;1)", tesi_a),
    entry!("cor1uno1", OneParameter, "a -> 1 limit of tesiA, Appell F_1(1/2;1,1/2;1)", cor_uno),
    entry!("pibis", EightReal, "R0 on [1/a,a]: K(k1) over F_D(1/2;1/2,1/2,1/2;1)", pibis),
    entry!("piter", EightReal, "R0 on [b,inf): K(k1), K(k2) over F_D(1/2;1/2,1/2,1/2;2)", piter),
    entry!("koro3", OneParameter, "a -> 1 limit of piter, Appell F_1(1/2;1,1/2;2)", koro3),
    entry!("ipcomlunotesi", MixedRoots, "mixed roots, R0 on [0,1/b], complex F_D(1/2;...;1)", ipcom_uno),
    entry!("ipcom2duetesi", MixedRoots, "mixed roots, R0 on [b,inf), complex F_D(1/2;...;2)", ipcom_due),
    entry!("picomcomeq", AllComplex, "unit-circle roots, R0 on [0,inf), F_D^(4)(3/2;...;2)", picomcomeq),
    entry!("11unoth", EightReal, "R2 on [0,1/b]: K(k1), K(k2) over F_D(3/2;1/2,1/2,1/2;2)", eleven_uno),
    entry!("cor11uno1", OneParameter, "a -> 1 limit of 11unoth, Appell F_1(3/2;1,1/2;2)", cor_eleven),
    entry!("22dueth", EightReal, "R2 on [1/a,a]: K(k1) over F_D(1/2;-1/2,1/2,1/2;1)", twenty_two_due),
    entry!("33treth", EightReal, "R2 on [b,inf): K(k1), K(k2) over F_D(1/2;1/2,1/2,1/2;1)", thirty_three_tre),
    entry!("33trecorth", OneParameter, "a -> 1 limit of 33treth, Appell F_1(1/2;1,1/2;1)", cor_thirty_three),
    entry!("unobbhyy", MixedRoots, "mixed roots, R2 on [0,1/b], complex F_D(3/2;...;2)", unobbhyy),
    entry!("ipcom2duetesix", MixedRoots, "mixed roots, R2 on [b,inf), complex F_D(1/2;...;1)", ipcom_due_x),
    entry!("picomcomeqb", AllComplex, "unit-circle roots, R2 on [0,inf), F_D^(4)(1/2;...;2)", picomcomeqb),
    entry!("42th", EightReal, "R4 on [0,1/b]: K and E combination over F_D(5/2;1/2,1/2,1/2;3)", forty_two),
    entry!("corth42", OneParameter, "a -> 1 limit of 42th, Appell F_1(5/2;1,1/2;3)", cor_forty_two),
    entry!("quacinen", EightReal, "R4 on [1/a,a]: K(k1), E(k1) over F_D(1/2;-3/2,1/2,1/2;1)", quacinen),
    entry!("th46pi", MixedRoots, "mixed roots, R4 on [0,1/b], complex F_D(5/2;...;3)", th46),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::DEFAULT_TOL;

    #[test]
    fn catalog_shape() {
        let ids: Vec<_> = list_identities().iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), 20);
        let mut unique = ids.clone();
        unique.sort();
        unique.dedup();
        assert_eq!(unique.len(), 20);
        assert_eq!(find("22dueth").unwrap().arity(), 2);
        assert_eq!(find("koro3").unwrap().arity(), 1);
        assert!(matches!(find("nope"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn named_points() {
        for (id, p) in [
            ("tesiA", Params::two(1.5, 2.5)),
            ("cor1uno1", Params::one(2.0)),
            ("picomcomeq", Params::two(1.2, 0.4)),
        ] {
            let r = evaluate_identity(id, &p, DEFAULT_TOL).unwrap();
            assert_eq!(r.flag, Flag::Ok, "{id}: {r:?}");
            assert!(r.residual < 1e-8);
        }
    }

    #[test]
    fn domain_exclusions() {
        let p = Params::two(0.7, 1.0);
        assert!(matches!(
            evaluate_identity("ipcomlunotesi", &p, DEFAULT_TOL),
            Err(Error::OutOfDomain { .. })
        ));
        let r = verify_point("ipcomlunotesi", &p, DEFAULT_TOL).unwrap();
        assert_eq!(r.flag, Flag::OutOfDomain);
        let r = verify_point("picomcomeq", &Params::two(0.4, 0.4), DEFAULT_TOL).unwrap();
        assert_eq!(r.flag, Flag::OutOfDomain);
        let r = verify_point("koro3", &Params::two(1.0, 2.0), DEFAULT_TOL).unwrap();
        assert_eq!(r.flag, Flag::OutOfDomain);
    }

    #[test]
    fn sweep_keeps_grid_order() {
        let points = grid(Family::EightReal, &[1.1, 1.5, 2.0], &[2.5, 4.0]);
        assert_eq!(points.len(), 6);
        let s = sweep("tesiA", &points, DEFAULT_TOL).unwrap();
        let got: Vec<_> = s.records.iter().map(|r| r.params).collect();
        assert_eq!(got, points);
        assert_eq!(s.summary.ok, 6);
    }

    #[test]
    fn residual_bound_widens_with_tol() {
        assert_eq!(residual_bound(1e-11), 1e-8);
        assert_eq!(residual_bound(1e-4), 1e-1);
    }
}
