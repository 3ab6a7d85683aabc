//! Floating-point norm analytics: operator norms, matrix exponentials,
//! the `e^b - 1` degree equivalence, `(1+r)^k` sweeps and log-log
//! exponent fits for the polynomial growth conditions.
//!
//! Nilpotency gates prefer exact arithmetic when the input is exact; the
//! float path guards quasinilpotency with a spectral-radius estimate and
//! the thresholds from [`crate::rep`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactComplex;
use crate::linalg::QMat;
use crate::rep::{element_nilpotency_degree, spectral_radius_estimate, CMatrix, FMat, TAU_SPEC};

/// Sampling design for growth sweeps: a geometric grid of continuous
/// scales for `e^{tb}` and a two-sided integer range for `(1+r)^k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepSpec {
    pub scales: Vec<f64>,
    pub k_max: i64,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            scales: geometric_grid(1.0, 1e4, 16),
            k_max: 1 << 10,
        }
    }
}

impl SweepSpec {
    pub fn with_scales(lo: f64, hi: f64, points: usize) -> Self {
        Self {
            scales: geometric_grid(lo, hi, points),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.scales.is_empty() || self.scales.iter().any(|&t| t <= 0.0 || !t.is_finite()) {
            return Err(Error::Precondition("sweep scales must be positive".into()));
        }
        if self.scales.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(
                "sweep scales must be strictly increasing".into(),
            ));
        }
        if self.k_max < 1 {
            return Err(Error::Precondition("k range must be positive".into()));
        }
        Ok(())
    }
}

pub fn geometric_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    assert!(points >= 2 && lo > 0.0 && hi > lo);
    let ratio = (hi / lo).powf(1.0 / (points as f64 - 1.0));
    (0..points).map(|i| lo * ratio.powi(i as i32)).collect()
}

/// Result of a polynomial-growth fit on log-log axes.
///
/// `c` and `alpha` play the roles of the constants in the growth bound
/// `‖e^b‖ ≤ C (1 + ‖b‖)^α`; `nilpotency_degree` and `input_norm` key the
/// fit so that inputs with equal degree and norm can be compared (alpha
/// is expected to agree there, the prefactor is not).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowthFit {
    pub c: f64,
    pub alpha: f64,
    pub residual: f64,
    pub samples: Vec<(f64, f64)>,
    pub nilpotency_degree: usize,
    pub input_norm: f64,
    pub degenerate: bool,
}

/// Largest singular value.
pub fn operator_norm(b: &CMatrix) -> f64 {
    operator_norm_f(&b.to_float())
}

pub fn operator_norm_f(m: &FMat) -> f64 {
    if m.nrows() == 0 {
        return 0.0;
    }
    let svd = m.clone().svd(false, false);
    svd.singular_values.iter().cloned().fold(0.0f64, f64::max)
}

fn exact_nilpotency(b: &CMatrix) -> Option<usize> {
    match b {
        CMatrix::Exact(_) => element_nilpotency_degree(b),
        CMatrix::Float(_) => None,
    }
}

/// Exact truncated exponential series `Σ_{k<d} b^k / k!` for a nilpotent
/// exact matrix of degree `d`.
fn exp_taylor_exact(b: &QMat, degree: usize) -> QMat {
    let n = b.rows();
    let mut acc = QMat::identity(n);
    let mut power = QMat::identity(n);
    let mut factorial: i64 = 1;
    for k in 1..degree {
        power = power.mul(b);
        factorial = factorial.saturating_mul(k as i64);
        acc = acc.add(&power.scale(&ExactComplex::from_ratio(1, factorial)));
    }
    acc
}

fn exp_taylor_float(b: &FMat, degree: usize) -> FMat {
    let n = b.nrows();
    let mut acc = FMat::identity(n, n);
    let mut power = FMat::identity(n, n);
    let mut factorial = 1.0f64;
    for k in 1..degree {
        power = &power * b;
        factorial *= k as f64;
        acc += &power / Complex64::new(factorial, 0.0);
    }
    acc
}

fn one_norm(m: &FMat) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0f64, f64::max)
}

// Padé(13) numerator coefficients from the scaling-and-squaring method.
const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];
const PADE13_THETA: f64 = 5.371_920_351_148_152;

fn expm_pade(m: &FMat) -> Result<FMat> {
    let n = m.nrows();
    let norm = one_norm(m);
    let s = if norm > PADE13_THETA {
        (norm / PADE13_THETA).log2().ceil().max(0.0) as u32
    } else {
        0
    };
    let a = m / Complex64::new(2f64.powi(s as i32), 0.0);
    let eye = FMat::identity(n, n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let c = |k: usize| Complex64::new(PADE13[k], 0.0);

    let w1 = &a6 * c(13) + &a4 * c(11) + &a2 * c(9);
    let w2 = &a6 * c(7) + &a4 * c(5) + &a2 * c(3) + &eye * c(1);
    let u = &a * (&a6 * &w1 + w2);
    let v1 = &a6 * c(12) + &a4 * c(10) + &a2 * c(8);
    let v = &a6 * &v1 + &a6 * c(6) + &a4 * c(4) + &a2 * c(2) + &eye * c(0);

    let denom = &v - &u;
    let numer = &v + &u;
    let mut result = denom
        .lu()
        .solve(&numer)
        .ok_or_else(|| Error::Overflow("singular denominator in exponential".into()))?;
    for _ in 0..s {
        result = &result * &result;
    }
    if result.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Overflow("matrix exponential exceeds float range".into()));
    }
    Ok(result)
}

/// Matrix exponential. Exactly nilpotent exact input gets the exact
/// finite Taylor sum; everything else goes through float
/// scaling-and-squaring with a Padé(13) kernel.
pub fn matrix_exp(b: &CMatrix) -> Result<CMatrix> {
    match b {
        CMatrix::Exact(q) => match exact_nilpotency(b) {
            Some(d) => Ok(CMatrix::Exact(exp_taylor_exact(q, d))),
            None => Ok(CMatrix::Float(expm_pade(&q.to_float())?)),
        },
        CMatrix::Float(f) => {
            if let Some(d) = element_nilpotency_degree(b) {
                Ok(CMatrix::Float(exp_taylor_float(f, d)))
            } else {
                Ok(CMatrix::Float(expm_pade(f)?))
            }
        }
    }
}

fn require_quasinilpotent(b: &CMatrix, what: &str) -> Result<usize> {
    match b {
        CMatrix::Exact(_) => exact_nilpotency(b).ok_or_else(|| {
            Error::Precondition(format!("{what}: input is not nilpotent (exact check)"))
        }),
        CMatrix::Float(f) => {
            let rho = spectral_radius_estimate(f);
            if rho > TAU_SPEC {
                return Err(Error::Precondition(format!(
                    "{what}: spectral radius estimate {rho:.3e} exceeds {TAU_SPEC:.1e}"
                )));
            }
            element_nilpotency_degree(b).ok_or_else(|| {
                Error::Precondition(format!(
                    "{what}: quasinilpotency gate passed but no float power vanished"
                ))
            })
        }
    }
}

/// Nilpotency degree of `e^b - 1` for quasinilpotent `b`. Equals the
/// degree of `b` itself; both sides are computed, not assumed.
pub fn exp_minus_one_degree(b: &CMatrix) -> Result<usize> {
    let d = require_quasinilpotent(b, "exp_minus_one_degree")?;
    let r = match b {
        CMatrix::Exact(q) => {
            let n = q.rows();
            CMatrix::Exact(exp_taylor_exact(q, d).sub(&QMat::identity(n)))
        }
        CMatrix::Float(f) => {
            let n = f.nrows();
            CMatrix::Float(exp_taylor_float(f, d) - FMat::identity(n, n))
        }
    };
    element_nilpotency_degree(&r).ok_or_else(|| {
        Error::Precondition("exp_minus_one_degree: residual series is not nilpotent".into())
    })
}

fn fit_loglog(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    let (alpha, intercept) = if denom.abs() < 1e-30 {
        (0.0, sy / n)
    } else {
        let a = (n * sxy - sx * sy) / denom;
        (a, (sy - a * sx) / n)
    };
    let rss: f64 = points
        .iter()
        .map(|p| {
            let e = p.1 - (alpha * p.0 + intercept);
            e * e
        })
        .sum();
    (alpha, intercept.exp(), (rss / n).sqrt())
}

fn build_fit(
    samples: Vec<(f64, f64)>,
    xs: Vec<f64>,
    degree: usize,
    input_norm: f64,
) -> GrowthFit {
    let points: Vec<(f64, f64)> = xs
        .iter()
        .zip(samples.iter())
        .map(|(&x, &(_, norm))| (x, norm.ln()))
        .collect();
    // Fit the top half of the grid; the bound is asymptotic in character
    // and small scales bias the slope.
    let start = points.len() / 2;
    let (alpha, c, residual) = fit_loglog(&points[start..]);
    GrowthFit {
        c,
        alpha,
        residual,
        samples,
        nilpotency_degree: degree,
        input_norm,
        degenerate: false,
    }
}

/// Samples `‖e^{t·b}‖` over the sweep scales and fits
/// `log ‖e^{tb}‖ ~ α · log(1 + t‖b‖) + log C` on the top half of the
/// grid. For a nilpotent `b` of degree `d` the slope approaches `d - 1`.
pub fn exp_growth_fit(b: &CMatrix, spec: &SweepSpec) -> Result<GrowthFit> {
    let scale = operator_norm(b);
    exp_growth_fit_scaled(b, scale, spec)
}

/// Like [`exp_growth_fit`] but measures the horizontal axis against a
/// caller-chosen size `scale_norm` for `b` (for homomorphism-mode checks
/// the size of the Lie algebra element, not of its image).
pub fn exp_growth_fit_scaled(b: &CMatrix, scale_norm: f64, spec: &SweepSpec) -> Result<GrowthFit> {
    spec.validate()?;
    let degree = require_quasinilpotent(b, "exp_growth_fit")?;
    let bnorm = scale_norm;
    if degree == 1 || bnorm == 0.0 {
        let samples: Vec<(f64, f64)> = spec.scales.iter().map(|&t| (t, 1.0)).collect();
        return Ok(GrowthFit {
            c: 1.0,
            alpha: 0.0,
            residual: 0.0,
            samples,
            nilpotency_degree: degree,
            input_norm: 0.0,
            degenerate: true,
        });
    }
    let f = b.to_float();
    let mut samples = Vec::with_capacity(spec.scales.len());
    let mut xs = Vec::with_capacity(spec.scales.len());
    for &t in &spec.scales {
        let scaled = &f * Complex64::new(t, 0.0);
        let e = exp_taylor_float(&scaled, degree);
        let norm = operator_norm_f(&e);
        if !norm.is_finite() {
            return Err(Error::Overflow(format!("‖e^(t·b)‖ overflows at t = {t}")));
        }
        samples.push((t, norm));
        xs.push((1.0 + t * bnorm).ln());
    }
    Ok(build_fit(samples, xs, degree, bnorm))
}

/// Nilpotent part of the finite Neumann inverse: `(1+r)⁻¹ = 1 + r'` with
/// `r' = Σ_{j≥1} (-r)^j`, a finite sum for nilpotent `r`.
fn neumann_inverse(one_plus_r: &FMat, r: &FMat, degree: usize) -> Result<FMat> {
    let n = r.nrows();
    let mut acc = FMat::identity(n, n);
    let mut power = FMat::identity(n, n);
    for _ in 1..degree {
        power = -(&power * r);
        acc += &power;
    }
    // Exact-polynomial route first; fall back to a linear solve if the
    // input was not nilpotent to working precision.
    let check = one_plus_r * &acc - FMat::identity(n, n);
    if crate::rep::frobenius(&check) <= 1e-8 * (1.0 + crate::rep::frobenius(one_plus_r)) {
        Ok(acc)
    } else {
        one_plus_r
            .clone()
            .lu()
            .try_inverse()
            .ok_or_else(|| Error::Precondition("1 + r is not invertible".into()))
    }
}

fn mat_pow(m: &FMat, mut e: u64) -> FMat {
    let n = m.nrows();
    let mut base = m.clone();
    let mut acc = FMat::identity(n, n);
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Samples `max(‖(1+r)^k‖, ‖(1+r)^{-k}‖)` over a geometric ladder of
/// integer `k` up to `spec.k_max` and fits the slope against
/// `log(1 + |k|)`. Negative powers go through the finite Neumann inverse.
pub fn power_sweep_fit(r: &CMatrix, spec: &SweepSpec) -> Result<GrowthFit> {
    spec.validate()?;
    let degree = require_quasinilpotent(r, "power_sweep_fit")?;
    let rnorm = operator_norm(r);
    if degree == 1 || rnorm == 0.0 {
        let mut ks = k_ladder(spec.k_max);
        let samples: Vec<(f64, f64)> = ks.drain(..).map(|k| (k as f64, 1.0)).collect();
        return Ok(GrowthFit {
            c: 1.0,
            alpha: 0.0,
            residual: 0.0,
            samples,
            nilpotency_degree: degree,
            input_norm: 0.0,
            degenerate: true,
        });
    }
    let rf = r.to_float();
    let n = rf.nrows();
    let one_plus = FMat::identity(n, n) + &rf;
    let inv = neumann_inverse(&one_plus, &rf, degree)?;

    let ks = k_ladder(spec.k_max);
    let mut samples = Vec::with_capacity(ks.len());
    let mut xs = Vec::with_capacity(ks.len());
    for &k in &ks {
        let pos = operator_norm_f(&mat_pow(&one_plus, k as u64));
        let neg = operator_norm_f(&mat_pow(&inv, k as u64));
        let norm = pos.max(neg);
        if !norm.is_finite() {
            return Err(Error::Overflow(format!("‖(1+r)^k‖ overflows at k = {k}")));
        }
        samples.push((k as f64, norm));
        xs.push((1.0 + k as f64).ln());
    }
    Ok(build_fit(samples, xs, degree, rnorm))
}

fn k_ladder(k_max: i64) -> Vec<i64> {
    let mut ks = Vec::new();
    let mut k = 1i64;
    while k <= k_max {
        ks.push(k);
        k *= 2;
    }
    if *ks.last().unwrap() != k_max {
        ks.push(k_max);
    }
    ks
}

/// True when all fits (expected to share nilpotency degree and input
/// norm) agree on the exponent within `tol`.
pub fn alpha_agreement(fits: &[GrowthFit], tol: f64) -> bool {
    let Some(first) = fits.first() else { return true };
    fits.iter().all(|f| (f.alpha - first.alpha).abs() <= tol)
}
