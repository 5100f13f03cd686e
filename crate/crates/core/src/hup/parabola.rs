use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{HupError, Result};

/// Numbers for the planar parabola `Λ = {(t, t²)}` against the circle.
/// No verdict is drawn from them.
#[derive(Debug, Clone, PartialEq)]
pub struct ParabolaReport {
    pub t_samples: Vec<f64>,
    /// `μ̂(t) = ∫_{-π}^{π} e^{i(t cos θ + t² sin θ)} f(θ) dθ`.
    pub values: Vec<Complex64>,
    pub max_abs: f64,
    /// `a_p` with `μ̂(t) = Σ_p a_p t^p`.
    pub taylor: Vec<Complex64>,
    /// `max |μ̂(t) - Σ a_p t^p|` over samples with `|t| <= taylor_radius`.
    pub taylor_residual: f64,
    pub taylor_radius: f64,
}

/// Taylor radius inside which the truncated series is compared with `μ̂`.
const TAYLOR_RADIUS: f64 = 0.25;

/// Trapezoidal evaluation of `μ̂` from samples `f(θ_j)` at
/// `θ_j = -π + 2πj/N`, plus `taylor_terms` Taylor coefficients in `t`.
pub fn planar_parabola_experiment(
    f_samples: &[Complex64],
    t_samples: &[f64],
    taylor_terms: usize,
) -> Result<ParabolaReport> {
    let count = f_samples.len();
    if count == 0 {
        return Err(HupError::Domain("no samples of f"));
    }
    let h = 2.0 * PI / count as f64;
    let thetas: Vec<f64> = (0..count).map(|j| -PI + h * j as f64).collect();
    let values: Vec<Complex64> = t_samples
        .iter()
        .map(|&t| {
            thetas
                .iter()
                .zip(f_samples)
                .map(|(&th, &f)| Complex64::from_polar(h, t * libm::cos(th) + t * t * libm::sin(th)) * f)
                .sum()
        })
        .collect();
    let max_abs = values.iter().map(|v| v.norm()).fold(0.0, f64::max);

    // e^{i(ta + t²b)} = Σ_j (ia)^j t^j / j! · Σ_k (ib)^k t^{2k} / k!
    let mut taylor = alloc::vec![Complex64::new(0.0, 0.0); taylor_terms];
    let i = Complex64::new(0.0, 1.0);
    for (&th, &f) in thetas.iter().zip(f_samples) {
        let ia = i * libm::cos(th);
        let ib = i * libm::sin(th);
        let mut a_pow = alloc::vec![Complex64::new(1.0, 0.0); taylor_terms];
        let mut b_pow = alloc::vec![Complex64::new(1.0, 0.0); taylor_terms];
        for p in 1..taylor_terms {
            a_pow[p] = a_pow[p - 1] * ia / p as f64;
            b_pow[p] = b_pow[p - 1] * ib / p as f64;
        }
        for (p, slot) in taylor.iter_mut().enumerate() {
            let mut c = Complex64::new(0.0, 0.0);
            for k in 0..=p / 2 {
                c += a_pow[p - 2 * k] * b_pow[k];
            }
            *slot += c * f * h;
        }
    }
    let taylor_residual = t_samples
        .iter()
        .zip(&values)
        .filter(|(t, _)| libm::fabs(**t) <= TAYLOR_RADIUS)
        .map(|(&t, v)| {
            let series: Complex64 = taylor.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * t + a);
            (series - v).norm()
        })
        .fold(0.0, f64::max);
    Ok(ParabolaReport {
        t_samples: t_samples.to_vec(),
        values,
        max_abs,
        taylor,
        taylor_residual,
        taylor_radius: TAYLOR_RADIUS,
    })
}
