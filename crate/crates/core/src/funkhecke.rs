//! Funk–Hecke coefficients, geodesic means of harmonics and the plane-wave
//! transform of a harmonic density.
//!
//! None of the absolute constants are transcribed. Each is calibrated once
//! against a quadrature probe whose answer is forced by the measure
//! convention, then frozen in the returned value:
//!
//! - `α_l` from `F = Z^{(l)}`, for which the coefficient must be 1;
//! - the geodesic factor scale from a direct geodesic-sphere average;
//! - `c_n` by least squares over plane-wave probes.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{HupError, Result};
use crate::quad::{self, slice_rule, IntervalRule, SphereRule, DEFAULT_INTERVAL_ORDER};
use crate::specfun::{bessel_j_scaled, BesselOrder};
use crate::sphharm::{zonal_profile, ZonalKernel};

/// Funk–Hecke coefficients `C_l` for one dimension:
/// `∫ F(ξ·η) Y_l(η) dσ(η) = C_l Y_l(ξ)` for every degree-`l` harmonic `Y_l`.
#[derive(Debug, Clone)]
pub struct FunkHecke {
    n: usize,
    slice: IntervalRule,
    alphas: Vec<f64>,
}

impl FunkHecke {
    /// Calibrates `α_0..=α_{max_l}` with an `order`-point height rule.
    pub fn new(n: usize, max_l: usize, order: usize) -> Result<Self> {
        let slice = slice_rule(n, order)?;
        let alphas = (0..=max_l)
            .map(|l| {
                let kernel = ZonalKernel::new(n, l)?;
                let raw = slice.integrate_real(|t| kernel.eval(t) * zonal_profile(n, l, t));
                Ok(1.0 / raw)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, slice, alphas })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// The calibrated `α_l` (relative to the normalised height rule).
    pub fn alpha(&self, l: usize) -> Option<f64> {
        self.alphas.get(l).copied()
    }

    /// `C_l = α_l ∫ F(t) G_l(t) (1-t²)^{(n-3)/2} dt / Z_n`.
    pub fn coefficient(&self, f: impl Fn(f64) -> Complex64, l: usize) -> Result<Complex64> {
        let alpha = self.alpha(l).ok_or(HupError::OutOfRange { name: "l", value: l as f64 })?;
        let n = self.n;
        Ok(self.slice.integrate_complex(|t| f(t) * zonal_profile(n, l, t)) * alpha)
    }
}

/// One-shot Funk–Hecke coefficient.
pub fn funk_hecke_coefficient(f: impl Fn(f64) -> Complex64, l: usize, n: usize, order: usize) -> Result<Complex64> {
    FunkHecke::new(n, l, order)?.coefficient(f, l)
}

/// `Ỹ_l(ω, t) = factor(t) · Y_l(ω)` with `factor(t) = scale · G_l^{(n-2)/2}(t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicFactor {
    n: usize,
    l: usize,
    scale: f64,
}

impl GeodesicFactor {
    /// Calibrates the scale with one geodesic-sphere average of a zonal
    /// harmonic whose pole is tilted away from `ω = e_n`.
    pub fn new(n: usize, l: usize) -> Result<Self> {
        if !(2..=quad::MAX_DIM).contains(&n) {
            return Err(HupError::UnsupportedDimension(n));
        }
        let mut best = (0.0, 0.0, 0.0);
        for &c in &[0.83, 0.61, 0.37] {
            for &t0 in &[0.71, 0.43, 0.19] {
                let size = libm::fabs(zonal_profile(n, l, c) * zonal_profile(n, l, t0));
                if size > libm::fabs(best.0) {
                    best = (size, c, t0);
                }
            }
        }
        let (_, c, t0) = best;
        let mut zeta = alloc::vec![0.0; n];
        zeta[0] = libm::sqrt(1.0 - c * c);
        zeta[n - 1] = c;
        let mut omega = alloc::vec![0.0; n];
        omega[n - 1] = 1.0;
        let mean = quad::geodesic_mean_with(
            |x| Ok(Complex64::new(zonal_profile(n, l, crate::dot(&zeta, x)), 0.0)),
            &omega,
            t0,
            l + 2,
        )?;
        let scale = mean.re / (zonal_profile(n, l, t0) * zonal_profile(n, l, c));
        Ok(Self { n, l, scale })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.scale * zonal_profile(self.n, self.l, t)
    }
}

/// The factor relating the geodesic mean of a degree-`l` harmonic to its value at the pole.
pub fn geodesic_mean_harmonic_factor(l: usize, n: usize, t: f64) -> Result<f64> {
    if !(t > -1.0 && t < 1.0) {
        return Err(HupError::OutOfRange { name: "t", value: t });
    }
    Ok(GeodesicFactor::new(n, l)?.eval(t))
}

/// Residual limit for an accepted plane-wave fit.
pub const PLANEWAVE_FIT_LIMIT: f64 = 1e-7;
/// Probe degrees and radii used by [`PlanewaveConstant::fit`].
pub const FIT_MAX_DEGREE: usize = 6;
pub const FIT_RADII: (f64, f64, f64) = (0.5, 12.0, 0.5);
/// Cosines `ξ·ζ` between the evaluation direction and the probe pole.
const PROBE_COSINES: [f64; 2] = [0.83, 0.47];

/// The global constant `c_n` in
/// `∫ e^{-i r ξ·η} Y_j(η) dσ(η) = c_n (-i)^j J_{j+(n-2)/2}(r) / r^{(n-2)/2} · Y_j(ξ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanewaveConstant {
    n: usize,
    value: f64,
    residual: f64,
}

/// A direction `ξ` and probe pole `ζ` with `ξ·ζ = c`.
fn probe_pair(n: usize, c: f64) -> (Vec<f64>, Vec<f64>) {
    let mut xi = alloc::vec![0.0; n];
    xi[n - 1] = 1.0;
    let mut zeta = alloc::vec![0.0; n];
    zeta[0] = libm::sqrt(1.0 - c * c);
    zeta[n - 1] = c;
    // tilt ξ off the coordinate axes so no rule symmetry is exploited
    let tilt = crate::normalized(&(0..n).map(|i| 0.3 + 0.1 * i as f64).collect::<Vec<_>>()).expect("non-zero");
    let frame = quad::Householder::to_pole(&tilt);
    frame.apply(&mut xi);
    frame.apply(&mut zeta);
    (xi, zeta)
}

/// Quadrature value of `∫ e^{-i r ξ·η} G_j(ζ·η) dσ(η)` on a rule oriented along `ξ`.
fn probe_quadrature(rule: &SphereRule, n: usize, j: usize, r: f64, xi: &[f64], zeta: &[f64]) -> Complex64 {
    rule.integrate(|eta| Complex64::from_polar(zonal_profile(n, j, crate::dot(zeta, eta)), -r * crate::dot(xi, eta)))
}

/// `(-i)^j J_{j+(n-2)/2}(r) / r^{(n-2)/2}`, continuous at `r = 0`.
pub fn bessel_ratio(j: usize, n: usize, r: f64) -> Result<Complex64> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(HupError::OutOfRange { name: "r", value: r });
    }
    let order = BesselOrder::for_harmonic(j, n)?;
    let real = libm::pow(r, j as f64) * bessel_j_scaled(order, r)?;
    let phase = match j % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    Ok(phase * real)
}

impl PlanewaveConstant {
    /// Fits `c_n` with the default height-rule order.
    pub fn fit(n: usize) -> Result<Self> {
        Self::fit_with(n, DEFAULT_INTERVAL_ORDER)
    }

    /// Least-squares fit of `c_n` over probes `j <= 6`, `r ∈ {0.5, 1.0, …, 12}`
    /// using oriented sphere rules with `slice_points` height nodes.
    pub fn fit_with(n: usize, slice_points: usize) -> Result<Self> {
        let probes = Self::probe_values(n, FIT_MAX_DEGREE, &fit_radii(), slice_points)?;
        let (num, den) =
            probes.iter().fold((0.0, 0.0), |(num, den), (q, m)| (num + (m.conj() * q).re, den + m.norm_sqr()));
        let value = num / den;
        let residual = probes.iter().map(|(q, m)| (q - m * value).norm()).fold(0.0, f64::max);
        if !(residual < PLANEWAVE_FIT_LIMIT) {
            return Err(HupError::Calibration { residual, limit: PLANEWAVE_FIT_LIMIT });
        }
        Ok(Self { n, value, residual })
    }

    /// `(quadrature, model without c_n)` pairs over degrees `0..=max_j` and `radii`.
    pub fn probe_values(
        n: usize,
        max_j: usize,
        radii: &[f64],
        slice_points: usize,
    ) -> Result<Vec<(Complex64, Complex64)>> {
        let mut out = Vec::new();
        for &c in &PROBE_COSINES {
            let (xi, zeta) = probe_pair(n, c);
            for j in 0..=max_j {
                let rule = SphereRule::oriented(&xi, slice_points, j + 2)?;
                let y_xi = zonal_profile(n, j, c);
                for &r in radii {
                    let q = probe_quadrature(&rule, n, j, r, &xi, &zeta);
                    out.push((q, bessel_ratio(j, n, r)? * y_xi));
                }
            }
        }
        Ok(out)
    }

    /// Largest `|quadrature - c_n · model|` over degrees `0..=max_j` and `radii`.
    pub fn max_residual(&self, max_j: usize, radii: &[f64], slice_points: usize) -> Result<f64> {
        let probes = Self::probe_values(self.n, max_j, radii, slice_points)?;
        Ok(probes.iter().map(|(q, m)| (q - m * self.value).norm()).fold(0.0, f64::max))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// Worst probe residual of the fit.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// `c_n (-i)^j J_{j+(n-2)/2}(r) / r^{(n-2)/2}`.
    pub fn transform(&self, j: usize, r: f64) -> Result<Complex64> {
        Ok(bessel_ratio(j, self.n, r)? * self.value)
    }
}

fn fit_radii() -> Vec<f64> {
    let (start, end, step) = FIT_RADII;
    let count = libm::round((end - start) / step) as usize + 1;
    (0..count).map(|i| start + step * i as f64).collect()
}

/// Calibrates `c_n` (`2 <= n <= 6`).
pub fn fit_planewave_constant(n: usize) -> Result<PlanewaveConstant> {
    PlanewaveConstant::fit(n)
}

/// `planewave_transform(j, n, r)`; multiplying by `Y_j(ξ)` gives
/// `∫ e^{-i r ξ·η} Y_j(η) dσ(η)`.
pub fn planewave_transform(constant: &PlanewaveConstant, j: usize, n: usize, r: f64) -> Result<Complex64> {
    if constant.dim() != n {
        return Err(HupError::DimensionMismatch { expected: constant.dim(), found: n });
    }
    constant.transform(j, r)
}
