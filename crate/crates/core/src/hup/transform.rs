use num_complex::Complex64;

use crate::error::{HupError, Result};
use crate::funkhecke::PlanewaveConstant;
use crate::quad::{self, slice_rule, SphereRule, DEFAULT_INTERVAL_ORDER};
use crate::sphharm::{HarmonicCoefficients, SphericalDensity, UNKNOWN_BAND_SLACK};

/// Sphere-rule exactness that resolves `e^{-iξ·η} f(η)` for `|ξ| <= radius`
/// and `f` of degree `band` to well below `1e-12`.
pub fn plane_wave_order(band: usize, radius: f64) -> usize {
    band + 2 * libm::ceil(radius) as usize + 24
}

/// `μ̂(ξ) = ∫ e^{-iξ·η} f(η) dσ(η)` on `rule` (or on `f`'s own grid).
pub fn mu_hat(f: &SphericalDensity, xi: &[f64], rule: &SphereRule) -> Result<Complex64> {
    if xi.len() != f.dim() {
        return Err(HupError::DimensionMismatch { expected: f.dim(), found: xi.len() });
    }
    f.integrate_against(rule, |eta| Complex64::from_polar(1.0, -crate::dot(xi, eta)))
}

/// `μ̂(x) = Σ_{k,l} C_k^l · c_3 (-i)^k J_{k+1/2}(r)/√r · Y_k^l(x/r)` with `r = |x|`.
pub fn mu_hat_series(c: &HarmonicCoefficients, x: &[f64], constant: &PlanewaveConstant) -> Result<Complex64> {
    if x.len() != 3 {
        return Err(HupError::DimensionMismatch { expected: 3, found: x.len() });
    }
    if constant.dim() != 3 {
        return Err(HupError::DimensionMismatch { expected: 3, found: constant.dim() });
    }
    let r = crate::norm(x);
    if r == 0.0 {
        // only the constant term survives
        return Ok(c.get(0, 0)? * constant.transform(0, 0.0)?);
    }
    let dir = [x[0] / r, x[1] / r, x[2] / r];
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=c.max_degree() {
        let radial = constant.transform(k, r)?;
        acc += radial * c.eval_degree(k, &dir);
    }
    Ok(acc)
}

/// `∫_{-1}^{1} e^{irt} f̃(ω, t) w_n(t) dt` with the default height-rule order
/// and a geodesic rule matched to `f`'s band.
///
/// Slicing the sphere along `ω` shows this equals `μ̂(-rω)`.
pub fn radial_profile_transform(f: &SphericalDensity, omega: &[f64], r: f64) -> Result<Complex64> {
    let points = core::cmp::max(DEFAULT_INTERVAL_ORDER, libm::ceil(r) as usize + 32);
    let order = f.band_limit().unwrap_or(UNKNOWN_BAND_SLACK) + 2;
    radial_profile_transform_with(f, omega, r, points, order)
}

/// [`radial_profile_transform`] with `slice_points` heights and degree-`order`
/// geodesic rules.
pub fn radial_profile_transform_with(
    f: &SphericalDensity,
    omega: &[f64],
    r: f64,
    slice_points: usize,
    order: usize,
) -> Result<Complex64> {
    if omega.len() != f.dim() {
        return Err(HupError::DimensionMismatch { expected: f.dim(), found: omega.len() });
    }
    quad::check_unit(omega)?;
    let heights = slice_rule(f.dim(), slice_points)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (&t, &w) in heights.nodes().iter().zip(heights.weights()) {
        let mean = quad::geodesic_mean(f, omega, t, order)?;
        acc += Complex64::from_polar(w, r * t) * mean;
    }
    Ok(acc)
}
