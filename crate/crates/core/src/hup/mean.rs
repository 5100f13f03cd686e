use alloc::vec::Vec;

use num_complex::Complex64;

use super::transform::mu_hat_series;
use crate::error::{HupError, Result};
use crate::funkhecke::PlanewaveConstant;
use crate::quad::SphereRule;
use crate::sphharm::HarmonicCoefficients;

/// `Rg(x, r)`: the normalised mean of `g` over the sphere of radius `r` about `x`.
pub fn spherical_mean_r(g: impl Fn(&[f64]) -> Complex64, x: &[f64], r: f64, rule: &SphereRule) -> Result<Complex64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(HupError::OutOfRange { name: "r", value: r });
    }
    if x.len() != rule.dim() {
        return Err(HupError::DimensionMismatch { expected: rule.dim(), found: x.len() });
    }
    let mut y: Vec<f64> = x.to_vec();
    Ok(rule.integrate(|eta| {
        for ((yi, xi), ei) in y.iter_mut().zip(x).zip(eta) {
            *yi = xi + r * ei;
        }
        g(&y)
    }))
}

/// `c_n J_{(n-2)/2}(r) / r^{(n-2)/2}`, so that `Rμ̂(x, r) = factor · μ̂(x)`.
pub fn spherical_mean_factor(constant: &PlanewaveConstant, r: f64) -> Result<f64> {
    Ok(constant.transform(0, r)?.re)
}

/// `|Δμ̂(x) + μ̂(x)|` with the Laplacian from second-order central
/// differences of step `h` on [`mu_hat_series`].
pub fn helmholtz_residual(c: &HarmonicCoefficients, x: &[f64], h: f64, constant: &PlanewaveConstant) -> Result<f64> {
    if !(h > 0.0) {
        return Err(HupError::OutOfRange { name: "h", value: h });
    }
    let centre = mu_hat_series(c, x, constant)?;
    let mut lap = Complex64::new(0.0, 0.0);
    let mut y = x.to_vec();
    for i in 0..x.len() {
        y[i] = x[i] + h;
        let plus = mu_hat_series(c, &y, constant)?;
        y[i] = x[i] - h;
        let minus = mu_hat_series(c, &y, constant)?;
        y[i] = x[i];
        lap += (plus + minus - centre * 2.0) / (h * h);
    }
    Ok((lap + centre).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::sphere_rule;

    #[test]
    fn mean_examples() {
        let rule = sphere_rule(3, 12).unwrap();
        let one = spherical_mean_r(|_| Complex64::new(1.0, 0.0), &[0.3, 0.1, -2.0], 1.7, &rule).unwrap();
        assert!((one - 1.0).norm() < 1e-14);
        let g = |y: &[f64]| Complex64::new(libm::exp(y[0]) * libm::cos(y[1]), y[2]);
        let x = [0.2, -0.4, 0.9];
        let near = spherical_mean_r(g, &x, 1e-3, &rule).unwrap();
        assert!((near - g(&x)).norm() < 1e-6);
        assert!(spherical_mean_r(g, &x, 0.0, &rule).is_err());
    }

    #[test]
    fn constant_density_satisfies_helmholtz() {
        let pw = PlanewaveConstant::fit(3).unwrap();
        let mut c = HarmonicCoefficients::zeros(0);
        c.set(0, 0, Complex64::new(1.0, 0.0)).unwrap();
        let res = helmholtz_residual(&c, &[1.0, 2.0, -0.5], 1e-3, &pw).unwrap();
        assert!(res < 1e-5, "{res}");
    }
}
