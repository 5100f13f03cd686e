//! Randomised invariant suites behind `hup verify`.

use std::f64::consts::PI;

use anyhow::Result;
use hup_core::funkhecke::{FunkHecke, GeodesicFactor, PlanewaveConstant};
use hup_core::hup::{
    helmholtz_residual, lemma_geodesic_consistency, mu_hat_series, plane_wave_order, random_unit,
    spherical_mean_factor, spherical_mean_r, LemmaOutcome, LEMMA_SMALL,
};
use hup_core::quad::{geodesic_mean_with, sphere_rule, SphereRule};
use hup_core::sphharm::{basis_norm_sq, ylm_at, zonal_profile, HarmonicCoefficients, SphericalDensity};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// `∫ F(ξ·η) Y_l(η) dσ = C_l Y_l(ξ)`.
    FunkHecke,
    /// Geodesic means of harmonics factor through the pole value.
    GeodesicMean,
    /// Plane-wave identity and the calibrated constant.
    Planewave,
    /// Geodesic means vanish iff the projections at the pole do (n = 3).
    Lemma,
    /// Spherical-mean functional equation and Helmholtz (n = 3).
    SphericalMean,
    /// Every suite that applies to `--n`.
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Self::FunkHecke => "funk-hecke",
            Self::GeodesicMean => "geodesic-mean",
            Self::Planewave => "planewave",
            Self::Lemma => "lemma",
            Self::SphericalMean => "spherical-mean",
            Self::All => "all",
        }
    }

    /// Whether the suite runs in dimension `n`.
    pub fn supports(self, n: usize) -> bool {
        match self {
            Self::Lemma | Self::SphericalMean => n == 3,
            _ => (2..=6).contains(&n),
        }
    }

    pub fn default_tol(self) -> f64 {
        match self {
            Self::Planewave | Self::SphericalMean => 1e-7,
            _ => 1e-8,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub n: usize,
    pub max_degree: usize,
    /// Height-rule order for calibrations.
    pub order: usize,
    pub tol: Option<f64>,
}

const PROBES: usize = 20;

/// A random harmonic of degree `l`: three weighted zonal profiles.
struct ZonalMix {
    n: usize,
    l: usize,
    terms: Vec<(Vec<f64>, f64)>,
}

impl ZonalMix {
    fn new(n: usize, l: usize, rng: &mut ChaCha8Rng) -> Self {
        Self { n, l, terms: (0..3).map(|_| (random_unit(n, rng), rng.random_range(-1.0..1.0))).collect() }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|(p, w)| w * zonal_profile(self.n, self.l, hup_core::dot(p, x))).sum()
    }
}

fn random_table(max_degree: usize, rng: &mut ChaCha8Rng) -> HarmonicCoefficients {
    let mut t = HarmonicCoefficients::zeros(max_degree);
    for k in 0..=max_degree {
        for l in -(k as i64)..=k as i64 {
            let s = 1.0 / basis_norm_sq(k, l).sqrt();
            let v = Complex64::new(rng.random_range(-1.0..1.0) * s, rng.random_range(-1.0..1.0) * s);
            t.set(k, l, v).expect("index in range");
        }
    }
    t
}

/// Runs `suite`, filling `report`; returns whether every residual is within tolerance.
pub fn run(suite: Suite, cfg: SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<bool> {
    match suite {
        Suite::FunkHecke => funk_hecke(cfg, rng, report),
        Suite::GeodesicMean => geodesic_mean_suite(cfg, rng, report),
        Suite::Planewave => planewave(cfg, report),
        Suite::Lemma => lemma(cfg, rng, report),
        Suite::SphericalMean => spherical_mean(cfg, rng, report),
        Suite::All => {
            let mut ok = true;
            for s in [Suite::FunkHecke, Suite::GeodesicMean, Suite::Planewave, Suite::Lemma, Suite::SphericalMean] {
                if s.supports(cfg.n) {
                    let cfg = SuiteConfig { tol: cfg.tol.or(Some(s.default_tol())), ..cfg };
                    let passed = run(s, cfg, rng, report)?;
                    report.diagnostic(&format!("{}.passed", s.name()), passed);
                    ok &= passed;
                } else {
                    report.diagnostic(&format!("{}.skipped", s.name()), format!("needs a different n than {}", cfg.n));
                }
            }
            Ok(ok)
        }
    }
}

fn funk_hecke(cfg: SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<bool> {
    let tol = cfg.tol.unwrap_or(Suite::FunkHecke.default_tol());
    let n = cfg.n;
    let fh = FunkHecke::new(n, cfg.max_degree, cfg.order)?;
    let mut worst = vec![0.0f64; cfg.max_degree + 1];
    for _ in 0..PROBES {
        let xi = random_unit(n, rng);
        let (a, b, ph) = (rng.random_range(-1.0..1.0), rng.random_range(0.0..3.0), rng.random_range(0.0..PI));
        let f = move |t: f64| (a * t).exp() * (b * t + ph).cos();
        for (l, w) in worst.iter_mut().enumerate() {
            let y = ZonalMix::new(n, l, rng);
            let rule = SphereRule::oriented(&xi, cfg.order, l)?;
            let lhs = rule.integrate(|eta| Complex64::new(f(hup_core::dot(&xi, eta)) * y.eval(eta), 0.0));
            let cl = fh.coefficient(|t| Complex64::new(f(t), 0.0), l)?;
            *w = w.max((lhs - cl * y.eval(&xi)).norm());
        }
    }
    for (l, w) in worst.iter().enumerate() {
        report.residual(format!("funk-hecke l={l}"), *w);
    }
    report.tolerance("funk-hecke", tol);
    Ok(worst.iter().all(|w| *w < tol))
}

fn geodesic_mean_suite(cfg: SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<bool> {
    let tol = cfg.tol.unwrap_or(Suite::GeodesicMean.default_tol());
    let n = cfg.n;
    let mut ok = true;
    for l in 0..=cfg.max_degree {
        let factor = GeodesicFactor::new(n, l)?;
        let y = ZonalMix::new(n, l, rng);
        let omega = random_unit(n, rng);
        let mut worst: f64 = 0.0;
        for i in 0..41 {
            let t = -1.0 + 2.0 * (i as f64 + 0.5) / 41.0;
            let mean = geodesic_mean_with(|x| Ok(Complex64::new(y.eval(x), 0.0)), &omega, t, l + 2)?;
            worst = worst.max((mean - factor.eval(t) * y.eval(&omega)).norm());
        }
        report.residual(format!("geodesic-mean l={l}"), worst);
        ok &= worst < tol;
    }
    report.tolerance("geodesic-mean", tol);
    Ok(ok)
}

fn planewave(cfg: SuiteConfig, report: &mut Report) -> Result<bool> {
    let tol = cfg.tol.unwrap_or(Suite::Planewave.default_tol());
    let fit = PlanewaveConstant::fit_with(cfg.n, cfg.order)?;
    let refit = PlanewaveConstant::fit_with(cfg.n, 2 * cfg.order)?;
    let radii: Vec<f64> = (1..=80).map(|i| 0.25 * i as f64).collect();
    let residual = fit.max_residual(cfg.max_degree, &radii, cfg.order)?;
    let shift = (refit.value() - fit.value()).abs();
    report.diagnostic("planewave.c_n", fit.value());
    report.diagnostic("planewave.fit_residual", fit.residual());
    report.residual(format!("planewave j<={} r<=20", cfg.max_degree), residual);
    report.residual("planewave refit shift", shift);
    report.tolerance("planewave", tol);
    report.tolerance("planewave refit shift", 1e-9);
    Ok(residual < tol && shift < 1e-9)
}

fn lemma(cfg: SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<bool> {
    let tol = cfg.tol.unwrap_or(LEMMA_SMALL);
    let band_max = cfg.max_degree.max(1);
    let (mut mixed, mut unexpected) = (0usize, 0usize);
    let mut zero_side: f64 = 0.0;
    for i in 0..PROBES {
        let band = rng.random_range(1..=band_max);
        let mut table = random_table(band, rng);
        let omega = random_unit(3, rng);
        let remove = i % 2 == 0;
        if remove {
            for k in 0..=band {
                let ys: Vec<(i64, Complex64, f64)> = (-(k as i64)..=k as i64)
                    .map(|l| (l, ylm_at(k, l, &omega).expect("unit"), basis_norm_sq(k, l)))
                    .collect();
                let value: Complex64 = ys.iter().map(|(l, y, _)| table.get(k, *l).expect("index") * y).sum();
                let mass: f64 = ys.iter().map(|(_, y, nn)| y.norm_sqr() / nn).sum();
                for (l, y, nn) in ys {
                    let old = table.get(k, l).expect("index");
                    table.set(k, l, old - value * y.conj() / (nn * mass)).expect("index");
                }
            }
        }
        let r = lemma_geodesic_consistency(&SphericalDensity::coefficients(table), &omega, band_max)?;
        mixed += (r.outcome == LemmaOutcome::Mixed) as usize;
        let expected = if remove { LemmaOutcome::BothSmall } else { LemmaOutcome::BothLarge };
        unexpected += (r.outcome != expected) as usize;
        if remove {
            zero_side = zero_side.max(r.geodesic_max).max(r.projection_max);
        }
    }
    report.diagnostic("lemma.mixed", mixed);
    report.diagnostic("lemma.unexpected", unexpected);
    report.residual("lemma vanishing side", zero_side);
    report.tolerance("lemma", tol);
    Ok(mixed == 0 && unexpected == 0 && zero_side < tol)
}

fn spherical_mean(cfg: SuiteConfig, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<bool> {
    let tol = cfg.tol.unwrap_or(Suite::SphericalMean.default_tol());
    let pw = PlanewaveConstant::fit_with(3, cfg.order)?;
    let table = random_table(cfg.max_degree.min(6), rng);
    let mut functional: f64 = 0.0;
    let mut helmholtz: f64 = 0.0;
    for _ in 0..PROBES {
        let rho = rng.random_range(0.5..8.0);
        let x: Vec<f64> = random_unit(3, rng).into_iter().map(|v| rho * v).collect();
        let r = rng.random_range(0.1..6.0);
        let rule = sphere_rule(3, plane_wave_order(0, r))?;
        let mean = spherical_mean_r(|y| mu_hat_series(&table, y, &pw).expect("dimension 3"), &x, r, &rule)?;
        functional = functional.max((mean - mu_hat_series(&table, &x, &pw)? * spherical_mean_factor(&pw, r)?).norm());
        helmholtz = helmholtz.max(helmholtz_residual(&table, &x, 1e-3, &pw)?);
    }
    report.residual("spherical-mean functional equation", functional);
    report.residual("helmholtz h=1e-3", helmholtz);
    report.tolerance("spherical-mean", tol);
    report.tolerance("helmholtz", 1e-5);
    Ok(functional < tol && helmholtz < 1e-5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn small_suites_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let cfg = SuiteConfig { n: 3, max_degree: 4, order: 64, tol: None };
        for s in [Suite::FunkHecke, Suite::GeodesicMean, Suite::Lemma, Suite::SphericalMean] {
            let mut report = Report::new("verify");
            assert!(run(s, cfg, &mut rng, &mut report).unwrap(), "{s:?}: {report:?}");
        }
    }
}
