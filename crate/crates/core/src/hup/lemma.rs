use core::f64::consts::PI;

use crate::error::{HupError, Result};
use crate::quad;
use crate::sphharm::{Projector, SphericalDensity};

/// Below this both quantities count as zero.
pub const LEMMA_SMALL: f64 = 1e-8;
/// Above this both quantities count as clearly non-zero.
pub const LEMMA_LARGE: f64 = 1e-4;
const T_GRID: usize = 41;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaOutcome {
    BothSmall,
    BothLarge,
    /// Neither clean case; the equivalence would be contradicted.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaReport {
    /// `max_t |f̃(ω, t)|` over a Chebyshev grid in `(-1, 1)`.
    pub geodesic_max: f64,
    /// `max_{l <= L} |Π_l f(ω)|`.
    pub projection_max: f64,
    pub outcome: LemmaOutcome,
}

/// Compares the geodesic means of `f` around `ω` with its projections at `ω`:
/// all `f̃(ω, ·)` vanish exactly when every `Π_l f(ω)` does.
pub fn lemma_geodesic_consistency(f: &SphericalDensity, omega: &[f64], max_degree: usize) -> Result<LemmaReport> {
    if omega.len() != f.dim() {
        return Err(HupError::DimensionMismatch { expected: f.dim(), found: omega.len() });
    }
    quad::check_unit(omega)?;
    let band = f.band_limit().unwrap_or(max_degree);
    let order = band + 2;
    let mut geodesic_max: f64 = 0.0;
    for i in 0..T_GRID {
        let t = libm::cos(PI * (i as f64 + 0.5) / T_GRID as f64);
        geodesic_max = geodesic_max.max(quad::geodesic_mean(f, omega, t, order)?.norm());
    }
    let projector = Projector::new(f.dim(), max_degree, band + max_degree)?;
    let mut projection_max: f64 = 0.0;
    for l in 0..=max_degree {
        projection_max = projection_max.max(projector.project(f, l, omega)?.norm());
    }
    let outcome = if geodesic_max < LEMMA_SMALL && projection_max < LEMMA_SMALL {
        LemmaOutcome::BothSmall
    } else if geodesic_max > LEMMA_LARGE && projection_max > LEMMA_LARGE {
        LemmaOutcome::BothLarge
    } else {
        LemmaOutcome::Mixed
    };
    Ok(LemmaReport { geodesic_max, projection_max, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn legendre_node_kills_every_mean() {
        let f = SphericalDensity::ylm(2, 0).unwrap();
        let c = 1.0 / libm::sqrt(3.0);
        let s = libm::sqrt(1.0 - c * c);
        let r = lemma_geodesic_consistency(&f, &[s, 0.0, c], 4).unwrap();
        assert_eq!(r.outcome, LemmaOutcome::BothSmall);
        assert!(r.geodesic_max < 1e-8 && r.projection_max < 1e-8);
        let r = lemma_geodesic_consistency(&f, &[0.0, 0.0, 1.0], 4).unwrap();
        assert_eq!(r.outcome, LemmaOutcome::BothLarge);
        assert!(r.geodesic_max > 0.1 && r.projection_max > 0.1);
        let zero = SphericalDensity::constant(3, Complex64::new(0.0, 0.0));
        let r = lemma_geodesic_consistency(&zero, &[0.0, 1.0, 0.0], 3).unwrap();
        assert_eq!((r.geodesic_max, r.projection_max), (0.0, 0.0));
    }
}
