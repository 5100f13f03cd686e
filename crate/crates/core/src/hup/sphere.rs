use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::transform::{mu_hat, plane_wave_order};
use crate::error::{HupError, Result};
use crate::funkhecke::PlanewaveConstant;
use crate::quad::sphere_rule;
use crate::specfun::{assoc_legendre_unchecked, bessel_j, bessel_j_zero, BesselOrder};
use crate::sphharm::{basis_norm_sq, is_symmetric_class, HarmonicCoefficients, SphericalDensity};

/// Samples within this distance of a Bessel or Legendre zero are rejected.
pub const DEGENERATE_WITHIN: f64 = 1e-6;

/// `cos θ` of the paraboloid point at distance `r`: the root of
/// `cos θ = r sin² θ` in `(0, 1)`.
pub fn paraboloid_cos_theta(r: f64) -> f64 {
    2.0 * r / (1.0 + libm::sqrt(1.0 + 4.0 * r * r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureVerdict {
    Zero,
    Nonzero,
}

/// Per-`(l, d)` diagnostics of [`paraboloid_test`].
#[derive(Debug, Clone, PartialEq)]
pub struct ParaboloidEntry {
    pub l: usize,
    pub d: i64,
    /// `C^d P_l^d(cos θ_r)` with `C^d` recovered from `μ̂`, one per sample.
    pub extracted: Vec<Complex64>,
    /// `C_l^d P_l^d(cos θ_r)` from the table.
    pub direct: Vec<Complex64>,
    /// `max_r |extracted|`.
    pub residual: f64,
    /// `max_r |extracted - direct| / max(1, |direct|)`.
    pub mismatch: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParaboloidReport {
    pub verdict: MeasureVerdict,
    pub r_samples: Vec<f64>,
    pub tol: f64,
    pub entries: Vec<ParaboloidEntry>,
    pub max_residual: f64,
    pub max_mismatch: f64,
}

fn sign_change(f: impl Fn(f64) -> f64, r: f64) -> bool {
    let (a, b) = (f(r - DEGENERATE_WITHIN), f(r + DEGENERATE_WITHIN));
    a == 0.0 || b == 0.0 || (a < 0.0) != (b < 0.0)
}

fn check_paraboloid_sample(r: f64, max_degree: usize) -> Result<()> {
    if !(r > DEGENERATE_WITHIN) || !r.is_finite() {
        return Err(HupError::OutOfRange { name: "r", value: r });
    }
    for k in 0..=max_degree {
        let order = BesselOrder::from_twice(2 * k as u32 + 1);
        if sign_change(|x| bessel_j(order, x).unwrap_or(0.0), r) {
            return Err(HupError::DegenerateSample { r, within: DEGENERATE_WITHIN, what: "a Bessel function" });
        }
        for d in 0..=k as i64 {
            if sign_change(|x| assoc_legendre_unchecked(k, d, paraboloid_cos_theta(x)), r) {
                return Err(HupError::DegenerateSample { r, within: DEGENERATE_WITHIN, what: "a Legendre function" });
            }
        }
    }
    Ok(())
}

/// Paraboloid test for a truncated symmetric table `c` (`C_k^d` independent
/// of `k` for each `d`).
///
/// At each `r` the paraboloid meets the sphere of radius `r` in the circle
/// `cos θ = cos θ_r`. `μ̂` is evaluated by quadrature at `2K+5` equally spaced
/// azimuths on that circle and its Fourier coefficients `F_d(r)` in `φ` are
/// matched by least squares against
/// `B_d(r) = Σ_{k>=|d|} c_3 (-i)^k J_{k+1/2}(r)/√r P_k^d(cos θ_r)`
/// to recover `C^d`. The verdict is `Zero` iff every `C^d P_l^d(cos θ_r)`
/// is below `tol`.
pub fn paraboloid_test(
    c: &HarmonicCoefficients,
    r_samples: &[f64],
    tol: f64,
    constant: &PlanewaveConstant,
) -> Result<ParaboloidReport> {
    if constant.dim() != 3 {
        return Err(HupError::DimensionMismatch { expected: 3, found: constant.dim() });
    }
    let scale = c.iter().map(|(_, _, v)| v.norm()).fold(1.0, f64::max);
    if !is_symmetric_class(c, 1e-12 * scale) {
        return Err(HupError::NotSymmetric { tol: 1e-12 * scale });
    }
    if r_samples.is_empty() {
        return Err(HupError::Domain("no r samples"));
    }
    let big_k = c.max_degree();
    for &r in r_samples {
        check_paraboloid_sample(r, big_k)?;
    }
    let r_max = r_samples.iter().copied().fold(0.0, f64::max);
    let rule = sphere_rule(3, plane_wave_order(big_k, r_max))?;
    let density = SphericalDensity::Coefficients(c.clone()).sampled(&rule)?;
    let azimuths = 2 * big_k + 5;
    let orders = 2 * big_k + 1;

    // fourier[d + K][i] = F_d(r_i), model[d + K][i] = B_d(r_i)
    let mut fourier = alloc::vec![Vec::with_capacity(r_samples.len()); orders];
    let mut model = alloc::vec![Vec::with_capacity(r_samples.len()); orders];
    let mut cosines = Vec::with_capacity(r_samples.len());
    for &r in r_samples {
        let ct = paraboloid_cos_theta(r);
        let st = libm::sqrt((1.0 - ct) * (1.0 + ct));
        cosines.push(ct);
        let mut values = Vec::with_capacity(azimuths);
        for m in 0..azimuths {
            let phi = 2.0 * PI * m as f64 / azimuths as f64;
            let xi = [r * st * libm::cos(phi), r * st * libm::sin(phi), r * ct];
            values.push((phi, mu_hat(&density, &xi, &rule)?));
        }
        let radial = (0..=big_k).map(|k| constant.transform(k, r)).collect::<Result<Vec<_>>>()?;
        for d in -(big_k as i64)..=big_k as i64 {
            let f_d =
                values.iter().map(|&(phi, v)| v * Complex64::from_polar(1.0, -(d as f64) * phi)).sum::<Complex64>()
                    / azimuths as f64;
            let b_d: Complex64 =
                (d.unsigned_abs() as usize..=big_k).map(|k| radial[k] * assoc_legendre_unchecked(k, d, ct)).sum();
            fourier[(d + big_k as i64) as usize].push(f_d);
            model[(d + big_k as i64) as usize].push(b_d);
        }
    }
    let fitted: Vec<Complex64> = fourier
        .iter()
        .zip(&model)
        .map(|(f, b)| {
            let num: Complex64 = f.iter().zip(b).map(|(f, b)| b.conj() * f).sum();
            let den: f64 = b.iter().map(|b| b.norm_sqr()).sum();
            num / den
        })
        .collect();

    let mut entries = Vec::new();
    for l in 0..=big_k {
        for d in -(l as i64)..=l as i64 {
            let cd = fitted[(d + big_k as i64) as usize];
            let table = c.get(l, d)?;
            let legendre: Vec<f64> = cosines.iter().map(|&ct| assoc_legendre_unchecked(l, d, ct)).collect();
            let extracted: Vec<Complex64> = legendre.iter().map(|p| cd * p).collect();
            let direct: Vec<Complex64> = legendre.iter().map(|p| table * p).collect();
            let residual = extracted.iter().map(|e| e.norm()).fold(0.0, f64::max);
            let mismatch =
                extracted.iter().zip(&direct).map(|(e, v)| (e - v).norm() / v.norm().max(1.0)).fold(0.0, f64::max);
            entries.push(ParaboloidEntry { l, d, extracted, direct, residual, mismatch });
        }
    }
    let max_residual = entries.iter().map(|e| e.residual).fold(0.0, f64::max);
    let max_mismatch = entries.iter().map(|e| e.mismatch).fold(0.0, f64::max);
    let verdict = if max_residual < tol { MeasureVerdict::Zero } else { MeasureVerdict::Nonzero };
    Ok(ParaboloidReport { verdict, r_samples: r_samples.to_vec(), tol, entries, max_residual, max_mismatch })
}

/// The first condition that fails for the geodesic circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleCondition {
    /// `R` lies within `distance <= tol` of a zero of `J_{l+1/2}`.
    BesselZero { l: usize, distance: f64 },
    /// `|P_l^d(cos α)| / ‖Y_l^d‖ <= tol`.
    LegendreZero { l: usize, d: i64, value: f64 },
}

#[derive(Debug, Clone)]
pub enum CircleVerdict {
    HupUpTo {
        max_degree: usize,
    },
    /// `μ̂` of `counterexample` vanishes on the circle.
    NotHup {
        condition: CircleCondition,
        counterexample: SphericalDensity,
    },
}

#[derive(Debug, Clone)]
pub struct GeodesicCircleReport {
    pub alpha: f64,
    pub radius: f64,
    /// `r = R cos α`.
    pub height: f64,
    pub max_degree: usize,
    pub tol: f64,
    /// Smallest distance from `R` to a zero of some `J_{l+1/2}` scanned.
    pub min_bessel_distance: f64,
    /// Smallest normalised `|P_l^d(cos α)|` scanned.
    pub min_legendre: f64,
    pub verdict: CircleVerdict,
}

fn nearest_zero_distance(order: BesselOrder, r: f64) -> Result<f64> {
    let mut best = f64::INFINITY;
    let mut k = 1;
    loop {
        let z = bessel_j_zero(order, k)?;
        best = best.min(libm::fabs(z - r));
        if z > r {
            return Ok(best);
        }
        k += 1;
    }
}

/// Geodesic-circle test on `S²` up to degree `max_degree`: a HUP iff no
/// `J_{l+1/2}` vanishes at `R` and no `P_l^d` vanishes at `cos α`. On
/// failure the counterexample is `Y_l^d` for the failing `(l, d)`.
pub fn geodesic_circle_test(alpha: f64, radius: f64, max_degree: usize, tol: f64) -> Result<GeodesicCircleReport> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(HupError::OutOfRange { name: "alpha", value: alpha });
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(HupError::OutOfRange { name: "R", value: radius });
    }
    let ca = libm::cos(alpha);
    let mut min_bessel_distance = f64::INFINITY;
    let mut min_legendre = f64::INFINITY;
    let mut failure = None;
    'scan: for l in 0..=max_degree {
        let distance = nearest_zero_distance(BesselOrder::from_twice(2 * l as u32 + 1), radius)?;
        min_bessel_distance = min_bessel_distance.min(distance);
        if distance <= tol {
            failure = Some((CircleCondition::BesselZero { l, distance }, l, 0));
            break;
        }
        for d in -(l as i64)..=l as i64 {
            let value = libm::fabs(assoc_legendre_unchecked(l, d, ca)) / libm::sqrt(basis_norm_sq(l, d));
            min_legendre = min_legendre.min(value);
            if value <= tol {
                failure = Some((CircleCondition::LegendreZero { l, d, value }, l, d));
                break 'scan;
            }
        }
    }
    let verdict = match failure {
        None => CircleVerdict::HupUpTo { max_degree },
        Some((condition, l, d)) => CircleVerdict::NotHup { condition, counterexample: SphericalDensity::ylm(l, d)? },
    };
    Ok(GeodesicCircleReport {
        alpha,
        radius,
        height: radius * ca,
        max_degree,
        tol,
        min_bessel_distance,
        min_legendre,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paraboloid_cosine_solves_defining_relation() {
        for &r in &[0.01, 0.5, 1.0, 7.0, 100.0] {
            let c = paraboloid_cos_theta(r);
            assert!(libm::fabs(c - r * (1.0 - c * c)) < 1e-14 * (1.0 + r));
        }
    }

    #[test]
    fn paraboloid_zero_and_nonzero() {
        let pw = PlanewaveConstant::fit(3).unwrap();
        let rs = [0.7, 1.3, 2.1, 2.9];
        let zero = paraboloid_test(&HarmonicCoefficients::zeros(3), &rs, 1e-10, &pw).unwrap();
        assert_eq!(zero.verdict, MeasureVerdict::Zero);
        assert_eq!(zero.max_residual, 0.0);
        let mut c = HarmonicCoefficients::zeros(3);
        for k in 0..=3 {
            c.set(k, 0, Complex64::new(1.0, 0.0)).unwrap();
        }
        let report = paraboloid_test(&c, &rs, 1e-10, &pw).unwrap();
        assert_eq!(report.verdict, MeasureVerdict::Nonzero);
        assert!(report.max_mismatch < 1e-8, "{}", report.max_mismatch);
        let mut bad = c.clone();
        bad.set(2, 0, Complex64::new(0.5, 0.0)).unwrap();
        assert!(matches!(paraboloid_test(&bad, &rs, 1e-10, &pw), Err(HupError::NotSymmetric { .. })));
        assert!(matches!(paraboloid_test(&c, &[PI], 1e-10, &pw), Err(HupError::DegenerateSample { .. })));
    }

    #[test]
    fn circle_examples() {
        let r = geodesic_circle_test(1.0, PI, 4, 1e-8).unwrap();
        assert!(matches!(r.verdict, CircleVerdict::NotHup { condition: CircleCondition::BesselZero { l: 0, .. }, .. }));
        let r = geodesic_circle_test(PI / 2.0, 5.0, 4, 1e-8).unwrap();
        assert!(matches!(
            r.verdict,
            CircleVerdict::NotHup { condition: CircleCondition::LegendreZero { l: 1, d: 0, .. }, .. }
        ));
        let r = geodesic_circle_test(1.0, 5.0, 8, 1e-8).unwrap();
        assert!(matches!(r.verdict, CircleVerdict::HupUpTo { max_degree: 8 }));
        assert!(geodesic_circle_test(0.0, 5.0, 8, 1e-8).is_err());
    }
}
