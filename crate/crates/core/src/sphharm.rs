//! Spherical harmonics: the `S²` basis `Y_k^l = e^{ilφ} P_k^l(cos θ)`,
//! zonal kernels in any dimension, projections `Π_l`, Cesàro means and
//! coefficient tables.
//!
//! All integrals are against the normalised surface measure `σ`. Under it the
//! basis functions are orthogonal with
//! `∫ |Y_k^l|² dσ = (k+l)! / ((2k+1) (k-l)!)`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::error::{HupError, Result};
use crate::poly::HomogeneousPoly;
use crate::quad::{self, slice_rule, sphere_rule, SphereRule};
use crate::specfun::{assoc_legendre_unchecked, chebyshev_t, factorial_ratio, gegenbauer_unchecked};

/// Coefficients `C_k^l`, `|l| <= k <= K`, of `Σ C_k^l e^{ilφ} P_k^l(cos θ)` on `S²`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoefficients {
    max_degree: usize,
    data: Vec<Complex64>,
}

impl HarmonicCoefficients {
    pub fn zeros(max_degree: usize) -> Self {
        Self { max_degree, data: vec![Complex64::new(0.0, 0.0); (max_degree + 1) * (max_degree + 1)] }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn index(&self, k: usize, l: i64) -> Result<usize> {
        if k > self.max_degree || l.unsigned_abs() as usize > k {
            return Err(HupError::Index { k, l });
        }
        Ok(k * k + (l + k as i64) as usize)
    }

    pub fn get(&self, k: usize, l: i64) -> Result<Complex64> {
        Ok(self.data[self.index(k, l)?])
    }

    pub fn set(&mut self, k: usize, l: i64, value: Complex64) -> Result<()> {
        let i = self.index(k, l)?;
        self.data[i] = value;
        Ok(())
    }

    /// `(k, l, C_k^l)` in order of increasing `k`, then `l`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, Complex64)> + '_ {
        (0..=self.max_degree).flat_map(move |k| {
            (-(k as i64)..=k as i64).map(move |l| (k, l, self.data[k * k + (l + k as i64) as usize]))
        })
    }

    /// Value of the represented function at a unit vector of `R³`.
    pub fn eval(&self, x: &[f64]) -> Complex64 {
        let (t, phi) = polar(x);
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, l, c) in self.iter() {
            if c != Complex64::new(0.0, 0.0) {
                acc += c * Complex64::from_polar(assoc_legendre_unchecked(k, l, t), l as f64 * phi);
            }
        }
        acc
    }

    /// The degree-`k` part `Σ_l C_k^l Y_k^l(x)`.
    pub fn eval_degree(&self, k: usize, x: &[f64]) -> Complex64 {
        if k > self.max_degree {
            return Complex64::new(0.0, 0.0);
        }
        let (t, phi) = polar(x);
        (-(k as i64)..=k as i64).fold(Complex64::new(0.0, 0.0), |acc, l| {
            acc + self.data[k * k + (l + k as i64) as usize]
                * Complex64::from_polar(assoc_legendre_unchecked(k, l, t), l as f64 * phi)
        })
    }

    /// `∫ |f|² dσ` from the coefficients (Parseval).
    pub fn l2_norm_sq(&self) -> f64 {
        self.iter().map(|(k, l, c)| c.norm_sqr() * basis_norm_sq(k, l)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.norm_sqr() == 0.0)
    }
}

/// `(cos θ, φ)` of a point of `R³`.
pub(crate) fn polar(x: &[f64]) -> (f64, f64) {
    let r = crate::norm(x);
    let t = if r > 0.0 { (x[2] / r).clamp(-1.0, 1.0) } else { 1.0 };
    (t, libm::atan2(x[1], x[0]))
}

/// `Y_k^l(θ, φ) = e^{ilφ} P_k^l(cos θ)`.
pub fn ylm(k: usize, l: i64, theta: f64, phi: f64) -> Result<Complex64> {
    if l.unsigned_abs() as usize > k {
        return Err(HupError::Index { k, l });
    }
    Ok(Complex64::from_polar(assoc_legendre_unchecked(k, l, libm::cos(theta)), l as f64 * phi))
}

/// `Y_k^l` at a unit vector of `R³`.
pub fn ylm_at(k: usize, l: i64, x: &[f64]) -> Result<Complex64> {
    if l.unsigned_abs() as usize > k {
        return Err(HupError::Index { k, l });
    }
    let (t, phi) = polar(x);
    Ok(Complex64::from_polar(assoc_legendre_unchecked(k, l, t), l as f64 * phi))
}

/// `∫ |Y_k^l|² dσ = (k+l)! / ((2k+1)(k-l)!)` for signed `l`.
pub fn basis_norm_sq(k: usize, l: i64) -> f64 {
    let m = l.unsigned_abs() as usize;
    let ratio = factorial_ratio(k + m, k - m);
    let r = if l >= 0 { ratio } else { 1.0 / ratio };
    r / (2 * k + 1) as f64
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = core::cmp::min(k, n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the degree-`l` spherical harmonics in `n` variables.
pub fn dim_harmonic(n: usize, l: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let all = binomial(n + l - 1, l);
    if l < 2 {
        all
    } else {
        all - binomial(n + l - 3, l - 2)
    }
}

/// Gegenbauer profile `G_l^{(n-2)/2}(s)` of the zonal harmonic
/// (Chebyshev `T_l` when `n = 2`).
pub fn zonal_profile(n: usize, l: usize, s: f64) -> f64 {
    if n == 2 {
        chebyshev_t(l, s)
    } else {
        gegenbauer_unchecked(l, (n as f64 - 2.0) / 2.0, s)
    }
}

/// The zonal harmonic `Z^{(l)}(s)`, `s = ξ·η`, as a frozen multiple of the
/// Gegenbauer profile.
///
/// The multiple is fixed at construction from the reproducing property on
/// the probe harmonic `η ↦ G(e_n·η)` at `ξ = e_n`, which reduces to the
/// one-dimensional identity `c ∫ G(t)² dslice(t) = G(1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZonalKernel {
    n: usize,
    l: usize,
    scale: f64,
}

impl ZonalKernel {
    pub fn new(n: usize, l: usize) -> Result<Self> {
        if n < 2 {
            return Err(HupError::UnsupportedDimension(n));
        }
        let rule = slice_rule(n, l + 1)?;
        let energy = rule.integrate_real(|t| {
            let g = zonal_profile(n, l, t);
            g * g
        });
        Ok(Self { n, l, scale: zonal_profile(n, l, 1.0) / energy })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.l
    }

    /// The calibrated multiple of the Gegenbauer profile.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn eval(&self, s: f64) -> f64 {
        self.scale * zonal_profile(self.n, self.l, s)
    }
}

/// `Z^{(l)}(s)` in dimension `n`.
pub fn zonal(l: usize, n: usize, s: f64) -> Result<f64> {
    Ok(ZonalKernel::new(n, l)?.eval(s))
}

type PointFn = Arc<dyn Fn(&[f64]) -> Complex64 + Send + Sync>;
type ProfileFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// A density `f` on `S^{n-1}`, standing for the measure `dμ = f dσ`.
#[derive(Clone)]
pub enum SphericalDensity {
    /// Coefficient table on `S²`.
    Coefficients(HarmonicCoefficients),
    /// Samples at the nodes of a sphere rule.
    Grid { rule: SphereRule, samples: Vec<Complex64> },
    /// `η ↦ profile(pole·η)`.
    Zonal { pole: Vec<f64>, profile: ProfileFn },
    /// Restriction of a homogeneous polynomial.
    Polynomial(HomogeneousPoly),
    /// Any pointwise-evaluable function.
    Function { dim: usize, f: PointFn },
}

impl fmt::Debug for SphericalDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Coefficients(c) => f.debug_tuple("Coefficients").field(c).finish(),
            Self::Grid { rule, samples } => {
                f.debug_struct("Grid").field("dim", &rule.dim()).field("samples", &samples.len()).finish()
            }
            Self::Zonal { pole, .. } => f.debug_struct("Zonal").field("pole", pole).finish_non_exhaustive(),
            Self::Polynomial(p) => f.debug_tuple("Polynomial").field(p).finish(),
            Self::Function { dim, .. } => f.debug_struct("Function").field("dim", dim).finish_non_exhaustive(),
        }
    }
}

impl SphericalDensity {
    pub fn constant(n: usize, c: Complex64) -> Self {
        Self::Function { dim: n, f: Arc::new(move |_| c) }
    }

    pub fn function(n: usize, f: impl Fn(&[f64]) -> Complex64 + Send + Sync + 'static) -> Self {
        Self::Function { dim: n, f: Arc::new(f) }
    }

    pub fn zonal(pole: &[f64], profile: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Result<Self> {
        quad::check_unit(pole)?;
        Ok(Self::Zonal { pole: pole.to_vec(), profile: Arc::new(profile) })
    }

    pub fn coefficients(c: HarmonicCoefficients) -> Self {
        Self::Coefficients(c)
    }

    /// A single basis function `Y_k^l` on `S²`.
    pub fn ylm(k: usize, l: i64) -> Result<Self> {
        let mut c = HarmonicCoefficients::zeros(k);
        c.set(k, l, Complex64::new(1.0, 0.0))?;
        Ok(Self::Coefficients(c))
    }

    pub fn grid(rule: SphereRule, samples: Vec<Complex64>) -> Result<Self> {
        if rule.weights().len() != samples.len() {
            return Err(HupError::DimensionMismatch { expected: rule.weights().len(), found: samples.len() });
        }
        Ok(Self::Grid { rule, samples })
    }

    /// Samples `self` at the nodes of `rule`.
    pub fn sampled(&self, rule: &SphereRule) -> Result<Self> {
        if rule.dim() != self.dim() {
            return Err(HupError::DimensionMismatch { expected: self.dim(), found: rule.dim() });
        }
        let samples = rule.iter().map(|(x, _)| self.eval(x)).collect::<Result<Vec<_>>>()?;
        Ok(Self::Grid { rule: rule.clone(), samples })
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Coefficients(_) => 3,
            Self::Grid { rule, .. } => rule.dim(),
            Self::Zonal { pole, .. } => pole.len(),
            Self::Polynomial(p) => p.dim(),
            Self::Function { dim, .. } => *dim,
        }
    }

    /// Highest harmonic degree present, when known.
    pub fn band_limit(&self) -> Option<usize> {
        match self {
            Self::Coefficients(c) => Some(c.max_degree()),
            Self::Polynomial(p) => Some(p.degree()),
            _ => None,
        }
    }

    /// `f(x)` for a unit vector `x`. Grid densities are only known at their nodes.
    pub fn eval(&self, x: &[f64]) -> Result<Complex64> {
        if x.len() != self.dim() {
            return Err(HupError::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        Ok(match self {
            Self::Coefficients(c) => c.eval(x),
            Self::Grid { .. } => return Err(HupError::NotEvaluable),
            Self::Zonal { pole, profile } => profile(crate::dot(pole, x)),
            Self::Polynomial(p) => Complex64::new(p.eval(x), 0.0),
            Self::Function { f, .. } => f(x),
        })
    }

    /// `∫ g(η) f(η) dσ(η)`, using the density's own grid when it has one.
    pub fn integrate_against(&self, rule: &SphereRule, mut g: impl FnMut(&[f64]) -> Complex64) -> Result<Complex64> {
        match self {
            Self::Grid { rule: own, samples } => {
                Ok(own.iter().zip(samples).fold(Complex64::new(0.0, 0.0), |acc, ((x, w), s)| acc + g(x) * s * w))
            }
            _ => {
                if rule.dim() != self.dim() {
                    return Err(HupError::DimensionMismatch { expected: self.dim(), found: rule.dim() });
                }
                quad::try_integrate(rule, |x| Ok(g(x) * self.eval(x)?))
            }
        }
    }
}

/// Extra degree budget for projecting densities with no known band limit.
pub const UNKNOWN_BAND_SLACK: usize = 24;

/// Computes projections `Π_l f` with zonal kernels and a sphere rule fixed
/// at construction.
#[derive(Debug, Clone)]
pub struct Projector {
    rule: SphereRule,
    kernels: Vec<ZonalKernel>,
}

impl Projector {
    pub fn new(n: usize, max_l: usize, order: usize) -> Result<Self> {
        let rule = sphere_rule(n, order)?;
        let kernels = (0..=max_l).map(|l| ZonalKernel::new(n, l)).collect::<Result<Vec<_>>>()?;
        Ok(Self { rule, kernels })
    }

    /// A projector whose rule is exact for `f · Z^{(l)}` when `f` has a known band.
    pub fn for_density(f: &SphericalDensity, max_l: usize) -> Result<Self> {
        let order = match f {
            SphericalDensity::Grid { rule, .. } => rule.exactness(),
            _ => f.band_limit().unwrap_or(UNKNOWN_BAND_SLACK) + max_l,
        };
        Self::new(f.dim(), max_l, order)
    }

    pub fn rule(&self) -> &SphereRule {
        &self.rule
    }

    pub fn max_degree(&self) -> usize {
        self.kernels.len() - 1
    }

    /// `Π_l f(ξ) = ∫ Z^{(l)}(ξ·η) f(η) dσ(η)`.
    pub fn project(&self, f: &SphericalDensity, l: usize, xi: &[f64]) -> Result<Complex64> {
        let kernel = self.kernels.get(l).ok_or(HupError::OutOfRange { name: "l", value: l as f64 })?;
        if xi.len() != f.dim() {
            return Err(HupError::DimensionMismatch { expected: f.dim(), found: xi.len() });
        }
        f.integrate_against(&self.rule, |eta| Complex64::new(kernel.eval(crate::dot(xi, eta)), 0.0))
    }
}

/// `Π_l f(ξ)`, choosing the rule from the density.
pub fn project(f: &SphericalDensity, l: usize, xi: &[f64]) -> Result<Complex64> {
    Projector::for_density(f, l)?.project(f, l, xi)
}

/// `A_l^m(δ) = C(m-l+δ, δ) / C(m+δ, δ)` via log-Gamma.
pub fn cesaro_weight(l: usize, m: usize, delta: f64) -> Result<f64> {
    if l > m {
        return Err(HupError::Domain("Cesàro weight needs l <= m"));
    }
    if !(delta > -1.0) {
        return Err(HupError::OutOfRange { name: "delta", value: delta });
    }
    let (l, m) = (l as f64, m as f64);
    let log = libm::lgamma(m - l + delta + 1.0) + libm::lgamma(m + 1.0)
        - libm::lgamma(m - l + 1.0)
        - libm::lgamma(m + delta + 1.0);
    Ok(libm::exp(log))
}

/// `Σ_{l=0}^{m} A_l^m(δ) Π_l f(point)`, requiring `δ > (n-2)/2`.
pub fn cesaro_sum(f: &SphericalDensity, m: usize, delta: f64, point: &[f64]) -> Result<Complex64> {
    let n = f.dim();
    if !(delta > (n as f64 - 2.0) / 2.0) {
        return Err(HupError::OutOfRange { name: "delta", value: delta });
    }
    let projector = Projector::for_density(f, m)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..=m {
        acc += projector.project(f, l, point)? * cesaro_weight(l, m, delta)?;
    }
    Ok(acc)
}

/// Coefficient table up to degree `max_degree` of a grid density on `S²`.
/// The grid rule must integrate degree `2·max_degree` exactly.
pub fn expand(f: &SphericalDensity, max_degree: usize) -> Result<HarmonicCoefficients> {
    let SphericalDensity::Grid { rule, samples } = f else {
        return Err(HupError::Domain("expand needs a grid-backed density"));
    };
    if rule.dim() != 3 {
        return Err(HupError::UnsupportedDimension(rule.dim()));
    }
    if rule.exactness() < 2 * max_degree {
        return Err(HupError::Exactness { have: rule.exactness(), need: 2 * max_degree });
    }
    let mut out = HarmonicCoefficients::zeros(max_degree);
    for ((x, w), s) in rule.iter().zip(samples) {
        let (t, phi) = polar(x);
        for k in 0..=max_degree {
            for l in -(k as i64)..=k as i64 {
                let y = Complex64::from_polar(assoc_legendre_unchecked(k, l, t), l as f64 * phi);
                out.data[k * k + (l + k as i64) as usize] += s * y.conj() * w;
            }
        }
    }
    for k in 0..=max_degree {
        for l in -(k as i64)..=k as i64 {
            out.data[k * k + (l + k as i64) as usize] /= basis_norm_sq(k, l);
        }
    }
    Ok(out)
}

/// Truncated symmetric class: `|C_k^l - C_{k'}^l| <= tol` whenever
/// `|l| <= min(k, k')` and `k, k' <= K`.
pub fn is_symmetric_class(c: &HarmonicCoefficients, tol: f64) -> bool {
    let kmax = c.max_degree();
    (-(kmax as i64)..=kmax as i64).all(|l| {
        let first = l.unsigned_abs() as usize;
        let column: Vec<Complex64> = (first..=kmax).map(|k| c.data[k * k + (l + k as i64) as usize]).collect();
        column.iter().enumerate().all(|(i, a)| column[i + 1..].iter().all(|b| (a - b).norm() <= tol))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn ylm_examples() {
        assert_eq!(ylm(0, 0, 0.3, 1.2).unwrap(), c(1.0));
        let th = 0.7;
        assert!((ylm(1, 0, th, 2.0).unwrap() - libm::cos(th)).norm() < 1e-15);
        assert!((ylm(1, 1, th, 0.0).unwrap() + libm::sin(th)).norm() < 1e-15);
        assert!(ylm(1, -2, th, 0.0).is_err());
    }

    #[test]
    fn harmonic_dimensions() {
        assert_eq!(dim_harmonic(3, 0), 1);
        assert_eq!(dim_harmonic(3, 2), 5);
        assert_eq!(dim_harmonic(2, 1), 2);
        assert_eq!(dim_harmonic(2, 7), 2);
        assert_eq!(dim_harmonic(3, 12), 25);
        assert_eq!(dim_harmonic(4, 3), 16);
    }

    #[test]
    fn zonal_scale_matches_closed_form() {
        // (2l+n-2)/(n-2) for n >= 3, 2 for n = 2 and l >= 1
        for n in 2..=6 {
            for l in 0..=16 {
                let k = ZonalKernel::new(n, l).unwrap();
                let expected = if l == 0 {
                    1.0
                } else if n == 2 {
                    2.0
                } else {
                    (2 * l + n - 2) as f64 / (n - 2) as f64
                };
                assert!(libm::fabs(k.scale() - expected) < 1e-11 * expected, "n={n} l={l}: {}", k.scale());
            }
        }
        for &s in &[-1.0, -0.3, 0.2, 0.9] {
            assert_eq!(zonal(0, 3, s).unwrap(), 1.0);
            let p3 = 0.5 * (5.0 * s * s * s - 3.0 * s);
            assert!(libm::fabs(zonal(3, 3, s).unwrap() - 7.0 * p3) < 1e-12);
        }
    }

    #[test]
    fn zonal_reproduces_first_coordinate() {
        let xi = crate::normalized(&[0.2, -0.7, 0.4]).unwrap();
        let rule = sphere_rule(3, 6).unwrap();
        let z = ZonalKernel::new(3, 1).unwrap();
        let v = rule.integrate(|eta| c(z.eval(crate::dot(&xi, eta)) * eta[0]));
        assert!((v - xi[0]).norm() < 1e-14);
    }

    #[test]
    fn projection_examples() {
        let xi = crate::normalized(&[0.6, 0.1, -0.3]).unwrap();
        let constant = SphericalDensity::constant(3, c(2.5));
        assert!((project(&constant, 0, &xi).unwrap() - 2.5).norm() < 1e-13);
        for l in 1..5 {
            assert!(project(&constant, l, &xi).unwrap().norm() < 1e-13);
        }
        let sq = SphericalDensity::function(3, |x| c(x[0] * x[0]));
        assert!((project(&sq, 0, &xi).unwrap() - 1.0 / 3.0).norm() < 1e-13);
        assert!((project(&sq, 2, &xi).unwrap() - (xi[0] * xi[0] - 1.0 / 3.0)).norm() < 1e-13);
        assert!(project(&sq, 1, &xi).unwrap().norm() < 1e-13);
        let y = SphericalDensity::ylm(3, -2).unwrap();
        let direct = ylm_at(3, -2, &xi).unwrap();
        assert!((project(&y, 3, &xi).unwrap() - direct).norm() < 1e-13);
    }

    #[test]
    fn cesaro_weights() {
        assert!(libm::fabs(cesaro_weight(0, 17, 1.3).unwrap() - 1.0) < 1e-13);
        for m in [1usize, 4, 20] {
            assert!(libm::fabs(cesaro_weight(m, m, 1.0).unwrap() - 1.0 / (m + 1) as f64) < 1e-13);
        }
        assert!(libm::fabs(cesaro_weight(3, 10_000, 1.5).unwrap() - 1.0) < 1e-3);
        assert!(cesaro_weight(5, 4, 1.0).is_err());
    }

    #[test]
    fn cesaro_sum_examples() {
        let xi = crate::normalized(&[0.1, 0.9, -0.4]).unwrap();
        let one = SphericalDensity::constant(3, c(1.0));
        assert!((cesaro_sum(&one, 6, 1.0, &xi).unwrap() - 1.0).norm() < 1e-13);
        let y = SphericalDensity::ylm(2, 1).unwrap();
        let want = ylm_at(2, 1, &xi).unwrap() * cesaro_weight(2, 5, 1.0).unwrap();
        assert!((cesaro_sum(&y, 5, 1.0, &xi).unwrap() - want).norm() < 1e-12);
        assert!(cesaro_sum(&y, 5, 0.5, &xi).is_err());
    }

    #[test]
    fn expand_examples() {
        let rule = sphere_rule(3, 12).unwrap();
        let y = SphericalDensity::ylm(2, 1).unwrap().sampled(&rule).unwrap();
        let coeffs = expand(&y, 6).unwrap();
        for (k, l, v) in coeffs.iter() {
            let want = if (k, l) == (2, 1) { 1.0 } else { 0.0 };
            assert!((v - want).norm() < 1e-10, "C_{k}^{l} = {v}");
        }
        let one = SphericalDensity::constant(3, c(1.0)).sampled(&rule).unwrap();
        let coeffs = expand(&one, 4).unwrap();
        assert!((coeffs.get(0, 0).unwrap() - 1.0).norm() < 1e-13);
        assert!(coeffs.iter().skip(1).all(|(_, _, v)| v.norm() < 1e-10));
        assert!(expand(&one, 7).is_err());
        assert!(expand(&SphericalDensity::constant(3, c(1.0)), 2).is_err());
        let four = SphericalDensity::constant(4, c(1.0)).sampled(&sphere_rule(4, 4).unwrap()).unwrap();
        assert!(matches!(expand(&four, 1), Err(HupError::UnsupportedDimension(4))));
    }

    #[test]
    fn symmetric_class_examples() {
        assert!(is_symmetric_class(&HarmonicCoefficients::zeros(3), 1e-12));
        let mut t = HarmonicCoefficients::zeros(2);
        for k in 0..=2 {
            t.set(k, 0, c(1.0)).unwrap();
        }
        assert!(is_symmetric_class(&t, 1e-12));
        let mut u = HarmonicCoefficients::zeros(1);
        u.set(1, 0, c(1.0)).unwrap();
        assert!(!is_symmetric_class(&u, 1e-12));
    }
}
