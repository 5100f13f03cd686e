use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;

use crate::error::{HupError, Result};

/// A uniformly distributed unit vector in `R^n` (Box–Muller normals, normalised).
pub fn random_unit<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let mut v = Vec::with_capacity(n + 1);
        while v.len() < n {
            let u1: f64 = 1.0 - rng.random::<f64>();
            let u2: f64 = rng.random::<f64>();
            let rad = libm::sqrt(-2.0 * libm::log(u1));
            v.push(rad * libm::cos(2.0 * PI * u2));
            v.push(rad * libm::sin(2.0 * PI * u2));
        }
        v.truncate(n);
        if let Ok(u) = crate::normalized(&v) {
            return u;
        }
    }
}

/// How a cone's directions were produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConeFamily {
    /// `K_α = {x : x_1² = α² |x|²}`.
    KAlpha(f64),
    /// `{x : x_1 = 0}`.
    Hyperplane,
    Custom,
}

/// A cone `C ⊂ R^n` given by unit directions, one per antipodal pair.
/// `C` is every real multiple of a stored direction, negative ones included.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeSpec {
    n: usize,
    directions: Vec<Vec<f64>>,
    family: ConeFamily,
}

impl ConeSpec {
    /// `count` directions on `K_α`: `x_1 = α` and the remaining coordinates
    /// uniform on the sphere of radius `√(1-α²)`.
    pub fn k_alpha<R: Rng + ?Sized>(n: usize, alpha: f64, count: usize, rng: &mut R) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(HupError::OutOfRange { name: "alpha", value: alpha });
        }
        if n < 2 {
            return Err(HupError::UnsupportedDimension(n));
        }
        let s = libm::sqrt(1.0 - alpha * alpha);
        let directions = (0..count)
            .map(|_| {
                let mut d = vec![alpha];
                d.extend(random_unit(n - 1, rng).into_iter().map(|y| s * y));
                d
            })
            .collect();
        Ok(Self { n, directions, family: ConeFamily::KAlpha(alpha) })
    }

    /// `count` directions in the hyperplane `x_1 = 0`.
    pub fn hyperplane<R: Rng + ?Sized>(n: usize, count: usize, rng: &mut R) -> Result<Self> {
        if n < 2 {
            return Err(HupError::UnsupportedDimension(n));
        }
        let directions = (0..count)
            .map(|_| {
                let mut d = vec![0.0];
                d.extend(random_unit(n - 1, rng));
                d
            })
            .collect();
        Ok(Self { n, directions, family: ConeFamily::Hyperplane })
    }

    /// `count` uniform directions on the whole sphere.
    pub fn random<R: Rng + ?Sized>(n: usize, count: usize, rng: &mut R) -> Self {
        Self { n, directions: (0..count).map(|_| random_unit(n, rng)).collect(), family: ConeFamily::Custom }
    }

    /// Normalises the given directions.
    pub fn custom(n: usize, directions: &[Vec<f64>]) -> Result<Self> {
        let directions = directions
            .iter()
            .map(|d| {
                if d.len() != n {
                    return Err(HupError::DimensionMismatch { expected: n, found: d.len() });
                }
                crate::normalized(d)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, directions, family: ConeFamily::Custom })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn directions(&self) -> &[Vec<f64>] {
        &self.directions
    }

    pub fn family(&self) -> ConeFamily {
        self.family
    }

    /// Whether `x` lies on the cone, up to `tol` in angle-like distance.
    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        let r = crate::norm(x);
        if r == 0.0 {
            return true;
        }
        match self.family {
            ConeFamily::KAlpha(alpha) => libm::fabs(libm::fabs(x[0]) / r - alpha) <= tol,
            ConeFamily::Hyperplane => libm::fabs(x[0]) / r <= tol,
            ConeFamily::Custom => {
                self.directions.iter().any(|d| libm::fabs(libm::fabs(crate::dot(d, x)) / r - 1.0) <= tol)
            }
        }
    }
}

/// Sets `Λ` on which `μ̂` is asked to vanish.
#[derive(Debug, Clone, PartialEq)]
pub enum LambdaSet {
    /// `{x ∈ R³ : x_3 = x_1² + x_2²}`.
    Paraboloid,
    /// The circle of radius `R` at polar angle `α` in `R³`, at height `r = R cos α`.
    GeodesicCircle {
        alpha: f64,
        radius: f64,
        height: f64,
    },
    Cone(ConeSpec),
    /// The sphere of radius `r` in `R^n`.
    Sphere {
        n: usize,
        radius: f64,
    },
    /// `{(t, t²)} ⊂ R²`.
    PlanarParabola,
    Points {
        n: usize,
        points: Vec<Vec<f64>>,
    },
}

impl LambdaSet {
    pub fn geodesic_circle(alpha: f64, radius: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < PI) {
            return Err(HupError::OutOfRange { name: "alpha", value: alpha });
        }
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(HupError::OutOfRange { name: "R", value: radius });
        }
        Ok(Self::GeodesicCircle { alpha, radius, height: radius * libm::cos(alpha) })
    }

    pub fn sphere(n: usize, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) || !radius.is_finite() {
            return Err(HupError::OutOfRange { name: "radius", value: radius });
        }
        Ok(Self::Sphere { n, radius })
    }

    pub fn points(n: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(HupError::DimensionMismatch { expected: n, found: p.len() });
        }
        Ok(Self::Points { n, points })
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Paraboloid | Self::GeodesicCircle { .. } => 3,
            Self::Cone(c) => c.dim(),
            Self::Sphere { n, .. } | Self::Points { n, .. } => *n,
            Self::PlanarParabola => 2,
        }
    }

    /// `count` points of `Λ` with magnitude parameter at most `extent`: the
    /// distance from the origin for cones, `r` for the paraboloid and `|t|`
    /// for the planar parabola. The geodesic circle is sampled at equally
    /// spaced angles; an explicit point list is returned as is.
    pub fn sample<R: Rng + ?Sized>(&self, count: usize, extent: f64, rng: &mut R) -> Vec<Vec<f64>> {
        match self {
            Self::Paraboloid => (0..count)
                .map(|_| {
                    let r = extent * (1.0 - rng.random::<f64>());
                    let phi = 2.0 * PI * rng.random::<f64>();
                    paraboloid_point(r, phi)
                })
                .collect(),
            Self::GeodesicCircle { alpha, radius, height } => {
                let s = radius * libm::sin(*alpha);
                (0..count)
                    .map(|j| {
                        let phi = 2.0 * PI * j as f64 / count as f64;
                        vec![s * libm::cos(phi), s * libm::sin(phi), *height]
                    })
                    .collect()
            }
            Self::Cone(c) => {
                if c.directions.is_empty() {
                    return Vec::new();
                }
                (0..count)
                    .map(|_| {
                        let d = &c.directions[rng.random_range(0..c.directions.len())];
                        let rho = extent * (2.0 * rng.random::<f64>() - 1.0);
                        d.iter().map(|v| rho * v).collect()
                    })
                    .collect()
            }
            Self::Sphere { n, radius } => {
                (0..count).map(|_| random_unit(*n, rng).into_iter().map(|v| radius * v).collect()).collect()
            }
            Self::PlanarParabola => (0..count)
                .map(|_| {
                    let t = extent * (2.0 * rng.random::<f64>() - 1.0);
                    vec![t, t * t]
                })
                .collect(),
            Self::Points { points, .. } => points.clone(),
        }
    }

    /// Whether `x` satisfies the defining equation of `Λ` to `tol`.
    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        if x.len() != self.dim() {
            return false;
        }
        match self {
            Self::Paraboloid => libm::fabs(x[2] - x[0] * x[0] - x[1] * x[1]) <= tol,
            Self::GeodesicCircle { radius, height, .. } => {
                libm::fabs(crate::norm(x) - radius) <= tol && libm::fabs(x[2] - height) <= tol
            }
            Self::Cone(c) => c.contains(x, tol),
            Self::Sphere { radius, .. } => libm::fabs(crate::norm(x) - radius) <= tol,
            Self::PlanarParabola => libm::fabs(x[1] - x[0] * x[0]) <= tol,
            Self::Points { points, .. } => {
                points.iter().any(|p| p.iter().zip(x).all(|(a, b)| libm::fabs(a - b) <= tol))
            }
        }
    }
}

/// The point of the paraboloid at distance `r` from the origin and azimuth `φ`.
pub(crate) fn paraboloid_point(r: f64, phi: f64) -> Vec<f64> {
    let c = super::sphere::paraboloid_cos_theta(r);
    let s = libm::sqrt((1.0 - c) * (1.0 + c));
    vec![r * s * libm::cos(phi), r * s * libm::sin(phi), r * c]
}
