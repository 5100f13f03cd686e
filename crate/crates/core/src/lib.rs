//! Numerical harmonic analysis on spheres.
//!
//! The crate evaluates the special functions behind spherical harmonics
//! (Bessel, Gegenbauer, associated Legendre), builds quadrature rules on
//! `[-1, 1]`, on `S^{n-1}` and on geodesic spheres, and uses them to check
//! Heisenberg uniqueness pairs `(S^{n-1}, Λ)` for measures `dμ = f dσ`:
//!
//! - [`sphharm`]: zonal kernels, projections `Π_l`, Cesàro sums, coefficient tables on `S²`;
//! - [`funkhecke`]: Funk–Hecke coefficients, geodesic means of harmonics, the plane-wave identity;
//! - [`hup`]: Fourier transforms of sphere-supported measures, harmonic-cone detection,
//!   counterexample measures and the paraboloid / geodesic-circle tests.
//!
//! Everything is `no_std` with `alloc`. File formats and the command line live in the
//! companion `hup` crate.
#![no_std]
#![warn(missing_debug_implementations)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod funkhecke;
pub mod hup;
pub mod linalg;
pub mod poly;
pub mod quad;
pub mod specfun;
pub mod sphharm;

pub use error::{HupError, Result};
pub use num_complex::Complex64;

/// Euclidean dot product of two equal-length slices.
#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Euclidean norm.
#[inline]
pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// Returns `a / |a|`, or an error for the zero vector.
pub fn normalized(a: &[f64]) -> Result<alloc::vec::Vec<f64>> {
    let r = norm(a);
    if !(r > 0.0) || !r.is_finite() {
        return Err(HupError::Domain("cannot normalise a zero or non-finite vector"));
    }
    Ok(a.iter().map(|x| x / r).collect())
}
