use alloc::vec::Vec;

use nalgebra::DMatrix;

use super::lambda::ConeSpec;
use crate::error::{HupError, Result};
use crate::linalg::{qr_r, right_svd};
use crate::poly::{harmonic_basis, HomogeneousPoly};
use crate::quad::sphere_rule;
use crate::specfun::gegenbauer_deriv;
use crate::sphharm::{dim_harmonic, SphericalDensity};

/// Relative singular-value threshold below which the cone evaluation matrix
/// is declared rank deficient.
pub const RANK_THRESHOLD: f64 = 1e-10;
/// Largest cone residual a witness may carry into [`build_counterexample`].
const WITNESS_RESIDUAL: f64 = 1e-10;

/// A homogeneous harmonic polynomial of unit coefficient norm that vanishes
/// on a cone.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicWitness {
    polynomial: HomogeneousPoly,
    residual: f64,
}

impl HarmonicWitness {
    /// Checks harmonicity, rescales to unit coefficient norm and records
    /// `max |P|` over the cone directions.
    pub fn new(polynomial: HomogeneousPoly, cone: &ConeSpec) -> Result<Self> {
        if polynomial.dim() != cone.dim() {
            return Err(HupError::DimensionMismatch { expected: cone.dim(), found: polynomial.dim() });
        }
        let norm = polynomial.coeff_norm();
        if !(norm > 0.0) {
            return Err(HupError::Domain("zero polynomial"));
        }
        let polynomial = polynomial.scaled(1.0 / norm);
        if polynomial.laplacian().max_abs_coeff() > 1e-12 {
            return Err(HupError::Domain("polynomial is not harmonic"));
        }
        let residual = cone.directions().iter().map(|d| libm::fabs(polynomial.eval(d))).fold(0.0, f64::max);
        Ok(Self { polynomial, residual })
    }

    pub fn degree(&self) -> usize {
        self.polynomial.degree()
    }

    pub fn polynomial(&self) -> &HomogeneousPoly {
        &self.polynomial
    }

    /// `max |P|` over the cone directions.
    pub fn residual(&self) -> f64 {
        self.residual
    }
}

/// Harmonic polynomials of degree `<= max_degree` vanishing on every direction
/// of `cone`. An empty list means the cone is non-harmonic up to `max_degree`.
///
/// For each degree the harmonic basis is made `L²(σ)`-orthonormal, evaluated
/// at the directions, and every right singular vector whose singular value is
/// below `RANK_THRESHOLD · σ_max` becomes a witness.
pub fn harmonic_cone_witnesses(cone: &ConeSpec, max_degree: usize) -> Result<Vec<HarmonicWitness>> {
    harmonic_cone_witnesses_with(cone, max_degree, RANK_THRESHOLD)
}

/// [`harmonic_cone_witnesses`] with an explicit relative threshold.
pub fn harmonic_cone_witnesses_with(
    cone: &ConeSpec,
    max_degree: usize,
    threshold: f64,
) -> Result<Vec<HarmonicWitness>> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(HupError::OutOfRange { name: "threshold", value: threshold });
    }
    let n = cone.dim();
    let rows = cone.directions().len();
    let need = dim_harmonic(n, max_degree);
    if rows < need {
        return Err(HupError::UnderSampled { rows, cols: need });
    }
    let mut out = Vec::new();
    for l in 0..=max_degree {
        let basis = harmonic_basis(n, l)?;
        let cols = basis.len();
        let rule = sphere_rule(n, 2 * l)?;
        let gram = DMatrix::from_fn(rule.weights().len(), cols, |i, j| {
            libm::sqrt(rule.weights()[i]) * basis[j].eval(rule.node(i))
        });
        let r = qr_r(gram);
        let r_inv = r
            .solve_upper_triangular(&DMatrix::identity(cols, cols))
            .ok_or(HupError::Linalg("harmonic basis is degenerate"))?;
        let eval = DMatrix::from_fn(rows, cols, |i, j| basis[j].eval(&cone.directions()[i]));
        let svd = right_svd(eval * &r_inv)?;
        let top = svd.singular_values[0];
        for (sigma, v) in svd.singular_values.iter().zip(&svd.right_vectors) {
            if *sigma < threshold * top {
                let weights = &r_inv * nalgebra::DVector::from_column_slice(v);
                let poly = HomogeneousPoly::combination(&basis, weights.as_slice())?;
                out.push(HarmonicWitness::new(poly, cone)?);
            }
        }
    }
    Ok(out)
}

/// Outcome of a cone harmonicity check up to a fixed degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeVerdict {
    NonHarmonic {
        up_to: usize,
    },
    /// `D^m G_l^{(n-2)/2}(α)` vanishes.
    Harmonic {
        l: usize,
        m: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArmitageReport {
    pub alpha: f64,
    pub n: usize,
    pub max_degree: usize,
    pub tol: f64,
    pub verdict: ConeVerdict,
    /// Smallest `|D^m G_l(α)| / |D^m G_l(1)|` seen.
    pub min_ratio: f64,
}

/// Gegenbauer-derivative criterion for `K_α`: harmonic up to `max_degree` iff
/// `|D^m G_l^{(n-2)/2}(α)| <= tol · |D^m G_l^{(n-2)/2}(1)|` for some
/// `2 <= l <= max_degree`, `0 <= m <= l-2`. Needs `n >= 3`.
pub fn armitage_test(alpha: f64, n: usize, max_degree: usize, tol: f64) -> Result<ArmitageReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(HupError::OutOfRange { name: "alpha", value: alpha });
    }
    if n < 3 {
        return Err(HupError::UnsupportedDimension(n));
    }
    let lambda = (n as f64 - 2.0) / 2.0;
    let mut min_ratio = f64::INFINITY;
    let mut verdict = ConeVerdict::NonHarmonic { up_to: max_degree };
    'scan: for l in 2..=max_degree {
        for m in 0..=l - 2 {
            let ratio = libm::fabs(gegenbauer_deriv(m, l, lambda, alpha)? / gegenbauer_deriv(m, l, lambda, 1.0)?);
            min_ratio = min_ratio.min(ratio);
            if ratio <= tol {
                verdict = ConeVerdict::Harmonic { l, m };
                break 'scan;
            }
        }
    }
    Ok(ArmitageReport { alpha, n, max_degree, tol, verdict, min_ratio })
}

/// The density `f = P|_{S^{n-1}}` of a witness. By the plane-wave identity
/// `μ̂(ρθ) = c (-i)^l J(ρ)/ρ^λ · P(θ)` vanishes on the cone.
pub fn build_counterexample(witness: &HarmonicWitness) -> Result<SphericalDensity> {
    if !(witness.residual() < WITNESS_RESIDUAL) {
        return Err(HupError::OutOfRange { name: "witness residual", value: witness.residual() });
    }
    Ok(SphericalDensity::Polynomial(witness.polynomial().clone()))
}
