//! Heisenberg uniqueness pairs `(S^{n-1}, Λ)`.
//!
//! A pair is a HUP when every measure `dμ = f dσ` whose Fourier transform
//! `μ̂(ξ) = ∫ e^{-iξ·η} f(η) dσ(η)` vanishes on `Λ` is zero. The routines here
//! evaluate `μ̂`, decide whether a cone lies in the zero set of a harmonic
//! polynomial, build the resulting counterexample measures and run the
//! paraboloid and geodesic-circle tests on `S²`.
//!
//! Every "HUP" verdict is up to a stated degree `L_max`; nothing here claims
//! the statement over all degrees.

mod cone;
mod lambda;
mod lemma;
mod mean;
mod parabola;
mod sphere;
mod transform;

pub use cone::{
    armitage_test, build_counterexample, harmonic_cone_witnesses, harmonic_cone_witnesses_with, ArmitageReport,
    ConeVerdict, HarmonicWitness, RANK_THRESHOLD,
};
pub use lambda::{random_unit, ConeFamily, ConeSpec, LambdaSet};
pub use lemma::{lemma_geodesic_consistency, LemmaOutcome, LemmaReport, LEMMA_LARGE, LEMMA_SMALL};
pub use mean::{helmholtz_residual, spherical_mean_factor, spherical_mean_r};
pub use parabola::{planar_parabola_experiment, ParabolaReport};
pub use sphere::{
    geodesic_circle_test, paraboloid_cos_theta, paraboloid_test, CircleCondition, CircleVerdict, GeodesicCircleReport,
    MeasureVerdict, ParaboloidEntry, ParaboloidReport, DEGENERATE_WITHIN,
};
pub use transform::{mu_hat, mu_hat_series, plane_wave_order, radial_profile_transform, radial_profile_transform_with};
