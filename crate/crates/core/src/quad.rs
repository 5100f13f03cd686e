//! Quadrature on `[-1, 1]`, on `S^{n-1}` and on geodesic spheres
//! `S_ω^t = {ν ∈ S^{n-1} : ω·ν = t}`.
//!
//! Sphere and geodesic rules carry probability weights (the normalised
//! surface measure). Sphere rules are product rules: the height `t = e_n·η`
//! is integrated with a Gauss rule for the density `(1-t²)^{(n-3)/2}` and the
//! slices recursively with a rule on `S^{n-2}`, down to a uniform rule on the
//! circle.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{HupError, Result};
use crate::specfun::gegenbauer_unchecked;
use crate::sphharm::SphericalDensity;

/// Interval order used when a caller has no better information.
pub const DEFAULT_INTERVAL_ORDER: usize = 64;
/// Largest supported ambient dimension for sphere rules.
pub const MAX_DIM: usize = 6;

/// Sphere-rule degree used for harmonics up to `max_degree`.
pub const fn default_sphere_order(max_degree: usize) -> usize {
    2 * max_degree + 8
}

/// Anything that is a list of weighted points.
pub trait Quadrature {
    fn len(&self) -> usize;
    fn point(&self, i: usize) -> &[f64];
    fn weight(&self, i: usize) -> f64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `Σ w_i f(x_i)`.
pub fn integrate<Q: Quadrature + ?Sized>(rule: &Q, mut f: impl FnMut(&[f64]) -> Complex64) -> Complex64 {
    (0..rule.len()).fold(Complex64::new(0.0, 0.0), |acc, i| acc + f(rule.point(i)) * rule.weight(i))
}

/// As [`integrate`], propagating the first evaluation failure.
pub fn try_integrate<Q: Quadrature + ?Sized>(
    rule: &Q,
    mut f: impl FnMut(&[f64]) -> Result<Complex64>,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..rule.len() {
        acc += f(rule.point(i))? * rule.weight(i);
    }
    Ok(acc)
}

/// Nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    exactness: usize,
}

impl IntervalRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Largest polynomial degree integrated exactly (against the rule's weight).
    pub fn exactness(&self) -> usize {
        self.exactness
    }

    pub fn integrate_real(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * f(t)).sum()
    }

    pub fn integrate_complex(&self, f: impl Fn(f64) -> Complex64) -> Complex64 {
        self.nodes.iter().zip(&self.weights).fold(Complex64::new(0.0, 0.0), |acc, (&t, &w)| acc + f(t) * w)
    }
}

impl Quadrature for IntervalRule {
    fn len(&self) -> usize {
        self.nodes.len()
    }
    fn point(&self, i: usize) -> &[f64] {
        core::slice::from_ref(&self.nodes[i])
    }
    fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }
}

/// Gauss–Legendre rule with `order` nodes; weights sum to 2.
pub fn gauss_legendre(order: usize) -> Result<IntervalRule> {
    let mut rule = gauss_gegenbauer(order, 0.5)?;
    rule.weights.iter_mut().for_each(|w| *w *= 2.0);
    Ok(rule)
}

/// Gauss rule for the weight `(1-t²)^{λ-1/2}` (`λ > 0`), normalised so the
/// weights sum to 1.
///
/// Nodes come from the Golub–Welsch eigenproblem and are then polished by
/// Newton steps on `G_m^λ`; weights use `w_i ∝ 1 / ((1-x_i²) G_m^λ'(x_i)²)`.
pub fn gauss_gegenbauer(points: usize, lambda: f64) -> Result<IntervalRule> {
    if points == 0 {
        return Err(HupError::Domain("quadrature order must be at least 1"));
    }
    if !(lambda > 0.0) {
        return Err(HupError::OutOfRange { name: "lambda", value: lambda });
    }
    let m = points;
    let mut jacobi = DMatrix::<f64>::zeros(m, m);
    for k in 1..m {
        let kf = k as f64;
        let beta = kf * (kf + 2.0 * lambda - 1.0) / (4.0 * (kf + lambda) * (kf + lambda - 1.0));
        let b = libm::sqrt(beta);
        jacobi[(k, k - 1)] = b;
        jacobi[(k - 1, k)] = b;
    }
    let eig = SymmetricEigen::new(jacobi);
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));

    let mut weights = Vec::with_capacity(m);
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let p = gegenbauer_unchecked(m, lambda, *x);
            let dp = 2.0 * lambda * gegenbauer_unchecked(m - 1, lambda + 1.0, *x);
            if dp == 0.0 {
                break;
            }
            let dx = p / dp;
            *x -= dx;
            if libm::fabs(dx) < 1e-16 {
                break;
            }
        }
        let dp = 2.0 * lambda * gegenbauer_unchecked(m - 1, lambda + 1.0, *x);
        weights.push(1.0 / ((1.0 - *x * *x) * dp * dp));
    }
    // symmetrise: the weight is even
    for i in 0..m / 2 {
        let j = m - 1 - i;
        let x = 0.5 * (nodes[j] - nodes[i]);
        nodes[i] = -x;
        nodes[j] = x;
        let w = 0.5 * (weights[i] + weights[j]);
        weights[i] = w;
        weights[j] = w;
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    Ok(IntervalRule { nodes, weights, exactness: 2 * m - 1 })
}

/// Rule for the distribution of the height `t = ω·η` when `η` is uniform on
/// `S^{n-1}`: density `(1-t²)^{(n-3)/2} / Z_n`. Weights sum to 1.
///
/// Integrating a geodesic mean against this rule is the Fubini slicing
/// `∫ f dσ = ∫ f̃(ω, t) (1-t²)^{(n-3)/2} dt / Z_n`.
pub fn slice_rule(n: usize, points: usize) -> Result<IntervalRule> {
    if !(2..=MAX_DIM + 1).contains(&n) {
        return Err(HupError::UnsupportedDimension(n));
    }
    if n == 2 {
        if points == 0 {
            return Err(HupError::Domain("quadrature order must be at least 1"));
        }
        // Gauss–Chebyshev
        let w = 1.0 / points as f64;
        let nodes = (0..points).rev().map(|i| libm::cos((2 * i + 1) as f64 * PI / (2 * points) as f64)).collect();
        return Ok(IntervalRule { nodes, weights: vec![w; points], exactness: 2 * points - 1 });
    }
    gauss_gegenbauer(points, (n as f64 - 2.0) / 2.0)
}

/// `Z_n = ∫_{-1}^{1} (1-t²)^{(n-3)/2} dt`.
pub fn slice_normalizer(n: usize) -> f64 {
    let a = (n as f64 - 1.0) / 2.0;
    libm::sqrt(PI) * libm::exp(libm::lgamma(a) - libm::lgamma(a + 0.5))
}

/// Weighted unit vectors on `S^{n-1}`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereRule {
    dim: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    exactness: usize,
}

impl SphereRule {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn exactness(&self) -> usize {
        self.exactness
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn node(&self, i: usize) -> &[f64] {
        &self.nodes[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], f64)> + '_ {
        self.nodes.chunks_exact(self.dim).zip(self.weights.iter().copied())
    }

    /// Product rule whose height axis is `pole` instead of `e_n`:
    /// `slice_points` Gauss nodes in `t = pole·η` and a degree-`sub_degree`
    /// rule on every slice. Exact to degree `min(2·slice_points - 1, sub_degree)`.
    ///
    /// Integrands that oscillate only along one direction (plane waves) need
    /// many height nodes but few slice nodes; aligning the pole with that
    /// direction keeps the rule small.
    pub fn oriented(pole: &[f64], slice_points: usize, sub_degree: usize) -> Result<Self> {
        let n = pole.len();
        check_dim(n)?;
        check_unit(pole)?;
        let heights = slice_rule(n, slice_points)?;
        let (sub_nodes, sub_weights) = sphere_nodes(n - 1, sub_degree);
        let frame = Householder::to_pole(pole);
        let mut nodes = Vec::with_capacity(heights.nodes.len() * sub_weights.len() * n);
        let mut weights = Vec::with_capacity(heights.nodes.len() * sub_weights.len());
        let mut buf = vec![0.0; n];
        for (&t, &wt) in heights.nodes.iter().zip(&heights.weights) {
            let s = libm::sqrt((1.0 - t) * (1.0 + t));
            for (nu, &wn) in sub_nodes.chunks_exact(n - 1).zip(&sub_weights) {
                for (b, v) in buf.iter_mut().zip(nu) {
                    *b = s * v;
                }
                buf[n - 1] = t;
                frame.apply(&mut buf);
                nodes.extend_from_slice(&buf);
                weights.push(wt * wn);
            }
        }
        let exactness = core::cmp::min(heights.exactness, sub_degree);
        Ok(Self { dim: n, nodes, weights, exactness })
    }

    /// Applies an orthogonal map to every node (`map` acts in place).
    pub fn transformed(&self, mut map: impl FnMut(&mut [f64])) -> Self {
        let mut out = self.clone();
        out.nodes.chunks_exact_mut(self.dim).for_each(&mut map);
        out
    }

    pub fn integrate(&self, f: impl FnMut(&[f64]) -> Complex64) -> Complex64 {
        integrate(self, f)
    }
}

impl Quadrature for SphereRule {
    fn len(&self) -> usize {
        self.weights.len()
    }
    fn point(&self, i: usize) -> &[f64] {
        self.node(i)
    }
    fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }
}

/// Product rule on `S^{n-1}`, `2 <= n <= 6`, integrating every polynomial of
/// degree `<= order` exactly under the normalised surface measure.
pub fn sphere_rule(n: usize, order: usize) -> Result<SphereRule> {
    check_dim(n)?;
    let (nodes, weights) = sphere_nodes(n, order);
    Ok(SphereRule { dim: n, nodes, weights, exactness: order })
}

fn check_dim(n: usize) -> Result<()> {
    if (2..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(HupError::UnsupportedDimension(n))
    }
}

pub(crate) fn check_unit(v: &[f64]) -> Result<()> {
    let r = crate::norm(v);
    if libm::fabs(r - 1.0) > 1e-12 {
        return Err(HupError::Domain("pole must be a unit vector"));
    }
    Ok(())
}

/// Recursive product nodes on `S^{n-1}` (`n >= 1`), exact to `degree`.
fn sphere_nodes(n: usize, degree: usize) -> (Vec<f64>, Vec<f64>) {
    match n {
        1 => (vec![-1.0, 1.0], vec![0.5, 0.5]),
        2 => {
            let m = degree + 1;
            let mut nodes = Vec::with_capacity(2 * m);
            for j in 0..m {
                let phi = 2.0 * PI * j as f64 / m as f64;
                nodes.push(libm::cos(phi));
                nodes.push(libm::sin(phi));
            }
            (nodes, vec![1.0 / m as f64; m])
        }
        _ => {
            let heights = slice_rule(n, degree / 2 + 1).expect("dimension checked by caller");
            let (sub_nodes, sub_weights) = sphere_nodes(n - 1, degree);
            let mut nodes = Vec::with_capacity(heights.nodes.len() * sub_weights.len() * n);
            let mut weights = Vec::with_capacity(heights.nodes.len() * sub_weights.len());
            for (&t, &wt) in heights.nodes.iter().zip(&heights.weights) {
                let s = libm::sqrt((1.0 - t) * (1.0 + t));
                for (nu, &wn) in sub_nodes.chunks_exact(n - 1).zip(&sub_weights) {
                    nodes.extend(nu.iter().map(|v| s * v));
                    nodes.push(t);
                    weights.push(wt * wn);
                }
            }
            (nodes, weights)
        }
    }
}

/// Reflection `H` with `H e_n = pole`; identity when `pole = e_n`.
#[derive(Debug, Clone)]
pub(crate) struct Householder {
    v: Vec<f64>,
    scale: f64,
}

impl Householder {
    pub(crate) fn to_pole(pole: &[f64]) -> Self {
        let n = pole.len();
        let mut v: Vec<f64> = pole.iter().map(|p| -p).collect();
        v[n - 1] += 1.0;
        let vv = crate::dot(&v, &v);
        let scale = if vv < 1e-30 { 0.0 } else { 2.0 / vv };
        Self { v, scale }
    }

    pub(crate) fn apply(&self, x: &mut [f64]) {
        if self.scale == 0.0 {
            return;
        }
        let c = self.scale * crate::dot(&self.v, x);
        for (xi, vi) in x.iter_mut().zip(&self.v) {
            *xi -= c * vi;
        }
    }
}

/// Quadrature for the normalised measure on the geodesic sphere `S_ω^t`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicRule {
    pole: Vec<f64>,
    height: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GeodesicRule {
    /// The `(n-2)`-sphere of radius `√(1-t²)` in the hyperplane `ω·ν = t`,
    /// carrying a degree-`degree` product rule moved into place by a reflection.
    pub fn new(pole: &[f64], t: f64, degree: usize) -> Result<Self> {
        let n = pole.len();
        check_dim(n)?;
        check_unit(pole)?;
        if !(t > -1.0 && t < 1.0) {
            return Err(HupError::OutOfRange { name: "t", value: t });
        }
        let (sub_nodes, weights) = sphere_nodes(n - 1, degree);
        let frame = Householder::to_pole(pole);
        let s = libm::sqrt((1.0 - t) * (1.0 + t));
        let mut nodes = Vec::with_capacity(weights.len() * n);
        let mut buf = vec![0.0; n];
        for nu in sub_nodes.chunks_exact(n - 1) {
            for (b, v) in buf.iter_mut().zip(nu) {
                *b = s * v;
            }
            buf[n - 1] = t;
            frame.apply(&mut buf);
            nodes.extend_from_slice(&buf);
        }
        Ok(Self { pole: pole.to_vec(), height: t, nodes, weights })
    }

    pub fn pole(&self) -> &[f64] {
        &self.pole
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], f64)> + '_ {
        self.nodes.chunks_exact(self.pole.len()).zip(self.weights.iter().copied())
    }
}

impl Quadrature for GeodesicRule {
    fn len(&self) -> usize {
        self.weights.len()
    }
    fn point(&self, i: usize) -> &[f64] {
        let n = self.pole.len();
        &self.nodes[i * n..(i + 1) * n]
    }
    fn weight(&self, i: usize) -> f64 {
        self.weights[i]
    }
}

/// Geodesic spherical mean `f̃(ω, t)`: the average of `f` over `S_ω^t`
/// with a rule of degree `order`.
pub fn geodesic_mean(f: &SphericalDensity, omega: &[f64], t: f64, order: usize) -> Result<Complex64> {
    if f.dim() != omega.len() {
        return Err(HupError::DimensionMismatch { expected: f.dim(), found: omega.len() });
    }
    geodesic_mean_with(|x| f.eval(x), omega, t, order)
}

/// [`geodesic_mean`] for an arbitrary evaluable function.
pub fn geodesic_mean_with(
    f: impl FnMut(&[f64]) -> Result<Complex64>,
    omega: &[f64],
    t: f64,
    order: usize,
) -> Result<Complex64> {
    let rule = GeodesicRule::new(omega, t, order)?;
    try_integrate(&rule, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn legendre_small_orders() {
        let r1 = gauss_legendre(1).unwrap();
        assert_eq!(r1.nodes(), &[0.0]);
        assert!(libm::fabs(r1.weights()[0] - 2.0) < 1e-15);
        let r2 = gauss_legendre(2).unwrap();
        let x = 1.0 / libm::sqrt(3.0);
        assert!(libm::fabs(r2.nodes()[0] + x) < 1e-15 && libm::fabs(r2.nodes()[1] - x) < 1e-15);
        assert!(r2.weights().iter().all(|w| libm::fabs(w - 1.0) < 1e-15));
        assert!(libm::fabs(r2.integrate_real(|t| t * t) - 2.0 / 3.0) < 1e-15);
        assert_eq!(r2.exactness(), 3);
        assert!(gauss_legendre(0).is_err());
    }

    #[test]
    fn legendre_exactness_and_sum() {
        for order in [3usize, 10, 33, 64, 128] {
            let r = gauss_legendre(order).unwrap();
            assert!(libm::fabs(r.weights().iter().sum::<f64>() - 2.0) < 1e-13);
            assert!(r.weights().iter().all(|&w| w > 0.0));
            for d in (0..=r.exactness()).step_by(2) {
                let got = r.integrate_real(|t| libm::pow(t, d as f64));
                let want = 2.0 / (d + 1) as f64;
                assert!(libm::fabs(got - want) < 1e-13, "order {order} degree {d}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn slice_rules_integrate_their_weight() {
        // E[t^2] for the height of a uniform point on S^{n-1} is 1/n.
        for n in 2..=6 {
            let r = slice_rule(n, 8).unwrap();
            assert!(libm::fabs(r.integrate_real(|t| t * t) - 1.0 / n as f64) < 1e-14, "n = {n}");
            assert!(libm::fabs(r.integrate_real(|t| t)) < 1e-15);
        }
        assert!(libm::fabs(slice_normalizer(3) - 2.0) < 1e-14);
        assert!(libm::fabs(slice_normalizer(2) - PI) < 1e-14);
        assert!(libm::fabs(slice_normalizer(4) - PI / 2.0) < 1e-14);
    }

    #[test]
    fn sphere_rule_examples() {
        for n in 2..=6 {
            let r = sphere_rule(n, 6).unwrap();
            assert!(libm::fabs(r.weights().iter().sum::<f64>() - 1.0) < 1e-14);
            for (x, _) in r.iter() {
                assert!(libm::fabs(crate::norm(x) - 1.0) < 1e-14);
            }
            let one = r.integrate(|_| c(1.0));
            let sq = r.integrate(|x| c(x[0] * x[0]));
            let odd = r.integrate(|x| c(x[0]));
            assert!(libm::fabs(one.re - 1.0) < 1e-14);
            assert!(libm::fabs(sq.re - 1.0 / n as f64) < 1e-14, "n = {n}");
            assert!(odd.norm() < 1e-15);
        }
        assert!(sphere_rule(1, 4).is_err());
        assert!(sphere_rule(7, 4).is_err());
    }

    #[test]
    fn geodesic_rule_heights() {
        let omega = crate::normalized(&[0.3, -0.5, 0.8, 0.1]).unwrap();
        let rule = GeodesicRule::new(&omega, 0.37, 6).unwrap();
        for (x, _) in rule.iter() {
            assert!(libm::fabs(crate::dot(x, &omega) - 0.37) < 1e-12);
            assert!(libm::fabs(crate::norm(x) - 1.0) < 1e-14);
        }
        assert!(GeodesicRule::new(&omega, 1.0, 6).is_err());
        assert!(GeodesicRule::new(&[0.0, 0.0, 2.0], 0.1, 6).is_err());
    }

    #[test]
    fn geodesic_mean_examples() {
        let north = [0.0, 0.0, 1.0];
        let one = SphericalDensity::constant(3, c(1.0));
        let height = SphericalDensity::function(3, |x| c(x[2]));
        let first = SphericalDensity::function(3, |x| c(x[0]));
        for &t in &[-0.9, -0.2, 0.0, 0.55] {
            assert!((geodesic_mean(&one, &north, t, 8).unwrap() - 1.0).norm() < 1e-14);
            assert!((geodesic_mean(&height, &north, t, 8).unwrap() - t).norm() < 1e-14);
            assert!(geodesic_mean(&first, &north, t, 8).unwrap().norm() < 1e-15);
        }
        assert!(geodesic_mean(&one, &north, -1.0, 8).is_err());
        // degenerate pole -e_n
        let south = [0.0, 0.0, -1.0];
        assert!((geodesic_mean(&height, &south, 0.4, 8).unwrap() + 0.4).norm() < 1e-14);
    }
}
