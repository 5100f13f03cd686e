//! Homogeneous polynomials in `n` variables and bases of harmonic ones.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{HupError, Result};

/// Exponent vectors of all monomials of total degree `degree` in `n`
/// variables, in lexicographically decreasing order (`x_1^d` first).
pub fn monomials(n: usize, degree: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, degree as u32, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Dense homogeneous polynomial over the monomials of [`monomials`].
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPoly {
    n: usize,
    degree: usize,
    monomials: Vec<Vec<u32>>,
    coeffs: Vec<f64>,
}

impl HomogeneousPoly {
    pub fn zero(n: usize, degree: usize) -> Self {
        let monomials = monomials(n, degree);
        let coeffs = vec![0.0; monomials.len()];
        Self { n, degree, monomials, coeffs }
    }

    /// Builds a polynomial from coefficients listed in [`monomials`] order.
    pub fn new(n: usize, degree: usize, coeffs: Vec<f64>) -> Result<Self> {
        let monomials = monomials(n, degree);
        if monomials.len() != coeffs.len() {
            return Err(HupError::DimensionMismatch { expected: monomials.len(), found: coeffs.len() });
        }
        Ok(Self { n, degree, monomials, coeffs })
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms(n: usize, degree: usize, terms: &[(&[u32], f64)]) -> Result<Self> {
        let mut p = Self::zero(n, degree);
        for (e, c) in terms {
            if e.len() != n || e.iter().sum::<u32>() as usize != degree {
                return Err(HupError::Domain("term is not a monomial of the stated degree"));
            }
            let idx = p.monomials.iter().position(|m| m.as_slice() == *e).expect("monomial present");
            p.coeffs[idx] += c;
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coefficient(&self, exps: &[u32]) -> f64 {
        self.monomials.iter().position(|m| m.as_slice() == exps).map_or(0.0, |i| self.coeffs[i])
    }

    pub fn coeff_norm(&self) -> f64 {
        libm::sqrt(self.coeffs.iter().map(|c| c * c).sum())
    }

    pub fn scaled(mut self, s: f64) -> Self {
        self.coeffs.iter_mut().for_each(|c| *c *= s);
        self
    }

    /// `Σ a_j p_j` for polynomials of identical shape.
    pub fn combination(parts: &[HomogeneousPoly], weights: &[f64]) -> Result<Self> {
        let first = parts.first().ok_or(HupError::Domain("empty combination"))?;
        let mut out = Self::zero(first.n, first.degree);
        for (p, &w) in parts.iter().zip(weights) {
            if p.n != first.n || p.degree != first.degree {
                return Err(HupError::DimensionMismatch { expected: first.degree, found: p.degree });
            }
            for (o, c) in out.coeffs.iter_mut().zip(&p.coeffs) {
                *o += w * c;
            }
        }
        Ok(out)
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.n);
        let mut powers = vec![1.0; self.n * (self.degree + 1)];
        for (i, &xi) in x.iter().enumerate() {
            for e in 1..=self.degree {
                powers[i * (self.degree + 1) + e] = powers[i * (self.degree + 1) + e - 1] * xi;
            }
        }
        self.monomials
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, &c)| c != 0.0)
            .map(|(m, &c)| {
                c * m.iter().enumerate().map(|(i, &e)| powers[i * (self.degree + 1) + e as usize]).product::<f64>()
            })
            .sum()
    }

    /// Exact Laplacian, a homogeneous polynomial of degree `degree - 2`
    /// (the zero polynomial of degree 0 when `degree < 2`).
    pub fn laplacian(&self) -> Self {
        if self.degree < 2 {
            return Self::zero(self.n, 0);
        }
        let mut out = Self::zero(self.n, self.degree - 2);
        let index: BTreeMap<&[u32], usize> = out.monomials.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let mut target = vec![0u32; self.n];
        let mut updates = Vec::new();
        for (m, &c) in self.monomials.iter().zip(&self.coeffs) {
            if c == 0.0 {
                continue;
            }
            for i in 0..self.n {
                if m[i] >= 2 {
                    target.copy_from_slice(m);
                    target[i] -= 2;
                    updates.push((index[target.as_slice()], c * (m[i] * (m[i] - 1)) as f64));
                }
            }
        }
        for (i, v) in updates {
            out.coeffs[i] += v;
        }
        out
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| if libm::fabs(*c) > m { libm::fabs(*c) } else { m })
    }
}

/// Sparse polynomial keyed by exponent vectors.
type Sparse = BTreeMap<Vec<u32>, f64>;

fn sparse_laplacian(p: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (e, &c) in p {
        for i in 0..e.len() {
            if e[i] >= 2 {
                let mut t = e.clone();
                t[i] -= 2;
                *out.entry(t).or_insert(0.0) += c * (e[i] * (e[i] - 1)) as f64;
            }
        }
    }
    out
}

/// A basis of the degree-`l` homogeneous harmonic polynomials in `n`
/// variables (`n >= 2`).
///
/// For every monomial `q` in `x_2..x_n` of degree `l - ε`, `ε ∈ {0, 1}`, the
/// polynomial `Σ_k (-1)^k x_1^{2k+ε} / (2k+ε)! · Δ'^k q` is harmonic, where
/// `Δ'` is the Laplacian in `x_2..x_n`. These are linearly independent and
/// there are `dim H_l` of them.
pub fn harmonic_basis(n: usize, l: usize) -> Result<Vec<HomogeneousPoly>> {
    if n < 2 {
        return Err(HupError::UnsupportedDimension(n));
    }
    let mut basis = Vec::new();
    for eps in 0..=core::cmp::min(1, l) {
        for q in monomials(n - 1, l - eps) {
            let mut full = HomogeneousPoly::zero(n, l);
            let index: BTreeMap<Vec<u32>, usize> =
                full.monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut current: Sparse = Sparse::new();
            current.insert(q, 1.0);
            let mut k = 0usize;
            let mut factorial = 1.0; // (2k+ε)!
            while !current.is_empty() {
                let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
                let power = (2 * k + eps) as u32;
                for (e, &c) in &current {
                    if c == 0.0 {
                        continue;
                    }
                    let mut exps = Vec::with_capacity(n);
                    exps.push(power);
                    exps.extend_from_slice(e);
                    full.coeffs[index[&exps]] += sign * c / factorial;
                }
                current = sparse_laplacian(&current);
                current.retain(|_, c| *c != 0.0);
                k += 1;
                factorial *= ((2 * k + eps - 1) * (2 * k + eps)) as f64;
            }
            basis.push(full);
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(2, 5).len(), 6);
        assert_eq!(monomials(4, 3).len(), 20);
        assert_eq!(monomials(3, 2)[0], vec![2, 0, 0]);
    }

    #[test]
    fn laplacian_of_quadratic() {
        let p = HomogeneousPoly::from_terms(3, 2, &[(&[2, 0, 0], 1.0), (&[0, 1, 1], 3.0), (&[0, 0, 2], -0.5)]).unwrap();
        let lap = p.laplacian();
        assert_eq!(lap.degree(), 0);
        assert_eq!(lap.coeffs(), &[1.0]);
        assert_eq!(p.eval(&[1.0, 2.0, 3.0]), 1.0 + 18.0 - 4.5);
    }

    #[test]
    fn basis_is_harmonic_with_expected_size() {
        for n in 2..=5 {
            for l in 0..=6 {
                let basis = harmonic_basis(n, l).unwrap();
                assert_eq!(basis.len(), crate::sphharm::dim_harmonic(n, l), "n = {n}, l = {l}");
                for p in &basis {
                    assert!(p.laplacian().max_abs_coeff() < 1e-12);
                }
            }
        }
    }
}
