//! Thin wrappers over `nalgebra` for the rank tests.

use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::error::{HupError, Result};

/// Singular values in decreasing order with the matching right singular
/// vectors (as columns of the returned list).
#[derive(Debug, Clone)]
pub struct RightSvd {
    pub singular_values: Vec<f64>,
    pub right_vectors: Vec<Vec<f64>>,
}

/// Thin SVD of a tall matrix, keeping only `Σ` and `V`.
pub fn right_svd(a: DMatrix<f64>) -> Result<RightSvd> {
    let cols = a.ncols();
    if a.nrows() < cols {
        return Err(HupError::UnderSampled { rows: a.nrows(), cols });
    }
    let svd = a.svd(false, true);
    let v_t = svd.v_t.ok_or(HupError::Linalg("SVD did not return V"))?;
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| {
        svd.singular_values[j].partial_cmp(&svd.singular_values[i]).unwrap_or(core::cmp::Ordering::Equal)
    });
    let singular_values = order.iter().map(|&i| svd.singular_values[i]).collect();
    let right_vectors = order.iter().map(|&i| v_t.row(i).iter().copied().collect()).collect();
    Ok(RightSvd { singular_values, right_vectors })
}

/// Upper-triangular `R` of a thin QR factorisation.
pub fn qr_r(a: DMatrix<f64>) -> DMatrix<f64> {
    a.qr().r()
}

/// Solves `R x = b` for upper-triangular `R`.
pub fn solve_upper(r: &DMatrix<f64>, b: &[f64]) -> Result<Vec<f64>> {
    let n = r.ncols();
    let mut x = alloc::vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = b[i];
        for j in (i + 1)..n {
            s -= r[(i, j)] * x[j];
        }
        let d = r[(i, i)];
        if d == 0.0 {
            return Err(HupError::Linalg("singular triangular factor"));
        }
        x[i] = s / d;
    }
    Ok(x)
}
