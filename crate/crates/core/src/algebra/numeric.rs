//! `f64`-only helpers: symmetric eigendecomposition (cyclic Jacobi) and singular-value
//! based kernel extraction for numeric-mode rank decisions.

use alloc::vec::Vec;

use super::matrix::Mat;
use super::scalar::f64_sqrt;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a symmetric matrix,
/// by cyclic Jacobi sweeps. Deterministic: fixed sweep order, fixed iteration cap.
pub fn sym_eigen(a: &Mat<f64>) -> (Vec<f64>, Mat<f64>) {
    let n = a.rows();
    assert_eq!(n, a.cols(), "sym_eigen needs a square matrix");
    let mut m = a.clone();
    let mut v = Mat::<f64>::identity(n);
    for _sweep in 0..60 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[(p, q)] * m[(p, q)];
            }
        }
        if off <= 1e-30 * (1.0 + m.frobenius_f64().powi(2)) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let tau = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + f64_sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + f64_sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / f64_sqrt(1.0 + t * t);
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].partial_cmp(&m[(j, j)]).unwrap());
    let eigenvalues = order.iter().map(|&i| m[(i, i)]).collect();
    let vectors = Mat::from_fn(n, n, |i, j| v[(i, order[j])]);
    (eigenvalues, vectors)
}

/// Smallest singular value of a rectangular matrix, via `AᵀA` eigenvalues.
pub fn min_singular_value(a: &Mat<f64>) -> f64 {
    let ata = a.transpose().matmul(a);
    let (eig, _) = sym_eigen(&ata);
    f64_sqrt(eig.first().copied().unwrap_or(0.0).max(0.0))
}

/// Kernel basis of `A` by singular-value thresholding: right singular vectors whose
/// singular value is at most `rel_tol` times the largest one. Returns column vectors.
pub fn kernel_by_svd(a: &Mat<f64>, rel_tol: f64) -> Vec<Mat<f64>> {
    let n = a.cols();
    let ata = a.transpose().matmul(a);
    let (eig, vecs) = sym_eigen(&ata);
    let sigma: Vec<f64> = eig.iter().map(|&l| f64_sqrt(l.max(0.0))).collect();
    let sigma_max = sigma.last().copied().unwrap_or(0.0);
    let mut kernel = Vec::new();
    for (k, &s) in sigma.iter().enumerate() {
        if s <= rel_tol * sigma_max || sigma_max == 0.0 {
            kernel.push(Mat::from_fn(n, 1, |i, _| vecs[(i, k)]));
        }
    }
    kernel
}
