//! Dense row-major matrices over any [`Scalar`], with Gauss–Jordan elimination.
//!
//! Pivot selection scans columns left to right and takes the first usable row, with no
//! magnitude pivoting: in exact mode any nonzero entry works, and in numeric mode an entry
//! is usable when it exceeds `EPS_REL` times the max-abs entry of its row at elimination
//! time. This keeps reduced forms, nullspace bases and downstream parameter names fully
//! deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use super::scalar::{AlgebraError, Scalar};

/// Dense `rows × cols` matrix, row-major. Values are immutable in practice: all operations
/// return new matrices, so sharing across threads is safe.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged row lengths in Mat::from_rows"
        );
        Mat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// 3×3 matrix from integer literals (test and catalog convenience).
    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat::from_fn(3, 3, |i, j| S::from_int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_f64(&self) -> Mat<f64> {
        self.map(Scalar::to_f64)
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        Mat::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                let b = &rhs[(k, j)];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * b.clone();
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Entrywise equality at the scalar's tolerance (exact equality in exact mode).
    pub fn eq_approx(&self, rhs: &Self) -> bool {
        (self.rows, self.cols) == (rhs.rows, rhs.cols)
            && self
                .data
                .iter()
                .zip(&rhs.data)
                .all(|(a, b)| a.eq_approx(b))
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if !self[(i, j)].eq_approx(&self[(j, i)]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn frobenius_sq(&self) -> S {
        let mut acc = S::zero();
        for x in &self.data {
            acc = acc + x.clone() * x.clone();
        }
        acc
    }

    pub fn frobenius_f64(&self) -> f64 {
        super::scalar::f64_sqrt(self.data.iter().map(|x| x.to_f64().powi(2)).sum())
    }

    /// Sum of entrywise products, `tr(AᵀB)`.
    pub fn dot(&self, rhs: &Self) -> S {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut acc = S::zero();
        for (a, b) in self.data.iter().zip(&rhs.data) {
            acc = acc + a.clone() * b.clone();
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn row_scale_f64(&self, r: usize) -> f64 {
        self.row(r)
            .iter()
            .map(Scalar::abs_f64)
            .fold(0.0, f64::max)
    }

    /// Reduced row-echelon form and the pivot column indices.
    ///
    /// In numeric mode each row carries a running magnitude scale (its max-abs entry,
    /// grown by the magnitudes combined into it), so cancellation noise from O(1) inputs
    /// is treated as zero rather than promoted to a pivot.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut scales: Vec<f64> = if S::EXACT {
            Vec::new()
        } else {
            (0..m.rows).map(|r| m.row_scale_f64(r)).collect()
        };
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let mut sel = None;
            for r in pr..m.rows {
                let scale = if S::EXACT { 0.0 } else { scales[r] };
                if !m[(r, col)].negligible(scale) {
                    sel = Some(r);
                    break;
                }
            }
            let Some(r) = sel else { continue };
            m.swap_rows(pr, r);
            if !S::EXACT {
                scales.swap(pr, r);
            }
            let inv = m[(pr, col)].inv().expect("pivot entry is nonzero");
            for c in col..m.cols {
                m[(pr, c)] = m[(pr, c)].clone() * inv.clone();
            }
            m[(pr, col)] = S::one();
            if !S::EXACT {
                scales[pr] = (scales[pr] * inv.abs_f64()).max(m.row_scale_f64(pr));
            }
            for r2 in 0..m.rows {
                if r2 == pr || m[(r2, col)].is_zero() {
                    continue;
                }
                let f = m[(r2, col)].clone();
                if !S::EXACT {
                    scales[r2] = scales[r2].max(f.abs_f64() * scales[pr]);
                }
                for c in col..m.cols {
                    m[(r2, c)] = m[(r2, c)].clone() - f.clone() * m[(pr, c)].clone();
                }
                m[(r2, col)] = S::zero();
            }
            pivots.push(col);
            pr += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self·x = 0}` as column vectors, one per free column of the RREF.
    /// The free variable is set to one and the others to zero, free columns ascending.
    pub fn nullspace(&self) -> Vec<Mat<S>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = Mat::zeros(self.cols, 1);
            v[(free, 0)] = S::one();
            for (row, &pcol) in pivots.iter().enumerate() {
                v[(pcol, 0)] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = S::one();
        for col in 0..n {
            let mut sel = None;
            for r in col..n {
                let scale = if S::EXACT { 0.0 } else { self.row_scale_f64(r) };
                if !m[(r, col)].negligible(scale) {
                    sel = Some(r);
                    break;
                }
            }
            let Some(r) = sel else { return S::zero() };
            if r != col {
                m.swap_rows(col, r);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("pivot entry is nonzero");
            for r2 in (col + 1)..n {
                if m[(r2, col)].is_zero() {
                    continue;
                }
                let f = m[(r2, col)].clone() * inv.clone();
                for c in col..n {
                    m[(r2, c)] = m[(r2, c)].clone() - f.clone() * m[(col, c)].clone();
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let (red, pivots) = aug.rref();
        if pivots != (0..n).collect::<Vec<_>>() {
            return Err(AlgebraError::Singular);
        }
        Ok(Mat::from_fn(n, n, |i, j| red[(i, n + j)].clone()))
    }
}

impl<S> Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Debug> fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?}", self.data[i * self.cols + j])?;
                if j + 1 < self.cols {
                    write!(f, ", ")?;
                }
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// Row-space (subspace) utilities. A subspace of S^n is represented by a matrix
// whose rows span it; the RREF of that matrix is the unique canonical basis,
// so canonical forms compare by equality.
// ---------------------------------------------------------------------------

/// Unique canonical basis of the row space: RREF with zero rows dropped.
pub fn row_space_canonical<S: Scalar>(rows: &Mat<S>) -> Mat<S> {
    let (r, pivots) = rows.rref();
    Mat::from_fn(pivots.len(), rows.cols(), |i, j| r[(i, j)].clone())
}

pub fn row_spaces_equal<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> bool {
    let ca = row_space_canonical(a);
    let cb = row_space_canonical(b);
    if S::EXACT {
        ca == cb
    } else {
        ca.eq_approx(&cb)
    }
}

/// Canonical basis of the intersection of two row spaces.
///
/// Solves `x·A = y·B` through the nullspace of the stacked columns `[Aᵀ | -Bᵀ]`.
pub fn intersect_row_spaces<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    assert_eq!(a.cols(), b.cols(), "ambient dimension mismatch");
    let n = a.cols();
    let (da, db) = (a.rows(), b.rows());
    let stacked = Mat::from_fn(n, da + db, |i, j| {
        if j < da {
            a[(j, i)].clone()
        } else {
            -b[(j - da, i)].clone()
        }
    });
    let kernel = stacked.nullspace();
    let combos = Mat::from_fn(kernel.len(), n, |k, j| {
        let mut acc = S::zero();
        for i in 0..da {
            acc = acc + kernel[k][(i, 0)].clone() * a[(i, j)].clone();
        }
        acc
    });
    row_space_canonical(&combos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldElement;

    type FMat = Mat<FieldElement>;

    fn fem(rows: Vec<Vec<i64>>) -> FMat {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(FieldElement::from_int).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = FMat::identity(3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);

        let z = FMat::zeros(2, 3);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_already_reduced() {
        let m = fem(vec![vec![1, 1, 0, 0], vec![0, 0, 1, -1]]);
        let (r, p) = m.rref();
        assert_eq!(r, m);
        assert_eq!(p, vec![0, 2]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = fem(vec![vec![2, 4, -2], vec![1, 1, 1], vec![3, 5, -1]]);
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn nullspace_examples() {
        assert!(FMat::identity(4).nullspace().is_empty());

        let z = FMat::zeros(1, 3);
        assert_eq!(z.nullspace().len(), 3);

        let m = fem(vec![vec![1, -1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        let expect0 = fem(vec![vec![1], vec![1], vec![0]]);
        let expect1 = fem(vec![vec![0], vec![0], vec![1]]);
        assert_eq!(ns[0], expect0);
        assert_eq!(ns[1], expect1);
    }

    #[test]
    fn rank_nullity_and_kernel_membership() {
        let m = fem(vec![vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 0, 1]]);
        let ns = m.nullspace();
        assert_eq!(m.rank() + ns.len(), m.cols());
        for v in &ns {
            assert!(m.matmul(v).is_zero());
        }
    }

    #[test]
    fn det_and_inverse() {
        let m = fem(vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert_eq!(m.det(), FieldElement::from_int(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), FMat::identity(3));

        let sing = fem(vec![vec![1, 2], vec![2, 4]]);
        assert!(sing.det().is_zero());
        assert_eq!(sing.inverse(), Err(AlgebraError::Singular));
    }

    #[test]
    fn numeric_rref_uses_relative_tolerance() {
        let m: Mat<f64> = Mat::from_rows(vec![vec![1.0, 2.0], vec![1.0, 2.0 + 1e-15]]);
        // The second row becomes numerically zero after elimination.
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn row_space_utilities() {
        let a = fem(vec![vec![1, 0, 1], vec![0, 1, 0]]);
        let b = fem(vec![vec![1, 1, 1], vec![2, 1, 2]]);
        assert!(row_spaces_equal(&a, &b));
        let c = fem(vec![vec![1, 0, 0]]);
        assert!(!row_spaces_equal(&a, &c));

        let d = fem(vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let e = fem(vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let inter = intersect_row_spaces(&d, &e);
        assert_eq!(inter, fem(vec![vec![0, 1, 0]]));
    }
}
