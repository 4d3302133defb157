//! Normalized Voigt (Mandel) representation: the orthonormal tensor basis built from the
//! directors, 6-vector round trips for symmetric tensors, the induced 6×6 transform of an
//! isometry, and the fourth-order view of a 6×6 elasticity matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Mat, Scalar};
use crate::lattice::Isometry;

/// Unordered director pairs carried by the shear slots 4, 5, 6 (0-based 3, 4, 5):
/// (l₂,l₃), (l₃,l₁), (l₁,l₂).
const SHEAR_PAIRS: [(usize, usize); 3] = [(1, 2), (2, 0), (0, 1)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VoigtError {
    NonOrthonormalDirectors,
    AsymmetricInput,
}

impl fmt::Display for VoigtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VoigtError::NonOrthonormalDirectors => write!(f, "directors are not orthonormal"),
            VoigtError::AsymmetricInput => write!(f, "input tensor is not symmetric"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for VoigtError {}

/// The six basis tensors Z₁..Z₆: director dyads on the diagonal slots and √2-normalized
/// symmetrized dyads on the shear slots. Orthonormal under `A:B = tr(AᵀB)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorBasis<S> {
    z: [Mat<S>; 6],
}

impl<S: Scalar> TensorBasis<S> {
    pub fn tensor(&self, k: usize) -> &Mat<S> {
        &self.z[k]
    }

    pub fn tensors(&self) -> &[Mat<S>; 6] {
        &self.z
    }
}

/// Builds the tensor basis from orthonormal directors (matrix columns).
pub fn build_basis<S: Scalar>(directors: &Mat<S>) -> Result<TensorBasis<S>, VoigtError> {
    assert_eq!((directors.rows(), directors.cols()), (3, 3));
    if !directors
        .transpose()
        .matmul(directors)
        .eq_approx(&Mat::identity(3))
    {
        return Err(VoigtError::NonOrthonormalDirectors);
    }
    let dyad = |a: usize, b: usize| {
        Mat::from_fn(3, 3, |i, j| {
            directors[(i, a)].clone() * directors[(j, b)].clone()
        })
    };
    let inv_sqrt2 = S::sqrt2().inv().expect("sqrt2 is nonzero");
    let shear = |(a, b): (usize, usize)| dyad(a, b).add(&dyad(b, a)).scale(&inv_sqrt2);
    Ok(TensorBasis {
        z: [
            dyad(0, 0),
            dyad(1, 1),
            dyad(2, 2),
            shear(SHEAR_PAIRS[0]),
            shear(SHEAR_PAIRS[1]),
            shear(SHEAR_PAIRS[2]),
        ],
    })
}

/// Components of a symmetric tensor on the basis: `εₖ = t : Zₖ`.
pub fn to_voigt<S: Scalar>(t: &Mat<S>, basis: &TensorBasis<S>) -> Result<Mat<S>, VoigtError> {
    if !t.is_symmetric() {
        return Err(VoigtError::AsymmetricInput);
    }
    Ok(Mat::from_fn(6, 1, |k, _| t.dot(basis.tensor(k))))
}

/// Reassembles the tensor `Σₖ εₖ Zₖ`.
pub fn from_voigt<S: Scalar>(v: &Mat<S>, basis: &TensorBasis<S>) -> Mat<S> {
    assert_eq!((v.rows(), v.cols()), (6, 1));
    let mut acc = Mat::zeros(3, 3);
    for k in 0..6 {
        acc = acc.add(&basis.tensor(k).scale(&v[(k, 0)]));
    }
    acc
}

/// The induced orthogonal action of an isometry on normalized Voigt vectors.
///
/// `Ŝ ε` gives the components on the original basis of the tensor whose components on the
/// transformed basis `Z̃ₖ = S Zₖ Sᵀ` are `ε`; equivalently `to_voigt(S t Sᵀ) = Ŝ·to_voigt(t)`.
/// The inverse direction is `Ŝᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct VoigtTransform<S> {
    mat: Mat<S>,
}

impl<S: Scalar> VoigtTransform<S> {
    pub fn mat(&self) -> &Mat<S> {
        &self.mat
    }
}

/// Builds `Ŝ` from the isometry's director-basis components, block by block:
/// squares, √2-weighted products, and symmetrized two-index products.
pub fn induced_transform<S: Scalar>(iso: &Isometry<S>) -> VoigtTransform<S> {
    let s = iso.mat();
    let sqrt2 = S::sqrt2();
    let mat = Mat::from_fn(6, 6, |j, k| match (j < 3, k < 3) {
        (true, true) => s[(j, k)].clone() * s[(j, k)].clone(),
        (true, false) => {
            let (p, q) = SHEAR_PAIRS[k - 3];
            sqrt2.clone() * s[(j, p)].clone() * s[(j, q)].clone()
        }
        (false, true) => {
            let (p, q) = SHEAR_PAIRS[j - 3];
            sqrt2.clone() * s[(p, k)].clone() * s[(q, k)].clone()
        }
        (false, false) => {
            let (pj, qj) = SHEAR_PAIRS[j - 3];
            let (pk, qk) = SHEAR_PAIRS[k - 3];
            s[(pj, pk)].clone() * s[(qj, qk)].clone()
                + s[(pj, qk)].clone() * s[(qj, pk)].clone()
        }
    });
    VoigtTransform { mat }
}

/// 6×6 matrix of material coefficients relating normalized Voigt strain to stress.
/// `symmetric_mode` opts into the 21-parameter hyperelastic restriction `C = Cᵀ`; it is off
/// by default since none of the symmetry arguments need it.
#[derive(Debug, Clone, PartialEq)]
pub struct ElasticityMatrix<S> {
    mat: Mat<S>,
    symmetric_mode: bool,
}

impl<S: Scalar> ElasticityMatrix<S> {
    pub fn new(mat: Mat<S>, symmetric_mode: bool) -> Result<Self, VoigtError> {
        assert_eq!((mat.rows(), mat.cols()), (6, 6), "elasticity matrix is 6x6");
        if symmetric_mode && !mat.is_symmetric() {
            return Err(VoigtError::AsymmetricInput);
        }
        Ok(ElasticityMatrix {
            mat,
            symmetric_mode,
        })
    }

    pub fn mat(&self) -> &Mat<S> {
        &self.mat
    }

    pub fn symmetric_mode(&self) -> bool {
        self.symmetric_mode
    }

    /// Isotropic instance with diagonal block value `a` and shear value `b`
    /// (off-diagonal block entries `a - b`).
    pub fn isotropic(a: S, b: S) -> Self {
        let off = a.clone() - b.clone();
        let mat = Mat::from_fn(6, 6, |i, j| {
            if i == j {
                if i < 3 {
                    a.clone()
                } else {
                    b.clone()
                }
            } else if i < 3 && j < 3 {
                off.clone()
            } else {
                S::zero()
            }
        });
        ElasticityMatrix {
            mat,
            symmetric_mode: true,
        }
    }

    /// Cubic instance: diagonal block `a`, off-diagonal block `b`, shear diagonal `c`.
    pub fn cubic(a: S, b: S, c: S) -> Self {
        let mat = Mat::from_fn(6, 6, |i, j| {
            if i == j {
                if i < 3 {
                    a.clone()
                } else {
                    c.clone()
                }
            } else if i < 3 && j < 3 {
                b.clone()
            } else {
                S::zero()
            }
        });
        ElasticityMatrix {
            mat,
            symmetric_mode: true,
        }
    }

    /// Conversion from the standard (engineering) Voigt stiffness matrix, which pairs
    /// stresses (σ11,σ22,σ33,σ23,σ13,σ12) with engineering strains carrying doubled shear.
    /// Interoperability helper only; the normalized convention is the public interface.
    pub fn from_standard_voigt(mat: Mat<S>, symmetric_mode: bool) -> Result<Self, VoigtError> {
        let sqrt2 = S::sqrt2();
        let f = |i: usize| if i < 3 { S::one() } else { sqrt2.clone() };
        let scaled = Mat::from_fn(6, 6, |i, j| mat[(i, j)].clone() * f(i) * f(j));
        ElasticityMatrix::new(scaled, symmetric_mode)
    }

    /// Inverse of [`ElasticityMatrix::from_standard_voigt`].
    pub fn to_standard_voigt(&self) -> Mat<S> {
        let inv_sqrt2 = S::sqrt2().inv().expect("sqrt2 is nonzero");
        let f = |i: usize| if i < 3 { S::one() } else { inv_sqrt2.clone() };
        Mat::from_fn(6, 6, |i, j| self.mat[(i, j)].clone() * f(i) * f(j))
    }
}

/// All 81 components of the elasticity tensor `ℂ_αβγδ = Σ C_ik Zᵢ^αβ Zₖ^γδ`. The minor
/// symmetries hold by construction because the basis tensors are symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct FourthOrderTensor<S> {
    data: Vec<S>,
}

#[inline]
fn idx4(a: usize, b: usize, g: usize, d: usize) -> usize {
    ((a * 3 + b) * 3 + g) * 3 + d
}

impl<S: Scalar> FourthOrderTensor<S> {
    pub fn component(&self, a: usize, b: usize, g: usize, d: usize) -> &S {
        &self.data[idx4(a, b, g, d)]
    }

    /// Contraction `(ℂ:E)_αβ = Σ_γδ ℂ_αβγδ E_γδ`.
    pub fn contract(&self, e: &Mat<S>) -> Mat<S> {
        assert_eq!((e.rows(), e.cols()), (3, 3));
        Mat::from_fn(3, 3, |a, b| {
            let mut acc = S::zero();
            for g in 0..3 {
                for d in 0..3 {
                    acc = acc + self.component(a, b, g, d).clone() * e[(g, d)].clone();
                }
            }
            acc
        })
    }

    /// Reads the 6×6 matrix back: `C_ik = Zᵢ : (ℂ : Zₖ)`.
    pub fn to_matrix(&self, basis: &TensorBasis<S>) -> Mat<S> {
        Mat::from_fn(6, 6, |i, k| {
            basis.tensor(i).dot(&self.contract(basis.tensor(k)))
        })
    }
}

/// Expands the 6×6 matrix into its 81 fourth-order components on the given basis.
pub fn to_fourth_order<S: Scalar>(
    c: &ElasticityMatrix<S>,
    basis: &TensorBasis<S>,
) -> FourthOrderTensor<S> {
    let mut data = vec![S::zero(); 81];
    for i in 0..6 {
        for k in 0..6 {
            let cik = &c.mat()[(i, k)];
            if cik.is_zero() {
                continue;
            }
            let zi = basis.tensor(i);
            let zk = basis.tensor(k);
            for a in 0..3 {
                for b in 0..3 {
                    for g in 0..3 {
                        for d in 0..3 {
                            let term = cik.clone() * zi[(a, b)].clone() * zk[(g, d)].clone();
                            let slot = &mut data[idx4(a, b, g, d)];
                            *slot = slot.clone() + term;
                        }
                    }
                }
            }
        }
    }
    FourthOrderTensor { data }
}

/// Stress response through the 6×6 path: `from_voigt(C · to_voigt(e))`. Agrees with the
/// fourth-order contraction componentwise.
pub fn apply_c<S: Scalar>(
    c: &ElasticityMatrix<S>,
    e: &Mat<S>,
    basis: &TensorBasis<S>,
) -> Result<Mat<S>, VoigtError> {
    let eps = to_voigt(e, basis)?;
    let tau = c.mat().matmul(&eps);
    Ok(from_voigt(&tau, basis))
}
