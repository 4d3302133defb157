//! Derives the material symmetry class that a periodic inclusion lattice imposes on the
//! effective 6×6 elasticity matrix of a two-phase composite.
//!
//! Symmetric second-order tensors are expanded on an orthonormal tensor basis built from the
//! lattice directors (a Mandel-type "normalized Voigt" convention with √2-weighted shear
//! elements). An isometry `S` of the lattice then acts on 6-vectors through an induced
//! orthogonal 6×6 matrix `Ŝ`, and an elasticity matrix `C` admits `S` as a material symmetry
//! exactly when `C Ŝ = Ŝ C`. Stacking these commutation constraints over the lattice point
//! group and solving them exactly yields the admissible subspace of elasticity matrices and
//! its symmetry class.
//!
//! Every matrix arising from the built-in lattices lives in the real quadratic tower
//! ℚ(√2,√3), so the whole pipeline runs in exact arithmetic ([`algebra::FieldElement`]);
//! `f64` is supported as a fallback scalar for inputs outside the field.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion `lattisym` crate adds
//! file formats and a command-line front end.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod lattice;
pub mod symmetry;
pub mod voigt;

pub use algebra::{AlgebraError, FieldElement, Mat, Rational, Scalar};
pub use lattice::{Isometry, IsometryKind, Lattice, LatticeError, PointGroup};
pub use symmetry::{
    classify, commutant, constrain_by_lattice, is_material_symmetry, is_positive_definite,
    isotropy_distance, material_symmetries_beyond_lattice, Ambient, Classification,
    ConstrainedSpace, SymmetryClass, SymmetryError,
};
pub use voigt::{
    apply_c, build_basis, from_voigt, induced_transform, to_fourth_order, to_voigt,
    ElasticityMatrix, FourthOrderTensor, TensorBasis, VoigtError, VoigtTransform,
};

/// Relative tolerance for rank decisions and orthogonality checks in numeric (`f64`) mode.
/// An entry counts as zero during elimination when `|entry| <= EPS_REL * row_scale`.
pub const EPS_REL: f64 = 1e-9;

/// Scalar mode of a computation. Generic code is monomorphized per mode, so values of
/// different modes cannot be mixed; this tag is only used at I/O boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        }
    }
}
