//! Commutation constraints `C Ŝ = Ŝ C`: assembling them for sets of isometries, solving for
//! the admissible subspace of elasticity matrices, and classifying that subspace against the
//! canonical symmetry classes expressed on the director frame.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{numeric, row_space_canonical, row_spaces_equal, Mat, Scalar};
use crate::lattice::{Isometry, Lattice, LatticeError};
use crate::voigt::{induced_transform, ElasticityMatrix};
use crate::EPS_REL;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    /// Positive-definiteness is only defined for `symmetric_mode` matrices.
    AsymmetricInput,
    /// Isotropy distance of the zero matrix is undefined.
    ZeroMatrix,
}

impl fmt::Display for SymmetryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryError::AsymmetricInput => write!(f, "matrix is not in symmetric mode"),
            SymmetryError::ZeroMatrix => write!(f, "zero matrix has no isotropy distance"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SymmetryError {}

/// Ambient space of elasticity matrices the constraints act on: all 36 entries, or the
/// 21-dimensional symmetric patch (`C = Cᵀ`, the hyperelastic restriction).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Full36,
    Sym21,
}

impl Ambient {
    pub fn dim(self) -> usize {
        match self {
            Ambient::Full36 => 36,
            Ambient::Sym21 => 21,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Ambient::Full36 => "full36",
            Ambient::Sym21 => "sym21",
        }
    }

    /// Coordinate slots: all (row, col) pairs for Full36, upper-triangle pairs for Sym21.
    fn coords(self) -> Vec<(usize, usize)> {
        match self {
            Ambient::Full36 => (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).collect(),
            Ambient::Sym21 => (0..6).flat_map(|i| (i..6).map(move |j| (i, j))).collect(),
        }
    }

    fn unit_basis<S: Scalar>(self) -> Vec<Mat<S>> {
        self.coords()
            .into_iter()
            .map(|(i, j)| {
                let mut m = Mat::zeros(6, 6);
                m[(i, j)] = S::one();
                if self == Ambient::Sym21 {
                    m[(j, i)] = S::one();
                }
                m
            })
            .collect()
    }

    fn mat_to_coords<S: Scalar>(self, m: &Mat<S>) -> Vec<S> {
        self.coords()
            .into_iter()
            .map(|(i, j)| m[(i, j)].clone())
            .collect()
    }

    fn coords_to_mat<S: Scalar>(self, row: &[S]) -> Mat<S> {
        let mut m = Mat::zeros(6, 6);
        for (slot, (i, j)) in self.coords().into_iter().enumerate() {
            m[(i, j)] = row[slot].clone();
            if self == Ambient::Sym21 {
                m[(j, i)] = row[slot].clone();
            }
        }
        m
    }
}

fn vec36<S: Scalar>(m: &Mat<S>) -> Vec<S> {
    m.entries().to_vec()
}

/// The linear operator `C ↦ C Ŝ − Ŝ C` restricted to the span of `basis`, with all 36
/// commutator entries as rows (the commutator of a symmetric matrix need not be symmetric,
/// so the rows are not reduced in Sym21 mode). Its kernel is the commutant within the span.
pub struct CommutationOperator<S> {
    mat: Mat<S>,
}

impl<S: Scalar> CommutationOperator<S> {
    pub fn build(hat: &Mat<S>, basis: &[Mat<S>]) -> Self {
        let columns: Vec<Vec<S>> = basis
            .iter()
            .map(|b| vec36(&b.matmul(hat).sub(&hat.matmul(b))))
            .collect();
        let mat = Mat::from_fn(36, basis.len(), |r, c| columns[c][r].clone());
        CommutationOperator { mat }
    }

    pub fn mat(&self) -> &Mat<S> {
        &self.mat
    }

    /// Kernel coefficient vectors: exact nullspace in exact mode, singular-value
    /// thresholding at `EPS_REL` in numeric mode.
    pub fn kernel(&self) -> Vec<Mat<S>> {
        if S::EXACT {
            self.mat.nullspace()
        } else {
            numeric::kernel_by_svd(&self.mat.to_f64(), EPS_REL)
                .into_iter()
                .map(|v| v.map(|x| S::from_f64(*x)))
                .collect()
        }
    }
}

/// Linear subspace of elasticity matrices commuting with a set of induced transforms.
///
/// The stored basis is the unique reduced row-echelon basis of the subspace over the
/// ambient coordinates, so equal subspaces compare equal; parameter `pᵢ` names the i-th
/// basis element and `pivots()[i]` is its leading coordinate (ascending).
#[derive(Debug, Clone)]
pub struct ConstrainedSpace<S> {
    ambient: Ambient,
    basis: Vec<ElasticityMatrix<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> ConstrainedSpace<S> {
    /// Canonicalizes the span of the given 6×6 matrices into a constrained space
    /// (Sym21 expects symmetric spanning matrices).
    pub fn from_span(ambient: Ambient, span: &[Mat<S>]) -> Self {
        let rows = Mat::from_fn(span.len(), ambient.dim(), |i, j| {
            ambient.mat_to_coords(&span[i])[j].clone()
        });
        let (red, pivots) = rows.rref();
        let basis = (0..pivots.len())
            .map(|i| {
                let mat = ambient.coords_to_mat(red.row(i));
                ElasticityMatrix::new(mat, ambient == Ambient::Sym21)
                    .expect("canonical basis respects the ambient symmetry")
            })
            .collect();
        ConstrainedSpace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ElasticityMatrix<S>] {
        &self.basis
    }

    /// Leading ambient coordinate of each basis element, strictly ascending.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn parameter_names(&self) -> Vec<String> {
        (1..=self.basis.len()).map(|i| format!("p{i}")).collect()
    }

    /// The generic element as 6×6 linear expressions in p1..pd, e.g. `"p1 - p2"`.
    pub fn pattern(&self) -> Vec<Vec<String>> {
        (0..6)
            .map(|i| (0..6).map(|j| self.entry_expression(i, j)).collect())
            .collect()
    }

    fn entry_expression(&self, i: usize, j: usize) -> String {
        let mut out = String::new();
        for (k, b) in self.basis.iter().enumerate() {
            let coef = b.mat()[(i, j)].clone();
            if coef.negligible(1.0) {
                continue;
            }
            let negative = !coef.is_positive();
            let mag = if negative { -coef } else { coef };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag != S::one() {
                let text = format!("{mag}");
                if text.contains(' ') {
                    out.push_str(&format!("({text})*"));
                } else {
                    out.push_str(&format!("{text}*"));
                }
            }
            out.push_str(&format!("p{}", k + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Canonical basis of the subspace embedded in the full 36-dim coordinates
    /// (ambient-independent representation, used for comparisons).
    pub fn canonical_rows36(&self) -> Mat<S> {
        let rows = Mat::from_fn(self.basis.len(), 36, |i, j| {
            vec36(self.basis[i].mat())[j].clone()
        });
        row_space_canonical(&rows)
    }

    pub fn same_subspace(&self, other: &ConstrainedSpace<S>) -> bool {
        row_spaces_equal(&self.canonical_rows36(), &other.canonical_rows36())
    }

    /// Membership test for a single matrix.
    pub fn contains(&self, c: &Mat<S>) -> bool {
        let d = self.basis.len();
        let stacked = Mat::from_fn(d + 1, 36, |i, j| {
            if i < d {
                vec36(self.basis[i].mat())[j].clone()
            } else {
                vec36(c)[j].clone()
            }
        });
        stacked.rank() == d
    }
}

/// Commutant of a set of isometries: `{C : C Ŝᵢ = Ŝᵢ C for all i}` in the chosen ambient.
/// An empty set returns the full ambient space. Generators are consumed in order and the
/// result is re-canonicalized, so the output is independent of the path.
pub fn commutant<S: Scalar>(generators: &[Isometry<S>], ambient: Ambient) -> ConstrainedSpace<S> {
    // Opposite isometries induce the same transform, so point groups contribute at most
    // half their order in distinct hats.
    let mut hats: Vec<Mat<S>> = Vec::new();
    for iso in generators {
        let hat = induced_transform(iso);
        if !hats.iter().any(|h| h.eq_approx(hat.mat())) {
            hats.push(hat.mat().clone());
        }
    }
    let mut basis: Vec<Mat<S>> = ambient.unit_basis();
    for hat in &hats {
        if basis.is_empty() {
            break;
        }
        let op = CommutationOperator::build(hat, &basis);
        let kernel = op.kernel();
        basis = kernel
            .iter()
            .map(|coeffs| {
                let mut acc = Mat::zeros(6, 6);
                for (k, b) in basis.iter().enumerate() {
                    acc = acc.add(&b.scale(&coeffs[(k, 0)]));
                }
                acc
            })
            .collect();
    }
    ConstrainedSpace::from_span(ambient, &basis)
}

/// Commutant of the full enumerated point group of the lattice.
pub fn constrain_by_lattice<S: Scalar>(
    lat: &Lattice<S>,
    ambient: Ambient,
) -> Result<ConstrainedSpace<S>, LatticeError> {
    let group = lat.enumerate_point_group()?;
    Ok(commutant(group.elements(), ambient))
}

/// True when `C Ŝ = Ŝ C`, exactly in exact mode or within `tol·‖C‖_F` in Frobenius norm.
pub fn is_material_symmetry<S: Scalar>(
    c: &ElasticityMatrix<S>,
    iso: &Isometry<S>,
    tol: f64,
) -> bool {
    let hat = induced_transform(iso);
    let k = c.mat().matmul(hat.mat()).sub(&hat.mat().matmul(c.mat()));
    if S::EXACT {
        k.is_zero()
    } else {
        k.frobenius_f64() <= tol * c.mat().frobenius_f64()
    }
}

/// Probes that commute with every element of the lattice-constrained space without being
/// lattice symmetries — witnesses that the material symmetry group exceeds the lattice's.
pub fn material_symmetries_beyond_lattice<S: Scalar>(
    lat: &Lattice<S>,
    probes: &[Isometry<S>],
    tol: f64,
) -> Result<Vec<Isometry<S>>, LatticeError> {
    let space = constrain_by_lattice(lat, Ambient::Full36)?;
    Ok(probes
        .iter()
        .filter(|probe| {
            space
                .basis()
                .iter()
                .all(|c| is_material_symmetry(c, probe, tol))
                && !lat.is_lattice_symmetry(probe)
        })
        .cloned()
        .collect())
}

/// Normalized Frobenius distance from `C` to its orthogonal projection onto the
/// two-dimensional isotropic subspace; exactly zero iff `C` is isotropic.
pub fn isotropy_distance<S: Scalar>(c: &ElasticityMatrix<S>) -> Result<f64, SymmetryError> {
    if c.mat().is_zero() {
        return Err(SymmetryError::ZeroMatrix);
    }
    let ea = ElasticityMatrix::isotropic(S::one(), S::zero());
    let eb = ElasticityMatrix::isotropic(S::zero(), S::one());
    // Normal equations for the projection coefficients; the basis Gram matrix is
    // [[9, -6], [-6, 9]] with determinant 45.
    let g11 = ea.mat().dot(ea.mat());
    let g12 = ea.mat().dot(eb.mat());
    let g22 = eb.mat().dot(eb.mat());
    let r1 = c.mat().dot(ea.mat());
    let r2 = c.mat().dot(eb.mat());
    let det = g11.clone() * g22.clone() - g12.clone() * g12.clone();
    let det_inv = det.inv().expect("isotropic basis Gram is invertible");
    let x = (g22 * r1.clone() - g12.clone() * r2.clone()) * det_inv.clone();
    let y = (g11 * r2 - g12 * r1) * det_inv;
    let projection = ea.mat().scale(&x).add(&eb.mat().scale(&y));
    let residual = c.mat().sub(&projection);
    if residual.is_zero() {
        return Ok(0.0);
    }
    Ok(residual.frobenius_f64() / c.mat().frobenius_f64())
}

/// Positive-definiteness of a symmetric-mode matrix: exact leading principal minors in
/// exact mode, eigenvalues above `EPS_REL` relative threshold in numeric mode.
pub fn is_positive_definite<S: Scalar>(c: &ElasticityMatrix<S>) -> Result<bool, SymmetryError> {
    if !c.symmetric_mode() || !c.mat().is_symmetric() {
        return Err(SymmetryError::AsymmetricInput);
    }
    if S::EXACT {
        for k in 1..=6 {
            let minor = Mat::from_fn(k, k, |i, j| c.mat()[(i, j)].clone());
            if !minor.det().is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        let (eig, _) = numeric::sym_eigen(&c.mat().to_f64());
        let scale = eig.iter().fold(0.0_f64, |m, &l| m.max(l.abs())).max(1.0);
        Ok(eig.iter().all(|&l| l > EPS_REL * scale))
    }
}

// ---------------------------------------------------------------------------
// Classification against the canonical class catalog.
// ---------------------------------------------------------------------------

/// Canonical material symmetry classes, on the director frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    Triclinic,
    Monoclinic,
    Orthotropic,
    Tetragonal,
    TransverselyIsotropic,
    Cubic,
    Isotropic,
    /// Not one of the catalog spaces (in any director permutation); carries the dimension.
    Unrecognized(usize),
}

impl SymmetryClass {
    pub fn name(&self) -> &'static str {
        match self {
            SymmetryClass::Triclinic => "triclinic",
            SymmetryClass::Monoclinic => "monoclinic",
            SymmetryClass::Orthotropic => "orthotropic",
            SymmetryClass::Tetragonal => "tetragonal",
            SymmetryClass::TransverselyIsotropic => "transversely-isotropic",
            SymmetryClass::Cubic => "cubic",
            SymmetryClass::Isotropic => "isotropic",
            SymmetryClass::Unrecognized(_) => "unrecognized",
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryClass::Unrecognized(d) => write!(f, "unrecognized (dimension {d})"),
            other => write!(f, "{}", other.name()),
        }
    }
}

/// Classification result: the matched class plus which director carries the distinguished
/// role for the axis-sensitive classes (0-based index into l₁,l₂,l₃).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: SymmetryClass,
    pub distinguished_axis: Option<usize>,
}

impl Classification {
    pub fn axis_label(&self) -> Option<&'static str> {
        self.distinguished_axis.map(|a| ["l1", "l2", "l3"][a])
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axis_label() {
            Some(axis) => write!(f, "{} (axis {})", self.class, axis),
            None => write!(f, "{}", self.class),
        }
    }
}

fn unit6<S: Scalar>(i: usize, j: usize) -> Mat<S> {
    let mut m = Mat::zeros(6, 6);
    m[(i, j)] = S::one();
    m
}

/// Basis of the canonical class space in the full-36 ambient, distinguished axis l₃.
/// These are the displayed canonical forms, kept as data independent of the solver.
pub fn class_template<S: Scalar>(class: SymmetryClass) -> Vec<Mat<S>> {
    let sum = |parts: Vec<(usize, usize, i64)>| {
        let mut m = Mat::zeros(6, 6);
        for (i, j, v) in parts {
            m[(i, j)] = S::from_int(v);
        }
        m
    };
    match class {
        SymmetryClass::Triclinic => (0..6)
            .flat_map(|i| (0..6).map(move |j| (i, j)))
            .map(|(i, j)| unit6(i, j))
            .collect(),
        SymmetryClass::Monoclinic => {
            let blk = [0usize, 1, 2, 5];
            let mut out: Vec<Mat<S>> = blk
                .iter()
                .flat_map(|&i| blk.iter().map(move |&j| unit6(i, j)))
                .collect();
            for i in [3usize, 4] {
                for j in [3usize, 4] {
                    out.push(unit6(i, j));
                }
            }
            out
        }
        SymmetryClass::Orthotropic => {
            let mut out: Vec<Mat<S>> = (0..3)
                .flat_map(|i| (0..3).map(move |j| unit6(i, j)))
                .collect();
            out.extend([unit6(3, 3), unit6(4, 4), unit6(5, 5)]);
            out
        }
        SymmetryClass::Tetragonal => vec![
            sum(vec![(0, 0, 1), (1, 1, 1)]),
            sum(vec![(0, 1, 1), (1, 0, 1)]),
            sum(vec![(0, 2, 1), (1, 2, 1)]),
            sum(vec![(2, 0, 1), (2, 1, 1)]),
            unit6(2, 2),
            sum(vec![(3, 3, 1), (4, 4, 1)]),
            unit6(5, 5),
        ],
        SymmetryClass::TransverselyIsotropic => vec![
            // a: in-plane diagonal and off-diagonal move together (C12 = a - b).
            sum(vec![(0, 0, 1), (1, 1, 1), (0, 1, 1), (1, 0, 1)]),
            // b: subtracted off-plane, plus the in-plane shear C66.
            sum(vec![(0, 1, -1), (1, 0, -1), (5, 5, 1)]),
            unit6(2, 2),
            sum(vec![(0, 2, 1), (1, 2, 1)]),
            sum(vec![(2, 0, 1), (2, 1, 1)]),
            sum(vec![(3, 3, 1), (4, 4, 1)]),
        ],
        SymmetryClass::Cubic => vec![
            sum(vec![(0, 0, 1), (1, 1, 1), (2, 2, 1)]),
            sum(vec![
                (0, 1, 1),
                (0, 2, 1),
                (1, 0, 1),
                (1, 2, 1),
                (2, 0, 1),
                (2, 1, 1),
            ]),
            sum(vec![(3, 3, 1), (4, 4, 1), (5, 5, 1)]),
        ],
        SymmetryClass::Isotropic => vec![
            Mat::from_fn(6, 6, |i, j| {
                if i < 3 && j < 3 {
                    S::one()
                } else {
                    S::zero()
                }
            }),
            sum(vec![
                (0, 1, -1),
                (0, 2, -1),
                (1, 0, -1),
                (1, 2, -1),
                (2, 0, -1),
                (2, 1, -1),
                (3, 3, 1),
                (4, 4, 1),
                (5, 5, 1),
            ]),
        ],
        SymmetryClass::Unrecognized(_) => Vec::new(),
    }
}

const CLASS_ORDER: [(SymmetryClass, bool); 7] = [
    (SymmetryClass::Isotropic, false),
    (SymmetryClass::Cubic, false),
    (SymmetryClass::TransverselyIsotropic, true),
    (SymmetryClass::Tetragonal, true),
    (SymmetryClass::Orthotropic, false),
    (SymmetryClass::Monoclinic, true),
    (SymmetryClass::Triclinic, false),
];

/// The class template as a canonical subspace in the requested ambient, with the
/// distinguished axis moved to director `axis` (0-based). Sym21 intersects with the
/// symmetric patch.
pub fn canonical_class_space<S: Scalar>(
    class: SymmetryClass,
    ambient: Ambient,
    axis: usize,
) -> ConstrainedSpace<S> {
    let template = class_template::<S>(class);
    let permuted: Vec<Mat<S>> = if axis == 2 {
        template
    } else {
        let mut perm = Mat::<S>::zeros(3, 3);
        // Swap director `axis` with l₃; the in-plane pair is interchangeable for every
        // catalog class.
        let mapping = match axis {
            0 => [2, 1, 0],
            1 => [0, 2, 1],
            _ => unreachable!(),
        };
        for (j, &i) in mapping.iter().enumerate() {
            perm[(i, j)] = S::one();
        }
        let hat = induced_transform(&Isometry::new(perm).expect("permutation is orthogonal"));
        template
            .iter()
            .map(|t| hat.mat().matmul(t).matmul(&hat.mat().transpose()))
            .collect()
    };
    match ambient {
        Ambient::Full36 => ConstrainedSpace::from_span(ambient, &permuted),
        Ambient::Sym21 => {
            // Every catalog template is closed under transposition, so symmetrizing the
            // basis spans exactly the intersection with the symmetric patch (the test
            // suite re-derives this via the generic intersection routine).
            let symmetric: Vec<Mat<S>> = permuted.iter().map(|t| t.add(&t.transpose())).collect();
            ConstrainedSpace::from_span(ambient, &symmetric)
        }
    }
}

/// Matches the space against the canonical catalog by exact subspace equality, trying each
/// director as the distinguished axis for the axis-sensitive classes. Returns
/// `Unrecognized(dim)` when nothing matches.
pub fn classify<S: Scalar>(space: &ConstrainedSpace<S>) -> Classification {
    let rows = space.canonical_rows36();
    for (class, axis_sensitive) in CLASS_ORDER {
        let axes: &[usize] = if axis_sensitive { &[2, 0, 1] } else { &[2] };
        for &axis in axes {
            let candidate = canonical_class_space::<S>(class, space.ambient(), axis);
            if candidate.dimension() != space.dimension() {
                continue;
            }
            if row_spaces_equal(&rows, &candidate.canonical_rows36()) {
                return Classification {
                    class,
                    distinguished_axis: axis_sensitive.then_some(axis),
                };
            }
        }
    }
    Classification {
        class: SymmetryClass::Unrecognized(space.dimension()),
        distinguished_axis: None,
    }
}

/// Most specific catalog class whose space contains the single matrix `C`, if any.
/// Used for classifying a concrete material rather than a constraint space.
pub fn classify_matrix<S: Scalar>(c: &ElasticityMatrix<S>) -> Classification {
    for (class, axis_sensitive) in CLASS_ORDER {
        let axes: &[usize] = if axis_sensitive { &[2, 0, 1] } else { &[2] };
        for &axis in axes {
            let candidate = canonical_class_space::<S>(class, Ambient::Full36, axis);
            let d = candidate.dimension();
            let stacked = Mat::from_fn(d + 1, 36, |i, j| {
                if i < d {
                    candidate.basis()[i].mat().entries()[j].clone()
                } else {
                    c.mat().entries()[j].clone()
                }
            });
            if stacked.rank() == d {
                return Classification {
                    class,
                    distinguished_axis: axis_sensitive.then_some(axis),
                };
            }
        }
    }
    Classification {
        class: SymmetryClass::Unrecognized(1),
        distinguished_axis: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldElement;

    type F = FieldElement;

    fn fe(text: &str) -> F {
        text.parse().unwrap()
    }

    fn iso(rows: [[&str; 3]; 3]) -> Isometry<F> {
        Isometry::new(Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|t| fe(t)).collect())
                .collect(),
        ))
        .unwrap()
    }

    fn q_pi() -> Isometry<F> {
        iso([["-1", "0", "0"], ["0", "-1", "0"], ["0", "0", "1"]])
    }

    #[test]
    fn empty_generator_set_gives_full_ambient() {
        let full = commutant::<F>(&[], Ambient::Full36);
        assert_eq!(full.dimension(), 36);
        let sym = commutant::<F>(&[], Ambient::Sym21);
        assert_eq!(sym.dimension(), 21);
    }

    #[test]
    fn identity_imposes_no_constraint() {
        let space = commutant(&[Isometry::<F>::identity(), Isometry::inversion()], Ambient::Full36);
        assert_eq!(space.dimension(), 36);
        assert_eq!(classify(&space).class, SymmetryClass::Triclinic);
    }

    #[test]
    fn half_turn_gives_the_monoclinic_pattern() {
        let space = commutant(&[q_pi()], Ambient::Full36);
        assert_eq!(space.dimension(), 20);
        for b in space.basis() {
            for k in [0usize, 1, 2, 5] {
                for s in [3usize, 4] {
                    assert!(b.mat()[(s, k)].is_zero());
                    assert!(b.mat()[(k, s)].is_zero());
                }
            }
        }
        let class = classify(&space);
        assert_eq!(class.class, SymmetryClass::Monoclinic);
        assert_eq!(class.distinguished_axis, Some(2));
    }

    #[test]
    fn sym21_equals_full36_intersected_with_symmetric_patch() {
        use crate::algebra::intersect_row_spaces;
        let gens = [q_pi()];
        let full = commutant(&gens, Ambient::Full36);
        let sym = commutant(&gens, Ambient::Sym21);
        assert_eq!(sym.dimension(), 13);
        let sym_units = Ambient::Sym21.unit_basis::<F>();
        let sym_rows = Mat::from_fn(21, 36, |i, j| sym_units[i].entries()[j].clone());
        let inter = intersect_row_spaces(&full.canonical_rows36(), &sym_rows);
        assert!(crate::algebra::row_spaces_equal(
            &inter,
            &sym.canonical_rows36()
        ));
    }

    #[test]
    fn commutant_shrinks_with_more_generators() {
        let q_pi2 = iso([["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "1"]]);
        let one = commutant(&[q_pi()], Ambient::Full36);
        let two = commutant(&[q_pi(), q_pi2.clone()], Ambient::Full36);
        assert!(two.dimension() <= one.dimension());
        // Intersection of single-generator commutants equals the joint commutant.
        let other = commutant(&[q_pi2], Ambient::Full36);
        let inter = crate::algebra::intersect_row_spaces(
            &one.canonical_rows36(),
            &other.canonical_rows36(),
        );
        assert!(crate::algebra::row_spaces_equal(
            &inter,
            &two.canonical_rows36()
        ));
    }

    #[test]
    fn pattern_strings_for_isotropic_space() {
        let a = ElasticityMatrix::isotropic(F::one(), F::zero());
        let b = ElasticityMatrix::isotropic(F::zero(), F::one());
        let space =
            ConstrainedSpace::from_span(Ambient::Full36, &[a.mat().clone(), b.mat().clone()]);
        assert_eq!(space.dimension(), 2);
        let pattern = space.pattern();
        // Canonical parameters are p1 = C11 and p2 = C12, so C44 = p1 - p2.
        assert_eq!(pattern[0][0], "p1");
        assert_eq!(pattern[0][1], "p2");
        assert_eq!(pattern[3][3], "p1 - p2");
        assert_eq!(pattern[0][3], "0");
        assert_eq!(classify(&space).class, SymmetryClass::Isotropic);
    }

    #[test]
    fn classify_detects_rotated_axis() {
        // Monoclinic about l₁ instead of l₃.
        let q = iso([["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]]);
        let space = commutant(&[q], Ambient::Full36);
        let class = classify(&space);
        assert_eq!(class.class, SymmetryClass::Monoclinic);
        assert_eq!(class.distinguished_axis, Some(0));
        assert_eq!(class.axis_label(), Some("l1"));
    }

    #[test]
    fn classify_rejects_generic_span() {
        let mut generic = Mat::<F>::zeros(6, 6);
        generic[(0, 0)] = fe("1");
        generic[(1, 3)] = fe("2");
        generic[(5, 2)] = fe("-1/3");
        let space = ConstrainedSpace::from_span(Ambient::Full36, &[generic]);
        assert_eq!(
            classify(&space).class,
            SymmetryClass::Unrecognized(1)
        );
    }

    #[test]
    fn material_symmetry_scaling_invariance() {
        let c = ElasticityMatrix::cubic(fe("3"), fe("1"), fe("2"));
        let scaled = ElasticityMatrix::new(c.mat().scale(&fe("7/3")), true).unwrap();
        let q_pi2 = iso([["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "1"]]);
        assert_eq!(
            is_material_symmetry(&c, &q_pi2, 0.0),
            is_material_symmetry(&scaled, &q_pi2, 0.0)
        );
        assert!(is_material_symmetry(&c, &q_pi2, 0.0));
    }

    #[test]
    fn cubic_with_independent_shear_rejects_sixfold_rotation() {
        let c = ElasticityMatrix::cubic(fe("3"), fe("1"), fe("5"));
        let q_pi3 = iso([
            ["1/2", "-1/2*sqrt3", "0"],
            ["1/2*sqrt3", "1/2", "0"],
            ["0", "0", "1"],
        ]);
        assert!(!is_material_symmetry(&c, &q_pi3, 0.0));
        // With c = a − b the cubic matrix is isotropic and the rotation is admitted.
        let c_iso = ElasticityMatrix::cubic(fe("3"), fe("1"), fe("2"));
        assert!(is_material_symmetry(&c_iso, &q_pi3, 0.0));
    }

    #[test]
    fn isotropy_distance_examples() {
        let iso_c = ElasticityMatrix::isotropic(fe("3"), fe("1"));
        assert_eq!(isotropy_distance(&iso_c).unwrap(), 0.0);

        // Cubic with c = a − b is isotropic.
        let cubic_iso = ElasticityMatrix::cubic(fe("3"), fe("1"), fe("2"));
        assert_eq!(isotropy_distance(&cubic_iso).unwrap(), 0.0);

        let cubic_aniso = ElasticityMatrix::cubic(fe("3"), fe("1"), fe("5"));
        let d = isotropy_distance(&cubic_aniso).unwrap();
        assert!(d > 0.3 && d < 0.33, "distance {d}");

        let zero = ElasticityMatrix::new(Mat::<F>::zeros(6, 6), true).unwrap();
        assert_eq!(isotropy_distance(&zero), Err(SymmetryError::ZeroMatrix));
    }

    #[test]
    fn positive_definiteness_examples() {
        let id = ElasticityMatrix::new(Mat::<F>::identity(6), true).unwrap();
        assert!(is_positive_definite(&id).unwrap());

        let mut neg = Mat::<F>::identity(6);
        neg[(5, 5)] = fe("-1");
        let neg = ElasticityMatrix::new(neg, true).unwrap();
        assert!(!is_positive_definite(&neg).unwrap());

        // Isotropic a=3, b=1: eigenvalues {7, 1, 1, 1, 1, 1}.
        let iso_c = ElasticityMatrix::isotropic(fe("3"), fe("1"));
        assert!(is_positive_definite(&iso_c).unwrap());

        let asym = ElasticityMatrix::new(Mat::<F>::identity(6), false).unwrap();
        assert_eq!(
            is_positive_definite(&asym),
            Err(SymmetryError::AsymmetricInput)
        );
    }

    #[test]
    fn classify_matrix_finds_most_specific_class() {
        let cubic = ElasticityMatrix::cubic(fe("3"), fe("1"), fe("5"));
        assert_eq!(classify_matrix(&cubic).class, SymmetryClass::Cubic);
        let isotropic = ElasticityMatrix::isotropic(fe("3"), fe("1"));
        assert_eq!(classify_matrix(&isotropic).class, SymmetryClass::Isotropic);
    }
}
