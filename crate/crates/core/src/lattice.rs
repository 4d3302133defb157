//! Inclusion lattices: generators, derived directors, and exact enumeration of the point
//! group (all orthogonal maps fixing the origin that send the lattice onto itself).

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{numeric, Mat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Generators are linearly dependent.
    DegenerateGenerators,
    /// A director norm leaves ℚ(√2,√3); the caller may fall back to numeric mode.
    NormOutsideField,
    /// A candidate map failed the orthogonality invariant.
    NotOrthogonal,
    /// The enumerated element set failed the group-closure self-check.
    ClosureCheckFailed,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::DegenerateGenerators => write!(f, "generators are linearly dependent"),
            LatticeError::NormOutsideField => write!(
                f,
                "a director norm does not lie in Q(sqrt2, sqrt3); use numeric mode"
            ),
            LatticeError::NotOrthogonal => write!(f, "matrix is not orthogonal"),
            LatticeError::ClosureCheckFailed => {
                write!(f, "point-group enumeration failed its closure self-check")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LatticeError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsometryKind {
    Rotation,
    /// Improper: a reflection or rotoinversion (determinant −1).
    Improper,
}

/// Orthogonal 3×3 map, components on the lattice director basis.
#[derive(Clone, PartialEq)]
pub struct Isometry<S> {
    mat: Mat<S>,
    kind: IsometryKind,
}

impl<S: Scalar> Isometry<S> {
    /// Validates `SᵀS = I` (exactly in exact mode, within `EPS_REL` numerically) and tags
    /// the map as rotation or improper from the determinant sign.
    pub fn new(mat: Mat<S>) -> Result<Self, LatticeError> {
        assert_eq!((mat.rows(), mat.cols()), (3, 3), "isometry must be 3x3");
        let gram = mat.transpose().matmul(&mat);
        if !gram.eq_approx(&Mat::identity(3)) {
            return Err(LatticeError::NotOrthogonal);
        }
        let kind = if mat.det().to_f64() < 0.0 {
            IsometryKind::Improper
        } else {
            IsometryKind::Rotation
        };
        Ok(Isometry { mat, kind })
    }

    pub fn identity() -> Self {
        Isometry {
            mat: Mat::identity(3),
            kind: IsometryKind::Rotation,
        }
    }

    /// The central inversion −I.
    pub fn inversion() -> Self {
        Isometry {
            mat: Mat::identity(3).neg(),
            kind: IsometryKind::Improper,
        }
    }

    pub fn mat(&self) -> &Mat<S> {
        &self.mat
    }

    pub fn kind(&self) -> IsometryKind {
        self.kind
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Isometry::new(self.mat.matmul(&rhs.mat)).expect("product of isometries is orthogonal")
    }

    /// The inverse map (transpose, since the matrix is orthogonal).
    pub fn inverse(&self) -> Self {
        Isometry {
            mat: self.mat.transpose(),
            kind: self.kind,
        }
    }

    pub fn negated(&self) -> Self {
        Isometry::new(self.mat.neg()).expect("negation of an isometry is orthogonal")
    }
}

impl<S: fmt::Debug> fmt::Debug for Isometry<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Isometry({:?}, {:?})", self.kind, self.mat)
    }
}

/// The finite group of isometries mapping the lattice onto itself.
#[derive(Debug, Clone)]
pub struct PointGroup<S> {
    elements: Vec<Isometry<S>>,
}

impl<S: Scalar> PointGroup<S> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Isometry<S>] {
        &self.elements
    }

    pub fn contains(&self, iso: &Isometry<S>) -> bool {
        self.elements.iter().any(|e| e.mat().eq_approx(iso.mat()))
    }
}

/// Inclusion lattice: three independent generators, the orthonormal directors derived from
/// them, and the Gram matrix of the generators. Generators and directors are stored as
/// matrix columns in the same (lab) coordinates the generators were supplied in.
#[derive(Clone)]
pub struct Lattice<S> {
    generators: Mat<S>,
    directors: Mat<S>,
    gram: Mat<S>,
}

fn column<S: Scalar>(m: &Mat<S>, j: usize) -> Mat<S> {
    Mat::from_fn(3, 1, |i, _| m[(i, j)].clone())
}

fn set_column<S: Scalar>(m: &mut Mat<S>, j: usize, v: &Mat<S>) {
    for i in 0..3 {
        m[(i, j)] = v[(i, 0)].clone();
    }
}

/// Orthonormal directors from the generators: `l₁ ∥ a₁`, `l₂` the normalized component of
/// `a₂` orthogonal to `l₁`, `l₃` the remaining Gram–Schmidt step. The frame is made
/// right-handed by flipping `l₃` when the generators are negatively oriented, so the
/// rotation/improper tag of enumerated isometries is deterministic.
pub fn compute_directors<S: Scalar>(generators: &Mat<S>) -> Result<Mat<S>, LatticeError> {
    assert_eq!((generators.rows(), generators.cols()), (3, 3));
    let mut dirs = Mat::<S>::zeros(3, 3);
    for j in 0..3 {
        let a = column(generators, j);
        let mut v = a.clone();
        for k in 0..j {
            let l = column(&dirs, k);
            let proj = a.dot(&l);
            v = v.sub(&l.scale(&proj));
        }
        let n2 = v.frobenius_sq();
        let scale = a.frobenius_sq().to_f64();
        if n2.negligible(scale) {
            return Err(LatticeError::DegenerateGenerators);
        }
        let norm = n2.sqrt().map_err(|_| LatticeError::NormOutsideField)?;
        let inv = norm.inv().expect("nonzero norm");
        set_column(&mut dirs, j, &v.scale(&inv));
    }
    if dirs.det().to_f64() < 0.0 {
        let l3 = column(&dirs, 2).neg();
        set_column(&mut dirs, 2, &l3);
    }
    Ok(dirs)
}

impl<S: Scalar> Lattice<S> {
    /// Builds a lattice from three generator vectors `gens[i] = aᵢ`.
    pub fn new(gens: [[S; 3]; 3]) -> Result<Self, LatticeError> {
        let generators = Mat::from_fn(3, 3, |i, j| gens[j][i].clone());
        let det = generators.det();
        let norm_product = (0..3)
            .map(|j| column(&generators, j).frobenius_f64())
            .product::<f64>();
        if det.negligible(norm_product) {
            return Err(LatticeError::DegenerateGenerators);
        }
        let directors = compute_directors(&generators)?;
        let gram = generators.transpose().matmul(&generators);
        Ok(Lattice {
            generators,
            directors,
            gram,
        })
    }

    /// Generator matrix `A = [a₁ a₂ a₃]` (columns).
    pub fn generators(&self) -> &Mat<S> {
        &self.generators
    }

    /// Director matrix `L = [l₁ l₂ l₃]` (orthonormal columns, right-handed).
    pub fn directors(&self) -> &Mat<S> {
        &self.directors
    }

    /// Gram matrix `Gᵢⱼ = aᵢ·aⱼ`.
    pub fn gram(&self) -> &Mat<S> {
        &self.gram
    }

    /// True when `S` (director-basis components) maps the lattice onto itself, i.e. the
    /// generator images have integer coordinates in the generator basis. Together with
    /// orthogonality this suffices for `S·ℒ = ℒ`.
    pub fn is_lattice_symmetry(&self, iso: &Isometry<S>) -> bool {
        let lab = self
            .directors
            .matmul(iso.mat())
            .matmul(&self.directors.transpose());
        let coords = self
            .generators
            .inverse()
            .expect("generators are independent")
            .matmul(&lab)
            .matmul(&self.generators);
        coords.entries().iter().all(Scalar::is_integral)
    }

    /// Enumerates the full point group.
    ///
    /// All lattice vectors with the norm of some generator are found inside a certified
    /// radius (`‖n‖ ≤ 1.01·‖aᵢ‖/σ_min(A)`, σ_min estimated numerically, membership then
    /// verified through the Gram form), every triple matching the generator Gram matrix is
    /// emitted as the map `aᵢ ↦ bᵢ`, and the deduplicated set is closure-checked.
    pub fn enumerate_point_group(&self) -> Result<PointGroup<S>, LatticeError> {
        let gram_f = self.gram.to_f64();
        let (eig, _) = numeric::sym_eigen(&gram_f);
        let lambda_min = eig.first().copied().unwrap_or(0.0);
        if lambda_min <= 0.0 {
            return Err(LatticeError::DegenerateGenerators);
        }
        let sigma_min = lambda_min.sqrt();

        let shells: Vec<Vec<[i64; 3]>> = (0..3)
            .map(|i| self.norm_shell(i, &gram_f, sigma_min))
            .collect();

        let gen_inv = self
            .generators
            .inverse()
            .map_err(|_| LatticeError::DegenerateGenerators)?;
        let mut elements: Vec<Isometry<S>> = Vec::new();
        for b1 in &shells[0] {
            for b2 in &shells[1] {
                if !self.cross_gram_matches(b1, b2, (0, 1)) {
                    continue;
                }
                for b3 in &shells[2] {
                    if !self.cross_gram_matches(b1, b3, (0, 2))
                        || !self.cross_gram_matches(b2, b3, (1, 2))
                    {
                        continue;
                    }
                    let n = Mat::from_fn(3, 3, |r, c| {
                        S::from_int([b1, b2, b3][c][r])
                    });
                    let lab = self.generators.matmul(&n).matmul(&gen_inv);
                    let dir = self
                        .directors
                        .transpose()
                        .matmul(&lab)
                        .matmul(&self.directors);
                    let iso = Isometry::new(dir)?;
                    if !elements.iter().any(|e| e.mat().eq_approx(iso.mat())) {
                        elements.push(iso);
                    }
                }
            }
        }

        let group = PointGroup { elements };
        for a in group.elements() {
            for b in group.elements() {
                if !group.contains(&a.compose(b)) {
                    return Err(LatticeError::ClosureCheckFailed);
                }
            }
        }
        Ok(group)
    }

    /// Integer coefficient vectors `n` with `nᵀGn = Gᵢᵢ`, i.e. lattice vectors sharing the
    /// norm of generator `i`. A cheap float pass filters candidates before the exact check.
    fn norm_shell(&self, i: usize, gram_f: &Mat<f64>, sigma_min: f64) -> Vec<[i64; 3]> {
        let target = self.gram[(i, i)].clone();
        let target_f = target.to_f64();
        let radius = 1.01 * target_f.sqrt() / sigma_min;
        let nmax = radius.floor() as i64;
        let mut shell = Vec::new();
        for n1 in -nmax..=nmax {
            for n2 in -nmax..=nmax {
                for n3 in -nmax..=nmax {
                    let n = [n1, n2, n3];
                    let norm2 = (n1 * n1 + n2 * n2 + n3 * n3) as f64;
                    if norm2 > radius * radius {
                        continue;
                    }
                    let approx = quad_form_f64(gram_f, &n, &n);
                    if (approx - target_f).abs() > 1e-6 * (1.0 + target_f.abs()) {
                        continue;
                    }
                    let exact = self.quad_form(&n, &n);
                    let diff = exact - target.clone();
                    if diff.negligible(1.0_f64.max(target_f.abs())) {
                        shell.push(n);
                    }
                }
            }
        }
        shell
    }

    fn cross_gram_matches(&self, a: &[i64; 3], b: &[i64; 3], (i, j): (usize, usize)) -> bool {
        let target = self.gram[(i, j)].clone();
        let target_f = target.to_f64();
        let approx = quad_form_f64(&self.gram.to_f64(), a, b);
        if (approx - target_f).abs() > 1e-6 * (1.0 + target_f.abs()) {
            return false;
        }
        let diff = self.quad_form(a, b) - target;
        diff.negligible(1.0_f64.max(target_f.abs()))
    }

    fn quad_form(&self, a: &[i64; 3], b: &[i64; 3]) -> S {
        let mut acc = S::zero();
        for r in 0..3 {
            for c in 0..3 {
                if a[r] == 0 || b[c] == 0 {
                    continue;
                }
                acc = acc + S::from_int(a[r] * b[c]) * self.gram[(r, c)].clone();
            }
        }
        acc
    }
}

fn quad_form_f64(g: &Mat<f64>, a: &[i64; 3], b: &[i64; 3]) -> f64 {
    let mut acc = 0.0;
    for r in 0..3 {
        for c in 0..3 {
            acc += a[r] as f64 * b[c] as f64 * g[(r, c)];
        }
    }
    acc
}

impl<S: fmt::Debug> fmt::Debug for Lattice<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Lattice {{ generators: {:?}, directors: {:?} }}",
            self.generators, self.directors
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldElement;

    fn fe(text: &str) -> FieldElement {
        text.parse().unwrap()
    }

    fn lattice(rows: [[&str; 3]; 3]) -> Lattice<FieldElement> {
        Lattice::new(rows.map(|r| r.map(fe))).unwrap()
    }

    fn fcc() -> Lattice<FieldElement> {
        lattice([
            ["1", "0", "0"],
            ["1/2", "1/2*sqrt3", "0"],
            ["1/2", "1/6*sqrt3", "1/3*sqrt6"],
        ])
    }

    #[test]
    fn standard_basis_directors_are_the_generators() {
        let lat = lattice([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]);
        assert_eq!(lat.directors(), lat.generators());
    }

    #[test]
    fn fcc_directors_are_the_standard_basis() {
        let lat = fcc();
        assert_eq!(lat.directors(), &Mat::identity(3));
    }

    #[test]
    fn hexagonal_directors_are_the_standard_basis() {
        let lat = lattice([["1", "0", "0"], ["1/2", "1/2*sqrt3", "0"], ["0", "0", "1"]]);
        assert_eq!(lat.directors(), &Mat::identity(3));
    }

    #[test]
    fn directors_are_orthonormal_and_right_handed() {
        let lat = lattice([["1", "1", "0"], ["0", "2", "0"], ["0", "0", "5"]]);
        let l = lat.directors();
        assert_eq!(l.transpose().matmul(l), Mat::identity(3));
        assert!(l.det().is_positive());

        // Negatively oriented generators get l3 flipped to restore right-handedness.
        let flipped = lattice([["1", "1", "0"], ["0", "2", "0"], ["0", "0", "-5"]]);
        let l = flipped.directors();
        assert_eq!(l.transpose().matmul(l), Mat::identity(3));
        assert!(l.det().is_positive());
        assert_eq!(l[(2, 2)], fe("1"));
    }

    #[test]
    fn degenerate_generators_are_rejected() {
        let res = Lattice::new([
            ["1", "0", "0"].map(fe),
            ["2", "0", "0"].map(fe),
            ["0", "0", "1"].map(fe),
        ]);
        assert_eq!(res.unwrap_err(), LatticeError::DegenerateGenerators);
    }

    #[test]
    fn norm_outside_field_is_reported() {
        // ‖(1,1,1)‖ = √3 is fine, but ‖(1,2,0)‖ = √5 leaves the field.
        let res = Lattice::new([
            ["1", "2", "0"].map(fe),
            ["0", "1", "0"].map(fe),
            ["0", "0", "1"].map(fe),
        ]);
        assert_eq!(res.unwrap_err(), LatticeError::NormOutsideField);
        // The same generators work in numeric mode.
        let num = Lattice::new([
            [1.0, 2.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
        ]);
        assert!(num.is_ok());
    }

    #[test]
    fn central_inversion_is_always_a_symmetry() {
        for lat in [
            fcc(),
            lattice([["1", "0", "0"], ["0", "3/2", "0"], ["0", "0", "2"]]),
        ] {
            assert!(lat.is_lattice_symmetry(&Isometry::inversion()));
        }
    }

    #[test]
    fn simple_cubic_point_group_has_order_48() {
        let lat = lattice([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]);
        let group = lat.enumerate_point_group().unwrap();
        assert_eq!(group.order(), 48);
        assert!(group.contains(&Isometry::identity()));
        assert!(group.contains(&Isometry::inversion()));
    }

    #[test]
    fn fcc_point_group_has_order_48() {
        let group = fcc().enumerate_point_group().unwrap();
        assert_eq!(group.order(), 48);
        assert_eq!(group.order() % 2, 0);
        for iso in group.elements() {
            let gram = iso.mat().transpose().matmul(iso.mat());
            assert_eq!(gram, Mat::identity(3));
        }
    }

    #[test]
    fn rescaled_generators_give_the_same_point_group() {
        let lat = fcc();
        let scaled = Lattice::new([
            ["3", "0", "0"].map(fe),
            ["3/2", "3/2*sqrt3", "0"].map(fe),
            ["3/2", "1/2*sqrt3", "sqrt6"].map(fe),
        ])
        .unwrap();
        let g1 = lat.enumerate_point_group().unwrap();
        let g2 = scaled.enumerate_point_group().unwrap();
        assert_eq!(g1.order(), g2.order());
        for iso in g1.elements() {
            assert!(g2.contains(iso));
        }
    }

    #[test]
    fn numeric_mode_agrees_on_fcc_order() {
        let s3 = 3.0_f64.sqrt();
        let s6 = 6.0_f64.sqrt();
        let lat = Lattice::new([
            [1.0, 0.0, 0.0],
            [0.5, s3 / 2.0, 0.0],
            [0.5, s3 / 6.0, s6 / 3.0],
        ])
        .unwrap();
        assert_eq!(lat.enumerate_point_group().unwrap().order(), 48);
    }
}
