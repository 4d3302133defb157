//! Shared helpers for the integration and acceptance suites: exact probe generation,
//! seeded random rotations/reflections, and the brute-force commutant oracle.

#![allow(dead_code)]

use lattisym_core::algebra::{FieldElement, Mat};
use lattisym_core::catalog::isometry_preset;
use lattisym_core::lattice::Isometry;
use lattisym_core::symmetry::{Ambient, ConstrainedSpace};
use lattisym_core::voigt::induced_transform;
use lattisym_core::Scalar;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type F = FieldElement;

pub fn fe(text: &str) -> F {
    text.parse().unwrap()
}

pub fn fmat(rows: [[&str; 3]; 3]) -> Mat<F> {
    Mat::from_fn(3, 3, |i, j| fe(rows[i][j]))
}

pub fn preset(name: &str) -> Isometry<F> {
    isometry_preset::<F>(name).unwrap()
}

/// Seeded products of catalog isometries: an endless supply of exactly representable
/// orthogonal probes (rotations and improper maps).
pub fn exact_walk(seed: u64, count: usize) -> Vec<Isometry<F>> {
    let pool: Vec<Isometry<F>> = [
        "Q_pi", "Q_pi_2", "Q_pi_3", "R1", "R2", "Q_sum", "Q_cyc", "neg_I",
    ]
    .iter()
    .map(|n| preset(n))
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let factors = rng.gen_range(1..=4);
            let mut iso = pool[rng.gen_range(0..pool.len())].clone();
            for _ in 1..factors {
                iso = iso.compose(&pool[rng.gen_range(0..pool.len())]);
            }
            iso
        })
        .collect()
}

/// Uniform random rotation (Shoemake quaternion method).
pub fn random_rotation(rng: &mut ChaCha8Rng) -> Isometry<f64> {
    let u1: f64 = rng.gen();
    let u2: f64 = rng.gen();
    let u3: f64 = rng.gen();
    let tau = core::f64::consts::TAU;
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    let (x, y, z, w) = (
        a * (tau * u2).sin(),
        a * (tau * u2).cos(),
        b * (tau * u3).sin(),
        b * (tau * u3).cos(),
    );
    let mat = Mat::from_rows(vec![
        vec![
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - z * w),
            2.0 * (x * z + y * w),
        ],
        vec![
            2.0 * (x * y + z * w),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - x * w),
        ],
        vec![
            2.0 * (x * z - y * w),
            2.0 * (y * z + x * w),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ]);
    Isometry::new(mat).expect("quaternion rotation is orthogonal")
}

/// Mirror through the plane with a uniformly random normal.
pub fn random_reflection(rng: &mut ChaCha8Rng) -> Isometry<f64> {
    let r = random_rotation(rng);
    let n = [r.mat()[(0, 0)], r.mat()[(1, 0)], r.mat()[(2, 0)]];
    let mat = Mat::from_fn(3, 3, |i, j| {
        (if i == j { 1.0 } else { 0.0 }) - 2.0 * n[i] * n[j]
    });
    Isometry::new(mat).expect("householder mirror is orthogonal")
}

/// Brute-force commutant: one stacked operator over all generators, built entrywise from
/// the definition `C ↦ CŜ − ŜC`, solved with a single nullspace call. Independent of the
/// incremental solver path.
pub fn brute_force_commutant(gens: &[Isometry<F>], ambient: Ambient) -> ConstrainedSpace<F> {
    let hats: Vec<Mat<F>> = gens.iter().map(|g| induced_transform(g).mat().clone()).collect();
    let cols: Vec<(usize, usize)> = match ambient {
        Ambient::Full36 => (0..6).flat_map(|k| (0..6).map(move |l| (k, l))).collect(),
        Ambient::Sym21 => (0..6).flat_map(|k| (k..6).map(move |l| (k, l))).collect(),
    };
    let delta = |a: usize, b: usize| {
        if a == b {
            F::one()
        } else {
            F::zero()
        }
    };
    // d(C H - H C)_{ij} / d C_{kl} = δ_ik H_lj − H_ik δ_jl, symmetrized over (k,l) in Sym21.
    let op = Mat::from_fn(36 * hats.len(), cols.len(), |row, c| {
        let h = &hats[row / 36];
        let (i, j) = ((row % 36) / 6, (row % 36) % 6);
        let (k, l) = cols[c];
        let mut v = delta(i, k) * h[(l, j)].clone() - h[(i, k)].clone() * delta(j, l);
        if ambient == Ambient::Sym21 && k != l {
            v = v + delta(i, l) * h[(k, j)].clone() - h[(i, l)].clone() * delta(j, k);
        }
        v
    });
    let span: Vec<Mat<F>> = op
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut m = Mat::zeros(6, 6);
            for (c, &(k, l)) in cols.iter().enumerate() {
                m[(k, l)] = v[(c, 0)].clone();
                if ambient == Ambient::Sym21 {
                    m[(l, k)] = v[(c, 0)].clone();
                }
            }
            m
        })
        .collect();
    ConstrainedSpace::from_span(ambient, &span)
}
