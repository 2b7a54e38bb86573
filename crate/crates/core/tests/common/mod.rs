#![allow(dead_code)]

use qkak::qmat::jacobi_eigh;
use qkak::random;
use qkak::HamiltonianModel;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random orthogonal matrix from the eigenvectors of a random symmetric one.
pub fn orthogonal<R: Rng>(rng: &mut R) -> [[f64; 4]; 4] {
    let mut a = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..=i {
            let x = random::normal(rng);
            a[i][j] = x;
            a[j][i] = x;
        }
    }
    jacobi_eigh(&a).1
}

pub fn z_aligned_model<R: Rng>(rng: &mut R) -> HamiltonianModel {
    let w1 = 3.0 * rng.random::<f64>();
    let w2 = 3.0 * rng.random::<f64>();
    let c = [0, 1, 2].map(|_| 2.0 * rng.random::<f64>() - 1.0);
    HamiltonianModel::z_aligned(w1, w2, c).unwrap()
}

pub fn generic_model<R: Rng>(rng: &mut R) -> HamiltonianModel {
    let w1 = 3.0 * rng.random::<f64>();
    let w2 = 3.0 * rng.random::<f64>();
    let c = [0, 1, 2].map(|_| 2.0 * rng.random::<f64>() - 1.0);
    HamiltonianModel::new(w1, w2, random::unit_vector(rng), random::unit_vector(rng), c).unwrap()
}

pub fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.map(|x| x / n)
}
