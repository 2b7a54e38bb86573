//! Seeded random generators for unitaries, local gates and models.
//!
//! Used by the ensemble experiment and by tests; every generator takes the
//! caller's RNG so results are reproducible from a seed.

use std::f64::consts::PI;

use rand::Rng;

use crate::qmat::{expm_skew_hermitian, kron, Complex, Mat2, Mat4, Unitary4};

/// Standard normal deviate (Box–Muller).
pub fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

/// Uniformly distributed point on the unit sphere.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let z = 2.0 * rng.random::<f64>() - 1.0;
    let phi = 2.0 * PI * rng.random::<f64>();
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// Hermitian matrix with independent Gaussian entries (GUE scaling).
pub fn hermitian<R: Rng + ?Sized>(rng: &mut R) -> Mat4 {
    let mut h = Mat4::zeros();
    for i in 0..4 {
        h[(i, i)] = Complex::new(normal(rng), 0.0);
        for j in 0..i {
            let z = Complex::new(normal(rng), normal(rng)) * std::f64::consts::FRAC_1_SQRT_2;
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    h
}

/// Random unitary `e^{-iH}` from a Gaussian Hermitian generator, scaled so
/// the spectrum wraps the circle several times.
pub fn unitary<R: Rng + ?Sized>(rng: &mut R) -> Unitary4 {
    let h = hermitian(rng);
    expm_skew_hermitian(&h, PI).expect("generator is Hermitian")
}

/// Haar-random element of SU(2) from a uniformly random unit quaternion.
pub fn su2<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    let q = [normal(rng), normal(rng), normal(rng), normal(rng)];
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [a, b, c, d] = q.map(|x| x / n);
    crate::qmat::CMat([
        [Complex::new(a, b), Complex::new(c, d)],
        [Complex::new(-c, d), Complex::new(a, -b)],
    ])
}

/// Random local gate `a⊗b` with `a, b ∈ SU(2)`.
pub fn local<R: Rng + ?Sized>(rng: &mut R) -> Unitary4 {
    Unitary4::new(kron(&su2(rng), &su2(rng))).expect("product of SU(2) is unitary")
}
