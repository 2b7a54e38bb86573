mod common;

use proptest::prelude::*;
use qkak::qmat::{eig_complex_symmetric_unitary, expm_skew_hermitian, max_abs_diff, phase};
use qkak::{random, Complex, Mat4, Unitary4};
use rand::Rng;

fn symmetric_unitary(o: &[[f64; 4]; 4], phases: [f64; 4]) -> Mat4 {
    let ot = Mat4::from_real(*o);
    let d = Mat4::from_diag(phases.map(|p| Complex::from_polar(1.0, p)));
    ot.transpose() * d * ot
}

#[test]
fn identity_and_doubled_identity() {
    assert_eq!(max_abs_diff(&Mat4::identity(), &Mat4::identity()), 0.0);
    assert_eq!(max_abs_diff(&Mat4::identity(), &(Mat4::identity() * 2.0)), 1.0);
}

#[test]
fn unitary_rejects_scaled_identity() {
    assert!(Unitary4::new(Mat4::identity() * 1.001).is_err());
    assert!(Unitary4::new(Mat4::identity()).is_ok());
}

#[test]
fn recovers_degenerate_spectrum() {
    let mut rng = common::rng(3);
    let o = common::orthogonal(&mut rng);
    let s = symmetric_unitary(&o, [0.4, 0.4, -1.1, 2.0]);
    let es = eig_complex_symmetric_unitary(&s).unwrap();
    assert!(max_abs_diff(&es.reconstruct(), &s) < 1e-9);
    let mut got: Vec<f64> = es.eigenvalues.iter().map(|e| phase(*e)).collect();
    got.sort_by(f64::total_cmp);
    for (g, w) in got.iter().zip([-1.1, 0.4, 0.4, 2.0]) {
        assert!((g - w).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn construct_then_recover(seed in any::<u64>(), degenerate in 0usize..3) {
        let mut rng = common::rng(seed);
        let o = common::orthogonal(&mut rng);
        let mut p: [f64; 4] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
        for k in 0..degenerate {
            p[k + 1] = p[0];
        }
        let s = symmetric_unitary(&o, p);
        let es = eig_complex_symmetric_unitary(&s).unwrap();
        prop_assert!(max_abs_diff(&es.reconstruct(), &s) <= 1e-9);
        let ortho = es.orthogonal();
        prop_assert!(max_abs_diff(&(ortho.transpose() * ortho), &Mat4::identity()) <= 1e-10);
        for e in es.eigenvalues {
            prop_assert!((e.norm() - 1.0).abs() <= 1e-10);
        }
        let mut got: Vec<f64> = es.eigenvalues.iter().map(|e| phase(*e)).collect();
        let mut want: Vec<f64> = p.iter().map(|x| phase(Complex::from_polar(1.0, *x))).collect();
        got.sort_by(f64::total_cmp);
        want.sort_by(f64::total_cmp);
        for (g, w) in got.iter().zip(&want) {
            let d = (g - w).rem_euclid(2.0 * std::f64::consts::PI);
            prop_assert!(d.min(2.0 * std::f64::consts::PI - d) <= 1e-8);
        }
    }

    #[test]
    fn nearly_degenerate_clusters(seed in any::<u64>(), gap in 1e-12f64..1e-6) {
        let mut rng = common::rng(seed);
        let o = common::orthogonal(&mut rng);
        let base: f64 = rng.random_range(-3.0..3.0);
        let p = [base, base + gap, base - gap, rng.random_range(-3.0..3.0)];
        let s = symmetric_unitary(&o, p);
        let es = eig_complex_symmetric_unitary(&s).unwrap();
        prop_assert!(max_abs_diff(&es.reconstruct(), &s) <= 1e-9);
    }

    #[test]
    fn ordering_is_deterministic(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let o = common::orthogonal(&mut rng);
        let p: [f64; 4] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
        let s = symmetric_unitary(&o, p);
        let a = eig_complex_symmetric_unitary(&s).unwrap();
        let b = eig_complex_symmetric_unitary(&s).unwrap();
        prop_assert_eq!(a, b);
        for w in a.eigenvalues.windows(2) {
            prop_assert!(phase(w[0]) <= phase(w[1]) + 1e-8);
        }
    }

    #[test]
    fn exponential_is_unitary_group(seed in any::<u64>(), t1 in -3.0f64..3.0, t2 in -3.0f64..3.0) {
        let mut rng = common::rng(seed);
        let h = random::hermitian(&mut rng);
        let u1 = expm_skew_hermitian(&h, t1).unwrap();
        let u2 = expm_skew_hermitian(&h, t2).unwrap();
        let u12 = expm_skew_hermitian(&h, t1 + t2).unwrap();
        prop_assert!(u1.matrix().unitarity_defect() <= 1e-10);
        prop_assert!(max_abs_diff(&(*u1.matrix() * *u2.matrix()), u12.matrix()) <= 1e-9);
    }

    #[test]
    fn exponential_determinant(seed in any::<u64>(), t in -3.0f64..3.0) {
        let mut rng = common::rng(seed);
        let h = random::hermitian(&mut rng);
        let u = expm_skew_hermitian(&h, t).unwrap();
        let want = Complex::from_polar(1.0, -h.trace().re * t);
        prop_assert!((u.det() - want).norm() <= 1e-9);
    }
}
