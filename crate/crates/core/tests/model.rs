mod common;

use proptest::prelude::*;
use qkak::model::{build_total_hamiltonian, commutator_is_zero};
use qkak::qmat::max_abs_diff;
use qkak::{HamiltonianModel, ModelClass};
use rand::Rng;

#[test]
fn classification_examples() {
    let zero = HamiltonianModel::z_aligned(0.0, 0.0, [0.3, 0.1, 0.2]).unwrap();
    assert_eq!(zero.classify(), ModelClass::CommutingLocalFree);
    let z = HamiltonianModel::z_aligned(0.5, 1.2, [0.3, 0.1, 0.2]).unwrap();
    assert_eq!(z.classify(), ModelClass::ZAxisAligned);
    let zz = HamiltonianModel::z_aligned(0.5, 1.2, [0.0, 0.0, 0.2]).unwrap();
    assert_eq!(zz.classify(), ModelClass::CommutingNoXY);
    let g = HamiltonianModel::new(
        0.5,
        1.2,
        common::normalize([1.0, -3.0, 2.0]),
        [0.0, 0.0, 1.0],
        [0.3, 0.1, 0.2],
    )
    .unwrap();
    assert_eq!(g.classify(), ModelClass::Generic);
}

#[test]
fn rejects_bad_inputs() {
    assert!(HamiltonianModel::z_aligned(-0.1, 0.0, [0.0; 3]).is_err());
    assert!(HamiltonianModel::z_aligned(f64::NAN, 0.0, [0.0; 3]).is_err());
    assert!(HamiltonianModel::new(1.0, 1.0, [0.0, 0.0, 1.1], [0.0, 0.0, 1.0], [0.0; 3]).is_err());
    let nearly = HamiltonianModel::new(1.0, 1.0, [0.0, 0.0, 1.0 + 5e-7], [0.0, 0.0, 1.0], [0.0; 3]).unwrap();
    let n = nearly.n();
    assert!((n.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs() <= 1e-12);
}

#[test]
fn commutator_characterization() {
    let mut rng = common::rng(10_000);
    let (mut commuting, mut not) = (0, 0);
    for _ in 0..10_000 {
        let pick = |rng: &mut rand_chacha::ChaCha8Rng, scale: f64| {
            if rng.random_bool(0.3) {
                0.0
            } else {
                scale * (2.0 * rng.random::<f64>() - 1.0)
            }
        };
        let w1 = pick(&mut rng, 3.0).abs();
        let w2 = if w1 == 0.0 && rng.random_bool(0.5) { 0.0 } else { pick(&mut rng, 3.0).abs() };
        let cx = pick(&mut rng, 1.0);
        let cy = if cx == 0.0 && rng.random_bool(0.5) { 0.0 } else { pick(&mut rng, 1.0) };
        let cz = pick(&mut rng, 1.0);
        let m = HamiltonianModel::z_aligned(w1, w2, [cx, cy, cz]).unwrap();
        let predicted = (w1 == 0.0 && w2 == 0.0) || (cx == 0.0 && cy == 0.0);
        assert_eq!(commutator_is_zero(&m), predicted, "{m:?}");
        if predicted {
            commuting += 1;
        } else {
            not += 1;
        }
    }
    assert!(commuting > 1000 && not > 1000);
}

proptest! {
    #[test]
    fn total_hamiltonian_is_hermitian_and_traceless(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = common::generic_model(&mut rng);
        let h = build_total_hamiltonian(&m);
        prop_assert!(max_abs_diff(&h, &h.adjoint()) <= 1e-15);
        prop_assert!(h.trace().norm() <= 1e-14);
    }

    #[test]
    fn classification_is_consistent(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let m = common::z_aligned_model(&mut rng);
        prop_assert!(m.classify().is_z_aligned());
        let g = common::generic_model(&mut rng);
        prop_assert_eq!(g.classify(), ModelClass::Generic);
    }
}
