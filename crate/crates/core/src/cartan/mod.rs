//! Cartan (KAK) decomposition `U = e^{iφ}·L·A·K` of two-qubit unitaries.
//!
//! Everything is computed in the magic basis, where local gates are real
//! orthogonal and the entangling factor `A = e^{-i Σ θⱼ σⱼ⊗σⱼ}` is diagonal
//! with entries `e^{-iλⱼ}`.

mod closed_form;
mod weyl;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

pub use closed_form::{closed_form_k, eigen_phase_data, lambdas_closed_form, EigenPhaseData};
pub use weyl::{
    canonicalize_thetas, in_weyl_chamber, lambda_sum_defect, lambdas_from_thetas,
    thetas_from_lambdas,
};

use crate::error::{Error, Result};
use crate::qmat::{
    eig_complex_symmetric_unitary, max_abs_diff, Complex, Mat4, Unitary4, ZERO,
};
use crate::tol;

/// Columns are the magic-basis states
/// `|Φ⁺⟩, i|Φ⁻⟩, |Ψ⁻⟩, i|Ψ⁺⟩`, ordered so that `σⱼ⊗σⱼ` eigenvalues reproduce
/// the `λ ↔ θ` relations of [`lambdas_from_thetas`].
pub fn magic_basis() -> Mat4 {
    let r = Complex::new(FRAC_1_SQRT_2, 0.0);
    let i = Complex::new(0.0, FRAC_1_SQRT_2);
    crate::qmat::CMat([
        [r, i, ZERO, ZERO],
        [ZERO, ZERO, r, i],
        [ZERO, ZERO, -r, i],
        [r, -i, ZERO, ZERO],
    ])
}

/// `M†·U·M`.
pub fn to_magic_basis(u: &Mat4) -> Mat4 {
    let m = magic_basis();
    m.adjoint() * *u * m
}

/// `M·Ũ·M†`.
pub fn from_magic_basis(u: &Mat4) -> Mat4 {
    let m = magic_basis();
    m * *u * m.adjoint()
}

/// The eigenphases `λ` of the entangling factor and its chamber coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartanCoordinates {
    /// `λ₁..λ₄` with `Σλ ≡ 0 (mod 2π)`.
    pub lambda: [f64; 4],
    /// `θ` obtained from `λ` before reduction to the chamber.
    pub raw_theta: [f64; 3],
    /// Canonical `θ` with `π/4 ≥ θx ≥ θy ≥ θz ≥ 0`.
    pub theta: [f64; 3],
}

impl CartanCoordinates {
    pub fn from_lambdas(lambda: [f64; 4]) -> Result<Self> {
        let raw_theta = thetas_from_lambdas(lambda)?;
        Ok(Self {
            lambda,
            raw_theta,
            theta: canonicalize_thetas(raw_theta),
        })
    }

    /// Entanglement capability `θx + θy`.
    pub fn capability(&self) -> f64 {
        self.theta[0] + self.theta[1]
    }
}

/// `U = e^{iφ}·L·A·K` with local `L`, `K`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartanDecomposition {
    pub l: Unitary4,
    pub a: Unitary4,
    pub k: Unitary4,
    pub coords: CartanCoordinates,
    pub global_phase: f64,
}

impl CartanDecomposition {
    /// `e^{iφ}·L·A·K`.
    pub fn reconstruct(&self) -> Mat4 {
        (*self.l.matrix() * *self.a.matrix() * *self.k.matrix())
            * Complex::from_polar(1.0, self.global_phase)
    }
}

/// `A = M·diag(e^{-iλⱼ})·M†`, equal to `e^{-i Σ θⱼ σⱼ⊗σⱼ}`.
///
/// In the computational basis the `{|00⟩, |11⟩}` block is
/// `½[[ε₁+ε₂, ε₁-ε₂], [ε₁-ε₂, ε₁+ε₂]]` and the `{|01⟩, |10⟩}` block is
/// `½[[ε₄+ε₃, ε₄-ε₃], [ε₄-ε₃, ε₄+ε₃]]`, with `εⱼ = e^{-iλⱼ}`.
pub fn reconstruct_a(lambda: [f64; 4]) -> Result<Unitary4> {
    weyl::check_lambdas(&lambda)?;
    Ok(Unitary4::new_unchecked(entangler_from_lambdas(&lambda)))
}

pub(crate) fn entangler_from_lambdas(lambda: &[f64; 4]) -> Mat4 {
    let eps = lambda.map(|l| Complex::from_polar(1.0, -l));
    let half = 0.5;
    let mut a = Mat4::zeros();
    a[(0, 0)] = (eps[0] + eps[1]) * half;
    a[(0, 3)] = (eps[0] - eps[1]) * half;
    a[(3, 0)] = a[(0, 3)];
    a[(3, 3)] = a[(0, 0)];
    a[(1, 1)] = (eps[3] + eps[2]) * half;
    a[(1, 2)] = (eps[3] - eps[2]) * half;
    a[(2, 1)] = a[(1, 2)];
    a[(2, 2)] = a[(1, 1)];
    a
}

/// `e^{-i Σ θⱼ σⱼ⊗σⱼ}`.
pub fn canonical_gate(theta: [f64; 3]) -> Unitary4 {
    Unitary4::new_unchecked(entangler_from_lambdas(&lambdas_from_thetas(theta)))
}

/// Makhlin local invariants `(G₁, G₂)` of a two-qubit gate.
///
/// Two gates are locally equivalent iff both invariants agree; mirror images
/// (complex conjugates) share `G₂` and have conjugate `G₁`.
pub fn local_invariants(u: &Unitary4) -> (Complex, f64) {
    let ut = to_magic_basis(u.matrix());
    let m = ut.transpose() * ut;
    let det = u.det();
    let tr = m.trace();
    let tr2 = (m * m).trace();
    let g1 = tr * tr / (det * 16.0);
    let g2 = (tr * tr - tr2) / (det * 4.0);
    (g1, g2.re)
}

/// Magic-basis KAK decomposition.
///
/// The global phase is removed with the principal fourth root of `det U`.
/// `ŨᵀŨ = K̃ᵀ·Ã²·K̃` is diagonalized with a real orthogonal basis, giving `K̃`
/// and `λⱼ = -½ arg ε²ⱼ`; `L̃ = Ũ·K̃ᵀ·Ã⁻¹` is then real orthogonal. One `λⱼ`
/// per candidate is shifted by `π` until `Σλ ≡ 0 (mod 2π)` so that both local
/// factors have unit determinant.
pub fn kak_decompose(u: &Unitary4) -> Result<CartanDecomposition> {
    let defect = u.matrix().unitarity_defect();
    if defect.is_nan() || defect > tol::UNITARY {
        return Err(Error::NotUnitary(defect));
    }
    let global_phase = u.det().arg() / 4.0;
    let su = *u.matrix() * Complex::from_polar(1.0, -global_phase);
    let ut = to_magic_basis(&su);
    let s = ut.transpose() * ut;
    let es = eig_complex_symmetric_unitary(&s)?;

    let mut kt = es.eigenvectors;
    if Mat4::from_real(kt).det().re < 0.0 {
        kt[3] = kt[3].map(|x| -x);
    }
    let kt_mat = Mat4::from_real(kt);
    let base: [f64; 4] = es
        .eigenvalues
        .map(|e| -0.5 * crate::qmat::phase(e));

    let mut best: Option<(f64, [f64; 4], Mat4)> = None;
    for mask in candidate_masks() {
        let lambda: [f64; 4] = std::array::from_fn(|j| {
            if mask & (1 << j) == 0 {
                base[j]
            } else if base[j] <= 0.0 {
                base[j] + PI
            } else {
                base[j] - PI
            }
        });
        if weyl::lambda_sum_defect(&lambda) > tol::LAMBDA_SUM {
            continue;
        }
        let a_inv = Mat4::from_diag(lambda.map(|l| Complex::from_polar(1.0, l)));
        let a_tilde = Mat4::from_diag(lambda.map(|l| Complex::from_polar(1.0, -l)));
        let lt = ut * kt_mat.transpose() * a_inv;
        let residual = max_abs_diff(&(lt * a_tilde * kt_mat), &ut);
        if best.as_ref().is_none_or(|(r, _, _)| residual < r - 1e-12) {
            best = Some((residual, lambda, lt));
        }
    }
    let (_, lambda, lt) = best.ok_or(Error::InconsistentLambdas(weyl::lambda_sum_defect(&base)))?;

    let l = Unitary4::new(from_magic_basis(&lt))?;
    let k = Unitary4::new_unchecked(from_magic_basis(&kt_mat));
    let a = Unitary4::new_unchecked(entangler_from_lambdas(&lambda));
    let coords = CartanCoordinates::from_lambdas(lambda)?;
    let decomposition = CartanDecomposition {
        l,
        a,
        k,
        coords,
        global_phase,
    };
    let residual = max_abs_diff(&decomposition.reconstruct(), u.matrix());
    if residual.is_nan() || residual > tol::KAK_RECONSTRUCTION {
        return Err(Error::ReconstructionFailure(residual));
    }
    Ok(decomposition)
}

/// Sign-flip masks over the four eigenphases, fewest flips first.
fn candidate_masks() -> impl Iterator<Item = u8> {
    let mut masks: Vec<u8> = (0u8..16).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{kron, pauli_pairs, sigma_x, sigma_y, sigma_z, Mat2, I};
    use std::f64::consts::FRAC_PI_4;

    fn swap() -> Unitary4 {
        Unitary4::new(Mat4::from_real([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]))
        .unwrap()
    }

    #[test]
    fn magic_basis_is_unitary_and_diagonalizes_pauli_pairs() {
        let m = magic_basis();
        assert!(m.unitarity_defect() < 1e-15);
        let theta = [0.31, -0.12, 0.57];
        let [xx, yy, zz] = pauli_pairs();
        let h = xx * theta[0] + yy * theta[1] + zz * theta[2];
        let d = to_magic_basis(&h);
        let l = lambdas_from_thetas(theta);
        let want = Mat4::from_diag(l.map(|x| Complex::new(x, 0.0)));
        assert!(max_abs_diff(&d, &want) < 1e-15);
    }

    #[test]
    fn identity_in_magic_basis() {
        assert!(max_abs_diff(&to_magic_basis(&Mat4::identity()), &Mat4::identity()) < 1e-15);
    }

    #[test]
    fn xx_in_magic_basis_is_real_diagonal() {
        let d = to_magic_basis(&kron(&sigma_x(), &sigma_x()));
        let want = Mat4::from_real([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]);
        assert!(max_abs_diff(&d, &want) < 1e-15);
    }

    #[test]
    fn local_paulis_become_real() {
        for a in [sigma_x(), sigma_y(), sigma_z()] {
            // i·σ is in SU(2)
            let g = kron(&(a * I), &Mat2::identity());
            assert!(to_magic_basis(&g).max_imag() < 1e-15);
            let g = kron(&Mat2::identity(), &(a * I));
            assert!(to_magic_basis(&g).max_imag() < 1e-15);
        }
    }

    #[test]
    fn reconstruct_a_examples() {
        let a = reconstruct_a([0.0; 4]).unwrap();
        assert!(max_abs_diff(a.matrix(), &Mat4::identity()) < 1e-15);
        let t = 0.45;
        let a = reconstruct_a([t, -t, -t, t]).unwrap();
        let xx = kron(&sigma_x(), &sigma_x());
        let want = Mat4::identity() * t.cos() - xx * (I * t.sin());
        assert!(max_abs_diff(a.matrix(), &want) < 1e-15);
        assert!(reconstruct_a([0.3, 0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn reconstruct_a_is_diagonal_in_magic_basis() {
        let l = [0.4, -1.1, 2.2, -1.5];
        let a = reconstruct_a(l).unwrap();
        let want = Mat4::from_diag(l.map(|x| Complex::from_polar(1.0, -x)));
        assert!(max_abs_diff(&to_magic_basis(a.matrix()), &want) < 1e-15);
    }

    #[test]
    fn decompose_identity() {
        let d = kak_decompose(&Unitary4::identity()).unwrap();
        assert!(d.coords.theta.iter().all(|x| x.abs() < 1e-12));
        assert!(max_abs_diff(&d.reconstruct(), &Mat4::identity()) < 1e-12);
    }

    #[test]
    fn decompose_cnot_class() {
        let u = canonical_gate([FRAC_PI_4, 0.0, 0.0]);
        let d = kak_decompose(&u).unwrap();
        let th = d.coords.theta;
        assert!((th[0] - FRAC_PI_4).abs() < 1e-12, "{th:?}");
        assert!(th[1].abs() < 1e-12 && th[2].abs() < 1e-12);
    }

    #[test]
    fn decompose_swap() {
        // SWAP = e^{iπ/4} e^{-iπ/4 Σσⱼ⊗σⱼ}, checked by brute force first
        let g = canonical_gate([FRAC_PI_4; 3]);
        let phased = *g.matrix() * Complex::from_polar(1.0, PI / 4.0);
        assert!(max_abs_diff(&phased, swap().matrix()) < 1e-15);
        let d = kak_decompose(&swap()).unwrap();
        for x in d.coords.theta {
            assert!((x - FRAC_PI_4).abs() < 1e-12);
        }
        assert!(max_abs_diff(&d.reconstruct(), swap().matrix()) < 1e-12);
    }

    #[test]
    fn decompose_rejects_non_unitary() {
        let m = Mat4::identity() * 1.1;
        let u = Unitary4::new_unchecked(m);
        assert!(matches!(kak_decompose(&u), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn local_invariants_of_swap_and_identity() {
        let (g1, g2) = local_invariants(&Unitary4::identity());
        assert!((g1 - Complex::new(1.0, 0.0)).norm() < 1e-14 && (g2 - 3.0).abs() < 1e-14);
        let (g1, g2) = local_invariants(&swap());
        assert!((g1 + Complex::new(1.0, 0.0)).norm() < 1e-14 && (g2 + 3.0).abs() < 1e-14);
    }
}
