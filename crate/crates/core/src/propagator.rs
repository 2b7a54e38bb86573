//! The propagator `U_t = e^{-i H_T t}`.
//!
//! For z-aligned controls the evolution splits into the `{|00⟩, |11⟩}` block,
//! oscillating at `Ω₁ = √((c_x - c_y)² + (ω₁ + ω₂)²)`, and the
//! `{|01⟩, |10⟩}` block at `Ω₂ = √((c_x + c_y)² + (ω₁ - ω₂)²)`.

use crate::error::Result;
use crate::model::{build_total_hamiltonian, HamiltonianModel};
use crate::qmat::{expm_skew_hermitian, Complex, Mat4, Unitary4};
use crate::tol;

/// `sin(Ωt)/Ω`, with the `Ω → 0` limit `t`.
pub(crate) fn sin_over(omega: f64, t: f64) -> f64 {
    if omega < tol::SINGULAR_FREQUENCY {
        t
    } else {
        (omega * t).sin() / omega
    }
}

/// Block amplitudes `φ₁..φ₄` and the two block frequencies at one time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormParts {
    pub phi: [Complex; 4],
    pub big_omega1: f64,
    pub big_omega2: f64,
}

impl ClosedFormParts {
    pub fn new(model: &HamiltonianModel, t: f64) -> Result<Self> {
        model.require_z_aligned()?;
        let (w1, w2) = (model.omega1(), model.omega2());
        let [cx, cy, _] = model.c();
        let big_omega1 = (cx - cy).hypot(w1 + w2);
        let big_omega2 = (cx + cy).hypot(w1 - w2);
        let s1 = sin_over(big_omega1, t);
        let s2 = sin_over(big_omega2, t);
        let phi = [
            Complex::new((big_omega1 * t).cos(), -(w1 + w2) * s1),
            Complex::new((big_omega2 * t).cos(), -(w1 - w2) * s2),
            Complex::new(0.0, -(cx + cy) * s2),
            Complex::new(0.0, -(cx - cy) * s1),
        ];
        Ok(Self {
            phi,
            big_omega1,
            big_omega2,
        })
    }
}

/// Closed-form `U_t` for z-aligned controls.
pub fn closed_form_propagator(model: &HamiltonianModel, t: f64) -> Result<Unitary4> {
    let parts = ClosedFormParts::new(model, t)?;
    let [p1, p2, p3, p4] = parts.phi;
    let cz = model.c()[2];
    let outer = Complex::from_polar(1.0, -cz * t);
    let inner = outer.conj();
    let mut u = Mat4::zeros();
    u[(0, 0)] = outer * p1;
    u[(0, 3)] = outer * p4;
    u[(1, 1)] = inner * p2;
    u[(1, 2)] = inner * p3;
    u[(2, 1)] = inner * p3;
    u[(2, 2)] = inner * p2.conj();
    u[(3, 0)] = outer * p4;
    u[(3, 3)] = outer * p1.conj();
    Ok(Unitary4::new_unchecked(u))
}

/// `e^{-i H_T t}` by Hermitian eigendecomposition; valid for every model.
pub fn generic_propagator(model: &HamiltonianModel, t: f64) -> Unitary4 {
    expm_skew_hermitian(&build_total_hamiltonian(model), t)
        .expect("total Hamiltonian is Hermitian by construction")
}

/// Picks the closed form when it applies, the exponential otherwise.
pub fn propagator(model: &HamiltonianModel, t: f64) -> Unitary4 {
    closed_form_propagator(model, t).unwrap_or_else(|_| generic_propagator(model, t))
}

/// `(χ₁(t), χ₂(t))`: `χ₁ = 1 - 2((c_x+c_y) sin Ω₂t / Ω₂)²`,
/// `χ₂ = 1 - 2((c_x-c_y) sin Ω₁t / Ω₁)²`.
pub fn chi_functions(model: &HamiltonianModel, t: f64) -> Result<(f64, f64)> {
    model.require_z_aligned()?;
    let b = BlockAngles::new(model, t);
    let chi = |x: f64| (1.0 - 2.0 * x * x).clamp(-1.0, 1.0);
    Ok((chi(b.coupling2), chi(b.coupling1)))
}

/// Scaled block quantities shared by the χ functions, the λ closed form and
/// the closed-form eigenvectors.
///
/// Block 1 is `{|00⟩, |11⟩}`, block 2 is `{|01⟩, |10⟩}`. In each block
/// `coupling = (c_x ∓ c_y)·sin(Ωt)/Ω`, `field = (ω₁ ± ω₂)·sin(Ωt)/Ω`,
/// `cos = cos(Ωt)`, with `coupling² + field² + cos² = 1`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct BlockAngles {
    pub coupling1: f64,
    pub field1: f64,
    pub cos1: f64,
    pub coupling2: f64,
    pub field2: f64,
    pub cos2: f64,
}

impl BlockAngles {
    pub fn new(model: &HamiltonianModel, t: f64) -> Self {
        let (w1, w2) = (model.omega1(), model.omega2());
        let [cx, cy, _] = model.c();
        let o1 = (cx - cy).hypot(w1 + w2);
        let o2 = (cx + cy).hypot(w1 - w2);
        let s1 = sin_over(o1, t);
        let s2 = sin_over(o2, t);
        Self {
            coupling1: (cx - cy) * s1,
            field1: (w1 + w2) * s1,
            cos1: (o1 * t).cos(),
            coupling2: (cx + cy) * s2,
            field2: (w1 - w2) * s2,
            cos2: (o2 * t).cos(),
        }
    }

    /// `½ arccos χ₂`, evaluated without the cancellation of `arccos` near ±1.
    pub fn half_arccos_chi2(&self) -> f64 {
        self.coupling1.abs().atan2(self.cos1.hypot(self.field1))
    }

    /// `½ arccos χ₁`.
    pub fn half_arccos_chi1(&self) -> f64 {
        self.coupling2.abs().atan2(self.cos2.hypot(self.field2))
    }
}

#[cfg(test)]
/// Entries of a z-aligned `U_t` that must vanish.
pub(crate) fn off_block_max(u: &Mat4) -> f64 {
    const ZEROS: [(usize, usize); 8] = [
        (0, 1),
        (0, 2),
        (1, 0),
        (1, 3),
        (2, 0),
        (2, 3),
        (3, 1),
        (3, 2),
    ];
    ZEROS
        .iter()
        .map(|&(i, j)| u[(i, j)].norm())
        .fold(0.0, f64::max)
}
