//! Closed-form eigenphases, eigenvectors and local factor `K_t` for
//! z-aligned controls.
//!
//! In the magic basis `ŨᵀŨ` splits into two 2×2 blocks. Block 1 (indices
//! 1, 2, spanned by `|Φ^±⟩`) is `e^{-2ic_z t}(χ₂·I + iY₁)` and block 2
//! (indices 3, 4, spanned by `|Ψ^±⟩`) is `e^{2ic_z t}(χ₁·I + iY₂)` with
//!
//! ```text
//! Y₁ = -2·b₁·[[c₁, f₁], [f₁, -c₁]]     Y₂ = 2·b₂·[[c₂, f₂], [f₂, -c₂]]
//! ```
//!
//! where `bᵢ`, `fᵢ`, `cᵢ` are the coupling, field and cosine terms of
//! `BlockAngles`. Eigenvectors are `(μ ± ν, 1)` with `μ = c/f`, `ν = √(1+μ²)`.

use crate::error::Result;
use crate::model::HamiltonianModel;
use crate::propagator::BlockAngles;
use crate::qmat::{Complex, Mat4, Unitary4};

use super::from_magic_basis;

/// `λ₁,₂ = c_z t ± ½ arccos χ₂`, `λ₃,₄ = -c_z t ∓ ½ arccos χ₁`.
pub fn lambdas_closed_form(model: &HamiltonianModel, t: f64) -> Result<[f64; 4]> {
    model.require_z_aligned()?;
    let b = BlockAngles::new(model, t);
    let cz = model.c()[2] * t;
    let a2 = b.half_arccos_chi2();
    let a1 = b.half_arccos_chi1();
    Ok([cz + a2, cz - a2, -cz - a1, -cz + a1])
}

/// Closed-form eigensystem of `ŨᵀŨ` in the magic basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenPhaseData {
    /// `ε²ⱼ = e^{-2iλⱼ}` in the order of [`lambdas_closed_form`].
    pub eps_squared: [Complex; 4],
    /// `μ₁ = Ω₂ cot(Ω₂t)/(ω₁ - ω₂)`; infinite where the block is diagonal.
    pub mu1: f64,
    /// `μ₂ = Ω₁ cot(Ω₁t)/(ω₁ + ω₂)`.
    pub mu2: f64,
    pub nu1: f64,
    pub nu2: f64,
    /// Row `j` is the unit eigenvector for `eps_squared[j]`.
    pub eigenvectors: [[f64; 4]; 4],
}

fn mu(cos: f64, field: f64) -> f64 {
    if field == 0.0 {
        if cos >= 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    } else {
        cos / field
    }
}

fn normalized(x: f64) -> [f64; 2] {
    if x.abs() <= 1.0 {
        let n = (1.0 + x * x).sqrt();
        [x / n, 1.0 / n]
    } else {
        let inv = 1.0 / x.abs();
        let n = (1.0 + inv * inv).sqrt();
        [x.signum() / n, inv / n]
    }
}

/// Unit vectors `(μ+ν, 1)` and `(μ-ν, 1)`, using `(μ+ν)(μ-ν) = -1` to avoid
/// cancellation.
fn block_vectors(mu: f64) -> ([f64; 2], [f64; 2]) {
    let nu = mu.hypot(1.0);
    let (plus, minus) = if mu.abs() <= 1.0 {
        (mu + nu, mu - nu)
    } else if mu > 0.0 {
        let p = mu + nu;
        (p, -1.0 / p)
    } else {
        let m = mu - nu;
        (-1.0 / m, m)
    };
    (normalized(plus), normalized(minus))
}

/// `vᵀ·[[c, f], [f, -c]]·v`.
fn quadratic(v: &[f64; 2], cos: f64, field: f64) -> f64 {
    cos * (v[0] * v[0] - v[1] * v[1]) + 2.0 * field * v[0] * v[1]
}

pub fn eigen_phase_data(model: &HamiltonianModel, t: f64) -> Result<EigenPhaseData> {
    let lambda = lambdas_closed_form(model, t)?;
    let b = BlockAngles::new(model, t);
    let mu2 = mu(b.cos1, b.field1);
    let mu1 = mu(b.cos2, b.field2);

    // Block 1: λ₁ carries Im ε² ≤ 0, i.e. the smaller eigenvalue of Y₁.
    let (p, m) = block_vectors(mu2);
    let y = |v: &[f64; 2]| -2.0 * b.coupling1 * quadratic(v, b.cos1, b.field1);
    let (v1, v2) = if y(&m) < y(&p) { (m, p) } else { (p, m) };

    // Block 2: λ₃ carries Im ε² ≥ 0, the larger eigenvalue of Y₂.
    let (p, m) = block_vectors(mu1);
    let y = |v: &[f64; 2]| 2.0 * b.coupling2 * quadratic(v, b.cos2, b.field2);
    let (v3, v4) = if y(&m) > y(&p) { (m, p) } else { (p, m) };

    Ok(EigenPhaseData {
        eps_squared: lambda.map(|l| Complex::from_polar(1.0, -2.0 * l)),
        mu1,
        mu2,
        nu1: mu1.hypot(1.0),
        nu2: mu2.hypot(1.0),
        eigenvectors: [
            [v1[0], v1[1], 0.0, 0.0],
            [v2[0], v2[1], 0.0, 0.0],
            [0.0, 0.0, v3[0], v3[1]],
            [0.0, 0.0, v4[0], v4[1]],
        ],
    })
}

/// Closed-form right local factor `K_t`, with both 2×2 blocks of `K̃` chosen
/// as reflections. In the computational basis it is anti-diagonal and
/// Hermitian.
pub fn closed_form_k(model: &HamiltonianModel, t: f64) -> Result<Unitary4> {
    let data = eigen_phase_data(model, t)?;
    let mut rows = data.eigenvectors;
    for (first, second) in [(0, 1), (2, 3)] {
        let (i, j) = (first, first + 1);
        let (a, b) = (&rows[first], &rows[second]);
        let det = a[i] * b[j] - a[j] * b[i];
        if det > 0.0 {
            rows[second] = rows[second].map(|x| -x);
        }
    }
    Ok(Unitary4::new_unchecked(from_magic_basis(&Mat4::from_real(rows))))
}
