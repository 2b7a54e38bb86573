//! Entanglement of pure states, the capability `h = θx + θy` of an evolution,
//! its extremal times, and input states that reach maximal entanglement.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{kak_decompose, lambdas_closed_form, magic_basis, CartanCoordinates};
use crate::error::{Error, Result};
use crate::model::{HamiltonianModel, ModelClass};
use crate::qmat::{Complex, Unitary4, ZERO};
use crate::tol;

/// Normalized two-qubit state in the computational basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureState2Q {
    amplitudes: [Complex; 4],
}

impl PureState2Q {
    pub fn new(amplitudes: [Complex; 4]) -> Result<Self> {
        let n2: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !n2.is_finite() || (n2 - 1.0).abs() > tol::STATE_NORM {
            return Err(Error::NotNormalized(n2));
        }
        Ok(Self { amplitudes })
    }

    /// Rescales to unit norm. Fails on the zero vector.
    pub fn normalized(amplitudes: [Complex; 4]) -> Result<Self> {
        let n = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized(n * n));
        }
        Self::new(amplitudes.map(|a| a / n))
    }

    /// `|a⟩⊗|b⟩`.
    pub fn product(a: [Complex; 2], b: [Complex; 2]) -> Result<Self> {
        Self::normalized([a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]])
    }

    pub fn amplitudes(&self) -> &[Complex; 4] {
        &self.amplitudes
    }

    /// `U|ψ⟩`.
    pub fn evolve(&self, u: &Unitary4) -> Self {
        Self {
            amplitudes: u.apply(&self.amplitudes),
        }
    }
}

/// `C(ψ) = |⟨ψ*|σy⊗σy|ψ⟩| = 2|ψ₀₀ψ₁₁ - ψ₀₁ψ₁₀|`.
pub fn concurrence(psi: &PureState2Q) -> f64 {
    let [a, b, c, d] = psi.amplitudes;
    (2.0 * (a * d - b * c).norm()).min(1.0)
}

/// Capability of a single unitary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Capability {
    pub h: f64,
    pub theta: [f64; 3],
    pub lambda: [f64; 4],
}

impl From<CartanCoordinates> for Capability {
    fn from(c: CartanCoordinates) -> Self {
        Self {
            h: c.capability(),
            theta: c.theta,
            lambda: c.lambda,
        }
    }
}

/// `h = θx + θy` from the canonical coordinates of `u`.
pub fn capability(u: &Unitary4) -> Result<Capability> {
    Ok(kak_decompose(u)?.coords.into())
}

/// Capability from the closed-form eigenphases (z-aligned models only).
pub fn capability_closed_form_full(model: &HamiltonianModel, t: f64) -> Result<Capability> {
    let lambda = lambdas_closed_form(model, t)?;
    Ok(CartanCoordinates::from_lambdas(lambda)?.into())
}

pub fn capability_closed_form(model: &HamiltonianModel, t: f64) -> Result<f64> {
    Ok(capability_closed_form_full(model, t)?.h)
}

/// One evaluated grid point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CapabilitySample {
    pub omega1: f64,
    pub omega2: f64,
    pub t: f64,
    pub h: f64,
    pub theta: [f64; 3],
    pub lambda: [f64; 4],
    pub model_class: ModelClass,
}

impl CapabilitySample {
    pub fn new(model: &HamiltonianModel, t: f64, cap: Capability) -> Self {
        Self {
            omega1: model.omega1(),
            omega2: model.omega2(),
            t,
            h: cap.h,
            theta: cap.theta,
            lambda: cap.lambda,
            model_class: model.classify(),
        }
    }
}

/// Which `χᵢ` an extremal time belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChiBranch {
    /// `χ₁`: `ω₁ = ω₂`, `t = kπ / (2(c_x + c_y))`.
    One,
    /// `χ₂`: `ω₁ + ω₂ = 0`, `t = kπ / (2(c_x - c_y))`.
    Two,
}

impl TryFrom<u8> for ChiBranch {
    type Error = Error;
    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(ChiBranch::One),
            2 => Ok(ChiBranch::Two),
            _ => Err(Error::ConfigInvalid(format!("branch must be 1 or 2, got {v}"))),
        }
    }
}

/// Energy condition paired with an extremal time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergyCondition {
    /// `ω₁ - ω₂ = 0`.
    EqualEnergies,
    /// `ω₁ + ω₂ = 0`.
    OppositeEnergies,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtremalTime {
    pub k: u32,
    pub t: f64,
    pub branch: ChiBranch,
    pub condition: EnergyCondition,
}

/// Extremal times `t = kπ / (2(c_x ± c_y))` for `k = 1..=k_max`.
pub fn extremal_times(
    model: &HamiltonianModel,
    branch: ChiBranch,
    k_max: u32,
) -> Result<Vec<ExtremalTime>> {
    let [cx, cy, _] = model.c();
    let (denom, condition) = match branch {
        ChiBranch::One => (cx + cy, EnergyCondition::EqualEnergies),
        ChiBranch::Two => (cx - cy, EnergyCondition::OppositeEnergies),
    };
    if denom.abs() <= tol::PARAMETER_ZERO {
        return Err(Error::DegenerateCoupling);
    }
    Ok((1..=k_max)
        .map(|k| ExtremalTime {
            k,
            t: k as f64 * PI / (2.0 * denom),
            branch,
            condition,
        })
        .collect())
}

/// `|Ψ_j⟩`, the `j`-th magic-basis state (`j = 1..=4`).
pub fn bell_state(index: usize) -> Result<PureState2Q> {
    if !(1..=4).contains(&index) {
        return Err(Error::ConfigInvalid(format!("bell index must be in 1..=4, got {index}")));
    }
    PureState2Q::new(magic_basis().column(index - 1))
}

/// `|ψ₀⟩ = K†·A†·|Ψ⟩`, which `u` maps to `e^{iφ}·L|Ψ⟩`, a maximally
/// entangled state.
pub fn optimal_input(u: &Unitary4, bell_index: usize) -> Result<PureState2Q> {
    let target = bell_state(bell_index)?;
    let d = kak_decompose(u)?;
    let back = d.k.adjoint() * d.a.adjoint();
    PureState2Q::normalized(back.apply(target.amplitudes()))
}

/// Settings of the product-state search in [`max_product_input_entanglement`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductSearch {
    pub samples: usize,
    pub refine_steps: usize,
    pub initial_step: f64,
    pub shrink: f64,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for ProductSearch {
    fn default() -> Self {
        Self {
            samples: 4096,
            refine_steps: 64,
            initial_step: 0.5,
            shrink: 0.7,
            tolerance: 1e-4,
            seed: 0,
        }
    }
}

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while i > 0 {
        r += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    r
}

fn qubit(theta: f64, phi: f64) -> [Complex; 2] {
    let (s, c) = (0.5 * theta).sin_cos();
    [Complex::new(c, 0.0), Complex::from_polar(s, phi)]
}

fn product_concurrence(u: &Unitary4, p: &[f64; 4]) -> f64 {
    let a = qubit(p[0], p[1]);
    let b = qubit(p[2], p[3]);
    let psi = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]];
    let out = u.apply(&psi);
    if out.iter().all(|z| *z == ZERO) {
        return 0.0;
    }
    let [w, x, y, z] = out;
    (2.0 * (w * z - x * y).norm()).min(1.0)
}

/// Largest concurrence of `u(|a⟩⊗|b⟩)` over product inputs.
///
/// Bloch angles are drawn from a Halton sequence shifted by the seed. Every
/// time the best sample improves, it is refined by coordinate moves whose step
/// shrinks geometrically. More samples or steps never lower the result.
pub fn max_product_input_entanglement(u: &Unitary4, search: &ProductSearch) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    let shift: [f64; 4] = std::array::from_fn(|_| rng.random());
    let mut best_sample = f64::NEG_INFINITY;
    let mut best = 0.0f64;
    for i in 0..search.samples {
        let q: [f64; 4] = std::array::from_fn(|d| {
            (radical_inverse(i as u64 + 1, [2, 3, 5, 7][d]) + shift[d]).fract()
        });
        let p = [
            (1.0 - 2.0 * q[0]).clamp(-1.0, 1.0).acos(),
            2.0 * PI * q[1],
            (1.0 - 2.0 * q[2]).clamp(-1.0, 1.0).acos(),
            2.0 * PI * q[3],
        ];
        let value = product_concurrence(u, &p);
        if value > best_sample {
            best_sample = value;
            best = best.max(refine(u, p, value, search));
        }
    }
    best
}

fn refine(u: &Unitary4, mut p: [f64; 4], mut value: f64, search: &ProductSearch) -> f64 {
    let mut step = search.initial_step;
    for _ in 0..search.refine_steps {
        if step < search.tolerance {
            break;
        }
        for d in 0..4 {
            for dir in [1.0, -1.0] {
                let mut trial = p;
                trial[d] += dir * step;
                let v = product_concurrence(u, &trial);
                if v > value {
                    value = v;
                    p = trial;
                }
            }
        }
        step *= search.shrink;
    }
    value
}
