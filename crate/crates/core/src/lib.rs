//! Cartan (KAK) decomposition of two-qubit unitaries and the entanglement
//! capability of evolutions generated by a fixed two-qubit Hamiltonian.
//!
//! The crate is organised bottom-up:
//!
//! * [`qmat`]: fixed-size complex matrices, matrix exponential and the
//!   eigensolver for complex symmetric unitaries.
//! * [`model`]: the Hamiltonian `ω₁ n⃗·σ⃗⊗I + ω₂ I⊗m⃗·σ⃗ + Σ cⱼ σⱼ⊗σⱼ`.
//! * [`propagator`]: `U_t = e^{-iH t}` in closed form (z-aligned controls) and
//!   through the generic exponential.
//! * [`cartan`]: magic basis, KAK decomposition, Weyl-chamber coordinates and
//!   their closed forms.
//! * [`entangle`]: concurrence, capability `h = θx + θy`, extremal times and
//!   optimal input states.
//! * [`sweep`]: parameter grids, ensembles, peak diagnostics and file formats.

pub mod cartan;
pub mod entangle;
pub mod error;
pub mod model;
pub mod propagator;
pub mod qmat;
pub mod random;
pub mod sweep;
pub mod tol;

pub use cartan::{
    canonicalize_thetas, kak_decompose, lambdas_closed_form, reconstruct_a,
    thetas_from_lambdas, to_magic_basis, CartanCoordinates, CartanDecomposition,
};
pub use entangle::{capability, capability_closed_form, concurrence, PureState2Q};
pub use error::{Error, Result};
pub use model::{HamiltonianModel, ModelClass};
pub use propagator::{closed_form_propagator, generic_propagator};
pub use qmat::{Complex, Mat2, Mat4, Unitary4};

/// Crate version recorded in output headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
