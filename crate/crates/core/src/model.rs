//! Two-qubit Hamiltonian with local fields and a diagonal coupling.

use nalgebra::Matrix3;

use crate::error::{Error, Result};
use crate::qmat::{kron, max_abs_diff, pauli_dot, pauli_pairs, Mat2, Mat4};
use crate::tol;

pub const Z_AXIS: [f64; 3] = [0.0, 0.0, 1.0];

/// `H_T = ω₁ (n⃗·σ⃗)⊗I + ω₂ I⊗(m⃗·σ⃗) + Σⱼ cⱼ σⱼ⊗σⱼ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HamiltonianModel {
    omega1: f64,
    omega2: f64,
    n: [f64; 3],
    m: [f64; 3],
    c: [f64; 3],
}

/// Which propagator route and which analytic statements apply to a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelClass {
    /// `ω₁ = ω₂ = 0`: the local terms vanish.
    CommutingLocalFree,
    /// z-aligned controls with `c_x = c_y = 0`.
    CommutingNoXY,
    /// `n⃗ = m⃗ = ẑ` (or the corresponding energy is zero).
    ZAxisAligned,
    Generic,
}

impl ModelClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelClass::CommutingLocalFree => "commuting_local_free",
            ModelClass::CommutingNoXY => "commuting_no_xy",
            ModelClass::ZAxisAligned => "z_axis_aligned",
            ModelClass::Generic => "generic",
        }
    }

    /// Closed-form propagator and λ formulas apply.
    pub fn is_z_aligned(self) -> bool {
        !matches!(self, ModelClass::Generic)
    }
}

fn unit(v: [f64; 3], name: &str) -> Result<[f64; 3]> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidModel(format!("{name} has non-finite components")));
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > tol::UNIT_VECTOR_NORMALIZE {
        return Err(Error::InvalidModel(format!(
            "{name} is not a unit vector (norm {norm})"
        )));
    }
    if (norm - 1.0).abs() <= 2.0 * f64::EPSILON {
        return Ok(v);
    }
    Ok(v.map(|x| x / norm))
}

fn is_z(v: [f64; 3]) -> bool {
    v[0].abs() <= tol::PARAMETER_ZERO
        && v[1].abs() <= tol::PARAMETER_ZERO
        && (v[2] - 1.0).abs() <= tol::PARAMETER_ZERO
}

impl HamiltonianModel {
    /// Validates the energies and normalizes `n`, `m` when they are within
    /// `1e-6` of unit length.
    pub fn new(omega1: f64, omega2: f64, n: [f64; 3], m: [f64; 3], c: [f64; 3]) -> Result<Self> {
        for (name, w) in [("omega1", omega1), ("omega2", omega2)] {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidModel(format!("{name} must be finite and ≥ 0, got {w}")));
            }
        }
        if c.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidModel("coupling has non-finite components".into()));
        }
        Ok(Self {
            omega1,
            omega2,
            n: unit(n, "n")?,
            m: unit(m, "m")?,
            c,
        })
    }

    /// Model with `n⃗ = m⃗ = ẑ`.
    pub fn z_aligned(omega1: f64, omega2: f64, c: [f64; 3]) -> Result<Self> {
        Self::new(omega1, omega2, Z_AXIS, Z_AXIS, c)
    }

    /// Ising coupling `c = (c_x, 0, 0)` with z-aligned controls.
    pub fn ising(omega1: f64, omega2: f64, cx: f64) -> Result<Self> {
        Self::z_aligned(omega1, omega2, [cx, 0.0, 0.0])
    }

    /// Same axes and coupling with new local energies.
    pub fn with_omegas(&self, omega1: f64, omega2: f64) -> Result<Self> {
        Self::new(omega1, omega2, self.n, self.m, self.c)
    }

    /// Builds a model from a general real coupling matrix `c_ij` by rotating
    /// both Pauli frames so the coupling becomes diagonal. The axes `n`, `m`
    /// are expressed in the rotated frames.
    pub fn from_coupling_matrix(
        omega1: f64,
        omega2: f64,
        n: [f64; 3],
        m: [f64; 3],
        coupling: [[f64; 3]; 3],
    ) -> Result<(Self, CouplingFrame)> {
        let frame = diagonalize_coupling(coupling);
        let n = unit(n, "n")?;
        let m = unit(m, "m")?;
        let rotate_t = |r: &[[f64; 3]; 3], v: [f64; 3]| -> [f64; 3] {
            [0, 1, 2].map(|k| (0..3).map(|i| r[i][k] * v[i]).sum())
        };
        let model = Self::new(
            omega1,
            omega2,
            rotate_t(&frame.rotation1, n),
            rotate_t(&frame.rotation2, m),
            frame.diagonal,
        )?;
        Ok((model, frame))
    }

    pub fn omega1(&self) -> f64 {
        self.omega1
    }

    pub fn omega2(&self) -> f64 {
        self.omega2
    }

    pub fn n(&self) -> [f64; 3] {
        self.n
    }

    pub fn m(&self) -> [f64; 3] {
        self.m
    }

    pub fn c(&self) -> [f64; 3] {
        self.c
    }

    pub fn local1(&self) -> Mat4 {
        kron(&(pauli_dot(self.n) * self.omega1), &Mat2::identity())
    }

    pub fn local2(&self) -> Mat4 {
        kron(&Mat2::identity(), &(pauli_dot(self.m) * self.omega2))
    }

    pub fn interaction(&self) -> Mat4 {
        let [xx, yy, zz] = pauli_pairs();
        xx * self.c[0] + yy * self.c[1] + zz * self.c[2]
    }

    /// Controls are effectively along `ẑ`: each axis is `ẑ` or its energy is
    /// zero, so the closed forms apply.
    pub fn is_z_aligned(&self) -> bool {
        (self.omega1 <= tol::PARAMETER_ZERO || is_z(self.n))
            && (self.omega2 <= tol::PARAMETER_ZERO || is_z(self.m))
    }

    pub fn classify(&self) -> ModelClass {
        let zero = |x: f64| x.abs() <= tol::PARAMETER_ZERO;
        if zero(self.omega1) && zero(self.omega2) {
            ModelClass::CommutingLocalFree
        } else if self.is_z_aligned() && zero(self.c[0]) && zero(self.c[1]) {
            ModelClass::CommutingNoXY
        } else if self.is_z_aligned() {
            ModelClass::ZAxisAligned
        } else {
            ModelClass::Generic
        }
    }

    pub(crate) fn require_z_aligned(&self) -> Result<()> {
        if self.is_z_aligned() {
            Ok(())
        } else {
            Err(Error::WrongModelClass)
        }
    }
}

/// Total Hamiltonian `H₁ + H₂ + H_I`.
pub fn build_total_hamiltonian(model: &HamiltonianModel) -> Mat4 {
    model.local1() + model.local2() + model.interaction()
}

/// `[H₁ + H₂, H_I] = 0`, evaluated numerically.
pub fn commutator_is_zero(model: &HamiltonianModel) -> bool {
    let local = model.local1() + model.local2();
    let comm = local.commutator(&model.interaction());
    max_abs_diff(&comm, &Mat4::zeros()) <= tol::COMMUTATOR
}

/// `c = R₁·diag(d)·R₂ᵀ` with proper rotations `R₁`, `R₂`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CouplingFrame {
    pub diagonal: [f64; 3],
    pub rotation1: [[f64; 3]; 3],
    pub rotation2: [[f64; 3]; 3],
}

/// Singular value decomposition of a real coupling matrix with the signs
/// absorbed into the diagonal so that both frames are proper rotations.
pub fn diagonalize_coupling(c: [[f64; 3]; 3]) -> CouplingFrame {
    let mat = Matrix3::from_fn(|i, j| c[i][j]);
    let svd = mat.svd(true, true);
    let mut u = svd.u.expect("u requested");
    let mut v = svd.v_t.expect("v_t requested").transpose();
    let mut d = [svd.singular_values[0], svd.singular_values[1], svd.singular_values[2]];
    if u.determinant() < 0.0 {
        u.column_mut(2).neg_mut();
        d[2] = -d[2];
    }
    if v.determinant() < 0.0 {
        v.column_mut(2).neg_mut();
        d[2] = -d[2];
    }
    CouplingFrame {
        diagonal: d,
        rotation1: [0, 1, 2].map(|i| [0, 1, 2].map(|j| u[(i, j)])),
        rotation2: [0, 1, 2].map(|i| [0, 1, 2].map(|j| v[(i, j)])),
    }
}
