//! Numerical tolerances shared by every check in the crate.
//!
//! Values are absolute and apply to entrywise maxima (`max_abs_diff`) unless
//! noted otherwise.

/// Unitarity of a constructed `Unitary4`: `max |U†U - I|`.
pub const UNITARY: f64 = 1e-10;
/// Hermiticity accepted by the matrix exponential.
pub const HERMITIAN: f64 = 1e-10;
/// Symmetry of the input to the symmetric-unitary eigensolver.
pub const SYMMETRIC: f64 = 1e-9;
/// Unitarity of the input to the symmetric-unitary eigensolver. The input is
/// usually a product `UᵀU`, which doubles the rounding of `U`.
pub const SYMMETRIC_UNITARY: f64 = 1e-9;
/// Relative gap under which eigenvalues of the real part are clustered.
pub const EIGEN_CLUSTER: f64 = 1e-8;
/// Reconstruction residual guaranteed by the symmetric-unitary eigensolver.
pub const EIGEN_RECONSTRUCTION: f64 = 1e-9;
/// Residual of `L·A·K·e^{iφ} - U` above which a decomposition is rejected.
pub const KAK_RECONSTRUCTION: f64 = 1e-8;
/// Allowed deviation of `Σλ` from a multiple of `2π`.
pub const LAMBDA_SUM: f64 = 1e-8;
/// Deviation of a unit vector's norm from one that is silently normalized.
pub const UNIT_VECTOR_NORMALIZE: f64 = 1e-6;
/// Threshold for treating a model parameter (energy, coupling) as zero.
pub const PARAMETER_ZERO: f64 = 1e-12;
/// Threshold for a vanishing commutator `[H₁+H₂, H_I]`.
pub const COMMUTATOR: f64 = 1e-12;
/// Frequencies below this use the analytic `sin(Ωt)/Ω → t` limit.
pub const SINGULAR_FREQUENCY: f64 = 1e-12;
/// Normalization of a pure two-qubit state.
pub const STATE_NORM: f64 = 1e-12;
