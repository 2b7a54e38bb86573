//! Conversions between the eigenphases `λ` of the entangling factor and the
//! coordinates `θ`, and reduction of `θ` to the Weyl chamber.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::tol;

/// Deviation of `Σλ` from the nearest multiple of `2π`.
pub fn lambda_sum_defect(lambda: &[f64; 4]) -> f64 {
    let s: f64 = lambda.iter().sum();
    let tau = 2.0 * PI;
    (s - tau * (s / tau).round()).abs()
}

pub(crate) fn check_lambdas(lambda: &[f64; 4]) -> Result<()> {
    let d = lambda_sum_defect(lambda);
    if d.is_nan() || d > tol::LAMBDA_SUM {
        Err(Error::InconsistentLambdas(d))
    } else {
        Ok(())
    }
}

/// `λ₁ = θx - θy + θz`, `λ₂ = -θx + θy + θz`, `λ₃ = -θx - θy - θz`,
/// `λ₄ = θx + θy - θz`.
pub fn lambdas_from_thetas(theta: [f64; 3]) -> [f64; 4] {
    let [x, y, z] = theta;
    [x - y + z, -x + y + z, -x - y - z, x + y - z]
}

/// Inverts [`lambdas_from_thetas`] through pairwise sums:
/// `θz = (λ₁+λ₂)/2`, `θy = (λ₂+λ₄)/2`, `θx = (λ₁+λ₄)/2`.
pub fn thetas_from_lambdas(lambda: [f64; 4]) -> Result<[f64; 3]> {
    check_lambdas(&lambda)?;
    let [l1, l2, _, l4] = lambda;
    Ok([0.5 * (l1 + l4), 0.5 * (l2 + l4), 0.5 * (l1 + l2)])
}

/// Distance from `x` to the nearest multiple of `π/2`, in `[0, π/4]`.
fn fold(x: f64) -> f64 {
    let r = x.rem_euclid(FRAC_PI_2);
    let f = r.min(FRAC_PI_2 - r);
    // rem_euclid can return π/2 itself for tiny negative inputs
    f.max(0.0) + 0.0
}

/// Reduces `θ` into `π/4 ≥ θx ≥ θy ≥ θz ≥ 0`.
///
/// The symmetry group acting on `θ` is generated by shifts `θⱼ → θⱼ + π/2`,
/// reflections `θⱼ → -θⱼ` (mod `π/2`, so also `θⱼ → π/2 - θⱼ`) and
/// permutations. Each coordinate is folded to its distance from the nearest
/// multiple of `π/2` and the triple is sorted in descending order.
pub fn canonicalize_thetas(theta: [f64; 3]) -> [f64; 3] {
    let mut out = theta.map(fold);
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// True if `θ` lies in the chamber within `eps`.
pub fn in_weyl_chamber(theta: &[f64; 3], eps: f64) -> bool {
    let [x, y, z] = *theta;
    x <= std::f64::consts::FRAC_PI_4 + eps && x + eps >= y && y + eps >= z && z >= -eps
}
