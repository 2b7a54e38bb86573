use super::{jacobi_eigh, Complex, Mat4, Unitary4};
use crate::error::{Error, Result};
use crate::tol;

/// `e^{-i·h·t}` for Hermitian `h`.
///
/// `h = A + iB` is embedded as the real symmetric `[[A, -B], [B, A]]`, whose
/// Jacobi eigendecomposition gives `cos(ht)` and `sin(ht)` exactly in the same
/// embedding. Degenerate spectra need no special handling.
pub fn expm_skew_hermitian(h: &Mat4, t: f64) -> Result<Unitary4> {
    let dev = super::max_abs_diff(h, &h.adjoint());
    if dev.is_nan() || dev > tol::HERMITIAN {
        return Err(Error::NonHermitianInput(dev));
    }
    let h = (*h + h.adjoint()) * 0.5;
    let mut emb = [[0.0; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            let z = h[(i, j)];
            emb[i][j] = z.re;
            emb[i + 4][j + 4] = z.re;
            emb[i][j + 4] = -z.im;
            emb[i + 4][j] = z.im;
        }
    }
    let (w, v) = jacobi_eigh(&emb);
    let (sin, cos): (Vec<f64>, Vec<f64>) = w.iter().map(|e| (e * t).sin_cos()).unzip();
    // Only the left half of each embedded function is needed: P on top, Q below.
    let embedded = |f: &[f64], row: usize, col: usize| -> f64 {
        (0..8).map(|k| v[row][k] * f[k] * v[col][k]).sum()
    };
    let u = Mat4::from_fn(|i, j| {
        let (pc, qc) = (embedded(&cos, i, j), embedded(&cos, i + 4, j));
        let (ps, qs) = (embedded(&sin, i, j), embedded(&sin, i + 4, j));
        // cos(ht) - i·sin(ht) with cos = Pc + iQc, sin = Ps + iQs
        Complex::new(pc + qs, qc - ps)
    });
    Unitary4::new(u)
}
