//! Real symmetric Jacobi eigensolver and the eigensystem of complex symmetric
//! unitary matrices.

use std::cmp::Ordering;
use std::f64::consts::PI;

use super::{Complex, Mat4, ZERO};
use crate::error::{Error, Result};
use crate::tol;

const MAX_SWEEPS: usize = 64;

type RMat<const N: usize> = [[f64; N]; N];

fn off_norm2<const N: usize>(a: &RMat<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s
}

fn frob2<const N: usize>(a: &RMat<N>) -> f64 {
    a.iter().flatten().map(|x| x * x).sum()
}

/// Applies the plane rotation `G = [[c, -s], [s, c]]` on indices `(p, q)`:
/// `a ← Gᵀ a G`, `v ← v G`.
fn rotate<const N: usize>(
    a: &mut RMat<N>,
    v: &mut RMat<N>,
    p: usize,
    q: usize,
    c: f64,
    s: f64,
) {
    for k in 0..N {
        let (akp, akq) = (a[k][p], a[k][q]);
        a[k][p] = c * akp + s * akq;
        a[k][q] = -s * akp + c * akq;
    }
    for k in 0..N {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = c * apk + s * aqk;
        a[q][k] = -s * apk + c * aqk;
    }
    for k in 0..N {
        let (vkp, vkq) = (v[k][p], v[k][q]);
        v[k][p] = c * vkp + s * vkq;
        v[k][q] = -s * vkp + c * vkq;
    }
}

/// Cyclic Jacobi eigensolver for a real symmetric matrix.
///
/// Returns `(w, v)` with `a = v·diag(w)·vᵀ`; eigenvectors are the columns of
/// `v`. Eigenvalues are not sorted.
pub fn jacobi_eigh<const N: usize>(a: &RMat<N>) -> ([f64; N], RMat<N>) {
    let mut a = *a;
    for i in 0..N {
        for j in 0..i {
            let m = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = m;
            a[j][i] = m;
        }
    }
    let mut v = [[0.0; N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let scale = frob2(&a).max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        if off_norm2(&a) <= scale * 1e-34 {
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // G = [[c, s], [-s, c]] zeroes a[p][q]
                rotate(&mut a, &mut v, p, q, c, -s);
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let mut w = [0.0; N];
    for i in 0..N {
        w[i] = a[i][i];
    }
    (w, v)
}

/// Joint Jacobi sweeps that drive the off-diagonal parts of two commuting
/// symmetric matrices to zero with a single orthogonal transform.
fn joint_diagonalize<const N: usize>(
    x: &mut RMat<N>,
    y: &mut RMat<N>,
    v: &mut RMat<N>,
) {
    let scale = (frob2(x) + frob2(y)).max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        if off_norm2(x) + off_norm2(y) <= scale * 1e-34 {
            break;
        }
        let mut rotated = false;
        for p in 0..N {
            for q in p + 1..N {
                let g = [
                    [x[p][p] - x[q][q], x[p][q] + x[q][p]],
                    [y[p][p] - y[q][q], y[p][q] + y[q][p]],
                ];
                let ton = g[0][0] * g[0][0] + g[1][0] * g[1][0]
                    - g[0][1] * g[0][1]
                    - g[1][1] * g[1][1];
                let toff = 2.0 * (g[0][0] * g[0][1] + g[1][0] * g[1][1]);
                let theta = 0.5 * toff.atan2(ton + (ton * ton + toff * toff).sqrt());
                let (s, c) = theta.sin_cos();
                if s.abs() > 1e-18 {
                    rotated = true;
                    let mut dummy = [[0.0; N]; N];
                    rotate(x, v, p, q, c, s);
                    rotate(y, &mut dummy, p, q, c, s);
                }
            }
        }
        if !rotated {
            break;
        }
    }
}

/// Eigensystem `S = Oᵀ·diag(ε²)·O` of a complex symmetric unitary matrix with
/// real orthogonal `O`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenSystemSymUnitary {
    /// Unit-modulus eigenvalues `ε²ᵢ`, ordered by phase in `(-π, π]`.
    pub eigenvalues: [Complex; 4],
    /// Row `i` is the real unit eigenvector for `eigenvalues[i]`.
    pub eigenvectors: [[f64; 4]; 4],
}

impl EigenSystemSymUnitary {
    /// `Oᵀ·diag(ε²)·O`.
    pub fn reconstruct(&self) -> Mat4 {
        Mat4::from_fn(|i, j| {
            (0..4)
                .map(|k| {
                    self.eigenvalues[k]
                        * (self.eigenvectors[k][i] * self.eigenvectors[k][j])
                })
                .sum()
        })
    }

    /// Rows of the orthogonal eigenvector matrix as a complex matrix.
    pub fn orthogonal(&self) -> Mat4 {
        Mat4::from_real(self.eigenvectors)
    }
}

/// Phase in `(-π, π]`.
pub fn phase(z: Complex) -> f64 {
    let a = z.arg();
    if a <= -PI + 1e-14 {
        PI
    } else {
        a
    }
}

fn fix_sign(v: &mut [f64; 4]) {
    if let Some(first) = v.iter().copied().find(|x| x.abs() > 1e-12) {
        if first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// Diagonalizes a complex symmetric unitary `S` with a real orthogonal basis.
///
/// `S = X + iY` with `X`, `Y` real symmetric and commuting. `X` is diagonalized
/// first and `Y` is diagonalized inside each degenerate cluster of `X`; a few
/// joint Jacobi sweeps then remove the residual coupling left by nearly
/// degenerate clusters.
pub fn eig_complex_symmetric_unitary(s: &Mat4) -> Result<EigenSystemSymUnitary> {
    let asym = super::max_abs_diff(s, &s.transpose());
    if asym.is_nan() || asym > tol::SYMMETRIC {
        return Err(Error::NotSymmetric(asym));
    }
    let defect = s.unitarity_defect();
    if defect > tol::SYMMETRIC_UNITARY {
        return Err(Error::NotUnitary(defect));
    }

    let mut x = s.real_part();
    let mut y = s.imag_part();
    for i in 0..4 {
        for j in 0..i {
            x[i][j] = 0.5 * (x[i][j] + x[j][i]);
            x[j][i] = x[i][j];
            y[i][j] = 0.5 * (y[i][j] + y[j][i]);
            y[j][i] = y[i][j];
        }
    }

    let (wx, vx) = jacobi_eigh(&x);
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| wx[a].total_cmp(&wx[b]));
    let mut v = [[0.0; 4]; 4];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..4 {
            v[row][col] = vx[row][src];
        }
    }
    let sorted: Vec<f64> = order.iter().map(|&k| wx[k]).collect();
    let norm_x = sorted.iter().fold(0.0f64, |m, w| m.max(w.abs()));
    let gap = tol::EIGEN_CLUSTER * norm_x.max(1.0);

    let mut start = 0;
    while start < 4 {
        let mut end = start + 1;
        while end < 4 && sorted[end] - sorted[end - 1] < gap {
            end += 1;
        }
        if end - start > 1 {
            diagonalize_cluster(&y, &mut v, start, end);
        }
        start = end;
    }

    let mut xr = similarity(&x, &v);
    let mut yr = similarity(&y, &v);
    joint_diagonalize(&mut xr, &mut yr, &mut v);

    let mut pairs: Vec<(Complex, [f64; 4])> = (0..4)
        .map(|k| {
            let mut vec = [v[0][k], v[1][k], v[2][k], v[3][k]];
            fix_sign(&mut vec);
            let sv = s.apply(&vec.map(|r| Complex::new(r, 0.0)));
            let ev: Complex = (0..4).map(|i| sv[i] * vec[i]).sum();
            let ev = if ev.norm() > 0.0 { ev / ev.norm() } else { ZERO };
            (ev, vec)
        })
        .collect();
    pairs.sort_by(|a, b| {
        let (pa, pb) = (phase(a.0), phase(b.0));
        if (pa - pb).abs() > tol::EIGEN_CLUSTER {
            pa.total_cmp(&pb)
        } else {
            lexicographic(&b.1, &a.1)
        }
    });

    let mut out = EigenSystemSymUnitary {
        eigenvalues: [ZERO; 4],
        eigenvectors: [[0.0; 4]; 4],
    };
    for (k, (ev, vec)) in pairs.into_iter().enumerate() {
        out.eigenvalues[k] = ev;
        out.eigenvectors[k] = vec;
    }
    Ok(out)
}

fn lexicographic(a: &[f64; 4], b: &[f64; 4]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// `vᵀ·a·v`.
fn similarity(a: &RMat<4>, v: &RMat<4>) -> RMat<4> {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0.0;
            for k in 0..4 {
                for l in 0..4 {
                    acc += v[k][i] * a[k][l] * v[l][j];
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Rotates columns `start..end` of `v` so that `y` restricted to their span is
/// diagonal.
fn diagonalize_cluster(y: &RMat<4>, v: &mut RMat<4>, start: usize, end: usize) {
    let full = similarity(y, v);
    let n = end - start;
    let mut block = [[0.0; 4]; 4];
    for i in 0..n {
        for j in 0..n {
            block[i][j] = full[start + i][start + j];
        }
    }
    // Pad unused slots with distinct values so they stay decoupled.
    for (i, row) in block.iter_mut().enumerate().skip(n) {
        row[i] = 1e3 * (i as f64 + 1.0);
    }
    let (_, w) = jacobi_eigh(&block);
    let old = *v;
    for row in 0..4 {
        for j in 0..n {
            v[row][start + j] = (0..n).map(|k| old[row][start + k] * w[k][j]).sum();
        }
    }
}
