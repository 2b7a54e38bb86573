//! Fixed-size complex linear algebra for one and two qubits.

mod eigen;
mod expm;

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex64 as Complex;

pub use eigen::{
    phase,
    eig_complex_symmetric_unitary, jacobi_eigh, EigenSystemSymUnitary,
};
pub use expm::expm_skew_hermitian;

use crate::error::{Error, Result};
use crate::tol;

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);
pub(crate) const I: Complex = Complex::new(0.0, 1.0);

/// Dense `N×N` complex matrix stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMat<const N: usize>(pub [[Complex; N]; N]);

pub type Mat2 = CMat<2>;
pub type Mat4 = CMat<4>;

impl<const N: usize> Default for CMat<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> CMat<N> {
    pub fn zeros() -> Self {
        Self([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_diag(d: [Complex; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = d[i];
        }
        m
    }

    pub fn from_real(r: [[f64; N]; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = Complex::new(r[i][j], 0.0);
            }
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].conj())
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn real_part(&self) -> [[f64; N]; N] {
        let mut r = [[0.0; N]; N];
        for i in 0..N {
            for j in 0..N {
                r[i][j] = self.0[i][j].re;
            }
        }
        r
    }

    pub fn imag_part(&self) -> [[f64; N]; N] {
        let mut r = [[0.0; N]; N];
        for i in 0..N {
            for j in 0..N {
                r[i][j] = self.0[i][j].im;
            }
        }
        r
    }

    /// Largest `|Im|` over all entries.
    pub fn max_imag(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0, |acc, z| acc.max(z.im.abs()))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |acc, z| acc.max(z.norm()))
    }

    pub fn trace(&self) -> Complex {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex {
        let mut a = self.0;
        let mut det = ONE;
        for col in 0..N {
            let pivot = (col..N)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .unwrap();
            if a[pivot][col].norm() == 0.0 {
                return ZERO;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col];
            det *= p;
            for row in col + 1..N {
                let f = a[row][col] / p;
                for k in col..N {
                    let v = a[col][k];
                    a[row][k] -= f * v;
                }
            }
        }
        det
    }

    pub fn apply(&self, v: &[Complex; N]) -> [Complex; N] {
        let mut out = [ZERO; N];
        for i in 0..N {
            out[i] = (0..N).map(|j| self.0[i][j] * v[j]).sum();
        }
        out
    }

    pub fn column(&self, j: usize) -> [Complex; N] {
        let mut c = [ZERO; N];
        for i in 0..N {
            c[i] = self.0[i][j];
        }
        c
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        max_abs_diff(self, &self.adjoint()) <= tol
    }

    /// `max |M†M - I|`.
    pub fn unitarity_defect(&self) -> f64 {
        max_abs_diff(&(self.adjoint() * *self), &Self::identity())
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }
}

/// Entrywise `max |a - b|`.
pub fn max_abs_diff<const N: usize>(a: &CMat<N>, b: &CMat<N>) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..N {
        for j in 0..N {
            m = m.max((a.0[i][j] - b.0[i][j]).norm());
        }
    }
    m
}

impl<const N: usize> Index<(usize, usize)> for CMat<N> {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMat<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Mul for CMat<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl<const N: usize> Add for CMat<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<const N: usize> Sub for CMat<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl<const N: usize> Neg for CMat<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|i, j| -self.0[i][j])
    }
}

impl<const N: usize> Mul<Complex> for CMat<N> {
    type Output = Self;
    fn mul(self, s: Complex) -> Self {
        self.scale(s)
    }
}

impl<const N: usize> Mul<f64> for CMat<N> {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(Complex::new(s, 0.0))
    }
}

/// Tensor product with row index `2·i₁ + i₂` and column index `2·j₁ + j₂`.
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, c| a.0[r / 2][c / 2] * b.0[r % 2][c % 2])
}

pub fn sigma_x() -> Mat2 {
    CMat([[ZERO, ONE], [ONE, ZERO]])
}

pub fn sigma_y() -> Mat2 {
    CMat([[ZERO, -I], [I, ZERO]])
}

pub fn sigma_z() -> Mat2 {
    CMat([[ONE, ZERO], [ZERO, -ONE]])
}

/// `v·σ⃗ = vₓσₓ + v_yσ_y + v_zσ_z`.
pub fn pauli_dot(v: [f64; 3]) -> Mat2 {
    sigma_x() * v[0] + sigma_y() * v[1] + sigma_z() * v[2]
}

/// `σⱼ⊗σⱼ` for `j = x, y, z`.
pub fn pauli_pairs() -> [Mat4; 3] {
    [
        kron(&sigma_x(), &sigma_x()),
        kron(&sigma_y(), &sigma_y()),
        kron(&sigma_z(), &sigma_z()),
    ]
}

/// A 4×4 matrix whose unitarity was checked on construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary4(Mat4);

impl Unitary4 {
    pub fn new(m: Mat4) -> Result<Self> {
        let defect = m.unitarity_defect();
        if defect.is_nan() || defect > tol::UNITARY {
            return Err(Error::NotUnitary(defect));
        }
        Ok(Self(m))
    }

    /// Wraps `m` without the unitarity check. Callers guarantee the invariant
    /// by construction (products of checked unitaries, closed forms).
    pub(crate) fn new_unchecked(m: Mat4) -> Self {
        Self(m)
    }

    pub fn identity() -> Self {
        Self(Mat4::identity())
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.0
    }

    pub fn into_inner(self) -> Mat4 {
        self.0
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn det(&self) -> Complex {
        self.0.det()
    }

    pub fn apply(&self, v: &[Complex; 4]) -> [Complex; 4] {
        self.0.apply(v)
    }
}

impl Mul for Unitary4 {
    type Output = Unitary4;
    fn mul(self, rhs: Self) -> Self {
        Unitary4(self.0 * rhs.0)
    }
}

impl From<Unitary4> for Mat4 {
    fn from(u: Unitary4) -> Mat4 {
        u.0
    }
}
