//! Small complex square matrices (dimension 2 or 3) with the closed-form
//! Hermitian eigensolvers the rest of the crate relies on.

use core::ops::{Add, Mul, Sub};

use libm::{acos, cos, sqrt};
use num_complex::Complex64;

use crate::error::Error;
use crate::EXACT_TOL;

/// A dense complex matrix of dimension 2 or 3, stored inline (no allocation).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: [Complex64; 9],
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        debug_assert!(dim == 2 || dim == 3);
        CMatrix {
            dim,
            data: [Complex64::ZERO; 9],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    /// Builds a 2x2 matrix from rows.
    pub fn from_rows2(rows: [[Complex64; 2]; 2]) -> Self {
        let mut m = Self::zeros(2);
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j)] = rows[i][j];
            }
        }
        m
    }

    /// Builds a 3x3 matrix from rows.
    pub fn from_rows3(rows: [[Complex64; 3]; 3]) -> Self {
        let mut m = Self::zeros(3);
        for i in 0..3 {
            for j in 0..3 {
                m[(i, j)] = rows[i][j];
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn conjugate_transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut out = *self;
        for v in out.data.iter_mut() {
            *v *= k;
        }
        out
    }

    /// Largest absolute difference between entries of `self` and `other`,
    /// measured with the complex modulus.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let d = self[(i, j)] - other[(i, j)];
                worst = worst.max(sqrt(d.norm_sqr()));
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.conjugate_transpose()) <= tol
    }

    /// Eigenvalues of a Hermitian matrix in ascending order, computed in
    /// closed form: the quadratic formula for dimension 2 and the
    /// trigonometric solution of the characteristic cubic for dimension 3.
    pub fn hermitian_eigenvalues(&self) -> Result<[f64; 3], Error> {
        if !self.is_hermitian(1e-9) {
            return Err(Error::NotADensityMatrix("matrix is not Hermitian"));
        }
        match self.dim {
            2 => {
                let a = self[(0, 0)].re;
                let d = self[(1, 1)].re;
                let off = self[(0, 1)].norm_sqr();
                let mid = 0.5 * (a + d);
                let rad = sqrt(0.25 * (a - d) * (a - d) + off);
                Ok([mid - rad, mid + rad, 0.0])
            }
            3 => Ok(self.hermitian_eigenvalues_3()),
            n => Err(Error::UnsupportedDimension(n)),
        }
    }

    /// Trigonometric solution for symmetric/Hermitian 3x3 eigenvalues
    /// (Smith's method on the shifted, scaled matrix).
    fn hermitian_eigenvalues_3(&self) -> [f64; 3] {
        let a = self;
        let p1 = a[(0, 1)].norm_sqr() + a[(0, 2)].norm_sqr() + a[(1, 2)].norm_sqr();
        let q = a.trace().re / 3.0;
        let d0 = a[(0, 0)].re - q;
        let d1 = a[(1, 1)].re - q;
        let d2 = a[(2, 2)].re - q;
        let p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
        if p2 <= 0.0 {
            // Scalar multiple of the identity.
            return [q, q, q];
        }
        let p = sqrt(p2 / 6.0);
        let mut b = *a;
        for i in 0..3 {
            b[(i, i)] -= Complex64::new(q, 0.0);
        }
        let b = b.scale(1.0 / p);
        let r = (b.det3().re / 2.0).clamp(-1.0, 1.0);
        let phi = acos(r) / 3.0;
        let hi = q + 2.0 * p * cos(phi);
        let lo = q + 2.0 * p * cos(phi + 2.0 * core::f64::consts::PI / 3.0);
        let mid = 3.0 * q - hi - lo;
        [lo, mid, hi]
    }

    fn det3(&self) -> Complex64 {
        let a = self;
        a[(0, 0)] * (a[(1, 1)] * a[(2, 2)] - a[(1, 2)] * a[(2, 1)])
            - a[(0, 1)] * (a[(1, 0)] * a[(2, 2)] - a[(1, 2)] * a[(2, 0)])
            + a[(0, 2)] * (a[(1, 0)] * a[(2, 1)] - a[(1, 1)] * a[(2, 0)])
    }

    /// trace(self * other), without forming the product matrix.
    pub fn product_trace(&self, other: &Self) -> Complex64 {
        let mut t = Complex64::ZERO;
        for i in 0..self.dim {
            for k in 0..self.dim {
                t += self[(i, k)] * other[(k, i)];
            }
        }
        t
    }

    /// trace(self^2); real for Hermitian inputs.
    pub fn purity(&self) -> f64 {
        self.product_trace(self).re
    }

    /// Checks the density-operator requirements: Hermitian, unit trace and
    /// positive semidefinite (within `EXACT_TOL`-scale slack).
    pub fn validate_density(&self) -> Result<(), Error> {
        if !self.is_hermitian(EXACT_TOL) {
            return Err(Error::NotADensityMatrix("matrix is not Hermitian"));
        }
        let tr = self.trace();
        if libm::fabs(tr.re - 1.0) > EXACT_TOL || libm::fabs(tr.im) > EXACT_TOL {
            return Err(Error::NotADensityMatrix("trace is not 1"));
        }
        let eigs = self.hermitian_eigenvalues()?;
        if eigs[..self.dim].iter().any(|&e| e < -EXACT_TOL) {
            return Err(Error::NotADensityMatrix("negative eigenvalue"));
        }
        Ok(())
    }
}

impl core::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: CMatrix) -> CMatrix {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self;
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a += b;
        }
        out
    }
}

impl Sub for CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: CMatrix) -> CMatrix {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self;
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a -= b;
        }
        out
    }
}

impl Mul for CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: CMatrix) -> CMatrix {
        debug_assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self[(i, k)];
                for j in 0..n {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }
}
