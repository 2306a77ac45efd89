//! Small dense square matrices over real or complex scalars.
//!
//! Everything in this crate lives in dimension 2 or 4, so the storage is a
//! flat row-major `Vec` and the algorithms are the textbook ones.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Entry, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<E> {
    dim: usize,
    data: Vec<E>,
}

pub type RealMatrix<T> = Matrix<T>;
pub type ComplexMatrix<T> = Matrix<Complex<T>>;

impl<E: Entry> Matrix<E> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![E::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = E::one();
        }
        m
    }

    pub fn diagonal(entries: &[E]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &v) in entries.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Builds a matrix from rows. All rows must have the same length as the
    /// number of rows.
    pub fn from_rows<R: AsRef<[E]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { dim, data })
    }

    /// Outer product `|u⟩⟨v|` where `v` is already in bra (conjugated) form.
    pub fn outer(ket: &[E], bra: &[E]) -> Self {
        assert_eq!(ket.len(), bra.len(), "outer product of unequal lengths");
        let dim = ket.len();
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = ket[i] * bra[j];
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.data.chunks(self.dim)
    }

    pub fn map<F: Entry>(&self, f: impl Fn(E) -> F) -> Matrix<F> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Conjugate transpose. Equal to [`Matrix::transpose`] for real entries.
    pub fn adjoint(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)].conjugate();
            }
        }
        t
    }

    pub fn trace(&self) -> E {
        (0..self.dim).fold(E::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn scale(&self, factor: E) -> Self {
        self.map(|x| x * factor)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.dim, "vector length does not match matrix");
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(E::zero(), |acc, (&m, &x)| acc + m * x)
            })
            .collect()
    }

    /// Kronecker (tensor) product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let n = self.dim * other.dim;
        let mut out = Self::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self[(i, j)];
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out[(i * other.dim + k, j * other.dim + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Largest entry modulus; the max-norm used for tolerance comparisons.
    pub fn max_abs(&self) -> E::Real {
        self.data
            .iter()
            .fold(E::Real::zero(), |acc, x| Float::max(acc, x.modulus()))
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> E::Real {
        let sum = self
            .data
            .iter()
            .map(|x| {
                let m = x.modulus();
                m * m
            })
            .sum::<E::Real>();
        Float::sqrt(sum)
    }

    pub fn approx_eq(&self, other: &Self, tol: E::Real) -> bool {
        self.dim == other.dim && self.sub(other).max_abs() <= tol
    }

    /// `‖M†M − I‖_max ≤ tol`.
    pub fn is_unitary(&self, tol: E::Real) -> bool {
        let gram = &self.adjoint() * self;
        gram.approx_eq(&Self::identity(self.dim), tol)
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> E {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = E::one();
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| {
                    a[r * n + col]
                        .modulus()
                        .partial_cmp(&a[s * n + col].modulus())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .expect("non-empty range");
            if a[pivot * n + col].modulus().is_zero() {
                return E::zero();
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det = det * p;
            for r in col + 1..n {
                let factor = a[r * n + col] / p;
                if factor.modulus().is_zero() {
                    continue;
                }
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] = a[r * n + k] - factor * v;
                }
            }
        }
        det
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn to_complex(&self) -> ComplexMatrix<T> {
        self.map(|x| Complex::new(x, T::zero()))
    }
}

impl<T: Scalar> Matrix<Complex<T>> {
    /// Returns the real part if every imaginary part is within `tol` of zero.
    pub fn real_part(&self, tol: T) -> Option<RealMatrix<T>> {
        if self.data.iter().any(|z| z.im.abs() > tol) {
            return None;
        }
        Some(Matrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z.re).collect(),
        })
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.dim + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.dim + j]
    }
}

impl<E: Entry> Mul for &Matrix<E> {
    type Output = Matrix<E>;

    fn mul(self, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.dim, rhs.dim, "matrix product of unequal sizes");
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<E: fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.dim.max(1)))
            .finish()
    }
}

impl<E: Entry> Mul for Matrix<E> {
    type Output = Matrix<E>;

    fn mul(self, rhs: Matrix<E>) -> Matrix<E> {
        &self * &rhs
    }
}
