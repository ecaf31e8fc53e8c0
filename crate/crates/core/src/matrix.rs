//! Dense matrices over a [`RingSpec`], stored row-major with canonical
//! entries. `0 x k` and `k x 0` matrices are legal and act as the unique
//! empty map.

use crate::ring::RingSpec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl Matrix {
    pub fn new(ring: RingSpec, rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let entries = entries.into_iter().map(|v| ring.normalize(v)).collect();
        Matrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        Matrix::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(ring: RingSpec, rows: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            ring,
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    pub fn zero(ring: RingSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// `s * I_n`.
    pub fn scalar(ring: RingSpec, n: usize, s: &BigInt) -> Self {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = self.ring.normalize(v);
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.ring.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        Matrix::new(
            self.ring.clone(),
            self.rows,
            self.cols,
            self.entries.iter().map(|v| -v).collect(),
        )
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::new(
            self.ring.clone(),
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &BigInt) -> Matrix {
        Matrix::new(
            self.ring.clone(),
            self.rows,
            self.cols,
            self.entries.iter().map(|v| v * s).collect(),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring, "ring mismatch in mul");
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Matrix::zero(self.ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring);
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zero(self.ring.clone(), self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring);
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(
            self.ring.clone(),
            self.rows + other.rows,
            self.cols,
            entries,
        )
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring);
        let mut out = Matrix::zero(
            self.ring.clone(),
            self.rows + other.rows,
            self.cols + other.cols,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product; block `(i, j)` is `self[i][j] * other`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ring, other.ring);
        let mut out = Matrix::zero(
            self.ring.clone(),
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(i * other.rows + p, j * other.cols + q, a * other.get(p, q));
                    }
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Matrix {
        assert!(j < self.cols);
        let mut out = Matrix::zero(self.ring.clone(), self.rows, 1);
        for i in 0..self.rows {
            out.set(i, 0, self.get(i, j).clone());
        }
        out
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.ring.clone(), idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out.set(r, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.ring.clone(), self.rows, idx.len());
        for (c, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, c, self.get(i, j).clone());
            }
        }
        out
    }

    /// Stack the columns of `self` into a single column (column-major vec).
    pub fn vectorize(&self) -> Matrix {
        let mut out = Matrix::zero(self.ring.clone(), self.rows * self.cols, 1);
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.set(j * self.rows + i, 0, self.get(i, j).clone());
            }
        }
        out
    }

    /// Inverse of [`Matrix::vectorize`] for a `rows x cols` target.
    pub fn unvectorize(ring: RingSpec, rows: usize, cols: usize, v: &Matrix) -> Matrix {
        assert_eq!(v.cols, 1);
        assert_eq!(v.rows, rows * cols);
        let mut out = Matrix::zero(ring, rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                out.set(i, j, v.get(j * rows + i, 0).clone());
            }
        }
        out
    }

    /// Reinterpret the entries over another ring, renormalizing.
    pub fn with_ring(&self, ring: RingSpec) -> Matrix {
        Matrix::new(ring, self.rows, self.cols, self.entries.clone())
    }

    /// Lift to the integers (identity on entries; over Z/n the canonical
    /// representatives are already integer lifts).
    pub fn lift(&self) -> Matrix {
        self.with_ring(RingSpec::Integers)
    }

    /// Exact determinant over the integers (Bareiss fraction-free elimination).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.ring, RingSpec::Integers, "determinant is over Z");
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row_vec(i)).collect();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let pivot = (k + 1..n).find(|&i| !a[i][k].is_zero());
                match pivot {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}> {}x{} [", self.ring, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
