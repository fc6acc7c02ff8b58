use std::fmt;

use num_traits::{One, Zero};

use super::ring::{RingSpec, Scalar};
use crate::error::{Error, Result};

/// Dense exact matrix, row-major. Morphisms act on column vectors, so the
/// composite `g ∘ f` is `G.matmul(F)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(ring: RingSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "matrix entries",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        let data = data
            .into_iter()
            .map(|v| ring.canonical(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            ring,
            rows,
            cols,
            data,
        })
    }

    /// Builds from already-canonical scalars.
    pub(crate) fn from_canonical(
        ring: RingSpec,
        rows: usize,
        cols: usize,
        data: Vec<Scalar>,
    ) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    pub fn from_i64(ring: RingSpec, rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "matrix entries",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        let data = data.iter().map(|&v| ring.from_i64(v)).collect();
        Ok(Matrix::from_canonical(ring, rows, cols, data))
    }

    /// Convenience constructor from nested rows; panics on ragged input.
    pub fn from_rows(ring: RingSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Matrix::from_i64(ring, rows.len(), cols, &flat).expect("shape checked")
    }

    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        Matrix::from_canonical(ring, rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(ring: RingSpec, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix::zeros(ring, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = Scalar::one();
        }
        m
    }

    /// Column vector.
    pub fn column(ring: RingSpec, entries: Vec<Scalar>) -> Result<Self> {
        let n = entries.len();
        Matrix::new(ring, n, 1, entries)
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    /// Sets an entry, reducing it into the ring.
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) -> Result<()> {
        let v = self.ring.canonical(v)?;
        self.data[i * self.cols + j] = v;
        Ok(())
    }

    pub(crate) fn set_canonical(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn same_ring(&self, other: &Matrix) -> Result<()> {
        self.ring.ensure_same(&other.ring)
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let (n, m, k) = (self.rows, other.cols, self.cols);
        let mut out = vec![Scalar::zero(); n * m];
        for i in 0..n {
            for l in 0..k {
                let a = &self.data[i * k + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let b = &other.data[l * m + j];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = self.ring.mul(a, b);
                    let cell = &mut out[i * m + j];
                    *cell = self.ring.add(cell, &prod);
                }
            }
        }
        Ok(Matrix::from_canonical(self.ring.clone(), n, m, out))
    }

    fn zip_with(
        &self,
        other: &Matrix,
        op: &'static str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix::from_canonical(
            self.ring.clone(),
            self.rows,
            self.cols,
            data,
        ))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "add", |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "sub", |a, b| self.ring.sub(a, b))
    }

    pub fn neg(&self) -> Matrix {
        self.map(|v| self.ring.neg(v))
    }

    pub fn scale(&self, s: &Scalar) -> Result<Matrix> {
        let s = self.ring.canonical(s.clone())?;
        Ok(self.map(|v| self.ring.mul(v, &s)))
    }

    /// Multiplies by `(-1)^k`.
    pub fn signed(&self, k: i64) -> Matrix {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            self.neg()
        }
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix::from_canonical(
            self.ring.clone(),
            self.rows,
            self.cols,
            self.data.iter().map(f).collect(),
        )
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.data[i * self.cols + j].clone());
            }
        }
        Matrix::from_canonical(self.ring.clone(), self.cols, self.rows, data)
    }

    /// Kronecker product with `(i_A, i_B)` row and column indices, `i_A`
    /// major.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(self.ring.clone(), rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.data[(i * other.rows + k) * cols + j * other.cols + l] =
                            self.ring.mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Copy of the block with the given row and column ranges.
    pub fn block(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        assert!(
            r0 + rows <= self.rows && c0 + cols <= self.cols,
            "block out of range"
        );
        let mut data = Vec::with_capacity(rows * cols);
        for i in r0..r0 + rows {
            data.extend_from_slice(&self.data[i * self.cols + c0..i * self.cols + c0 + cols]);
        }
        Matrix::from_canonical(self.ring.clone(), rows, cols, data)
    }

    /// Overwrites the block at `(r0, c0)` with `m`.
    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Matrix) {
        assert!(
            r0 + m.rows <= self.rows && c0 + m.cols <= self.cols,
            "block out of range"
        );
        for i in 0..m.rows {
            for j in 0..m.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = m.data[i * m.cols + j].clone();
            }
        }
    }

    /// Adds `m` into the block at `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, m: &Matrix) {
        assert!(
            r0 + m.rows <= self.rows && c0 + m.cols <= self.cols,
            "block out of range"
        );
        for i in 0..m.rows {
            for j in 0..m.cols {
                let v = &m.data[i * m.cols + j];
                if v.is_zero() {
                    continue;
                }
                let cell = &mut self.data[(r0 + i) * self.cols + c0 + j];
                *cell = self.ring.add(cell, v);
            }
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.data[i * self.cols + j].clone());
            }
        }
        Matrix::from_canonical(self.ring.clone(), self.rows, cols.len(), data)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        Matrix::from_canonical(self.ring.clone(), rows.len(), self.cols, data)
    }

    pub fn hstack(ring: &RingSpec, rows: usize, parts: &[Matrix]) -> Result<Matrix> {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(ring.clone(), rows, cols);
        let mut c = 0;
        for p in parts {
            ring.ensure_same(&p.ring)?;
            if p.rows != rows {
                return Err(Error::DimensionMismatch {
                    op: "hstack",
                    left: (rows, 0),
                    right: p.shape(),
                });
            }
            out.set_block(0, c, p);
            c += p.cols;
        }
        Ok(out)
    }

    pub fn vstack(ring: &RingSpec, cols: usize, parts: &[Matrix]) -> Result<Matrix> {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Matrix::zeros(ring.clone(), rows, cols);
        let mut r = 0;
        for p in parts {
            ring.ensure_same(&p.ring)?;
            if p.cols != cols {
                return Err(Error::DimensionMismatch {
                    op: "vstack",
                    left: (0, cols),
                    right: p.shape(),
                });
            }
            out.set_block(r, 0, p);
            r += p.rows;
        }
        Ok(out)
    }

    pub fn block_diag(ring: &RingSpec, parts: &[Matrix]) -> Result<Matrix> {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(ring.clone(), rows, cols);
        let (mut r, mut c) = (0, 0);
        for p in parts {
            ring.ensure_same(&p.ring)?;
            out.set_block(r, c, p);
            r += p.rows;
            c += p.cols;
        }
        Ok(out)
    }

    /// Column-major flattening: the coordinate vector of a morphism in the
    /// internal Hom object, index `(source basis i, target basis j)` with `i`
    /// major.
    pub fn vectorize(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.data[i * self.cols + j].clone());
            }
        }
        Matrix::from_canonical(self.ring.clone(), self.data.len(), 1, data)
    }

    /// Inverse of [`Matrix::vectorize`] for a column vector.
    pub fn unvectorize(&self, rows: usize, cols: usize) -> Result<Matrix> {
        if self.cols != 1 || self.rows != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "unvectorize",
                left: self.shape(),
                right: (rows, cols),
            });
        }
        let mut out = Matrix::zeros(self.ring.clone(), rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                out.data[i * cols + j] = self.data[j * rows + i].clone();
            }
        }
        Ok(out)
    }

    pub fn column_vec(&self, j: usize) -> Matrix {
        self.select_columns(&[j])
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
