//! Gauss–Jordan elimination over the two field kinds, and the dispatch of
//! rank/kernel/solve/inverse onto either elimination or Smith normal form.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::Matrix;
use super::ring::{RingSpec, Scalar};
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

trait Field {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E {
        self.sub(&self.zero(), a)
    }
}

struct Fp(u64);

impl Field for Fp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.0 - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a % self.0, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

struct Qf;

impl Field for Qf {
    type E = Scalar;
    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a - b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn inv(&self, a: &Scalar) -> Scalar {
        a.recip()
    }
}

struct Dense<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

/// In-place reduced row echelon form; returns the pivot columns.
fn rref<F: Field>(f: &F, m: &mut Dense<F::E>) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m.data[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(&m.data[r * cols + c]);
        for j in c..cols {
            m.data[r * cols + j] = f.mul(&m.data[r * cols + j], &inv);
        }
        for i in 0..rows {
            if i == r || f.is_zero(&m.data[i * cols + c]) {
                continue;
            }
            let factor = m.data[i * cols + c].clone();
            for j in c..cols {
                let t = f.mul(&factor, &m.data[r * cols + j]);
                m.data[i * cols + j] = f.sub(&m.data[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref<F: Field>(f: &F, m: &Dense<F::E>, pivots: &[usize]) -> Dense<F::E> {
    let cols = m.cols;
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Dense {
        rows: cols,
        cols: free.len(),
        data: vec![f.zero(); cols * free.len()],
    };
    for (k, &fc) in free.iter().enumerate() {
        out.data[fc * free.len() + k] = f.one();
        for (i, &pc) in pivots.iter().enumerate() {
            out.data[pc * free.len() + k] = f.neg(&m.data[i * cols + fc]);
        }
    }
    out
}

fn to_fp(m: &Matrix, p: u64) -> Dense<u64> {
    Dense {
        rows: m.rows(),
        cols: m.cols(),
        data: m
            .entries()
            .iter()
            .map(|v| v.numer().to_u64().expect("canonical F_p entry") % p)
            .collect(),
    }
}

fn to_q(m: &Matrix) -> Dense<Scalar> {
    Dense {
        rows: m.rows(),
        cols: m.cols(),
        data: m.entries().to_vec(),
    }
}

fn from_fp(ring: &RingSpec, d: Dense<u64>) -> Matrix {
    let data = d
        .data
        .into_iter()
        .map(|v| Scalar::from_integer(BigInt::from(v)))
        .collect();
    Matrix::from_canonical(ring.clone(), d.rows, d.cols, data)
}

fn from_q(ring: &RingSpec, d: Dense<Scalar>) -> Matrix {
    Matrix::from_canonical(ring.clone(), d.rows, d.cols, d.data)
}

fn augmented<E: Clone>(a: &Dense<E>, b: &Dense<E>) -> Dense<E> {
    let cols = a.cols + b.cols;
    let mut data = Vec::with_capacity(a.rows * cols);
    for i in 0..a.rows {
        data.extend_from_slice(&a.data[i * a.cols..(i + 1) * a.cols]);
        data.extend_from_slice(&b.data[i * b.cols..(i + 1) * b.cols]);
    }
    Dense {
        rows: a.rows,
        cols,
        data,
    }
}

fn solve_field<F: Field>(f: &F, a: Dense<F::E>, b: Dense<F::E>) -> Option<Dense<F::E>> {
    let (n, k) = (a.cols, b.cols);
    let mut aug = augmented(&a, &b);
    let pivots = rref(f, &mut aug);
    if pivots.iter().any(|&c| c >= n) {
        return None;
    }
    let mut x = Dense {
        rows: n,
        cols: k,
        data: vec![f.zero(); n * k],
    };
    for (i, &pc) in pivots.iter().enumerate() {
        for j in 0..k {
            x.data[pc * k + j] = aug.data[i * aug.cols + n + j].clone();
        }
    }
    Some(x)
}

impl Matrix {
    pub fn rank(&self) -> usize {
        match self.ring() {
            RingSpec::PrimeField(p) => rref(&Fp(*p), &mut to_fp(self, *p)).len(),
            // rank over Z equals rank over Q
            RingSpec::Rationals | RingSpec::Integers => rref(&Qf, &mut to_q(self)).len(),
        }
    }

    /// Columns form a basis of the kernel; over the integers, a basis of the
    /// kernel lattice.
    pub fn kernel_basis(&self) -> Matrix {
        let ring = self.ring().clone();
        match &ring {
            RingSpec::PrimeField(p) => {
                let f = Fp(*p);
                let mut d = to_fp(self, *p);
                let piv = rref(&f, &mut d);
                from_fp(&ring, kernel_from_rref(&f, &d, &piv))
            }
            RingSpec::Rationals => {
                let mut d = to_q(self);
                let piv = rref(&Qf, &mut d);
                from_q(&ring, kernel_from_rref(&Qf, &d, &piv))
            }
            RingSpec::Integers => {
                let snf = smith_normal_form(self).expect("integer ring");
                let r = snf.rank();
                let cols: Vec<usize> = (r..self.cols()).collect();
                snf.v_inv.select_columns(&cols)
            }
        }
    }

    /// One exact solution `X` of `self · X = rhs`.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        self.ring().ensure_same(rhs.ring())?;
        if self.rows() != rhs.rows() {
            return Err(Error::DimensionMismatch {
                op: "solve",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let ring = self.ring().clone();
        match &ring {
            RingSpec::PrimeField(p) => solve_field(&Fp(*p), to_fp(self, *p), to_fp(rhs, *p))
                .map(|d| from_fp(&ring, d))
                .ok_or(Error::NoSolution),
            RingSpec::Rationals => solve_field(&Qf, to_q(self), to_q(rhs))
                .map(|d| from_q(&ring, d))
                .ok_or(Error::NoSolution),
            RingSpec::Integers => solve_integers(self, rhs),
        }
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotInvertible(self.ring().clone()));
        }
        let id = Matrix::identity(self.ring().clone(), self.rows());
        let x = self
            .solve(&id)
            .map_err(|_| Error::NotInvertible(self.ring().clone()))?;
        if self.rank() != self.rows() {
            return Err(Error::NotInvertible(self.ring().clone()));
        }
        Ok(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }
}

fn solve_integers(a: &Matrix, rhs: &Matrix) -> Result<Matrix> {
    // a = U D V, so D (V x) = U^{-1} b.
    let snf = smith_normal_form(a)?;
    let c = snf.u_inv.matmul(rhs)?;
    let r = snf.rank();
    let (n, k) = (a.cols(), rhs.cols());
    let mut y = Matrix::zeros(RingSpec::Integers, n, k);
    for i in 0..c.rows() {
        for j in 0..k {
            let v = c.get(i, j);
            if i < r {
                let d = snf.d.get(i, i);
                let q = v / d;
                if !q.is_integer() {
                    return Err(Error::NoSolution);
                }
                y.set_canonical(i, j, q);
            } else if !v.is_zero() {
                return Err(Error::NoSolution);
            }
        }
    }
    snf.v_inv.matmul(&y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_single_relation() {
        let a = Matrix::from_rows(RingSpec::Rationals, &[&[1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k, Matrix::from_rows(RingSpec::Rationals, &[&[-1], &[1]]));
        assert!(a.matmul(&k).unwrap().is_zero());
    }

    #[test]
    fn invertible_has_trivial_kernel() {
        let a = Matrix::from_rows(RingSpec::Rationals, &[&[1, 2], &[3, 4]]);
        assert_eq!(a.kernel_basis().cols(), 0);
        let z2 = Matrix::from_rows(RingSpec::Integers, &[&[2]]);
        assert_eq!(z2.kernel_basis().cols(), 0);
    }

    #[test]
    fn integer_kernel_is_a_lattice_basis() {
        // kernel of [2 4] over Z is spanned by (-2, 1), not (-4, 2)
        let a = Matrix::from_rows(RingSpec::Integers, &[&[2, 4]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(a.matmul(&k).unwrap().is_zero());
        let g = num_integer::Integer::gcd(k.get(0, 0).numer(), k.get(1, 0).numer());
        assert!(g.is_one());
    }

    #[test]
    fn rank_plus_nullity() {
        let f3 = RingSpec::prime_field(3).unwrap();
        let a = Matrix::from_rows(f3, &[&[1, 2, 0, 1], &[2, 1, 0, 2], &[0, 0, 1, 1]]);
        assert_eq!(a.rank() + a.kernel_basis().cols(), a.cols());
    }

    #[test]
    fn integer_solve_respects_divisibility() {
        let a = Matrix::from_rows(RingSpec::Integers, &[&[2, 0], &[0, 3]]);
        let b = Matrix::from_rows(RingSpec::Integers, &[&[4], &[9]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.matmul(&x).unwrap(), b);
        let bad = Matrix::from_rows(RingSpec::Integers, &[&[1], &[0]]);
        assert_eq!(a.solve(&bad), Err(Error::NoSolution));
    }

    #[test]
    fn inverse_over_each_ring() {
        let z = Matrix::from_rows(RingSpec::Integers, &[&[2, 1], &[1, 1]]);
        let zi = z.inverse().unwrap();
        assert_eq!(
            z.matmul(&zi).unwrap(),
            Matrix::identity(RingSpec::Integers, 2)
        );
        assert!(Matrix::from_rows(RingSpec::Integers, &[&[2]])
            .inverse()
            .is_err());
        assert!(Matrix::from_rows(RingSpec::Rationals, &[&[2]])
            .inverse()
            .is_ok());
    }
}
