use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::Matrix;
use super::ring::{RingSpec, Scalar};
use crate::error::{Error, Result};

/// `a = u · d · v` with `u`, `v` unimodular and `d` diagonal with
/// non-negative entries `d₁ | d₂ | …`. The inverses are carried along since
/// kernels and cokernels are read off them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub u_inv: Matrix,
    pub v_inv: Matrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).numer().clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|v| !v.is_zero()).count()
    }
}

struct Work {
    m: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

fn ident(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(1)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.m.swap(i, j);
        self.u_inv.swap(i, j);
        for row in &mut self.u {
            row.swap(i, j);
        }
    }

    /// row_i += q · row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let src = self.m[j].clone();
        for (a, b) in self.m[i].iter_mut().zip(&src) {
            *a += q * b;
        }
        let src = self.u_inv[j].clone();
        for (a, b) in self.u_inv[i].iter_mut().zip(&src) {
            *a += q * b;
        }
        for row in &mut self.u {
            let t = q * &row[i];
            row[j] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for a in &mut self.m[i] {
            *a = -&*a;
        }
        for a in &mut self.u_inv[i] {
            *a = -&*a;
        }
        for row in &mut self.u {
            row[i] = -&row[i];
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.m {
            row.swap(i, j);
        }
        for row in &mut self.v_inv {
            row.swap(i, j);
        }
        self.v.swap(i, j);
    }

    /// col_i += q · col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for row in &mut self.m {
            let t = q * &row[j];
            row[i] += t;
        }
        for row in &mut self.v_inv {
            let t = q * &row[j];
            row[i] += t;
        }
        let src = self.v[i].clone();
        for (a, b) in self.v[j].iter_mut().zip(&src) {
            *a -= q * b;
        }
    }
}

fn to_matrix(rows: usize, cols: usize, m: Vec<Vec<BigInt>>) -> Matrix {
    let data = m.into_iter().flatten().map(Scalar::from_integer).collect();
    Matrix::from_canonical(RingSpec::Integers, rows, cols, data)
}

/// Smith normal form over the integers by unimodular row and column
/// operations.
pub fn smith_normal_form(a: &Matrix) -> Result<SmithForm> {
    if *a.ring() != RingSpec::Integers {
        return Err(Error::RequiresIntegers {
            op: "smith_normal_form",
            ring: a.ring().clone(),
        });
    }
    let (rows, cols) = a.shape();
    let m = (0..rows)
        .map(|i| (0..cols).map(|j| a.get(i, j).numer().clone()).collect())
        .collect();
    let mut w = Work {
        m,
        u: ident(rows),
        u_inv: ident(rows),
        v: ident(cols),
        v_inv: ident(cols),
    };

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &w.m[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.m[i][t].is_zero() {
                    continue;
                }
                let q = &w.m[i][t] / &w.m[t][t];
                w.add_row(i, t, &-q);
                if !w.m[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.m[t][j].is_zero() {
                    continue;
                }
                let q = &w.m[t][j] / &w.m[t][t];
                w.add_col(j, t, &-q);
                if !w.m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remaining entry of row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !w.m[i][t].is_zero() && w.m[i][t].abs() < w.m[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !w.m[t][j].is_zero() && w.m[t][j].abs() < w.m[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let p = w.m[t][t].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.m[i][j].is_multiple_of(&p)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.m[t][t].is_negative() {
            w.negate_row(t);
        }
    }

    Ok(SmithForm {
        d: to_matrix(rows, cols, w.m),
        u: to_matrix(rows, rows, w.u),
        u_inv: to_matrix(rows, rows, w.u_inv),
        v: to_matrix(cols, cols, w.v),
        v_inv: to_matrix(cols, cols, w.v_inv),
    })
}

impl Matrix {
    pub fn smith_normal_form(&self) -> Result<SmithForm> {
        smith_normal_form(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(RingSpec::Integers, rows)
    }

    fn check(a: &Matrix) -> SmithForm {
        let s = smith_normal_form(a).unwrap();
        let back = s.u.matmul(&s.d).unwrap().matmul(&s.v).unwrap();
        assert_eq!(&back, a);
        let n = a.rows();
        assert_eq!(
            s.u.matmul(&s.u_inv).unwrap(),
            Matrix::identity(RingSpec::Integers, n)
        );
        assert_eq!(
            s.v.matmul(&s.v_inv).unwrap(),
            Matrix::identity(RingSpec::Integers, a.cols())
        );
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&z(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn two_by_two_gcd_and_determinant() {
        let s = check(&z(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn zero_matrix() {
        let s = check(&Matrix::zeros(RingSpec::Integers, 2, 3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn rejects_fields() {
        let q = Matrix::from_rows(RingSpec::Rationals, &[&[1]]);
        assert!(matches!(
            smith_normal_form(&q),
            Err(Error::RequiresIntegers { .. })
        ));
    }

    #[test]
    fn rectangular_and_deterministic() {
        let a = z(&[&[3, 6, 9, 12], &[2, 4, 7, 1], &[0, 5, 5, 10]]);
        let s1 = check(&a);
        let s2 = check(&a);
        assert_eq!(s1, s2);
    }
}
