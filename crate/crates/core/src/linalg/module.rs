use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::ring::{RingSpec, Scalar};
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// A finitely generated module in invariant-factor form: `R^free_rank ⊕
/// R/d₁ ⊕ … ⊕ R/d_k` with `d₁ | … | d_k`, each `d_i` a non-unit. Over a
/// field the factor list is always empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentedModule {
    pub ring: RingSpec,
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl PresentedModule {
    pub fn zero(ring: RingSpec) -> Self {
        PresentedModule {
            ring,
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn free(ring: RingSpec, rank: usize) -> Self {
        PresentedModule {
            ring,
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// Cokernel of `relations: R^m → R^n`.
    pub fn cokernel_of(relations: &Matrix) -> Result<Self> {
        let ring = relations.ring().clone();
        let n = relations.rows();
        if ring.is_field() {
            return Ok(PresentedModule::free(ring, n - relations.rank()));
        }
        let s = smith_normal_form(relations)?;
        let diag = s.diagonal();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        let invariant_factors = diag
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect();
        Ok(PresentedModule {
            ring,
            free_rank: n - rank,
            invariant_factors,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Direct sum, re-normalized to invariant-factor form.
    pub fn direct_sum(&self, other: &PresentedModule) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        let factors: Vec<&BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .collect();
        let free_rank = self.free_rank + other.free_rank;
        if factors.is_empty() {
            return Ok(PresentedModule::free(self.ring.clone(), free_rank));
        }
        let n = factors.len();
        let mut rel = Matrix::zeros(self.ring.clone(), n, n);
        for (i, d) in factors.iter().enumerate() {
            rel.set_canonical(i, i, Scalar::from_integer((*d).clone()));
        }
        let torsion = PresentedModule::cokernel_of(&rel)?;
        Ok(PresentedModule {
            ring: self.ring.clone(),
            free_rank,
            invariant_factors: torsion.invariant_factors,
        })
    }

    pub fn sum_all<'a>(
        ring: &RingSpec,
        parts: impl IntoIterator<Item = &'a PresentedModule>,
    ) -> Result<Self> {
        parts
            .into_iter()
            .try_fold(PresentedModule::zero(ring.clone()), |acc, m| {
                acc.direct_sum(m)
            })
    }

    /// Number of elements, when finite and representable.
    pub fn order_hint(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return match self.ring {
                RingSpec::PrimeField(p) => Some(BigInt::from(p).pow(self.free_rank as u32)),
                _ => None,
            };
        }
        Some(self.invariant_factors.iter().map(|d| d.abs()).product())
    }
}

impl fmt::Display for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(self.ring.to_string()),
            r => parts.push(format!("{}^{}", self.ring, r)),
        }
        for d in &self.invariant_factors {
            parts.push(format!("{}/{}", self.ring, d));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Homology `ker(d_out) / im(d_in)` at the middle object of
/// `· --d_in--> M --d_out--> ·`.
pub fn homology_at(d_in: &Matrix, d_out: &Matrix) -> Result<PresentedModule> {
    d_in.ring().ensure_same(d_out.ring())?;
    if d_out.cols() != d_in.rows() {
        return Err(Error::DimensionMismatch {
            op: "homology_at",
            left: d_out.shape(),
            right: d_in.shape(),
        });
    }
    if !d_out.matmul(d_in)?.is_zero() {
        return Err(Error::NotAComplex { degree: 0 });
    }
    let ring = d_in.ring().clone();
    if ring.is_field() {
        let nullity = d_out.cols() - d_out.rank();
        return Ok(PresentedModule::free(ring, nullity - d_in.rank()));
    }
    let cycles = d_out.kernel_basis();
    // boundaries expressed in cycle coordinates
    let rel = cycles.solve(d_in)?;
    PresentedModule::cokernel_of(&rel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_of_order_three() {
        let d_in = Matrix::from_rows(RingSpec::Integers, &[&[3]]);
        let d_out = Matrix::zeros(RingSpec::Integers, 0, 1);
        let h = homology_at(&d_in, &d_out).unwrap();
        assert_eq!(h.free_rank, 0);
        assert_eq!(h.invariant_factors, vec![BigInt::from(3)]);
        assert_eq!(h.to_string(), "Z/3");
    }

    #[test]
    fn no_differentials() {
        let d_in = Matrix::zeros(RingSpec::Integers, 1, 0);
        let d_out = Matrix::zeros(RingSpec::Integers, 0, 1);
        assert_eq!(
            homology_at(&d_in, &d_out).unwrap(),
            PresentedModule::free(RingSpec::Integers, 1)
        );
    }

    #[test]
    fn rank_one_boundary_over_f2() {
        let f2 = RingSpec::prime_field(2).unwrap();
        let d_in = Matrix::from_rows(f2.clone(), &[&[1, 1], &[1, 1]]);
        let d_out = Matrix::zeros(f2.clone(), 0, 2);
        assert_eq!(
            homology_at(&d_in, &d_out).unwrap(),
            PresentedModule::free(f2, 1)
        );
    }

    #[test]
    fn rejects_nonzero_square() {
        let a = Matrix::from_rows(RingSpec::Integers, &[&[1]]);
        assert_eq!(homology_at(&a, &a), Err(Error::NotAComplex { degree: 0 }));
    }

    #[test]
    fn rejects_noncomposable() {
        let a = Matrix::zeros(RingSpec::Integers, 2, 1);
        let b = Matrix::zeros(RingSpec::Integers, 1, 3);
        assert!(matches!(
            homology_at(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn direct_sum_renormalizes() {
        let z = RingSpec::Integers;
        let a = PresentedModule {
            ring: z.clone(),
            free_rank: 1,
            invariant_factors: vec![BigInt::from(2)],
        };
        let b = PresentedModule {
            ring: z.clone(),
            free_rank: 0,
            invariant_factors: vec![BigInt::from(3)],
        };
        // Z/2 ⊕ Z/3 ≅ Z/6
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.free_rank, 1);
        assert_eq!(s.invariant_factors, vec![BigInt::from(6)]);
    }

    #[test]
    fn torsion_in_a_larger_complex() {
        // Z --(2,2)^T--> Z^2 --(1,-1)--> Z : H = Z/2 in the middle
        let d_in = Matrix::from_rows(RingSpec::Integers, &[&[2], &[2]]);
        let d_out = Matrix::from_rows(RingSpec::Integers, &[&[1, -1]]);
        let h = homology_at(&d_in, &d_out).unwrap();
        assert_eq!(h.free_rank, 0);
        assert_eq!(h.invariant_factors, vec![BigInt::from(2)]);
    }
}
