//! Exact linear algebra over ℚ, 𝔽_p and ℤ.

mod matrix;
mod module;
mod reduce;
mod ring;
mod snf;

pub use matrix::Matrix;
pub use module::{homology_at, PresentedModule};
pub use ring::{RingSpec, Scalar};
pub use snf::{smith_normal_form, SmithForm};

use crate::error::{Error, Result};

/// A surjection `p: M → M / im(a)` onto a free quotient, with a section `s`
/// (`p · s = 1`). Fails over the integers when the quotient has torsion.
pub fn cokernel_projection(a: &Matrix) -> Result<(Matrix, Matrix)> {
    let ring = a.ring().clone();
    if ring.is_field() {
        let p = a.transpose().kernel_basis().transpose();
        let q = p.rows();
        let s = p.solve(&Matrix::identity(ring, q))?;
        return Ok((p, s));
    }
    let snf = smith_normal_form(a)?;
    let diag = snf.diagonal();
    let r = snf.rank();
    if diag[..r].iter().any(|d| !num_traits::One::is_one(d)) {
        return Err(Error::TorsionCokernel);
    }
    let keep: Vec<usize> = (r..a.rows()).collect();
    Ok((snf.u_inv.select_rows(&keep), snf.u.select_columns(&keep)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_projection_kills_the_image() {
        for ring in [
            RingSpec::Rationals,
            RingSpec::Integers,
            RingSpec::PrimeField(3),
        ] {
            let a = Matrix::from_rows(ring.clone(), &[&[1, 0], &[1, 1], &[0, 1]]);
            let (p, s) = cokernel_projection(&a).unwrap();
            assert_eq!(p.rows(), 1);
            assert!(p.matmul(&a).unwrap().is_zero());
            assert_eq!(p.matmul(&s).unwrap(), Matrix::identity(ring, 1));
        }
    }

    #[test]
    fn torsion_cokernel_is_rejected() {
        let a = Matrix::from_rows(RingSpec::Integers, &[&[2]]);
        assert_eq!(cokernel_projection(&a), Err(Error::TorsionCokernel));
    }
}
