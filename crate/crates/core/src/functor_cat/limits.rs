use super::{action, functor_from_actions};
use crate::base::{VMorphism, VObject};
use crate::enriched::{EnrichedNat, VCategory, VFunctor, VNat};
use crate::error::{Error, Result};
use crate::linalg::{cokernel_projection, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointwiseSum {
    pub sum: VFunctor,
    pub injections: Vec<VNat>,
    pub projections: Vec<VNat>,
}

/// Finite direct sum, with its injections and projections.
pub fn pointwise_sum(cat: &VCategory, parts: &[VFunctor]) -> Result<PointwiseSum> {
    for p in parts {
        if p.source() != cat {
            return Err(Error::shape("summand on a different category"));
        }
    }
    let ring = cat.ring().clone();
    let n = cat.len();
    let ranks = |c: usize| parts.iter().map(|p| p.value(c).rank).collect::<Vec<_>>();
    let values = (0..n)
        .map(|c| VObject::new(ring.clone(), ranks(c).iter().sum()))
        .collect();
    let sum = functor_from_actions(cat, values, |a, b, k| {
        let blocks: Vec<Matrix> = parts.iter().map(|p| action(p, a, b, k)).collect();
        Matrix::block_diag(&ring, &blocks)
    })?;
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut offsets = vec![0usize; n];
    for p in parts {
        let mut inj = Vec::with_capacity(n);
        let mut proj = Vec::with_capacity(n);
        for (c, off) in offsets.iter_mut().enumerate() {
            let (r, total) = (p.value(c).rank, sum.value(c).rank);
            let mut m = Matrix::zeros(ring.clone(), total, r);
            m.set_block(*off, 0, &Matrix::identity(ring.clone(), r));
            inj.push(VMorphism::new(
                p.value(c).clone(),
                sum.value(c).clone(),
                m.clone(),
            )?);
            proj.push(VMorphism::new(
                sum.value(c).clone(),
                p.value(c).clone(),
                m.transpose(),
            )?);
            *off += r;
        }
        injections.push(EnrichedNat::new(p.clone(), sum.clone(), inj)?);
        projections.push(EnrichedNat::new(sum.clone(), p.clone(), proj)?);
    }
    Ok(PointwiseSum {
        sum,
        injections,
        projections,
    })
}

/// `⊕ α_i: ⊕ X_i → ⊕ Y_i`.
pub fn nat_sum(cat: &VCategory, alphas: &[VNat]) -> Result<VNat> {
    let src: Vec<VFunctor> = alphas.iter().map(|a| a.source().clone()).collect();
    let tgt: Vec<VFunctor> = alphas.iter().map(|a| a.target().clone()).collect();
    let s = pointwise_sum(cat, &src)?.sum;
    let t = pointwise_sum(cat, &tgt)?.sum;
    let ring = cat.ring().clone();
    let comps = (0..cat.len())
        .map(|c| {
            let blocks: Vec<Matrix> = alphas
                .iter()
                .map(|a| a.component(c).matrix.clone())
                .collect();
            VMorphism::new(
                s.value(c).clone(),
                t.value(c).clone(),
                Matrix::block_diag(&ring, &blocks)?,
            )
        })
        .collect::<Result<_>>()?;
    EnrichedNat::new(s, t, comps)
}

/// Pointwise kernel `K ↪ X` of `α: X → Y`.
pub fn pointwise_kernel(alpha: &VNat) -> Result<(VFunctor, VNat)> {
    let x = alpha.source();
    let cat = x.source();
    let ring = cat.ring().clone();
    let bases: Vec<Matrix> = alpha
        .components()
        .iter()
        .map(|c| c.matrix.kernel_basis())
        .collect();
    let values = bases
        .iter()
        .map(|k| VObject::new(ring.clone(), k.cols()))
        .collect();
    let k = functor_from_actions(cat, values, |a, b, i| {
        bases[b].solve(&action(x, a, b, i).matmul(&bases[a])?)
    })?;
    let comps = bases
        .iter()
        .enumerate()
        .map(|(c, m)| VMorphism::new(k.value(c).clone(), x.value(c).clone(), m.clone()))
        .collect::<Result<_>>()?;
    let inc = EnrichedNat::new(k.clone(), x.clone(), comps)?;
    Ok((k, inc))
}

/// Pointwise cokernel `Y ↠ Q` of `α: X → Y`. Over the integers the
/// cokernel must be free at every object.
pub fn pointwise_cokernel(alpha: &VNat) -> Result<(VFunctor, VNat)> {
    let y = alpha.target();
    let cat = y.source();
    let ring = cat.ring().clone();
    let parts: Vec<(Matrix, Matrix)> = alpha
        .components()
        .iter()
        .map(|c| cokernel_projection(&c.matrix))
        .collect::<Result<_>>()?;
    let values = parts
        .iter()
        .map(|(p, _)| VObject::new(ring.clone(), p.rows()))
        .collect();
    let q = functor_from_actions(cat, values, |a, b, i| {
        parts[b].0.matmul(&action(y, a, b, i))?.matmul(&parts[a].1)
    })?;
    let comps = parts
        .iter()
        .enumerate()
        .map(|(c, (p, _))| VMorphism::new(y.value(c).clone(), q.value(c).clone(), p.clone()))
        .collect::<Result<_>>()?;
    let proj = EnrichedNat::new(y.clone(), q.clone(), comps)?;
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::catalog::a2;
    use crate::enriched::{check_functor_axioms, check_vnat, representable};
    use crate::functor_cat::hom_end;
    use crate::linalg::RingSpec;

    #[test]
    fn sum_with_zero_is_identity() {
        let ring = RingSpec::Integers;
        let c = a2(&ring);
        let r = representable(&c, 0).unwrap();
        let s = pointwise_sum(&c, &[r.clone(), VFunctor::zero(&c)]).unwrap();
        assert_eq!(s.sum, r);
        for i in &s.injections {
            assert!(check_vnat(i).unwrap().is_ok());
        }
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let ring = RingSpec::Rationals;
        let c = a2(&ring);
        let r = representable(&c, 0).unwrap();
        let (k, inc) = pointwise_kernel(&EnrichedNat::identity(&r)).unwrap();
        assert!(k.is_zero());
        assert!(check_vnat(&inc).unwrap().is_ok());
    }

    #[test]
    fn cokernel_of_representable_inclusion_is_simple() {
        let ring = RingSpec::Integers;
        let c = a2(&ring);
        let (ra, rb) = (representable(&c, 0).unwrap(), representable(&c, 1).unwrap());
        // precomposition with the arrow a → b
        let end = hom_end(&rb, &ra).unwrap();
        assert_eq!(end.rank(), 1);
        let inc = end
            .to_nat(&rb, &ra, &Matrix::from_rows(ring.clone(), &[&[1]]))
            .unwrap();
        assert!(check_vnat(&inc).unwrap().is_ok());
        let (q, proj) = pointwise_cokernel(&inc).unwrap();
        assert_eq!(
            q.values().iter().map(|v| v.rank).collect::<Vec<_>>(),
            vec![1, 0]
        );
        assert!(check_functor_axioms(&q).unwrap().is_ok());
        assert!(check_vnat(&proj).unwrap().is_ok());
        assert!(proj
            .compose(&inc)
            .unwrap()
            .components()
            .iter()
            .all(|m| m.is_zero()));
    }
}
