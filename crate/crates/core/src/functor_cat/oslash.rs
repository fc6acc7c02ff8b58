use super::{action, functor_from_actions, hom_end};
use crate::base::{self, tensor_obj, VMorphism, VObject};
use crate::enriched::{EnrichedNat, VFunctor, VNat};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// `(X ⊘ A)(c) = X(c) ⊗ A`, acting by `X_ab(f) ⊗ 1_A`.
pub fn oslash(x: &VFunctor, a: &VObject) -> Result<VFunctor> {
    let cat = x.source();
    cat.ring().ensure_same(&a.ring)?;
    let values = x
        .values()
        .iter()
        .map(|v| tensor_obj(v, a))
        .collect::<Result<_>>()?;
    let eye = Matrix::identity(a.ring.clone(), a.rank);
    functor_from_actions(cat, values, |p, q, k| action(x, p, q, k).kronecker(&eye))
}

/// `α ⊘ f: X ⊘ A → Y ⊘ B`.
pub fn oslash_mor(alpha: &VNat, f: &VMorphism) -> Result<VNat> {
    let src = oslash(alpha.source(), &f.source)?;
    let tgt = oslash(alpha.target(), &f.target)?;
    let comps = alpha
        .components()
        .iter()
        .map(|c| base::tensor_mor(c, f))
        .collect::<Result<_>>()?;
    EnrichedNat::new(src, tgt, comps)
}

/// `(X ⊘ A) ⊘ B → X ⊘ (A ⊗ B)`, componentwise the base associator.
pub fn oslash_assoc(x: &VFunctor, a: &VObject, b: &VObject) -> Result<VNat> {
    let src = oslash(&oslash(x, a)?, b)?;
    let tgt = oslash(x, &tensor_obj(a, b)?)?;
    let comps = x
        .values()
        .iter()
        .map(|v| base::assoc(v, a, b))
        .collect::<Result<_>>()?;
    EnrichedNat::new(src, tgt, comps)
}

/// Transpose of `β: X ⊘ A → Y` to `A → Hom(X, Y)`.
pub fn oslash_transpose(beta: &VNat, x: &VFunctor, a: &VObject) -> Result<VMorphism> {
    let y = beta.target();
    if *beta.source() != oslash(x, a)? {
        return Err(Error::shape("transpose: source is not X ⊘ A"));
    }
    let end = hom_end(x, y)?;
    let ring = a.ring.clone();
    let mut family = Matrix::zeros(ring.clone(), end.ambient, a.rank);
    for s in 0..a.rank {
        let mut es = Matrix::zeros(ring.clone(), a.rank, 1);
        es.set_canonical(s, 0, ring.one());
        for c in 0..x.source().len() {
            let inc = Matrix::identity(ring.clone(), x.value(c).rank).kronecker(&es)?;
            let comp = beta.component(c).matrix.matmul(&inc)?;
            family.set_block(end.offsets[c], s, &comp.vectorize());
        }
    }
    VMorphism::new(a.clone(), end.object.clone(), end.basis.solve(&family)?)
}

/// Inverse of [`oslash_transpose`].
pub fn oslash_transpose_inv(g: &VMorphism, x: &VFunctor, y: &VFunctor) -> Result<VNat> {
    let end = hom_end(x, y)?;
    if g.target != end.object {
        return Err(Error::shape("transpose: target is not Hom(X, Y)"));
    }
    let a = &g.source;
    let family = end.basis.matmul(&g.matrix)?;
    let ring = a.ring.clone();
    let mut comps = Vec::with_capacity(x.source().len());
    for c in 0..x.source().len() {
        let (rx, ry) = (x.value(c).rank, y.value(c).rank);
        let mut m = Matrix::zeros(ring.clone(), ry, rx * a.rank);
        for s in 0..a.rank {
            let part = family
                .block(end.offsets[c], rx * ry, s, 1)
                .unvectorize(ry, rx)?;
            for i in 0..rx {
                for j in 0..ry {
                    m.set_canonical(j, i * a.rank + s, part.get(j, i).clone());
                }
            }
        }
        comps.push(VMorphism::new(
            tensor_obj(x.value(c), a)?,
            y.value(c).clone(),
            m,
        )?);
    }
    EnrichedNat::new(oslash(x, a)?, y.clone(), comps)
}
