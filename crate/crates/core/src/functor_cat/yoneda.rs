use super::limits::pointwise_sum;
use super::{action, hom_end, oslash, pointwise_cokernel};
use crate::base::{adjoint_inv, swap, tensor_obj, VMorphism};
use crate::enriched::{
    check_category_axioms, check_functor_axioms, check_vnat, representable, EnrichedNat, VCategory,
    VFunctor, VNat,
};
use crate::error::{Error, Result};
use crate::linalg::{cokernel_projection, Matrix};

/// Mutually inverse families `forward[i]`, `backward[i]`, verified exactly
/// before being returned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub forward: Vec<VMorphism>,
    pub backward: Vec<VMorphism>,
}

impl IsoWitness {
    fn verify(&self, what: &str) -> Result<()> {
        for (f, g) in self.forward.iter().zip(&self.backward) {
            let gf = g.compose(f)?;
            let fg = f.compose(g)?;
            if gf != VMorphism::identity(&f.source) || fg != VMorphism::identity(&f.target) {
                return Err(Error::AxiomFailure(format!(
                    "{what}: round trip is not the identity"
                )));
            }
        }
        Ok(())
    }
}

fn require_axioms(cat: &VCategory, x: &VFunctor) -> Result<()> {
    let r = check_category_axioms(cat)?;
    if !r.is_ok() {
        return Err(Error::AxiomFailure(format!(
            "category: {}",
            r.failures[0].diagram
        )));
    }
    let r = check_functor_axioms(x)?;
    if !r.is_ok() {
        return Err(Error::AxiomFailure(format!(
            "functor: {}",
            r.failures[0].diagram
        )));
    }
    Ok(())
}

/// `X(c) ≅ Hom(C(c, -), X)`: `x ↦ (f ↦ X(f)(x))` and `α ↦ α_c(1_c)`.
pub fn yoneda_check(cat: &VCategory, c: usize, x: &VFunctor) -> Result<IsoWitness> {
    if c >= cat.len() {
        return Err(Error::UnknownObject(format!("#{c}")));
    }
    if x.source() != cat {
        return Err(Error::shape("functor on a different category"));
    }
    require_axioms(cat, x)?;
    let r = representable(cat, c)?;
    let end = hom_end(&r, x)?;
    let ring = cat.ring().clone();
    let xc = x.value(c).clone();

    let mut family = Matrix::zeros(ring.clone(), end.ambient, xc.rank);
    for s in 0..xc.rank {
        for b in 0..cat.len() {
            let h = cat.hom(c, b).rank;
            let rb = x.value(b).rank;
            let mut comp = Matrix::zeros(ring.clone(), rb, h);
            for k in 0..h {
                comp.set_block(0, k, &action(x, c, b, k).column_vec(s));
            }
            family.set_block(end.offsets[b], s, &comp.vectorize());
        }
    }
    let forward = VMorphism::new(xc.clone(), end.object.clone(), end.basis.solve(&family)?)?;

    let hcc = cat.hom(c, c).rank;
    let mut back = Matrix::zeros(ring.clone(), xc.rank, end.rank());
    for j in 0..end.rank() {
        let comp = end
            .basis
            .block(end.offsets[c], hcc * xc.rank, j, 1)
            .unvectorize(xc.rank, hcc)?;
        back.set_block(0, j, &comp.matmul(&cat.unit(c).matrix)?);
    }
    let backward = VMorphism::new(end.object.clone(), xc, back)?;
    let w = IsoWitness {
        forward: vec![forward],
        backward: vec![backward],
    };
    w.verify("Yoneda")?;
    Ok(w)
}

/// The coend `∫^c C(c, -) ⊘ X(c)` presented as a pointwise cokernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coend {
    pub functor: VFunctor,
    /// `⊕_c C(c, -) ⊘ X(c)`.
    pub generators: VFunctor,
    /// Difference of the two actions, from `⊕_{a,b} C(b, -) ⊘ (hom(a, b) ⊗ X(a))`.
    pub relations: VNat,
    pub projection: VNat,
}

pub fn coend_functor(cat: &VCategory, x: &VFunctor) -> Result<Coend> {
    let n = cat.len();
    let reps = (0..n)
        .map(|c| representable(cat, c))
        .collect::<Result<Vec<_>>>()?;
    let s_parts = (0..n)
        .map(|c| oslash(&reps[c], x.value(c)))
        .collect::<Result<Vec<_>>>()?;
    let mut t_parts = Vec::with_capacity(n * n);
    for a in 0..n {
        for (b, rep) in reps.iter().enumerate() {
            t_parts.push(oslash(rep, &tensor_obj(cat.hom(a, b), x.value(a))?)?);
        }
    }
    let s = pointwise_sum(cat, &s_parts)?;
    let t = pointwise_sum(cat, &t_parts)?;
    let ring = cat.ring().clone();
    let mut comps = Vec::with_capacity(n);
    for d in 0..n {
        let mut m = Matrix::zeros(ring.clone(), s.sum.value(d).rank, t.sum.value(d).rank);
        for a in 0..n {
            for b in 0..n {
                let pr = &t.projections[a * n + b].component(d).matrix;
                let xa = x.value(a);
                // g ⊗ f ↦ g ∘ f, lands in the summand at a
                let compose = cat
                    .comp(a, b, d)
                    .compose(&swap(cat.hom(b, d), cat.hom(a, b))?)?;
                let mu1 = compose.matrix.kronecker(&VMorphism::identity(xa).matrix)?;
                // f ⊗ x ↦ X(f)(x), lands in the summand at b
                let act = adjoint_inv(x.map(a, b), xa, x.value(b))?;
                let mu2 = VMorphism::identity(cat.hom(b, d))
                    .matrix
                    .kronecker(&act.matrix)?;
                let into_a = &s.injections[a].component(d).matrix;
                let into_b = &s.injections[b].component(d).matrix;
                m = m.add(&into_a.matmul(&mu1)?.matmul(pr)?)?;
                m = m.sub(&into_b.matmul(&mu2)?.matmul(pr)?)?;
            }
        }
        comps.push(VMorphism::new(
            t.sum.value(d).clone(),
            s.sum.value(d).clone(),
            m,
        )?);
    }
    let relations = EnrichedNat::new(t.sum, s.sum.clone(), comps)?;
    let (functor, projection) = pointwise_cokernel(&relations)?;
    Ok(Coend {
        functor,
        generators: s.sum,
        relations,
        projection,
    })
}

/// The coend decomposition `∫^c C(c, -) ⊘ X(c) ≅ X`, with forward maps
/// `[f ⊗ x] ↦ X(f)(x)` and backward maps `x ↦ [1 ⊗ x]`.
pub fn coend_check(cat: &VCategory, x: &VFunctor) -> Result<IsoWitness> {
    if x.source() != cat {
        return Err(Error::shape("functor on a different category"));
    }
    require_axioms(cat, x)?;
    let n = cat.len();
    let co = coend_functor(cat, x)?;
    let (l, s) = (&co.functor, &co.generators);
    let ring = cat.ring().clone();
    let mut forward = Vec::with_capacity(n);
    let mut backward = Vec::with_capacity(n);
    for d in 0..n {
        let mut eps = Matrix::zeros(ring.clone(), x.value(d).rank, s.value(d).rank);
        let mut off = 0;
        let mut start = 0;
        for c in 0..n {
            let part = adjoint_inv(x.map(c, d), x.value(c), x.value(d))?;
            eps.set_block(0, off, &part.matrix);
            if c == d {
                start = off;
            }
            off += cat.hom(c, d).rank * x.value(c).rank;
        }
        let rel = &co.relations.component(d).matrix;
        if !eps.matmul(rel)?.is_zero() {
            return Err(Error::AxiomFailure(
                "coend: evaluation does not kill the relations".into(),
            ));
        }
        let (_, sec) = cokernel_projection(rel)?;
        forward.push(VMorphism::new(
            l.value(d).clone(),
            x.value(d).clone(),
            eps.matmul(&sec)?,
        )?);

        let unit_tensor = cat
            .unit(d)
            .matrix
            .kronecker(&Matrix::identity(ring.clone(), x.value(d).rank))?;
        let mut into = Matrix::zeros(ring.clone(), s.value(d).rank, x.value(d).rank);
        into.set_block(start, 0, &unit_tensor);
        backward.push(VMorphism::new(
            x.value(d).clone(),
            l.value(d).clone(),
            co.projection.component(d).matrix.matmul(&into)?,
        )?);
    }
    let w = IsoWitness { forward, backward };
    w.verify("coend")?;
    let nat = EnrichedNat::new(l.clone(), x.clone(), w.forward.clone())?;
    if !check_vnat(&nat)?.is_ok() {
        return Err(Error::AxiomFailure(
            "coend: comparison map is not natural".into(),
        ));
    }
    Ok(w)
}
