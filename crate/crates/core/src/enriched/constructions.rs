use super::category::{check_category_axioms, DgCategory, EnrichedCategory, VCategory};
use super::monoidal::Monoidal;
use crate::base::{tensor_obj, VObject};
use crate::chain::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PresentedModule};

/// `(A ⊗ B) ⊗ (C ⊗ D) → (A ⊗ C) ⊗ (B ⊗ D)`.
pub fn middle_four<M: Monoidal>(a: &M::Obj, b: &M::Obj, c: &M::Obj, d: &M::Obj) -> Result<M::Mor> {
    let cd = M::tensor(c, d)?;
    let bd = M::tensor(b, d)?;
    let steps = [
        M::assoc(a, b, &cd)?,
        M::tensor_mor(&M::identity(a), &M::inverse(&M::assoc(b, c, d)?)?)?,
        M::tensor_mor(
            &M::identity(a),
            &M::tensor_mor(&M::swap(b, c)?, &M::identity(d))?,
        )?,
        M::tensor_mor(&M::identity(a), &M::assoc(c, b, d)?)?,
        M::inverse(&M::assoc(a, c, &bd)?)?,
    ];
    let mut out = steps[0].clone();
    for s in &steps[1..] {
        out = M::compose(s, &out)?;
    }
    Ok(out)
}

/// `C ⊗ D`: pairs of objects, tensored homs, composition through the
/// middle-four interchange.
pub fn monoidal_product_cat<M: Monoidal>(
    c: &EnrichedCategory<M>,
    d: &EnrichedCategory<M>,
) -> Result<EnrichedCategory<M>> {
    c.ring().ensure_same(d.ring())?;
    let m = d.len();
    let split = |i: usize| (i / m, i % m);
    let objects = (0..c.len() * m)
        .map(|i| {
            let (a, x) = split(i);
            format!("({},{})", c.name(a), d.name(x))
        })
        .collect();
    let hom = |i: usize, j: usize| {
        let ((a, x), (b, y)) = (split(i), split(j));
        M::tensor(c.hom(a, b), d.hom(x, y)).expect("same ring")
    };
    let ring = c.ring().clone();
    EnrichedCategory::from_fn(
        ring.clone(),
        objects,
        hom,
        |i, j, k| {
            let ((a, x), (b, y), (e, z)) = (split(i), split(j), split(k));
            let mid = middle_four::<M>(c.hom(a, b), d.hom(x, y), c.hom(b, e), d.hom(y, z))?;
            M::compose(&M::tensor_mor(c.comp(a, b, e), d.comp(x, y, z))?, &mid)
        },
        |i| {
            let (a, x) = split(i);
            let unit = M::unit(&ring);
            let split_unit = M::inverse(&M::left_unit(&unit)?)?;
            M::compose(&M::tensor_mor(c.unit(a), d.unit(x))?, &split_unit)
        },
    )
}

/// Morphisms `e → hom(a, b)`, i.e. `hom(a, b)` itself.
pub fn underlying_hom(c: &VCategory, a: usize, b: usize) -> PresentedModule {
    PresentedModule::free(c.ring().clone(), c.hom(a, b).rank)
}

/// Composite `g ∘ f` of elements `f ∈ hom(a, b)`, `g ∈ hom(b, c)` given as
/// coordinate columns.
pub fn compose_elements(
    cat: &VCategory,
    a: usize,
    b: usize,
    c: usize,
    f: &Matrix,
    g: &Matrix,
) -> Result<Matrix> {
    let (ra, rb) = (cat.hom(a, b).rank, cat.hom(b, c).rank);
    if f.shape() != (ra, 1) || g.shape() != (rb, 1) {
        return Err(Error::shape("element columns have the wrong length"));
    }
    cat.comp(a, b, c).matrix.matmul(&f.kronecker(g)?)
}

/// `C` with each hom concentrated in degree zero.
pub fn trivial_dg_enrichment(c: &VCategory) -> Result<DgCategory> {
    let report = check_category_axioms(c)?;
    if !report.is_ok() {
        return Err(Error::AxiomFailure(format!(
            "{} failing diagrams, first: {}",
            report.failures.len(),
            report.failures[0].diagram
        )));
    }
    let conc = |o: &VObject| ChainComplex::concentrated(o, 0);
    let ring = c.ring().clone();
    EnrichedCategory::from_fn(
        ring.clone(),
        c.objects().to_vec(),
        |a, b| conc(c.hom(a, b)),
        |a, b, x| {
            let src = conc(&tensor_obj(c.hom(a, b), c.hom(b, x))?);
            ChainMap::new(src, conc(c.hom(a, x)), vec![c.comp(a, b, x).matrix.clone()])
        },
        |a| {
            ChainMap::new(
                ChainComplex::unit(ring.clone()),
                conc(c.hom(a, a)),
                vec![c.unit(a).matrix.clone()],
            )
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::catalog::{a2, preorder, unit_category};
    use crate::enriched::functor::{check_functor_axioms, representable};
    use crate::linalg::RingSpec;

    #[test]
    fn product_of_a2_with_itself() {
        let ring = RingSpec::Integers;
        let c = a2(&ring);
        let p = monoidal_product_cat(&c, &c).unwrap();
        assert_eq!(p.len(), 4);
        assert!(check_category_axioms(&p).unwrap().is_ok());
        for i in 0..4 {
            for j in 0..4 {
                let r = c.hom(i / 2, j / 2).rank * c.hom(i % 2, j % 2).rank;
                assert_eq!(p.hom(i, j).rank, r);
            }
        }
    }

    #[test]
    fn product_with_unit_category() {
        let ring = RingSpec::Rationals;
        let c = preorder(&ring, &["x", "y", "z"], &[(0, 1), (2, 1)]).unwrap();
        let p = monoidal_product_cat(&c, &unit_category(&ring)).unwrap();
        assert!(check_category_axioms(&p).unwrap().is_ok());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p.hom(i, j), c.hom(i, j));
                for k in 0..3 {
                    assert_eq!(p.comp(i, j, k).matrix, c.comp(i, j, k).matrix);
                }
            }
        }
    }

    #[test]
    fn underlying_category_of_a2() {
        let ring = RingSpec::prime_field(3).unwrap();
        let c = a2(&ring);
        assert_eq!(underlying_hom(&c, 0, 1).free_rank, 1);
        assert_eq!(underlying_hom(&c, 1, 0).free_rank, 0);
        let one = Matrix::from_rows(ring.clone(), &[&[2]]);
        let g = Matrix::from_rows(ring.clone(), &[&[2]]);
        let h = compose_elements(&c, 0, 0, 1, &one, &g).unwrap();
        assert_eq!(h, Matrix::from_rows(ring, &[&[1]]));
    }

    #[test]
    fn trivial_enrichment_passes_chain_axioms() {
        let ring = RingSpec::Integers;
        for c in [unit_category(&ring), a2(&ring)] {
            let dg = trivial_dg_enrichment(&c).unwrap();
            assert!(check_category_axioms(&dg).unwrap().is_ok());
            for a in 0..c.len() {
                assert!(check_functor_axioms(&representable(&dg, a).unwrap())
                    .unwrap()
                    .is_ok());
            }
        }
    }
}
