use super::complex::{FunctorComplex, FunctorComplexMap};
use crate::base::{hom_mor, VMorphism, VObject};
use crate::chain::{hom_blocks, hom_complex, ChainComplex, ChainMap};
use crate::enriched::{
    check_functor_axioms, check_vnat, trivial_dg_enrichment, ChFunctor, DgCategory,
    EnrichedCategory, EnrichedFunctor, EnrichedNat, VCategory, VFunctor, VNat,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;

/// A `Ch(V)`-functor out of `C` with its homs in degree zero, stored by its
/// degree-zero structure maps. Every value is padded to the common window
/// `[lo, hi]`; `structure[a·n + b][p - lo]` is `(F_ab)_p: hom(a, b) → [F(a)_p, F(b)_p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgFunctor {
    category: VCategory,
    objects: Vec<ChainComplex>,
    structure: Vec<Vec<VMorphism>>,
}

fn union_window(objects: &[ChainComplex]) -> Option<(i64, i64)> {
    let live: Vec<&ChainComplex> = objects.iter().filter(|o| !o.is_empty()).collect();
    if live.is_empty() {
        return None;
    }
    Some((
        live.iter().map(|o| o.lo()).min().unwrap(),
        live.iter().map(|o| o.hi()).max().unwrap(),
    ))
}

fn pad_all(ring: &crate::linalg::RingSpec, objects: &[ChainComplex]) -> Vec<ChainComplex> {
    match union_window(objects) {
        Some((lo, hi)) => objects.iter().map(|o| o.pad_to(lo, hi)).collect(),
        None => objects
            .iter()
            .map(|_| ChainComplex::zero(ring.clone()))
            .collect(),
    }
}

impl DgFunctor {
    /// `structure[a·n + b]` lists `(F_ab)_p` over the union window of the
    /// values. Shapes are checked; the structure condition is not.
    pub fn new(
        category: VCategory,
        objects: Vec<ChainComplex>,
        structure: Vec<Vec<VMorphism>>,
    ) -> Result<Self> {
        let n = category.len();
        if objects.len() != n || structure.len() != n * n {
            return Err(Error::shape("dg functor tables have the wrong size"));
        }
        for o in &objects {
            category.ring().ensure_same(o.ring())?;
        }
        let objects = pad_all(category.ring(), &objects);
        let f = DgFunctor {
            category,
            objects,
            structure,
        };
        let len = f.objects.first().map_or(0, ChainComplex::len);
        for a in 0..n {
            for b in 0..n {
                let row = &f.structure[a * n + b];
                if row.len() != len {
                    return Err(Error::shape(format!(
                        "structure map at ({}, {}) has {} degrees, expected {len}",
                        f.category.name(a),
                        f.category.name(b),
                        row.len()
                    )));
                }
                for (p, m) in f.degrees().zip(row) {
                    let tgt = VObject::new(
                        f.category.ring().clone(),
                        f.objects[a].rank(p) * f.objects[b].rank(p),
                    );
                    if m.source != *f.category.hom(a, b) || m.target != tgt {
                        return Err(Error::shape(format!(
                            "structure map at ({}, {}) in degree {p} has the wrong shape",
                            f.category.name(a),
                            f.category.name(b)
                        )));
                    }
                }
            }
        }
        Ok(f)
    }

    pub fn category(&self) -> &VCategory {
        &self.category
    }

    pub fn window(&self) -> (i64, i64) {
        self.objects
            .first()
            .filter(|o| !o.is_empty())
            .map_or((0, -1), ChainComplex::window)
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        let (lo, hi) = self.window();
        lo..=hi
    }

    pub fn value(&self, a: usize) -> &ChainComplex {
        &self.objects[a]
    }

    pub fn values(&self) -> &[ChainComplex] {
        &self.objects
    }

    /// `(F_ab)_p`, zero outside the window.
    pub fn structure(&self, a: usize, b: usize, p: i64) -> VMorphism {
        let (lo, hi) = self.window();
        if p >= lo && p <= hi {
            self.structure[a * self.category.len() + b][(p - lo) as usize].clone()
        } else {
            let ring = self.category.ring().clone();
            VMorphism::zero(self.category.hom(a, b), &VObject::zero(ring))
        }
    }

    pub fn set_structure(&mut self, a: usize, b: usize, p: i64, m: VMorphism) -> Result<()> {
        let old = self.structure(a, b, p);
        if old.source != m.source || old.target != m.target {
            return Err(Error::shape(
                "replacement structure map has the wrong shape",
            ));
        }
        let lo = self.window().0;
        let n = self.category.len();
        self.structure[a * n + b][(p - lo) as usize] = m;
        Ok(())
    }

    /// As an honest `Ch(V)`-functor out of the trivial enrichment of `C`.
    pub fn to_enriched(&self) -> Result<ChFunctor> {
        let dg = trivial_dg_enrichment(&self.category)?;
        let ring = self.category.ring().clone();
        EnrichedFunctor::from_fn(dg.clone(), self.objects.clone(), |a, b| {
            let (fa, fb) = (&self.objects[a], &self.objects[b]);
            let tgt = hom_complex(fa, fb)?;
            let blocks = hom_blocks(fa, fb, 0);
            let h = self.category.hom(a, b).rank;
            let mut m = Matrix::zeros(ring.clone(), tgt.rank(0), h);
            for blk in &blocks {
                m.set_block(blk.offset, 0, &self.structure(a, b, blk.p).matrix);
            }
            let comps = if dg.hom(a, b).is_empty() {
                Vec::new()
            } else {
                vec![m]
            };
            ChainMap::new(dg.hom(a, b).clone(), tgt, comps)
        })
    }

    /// Reads a `Ch(V)`-functor whose source has every hom in degree zero.
    pub fn from_enriched(f: &ChFunctor) -> Result<DgFunctor> {
        let category = underlying_category(f.source())?;
        let n = category.len();
        let raw = f.values().to_vec();
        let objects = pad_all(category.ring(), &raw);
        let degrees: Vec<i64> = objects
            .first()
            .filter(|o| !o.is_empty())
            .map_or(Vec::new(), |o| o.degrees().collect());
        let mut structure = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let comp = f.map(a, b).component(0);
                let blocks = hom_blocks(&raw[a], &raw[b], 0);
                let h = category.hom(a, b).clone();
                let row = degrees
                    .iter()
                    .map(|&p| {
                        let tgt = VObject::new(
                            category.ring().clone(),
                            objects[a].rank(p) * objects[b].rank(p),
                        );
                        let m = match blocks.iter().find(|blk| blk.p == p) {
                            Some(blk) => comp.block(blk.offset, blk.size, 0, h.rank),
                            None => Matrix::zeros(category.ring().clone(), tgt.rank, h.rank),
                        };
                        VMorphism::new(h.clone(), tgt, m)
                    })
                    .collect::<Result<Vec<_>>>()?;
                structure.push(row);
            }
        }
        DgFunctor::new(category, objects, structure)
    }
}

/// The `V`-category behind a `Ch(V)`-category whose homs sit in degree zero.
pub fn underlying_category(dg: &DgCategory) -> Result<VCategory> {
    let n = dg.len();
    for a in 0..n {
        for b in 0..n {
            let h = dg.hom(a, b);
            if h.degrees().any(|p| p != 0 && h.rank(p) != 0) {
                return Err(Error::shape(format!(
                    "hom({}, {}) is not concentrated in degree 0",
                    dg.name(a),
                    dg.name(b)
                )));
            }
        }
    }
    let ring = dg.ring().clone();
    EnrichedCategory::from_fn(
        ring.clone(),
        dg.objects().to_vec(),
        |a, b| dg.hom(a, b).entry(0),
        |a, b, c| {
            let src = crate::base::tensor_obj(&dg.hom(a, b).entry(0), &dg.hom(b, c).entry(0))?;
            VMorphism::new(src, dg.hom(a, c).entry(0), dg.comp(a, b, c).component(0))
        },
        |a| {
            VMorphism::new(
                VObject::unit(ring.clone()),
                dg.hom(a, a).entry(0),
                dg.unit(a).component(0),
            )
        },
    )
}

/// `[1, d^{F(b)}_p] ∘ (F_ab)_p - [d^{F(a)}_p, 1] ∘ (F_ab)_{p-1} = 0` for every
/// `(a, b, p)`.
pub fn check_structure_condition(f: &DgFunctor) -> Result<Report> {
    let mut report = Report::new("dg structure condition");
    let cat = &f.category;
    let n = cat.len();
    let (lo, hi) = f.window();
    for a in 0..n {
        for b in 0..n {
            for p in lo + 1..=hi {
                let (fa, fb) = (&f.objects[a], &f.objects[b]);
                let ida = VMorphism::identity(&fa.entry(p));
                let idb = VMorphism::identity(&fb.entry(p - 1));
                let dfa = VMorphism::new(fa.entry(p), fa.entry(p - 1), fa.diff(p))?;
                let dfb = VMorphism::new(fb.entry(p), fb.entry(p - 1), fb.diff(p))?;
                let lhs = hom_mor(&ida, &dfb)?.compose(&f.structure(a, b, p))?;
                let rhs = hom_mor(&dfa, &idb)?.compose(&f.structure(a, b, p - 1))?;
                let res = lhs.matrix.sub(&rhs.matrix)?;
                if !res.is_zero() {
                    report.fail(
                        "structure condition",
                        vec![
                            cat.name(a).to_string(),
                            cat.name(b).to_string(),
                            format!("p={p}"),
                        ],
                        format!("{res}"),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// The `Ch(V)`-level composition and unit axioms.
pub fn check_dg_functor_axioms(f: &DgFunctor) -> Result<Report> {
    check_functor_axioms(&f.to_enriched()?)
}

/// Componentwise chain maps `F(a) → G(a)` between padded values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgNat {
    source: DgFunctor,
    target: DgFunctor,
    components: Vec<ChainMap>,
}

impl DgNat {
    pub fn new(source: DgFunctor, target: DgFunctor, components: Vec<ChainMap>) -> Result<Self> {
        if source.category != target.category {
            return Err(Error::shape("dg functors on different categories"));
        }
        if components.len() != source.category.len() {
            return Err(Error::shape("wrong number of components"));
        }
        for (c, m) in components.iter().enumerate() {
            if *m.source() != source.objects[c] || *m.target() != target.objects[c] {
                return Err(Error::shape(format!(
                    "component at {} has the wrong ends",
                    source.category.name(c)
                )));
            }
        }
        Ok(DgNat {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &DgFunctor) -> Self {
        DgNat {
            source: f.clone(),
            target: f.clone(),
            components: f.objects.iter().map(ChainMap::identity).collect(),
        }
    }

    pub fn source(&self) -> &DgFunctor {
        &self.source
    }

    pub fn target(&self) -> &DgFunctor {
        &self.target
    }

    pub fn component(&self, c: usize) -> &ChainMap {
        &self.components[c]
    }

    pub fn components(&self) -> &[ChainMap] {
        &self.components
    }

    pub fn compose(&self, other: &DgNat) -> Result<DgNat> {
        if other.target != self.source {
            return Err(Error::shape("natural transformations are not composable"));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(g, f)| g.compose(f))
            .collect::<Result<_>>()?;
        Ok(DgNat {
            source: other.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    /// Naturality as a `Ch(V)`-natural transformation.
    pub fn check(&self) -> Result<Report> {
        let nat = EnrichedNat::new(
            self.source.to_enriched()?,
            self.target.to_enriched()?,
            self.components.clone(),
        )?;
        check_vnat(&nat)
    }
}

fn axiom_error(what: &str, r: &Report) -> Error {
    Error::AxiomFailure(format!(
        "{what}: {} failing diagrams, first: {}",
        r.failures.len(),
        r.failures[0].diagram
    ))
}

/// `G_n(c) = F(c)_n`, `(G_n)_ab = (F_ab)_n`, `d^G_n(a) = d^{F(a)}_n`.
pub fn to_functor_complex(f: &DgFunctor) -> Result<FunctorComplex> {
    let r = check_structure_condition(f)?;
    if !r.is_ok() {
        return Err(axiom_error("dg functor", &r));
    }
    let cat = &f.category;
    let n = cat.len();
    let (lo, _) = f.window();
    let levels = f
        .degrees()
        .map(|p| {
            let values = f.objects.iter().map(|o| o.entry(p)).collect();
            let maps = (0..n * n).map(|i| f.structure(i / n, i % n, p)).collect();
            VFunctor::new(cat.clone(), values, maps)
        })
        .collect::<Result<Vec<_>>>()?;
    for l in &levels {
        let r = check_functor_axioms(l)?;
        if !r.is_ok() {
            return Err(axiom_error("dg functor", &r));
        }
    }
    let diffs = f
        .degrees()
        .skip(1)
        .map(|p| {
            let (src, tgt) = (&levels[(p - lo) as usize], &levels[(p - lo - 1) as usize]);
            let comps = f
                .objects
                .iter()
                .map(|o| VMorphism::new(o.entry(p), o.entry(p - 1), o.diff(p)))
                .collect::<Result<_>>()?;
            EnrichedNat::new(src.clone(), tgt.clone(), comps)
        })
        .collect::<Result<Vec<_>>>()?;
    if levels.is_empty() {
        return Ok(FunctorComplex::zero(cat));
    }
    FunctorComplex::new(cat.clone(), lo, levels, diffs)
}

/// `F(c)_n = G_n(c)`, `d^{F(c)}_n = d^G_n(c)`, `(F_ab)_p = (G_p)_ab`.
pub fn to_dg_functor(g: &FunctorComplex) -> Result<DgFunctor> {
    let r = g.check()?;
    if !r.is_ok() {
        return Err(axiom_error("functor complex", &r));
    }
    let cat = g.category();
    let n = cat.len();
    let objects = (0..n).map(|c| g.at(c)).collect::<Result<Vec<_>>>()?;
    let structure = (0..n * n)
        .map(|i| {
            g.degrees()
                .map(|p| g.level(p).map(i / n, i % n).clone())
                .collect()
        })
        .collect();
    DgFunctor::new(cat.clone(), objects, structure)
}

/// Components `f(a)_p` read as `g_p(a)`.
pub fn to_functor_complex_map(alpha: &DgNat) -> Result<FunctorComplexMap> {
    let src = to_functor_complex(&alpha.source)?;
    let tgt = to_functor_complex(&alpha.target)?;
    let components = src
        .degrees()
        .map(|p| {
            let comps = alpha
                .components
                .iter()
                .enumerate()
                .map(|(c, m)| {
                    VMorphism::new(
                        alpha.source.objects[c].entry(p),
                        alpha.target.objects[c].entry(p),
                        m.component(p),
                    )
                })
                .collect::<Result<_>>()?;
            EnrichedNat::new(src.level(p), tgt.level(p), comps)
        })
        .collect::<Result<Vec<VNat>>>()?;
    FunctorComplexMap::new(src, tgt, components)
}

/// Inverse of [`to_functor_complex_map`].
pub fn to_dg_nat(f: &FunctorComplexMap) -> Result<DgNat> {
    let src = to_dg_functor(f.source())?;
    let tgt = to_dg_functor(f.target())?;
    let components = (0..src.category.len())
        .map(|c| {
            let comps = src
                .degrees()
                .map(|p| f.component(p).component(c).matrix.clone())
                .collect();
            ChainMap::new(src.objects[c].clone(), tgt.objects[c].clone(), comps)
        })
        .collect::<Result<Vec<_>>>()?;
    DgNat::new(src, tgt, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::disk_complex;
    use crate::enriched::catalog::{a2, unit_category};
    use crate::enriched::representable;
    use crate::functor_cat::oslash;
    use crate::linalg::{RingSpec, Scalar};

    fn two_term(ring: &RingSpec, m: i64) -> ChainComplex {
        ChainComplex::new(
            ring.clone(),
            0,
            vec![1, 1],
            vec![Matrix::from_rows(ring.clone(), &[&[m]])],
        )
        .unwrap()
    }

    fn constant(ring: &RingSpec, x: &ChainComplex) -> DgFunctor {
        let c = unit_category(ring);
        let structure = vec![x
            .degrees()
            .map(|p| {
                let e = x.entry(p);
                VMorphism::new(
                    c.hom(0, 0).clone(),
                    crate::base::hom_obj(&e, &e).unwrap(),
                    Matrix::identity(ring.clone(), e.rank).vectorize(),
                )
                .unwrap()
            })
            .collect()];
        DgFunctor::new(c, vec![x.clone()], structure).unwrap()
    }

    fn disk_on_a(ring: &RingSpec) -> DgFunctor {
        let c = a2(ring);
        let e = VObject::unit(ring.clone());
        let fa = disk_complex(&e, 1);
        let fb = ChainComplex::zero(ring.clone());
        let unit = || {
            VMorphism::new(
                c.hom(0, 0).clone(),
                VObject::new(ring.clone(), 1),
                Matrix::identity(ring.clone(), 1),
            )
            .unwrap()
        };
        let zero = |a: usize, b: usize| VMorphism::zero(c.hom(a, b), &VObject::zero(ring.clone()));
        let structure = vec![
            vec![unit(), unit()],
            vec![zero(0, 1), zero(0, 1)],
            vec![zero(1, 0), zero(1, 0)],
            vec![zero(1, 1), zero(1, 1)],
        ];
        DgFunctor::new(c, vec![fa, fb], structure).unwrap()
    }

    #[test]
    fn constant_functor_on_a_point() {
        let ring = RingSpec::Integers;
        let x = two_term(&ring, 3);
        let f = constant(&ring, &x);
        assert!(check_structure_condition(&f).unwrap().is_ok());
        assert!(check_dg_functor_axioms(&f).unwrap().is_ok());
        let g = to_functor_complex(&f).unwrap();
        assert_eq!(g.at(0).unwrap(), x);
        assert_eq!(to_dg_functor(&g).unwrap(), f);
    }

    #[test]
    fn perturbed_structure_map_fails() {
        let ring = RingSpec::Rationals;
        let x = two_term(&ring, 2);
        let mut f = constant(&ring, &x);
        let (lo, _) = f.window();
        let m = f.structure(0, 0, lo);
        let bumped = m.scale(&Scalar::from_integer(3.into())).unwrap();
        f.set_structure(0, 0, lo, bumped).unwrap();
        let r = check_structure_condition(&f).unwrap();
        assert_eq!(r.failures.len(), 1);
        assert!(r.failures[0].at.contains(&format!("p={}", lo + 1)));
        assert!(matches!(
            to_functor_complex(&f),
            Err(Error::AxiomFailure(_))
        ));
    }

    #[test]
    fn disk_on_a2_gives_simple_levels() {
        let ring = RingSpec::prime_field(2).unwrap();
        let f = disk_on_a(&ring);
        assert!(check_structure_condition(&f).unwrap().is_ok());
        assert!(check_dg_functor_axioms(&f).unwrap().is_ok());
        let g = to_functor_complex(&f).unwrap();
        assert_eq!(g.window(), (0, 1));
        for p in 0..=1 {
            let ranks: Vec<usize> = g.level(p).values().iter().map(|v| v.rank).collect();
            assert_eq!(ranks, vec![1, 0]);
        }
        assert!(g.check().unwrap().is_ok());
        assert_eq!(to_dg_functor(&g).unwrap(), f);
    }

    #[test]
    fn zero_translates_to_zero() {
        let ring = RingSpec::Integers;
        let c = a2(&ring);
        let f = to_dg_functor(&FunctorComplex::zero(&c)).unwrap();
        assert!(f.values().iter().all(ChainComplex::is_empty));
        assert_eq!(to_functor_complex(&f).unwrap(), FunctorComplex::zero(&c));
    }

    #[test]
    fn enriched_round_trip() {
        let ring = RingSpec::Integers;
        let f = disk_on_a(&ring);
        let e = f.to_enriched().unwrap();
        assert_eq!(DgFunctor::from_enriched(&e).unwrap(), f);
    }

    #[test]
    fn identity_and_composite_translate() {
        let ring = RingSpec::Rationals;
        let c = a2(&ring);
        let r = oslash(
            &representable(&c, 0).unwrap(),
            &VObject::new(ring.clone(), 2),
        )
        .unwrap();
        let g = FunctorComplex::concentrated(&r, 2);
        let id = FunctorComplexMap::identity(&g);
        let nat = to_dg_nat(&id).unwrap();
        assert_eq!(nat, DgNat::identity(&to_dg_functor(&g).unwrap()));
        assert!(nat.check().unwrap().is_ok());
        assert_eq!(to_functor_complex_map(&nat).unwrap(), id);
        let twice = nat.compose(&nat).unwrap();
        assert_eq!(
            to_functor_complex_map(&twice).unwrap(),
            id.compose(&id).unwrap()
        );
    }
}
