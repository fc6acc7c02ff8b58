use super::category::EnrichedCategory;
use super::monoidal::{Base, Chains, Monoidal};
use crate::error::{Error, Result};
use crate::report::Report;

/// An `M`-functor from a small `M`-category into `M` itself.
/// `maps[a·n + b]: hom(a, b) → [F(a), F(b)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnrichedFunctor<M: Monoidal> {
    source: EnrichedCategory<M>,
    objects: Vec<M::Obj>,
    maps: Vec<M::Mor>,
}

pub type VFunctor = EnrichedFunctor<Base>;
pub type ChFunctor = EnrichedFunctor<Chains>;

impl<M: Monoidal> EnrichedFunctor<M> {
    pub fn new(
        source: EnrichedCategory<M>,
        objects: Vec<M::Obj>,
        maps: Vec<M::Mor>,
    ) -> Result<Self> {
        let n = source.len();
        if objects.len() != n || maps.len() != n * n {
            return Err(Error::shape("functor tables have the wrong size"));
        }
        for o in &objects {
            source.ring().ensure_same(M::ring(o))?;
        }
        for a in 0..n {
            for b in 0..n {
                let f = &maps[a * n + b];
                let tgt = M::hom(&objects[a], &objects[b])?;
                if M::source(f) != source.hom(a, b) || *M::target(f) != tgt {
                    return Err(Error::shape(format!(
                        "functor map at ({}, {}) has the wrong shape",
                        source.name(a),
                        source.name(b)
                    )));
                }
            }
        }
        Ok(EnrichedFunctor {
            source,
            objects,
            maps,
        })
    }

    pub fn from_fn(
        source: EnrichedCategory<M>,
        objects: Vec<M::Obj>,
        map: impl Fn(usize, usize) -> Result<M::Mor>,
    ) -> Result<Self> {
        let n = source.len();
        let mut maps = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                maps.push(map(a, b)?);
            }
        }
        EnrichedFunctor::new(source, objects, maps)
    }

    /// The functor with every value zero.
    pub fn zero(source: &EnrichedCategory<M>) -> Self {
        let z = M::zero(source.ring());
        let n = source.len();
        let zero_hom = M::hom(&z, &z).expect("same ring");
        let mut maps = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                maps.push(M::zero_mor(source.hom(a, b), &zero_hom));
            }
        }
        EnrichedFunctor {
            source: source.clone(),
            objects: vec![z; n],
            maps,
        }
    }

    pub fn source(&self) -> &EnrichedCategory<M> {
        &self.source
    }

    pub fn value(&self, a: usize) -> &M::Obj {
        &self.objects[a]
    }

    pub fn values(&self) -> &[M::Obj] {
        &self.objects
    }

    pub fn map(&self, a: usize, b: usize) -> &M::Mor {
        &self.maps[a * self.source.len() + b]
    }

    pub fn set_map(&mut self, a: usize, b: usize, f: M::Mor) -> Result<()> {
        let old = self.map(a, b);
        if M::source(&f) != M::source(old) || M::target(&f) != M::target(old) {
            return Err(Error::shape("replacement functor map has the wrong shape"));
        }
        let n = self.source.len();
        self.maps[a * n + b] = f;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.objects.iter().all(M::is_zero_obj)
    }
}

/// Composition and unit diagrams of an enriched functor.
pub fn check_functor_axioms<M: Monoidal>(f: &EnrichedFunctor<M>) -> Result<Report> {
    let mut report = Report::new(format!("{}-functor axioms", M::NAME));
    let cat = f.source();
    let n = cat.len();
    let names = |ids: &[usize]| ids.iter().map(|&i| cat.name(i).to_string()).collect();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = M::compose(f.map(a, c), cat.comp(a, b, c))?;
                let rhs = M::compose(
                    &M::internal_comp(f.value(a), f.value(b), f.value(c))?,
                    &M::tensor_mor(f.map(a, b), f.map(b, c))?,
                )?;
                if lhs != rhs {
                    report.fail(
                        "functor composition",
                        names(&[a, b, c]),
                        M::residual(&lhs, &rhs),
                    );
                }
            }
        }
        let lhs = M::compose(f.map(a, a), cat.unit(a))?;
        let rhs = M::internal_unit(f.value(a))?;
        if lhs != rhs {
            report.fail("functor unit", names(&[a]), M::residual(&lhs, &rhs));
        }
    }
    Ok(report)
}

/// `C(c, -)`: values `hom(c, b)`, structure maps curried from composition.
pub fn representable<M: Monoidal>(
    cat: &EnrichedCategory<M>,
    c: usize,
) -> Result<EnrichedFunctor<M>> {
    if c >= cat.len() {
        return Err(Error::UnknownObject(format!("#{c}")));
    }
    let objects = (0..cat.len()).map(|b| cat.hom(c, b).clone()).collect();
    EnrichedFunctor::from_fn(cat.clone(), objects, |a, b| {
        let (hab, hca) = (cat.hom(a, b), cat.hom(c, a));
        let k = M::compose(cat.comp(c, a, b), &M::swap(hab, hca)?)?;
        M::adjoint(&k, hab, hca)
    })
}

/// An enriched natural transformation, stored by its components
/// `F(a) → G(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnrichedNat<M: Monoidal> {
    source: EnrichedFunctor<M>,
    target: EnrichedFunctor<M>,
    components: Vec<M::Mor>,
}

pub type VNat = EnrichedNat<Base>;

impl<M: Monoidal> EnrichedNat<M> {
    pub fn new(
        source: EnrichedFunctor<M>,
        target: EnrichedFunctor<M>,
        components: Vec<M::Mor>,
    ) -> Result<Self> {
        if source.source() != target.source() {
            return Err(Error::shape(
                "natural transformation between functors on different categories",
            ));
        }
        if components.len() != source.source().len() {
            return Err(Error::shape("wrong number of components"));
        }
        for (a, c) in components.iter().enumerate() {
            if M::source(c) != source.value(a) || M::target(c) != target.value(a) {
                return Err(Error::shape(format!(
                    "component at {} has the wrong shape",
                    source.source().name(a)
                )));
            }
        }
        Ok(EnrichedNat {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &EnrichedFunctor<M>) -> Self {
        EnrichedNat {
            source: f.clone(),
            target: f.clone(),
            components: f.values().iter().map(M::identity).collect(),
        }
    }

    pub fn zero(f: &EnrichedFunctor<M>, g: &EnrichedFunctor<M>) -> Result<Self> {
        let comps = f
            .values()
            .iter()
            .zip(g.values())
            .map(|(x, y)| M::zero_mor(x, y))
            .collect();
        EnrichedNat::new(f.clone(), g.clone(), comps)
    }

    pub fn source(&self) -> &EnrichedFunctor<M> {
        &self.source
    }

    pub fn target(&self) -> &EnrichedFunctor<M> {
        &self.target
    }

    pub fn component(&self, a: usize) -> &M::Mor {
        &self.components[a]
    }

    pub fn components(&self) -> &[M::Mor] {
        &self.components
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EnrichedNat<M>) -> Result<EnrichedNat<M>> {
        if other.target != self.source {
            return Err(Error::shape("natural transformations are not composable"));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(g, f)| M::compose(g, f))
            .collect::<Result<_>>()?;
        Ok(EnrichedNat {
            source: other.source.clone(),
            target: self.target.clone(),
            components,
        })
    }
}

/// The naturality square `[1, α_b] ∘ F_ab = [α_a, 1] ∘ G_ab` for every pair.
pub fn check_vnat<M: Monoidal>(alpha: &EnrichedNat<M>) -> Result<Report> {
    let mut report = Report::new(format!("{}-naturality", M::NAME));
    let (f, g) = (alpha.source(), alpha.target());
    let cat = f.source();
    let n = cat.len();
    for a in 0..n {
        for b in 0..n {
            let lhs = M::compose(
                &M::hom_mor(&M::identity(f.value(a)), alpha.component(b))?,
                f.map(a, b),
            )?;
            let rhs = M::compose(
                &M::hom_mor(alpha.component(a), &M::identity(g.value(b)))?,
                g.map(a, b),
            )?;
            if lhs != rhs {
                report.fail(
                    "naturality",
                    vec![cat.name(a).to_string(), cat.name(b).to_string()],
                    M::residual(&lhs, &rhs),
                );
            }
        }
    }
    Ok(report)
}

/// An enriched functor between two small `M`-categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryFunctor<M: Monoidal> {
    source: EnrichedCategory<M>,
    target: EnrichedCategory<M>,
    on_obj: Vec<usize>,
    maps: Vec<M::Mor>,
}

impl<M: Monoidal> CategoryFunctor<M> {
    pub fn new(
        source: EnrichedCategory<M>,
        target: EnrichedCategory<M>,
        on_obj: Vec<usize>,
        maps: Vec<M::Mor>,
    ) -> Result<Self> {
        let n = source.len();
        if on_obj.len() != n || maps.len() != n * n || on_obj.iter().any(|&x| x >= target.len()) {
            return Err(Error::shape("functor tables have the wrong size"));
        }
        for a in 0..n {
            for b in 0..n {
                let f = &maps[a * n + b];
                if M::source(f) != source.hom(a, b)
                    || M::target(f) != target.hom(on_obj[a], on_obj[b])
                {
                    return Err(Error::shape("functor map has the wrong shape"));
                }
            }
        }
        Ok(CategoryFunctor {
            source,
            target,
            on_obj,
            maps,
        })
    }

    pub fn identity(cat: &EnrichedCategory<M>) -> Self {
        let n = cat.len();
        let mut maps = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                maps.push(M::identity(cat.hom(a, b)));
            }
        }
        CategoryFunctor {
            source: cat.clone(),
            target: cat.clone(),
            on_obj: (0..n).collect(),
            maps,
        }
    }

    pub fn map(&self, a: usize, b: usize) -> &M::Mor {
        &self.maps[a * self.source.len() + b]
    }

    pub fn on_obj(&self, a: usize) -> usize {
        self.on_obj[a]
    }
}

pub fn check_category_functor<M: Monoidal>(f: &CategoryFunctor<M>) -> Result<Report> {
    let mut report = Report::new(format!("{}-functor axioms", M::NAME));
    let (c, d) = (&f.source, &f.target);
    let n = c.len();
    let names = |ids: &[usize]| ids.iter().map(|&i| c.name(i).to_string()).collect();
    for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                let lhs = M::compose(f.map(a, x), c.comp(a, b, x))?;
                let rhs = M::compose(
                    d.comp(f.on_obj(a), f.on_obj(b), f.on_obj(x)),
                    &M::tensor_mor(f.map(a, b), f.map(b, x))?,
                )?;
                if lhs != rhs {
                    report.fail(
                        "functor composition",
                        names(&[a, b, x]),
                        M::residual(&lhs, &rhs),
                    );
                }
            }
        }
        let lhs = M::compose(f.map(a, a), c.unit(a))?;
        let rhs = d.unit(f.on_obj(a)).clone();
        if lhs != rhs {
            report.fail("functor unit", names(&[a]), M::residual(&lhs, &rhs));
        }
    }
    Ok(report)
}
