use std::marker::PhantomData;

use super::monoidal::{Base, Chains, Monoidal};
use crate::error::{Error, Result};
use crate::linalg::RingSpec;
use crate::report::Report;

/// A small category enriched over `M`, with a total hom table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnrichedCategory<M: Monoidal> {
    ring: RingSpec,
    objects: Vec<String>,
    homs: Vec<M::Obj>,
    comps: Vec<M::Mor>,
    units: Vec<M::Mor>,
    _base: PhantomData<M>,
}

pub type VCategory = EnrichedCategory<Base>;
pub type DgCategory = EnrichedCategory<Chains>;

impl<M: Monoidal> EnrichedCategory<M> {
    /// `homs[a·n + b] = hom(a, b)`, `comps[(a·n + b)·n + c] = comp(a, b, c)`,
    /// `units[a] = unit(a)`.
    pub fn new(
        ring: RingSpec,
        objects: Vec<String>,
        homs: Vec<M::Obj>,
        comps: Vec<M::Mor>,
        units: Vec<M::Mor>,
    ) -> Result<Self> {
        let n = objects.len();
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(Error::shape(format!("duplicate object {o}")));
            }
        }
        if homs.len() != n * n || comps.len() != n * n * n || units.len() != n {
            return Err(Error::shape(
                "hom, composition or unit table has the wrong size",
            ));
        }
        for h in &homs {
            ring.ensure_same(M::ring(h))?;
        }
        let cat = EnrichedCategory {
            ring,
            objects,
            homs,
            comps,
            units,
            _base: PhantomData,
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let f = cat.comp(a, b, c);
                    let src = M::tensor(cat.hom(a, b), cat.hom(b, c))?;
                    if *M::source(f) != src || M::target(f) != cat.hom(a, c) {
                        return Err(Error::shape(format!(
                            "composition ({}, {}, {}) has the wrong shape",
                            cat.objects[a], cat.objects[b], cat.objects[c]
                        )));
                    }
                }
            }
            let u = cat.unit(a);
            if *M::source(u) != M::unit(&cat.ring) || M::target(u) != cat.hom(a, a) {
                return Err(Error::shape(format!(
                    "unit at {} has the wrong shape",
                    cat.objects[a]
                )));
            }
        }
        Ok(cat)
    }

    pub fn from_fn(
        ring: RingSpec,
        objects: Vec<String>,
        hom: impl Fn(usize, usize) -> M::Obj,
        comp: impl Fn(usize, usize, usize) -> Result<M::Mor>,
        unit: impl Fn(usize) -> Result<M::Mor>,
    ) -> Result<Self> {
        let n = objects.len();
        let mut homs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                homs.push(hom(a, b));
            }
        }
        let mut comps = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    comps.push(comp(a, b, c)?);
                }
            }
        }
        let units = (0..n).map(unit).collect::<Result<_>>()?;
        EnrichedCategory::new(ring, objects, homs, comps, units)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn hom(&self, a: usize, b: usize) -> &M::Obj {
        &self.homs[a * self.len() + b]
    }

    pub fn comp(&self, a: usize, b: usize, c: usize) -> &M::Mor {
        let n = self.len();
        &self.comps[(a * n + b) * n + c]
    }

    pub fn unit(&self, a: usize) -> &M::Mor {
        &self.units[a]
    }

    pub fn set_comp(&mut self, a: usize, b: usize, c: usize, f: M::Mor) -> Result<()> {
        let old = self.comp(a, b, c);
        if M::source(&f) != M::source(old) || M::target(&f) != M::target(old) {
            return Err(Error::shape("replacement composition has the wrong shape"));
        }
        let n = self.len();
        self.comps[(a * n + b) * n + c] = f;
        Ok(())
    }

    pub fn set_unit(&mut self, a: usize, f: M::Mor) -> Result<()> {
        let old = self.unit(a);
        if M::source(&f) != M::source(old) || M::target(&f) != M::target(old) {
            return Err(Error::shape("replacement unit has the wrong shape"));
        }
        self.units[a] = f;
        Ok(())
    }
}

/// Associativity and unit axioms, every instance checked exactly.
pub fn check_category_axioms<M: Monoidal>(cat: &EnrichedCategory<M>) -> Result<Report> {
    let mut report = Report::new(format!("{}-category axioms", M::NAME));
    let n = cat.len();
    let names = |ids: &[usize]| ids.iter().map(|&i| cat.name(i).to_string()).collect();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let (hab, hbc, hcd) = (cat.hom(a, b), cat.hom(b, c), cat.hom(c, d));
                    let lhs = M::compose(
                        cat.comp(a, c, d),
                        &M::tensor_mor(cat.comp(a, b, c), &M::identity(hcd))?,
                    )?;
                    let rhs = M::compose(
                        &M::compose(
                            cat.comp(a, b, d),
                            &M::tensor_mor(&M::identity(hab), cat.comp(b, c, d))?,
                        )?,
                        &M::assoc(hab, hbc, hcd)?,
                    )?;
                    if lhs != rhs {
                        report.fail(
                            "associativity",
                            names(&[a, b, c, d]),
                            M::residual(&lhs, &rhs),
                        );
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let hab = cat.hom(a, b);
            let lhs = M::compose(
                cat.comp(a, a, b),
                &M::tensor_mor(cat.unit(a), &M::identity(hab))?,
            )?;
            let rhs = M::left_unit(hab)?;
            if lhs != rhs {
                report.fail("left unit", names(&[a, b]), M::residual(&lhs, &rhs));
            }
            let lhs = M::compose(
                cat.comp(a, b, b),
                &M::tensor_mor(&M::identity(hab), cat.unit(b))?,
            )?;
            let rhs = M::right_unit(hab)?;
            if lhs != rhs {
                report.fail("right unit", names(&[a, b]), M::residual(&lhs, &rhs));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::VMorphism;
    use crate::enriched::catalog::{a2, unit_category};
    use crate::linalg::Matrix;

    #[test]
    fn unit_and_a2_pass() {
        for ring in [RingSpec::Integers, RingSpec::Rationals] {
            assert!(check_category_axioms(&unit_category(&ring))
                .unwrap()
                .is_ok());
            assert!(check_category_axioms(&a2(&ring)).unwrap().is_ok());
        }
    }

    #[test]
    fn zero_unit_fails_with_named_diagram() {
        let ring = RingSpec::Integers;
        let mut c = a2(&ring);
        let a = c.index_of("a").unwrap();
        let u = c.unit(a).clone();
        let zero = VMorphism::new(
            u.source.clone(),
            u.target.clone(),
            Matrix::zeros(ring, 1, 1),
        )
        .unwrap();
        c.set_unit(a, zero).unwrap();
        let r = check_category_axioms(&c).unwrap();
        assert!(!r.is_ok());
        assert!(r.failures.iter().any(|f| f.diagram == "left unit"));
        assert_eq!(r.failures[0].at, vec!["a".to_string(), "a".to_string()]);
    }

    #[test]
    fn unknown_object() {
        let c = a2(&RingSpec::Integers);
        assert_eq!(c.index_of("z"), Err(Error::UnknownObject("z".into())));
    }
}
