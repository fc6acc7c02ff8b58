use crate::base::VMorphism;
use crate::chain::{ChainComplex, ChainMap};
use crate::enriched::{check_functor_axioms, check_vnat, EnrichedNat, VCategory, VFunctor, VNat};
use crate::error::{Error, Result};
use crate::functor_cat::{nat_sum, pointwise_sum};
use crate::linalg::Matrix;
use crate::report::Report;

/// A bounded chain complex in `[C, V]`. `diffs[k]` is
/// `d_{lo+k+1}: G_{lo+k+1} → G_{lo+k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorComplex {
    category: VCategory,
    lo: i64,
    levels: Vec<VFunctor>,
    diffs: Vec<VNat>,
}

impl FunctorComplex {
    pub fn new(
        category: VCategory,
        lo: i64,
        levels: Vec<VFunctor>,
        diffs: Vec<VNat>,
    ) -> Result<Self> {
        if diffs.len() != levels.len().saturating_sub(1) {
            return Err(Error::shape(
                "functor complex needs one differential between each pair of levels",
            ));
        }
        for l in &levels {
            if *l.source() != category {
                return Err(Error::shape("level on a different category"));
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            if *d.source() != levels[k + 1] || *d.target() != levels[k] {
                return Err(Error::shape(format!(
                    "differential in degree {} has the wrong ends",
                    lo + k as i64 + 1
                )));
            }
        }
        for k in 1..diffs.len() {
            let dd = diffs[k - 1].compose(&diffs[k])?;
            if dd.components().iter().any(|c| !c.is_zero()) {
                return Err(Error::NotAComplex {
                    degree: lo + k as i64 + 1,
                });
            }
        }
        Ok(FunctorComplex {
            category,
            lo,
            levels,
            diffs,
        })
    }

    pub fn zero(category: &VCategory) -> Self {
        FunctorComplex {
            category: category.clone(),
            lo: 0,
            levels: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// `F` concentrated in `degree`.
    pub fn concentrated(f: &VFunctor, degree: i64) -> Self {
        FunctorComplex {
            category: f.source().clone(),
            lo: degree,
            levels: vec![f.clone()],
            diffs: Vec::new(),
        }
    }

    pub fn category(&self) -> &VCategory {
        &self.category
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.levels.len() as i64 - 1
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo(), self.hi())
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn degrees(&self) -> impl DoubleEndedIterator<Item = i64> + Clone {
        self.lo..=self.hi()
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= self.lo && n <= self.hi()
    }

    pub fn level(&self, n: i64) -> VFunctor {
        if self.contains(n) {
            self.levels[(n - self.lo) as usize].clone()
        } else {
            VFunctor::zero(&self.category)
        }
    }

    pub fn level_ref(&self, n: i64) -> Option<&VFunctor> {
        if self.contains(n) {
            Some(&self.levels[(n - self.lo) as usize])
        } else {
            None
        }
    }

    pub fn diff(&self, n: i64) -> VNat {
        if n > self.lo && n <= self.hi() {
            self.diffs[(n - self.lo - 1) as usize].clone()
        } else {
            EnrichedNat::zero(&self.level(n), &self.level(n - 1)).expect("same category")
        }
    }

    pub fn rank_at(&self, n: i64, c: usize) -> usize {
        self.level_ref(n).map_or(0, |l| l.value(c).rank)
    }

    /// The complex of values at `c`.
    pub fn at(&self, c: usize) -> Result<ChainComplex> {
        if c >= self.category.len() {
            return Err(Error::UnknownObject(format!("#{c}")));
        }
        let ranks = self.levels.iter().map(|l| l.value(c).rank).collect();
        let diffs = self
            .diffs
            .iter()
            .map(|d| d.component(c).matrix.clone())
            .collect();
        ChainComplex::from_parts(self.category.ring().clone(), self.lo, ranks, diffs)
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(VFunctor::is_zero)
    }

    /// Functor axioms of every level and naturality of every differential.
    pub fn check(&self) -> Result<Report> {
        let mut report = Report::new("functor complex");
        for (k, l) in self.levels.iter().enumerate() {
            let mut r = check_functor_axioms(l)?;
            for f in &mut r.failures {
                f.at.push(format!("level {}", self.lo + k as i64));
            }
            report.absorb(r);
        }
        for (k, d) in self.diffs.iter().enumerate() {
            let mut r = check_vnat(d)?;
            for f in &mut r.failures {
                f.at.push(format!("differential {}", self.lo + k as i64 + 1));
            }
            report.absorb(r);
        }
        Ok(report)
    }

    /// Same complex over a window enlarged to contain `[lo, hi]`.
    pub fn pad_to(&self, lo: i64, hi: i64) -> FunctorComplex {
        if hi < lo {
            return self.clone();
        }
        let (lo, hi) = if self.is_empty() {
            (lo, hi)
        } else {
            (lo.min(self.lo), hi.max(self.hi()))
        };
        FunctorComplex {
            category: self.category.clone(),
            lo,
            levels: (lo..=hi).map(|n| self.level(n)).collect(),
            diffs: (lo + 1..=hi).map(|n| self.diff(n)).collect(),
        }
    }

    pub fn shift(&self, k: i64) -> FunctorComplex {
        let diffs = self
            .diffs
            .iter()
            .map(|d| {
                let comps = d
                    .components()
                    .iter()
                    .map(|c| VMorphism {
                        matrix: c.matrix.signed(k),
                        ..c.clone()
                    })
                    .collect();
                EnrichedNat::new(d.source().clone(), d.target().clone(), comps)
            })
            .collect::<Result<_>>()
            .expect("same shapes");
        FunctorComplex {
            category: self.category.clone(),
            lo: self.lo + k,
            levels: self.levels.clone(),
            diffs,
        }
    }
}

/// Degree-zero map of functor complexes; `components[k]` is `f_{lo+k}`
/// over the source window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorComplexMap {
    source: FunctorComplex,
    target: FunctorComplex,
    components: Vec<VNat>,
}

impl FunctorComplexMap {
    pub fn new(
        source: FunctorComplex,
        target: FunctorComplex,
        components: Vec<VNat>,
    ) -> Result<Self> {
        if source.category != target.category {
            return Err(Error::shape("complexes on different categories"));
        }
        if components.len() != source.levels.len() {
            return Err(Error::shape("wrong number of components"));
        }
        for (n, c) in source.degrees().zip(&components) {
            if *c.source() != source.level(n) || *c.target() != target.level(n) {
                return Err(Error::shape(format!(
                    "component in degree {n} has the wrong ends"
                )));
            }
        }
        let f = FunctorComplexMap {
            source,
            target,
            components,
        };
        for n in f.source.degrees() {
            let lhs = f.target.diff(n).compose(&f.component(n))?;
            let rhs = f.component(n - 1).compose(&f.source.diff(n))?;
            if lhs.components() != rhs.components() {
                return Err(Error::NotAChainMap { degree: n });
            }
        }
        Ok(f)
    }

    pub fn identity(x: &FunctorComplex) -> Self {
        FunctorComplexMap {
            source: x.clone(),
            target: x.clone(),
            components: x.levels.iter().map(EnrichedNat::identity).collect(),
        }
    }

    pub fn source(&self) -> &FunctorComplex {
        &self.source
    }

    pub fn target(&self) -> &FunctorComplex {
        &self.target
    }

    pub fn component(&self, n: i64) -> VNat {
        if self.source.contains(n) {
            self.components[(n - self.source.lo) as usize].clone()
        } else {
            EnrichedNat::zero(&self.source.level(n), &self.target.level(n)).expect("same category")
        }
    }

    pub fn components(&self) -> &[VNat] {
        &self.components
    }

    /// The chain map of values at `c`.
    pub fn at(&self, c: usize) -> Result<ChainMap> {
        let comps = self
            .components
            .iter()
            .map(|a| a.component(c).matrix.clone())
            .collect();
        ChainMap::from_parts(self.source.at(c)?, self.target.at(c)?, comps)
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &FunctorComplexMap) -> Result<FunctorComplexMap> {
        if f.target != self.source {
            return Err(Error::shape("maps are not composable"));
        }
        let components = f
            .source
            .degrees()
            .map(|n| self.component(n).compose(&f.component(n)))
            .collect::<Result<_>>()?;
        Ok(FunctorComplexMap {
            source: f.source.clone(),
            target: self.target.clone(),
            components,
        })
    }
}

/// Degreewise direct sum over the union of the windows.
pub fn functor_complex_sum(cat: &VCategory, parts: &[FunctorComplex]) -> Result<FunctorComplex> {
    let live: Vec<&FunctorComplex> = parts.iter().filter(|p| !p.is_empty()).collect();
    if live.is_empty() {
        return Ok(FunctorComplex::zero(cat));
    }
    let lo = live.iter().map(|p| p.lo()).min().unwrap();
    let hi = live.iter().map(|p| p.hi()).max().unwrap();
    let levels = (lo..=hi)
        .map(|n| {
            let ls: Vec<VFunctor> = parts.iter().map(|p| p.level(n)).collect();
            Ok(pointwise_sum(cat, &ls)?.sum)
        })
        .collect::<Result<Vec<_>>>()?;
    let diffs = (lo + 1..=hi)
        .map(|n| {
            let ds: Vec<VNat> = parts.iter().map(|p| p.diff(n)).collect();
            nat_sum(cat, &ds)
        })
        .collect::<Result<Vec<_>>>()?;
    FunctorComplex::new(cat.clone(), lo, levels, diffs)
}

/// `cone(f)_n = X_{n-1} ⊕ Y_n` with `d = [[-d^X, 0], [f, d^Y]]`.
pub fn functor_cone(f: &FunctorComplexMap) -> Result<FunctorComplex> {
    let (x, y) = (f.source(), f.target());
    let cat = x.category();
    let ring = cat.ring().clone();
    let (lo, hi) = match (x.is_empty(), y.is_empty()) {
        (true, true) => return Ok(FunctorComplex::zero(cat)),
        (true, false) => y.window(),
        (false, true) => (x.lo() + 1, x.hi() + 1),
        (false, false) => ((x.lo() + 1).min(y.lo()), (x.hi() + 1).max(y.hi())),
    };
    let levels = (lo..=hi)
        .map(|n| Ok(pointwise_sum(cat, &[x.level(n - 1), y.level(n)])?.sum))
        .collect::<Result<Vec<_>>>()?;
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let (src, tgt) = (&levels[(n - lo) as usize], &levels[(n - lo - 1) as usize]);
        let (dx, dy, fn1) = (x.diff(n - 1), y.diff(n), f.component(n - 1));
        let comps = (0..cat.len())
            .map(|c| {
                let (xs, xt) = (x.rank_at(n - 1, c), x.rank_at(n - 2, c));
                let (ys, yt) = (y.rank_at(n, c), y.rank_at(n - 1, c));
                let mut m = Matrix::zeros(ring.clone(), xt + yt, xs + ys);
                m.set_block(0, 0, &dx.component(c).matrix.neg());
                m.set_block(xt, 0, &fn1.component(c).matrix);
                m.set_block(xt, xs, &dy.component(c).matrix);
                VMorphism::new(src.value(c).clone(), tgt.value(c).clone(), m)
            })
            .collect::<Result<_>>()?;
        diffs.push(EnrichedNat::new(src.clone(), tgt.clone(), comps)?);
    }
    FunctorComplex::new(cat.clone(), lo, levels, diffs)
}
