//! Bounded chain complexes of free modules and the closed symmetric monoidal
//! structure on them.
//!
//! Direct sums `(X ⊙ Y)_n = ⊕_{p+q=n} X_p ⊗ Y_q` list summands by decreasing
//! `p`; products `Hom(X, Y)_n = ∏_p [X_p, Y_{p+n}]` list factors by
//! increasing `p`. Both range over the whole window of `X`, so a summand or
//! factor may have rank zero.

mod hom;
mod ops;
mod tensor;

use std::fmt;

use crate::base::VObject;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RingSpec};

pub use hom::{
    adjoint_chain, adjoint_chain_inv, chain_map_basis, compose_hom, eval_chain, hom_chainmap,
    hom_complex, unit_chain,
};
pub use ops::{direct_sum, disk_complex, homology, mapping_cone, shift};
pub use tensor::{
    assoc_chain, left_unit_chain, right_unit_chain, symmetry_chain, tensor_chainmap, tensor_complex,
};

pub(crate) use hom::hom_blocks;

/// A bounded complex `X_hi → … → X_lo` of free modules. `diffs[k]` is
/// `d_{lo+k+1}: X_{lo+k+1} → X_{lo+k}`; degrees outside the window are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    ring: RingSpec,
    lo: i64,
    ranks: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl ChainComplex {
    /// `diffs` lists `d_n` for `n = lo+1 ..= hi`.
    pub fn new(ring: RingSpec, lo: i64, ranks: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        let c = ChainComplex::from_parts(ring, lo, ranks, diffs)?;
        c.validate()?;
        Ok(c)
    }

    /// Shape-checked construction without the `d ∘ d = 0` check.
    pub(crate) fn from_parts(
        ring: RingSpec,
        lo: i64,
        ranks: Vec<usize>,
        diffs: Vec<Matrix>,
    ) -> Result<Self> {
        if diffs.len() != ranks.len().saturating_sub(1) {
            return Err(Error::shape(format!(
                "complex with {} degrees needs {} differentials, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            ring.ensure_same(d.ring())?;
            if d.shape() != (ranks[k], ranks[k + 1]) {
                return Err(Error::DimensionMismatch {
                    op: "differential",
                    left: (ranks[k], ranks[k + 1]),
                    right: d.shape(),
                });
            }
        }
        Ok(ChainComplex {
            ring,
            lo,
            ranks,
            diffs,
        })
    }

    pub(crate) fn validate(&self) -> Result<()> {
        for w in 0..self.diffs.len().saturating_sub(1) {
            if !self.diffs[w].matmul(&self.diffs[w + 1])?.is_zero() {
                return Err(Error::NotAComplex {
                    degree: self.lo + w as i64 + 2,
                });
            }
        }
        Ok(())
    }

    pub fn zero(ring: RingSpec) -> Self {
        ChainComplex {
            ring,
            lo: 0,
            ranks: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// The tensor unit `ε`: `e` in degree zero.
    pub fn unit(ring: RingSpec) -> Self {
        ChainComplex::concentrated(&VObject::unit(ring), 0)
    }

    pub fn concentrated(obj: &VObject, degree: i64) -> Self {
        ChainComplex {
            ring: obj.ring.clone(),
            lo: degree,
            ranks: vec![obj.rank],
            diffs: Vec::new(),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo(), self.hi())
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn degrees(&self) -> impl DoubleEndedIterator<Item = i64> + Clone {
        self.lo..=self.hi()
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= self.lo && n <= self.hi()
    }

    pub fn rank(&self, n: i64) -> usize {
        if self.contains(n) {
            self.ranks[(n - self.lo) as usize]
        } else {
            0
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn entry(&self, n: i64) -> VObject {
        VObject::new(self.ring.clone(), self.rank(n))
    }

    /// `d_n: X_n → X_{n-1}`, zero outside the stored range.
    pub fn diff(&self, n: i64) -> Matrix {
        match self.diff_ref(n) {
            Some(d) => d.clone(),
            None => Matrix::zeros(self.ring.clone(), self.rank(n - 1), self.rank(n)),
        }
    }

    pub(crate) fn diff_ref(&self, n: i64) -> Option<&Matrix> {
        if n > self.lo && n <= self.hi() {
            Some(&self.diffs[(n - self.lo - 1) as usize])
        } else {
            None
        }
    }

    /// Every entry has rank zero.
    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Same complex over a window enlarged to contain `[lo, hi]`.
    pub fn pad_to(&self, lo: i64, hi: i64) -> ChainComplex {
        if hi < lo {
            return self.clone();
        }
        let (lo, hi) = if self.is_empty() {
            (lo, hi)
        } else {
            (lo.min(self.lo), hi.max(self.hi()))
        };
        let ranks: Vec<usize> = (lo..=hi).map(|n| self.rank(n)).collect();
        let diffs = (lo + 1..=hi).map(|n| self.diff(n)).collect();
        ChainComplex {
            ring: self.ring.clone(),
            lo,
            ranks,
            diffs,
        }
    }
}

impl fmt::Display for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .degrees()
            .rev()
            .map(|n| format!("{}^{}[{}]", self.ring, self.rank(n), n))
            .collect();
        write!(f, "{}", parts.join(" -> "))
    }
}

/// A degree-zero chain map. `components[k]` is `f_{lo+k}` for the source
/// window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: Vec<Matrix>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: Vec<Matrix>,
    ) -> Result<Self> {
        let f = ChainMap::from_parts(source, target, components)?;
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn from_parts(
        source: ChainComplex,
        target: ChainComplex,
        components: Vec<Matrix>,
    ) -> Result<Self> {
        source.ring.ensure_same(&target.ring)?;
        if components.len() != source.len() {
            return Err(Error::shape(format!(
                "chain map needs {} components, got {}",
                source.len(),
                components.len()
            )));
        }
        for (n, c) in source.degrees().zip(&components) {
            source.ring.ensure_same(c.ring())?;
            if c.shape() != (target.rank(n), source.rank(n)) {
                return Err(Error::DimensionMismatch {
                    op: "chain map component",
                    left: (target.rank(n), source.rank(n)),
                    right: c.shape(),
                });
            }
        }
        Ok(ChainMap {
            source,
            target,
            components,
        })
    }

    /// Degrees at which the chain-map square fails.
    pub fn failing_degrees(&self) -> Result<Vec<i64>> {
        let mut bad = Vec::new();
        for n in self.source.degrees() {
            let lhs = self.target.diff(n).matmul(&self.component(n))?;
            let rhs = self.component(n - 1).matmul(&self.source.diff(n))?;
            if lhs != rhs {
                bad.push(n);
            }
        }
        Ok(bad)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match self.failing_degrees()?.first() {
            Some(&degree) => Err(Error::NotAChainMap { degree }),
            None => Ok(()),
        }
    }

    pub fn identity(x: &ChainComplex) -> Self {
        let components = x
            .degrees()
            .map(|n| Matrix::identity(x.ring.clone(), x.rank(n)))
            .collect();
        ChainMap {
            source: x.clone(),
            target: x.clone(),
            components,
        }
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Self {
        let components = source
            .degrees()
            .map(|n| Matrix::zeros(source.ring.clone(), target.rank(n), source.rank(n)))
            .collect();
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            components,
        }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn ring(&self) -> &RingSpec {
        &self.source.ring
    }

    pub fn component(&self, n: i64) -> Matrix {
        match self.component_ref(n) {
            Some(c) => c.clone(),
            None => Matrix::zeros(
                self.source.ring.clone(),
                self.target.rank(n),
                self.source.rank(n),
            ),
        }
    }

    pub(crate) fn component_ref(&self, n: i64) -> Option<&Matrix> {
        if self.source.contains(n) {
            Some(&self.components[(n - self.source.lo) as usize])
        } else {
            None
        }
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &ChainMap) -> Result<ChainMap> {
        if f.target != self.source {
            return Err(Error::shape("chain maps are not composable"));
        }
        let components = f
            .source
            .degrees()
            .map(|n| self.component(n).matmul(&f.component(n)))
            .collect::<Result<_>>()?;
        Ok(ChainMap {
            source: f.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    fn zip(
        &self,
        other: &ChainMap,
        f: impl Fn(&Matrix, &Matrix) -> Result<Matrix>,
    ) -> Result<ChainMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::shape("chain maps have different source or target"));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(ChainMap {
            components,
            ..self.clone()
        })
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap> {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> ChainMap {
        ChainMap {
            components: self.components.iter().map(Matrix::neg).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    /// Degreewise inverse of an isomorphism.
    pub fn inverse(&self) -> Result<ChainMap> {
        let mut components = Vec::with_capacity(self.target.len());
        for n in self.target.degrees() {
            if self.target.rank(n) != self.source.rank(n) {
                return Err(Error::NotInvertible(self.ring().clone()));
            }
            components.push(self.component(n).inverse()?);
        }
        Ok(ChainMap {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_term(ring: RingSpec, m: i64) -> ChainComplex {
        // ring --m--> ring in degrees 1, 0
        ChainComplex::new(
            ring.clone(),
            0,
            vec![1, 1],
            vec![Matrix::from_rows(ring, &[&[m]])],
        )
        .unwrap()
    }

    #[test]
    fn rejects_nonzero_square() {
        let z = RingSpec::Integers;
        let d = Matrix::from_rows(z.clone(), &[&[1]]);
        let err = ChainComplex::new(z, 0, vec![1, 1, 1], vec![d.clone(), d]).unwrap_err();
        assert_eq!(err, Error::NotAComplex { degree: 2 });
    }

    #[test]
    fn differentials_outside_window_are_zero() {
        let x = two_term(RingSpec::Integers, 3);
        assert_eq!(x.diff(1), Matrix::from_rows(RingSpec::Integers, &[&[3]]));
        assert_eq!(x.diff(0).shape(), (0, 1));
        assert_eq!(x.diff(2).shape(), (1, 0));
        assert_eq!(x.rank(7), 0);
    }

    #[test]
    fn chain_map_square_is_checked() {
        let x = two_term(RingSpec::Integers, 2);
        let bad = vec![
            Matrix::from_rows(RingSpec::Integers, &[&[1]]),
            Matrix::from_rows(RingSpec::Integers, &[&[0]]),
        ];
        let err = ChainMap::new(x.clone(), x.clone(), bad).unwrap_err();
        assert_eq!(err, Error::NotAChainMap { degree: 1 });
        assert!(ChainMap::identity(&x).validate().is_ok());
    }

    #[test]
    fn padding_keeps_the_complex() {
        let x = two_term(RingSpec::Rationals, 5);
        let p = x.pad_to(-2, 3);
        assert_eq!(p.window(), (-2, 3));
        assert_eq!(p.diff(1), x.diff(1));
        assert!(p.validate().is_ok());
    }
}
