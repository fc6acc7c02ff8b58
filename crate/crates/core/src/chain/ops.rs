use super::{ChainComplex, ChainMap};
use crate::base::VObject;
use crate::error::Result;
use crate::linalg::{homology_at, Matrix, PresentedModule, RingSpec};

/// `H_n(X)` in invariant-factor form.
pub fn homology(x: &ChainComplex, n: i64) -> Result<PresentedModule> {
    homology_at(&x.diff(n + 1), &x.diff(n))
}

/// `X[k]_n = X_{n-k}` with differential `(-1)^k d`.
pub fn shift(x: &ChainComplex, k: i64) -> ChainComplex {
    ChainComplex {
        ring: x.ring.clone(),
        lo: x.lo + k,
        ranks: x.ranks.clone(),
        diffs: x.diffs.iter().map(|d| d.signed(k)).collect(),
    }
}

/// Degreewise direct sum over the union of the windows.
pub fn direct_sum(ring: &RingSpec, parts: &[ChainComplex]) -> Result<ChainComplex> {
    for p in parts {
        ring.ensure_same(p.ring())?;
    }
    let live: Vec<&ChainComplex> = parts.iter().filter(|p| !p.is_empty()).collect();
    if live.is_empty() {
        return Ok(ChainComplex::zero(ring.clone()));
    }
    let lo = live.iter().map(|p| p.lo()).min().unwrap();
    let hi = live.iter().map(|p| p.hi()).max().unwrap();
    let ranks = (lo..=hi)
        .map(|n| parts.iter().map(|p| p.rank(n)).sum())
        .collect();
    let diffs = (lo + 1..=hi)
        .map(|n| {
            let blocks: Vec<Matrix> = parts.iter().map(|p| p.diff(n)).collect();
            Matrix::block_diag(ring, &blocks)
        })
        .collect::<Result<_>>()?;
    ChainComplex::from_parts(ring.clone(), lo, ranks, diffs)
}

/// `cone(f)_n = X_{n-1} ⊕ Y_n` with `d = [[-d^X, 0], [f, d^Y]]`.
pub fn mapping_cone(f: &ChainMap) -> Result<ChainComplex> {
    let (x, y) = (f.source(), f.target());
    let ring = x.ring().clone();
    let sx = shift(x, 1);
    let (lo, hi) = match (sx.is_empty(), y.is_empty()) {
        (true, true) => return Ok(ChainComplex::zero(ring)),
        (true, false) => y.window(),
        (false, true) => sx.window(),
        (false, false) => (sx.lo().min(y.lo()), sx.hi().max(y.hi())),
    };
    let ranks = (lo..=hi).map(|n| x.rank(n - 1) + y.rank(n)).collect();
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let (xs, ys) = (x.rank(n - 1), y.rank(n));
        let (xt, yt) = (x.rank(n - 2), y.rank(n - 1));
        let mut d = Matrix::zeros(ring.clone(), xt + yt, xs + ys);
        d.set_block(0, 0, &x.diff(n - 1).neg());
        d.set_block(xt, 0, &f.component(n - 1));
        d.set_block(xt, xs, &y.diff(n));
        diffs.push(d);
    }
    ChainComplex::from_parts(ring, lo, ranks, diffs)
}

/// `g` in degrees `n` and `n - 1` joined by the identity.
pub fn disk_complex(g: &VObject, n: i64) -> ChainComplex {
    let ring = g.ring.clone();
    if g.rank == 0 {
        return ChainComplex::zero(ring);
    }
    ChainComplex {
        lo: n - 1,
        ranks: vec![g.rank, g.rank],
        diffs: vec![Matrix::identity(ring.clone(), g.rank)],
        ring,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn two_term(m: i64) -> ChainComplex {
        ChainComplex::new(z(), 0, vec![1, 1], vec![Matrix::from_rows(z(), &[&[m]])]).unwrap()
    }

    #[test]
    fn homology_of_multiplication_by_three() {
        let x = two_term(3);
        let h = homology(&x, 0).unwrap();
        assert_eq!(h.invariant_factors, vec![BigInt::from(3)]);
        assert!(homology(&x, 1).unwrap().is_zero());
        assert!(homology(&x, 5).unwrap().is_zero());
    }

    #[test]
    fn disks_are_acyclic() {
        let d = disk_complex(&VObject::new(z(), 2), 4);
        assert_eq!(d.window(), (3, 4));
        for n in 2..6 {
            assert!(homology(&d, n).unwrap().is_zero());
        }
        assert_eq!(
            disk_complex(&VObject::zero(z()), 1),
            ChainComplex::zero(z())
        );
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let x = two_term(2);
        let c = mapping_cone(&ChainMap::identity(&x)).unwrap();
        assert!(c.validate().is_ok());
        for n in -1..4 {
            assert!(homology(&c, n).unwrap().is_zero());
        }
    }

    #[test]
    fn shift_moves_homology() {
        let x = two_term(3);
        let s = shift(&x, -2);
        assert_eq!(s.window(), (-2, -1));
        assert_eq!(homology(&s, -2).unwrap(), homology(&x, 0).unwrap());
        assert_eq!(s.diff(-1), Matrix::from_rows(z(), &[&[3]]));
        assert_eq!(shift(&x, 1).diff(2), Matrix::from_rows(z(), &[&[-3]]));
    }

    #[test]
    fn direct_sum_adds_homology() {
        let s = direct_sum(&z(), &[two_term(2), shift(&two_term(3), 1)]).unwrap();
        assert!(s.validate().is_ok());
        assert_eq!(s.window(), (0, 2));
        assert_eq!(
            homology(&s, 0).unwrap().invariant_factors,
            vec![BigInt::from(2)]
        );
        assert_eq!(
            homology(&s, 1).unwrap().invariant_factors,
            vec![BigInt::from(3)]
        );
    }
}
