//! Seeded random instances for property runs. Everything is driven by a
//! caller-supplied RNG so runs are reproducible from a seed.

use rand::Rng;

use crate::base::VObject;
use crate::chain::{chain_map_basis, ChainComplex, ChainMap};
use crate::derived::functor_chain_map_basis;
use crate::dg::{FunctorComplex, FunctorComplexMap};
use crate::enriched::catalog::thin;
use crate::enriched::{
    check_category_axioms, representable, EnrichedNat, VCategory, VFunctor, VNat,
};
use crate::error::Result;
use crate::functor_cat::{hom_end, oslash, pointwise_cokernel, pointwise_sum};
use crate::linalg::{Matrix, RingSpec, Scalar};

pub fn random_scalar<R: Rng>(rng: &mut R, ring: &RingSpec) -> Scalar {
    match ring {
        RingSpec::PrimeField(p) => ring.from_i64(rng.random_range(0..*p as i64)),
        RingSpec::Integers => ring.from_i64(rng.random_range(-2..=2)),
        RingSpec::Rationals => {
            let num = rng.random_range(-3..=3i64);
            let den = rng.random_range(1..=2i64);
            Scalar::new(num.into(), den.into())
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, ring: &RingSpec, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| random_scalar(rng, ring)).collect();
    Matrix::new(ring.clone(), rows, cols, data).expect("canonical scalars")
}

/// Random linear combination of the columns of `basis`.
fn combine<R: Rng>(rng: &mut R, basis: &Matrix) -> Matrix {
    let coeffs = random_matrix(rng, basis.ring(), basis.cols(), 1);
    basis.matmul(&coeffs).expect("shapes agree")
}

/// A bounded complex with `len ≤ max_len` degrees starting in `[-2, 2]`
/// and ranks `≤ max_rank`. Each differential is a random map into the
/// cycles of the one below it.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    ring: &RingSpec,
    max_len: usize,
    max_rank: usize,
) -> ChainComplex {
    let len = rng.random_range(1..=max_len.max(1));
    let lo = rng.random_range(-2..=2);
    let ranks: Vec<usize> = (0..len).map(|_| rng.random_range(0..=max_rank)).collect();
    let mut diffs: Vec<Matrix> = Vec::with_capacity(len.saturating_sub(1));
    for k in 1..len {
        let below = if k == 1 {
            Matrix::identity(ring.clone(), ranks[0])
        } else {
            diffs[k - 2].kernel_basis()
        };
        let coeffs = random_matrix(rng, ring, below.cols(), ranks[k]);
        diffs.push(below.matmul(&coeffs).expect("shapes agree"));
    }
    ChainComplex::new(ring.clone(), lo, ranks, diffs).expect("differentials square to zero")
}

/// Random chain map `X → Y`, a combination of a basis of the cycles.
pub fn random_chain_map<R: Rng>(
    rng: &mut R,
    x: &ChainComplex,
    y: &ChainComplex,
) -> Result<ChainMap> {
    let basis = chain_map_basis(x, y)?;
    let mut f = ChainMap::zero(x, y);
    for b in basis {
        let s = random_scalar(rng, x.ring());
        let comps = b
            .components()
            .iter()
            .map(|m| m.scale(&s))
            .collect::<Result<Vec<_>>>()?;
        f = f.add(&ChainMap::new(x.clone(), y.clone(), comps)?)?;
    }
    Ok(f)
}

/// A thin category on `n` objects with random support and composition
/// scalars, resampled until the axioms hold. Falls back to all composites
/// `1` on a transitively closed support.
pub fn random_thin_category<R: Rng>(rng: &mut R, ring: &RingSpec, n: usize) -> VCategory {
    let names: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    for _ in 0..32 {
        let support: Vec<bool> = (0..n * n)
            .map(|i| i / n == i % n || rng.random_bool(0.4))
            .collect();
        let scalars: Vec<i64> = (0..n * n * n)
            .map(|_| match ring {
                RingSpec::PrimeField(p) => rng.random_range(0..*p as i64),
                _ => rng.random_range(-1..=1),
            })
            .collect();
        let Ok(cat) = thin(ring, &refs, &support, |a, b, c| {
            scalars[(a * n + b) * n + c]
        }) else {
            continue;
        };
        if check_category_axioms(&cat).is_ok_and(|r| r.is_ok()) {
            return cat;
        }
    }
    thin(
        ring,
        &refs,
        &(0..n * n).map(|i| i / n <= i % n).collect::<Vec<_>>(),
        |_, _, _| 1,
    )
    .expect("upper triangular order is a category")
}

/// A sum of up to `max_terms` representables, each tensored with `e`.
pub fn random_free_functor<R: Rng>(
    rng: &mut R,
    cat: &VCategory,
    max_terms: usize,
) -> Result<VFunctor> {
    let k = rng.random_range(0..=max_terms);
    let parts = (0..k)
        .map(|_| representable(cat, rng.random_range(0..cat.len())))
        .collect::<Result<Vec<_>>>()?;
    Ok(pointwise_sum(cat, &parts)?.sum)
}

pub fn random_nat<R: Rng>(rng: &mut R, x: &VFunctor, y: &VFunctor) -> Result<VNat> {
    let end = hom_end(x, y)?;
    end.to_nat(x, y, &random_matrix(rng, x.source().ring(), end.rank(), 1))
}

/// Either a free functor or the cokernel of a random map between two of
/// them; torsion cokernels over the integers fall back to the free one.
pub fn random_functor<R: Rng>(rng: &mut R, cat: &VCategory, max_terms: usize) -> Result<VFunctor> {
    let y = random_free_functor(rng, cat, max_terms)?;
    if rng.random_bool(0.5) {
        return Ok(y);
    }
    let x = random_free_functor(rng, cat, max_terms)?;
    let alpha = random_nat(rng, &x, &y)?;
    match pointwise_cokernel(&alpha) {
        Ok((q, _)) => Ok(q),
        Err(_) => Ok(y),
    }
}

/// `X ⊘ A` for a random free functor and `rank(A) ≤ max_rank`.
pub fn random_tensored_functor<R: Rng>(
    rng: &mut R,
    cat: &VCategory,
    max_rank: usize,
) -> Result<VFunctor> {
    let x = random_free_functor(rng, cat, 1)?;
    oslash(
        &x,
        &VObject::new(cat.ring().clone(), rng.random_range(0..=max_rank)),
    )
}

/// A complex of free functors with `len ≤ max_len` levels of at most
/// `max_terms` representable summands. Each differential is a random
/// element of the kernel of composition with the one below.
pub fn random_functor_complex<R: Rng>(
    rng: &mut R,
    cat: &VCategory,
    max_len: usize,
    max_terms: usize,
) -> Result<FunctorComplex> {
    let len = rng.random_range(1..=max_len.max(1));
    let lo = rng.random_range(-1..=1);
    let levels = (0..len)
        .map(|_| random_free_functor(rng, cat, max_terms))
        .collect::<Result<Vec<_>>>()?;
    let mut diffs: Vec<VNat> = Vec::with_capacity(len.saturating_sub(1));
    for k in 1..len {
        let (src, tgt) = (&levels[k], &levels[k - 1]);
        let end = hom_end(src, tgt)?;
        let coords = if k == 1 {
            Matrix::identity(cat.ring().clone(), end.rank())
        } else {
            let below = &diffs[k - 2];
            let far = hom_end(src, below.target())?;
            let cols = (0..end.rank())
                .map(|j| {
                    let nat = end.to_nat(
                        src,
                        tgt,
                        &Matrix::identity(cat.ring().clone(), end.rank()).column_vec(j),
                    )?;
                    Ok(far.nat_to_family(&below.compose(&nat)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Matrix::hstack(cat.ring(), far.ambient, &cols)?.kernel_basis()
        };
        let v = combine(rng, &coords);
        diffs.push(end.to_nat(src, tgt, &v)?);
    }
    FunctorComplex::new(cat.clone(), lo, levels, diffs)
}

/// Random map of functor complexes, a combination of a basis of the
/// degree-zero cycles of the Hom complex.
pub fn random_functor_complex_map<R: Rng>(
    rng: &mut R,
    x: &FunctorComplex,
    y: &FunctorComplex,
) -> Result<FunctorComplexMap> {
    let basis = functor_chain_map_basis(x, y)?;
    let cat = x.category();
    let degrees: Vec<i64> = x.degrees().collect();
    let mut comps: Vec<VNat> = degrees
        .iter()
        .map(|&p| EnrichedNat::zero(&x.level(p), &y.level(p)))
        .collect::<Result<_>>()?;
    for b in basis {
        let s = random_scalar(rng, cat.ring());
        for (k, &p) in degrees.iter().enumerate() {
            let scaled = b
                .component(p)
                .components()
                .iter()
                .map(|m| m.scale(&s))
                .collect::<Result<Vec<_>>>()?;
            let sum = comps[k]
                .components()
                .iter()
                .zip(&scaled)
                .map(|(u, v)| u.add(v))
                .collect::<Result<Vec<_>>>()?;
            comps[k] = EnrichedNat::new(x.level(p), y.level(p), sum)?;
        }
    }
    FunctorComplexMap::new(x.clone(), y.clone(), comps)
}
