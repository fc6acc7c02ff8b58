//! Derived Homs out of bounded complexes of frees, the generator comparison
//! `D[C,V]((c,-) ⊘ Q, X) ≅ D(V)(Q, X(c))`, compactness and acyclicity.

use crate::base::VMorphism;
use crate::chain::{
    hom_blocks, hom_chainmap, hom_complex, homology, mapping_cone, ChainComplex, ChainMap,
};
use crate::dg::{functor_complex_sum, functor_cone, FunctorComplex, FunctorComplexMap};
use crate::enriched::{representable, EnrichedNat, VCategory};
use crate::error::{Error, Result};
use crate::functor_cat::{end_equalizer, oslash};
use crate::linalg::{Matrix, PresentedModule};
use crate::report::Report;

pub const SCOPE_NOTE: &str = "scope: bounded complexes of free modules and finite direct sums only";

/// `H_n [Q, X]`. Bounded complexes of frees are K-projective, so this is
/// the derived Hom.
pub fn derived_hom_v(q: &ChainComplex, x: &ChainComplex, n: i64) -> Result<PresentedModule> {
    homology(&hom_complex(q, x)?, n)
}

/// `(c, -) ⊘ Q`, levelwise, with differentials `1 ⊘ d^Q`.
pub fn generator_object(cat: &VCategory, c: usize, q: &ChainComplex) -> Result<FunctorComplex> {
    if c >= cat.len() {
        return Err(Error::UnknownObject(format!("#{c}")));
    }
    cat.ring().ensure_same(q.ring())?;
    if q.is_empty() {
        return Ok(FunctorComplex::zero(cat));
    }
    let r = representable(cat, c)?;
    let levels = q
        .degrees()
        .map(|p| oslash(&r, &q.entry(p)))
        .collect::<Result<Vec<_>>>()?;
    let ring = cat.ring().clone();
    let diffs = q
        .degrees()
        .skip(1)
        .map(|p| {
            let (src, tgt) = (
                &levels[(p - q.lo()) as usize],
                &levels[(p - q.lo() - 1) as usize],
            );
            let comps = (0..cat.len())
                .map(|d| {
                    let h = Matrix::identity(ring.clone(), cat.hom(c, d).rank);
                    VMorphism::new(
                        src.value(d).clone(),
                        tgt.value(d).clone(),
                        h.kronecker(&q.diff(p))?,
                    )
                })
                .collect::<Result<_>>()?;
            EnrichedNat::new(src.clone(), tgt.clone(), comps)
        })
        .collect::<Result<Vec<_>>>()?;
    FunctorComplex::new(cat.clone(), q.lo(), levels, diffs)
}

pub fn evaluate_complex(x: &FunctorComplex, c: usize) -> Result<ChainComplex> {
    x.at(c)
}

/// The Hom complex of `Ch[C, V]`. Degree `m` sits inside the product over
/// objects `c` of `[P(c), X(c)]_m`; `bases[m - lo]` spans the natural
/// families there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorHomComplex {
    pub complex: ChainComplex,
    pub bases: Vec<Matrix>,
    /// `[P(c), X(c)]` for each object.
    pub pointwise: Vec<ChainComplex>,
}

impl FunctorHomComplex {
    fn offsets(&self, m: i64) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.pointwise.len());
        let mut off = 0;
        for h in &self.pointwise {
            out.push(off);
            off += h.rank(m);
        }
        out
    }

    fn ambient(&self, m: i64) -> usize {
        self.pointwise.iter().map(|h| h.rank(m)).sum()
    }

    pub fn basis(&self, m: i64) -> Matrix {
        if self.complex.contains(m) {
            self.bases[(m - self.complex.lo()) as usize].clone()
        } else {
            Matrix::zeros(self.complex.ring().clone(), self.ambient(m), 0)
        }
    }
}

fn end_constraints(
    p: &FunctorComplex,
    x: &FunctorComplex,
    m: i64,
    pointwise: &[ChainComplex],
) -> Result<Matrix> {
    let n = p.category().len();
    let ring = p.category().ring().clone();
    let pc: Vec<ChainComplex> = (0..n).map(|c| p.at(c)).collect::<Result<_>>()?;
    let xc: Vec<ChainComplex> = (0..n).map(|c| x.at(c)).collect::<Result<_>>()?;
    let mut amb_off = Vec::with_capacity(n);
    let mut cols = 0;
    for h in pointwise {
        amb_off.push(cols);
        cols += h.rank(m);
    }
    let mut parts = Vec::new();
    for deg in p.degrees() {
        let e = end_equalizer(&p.level(deg), &x.level(deg + m))?;
        let mut lifted = Matrix::zeros(ring.clone(), e.rows(), cols);
        let mut local = 0;
        for c in 0..n {
            let size = pc[c].rank(deg) * xc[c].rank(deg + m);
            if size > 0 {
                let blk = hom_blocks(&pc[c], &xc[c], m)
                    .into_iter()
                    .find(|b| b.p == deg)
                    .expect("factor present in the window");
                lifted.set_block(
                    0,
                    amb_off[c] + blk.offset,
                    &e.block(0, e.rows(), local, size),
                );
            }
            local += size;
        }
        parts.push(lifted);
    }
    Matrix::vstack(&ring, cols, &parts)
}

/// Hom complex between two functor complexes.
pub fn functor_hom_complex(p: &FunctorComplex, x: &FunctorComplex) -> Result<FunctorHomComplex> {
    if p.category() != x.category() {
        return Err(Error::shape("complexes on different categories"));
    }
    let cat = p.category();
    let ring = cat.ring().clone();
    let pointwise = (0..cat.len())
        .map(|c| hom_complex(&p.at(c)?, &x.at(c)?))
        .collect::<Result<Vec<_>>>()?;
    if p.is_empty() || x.is_empty() {
        return Ok(FunctorHomComplex {
            complex: ChainComplex::zero(ring),
            bases: Vec::new(),
            pointwise,
        });
    }
    let (lo, hi) = (x.lo() - p.hi(), x.hi() - p.lo());
    let bases = (lo..=hi)
        .map(|m| Ok(end_constraints(p, x, m, &pointwise)?.kernel_basis()))
        .collect::<Result<Vec<_>>>()?;
    let diffs = (lo + 1..=hi)
        .map(|m| {
            let blocks: Vec<Matrix> = pointwise.iter().map(|h| h.diff(m)).collect();
            let d = Matrix::block_diag(&ring, &blocks)?;
            let (src, tgt) = (&bases[(m - lo) as usize], &bases[(m - lo - 1) as usize]);
            tgt.solve(&d.matmul(src)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let ranks = bases.iter().map(Matrix::cols).collect();
    Ok(FunctorHomComplex {
        complex: ChainComplex::new(ring, lo, ranks, diffs)?,
        bases,
        pointwise,
    })
}

impl FunctorHomComplex {
    /// Reads an ambient degree-zero vector as a map of functor complexes.
    pub fn to_map(
        &self,
        x: &FunctorComplex,
        y: &FunctorComplex,
        v: &Matrix,
    ) -> Result<FunctorComplexMap> {
        let cat = x.category();
        let offs = self.offsets(0);
        let xs: Vec<ChainComplex> = (0..cat.len()).map(|c| x.at(c)).collect::<Result<_>>()?;
        let ys: Vec<ChainComplex> = (0..cat.len()).map(|c| y.at(c)).collect::<Result<_>>()?;
        let components = x
            .degrees()
            .map(|p| {
                let comps = (0..cat.len())
                    .map(|c| {
                        let (rx, ry) = (xs[c].rank(p), ys[c].rank(p));
                        let m = match hom_blocks(&xs[c], &ys[c], 0).into_iter().find(|b| b.p == p) {
                            Some(b) if !ys[c].is_empty() => v
                                .block(offs[c] + b.offset, b.size, 0, 1)
                                .unvectorize(ry, rx)?,
                            _ => Matrix::zeros(cat.ring().clone(), ry, rx),
                        };
                        VMorphism::new(x.level(p).value(c).clone(), y.level(p).value(c).clone(), m)
                    })
                    .collect::<Result<_>>()?;
                EnrichedNat::new(x.level(p), y.level(p), comps)
            })
            .collect::<Result<Vec<_>>>()?;
        FunctorComplexMap::new(x.clone(), y.clone(), components)
    }
}

/// A basis of the degree-zero cycles of the Hom complex, as maps.
pub fn functor_chain_map_basis(
    x: &FunctorComplex,
    y: &FunctorComplex,
) -> Result<Vec<FunctorComplexMap>> {
    let fh = functor_hom_complex(x, y)?;
    if !fh.complex.contains(0) {
        return Ok(Vec::new());
    }
    let cycles = fh.complex.diff(0).kernel_basis();
    let ambient = fh.basis(0).matmul(&cycles)?;
    (0..ambient.cols())
        .map(|j| fh.to_map(x, y, &ambient.column_vec(j)))
        .collect()
}

/// `H_n` of the Hom complex from `(c, -) ⊘ Q` to `X`.
pub fn derived_hom_functor_cat(
    cat: &VCategory,
    c: usize,
    q: &ChainComplex,
    x: &FunctorComplex,
    n: i64,
) -> Result<PresentedModule> {
    let p = generator_object(cat, c, q)?;
    homology(&functor_hom_complex(&p, x)?.complex, n)
}

/// `α ↦ α_c ∘ (1_c ⊗ 1)` from `Hom((c, -) ⊘ Q, X)` to `[Q, X(c)]`.
fn comparison(
    cat: &VCategory,
    c: usize,
    q: &ChainComplex,
    p: &FunctorComplex,
    x: &FunctorComplex,
    fh: &FunctorHomComplex,
) -> Result<ChainMap> {
    let ring = cat.ring().clone();
    let (pc, xc) = (p.at(c)?, x.at(c)?);
    let target = hom_complex(q, &xc)?;
    let unit = &cat.unit(c).matrix;
    let comps = fh
        .complex
        .degrees()
        .map(|m| {
            let basis = fh.basis(m);
            let off = fh.offsets(m)[c];
            let src_blocks = hom_blocks(&pc, &xc, m);
            let tgt_blocks = hom_blocks(q, &xc, m);
            let mut out = Matrix::zeros(ring.clone(), target.rank(m), basis.cols());
            for j in 0..basis.cols() {
                for (sb, tb) in src_blocks.iter().zip(&tgt_blocks) {
                    if sb.size == 0 || tb.size == 0 {
                        continue;
                    }
                    let alpha = basis
                        .block(off + sb.offset, sb.size, j, 1)
                        .unvectorize(xc.rank(sb.q), pc.rank(sb.p))?;
                    let restrict = unit.kronecker(&Matrix::identity(ring.clone(), q.rank(sb.p)))?;
                    out.set_block(tb.offset, j, &alpha.matmul(&restrict)?.vectorize());
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    ChainMap::from_parts(fh.complex.clone(), target, comps)
}

/// `Hom(P, f)` restricted to natural families.
fn post_compose(
    fh: &FunctorHomComplex,
    fh2: &FunctorHomComplex,
    p: &FunctorComplex,
    f: &FunctorComplexMap,
) -> Result<ChainMap> {
    let ring = p.category().ring().clone();
    let pointwise = (0..p.category().len())
        .map(|c| hom_chainmap(&ChainMap::identity(&p.at(c)?), &f.at(c)?))
        .collect::<Result<Vec<_>>>()?;
    let comps = fh
        .complex
        .degrees()
        .map(|m| {
            let blocks: Vec<Matrix> = pointwise.iter().map(|h| h.component(m)).collect();
            let a = Matrix::block_diag(&ring, &blocks)?;
            fh2.basis(m).solve(&a.matmul(&fh.basis(m))?)
        })
        .collect::<Result<Vec<_>>>()?;
    ChainMap::from_parts(fh.complex.clone(), fh2.complex.clone(), comps)
}

/// Compares `D[C,V]((c,-) ⊘ Q, X)` with `D(V)(Q, X(c))` for every `n` in
/// `range`, checks that the comparison map is an isomorphism of complexes,
/// and, given `test: X → X'`, that it is natural in `X`.
pub fn natural_iso_check(
    cat: &VCategory,
    c: usize,
    q: &ChainComplex,
    x: &FunctorComplex,
    range: (i64, i64),
    test: Option<&FunctorComplexMap>,
) -> Result<Report> {
    let mut report = Report::new("generator natural isomorphism");
    report.note(SCOPE_NOTE);
    let p = generator_object(cat, c, q)?;
    if x.category() != cat {
        return Err(Error::shape("complex on a different category"));
    }
    let fh = functor_hom_complex(&p, x)?;
    let xc = x.at(c)?;
    let hq = hom_complex(q, &xc)?;
    for n in range.0..=range.1 {
        let lhs = homology(&fh.complex, n)?;
        let rhs = homology(&hq, n)?;
        if lhs != rhs {
            report.fail(
                "derived hom comparison",
                vec![format!("n={n}")],
                format!("functor side {lhs}, base side {rhs}"),
            );
        }
    }
    let phi = comparison(cat, c, q, &p, x, &fh)?;
    let bad = phi.failing_degrees()?;
    if !bad.is_empty() {
        report.fail(
            "comparison is a chain map",
            bad.iter().map(|d| format!("m={d}")).collect(),
            String::new(),
        );
    } else {
        for m in fh.complex.degrees() {
            let comp = phi.component(m);
            if !comp.is_square() || (comp.rows() > 0 && !comp.is_invertible()) {
                report.fail(
                    "comparison is invertible",
                    vec![format!("m={m}")],
                    format!("{} x {} component", comp.rows(), comp.cols()),
                );
            }
        }
    }
    if let Some(f) = test {
        if f.source() != x {
            return Err(Error::shape("test morphism does not start at X"));
        }
        let x2 = f.target();
        let fh2 = functor_hom_complex(&p, x2)?;
        let phi2 = comparison(cat, c, q, &p, x2, &fh2)?;
        let lhs = phi2.compose(&post_compose(&fh, &fh2, &p, f)?)?;
        let rhs = hom_chainmap(&ChainMap::identity(q), &f.at(c)?)?.compose(&phi)?;
        for m in fh.complex.degrees() {
            let res = lhs.component(m).sub(&rhs.component(m))?;
            if !res.is_zero() {
                report.fail("naturality in X", vec![format!("m={m}")], format!("{res}"));
            }
        }
    }
    Ok(report)
}

/// Induced map on `H_n` is an isomorphism, computed on cycle lattices.
fn induced_iso(f: &ChainMap, n: i64) -> Result<bool> {
    let (x, y) = (f.source(), f.target());
    let zx = x.diff(n).kernel_basis();
    let zy = y.diff(n).kernel_basis();
    let rx = zx.solve(&x.diff(n + 1))?;
    let ry = zy.solve(&y.diff(n + 1))?;
    let fz = zy.solve(&f.component(n).matmul(&zx)?)?;
    let ring = f.ring().clone();
    let both = Matrix::hstack(&ring, zy.cols(), &[fz.clone(), ry.clone()])?;
    // surjective: cycles of Y are images plus boundaries
    if both
        .solve(&Matrix::identity(ring.clone(), zy.cols()))
        .is_err()
    {
        return Ok(false);
    }
    // injective: cycles of X landing in boundaries are boundaries
    let k = both.kernel_basis();
    let u = k.block(0, fz.cols(), 0, k.cols());
    Ok(rx.solve(&u).is_ok())
}

/// Homology isomorphism in every degree.
pub fn is_quasi_iso(f: &ChainMap) -> Result<bool> {
    let (x, y) = (f.source(), f.target());
    let degrees: Vec<i64> = x.degrees().chain(y.degrees()).collect();
    let (Some(&lo), Some(&hi)) = (degrees.iter().min(), degrees.iter().max()) else {
        return Ok(true);
    };
    for n in lo..=hi {
        if !induced_iso(f, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_acyclic(x: &ChainComplex) -> Result<bool> {
    for n in x.degrees() {
        if !homology(x, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quasi-isomorphism via acyclicity of the mapping cone.
pub fn is_quasi_iso_via_cone(f: &ChainMap) -> Result<bool> {
    is_acyclic(&mapping_cone(f)?)
}

/// Pointwise quasi-isomorphism of functor complexes.
pub fn is_quasi_iso_functor(f: &FunctorComplexMap) -> Result<bool> {
    for c in 0..f.source().category().len() {
        if !is_quasi_iso(&f.at(c)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_quasi_iso_functor_via_cone(f: &FunctorComplexMap) -> Result<bool> {
    is_pointwise_acyclic(&functor_cone(f)?)
}

pub fn is_pointwise_acyclic(x: &FunctorComplex) -> Result<bool> {
    for c in 0..x.category().len() {
        if !is_acyclic(&x.at(c)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every `D[C,V]((c,-) ⊘ Q, X)_n` vanishes over all objects `c`,
/// all `Q` in `qs` and all `n` in `range`.
pub fn detect_acyclic(
    cat: &VCategory,
    x: &FunctorComplex,
    qs: &[ChainComplex],
    range: (i64, i64),
) -> Result<bool> {
    if qs.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for c in 0..cat.len() {
        for q in qs {
            let fh = functor_hom_complex(&generator_object(cat, c, q)?, x)?;
            for n in range.0..=range.1 {
                if !homology(&fh.complex, n)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `D((c,-) ⊘ Q, ⊕ X_i)_n` against `⊕ D((c,-) ⊘ Q, X_i)_n`.
pub fn compactness_check(
    cat: &VCategory,
    c: usize,
    q: &ChainComplex,
    xs: &[FunctorComplex],
    n: i64,
) -> Result<Report> {
    let mut report = Report::new("compactness of the generator");
    report.note(SCOPE_NOTE);
    let sum = functor_complex_sum(cat, xs)?;
    let lhs = derived_hom_functor_cat(cat, c, q, &sum, n)?;
    let parts = xs
        .iter()
        .map(|x| derived_hom_functor_cat(cat, c, q, x, n))
        .collect::<Result<Vec<_>>>()?;
    let rhs = PresentedModule::sum_all(cat.ring(), parts.iter())?;
    if lhs != rhs {
        report.fail(
            "hom out of the generator commutes with sums",
            vec![format!("n={n}")],
            format!("hom into the sum {lhs}, sum of homs {rhs}"),
        );
    }
    Ok(report)
}
