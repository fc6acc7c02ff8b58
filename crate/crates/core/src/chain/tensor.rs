use super::{ChainComplex, ChainMap};
use crate::base::swap_matrix;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Block {
    pub p: i64,
    pub q: i64,
    pub offset: usize,
    pub size: usize,
}

pub(crate) fn find(blocks: &[Block], p: i64) -> Option<&Block> {
    blocks.iter().find(|b| b.p == p)
}

/// Summands `X_p ⊗ Y_{n-p}` of `(X ⊙ Y)_n`, `p` decreasing over the window
/// of `X`.
pub(crate) fn tensor_blocks(x: &ChainComplex, y: &ChainComplex, n: i64) -> Vec<Block> {
    let mut offset = 0;
    let mut out = Vec::with_capacity(x.len());
    for p in x.degrees().rev() {
        let q = n - p;
        let size = x.rank(p) * y.rank(q);
        out.push(Block { p, q, offset, size });
        offset += size;
    }
    out
}

fn total(blocks: &[Block]) -> usize {
    blocks.iter().map(|b| b.size).sum()
}

fn window(x: &ChainComplex, y: &ChainComplex) -> Option<(i64, i64)> {
    if x.is_empty() || y.is_empty() {
        None
    } else {
        Some((x.lo() + y.lo(), x.hi() + y.hi()))
    }
}

/// `X ⊙ Y` with `d = d^X ⊗ 1 + (-1)^p 1 ⊗ d^Y` on `X_p ⊗ Y_q`.
pub fn tensor_complex(x: &ChainComplex, y: &ChainComplex) -> Result<ChainComplex> {
    x.ring().ensure_same(y.ring())?;
    let ring = x.ring().clone();
    let Some((lo, hi)) = window(x, y) else {
        return Ok(ChainComplex::zero(ring));
    };
    let layout: Vec<Vec<Block>> = (lo..=hi).map(|n| tensor_blocks(x, y, n)).collect();
    let ranks = layout.iter().map(|b| total(b)).collect();
    let mut diffs = Vec::with_capacity(layout.len().saturating_sub(1));
    for n in lo + 1..=hi {
        let src = &layout[(n - lo) as usize];
        let tgt = &layout[(n - lo - 1) as usize];
        let mut d = Matrix::zeros(ring.clone(), total(tgt), total(src));
        for b in src.iter().filter(|b| b.size > 0) {
            if let Some(t) = find(tgt, b.p - 1).filter(|t| t.size > 0) {
                let eye = Matrix::identity(ring.clone(), y.rank(b.q));
                d.set_block(t.offset, b.offset, &x.diff(b.p).kronecker(&eye)?);
            }
            if let Some(t) = find(tgt, b.p).filter(|t| t.size > 0) {
                let eye = Matrix::identity(ring.clone(), x.rank(b.p));
                let m = eye.kronecker(&y.diff(b.q))?.signed(b.p);
                d.add_block(t.offset, b.offset, &m);
            }
        }
        diffs.push(d);
    }
    ChainComplex::from_parts(ring, lo, ranks, diffs)
}

/// `f ⊙ g: X ⊙ Y → X' ⊙ Y'`, `f_p ⊗ g_q` on each summand.
pub fn tensor_chainmap(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
    let source = tensor_complex(f.source(), g.source())?;
    let target = tensor_complex(f.target(), g.target())?;
    let ring = source.ring().clone();
    let mut components = Vec::with_capacity(source.len());
    for n in source.degrees() {
        let sb = tensor_blocks(f.source(), g.source(), n);
        let tb = tensor_blocks(f.target(), g.target(), n);
        let mut c = Matrix::zeros(ring.clone(), target.rank(n), source.rank(n));
        for b in sb.iter().filter(|b| b.size > 0) {
            if let Some(t) = find(&tb, b.p).filter(|t| t.size > 0) {
                let m = f.component(b.p).kronecker(&g.component(b.q))?;
                c.set_block(t.offset, b.offset, &m);
            }
        }
        components.push(c);
    }
    ChainMap::from_parts(source, target, components)
}

/// `σ: X ⊙ Y → Y ⊙ X`, `(-1)^{pq}` times the swap on `X_p ⊗ Y_q`.
pub fn symmetry_chain(x: &ChainComplex, y: &ChainComplex) -> Result<ChainMap> {
    let source = tensor_complex(x, y)?;
    let target = tensor_complex(y, x)?;
    let ring = source.ring().clone();
    let mut components = Vec::with_capacity(source.len());
    for n in source.degrees() {
        let tb = tensor_blocks(y, x, n);
        let mut c = Matrix::zeros(ring.clone(), target.rank(n), source.rank(n));
        for b in tensor_blocks(x, y, n).iter().filter(|b| b.size > 0) {
            let t = find(&tb, b.q).expect("summand present in both orders");
            let m = swap_matrix(&ring, x.rank(b.p), y.rank(b.q)).signed(b.p * b.q);
            c.set_block(t.offset, b.offset, &m);
        }
        components.push(c);
    }
    ChainMap::from_parts(source, target, components)
}

/// `α: (X ⊙ Y) ⊙ Z → X ⊙ (Y ⊙ Z)`, a signless regrouping of summands.
pub fn assoc_chain(x: &ChainComplex, y: &ChainComplex, z: &ChainComplex) -> Result<ChainMap> {
    let xy = tensor_complex(x, y)?;
    let yz = tensor_complex(y, z)?;
    let source = tensor_complex(&xy, z)?;
    let target = tensor_complex(x, &yz)?;
    let ring = source.ring().clone();
    let mut components = Vec::with_capacity(source.len());
    for n in source.degrees() {
        let tb = tensor_blocks(x, &yz, n);
        let mut c = Matrix::zeros(ring.clone(), target.rank(n), source.rank(n));
        for outer in tensor_blocks(&xy, z, n).iter().filter(|b| b.size > 0) {
            let (s, k) = (outer.p, outer.q);
            let rz = z.rank(k);
            for inner in tensor_blocks(x, y, s).iter().filter(|b| b.size > 0) {
                let (i, j) = (inner.p, inner.q);
                let (rx, ry) = (x.rank(i), y.rank(j));
                let t_outer = find(&tb, i).expect("regrouped summand");
                let t_inner = *find(&tensor_blocks(y, z, j + k), j).expect("inner summand");
                let r_yz = yz.rank(j + k);
                for a in 0..rx {
                    for b in 0..ry {
                        for e in 0..rz {
                            let col = outer.offset + (inner.offset + a * ry + b) * rz + e;
                            let row = t_outer.offset + a * r_yz + t_inner.offset + b * rz + e;
                            c.set_canonical(row, col, ring.one());
                        }
                    }
                }
            }
        }
        components.push(c);
    }
    ChainMap::from_parts(source, target, components)
}

/// `λ: ε ⊙ X → X`.
pub fn left_unit_chain(x: &ChainComplex) -> Result<ChainMap> {
    let eps = ChainComplex::unit(x.ring().clone());
    unit_iso(tensor_complex(&eps, x)?, x)
}

/// `ρ: X ⊙ ε → X`.
pub fn right_unit_chain(x: &ChainComplex) -> Result<ChainMap> {
    let eps = ChainComplex::unit(x.ring().clone());
    unit_iso(tensor_complex(x, &eps)?, x)
}

fn unit_iso(source: ChainComplex, x: &ChainComplex) -> Result<ChainMap> {
    if source.window() != x.window() && !x.is_empty() {
        return Err(Error::shape("unitor window mismatch"));
    }
    let components = source
        .degrees()
        .map(|n| Matrix::identity(x.ring().clone(), x.rank(n)))
        .collect();
    ChainMap::from_parts(source, x.clone(), components)
}
