use super::tensor::{find, tensor_blocks, Block};
use super::{tensor_complex, ChainComplex, ChainMap};
use crate::base::{adjoint_inv_matrix, adjoint_matrix};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Factors `[X_p, Y_{p+n}]` of `Hom(X, Y)_n`, `p` increasing over the window
/// of `X`. `Block::q` holds `p + n`.
pub(crate) fn hom_blocks(x: &ChainComplex, y: &ChainComplex, n: i64) -> Vec<Block> {
    let mut offset = 0;
    let mut out = Vec::with_capacity(x.len());
    for p in x.degrees() {
        let q = p + n;
        let size = x.rank(p) * y.rank(q);
        out.push(Block { p, q, offset, size });
        offset += size;
    }
    out
}

fn total(blocks: &[Block]) -> usize {
    blocks.iter().map(|b| b.size).sum()
}

/// Internal Hom with `d(f)_p = [1, d^Y] ∘ f_p - (-1)^n [d^X_p, 1] ∘ f_{p-1}`.
pub fn hom_complex(x: &ChainComplex, y: &ChainComplex) -> Result<ChainComplex> {
    x.ring().ensure_same(y.ring())?;
    let ring = x.ring().clone();
    if x.is_empty() || y.is_empty() {
        return Ok(ChainComplex::zero(ring));
    }
    let (lo, hi) = (y.lo() - x.hi(), y.hi() - x.lo());
    let layout: Vec<Vec<Block>> = (lo..=hi).map(|n| hom_blocks(x, y, n)).collect();
    let ranks = layout.iter().map(|b| total(b)).collect();
    let mut diffs = Vec::with_capacity(layout.len().saturating_sub(1));
    for n in lo + 1..=hi {
        let src = &layout[(n - lo) as usize];
        let tgt = &layout[(n - lo - 1) as usize];
        let mut d = Matrix::zeros(ring.clone(), total(tgt), total(src));
        for t in tgt.iter().filter(|t| t.size > 0) {
            let p = t.p;
            if let Some(b) = find(src, p).filter(|b| b.size > 0) {
                let eye = Matrix::identity(ring.clone(), x.rank(p));
                d.set_block(t.offset, b.offset, &eye.kronecker(&y.diff(p + n))?);
            }
            if let Some(b) = find(src, p - 1).filter(|b| b.size > 0) {
                let eye = Matrix::identity(ring.clone(), y.rank(p + n - 1));
                let m = x.diff(p).transpose().kronecker(&eye)?.signed(n + 1);
                d.add_block(t.offset, b.offset, &m);
            }
        }
        diffs.push(d);
    }
    ChainComplex::from_parts(ring, lo, ranks, diffs)
}

/// `Hom(f', g): Hom(X, Y) → Hom(X', Y')` for `f': X' → X`, `g: Y → Y'`.
pub fn hom_chainmap(f_prime: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
    let (x, xp) = (f_prime.target(), f_prime.source());
    let (y, yp) = (g.source(), g.target());
    let source = hom_complex(x, y)?;
    let target = hom_complex(xp, yp)?;
    let ring = source.ring().clone();
    let mut components = Vec::with_capacity(source.len());
    for n in source.degrees() {
        let tb = hom_blocks(xp, yp, n);
        let mut c = Matrix::zeros(ring.clone(), target.rank(n), source.rank(n));
        for b in hom_blocks(x, y, n).iter().filter(|b| b.size > 0) {
            if let Some(t) = find(&tb, b.p).filter(|t| t.size > 0) {
                let m = f_prime
                    .component(b.p)
                    .transpose()
                    .kronecker(&g.component(b.q))?;
                c.set_block(t.offset, b.offset, &m);
            }
        }
        components.push(c);
    }
    ChainMap::from_parts(source, target, components)
}

/// Curries `k: X ⊙ Y → Z` to `X → Hom(Y, Z)`.
pub fn adjoint_chain(k: &ChainMap, x: &ChainComplex, y: &ChainComplex) -> Result<ChainMap> {
    if *k.source() != tensor_complex(x, y)? {
        return Err(Error::shape("adjoint_chain: source is not X ⊙ Y"));
    }
    let z = k.target();
    let target = hom_complex(y, z)?;
    let ring = x.ring().clone();
    let mut components = Vec::with_capacity(x.len());
    for p in x.degrees() {
        let mut c = Matrix::zeros(ring.clone(), target.rank(p), x.rank(p));
        for f in hom_blocks(y, z, p).iter().filter(|f| f.size > 0) {
            let q = f.p;
            let n = p + q;
            let sb = tensor_blocks(x, y, n);
            let s = find(&sb, p).expect("summand of X ⊙ Y");
            let kc = k.component_ref(n).expect("degree inside X ⊙ Y");
            let kpq = kc.block(0, z.rank(n), s.offset, s.size);
            c.set_block(
                f.offset,
                0,
                &adjoint_matrix(&kpq, x.rank(p), y.rank(q), z.rank(n)),
            );
        }
        components.push(c);
    }
    ChainMap::from_parts(x.clone(), target, components)
}

/// Uncurries `g: X → Hom(Y, Z)` to `X ⊙ Y → Z`.
pub fn adjoint_chain_inv(g: &ChainMap, y: &ChainComplex, z: &ChainComplex) -> Result<ChainMap> {
    if *g.target() != hom_complex(y, z)? {
        return Err(Error::shape("adjoint_chain_inv: target is not Hom(Y, Z)"));
    }
    let x = g.source();
    let source = tensor_complex(x, y)?;
    let ring = x.ring().clone();
    let mut components = Vec::with_capacity(source.len());
    for n in source.degrees() {
        let mut c = Matrix::zeros(ring.clone(), z.rank(n), source.rank(n));
        for b in tensor_blocks(x, y, n).iter().filter(|b| b.size > 0) {
            let (p, q) = (b.p, b.q);
            let hb = hom_blocks(y, z, p);
            let f = find(&hb, q).expect("factor of Hom(Y, Z)");
            if f.size == 0 {
                continue;
            }
            let gp = g.component_ref(p).expect("degree inside X");
            let part = gp.block(f.offset, f.size, 0, x.rank(p));
            c.set_block(
                0,
                b.offset,
                &adjoint_inv_matrix(&part, x.rank(p), y.rank(q), z.rank(n)),
            );
        }
        components.push(c);
    }
    ChainMap::from_parts(source, z.clone(), components)
}

/// `ev: Hom(A, B) ⊙ A → B`.
pub fn eval_chain(a: &ChainComplex, b: &ChainComplex) -> Result<ChainMap> {
    let h = hom_complex(a, b)?;
    let source = tensor_complex(&h, a)?;
    let ring = a.ring().clone();
    let mut components = Vec::with_capacity(source.len());
    for n in source.degrees() {
        let mut c = Matrix::zeros(ring.clone(), b.rank(n), source.rank(n));
        for blk in tensor_blocks(&h, a, n).iter().filter(|b| b.size > 0) {
            let (t, s) = (blk.p, blk.q);
            let ra = a.rank(s);
            let rb = b.rank(n);
            let f = *find(&hom_blocks(a, b, t), s).expect("factor of Hom(A, B)");
            for i in 0..ra {
                for j in 0..rb {
                    let hidx = f.offset + i * rb + j;
                    c.set_canonical(j, blk.offset + hidx * ra + i, ring.one());
                }
            }
        }
        components.push(c);
    }
    ChainMap::from_parts(source, b.clone(), components)
}

/// Internal composition `Hom(A, B) ⊙ Hom(B, C) → Hom(A, C)`, `f ⊗ g ↦ g ∘ f`
/// with the Koszul sign `(-1)^{pq}` on the `(p, q)` summand.
pub fn compose_hom(a: &ChainComplex, b: &ChainComplex, c: &ChainComplex) -> Result<ChainMap> {
    let hab = hom_complex(a, b)?;
    let hbc = hom_complex(b, c)?;
    let hac = hom_complex(a, c)?;
    let source = tensor_complex(&hab, &hbc)?;
    let ring = a.ring().clone();
    let mut components = Vec::with_capacity(source.len());
    for n in source.degrees() {
        let mut m = Matrix::zeros(ring.clone(), hac.rank(n), source.rank(n));
        let tb = hom_blocks(a, c, n);
        for blk in tensor_blocks(&hab, &hbc, n).iter().filter(|b| b.size > 0) {
            let (p, q) = (blk.p, blk.q);
            let sign = ring.sign(p * q);
            let fab = hom_blocks(a, b, p);
            let fbc = hom_blocks(b, c, q);
            let rbc = hbc.rank(q);
            for r in tb.iter().filter(|r| r.size > 0) {
                let f1 = find(&fab, r.p).expect("factor of Hom(A, B)");
                let Some(f2) = find(&fbc, r.p + p) else {
                    continue;
                };
                let (ra, rb, rc) = (a.rank(r.p), b.rank(r.p + p), c.rank(r.p + p + q));
                if rb == 0 {
                    continue;
                }
                for i in 0..ra {
                    for j in 0..rb {
                        let h1 = f1.offset + i * rb + j;
                        for k in 0..rc {
                            let h2 = f2.offset + j * rc + k;
                            m.set_canonical(
                                r.offset + i * rc + k,
                                blk.offset + h1 * rbc + h2,
                                sign.clone(),
                            );
                        }
                    }
                }
            }
        }
        components.push(m);
    }
    ChainMap::from_parts(source, hac, components)
}

/// `u: ε → Hom(A, A)` picking out the identity.
pub fn unit_chain(a: &ChainComplex) -> Result<ChainMap> {
    let ring = a.ring().clone();
    let eps = ChainComplex::unit(ring.clone());
    let target = hom_complex(a, a)?;
    let mut c = Matrix::zeros(ring.clone(), target.rank(0), 1);
    if !a.is_empty() {
        for f in hom_blocks(a, a, 0) {
            let r = a.rank(f.p);
            for i in 0..r {
                c.set_canonical(f.offset + i * r + i, 0, ring.one());
            }
        }
    }
    ChainMap::from_parts(eps, target, vec![c])
}

impl ChainMap {
    /// Coordinates in `Hom(X, Y)_0`: the stacked vectorized components.
    pub fn to_hom_element(&self) -> Matrix {
        let ring = self.ring().clone();
        let parts: Vec<Matrix> = self
            .source()
            .degrees()
            .map(|p| self.component(p).vectorize())
            .collect();
        let rows = parts.iter().map(Matrix::rows).sum();
        let mut v = Matrix::zeros(ring, rows, 1);
        let mut off = 0;
        for part in &parts {
            v.set_block(off, 0, part);
            off += part.rows();
        }
        v
    }

    /// Inverse of [`ChainMap::to_hom_element`]; `v` must be a degree-zero
    /// cycle.
    pub fn from_hom_element(x: &ChainComplex, y: &ChainComplex, v: &Matrix) -> Result<ChainMap> {
        let blocks = if x.is_empty() {
            Vec::new()
        } else {
            hom_blocks(x, y, 0)
        };
        let total = total(&blocks);
        if v.shape() != (total, 1) {
            return Err(Error::DimensionMismatch {
                op: "from_hom_element",
                left: (total, 1),
                right: v.shape(),
            });
        }
        let components = blocks
            .iter()
            .map(|b| {
                v.block(b.offset, b.size, 0, 1)
                    .unvectorize(y.rank(b.p), x.rank(b.p))
            })
            .collect::<Result<_>>()?;
        ChainMap::new(x.clone(), y.clone(), components)
    }
}

/// A basis (over a field) or a free generating set (over the integers) of
/// the chain maps `X → Y`, read off the degree-zero cycles of `Hom(X, Y)`.
pub fn chain_map_basis(x: &ChainComplex, y: &ChainComplex) -> Result<Vec<ChainMap>> {
    let h = hom_complex(x, y)?;
    let k = h.diff(0).kernel_basis();
    (0..k.cols())
        .map(|j| ChainMap::from_hom_element(x, y, &k.column_vec(j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::VObject;
    use crate::chain::{assoc_chain, homology, shift, symmetry_chain, tensor_chainmap};
    use crate::linalg::RingSpec;
    use num_bigint::BigInt;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn two_term(ring: RingSpec, m: i64) -> ChainComplex {
        ChainComplex::new(
            ring.clone(),
            0,
            vec![1, 1],
            vec![Matrix::from_rows(ring, &[&[m]])],
        )
        .unwrap()
    }

    fn sample(ring: RingSpec) -> ChainComplex {
        ChainComplex::new(
            ring.clone(),
            -1,
            vec![1, 2, 1],
            vec![
                Matrix::from_rows(ring.clone(), &[&[1, 1]]),
                Matrix::from_rows(ring, &[&[1], &[-1]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn ext_of_z_mod_two() {
        let p = two_term(z(), 2);
        let y = ChainComplex::concentrated(&VObject::new(z(), 1), 0);
        let h = hom_complex(&p, &y).unwrap();
        assert_eq!(h.window(), (-1, 0));
        assert_eq!(h.diff(0), Matrix::from_rows(z(), &[&[-2]]));
        assert!(homology(&h, 0).unwrap().is_zero());
        let ext = homology(&h, -1).unwrap();
        assert_eq!(ext.invariant_factors, vec![BigInt::from(2)]);
        assert_eq!(ext.free_rank, 0);
    }

    #[test]
    fn hom_from_unit_is_the_complex() {
        let y = sample(z());
        let h = hom_complex(&ChainComplex::unit(z()), &y).unwrap();
        assert_eq!(h, y);
    }

    #[test]
    fn hom_squares_to_zero() {
        let x = sample(RingSpec::Rationals);
        let y = two_term(RingSpec::Rationals, 3);
        assert!(hom_complex(&x, &y).unwrap().validate().is_ok());
        assert!(hom_complex(&y, &x).unwrap().validate().is_ok());
        assert!(hom_complex(&x, &x).unwrap().validate().is_ok());
    }

    #[test]
    fn structure_maps_are_chain_maps() {
        let a = sample(z());
        let b = two_term(z(), 2);
        assert!(eval_chain(&a, &b).unwrap().validate().is_ok());
        assert!(eval_chain(&b, &a).unwrap().validate().is_ok());
        assert!(compose_hom(&a, &b, &a).unwrap().validate().is_ok());
        assert!(compose_hom(&b, &a, &b).unwrap().validate().is_ok());
        assert!(unit_chain(&a).unwrap().validate().is_ok());
    }

    #[test]
    fn adjunction_round_trips() {
        let x = sample(z());
        let y = two_term(z(), 2);
        let k = symmetry_chain(&x, &y).unwrap();
        let g = adjoint_chain(&k, &x, &y).unwrap();
        assert!(g.validate().is_ok());
        let back = adjoint_chain_inv(&g, &y, k.target()).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn evaluation_is_the_counit() {
        // ev ∘ (adjoint(k) ⊙ 1) = k
        let x = two_term(z(), 2);
        let y = sample(z());
        let k = symmetry_chain(&x, &y).unwrap();
        let g = adjoint_chain(&k, &x, &y).unwrap();
        let ev = eval_chain(&y, k.target()).unwrap();
        let lhs = ev
            .compose(&tensor_chainmap(&g, &ChainMap::identity(&y)).unwrap())
            .unwrap();
        assert_eq!(lhs, k);
    }

    #[test]
    fn composition_matches_the_curried_double_evaluation() {
        let a = sample(z());
        let b = two_term(z(), 2);
        let c = shift(&sample(z()), 1);
        let hab = hom_complex(&a, &b).unwrap();
        let hbc = hom_complex(&b, &c).unwrap();
        let id = |x: &ChainComplex| ChainMap::identity(x);
        let x = tensor_complex(&hab, &hbc).unwrap();
        let route = [
            assoc_chain(&hab, &hbc, &a).unwrap(),
            tensor_chainmap(&id(&hab), &symmetry_chain(&hbc, &a).unwrap()).unwrap(),
            assoc_chain(&hab, &a, &hbc).unwrap().inverse().unwrap(),
            tensor_chainmap(&eval_chain(&a, &b).unwrap(), &id(&hbc)).unwrap(),
            symmetry_chain(&b, &hbc).unwrap(),
            eval_chain(&b, &c).unwrap(),
        ];
        let mut k = ChainMap::identity(route[0].source());
        for step in &route {
            k = step.compose(&k).unwrap();
        }
        let oracle = adjoint_chain(&k, &x, &a).unwrap();
        assert_eq!(compose_hom(&a, &b, &c).unwrap(), oracle);
    }

    #[test]
    fn chain_maps_are_degree_zero_cycles() {
        let f2 = RingSpec::prime_field(2).unwrap();
        let x = two_term(f2.clone(), 1);
        let basis = chain_map_basis(&x, &x).unwrap();
        // maps of the contractible complex e → e: pairs (a, b) with a = b
        assert_eq!(basis.len(), 1);
        let id = ChainMap::identity(&x);
        assert_eq!(
            ChainMap::from_hom_element(&x, &x, &id.to_hom_element()).unwrap(),
            id
        );
    }
}
