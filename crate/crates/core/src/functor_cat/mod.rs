//! The enriched functor category `[C, V]`: Hom objects as ends, the action
//! `⊘` of `V`, evaluation, pointwise (co)limits, Yoneda and the coend
//! decomposition.

mod limits;
mod oslash;
mod yoneda;

use crate::base::{VMorphism, VObject};
use crate::enriched::{EnrichedNat, VCategory, VFunctor, VNat};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub use limits::{nat_sum, pointwise_cokernel, pointwise_kernel, pointwise_sum, PointwiseSum};
pub use oslash::{oslash, oslash_assoc, oslash_mor, oslash_transpose, oslash_transpose_inv};
pub use yoneda::{coend_check, coend_functor, yoneda_check, Coend, IsoWitness};

/// The matrix `F(a) → F(b)` that `F_ab` assigns to the `k`-th basis element
/// of `hom(a, b)`.
pub fn action(f: &VFunctor, a: usize, b: usize, k: usize) -> Matrix {
    let (ra, rb) = (f.value(a).rank, f.value(b).rank);
    f.map(a, b)
        .matrix
        .column_vec(k)
        .unvectorize(rb, ra)
        .expect("functor map columns have the hom rank")
}

/// Builds a functor from its values and the action of each basis element of
/// each hom.
pub fn functor_from_actions(
    cat: &VCategory,
    values: Vec<VObject>,
    act: impl Fn(usize, usize, usize) -> Result<Matrix>,
) -> Result<VFunctor> {
    let ring = cat.ring().clone();
    let vals = values.clone();
    VFunctor::from_fn(cat.clone(), values, |a, b| {
        let h = cat.hom(a, b);
        let (ra, rb) = (vals[a].rank, vals[b].rank);
        let mut m = Matrix::zeros(ring.clone(), ra * rb, h.rank);
        for k in 0..h.rank {
            let x = act(a, b, k)?;
            if x.shape() != (rb, ra) {
                return Err(Error::shape("action matrix has the wrong shape"));
            }
            m.set_block(0, k, &x.vectorize());
        }
        VMorphism::new(h.clone(), crate::base::hom_obj(&vals[a], &vals[b])?, m)
    })
}

pub fn evaluate(x: &VFunctor, c: usize) -> Result<VObject> {
    if c >= x.source().len() {
        return Err(Error::UnknownObject(format!("#{c}")));
    }
    Ok(x.value(c).clone())
}

pub fn evaluate_nat(alpha: &VNat, c: usize) -> Result<VMorphism> {
    if c >= alpha.source().source().len() {
        return Err(Error::UnknownObject(format!("#{c}")));
    }
    Ok(alpha.component(c).clone())
}

/// `Hom_{[C,V]}(X, Y)` as the equalizer of the two maps
/// `∏_c [X(c), Y(c)] ⇉ ∏_{a,b} [hom(a,b), [X(a), Y(b)]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndHom {
    pub object: VObject,
    /// Columns span the end inside `∏_c [X(c), Y(c)]`.
    pub basis: Matrix,
    /// Offset of the factor `[X(c), Y(c)]` in the ambient product.
    pub offsets: Vec<usize>,
    pub ambient: usize,
}

fn ensure_same_source(x: &VFunctor, y: &VFunctor) -> Result<()> {
    if x.source() != y.source() {
        return Err(Error::shape("functors on different categories"));
    }
    Ok(())
}

/// Matrix of `u - v` where `u(α)_{ab} = [α_a, 1] ∘ Y_ab` and
/// `v(α)_{ab} = [1, α_b] ∘ X_ab`.
pub fn end_equalizer(x: &VFunctor, y: &VFunctor) -> Result<Matrix> {
    ensure_same_source(x, y)?;
    let cat = x.source();
    let n = cat.len();
    let ring = cat.ring().clone();
    let rx = |c: usize| x.value(c).rank;
    let ry = |c: usize| y.value(c).rank;
    let mut col_off = Vec::with_capacity(n);
    let mut cols = 0;
    for c in 0..n {
        col_off.push(cols);
        cols += rx(c) * ry(c);
    }
    let mut row_off = Vec::with_capacity(n * n);
    let mut rows = 0;
    for a in 0..n {
        for b in 0..n {
            row_off.push(rows);
            rows += cat.hom(a, b).rank * rx(a) * ry(b);
        }
    }
    let mut d = Matrix::zeros(ring.clone(), rows, cols);
    for a in 0..n {
        for b in 0..n {
            let h = cat.hom(a, b).rank;
            let (xa, xb, ya, yb) = (rx(a), rx(b), ry(a), ry(b));
            let base = row_off[a * n + b];
            let (xm, ym) = (&x.map(a, b).matrix, &y.map(a, b).matrix);
            for k in 0..h {
                for i in 0..xa {
                    for l in 0..yb {
                        let row = base + k * xa * yb + i * yb + l;
                        // u: coefficient of α_a[m, i] is Y_ab[m·yb + l, k]
                        for m in 0..ya {
                            let v = ym.get(m * yb + l, k);
                            if !num_traits::Zero::is_zero(v) {
                                let col = col_off[a] + i * ya + m;
                                let cur = d.get(row, col).clone();
                                d.set_canonical(row, col, ring.add(&cur, v));
                            }
                        }
                        // v: coefficient of α_b[l, j] is X_ab[i·xb + j, k]
                        for j in 0..xb {
                            let v = xm.get(i * xb + j, k);
                            if !num_traits::Zero::is_zero(v) {
                                let col = col_off[b] + j * yb + l;
                                let cur = d.get(row, col).clone();
                                d.set_canonical(row, col, ring.sub(&cur, v));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(d)
}

pub fn hom_end(x: &VFunctor, y: &VFunctor) -> Result<EndHom> {
    let d = end_equalizer(x, y)?;
    let basis = d.kernel_basis();
    let n = x.source().len();
    let mut offsets = Vec::with_capacity(n);
    let mut off = 0;
    for c in 0..n {
        offsets.push(off);
        off += x.value(c).rank * y.value(c).rank;
    }
    Ok(EndHom {
        object: VObject::new(x.source().ring().clone(), basis.cols()),
        basis,
        offsets,
        ambient: off,
    })
}

impl EndHom {
    pub fn rank(&self) -> usize {
        self.object.rank
    }

    /// The natural transformation with end coordinates `v`.
    pub fn to_nat(&self, x: &VFunctor, y: &VFunctor, v: &Matrix) -> Result<VNat> {
        let family = self.basis.matmul(v)?;
        self.family_to_nat(x, y, &family)
    }

    /// A column of `∏_c [X(c), Y(c)]` read as components.
    pub fn family_to_nat(&self, x: &VFunctor, y: &VFunctor, family: &Matrix) -> Result<VNat> {
        let n = x.source().len();
        let comps = (0..n)
            .map(|c| {
                let (rx, ry) = (x.value(c).rank, y.value(c).rank);
                let m = family
                    .block(self.offsets[c], rx * ry, 0, 1)
                    .unvectorize(ry, rx)?;
                VMorphism::new(x.value(c).clone(), y.value(c).clone(), m)
            })
            .collect::<Result<_>>()?;
        EnrichedNat::new(x.clone(), y.clone(), comps)
    }

    pub fn nat_to_family(&self, alpha: &VNat) -> Matrix {
        let ring = alpha.source().source().ring().clone();
        let mut v = Matrix::zeros(ring, self.ambient, 1);
        for (c, comp) in alpha.components().iter().enumerate() {
            v.set_block(self.offsets[c], 0, &comp.matrix.vectorize());
        }
        v
    }

    /// End coordinates of a natural transformation.
    pub fn from_nat(&self, alpha: &VNat) -> Result<Matrix> {
        self.basis.solve(&self.nat_to_family(alpha))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::catalog::{a2, unit_category};
    use crate::enriched::{check_vnat, representable};
    use crate::linalg::RingSpec;

    fn constant_on_point(ring: &RingSpec, rank: usize) -> VFunctor {
        let c = unit_category(ring);
        let v = VObject::new(ring.clone(), rank);
        functor_from_actions(&c, vec![v], |_, _, _| {
            Ok(Matrix::identity(ring.clone(), rank))
        })
        .unwrap()
    }

    #[test]
    fn end_over_a_point_is_the_internal_hom() {
        let ring = RingSpec::Integers;
        let x = constant_on_point(&ring, 2);
        let y = constant_on_point(&ring, 3);
        assert_eq!(hom_end(&x, &y).unwrap().rank(), 6);
    }

    #[test]
    fn end_into_simple_functor_vanishes() {
        let ring = RingSpec::Rationals;
        let c = a2(&ring);
        let x = representable(&c, 1).unwrap();
        let e = VObject::unit(ring.clone());
        let y = functor_from_actions(&c, vec![e, VObject::zero(ring.clone())], |a, b, _| {
            Ok(Matrix::identity(ring.clone(), 1).block(
                0,
                usize::from(b == 0),
                0,
                usize::from(a == 0),
            ))
        })
        .unwrap();
        assert!(crate::enriched::check_functor_axioms(&y).unwrap().is_ok());
        assert_eq!(hom_end(&x, &y).unwrap().rank(), 0);
    }

    #[test]
    fn identity_lies_in_the_end() {
        let ring = RingSpec::prime_field(3).unwrap();
        let c = a2(&ring);
        let x = representable(&c, 0).unwrap();
        let end = hom_end(&x, &x).unwrap();
        assert!(end.rank() >= 1);
        let id = EnrichedNat::identity(&x);
        let v = end.from_nat(&id).unwrap();
        let back = end.to_nat(&x, &x, &v).unwrap();
        assert_eq!(back, id);
        for j in 0..end.rank() {
            let fam = end.basis.column_vec(j);
            assert!(check_vnat(&end.family_to_nat(&x, &x, &fam).unwrap())
                .unwrap()
                .is_ok());
        }
    }
}
