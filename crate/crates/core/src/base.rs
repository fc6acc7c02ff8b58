//! The closed symmetric monoidal base: finitely generated free modules with
//! every structure map written as an explicit matrix.
//!
//! Basis conventions (used everywhere else in the crate):
//! * `a ⊗ b` has basis `e_i ⊗ e_j` at index `i · rank(b) + j`.
//! * `[a, b]` has basis `E_(i,j)` ("send `e_i` of `a` to `e_j` of `b`") at
//!   index `i · rank(b) + j`; the coordinates of a morphism are its
//!   column-major flattening ([`Matrix::vectorize`]).
//!
//! With these conventions associators and unitors are identity matrices and
//! the symmetry is the transposition permutation.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, RingSpec, Scalar};

/// A free module of finite rank. Labels are cosmetic and ignored by
/// equality.
#[derive(Clone, Debug)]
pub struct VObject {
    pub ring: RingSpec,
    pub rank: usize,
    pub label: Option<String>,
}

impl PartialEq for VObject {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.rank == other.rank
    }
}

impl Eq for VObject {}

impl Hash for VObject {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.rank.hash(state);
    }
}

impl VObject {
    pub fn new(ring: RingSpec, rank: usize) -> Self {
        VObject {
            ring,
            rank,
            label: None,
        }
    }

    pub fn labeled(ring: RingSpec, rank: usize, label: impl Into<String>) -> Self {
        VObject {
            ring,
            rank,
            label: Some(label.into()),
        }
    }

    /// The monoidal unit `e`.
    pub fn unit(ring: RingSpec) -> Self {
        VObject::new(ring, 1)
    }

    pub fn zero(ring: RingSpec) -> Self {
        VObject::new(ring, 0)
    }
}

impl fmt::Display for VObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l}"),
            None => write!(f, "{}^{}", self.ring, self.rank),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VMorphism {
    pub source: VObject,
    pub target: VObject,
    pub matrix: Matrix,
}

impl VMorphism {
    pub fn new(source: VObject, target: VObject, matrix: Matrix) -> Result<Self> {
        source.ring.ensure_same(&target.ring)?;
        source.ring.ensure_same(matrix.ring())?;
        if matrix.shape() != (target.rank, source.rank) {
            return Err(Error::DimensionMismatch {
                op: "morphism",
                left: (target.rank, source.rank),
                right: matrix.shape(),
            });
        }
        Ok(VMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(a: &VObject) -> Self {
        VMorphism {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(a.ring.clone(), a.rank),
        }
    }

    pub fn zero(source: &VObject, target: &VObject) -> Self {
        VMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(source.ring.clone(), target.rank, source.rank),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.source.ring
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &VMorphism) -> Result<VMorphism> {
        if f.target != self.source {
            return Err(Error::shape(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, f.source, f.target
            )));
        }
        Ok(VMorphism {
            source: f.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.matmul(&f.matrix)?,
        })
    }

    fn same_ends(&self, other: &VMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::shape("morphisms have different source or target"));
        }
        Ok(())
    }

    pub fn add(&self, other: &VMorphism) -> Result<VMorphism> {
        self.same_ends(other)?;
        Ok(VMorphism {
            matrix: self.matrix.add(&other.matrix)?,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &VMorphism) -> Result<VMorphism> {
        self.same_ends(other)?;
        Ok(VMorphism {
            matrix: self.matrix.sub(&other.matrix)?,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> Result<VMorphism> {
        Ok(VMorphism {
            matrix: self.matrix.scale(s)?,
            ..self.clone()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// The element `e → [source, target]` naming this morphism.
    pub fn name(&self) -> VMorphism {
        VMorphism {
            source: VObject::unit(self.ring().clone()),
            target: hom_obj_unchecked(&self.source, &self.target),
            matrix: self.matrix.vectorize(),
        }
    }
}

fn same_ring(a: &VObject, b: &VObject) -> Result<()> {
    a.ring.ensure_same(&b.ring)
}

fn join_labels(a: &VObject, b: &VObject, op: &str) -> Option<String> {
    match (&a.label, &b.label) {
        (Some(x), Some(y)) => Some(format!("({x}{op}{y})")),
        _ => None,
    }
}

pub fn tensor_obj(a: &VObject, b: &VObject) -> Result<VObject> {
    same_ring(a, b)?;
    Ok(VObject {
        ring: a.ring.clone(),
        rank: a.rank * b.rank,
        label: join_labels(a, b, "⊗"),
    })
}

pub fn tensor_mor(f: &VMorphism, g: &VMorphism) -> Result<VMorphism> {
    Ok(VMorphism {
        source: tensor_obj(&f.source, &g.source)?,
        target: tensor_obj(&f.target, &g.target)?,
        matrix: f.matrix.kronecker(&g.matrix)?,
    })
}

fn hom_obj_unchecked(a: &VObject, b: &VObject) -> VObject {
    VObject {
        ring: a.ring.clone(),
        rank: a.rank * b.rank,
        label: match (&a.label, &b.label) {
            (Some(x), Some(y)) => Some(format!("[{x},{y}]")),
            _ => None,
        },
    }
}

pub fn hom_obj(a: &VObject, b: &VObject) -> Result<VObject> {
    same_ring(a, b)?;
    Ok(hom_obj_unchecked(a, b))
}

/// `[f', g]: [a, b] → [a', b']`, `h ↦ g ∘ h ∘ f'` for `f': a' → a`,
/// `g: b → b'`.
pub fn hom_mor(f_prime: &VMorphism, g: &VMorphism) -> Result<VMorphism> {
    Ok(VMorphism {
        source: hom_obj(&f_prime.target, &g.source)?,
        target: hom_obj(&f_prime.source, &g.target)?,
        matrix: f_prime.matrix.transpose().kronecker(&g.matrix)?,
    })
}

/// Permutation matrix of `a ⊗ b → b ⊗ a` for ranks `m`, `n`.
pub fn swap_matrix(ring: &RingSpec, m: usize, n: usize) -> Matrix {
    let perm: Vec<usize> = (0..m * n).map(|k| (k % n) * m + k / n).collect();
    Matrix::permutation(ring.clone(), &perm)
}

pub fn swap(a: &VObject, b: &VObject) -> Result<VMorphism> {
    VMorphism::new(
        tensor_obj(a, b)?,
        tensor_obj(b, a)?,
        swap_matrix(&a.ring, a.rank, b.rank),
    )
}

pub fn assoc(a: &VObject, b: &VObject, c: &VObject) -> Result<VMorphism> {
    let src = tensor_obj(&tensor_obj(a, b)?, c)?;
    let tgt = tensor_obj(a, &tensor_obj(b, c)?)?;
    let n = src.rank;
    VMorphism::new(src, tgt, Matrix::identity(a.ring.clone(), n))
}

/// `l_a: e ⊗ a → a`.
pub fn left_unit(a: &VObject) -> VMorphism {
    VMorphism {
        source: a.clone(),
        target: a.clone(),
        matrix: Matrix::identity(a.ring.clone(), a.rank),
    }
}

/// `r_a: a ⊗ e → a`.
pub fn right_unit(a: &VObject) -> VMorphism {
    left_unit(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureIsos {
    pub assoc: VMorphism,
    pub left_unit: VMorphism,
    pub right_unit: VMorphism,
    pub swap: VMorphism,
}

/// Associator for `(a, b, c)`, unitors for `a`, symmetry for `(a, b)`.
pub fn structure_isos(a: &VObject, b: &VObject, c: &VObject) -> Result<StructureIsos> {
    same_ring(a, b)?;
    same_ring(a, c)?;
    Ok(StructureIsos {
        assoc: assoc(a, b, c)?,
        left_unit: left_unit(a),
        right_unit: right_unit(a),
        swap: swap(a, b)?,
    })
}

/// `ev: [a, b] ⊗ a → b`, `E_(i,j) ⊗ e_i ↦ e_j`.
pub fn eval_mor(a: &VObject, b: &VObject) -> Result<VMorphism> {
    let hom = hom_obj(a, b)?;
    let src = tensor_obj(&hom, a)?;
    let mut m = Matrix::zeros(a.ring.clone(), b.rank, src.rank);
    for i in 0..a.rank {
        for j in 0..b.rank {
            let col = (i * b.rank + j) * a.rank + i;
            m.set_canonical(j, col, a.ring.one());
        }
    }
    VMorphism::new(src, b.clone(), m)
}

/// Curries `f: x ⊗ b → c` to `x → [b, c]`:
/// `adjoint(f)[(j,k), i] = f[k, (i,j)]`.
pub fn adjoint(f: &VMorphism, x: &VObject, b: &VObject) -> Result<VMorphism> {
    same_ring(x, b)?;
    if x.rank * b.rank != f.source.rank {
        return Err(Error::shape(format!(
            "adjoint: source rank {} is not {} x {}",
            f.source.rank, x.rank, b.rank
        )));
    }
    let c = &f.target;
    let m = adjoint_matrix(&f.matrix, x.rank, b.rank, c.rank);
    VMorphism::new(x.clone(), hom_obj(b, c)?, m)
}

pub(crate) fn adjoint_matrix(f: &Matrix, x: usize, b: usize, c: usize) -> Matrix {
    let mut m = Matrix::zeros(f.ring().clone(), b * c, x);
    for i in 0..x {
        for j in 0..b {
            for k in 0..c {
                let v = f.get(k, i * b + j);
                if !v.is_zero() {
                    m.set_canonical(j * c + k, i, v.clone());
                }
            }
        }
    }
    m
}

/// Inverse of [`adjoint`]: uncurries `g: x → [b, c]` to `x ⊗ b → c`.
pub fn adjoint_inv(g: &VMorphism, b: &VObject, c: &VObject) -> Result<VMorphism> {
    same_ring(b, c)?;
    if b.rank * c.rank != g.target.rank {
        return Err(Error::shape(format!(
            "adjoint_inv: target rank {} is not {} x {}",
            g.target.rank, b.rank, c.rank
        )));
    }
    let x = &g.source;
    let m = adjoint_inv_matrix(&g.matrix, x.rank, b.rank, c.rank);
    VMorphism::new(tensor_obj(x, b)?, c.clone(), m)
}

pub(crate) fn adjoint_inv_matrix(g: &Matrix, x: usize, b: usize, c: usize) -> Matrix {
    let mut m = Matrix::zeros(g.ring().clone(), c, x * b);
    for i in 0..x {
        for j in 0..b {
            for k in 0..c {
                let v = g.get(j * c + k, i);
                if !v.is_zero() {
                    m.set_canonical(k, i * b + j, v.clone());
                }
            }
        }
    }
    m
}

/// Internal composition `c: [a, b] ⊗ [b, c] → [a, c]`, `f ⊗ g ↦ g ∘ f`.
pub fn internal_comp(a: &VObject, b: &VObject, c: &VObject) -> Result<VMorphism> {
    let ab = hom_obj(a, b)?;
    let bc = hom_obj(b, c)?;
    let ac = hom_obj(a, c)?;
    let src = tensor_obj(&ab, &bc)?;
    let mut m = Matrix::zeros(a.ring.clone(), ac.rank, src.rank);
    for i in 0..a.rank {
        for j in 0..b.rank {
            for k in 0..c.rank {
                let col = (i * b.rank + j) * bc.rank + j * c.rank + k;
                m.set_canonical(i * c.rank + k, col, a.ring.one());
            }
        }
    }
    VMorphism::new(src, ac, m)
}

/// Internal unit `u_a: e → [a, a]` naming the identity.
pub fn internal_unit(a: &VObject) -> VMorphism {
    VMorphism::identity(a).name()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize) -> VObject {
        VObject::new(RingSpec::Rationals, n)
    }

    #[test]
    fn tensor_ranks_multiply() {
        assert_eq!(tensor_obj(&q(2), &q(3)).unwrap().rank, 6);
        let e = VObject::unit(RingSpec::Rationals);
        assert_eq!(tensor_obj(&e, &q(4)).unwrap().rank, 4);
        assert_eq!(
            left_unit(&q(4)).matrix,
            Matrix::identity(RingSpec::Rationals, 4)
        );
    }

    #[test]
    fn tensor_of_identities() {
        let t = tensor_mor(&VMorphism::identity(&q(2)), &VMorphism::identity(&q(3))).unwrap();
        assert_eq!(t, VMorphism::identity(&q(6)));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let z = VObject::new(RingSpec::Integers, 1);
        assert!(matches!(
            tensor_obj(&q(1), &z),
            Err(Error::RingMismatch { .. })
        ));
        assert!(hom_obj(&q(1), &z).is_err());
    }

    #[test]
    fn hom_from_unit() {
        let e = VObject::unit(RingSpec::Rationals);
        assert_eq!(hom_obj(&e, &q(3)).unwrap().rank, 3);
        let id = hom_mor(&VMorphism::identity(&q(2)), &VMorphism::identity(&q(3))).unwrap();
        assert_eq!(id.matrix, Matrix::identity(RingSpec::Rationals, 6));
    }

    #[test]
    fn hom_mor_scalar_case() {
        let f =
            VMorphism::new(q(1), q(1), Matrix::from_rows(RingSpec::Rationals, &[&[2]])).unwrap();
        let g =
            VMorphism::new(q(1), q(1), Matrix::from_rows(RingSpec::Rationals, &[&[3]])).unwrap();
        assert_eq!(
            hom_mor(&f, &g).unwrap().matrix,
            Matrix::from_rows(RingSpec::Rationals, &[&[6]])
        );
    }

    #[test]
    fn swap_involution() {
        let e = VObject::unit(RingSpec::Rationals);
        assert_eq!(
            swap(&e, &e).unwrap().matrix,
            Matrix::from_rows(RingSpec::Rationals, &[&[1]])
        );
        let s = swap(&q(2), &q(3)).unwrap();
        let t = swap(&q(3), &q(2)).unwrap();
        assert_eq!(t.compose(&s).unwrap(), VMorphism::identity(&q(6)));
    }

    #[test]
    fn eval_unfolded() {
        let e = VObject::unit(RingSpec::Rationals);
        assert_eq!(
            eval_mor(&e, &e).unwrap().matrix,
            Matrix::from_rows(RingSpec::Rationals, &[&[1]])
        );
        assert_eq!(
            eval_mor(&q(2), &q(1)).unwrap().matrix,
            Matrix::from_rows(RingSpec::Rationals, &[&[1, 0, 0, 1]])
        );
    }

    #[test]
    fn adjoint_of_eval_is_identity() {
        let (b, c) = (q(2), q(3));
        let ev = eval_mor(&b, &c).unwrap();
        let hom = hom_obj(&b, &c).unwrap();
        assert_eq!(adjoint(&ev, &hom, &b).unwrap(), VMorphism::identity(&hom));
    }

    #[test]
    fn adjoint_of_zero() {
        let (x, b, c) = (q(2), q(2), q(1));
        let z = VMorphism::zero(&tensor_obj(&x, &b).unwrap(), &c);
        assert!(adjoint(&z, &x, &b).unwrap().is_zero());
    }

    #[test]
    fn internal_comp_composes_named_morphisms() {
        let ring = RingSpec::Rationals;
        let f = VMorphism::new(
            q(2),
            q(3),
            Matrix::from_rows(ring.clone(), &[&[1, 2], &[0, 1], &[3, 0]]),
        )
        .unwrap();
        let g =
            VMorphism::new(q(3), q(1), Matrix::from_rows(ring.clone(), &[&[1, -1, 2]])).unwrap();
        let c = internal_comp(&q(2), &q(3), &q(1)).unwrap();
        let both = f
            .matrix
            .vectorize()
            .kronecker(&g.matrix.vectorize())
            .unwrap();
        assert_eq!(
            c.matrix.matmul(&both).unwrap(),
            g.compose(&f).unwrap().matrix.vectorize()
        );
    }

    #[test]
    fn shape_errors() {
        let f = VMorphism::zero(&q(5), &q(1));
        assert!(adjoint(&f, &q(2), &q(2)).is_err());
        assert!(adjoint_inv(&f, &q(2), &q(2)).is_err());
        assert!(VMorphism::new(q(2), q(2), Matrix::zeros(RingSpec::Rationals, 1, 2)).is_err());
    }
}
