//! Small named categories used as fixtures and test material.

use super::category::VCategory;
use crate::base::{VMorphism, VObject};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RingSpec};

/// One object `*` with `hom(*, *) = e`.
pub fn unit_category(ring: &RingSpec) -> VCategory {
    thin(ring, &["*"], &[true], |_, _, _| 1).expect("unit category")
}

/// Objects `a`, `b` with `hom(a, b) = e` and `hom(b, a) = 0`.
pub fn a2(ring: &RingSpec) -> VCategory {
    thin(ring, &["a", "b"], &[true, true, false, true], |_, _, _| 1).expect("A2 category")
}

/// A category whose homs have rank at most one. `support[a·n + b]` says
/// whether `hom(a, b) = e`; the diagonal must be set. `comp(a, b, c)` gives
/// the scalar of the composite when all three homs are `e` and neither
/// factor is a unit hom; units compose by `1`.
pub fn thin(
    ring: &RingSpec,
    objects: &[&str],
    support: &[bool],
    comp: impl Fn(usize, usize, usize) -> i64,
) -> Result<VCategory> {
    let n = objects.len();
    if support.len() != n * n || (0..n).any(|a| !support[a * n + a]) {
        return Err(Error::shape(
            "thin category needs a reflexive support table",
        ));
    }
    let obj = |a: usize, b: usize| VObject::new(ring.clone(), usize::from(support[a * n + b]));
    VCategory::from_fn(
        ring.clone(),
        objects.iter().map(|s| s.to_string()).collect(),
        obj,
        |a, b, c| {
            let (ab, bc, ac) = (obj(a, b), obj(b, c), obj(a, c));
            let src = crate::base::tensor_obj(&ab, &bc)?;
            let mut m = Matrix::zeros(ring.clone(), ac.rank, src.rank);
            if ab.rank == 1 && bc.rank == 1 && ac.rank == 1 {
                let v = if a == b || b == c { 1 } else { comp(a, b, c) };
                m.set_canonical(0, 0, ring.from_i64(v));
            }
            VMorphism::new(src, ac, m)
        },
        |a| {
            let e = VObject::unit(ring.clone());
            VMorphism::new(e, obj(a, a), Matrix::identity(ring.clone(), 1))
        },
    )
}

/// The preorder generated by the relation `rel` (pairs `a ≤ b`), as a thin
/// category with all composites `1`.
pub fn preorder(ring: &RingSpec, objects: &[&str], rel: &[(usize, usize)]) -> Result<VCategory> {
    let n = objects.len();
    let mut le = vec![false; n * n];
    for a in 0..n {
        le[a * n + a] = true;
    }
    for &(a, b) in rel {
        if a >= n || b >= n {
            return Err(Error::shape("relation mentions an unknown object"));
        }
        le[a * n + b] = true;
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if le[a * n + k] && le[k * n + b] {
                    le[a * n + b] = true;
                }
            }
        }
    }
    thin(ring, objects, &le, |_, _, _| 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::check_category_axioms;

    #[test]
    fn preorders_pass() {
        let ring = RingSpec::prime_field(2).unwrap();
        let c = preorder(&ring, &["x", "y", "z"], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(c.hom(0, 2).rank, 1);
        assert_eq!(c.hom(2, 0).rank, 0);
        assert!(check_category_axioms(&c).unwrap().is_ok());
    }

    #[test]
    fn zero_composite_is_still_a_category() {
        let ring = RingSpec::Rationals;
        let support = [true, true, true, false, true, true, false, false, true];
        let c = thin(&ring, &["x", "y", "z"], &support, |_, _, _| 0).unwrap();
        assert!(check_category_axioms(&c).unwrap().is_ok());
    }
}
