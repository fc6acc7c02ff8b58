use std::fmt::Debug;
use std::hash::Hash;

use crate::base::{self, VMorphism, VObject};
use crate::chain::{self, ChainComplex, ChainMap};
use crate::error::Result;
use crate::linalg::RingSpec;

/// A closed symmetric monoidal category with explicit structure maps, used
/// as the enriching base.
pub trait Monoidal: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Obj: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;
    type Mor: Clone + Debug + PartialEq + Eq + Send + Sync;

    const NAME: &'static str;

    fn ring(a: &Self::Obj) -> &RingSpec;
    fn unit(ring: &RingSpec) -> Self::Obj;
    fn zero(ring: &RingSpec) -> Self::Obj;
    fn is_zero_obj(a: &Self::Obj) -> bool;
    fn tensor(a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;
    fn hom(a: &Self::Obj, b: &Self::Obj) -> Result<Self::Obj>;

    fn source(f: &Self::Mor) -> &Self::Obj;
    fn target(f: &Self::Mor) -> &Self::Obj;
    fn identity(a: &Self::Obj) -> Self::Mor;
    fn zero_mor(a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn tensor_mor(f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    /// `[f', g]` for `f': a' → a`, `g: b → b'`.
    fn hom_mor(f_prime: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn inverse(f: &Self::Mor) -> Result<Self::Mor>;

    fn assoc(a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor>;
    fn left_unit(a: &Self::Obj) -> Result<Self::Mor>;
    fn right_unit(a: &Self::Obj) -> Result<Self::Mor>;
    fn swap(a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// `[a, b] ⊗ [b, c] → [a, c]`.
    fn internal_comp(a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor>;
    /// `e → [a, a]`.
    fn internal_unit(a: &Self::Obj) -> Result<Self::Mor>;
    /// Curries `f: x ⊗ b → c` to `x → [b, c]`.
    fn adjoint(f: &Self::Mor, x: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;

    /// Human-readable description of `lhs - rhs`.
    fn residual(lhs: &Self::Mor, rhs: &Self::Mor) -> String;
}

/// Free modules of finite rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Base;

/// Bounded chain complexes of free modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chains;

impl Monoidal for Base {
    type Obj = VObject;
    type Mor = VMorphism;

    const NAME: &'static str = "V";

    fn ring(a: &VObject) -> &RingSpec {
        &a.ring
    }
    fn unit(ring: &RingSpec) -> VObject {
        VObject::unit(ring.clone())
    }
    fn zero(ring: &RingSpec) -> VObject {
        VObject::zero(ring.clone())
    }
    fn is_zero_obj(a: &VObject) -> bool {
        a.rank == 0
    }
    fn tensor(a: &VObject, b: &VObject) -> Result<VObject> {
        base::tensor_obj(a, b)
    }
    fn hom(a: &VObject, b: &VObject) -> Result<VObject> {
        base::hom_obj(a, b)
    }
    fn source(f: &VMorphism) -> &VObject {
        &f.source
    }
    fn target(f: &VMorphism) -> &VObject {
        &f.target
    }
    fn identity(a: &VObject) -> VMorphism {
        VMorphism::identity(a)
    }
    fn zero_mor(a: &VObject, b: &VObject) -> VMorphism {
        VMorphism::zero(a, b)
    }
    fn compose(g: &VMorphism, f: &VMorphism) -> Result<VMorphism> {
        g.compose(f)
    }
    fn tensor_mor(f: &VMorphism, g: &VMorphism) -> Result<VMorphism> {
        base::tensor_mor(f, g)
    }
    fn hom_mor(f_prime: &VMorphism, g: &VMorphism) -> Result<VMorphism> {
        base::hom_mor(f_prime, g)
    }
    fn inverse(f: &VMorphism) -> Result<VMorphism> {
        VMorphism::new(f.target.clone(), f.source.clone(), f.matrix.inverse()?)
    }
    fn assoc(a: &VObject, b: &VObject, c: &VObject) -> Result<VMorphism> {
        base::assoc(a, b, c)
    }
    fn left_unit(a: &VObject) -> Result<VMorphism> {
        Ok(base::left_unit(a))
    }
    fn right_unit(a: &VObject) -> Result<VMorphism> {
        Ok(base::right_unit(a))
    }
    fn swap(a: &VObject, b: &VObject) -> Result<VMorphism> {
        base::swap(a, b)
    }
    fn internal_comp(a: &VObject, b: &VObject, c: &VObject) -> Result<VMorphism> {
        base::internal_comp(a, b, c)
    }
    fn internal_unit(a: &VObject) -> Result<VMorphism> {
        Ok(base::internal_unit(a))
    }
    fn adjoint(f: &VMorphism, x: &VObject, b: &VObject) -> Result<VMorphism> {
        base::adjoint(f, x, b)
    }
    fn residual(lhs: &VMorphism, rhs: &VMorphism) -> String {
        if lhs.source != rhs.source || lhs.target != rhs.target {
            return format!(
                "shape {} -> {} vs {} -> {}",
                lhs.source, lhs.target, rhs.source, rhs.target
            );
        }
        match lhs.matrix.sub(&rhs.matrix) {
            Ok(d) => format!("lhs - rhs = {d}"),
            Err(e) => e.to_string(),
        }
    }
}

impl Monoidal for Chains {
    type Obj = ChainComplex;
    type Mor = ChainMap;

    const NAME: &'static str = "Ch(V)";

    fn ring(a: &ChainComplex) -> &RingSpec {
        a.ring()
    }
    fn unit(ring: &RingSpec) -> ChainComplex {
        ChainComplex::unit(ring.clone())
    }
    fn zero(ring: &RingSpec) -> ChainComplex {
        ChainComplex::zero(ring.clone())
    }
    fn is_zero_obj(a: &ChainComplex) -> bool {
        a.is_zero()
    }
    fn tensor(a: &ChainComplex, b: &ChainComplex) -> Result<ChainComplex> {
        chain::tensor_complex(a, b)
    }
    fn hom(a: &ChainComplex, b: &ChainComplex) -> Result<ChainComplex> {
        chain::hom_complex(a, b)
    }
    fn source(f: &ChainMap) -> &ChainComplex {
        f.source()
    }
    fn target(f: &ChainMap) -> &ChainComplex {
        f.target()
    }
    fn identity(a: &ChainComplex) -> ChainMap {
        ChainMap::identity(a)
    }
    fn zero_mor(a: &ChainComplex, b: &ChainComplex) -> ChainMap {
        ChainMap::zero(a, b)
    }
    fn compose(g: &ChainMap, f: &ChainMap) -> Result<ChainMap> {
        g.compose(f)
    }
    fn tensor_mor(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        chain::tensor_chainmap(f, g)
    }
    fn hom_mor(f_prime: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
        chain::hom_chainmap(f_prime, g)
    }
    fn inverse(f: &ChainMap) -> Result<ChainMap> {
        f.inverse()
    }
    fn assoc(a: &ChainComplex, b: &ChainComplex, c: &ChainComplex) -> Result<ChainMap> {
        chain::assoc_chain(a, b, c)
    }
    fn left_unit(a: &ChainComplex) -> Result<ChainMap> {
        chain::left_unit_chain(a)
    }
    fn right_unit(a: &ChainComplex) -> Result<ChainMap> {
        chain::right_unit_chain(a)
    }
    fn swap(a: &ChainComplex, b: &ChainComplex) -> Result<ChainMap> {
        chain::symmetry_chain(a, b)
    }
    fn internal_comp(a: &ChainComplex, b: &ChainComplex, c: &ChainComplex) -> Result<ChainMap> {
        chain::compose_hom(a, b, c)
    }
    fn internal_unit(a: &ChainComplex) -> Result<ChainMap> {
        chain::unit_chain(a)
    }
    fn adjoint(f: &ChainMap, x: &ChainComplex, b: &ChainComplex) -> Result<ChainMap> {
        chain::adjoint_chain(f, x, b)
    }
    fn residual(lhs: &ChainMap, rhs: &ChainMap) -> String {
        if lhs.source() != rhs.source() || lhs.target() != rhs.target() {
            return format!(
                "shape {} -> {} vs {} -> {}",
                lhs.source(),
                lhs.target(),
                rhs.source(),
                rhs.target()
            );
        }
        let mut lines = Vec::new();
        for n in lhs.source().degrees() {
            let (l, r) = (lhs.component(n), rhs.component(n));
            if l != r {
                if let Ok(d) = l.sub(&r) {
                    lines.push(format!("degree {n}: lhs - rhs = {d}"));
                }
            }
        }
        lines.join("\n")
    }
}
