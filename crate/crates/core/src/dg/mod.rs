//! Chain complexes of `V`-functors and `Ch(V)`-functors out of a
//! `V`-category, with the translations between them.

mod complex;
mod functor;

pub use complex::{functor_complex_sum, functor_cone, FunctorComplex, FunctorComplexMap};
pub use functor::{
    check_dg_functor_axioms, check_structure_condition, to_dg_functor, to_dg_nat,
    to_functor_complex, to_functor_complex_map, underlying_category, DgFunctor, DgNat,
};
