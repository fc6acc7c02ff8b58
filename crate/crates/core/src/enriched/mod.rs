//! Small enriched categories, functors into the base and natural
//! transformations, with exact axiom checkers.

pub mod catalog;
mod category;
mod constructions;
mod functor;
mod monoidal;

pub use category::{check_category_axioms, DgCategory, EnrichedCategory, VCategory};
pub use constructions::{
    compose_elements, middle_four, monoidal_product_cat, trivial_dg_enrichment, underlying_hom,
};
pub use functor::{
    check_category_functor, check_functor_axioms, check_vnat, representable, CategoryFunctor,
    ChFunctor, EnrichedFunctor, EnrichedNat, VFunctor, VNat,
};
pub use monoidal::{Base, Chains, Monoidal};
