pub mod base;
pub mod chain;
pub mod derived;
pub mod dg;
pub mod enriched;
pub mod error;
pub mod functor_cat;
pub mod gen;
pub mod io;
pub mod linalg;
pub mod report;

pub use error::{Error, Result};
pub use report::Report;
