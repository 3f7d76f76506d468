//! Exact computations around the automorphism group of a free group:
//! Fox calculus, Magnus expansions, the graded Lie algebras of the
//! Andreadakis filtration and their GL_r decompositions.

mod error;

pub mod autlie;
pub mod exactmath;
pub mod fox;
pub mod freegroup;
pub mod lie;
pub mod par;
pub mod parse;
pub mod repr;
pub mod series;
pub mod verify;

pub use error::Error;
pub use exactmath::Rational;
pub use freegroup::{GroupRingElement, GroupWord};
pub use par::Parallelism;
pub use series::{Monomial, TruncatedSeries};
