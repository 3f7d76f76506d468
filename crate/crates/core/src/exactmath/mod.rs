//! Exact integers, rationals, elementary number theory and linear algebra.

mod matrix;
mod numtheory;
mod rational;

pub use matrix::{rank_and_basis, Echelon, RationalMatrix, SpanBuilder, SparseVec};
pub use numtheory::{
    binomial, divisors, euler_phi, factorize, moebius, necklace_count, ramanujan_sum,
};
pub use rational::{exact_div, Rational};
