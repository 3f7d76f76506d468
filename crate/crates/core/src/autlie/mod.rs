//! The Lie algebras M and L: derivation classes, jets, brackets,
//! generator families and span computations.

mod derivation;
mod generators;
mod jet;
mod span;

pub use derivation::{bracket, jacobian_of_bracket, monomial_index, poisson_bracket, rho, rho_words, sigma, span_rank, vectorize, DerivationVector, LieInput};
pub use generators::{
    assoc_a, assoc_words, chain_pivot, degree_one_generators, inner_derivation, inner_from_lie, k_basic, k_chain,
    k_chain_expr, k_chain_expr_with, l_gen, l_gen_expr, magnus_generator_k, transvection_t, transvection_words, AutExpr,
};
pub use jet::EndomorphismJet;
pub use span::{
    gamma_span, gamma_span_with, trace_image_basis, trace_image_basis_with, verify_counterexample,
    CounterexampleReport, SpanResult, TraceImageReport, COUNTEREXAMPLE_MAP, SPAN_GUARD,
};
