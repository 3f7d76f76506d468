use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::generators::{degree_one_generators, inner_from_lie};
use super::{bracket, sigma, vectorize, DerivationVector, EndomorphismJet};
use crate::exactmath::{Rational, SpanBuilder, SparseVec};
use crate::fox::{bglm_test, jacobian_trace, EndomorphismWords};
use crate::lie::{lyndon_basis, witt_rank};
use crate::par::{map_vec, Parallelism};
use crate::parse::parse_map;
use crate::repr::dim_rni;
use crate::series::{Monomial, TruncatedSeries};
use crate::Error;

use super::derivation::monomial_index;

/// Largest `dim M_n` accepted by [`gamma_span`].
pub const SPAN_GUARD: u64 = 1000;

#[derive(Clone, Debug)]
pub struct SpanResult {
    pub rank: usize,
    pub degree: usize,
    /// Rank after each level `1..=degree`.
    pub level_ranks: Vec<usize>,
    pub basis: Vec<DerivationVector>,
}

fn guard(r: usize, n: usize) -> Result<(), Error> {
    let dim_m = r as u64 * witt_rank(r as u64, n as u64 + 1).to_u64().unwrap_or(u64::MAX);
    if r < 2 || n == 0 {
        return Err(Error::Domain(format!("need r >= 2 and n >= 1, got r={r}, n={n}")));
    }
    if dim_m > SPAN_GUARD || n + 2 > crate::series::MAX_DEGREE {
        return Err(Error::ResourceGuard(format!(
            "dim M_{n} = {dim_m} for r = {r} is beyond the supported desk scale ({SPAN_GUARD})"
        )));
    }
    Ok(())
}

/// Basis of the span of `(n−1)`-fold brackets of degree-one classes in
/// `M_n ⊗ ℚ`, level by level.
pub fn gamma_span(r: usize, n: usize) -> Result<SpanResult, Error> {
    gamma_span_with(r, n, Parallelism::default())
}

pub fn gamma_span_with(r: usize, n: usize, par: Parallelism) -> Result<SpanResult, Error> {
    guard(r, n)?;
    let trunc = n + 2;
    let mut sb = SpanBuilder::new();
    let mut level1 = Vec::new();
    for (_, v) in degree_one_generators(r, trunc) {
        if sb.insert(&vectorize(&v)) {
            level1.push(v);
        }
    }
    let mut level_ranks = vec![level1.len()];
    let mut current = level1.clone();
    for _ in 2..=n {
        let pairs: Vec<(usize, usize)> =
            (0..level1.len()).flat_map(|a| (0..current.len()).map(move |b| (a, b))).collect();
        let candidates: Vec<DerivationVector> =
            map_vec(par, &pairs, |&(a, b)| bracket(&level1[a], &current[b]).expect("degrees fit"));
        let vecs: Vec<SparseVec> = map_vec(par, &candidates, vectorize);
        let mut sb = SpanBuilder::new();
        let mut next = Vec::new();
        for (v, c) in vecs.iter().zip(candidates) {
            if sb.insert(v) {
                next.push(c);
            }
        }
        level_ranks.push(next.len());
        current = next;
    }
    Ok(SpanResult { rank: current.len(), degree: n, level_ranks, basis: current })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceImageReport {
    pub rank: usize,
    pub degree: usize,
    pub span_rank: usize,
    pub trace_image_dim: usize,
    pub balanced_dim: usize,
    pub all_traces_balanced: bool,
    pub all_balanced_hit: bool,
}

fn series_vector(s: &TruncatedSeries, r: usize) -> SparseVec {
    let map: BTreeMap<usize, Rational> = s.terms().map(|(m, c)| (monomial_index(m, r), c.clone())).collect();
    SparseVec::from_map(map)
}

pub fn trace_image_basis(r: usize, n: usize) -> Result<TraceImageReport, Error> {
    trace_image_basis_with(r, n, Parallelism::default())
}

pub fn trace_image_basis_with(r: usize, n: usize, par: Parallelism) -> Result<TraceImageReport, Error> {
    let span = gamma_span_with(r, n, par)?;
    let traces: Vec<TruncatedSeries> = map_vec(par, &span.basis, |v| v.trace());
    let mut all_traces_balanced = true;
    let mut sb = SpanBuilder::new();
    for t in &traces {
        all_traces_balanced &= t.is_cyclically_balanced(n)?;
        sb.insert(&series_vector(t, r));
    }
    // R_n^+ is spanned by w − γ(w)
    let trunc = span.basis.first().map_or(n + 2, |v| v.truncation());
    let mut all_hit = true;
    let mut balanced = SpanBuilder::new();
    for idx in 0..r.pow(n as u32) {
        let mut letters = vec![0; n];
        let mut x = idx;
        for k in (0..n).rev() {
            letters[k] = x % r + 1;
            x /= r;
        }
        let m = Monomial::new(&letters)?;
        let d = TruncatedSeries::from_terms(r, trunc, [(m, Rational::one()), (m.cyclic_rotate(), Rational::from(-1))])?;
        if d.is_zero() {
            continue;
        }
        let v = series_vector(&d, r);
        balanced.insert(&v);
        all_hit &= sb.contains(&v);
    }
    let expected = r.pow(n as u32) - dim_rni(r as u64, n as u64, 0).to_usize().unwrap_or(0);
    debug_assert_eq!(balanced.rank(), expected);
    Ok(TraceImageReport {
        rank: r,
        degree: n,
        span_rank: span.rank,
        trace_image_dim: sb.rank(),
        balanced_dim: balanced.rank(),
        all_traces_balanced,
        all_balanced_hit: all_hit,
    })
}

/// `x1 ↦ x1[[x1,x2],[[x1,x2],x2]]`, `x2 ↦ x2`.
pub const COUNTEREXAMPLE_MAP: &str = "x1->x1*[[x1,x2],[[x1,x2],x2]]; x2->x2";

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub map: String,
    pub degree: usize,
    pub trace: TruncatedSeries,
    pub printed_trace: TruncatedSeries,
    pub trace_matches_printed: bool,
    pub balanced: bool,
    pub printed_trace_balanced: bool,
    pub inner_span_rank: usize,
    pub augmented_rank: usize,
    pub in_inner_span: bool,
    /// Rank of the bracket span of degree-one classes in M_4.
    pub bracket_span_rank: usize,
    pub in_bracket_span: bool,
}

/// The degree-4, rank-2 map that passes the trace test without being
/// a product of commutators of the right depth.
pub fn verify_counterexample() -> Result<CounterexampleReport, Error> {
    let (r, n, trunc) = (2, 4, 6);
    let phi = EndomorphismWords::new(parse_map(COUNTEREXAMPLE_MAP, Some(r))?)?;
    let trace = jacobian_trace(&phi, n, n + 1)?;
    let balanced = bglm_test(&phi, n)?;
    // Y X Y² − Y² X Y
    let printed = TruncatedSeries::from_terms(
        r,
        n + 1,
        [(Monomial::new(&[2, 1, 2, 2])?, Rational::one()), (Monomial::new(&[2, 2, 1, 2])?, Rational::from(-1))],
    )?;
    let class = sigma(&EndomorphismJet::from_words(&phi, trunc), n)?;
    let mut sb = SpanBuilder::new();
    for w in lyndon_basis(r, n) {
        let v = inner_from_lie(&w.bracket_series(r, trunc)?, n)?;
        sb.insert(&vectorize(&v));
    }
    let inner_span_rank = sb.rank();
    let cv = vectorize(&class);
    let in_inner_span = sb.contains(&cv);
    sb.insert(&cv);
    let mut lb = SpanBuilder::new();
    let span = gamma_span(r, n)?;
    for v in &span.basis {
        lb.insert(&vectorize(v));
    }
    Ok(CounterexampleReport {
        map: phi.to_string(),
        degree: n,
        trace_matches_printed: trace == printed,
        printed_trace_balanced: printed.is_cyclically_balanced(n)?,
        trace,
        printed_trace: printed,
        balanced,
        inner_span_rank,
        augmented_rank: sb.rank(),
        in_inner_span,
        bracket_span_rank: span.rank,
        in_bracket_span: lb.contains(&cv),
    })
}
