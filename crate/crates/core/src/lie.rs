//! The free Lie algebra inside the series ring: Lyndon basis, Witt ranks,
//! and the Dynkin criterion.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::exactmath::{necklace_count, Rational};
use crate::freegroup::GroupWord;
use crate::series::{Monomial, TruncatedSeries};
use crate::Error;

/// Rank of the degree-`n` part of the free Lie algebra on `r` generators.
pub fn witt_rank(r: u64, n: u64) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    necklace_count(r, n).expect("n >= 1")
}

/// A word strictly smaller than each of its proper rotations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LyndonWord(Vec<usize>);

impl LyndonWord {
    pub fn new(letters: Vec<usize>) -> Result<Self, Error> {
        if !is_lyndon(&letters) {
            return Err(Error::Domain(format!("{letters:?} is not a Lyndon word")));
        }
        Ok(LyndonWord(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w = uv` with `v` the longest proper Lyndon suffix.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.0.len() < 2 {
            return None;
        }
        let k = (1..self.0.len()).find(|&k| is_lyndon(&self.0[k..]))?;
        Some((LyndonWord(self.0[..k].to_vec()), LyndonWord(self.0[k..].to_vec())))
    }

    /// Standard bracketing as a homogeneous series, truncation `N ≥ len`.
    pub fn bracket_series(&self, rank: usize, trunc: usize) -> Result<TruncatedSeries, Error> {
        match self.standard_factorization() {
            None => TruncatedSeries::variable(rank, trunc, self.0[0]),
            Some((u, v)) => u.bracket_series(rank, trunc)?.commutator(&v.bracket_series(rank, trunc)?),
        }
    }

    /// Standard bracketing with group commutators.
    pub fn bracket_word(&self, rank: usize) -> Result<GroupWord, Error> {
        match self.standard_factorization() {
            None => GroupWord::generator(rank, self.0[0]),
            Some((u, v)) => u.bracket_word(rank)?.commutator(&v.bracket_word(rank)?),
        }
    }

    pub fn standard_bracketing(&self, rank: usize) -> Result<LieElement, Error> {
        let n = self.len();
        LieElement::new(self.bracket_series(rank, n)?, n)
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| format!("X{l}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn is_lyndon(w: &[usize]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|k| {
        let rot = w[k..].iter().chain(&w[..k]);
        w.iter().lt(rot)
    })
}

/// All Lyndon words of length `n` over `1..=r`, lexicographically sorted.
pub fn lyndon_basis(r: usize, n: usize) -> Vec<LyndonWord> {
    // Duval's generation: successive Lyndon words of length ≤ n in lex order
    let mut out = Vec::new();
    if r == 0 || n == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![1];
    loop {
        if w.len() == n {
            out.push(LyndonWord(w.clone()));
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&r) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    out
}

/// Left-normed bracketing `[…[X_{i1},X_{i2}],…,X_{in}]` of one monomial.
fn left_bracket_monomial(m: &Monomial) -> Vec<(Monomial, i64)> {
    let letters = m.letters();
    let mut terms: Vec<(Monomial, i64)> = vec![(Monomial::letter(letters[0]), 1)];
    for &l in &letters[1..] {
        let x = Monomial::letter(l);
        let mut next = Vec::with_capacity(terms.len() * 2);
        for (t, c) in &terms {
            next.push((t.concat(&x), *c));
            next.push((x.concat(t), -*c));
        }
        terms = next;
    }
    terms
}

/// Dynkin–Specht–Wever: a homogeneous `a` of degree `n` is a Lie element
/// iff the left-normed bracketing map sends it to `n·a`.
pub fn dynkin_test(a: &TruncatedSeries, n: usize) -> Result<bool, Error> {
    if n == 0 {
        return Err(Error::Domain("degree must be >= 1".into()));
    }
    if !a.is_homogeneous(n) {
        return Err(Error::Domain(format!("series is not homogeneous of degree {n}")));
    }
    let mut img: HashMap<Monomial, Rational> = HashMap::new();
    for (m, c) in a.terms() {
        for (t, s) in left_bracket_monomial(m) {
            let e = img.entry(t).or_insert_with(Rational::zero);
            *e += c * &Rational::from(s);
        }
    }
    let nn = Rational::from(n as i64);
    for (m, c) in a.terms() {
        if img.remove(m).unwrap_or_default() != c * &nn {
            return Ok(false);
        }
    }
    Ok(img.values().all(|v| v.is_zero()))
}

/// A homogeneous Lie element of a given degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LieElement {
    series: TruncatedSeries,
    degree: usize,
}

impl LieElement {
    pub fn new(series: TruncatedSeries, degree: usize) -> Result<Self, Error> {
        if !dynkin_test(&series, degree)? {
            return Err(Error::Domain("series is not a Lie element".into()));
        }
        Ok(LieElement { series, degree })
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}
