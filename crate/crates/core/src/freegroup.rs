//! Free group words, the integral group ring and the Magnus expansion.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::Rational;
use crate::series::{TruncatedSeries, MAX_RANK};
use crate::Error;

/// A freely reduced word. Letters are signed 1-based generator indices:
/// `3` is `x3`, `-3` is `x3^-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    rank: usize,
    letters: Vec<i8>,
}

impl GroupWord {
    pub fn identity(rank: usize) -> Self {
        GroupWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, i: usize) -> Result<Self, Error> {
        Self::from_letters(rank, &[i as i32])
    }

    /// Reduce an arbitrary letter sequence.
    pub fn from_letters(rank: usize, letters: &[i32]) -> Result<Self, Error> {
        if rank > MAX_RANK {
            return Err(Error::ResourceGuard(format!("rank {rank} exceeds {MAX_RANK}")));
        }
        let mut out: Vec<i8> = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::Domain(format!("letter {l} out of range for rank {rank}")));
            }
            push_reduced(&mut out, l as i8);
        }
        Ok(GroupWord { rank, letters: out })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum of generator `i`.
    pub fn exponent_sum(&self, i: usize) -> i64 {
        self.letters.iter().filter(|l| l.unsigned_abs() as usize == i).map(|&l| l.signum() as i64).sum()
    }

    pub fn uses_generator(&self, i: usize) -> bool {
        self.letters.iter().any(|l| l.unsigned_abs() as usize == i)
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.rank != other.rank {
            return Err(Error::Mismatch(format!("words of rank {} and {}", self.rank, other.rank)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        GroupWord { rank: self.rank, letters: out }
    }

    pub fn inverse(&self) -> Self {
        GroupWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_unchecked(&base);
        }
        acc
    }

    /// `[u,v] = u⁻¹v⁻¹uv`.
    pub fn commutator(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.inverse().mul_unchecked(&other.inverse()).mul_unchecked(self).mul_unchecked(other))
    }

    /// `[[…[u_1,u_2],…],u_k]`.
    pub fn left_normed(us: &[GroupWord]) -> Result<Self, Error> {
        let (first, rest) = us.split_first().ok_or_else(|| Error::Domain("empty commutator".into()))?;
        rest.iter().try_fold(first.clone(), |acc, u| acc.commutator(u))
    }

    /// Image under `x_i ↦ images[i-1]`.
    pub fn substitute(&self, images: &[GroupWord]) -> Result<Self, Error> {
        if images.len() != self.rank {
            return Err(Error::Shape(format!("{} images for rank {}", images.len(), self.rank)));
        }
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let inverses: Vec<GroupWord> = images.iter().map(|w| w.inverse()).collect();
        let mut out = GroupWord::identity(rank);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            out = out.mul_unchecked(if l > 0 { &images[i] } else { &inverses[i] });
        }
        Ok(out)
    }

    /// Word with the same letters viewed in a larger rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self, Error> {
        let lv: Vec<i32> = self.letters.iter().map(|&l| l as i32).collect();
        Self::from_letters(rank, &lv)
    }
}

fn push_reduced(out: &mut Vec<i8>, l: i8) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl Ord for GroupWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rank, self.letters.len(), &self.letters).cmp(&(other.rank, other.letters.len(), &other.letters))
    }
}

impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GroupWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Expression tree of iterated commutators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutatorExpr {
    Leaf(GroupWord),
    Bracket(Box<CommutatorExpr>, Box<CommutatorExpr>),
}

impl CommutatorExpr {
    pub fn leaf(w: GroupWord) -> Self {
        CommutatorExpr::Leaf(w)
    }

    pub fn bracket(a: CommutatorExpr, b: CommutatorExpr) -> Self {
        CommutatorExpr::Bracket(Box::new(a), Box::new(b))
    }

    /// Left-normed tree `[[u_1,u_2],…,u_k]`.
    pub fn left_normed(us: &[GroupWord]) -> Result<Self, Error> {
        let (first, rest) = us.split_first().ok_or_else(|| Error::Domain("empty commutator".into()))?;
        Ok(rest
            .iter()
            .fold(CommutatorExpr::Leaf(first.clone()), |acc, u| Self::bracket(acc, CommutatorExpr::Leaf(u.clone()))))
    }

    pub fn evaluate(&self) -> Result<GroupWord, Error> {
        match self {
            CommutatorExpr::Leaf(w) => Ok(w.clone()),
            CommutatorExpr::Bracket(a, b) => a.evaluate()?.commutator(&b.evaluate()?),
        }
    }

    /// Number of leaves, i.e. the nominal commutator weight when all
    /// leaves are generators.
    pub fn weight(&self) -> usize {
        match self {
            CommutatorExpr::Leaf(_) => 1,
            CommutatorExpr::Bracket(a, b) => a.weight() + b.weight(),
        }
    }
}

impl fmt::Display for CommutatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommutatorExpr::Leaf(w) => write!(f, "{w}"),
            CommutatorExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Finite ℤ-linear combination of group words.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<GroupWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero(rank: usize) -> Self {
        GroupRingElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_word(GroupWord::identity(rank))
    }

    pub fn from_word(w: GroupWord) -> Self {
        let rank = w.rank;
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        GroupRingElement { rank, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (GroupWord, BigInt)>>(rank: usize, it: I) -> Result<Self, Error> {
        let mut e = Self::zero(rank);
        for (w, c) in it {
            if w.rank != rank {
                return Err(Error::Mismatch(format!("word of rank {} in ring of rank {rank}", w.rank)));
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &GroupWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, w: GroupWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&w) {
            Some(a) => a + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(w, v);
        }
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.rank != other.rank {
            return Err(Error::Mismatch(format!("ring elements of rank {} and {}", self.rank, other.rank)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupRingElement { rank: self.rank, terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let mut out = Self::zero(self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul_unchecked(v), a * b);
            }
        }
        Ok(out)
    }

    /// Left multiplication by a single word.
    pub fn left_mul_word(&self, w: &GroupWord) -> Self {
        let mut out = Self::zero(self.rank);
        for (u, c) in &self.terms {
            out.add_term(w.mul_unchecked(u), c.clone());
        }
        out
    }

    /// Augmentation `o`: sum of coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Linear extension of a group homomorphism given on generators.
    pub fn substitute(&self, images: &[GroupWord]) -> Result<Self, Error> {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Self::zero(rank);
        for (w, c) in &self.terms {
            out.add_term(w.substitute(images)?, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let a = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_identity() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{a}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GroupRingElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct T {
            word: String,
            coeff: String,
        }
        let v: Vec<T> = self.terms.iter().map(|(w, c)| T { word: w.to_string(), coeff: c.to_string() }).collect();
        v.serialize(s)
    }
}

/// Magnus images `1 + X_i` and their inverses, cached per truncation.
pub struct MagnusTable {
    fwd: Vec<TruncatedSeries>,
    inv: Vec<TruncatedSeries>,
}

impl MagnusTable {
    pub fn new(rank: usize, trunc: usize) -> Self {
        let one = TruncatedSeries::one(rank, trunc);
        let fwd: Vec<_> = (1..=rank)
            .map(|i| one.add(&TruncatedSeries::variable(rank, trunc, i).unwrap()).unwrap())
            .collect();
        let inv = fwd.iter().map(|s| s.invert_unit().unwrap()).collect();
        MagnusTable { fwd, inv }
    }

    pub fn letter(&self, l: i8) -> &TruncatedSeries {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            &self.fwd[i]
        } else {
            &self.inv[i]
        }
    }

    pub fn word(&self, w: &GroupWord) -> TruncatedSeries {
        let (rank, trunc) = (self.fwd.len(), self.fwd.first().map_or(0, |s| s.truncation()));
        let mut acc = TruncatedSeries::one(rank, trunc);
        for &l in &w.letters {
            acc = acc.mul(self.letter(l)).expect("shapes agree");
        }
        debug_assert!(acc.is_integral());
        acc
    }
}

/// `τ(w)` with `τ(x_i) = 1 + X_i`.
pub fn magnus(w: &GroupWord, trunc: usize) -> TruncatedSeries {
    MagnusTable::new(w.rank, trunc).word(w)
}

pub fn magnus_ring(e: &GroupRingElement, trunc: usize) -> TruncatedSeries {
    let table = MagnusTable::new(e.rank, trunc);
    let mut acc = TruncatedSeries::zero(e.rank, trunc);
    for (w, c) in &e.terms {
        let s = table.word(w).scalar_mul(&Rational::from_bigint(c.clone()));
        acc = acc.add(&s).expect("shapes agree");
    }
    acc
}

/// Lower central degree read off the Magnus expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum LcsDegree {
    Exact(usize),
    /// `τ(w) − 1` vanishes through degree N.
    Beyond(usize),
}

impl LcsDegree {
    /// Whether the word is known to lie in `F_n`.
    pub fn at_least(&self, n: usize) -> bool {
        match *self {
            LcsDegree::Exact(d) => d >= n,
            LcsDegree::Beyond(big_n) => big_n + 1 >= n,
        }
    }
}

impl fmt::Display for LcsDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcsDegree::Exact(d) => write!(f, "{d}"),
            LcsDegree::Beyond(n) => write!(f, "beyond {n}"),
        }
    }
}

pub fn lcs_degree(w: &GroupWord, trunc: usize) -> LcsDegree {
    let s = magnus(w, trunc).sub(&TruncatedSeries::one(w.rank, trunc)).expect("shapes agree");
    match s.lowest_degree() {
        Some(d) => LcsDegree::Exact(d),
        None => LcsDegree::Beyond(trunc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(r: usize, l: &[i32]) -> GroupWord {
        GroupWord::from_letters(r, l).unwrap()
    }

    #[test]
    fn reduction_and_inverse() {
        assert!(w(2, &[1]).mul(&w(2, &[-1])).unwrap().is_identity());
        assert_eq!(w(2, &[1, 2]).inverse(), w(2, &[-2, -1]));
        assert_eq!(w(3, &[1, 2, -2, 3]), w(3, &[1, 3]));
        assert!(w(2, &[1]).mul(&w(3, &[1])).is_err());
        assert!(GroupWord::from_letters(2, &[3]).is_err());
    }

    #[test]
    fn commutators() {
        let (x1, x2, x3) = (w(3, &[1]), w(3, &[2]), w(3, &[3]));
        assert!(x1.commutator(&x1).unwrap().is_identity());
        assert_eq!(x1.commutator(&x2).unwrap(), w(3, &[-1, -2, 1, 2]));
        let ln = GroupWord::left_normed(&[x1.clone(), x2.clone(), x3.clone()]).unwrap();
        assert_eq!(ln, x1.commutator(&x2).unwrap().commutator(&x3).unwrap());
        assert!(GroupWord::left_normed(&[]).is_err());
        let e = CommutatorExpr::left_normed(&[x1, x2, x3]).unwrap();
        assert_eq!(e.evaluate().unwrap(), ln);
        assert_eq!(e.weight(), 3);
    }

    #[test]
    fn magnus_examples() {
        assert_eq!(magnus(&w(2, &[1]), 3).to_string(), "1 + X1");
        assert_eq!(magnus(&w(2, &[-1]), 3).to_string(), "1 - X1 + X1*X1 - X1*X1*X1");
        let c = magnus(&w(2, &[-1, -2, 1, 2]), 3);
        assert_eq!(c.graded_part(1).unwrap().to_string(), "0");
        assert_eq!(c.graded_part(2).unwrap().to_string(), "X1*X2 - X2*X1");
        let e = GroupRingElement::from_word(w(2, &[1])).sub(&GroupRingElement::one(2)).unwrap();
        assert_eq!(magnus_ring(&e, 3).to_string(), "X1");
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(lcs_degree(&w(2, &[1]), 4), LcsDegree::Exact(1));
        assert_eq!(lcs_degree(&w(2, &[-1, -2, 1, 2]), 4), LcsDegree::Exact(2));
        let (x1, x2) = (w(2, &[1]), w(2, &[2]));
        let c = GroupWord::left_normed(&[x1, x2.clone(), x2.clone(), x2]).unwrap();
        assert_eq!(lcs_degree(&c, 5), LcsDegree::Exact(4));
        assert_eq!(lcs_degree(&GroupWord::identity(2), 5), LcsDegree::Beyond(5));
    }
}
