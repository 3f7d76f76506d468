//! Truncated noncommutative power series ℤ⟪X_1..X_r⟫ / (degree > N).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactmath::Rational;
use crate::Error;

/// Largest supported number of variables.
pub const MAX_RANK: usize = 15;
/// Largest supported monomial degree.
pub const MAX_DEGREE: usize = 16;

/// A word `X_{i_1}…X_{i_n}` in the variables, letters 1-based.
///
/// Letters are packed four bits apiece with the first letter most
/// significant, so the derived order is length first, then lexicographic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    len: u8,
    bits: u64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { len: 0, bits: 0 };

    pub fn new(letters: &[usize]) -> Result<Self, Error> {
        if letters.len() > MAX_DEGREE {
            return Err(Error::ResourceGuard(format!(
                "monomial degree {} exceeds {MAX_DEGREE}",
                letters.len()
            )));
        }
        let mut bits = 0u64;
        for &l in letters {
            if l == 0 || l > MAX_RANK {
                return Err(Error::Domain(format!("variable index {l} out of range")));
            }
            bits = (bits << 4) | l as u64;
        }
        Ok(Monomial { len: letters.len() as u8, bits })
    }

    pub fn letter(i: usize) -> Self {
        debug_assert!((1..=MAX_RANK).contains(&i));
        Monomial { len: 1, bits: i as u64 }
    }

    pub fn degree(&self) -> usize {
        self.len as usize
    }

    /// The `k`-th letter, 0-based.
    pub fn at(&self, k: usize) -> usize {
        debug_assert!(k < self.degree());
        ((self.bits >> (4 * (self.degree() - 1 - k))) & 0xf) as usize
    }

    pub fn letters(&self) -> Vec<usize> {
        (0..self.degree()).map(|k| self.at(k)).collect()
    }

    pub fn first(&self) -> Option<usize> {
        (self.len > 0).then(|| self.at(0))
    }

    pub fn last(&self) -> Option<usize> {
        (self.len > 0).then(|| (self.bits & 0xf) as usize)
    }

    pub fn max_letter(&self) -> usize {
        (0..self.degree()).map(|k| self.at(k)).max().unwrap_or(0)
    }

    /// Concatenation; panics past [`MAX_DEGREE`].
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let len = self.len + other.len;
        assert!(len as usize <= MAX_DEGREE, "monomial degree overflow");
        let bits = match (self.len, other.len) {
            (_, 0) => self.bits,
            (0, _) => other.bits,
            _ => (self.bits << (4 * other.len)) | other.bits,
        };
        Monomial { len, bits }
    }

    /// Drop the first letter.
    pub fn tail(&self) -> Monomial {
        debug_assert!(self.len > 0);
        let len = self.len - 1;
        let mask = if len == 0 { 0 } else { (1u64 << (4 * len)) - 1 };
        Monomial { len, bits: self.bits & mask }
    }

    /// Drop the last letter.
    pub fn init(&self) -> Monomial {
        debug_assert!(self.len > 0);
        Monomial { len: self.len - 1, bits: self.bits >> 4 }
    }

    /// Letters `a..b` (0-based, half open).
    pub fn slice(&self, a: usize, b: usize) -> Monomial {
        debug_assert!(a <= b && b <= self.degree());
        let len = b - a;
        let shifted = self.bits >> (4 * (self.degree() - b));
        let mask = if len == 0 { 0 } else if len == 16 { u64::MAX } else { (1u64 << (4 * len)) - 1 };
        Monomial { len: len as u8, bits: shifted & mask }
    }

    /// `X_{i_1}X_{i_2}…X_{i_n} ↦ X_{i_2}…X_{i_n}X_{i_1}`.
    pub fn cyclic_rotate(&self) -> Monomial {
        if self.len <= 1 {
            return *self;
        }
        let first = self.at(0);
        self.tail().concat(&Monomial::letter(first))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters().iter().map(|l| format!("X{l}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of ℚ⟪X_1..X_r⟫ modulo terms of degree > `truncation`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    rank: usize,
    trunc: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn accumulate(map: &mut HashMap<Monomial, Rational>, m: Monomial, c: Rational) {
    match map.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn collect(map: HashMap<Monomial, Rational>) -> BTreeMap<Monomial, Rational> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl TruncatedSeries {
    pub fn zero(rank: usize, trunc: usize) -> Self {
        assert!(rank <= MAX_RANK && trunc <= MAX_DEGREE, "series shape beyond supported scale");
        TruncatedSeries { rank, trunc, terms: BTreeMap::new() }
    }

    pub fn constant(rank: usize, trunc: usize, c: Rational) -> Self {
        let mut s = Self::zero(rank, trunc);
        if !c.is_zero() {
            s.terms.insert(Monomial::ONE, c);
        }
        s
    }

    pub fn one(rank: usize, trunc: usize) -> Self {
        Self::constant(rank, trunc, Rational::one())
    }

    /// `X_i` (1-based).
    pub fn variable(rank: usize, trunc: usize, i: usize) -> Result<Self, Error> {
        Self::monomial(rank, trunc, &[i], Rational::one())
    }

    pub fn monomial(rank: usize, trunc: usize, letters: &[usize], c: Rational) -> Result<Self, Error> {
        let m = Monomial::new(letters)?;
        Self::from_terms(rank, trunc, [(m, c)])
    }

    /// Build from terms; repeated monomials add up, terms above the
    /// truncation are dropped.
    pub fn from_terms<I>(rank: usize, trunc: usize, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        if rank > MAX_RANK || trunc > MAX_DEGREE {
            return Err(Error::ResourceGuard(format!("rank {rank}, truncation {trunc}")));
        }
        let mut map = HashMap::new();
        for (m, c) in terms {
            if m.max_letter() > rank {
                return Err(Error::Domain(format!("monomial {m} uses a variable beyond rank {rank}")));
            }
            if m.degree() <= trunc {
                accumulate(&mut map, m, c);
            }
        }
        Ok(TruncatedSeries { rank, trunc, terms: collect(map) })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn coeff_of(&self, letters: &[usize]) -> Rational {
        Monomial::new(letters).map(|m| self.coeff(&m)).unwrap_or_default()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.rank != other.rank || self.trunc != other.trunc {
            return Err(Error::Mismatch(format!(
                "(rank {}, N={}) vs (rank {}, N={})",
                self.rank, self.trunc, other.rank, other.trunc
            )));
        }
        Ok(())
    }

    /// Same terms, new truncation (dropping what no longer fits).
    pub fn with_truncation(&self, trunc: usize) -> Self {
        assert!(trunc <= MAX_DEGREE);
        TruncatedSeries {
            rank: self.rank,
            trunc,
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= trunc).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let v = terms.get(m).map_or_else(|| c.clone(), |a| a + c);
            if v.is_zero() {
                terms.remove(m);
            } else {
                terms.insert(*m, v);
            }
        }
        Ok(TruncatedSeries { rank: self.rank, trunc: self.trunc, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&Rational::from(-1))
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank, self.trunc);
        }
        TruncatedSeries {
            rank: self.rank,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(self.mul_unchecked(other, self.trunc))
    }

    /// Product keeping degrees ≤ `budget`; the BTreeMap order is by degree,
    /// so inner loops stop at the first monomial that is too long.
    fn mul_unchecked(&self, other: &Self, budget: usize) -> Self {
        let mut map = HashMap::new();
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            if d1 > budget {
                break;
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.degree() > budget {
                    break;
                }
                accumulate(&mut map, m1.concat(m2), c1 * c2);
            }
        }
        TruncatedSeries { rank: self.rank, trunc: self.trunc, terms: collect(map) }
    }

    /// Inverse of a series with constant term ±1.
    pub fn invert_unit(&self) -> Result<Self, Error> {
        let c = self.constant_term();
        if !(c.is_one() || c == Rational::from(-1)) {
            return Err(Error::NotInvertible(format!("constant term {c} is not a unit")));
        }
        // a = c(1 + u), a^{-1} = c(1 - u + u^2 - ...)
        let u = self.scalar_mul(&c).sub(&Self::one(self.rank, self.trunc))?;
        let mut acc = Self::one(self.rank, self.trunc);
        let mut pw = Self::one(self.rank, self.trunc);
        let lowest = u.lowest_degree().unwrap_or(usize::MAX);
        let mut k: usize = 1;
        while k.saturating_mul(lowest) <= self.trunc {
            pw = pw.mul_unchecked(&u, self.trunc).neg();
            acc = acc.add(&pw)?;
            k += 1;
        }
        Ok(acc.scalar_mul(&c))
    }

    /// `self^k` for a unit series, `k` of either sign.
    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        let base = if k < 0 { self.invert_unit()? } else { self.clone() };
        let mut acc = Self::one(self.rank, self.trunc);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_unchecked(&base, self.trunc);
        }
        Ok(acc)
    }

    pub fn graded_part(&self, n: usize) -> Result<Self, Error> {
        if n > self.trunc {
            return Err(Error::Domain(format!("degree {n} above truncation {}", self.trunc)));
        }
        Ok(self.graded_part_unchecked(n))
    }

    fn graded_part_unchecked(&self, n: usize) -> Self {
        let lo = Monomial { len: n as u8, bits: 0 };
        TruncatedSeries {
            rank: self.rank,
            trunc: self.trunc,
            terms: self
                .terms
                .range(lo..)
                .take_while(|(m, _)| m.degree() == n)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn highest_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }

    fn require_homogeneous(&self, n: usize) -> Result<(), Error> {
        if self.is_homogeneous(n) {
            Ok(())
        } else {
            Err(Error::Domain(format!("series is not homogeneous of degree {n}")))
        }
    }

    /// Evaluate at `X_i ↦ images[i-1]`; every image must have zero constant term.
    pub fn substitute(&self, images: &[TruncatedSeries]) -> Result<Self, Error> {
        if images.len() != self.rank {
            return Err(Error::Shape(format!("{} images for rank {}", images.len(), self.rank)));
        }
        let rank = images.first().map_or(self.rank, |s| s.rank);
        for (i, img) in images.iter().enumerate() {
            if img.rank != rank || img.trunc != self.trunc {
                return Err(Error::Mismatch(format!("image {} has rank {}, N={}", i + 1, img.rank, img.trunc)));
            }
            if !img.constant_term().is_zero() {
                return Err(Error::Domain(format!("image {} has nonzero constant term", i + 1)));
            }
        }
        let mindeg: Vec<usize> = images.iter().map(|s| s.lowest_degree().unwrap_or(usize::MAX)).collect();
        let terms: Vec<(Monomial, &Rational)> = self.terms.iter().map(|(m, c)| (*m, c)).collect();
        let out = subst_rec(&terms, images, &mindeg, self.trunc, rank, self.trunc);
        Ok(TruncatedSeries { rank, trunc: self.trunc, terms: out.terms })
    }

    /// Apply the cyclic rotation γ to every monomial.
    pub fn rotate(&self) -> Self {
        let mut map = HashMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut map, m.cyclic_rotate(), c.clone());
        }
        TruncatedSeries { rank: self.rank, trunc: self.trunc, terms: collect(map) }
    }

    /// `a·(1 + γ + … + γ^{n-1})` for homogeneous `a` of degree `n`.
    pub fn cyclic_symmetrize(&self, n: usize) -> Result<Self, Error> {
        self.require_homogeneous(n)?;
        let mut map = HashMap::new();
        for (m, c) in &self.terms {
            let mut w = *m;
            for _ in 0..n.max(1) {
                accumulate(&mut map, w, c.clone());
                w = w.cyclic_rotate();
            }
        }
        Ok(TruncatedSeries { rank: self.rank, trunc: self.trunc, terms: collect(map) })
    }

    pub fn is_cyclically_balanced(&self, n: usize) -> Result<bool, Error> {
        Ok(self.cyclic_symmetrize(n)?.is_zero())
    }

    /// Right Fox derivative in ℝ: `Σ c_w w'` over the terms `w = w'X_i`.
    ///
    /// Together with the constant term this inverts `a ↦ c + Σ a_i X_i`.
    pub fn strip_right(&self, i: usize) -> Self {
        TruncatedSeries {
            rank: self.rank,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.last() == Some(i))
                .map(|(m, c)| (m.init(), c.clone()))
                .collect(),
        }
    }

    /// Left analogue of [`strip_right`](Self::strip_right).
    pub fn strip_left(&self, i: usize) -> Self {
        TruncatedSeries {
            rank: self.rank,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.first() == Some(i))
                .map(|(m, c)| (m.tail(), c.clone()))
                .collect(),
        }
    }

    /// Ring commutator `ab − ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self, Error> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson { word: m.letters(), coeff: c.clone() })
            .collect()
    }
}

fn subst_rec(
    terms: &[(Monomial, &Rational)],
    images: &[TruncatedSeries],
    mindeg: &[usize],
    budget: usize,
    rank: usize,
    trunc: usize,
) -> TruncatedSeries {
    // a = c + Σ_l X_l a_l  ⇒  a(img) = c + Σ_l img_l · a_l(img)
    let mut out = TruncatedSeries { rank, trunc, terms: BTreeMap::new() };
    let mut groups: BTreeMap<usize, Vec<(Monomial, &Rational)>> = BTreeMap::new();
    for (m, c) in terms {
        match m.first() {
            None => {
                out.terms.insert(Monomial::ONE, (*c).clone());
            }
            Some(l) => groups.entry(l).or_default().push((m.tail(), *c)),
        }
    }
    let mut map: HashMap<Monomial, Rational> = out.terms.into_iter().collect();
    for (l, sub) in groups {
        let d = mindeg[l - 1];
        if d > budget {
            continue;
        }
        let inner = subst_rec(&sub, images, mindeg, budget - d, rank, trunc);
        for (m1, c1) in &images[l - 1].terms {
            let d1 = m1.degree();
            if d1 > budget {
                break;
            }
            for (m2, c2) in &inner.terms {
                if d1 + m2.degree() > budget {
                    break;
                }
                accumulate(&mut map, m1.concat(m2), c1 * c2);
            }
        }
    }
    TruncatedSeries { rank, trunc, terms: collect(map) }
}

/// One `{word, coeff}` record in the JSON form of a series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<usize>,
    pub coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    rank: usize,
    truncation: usize,
    terms: Vec<TermJson>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesJson { rank: self.rank, truncation: self.trunc, terms: self.to_json_terms() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = SeriesJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            terms.push((Monomial::new(&t.word).map_err(serde::de::Error::custom)?, t.coeff));
        }
        TruncatedSeries::from_terms(j.rank, j.truncation, terms).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[r={} N={}] {}", self.rank, self.trunc, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(r: usize, n: usize, i: usize) -> TruncatedSeries {
        TruncatedSeries::variable(r, n, i).unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn monomial_order_and_slices() {
        let a = Monomial::new(&[2]).unwrap();
        let b = Monomial::new(&[1, 1]).unwrap();
        let c = Monomial::new(&[1, 2]).unwrap();
        assert!(a < b && b < c);
        let w = Monomial::new(&[1, 2, 3]).unwrap();
        assert_eq!(w.cyclic_rotate().letters(), vec![2, 3, 1]);
        assert_eq!(w.slice(1, 3).letters(), vec![2, 3]);
        assert_eq!(w.tail().letters(), vec![2, 3]);
        assert_eq!(w.init().letters(), vec![1, 2]);
        assert_eq!(w.last(), Some(3));
        assert!(Monomial::new(&[0]).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let one = TruncatedSeries::one(2, 3);
        let x1 = x(2, 3, 1);
        let x2 = x(2, 3, 2);
        assert!(x1.add(&x1.neg()).unwrap().is_zero());
        let p = one.add(&x1).unwrap().mul(&one.add(&x2).unwrap()).unwrap();
        assert_eq!(p.to_string(), "1 + X1 + X2 + X1*X2");
        assert_ne!(x1.mul(&x2).unwrap(), x2.mul(&x1).unwrap());
        let geo = TruncatedSeries::from_terms(
            2,
            3,
            [(Monomial::ONE, q(1)), (Monomial::new(&[1]).unwrap(), q(-1)), (Monomial::new(&[1, 1]).unwrap(), q(1)), (Monomial::new(&[1, 1, 1]).unwrap(), q(-1))],
        )
        .unwrap();
        assert_eq!(one.add(&x1).unwrap().mul(&geo).unwrap(), one);
        assert_eq!(one.add(&x1).unwrap().invert_unit().unwrap(), geo);
        assert!(x1.invert_unit().is_err());
        assert!(x(2, 3, 1).add(&x(2, 4, 1)).is_err());
        assert!(x(2, 3, 1).add(&x(3, 3, 1)).is_err());
    }

    #[test]
    fn graded_and_substitution() {
        let s = TruncatedSeries::one(2, 3).add(&x(2, 3, 1)).unwrap().add(&x(2, 3, 1).mul(&x(2, 3, 2)).unwrap()).unwrap();
        assert_eq!(s.graded_part(2).unwrap().to_string(), "X1*X2");
        assert_eq!(s.graded_part(0).unwrap().to_string(), "1");
        assert!(s.graded_part(4).is_err());
        let x12 = x(2, 3, 1).mul(&x(2, 3, 2)).unwrap();
        let swapped = x12.substitute(&[x(2, 3, 2), x(2, 3, 1)]).unwrap();
        assert_eq!(swapped.to_string(), "X2*X1");
        let img = x(2, 3, 1).add(&x12).unwrap();
        assert_eq!(x(2, 3, 1).substitute(&[img.clone(), x(2, 3, 2)]).unwrap(), img);
        assert!(x12.substitute(&[TruncatedSeries::one(2, 3), x(2, 3, 2)]).is_err());
    }

    #[test]
    fn cyclic() {
        let x12 = x(2, 2, 1).mul(&x(2, 2, 2)).unwrap();
        let x21 = x(2, 2, 2).mul(&x(2, 2, 1)).unwrap();
        let c = x12.sub(&x21).unwrap();
        assert!(c.cyclic_symmetrize(2).unwrap().is_zero());
        assert!(c.is_cyclically_balanced(2).unwrap());
        assert_eq!(x12.cyclic_symmetrize(2).unwrap().to_string(), "X1*X2 + X2*X1");
        assert!(!x12.is_cyclically_balanced(2).unwrap());
        assert!(x12.add(&x(2, 2, 1)).unwrap().cyclic_symmetrize(2).is_err());
    }

    #[test]
    fn text_form() {
        let s = TruncatedSeries::from_terms(2, 3, [(Monomial::new(&[2, 1]).unwrap(), q(-1)), (Monomial::ONE, q(1)), (Monomial::new(&[1, 2]).unwrap(), Rational::new(3, 2))]).unwrap();
        assert_eq!(s.to_string(), "1 + 3/2*X1*X2 - X2*X1");
    }
}
