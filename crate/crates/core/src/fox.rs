//! Fox free differential calculus and Jacobian matrices.
//!
//! Sign convention: `∂_i(x_i⁻¹) = −x_i⁻¹`, the only choice compatible with
//! the Leibniz rule `∂_i(uv) = ∂_i(u)·o(v) + u·∂_i(v)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::freegroup::{lcs_degree, magnus_ring, GroupRingElement, GroupWord, LcsDegree};
use crate::parse::parse_map;
use crate::series::TruncatedSeries;
use crate::Error;

fn check_index(rank: usize, i: usize) -> Result<(), Error> {
    if i == 0 || i > rank {
        return Err(Error::Domain(format!("generator index {i} out of range 1..{rank}")));
    }
    Ok(())
}

/// `∂_i w` for a single word.
pub fn fox_derivative_word(w: &GroupWord, i: usize) -> Result<GroupRingElement, Error> {
    check_index(w.rank(), i)?;
    let rank = w.rank();
    let letters: Vec<i32> = w.letters().iter().map(|&l| l as i32).collect();
    let mut out = GroupRingElement::zero(rank);
    for (t, &l) in letters.iter().enumerate() {
        if l.unsigned_abs() as usize != i {
            continue;
        }
        // prefixes of a reduced word are reduced
        if l > 0 {
            out.add_term(GroupWord::from_letters(rank, &letters[..t])?, BigInt::one());
        } else {
            out.add_term(GroupWord::from_letters(rank, &letters[..=t])?, -BigInt::one());
        }
    }
    Ok(out)
}

/// `∂_i e`, extended linearly.
pub fn fox_derivative(e: &GroupRingElement, i: usize) -> Result<GroupRingElement, Error> {
    check_index(e.rank(), i)?;
    let mut out = GroupRingElement::zero(e.rank());
    for (w, c) in e.terms() {
        out = out.add(&fox_derivative_word(w, i)?.scale(c))?;
    }
    Ok(out)
}

/// `u⁻¹v⁻¹((u−1)∂_i v − (v−1)∂_i u)`.
pub fn fox_commutator_formula(u: &GroupWord, v: &GroupWord, i: usize) -> Result<GroupRingElement, Error> {
    if u.rank() != v.rank() {
        return Err(Error::Mismatch("words of different rank".into()));
    }
    let one = GroupRingElement::one(u.rank());
    let um1 = GroupRingElement::from_word(u.clone()).sub(&one)?;
    let vm1 = GroupRingElement::from_word(v.clone()).sub(&one)?;
    let inner = um1.mul(&fox_derivative_word(v, i)?)?.sub(&vm1.mul(&fox_derivative_word(u, i)?)?)?;
    Ok(inner.left_mul_word(&u.inverse().mul(&v.inverse())?))
}

/// Checks `e − o(e) = Σ_i ∂_i(e)(x_i − 1)` exactly in ℤF.
pub fn fundamental_relation_check(e: &GroupRingElement) -> Result<bool, Error> {
    let r = e.rank();
    let one = GroupRingElement::one(r);
    let lhs = e.sub(&one.scale(&e.augmentation()))?;
    let mut rhs = GroupRingElement::zero(r);
    for i in 1..=r {
        let xi = GroupRingElement::from_word(GroupWord::generator(r, i)?).sub(&one)?;
        rhs = rhs.add(&fox_derivative(e, i)?.mul(&xi)?)?;
    }
    Ok(lhs == rhs)
}

/// Leibniz rule `∂_i(uv) = ∂_i(u)·o(v) + u·∂_i(v)` for one pair.
pub fn leibniz_check(u: &GroupRingElement, v: &GroupRingElement, i: usize) -> Result<bool, Error> {
    let lhs = fox_derivative(&u.mul(v)?, i)?;
    let rhs = fox_derivative(u, i)?.scale(&v.augmentation()).add(&u.mul(&fox_derivative(v, i)?)?)?;
    Ok(lhs == rhs)
}

/// For `u` of lower central degree `n`: `∂_i[u,x_j] ≡ δ_ij(u−1) − (x_j−1)∂_i u`
/// through degree `n` under τ.
pub fn commutator_special_case_check(u: &GroupWord, i: usize, j: usize) -> Result<bool, Error> {
    let r = u.rank();
    check_index(r, i)?;
    check_index(r, j)?;
    let n = match lcs_degree(u, 12) {
        LcsDegree::Exact(n) => n,
        LcsDegree::Beyond(_) => return Ok(true),
    };
    let xj = GroupWord::generator(r, j)?;
    let one = GroupRingElement::one(r);
    let lhs = fox_derivative_word(&u.commutator(&xj)?, i)?;
    let mut rhs = GroupRingElement::from_word(xj).sub(&one)?.mul(&fox_derivative_word(u, i)?)?.neg();
    if i == j {
        rhs = rhs.add(&GroupRingElement::from_word(u.clone()).sub(&one)?)?;
    }
    let diff = magnus_ring(&lhs.sub(&rhs)?, n);
    Ok(diff.is_zero())
}

/// An endomorphism of F given by the images of the generators.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EndomorphismWords {
    rank: usize,
    images: Vec<GroupWord>,
}

impl EndomorphismWords {
    pub fn new(images: Vec<GroupWord>) -> Result<Self, Error> {
        let rank = images.len();
        if rank == 0 {
            return Err(Error::Domain("rank must be positive".into()));
        }
        if let Some(w) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::Mismatch(format!("image {w} has rank {} in rank {rank}", w.rank())));
        }
        Ok(EndomorphismWords { rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        EndomorphismWords { rank, images: (1..=rank).map(|i| GroupWord::generator(rank, i).unwrap()).collect() }
    }

    pub fn parse(s: &str, rank: Option<usize>) -> Result<Self, Error> {
        Self::new(parse_map(s, rank)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &GroupWord {
        &self.images[i - 1]
    }

    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord, Error> {
        w.substitute(&self.images)
    }

    /// `x^{φψ} = (x^φ)^ψ` (right action).
    pub fn compose(&self, psi: &EndomorphismWords) -> Result<Self, Error> {
        if psi.rank != self.rank {
            return Err(Error::Mismatch("endomorphisms of different rank".into()));
        }
        let images = self.images.iter().map(|w| psi.apply(w)).collect::<Result<_, _>>()?;
        Ok(EndomorphismWords { rank: self.rank, images })
    }

    /// `f_i = x_i⁻¹ x_i^φ`.
    pub fn f(&self, i: usize) -> GroupWord {
        GroupWord::generator(self.rank, i).unwrap().inverse().mul_unchecked(&self.images[i - 1])
    }

    /// Largest `n ≤ N−1` with every `f_i ∈ F_{n+1}` (0 if the map is not IA).
    pub fn ia_level(&self, trunc: usize) -> usize {
        (1..=self.rank)
            .map(|i| match lcs_degree(&self.f(i), trunc) {
                LcsDegree::Exact(d) => d - 1,
                LcsDegree::Beyond(n) => n,
            })
            .min()
            .unwrap_or(0)
    }

    /// Error naming the first generator whose `f_i` is not in `F_{n+1}`.
    pub fn require_ia(&self, n: usize, trunc: usize) -> Result<(), Error> {
        if trunc < n + 1 {
            return Err(Error::Precondition(format!("truncation {trunc} below n+1 = {}", n + 1)));
        }
        for i in 1..=self.rank {
            let d = lcs_degree(&self.f(i), trunc);
            if !d.at_least(n + 1) {
                return Err(Error::Precondition(format!(
                    "x{i}^-1 * x{i}^phi has lower central degree {d}, need at least {}",
                    n + 1
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for EndomorphismWords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().enumerate().map(|(i, w)| format!("x{}->{}", i + 1, w)).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// `Dφ = (∂_j x_i^φ)_{i,j}` over ℤF.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobianMatrix {
    rank: usize,
    entries: Vec<GroupRingElement>,
}

impl JacobianMatrix {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[(i - 1) * self.rank + (j - 1)]
    }

    /// `τ(Dφ)` at truncation `N`.
    pub fn to_series(&self, trunc: usize) -> SeriesMatrix {
        SeriesMatrix { rank: self.rank, trunc, entries: self.entries.iter().map(|e| magnus_ring(e, trunc)).collect() }
    }

    /// `τ(Dφ) − 𝟙`.
    pub fn reduced(&self, trunc: usize) -> SeriesMatrix {
        self.to_series(trunc).sub(&SeriesMatrix::identity(self.rank, trunc)).expect("shapes agree")
    }
}

pub fn jacobian(phi: &EndomorphismWords) -> Result<JacobianMatrix, Error> {
    let r = phi.rank;
    let mut entries = Vec::with_capacity(r * r);
    for i in 1..=r {
        for j in 1..=r {
            entries.push(fox_derivative_word(phi.image(i), j)?);
        }
    }
    Ok(JacobianMatrix { rank: r, entries })
}

pub fn reduced_jacobian(phi: &EndomorphismWords, trunc: usize) -> Result<SeriesMatrix, Error> {
    Ok(jacobian(phi)?.reduced(trunc))
}

/// Degree-`n` part of `Σ_i τ(∂_i f_i)` for `φ` IA at level `n`.
pub fn jacobian_trace(phi: &EndomorphismWords, n: usize, trunc: usize) -> Result<TruncatedSeries, Error> {
    phi.require_ia(n, trunc)?;
    let r = phi.rank;
    let mut acc = GroupRingElement::zero(r);
    for i in 1..=r {
        acc = acc.add(&fox_derivative_word(&phi.f(i), i)?)?;
    }
    magnus_ring(&acc, trunc).graded_part(n)
}

/// Whether the trace of `D̄φ` is cyclically balanced in degree `n`.
pub fn bglm_test(phi: &EndomorphismWords, n: usize) -> Result<bool, Error> {
    if n < 2 {
        return Err(Error::Precondition(format!("degree {n} < 2")));
    }
    jacobian_trace(phi, n, n + 1)?.is_cyclically_balanced(n)
}

/// Square matrix of truncated series.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SeriesMatrix {
    rank: usize,
    trunc: usize,
    entries: Vec<TruncatedSeries>,
}

impl SeriesMatrix {
    pub fn zero(rank: usize, trunc: usize) -> Self {
        SeriesMatrix { rank, trunc, entries: vec![TruncatedSeries::zero(rank, trunc); rank * rank] }
    }

    pub fn identity(rank: usize, trunc: usize) -> Self {
        let mut m = Self::zero(rank, trunc);
        for i in 0..rank {
            m.entries[i * rank + i] = TruncatedSeries::one(rank, trunc);
        }
        m
    }

    pub fn from_entries(rank: usize, trunc: usize, entries: Vec<TruncatedSeries>) -> Result<Self, Error> {
        if entries.len() != rank * rank {
            return Err(Error::Shape(format!("{} entries for a {rank}x{rank} matrix", entries.len())));
        }
        if entries.iter().any(|e| e.rank() != rank || e.truncation() != trunc) {
            return Err(Error::Mismatch("entry with different rank or truncation".into()));
        }
        Ok(SeriesMatrix { rank, trunc, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &TruncatedSeries {
        &self.entries[(i - 1) * self.rank + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TruncatedSeries) {
        self.entries[(i - 1) * self.rank + (j - 1)] = v;
    }

    fn zip(&self, other: &Self, f: impl Fn(&TruncatedSeries, &TruncatedSeries) -> Result<TruncatedSeries, Error>) -> Result<Self, Error> {
        if self.rank != other.rank || self.trunc != other.trunc {
            return Err(Error::Mismatch("matrices of different shape".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect::<Result<_, _>>()?;
        Ok(SeriesMatrix { rank: self.rank, trunc: self.trunc, entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.rank != other.rank || self.trunc != other.trunc {
            return Err(Error::Mismatch("matrices of different shape".into()));
        }
        let r = self.rank;
        let mut out = Self::zero(r, self.trunc);
        for i in 1..=r {
            for j in 1..=r {
                let mut acc = TruncatedSeries::zero(r, self.trunc);
                for k in 1..=r {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self, Error> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> TruncatedSeries {
        let mut acc = TruncatedSeries::zero(self.rank, self.trunc);
        for i in 1..=self.rank {
            acc = acc.add(self.get(i, i)).expect("shapes agree");
        }
        acc
    }

    pub fn graded_part(&self, n: usize) -> Result<Self, Error> {
        let entries = self.entries.iter().map(|e| e.graded_part(n)).collect::<Result<_, _>>()?;
        Ok(SeriesMatrix { rank: self.rank, trunc: self.trunc, entries })
    }

    /// Apply a substitution `X_j ↦ images[j-1]` to every entry.
    pub fn substitute(&self, images: &[TruncatedSeries]) -> Result<Self, Error> {
        let entries = self.entries.iter().map(|e| e.substitute(images)).collect::<Result<_, _>>()?;
        Ok(SeriesMatrix { rank: self.rank, trunc: self.trunc, entries })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Nonzero entries as `(i, j, series)`, 1-based.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &TruncatedSeries)> {
        let r = self.rank;
        (1..=r)
            .flat_map(|i| (1..=r).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let e = self.get(i, j);
                (!e.is_zero()).then_some((i, j, e))
            })
            .collect()
    }
}

impl fmt::Display for SeriesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rank {
            let row: Vec<String> = (1..=self.rank).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" | "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SeriesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;

    fn w(s: &str, r: usize) -> GroupWord {
        parse_word(s, Some(r)).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(fox_derivative_word(&w("x1", 2), 1).unwrap().to_string(), "1");
        assert_eq!(fox_derivative_word(&w("x1^-1", 2), 1).unwrap().to_string(), "-x1^-1");
        // x1^-1 x2^-1 (1 - x2)
        let d = fox_derivative_word(&w("[x1,x2]", 2), 1).unwrap();
        let expect = GroupRingElement::from_word(w("x1^-1*x2^-1", 2))
            .sub(&GroupRingElement::from_word(w("x1^-1", 2)))
            .unwrap();
        assert_eq!(d, expect);
        assert_eq!(fox_commutator_formula(&w("x1", 2), &w("x2", 2), 1).unwrap(), expect);
        assert!(fox_commutator_formula(&w("x1*x2", 2), &w("x1*x2", 2), 1).unwrap().is_zero());
        assert!(fox_derivative_word(&w("x1", 2), 3).is_err());
    }

    #[test]
    fn fundamental_relation_examples() {
        assert!(fundamental_relation_check(&GroupRingElement::from_word(w("x1*x2", 2))).unwrap());
        assert!(fundamental_relation_check(&GroupRingElement::one(2)).unwrap());
    }

    #[test]
    fn identity_jacobian() {
        let id = EndomorphismWords::identity(3);
        assert!(reduced_jacobian(&id, 3).unwrap().is_zero());
        assert!(jacobian_trace(&id, 2, 3).unwrap().is_zero());
    }
}
