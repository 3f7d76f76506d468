use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::EndomorphismJet;
use crate::exactmath::{Rational, SpanBuilder, SparseVec};
use crate::fox::{EndomorphismWords, SeriesMatrix};
use crate::freegroup::{lcs_degree, magnus, GroupWord, MagnusTable};
use crate::lie::{dynkin_test, LieElement};
use crate::series::{Monomial, TruncatedSeries, MAX_DEGREE};
use crate::Error;

/// `Σ_i f_i ∂_i`: the automorphism `x_i ↦ x_i(1 + f_i)` read as a class in
/// degree `n`, i.e. modulo terms of degree > n+1.
///
/// Components are stored as full series; equality compares only their
/// degree-(n+1) parts.
#[derive(Clone, Serialize)]
pub struct DerivationVector {
    rank: usize,
    degree: usize,
    components: Vec<TruncatedSeries>,
}

impl DerivationVector {
    pub fn new(degree: usize, components: Vec<TruncatedSeries>) -> Result<Self, Error> {
        let rank = components.len();
        if rank == 0 {
            return Err(Error::Domain("no components".into()));
        }
        let trunc = components[0].truncation();
        if trunc < degree + 1 {
            return Err(Error::Precondition(format!("truncation {trunc} cannot hold degree {}", degree + 1)));
        }
        for (i, c) in components.iter().enumerate() {
            if c.rank() != rank || c.truncation() != trunc {
                return Err(Error::Mismatch(format!("component {} has rank {}, N={}", i + 1, c.rank(), c.truncation())));
            }
            if let Some(d) = c.lowest_degree() {
                if d <= degree {
                    return Err(Error::Precondition(format!(
                        "component {} has a term of degree {d}, expected at least {}",
                        i + 1,
                        degree + 1
                    )));
                }
            }
        }
        Ok(DerivationVector { rank, degree, components })
    }

    pub fn zero(rank: usize, degree: usize, trunc: usize) -> Self {
        DerivationVector { rank, degree, components: vec![TruncatedSeries::zero(rank, trunc); rank] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn truncation(&self) -> usize {
        self.components[0].truncation()
    }

    pub fn components(&self) -> &[TruncatedSeries] {
        &self.components
    }

    /// Degree-(n+1) part of component `i` (1-based).
    pub fn class_component(&self, i: usize) -> TruncatedSeries {
        self.components[i - 1].graded_part(self.degree + 1).expect("truncation checked")
    }

    pub fn class(&self) -> Vec<TruncatedSeries> {
        (1..=self.rank).map(|i| self.class_component(i)).collect()
    }

    /// The vector holding only the class parts.
    pub fn class_only(&self) -> Self {
        DerivationVector { rank: self.rank, degree: self.degree, components: self.class() }
    }

    pub fn is_zero_class(&self) -> bool {
        self.class().iter().all(|c| c.is_zero())
    }

    /// Whether every class component is a Lie element.
    pub fn is_lie_class(&self) -> bool {
        self.class().iter().all(|c| c.is_zero() || dynkin_test(c, self.degree + 1).unwrap_or(false))
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.rank != other.rank || self.degree != other.degree || self.truncation() != other.truncation() {
            return Err(Error::Mismatch(format!(
                "(r={}, n={}, N={}) vs (r={}, n={}, N={})",
                self.rank,
                self.degree,
                self.truncation(),
                other.rank,
                other.degree,
                other.truncation()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect::<Result<_, _>>()?;
        Ok(DerivationVector { rank: self.rank, degree: self.degree, components })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DerivationVector { rank: self.rank, degree: self.degree, components: self.components.iter().map(|s| s.scalar_mul(c)).collect() }
    }

    pub fn with_truncation(&self, trunc: usize) -> Result<Self, Error> {
        Self::new(self.degree, self.components.iter().map(|s| s.with_truncation(trunc)).collect())
    }

    /// Jet of `x_i ↦ x_i(1 + f_i)`.
    pub fn to_jet(&self) -> EndomorphismJet {
        let (r, n) = (self.rank, self.truncation());
        let one = TruncatedSeries::one(r, n);
        let images = (1..=r)
            .map(|i| {
                let xi = one.add(&TruncatedSeries::variable(r, n, i).unwrap()).unwrap();
                xi.mul(&one.add(&self.components[i - 1]).unwrap()).unwrap()
            })
            .collect();
        EndomorphismJet::from_images(images).expect("unipotent images")
    }

    /// Class-level reduced Jacobian: entry `(i,j)` is the right derivative
    /// of the class component `i` by `X_j` (degree n).
    pub fn jacobian_class(&self) -> SeriesMatrix {
        let r = self.rank;
        let cls = self.class();
        let mut entries = Vec::with_capacity(r * r);
        for c in &cls {
            for j in 1..=r {
                entries.push(c.strip_right(j));
            }
        }
        SeriesMatrix::from_entries(r, self.truncation(), entries).expect("shapes agree")
    }

    /// `Σ_i ∂_i(class_i)`, homogeneous of degree n.
    pub fn trace(&self) -> TruncatedSeries {
        let mut acc = TruncatedSeries::zero(self.rank, self.truncation());
        for i in 1..=self.rank {
            acc = acc.add(&self.class_component(i).strip_right(i)).unwrap();
        }
        acc
    }
}

impl PartialEq for DerivationVector {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.degree == other.degree && self.class() == other.class()
    }
}

impl fmt::Debug for DerivationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{}(r={}): ", self.degree, self.rank)?;
        let parts: Vec<String> = self.class().iter().enumerate().map(|(i, c)| format!("x{}* ⊗ ({})", i + 1, c)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Either a group element of `F_{n+1}` or a homogeneous Lie element of degree `n+1`.
#[derive(Clone, Debug)]
pub enum LieInput {
    Word(GroupWord),
    Lie(LieElement),
}

/// `ρ(α ⊗ f)`: component `i` is `τ(f)^{α_i} − 1`.
pub fn rho(alpha: &[i64], f: &LieInput, n: usize, trunc: usize) -> Result<DerivationVector, Error> {
    let r = alpha.len();
    if trunc < n + 1 {
        return Err(Error::Precondition(format!("truncation {trunc} below {}", n + 1)));
    }
    match f {
        LieInput::Word(w) => {
            if w.rank() != r {
                return Err(Error::Mismatch(format!("covector of length {r} for a word of rank {}", w.rank())));
            }
            let d = lcs_degree(w, trunc);
            if !d.at_least(n + 1) {
                return Err(Error::Precondition(format!("{w} has lower central degree {d}, need {}", n + 1)));
            }
            let tf = magnus(w, trunc);
            let one = TruncatedSeries::one(r, trunc);
            let comps = alpha.iter().map(|&a| tf.pow(a)?.sub(&one)).collect::<Result<_, _>>()?;
            DerivationVector::new(n, comps)
        }
        LieInput::Lie(l) => {
            if l.degree() != n + 1 {
                return Err(Error::Precondition(format!("Lie element of degree {}, need {}", l.degree(), n + 1)));
            }
            let s = l.series();
            if s.rank() != r {
                return Err(Error::Mismatch(format!("covector of length {r} for rank {}", s.rank())));
            }
            let s = s.with_truncation(trunc);
            DerivationVector::new(n, alpha.iter().map(|&a| s.scalar_mul(&Rational::from(a))).collect())
        }
    }
}

/// `x_i ↦ x_i f^{α_i}` as words.
pub fn rho_words(alpha: &[i64], f: &GroupWord) -> Result<EndomorphismWords, Error> {
    let r = f.rank();
    if alpha.len() != r {
        return Err(Error::Mismatch(format!("covector of length {} for rank {r}", alpha.len())));
    }
    let images = (1..=r)
        .map(|i| GroupWord::generator(r, i).unwrap().mul_unchecked(&f.pow(alpha[i - 1])))
        .collect();
    EndomorphismWords::new(images)
}

/// `σ(φ)`: `f_i = (1+X_i)⁻¹·τ(x_i^φ) − 1`, for `φ` trivial through degree n.
pub fn sigma(phi: &EndomorphismJet, n: usize) -> Result<DerivationVector, Error> {
    let (r, trunc) = (phi.rank(), phi.truncation());
    if trunc < n + 1 {
        return Err(Error::Precondition(format!("jet truncation {trunc} below {}", n + 1)));
    }
    let table = MagnusTable::new(r, trunc);
    let one = TruncatedSeries::one(r, trunc);
    let mut comps = Vec::with_capacity(r);
    for i in 1..=r {
        let f = table.letter(-(i as i8)).mul(phi.image(i))?.sub(&one)?;
        if let Some(d) = f.lowest_degree() {
            if d <= n {
                return Err(Error::Precondition(format!(
                    "jet is not in level {n}: x{i} picks up a term of degree {d}"
                )));
            }
        }
        comps.push(f);
    }
    DerivationVector::new(n, comps)
}

/// `Σ_w c_w Σ_t w_{<t}·G_{w_t}·w_{>t}`: the derivation `X_j ↦ G_j` applied to `F`.
fn derive(f: &TruncatedSeries, g: &[TruncatedSeries], out: &mut HashMap<Monomial, Rational>, sign: &Rational) {
    for (w, c) in f.terms() {
        let cw = c * sign;
        let d = w.degree();
        for t in 0..d {
            let (pre, post) = (w.slice(0, t), w.slice(t + 1, d));
            for (u, e) in g[w.at(t) - 1].terms() {
                let m = pre.concat(u).concat(&post);
                let v = &cw * e;
                let slot = out.entry(m).or_insert_with(Rational::zero);
                *slot += v;
            }
        }
    }
}

/// Bracket `M_m × M_n → M_{m+n}`: `[F,G]_i = D_G(F_i) − D_F(G_i)`, where
/// `D_G` is the derivation with `X_j ↦ G_j`. Agrees with `σ` of the group
/// commutator `φ⁻¹χ⁻¹φχ` of the corresponding jets.
pub fn bracket(a: &DerivationVector, b: &DerivationVector) -> Result<DerivationVector, Error> {
    if a.rank != b.rank {
        return Err(Error::Mismatch(format!("ranks {} and {}", a.rank, b.rank)));
    }
    let (m, n) = (a.degree, b.degree);
    let need = m + n + 2;
    let trunc = a.truncation().min(b.truncation());
    if trunc < need {
        return Err(Error::Precondition(format!("truncation {trunc} below m+n+2 = {need}")));
    }
    if m + n + 1 > MAX_DEGREE {
        return Err(Error::ResourceGuard(format!("degree {} exceeds {MAX_DEGREE}", m + n + 1)));
    }
    let (fa, fb) = (a.class(), b.class());
    let (one, minus) = (Rational::one(), Rational::from(-1));
    let mut comps = Vec::with_capacity(a.rank);
    for i in 0..a.rank {
        let mut map = HashMap::new();
        derive(&fa[i], &fb, &mut map, &one);
        derive(&fb[i], &fa, &mut map, &minus);
        let s = TruncatedSeries::from_terms(a.rank, trunc, map.into_iter().filter(|(_, c)| !c.is_zero()))?;
        comps.push(s);
    }
    DerivationVector::new(m + n, comps)
}

fn derive_series(f: &TruncatedSeries, g: &[TruncatedSeries]) -> Result<TruncatedSeries, Error> {
    let mut map = HashMap::new();
    derive(f, g, &mut map, &Rational::one());
    TruncatedSeries::from_terms(f.rank(), f.truncation(), map.into_iter().filter(|(_, c)| !c.is_zero()))
}

/// Degree `m+n` part of `D̄` of the commutator, predicted from the classes:
/// `[D̄a, D̄b] + D_b(D̄a) − D_a(D̄b)`, the derivations acting entrywise.
/// The last two terms have the same degree as the first and do not vanish in general.
pub fn jacobian_of_bracket(a: &DerivationVector, b: &DerivationVector) -> Result<SeriesMatrix, Error> {
    let trunc = a.truncation().min(b.truncation());
    let (ja, jb) = (a.with_truncation(trunc)?.jacobian_class(), b.with_truncation(trunc)?.jacobian_class());
    let (fa, fb) = (a.class(), b.class());
    let mut out = ja.commutator(&jb)?;
    let r = a.rank;
    for i in 1..=r {
        for j in 1..=r {
            let t = derive_series(ja.get(i, j), &fb)?.sub(&derive_series(jb.get(i, j), &fa)?)?;
            let e = out.get(i, j).add(&t.with_truncation(trunc))?;
            out.set(i, j, e);
        }
    }
    Ok(out)
}

/// The operator form `[Y∂_i, Z∂_j] = ∂_j(Y)Z∂_i − ∂_i(Z)Y∂_j`, read literally with
/// `∂_j` the right derivative. Kept for comparison with [`bracket`]; the two
/// disagree in general since `∂_j(Y)Z` only replaces a final letter.
pub fn poisson_bracket(a: &DerivationVector, b: &DerivationVector) -> Result<DerivationVector, Error> {
    if a.rank != b.rank {
        return Err(Error::Mismatch(format!("ranks {} and {}", a.rank, b.rank)));
    }
    let trunc = a.truncation().min(b.truncation());
    if trunc < a.degree + b.degree + 2 {
        return Err(Error::Precondition(format!("truncation {trunc} below m+n+2 = {}", a.degree + b.degree + 2)));
    }
    let (fa, fb) = (a.class(), b.class());
    let r = a.rank;
    let mut comps = Vec::with_capacity(r);
    for k in 0..r {
        let mut acc = TruncatedSeries::zero(r, trunc);
        for j in 0..r {
            acc = acc.add(&fa[k].strip_right(j + 1).mul(&fb[j])?)?;
            acc = acc.sub(&fb[k].strip_right(j + 1).mul(&fa[j])?)?;
        }
        comps.push(acc);
    }
    DerivationVector::new(a.degree + b.degree, comps)
}

/// Coordinates over the `r·r^{n+1}` slots `(i, monomial of degree n+1)`.
pub fn vectorize(v: &DerivationVector) -> SparseVec {
    let r = v.rank;
    let block = r.pow(v.degree as u32 + 1);
    let mut map = BTreeMap::new();
    for (i, c) in v.class().iter().enumerate() {
        for (m, q) in c.terms() {
            map.insert(i * block + monomial_index(m, r), q.clone());
        }
    }
    SparseVec::from_map(map)
}

/// Base-r index of a monomial among those of its degree.
pub fn monomial_index(m: &Monomial, r: usize) -> usize {
    (0..m.degree()).fold(0, |acc, k| acc * r + (m.at(k) - 1))
}

/// Exact rank of the span of classes of one common `(r, n)`.
pub fn span_rank(vs: &[DerivationVector]) -> Result<usize, Error> {
    let Some(first) = vs.first() else { return Ok(0) };
    let mut sb = SpanBuilder::new();
    for v in vs {
        if v.rank != first.rank || v.degree != first.degree {
            return Err(Error::Mismatch(format!("classes of degree {} and {}", first.degree, v.degree)));
        }
        sb.insert(&vectorize(v));
    }
    Ok(sb.rank())
}
