use std::fmt;
use std::sync::Arc;

use super::{DerivationVector, EndomorphismJet};
use crate::fox::EndomorphismWords;
use crate::freegroup::{lcs_degree, magnus, GroupWord};
use crate::series::TruncatedSeries;
use crate::Error;

/// An automorphism built from basic ones by group commutators, with
/// inverses tracked symbolically.
#[derive(Clone)]
pub enum AutExpr {
    Basic { name: String, map: EndomorphismWords, inverse: EndomorphismWords },
    Commutator(Arc<AutExpr>, Arc<AutExpr>),
}

impl AutExpr {
    pub fn rank(&self) -> usize {
        match self {
            AutExpr::Basic { map, .. } => map.rank(),
            AutExpr::Commutator(a, _) => a.rank(),
        }
    }

    pub fn commutator(a: AutExpr, b: AutExpr) -> AutExpr {
        AutExpr::Commutator(Arc::new(a), Arc::new(b))
    }

    /// Images as words. These grow quickly with nesting depth.
    pub fn words(&self) -> Result<EndomorphismWords, Error> {
        Ok(self.words_pair()?.0)
    }

    fn words_pair(&self) -> Result<(EndomorphismWords, EndomorphismWords), Error> {
        match self {
            AutExpr::Basic { map, inverse, .. } => Ok((map.clone(), inverse.clone())),
            AutExpr::Commutator(a, b) => {
                let (fa, ia) = a.words_pair()?;
                let (fb, ib) = b.words_pair()?;
                // [a,b]⁻¹ = [b,a]
                let c = ia.compose(&ib)?.compose(&fa)?.compose(&fb)?;
                let ci = ib.compose(&ia)?.compose(&fb)?.compose(&fa)?;
                Ok((c, ci))
            }
        }
    }

    /// Jet at truncation N, evaluated without expanding words.
    pub fn jet(&self, trunc: usize) -> Result<EndomorphismJet, Error> {
        Ok(self.jet_pair(trunc)?.0)
    }

    fn jet_pair(&self, trunc: usize) -> Result<(EndomorphismJet, EndomorphismJet), Error> {
        match self {
            AutExpr::Basic { map, inverse, .. } => {
                Ok((EndomorphismJet::from_words(map, trunc), EndomorphismJet::from_words(inverse, trunc)))
            }
            AutExpr::Commutator(a, b) => {
                let (fa, ia) = a.jet_pair(trunc)?;
                let (fb, ib) = b.jet_pair(trunc)?;
                let c = EndomorphismJet::commutator_with_inverses(&fa, &ia, &fb, &ib)?;
                let ci = EndomorphismJet::commutator_with_inverses(&fb, &ib, &fa, &ia)?;
                Ok((c, ci))
            }
        }
    }
}

impl fmt::Display for AutExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutExpr::Basic { name, .. } => write!(f, "{name}"),
            AutExpr::Commutator(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

fn gen(r: usize, i: usize) -> GroupWord {
    GroupWord::generator(r, i).unwrap()
}

fn check_indices(r: usize, idx: &[usize]) -> Result<(), Error> {
    if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > r) {
        return Err(Error::Domain(format!("index {bad} out of range 1..{r}")));
    }
    Ok(())
}

fn basic_k(r: usize, a: usize, b: usize, c: usize) -> Result<AutExpr, Error> {
    check_indices(r, &[a, b, c])?;
    let xa = gen(r, a);
    let (xb, xc) = (gen(r, b), gen(r, c));
    let mut fwd: Vec<GroupWord> = (1..=r).map(|i| gen(r, i)).collect();
    let mut inv = fwd.clone();
    if b == c {
        // trivial commutator
    } else if b == a {
        // conjugation x_a ↦ x_c⁻¹ x_a x_c
        fwd[a - 1] = xc.inverse().mul(&xa)?.mul(&xc)?;
        inv[a - 1] = xc.mul(&xa)?.mul(&xc.inverse())?;
    } else if c == a {
        return Err(Error::Domain(format!("K_{{{a},{b},{c}}}: x_a -> x_a[x_b,x_a] is not an automorphism")));
    } else {
        fwd[a - 1] = xa.mul(&xb.commutator(&xc)?)?;
        inv[a - 1] = xa.mul(&xc.commutator(&xb)?)?;
    }
    Ok(AutExpr::Basic {
        name: format!("K_{{{a},{b},{c}}}"),
        map: EndomorphismWords::new(fwd)?,
        inverse: EndomorphismWords::new(inv)?,
    })
}

/// Magnus generator `K_{i,j,k}: x_i ↦ x_i[x_j,x_k]`.
pub fn magnus_generator_k(r: usize, i: usize, j: usize, k: usize) -> Result<EndomorphismWords, Error> {
    basic_k(r, i, j, k)?.words()
}

/// Symbolic form of `K_{i,j,k}`.
pub fn k_basic(r: usize, i: usize, j: usize, k: usize) -> Result<AutExpr, Error> {
    basic_k(r, i, j, k)
}

/// The auxiliary index used at each step of a chain: the smallest
/// `k ∉ {i, ω_{n−1}, j}` (`j` is excluded so that `K_{k,ω_n,j}` is an
/// automorphism of F).
pub fn chain_pivot(r: usize, i: usize, omega: &[usize], j: usize) -> Option<usize> {
    let prev = omega[omega.len() - 2];
    (1..=r).find(|&k| k != i && k != prev && k != j)
}

/// `K_{i,ω,j} = [K_{i,ω_1…ω_{n−1},k}, K_{k,ω_n,j}]`, with `K_{i,ω_1,j}` basic.
pub fn k_chain_expr(r: usize, i: usize, omega: &[usize], j: usize) -> Result<AutExpr, Error> {
    check_indices(r, omega)?;
    check_indices(r, &[i, j])?;
    if omega.is_empty() {
        return Err(Error::Domain("ω must be nonempty".into()));
    }
    if i == j || omega.contains(&i) {
        return Err(Error::Domain(format!("K chain needs j != i and i not in ω (i={i}, ω={omega:?}, j={j})")));
    }
    if omega.len() == 1 {
        return basic_k(r, i, omega[0], j);
    }
    let n = omega.len();
    let k = chain_pivot(r, i, omega, j)
        .ok_or_else(|| Error::Domain(format!("no auxiliary index for i={i}, ω={omega:?}, j={j} in rank {r}")))?;
    let left = k_chain_expr(r, i, &omega[..n - 1], k)?;
    let right = basic_k(r, k, omega[n - 1], j)?;
    Ok(AutExpr::commutator(left, right))
}

/// Same chain with the auxiliary index at each step given explicitly:
/// `pivots[m]` joins `ω_1…ω_{m+1}` to `ω_{m+2}`.
pub fn k_chain_expr_with(r: usize, i: usize, omega: &[usize], j: usize, pivots: &[usize]) -> Result<AutExpr, Error> {
    check_indices(r, omega)?;
    check_indices(r, &[i, j])?;
    check_indices(r, pivots)?;
    if omega.is_empty() || pivots.len() + 1 != omega.len() {
        return Err(Error::Domain(format!("need |ω| >= 1 and |ω|-1 pivots, got {} and {}", omega.len(), pivots.len())));
    }
    if i == j || omega.contains(&i) {
        return Err(Error::Domain(format!("K chain needs j != i and i not in ω (i={i}, ω={omega:?}, j={j})")));
    }
    let n = omega.len();
    if n == 1 {
        return basic_k(r, i, omega[0], j);
    }
    let k = pivots[n - 2];
    if k == i || k == omega[n - 2] || k == j {
        return Err(Error::Domain(format!("pivot {k} must avoid i={i}, ω_(n-1)={}, j={j}", omega[n - 2])));
    }
    let left = k_chain_expr_with(r, i, &omega[..n - 1], k, &pivots[..n - 2])?;
    Ok(AutExpr::commutator(left, basic_k(r, k, omega[n - 1], j)?))
}

pub fn k_chain(r: usize, i: usize, omega: &[usize], j: usize) -> Result<EndomorphismWords, Error> {
    k_chain_expr(r, i, omega, j)?.words()
}

/// `L_{i,ω,j,k} = [K_{i,ω_2…ω_n k,j}, K_{j,ω_1,i}]`.
pub fn l_gen_expr(r: usize, i: usize, omega: &[usize], j: usize, k: usize) -> Result<AutExpr, Error> {
    check_indices(r, &[i, j, k])?;
    if i == j || j == k || k == i || omega.contains(&i) || omega.is_empty() {
        return Err(Error::Domain(format!("L needs distinct i,j,k and i not in ω (i={i}, ω={omega:?}, j={j}, k={k})")));
    }
    let mut tail: Vec<usize> = omega[1..].to_vec();
    tail.push(k);
    let left = k_chain_expr(r, i, &tail, j)?;
    let right = basic_k(r, j, omega[0], i)?;
    Ok(AutExpr::commutator(left, right))
}

pub fn l_gen(r: usize, i: usize, omega: &[usize], j: usize, k: usize) -> Result<EndomorphismWords, Error> {
    l_gen_expr(r, i, omega, j, k)?.words()
}

/// `T_w: x_r ↦ x_r w`, others fixed, as a class in degree n.
pub fn transvection_t(w: &GroupWord, n: usize, trunc: usize) -> Result<DerivationVector, Error> {
    let r = w.rank();
    if w.uses_generator(r) {
        return Err(Error::Precondition(format!("{w} uses x{r}")));
    }
    let d = lcs_degree(w, trunc.max(n + 1));
    if !d.at_least(n + 1) {
        return Err(Error::Precondition(format!("{w} has lower central degree {d}, need {}", n + 1)));
    }
    let mut comps = vec![TruncatedSeries::zero(r, trunc); r];
    comps[r - 1] = magnus(w, trunc).sub(&TruncatedSeries::one(r, trunc))?;
    DerivationVector::new(n, comps)
}

pub fn transvection_words(w: &GroupWord) -> Result<EndomorphismWords, Error> {
    let r = w.rank();
    let mut images: Vec<GroupWord> = (1..=r).map(|i| gen(r, i)).collect();
    images[r - 1] = images[r - 1].mul(w)?;
    EndomorphismWords::new(images)
}

/// `A_{a_1…a_n}: x_i ↦ x_i[x_i,a_1,…,a_n]` as words.
pub fn assoc_words(r: usize, a: &[GroupWord]) -> Result<EndomorphismWords, Error> {
    if a.is_empty() {
        return Err(Error::Domain("A needs at least one word".into()));
    }
    let images = (1..=r)
        .map(|i| {
            let mut parts = vec![gen(r, i)];
            parts.extend(a.iter().cloned());
            gen(r, i).mul(&GroupWord::left_normed(&parts)?)
        })
        .collect::<Result<_, _>>()?;
    EndomorphismWords::new(images)
}

/// Class of `A_{a_1…a_n}` in degree n.
pub fn assoc_a(r: usize, a: &[GroupWord], trunc: usize) -> Result<DerivationVector, Error> {
    let n = a.len();
    let phi = assoc_words(r, a)?;
    let one = TruncatedSeries::one(r, trunc);
    let comps = (1..=r).map(|i| magnus(&phi.f(i), trunc).sub(&one)).collect::<Result<_, _>>()?;
    DerivationVector::new(n, comps)
}

/// Class of conjugation `x_i ↦ w⁻¹x_iw` for `w ∈ F_n`; components `τ([x_i,w]) − 1`.
pub fn inner_derivation(w: &GroupWord, n: usize, trunc: usize) -> Result<DerivationVector, Error> {
    let r = w.rank();
    let d = lcs_degree(w, trunc);
    if !d.at_least(n) {
        return Err(Error::Precondition(format!("{w} has lower central degree {d}, need {n}")));
    }
    let one = TruncatedSeries::one(r, trunc);
    let comps = (1..=r)
        .map(|i| magnus(&gen(r, i).commutator(w)?, trunc).sub(&one))
        .collect::<Result<_, _>>()?;
    DerivationVector::new(n, comps)
}

/// Inner class from a homogeneous Lie element `L` of degree n: components `[X_i, L]`.
pub fn inner_from_lie(l: &TruncatedSeries, n: usize) -> Result<DerivationVector, Error> {
    let (r, trunc) = (l.rank(), l.truncation());
    let comps = (1..=r)
        .map(|i| TruncatedSeries::variable(r, trunc, i)?.commutator(l))
        .collect::<Result<_, _>>()?;
    DerivationVector::new(n, comps)
}

/// Classes of all Magnus generators `K_{a,b,c}` (b ≠ c, c ≠ a) in degree 1.
pub fn degree_one_generators(r: usize, trunc: usize) -> Vec<(String, DerivationVector)> {
    let mut out = Vec::new();
    for a in 1..=r {
        for b in 1..=r {
            for c in 1..=r {
                if b == c || c == a {
                    continue;
                }
                let mut comps = vec![TruncatedSeries::zero(r, trunc); r];
                let xb = TruncatedSeries::variable(r, trunc, b).unwrap();
                let xc = TruncatedSeries::variable(r, trunc, c).unwrap();
                comps[a - 1] = xb.commutator(&xc).unwrap();
                out.push((format!("K_{{{a},{b},{c}}}"), DerivationVector::new(1, comps).unwrap()));
            }
        }
    }
    out
}
