use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::gl::{gl_dimension, lr_coefficients};
use super::partition::{maj_class_count, partitions, partitions_bounded, Partition};
use crate::exactmath::{divisors, euler_phi, moebius, ramanujan_sum};
use crate::lie::witt_rank;
use crate::Error;

/// Multiplicity of U_λ in S_n: standard tableaux with maj ≡ 1 (mod n).
pub fn klyashko_multiplicity(shape: &Partition) -> u128 {
    let n = shape.weight();
    if n == 0 {
        return 0;
    }
    maj_class_count(shape, n, 1)
}

/// GL_r shapes of J_n with their multiplicities.
pub fn j_shapes(r: usize, n: usize) -> Vec<(Partition, u128)> {
    partitions_bounded(n, r)
        .into_iter()
        .map(|l| {
            let m = klyashko_multiplicity(&l);
            (l, m)
        })
        .filter(|(_, m)| *m > 0)
        .collect()
}

pub fn dim_j(r: usize, n: usize) -> BigInt {
    j_shapes(r, n).iter().map(|(l, m)| gl_dimension(l, r) * BigInt::from(*m)).sum()
}

/// dim S_n = Σ_λ mult·#SYT(λ).
pub fn dim_s(n: usize) -> u128 {
    partitions(n).iter().map(|l| klyashko_multiplicity(l) * l.syt_count()).sum()
}

pub fn dim_m(r: usize, n: usize) -> BigInt {
    BigInt::from(r) * witt_rank(r as u64, n as u64 + 1)
}

/// Shapes of T_n: μ ⊢ n+1 with ≤ r−1 rows and maj ≡ 1 (mod n+1), inflated.
pub fn t_shapes(r: usize, n: usize) -> Vec<(Partition, Partition, u128)> {
    if r < 2 {
        return Vec::new();
    }
    j_shapes(r - 1, n + 1).into_iter().map(|(mu, m)| (mu.inflate(r - 1), mu, m)).collect()
}

pub fn dim_t(r: usize, n: usize) -> BigInt {
    t_shapes(r, n).iter().map(|(l, _, m)| gl_dimension(l, r) * BigInt::from(*m)).sum()
}

/// The closed rank formula for L_n, valid for r ≥ n > 1.
pub fn theorem2_rank(r: u64, n: u64) -> Result<BigInt, Error> {
    if n <= 1 {
        return Err(Error::Domain(format!("the rank formula needs n > 1, got n = {n}")));
    }
    Ok(BigInt::from(r) * witt_rank(r, n + 1) - dim_rni(r, n, 0))
}

/// The older closed forms for rank two and three of the filtration, in their
/// original indexing: they equal `dim L_1` and `theorem2_rank(r, 2)`.
pub fn pettet_ranks(r: u64) -> (BigInt, BigInt) {
    let r = BigInt::from(r);
    let l2 = &r * &r * (&r - 1) / 2;
    let l3 = &r * &r * (&r * &r - 4) / 3 + &r * (&r - 1) / 2;
    (l2, l3)
}

/// dim R_n^i = (1/n) Σ_{d|n} c_d(i) r^{n/d}, with c_d the Ramanujan sum.
pub fn dim_rni(r: u64, n: u64, i: i64) -> BigInt {
    assert!(n >= 1, "dim_rni needs n >= 1");
    let mut s = BigInt::zero();
    for d in divisors(n) {
        let c = ramanujan_sum(d, i).expect("d >= 1");
        s += BigInt::from(c) * BigInt::from(r).pow((n / d) as u32);
    }
    s / BigInt::from(n)
}

/// `(1/n) Σ_{d|n} φ(d) r^{n/d}`, the i = 0 special case written with totients.
pub fn dim_rn0_phi(r: u64, n: u64) -> BigInt {
    let s: BigInt = divisors(n)
        .into_iter()
        .map(|d| BigInt::from(euler_phi(d).unwrap()) * BigInt::from(r).pow((n / d) as u32))
        .sum();
    s / BigInt::from(n)
}

/// `(1/n) Σ_{d|n} μ(d) r^{n/d}`.
pub fn dim_rn1_mobius(r: u64, n: u64) -> BigInt {
    let s: BigInt = divisors(n)
        .into_iter()
        .map(|d| BigInt::from(moebius(d).unwrap()) * BigInt::from(r).pow((n / d) as u32))
        .sum();
    s / BigInt::from(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Part {
    T,
    A,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionEntry {
    pub part: Option<Part>,
    pub shape: Partition,
    /// For T-part shapes, the μ ⊢ n+1 before inflation.
    pub inflated_from: Option<Partition>,
    pub multiplicity: u64,
    pub dimension: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub rank: usize,
    pub degree: usize,
    pub module: String,
    pub entries: Vec<DecompositionEntry>,
    pub total: BigInt,
    pub notes: Vec<String>,
}

impl DecompositionReport {
    fn new(rank: usize, degree: usize, module: &str, entries: Vec<DecompositionEntry>) -> Self {
        let total = entries.iter().map(|e| &e.dimension * BigInt::from(e.multiplicity)).sum();
        DecompositionReport { rank, degree, module: module.into(), entries, total, notes: Vec::new() }
    }

    pub fn part_total(&self, part: Part) -> BigInt {
        self.entries
            .iter()
            .filter(|e| e.part == Some(part))
            .map(|e| &e.dimension * BigInt::from(e.multiplicity))
            .sum()
    }
}

fn mult(m: u128) -> u64 {
    m.to_u64().expect("multiplicity fits")
}

/// Decomposition of L_n ⊗ ℚ for r ≥ n. With `allow_conjectural`,
/// r = n−1 is accepted and the report notes whether the total matches
/// the rank formula.
pub fn theorem3_decomposition(r: usize, n: usize, allow_conjectural: bool) -> Result<DecompositionReport, Error> {
    if n < 2 || r < 2 {
        return Err(Error::Domain(format!("need r >= 2 and n >= 2, got r={r}, n={n}")));
    }
    let conjectural = r < n;
    if r + 1 < n {
        return Err(Error::Precondition(format!("no decomposition is claimed for r < n-1 (r={r}, n={n})")));
    }
    if conjectural && !allow_conjectural {
        return Err(Error::Precondition(format!(
            "the decomposition is proven for r >= n (r={r}, n={n}); r = n-1 needs the conjectural flag"
        )));
    }
    let mut entries: Vec<DecompositionEntry> = t_shapes(r, n)
        .into_iter()
        .map(|(shape, mu, m)| DecompositionEntry {
            part: Some(Part::T),
            dimension: gl_dimension(&shape, r),
            shape,
            inflated_from: Some(mu),
            multiplicity: mult(m),
        })
        .collect();
    for lam in partitions_bounded(n, r) {
        let m = lam.syt_count() - maj_class_count(&lam, n, 0);
        if m > 0 {
            entries.push(DecompositionEntry {
                part: Some(Part::A),
                dimension: gl_dimension(&lam, r),
                shape: lam,
                inflated_from: None,
                multiplicity: mult(m),
            });
        }
    }
    let mut rep = DecompositionReport::new(r, n, "L", entries);
    if conjectural {
        let expected = theorem2_rank(r as u64, n as u64)?;
        rep.notes.push(format!(
            "conjectural regime r = n-1: total {} {} the rank formula value {}",
            rep.total,
            if rep.total == expected { "matches" } else { "differs from" },
            expected
        ));
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Module {
    J,
    M,
    T,
    L,
}

impl std::str::FromStr for Module {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "J" | "j" => Ok(Module::J),
            "M" | "m" => Ok(Module::M),
            "T" | "t" => Ok(Module::T),
            "L" | "l" => Ok(Module::L),
            _ => Err(Error::Parse(format!("unknown module {s:?} (expected J, M, T or L)"))),
        }
    }
}

/// M_n ≅ V* ⊗ J_{n+1}: multiply each J_{n+1} shape by Λ^{r−1}V through
/// Littlewood–Richardson, then untwist by the determinant. Shapes with
/// fewer than r rows stay as they are and form the T-part.
pub fn m_shapes(r: usize, n: usize) -> Vec<DecompositionEntry> {
    let col = Partition::single_column(r - 1);
    let mut acc: BTreeMap<(bool, Partition), u128> = BTreeMap::new();
    for (mu, m) in j_shapes(r, n + 1) {
        for (lam, c) in lr_coefficients(&mu, &col) {
            if lam.len() > r {
                continue;
            }
            let key = match lam.strip_column(r) {
                Some(poly) => (true, poly),
                None => (false, lam),
            };
            *acc.entry(key).or_insert(0) += m * c as u128;
        }
    }
    let mut out: Vec<DecompositionEntry> = acc
        .into_iter()
        .map(|((poly, shape), m)| DecompositionEntry {
            part: Some(if poly { Part::A } else { Part::T }),
            dimension: gl_dimension(&shape, r),
            inflated_from: None,
            shape,
            multiplicity: mult(m),
        })
        .collect();
    out.sort_by(|a, b| (a.part == Some(Part::A)).cmp(&(b.part == Some(Part::A))).then(b.shape.cmp(&a.shape)));
    out
}

pub fn decompose(r: usize, n: usize, module: Module, allow_conjectural: bool) -> Result<DecompositionReport, Error> {
    if r < 1 || n < 1 {
        return Err(Error::Domain(format!("need r >= 1 and n >= 1, got r={r}, n={n}")));
    }
    let plain = |shape: Partition, m: u128| DecompositionEntry {
        part: None,
        dimension: gl_dimension(&shape, r),
        shape,
        inflated_from: None,
        multiplicity: mult(m),
    };
    Ok(match module {
        Module::J => DecompositionReport::new(r, n, "J", j_shapes(r, n).into_iter().map(|(l, m)| plain(l, m)).collect()),
        Module::M => {
            if r < 2 {
                return Err(Error::Domain("M needs r >= 2".into()));
            }
            DecompositionReport::new(r, n, "M", m_shapes(r, n))
        }
        Module::T => DecompositionReport::new(
            r,
            n,
            "T",
            t_shapes(r, n)
                .into_iter()
                .map(|(l, mu, m)| DecompositionEntry { inflated_from: Some(mu), part: Some(Part::T), ..plain(l, m) })
                .collect(),
        ),
        Module::L => theorem3_decomposition(r, n, allow_conjectural)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(dim_t(3, 1), BigInt::from(6));
        assert_eq!(dim_t(3, 2), BigInt::from(15));
        assert_eq!(theorem2_rank(3, 2).unwrap(), BigInt::from(18));
        assert_eq!(dim_rni(3, 4, 0), BigInt::from(24));
        assert_eq!(dim_rni(3, 4, 1), BigInt::from(18));
        assert!(theorem2_rank(3, 1).is_err());
        for r in 2..=6 {
            let (l2, l3) = pettet_ranks(r);
            assert_eq!(l2, dim_m(r as usize, 1));
            assert_eq!(l3, theorem2_rank(r, 2).unwrap());
        }
        let rep = theorem3_decomposition(3, 2, false).unwrap();
        assert_eq!(rep.total, BigInt::from(18));
        assert_eq!(rep.part_total(Part::A), BigInt::from(3));
        assert_eq!(rep.entries[0].shape.to_string(), "3,2");
    }

    #[test]
    fn m_matches_rank() {
        for r in 2..=4 {
            for n in 1..=4 {
                let rep = decompose(r, n, Module::M, false).unwrap();
                assert_eq!(rep.total, dim_m(r, n), "r={r} n={n}");
                assert_eq!(rep.part_total(Part::T), dim_t(r, n), "r={r} n={n}");
            }
        }
    }
}
