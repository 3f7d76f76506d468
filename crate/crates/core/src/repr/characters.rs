//! Character identities behind the construction of S_n without roots of unity.

use num_bigint::BigInt;
use num_integer::gcd;
use num_traits::Zero;
use serde::Serialize;

use super::gl::{power_sum, schur_eval};
use super::modules::j_shapes;
use crate::exactmath::{divisors, euler_phi, moebius};

fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

/// α(m,u): character of Ind_C^{C⋊C*} K_ε.
pub fn alpha(n: u64, m: u64, u: u64) -> i64 {
    if u % n != 1 % n {
        return 0;
    }
    let ms = n / gcd(m, n);
    moebius(ms).unwrap() * (euler_phi(n).unwrap() / euler_phi(ms).unwrap()) as i64
}

/// β_d(m,u): character of the permutation module on cosets of C^{n/d}⋊C*.
pub fn beta(n: u64, d: u64, m: u64, u: u64) -> i64 {
    let g = gcd(n / d, (u + n - 1) % n);
    if m % g == 0 {
        g as i64
    } else {
        0
    }
}

/// α = Σ_{d|n} μ(d) β_d pointwise on C⋊C*.
pub fn s_character_identity(n: u64) -> bool {
    for u in units(n) {
        for m in 0..n {
            let rhs: i64 = divisors(n).into_iter().map(|d| moebius(d).unwrap() * beta(n, d, m, u)).sum();
            if alpha(n, m, u) != rhs {
                return false;
            }
        }
    }
    true
}

/// Σ_{ℓ|d|n} μ(d) n/d = μ(ℓ) φ(n)/φ(ℓ) for every ℓ | n.
pub fn lemma_mobius_identity(n: u64) -> bool {
    divisors(n).into_iter().all(|l| {
        let lhs: i64 = divisors(n).into_iter().filter(|d| d % l == 0).map(|d| moebius(d).unwrap() * (n / d) as i64).sum();
        lhs * euler_phi(l).unwrap() as i64 == moebius(l).unwrap() * euler_phi(n).unwrap() as i64
    })
}

/// Σ_{ℓ|d|n} μ(d) gcd(n/d, u−1) = 0 for every ℓ | n and every unit 1 < u < n.
pub fn lemma_gcd_identity(n: u64) -> bool {
    lemma_gcd_failure(n).is_none()
}

/// First `(ℓ, u)` where the identity above fails, with the value of the sum.
pub fn lemma_gcd_failure(n: u64) -> Option<(u64, u64, i64)> {
    for l in divisors(n) {
        for u in (2..n).filter(|&u| gcd(u, n) == 1) {
            let s = lemma_gcd_sum(n, l, u);
            if s != 0 {
                return Some((l, u, s));
            }
        }
    }
    None
}

/// The ℓ = 1 case, for all 1 < u < n: Σ_{d|n} μ(d) gcd(n/d, u−1) = 0.
pub fn lemma_gcd_identity_full_range(n: u64) -> bool {
    (2..n).all(|u| lemma_gcd_sum(n, 1, u) == 0)
}

/// Σ_{ℓ|d|n} μ(d) gcd(n/d, u−1).
pub fn lemma_gcd_sum(n: u64, l: u64, u: u64) -> i64 {
    divisors(n)
        .into_iter()
        .filter(|d| d % l == 0)
        .map(|d| moebius(d).unwrap() * gcd(n / d, u - 1) as i64)
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct AdamsCheck {
    pub point: Vec<i64>,
    pub schur_side: BigInt,
    pub power_side: BigInt,
}

/// Σ_λ mult(λ)·s_λ(t) against (1/n) Σ_{d|n} μ(d) p_d(t)^{n/d} at one point.
pub fn adams_klyashko_check(r: usize, n: usize, t: &[i64]) -> AdamsCheck {
    assert_eq!(t.len(), r, "sample point must have r coordinates");
    let schur_side: BigInt = j_shapes(r, n).iter().map(|(l, m)| schur_eval(l, t) * BigInt::from(*m)).sum();
    let mut s = BigInt::zero();
    for d in divisors(n as u64) {
        s += BigInt::from(moebius(d).unwrap()) * power_sum(t, d as u32).pow((n as u64 / d) as u32);
    }
    AdamsCheck { point: t.to_vec(), schur_side, power_side: s / BigInt::from(n) }
}

impl AdamsCheck {
    pub fn holds(&self) -> bool {
        self.schur_side == self.power_side
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_small() {
        for n in 1..=12 {
            assert!(s_character_identity(n), "n={n}");
            assert!(lemma_mobius_identity(n), "n={n}");
            assert!(lemma_gcd_identity_full_range(n), "n={n}");
        }
        assert!(adams_klyashko_check(3, 4, &[1, 2, 3]).holds());
        assert_eq!(lemma_gcd_failure(4), Some((2, 3, -2)));
    }
}
