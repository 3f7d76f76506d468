use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::Error;

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization as `(p, e)` pairs with increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn moebius(n: u64) -> Result<i64, Error> {
    if n == 0 {
        return Err(Error::Domain("moebius(0) is undefined".into()));
    }
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if f.len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

pub fn euler_phi(n: u64) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::Domain("euler_phi(0) is undefined".into()));
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Ramanujan sum `c_d(i) = Σ_{e | gcd(d,i)} e·μ(d/e)`.
pub fn ramanujan_sum(d: u64, i: i64) -> Result<i64, Error> {
    if d == 0 {
        return Err(Error::Domain("ramanujan_sum needs d >= 1".into()));
    }
    let g = d.gcd(&i.unsigned_abs());
    let mut s = 0i64;
    for e in divisors(g) {
        s += e as i64 * moebius(d / e)?;
    }
    Ok(s)
}

/// Necklace polynomial `(1/n) Σ_{d|n} μ(d) r^{n/d}`.
pub fn necklace_count(r: u64, n: u64) -> Result<BigInt, Error> {
    if n == 0 {
        return Err(Error::Domain("degree must be >= 1".into()));
    }
    let mut s = BigInt::zero();
    for d in divisors(n) {
        let mu = moebius(d)?;
        if mu != 0 {
            s += BigInt::from(mu) * Pow::pow(BigInt::from(r), (n / d) as u32);
        }
    }
    let (q, rem) = s.div_rem(&BigInt::from(n));
    debug_assert!(rem.is_zero());
    Ok(q)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(6).unwrap(), 1);
        assert_eq!(moebius(12).unwrap(), 0);
        assert_eq!(moebius(30).unwrap(), -1);
        assert!(moebius(0).is_err());
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(13).unwrap(), 12);
        assert!(euler_phi(0).is_err());
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(binomial(10, 3), BigInt::from(120));
    }

    #[test]
    fn ramanujan_small() {
        for d in 1..30 {
            assert_eq!(ramanujan_sum(d, 0).unwrap(), euler_phi(d).unwrap() as i64);
            assert_eq!(ramanujan_sum(d, 1).unwrap(), moebius(d).unwrap());
        }
        assert_eq!(ramanujan_sum(4, 2).unwrap(), -2);
    }
}
