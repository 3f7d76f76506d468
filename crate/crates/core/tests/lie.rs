use autfree::autlie::monomial_index;
use autfree::exactmath::{divisors, SpanBuilder, SparseVec};
use autfree::freegroup::magnus;
use autfree::lie::{dynkin_test, lyndon_basis, witt_rank, LyndonWord};
use autfree::{Rational, TruncatedSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn witt_rows() {
    let row = |r| (1..=6).map(|n| witt_rank(r, n)).collect::<Vec<_>>();
    assert_eq!(row(3), big(&[3, 3, 8, 18, 48, 116]));
    assert_eq!(row(2), big(&[2, 1, 2, 3, 6, 9]));
    assert_eq!(witt_rank(4, 6), BigInt::from(670));
}

// Brute force: aperiodic words that are strictly smaller than all their rotations.
fn brute_lyndon(r: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = r.pow(n as u32);
    for code in 0..total {
        let mut w = vec![0; n];
        let mut c = code;
        for k in (0..n).rev() {
            w[k] = c % r + 1;
            c /= r;
        }
        if (1..n).all(|s| {
            let rot: Vec<usize> = w[s..].iter().chain(&w[..s]).copied().collect();
            w < rot
        }) {
            out.push(w);
        }
    }
    out
}

#[test]
fn lyndon_examples() {
    let letters = |v: Vec<LyndonWord>| v.into_iter().map(|w| w.letters().to_vec()).collect::<Vec<_>>();
    assert_eq!(letters(lyndon_basis(2, 2)), vec![vec![1, 2]]);
    assert_eq!(lyndon_basis(2, 4).len(), 3);
    assert_eq!(letters(lyndon_basis(3, 1)), vec![vec![1], vec![2], vec![3]]);
    for r in 1..=3 {
        for n in 1..=6 {
            let mut got = letters(lyndon_basis(r, n));
            got.sort();
            assert_eq!(got, brute_lyndon(r, n), "r={r} n={n}");
        }
    }
    assert!(LyndonWord::new(vec![2, 1]).is_err());
    assert!(LyndonWord::new(vec![1, 1]).is_err());
}

fn x(r: usize, n: usize, i: usize) -> TruncatedSeries {
    TruncatedSeries::variable(r, n, i).unwrap()
}

#[test]
fn bracketing_examples() {
    let (r, n) = (2, 4);
    let w = LyndonWord::new(vec![1, 2]).unwrap();
    assert_eq!(w.bracket_series(r, n).unwrap(), x(r, n, 1).commutator(&x(r, n, 2)).unwrap());
    assert_eq!(w.bracket_word(r).unwrap().to_string(), "x1^-1*x2^-1*x1*x2");
    let w = LyndonWord::new(vec![1, 1, 2]).unwrap();
    let want = x(r, n, 1).commutator(&x(r, n, 1).commutator(&x(r, n, 2)).unwrap()).unwrap();
    assert_eq!(w.bracket_series(r, n).unwrap(), want);
    for r in 2..=3 {
        for d in 2..=5 {
            for w in lyndon_basis(r, d) {
                let s = w.bracket_series(r, d + 1).unwrap();
                let g = magnus(&w.bracket_word(r).unwrap(), d + 1).sub(&TruncatedSeries::one(r, d + 1)).unwrap();
                assert_eq!(g.lowest_degree(), Some(d));
                assert_eq!(g.graded_part(d).unwrap(), s, "{w:?}");
            }
        }
    }
}

#[test]
fn dynkin_examples() {
    let (r, n) = (2, 2);
    let c = x(r, n, 1).commutator(&x(r, n, 2)).unwrap();
    assert!(dynkin_test(&c, 2).unwrap());
    let m = x(r, n, 1).mul(&x(r, n, 2)).unwrap();
    assert!(!dynkin_test(&m, 2).unwrap());
    for d in 1..=5 {
        for w in lyndon_basis(3, d) {
            let e = w.standard_bracketing(3).unwrap();
            assert!(dynkin_test(e.series(), d).unwrap());
        }
    }
}

#[test]
fn basis_size_is_witt() {
    for r in 1..=4usize {
        for n in 1..=8usize {
            assert_eq!(BigInt::from(lyndon_basis(r, n).len()), witt_rank(r as u64, n as u64), "r={r} n={n}");
        }
    }
}

#[test]
fn basis_is_independent() {
    for r in 1..=3usize {
        for n in 1..=6usize {
            let mut span = SpanBuilder::new();
            for w in lyndon_basis(r, n) {
                let s = w.bracket_series(r, n).unwrap();
                let v = SparseVec::from_map(s.terms().map(|(m, c)| (monomial_index(m, r), c.clone())).collect());
                assert!(span.insert(&v));
            }
            assert_eq!(BigInt::from(span.rank()), witt_rank(r as u64, n as u64));
        }
    }
}

#[test]
fn necklace_identity() {
    for r in 1..=4u64 {
        for n in 1..=8u64 {
            let s: BigInt = divisors(n).into_iter().map(|d| BigInt::from(d) * witt_rank(r, d)).sum();
            assert_eq!(s, BigInt::from(r).pow(n as u32));
            let counted: usize = divisors(n).into_iter().map(|d| d as usize * lyndon_basis(r as usize, d as usize).len()).sum();
            assert_eq!(BigInt::from(counted), BigInt::from(r).pow(n as u32));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // A random combination of basis brackets is a Lie element; adding a stray
    // monomial breaks it.
    #[test]
    fn dynkin_recognises_combinations(
        (r, n, coeffs) in (2usize..=3, 2usize..=5).prop_flat_map(|(r, n)| {
            let k = lyndon_basis(r, n).len();
            (Just(r), Just(n), prop::collection::vec(-3i64..=3, k))
        })
    ) {
        let mut s = TruncatedSeries::zero(r, n);
        for (w, c) in lyndon_basis(r, n).iter().zip(&coeffs) {
            s = s.add(&w.bracket_series(r, n).unwrap().scalar_mul(&Rational::from(*c))).unwrap();
        }
        prop_assert!(dynkin_test(&s, n).unwrap());
        let stray = TruncatedSeries::monomial(r, n, &vec![1; n], Rational::one()).unwrap();
        prop_assert!(!dynkin_test(&s.add(&stray).unwrap(), n).unwrap());
    }
}
