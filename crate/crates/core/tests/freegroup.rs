use autfree::freegroup::{lcs_degree, magnus, magnus_ring, LcsDegree};
use autfree::parse::parse_word;
use autfree::{GroupRingElement, GroupWord, Rational, TruncatedSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

fn w(r: usize, s: &str) -> GroupWord {
    parse_word(s, Some(r)).unwrap()
}

fn gw(r: usize, letters: &[i32]) -> GroupWord {
    GroupWord::from_letters(r, letters).unwrap()
}

#[test]
fn reduction() {
    assert!(gw(2, &[1, -1]).is_identity());
    assert_eq!(gw(2, &[1, 2]).inverse(), gw(2, &[-2, -1]));
    assert_eq!(gw(3, &[1, 2, -2, 3]), gw(3, &[1, 3]));
    assert_eq!(w(3, "x1*x2*x2^-1*x3").to_string(), "x1*x3");
}

#[test]
fn commutators() {
    let x1 = GroupWord::generator(3, 1).unwrap();
    let x2 = GroupWord::generator(3, 2).unwrap();
    let x3 = GroupWord::generator(3, 3).unwrap();
    assert!(x1.commutator(&x1).unwrap().is_identity());
    assert_eq!(x1.commutator(&x2).unwrap(), gw(3, &[-1, -2, 1, 2]));
    let nested = x1.commutator(&x2).unwrap().commutator(&x3).unwrap();
    assert_eq!(GroupWord::left_normed(&[x1, x2, x3]).unwrap(), nested);
    assert_eq!(w(3, "[x1,x2,x3]"), nested);
}

fn geometric(r: usize, n: usize, i: usize) -> TruncatedSeries {
    (0..=n).fold(TruncatedSeries::zero(r, n), |acc, k| {
        let c = if k % 2 == 0 { 1 } else { -1 };
        acc.add(&TruncatedSeries::monomial(r, n, &vec![i; k], Rational::from(c)).unwrap()).unwrap()
    })
}

#[test]
fn magnus_examples() {
    let (r, n) = (2, 3);
    let one = TruncatedSeries::one(r, n);
    let x1 = TruncatedSeries::variable(r, n, 1).unwrap();
    let x2 = TruncatedSeries::variable(r, n, 2).unwrap();
    assert_eq!(magnus(&gw(r, &[1]), n), one.add(&x1).unwrap());
    assert_eq!(magnus(&gw(r, &[-1]), n), geometric(r, n, 1));
    // u⁻¹v⁻¹uv expanded by hand
    let u = one.add(&x1).unwrap();
    let v = one.add(&x2).unwrap();
    let want = geometric(r, n, 1).mul(&geometric(r, n, 2)).unwrap().mul(&u).unwrap().mul(&v).unwrap();
    let c = magnus(&gw(r, &[-1, -2, 1, 2]), n);
    assert_eq!(c, want);
    assert_eq!(c.graded_part(1).unwrap(), TruncatedSeries::zero(r, n));
    assert_eq!(c.graded_part(2).unwrap(), x1.mul(&x2).unwrap().sub(&x2.mul(&x1).unwrap()).unwrap());
}

#[test]
fn magnus_ring_examples() {
    let r = 2;
    let one = GroupRingElement::one(r);
    let x1 = GroupRingElement::from_word(gw(r, &[1]));
    let x2 = GroupRingElement::from_word(gw(r, &[2]));
    let a = x1.sub(&one).unwrap();
    assert_eq!(magnus_ring(&a, 3), TruncatedSeries::variable(r, 3, 1).unwrap());
    let p = a.mul(&x2.sub(&one).unwrap()).unwrap();
    assert_eq!(
        magnus_ring(&p, 3).graded_part(2).unwrap(),
        TruncatedSeries::monomial(r, 3, &[1, 2], Rational::one()).unwrap()
    );
    let e = GroupRingElement::from_terms(r, [(gw(r, &[1, 2]), BigInt::from(3)), (gw(r, &[-2]), BigInt::from(-5))])
        .unwrap();
    assert_eq!(Rational::from_bigint(e.augmentation()), magnus_ring(&e, 4).constant_term());
}

#[test]
fn lcs_examples() {
    assert_eq!(lcs_degree(&gw(2, &[1]), 5), LcsDegree::Exact(1));
    assert_eq!(lcs_degree(&w(2, "[x1,x2]"), 5), LcsDegree::Exact(2));
    assert_eq!(lcs_degree(&w(2, "[x1,x2,x2,x2]"), 5), LcsDegree::Exact(4));
    assert_eq!(lcs_degree(&w(2, "[x1,x2,x2,x2]"), 3), LcsDegree::Beyond(3));
}

#[test]
fn parse_errors() {
    assert!(parse_word("x3", Some(2)).is_err());
    assert!(parse_word("[x1,", Some(2)).is_err());
    assert!(parse_word("x0", None).is_err());
}

fn word(r: usize, max: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((1..=r as i32, any::<bool>()), 0..=max)
        .prop_map(move |v| gw(r, &v.into_iter().map(|(g, s)| if s { g } else { -g }).collect::<Vec<_>>()))
}

fn lie_bracket(letters: &[usize], r: usize, n: usize) -> TruncatedSeries {
    let x = |i| TruncatedSeries::variable(r, n, i).unwrap();
    letters[1..].iter().fold(x(letters[0]), |acc, &l| acc.commutator(&x(l)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn magnus_is_multiplicative(
        (u, v, n) in (1usize..=4, 1usize..=6).prop_flat_map(|(r, n)| (word(r, 20), word(r, 20), Just(n)))
    ) {
        let uv = u.mul(&v).unwrap();
        prop_assert_eq!(magnus(&uv, n), magnus(&u, n).mul(&magnus(&v, n)).unwrap());
    }

    #[test]
    fn lcs_of_basic_commutators(
        (r, letters) in (2usize..=3).prop_flat_map(|r| (Just(r), prop::collection::vec(1..=r, 1..=6)))
    ) {
        let k = letters.len();
        let n = 6;
        prop_assume!(!lie_bracket(&letters, r, n).is_zero());
        let gens: Vec<GroupWord> = letters.iter().map(|&l| GroupWord::generator(r, l).unwrap()).collect();
        let c = GroupWord::left_normed(&gens).unwrap();
        prop_assert_eq!(lcs_degree(&c, n), LcsDegree::Exact(k));
    }

    #[test]
    fn lcs_is_superadditive((u, v) in (2usize..=3).prop_flat_map(|r| (word(r, 12), word(r, 12)))) {
        let n = 8;
        let deg = |d: LcsDegree| match d { LcsDegree::Exact(d) => d, LcsDegree::Beyond(n) => n + 1 };
        let du = deg(lcs_degree(&u, n));
        let dv = deg(lcs_degree(&v, n));
        let c = u.commutator(&v).unwrap();
        prop_assert!(lcs_degree(&c, n).at_least((du + dv).min(n + 1)));
    }
}
