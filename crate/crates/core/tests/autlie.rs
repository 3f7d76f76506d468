use autfree::autlie::{
    assoc_a, assoc_words, bracket, chain_pivot, degree_one_generators, gamma_span, inner_derivation, inner_from_lie,
    jacobian_of_bracket, k_basic, k_chain_expr, k_chain_expr_with, l_gen_expr, rho, rho_words, sigma, span_rank,
    transvection_t, transvection_words, trace_image_basis, verify_counterexample, AutExpr, DerivationVector,
    EndomorphismJet, LieInput,
};
use autfree::fox::{EndomorphismWords, SeriesMatrix};
use autfree::lie::{lyndon_basis, witt_rank};
use autfree::parse::parse_word;
use autfree::verify::{
    bracket_agreement, class_jacobian, dk_named_entries_hold, dl_named_entries_hold, generator_lemma_counts,
    random_class,
};
use autfree::{GroupWord, Parallelism, Rational, TruncatedSeries};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mono(r: usize, n: usize, w: &[usize], c: i64) -> TruncatedSeries {
    TruncatedSeries::monomial(r, n, w, Rational::from(c)).unwrap()
}

fn x(r: usize, n: usize, i: usize) -> TruncatedSeries {
    TruncatedSeries::variable(r, n, i).unwrap()
}

fn word(r: usize, s: &str) -> GroupWord {
    parse_word(s, Some(r)).unwrap()
}

#[test]
fn rho_examples() {
    let f = word(2, "[x1,x2]");
    let phi = rho_words(&[0, 1], &f).unwrap();
    assert_eq!(phi, EndomorphismWords::parse("x1->x1; x2->x2*[x1,x2]", Some(2)).unwrap());
    let zero = rho(&[0, 0], &LieInput::Word(f.clone()), 1, 3).unwrap();
    assert!(zero.is_zero_class());
    let cls = rho(&[0, 1], &LieInput::Word(f), 1, 3).unwrap();
    let back = sigma(&EndomorphismJet::from_words(&phi, 3), 1).unwrap();
    assert_eq!(cls.class(), back.class());
}

#[test]
fn sigma_of_conjugation() {
    let (r, n) = (3, 3);
    let phi = EndomorphismWords::parse("x1->x2^-1*x1*x2; x2->x2; x3->x2^-1*x3*x2", Some(r)).unwrap();
    let cls = sigma(&EndomorphismJet::from_words(&phi, n), 1).unwrap();
    for i in 1..=r {
        assert_eq!(cls.class_component(i), x(r, n, i).commutator(&x(r, n, 2)).unwrap());
    }
    assert!(sigma(&EndomorphismJet::identity(2, 3), 1).unwrap().is_zero_class());
}

fn random_lie_word(rng: &mut ChaCha8Rng, r: usize, d: usize) -> GroupWord {
    let basis = lyndon_basis(r, d);
    let a = basis[rng.gen_range(0..basis.len())].bracket_word(r).unwrap();
    let b = basis[rng.gen_range(0..basis.len())].bracket_word(r).unwrap();
    a.mul(&b).unwrap()
}

#[test]
fn rho_sigma_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let r = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=3);
        let f = random_lie_word(&mut rng, r, n + 1);
        let alpha: Vec<i64> = (0..r).map(|_| rng.gen_range(-2..=2)).collect();
        let t = n + 2;
        // σ∘ρ on classes
        let cls = rho(&alpha, &LieInput::Word(f.clone()), n, t).unwrap();
        let phi = rho_words(&alpha, &f).unwrap();
        let s = sigma(&EndomorphismJet::from_words(&phi, t), n).unwrap();
        assert_eq!(s.class(), cls.class());
        // ρ∘σ: the jet rebuilt from the class agrees with φ through degree n+1
        let rebuilt = s.to_jet();
        let orig = EndomorphismJet::from_words(&phi, t);
        for i in 1..=r {
            for d in 0..=n + 1 {
                assert_eq!(rebuilt.image(i).graded_part(d).unwrap(), orig.image(i).graded_part(d).unwrap());
            }
        }
    }
}

#[test]
fn rho_from_lie_element() {
    let (r, n) = (3, 2);
    for w in lyndon_basis(r, n + 1) {
        let e = w.standard_bracketing(r).unwrap();
        let a = rho(&[1, 0, -2], &LieInput::Lie(e), n, n + 2).unwrap();
        let b = rho(&[1, 0, -2], &LieInput::Word(w.bracket_word(r).unwrap()), n, n + 2).unwrap();
        assert_eq!(a.class(), b.class());
        assert!(a.is_lie_class());
    }
}

#[test]
fn bracket_examples() {
    let gens = degree_one_generators(3, 4);
    for (_, a) in &gens {
        assert!(bracket(a, a).unwrap().is_zero_class());
    }
    assert_eq!(gens.len(), 12);
    assert_eq!(span_rank(&gens.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>()).unwrap(), 9);
}

#[test]
fn bracket_is_sigma_of_commutator() {
    let (ok, _, n) = bracket_agreement(5, 60, Parallelism::default()).unwrap();
    assert_eq!(ok, n);
}

// Trace of a matrix commutator with D̄K_{i,j,k}.
#[test]
fn trace_with_basic_generator() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let r = rng.gen_range(3..=4);
        let t = 4;
        let mut u = SeriesMatrix::zero(r, t);
        for a in 1..=r {
            for b in 1..=r {
                let w: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..=r)).collect();
                u.set(a, b, mono(r, t, &w, rng.gen_range(-2..=2)));
            }
        }
        let (i, j, k) = (1, 2, 3);
        let mut dk = SeriesMatrix::zero(r, t);
        dk.set(i, k, x(r, t, j));
        dk.set(i, j, x(r, t, k).neg());
        let lhs = u.commutator(&dk).unwrap().trace();
        let rhs = u.get(k, i).commutator(&x(r, t, j)).unwrap().sub(&u.get(j, i).commutator(&x(r, t, k)).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn jet_examples() {
    let id = EndomorphismJet::identity(3, 4);
    assert!(id.invert().unwrap().is_identity());
    let w = word(3, "[x1,x2]");
    let t = transvection_words(&w).unwrap();
    let ti = transvection_words(&w.inverse()).unwrap();
    let comp = EndomorphismJet::from_words(&t, 5).compose(&EndomorphismJet::from_words(&ti, 5)).unwrap();
    assert!(comp.is_identity());
    assert_eq!(t.compose(&ti).unwrap(), EndomorphismWords::identity(3));
}

#[test]
fn generator_examples() {
    let t = transvection_words(&word(3, "[x1,x2]")).unwrap();
    assert_eq!(t, EndomorphismWords::parse("x1->x1; x2->x2; x3->x3*[x1,x2]", Some(3)).unwrap());
    let a = assoc_words(3, &[word(3, "x1")]).unwrap();
    assert_eq!(a, EndomorphismWords::parse("x1->x1; x2->x2*[x2,x1]; x3->x3*[x3,x1]", Some(3)).unwrap());
    assert!(transvection_t(&word(3, "[x1,x3]"), 1, 3).is_err());
}

fn all_words(r: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (1..=r).map(move |i| [w.clone(), vec![i]].concat())).collect();
    }
    out
}

#[test]
fn assoc_map_injective() {
    let r = 3;
    for n in 1..=3 {
        let classes: Vec<DerivationVector> = all_words(r, n)
            .iter()
            .map(|w| {
                let gens: Vec<GroupWord> = w.iter().map(|&l| GroupWord::generator(r, l).unwrap()).collect();
                assoc_a(r, &gens, n + 2).unwrap()
            })
            .collect();
        assert_eq!(span_rank(&classes).unwrap(), r.pow(n as u32), "n={n}");
    }
}

#[test]
fn inner_examples() {
    let (r, n) = (3, 2);
    let w = word(r, "[x1,x2]");
    let v = inner_derivation(&w, n, n + 2).unwrap();
    let l = x(r, n + 2, 1).commutator(&x(r, n + 2, 2)).unwrap();
    for i in 1..=r {
        assert_eq!(v.class_component(i), x(r, n + 2, i).commutator(&l).unwrap());
    }
    assert!(v.trace().is_cyclically_balanced(n).unwrap());
    assert_eq!(inner_from_lie(&l, n).unwrap().class(), v.class());
}

#[test]
fn inner_span_dimension() {
    for r in 2..=3usize {
        for n in 1..=4usize {
            let classes: Vec<DerivationVector> = lyndon_basis(r, n)
                .iter()
                .map(|w| inner_derivation(&w.bracket_word(r).unwrap(), n, n + 2).unwrap())
                .collect();
            if n >= 2 {
                for c in &classes {
                    assert!(c.trace().is_cyclically_balanced(n).unwrap());
                }
            }
            assert_eq!(BigInt::from(span_rank(&classes).unwrap()), witt_rank(r as u64, n as u64));
        }
    }
}

#[test]
fn span_ranks() {
    assert_eq!(gamma_span(3, 4).unwrap().level_ranks, vec![9, 18, 43, 120]);
    assert_eq!(gamma_span(3, 2).unwrap().rank, 18);
    assert_eq!(gamma_span(3, 3).unwrap().rank, 43);
    assert_eq!(gamma_span(2, 4).unwrap().rank, 3);
    assert!(gamma_span(5, 6).is_err());
}

#[test]
fn transvections_in_span() {
    let r = 3;
    for n in 1..=3 {
        let span = gamma_span(r, n).unwrap();
        let base = span_rank(&span.basis).unwrap();
        for w in lyndon_basis(2, n + 1) {
            let g = w.bracket_word(2).unwrap().with_rank(r).unwrap();
            let mut vs = span.basis.clone();
            vs.push(transvection_t(&g, n, n + 2).unwrap());
            assert_eq!(span_rank(&vs).unwrap(), base, "n={n} w={w:?}");
        }
    }
}

#[test]
fn trace_images() {
    let a = trace_image_basis(3, 2).unwrap();
    assert_eq!((a.trace_image_dim, a.all_balanced_hit), (3, true));
    let b = trace_image_basis(3, 3).unwrap();
    assert_eq!((b.trace_image_dim, b.all_balanced_hit), (16, true));
    assert!(a.all_traces_balanced && b.all_traces_balanced);
}

// tr D̄[K_{i,ω,j}, K_{j,r,i}] against [X_ω, X_r], for x_i not in the word,
// j ∉ {i, r, ω_n} (otherwise a factor is trivial or a conjugation).
#[test]
fn trace_of_chain_commutator() {
    let mut bad = Vec::new();
    let mut total = 0;
    for r in 3..=4 {
        for len in 1..=3 {
            for omega in all_words(r, len) {
                for i in (1..r).filter(|i| !omega.contains(i)) {
                    for j in (1..r).filter(|&j| j != i && j != omega[len - 1]) {
                        let Ok(kc) = k_chain_expr(r, i, &omega, j) else { continue };
                        let e = AutExpr::commutator(kc, k_basic(r, j, r, i).unwrap());
                        let tr = class_jacobian(&e, len + 1).unwrap().trace();
                        let t = tr.truncation();
                        let mut wr = omega.clone();
                        wr.push(r);
                        let mut rw = vec![r];
                        rw.extend(&omega);
                        total += 1;
                        if tr != mono(r, t, &wr, 1).sub(&mono(r, t, &rw, 1)).unwrap() {
                            bad.push((r, i, omega.clone(), j));
                        }
                    }
                }
            }
        }
    }
    assert!(bad.is_empty(), "{}/{total} fail, first {:?}", bad.len(), bad.first());
}

#[test]
fn trace_of_chain_commutator_short_words() {
    for (i, omega, j) in [(1, vec![2], 3), (2, vec![1], 3), (1, vec![3, 4], 2), (1, vec![4, 3], 2), (2, vec![1, 4], 3)] {
        let r = 4;
        let e = AutExpr::commutator(k_chain_expr(r, i, &omega, j).unwrap(), k_basic(r, j, r, i).unwrap());
        let tr = class_jacobian(&e, omega.len() + 1).unwrap().trace();
        let t = tr.truncation();
        let mut wr = omega.clone();
        wr.push(r);
        let mut rw = vec![r];
        rw.extend(&omega);
        assert_eq!(tr, mono(r, t, &wr, 1).sub(&mono(r, t, &rw, 1)).unwrap(), "i={i} ω={omega:?} j={j}");
    }
}

#[test]
fn counterexample_report() {
    let c = verify_counterexample().unwrap();
    assert!(c.balanced);
    assert!(c.printed_trace_balanced);
    assert!(!c.in_inner_span);
    assert_eq!((c.inner_span_rank, c.augmented_rank), (3, 4));
    assert!(!c.in_bracket_span, "bracket span rank {}", c.bracket_span_rank);
    assert_eq!(c.trace.to_string(), "2*X1*X2*X2*X2 - 3*X2*X1*X2*X2 + X2*X2*X1*X2");
}

#[test]
fn counterexample_printed_trace() {
    let c = verify_counterexample().unwrap();
    assert!(c.trace_matches_printed, "trace {} vs printed {}", c.trace, c.printed_trace);
}

#[test]
fn chain_pivots() {
    assert_eq!(chain_pivot(4, 1, &[2, 3], 4), Some(3));
    assert_eq!(chain_pivot(3, 1, &[2, 3], 3), None);
    assert!(k_chain_expr(2, 1, &[2, 2], 2).is_err());
    assert!(k_chain_expr(3, 1, &[1, 2], 3).is_err());
    assert!(k_chain_expr_with(4, 1, &[2, 3], 4, &[2]).is_err());
    assert!(k_chain_expr_with(4, 1, &[2, 3], 4, &[3]).is_ok());
}

#[test]
fn basic_generator_identity() {
    for r in 2..=4 {
        for i in 1..=r {
            for j in 1..=r {
                for k in (1..=r).filter(|&k| k != j && k != i) {
                    assert!(autfree::verify::dk1_holds(r, i, j, k).unwrap());
                }
            }
        }
    }
}

#[test]
fn chain_named_entries() {
    assert!(dk_named_entries_hold(3, 1, &[2], 3).unwrap());
    let c = generator_lemma_counts(4, 4, Parallelism::default()).unwrap();
    assert_eq!(c.dk.0, c.dk.1, "named entries hold for {}/{}", c.dk.0, c.dk.1);
}

#[test]
fn l_named_entries() {
    let c = generator_lemma_counts(4, 4, Parallelism::default()).unwrap();
    assert!(dl_named_entries_hold(4, 1, &[2], 3, 4).is_ok());
    assert_eq!(c.dl.0, c.dl.1, "named entries hold for {}/{}", c.dl.0, c.dl.1);
}

fn level(e: &AutExpr) -> usize {
    (1..8).take_while(|&n| sigma(&e.jet(n + 1).unwrap(), n).is_ok()).last().unwrap()
}

// Chains and L generators against the prediction with substitution terms.
#[test]
fn generator_jacobians_twisted() {
    let r = 4;
    let mut cases = Vec::new();
    for omega in all_words(r, 2).into_iter().chain(all_words(r, 3)) {
        for i in (1..=r).filter(|i| !omega.contains(i)) {
            for j in (1..=r).filter(|&j| j != i) {
                if let Ok(e) = k_chain_expr(r, i, &omega, j) {
                    cases.push(e);
                }
                for k in (1..=r).filter(|&k| k != i && k != j) {
                    if let Ok(e) = l_gen_expr(r, i, &omega[..omega.len() - 1], j, k) {
                        cases.push(e);
                    }
                }
            }
        }
    }
    assert!(cases.len() > 100);
    for e in cases {
        let AutExpr::Commutator(a, b) = &e else { unreachable!() };
        let (m, n) = (level(a), level(b));
        let ca = sigma(&a.jet(m + n + 2).unwrap(), m).unwrap();
        let cb = sigma(&b.jet(m + n + 2).unwrap(), n).unwrap();
        let want = jacobian_of_bracket(&ca, &cb).unwrap().graded_part(m + n).unwrap();
        let got = class_jacobian(&e, m + n).unwrap();
        for p in 1..=r {
            for q in 1..=r {
                assert_eq!(got.get(p, q).with_truncation(m + n), want.get(p, q).with_truncation(m + n));
            }
        }
    }
}

fn class_triple() -> impl Strategy<Value = (DerivationVector, DerivationVector, DerivationVector)> {
    any::<u64>().prop_map(|s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let r = rng.gen_range(2..=3);
        let a = rng.gen_range(1..=2);
        let b = rng.gen_range(1..=4 - a - 1).max(1);
        let c = (5 - a - b).min(rng.gen_range(1..=2)).max(1);
        let t = a + b + c + 2;
        (
            random_class(&mut rng, r, a, t).unwrap(),
            random_class(&mut rng, r, b, t).unwrap(),
            random_class(&mut rng, r, c, t).unwrap(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn bracket_lie_axioms((a, b, c) in class_triple()) {
        let ab = bracket(&a, &b).unwrap();
        let ba = bracket(&b, &a).unwrap();
        prop_assert!(ab.add(&ba).unwrap().is_zero_class());
        let j1 = bracket(&a, &bracket(&b, &c).unwrap()).unwrap();
        let j2 = bracket(&b, &bracket(&c, &a).unwrap()).unwrap();
        let j3 = bracket(&c, &ab).unwrap();
        prop_assert!(j1.add(&j2).unwrap().add(&j3).unwrap().is_zero_class());
    }

    #[test]
    fn rho_then_sigma(s in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let r = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=3);
        let v = random_class(&mut rng, r, n, n + 2).unwrap();
        prop_assert_eq!(sigma(&v.to_jet(), n).unwrap().class(), v.class());
    }
}
