use dihedral_core::arith::divisors;
use dihedral_core::branching::apply_word_int;
use dihedral_core::module::{simples_at, SimpleModule};
use dihedral_core::word::{annihilates_closed_form, has_total_nadir, nadir_value, terminus, CriticalReading, Symbol};
use dihedral_core::{IntGroth, Word};
use proptest::prelude::*;

fn word_over(primes: Vec<u32>, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((prop::sample::select(primes), any::<bool>()), 0..max)
        .prop_map(|v| Word(v.into_iter().map(|(p, r)| if r { Symbol::res(p) } else { Symbol::ind(p) }).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn terminus_is_additive(a in word_over(vec![3, 5, 7], 10), b in word_over(vec![3, 5, 7], 10)) {
        for p in [3, 5, 7] {
            prop_assert_eq!(terminus(&a.concat(&b), p), terminus(&a, p) + terminus(&b, p));
        }
    }

    #[test]
    fn nadir_of_product(a in word_over(vec![3, 5, 7], 10), b in word_over(vec![3, 5, 7], 10)) {
        for p in [3, 5, 7] {
            let want = nadir_value(&b, p).min(terminus(&b, p) + nadir_value(&a, p));
            prop_assert_eq!(nadir_value(&a.concat(&b), p), want);
            prop_assert!(nadir_value(&a, p) <= 0 && nadir_value(&a, p) <= terminus(&a, p));
        }
    }

    #[test]
    fn one_prime_always_has_total_nadir(a in word_over(vec![5], 12)) {
        prop_assert!(has_total_nadir(&a, &[5]));
    }
}

/// One module per Galois orbit at level `n`.
fn orbit_representatives(n: u64) -> Vec<SimpleModule> {
    let mut out: Vec<SimpleModule> = simples_at(n).into_iter().filter(|m| matches!(m, SimpleModule::V { .. })).collect();
    out.extend(divisors(n).into_iter().filter(|g| 2 * g < n).map(|k| SimpleModule::W { n, k }));
    out
}

/// Visits every word of length at most `max_len` over `primes` by adding
/// symbols on the left, carrying a state per module through `step`.
fn visit<S: Clone>(
    primes: &[u32],
    max_len: usize,
    start: Vec<S>,
    step: &dyn Fn(Symbol, &S) -> S,
    f: &mut dyn FnMut(&Word, &[S]),
) {
    let syms: Vec<Symbol> = primes.iter().flat_map(|&p| [Symbol::res(p), Symbol::ind(p)]).collect();
    let mut stack = vec![(Word::empty(), start)];
    while let Some((w, states)) = stack.pop() {
        f(&w, &states);
        if w.len() == max_len {
            continue;
        }
        for &s in &syms {
            let next: Vec<S> = states.iter().map(|x| step(s, x)).collect();
            stack.push((Word(vec![s]).concat(&w), next));
        }
    }
}

fn apply_symbol(s: Symbol, v: &IntGroth) -> IntGroth {
    apply_word_int(&Word(vec![s]), v)
}

/// One summand of the image. Coefficients of res/ind are natural numbers,
/// so a word kills a module iff a chain of single summands dies.
fn follow_summand(s: Symbol, m: &Option<SimpleModule>) -> Option<SimpleModule> {
    let v = apply_symbol(s, &IntGroth::single((*m)?));
    let first = v.iter().next().map(|(x, _)| *x);
    first
}

#[test]
fn annihilation_criterion_on_odd_levels() {
    let mut doubled_mismatches = 0usize;
    let mut checked = 0usize;
    for primes in [vec![3u32], vec![5], vec![3, 5]] {
        for n in (3..=500u64).step_by(2) {
            let modules = orbit_representatives(n);
            let start = modules.iter().map(|&m| Some(m)).collect();
            visit(&primes, 6, start, &follow_summand, &mut |w, ends| {
                let plain = annihilates_closed_form(w, &primes, n, CriticalReading::Plain);
                for (m, end) in modules.iter().zip(ends) {
                    assert_eq!(end.is_none(), plain, "{w} on {m} (P={primes:?})");
                }
                if annihilates_closed_form(w, &primes, n, CriticalReading::Doubled) != plain {
                    doubled_mismatches += 1;
                }
                checked += 1;
            });
        }
    }
    println!("{checked} (word, level) pairs; the doubled critical value disagrees on {doubled_mismatches}");
    assert!(doubled_mismatches > 0);
}

#[test]
fn annihilation_criterion_with_full_images() {
    for n in (3..=75u64).step_by(2) {
        let modules = simples_at(n);
        let start = modules.iter().map(|&m| IntGroth::single(m)).collect();
        visit(&[3, 5], 5, start, &apply_symbol, &mut |w, images| {
            let plain = annihilates_closed_form(w, &[3, 5], n, CriticalReading::Plain);
            for (m, v) in modules.iter().zip(images) {
                assert_eq!(v.is_zero(), plain, "{w} on {m}");
            }
        });
    }
}

#[test]
fn annihilation_examples() {
    let w: Word = "ind3*ind5*res3*res5".parse().unwrap();
    assert!(annihilates_closed_form(&w, &[3, 5], 15, CriticalReading::Plain));
    assert!(!annihilates_closed_form(&w, &[3, 5], 15, CriticalReading::Doubled));
    assert!(apply_word_int(&w, &IntGroth::single("V(1,1;15)".parse().unwrap())).is_zero());
    let r: Word = "res3".parse().unwrap();
    assert!(annihilates_closed_form(&r, &[3], 10, CriticalReading::Plain));
    assert!(!annihilates_closed_form(&r, &[3], 45, CriticalReading::Plain));
    assert!(simples_at(45).into_iter().all(|m| !apply_word_int(&r, &IntGroth::single(m)).is_zero()));
}
