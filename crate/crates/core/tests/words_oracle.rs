mod common;

use std::collections::BTreeSet;

use balanced_core::colouring::colour_prefix;
use balanced_core::sturmian::{generate_prefix, saturated_prefix};
use balanced_core::words::{
    bispecials_bruteforce, extension_graph, max_fractional_power, occurrences, parikh,
    return_words_bruteforce, Alphabet, Letter, Word,
};
use balanced_core::Error;
use common::*;
use num_rational::Ratio;
use proptest::prelude::*;

fn fib() -> Word {
    generate_prefix(&slope("0;;(1)"), 5000)
}

#[test]
fn parikh_counts() {
    let abc = Alphabet::from_chars("ab").unwrap();
    let p = parikh(&abc.parse("abaab").unwrap());
    assert_eq!((p.get(Letter(0)), p.get(Letter(1))), (3, 2));
    assert_eq!(parikh(&[]).total(), 0);
    // the letters swap against the a-frequent Fibonacci word
    let p = parikh(&fib()[..8]);
    assert_eq!((p.get(Letter(1)), p.get(Letter(0))), (5, 3));
}

#[test]
fn occurrence_lists() {
    let abc = Alphabet::from_chars("ab").unwrap();
    let text = abc.parse("abaababa").unwrap();
    assert_eq!(occurrences(&abc.parse("aba").unwrap(), &text), [0, 3, 5]);
    assert!(occurrences(&abc.parse("bb").unwrap(), &text).is_empty());
}

#[test]
fn first_occurrence_in_g() {
    let g = spec(G);
    let v = colour_prefix(&g, 31);
    let w = g.alphabet().parse("230").unwrap();
    // zero-based: the sixth letter
    assert_eq!(occurrences(&w, &v)[0], 5);
}

#[test]
fn fibonacci_return_words() {
    let u = fib();
    let got = return_words_bruteforce(&ab("babbab"), &u).unwrap();
    assert_eq!(got, [ab("babba"), ab("bab")].into());
    let got = return_words_bruteforce(&ab("bbab"), &u).unwrap();
    assert_eq!(got, [ab("bbaba"), ab("bba")].into());
    let short = ab("babba");
    assert!(matches!(
        return_words_bruteforce(&short, &short),
        Err(Error::InsufficientData(_))
    ));
}

#[test]
fn cube_in_fibonacci() {
    let p = max_fractional_power(&fib()[..200], 3).unwrap();
    assert!(p.exponent >= Ratio::from(3));
    assert_eq!(p.root.len(), 3);
}

#[test]
fn fibonacci_bispecials() {
    let u = saturated_prefix(&slope("0;;(1)"), 3);
    let bs = bispecials_bruteforce(&u, 1);
    assert!(bs.contains(&Word::empty()));
    assert!(bs.contains(&ab("b")));
    let g = spec(G);
    let v = colour_prefix(&g, 2000);
    assert!(bispecials_bruteforce(&v, 1).contains(&g.alphabet().parse("3").unwrap()));
    let one = Alphabet::from_chars("a").unwrap().parse("aaaaaa").unwrap();
    assert!(bispecials_bruteforce(&one, 2).is_empty());
}

#[test]
fn graphs_in_g() {
    let g = spec(G);
    let v = colour_prefix(&g, 5000);
    let al = g.alphabet();
    let e = extension_graph(&al.parse("230140").unwrap(), &v);
    let edges: BTreeSet<_> = e
        .edges
        .iter()
        .map(|&(x, y)| (al.name(x).to_string(), al.name(y).to_string()))
        .collect();
    let want: BTreeSet<_> = [("0", "3"), ("4", "2"), ("4", "3")]
        .iter()
        .map(|&(x, y)| (x.to_string(), y.to_string()))
        .collect();
    assert_eq!(edges, want);
    assert!(e.is_tree());

    let e = extension_graph(&ab("babbab"), &fib());
    let a = ab("a")[0];
    let b = ab("b")[0];
    assert_eq!(e.edges, [(b, a), (a, b), (a, a)].into());
    assert!(e.is_tree());
}

fn naive(w: &[Letter], text: &[Letter]) -> Vec<usize> {
    if w.len() > text.len() {
        return Vec::new();
    }
    (0..=text.len() - w.len())
        .filter(|&i| text[i..i + w.len()] == *w)
        .collect()
}

fn word(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0u16..3).prop_map(Letter), 0..max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parikh_is_additive(u in word(60), v in word(60)) {
        let uv: Vec<Letter> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(parikh(&uv), &parikh(&u) + &parikh(&v));
    }

    #[test]
    fn occurrences_match_naive(w in word(4).prop_filter("non-empty", |w| !w.is_empty()), text in word(10_000)) {
        prop_assert_eq!(occurrences(&w, &text), naive(&w, &text));
    }

    #[test]
    fn max_power_is_monotone(text in word(300), cut in 0usize..300, l in 1usize..20) {
        let cut = cut.min(text.len());
        let e = |t: &[Letter], l: usize| max_fractional_power(t, l).map(|p| p.exponent);
        if cut > 0 {
            prop_assert!(e(&text[..cut], l) <= e(&text, l));
            prop_assert!(e(&text, l) <= e(&text, l + 1));
        }
    }

    #[test]
    fn power_witness_is_consistent(text in word(300).prop_filter("non-empty", |t| !t.is_empty()), l in 1usize..20) {
        let p = max_fractional_power(&text, l).unwrap();
        let root = p.root.len();
        prop_assert_eq!(&text[p.start..p.start + p.witness.len()], p.witness.letters());
        prop_assert!((0..p.witness.len()).all(|i| p.witness[i] == p.root[i % root]));
        prop_assert_eq!(p.exponent, Ratio::new(p.witness.len() as u64, root as u64));
    }

    #[test]
    fn return_words_repeat_the_factor(n in 1usize..12, start in 0usize..200) {
        let u = fib();
        let w = &u[start..start + n];
        for v in return_words_bruteforce(w, &u).unwrap() {
            prop_assert!((0..n).all(|i| w[i] == v[i % v.len()]));
        }
    }
}
