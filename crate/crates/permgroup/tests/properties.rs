use permgroup::{bruhat_leq_tableau, reduced_subword_occurrences, Permutation, ReducedWord};
use proptest::prelude::*;

fn all_words(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..n).map(move |k| {
                    let mut w2 = w.clone();
                    w2.push(k);
                    w2
                })
            })
            .collect();
    }
    out
}

#[test]
fn lex_smallest_reduced_word_matches_brute_force() {
    for n in 1..=4 {
        for w in Permutation::all(n) {
            let l = w.length();
            let best = all_words(n, l)
                .into_iter()
                .filter(|b| Permutation::from_simple_word(n, b).unwrap() == w)
                .min()
                .unwrap();
            assert_eq!(w.reduced_word().indices(), best.as_slice(), "w = {w}");
        }
    }
}

#[test]
fn bruhat_agrees_with_tableau_criterion_on_s4() {
    let all = Permutation::all(4);
    assert_eq!(all.len(), 24);
    for v in &all {
        for w in &all {
            assert_eq!(v.bruhat_leq(w), bruhat_leq_tableau(v, w), "{v} <= {w}");
        }
    }
}

#[test]
fn subwords_match_brute_force_and_bruhat_on_s4() {
    let all = Permutation::all(4);
    for w in &all {
        let b = w.reduced_word();
        let letters = b.indices();
        for v in &all {
            let occ = reduced_subword_occurrences(v, &b);
            // brute force over all subsets of positions of size ℓ(v)
            let mut brute = Vec::new();
            for mask in 0u32..(1 << letters.len()) {
                if mask.count_ones() as usize != v.length() {
                    continue;
                }
                let pos: Vec<usize> = (0..letters.len()).filter(|i| mask >> i & 1 == 1).collect();
                let sub: Vec<usize> = pos.iter().map(|&i| letters[i]).collect();
                if Permutation::from_simple_word(4, &sub).unwrap() == *v {
                    brute.push(pos.iter().map(|i| i + 1).collect::<Vec<_>>());
                }
            }
            brute.sort();
            let mut got = occ.clone();
            got.sort();
            assert_eq!(got, brute, "v = {v}, w = {w}");
            assert_eq!(!occ.is_empty(), v.bruhat_leq(w));
        }
    }
}

#[test]
fn bruhat_is_independent_of_reduced_word() {
    // every reduced word of 3412 yields the same lower interval
    let w: Permutation = "3412".parse().unwrap();
    let words: Vec<Vec<usize>> = all_words(4, w.length())
        .into_iter()
        .filter(|b| Permutation::from_simple_word(4, b).unwrap() == w)
        .collect();
    assert!(words.len() > 1);
    for v in Permutation::all(4) {
        let answers: Vec<bool> = words
            .iter()
            .map(|b| !reduced_subword_occurrences(&v, &ReducedWord::new(4, b.clone()).unwrap()).is_empty())
            .collect();
        assert!(answers.iter().all(|&a| a == answers[0]));
    }
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::from_word(&w).unwrap())
}

proptest! {
    #[test]
    fn reduced_word_length_is_inversion_count(w in arb_perm(9)) {
        let b = w.reduced_word();
        prop_assert_eq!(b.len(), w.length());
        prop_assert_eq!(b.product(), w);
    }

    #[test]
    fn compose_is_associative(
        (a, b, c) in (2usize..8).prop_flat_map(|n| {
            let s = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
            (s.clone(), s.clone(), s)
        })
    ) {
        let a = Permutation::from_word(&a).unwrap();
        let b = Permutation::from_word(&b).unwrap();
        let c = Permutation::from_word(&c).unwrap();
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn length_of_inverse_matches(w in arb_perm(9)) {
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert!(w.compose(&w.inverse()).unwrap().is_identity());
    }
}
