use std::collections::HashMap;

use permgroup::Permutation;
use rootsys::{count_reduced_words, parse_cartan, CartanType, DEFAULT_ENUMERATION_BUDGET};

#[test]
fn group_orders() {
    for (name, order, roots) in [
        ("A1", 2, 1),
        ("A3", 24, 6),
        ("B2", 8, 4),
        ("B3", 48, 9),
        ("C3", 48, 9),
        ("D4", 192, 12),
        ("F4", 1152, 24),
        ("G2", 12, 6),
    ] {
        let d = parse_cartan(name).unwrap();
        assert_eq!(d.weyl_enumerate(DEFAULT_ENUMERATION_BUDGET).unwrap().len(), order, "{name}");
        assert_eq!(d.positive_roots().len(), roots, "{name}");
    }
    for (name, roots) in [("E6", 36), ("E7", 63), ("E8", 120)] {
        assert_eq!(parse_cartan(name).unwrap().positive_roots().len(), roots);
    }
}

#[test]
fn bfs_length_equals_word_length_and_inversions() {
    for name in ["A3", "B3", "C3", "G2", "F4"] {
        let d = parse_cartan(name).unwrap();
        for (w, l) in d.weyl_enumerate(DEFAULT_ENUMERATION_BUDGET).unwrap() {
            assert_eq!(w.length(), l, "{name}");
            assert_eq!(w.inversion_count(), l, "{name}");
            assert_eq!(d.element_from_word(w.reduced_word()).unwrap(), w);
        }
    }
}

#[test]
fn type_a_matches_symmetric_group() {
    for n in 2..=5 {
        let d = parse_cartan(&format!("A{}", n - 1)).unwrap();
        let mut by_word: HashMap<Vec<usize>, usize> = HashMap::new();
        for (w, l) in d.weyl_enumerate(DEFAULT_ENUMERATION_BUDGET).unwrap() {
            by_word.insert(w.reduced_word().to_vec(), l);
        }
        let perms = Permutation::all(n);
        assert_eq!(by_word.len(), perms.len());
        for p in perms {
            let b = p.reduced_word();
            assert_eq!(by_word.get(b.indices()), Some(&p.length()), "{p}");
        }
    }
}

#[test]
fn longest_element_negates_simple_roots() {
    for name in ["A4", "B3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let d = parse_cartan(name).unwrap();
        let w0 = d.longest();
        assert_eq!(w0.length(), d.positive_roots().len(), "{name}");
        for i in 1..=d.rank() {
            assert!(w0.is_right_descent(i));
        }
    }
}

#[test]
fn coxeter_relations_hold() {
    for name in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
        let d = parse_cartan(name).unwrap();
        let e = d.identity();
        for i in 1..=d.rank() {
            let si = d.simple_reflection(i).unwrap();
            assert_eq!(si.mul(&si), e);
            for j in i + 1..=d.rank() {
                let sj = d.simple_reflection(j).unwrap();
                let m = match d.a(i, j) * d.a(j, i) {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    other => panic!("unexpected product {other}"),
                };
                let mut p = e.clone();
                let sij = si.mul(&sj);
                for k in 1..=m {
                    p = p.mul(&sij);
                    assert_eq!(p == e, k == m, "{name} s{i}s{j} order");
                }
            }
        }
    }
}

#[test]
fn weight_and_root_actions_are_conjugate() {
    let d = parse_cartan("B3").unwrap();
    for (w, _) in d.weyl_enumerate(100).unwrap() {
        for r in d.positive_roots() {
            let lhs = d.roots_to_weights(&w.act_on_root(r));
            let rhs = w.act_on_weight(&d.roots_to_weights(r));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn cartan_matrix_invariants() {
    for name in ["A5", "B4", "C4", "D6", "E6", "E7", "E8", "F4", "G2"] {
        let d = parse_cartan(name).unwrap();
        for i in 1..=d.rank() {
            assert_eq!(d.a(i, i), 2);
            for j in 1..=d.rank() {
                if i != j {
                    assert!([0, -1, -2, -3].contains(&d.a(i, j)));
                    assert_eq!(d.a(i, j) == 0, d.a(j, i) == 0);
                }
            }
        }
    }
}

#[test]
fn longest_parabolic_is_maximal_in_subgroup() {
    let d = parse_cartan("B3").unwrap();
    let all = d.weyl_enumerate(100).unwrap();
    for k in [vec![1], vec![1, 2], vec![2, 3], vec![1, 3], vec![1, 2, 3]] {
        let wk = d.longest_parabolic(&k).unwrap();
        // elements of W_K: reduced words only use letters of K
        let sub: Vec<usize> = all
            .iter()
            .filter(|(w, _)| w.reduced_word().iter().all(|i| k.contains(i)))
            .map(|(_, l)| *l)
            .collect();
        assert_eq!(Some(wk.length()), sub.iter().copied().max());
        assert_eq!(sub.iter().filter(|&&l| l == wk.length()).count(), 1);
    }
}

#[test]
fn component_types() {
    let d5 = parse_cartan("D5").unwrap();
    let c = d5.connected_components(&[1, 3, 4, 5]);
    assert_eq!(c.len(), 2);
    assert_eq!(c[0].nodes, vec![1]);
    assert_eq!(c[1].type_name(), "A3");
    assert_eq!(c[1].embedding, vec![4, 3, 5]);
    let f4 = parse_cartan("F4").unwrap();
    let c = f4.connected_components(&[2, 3]);
    assert_eq!(c[0].kind, CartanType::B);
    let g2 = parse_cartan("G2").unwrap();
    assert_eq!(g2.connected_components(&[1, 2])[0].type_name(), "G2");
}

#[test]
fn reduced_word_counts() {
    // longest elements: A2 has 2, A3 has 16, B2 has 2
    assert_eq!(count_reduced_words(&parse_cartan("A2").unwrap().longest()), 2);
    assert_eq!(count_reduced_words(&parse_cartan("A3").unwrap().longest()), 16);
    assert_eq!(count_reduced_words(&parse_cartan("B2").unwrap().longest()), 2);
    assert_eq!(count_reduced_words(&parse_cartan("G2").unwrap().longest()), 2);
}

mod random {
    use proptest::prelude::*;
    use rootsys::parse_cartan;

    const TYPES: [&str; 6] = ["A3", "B3", "C3", "D4", "G2", "F4"];

    fn word_in(rank: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(1..=rank, 0..14)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn length_changes_by_one_under_simple_reflections(t in 0usize..6, seed in prop::collection::vec(1usize..=4, 0..14)) {
            let d = parse_cartan(TYPES[t]).unwrap();
            let word: Vec<usize> = seed.iter().map(|&i| (i - 1) % d.rank() + 1).collect();
            let w = d.element_from_word(&word).unwrap();
            prop_assert!(w.length() <= word.len());
            prop_assert_eq!(w.length() % 2, word.len() % 2);
            prop_assert_eq!(w.length(), w.inversion_count());
            for i in 1..=d.rank() {
                let ws = w.mul_simple_right(i);
                let up = ws.length() == w.length() + 1;
                prop_assert!(up || ws.length() + 1 == w.length());
                prop_assert_eq!(w.is_right_descent(i), !up);
            }
        }

        #[test]
        fn inverse_and_reduced_word_round_trip(word in word_in(3)) {
            for name in ["A3", "B3", "C3"] {
                let d = parse_cartan(name).unwrap();
                let w = d.element_from_word(&word).unwrap();
                prop_assert!(w.mul(&w.inverse()).is_identity());
                prop_assert_eq!(w.inverse().length(), w.length());
                let again = d.element_from_reduced_word(w.reduced_word()).unwrap();
                prop_assert_eq!(&again, &w);
                let pos = d.positive_roots();
                // w permutes the roots
                for r in pos {
                    let image = w.act_on_root(r);
                    let neg: Vec<i64> = image.iter().map(|c| -c).collect();
                    prop_assert!(pos.contains(&image) || pos.contains(&neg));
                }
            }
        }
    }
}
