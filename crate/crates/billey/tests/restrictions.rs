use billey::{
    billey_pi, billey_restrict, billey_restrict_type_a, billey_restrict_type_a_word, billey_restrict_word,
    restrict_tau_class, root_context, sigma_simple_closed_form,
};
use num::{Signed, Zero};
use permgroup::{Permutation, ReducedWord};
use polyring::{rat, Polynomial, VariableContext};
use proptest::prelude::*;
use rootsys::{parse_cartan, WeylElement, DEFAULT_ENUMERATION_BUDGET};

/// A reduced word of `w` built from the right, picking among right
/// descents according to `choices`.
fn reduced_word_by_choices(w: &Permutation, choices: &[usize]) -> ReducedWord {
    let n = w.n();
    let mut cur = w.clone();
    let mut rev = Vec::new();
    let mut step = 0;
    while !cur.is_identity() {
        let descents: Vec<usize> = (1..n).filter(|&k| cur.is_right_descent(k)).collect();
        let k = descents[choices.get(step).copied().unwrap_or(0) % descents.len()];
        rev.push(k);
        cur = cur.right_mul_simple(k);
        step += 1;
    }
    rev.reverse();
    ReducedWord::new(n, rev).unwrap()
}

fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 1..w.n() {
        if w.is_right_descent(k) {
            for mut b in all_reduced_words(&w.right_mul_simple(k)) {
                b.push(k);
                out.push(b);
            }
        }
    }
    out
}

/// `∏ (t_{w(i)} − t_{w(j)})` over inversions `i < j`, `w(i) > w(j)`.
fn diagonal_oracle(w: &Permutation) -> Polynomial {
    let n = w.n();
    let torus = VariableContext::torus(n);
    let mut p = Polynomial::one(&torus);
    for i in 1..=n {
        for j in i + 1..=n {
            if w.apply(i) > w.apply(j) {
                p = &p * &(&Polynomial::var(&torus, w.apply(i) - 1) - &Polynomial::var(&torus, w.apply(j) - 1));
            }
        }
    }
    p
}

#[test]
fn independent_of_reduced_word_on_s4() {
    let all = Permutation::all(4);
    for w in &all {
        let words = all_reduced_words(w);
        for v in &all {
            let reference = billey_restrict_type_a(v, w).unwrap();
            for b in &words {
                let got = billey_restrict_type_a_word(v, &ReducedWord::new(4, b.clone()).unwrap()).unwrap();
                assert_eq!(got, reference, "v={v} w={w} b={b:?}");
            }
        }
    }
}

#[test]
fn upper_triangular_homogeneous_positive_on_s4() {
    let all = Permutation::all(4);
    let datum = parse_cartan("A3").unwrap();
    for w in &all {
        let ww = datum.element_from_word(w.reduced_word().indices()).unwrap();
        for v in &all {
            let vv = datum.element_from_word(v.reduced_word().indices()).unwrap();
            let r = billey_restrict(&vv, &ww).unwrap();
            assert_eq!(r.is_zero(), !v.bruhat_leq(w), "v={v} w={w}");
            if !r.is_zero() {
                assert_eq!(r.cohomological_degree(), Some(2 * v.length() as u32));
                for (_, c) in r.terms() {
                    assert!(c.is_integer() && !c.is_negative());
                }
            }
        }
        let diag = billey_restrict_type_a(w, w).unwrap();
        assert!(!diag.is_zero());
        assert_eq!(diag, diagonal_oracle(w), "w={w}");
    }
}

#[test]
fn simple_classes_match_closed_form_on_s5() {
    for w in Permutation::all(5) {
        for k in 1..5 {
            let s = Permutation::simple(5, k).unwrap();
            let closed = restrict_tau_class(&sigma_simple_closed_form(k, 5).unwrap(), &w);
            assert_eq!(billey_restrict_type_a(&s, &w).unwrap(), closed, "k={k} w={w}");
        }
    }
}

/// `σ_{s_i}(w) = ϖ_i − w(ϖ_i)`, expressed in simple roots.
fn weight_oracle(w: &WeylElement, i: usize) -> Polynomial {
    let d = w.datum();
    let mut c = vec![0i64; d.rank()];
    c[i - 1] = 1;
    let wc = w.act_on_weight(&c);
    let diff: Vec<i64> = c.iter().zip(&wc).map(|(a, b)| a - b).collect();
    let roots = d.weights_to_roots(&diff);
    let ctx = root_context(d.rank());
    let mut p = Polynomial::zero(&ctx);
    for (k, r) in roots.iter().enumerate() {
        assert!(r.is_integer());
        p = &p + &Polynomial::var(&ctx, k).scale(&rat(r.to_integer()));
    }
    p
}

#[test]
fn simple_classes_match_weight_oracle_in_all_small_types() {
    for name in ["A3", "B2", "B3", "C3", "D4", "G2", "F4"] {
        let d = parse_cartan(name).unwrap();
        for (w, _) in d.weyl_enumerate(DEFAULT_ENUMERATION_BUDGET).unwrap() {
            for i in 1..=d.rank() {
                let s = d.simple_reflection(i).unwrap();
                assert_eq!(billey_restrict(&s, &w).unwrap(), weight_oracle(&w, i), "{name} i={i}");
            }
        }
    }
}

#[test]
fn general_type_word_independence_and_pi() {
    for name in ["B3", "C3", "G2"] {
        let d = parse_cartan(name).unwrap();
        let elems = d.weyl_enumerate(DEFAULT_ENUMERATION_BUDGET).unwrap();
        for (w, _) in &elems {
            // a second reduced word: greedy from the right with the largest descent
            let mut cur = w.clone();
            let mut rev = Vec::new();
            while !cur.is_identity() {
                let k = (1..=d.rank()).rev().find(|&k| cur.is_right_descent(k)).unwrap();
                rev.push(k);
                cur = cur.mul_simple_right(k);
            }
            rev.reverse();
            for (v, _) in elems.iter().step_by(3) {
                let a = billey_restrict(v, w).unwrap();
                let b = billey_restrict_word(v, &rev).unwrap();
                assert_eq!(a, b, "{name}");
                // π sends every simple root to t
                let ctx = VariableContext::circle();
                let images = vec![Polynomial::var(&ctx, 0); d.rank()];
                let pi = a.substitute(&ctx, &images).unwrap();
                let c = billey_pi(v, w).unwrap();
                assert_eq!(pi, Polynomial::monomial(&ctx, vec![v.length() as u32], c.clone()));
                assert_eq!(c.is_zero(), a.is_zero());
            }
        }
    }
}

proptest! {
    #[test]
    fn random_reduced_words_agree_on_s5(
        w in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle(),
        v in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle(),
        c1 in prop::collection::vec(0usize..4, 10),
        c2 in prop::collection::vec(0usize..4, 10),
    ) {
        let w = Permutation::from_word(&w).unwrap();
        let v = Permutation::from_word(&v).unwrap();
        let b1 = reduced_word_by_choices(&w, &c1);
        let b2 = reduced_word_by_choices(&w, &c2);
        prop_assert_eq!(b1.product(), w.clone());
        prop_assert_eq!(
            billey_restrict_type_a_word(&v, &b1).unwrap(),
            billey_restrict_type_a_word(&v, &b2).unwrap()
        );
    }
}
