use billey::billey_restrict_type_a;
use hessenberg::SubsetA;
use num::{Signed, Zero};
use peterson::{LocalizationElement, PetersonA};
use permgroup::Permutation;
use polyring::{rat, Rational};

fn sub(n: usize, s: &str) -> SubsetA {
    SubsetA::parse(n, s).unwrap()
}

/// The class computed directly from permutations: Billey's formula in
/// `t_1..t_n`, then `t_i ↦ i`.
fn class_from_permutations(n: usize, a: &SubsetA) -> Vec<Rational> {
    let point: Vec<Rational> = (1..=n as i64).map(rat).collect();
    SubsetA::all(n)
        .iter()
        .map(|b| billey_restrict_type_a(&a.v(), &b.w()).unwrap().evaluate(&point))
        .collect()
}

#[test]
fn classes_agree_with_permutation_billey() {
    for n in 2..=5 {
        let p = PetersonA::new(n).unwrap();
        for a in SubsetA::all(n) {
            let c = p.class(&a).unwrap();
            assert_eq!(c.degree() as usize, a.len());
            assert_eq!(c.values(), class_from_permutations(n, &a).as_slice(), "n={n} A={a}");
        }
    }
}

#[test]
fn simple_classes_have_closed_form_and_p_n_vanishes() {
    for n in 2..=6 {
        let p = PetersonA::new(n).unwrap();
        for i in 1..n {
            assert_eq!(p.simple_class(i).unwrap(), p.simple_class_closed(i).unwrap());
        }
        assert!(p.top_class_closed().is_zero());
    }
}

#[test]
fn simple_class_diagonal_values() {
    for n in 2..=6 {
        let p = PetersonA::new(n).unwrap();
        for (k, a) in p.subsets().iter().enumerate() {
            for i in 1..n {
                let expected = match a.string_of(i) {
                    Some((tl, hd)) => rat(((hd - i + 1) * (i - tl + 1)) as i64),
                    None => Rational::zero(),
                };
                assert_eq!(p.simple_class(i).unwrap().values()[k], expected, "A={a} i={i}");
            }
        }
    }
}

#[test]
fn upper_triangular_for_n_up_to_6() {
    for n in 2..=6 {
        let p = PetersonA::new(n).unwrap();
        assert!(p.is_upper_triangular(), "n={n}");
        for (r, a) in p.subsets().iter().enumerate() {
            let c = p.class(a).unwrap();
            for (k, b) in p.subsets().iter().enumerate() {
                assert_eq!(c.values()[k].is_zero(), !a.is_subset(b), "A={a} B={b}");
                if k == r {
                    assert!(c.values()[k].is_positive());
                }
            }
        }
    }
}

fn check_monk(p: &PetersonA, i: usize, a: &SubsetA) {
    let closed = p.monk_closed(i, a).unwrap();
    assert_eq!(p.monk_oracle(i, a).unwrap(), closed, "n={} i={i} A={a}", p.n());
    assert_eq!(p.monk(i, a).unwrap(), closed, "n={} i={i} A={a}", p.n());
    assert!(closed.diagonal.is_integer() && !closed.diagonal.is_negative());
    for c in closed.off.values() {
        assert!(c.is_integer() && !c.is_negative());
    }
}

#[test]
fn monk_closed_form_matches_oracle_up_to_5() {
    for n in 2..=5 {
        let p = PetersonA::new(n).unwrap();
        for a in SubsetA::all(n) {
            for i in 1..n {
                check_monk(&p, i, &a);
            }
        }
    }
}

#[test]
fn monk_closed_form_matches_oracle_n6_sampled() {
    let p = PetersonA::new(6).unwrap();
    for (k, a) in SubsetA::all(6).iter().enumerate() {
        if k % 3 == 0 {
            for i in 1..6 {
                check_monk(&p, i, a);
            }
        }
    }
}

#[test]
fn monk_case_examples() {
    let p = PetersonA::new(5).unwrap();
    // i not in A: no diagonal term; i not in B: no coefficient
    let m = p.monk_closed(2, &sub(5, "4")).unwrap();
    assert!(m.diagonal.is_zero());
    assert!(m.off[&sub(5, "1,4")].is_zero());
    assert_eq!(m.off[&sub(5, "2,4")], rat(1));
    // j inside a longer string
    let m = p.monk_closed(2, &sub(5, "1,3")).unwrap();
    assert_eq!(m.diagonal, Rational::zero());
    assert_eq!(m.off[&sub(5, "1,2,3")], rat(6));
    assert_eq!(m.off[&sub(5, "1,3,4")], rat(0));
    assert_eq!(p.monk_oracle(2, &sub(5, "1,3")).unwrap(), m);
}

#[test]
fn product_with_unit_is_simple_class() {
    let p = PetersonA::new(4).unwrap();
    for i in 1..4 {
        let m = p.monk_oracle(i, &SubsetA::empty(4)).unwrap();
        assert!(m.diagonal.is_zero());
        for (b, c) in &m.off {
            assert_eq!(*c, if b.elems() == [i] { rat(1) } else { rat(0) });
        }
    }
}

#[test]
fn giambelli_for_n_up_to_6() {
    for n in 2..=6 {
        let p = PetersonA::new(n).unwrap();
        for a in SubsetA::all(n) {
            let g = p.giambelli(&a).unwrap();
            assert!(g.holds, "n={n} A={a}");
        }
    }
    let p = PetersonA::new(4).unwrap();
    assert_eq!(p.giambelli(&sub(4, "1,3")).unwrap().scalar, rat(1));
    let p = PetersonA::new(6).unwrap();
    assert_eq!(p.giambelli(&sub(6, "2,3,5")).unwrap().scalar, Rational::new(1.into(), 2.into()));
}

#[test]
fn expansion_examples() {
    let p = PetersonA::new(3).unwrap();
    for a in p.subsets() {
        let e = p.expand(&p.class(a).unwrap()).unwrap();
        assert_eq!(e.support(), vec![(a.clone(), rat(1))]);
    }
    let zero = LocalizationElement::zero(p.points().clone(), 2);
    assert!(p.expand(&zero).unwrap().support().is_empty());
    let s1 = p.simple_class(1).unwrap();
    let e = p.expand(&s1.try_mul(&s1).unwrap()).unwrap();
    assert_eq!(e.support(), vec![(sub(3, "1"), rat(1)), (sub(3, "1,2"), rat(1))]);
}

#[test]
fn expansion_rejects_vectors_outside_the_span() {
    let p = PetersonA::new(3).unwrap();
    // degree 0 with a value that needs t^{-1}
    let pts = p.points().clone();
    let vals = vec![rat(0), rat(1), rat(0), rat(0)];
    let x = LocalizationElement::new(pts, 0, vals);
    assert!(p.expand(&x).is_err());
}

#[test]
fn points_are_block_reversals() {
    let p = PetersonA::new(4).unwrap();
    let got: Vec<String> = p.points().iter().map(Permutation::to_string).collect();
    assert_eq!(got, vec!["1234", "2134", "1324", "1243", "3214", "2143", "1432", "4321"]);
}

mod random {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn monk_and_giambelli_on_random_subsets(n in 2usize..=6, mask in 0u32..32, i in 1usize..6) {
            prop_assume!(i < n);
            let a = SubsetA::new(n, (1..n).filter(|k| mask >> (k - 1) & 1 == 1)).unwrap();
            let p = PetersonA::new(n).unwrap();
            prop_assert_eq!(p.monk_closed(i, &a).unwrap(), p.monk_oracle(i, &a).unwrap());
            prop_assert!(p.giambelli(&a).unwrap().holds);
        }
    }
}
