use std::sync::Arc;

use hessenberg::HessenbergFunction;
use polyring::{rat, ratio, Polynomial, Rational};
use presentation::{
    compare_ideals, continued_fraction_check, flag_ideal, general_relations, ideal_contains, ideal_for, monomial_basis,
    peterson_presentation_check, peterson_presentation_general, peterson_x_ideal, peterson_z_ideal, x_context,
    PresentationError,
};
use rootsys::{parse_cartan, CartanDatum};

#[test]
fn peterson_n4_equals_the_simplified_quadratics() {
    let f = ideal_for(&HessenbergFunction::peterson(4), true);
    let q = peterson_x_ideal(4, true);
    let c = compare_ideals(&f, &q).unwrap();
    assert!(c.equal());
    assert_eq!(c.max_degree, 2);
}

#[test]
fn flag_ideal_equals_elementary_symmetric_relations() {
    for n in 1..=5 {
        for with_t in [false, true] {
            let f = ideal_for(&HessenbergFunction::flag(n), with_t);
            assert!(compare_ideals(&f, &flag_ideal(n, with_t)).unwrap().equal(), "n={n} t={with_t}");
        }
    }
}

#[test]
fn smaller_h_gives_a_larger_ideal() {
    let flag = ideal_for(&HessenbergFunction::flag(4), true);
    let pet = ideal_for(&HessenbergFunction::peterson(4), true);
    let c = compare_ideals(&flag, &pet).unwrap();
    assert!(c.left_in_right && !c.right_in_left);
}

#[test]
fn comparison_needs_matching_contexts() {
    let a = ideal_for(&HessenbergFunction::flag(3), true);
    let b = ideal_for(&HessenbergFunction::flag(3), false);
    assert!(matches!(compare_ideals(&a, &b), Err(PresentationError::Context(_))));
    assert!(ideal_contains(&a, &Polynomial::var(&x_context(3, false), 0)).is_err());
}

#[test]
fn membership_of_inhomogeneous_combinations() {
    let ideal = flag_ideal(3, false);
    let ctx = ideal.context().clone();
    let x = |k: usize| Polynomial::var(&ctx, k);
    let gens = ideal.generators();
    // x1·e1 + e2 + e3 mixes degrees 2 and 3
    let p = &(&(&x(0) * &gens[0]) + &gens[1]) + &gens[2];
    assert!(ideal_contains(&ideal, &p).unwrap());
    assert!(!ideal_contains(&ideal, &(&p + &x(0))).unwrap());
    assert!(ideal_contains(&ideal, &Polynomial::zero(&ctx)).unwrap());
    assert!(!ideal_contains(&ideal, &Polynomial::one(&ctx)).unwrap());
}

#[test]
fn peterson_presentation_up_to_5() {
    for n in 2..=5 {
        let r = peterson_presentation_check(n).unwrap();
        assert!(r.passed(), "n={n}: {r:?}");
        assert_eq!(r.z_ordinary.computed.total(), 1 << (n - 1));
    }
    assert!(peterson_presentation_check(1).is_err());
}

fn datum(name: &str) -> Arc<CartanDatum> {
    parse_cartan(name).unwrap()
}

#[test]
fn general_type_presentations() {
    for name in ["A2", "B2", "G2", "A3", "B3", "C3", "F4"] {
        let d = datum(name);
        let r = peterson_presentation_general(&d).unwrap();
        assert!(r.passed(), "{name}");
        assert_eq!(r.vanishing.len(), d.rank());
        assert_eq!(r.ordinary.computed.total(), 1 << d.rank());
    }
}

#[test]
fn a2_relations_are_twice_the_quadratics() {
    let rel = general_relations(&datum("A2"), true);
    let z = peterson_z_ideal(3, true);
    for (a, b) in rel.generators().iter().zip(z.generators()) {
        let doubled: Vec<(Vec<u32>, Rational)> = b.terms().map(|(e, c)| (e.clone(), c * rat(2))).collect();
        let got: Vec<(Vec<u32>, Rational)> = a.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        assert_eq!(got, doubled);
    }
    assert_eq!(rel.context().names(), &["w1", "w2", "t"]);
}

#[test]
fn continued_fraction_quarter() {
    let cf = continued_fraction_check(&ratio(1, 4), 100).unwrap();
    assert_eq!(cf.values.len(), 101);
    for (m, x) in cf.values.iter().enumerate() {
        let m = m as i64;
        assert_eq!(*x, ratio(m + 2, 2 * (m + 1)), "m={m}");
    }
    assert!(cf.all_positive());
}

#[test]
fn continued_fraction_failures() {
    // c = 1 reaches x_1 = 0
    assert!(matches!(continued_fraction_check(&rat(1), 5), Err(PresentationError::DivisionByZero { m: 2 })));
    assert!(matches!(continued_fraction_check(&ratio(1, 2), 5), Err(PresentationError::DivisionByZero { m: 3 })));
    // c = 3/4 goes negative at x_2 = -2
    let cf = continued_fraction_check(&ratio(3, 4), 2).unwrap();
    assert_eq!(cf.values, vec![rat(1), ratio(1, 4), rat(-2)]);
    assert!(!cf.all_positive());
}

mod random {
    use super::*;
    use proptest::prelude::*;

    fn combination(h: &HessenbergFunction, coeffs: &[i64], d: u32) -> Polynomial {
        let ideal = ideal_for(h, false);
        let ctx = ideal.context().clone();
        let mut p = Polynomial::zero(&ctx);
        let mut k = 0;
        for (g, &e) in ideal.generators().iter().zip(ideal.degrees()) {
            if e > d {
                continue;
            }
            for mu in presentation::monomials(h.n(), d - e) {
                let c = coeffs[k % coeffs.len()];
                k += 1;
                p = &p + &(g * &Polynomial::monomial(&ctx, mu, rat(c)));
            }
        }
        p
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn combinations_are_members_and_basis_monomials_are_not(
            idx in 0usize..14,
            coeffs in prop::collection::vec(-3i64..=3, 1..8),
            d in 1u32..5,
            pick in 0usize..64,
        ) {
            let h = HessenbergFunction::all(4)[idx].clone();
            let ideal = ideal_for(&h, false);
            let p = combination(&h, &coeffs, d);
            prop_assert!(ideal_contains(&ideal, &p).unwrap());
            let basis: Vec<Vec<u32>> = monomial_basis(&h).into_iter().filter(|m| m.iter().sum::<u32>() == d).collect();
            if !basis.is_empty() {
                let m = basis[pick % basis.len()].clone();
                let q = &p + &Polynomial::monomial(ideal.context(), m, rat(1));
                prop_assert!(!ideal_contains(&ideal, &q).unwrap());
            }
        }

        #[test]
        fn continued_fraction_small_c_stays_positive(num in 0i64..25) {
            // c ≤ 1/4 keeps every x_m ≥ 1/2
            let cf = continued_fraction_check(&ratio(num, 100), 40).unwrap();
            prop_assert!(cf.values.iter().all(|x| *x >= ratio(1, 2)));
        }
    }
}
