use hessenberg::HessenbergFunction;
use num::Zero;
use permgroup::Permutation;
use polyring::{rat, Polynomial, Rational, VariableContext};
use presentation::{f_ij, f_table, g, ideal_for, restrict_to_point, verify_vanishing, x_context};

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// The n=4 table written out from `x_i`, `t` and `g_j` alone.
#[test]
fn n4_table_matches_the_written_out_forms() {
    let ctx = x_context(4, true);
    let x = |k: usize| Polynomial::var(&ctx, k - 1);
    let t = Polynomial::var(&ctx, 4);
    let gj = |j: usize| g(j, 4, true).unwrap();
    let d = |a: usize, b: usize| &(&x(a) - &x(b)) - &t;
    let f = f_table(4, true);

    for j in 1..=4 {
        assert_eq!(f[&(j, j)], gj(j));
    }
    let f21 = &d(1, 2) * &gj(1);
    let f32 = &f21 + &(&d(2, 3) * &gj(2));
    let f43 = &f32 + &(&d(3, 4) * &gj(3));
    let f31 = &(&d(1, 3) * &d(1, 2)) * &gj(1);
    let f42 = &(&(&d(1, 3) * &d(1, 2)) * &gj(1)) + &(&d(2, 4) * &(&(&d(1, 2) * &gj(1)) + &(&d(2, 3) * &gj(2))));
    let f41 = &(&(&d(1, 4) * &d(1, 3)) * &d(1, 2)) * &gj(1);
    assert_eq!(f[&(2, 1)], f21);
    assert_eq!(f[&(3, 2)], f32);
    assert_eq!(f[&(4, 3)], f43);
    assert_eq!(f[&(3, 1)], f31);
    assert_eq!(f[&(4, 2)], f42);
    assert_eq!(f[&(4, 1)], f41);
    assert_eq!(f.len(), 10);
}

#[test]
fn g_has_the_expected_terms() {
    assert_eq!(g(2, 3, true).unwrap().to_string(), "-3*t + x2 + x1");
    assert_eq!(g(3, 3, false).unwrap().to_string(), "x3 + x2 + x1");
    assert!(g(0, 3, true).unwrap().is_zero());
    assert!(g(4, 3, true).is_err());
}

#[test]
fn degrees_are_i_minus_j_plus_one() {
    for n in 1..=8 {
        for with_t in [false, true] {
            for ((i, j), p) in f_table(n, with_t) {
                assert_eq!(p.homogeneous_degree(), Some((i - j + 1) as u32), "n={n} ({i},{j})");
                assert_eq!(p.cohomological_degree(), Some(2 * (i - j + 1) as u32));
            }
        }
    }
}

#[test]
fn diagonal_vanishes_at_the_identity() {
    // x_k = k·t is the restriction to the identity permutation
    for n in 1..=7 {
        let id = Permutation::identity(n);
        for j in 1..=n {
            let p = f_ij(j, j, n, true).unwrap();
            assert!(restrict_to_point(&p, &id).unwrap().is_zero(), "n={n} j={j}");
        }
    }
}

#[test]
fn ideal_for_3344_uses_the_lowest_boxes() {
    let h = HessenbergFunction::new(vec![3, 3, 4, 4]).unwrap();
    let ideal = ideal_for(&h, true);
    let expected: Vec<Polynomial> =
        [(3, 1), (3, 2), (4, 3), (4, 4)].iter().map(|&(i, j)| f_ij(i, j, 4, true).unwrap()).collect();
    assert_eq!(ideal.generators(), expected.as_slice());
    assert_eq!(ideal.degrees(), &[3, 2, 2, 1]);
}

fn value_at(p: &Polynomial, w: &str) -> (u32, Rational) {
    let r = restrict_to_point(p, &perm(w)).unwrap();
    let mut terms = r.terms();
    match terms.next() {
        None => (0, Rational::zero()),
        Some((e, c)) => {
            assert!(terms.next().is_none());
            (e[0], c.clone())
        }
    }
}

#[test]
fn delta_one_restrictions_for_3344() {
    let delta1 = f_ij(2, 1, 4, true).unwrap();
    let got: Vec<(u32, Rational)> = ["2314", "3124", "3421", "4132"].iter().map(|w| value_at(&delta1, w)).collect();
    assert_eq!(got, vec![(2, rat(-2)), (2, rat(2)), (2, rat(-4)), (2, rat(6))]);
}

#[test]
fn generators_vanish_on_the_fixed_points_of_3344() {
    let h = HessenbergFunction::new(vec![3, 3, 4, 4]).unwrap();
    let pts = h.fixed_points();
    assert_eq!(pts.len(), 12);
    for (i, j) in [(3, 2), (4, 3), (4, 4)] {
        let p = f_ij(i, j, 4, true).unwrap();
        for w in &pts {
            assert!(restrict_to_point(&p, w).unwrap().is_zero(), "f_{i}{j} at {w}");
        }
    }
    // the points added to the Peterson ones
    let peterson = HessenbergFunction::peterson(4).fixed_points();
    let mut extra: Vec<String> = pts.iter().filter(|w| !peterson.contains(w)).map(|w| w.to_string()).collect();
    extra.sort();
    assert_eq!(extra, vec!["2314", "3124", "3421", "4132"]);
}

#[test]
fn flag_f31_and_its_decomposition() {
    let ctx = x_context(4, true);
    let x = |k: usize| Polynomial::var(&ctx, k - 1);
    let t = Polynomial::var(&ctx, 4);
    let f31 = f_ij(3, 1, 4, true).unwrap();
    let delta = |k: usize| &g(k, 4, true).unwrap() * &(&(&x(k) - &x(k + 1)) - &t);
    let other = &(&delta(1) + &delta(2)) * &(&(&x(2) - &x(4)) - &t);
    let points = ["2341", "2431", "3142", "3412", "4123", "4213"];
    let f_vals: Vec<(u32, Rational)> = points.iter().map(|w| value_at(&f31, w)).collect();
    let o_vals: Vec<(u32, Rational)> = points.iter().map(|w| value_at(&other, w)).collect();
    let expect = |v: [i64; 6]| v.iter().map(|&c| (3, rat(c))).collect::<Vec<_>>();
    assert_eq!(f_vals, expect([6, 6, -4, -4, 6, 6]));
    assert_eq!(o_vals, expect([-6, -6, 4, 4, -6, -6]));
}

#[test]
fn restriction_needs_the_x_t_context() {
    let p = f_ij(1, 1, 3, false).unwrap();
    assert!(restrict_to_point(&p, &perm("123")).is_err());
    let circle = VariableContext::circle();
    assert!(restrict_to_point(&Polynomial::var(&circle, 0), &perm("1")).is_err());
}

#[test]
fn vanishing_for_every_h_up_to_6() {
    for n in 1..=6 {
        for h in HessenbergFunction::all(n) {
            let c = verify_vanishing(&h);
            assert!(c.passed(), "{h:?}: {:?}", c.failures().first());
            assert_eq!(c.entries.len(), n * h.fixed_points().len());
        }
    }
}

#[test]
fn a_non_generator_does_not_vanish() {
    // f_{2,1} is not a relation for the flag variety
    let h = HessenbergFunction::flag(3);
    let p = f_ij(2, 1, 3, true).unwrap();
    assert!(h.fixed_points().iter().any(|w| !restrict_to_point(&p, w).unwrap().is_zero()));
}
