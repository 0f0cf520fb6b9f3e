//! Restrictions `σ_v(w)` of equivariant Schubert classes to torus-fixed
//! points, by Billey's formula
//!
//! `σ_v(w) = Σ ∏_k r(i_k, b)`, `r(i, b) = s_{b_1} ⋯ s_{b_{i−1}}(α_{b_i})`,
//!
//! summed over the position tuples of `b` (a reduced word of `w`) that
//! spell a reduced word of `v`. One engine serves every type; type A
//! results are re-expressed in `t_1, …, t_n` through `α_k = t_{k+1} − t_k`.

use std::sync::Arc;

use num::{BigInt, One, Zero};
use permgroup::{Permutation, ReducedWord};
use polyring::{Ctx, Polynomial, Rational, VariableContext};
use rootsys::{CartanDatum, RootError, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BilleyError {
    #[error("elements belong to different groups ({0} vs {1})")]
    Mismatch(String, String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },
}

/// `r(1,b), …, r(ℓ,b)` in simple-root coordinates, using running prefix
/// products.
pub fn roots_along_word(datum: &Arc<CartanDatum>, b: &[usize]) -> Result<Vec<Vec<i64>>, BilleyError> {
    let mut prefix = datum.identity();
    let mut out = Vec::with_capacity(b.len());
    for &k in b {
        if k == 0 || k > datum.rank() {
            return Err(BilleyError::OutOfRange { index: k, max: datum.rank() });
        }
        out.push(prefix.root_matrix().column(k - 1));
        prefix = prefix.mul_simple_right(k);
    }
    Ok(out)
}

/// Visits each strictly increasing 0-based position tuple of `b` spelling a
/// reduced word of `v`.
fn for_each_occurrence(v: &WeylElement, b: &[usize], mut f: impl FnMut(&[usize])) {
    fn rec(
        pos: usize,
        rest: &WeylElement,
        remaining: usize,
        b: &[usize],
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if remaining == 0 {
            f(chosen);
            return;
        }
        if b.len() < pos + remaining {
            return;
        }
        for i in pos..=b.len() - remaining {
            if rest.is_left_descent(b[i]) {
                chosen.push(i);
                rec(i + 1, &rest.mul_simple_left(b[i]), remaining - 1, b, chosen, f);
                chosen.pop();
            }
        }
    }
    let mut chosen = Vec::with_capacity(v.length());
    rec(0, v, v.length(), b, &mut chosen, &mut f);
}

/// 1-based position tuples of `b` spelling a reduced word of `v`.
pub fn subword_occurrences(v: &WeylElement, b: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_occurrence(v, b, |c| out.push(c.iter().map(|i| i + 1).collect()));
    out
}

/// Variables `a1, …, an` standing for the simple roots.
pub fn root_context(rank: usize) -> Ctx {
    VariableContext::indexed("a", rank, false)
}

fn root_poly(ctx: &Ctx, r: &[i64]) -> Polynomial {
    Polynomial::from_terms(
        ctx,
        r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| {
            let mut e = vec![0; r.len()];
            e[i] = 1;
            (Rational::from_integer(c.into()), e)
        }),
    )
}

fn check_same(v: &WeylElement, w: &WeylElement) -> Result<(), BilleyError> {
    if v.datum() != w.datum() {
        return Err(BilleyError::Mismatch(v.datum().name(), w.datum().name()));
    }
    Ok(())
}

/// `σ_v(w)` as a polynomial in the simple roots, computed along the given
/// reduced word `b` of `w`.
pub fn billey_restrict_word(v: &WeylElement, b: &[usize]) -> Result<Polynomial, BilleyError> {
    let datum = v.datum();
    let roots = roots_along_word(datum, b)?;
    let ctx = root_context(datum.rank());
    let polys: Vec<Polynomial> = roots.iter().map(|r| root_poly(&ctx, r)).collect();
    let mut total = Polynomial::zero(&ctx);
    for_each_occurrence(v, b, |occ| {
        let mut term = Polynomial::one(&ctx);
        for &i in occ {
            term = &term * &polys[i];
        }
        total = &total + &term;
    });
    Ok(total)
}

/// `σ_v(w)` in the simple roots, along the canonical reduced word of `w`.
pub fn billey_restrict(v: &WeylElement, w: &WeylElement) -> Result<Polynomial, BilleyError> {
    check_same(v, w)?;
    billey_restrict_word(v, w.reduced_word())
}

/// The coefficient `c` with `π(σ_v(w)) = c·t^{ℓ(v)}`, where `π` sends every
/// simple root to `t`. Each root contributes its height.
pub fn billey_pi_word(v: &WeylElement, b: &[usize]) -> Result<Rational, BilleyError> {
    let heights: Vec<i64> = roots_along_word(v.datum(), b)?.iter().map(|r| r.iter().sum()).collect();
    let mut total = BigInt::zero();
    for_each_occurrence(v, b, |occ| {
        let mut prod = BigInt::one();
        for &i in occ {
            prod *= heights[i];
        }
        total += prod;
    });
    Ok(Rational::from_integer(total))
}

pub fn billey_pi(v: &WeylElement, w: &WeylElement) -> Result<Rational, BilleyError> {
    check_same(v, w)?;
    billey_pi_word(v, w.reduced_word())
}

/// The element of `W(A_{n−1})` corresponding to a permutation.
pub fn permutation_to_weyl(datum: &Arc<CartanDatum>, p: &Permutation) -> Result<WeylElement, BilleyError> {
    if datum.rank() + 1 != p.n() {
        return Err(BilleyError::Mismatch(datum.name(), format!("S{}", p.n())));
    }
    Ok(datum.element_from_word(p.reduced_word().indices())?)
}

/// Rewrites a polynomial in `a1..a(n−1)` in `t1..tn` through
/// `α_k = t_{k+1} − t_k`.
pub fn alpha_to_t(p: &Polynomial, n: usize) -> Polynomial {
    let torus = VariableContext::torus(n);
    let images: Vec<Polynomial> = (1..n)
        .map(|k| &Polynomial::var(&torus, k) - &Polynomial::var(&torus, k - 1))
        .collect();
    p.substitute(&torus, &images).expect("one image per simple root")
}

/// `σ_v(w)` in `t_1, …, t_n` for permutations.
pub fn billey_restrict_type_a(v: &Permutation, w: &Permutation) -> Result<Polynomial, BilleyError> {
    if v.n() != w.n() {
        return Err(BilleyError::Mismatch(format!("S{}", v.n()), format!("S{}", w.n())));
    }
    let datum = CartanDatum::type_a(v.n());
    let vv = permutation_to_weyl(&datum, v)?;
    Ok(alpha_to_t(&billey_restrict_word(&vv, w.reduced_word().indices())?, v.n()))
}

/// As [`billey_restrict_type_a`] along an explicit reduced word of `w`.
pub fn billey_restrict_type_a_word(v: &Permutation, b: &ReducedWord) -> Result<Polynomial, BilleyError> {
    if v.n() != b.n() {
        return Err(BilleyError::Mismatch(format!("S{}", v.n()), format!("S{}", b.n())));
    }
    let datum = CartanDatum::type_a(v.n());
    let vv = permutation_to_weyl(&datum, v)?;
    Ok(alpha_to_t(&billey_restrict_word(&vv, b.indices())?, v.n()))
}

/// `τ_i|_w = t_{w(i)}`.
pub fn tau_restrict(i: usize, w: &Permutation) -> Result<Polynomial, BilleyError> {
    if i == 0 || i > w.n() {
        return Err(BilleyError::OutOfRange { index: i, max: w.n() });
    }
    Ok(Polynomial::var(&VariableContext::torus(w.n()), w.apply(i) - 1))
}

/// Context `tau1..taun, t1..tn` for classes written in the tautological
/// classes `τ_i` and the equivariant parameters `t_i`.
pub fn tau_context(n: usize) -> Ctx {
    let names: Vec<String> =
        (1..=n).map(|i| format!("tau{i}")).chain((1..=n).map(|i| format!("t{i}"))).collect();
    VariableContext::new(names).expect("distinct names")
}

/// `σ_{s_k} = Σ_{j ≤ k} (τ_j − t_j)`.
pub fn sigma_simple_closed_form(k: usize, n: usize) -> Result<Polynomial, BilleyError> {
    if k == 0 || k >= n {
        return Err(BilleyError::OutOfRange { index: k, max: n - 1 });
    }
    let ctx = tau_context(n);
    let mut p = Polynomial::zero(&ctx);
    for j in 0..k {
        p = &p + &(&Polynomial::var(&ctx, j) - &Polynomial::var(&ctx, n + j));
    }
    Ok(p)
}

/// Restricts a polynomial in `τ_i, t_i` to the fixed point `w`:
/// `τ_i ↦ t_{w(i)}`, `t_i ↦ t_i`.
pub fn restrict_tau_class(p: &Polynomial, w: &Permutation) -> Polynomial {
    let n = w.n();
    let torus = VariableContext::torus(n);
    let images: Vec<Polynomial> = (1..=n)
        .map(|i| Polynomial::var(&torus, w.apply(i) - 1))
        .chain((0..n).map(|i| Polynomial::var(&torus, i)))
        .collect();
    p.substitute(&torus, &images).expect("one image per variable")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagRelationReport {
    pub n: usize,
    pub checks: usize,
    /// `(i, w)` pairs where `e_i(t_{w(1)}, …) ≠ e_i(t_1, …)`.
    pub failures: Vec<(usize, Permutation)>,
}

impl FlagRelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `e_i(τ_1, …, τ_n) − e_i(t_1, …, t_n)` restricts to zero at
/// every permutation flag.
pub fn verify_flag_relations(n: usize) -> FlagRelationReport {
    let torus = VariableContext::torus(n);
    let vars: Vec<usize> = (0..n).collect();
    let mut failures = Vec::new();
    let mut checks = 0;
    let perms = Permutation::all(n);
    for i in 1..=n {
        let e = polyring::elementary_symmetric(i, &torus, &vars).expect("1 <= i <= n");
        for w in &perms {
            let images: Vec<Polynomial> = (1..=n).map(|j| Polynomial::var(&torus, w.apply(j) - 1)).collect();
            checks += 1;
            if e.substitute(&torus, &images).expect("images in torus") != e {
                failures.push((i, w.clone()));
            }
        }
    }
    FlagRelationReport { n, checks, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rootsys::parse_cartan;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn billey_example_both_words() {
        let s1 = p("213");
        let torus = VariableContext::torus(3);
        let expected = &Polynomial::var(&torus, 2) - &Polynomial::var(&torus, 0);
        for b in [vec![1, 2, 1], vec![2, 1, 2]] {
            let word = ReducedWord::new(3, b).unwrap();
            assert_eq!(billey_restrict_type_a_word(&s1, &word).unwrap(), expected);
        }
        assert_eq!(billey_restrict_type_a(&s1, &p("321")).unwrap().to_string(), "t3 - t1");
    }

    #[test]
    fn zero_off_the_interval() {
        assert!(billey_restrict_type_a(&p("213"), &p("123")).unwrap().is_zero());
        assert!(billey_restrict_type_a(&p("231"), &p("132")).unwrap().is_zero());
    }

    #[test]
    fn simple_at_simple_is_the_root() {
        for name in ["A3", "B2", "G2", "C3"] {
            let d = parse_cartan(name).unwrap();
            let ctx = root_context(d.rank());
            for i in 1..=d.rank() {
                let s = d.simple_reflection(i).unwrap();
                assert_eq!(billey_restrict(&s, &s).unwrap(), Polynomial::var(&ctx, i - 1));
            }
        }
    }

    #[test]
    fn tau_examples() {
        let torus = VariableContext::torus(3);
        assert_eq!(tau_restrict(1, &p("321")).unwrap(), Polynomial::var(&torus, 2));
        assert_eq!(tau_restrict(2, &p("123")).unwrap(), Polynomial::var(&torus, 1));
        assert_eq!(tau_restrict(3, &p("132")).unwrap(), Polynomial::var(&torus, 1));
        assert!(tau_restrict(4, &p("132")).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let torus = VariableContext::torus(3);
        let t = |i: usize| Polynomial::var(&torus, i - 1);
        let s1 = sigma_simple_closed_form(1, 3).unwrap();
        assert_eq!(restrict_tau_class(&s1, &p("321")), &t(3) - &t(1));
        for k in 1..3 {
            let s = sigma_simple_closed_form(k, 3).unwrap();
            assert!(restrict_tau_class(&s, &p("123")).is_zero());
        }
        let s2 = sigma_simple_closed_form(2, 3).unwrap();
        assert_eq!(restrict_tau_class(&s2, &p("132")), &t(3) - &t(2));
    }

    #[test]
    fn flag_relation_counts() {
        let r = verify_flag_relations(3);
        assert!(r.passed());
        assert_eq!(r.checks, 18);
        assert!(verify_flag_relations(2).passed());
        let r = verify_flag_relations(4);
        assert!(r.passed());
        assert_eq!(r.checks, 96);
    }

    #[test]
    fn mismatched_groups() {
        let a = parse_cartan("A2").unwrap().simple_reflection(1).unwrap();
        let b = parse_cartan("B2").unwrap().simple_reflection(1).unwrap();
        assert!(billey_restrict(&a, &b).is_err());
        assert!(billey_restrict_type_a(&p("21"), &p("213")).is_err());
    }
}
