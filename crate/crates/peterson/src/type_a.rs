use std::collections::BTreeMap;
use std::sync::Arc;

use hessenberg::SubsetA;
use num::{BigInt, One, Zero};
use permgroup::Permutation;
use polyring::rational::{binomial, factorial};
use polyring::Rational;
use rootsys::CartanDatum;

use crate::general::{monk_from_expansion, AsSubset, Expansion, MonkConstants, PetersonSystem};
use crate::{LocalizationElement, PetersonError};

impl AsSubset for SubsetA {
    fn members(&self) -> &[usize] {
        self.elems()
    }
}

/// Result of checking `p_{v_A} = ∏_strings 1/|S|! · ∏_{i∈A} p_{s_i}`.
#[derive(Clone, Debug)]
pub struct GiambelliA {
    pub subset: SubsetA,
    /// The scalar `∏ 1/|S|!` over the strings `S` of `A`.
    pub scalar: Rational,
    pub lhs: LocalizationElement<Permutation>,
    pub rhs: LocalizationElement<Permutation>,
    pub holds: bool,
}

/// The Peterson variety in type `A_{n−1}`, with fixed points `w_A`
/// labelled by `A ⊆ [n−1]`.
#[derive(Clone, Debug)]
pub struct PetersonA {
    n: usize,
    system: PetersonSystem,
    subsets: Vec<SubsetA>,
    points: Arc<Vec<Permutation>>,
}

impl PetersonA {
    pub fn new(n: usize) -> Result<Self, PetersonError> {
        if n < 2 {
            return Err(PetersonError::TooSmall(n));
        }
        let system = PetersonSystem::build(CartanDatum::type_a(n));
        let subsets = SubsetA::all(n);
        let points = Arc::new(subsets.iter().map(SubsetA::w).collect());
        Ok(PetersonA { n, system, subsets, points })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn system(&self) -> &PetersonSystem {
        &self.system
    }

    /// `A ⊆ [n−1]` by size then lex; position `k` labels the `k`-th point.
    pub fn subsets(&self) -> &[SubsetA] {
        &self.subsets
    }

    pub fn points(&self) -> &Arc<Vec<Permutation>> {
        &self.points
    }

    fn check(&self, a: &SubsetA) -> Result<(), PetersonError> {
        if a.n() != self.n {
            return Err(PetersonError::BadSubset(format!("{a} for n={}", self.n)));
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<(), PetersonError> {
        if i == 0 || i >= self.n {
            return Err(PetersonError::OutOfRange { index: i, max: self.n - 1 });
        }
        Ok(())
    }

    fn relabel(&self, x: LocalizationElement<rootsys::WeylElement>) -> LocalizationElement<Permutation> {
        x.relabel(self.points.clone())
    }

    /// `p_{v_A}`.
    pub fn class(&self, a: &SubsetA) -> Result<LocalizationElement<Permutation>, PetersonError> {
        self.check(a)?;
        Ok(self.relabel(self.system.class(a.elems())?))
    }

    pub fn simple_class(&self, i: usize) -> Result<LocalizationElement<Permutation>, PetersonError> {
        self.check_index(i)?;
        self.class(&SubsetA::new(self.n, [i])?)
    }

    /// `p_{s_i}(w) = Σ_{j ≤ i} (w(j) − j)·t`.
    pub fn simple_class_closed(&self, i: usize) -> Result<LocalizationElement<Permutation>, PetersonError> {
        self.check_index(i)?;
        Ok(simple_sum(&self.points, i))
    }

    /// `Σ_{j ≤ n} (w(j) − j)·t`, which vanishes identically.
    pub fn top_class_closed(&self) -> LocalizationElement<Permutation> {
        simple_sum(&self.points, self.n)
    }

    /// Expands `x` in `{t^{d−|A|} p_{v_A}}`.
    pub fn expand(&self, x: &LocalizationElement<Permutation>) -> Result<Expansion<SubsetA>, PetersonError> {
        let e = self.system.expand(&x.relabel(self.system.points().clone()))?;
        let coeffs = self.subsets.iter().map(|a| (a.clone(), e.get(&a.elems().to_vec()))).collect();
        Ok(Expansion { degree: e.degree, coeffs })
    }

    /// Monk constants from the closed combinatorial formula.
    pub fn monk_closed(&self, i: usize, a: &SubsetA) -> Result<MonkConstants<SubsetA>, PetersonError> {
        self.check_index(i)?;
        self.check(a)?;
        let diagonal = match a.string_of(i) {
            Some((tail, head)) => int((head - i + 1) * (i - tail + 1)),
            None => Rational::zero(),
        };
        let mut off = BTreeMap::new();
        for j in 1..self.n {
            if a.contains(j) {
                continue;
            }
            let b = a.with(j)?;
            let (tail, head) = b.string_of(j).expect("j is in B");
            let c = if !b.contains(i) || i < tail || i > head {
                Rational::zero()
            } else if j <= i {
                Rational::from_integer(BigInt::from(head - i + 1) * binomial((head - tail + 1) as i64, (j - tail) as i64))
            } else {
                Rational::from_integer(BigInt::from(i - tail + 1) * binomial((head - tail + 1) as i64, (j - tail + 1) as i64))
            };
            off.insert(b, c);
        }
        Ok(MonkConstants { diagonal, off })
    }

    /// Monk constants from the quotient formula of the general engine.
    pub fn monk(&self, i: usize, a: &SubsetA) -> Result<MonkConstants<SubsetA>, PetersonError> {
        self.check_index(i)?;
        self.check(a)?;
        let m = self.system.monk(i, a.elems())?;
        let off = m
            .off
            .into_iter()
            .map(|(k, c)| Ok((SubsetA::new(self.n, k)?, c)))
            .collect::<Result<_, PetersonError>>()?;
        Ok(MonkConstants { diagonal: m.diagonal, off })
    }

    /// Monk constants by expanding `p_{s_i} · p_{v_A}` directly.
    pub fn monk_oracle(&self, i: usize, a: &SubsetA) -> Result<MonkConstants<SubsetA>, PetersonError> {
        self.check_index(i)?;
        let prod = self.simple_class(i)?.try_mul(&self.class(a)?)?;
        monk_from_expansion(a, self.n - 1, &self.expand(&prod)?)
    }

    pub fn giambelli(&self, a: &SubsetA) -> Result<GiambelliA, PetersonError> {
        let lhs = self.class(a)?;
        let mut scalar = Rational::one();
        for (x, y) in a.strings() {
            scalar /= Rational::from_integer(factorial((y - x + 1) as u64));
        }
        let mut rhs = LocalizationElement::constant(self.points.clone(), scalar.clone());
        for &i in a.elems() {
            rhs = rhs.try_mul(&self.simple_class(i)?)?;
        }
        let holds = lhs == rhs;
        Ok(GiambelliA { subset: a.clone(), scalar, lhs, rhs, holds })
    }

    /// `p_{v_A}(w_B) = 0` unless `A ⊆ B`, and the diagonal is nonzero.
    pub fn is_upper_triangular(&self) -> bool {
        let m = self.system.restriction_matrix();
        self.subsets.iter().enumerate().all(|(r, a)| {
            self.subsets.iter().enumerate().all(|(c, b)| {
                let v = &m[r][c];
                if r == c {
                    !v.is_zero()
                } else {
                    a.is_subset(b) || v.is_zero()
                }
            })
        })
    }
}

fn int(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn simple_sum(points: &Arc<Vec<Permutation>>, i: usize) -> LocalizationElement<Permutation> {
    let values = points
        .iter()
        .map(|w| {
            let s: i64 = (1..=i).map(|j| w.apply(j) as i64 - j as i64).sum();
            Rational::from_integer(BigInt::from(s))
        })
        .collect();
    LocalizationElement::new(points.clone(), 1, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(n: usize, s: &str) -> SubsetA {
        SubsetA::parse(n, s).unwrap()
    }

    #[test]
    fn empty_subset_is_one() {
        let p = PetersonA::new(4).unwrap();
        let one = p.class(&SubsetA::empty(4)).unwrap();
        assert_eq!(one.degree(), 0);
        assert!(one.values().iter().all(|v| v.is_one()));
    }

    #[test]
    fn simple_class_at_own_reflection_is_t() {
        let p = PetersonA::new(4).unwrap();
        for i in 1..4 {
            let k = p.subsets().iter().position(|a| *a == sub(4, &i.to_string())).unwrap();
            assert_eq!(p.simple_class(i).unwrap().values()[k], Rational::one());
        }
    }

    #[test]
    fn monk_examples() {
        let p = PetersonA::new(3).unwrap();
        let m = p.monk_closed(1, &sub(3, "2")).unwrap();
        assert_eq!(m.diagonal, Rational::zero());
        assert_eq!(m.off[&sub(3, "1,2")], int(2));
        let m = p.monk_closed(1, &sub(3, "1")).unwrap();
        assert_eq!(m.diagonal, Rational::one());
        assert_eq!(m.off[&sub(3, "1,2")], Rational::one());
        assert_eq!(p.monk_oracle(1, &sub(3, "1")).unwrap(), m);
    }

    #[test]
    fn giambelli_example() {
        let p = PetersonA::new(3).unwrap();
        let g = p.giambelli(&sub(3, "1,2")).unwrap();
        assert_eq!(g.scalar, Rational::new(1.into(), 2.into()));
        assert!(g.holds);
    }

    #[test]
    fn bad_input() {
        assert!(PetersonA::new(1).is_err());
        let p = PetersonA::new(3).unwrap();
        assert!(p.simple_class(3).is_err());
        assert!(p.class(&sub(4, "1")).is_err());
    }
}
