use std::collections::BTreeMap;
use std::sync::Arc;

use billey::billey_pi;
use num::{BigInt, One, Zero};
use polyring::rational::factorial;
use polyring::Rational;
use rootsys::{count_reduced_words, CartanDatum, WeylElement, DEFAULT_ENUMERATION_BUDGET};

use crate::{LocalizationElement, PetersonError};

/// Subsets of simple roots, as sorted index lists.
pub type Subset = Vec<usize>;

/// Coefficients of a product `p_{s_i} · p_{v_K}` in the basis `{p_{v_J}}`:
/// the diagonal term `diagonal·t` at `K` and constants at `J = K ∪ {j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonkConstants<S: Ord> {
    pub diagonal: Rational,
    pub off: BTreeMap<S, Rational>,
}

/// Coefficients `c_J` with `x = Σ_J c_J t^{d−|J|} p_{v_J}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion<S: Ord> {
    pub degree: u32,
    pub coeffs: BTreeMap<S, Rational>,
}

impl<S: Ord + Clone> Expansion<S> {
    pub fn get(&self, s: &S) -> Rational {
        self.coeffs.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients only.
    pub fn support(&self) -> Vec<(S, Rational)> {
        self.coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(s, c)| (s.clone(), c.clone())).collect()
    }
}

#[derive(Clone, Debug)]
pub struct GiambelliGeneral {
    pub lhs: LocalizationElement<WeylElement>,
    pub rhs: LocalizationElement<WeylElement>,
    /// `(component nodes, |Red(v_{K_c})|)`.
    pub reduced_word_counts: Vec<(Subset, u128)>,
    pub holds: bool,
}

/// Peterson Schubert classes of a root datum, as localization vectors
/// over the fixed points `{w_K : K ⊆ Δ}`.
#[derive(Clone, Debug)]
pub struct PetersonSystem {
    datum: Arc<CartanDatum>,
    subsets: Vec<Subset>,
    index: BTreeMap<Subset, usize>,
    points: Arc<Vec<WeylElement>>,
    classes: Vec<LocalizationElement<WeylElement>>,
}

/// All subsets of `[n]` ordered by size, then lexicographically.
pub fn ordered_subsets(n: usize) -> Vec<Subset> {
    let mut out: Vec<Subset> =
        (0u32..(1 << n)).map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect();
    out.sort_by(|a: &Subset, b: &Subset| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

impl PetersonSystem {
    pub fn new(datum: Arc<CartanDatum>) -> Result<Self, PetersonError> {
        Self::with_budget(datum, DEFAULT_ENUMERATION_BUDGET)
    }

    /// Fails when `|W|` exceeds `budget`.
    pub fn with_budget(datum: Arc<CartanDatum>, budget: usize) -> Result<Self, PetersonError> {
        datum.weyl_enumerate(budget)?;
        Ok(Self::build(datum))
    }

    /// Skips the group-size check; used for type A where the fixed-point
    /// count stays small even when `|W|` does not.
    pub(crate) fn build(datum: Arc<CartanDatum>) -> Self {
        let subsets = ordered_subsets(datum.rank());
        let index = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let points: Vec<WeylElement> =
            subsets.iter().map(|k| datum.longest_parabolic(k).expect("indices in range")).collect();
        let mut sys =
            PetersonSystem { datum, subsets, index, points: Arc::new(points), classes: Vec::new() };
        sys.classes = sys.subsets.iter().map(|k| sys.class_of(&sys.v(k))).collect();
        sys
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn points(&self) -> &Arc<Vec<WeylElement>> {
        &self.points
    }

    fn idx(&self, k: &[usize]) -> Result<usize, PetersonError> {
        let mut key = k.to_vec();
        key.sort_unstable();
        key.dedup();
        self.index.get(&key).copied().ok_or_else(|| PetersonError::BadSubset(format!("{k:?}")))
    }

    /// `v_K`: the product over components (by smallest node) of the
    /// simple reflections of each component, taken in the standard node
    /// order of its type under the lexicographically smallest embedding.
    pub fn v(&self, k: &[usize]) -> WeylElement {
        let word: Vec<usize> =
            self.datum.connected_components(k).into_iter().flat_map(|c| c.embedding).collect();
        self.datum.element_from_word(&word).expect("indices in range")
    }

    /// The restriction of `σ_v` to the fixed points, after `α_i ↦ t`.
    pub fn class_of(&self, v: &WeylElement) -> LocalizationElement<WeylElement> {
        let values = self.points.iter().map(|w| billey_pi(v, w).expect("same datum")).collect();
        LocalizationElement::new(self.points.clone(), v.length() as u32, values)
    }

    /// `p_{v_K}`.
    pub fn class(&self, k: &[usize]) -> Result<LocalizationElement<WeylElement>, PetersonError> {
        Ok(self.classes[self.idx(k)?].clone())
    }

    /// `p_{s_i}`.
    pub fn simple_class(&self, i: usize) -> Result<LocalizationElement<WeylElement>, PetersonError> {
        self.class(&[i])
    }

    /// `p_{v_K}(w_J)` as the coefficient of `t^{|K|}`.
    pub fn value(&self, k: &[usize], j: &[usize]) -> Result<Rational, PetersonError> {
        Ok(self.classes[self.idx(k)?].values()[self.idx(j)?].clone())
    }

    /// Solves `x = Σ_J c_J t^{d−|J|} p_{v_J}` by forward substitution in
    /// the size-then-lex order, in which the restriction matrix is
    /// triangular.
    pub fn expand(&self, x: &LocalizationElement<WeylElement>) -> Result<Expansion<Subset>, PetersonError> {
        if x.points().len() != self.points.len() {
            return Err(PetersonError::PointMismatch);
        }
        let d = x.degree();
        let mut coeffs: Vec<Rational> = Vec::with_capacity(self.subsets.len());
        for (b, kb) in self.subsets.iter().enumerate() {
            let mut rest = x.values()[b].clone();
            for (a, ka) in self.subsets[..b].iter().enumerate() {
                if !coeffs[a].is_zero() && is_subset(ka, kb) {
                    rest -= &coeffs[a] * &self.classes[a].values()[b];
                }
            }
            let diag = &self.classes[b].values()[b];
            if diag.is_zero() {
                return Err(PetersonError::Singular(format!("{kb:?}")));
            }
            let c = rest / diag;
            if !c.is_zero() && kb.len() as u32 > d {
                return Err(PetersonError::Residual { subset: format!("{kb:?}"), degree: d });
            }
            coeffs.push(c);
        }
        Ok(Expansion { degree: d, coeffs: self.subsets.iter().cloned().zip(coeffs).collect() })
    }

    /// Monk constants from the closed quotient formula
    /// `c_{i,K}^J = (p_{s_i}(w_J) − p_{s_i}(w_K)) p_{v_K}(w_J) / p_{v_J}(w_J)`.
    pub fn monk(&self, i: usize, k: &[usize]) -> Result<MonkConstants<Subset>, PetersonError> {
        let ki = self.idx(k)?;
        let kset = &self.subsets[ki];
        let diagonal = self.value(&[i], kset)?;
        let mut off = BTreeMap::new();
        for j in 1..=self.datum.rank() {
            if kset.contains(&j) {
                continue;
            }
            let mut jset = kset.clone();
            jset.push(j);
            jset.sort_unstable();
            let denom = self.value(&jset, &jset)?;
            if denom.is_zero() {
                return Err(PetersonError::Singular(format!("{jset:?}")));
            }
            let c = (self.value(&[i], &jset)? - &diagonal) * self.value(kset, &jset)? / denom;
            off.insert(jset, c);
        }
        Ok(MonkConstants { diagonal, off })
    }

    /// Monk constants by expanding the pointwise product.
    pub fn monk_oracle(&self, i: usize, k: &[usize]) -> Result<MonkConstants<Subset>, PetersonError> {
        let kset = self.subsets[self.idx(k)?].clone();
        let prod = self.simple_class(i)?.try_mul(&self.class(&kset)?)?;
        monk_from_expansion(&kset, self.datum.rank(), &self.expand(&prod)?)
    }

    /// `c_i^j`: the coefficient of `p_{v_{{i,j}}}` in `p_{s_i}²`.
    pub fn c_ij(&self, i: usize, j: usize) -> Result<Rational, PetersonError> {
        let mut key = vec![i, j];
        key.sort_unstable();
        Ok(self.monk(i, &[i])?.off.get(&key).cloned().unwrap_or_else(Rational::zero))
    }

    /// `p_{v_K} = ∏_c |Red(v_{K_c})| / |K_c|! · ∏_{i ∈ K} p_{s_i}`, over the
    /// connected components `K_c` of `K`.
    pub fn giambelli(&self, k: &[usize]) -> Result<GiambelliGeneral, PetersonError> {
        let lhs = self.class(k)?;
        let mut rhs = LocalizationElement::constant(self.points.clone(), Rational::one());
        let mut counts = Vec::new();
        for comp in self.datum.connected_components(k) {
            let v = self.datum.element_from_word(&comp.embedding)?;
            let red = count_reduced_words(&v);
            let scale = Rational::new(BigInt::from(red), factorial(comp.nodes.len() as u64));
            let mut part = LocalizationElement::constant(self.points.clone(), scale);
            for &i in &comp.nodes {
                part = part.try_mul(&self.simple_class(i)?)?;
            }
            rhs = rhs.try_mul(&part)?;
            counts.push((comp.nodes.clone(), red));
        }
        let holds = lhs == rhs;
        Ok(GiambelliGeneral { lhs, rhs, reduced_word_counts: counts, holds })
    }

    /// Restriction matrix `M[K][J] = p_{v_K}(w_J)` (coefficients of
    /// `t^{|K|}`) in the size-then-lex order.
    pub fn restriction_matrix(&self) -> Vec<Vec<Rational>> {
        self.classes.iter().map(|c| c.values().to_vec()).collect()
    }
}

pub(crate) fn monk_from_expansion<S>(
    k: &S,
    rank: usize,
    e: &Expansion<S>,
) -> Result<MonkConstants<S>, PetersonError>
where
    S: AsSubset + Ord + Clone + std::fmt::Debug,
{
    let mut off = BTreeMap::new();
    let mut diagonal = Rational::zero();
    for (s, c) in &e.coeffs {
        if s == k {
            diagonal = c.clone();
        } else if s.members().len() == k.members().len() + 1 && is_subset(k.members(), s.members()) {
            off.insert(s.clone(), c.clone());
        } else if !c.is_zero() {
            return Err(PetersonError::UnexpectedTerm(format!("{s:?}")));
        }
    }
    debug_assert!(off.len() + k.members().len() == rank);
    Ok(MonkConstants { diagonal, off })
}

/// Access to the members of a subset label.
pub trait AsSubset {
    fn members(&self) -> &[usize];
}

impl AsSubset for Vec<usize> {
    fn members(&self) -> &[usize] {
        self
    }
}
