use std::sync::Arc;

use hessenberg::HessenbergFunction;
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use peterson::{PetersonA, PetersonSystem};
use permgroup::Permutation;
use polyring::{Ctx, HilbertSeriesPoly, Polynomial, Rational, VariableContext};
use rayon::prelude::*;
use rootsys::CartanDatum;

use crate::graded::{
    compare_ideals, is_regular_sequence, monomial_count, monomials, regularity_with_pieces, GradedPiece,
    HilbertFunctionTable, IdealComparison, RegularityCertificate,
};
use crate::modular::ModularPiece;
use crate::ideal::{
    ideal_for, peterson_quadratics_in_x, peterson_x_ideal, peterson_z_ideal, IdealPresentation, Provenance,
};
use crate::PresentationError;

/// `∏_j (1 + q² + ⋯ + q^{2(h(j)−j)})`.
pub fn expected_poincare(h: &HessenbergFunction) -> HilbertSeriesPoly {
    let factors: Vec<HilbertSeriesPoly> =
        (1..=h.n()).map(|j| HilbertSeriesPoly::q_integer(h.get(j) - j)).collect();
    HilbertSeriesPoly::product(&factors)
}

/// Evaluates a polynomial with integer coefficients at an integer point.
struct IntEvaluator {
    terms: Vec<(Vec<u32>, i128)>,
}

impl IntEvaluator {
    fn new(p: &Polynomial) -> Option<Self> {
        let terms = p
            .terms()
            .map(|(e, c)| if c.is_integer() { c.to_integer().to_i128().map(|v| (e.clone(), v)) } else { None })
            .collect::<Option<Vec<_>>>()?;
        Some(IntEvaluator { terms })
    }

    fn eval(&self, point: &[i128]) -> i128 {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(point).fold(*c, |acc, (&k, &x)| acc * x.pow(k)))
            .sum()
    }
}

/// Restriction of a class in `ℚ[x_1..x_n, t]` to the fixed point `w`:
/// `x_i ↦ w(i)·t`.
pub fn restrict_to_point(p: &Polynomial, w: &Permutation) -> Result<Polynomial, PresentationError> {
    let n = w.n();
    let ctx = p.context();
    if ctx.len() != n + 1 || ctx.name(n) != "t" {
        return Err(PresentationError::Context(format!("expected x1..x{n},t, got {}", ctx.names().join(","))));
    }
    let circle = VariableContext::circle();
    let t = Polynomial::var(&circle, 0);
    let images: Vec<Polynomial> = (1..=n)
        .map(|i| t.scale(&Rational::from_integer(w.apply(i).into())))
        .chain([t.clone()])
        .collect();
    Ok(p.substitute(&circle, &images)?)
}

#[derive(Clone, Debug)]
pub struct VanishingEntry {
    /// `(h(j), j)`.
    pub generator: (usize, usize),
    pub point: Permutation,
    /// Coefficient `c` of the restriction `c·t^d`.
    pub value: Rational,
    pub degree: u32,
}

#[derive(Clone, Debug)]
pub struct VanishingCertificate {
    pub h: HessenbergFunction,
    pub entries: Vec<VanishingEntry>,
}

impl VanishingCertificate {
    pub fn failures(&self) -> Vec<&VanishingEntry> {
        self.entries.iter().filter(|e| !e.value.is_zero()).collect()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.value.is_zero())
    }
}

/// Restricts every generator `f_{h(j),j}` to every fixed point of `h`.
pub fn verify_vanishing(h: &HessenbergFunction) -> VanishingCertificate {
    let ideal = ideal_for(h, true);
    let points = h.fixed_points();
    let mut entries = Vec::with_capacity(points.len() * h.n());
    for (j, gen) in ideal.generators().iter().enumerate() {
        let degree = ideal.degrees()[j];
        let fast = IntEvaluator::new(gen);
        for w in &points {
            let value = match &fast {
                Some(ev) => {
                    let point: Vec<i128> = (1..=h.n()).map(|i| w.apply(i) as i128).chain([1]).collect();
                    Rational::from_integer(BigInt::from(ev.eval(&point)))
                }
                None => {
                    let point: Vec<Rational> = (1..=h.n())
                        .map(|i| Rational::from_integer(w.apply(i).into()))
                        .chain([Rational::one()])
                        .collect();
                    gen.evaluate(&point)
                }
            };
            entries.push(VanishingEntry { generator: (h.get(j + 1), j + 1), point: w.clone(), value, degree });
        }
    }
    VanishingCertificate { h: h.clone(), entries }
}

/// Exponent vectors `m` with `0 ≤ m_i ≤ h(i) − i`, by degree then
/// lexicographically decreasing.
pub fn monomial_basis(h: &HessenbergFunction) -> Vec<Vec<u32>> {
    let bounds: Vec<u32> = (1..=h.n()).map(|i| (h.get(i) - i) as u32).collect();
    let top: u32 = bounds.iter().sum();
    (0..=top)
        .flat_map(|d| monomials(h.n(), d).into_iter().filter(|m| m.iter().zip(&bounds).all(|(a, b)| a <= b)).collect::<Vec<_>>())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisDegree {
    pub degree: u32,
    pub basis_count: usize,
    pub quotient_dimension: usize,
    pub independent: bool,
}

#[derive(Clone, Debug)]
pub struct MonomialBasisCertificate {
    pub size: usize,
    pub expected_size: usize,
    pub degrees: Vec<BasisDegree>,
}

impl MonomialBasisCertificate {
    pub fn passed(&self) -> bool {
        self.size == self.expected_size
            && self.degrees.iter().all(|d| d.independent && d.basis_count == d.quotient_dimension)
    }
}

/// Independence is read off a modular piece when its rank is pinned
/// (then `𝔽_p`-independence implies `ℚ`-independence), and otherwise
/// decided by exact elimination.
fn basis_certificate(
    h: &HessenbergFunction,
    ideal: &IdealPresentation,
    cert: &RegularityCertificate,
    pieces: &[Option<ModularPiece>],
) -> MonomialBasisCertificate {
    let basis = monomial_basis(h);
    let expected_size = (1..=h.n()).map(|j| h.get(j) - j + 1).product();
    let degrees = (0..=cert.computed.max_degree())
        .into_par_iter()
        .map(|d| {
            let exps: Vec<Vec<u32>> = basis.iter().filter(|m| m.iter().sum::<u32>() == d).cloned().collect();
            let independent = match &pieces[d as usize] {
                Some(p) if p.independent_modulo(&exps) => true,
                _ => GradedPiece::build(ideal, d).independent_modulo(&exps),
            };
            BasisDegree {
                degree: d,
                basis_count: exps.len(),
                quotient_dimension: cert.computed.dims[d as usize],
                independent,
            }
        })
        .collect();
    MonomialBasisCertificate { size: basis.len(), expected_size, degrees }
}

/// Checks that `{x^m : m_i ≤ h(i) − i}` is a basis of `ℚ[x]/Ǐ_h`, degree
/// by degree.
pub fn verify_monomial_basis(h: &HessenbergFunction) -> MonomialBasisCertificate {
    let ideal = ideal_for(h, false);
    let (cert, pieces) = regularity_with_pieces(&ideal, None).expect("n generators in n variables");
    basis_certificate(h, &ideal, &cert, &pieces)
}

/// Everything checked for one Hessenberg function.
#[derive(Clone, Debug)]
pub struct HessCertificate {
    pub h: HessenbergFunction,
    pub vanishing: VanishingCertificate,
    pub expected: HilbertSeriesPoly,
    /// Hilbert function of `ℚ[x]/Ǐ_h` through one degree past the top.
    pub hilbert: HilbertFunctionTable,
    /// Matches the expected series and reaches zero, so `(f̌_{h(j),j})` is
    /// a regular sequence.
    pub regular: bool,
    pub basis: MonomialBasisCertificate,
    /// Truncated comparison of `ℚ[x,t]/I_h` with the expected series over
    /// `(1 − q²)`, when requested.
    pub equivariant: Option<RegularityCertificate>,
}

impl HessCertificate {
    pub fn passed(&self) -> bool {
        self.vanishing.passed()
            && self.regular
            && self.basis.passed()
            && self.equivariant.as_ref().is_none_or(|c| c.regular)
    }
}

pub fn verify(h: &HessenbergFunction, equivariant: bool) -> HessCertificate {
    let vanishing = verify_vanishing(h);
    let ordinary = ideal_for(h, false);
    let (cert, pieces) = regularity_with_pieces(&ordinary, None).expect("n generators in n variables");
    let basis = basis_certificate(h, &ordinary, &cert, &pieces);
    let equivariant =
        equivariant.then(|| is_regular_sequence(&ideal_for(h, true), None).expect("n generators in n+1 variables"));
    HessCertificate {
        h: h.clone(),
        vanishing,
        expected: cert.expected,
        hilbert: cert.computed,
        regular: cert.regular,
        basis,
        equivariant,
    }
}

/// Size of a `verify_all` run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyBudget {
    pub n: usize,
    pub functions: usize,
    pub fixed_points: usize,
    /// Columns of the largest Macaulay matrix (flag case, one degree past
    /// the top).
    pub max_columns: usize,
}

pub fn verify_budget(n: usize) -> VerifyBudget {
    let all = HessenbergFunction::all(n);
    let fixed_points = all.iter().map(|h| (1..=n).map(|j| h.get(j) - j + 1).product::<usize>()).sum();
    let top = (n * n.saturating_sub(1) / 2) as u32;
    VerifyBudget { n, functions: all.len(), fixed_points, max_columns: monomial_count(n, top + 1) }
}

/// Runs `verify` on every Hessenberg function of size `n`.
pub fn verify_all(n: usize, equivariant: bool) -> Vec<HessCertificate> {
    HessenbergFunction::all(n).par_iter().map(|h| verify(h, equivariant)).collect()
}

/// Type-A Peterson presentation checks.
#[derive(Clone, Debug)]
pub struct PetersonPresentationReport {
    pub n: usize,
    /// Quadratics through `z_k = g_k`, plus `g_n`, against `I_h`.
    pub quadratics_vs_f: IdealComparison,
    /// `g_k(x_k − x_{k+1} − t)`, plus `g_n`, against `I_h`.
    pub simplified_vs_f: IdealComparison,
    /// Same as `quadratics_vs_f` at `t = 0`.
    pub ordinary_vs_f: IdealComparison,
    pub z_ordinary: RegularityCertificate,
    pub z_equivariant: RegularityCertificate,
    /// The quadratics vanish under `z_k ↦ p_{s_k}` at every `w_A`.
    pub localization_vanishes: bool,
}

impl PetersonPresentationReport {
    pub fn passed(&self) -> bool {
        self.quadratics_vs_f.equal()
            && self.simplified_vs_f.equal()
            && self.ordinary_vs_f.equal()
            && self.z_ordinary.regular
            && self.z_equivariant.regular
            && self.localization_vanishes
    }
}

/// Values of a homogeneous polynomial at each fixed point, where the
/// first `values[k].len()` variables take the given coefficients and the
/// last variable is `t = 1`.
fn vanishes_everywhere(rel: &Polynomial, values: &[Vec<Rational>]) -> bool {
    values.iter().all(|v| {
        let point: Vec<Rational> = v.iter().cloned().chain([Rational::one()]).collect();
        rel.evaluate(&point).is_zero()
    })
}

pub fn peterson_presentation_check(n: usize) -> Result<PetersonPresentationReport, PresentationError> {
    if n < 2 {
        return Err(PresentationError::OutOfRange(format!("n must be at least 2, got {n}")));
    }
    let h = HessenbergFunction::peterson(n);
    let f_eq = ideal_for(&h, true);
    let f_ord = ideal_for(&h, false);
    let quadratics_vs_f = compare_ideals(&peterson_quadratics_in_x(n, true), &f_eq)?;
    let simplified_vs_f = compare_ideals(&peterson_x_ideal(n, true), &f_eq)?;
    let ordinary_vs_f = compare_ideals(&peterson_quadratics_in_x(n, false), &f_ord)?;
    let z_ordinary = is_regular_sequence(&peterson_z_ideal(n, false), None)?;
    let z_equivariant = is_regular_sequence(&peterson_z_ideal(n, true), None)?;
    let pa = PetersonA::new(n)?;
    let classes: Vec<_> = (1..n).map(|i| pa.simple_class(i)).collect::<Result<_, _>>()?;
    let values: Vec<Vec<Rational>> =
        (0..pa.points().len()).map(|k| classes.iter().map(|c| c.values()[k].clone()).collect()).collect();
    let z = peterson_z_ideal(n, true);
    let localization_vanishes = z.generators().iter().all(|rel| vanishes_everywhere(rel, &values));
    Ok(PetersonPresentationReport {
        n,
        quadratics_vs_f,
        simplified_vs_f,
        ordinary_vs_f,
        z_ordinary,
        z_equivariant,
        localization_vanishes,
    })
}

/// General-type Peterson presentation checks.
#[derive(Clone, Debug)]
pub struct GeneralPresentationReport {
    pub name: String,
    /// `Σ_j a_ij ϖ_i ϖ_j − 2t ϖ_i` in `ℚ[ϖ_1..ϖ_r, t]`.
    pub relations: IdealPresentation,
    pub points: usize,
    /// Per relation: vanishes under `ϖ_j ↦ p_{s_j}` at every `w_K`.
    pub vanishing: Vec<bool>,
    /// `ℚ[ϖ]/(Σ_j a_ij ϖ_i ϖ_j)` against `(1 + q²)^r`.
    pub ordinary: RegularityCertificate,
    pub equivariant: RegularityCertificate,
}

impl GeneralPresentationReport {
    pub fn passed(&self) -> bool {
        self.vanishing.iter().all(|&b| b) && self.ordinary.regular && self.equivariant.regular
    }
}

/// Variables `w1..wr` for the fundamental weights, optionally with `t`.
pub fn weight_context(rank: usize, with_t: bool) -> Ctx {
    VariableContext::indexed("w", rank, with_t)
}

/// `Σ_j a_ij ϖ_i ϖ_j − 2t ϖ_i` for each `i`.
pub fn general_relations(datum: &CartanDatum, with_t: bool) -> IdealPresentation {
    let r = datum.rank();
    let ctx = weight_context(r, with_t);
    let w = |k: usize| Polynomial::var(&ctx, k - 1);
    let gens = (1..=r)
        .map(|i| {
            let mut p = Polynomial::zero(&ctx);
            for j in 1..=r {
                p = &p + &(&w(i) * &w(j)).scale(&Rational::from_integer(datum.a(i, j).into()));
            }
            if with_t {
                p = &p - &(&w(i) * &Polynomial::var(&ctx, r)).scale(&Rational::from_integer(2.into()));
            }
            p
        })
        .collect();
    IdealPresentation::new(ctx, gens, Provenance::PetersonQuadratics).expect("homogeneous")
}

pub fn peterson_presentation_general(datum: &Arc<CartanDatum>) -> Result<GeneralPresentationReport, PresentationError> {
    let sys = PetersonSystem::new(datum.clone())?;
    let r = datum.rank();
    let classes: Vec<_> = (1..=r).map(|i| sys.simple_class(i)).collect::<Result<_, _>>()?;
    let values: Vec<Vec<Rational>> =
        (0..sys.points().len()).map(|k| classes.iter().map(|c| c.values()[k].clone()).collect()).collect();
    let relations = general_relations(datum, true);
    let vanishing = relations.generators().iter().map(|rel| vanishes_everywhere(rel, &values)).collect();
    let ordinary = is_regular_sequence(&general_relations(datum, false), None)?;
    let equivariant = is_regular_sequence(&relations, None)?;
    Ok(GeneralPresentationReport {
        name: datum.name(),
        relations,
        points: sys.points().len(),
        vanishing,
        ordinary,
        equivariant,
    })
}

/// `x_0 = 1`, `x_m = 1 − c / x_{m−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub c: Rational,
    pub values: Vec<Rational>,
}

impl ContinuedFraction {
    pub fn all_positive(&self) -> bool {
        self.values.iter().all(Signed::is_positive)
    }
}

pub fn continued_fraction_check(c: &Rational, m_max: usize) -> Result<ContinuedFraction, PresentationError> {
    let mut values = vec![Rational::one()];
    for m in 1..=m_max {
        let prev = &values[m - 1];
        if prev.is_zero() {
            return Err(PresentationError::DivisionByZero { m });
        }
        let next = Rational::one() - c / prev;
        values.push(next);
    }
    Ok(ContinuedFraction { c: c.clone(), values })
}
