use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, ToPrimitive, Zero};
use polyring::{Ctx, HilbertSeriesPoly, Polynomial, Rational};
use rayon::prelude::*;

use crate::ideal::IdealPresentation;
use crate::modular::ModularPiece;
use crate::PresentationError;

/// Exponent vectors of total degree `d` in `m` variables, in
/// lexicographically decreasing order.
pub fn monomials(m: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == m {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(m, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, d, &mut Vec::with_capacity(m), &mut out);
    out
}

/// `C(d + m − 1, m − 1)`, the number of monomials of degree `d`.
pub fn monomial_count(m: usize, d: u32) -> usize {
    if m == 0 {
        return usize::from(d == 0);
    }
    let mut c: u128 = 1;
    for k in 1..m as u128 {
        c = c * (d as u128 + k) / k;
    }
    c as usize
}

type Row = Vec<(usize, Rational)>;

/// Row echelon form over `ℚ` built one sparse row at a time. Each stored
/// row has a leading coefficient 1 in its pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` by the stored pivots until its leading column is new.
    fn reduce(&self, mut row: Row) -> Row {
        loop {
            let Some((lead, c)) = row.first().cloned() else { return row };
            let Some(p) = self.pivots.get(&lead) else { return row };
            row = axpy(&row, &-c, p);
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: Row) -> bool {
        let row = self.reduce(row);
        let Some((lead, c)) = row.first().cloned() else { return false };
        let inv = Rational::one() / c;
        let normalized = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        self.pivots.insert(lead, normalized);
        true
    }

    /// Whether `row` lies in the span.
    pub fn contains(&self, row: Row) -> bool {
        self.reduce(row).is_empty()
    }
}

/// `a + s·b` for sorted sparse rows.
fn axpy(a: &Row, s: &Rational, b: &Row) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + s * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Packs an exponent vector into one key, eight bits per variable.
/// Sums of packed keys are packed sums while every exponent stays below 256.
pub(crate) fn pack(e: &[u32]) -> u128 {
    e.iter().fold(0u128, |acc, &k| (acc << 8) | k as u128)
}

type SmallRow = Vec<(usize, i128)>;

#[derive(Debug)]
struct Overflow;

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i128
}

/// Divides out the content and makes the leading entry positive.
fn primitive(mut row: SmallRow) -> SmallRow {
    let g = row.iter().fold(0, |g, (_, v)| gcd(g, *v));
    let sign = if row.first().is_some_and(|(_, v)| *v < 0) { -1 } else { 1 };
    if g > 1 || sign < 0 {
        for (_, v) in row.iter_mut() {
            *v = *v / g * sign;
        }
    }
    row
}

/// `a·x − b·y` for sorted sparse integer rows.
fn combine(a: i128, x: &SmallRow, b: i128, y: &SmallRow) -> Result<SmallRow, Overflow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a.checked_mul(x[i].1).ok_or(Overflow)?));
            i += 1;
        } else if take_y {
            out.push((y[j].0, b.checked_mul(y[j].1).and_then(i128::checked_neg).ok_or(Overflow)?));
            j += 1;
        } else {
            let u = a.checked_mul(x[i].1).ok_or(Overflow)?;
            let v = b.checked_mul(y[j].1).ok_or(Overflow)?;
            let w = u.checked_sub(v).ok_or(Overflow)?;
            if w != 0 {
                out.push((x[i].0, w));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Fraction-free echelon form over `ℤ` with primitive rows; overflow is
/// reported so the caller can redo the work over `ℚ`.
#[derive(Clone, Debug)]
struct SmallEchelon {
    pivots: Vec<Option<SmallRow>>,
    rank: usize,
}

impl SmallEchelon {
    fn new(columns: usize) -> Self {
        SmallEchelon { pivots: vec![None; columns], rank: 0 }
    }

    fn reduce(&self, mut row: SmallRow) -> Result<SmallRow, Overflow> {
        loop {
            let Some(&(lead, a)) = row.first() else { return Ok(row) };
            let Some(p) = &self.pivots[lead] else { return Ok(row) };
            let b = p[0].1;
            let g = gcd(a, b);
            row = primitive(combine(b / g, &row, a / g, p)?);
        }
    }

    fn insert(&mut self, row: SmallRow) -> Result<bool, Overflow> {
        let row = self.reduce(row)?;
        let Some(&(lead, _)) = row.first() else { return Ok(false) };
        self.pivots[lead] = Some(primitive(row));
        self.rank += 1;
        Ok(true)
    }
}

#[derive(Clone, Debug)]
enum Backend {
    Small(SmallEchelon),
    Big(Echelon),
}

/// The degree-`d` piece of a homogeneous ideal: the row space of its
/// Macaulay matrix. Elimination runs over machine integers and falls
/// back to exact rationals on overflow.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: u32,
    columns: HashMap<u128, usize>,
    backend: Backend,
}

/// Generator terms as packed exponents with coefficients over a common
/// denominator.
fn scaled_terms(g: &Polynomial) -> Vec<(u128, Rational)> {
    let lcm = g.terms().fold(num::BigInt::one(), |l, (_, c)| num::integer::lcm(l, c.denom().clone()));
    let scale = Rational::from_integer(lcm);
    g.terms().map(|(e, c)| (pack(e), c * &scale)).collect()
}

fn small_terms(terms: &[(u128, Rational)]) -> Option<Vec<(u128, i128)>> {
    terms.iter().map(|(k, c)| c.to_integer().to_i128().map(|v| (*k, v))).collect()
}

impl GradedPiece {
    /// Rows are `g·μ` for every generator `g` of degree `e ≤ d` and every
    /// monomial `μ` of degree `d − e`.
    pub fn build(ideal: &IdealPresentation, d: u32) -> Self {
        let m = ideal.context().len();
        assert!(m <= 16 && d < 256, "monomial keys hold at most 16 variables of degree < 256");
        let columns: HashMap<u128, usize> =
            monomials(m, d).iter().enumerate().map(|(i, e)| (pack(e), i)).collect();
        let gens: Vec<(Vec<(u128, Rational)>, u32)> = ideal
            .generators()
            .iter()
            .zip(ideal.degrees())
            .filter(|(_, e)| **e <= d)
            .map(|(g, e)| (scaled_terms(g), *e))
            .collect();
        let shifts: Vec<Vec<u128>> = (0..=d).map(|k| monomials(m, k).iter().map(|e| pack(e)).collect()).collect();
        let backend = match Self::build_small(&columns, &gens, &shifts) {
            Ok(e) => Backend::Small(e),
            Err(Overflow) => Backend::Big(Self::build_big(&columns, &gens, &shifts)),
        };
        GradedPiece { degree: d, columns, backend }
    }

    fn build_small(
        columns: &HashMap<u128, usize>,
        gens: &[(Vec<(u128, Rational)>, u32)],
        shifts: &[Vec<u128>],
    ) -> Result<SmallEchelon, Overflow> {
        let d = shifts.len() as u32 - 1;
        let mut ech = SmallEchelon::new(columns.len());
        for (terms, e) in gens {
            let terms = small_terms(terms).ok_or(Overflow)?;
            for mu in &shifts[(d - e) as usize] {
                if ech.rank == columns.len() {
                    return Ok(ech);
                }
                let mut row: SmallRow = terms.iter().map(|(k, c)| (columns[&(k + mu)], *c)).collect();
                row.sort_unstable_by_key(|(k, _)| *k);
                ech.insert(primitive(row))?;
            }
        }
        Ok(ech)
    }

    fn build_big(
        columns: &HashMap<u128, usize>,
        gens: &[(Vec<(u128, Rational)>, u32)],
        shifts: &[Vec<u128>],
    ) -> Echelon {
        let d = shifts.len() as u32 - 1;
        let mut ech = Echelon::new();
        for (terms, e) in gens {
            for mu in &shifts[(d - e) as usize] {
                if ech.rank() == columns.len() {
                    return ech;
                }
                let mut row: Row = terms.iter().map(|(k, c)| (columns[&(k + mu)], c.clone())).collect();
                row.sort_unstable_by_key(|(k, _)| *k);
                ech.insert(row);
            }
        }
        ech
    }

    pub fn monomial_count(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        match &self.backend {
            Backend::Small(e) => e.rank,
            Backend::Big(e) => e.rank(),
        }
    }

    /// Dimension of the quotient in this degree.
    pub fn quotient_dimension(&self) -> usize {
        self.monomial_count() - self.rank()
    }

    fn row_of(&self, p: &Polynomial) -> Result<Row, PresentationError> {
        let mut row = Vec::new();
        for (e, c) in p.terms() {
            let deg: u32 = e.iter().sum();
            if deg != self.degree {
                return Err(PresentationError::NotHomogeneous(p.to_string()));
            }
            row.push((self.columns[&pack(e)], c.clone()));
        }
        row.sort_by_key(|(k, _)| *k);
        Ok(row)
    }

    /// The rational echelon form, converting from the integer one if needed.
    fn rational(&self) -> Echelon {
        match &self.backend {
            Backend::Big(e) => e.clone(),
            Backend::Small(s) => {
                let mut e = Echelon::new();
                for row in s.pivots.iter().flatten() {
                    e.insert(row.iter().map(|(k, v)| (*k, Rational::from_integer((*v).into()))).collect());
                }
                e
            }
        }
    }

    /// Membership of a polynomial homogeneous of this degree.
    pub fn contains(&self, p: &Polynomial) -> Result<bool, PresentationError> {
        let row = self.row_of(p)?;
        if let Backend::Small(s) = &self.backend {
            let lcm = row.iter().fold(num::BigInt::one(), |l, (_, c)| num::integer::lcm(l, c.denom().clone()));
            let small: Option<SmallRow> = row
                .iter()
                .map(|(k, c)| (c * Rational::from_integer(lcm.clone())).to_integer().to_i128().map(|v| (*k, v)))
                .collect();
            if let Some(r) = small {
                if let Ok(reduced) = s.reduce(primitive(r)) {
                    return Ok(reduced.is_empty());
                }
            }
        }
        Ok(self.rational().contains(row))
    }

    /// Whether the given monomials are linearly independent modulo the
    /// ideal in this degree.
    pub fn independent_modulo(&self, exps: &[Vec<u32>]) -> bool {
        if let Backend::Small(s) = &self.backend {
            let mut e = s.clone();
            let r: Result<bool, Overflow> = exps
                .iter()
                .try_fold(true, |ok, x| Ok(ok && e.insert(vec![(self.columns[&pack(x)], 1)])?));
            if let Ok(b) = r {
                return b;
            }
        }
        let mut e = self.rational();
        exps.iter().all(|x| e.insert(vec![(self.columns[&pack(x)], Rational::one())]))
    }
}

/// Dimensions of the graded pieces of `ring / ideal` for polynomial
/// degrees `0..=max_degree` (cohomological degrees `0, 2, …`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunctionTable {
    pub dims: Vec<usize>,
}

impl HilbertFunctionTable {
    pub fn max_degree(&self) -> u32 {
        self.dims.len() as u32 - 1
    }

    /// Dimension in cohomological degree `deg`; odd degrees are 0.
    pub fn at_cohomological(&self, deg: u32) -> Option<usize> {
        if deg % 2 == 1 {
            return Some(0);
        }
        self.dims.get(deg as usize / 2).copied()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// First polynomial degree with a zero piece.
    pub fn first_zero(&self) -> Option<u32> {
        self.dims.iter().position(|&d| d == 0).map(|k| k as u32)
    }

    /// Compares against the expansion of a series, coefficient by
    /// coefficient, over the computed range.
    pub fn matches(&self, series: &HilbertSeriesPoly) -> bool {
        let expected = series.expand(self.dims.len());
        self.dims.iter().zip(&expected).all(|(&a, &b)| a as i64 == b)
    }
}

impl fmt::Display for HilbertFunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.dims.iter().enumerate().map(|(k, d)| format!("deg {}: {d}", 2 * k)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Hilbert function of `ring / ideal` in polynomial degrees
/// `0..=max_degree`. Degrees are computed independently and in parallel.
pub fn hilbert_function(ideal: &IdealPresentation, max_degree: u32) -> HilbertFunctionTable {
    table_of(&graded_pieces(ideal, max_degree))
}

/// The graded pieces in degrees `0..=max_degree`, built in parallel.
pub fn graded_pieces(ideal: &IdealPresentation, max_degree: u32) -> Vec<GradedPiece> {
    (0..=max_degree).into_par_iter().map(|d| GradedPiece::build(ideal, d)).collect()
}

pub fn table_of(pieces: &[GradedPiece]) -> HilbertFunctionTable {
    HilbertFunctionTable { dims: pieces.iter().map(GradedPiece::quotient_dimension).collect() }
}

/// Outcome of the Hilbert-series test for a regular sequence.
#[derive(Clone, Debug)]
pub struct RegularityCertificate {
    /// `∏ (1 − q^{2 deg θ_j}) / (1 − q²)^m`, in reduced form.
    pub expected: HilbertSeriesPoly,
    pub computed: HilbertFunctionTable,
    /// Whether a zero graded piece was found, which certifies that the
    /// quotient is finite dimensional.
    pub finite_dimensional: bool,
    pub regular: bool,
    /// Variables adjoined as linear generators when finite dimensionality
    /// was certified modulo a prime; `None` when exact elimination decided.
    pub adjoined: Option<Vec<usize>>,
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            cur.push(v);
            rec(v + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Combinations of adjoined variables tried before falling back to exact
/// elimination.
const ADJOIN_ATTEMPTS: usize = 8;

/// Looks for variables `y` such that `ideal + (y)` has a zero piece in
/// degree `top + 1` modulo the prime. Then the generators together with
/// `y` are a regular sequence, hence so are the generators alone.
fn artinian_witness(ideal: &IdealPresentation, top: u32) -> Option<Vec<usize>> {
    let m = ideal.context().len();
    let extra = m - ideal.generators().len();
    // prefer the last variables, where `t` lives
    let mut choices = combinations(m, extra);
    choices.reverse();
    choices.into_iter().take(ADJOIN_ATTEMPTS).find(|vars| {
        let mut gens = ideal.generators().to_vec();
        gens.extend(vars.iter().map(|&v| Polynomial::var(ideal.context(), v)));
        let closed = IdealPresentation::new(ideal.context().clone(), gens, ideal.provenance()).expect("homogeneous");
        ModularPiece::build(&closed, top + 1, None).is_some_and(|p| p.quotient_dimension() == 0)
    })
}

/// Quotient dimensions `0..=bound` of an ideal already known to be
/// generated by a regular sequence, so that `expected` is exact. Ranks
/// mod the prime are lower bounds, so reaching `columns − expected` pins
/// the rank; degrees that fall short are redone exactly.
pub(crate) fn regular_dimensions(
    ideal: &IdealPresentation,
    expected: &HilbertSeriesPoly,
    bound: u32,
) -> Vec<Option<ModularPiece>> {
    let coeffs = expected.expand(bound as usize + 1);
    let m = ideal.context().len();
    (0..=bound)
        .into_par_iter()
        .map(|d| {
            let target = monomial_count(m, d) as i64 - coeffs[d as usize];
            let piece = ModularPiece::build(ideal, d, Some(target.max(0) as usize))?;
            (piece.rank() as i64 == target).then_some(piece)
        })
        .collect()
}

/// Tests whether the generators form a regular sequence by comparing
/// the quotient's Hilbert function with `∏ (1 − q^{2d_j}) / (1 − q²)^m`.
/// With as many generators as variables the comparison runs one degree
/// past the top of the expected polynomial, where a zero piece certifies
/// finite dimensionality; otherwise it runs to `max_degree` (default:
/// two past the numerator's top degree) and certifies that truncation.
///
/// Finite dimensionality of the ideal plus `m − r` adjoined variables is
/// checked first modulo a prime; when it holds the sequence is regular
/// and the dimensions are read off modular ranks. Otherwise every degree
/// is eliminated exactly over `ℚ`.
pub fn is_regular_sequence(
    ideal: &IdealPresentation,
    max_degree: Option<u32>,
) -> Result<RegularityCertificate, PresentationError> {
    regularity_with_pieces(ideal, max_degree).map(|(c, _)| c)
}

/// Also returns the modular pieces whose ranks were pinned, by degree.
pub(crate) fn regularity_with_pieces(
    ideal: &IdealPresentation,
    max_degree: Option<u32>,
) -> Result<(RegularityCertificate, Vec<Option<ModularPiece>>), PresentationError> {
    let m = ideal.context().len();
    let r = ideal.generators().len();
    if r > m {
        return Err(PresentationError::TooManyGenerators { generators: r, variables: m });
    }
    let factors: Vec<HilbertSeriesPoly> =
        ideal.degrees().iter().map(|&d| HilbertSeriesPoly::q_integer(d as usize - 1)).collect();
    let numer = HilbertSeriesPoly::product(&factors);
    let expected = HilbertSeriesPoly::new(numer.numerator().to_vec(), (m - r) as u32);
    let top = (numer.numerator().len() - 1) as u32;
    let needed = if r == m { top + 1 } else { top + 2 };
    let bound = match max_degree {
        Some(b) if r == m && b < needed => {
            return Err(PresentationError::BoundTooSmall { bound: b, needed });
        }
        Some(b) => b,
        None => needed,
    };
    let adjoined = artinian_witness(ideal, top);
    let (computed, pieces) = match &adjoined {
        Some(_) => {
            let pieces = regular_dimensions(ideal, &expected, bound);
            let dims = pieces
                .iter()
                .enumerate()
                .map(|(d, p)| match p {
                    Some(p) => p.quotient_dimension(),
                    None => GradedPiece::build(ideal, d as u32).quotient_dimension(),
                })
                .collect();
            (HilbertFunctionTable { dims }, pieces)
        }
        None => (hilbert_function(ideal, bound), (0..=bound).map(|_| None).collect()),
    };
    let finite_dimensional = computed.first_zero().is_some();
    let mut regular = computed.matches(&expected);
    if r == m {
        regular &= finite_dimensional;
    }
    Ok((RegularityCertificate { expected, computed, finite_dimensional, regular, adjoined }, pieces))
}

/// Membership of an arbitrary polynomial, tested on each homogeneous
/// component (the ideal is homogeneous).
pub fn ideal_contains(ideal: &IdealPresentation, p: &Polynomial) -> Result<bool, PresentationError> {
    check_ctx(ideal.context(), p)?;
    let mut parts: BTreeMap<u32, Vec<(Rational, Vec<u32>)>> = BTreeMap::new();
    for (e, c) in p.terms() {
        parts.entry(e.iter().sum()).or_default().push((c.clone(), e.clone()));
    }
    for (d, terms) in parts {
        let piece = GradedPiece::build(ideal, d);
        if !piece.contains(&Polynomial::from_terms(ideal.context(), terms))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_ctx(ctx: &Ctx, p: &Polynomial) -> Result<(), PresentationError> {
    if p.context().names() != ctx.names() {
        return Err(PresentationError::Context(format!(
            "[{}] vs [{}]",
            p.context().names().join(","),
            ctx.names().join(",")
        )));
    }
    Ok(())
}

/// Two-sided generator membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealComparison {
    pub left_in_right: bool,
    pub right_in_left: bool,
    /// Largest generator degree checked.
    pub max_degree: u32,
}

impl IdealComparison {
    pub fn equal(&self) -> bool {
        self.left_in_right && self.right_in_left
    }
}

fn all_members(gens: &IdealPresentation, target: &IdealPresentation) -> Result<bool, PresentationError> {
    let mut by_degree: BTreeMap<u32, Vec<&Polynomial>> = BTreeMap::new();
    for (g, d) in gens.generators().iter().zip(gens.degrees()) {
        by_degree.entry(*d).or_default().push(g);
    }
    let results: Vec<Result<bool, PresentationError>> = by_degree
        .into_par_iter()
        .map(|(d, polys)| {
            let piece = GradedPiece::build(target, d);
            for p in polys {
                if !piece.contains(p)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect();
    for r in results {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn compare_ideals(a: &IdealPresentation, b: &IdealPresentation) -> Result<IdealComparison, PresentationError> {
    if a.context().names() != b.context().names() {
        return Err(PresentationError::Context(format!(
            "[{}] vs [{}]",
            a.context().names().join(","),
            b.context().names().join(",")
        )));
    }
    let max_degree = a.degrees().iter().chain(b.degrees()).copied().max().unwrap_or(0);
    Ok(IdealComparison {
        left_in_right: all_members(a, b)?,
        right_in_left: all_members(b, a)?,
        max_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        for m in 0..5 {
            for d in 0..6 {
                assert_eq!(monomials(m, d).len(), monomial_count(m, d), "m={m} d={d}");
            }
        }
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn echelon_rank_and_membership() {
        let r = |v: &[(usize, i64)]| -> Row { v.iter().map(|&(k, c)| (k, Rational::from_integer(c.into()))).collect() };
        let mut e = Echelon::new();
        assert!(e.insert(r(&[(0, 2), (1, 4)])));
        assert!(e.insert(r(&[(1, 1), (2, 1)])));
        assert!(!e.insert(r(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(r(&[(0, 1), (1, 1), (2, -1)])));
        assert!(!e.contains(r(&[(2, 1)])));
    }
}
