//! Macaulay matrices reduced modulo a prime. Ranks over `𝔽_p` never
//! exceed ranks over `ℚ`, so a full rank here is a full rank over `ℚ`,
//! and a rank that reaches a known upper bound equals the rank over `ℚ`.

use std::collections::HashMap;

use num::{BigInt, Integer, ToPrimitive};
use polyring::{Polynomial, Rational};

use crate::graded::{monomials, pack};
use crate::ideal::IdealPresentation;

pub(crate) const PRIME: u64 = 2_147_483_647;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow_mod(a, PRIME - 2)
}

fn reduce_int(n: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    n.mod_floor(&p).to_u64().expect("reduced below the prime")
}

/// `None` when the denominator vanishes mod the prime.
fn reduce(c: &Rational) -> Option<u64> {
    let d = reduce_int(c.denom());
    (d != 0).then(|| reduce_int(c.numer()) * inv(d) % PRIME)
}

type ModRow = Vec<(u32, u64)>;

/// Semi-echelon form with monic pivot rows.
#[derive(Clone, Debug)]
pub(crate) struct ModEchelon {
    pivots: Vec<Option<ModRow>>,
    rank: usize,
    scratch: Vec<u64>,
}

impl ModEchelon {
    fn new(columns: usize) -> Self {
        ModEchelon { pivots: vec![None; columns], rank: 0, scratch: vec![0; columns] }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    /// Adds a sparse row; returns whether the rank grew.
    pub(crate) fn insert(&mut self, row: &[(u32, u64)]) -> bool {
        let Some(start) = row.iter().map(|(k, _)| *k as usize).min() else { return false };
        let acc = &mut self.scratch;
        for &(k, v) in row {
            acc[k as usize] = (acc[k as usize] + v) % PRIME;
        }
        let cols = acc.len();
        let mut lead = None;
        for c in start..cols {
            let f = acc[c];
            if f == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(p) => {
                    let neg = PRIME - f;
                    for &(k, v) in p {
                        let k = k as usize;
                        acc[k] = (acc[k] + neg * v) % PRIME;
                    }
                }
                None => {
                    lead = Some(c);
                    break;
                }
            }
        }
        let Some(lead) = lead else { return false };
        let s = inv(acc[lead]);
        let mut out = Vec::new();
        for (c, slot) in acc.iter_mut().enumerate().skip(lead) {
            if *slot != 0 {
                out.push((c as u32, *slot * s % PRIME));
                *slot = 0;
            }
        }
        self.pivots[lead] = Some(out);
        self.rank += 1;
        true
    }
}

/// The degree-`d` piece of an ideal modulo the prime.
#[derive(Clone, Debug)]
pub(crate) struct ModularPiece {
    columns: HashMap<u128, usize>,
    echelon: ModEchelon,
}

impl ModularPiece {
    /// Stops once the rank reaches `target` (or the column count). `None`
    /// when a generator has a denominator divisible by the prime.
    pub(crate) fn build(ideal: &IdealPresentation, d: u32, target: Option<usize>) -> Option<Self> {
        let m = ideal.context().len();
        assert!(m <= 16 && d < 256, "monomial keys hold at most 16 variables of degree < 256");
        let columns: HashMap<u128, usize> =
            monomials(m, d).iter().enumerate().map(|(i, e)| (pack(e), i)).collect();
        let limit = target.unwrap_or(columns.len()).min(columns.len());
        let mut echelon = ModEchelon::new(columns.len());
        for (g, &e) in ideal.generators().iter().zip(ideal.degrees()) {
            if e > d {
                continue;
            }
            let terms = mod_terms(g)?;
            for mu in monomials(m, d - e) {
                if echelon.rank >= limit {
                    break;
                }
                let shift = pack(&mu);
                let row: ModRow = terms.iter().map(|(k, c)| (columns[&(k + shift)] as u32, *c)).collect();
                echelon.insert(&row);
            }
        }
        Some(ModularPiece { columns, echelon })
    }

    pub(crate) fn monomial_count(&self) -> usize {
        self.columns.len()
    }

    pub(crate) fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub(crate) fn quotient_dimension(&self) -> usize {
        self.monomial_count() - self.rank()
    }

    /// Whether the monomials stay independent modulo this piece over `𝔽_p`.
    pub(crate) fn independent_modulo(&self, exps: &[Vec<u32>]) -> bool {
        let mut e = self.echelon.clone();
        exps.iter().all(|x| e.insert(&[(self.columns[&pack(x)] as u32, 1)]))
    }
}

fn mod_terms(g: &Polynomial) -> Option<Vec<(u128, u64)>> {
    g.terms().map(|(e, c)| reduce(c).map(|v| (pack(e), v))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for a in [1u64, 2, 3, 12345, PRIME - 1] {
            assert_eq!(a * inv(a) % PRIME, 1);
        }
        assert_eq!(reduce(&Rational::new((-1).into(), 2.into())), Some(PRIME / 2));
    }

    #[test]
    fn rank_of_small_rows() {
        let mut e = ModEchelon::new(3);
        assert!(e.insert(&[(0, 2), (1, 4)]));
        assert!(e.insert(&[(1, 1), (2, 1)]));
        assert!(!e.insert(&[(0, 1), (1, 3), (2, 1)]));
        assert_eq!(e.rank(), 2);
    }
}
