//! Turns parsed arguments into a fully validated request.

use std::sync::Arc;

use billey::permutation_to_weyl;
use hessenberg::{HessenbergFunction, SubsetA};
use permgroup::Permutation;
use polyring::{parse_rational, Rational};
use rootsys::{parse_cartan, CartanDatum, CartanType, WeylElement, DEFAULT_ENUMERATION_BUDGET};

use crate::args::{Command, PetersonCommand};

/// An input that violates a named constraint.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid input [{constraint}]: {message}")]
pub struct InputError {
    pub constraint: &'static str,
    pub message: String,
}

fn invalid(constraint: &'static str, message: impl Into<String>) -> InputError {
    InputError { constraint, message: message.into() }
}

/// Largest `n` accepted without `--allow-large`.
pub const LARGE_N: usize = 7;
const MAX_FIXED_POINT_N: usize = 8;
const MAX_PETERSON_N: usize = 7;
const MAX_FIJ_N: usize = 12;
const MAX_CFRAC_M: usize = 100_000;

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Request {
    FixedPoints(HessenbergFunction),
    PetersonPoints(usize),
    Billey { datum: Arc<CartanDatum>, v: WeylElement, w: WeylElement, word: Vec<usize>, pi: bool },
    PetersonClass { n: usize, a: SubsetA },
    PetersonMonk { n: usize, i: usize, a: SubsetA },
    PetersonGiambelli { n: usize, a: SubsetA },
    PetersonGeneral { datum: Arc<CartanDatum>, k: Vec<usize>, i: Option<usize>, budget: Option<usize> },
    Fij { n: usize, entry: Option<(usize, usize)>, with_t: bool },
    Ideal { h: HessenbergFunction, with_t: bool },
    Hilbert { h: HessenbergFunction, with_t: bool, max_degree: Option<u32> },
    Verify { h: HessenbergFunction, equivariant: bool },
    VerifyAll { n: usize, equivariant: bool },
    PetersonPresentation(usize),
    GeneralPresentation(Arc<CartanDatum>),
    Cfrac { c: Rational, m: usize },
}

impl Request {
    pub fn name(&self) -> &'static str {
        match self {
            Request::FixedPoints(_) | Request::PetersonPoints(_) => "fixed-points",
            Request::Billey { .. } => "billey",
            Request::PetersonClass { .. } => "peterson class",
            Request::PetersonMonk { .. } => "peterson monk",
            Request::PetersonGiambelli { .. } => "peterson giambelli",
            Request::PetersonGeneral { .. } => "peterson general",
            Request::Fij { .. } => "fij",
            Request::Ideal { .. } => "ideal",
            Request::Hilbert { .. } => "hilbert",
            Request::Verify { .. } => "verify",
            Request::VerifyAll { .. } => "verify-all",
            Request::PetersonPresentation(_) | Request::GeneralPresentation(_) => "peterson-presentation",
            Request::Cfrac { .. } => "cfrac",
        }
    }
}

fn hessenberg(s: &str) -> Result<HessenbergFunction, InputError> {
    s.parse().map_err(|e| invalid("hessenberg-function", format!("{e}")))
}

fn sized_hessenberg(s: &str, max: usize, allow_large: bool) -> Result<HessenbergFunction, InputError> {
    let h = hessenberg(s)?;
    check_large(h.n(), allow_large)?;
    if h.n() > max {
        return Err(invalid("size", format!("n={} exceeds the supported maximum {max}", h.n())));
    }
    Ok(h)
}

fn check_large(n: usize, allow_large: bool) -> Result<(), InputError> {
    if n >= LARGE_N && !allow_large {
        return Err(invalid("large-n", format!("n={n} >= {LARGE_N} needs --allow-large")));
    }
    Ok(())
}

fn size(n: usize, min: usize, max: usize) -> Result<usize, InputError> {
    if n < min || n > max {
        return Err(invalid("size", format!("n={n} must lie in {min}..={max}")));
    }
    Ok(n)
}

fn subset(n: usize, s: &str) -> Result<SubsetA, InputError> {
    SubsetA::parse(n, s).map_err(|e| invalid("subset", format!("{e}")))
}

fn simple_index(i: usize, rank: usize) -> Result<usize, InputError> {
    if i == 0 || i > rank {
        return Err(invalid("simple-index", format!("i={i} must lie in 1..={rank}")));
    }
    Ok(i)
}

fn cartan(s: &str) -> Result<Arc<CartanDatum>, InputError> {
    parse_cartan(s).map_err(|e| invalid("cartan-type", format!("{e}")))
}

/// `|W|` from the type and rank.
pub fn weyl_order(datum: &CartanDatum) -> u128 {
    let r = datum.rank() as u128;
    let fact = |k: u128| (1..=k).fold(1u128, |a, b| a.saturating_mul(b));
    let two = |k: u128| 2u128.saturating_pow(k as u32);
    match datum.kind() {
        CartanType::A => fact(r + 1),
        CartanType::B | CartanType::C => two(r).saturating_mul(fact(r)),
        CartanType::D => two(r - 1).saturating_mul(fact(r)),
        CartanType::E => match r {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        CartanType::F => 1152,
        CartanType::G => 12,
    }
}

fn within_budget(datum: &CartanDatum, budget: usize) -> Result<(), InputError> {
    let order = weyl_order(datum);
    if order > budget as u128 {
        return Err(invalid(
            "budget",
            format!("W({}) has {order} elements, more than the budget {budget}", datum.name()),
        ));
    }
    Ok(())
}

fn index_list(s: &str, rank: usize) -> Result<Vec<usize>, InputError> {
    let s = s.trim().trim_start_matches(['{', '(']).trim_end_matches(['}', ')']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let items: Vec<&str> = if s.contains(',') {
        s.split(',').collect()
    } else if rank < 10 {
        s.split("").filter(|p| !p.is_empty()).collect()
    } else {
        vec![s]
    };
    items
        .iter()
        .map(|p| {
            let k: usize = p.trim().parse().map_err(|_| invalid("index-list", format!("bad entry {p:?} in {s:?}")))?;
            simple_index(k, rank)
        })
        .collect()
}

/// An element given as `e`, a word, or (type A) a one-line permutation.
/// Returns the element and the word to use for it.
fn element(datum: &Arc<CartanDatum>, s: &str, reduced: bool) -> Result<(WeylElement, Vec<usize>), InputError> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok((datum.identity(), Vec::new()));
    }
    let rank = datum.rank();
    if datum.kind() == CartanType::A && !s.contains(',') && s.len() == rank + 1 {
        if let Ok(p) = s.parse::<Permutation>() {
            let w = permutation_to_weyl(datum, &p).map_err(|e| invalid("permutation", format!("{e}")))?;
            let word = w.reduced_word().to_vec();
            return Ok((w, word));
        }
    }
    let word = index_list(s, rank)?;
    let w = if reduced {
        datum.element_from_reduced_word(&word).map_err(|e| invalid("reduced-word", format!("{e}")))?
    } else {
        datum.element_from_word(&word).map_err(|e| invalid("word", format!("{e}")))?
    };
    Ok((w, word))
}

pub fn validate(command: &Command) -> Result<Request, InputError> {
    Ok(match command {
        Command::FixedPoints { h, n } => match (h, n) {
            (Some(h), None) => Request::FixedPoints(sized_hessenberg(h, MAX_FIXED_POINT_N, true)?),
            (None, Some(n)) => Request::PetersonPoints(size(*n, 1, MAX_FIXED_POINT_N)?),
            _ => return Err(invalid("arguments", "give exactly one of --h and --n")),
        },
        Command::Billey { cartan: c, v, w, pi } => {
            let datum = cartan(c)?;
            let (v, _) = element(&datum, v, false)?;
            let (w, word) = element(&datum, w, true)?;
            Request::Billey { datum, v, w, word, pi: *pi }
        }
        Command::Peterson(p) => match p {
            PetersonCommand::Class { n, a } => {
                let n = size(*n, 2, MAX_PETERSON_N)?;
                Request::PetersonClass { n, a: subset(n, a)? }
            }
            PetersonCommand::Monk { n, i, a } => {
                let n = size(*n, 2, MAX_PETERSON_N)?;
                Request::PetersonMonk { n, i: simple_index(*i, n - 1)?, a: subset(n, a)? }
            }
            PetersonCommand::Giambelli { n, a } => {
                let n = size(*n, 2, MAX_PETERSON_N)?;
                Request::PetersonGiambelli { n, a: subset(n, a)? }
            }
            PetersonCommand::General { cartan: c, k, i, budget } => {
                let datum = cartan(c)?;
                let mut k = index_list(k, datum.rank())?;
                k.sort_unstable();
                k.dedup();
                let i = i.map(|i| simple_index(i, datum.rank())).transpose()?;
                within_budget(&datum, budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET))?;
                Request::PetersonGeneral { datum, k, i, budget: *budget }
            }
        },
        Command::Fij { n, i, j, ordinary } => {
            let n = size(*n, 1, MAX_FIJ_N)?;
            let entry = match (i, j) {
                (None, None) => None,
                (Some(i), Some(j)) if 1 <= *j && j <= i && *i <= n => Some((*i, *j)),
                (Some(i), Some(j)) => {
                    return Err(invalid("fij-index", format!("need 1 <= j <= i <= n, got i={i} j={j} n={n}")))
                }
                _ => return Err(invalid("arguments", "give both --i and --j or neither")),
            };
            Request::Fij { n, entry, with_t: !ordinary }
        }
        Command::Ideal { h, ordinary } => Request::Ideal { h: sized_hessenberg(h, MAX_FIJ_N, true)?, with_t: !ordinary },
        Command::Hilbert { h, equivariant, max_degree, allow_large } => {
            let h = sized_hessenberg(h, 16, *allow_large)?;
            let needed = (1..=h.n()).map(|j| h.get(j) - j).sum::<usize>() as u32 + 1;
            if let Some(b) = max_degree {
                if !equivariant && *b < needed {
                    return Err(invalid("degree-bound", format!("--max-degree {b} is below {needed}, one past the top")));
                }
            }
            Request::Hilbert { h, with_t: *equivariant, max_degree: *max_degree }
        }
        Command::Verify { h, equivariant, allow_large } => {
            Request::Verify { h: sized_hessenberg(h, 15, *allow_large)?, equivariant: *equivariant }
        }
        Command::VerifyAll { n, equivariant, allow_large } => {
            let n = size(*n, 1, 15)?;
            check_large(n, *allow_large)?;
            Request::VerifyAll { n, equivariant: *equivariant }
        }
        Command::PetersonPresentation { n, cartan: c } => match (n, c) {
            (Some(n), None) => Request::PetersonPresentation(size(*n, 2, 8)?),
            (None, Some(c)) => {
                let datum = cartan(c)?;
                within_budget(&datum, DEFAULT_ENUMERATION_BUDGET)?;
                Request::GeneralPresentation(datum)
            }
            _ => return Err(invalid("arguments", "give exactly one of --n and --cartan")),
        },
        Command::Cfrac { c, m } => {
            let c = parse_rational(c).map_err(|e| invalid("rational", format!("{e}")))?;
            if *m > MAX_CFRAC_M {
                return Err(invalid("size", format!("m={m} exceeds {MAX_CFRAC_M}")));
            }
            Request::Cfrac { c, m: *m }
        }
    })
}

/// Worker count from `HESSCOH_THREADS`, if set.
pub fn threads(value: Option<&str>) -> Result<Option<usize>, InputError> {
    match value {
        None => Ok(None),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(invalid("HESSCOH_THREADS", format!("expected a positive integer, got {s:?}"))),
        },
    }
}
