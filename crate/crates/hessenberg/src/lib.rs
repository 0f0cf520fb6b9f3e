//! Hessenberg functions, subsets of simple reflections, and the torus
//! fixed points of regular nilpotent Hessenberg varieties.

use std::fmt;
use std::str::FromStr;

use permgroup::{Permutation, ReducedWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HessError {
    #[error("invalid Hessenberg function {values:?}: {constraint}")]
    Invalid { values: Vec<usize>, constraint: String },
    #[error("invalid box edit ({row},{col}) on {h}: {reason}")]
    BadBox { h: String, row: usize, col: usize, reason: String },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid subset: {0}")]
    BadSubset(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A nondecreasing `h: [n] → [n]` with `h(i) ≥ i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self, HessError> {
        let n = values.len();
        let fail = |c: String| Err(HessError::Invalid { values: values.clone(), constraint: c });
        if n == 0 {
            return fail("n >= 1".into());
        }
        for (k, &v) in values.iter().enumerate() {
            let i = k + 1;
            if v > n {
                return fail(format!("h({i}) <= n violated: h({i}) = {v} > {n}"));
            }
            if v < i {
                return fail(format!("h(i) >= i violated at i = {i}: h({i}) = {v}"));
            }
            if k > 0 && values[k - 1] > v {
                return fail(format!("nondecreasing violated at i = {i}: h({}) = {} > h({i}) = {v}", i - 1, values[k - 1]));
            }
        }
        Ok(HessenbergFunction { values })
    }

    /// `(2, 3, …, n, n)`.
    pub fn peterson(n: usize) -> Self {
        let values = (1..=n).map(|i| (i + 1).min(n)).collect();
        HessenbergFunction { values }
    }

    /// `(n, …, n)`.
    pub fn flag(n: usize) -> Self {
        HessenbergFunction { values: vec![n; n] }
    }

    /// `(1, 2, …, n)`.
    pub fn point(n: usize) -> Self {
        HessenbergFunction { values: (1..=n).collect() }
    }

    /// Every Hessenberg function on `[n]`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
            if i > n {
                out.push(HessenbergFunction { values: cur.clone() });
                return;
            }
            let lo = i.max(cur.last().copied().unwrap_or(0));
            for v in lo..=n {
                cur.push(v);
                rec(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)` for `1 ≤ i ≤ n`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `h(i) ≥ i + 1` for all `i < n`.
    pub fn is_indecomposable(&self) -> bool {
        (1..self.n()).all(|i| self.get(i) > i)
    }

    /// Pointwise `self ≤ other`.
    pub fn leq(&self, other: &Self) -> Result<bool, HessError> {
        if self.n() != other.n() {
            return Err(HessError::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }

    /// Adds the box in row `h(j)+1` of column `j`.
    pub fn add_box(&self, row: usize, col: usize) -> Result<Self, HessError> {
        let bad = |r: &str| HessError::BadBox { h: self.to_string(), row, col, reason: r.into() };
        if col == 0 || col > self.n() {
            return Err(bad("column out of range"));
        }
        if row != self.get(col) + 1 {
            return Err(bad("row must be h(col) + 1"));
        }
        if row > self.n() {
            return Err(bad("row exceeds n"));
        }
        if col < self.n() && self.get(col + 1) < row {
            return Err(bad("would break monotonicity: h(col) < h(col+1) required"));
        }
        let mut v = self.values.clone();
        v[col - 1] = row;
        HessenbergFunction::new(v)
    }

    /// Removes the corner box `(h(j), j)`.
    pub fn remove_box(&self, row: usize, col: usize) -> Result<Self, HessError> {
        let bad = |r: &str| HessError::BadBox { h: self.to_string(), row, col, reason: r.into() };
        if col == 0 || col > self.n() {
            return Err(bad("column out of range"));
        }
        if row != self.get(col) {
            return Err(bad("row must be h(col)"));
        }
        if row == col {
            return Err(bad("diagonal boxes cannot be removed"));
        }
        if col > 1 && self.get(col - 1) == row {
            return Err(bad("not a corner: h(col-1) < h(col) required"));
        }
        let mut v = self.values.clone();
        v[col - 1] = row - 1;
        HessenbergFunction::new(v)
    }

    /// Whether `w` is a fixed point: `w⁻¹(w(i) − 1) ≤ h(i)` for all `i`,
    /// with `w⁻¹(0) = 0`.
    pub fn contains(&self, w: &Permutation) -> bool {
        if w.n() != self.n() {
            return false;
        }
        let inv = w.inverse();
        (1..=self.n()).all(|i| {
            let v = w.apply(i);
            v == 1 || inv.apply(v - 1) <= self.get(i)
        })
    }

    /// Fixed points in lexicographic order of one-line notation.
    pub fn fixed_points(&self) -> Vec<Permutation> {
        Permutation::all(self.n()).into_iter().filter(|w| self.contains(w)).collect()
    }
}

/// The smallest Hessenberg function having `w` as a fixed point.
pub fn minimal_hessenberg(w: &Permutation) -> HessenbergFunction {
    let n = w.n();
    let inv = w.inverse();
    let mut values = Vec::with_capacity(n);
    let mut running = 0;
    for i in 1..=n {
        let need = if w.apply(i) == 1 { 0 } else { inv.apply(w.apply(i) - 1) };
        running = running.max(i).max(need);
        values.push(running);
    }
    HessenbergFunction { values }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h({self})")
    }
}

impl FromStr for HessenbergFunction {
    type Err = HessError;

    fn from_str(s: &str) -> Result<Self, HessError> {
        let values = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| HessError::Parse(format!("bad entry {p:?} in {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        HessenbergFunction::new(values)
    }
}

/// A subset `A ⊆ [n−1]` of simple reflections of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetA {
    n: usize,
    elems: Vec<usize>,
}

impl SubsetA {
    pub fn new(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self, HessError> {
        let mut elems: Vec<usize> = elems.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&i| i == 0 || i >= n) {
            return Err(HessError::BadSubset(format!("{bad} is not in [1, {}]", n.saturating_sub(1))));
        }
        Ok(SubsetA { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        SubsetA { n, elems: Vec::new() }
    }

    pub fn parse(n: usize, s: &str) -> Result<Self, HessError> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.trim().is_empty() {
            return Ok(Self::empty(n));
        }
        let elems = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| HessError::Parse(format!("bad entry {p:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, elems)
    }

    /// All subsets of `[n−1]`, by size and then lexicographically.
    pub fn all(n: usize) -> Vec<Self> {
        let m = n - 1;
        let mut out: Vec<SubsetA> = (0u32..(1 << m))
            .map(|mask| SubsetA { n, elems: (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect() })
            .collect();
        out.sort_by(|a, b| a.elems.len().cmp(&b.elems.len()).then_with(|| a.elems.cmp(&b.elems)));
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.elems.iter().all(|&i| other.contains(i))
    }

    pub fn with(&self, j: usize) -> Result<Self, HessError> {
        Self::new(self.n, self.elems.iter().copied().chain([j]))
    }

    /// Maximal consecutive strings `[a, b]`, in increasing order.
    pub fn strings(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &i in &self.elems {
            match out.last_mut() {
                Some((_, b)) if *b + 1 == i => *b = i,
                _ => out.push((i, i)),
            }
        }
        out
    }

    /// The maximal string containing `l`, if `l ∈ A`.
    pub fn string_of(&self, l: usize) -> Option<(usize, usize)> {
        self.strings().into_iter().find(|&(a, b)| a <= l && l <= b)
    }

    /// `H_A(l)`: the largest element of the string containing `l`.
    pub fn head(&self, l: usize) -> Option<usize> {
        self.string_of(l).map(|(_, b)| b)
    }

    /// `T_A(l)`: the smallest element of the string containing `l`.
    pub fn tail(&self, l: usize) -> Option<usize> {
        self.string_of(l).map(|(a, _)| a)
    }

    /// `v_A`: the product of `s_i`, `i ∈ A`, in increasing order.
    pub fn v(&self) -> Permutation {
        Permutation::from_simple_word(self.n, &self.elems).expect("indices in range")
    }

    /// `w_A`: reverses each block `{a, …, b+1}` for the strings `[a, b]`.
    pub fn w(&self) -> Permutation {
        let mut word: Vec<usize> = (1..=self.n).collect();
        for (a, b) in self.strings() {
            word[a - 1..=b].reverse();
        }
        Permutation::from_word(&word).expect("block reversal is a permutation")
    }

    /// The fixed reduced word of `w_A`: for each string `[a, b]`, the
    /// product over `s = 0..=b−a` of `s_a s_{a+1} ⋯ s_{b−s}`.
    pub fn w_reduced_word(&self) -> ReducedWord {
        let mut b_word = Vec::new();
        for (a, b) in self.strings() {
            for s in 0..=(b - a) {
                for i in 0..=(b - a - s) {
                    b_word.push(a + i);
                }
            }
        }
        ReducedWord::new(self.n, b_word).expect("the block word is reduced")
    }
}

impl PartialOrd for SubsetA {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetA {
    /// By size, then lexicographically.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then(self.elems.len().cmp(&other.elems.len()))
            .then_with(|| self.elems.cmp(&other.elems))
    }
}

impl fmt::Display for SubsetA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SubsetA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{self}")
    }
}

/// The pairs `(A, w_A)` for all `A ⊆ [n−1]`, by size then lex of `A`.
pub fn peterson_fixed_points(n: usize) -> Vec<(SubsetA, Permutation)> {
    SubsetA::all(n).into_iter().map(|a| {
        let w = a.w();
        (a, w)
    }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    fn perms(list: &[&str]) -> Vec<Permutation> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(h("2,3,3").fixed_points(), perms(&["123", "132", "213", "321"]));
        let pet4 = perms(&["1234", "1243", "1324", "1432", "2134", "2143", "3214", "4321"]);
        assert_eq!(h("2,3,4,4").fixed_points(), pet4);
        let extra = perms(&["2314", "3124", "3421", "4132"]);
        let mut expected = pet4.clone();
        expected.extend(extra);
        expected.sort();
        assert_eq!(h("3,3,4,4").fixed_points(), expected);
        assert_eq!(HessenbergFunction::flag(4).fixed_points().len(), 24);
    }

    #[test]
    fn validation_names_constraints() {
        let e = "2,1,3".parse::<HessenbergFunction>().unwrap_err().to_string();
        assert!(e.contains("h(i) >= i"), "{e}");
        let e = "3,2,3".parse::<HessenbergFunction>().unwrap_err().to_string();
        assert!(e.contains("nondecreasing"), "{e}");
        let e = "2,4,3".parse::<HessenbergFunction>().unwrap_err().to_string();
        assert!(e.contains("<= n"), "{e}");
        assert!("2,x".parse::<HessenbergFunction>().is_err());
    }

    #[test]
    fn subset_examples() {
        assert_eq!(SubsetA::new(3, [1, 2]).unwrap().w().to_string(), "321");
        assert!(SubsetA::empty(4).w().is_identity());
        assert_eq!(SubsetA::new(4, [1, 3]).unwrap().v().to_string(), "2143");
        assert!(SubsetA::empty(4).v().is_identity());
        assert_eq!(SubsetA::new(3, [1, 2]).unwrap().v().to_string(), "231");
        assert!(SubsetA::new(3, [3]).is_err());
        let a = SubsetA::new(7, [1, 2, 4, 5, 6]).unwrap();
        assert_eq!(a.strings(), vec![(1, 2), (4, 6)]);
        assert_eq!((a.head(5), a.tail(5)), (Some(6), Some(4)));
        assert_eq!(a.head(3), None);
    }

    #[test]
    fn peterson_point_list() {
        let mut ws: Vec<String> = peterson_fixed_points(4).into_iter().map(|(_, w)| w.to_string()).collect();
        ws.sort();
        assert_eq!(ws, vec!["1234", "1243", "1324", "1432", "2134", "2143", "3214", "4321"]);
    }

    #[test]
    fn box_examples() {
        assert!(h("2,3,4,4").leq(&h("3,3,4,4")).unwrap());
        assert_eq!(h("2,3,4,4").add_box(3, 1).unwrap(), h("3,3,4,4"));
        assert_eq!(h("2,4,4,4").remove_box(4, 2).unwrap(), h("2,3,4,4"));
        assert!(h("2,4,4,4").leq(&h("2,4,4,4")).unwrap());
        assert!(h("2,4,4,4").remove_box(4, 3).is_err());
        assert_eq!(h("2,3,4,4").add_box(4, 2).unwrap(), h("2,4,4,4"));
        assert!(h("2,3,4,4").add_box(4, 1).is_err());
        assert!(h("2,3,3,4").add_box(4, 2).is_err());
        assert!(h("1,2,3").remove_box(1, 1).is_err());
    }

    #[test]
    fn w_reduced_word_example() {
        let a = SubsetA::new(5, [1, 2, 4]).unwrap();
        assert_eq!(a.w_reduced_word().indices(), &[1, 2, 1, 4]);
        assert_eq!(a.w_reduced_word().product(), a.w());
    }
}
