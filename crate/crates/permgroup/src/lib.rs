//! Permutations in one-line notation and the Coxeter combinatorics of
//! `S_n`: lengths, reduced words, Bruhat order and reduced subwords.
//!
//! Products are compositions of functions, so `s1·s2` is `231`.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation of 1..{n}: {detail}")]
    NotBijection { n: usize, detail: String },
    #[error("simple reflection s{index} out of range for n={n}")]
    BadIndex { index: usize, n: usize },
    #[error("word is not reduced: {0:?}")]
    NotReduced(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A permutation `w` of `{1, …, n}` stored as `w(1) … w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u8).collect() }
    }

    pub fn from_word(word: &[usize]) -> Result<Self, PermError> {
        let n = word.len();
        if n == 0 || n > 255 {
            return Err(PermError::NotBijection { n, detail: "size must be 1..=255".into() });
        }
        let mut seen = vec![false; n + 1];
        for &x in word {
            if x == 0 || x > n {
                return Err(PermError::NotBijection { n, detail: format!("value {x} out of range") });
            }
            if seen[x] {
                return Err(PermError::NotBijection { n, detail: format!("value {x} repeated") });
            }
            seen[x] = true;
        }
        Ok(Permutation { word: word.iter().map(|&x| x as u8).collect() })
    }

    /// The simple transposition `s_k` swapping `k` and `k+1`.
    pub fn simple(n: usize, k: usize) -> Result<Self, PermError> {
        if k == 0 || k >= n {
            return Err(PermError::BadIndex { index: k, n });
        }
        let mut w = Self::identity(n);
        w.word.swap(k - 1, k);
        Ok(w)
    }

    /// `s_{b_1} ∘ ⋯ ∘ s_{b_ℓ}`. The word need not be reduced.
    pub fn from_simple_word(n: usize, b: &[usize]) -> Result<Self, PermError> {
        let mut w = Self::identity(n);
        for &k in b {
            if k == 0 || k >= n {
                return Err(PermError::BadIndex { index: k, n });
            }
            w.word.swap(k - 1, k);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation { word: other.word.iter().map(|&j| self.word[j as usize - 1]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { word: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `s_k` is a left descent iff `ℓ(s_k w) < ℓ(w)`, i.e. `k+1` appears
    /// before `k` in the one-line word.
    pub fn is_left_descent(&self, k: usize) -> bool {
        let inv = self.inverse();
        inv.apply(k) > inv.apply(k + 1)
    }

    /// `s_k` is a right descent iff `w(k) > w(k+1)`.
    pub fn is_right_descent(&self, k: usize) -> bool {
        self.word[k - 1] > self.word[k]
    }

    /// `s_k ∘ w`: swaps the values `k` and `k+1`.
    pub fn left_mul_simple(&self, k: usize) -> Self {
        let mut w = self.clone();
        for x in w.word.iter_mut() {
            if *x as usize == k {
                *x += 1;
            } else if *x as usize == k + 1 {
                *x -= 1;
            }
        }
        w
    }

    /// `w ∘ s_k`: swaps positions `k` and `k+1`.
    pub fn right_mul_simple(&self, k: usize) -> Self {
        let mut w = self.clone();
        w.word.swap(k - 1, k);
        w
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut b = Vec::with_capacity(self.length());
        let mut pos = w.inverse();
        'outer: loop {
            for k in 1..w.n() {
                if pos.apply(k) > pos.apply(k + 1) {
                    b.push(k);
                    w = w.left_mul_simple(k);
                    pos = pos.right_mul_simple(k);
                    continue 'outer;
                }
            }
            break;
        }
        ReducedWord { n: self.n(), indices: b }
    }

    /// Bruhat order by the lifting property along left descents of `w`.
    pub fn bruhat_leq(&self, w: &Self) -> bool {
        if self.n() != w.n() {
            return false;
        }
        let mut v = self.clone();
        let mut w = w.clone();
        loop {
            if v.is_identity() {
                return true;
            }
            if w.is_identity() {
                return false;
            }
            let k = (1..w.n()).find(|&k| w.is_left_descent(k)).expect("nonidentity has a descent");
            if v.is_left_descent(k) {
                v = v.left_mul_simple(k);
            }
            w = w.left_mul_simple(k);
        }
    }

    /// All of `S_n` in lexicographic order of one-line words.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: cur.iter().map(|&x| x as u8).collect() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Longest element `n ⋯ 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { word: (1..=n as u8).rev().collect() }
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n ≤ 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for x in &self.word {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| PermError::Parse(format!("bad entry {p:?}"))))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| PermError::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<_, _>>()?
        };
        Permutation::from_word(&word)
    }
}

/// A reduced word `(b_1, …, b_ℓ)` for an element of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    n: usize,
    indices: Vec<usize>,
}

impl ReducedWord {
    /// Validates that the word is reduced.
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self, PermError> {
        let w = Permutation::from_simple_word(n, &indices)?;
        if w.length() != indices.len() {
            return Err(PermError::NotReduced(indices));
        }
        Ok(ReducedWord { n, indices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn product(&self) -> Permutation {
        Permutation::from_simple_word(self.n, &self.indices).expect("validated word")
    }
}

/// All strictly increasing 1-based position tuples `(i_1 < ⋯ < i_k)` such
/// that `s_{b_{i_1}} ⋯ s_{b_{i_k}}` is a reduced word for `v`.
pub fn reduced_subword_occurrences(v: &Permutation, b: &ReducedWord) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if v.n() != b.n() {
        return out;
    }
    let target = v.length();
    let mut chosen = Vec::with_capacity(target);
    // `rest` is u⁻¹v where u is the product of the letters chosen so far;
    // a letter may be taken exactly when it is a left descent of `rest`.
    fn rec(
        pos: usize,
        rest: &Permutation,
        remaining: usize,
        b: &[usize],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(chosen.clone());
            return;
        }
        if b.len() - pos < remaining {
            return;
        }
        for i in pos..=b.len() - remaining {
            let k = b[i];
            if rest.is_left_descent(k) {
                chosen.push(i + 1);
                rec(i + 1, &rest.left_mul_simple(k), remaining - 1, b, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(0, v, target, b.indices(), &mut chosen, &mut out);
    out
}

/// Tableau criterion for Bruhat order: `v ≤ w` iff for all `i, k`,
/// `#{j ≤ i : v(j) ≥ k} ≤ #{j ≤ i : w(j) ≥ k}`.
pub fn bruhat_leq_tableau(v: &Permutation, w: &Permutation) -> bool {
    let n = v.n();
    if n != w.n() {
        return false;
    }
    for i in 1..=n {
        for k in 1..=n {
            let cv = (1..=i).filter(|&j| v.apply(j) >= k).count();
            let cw = (1..=i).filter(|&j| w.apply(j) >= k).count();
            if cv > cw {
                return false;
            }
        }
    }
    true
}
